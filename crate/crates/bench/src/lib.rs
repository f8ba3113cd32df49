//! Benchmark fixtures.

use optd3::{build, StabilizerCode};

/// Lengths spanning the small table, both chain cases and both perfect
/// families.
pub const LENGTHS: [usize; 8] = [17, 36, 81, 128, 371, 680, 1365, 2728];

/// Codes for [`LENGTHS`], built once.
pub fn codes() -> Vec<StabilizerCode> {
    LENGTHS
        .iter()
        .map(|&n| build(n).expect("every benchmark length builds"))
        .collect()
}

#[cfg(test)]
mod tests {
    #[test]
    fn fixtures_build() {
        let codes = super::codes();
        assert_eq!(codes.len(), super::LENGTHS.len());
        assert!(codes.iter().zip(super::LENGTHS).all(|(c, n)| c.n() == n));
    }
}
