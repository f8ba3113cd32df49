//! Independent checks of claimed code properties.
//!
//! Only Pauli and GF(2) primitives are used here; nothing is taken on trust
//! from the constructors.
//!
//! Errors are enumerated in a fixed order, so the first counterexample is
//! stable: weight one by qubit then letter (X < Y < Z), weight two by qubit
//! pair then letter pair, weight three by qubit triple then letter triple.

use std::fmt;
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::block::StabilizerCode;
use crate::bounds::{classify_length, hamming_s};
use crate::gf2::{BinMatrix, RowSpace};
use crate::pauli::{words_for, Pauli, PauliString};

const LETTERS: [Pauli; 3] = Pauli::NONTRIVIAL;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DetectionMode {
    /// Every small error must anticommute with some generator.
    Pure,
    /// Small errors inside the stabilizer are also accepted.
    Degenerate,
}

impl DetectionMode {
    pub fn name(self) -> &'static str {
        match self {
            DetectionMode::Pure => "pure",
            DetectionMode::Degenerate => "degenerate",
        }
    }
}

/// Outcome of an error sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Detection {
    /// Number of errors the sweep covers.
    pub checked: u64,
    /// The first error, in enumeration order, that the check rejects.
    pub counterexample: Option<PauliString>,
}

impl Detection {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// All generator pairs `(i, j)`, `i < j`, that anticommute.
pub fn verify_commuting(gens: &[PauliString]) -> Vec<(usize, usize)> {
    let mut bad = Vec::new();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            if gens[i].anticommutes(&gens[j]) {
                bad.push((i, j));
            }
        }
    }
    bad
}

fn symplectic(gens: &[PauliString]) -> BinMatrix {
    let n = gens.first().map_or(0, PauliString::len);
    let rows: Vec<Vec<u64>> = gens.iter().map(PauliString::symplectic_bits).collect();
    BinMatrix::from_packed_rows(2 * n, &rows)
}

/// True iff the generators are linearly independent over GF(2).
pub fn verify_independent(gens: &[PauliString]) -> bool {
    symplectic(gens).rank() == gens.len()
}

/// Per-qubit syndromes: entry `3q + l` holds, packed, which generators
/// anticommute with letter `LETTERS[l]` on qubit `q`.
struct Syndromes {
    n: usize,
    stride: usize,
    data: Vec<u64>,
}

impl Syndromes {
    fn new(gens: &[PauliString]) -> Self {
        let n = gens.first().map_or(0, PauliString::len);
        let stride = words_for(gens.len()).max(1);
        let mut data = vec![0u64; 3 * n * stride];
        for (r, g) in gens.iter().enumerate() {
            let bit = 1u64 << (r % 64);
            for q in 0..n {
                let (x, z) = (g.x_bit(q), g.z_bit(q));
                // X anticommutes with z, Z with x, Y with x xor z
                for (l, hit) in [z, x ^ z, x].into_iter().enumerate() {
                    if hit {
                        data[(3 * q + l) * stride + r / 64] |= bit;
                    }
                }
            }
        }
        Syndromes { n, stride, data }
    }

    #[inline]
    fn get(&self, q: usize, l: usize) -> &[u64] {
        let i = (3 * q + l) * self.stride;
        &self.data[i..i + self.stride]
    }

    #[inline]
    fn is_zero(&self, q: usize, l: usize) -> bool {
        self.get(q, l).iter().all(|&w| w == 0)
    }
}

fn error_of(n: usize, parts: &[(usize, usize)]) -> PauliString {
    let mut e = PauliString::identity(n);
    for &(q, l) in parts {
        e.set(q, LETTERS[l]);
    }
    e
}

/// Whether an error with zero syndrome is still acceptable.
struct Harmless {
    space: Option<RowSpace>,
}

impl Harmless {
    fn new(gens: &[PauliString], mode: DetectionMode) -> Self {
        let space = match mode {
            DetectionMode::Pure => None,
            DetectionMode::Degenerate => Some(RowSpace::from_matrix(&symplectic(gens))),
        };
        Harmless { space }
    }

    fn accepts(&self, n: usize, parts: &[(usize, usize)]) -> bool {
        self.space
            .as_ref()
            .is_some_and(|s| s.contains(&error_of(n, parts).symplectic_bits()))
    }
}

fn small_error_count(n: usize) -> u64 {
    let n = n as u64;
    3 * n + 9 * (n * n.saturating_sub(1) / 2)
}

/// Walks every error of weight one and two in enumeration order and returns
/// the first one with zero syndrome that `harmless` does not excuse.
fn sweep_small(syn: &Syndromes, harmless: &Harmless) -> Option<PauliString> {
    let n = syn.n;
    for q in 0..n {
        for l in 0..3 {
            if syn.is_zero(q, l) && !harmless.accepts(n, &[(q, l)]) {
                return Some(error_of(n, &[(q, l)]));
            }
        }
    }
    // each first qubit is scanned independently; the smallest failing first
    // qubit wins, so the answer does not depend on scheduling
    (0..n)
        .into_par_iter()
        .find_map_first(|q1| {
            for q2 in q1 + 1..n {
                for a in 0..3 {
                    for b in 0..3 {
                        if syn.get(q1, a) == syn.get(q2, b)
                            && !harmless.accepts(n, &[(q1, a), (q2, b)])
                        {
                            return Some(error_of(n, &[(q1, a), (q2, b)]));
                        }
                    }
                }
            }
            None
        })
}

/// Checks that every error of weight one or two is detected (or, in
/// degenerate mode, lies in the stabilizer).
///
/// Single-qubit syndromes are sorted so a clean code is confirmed in
/// `O(n log n)`: a weight-two error goes unnoticed exactly when two letters
/// on different qubits share a syndrome. Only when some syndrome is zero or
/// shared does it fall back to the ordered sweep to name the first failure.
pub fn detects_all_small_errors(gens: &[PauliString], mode: DetectionMode) -> Detection {
    let syn = Syndromes::new(gens);
    let checked = small_error_count(syn.n);
    let mut order: Vec<(usize, usize)> = (0..syn.n).flat_map(|q| (0..3).map(move |l| (q, l))).collect();
    order.par_sort_unstable_by(|a, b| syn.get(a.0, a.1).cmp(syn.get(b.0, b.1)));
    let any_zero = (0..syn.n).any(|q| (0..3).any(|l| syn.is_zero(q, l)));
    if !any_zero && !shared_across_qubits(&syn, &order) {
        return Detection {
            checked,
            counterexample: None,
        };
    }
    Detection {
        checked,
        counterexample: sweep_small(&syn, &Harmless::new(gens, mode)),
    }
}

/// True iff some run of equal syndromes in the sorted order touches two
/// different qubits.
fn shared_across_qubits(syn: &Syndromes, order: &[(usize, usize)]) -> bool {
    let mut start = 0;
    while start < order.len() {
        let key = syn.get(order[start].0, order[start].1);
        let mut end = start + 1;
        while end < order.len() && syn.get(order[end].0, order[end].1) == key {
            end += 1;
        }
        let q = order[start].0;
        if order[start..end].iter().any(|&(p, _)| p != q) {
            return true;
        }
        start = end;
    }
    false
}

/// The same check as [`detects_all_small_errors`], enumerating all
/// `3n + 9·C(n,2)` errors one by one.
pub fn detects_all_small_errors_exhaustive(gens: &[PauliString], mode: DetectionMode) -> Detection {
    let syn = Syndromes::new(gens);
    Detection {
        checked: small_error_count(syn.n),
        counterexample: sweep_small(&syn, &Harmless::new(gens, mode)),
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Pure detection of every error of weight `1..=t`.
pub fn detects_all_errors_up_to(gens: &[PauliString], t: usize) -> Detection {
    let syn = Syndromes::new(gens);
    let n = syn.n;
    let checked = (1..=t.min(n) as u64)
        .map(|w| binomial(n as u64, w) * 3u64.pow(w as u32))
        .sum();
    let mut support = Vec::new();
    let counterexample =
        (1..=t.min(n)).find_map(|w| search_supports(&syn, w, 0, &mut support, &mut |_| true));
    Detection {
        checked,
        counterexample,
    }
}

/// Visits supports of size `w` extending `support` in lexicographic order
/// and, for each, the `3^w` letter assignments in lexicographic order;
/// returns the first zero-syndrome error that `accept` takes.
fn search_supports(
    syn: &Syndromes,
    w: usize,
    from: usize,
    support: &mut Vec<usize>,
    accept: &mut dyn FnMut(&PauliString) -> bool,
) -> Option<PauliString> {
    if support.len() == w {
        return zero_syndrome_letters(syn, support, accept);
    }
    for q in from..syn.n {
        support.push(q);
        let found = search_supports(syn, w, q + 1, support, accept);
        support.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

fn zero_syndrome_letters(
    syn: &Syndromes,
    support: &[usize],
    accept: &mut dyn FnMut(&PauliString) -> bool,
) -> Option<PauliString> {
    let w = support.len();
    let mut acc = vec![0u64; syn.stride];
    for code in 0..3usize.pow(w as u32) {
        acc.iter_mut().for_each(|a| *a = 0);
        let mut letters = Vec::with_capacity(w);
        let mut rest = code;
        for i in (0..w).rev() {
            letters.push((support[i], rest % 3));
            rest /= 3;
        }
        letters.reverse();
        for &(q, l) in &letters {
            xor_into(&mut acc, syn.get(q, l));
        }
        if acc.iter().all(|&x| x == 0) {
            let e = error_of(syn.n, &letters);
            if accept(&e) {
                return Some(e);
            }
        }
    }
    None
}

fn xor_into(acc: &mut [u64], v: &[u64]) {
    acc.iter_mut().zip(v).for_each(|(a, b)| *a ^= b);
}

/// The first weight-3 operator that commutes with every generator but is
/// not itself in the stabilizer, if any.
pub fn find_weight3_logical(gens: &[PauliString]) -> Option<PauliString> {
    let syn = Syndromes::new(gens);
    let space = RowSpace::from_matrix(&symplectic(gens));
    (0..syn.n).into_par_iter().find_map_first(|q1| {
        let mut support = vec![q1];
        search_supports(&syn, 3, q1 + 1, &mut support, &mut |e| {
            !space.contains(&e.symplectic_bits())
        })
    })
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Also search for a weight-3 logical operator.
    pub exact_distance: bool,
    /// Enumerate every small error instead of comparing syndromes.
    pub exhaustive: bool,
}

/// Everything [`verify_code`] found out about a code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub n: usize,
    pub s: usize,
    pub pure: bool,
    pub provenance: String,
    pub noncommuting: Vec<(usize, usize)>,
    pub rank: usize,
    pub mode: DetectionMode,
    pub detection: Detection,
    pub hamming_s: usize,
    /// Best known generator count at this length, when `n >= 5`.
    pub expected_s: Option<usize>,
    /// `Some` when the weight-3 search ran; the inner value is its witness.
    pub weight3_logical: Option<Option<PauliString>>,
}

impl VerificationReport {
    pub fn k(&self) -> usize {
        self.n.saturating_sub(self.rank)
    }

    pub fn independent(&self) -> bool {
        self.rank == self.s
    }

    /// Commuting, independent and detecting every small error.
    pub fn is_valid(&self) -> bool {
        self.noncommuting.is_empty() && self.independent() && self.detection.passed()
    }

    /// Valid and using exactly the best known number of generators.
    pub fn is_green(&self) -> bool {
        self.is_valid() && self.expected_s == Some(self.s)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let yes = |b: bool| if b { "ok" } else { "FAILED" };
        let _ = writeln!(out, "code [[{},{},3]] via {}", self.n, self.k(), self.provenance);
        let _ = writeln!(out, "commuting: {}", yes(self.noncommuting.is_empty()));
        for (i, j) in &self.noncommuting {
            let _ = writeln!(out, "  generators {i} and {j} anticommute");
        }
        let _ = writeln!(out, "independent: {} (rank {} of {})", yes(self.independent()), self.rank, self.s);
        let _ = writeln!(
            out,
            "detection ({}, {} errors): {}",
            self.mode.name(),
            self.detection.checked,
            yes(self.detection.passed())
        );
        if let Some(e) = &self.detection.counterexample {
            let _ = writeln!(out, "  undetected error {e}");
        }
        let expected = self.expected_s.map_or("-".to_string(), |s| s.to_string());
        let _ = writeln!(
            out,
            "generators: s={} s_H={} s_best={} {}",
            self.s,
            self.hamming_s,
            expected,
            yes(self.expected_s == Some(self.s))
        );
        if let Some(w) = &self.weight3_logical {
            match w {
                Some(e) => {
                    let _ = writeln!(out, "distance: 3 (weight-3 logical {e})");
                }
                None => {
                    let _ = writeln!(out, "distance: at least 4");
                }
            }
        }
        let _ = writeln!(out, "{}", if self.is_green() { "GREEN" } else { "NOT GREEN" });
        out
    }

    pub fn to_key_values(&self) -> String {
        let mut out = String::new();
        let mut kv = |k: &str, v: String| {
            let _ = writeln!(out, "{k}={v}");
        };
        kv("n", self.n.to_string());
        kv("k", self.k().to_string());
        kv("s", self.s.to_string());
        kv("pure", self.pure.to_string());
        kv("provenance", self.provenance.clone());
        kv("commuting", self.noncommuting.is_empty().to_string());
        kv("independent", self.independent().to_string());
        kv("rank", self.rank.to_string());
        kv("detection_mode", self.mode.name().to_string());
        kv("errors_checked", self.detection.checked.to_string());
        kv("detects_small_errors", self.detection.passed().to_string());
        kv(
            "counterexample",
            self.detection
                .counterexample
                .as_ref()
                .map_or("none".to_string(), ToString::to_string),
        );
        kv("s_hamming", self.hamming_s.to_string());
        kv("s_best", self.expected_s.map_or("none".to_string(), |s| s.to_string()));
        if let Some(w) = &self.weight3_logical {
            kv("weight3_logical", w.as_ref().map_or("none".to_string(), ToString::to_string));
        }
        kv("valid", self.is_valid().to_string());
        kv("green", self.is_green().to_string());
        out
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

pub fn verify_code(code: &StabilizerCode) -> VerificationReport {
    verify_code_with(code, VerifyOptions::default())
}

pub fn verify_code_with(code: &StabilizerCode, options: VerifyOptions) -> VerificationReport {
    verify_generators(code.gens(), code.pure(), code.provenance(), options)
}

/// Verifies raw generators, which need not commute or be independent.
pub fn verify_generators(
    gens: &[PauliString],
    pure: bool,
    provenance: &str,
    options: VerifyOptions,
) -> VerificationReport {
    let mode = if pure {
        DetectionMode::Pure
    } else {
        DetectionMode::Degenerate
    };
    let detection = if options.exhaustive {
        detects_all_small_errors_exhaustive(gens, mode)
    } else {
        detects_all_small_errors(gens, mode)
    };
    let n = gens.first().map_or(0, PauliString::len);
    VerificationReport {
        n,
        s: gens.len(),
        pure,
        provenance: provenance.to_string(),
        noncommuting: verify_commuting(gens),
        rank: symplectic(gens).rank(),
        mode,
        detection,
        hamming_s: hamming_s(n),
        expected_s: classify_length(n).ok().map(|c| c.s_best),
        weight3_logical: options.exact_distance.then(|| find_weight3_logical(gens)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::block::GeneratorBlock;
    use proptest::prelude::*;

    fn rows(r: &[&str]) -> Vec<PauliString> {
        r.iter().map(|x| x.parse().unwrap()).collect()
    }

    const EQ3: [&str; 4] = ["XXXXI", "ZZZZI", "XYZIX", "YZXIZ"];
    const EQ4: [&str; 5] = ["XXXXXXXX", "ZZZZZZZZ", "IZIZYXYX", "IZXYIZXY", "IYZXZXIY"];
    const SIX: [&str; 5] = ["XXXXII", "ZZZZII", "XYZIXI", "YZXIZI", "IIIIIZ"];

    /// Direct oracle: builds each error and tests it against every row.
    fn first_undetected(gens: &[PauliString], mode: DetectionMode) -> Option<PauliString> {
        let n = gens[0].len();
        let space = RowSpace::from_matrix(&symplectic(gens));
        let bad = |e: &PauliString| {
            gens.iter().all(|g| g.commutes(e))
                && !(mode == DetectionMode::Degenerate && space.contains(&e.symplectic_bits()))
        };
        for q in 0..n {
            for l in LETTERS {
                let e = PauliString::single(n, q, l);
                if bad(&e) {
                    return Some(e);
                }
            }
        }
        for q1 in 0..n {
            for q2 in q1 + 1..n {
                for a in LETTERS {
                    for b in LETTERS {
                        let mut e = PauliString::single(n, q1, a);
                        e.set(q2, b);
                        if bad(&e) {
                            return Some(e);
                        }
                    }
                }
            }
        }
        None
    }

    #[test]
    fn commuting_examples() {
        assert!(verify_commuting(&rows(&EQ3)).is_empty());
        assert_eq!(verify_commuting(&rows(&["X", "Z"])), vec![(0, 1)]);
    }

    #[test]
    fn independence_examples() {
        assert!(verify_independent(&rows(&EQ3)));
        assert!(!verify_independent(&rows(&["XXXXI", "ZZZZI", "XXXXI"])));
    }

    #[test]
    fn five_qubit_code_detects_everything() {
        let d = detects_all_small_errors(&rows(&EQ3), DetectionMode::Pure);
        assert_eq!(d.checked, 105);
        assert!(d.passed());
        assert!(detects_all_small_errors_exhaustive(&rows(&EQ3), DetectionMode::Pure).passed());
        assert!(detects_all_small_errors(&rows(&EQ4), DetectionMode::Pure).passed());
    }

    #[test]
    fn six_qubit_code_needs_degenerate_mode() {
        let gens = rows(&SIX);
        let pure = detects_all_small_errors(&gens, DetectionMode::Pure);
        assert_eq!(pure.counterexample.unwrap().to_string(), "IIIIIZ");
        assert!(detects_all_small_errors(&gens, DetectionMode::Degenerate).passed());
        assert!(detects_all_small_errors_exhaustive(&gens, DetectionMode::Degenerate).passed());
    }

    #[test]
    fn counterexample_follows_enumeration_order() {
        // the fifth qubit is only touched by X-type letters in rows 2 and 3
        let gens = rows(&["XXXXI", "ZZZZI", "XYZIX", "YZXIX"]);
        let d = detects_all_small_errors(&gens, DetectionMode::Pure);
        assert_eq!(d.counterexample, first_undetected(&gens, DetectionMode::Pure));
        assert_eq!(d.counterexample.unwrap().to_string(), "IIIIX");
    }

    #[test]
    fn weight3_logicals() {
        assert!(find_weight3_logical(&rows(&EQ3)).is_some());
        assert!(find_weight3_logical(&rows(&EQ4)).is_some());
        let e = find_weight3_logical(&rows(&EQ3)).unwrap();
        assert_eq!(e.weight(), 3);
        assert!(rows(&EQ3).iter().all(|g| g.commutes(&e)));
    }

    #[test]
    fn weight3_search_is_ordered() {
        let gens = rows(&EQ3);
        let space = RowSpace::from_matrix(&symplectic(&gens));
        let n = 5;
        let mut expected = None;
        'outer: for q1 in 0..n {
            for q2 in q1 + 1..n {
                for q3 in q2 + 1..n {
                    for a in LETTERS {
                        for b in LETTERS {
                            for c in LETTERS {
                                let mut e = PauliString::single(n, q1, a);
                                e.set(q2, b);
                                e.set(q3, c);
                                if gens.iter().all(|g| g.commutes(&e))
                                    && !space.contains(&e.symplectic_bits())
                                {
                                    expected = Some(e);
                                    break 'outer;
                                }
                            }
                        }
                    }
                }
            }
        }
        assert_eq!(find_weight3_logical(&gens), expected);
    }

    #[test]
    fn distance_four_detection() {
        let d = detects_all_errors_up_to(&rows(&EQ3), 3);
        assert!(!d.passed());
        assert_eq!(d.counterexample.unwrap().weight(), 3);
        assert!(detects_all_errors_up_to(&rows(&EQ3), 2).passed());
    }

    #[test]
    fn report_for_five_qubit_code() {
        let code = StabilizerCode::new(GeneratorBlock::parse_rows(&EQ3).unwrap(), true, "[5]").unwrap();
        let r = verify_code_with(
            &code,
            VerifyOptions {
                exact_distance: true,
                exhaustive: true,
            },
        );
        assert!(r.is_green());
        assert_eq!((r.k(), r.hamming_s, r.expected_s), (1, 4, Some(4)));
        assert!(r.to_key_values().contains("green=true\n"));
        assert!(r.to_text().contains("GREEN"));
        assert!(matches!(r.weight3_logical, Some(Some(_))));
    }

    fn arb_gens() -> impl Strategy<Value = Vec<PauliString>> {
        (2usize..8, 1usize..6).prop_flat_map(|(n, s)| {
            proptest::collection::vec(proptest::collection::vec(0u8..4, n), s).prop_map(|rs| {
                rs.into_iter()
                    .map(|r| {
                        r.into_iter()
                            .map(|b| ['I', 'X', 'Y', 'Z'][b as usize])
                            .collect::<String>()
                            .parse()
                            .unwrap()
                    })
                    .collect()
            })
        })
    }

    proptest! {
        #[test]
        fn fast_and_exhaustive_agree_with_direct_oracle(gens in arb_gens()) {
            for mode in [DetectionMode::Pure, DetectionMode::Degenerate] {
                let expected = first_undetected(&gens, mode);
                prop_assert_eq!(&detects_all_small_errors(&gens, mode).counterexample, &expected);
                prop_assert_eq!(&detects_all_small_errors_exhaustive(&gens, mode).counterexample, &expected);
            }
        }

        #[test]
        fn up_to_two_matches_small_sweep(gens in arb_gens()) {
            let a = detects_all_errors_up_to(&gens, 2);
            let b = detects_all_small_errors_exhaustive(&gens, DetectionMode::Pure);
            prop_assert_eq!(a.counterexample, b.counterexample);
            prop_assert_eq!(a.checked, b.checked);
        }
    }
}
