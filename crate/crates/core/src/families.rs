//! The infinite families: Gottesman's `[2^m]`, the block family `[8·m]`,
//! the perfect lengths `f_m` and the lengths `8 f_m`.

use crate::block::{juxtapose, paste_chain, GeneratorBlock, StabilizerCode};
use crate::error::{Error, Result};
use crate::gf2::{companion_fixed_point_free, hamming_matrix, BinMatrix};
use crate::pauli::{Pauli, PauliString};

/// Generators of the perfect [[5,1,3]] code.
pub const FIVE_QUBIT_ROWS: [&str; 4] = ["XXXXI", "ZZZZI", "XYZIX", "YZXIZ"];

/// Fixed-point-free matrix used for the fixed [[32,25,3]] code.
pub const FIXED_A5: [&str; 5] = ["11000", "11010", "01000", "01101", "01100"];

/// Row mixing applied to the parity-check columns of the fixed [[32,25,3]]
/// code.
pub const FIXED_R5: [&str; 5] = ["10000", "00001", "01000", "00010", "11100"];

fn out_of_range(what: &'static str, value: u32, min: u64) -> Error {
    Error::OutOfRange {
        what,
        value: u64::from(value),
        min,
    }
}

/// X(n), Z(n), then one row per row of the check matrix `[H | A H]`.
pub fn check_matrix_block(h: &BinMatrix, a: &BinMatrix) -> Result<GeneratorBlock> {
    let ah = a.matmul(h)?;
    let n = h.cols();
    let mut rows = vec![PauliString::all_x(n), PauliString::all_z(n)];
    for i in 0..h.rows() {
        let mut row = PauliString::identity(n);
        for k in 0..n {
            row.set(k, Pauli::from_bits(h.get(i, k), ah.get(i, k)));
        }
        rows.push(row);
    }
    GeneratorBlock::new(rows)
}

/// The `[2^m]` generator rows for any `m >= 2`. For `m = 2` the rows do not
/// commute and only serve as a building block.
pub fn gottesman_block(m: u32) -> Result<GeneratorBlock> {
    if m < 2 {
        return Err(out_of_range("Gottesman order m", m, 2));
    }
    let m = m as usize;
    check_matrix_block(&hamming_matrix(m)?, &companion_fixed_point_free(m)?)
}

/// Gottesman's `[[2^m, 2^m - m - 2, 3]]`, `m >= 3`.
pub fn gottesman_code(m: u32) -> Result<StabilizerCode> {
    if m < 3 {
        return Err(out_of_range("Gottesman order m", m, 3));
    }
    StabilizerCode::new(gottesman_block(m)?, true, format!("[2^{m}]"))
}

/// The [[32,25,3]] code with check matrix `[R H' | A R H']`, where `H'`
/// lists each column's bits most significant first and `A`, `R` are
/// [`FIXED_A5`], [`FIXED_R5`]. Its punctured forms are the `[28,7]` blocks.
pub fn gottesman_32_fixed() -> Result<StabilizerCode> {
    let a = BinMatrix::from_strs(&FIXED_A5)?;
    let r = BinMatrix::from_strs(&FIXED_R5)?;
    let h = r.matmul(&hamming_matrix(5)?.reverse_rows())?;
    StabilizerCode::new(check_matrix_block(&h, &a)?, true, "[2^5]")
}

pub fn five_qubit_code() -> StabilizerCode {
    let block = GeneratorBlock::parse_rows(&FIVE_QUBIT_ROWS).expect("valid rows");
    StabilizerCode::new(block, true, "[5]").expect("the five-qubit code commutes")
}

/// Tail rows for `[8·m]` before lifting: fixed for `m = 3, 4`, otherwise the
/// parity rows of `[2^l]`, `l = ⌈log2 m⌉`, cut to the first `m` qubits.
pub fn eight_block_tails(m: usize) -> Result<Vec<PauliString>> {
    let parse = |rows: &[&str]| rows.iter().map(|r| r.parse()).collect::<Result<Vec<_>>>();
    match m {
        0..=2 => Err(out_of_range("[8*m] block count m", m as u32, 3)),
        3 => parse(&["IXY", "IYZ"]),
        4 => parse(&["IXYZ", "IYZX"]),
        _ => {
            let l = usize::BITS - (m - 1).leading_zeros();
            let keep: Vec<usize> = (0..m).collect();
            Ok(gottesman_block(l)?.gens()[2..]
                .iter()
                .map(|g| g.restrict(&keep))
                .collect())
        }
    }
}

/// `[[8m, 8m - ⌈log2 m⌉ - 5, 3]]`: `m` copies of `[2^3]` side by side plus
/// block-lifted tail rows.
pub fn eight_block_code(m: usize) -> Result<StabilizerCode> {
    eight_block_code_with_tails(m, &eight_block_tails(m)?)
}

/// `[8·m]` with caller-supplied tail rows of length `m`.
pub fn eight_block_code_with_tails(m: usize, tails: &[PauliString]) -> Result<StabilizerCode> {
    if m < 3 {
        return Err(out_of_range("[8*m] block count m", m as u32, 3));
    }
    let base = gottesman_block(3)?;
    let blocks = vec![&base; m];
    StabilizerCode::new(juxtapose(&blocks, tails)?, true, format!("[8*{m}]"))
}

fn gottesman_chain(orders: &[u32], tail: Option<StabilizerCode>) -> Result<StabilizerCode> {
    let mut blocks = orders
        .iter()
        .map(|&m| gottesman_block(m))
        .collect::<Result<Vec<_>>>()?;
    let mut names: Vec<String> = orders.iter().map(|m| format!("[2^{m}]")).collect();
    if let Some(t) = tail {
        names.push(t.provenance().to_string());
        blocks.push(t.into_block());
    }
    StabilizerCode::new(paste_chain(&blocks, false)?, true, names.join(">"))
}

/// The perfect `[[f_m, f_m - 2m, 3]]`:
/// `[2^(2m-2)] ▷ [2^(2m-4)] ▷ … ▷ [2^4] ▷ [5]`, and [[5,1,3]] itself for
/// `m = 2`.
pub fn perfect_code(m: u32) -> Result<StabilizerCode> {
    if m < 2 {
        return Err(out_of_range("perfect code index m", m, 2));
    }
    if m == 2 {
        return Ok(five_qubit_code());
    }
    let orders: Vec<u32> = (2..m).rev().map(|j| 2 * j).collect();
    gottesman_chain(&orders, Some(five_qubit_code()))
}

/// `[[8 f_m, 8 f_m - 2m - 3, 3]]`: `[2^(2m+1)] ▷ [2^(2m-1)] ▷ … ▷ [2^3]`.
pub fn eight_fm_code(m: u32) -> Result<StabilizerCode> {
    if m < 1 {
        return Err(out_of_range("8f_m index m", m, 1));
    }
    let orders: Vec<u32> = (1..=m).rev().map(|j| 2 * j + 1).collect();
    gottesman_chain(&orders, None)
}
