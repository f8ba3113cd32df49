//! Named 2-error-detecting blocks and the optimal codes of length 5 to 37.

use crate::block::{juxtapose, paste_chain, puncture, GeneratorBlock, StabilizerCode};
use crate::error::{Error, Result};
use crate::families::{eight_block_code, five_qubit_code, gottesman_32_fixed, gottesman_block};
use crate::format::parse_rows;
use crate::pauli::PauliString;
use crate::verify::{detects_all_small_errors, DetectionMode};

pub const FIVE_QUBIT_TEXT: &str = include_str!("../fixtures/five_qubit.txt");
pub const EIGHT_QUBIT_TEXT: &str = include_str!("../fixtures/eight_qubit.txt");
pub const SEVENTEEN_TEXT: &str = include_str!("../fixtures/seventeen.txt");
pub const THIRTY_SIX_TEXT: &str = include_str!("../fixtures/thirty_six.txt");
pub const DEGENERATE_SIX_TEXT: &str = include_str!("../fixtures/degenerate_six.txt");
pub const SIX_ZERO_FOUR_TEXT: &str = include_str!("../fixtures/six_zero_four.txt");
pub const PARTITION_A_TEXT: &str = include_str!("../fixtures/partition_a.txt");
pub const PARTITION_B_TEXT: &str = include_str!("../fixtures/partition_b.txt");
pub const PARTITION_C_TEXT: &str = include_str!("../fixtures/partition_c.txt");
pub const EIGHT_BLOCK_6_TAILS_TEXT: &str = include_str!("../fixtures/eight_block_6_tails.txt");

const BLOCK_TEXTS: [(&str, &str); 7] = [
    ("[1]_1", include_str!("../fixtures/block_1_1.txt")),
    ("[2,4]_2", include_str!("../fixtures/block_2_4_2.txt")),
    ("[3,4]_2", include_str!("../fixtures/block_3_4_2.txt")),
    ("[4,4]_1", include_str!("../fixtures/block_4_4_1.txt")),
    ("[3,5]_2", include_str!("../fixtures/block_3_5_2.txt")),
    ("[5,5]_2", include_str!("../fixtures/block_5_5_2.txt")),
    ("[7,5]_1", include_str!("../fixtures/block_7_5_1.txt")),
];

/// Blocks `[n,s]_e` with their defect in the subscript.
pub const BLOCK_NAMES: [&str; 18] = [
    "[1]_1", "[2,4]_2", "[3,4]_2", "[4,4]_1", "[3,5]_2", "[5,5]_2", "[7,5]_1", "[7,5]_2",
    "[6,6]_1", "[6,6]_2", "[10,6]_1", "[10,6]_2", "[18,7]_1", "[18,7]_2", "[20,7]_2",
    "[26,7]_2", "[28,7]_1", "[28,7]_2",
];

/// Whole codes that also appear inside chains.
pub const CODE_NAMES: [&str; 8] =
    ["[5]", "[10]", "[17]", "[6,0,4]", "[2^3]", "[2^4]", "[2^5]", "[8*3]"];

/// Tail rows shared by the assembled length-7 blocks.
pub const ASSEMBLY_TAILS: [&str; 2] = ["IXYZ", "IYZX"];

/// Puncture sets on the fixed [[32,25,3]] code.
pub const PUNCTURE_28_7_1: [usize; 4] = [0, 1, 2, 3];
pub const PUNCTURE_28_7_2: [usize; 4] = [5, 10, 19, 28];

/// The defect written in a block name, `[n,s]_e -> e`.
pub fn subscript(name: &str) -> Option<usize> {
    name.rsplit_once("]_").and_then(|(_, e)| e.parse().ok())
}

fn columns(block: &GeneratorBlock, range: std::ops::Range<usize>) -> Result<GeneratorBlock> {
    let keep: Vec<usize> = range.collect();
    GeneratorBlock::new(block.gens().iter().map(|g| g.restrict(&keep)).collect())
}

fn assemble(parts: &[&str]) -> Result<GeneratorBlock> {
    let blocks = parts.iter().map(|p| named_block(p)).collect::<Result<Vec<_>>>()?;
    let refs: Vec<&GeneratorBlock> = blocks.iter().collect();
    let tails = ASSEMBLY_TAILS
        .iter()
        .map(|t| t.parse::<PauliString>())
        .collect::<Result<Vec<_>>>()?;
    juxtapose(&refs, &tails)
}

/// Looks up a block or code by name.
pub fn named_block(name: &str) -> Result<GeneratorBlock> {
    if let Some((_, text)) = BLOCK_TEXTS.iter().find(|(n, _)| *n == name) {
        return parse_rows(text);
    }
    match name {
        "[7,5]_2" => puncture(&gottesman_block(3)?, &[0]),
        "[6,6]_1" => columns(&parse_rows(PARTITION_B_TEXT)?, 10..16),
        "[6,6]_2" => columns(&parse_rows(PARTITION_C_TEXT)?, 10..16),
        "[10,6]_1" => columns(&parse_rows(PARTITION_B_TEXT)?, 0..10),
        "[10,6]_2" => columns(&parse_rows(PARTITION_C_TEXT)?, 0..10),
        "[18,7]_1" => assemble(&["[5,5]_2", "[5,5]_2", "[5,5]_2", "[3,5]_2"]),
        "[18,7]_2" => assemble(&["[7,5]_1", "[5,5]_2", "[3,5]_2", "[3,5]_2"]),
        "[20,7]_2" => assemble(&["[7,5]_2", "[5,5]_2", "[5,5]_2", "[3,5]_2"]),
        "[26,7]_2" => assemble(&["[7,5]_2", "[7,5]_2", "[7,5]_2", "[5,5]_2"]),
        "[28,7]_1" => puncture(gottesman_32_fixed()?.block(), &PUNCTURE_28_7_1),
        "[28,7]_2" => puncture(gottesman_32_fixed()?.block(), &PUNCTURE_28_7_2),
        "[5]" => Ok(five_qubit_code().into_block()),
        "[10]" => columns(&parse_rows(PARTITION_A_TEXT)?, 0..10),
        "[17]" => parse_rows(SEVENTEEN_TEXT),
        "[6,0,4]" => parse_rows(SIX_ZERO_FOUR_TEXT),
        "[2^3]" => gottesman_block(3),
        "[2^4]" => gottesman_block(4),
        "[2^5]" => gottesman_block(5),
        "[8*3]" => Ok(eight_block_code(3)?.into_block()),
        _ => Err(Error::UnknownBlock(name.to_string())),
    }
}

/// The paste chain behind each optimal code of length 5 to 37 except the
/// degenerate length 6.
pub fn small_chain(n: usize) -> Option<&'static [&'static str]> {
    let chain: &'static [&'static str] = match n {
        5 => &["[4,4]_1", "[1]_1"],
        7 => &["[6,6]_1", "[1]_1"],
        8 => &["[2^3]"],
        9 => &["[6,6]_2", "[3,4]_2"],
        10 => &["[10]"],
        11 => &["[10,6]_1", "[1]_1"],
        12 => &["[10,6]_2", "[2,4]_2"],
        13 => &["[10,6]_2", "[3,4]_2"],
        14 => &["[10,6]_1", "[4,4]_1"],
        15 => &["[10]", "[5]"],
        16 => &["[2^4]"],
        17 => &["[17]"],
        18 => &["[10]", "[2^3]"],
        19 => &["[18,7]_1", "[1]_1"],
        20 => &["[18,7]_2", "[2,4]_2"],
        21 => &["[2^4]", "[5]"],
        22 => &["[18,7]_1", "[4,4]_1"],
        23 => &["[18,7]_2", "[5,5]_2"],
        24 => &["[8*3]"],
        25 => &["[18,7]_1", "[7,5]_1"],
        26 => &["[18,7]_2", "[7,5]_1", "[1]_1"],
        27 => &["[18,7]_1", "[2^3]", "[1]_1"],
        28 => &["[20,7]_2", "[7,5]_1", "[1]_1"],
        29 => &["[8*3]", "[5]"],
        30 => &["[28,7]_2", "[2,4]_2"],
        31 => &["[28,7]_2", "[3,4]_2"],
        32 => &["[2^5]"],
        33 => &["[28,7]_2", "[5,5]_2"],
        34 => &["[26,7]_2", "[7,5]_1", "[1]_1"],
        35 => &["[28,7]_1", "[7,5]_1"],
        36 => &["[28,7]_2", "[7,5]_1", "[1]_1"],
        37 => &["[2^5]", "[5]"],
        _ => return None,
    };
    Some(chain)
}

/// The degenerate [[6,1,3]] code.
pub fn degenerate_six_code() -> Result<StabilizerCode> {
    StabilizerCode::new(parse_rows(DEGENERATE_SIX_TEXT)?, false, "[5]+[1]")
}

/// The [[36,29,3]] code: the 40-column fixture without its first 4 columns.
pub fn thirty_six_code() -> Result<StabilizerCode> {
    let wide = parse_rows(THIRTY_SIX_TEXT)?;
    StabilizerCode::new(puncture(&wide, &[0, 1, 2, 3])?, true, "[36]")
}

pub fn six_zero_four_code() -> Result<StabilizerCode> {
    StabilizerCode::new(parse_rows(SIX_ZERO_FOUR_TEXT)?, true, "[6,0,4]")
}

/// The optimal code of length `n` for `5 <= n <= 37`, checked to detect
/// every error of weight at most 2.
pub fn small_code(n: usize) -> Result<StabilizerCode> {
    let code = match n {
        6 => degenerate_six_code()?,
        _ => {
            let chain = small_chain(n).ok_or(Error::OutOfRange {
                what: "small code length n",
                value: n as u64,
                min: 5,
            })?;
            let blocks = chain.iter().map(|b| named_block(b)).collect::<Result<Vec<_>>>()?;
            StabilizerCode::new(paste_chain(&blocks, true)?, true, chain.join(">"))?
        }
    };
    let mode = if code.pure() {
        DetectionMode::Pure
    } else {
        DetectionMode::Degenerate
    };
    let detection = detects_all_small_errors(code.gens(), mode);
    if let Some(e) = detection.counterexample {
        return Err(Error::Verification(format!(
            "length {n} via {} misses {e}",
            code.provenance()
        )));
    }
    Ok(code)
}
