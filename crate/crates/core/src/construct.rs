//! The optimal (or best known) distance-3 code for every length `n >= 5`.

use std::fmt;

use rayon::prelude::*;

use crate::block::{paste_chain, GeneratorBlock, StabilizerCode};
use crate::bounds::{classify_length, f_seq};
use crate::catalog::small_code;
use crate::error::{Error, Result};
use crate::families::{eight_block_code, eight_fm_code, gottesman_block, perfect_code};
use crate::verify::{detects_all_small_errors, DetectionMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlanCase {
    /// `8f_m - 2 <= n <= f_{m+2} - 4`, ending in a code of length 10 to 17.
    A,
    /// `f_{m+2} - 3 <= n <= 8f_{m+1} - 3`, ending in a code of length 30 to 37.
    B,
}

impl PlanCase {
    pub fn name(self) -> &'static str {
        match self {
            PlanCase::A => "a",
            PlanCase::B => "b",
        }
    }
}

/// One factor of a paste chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Component {
    /// `[8·j]`
    EightBlock(usize),
    /// `[2^k]`
    Gottesman(u32),
    /// The optimal code of a length below 38.
    Small(usize),
}

impl Component {
    #[allow(clippy::len_without_is_empty)]
    pub fn len(self) -> usize {
        match self {
            Component::EightBlock(j) => 8 * j,
            Component::Gottesman(k) => 1 << k,
            Component::Small(n) => n,
        }
    }

    pub fn build(self) -> Result<GeneratorBlock> {
        match self {
            Component::EightBlock(j) => Ok(eight_block_code(j)?.into_block()),
            Component::Gottesman(k) => gottesman_block(k),
            Component::Small(n) => Ok(small_code(n)?.into_block()),
        }
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Component::EightBlock(j) => write!(f, "[8*{j}]"),
            Component::Gottesman(k) => write!(f, "[2^{k}]"),
            Component::Small(n) => write!(f, "[{n}]"),
        }
    }
}

/// The chain `[8·j] ▷ [2^k] ▷ … ▷ [r]` for a length `n >= 38`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem2Plan {
    pub n: usize,
    pub case: PlanCase,
    pub m: u32,
    pub alpha: usize,
    pub beta: usize,
    pub chain: Vec<Component>,
}

impl Theorem2Plan {
    /// Generator count of the pasted code: `2m + 4` in case a, `2m + 5` in b.
    pub fn s(&self) -> usize {
        match self.case {
            PlanCase::A => 2 * self.m as usize + 4,
            PlanCase::B => 2 * self.m as usize + 5,
        }
    }

    pub fn provenance(&self) -> String {
        self.chain
            .iter()
            .map(Component::to_string)
            .collect::<Vec<_>>()
            .join(">")
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.chain.iter().map(|c| c.len()).collect()
    }
}

pub fn theorem2_plan(n: usize) -> Result<Theorem2Plan> {
    if n < 38 {
        return Err(Error::OutOfRange {
            what: "chain construction length n",
            value: n as u64,
            min: 38,
        });
    }
    let n64 = n as u64;
    let mut m = 2u32;
    loop {
        if m > 29 {
            return Err(Error::OutOfRange {
                what: "chain construction length n",
                value: n64,
                min: 38,
            });
        }
        let (case, top, lead_exp, step_exps, last) = if n64 + 4 <= f_seq(m + 2) {
            let top = (f_seq(m + 2) - 4) as usize;
            (PlanCase::A, top, 2 * m - 1, (3..=m).rev().map(|j| 2 * j).collect::<Vec<_>>(), 17)
        } else if n64 + 3 <= 8 * f_seq(m + 1) {
            let top = (8 * f_seq(m + 1) - 3) as usize;
            let exps = (3..=m).rev().map(|j| 2 * j + 1).collect::<Vec<_>>();
            (PlanCase::B, top, 2 * m, exps, 37)
        } else {
            m += 1;
            continue;
        };
        let (alpha, beta) = ((top - n) / 8, (top - n) % 8);
        let lead = (1usize << lead_exp) - alpha;
        assert!(lead >= 3, "leading [8*{lead}] for n = {n}");
        let mut chain = Vec::with_capacity(step_exps.len() + 2);
        chain.push(if alpha == 0 {
            Component::Gottesman(lead_exp + 3)
        } else {
            Component::EightBlock(lead)
        });
        chain.extend(step_exps.into_iter().map(Component::Gottesman));
        chain.push(Component::Small(last - beta));
        return Ok(Theorem2Plan {
            n,
            case,
            m,
            alpha,
            beta,
            chain,
        });
    }
}

/// The code a plan describes, folded right to left with plain pasting.
pub fn plan_code(plan: &Theorem2Plan) -> Result<StabilizerCode> {
    let blocks = plan
        .chain
        .iter()
        .map(|c| c.build())
        .collect::<Result<Vec<GeneratorBlock>>>()?;
    StabilizerCode::new(paste_chain(&blocks, false)?, true, plan.provenance())
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BuildOptions {
    /// Use the chain construction at perfect lengths too.
    pub prefer_theorem2: bool,
}

fn perfect_index(n: usize) -> Option<(bool, u32)> {
    (2u32..=29).find_map(|m| {
        if n as u64 == 8 * f_seq(m) {
            Some((true, m))
        } else if m >= 4 && n as u64 == f_seq(m) {
            Some((false, m))
        } else {
            None
        }
    })
}

/// Builds and verifies the best code of length `n`.
pub fn build(n: usize) -> Result<StabilizerCode> {
    build_with(n, BuildOptions::default())
}

pub fn build_with(n: usize, options: BuildOptions) -> Result<StabilizerCode> {
    let class = classify_length(n)?;
    let mut expected_s = class.s_best;
    let code = if n <= 37 {
        small_code(n)?
    } else {
        match perfect_index(n) {
            Some((true, m)) if !options.prefer_theorem2 => eight_fm_code(m)?,
            Some((false, m)) if !options.prefer_theorem2 => perfect_code(m)?,
            _ => {
                let plan = theorem2_plan(n)?;
                if options.prefer_theorem2 {
                    expected_s = plan.s();
                }
                plan_code(&plan)?
            }
        }
    };
    let mode = if code.pure() {
        DetectionMode::Pure
    } else {
        DetectionMode::Degenerate
    };
    if let Some(e) = detects_all_small_errors(code.gens(), mode).counterexample {
        return Err(Error::Verification(format!(
            "length {n} via {} misses {e}",
            code.provenance()
        )));
    }
    if code.n() != n || code.s() != expected_s {
        return Err(Error::Verification(format!(
            "length {n} via {} has n = {}, s = {}, expected s = {expected_s}",
            code.provenance(),
            code.n(),
            code.s()
        )));
    }
    Ok(code)
}

/// One line of the length table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub n: usize,
    pub s: usize,
    pub hamming_s: usize,
    pub tag: &'static str,
}

impl fmt::Display for TableRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {}", self.n, self.s, self.hamming_s, self.tag)
    }
}

/// Builds every length in `from..=to` and reports its generator count.
pub fn table(from: usize, to: usize) -> Result<Vec<TableRow>> {
    (from..=to)
        .into_par_iter()
        .map(|n| {
            let class = classify_length(n)?;
            Ok(TableRow {
                n,
                s: build(n)?.s(),
                hamming_s: class.hamming_s(),
                tag: class.tag(),
            })
        })
        .collect()
}
