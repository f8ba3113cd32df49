//! The quantum Hamming bound, the length classification of optimal
//! distance-3 codes, weight distributions and the LP certificates that push
//! the bound up by one at three length families.
//!
//! Everything here is exact integer arithmetic.

use std::fmt;

use rayon::prelude::*;

use crate::block::StabilizerCode;
use crate::error::{Error, Result};
use crate::pauli::PauliString;

/// Default largest generator count whose 2^s group elements are enumerated.
pub const DEFAULT_WEIGHT_CAP: usize = 24;

/// `⌈log2(3n + 1)⌉`, the least s with `2^s >= 3n + 1`.
pub fn hamming_s(n: usize) -> usize {
    let t = 3 * n as u128 + 1;
    (u128::BITS - (t - 1).leading_zeros()) as usize
}

/// `(4^m - 1) / 3`: 0, 1, 5, 21, 85, 341, ...
pub fn f_seq(m: u32) -> u64 {
    assert!(m <= 31, "f_seq({m}) overflows u64");
    ((1u64 << (2 * m)) - 1) / 3
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LengthFamily {
    /// `8f_m + 3 <= n <= f_{m+2} - 4`, s = 2m + 4.
    PlainA,
    /// `f_{m+1} + 1 <= n <= 8f_m - 3`, s = 2m + 3.
    PlainB,
    /// `n = 8f_m`, s = 2m + 3.
    PerfectEightFm,
    /// `n = f_{m+2}`, s = 2m + 4.
    PerfectFm,
    /// Lengths where the best known code misses the Hamming bound by one
    /// and optimality is open.
    UpperU,
    /// Lengths where the LP bound proves the Hamming bound unreachable.
    LpL,
    /// Remaining lengths up to 37, read off the table of small codes.
    Small,
    Degenerate6,
}

impl LengthFamily {
    pub fn name(self) -> &'static str {
        match self {
            LengthFamily::PlainA => "plain_a",
            LengthFamily::PlainB => "plain_b",
            LengthFamily::PerfectEightFm => "perfect_8fm",
            LengthFamily::PerfectFm => "perfect_fm",
            LengthFamily::UpperU => "upper_u",
            LengthFamily::LpL => "lp_l",
            LengthFamily::Small => "small",
            LengthFamily::Degenerate6 => "degenerate_6",
        }
    }
}

impl fmt::Display for LengthFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Where a length sits among the optimal-code families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthClass {
    pub n: usize,
    pub m: Option<u32>,
    pub family: LengthFamily,
    /// The defining expression, e.g. `8f_m+1` or `f_{m+1}+1..8f_m-3`.
    pub form: &'static str,
    pub s_best: usize,
    pub optimal_proven: bool,
}

/// Lengths whose optimal codes are new constructions rather than entries
/// of the public tables.
pub const NEW_CODE_LENGTHS: [usize; 3] = [36, 37, 81];

impl LengthClass {
    pub fn hamming_s(&self) -> usize {
        hamming_s(self.n)
    }

    /// Short status tag: `β` degenerate, `α` new code, `p` perfect,
    /// `l` LP-optimal, `u` best known, `-` otherwise.
    pub fn tag(&self) -> &'static str {
        match self.family {
            LengthFamily::Degenerate6 => "β",
            LengthFamily::LpL => "l",
            LengthFamily::UpperU => "u",
            LengthFamily::PerfectFm | LengthFamily::PerfectEightFm => "p",
            _ if NEW_CODE_LENGTHS.contains(&self.n) => "α",
            _ => "-",
        }
    }
}

fn small_s(n: usize) -> usize {
    match n {
        5 => 4,
        6 | 8 => 5,
        7 | 9..=17 | 21 => 6,
        _ => 7,
    }
}

/// Classifies `n >= 5`. Formula families take precedence; `n = 6` and the
/// small lengths no formula covers fall back to the table.
pub fn classify_length(n: usize) -> Result<LengthClass> {
    if n < 5 {
        return Err(Error::OutOfRange {
            what: "code length n",
            value: n as u64,
            min: 5,
        });
    }
    if n == 6 {
        return Ok(LengthClass {
            n,
            m: None,
            family: LengthFamily::Degenerate6,
            form: "degenerate",
            s_best: 5,
            optimal_proven: true,
        });
    }
    let n64 = n as u64;
    let mut found = None;
    for m in 0u32..=29 {
        let (eight, f1, f2) = (8 * f_seq(m), f_seq(m + 1), f_seq(m + 2));
        let m2 = 2 * m as usize;
        let hit = |family, form, s| Some((m, family, form, s));
        let c = if m >= 1 && n64 == eight {
            hit(LengthFamily::PerfectEightFm, "8f_m", m2 + 3)
        } else if n64 == f2 {
            hit(LengthFamily::PerfectFm, "f_{m+2}", m2 + 4)
        } else if m >= 1 && n64 == eight + 1 {
            hit(LengthFamily::LpL, "8f_m+1", m2 + 4)
        } else if m >= 1 && n64 == eight + 2 {
            hit(LengthFamily::LpL, "8f_m+2", m2 + 4)
        } else if m >= 1 && n64 + 1 == f2 {
            hit(LengthFamily::LpL, "f_{m+2}-1", m2 + 5)
        } else if m >= 2 && n64 + 1 == eight {
            hit(LengthFamily::UpperU, "8f_m-1", m2 + 4)
        } else if m >= 2 && n64 + 2 == eight {
            hit(LengthFamily::UpperU, "8f_m-2", m2 + 4)
        } else if m >= 2 && n64 + 2 == f2 {
            hit(LengthFamily::UpperU, "f_{m+2}-2", m2 + 5)
        } else if m >= 2 && n64 + 3 == f2 {
            hit(LengthFamily::UpperU, "f_{m+2}-3", m2 + 5)
        } else if m >= 2 && f1 < n64 && n64 + 3 <= eight {
            hit(LengthFamily::PlainB, "f_{m+1}+1..8f_m-3", m2 + 3)
        } else if m >= 2 && eight + 3 <= n64 && n64 + 4 <= f2 {
            hit(LengthFamily::PlainA, "8f_m+3..f_{m+2}-4", m2 + 4)
        } else {
            None
        };
        if c.is_some() {
            found = c;
            break;
        }
    }
    Ok(match found {
        Some((m, family, form, s_best)) => LengthClass {
            n,
            m: Some(m),
            family,
            form,
            s_best,
            optimal_proven: family != LengthFamily::UpperU,
        },
        None => LengthClass {
            n,
            m: None,
            family: LengthFamily::Small,
            form: "small",
            s_best: small_s(n),
            optimal_proven: true,
        },
    })
}

/// Number of stabilizer elements of each weight, `a[i]` for weight i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    pub a: Vec<u64>,
}

impl WeightDistribution {
    pub fn n(&self) -> usize {
        self.a.len() - 1
    }

    pub fn total(&self) -> u64 {
        self.a.iter().sum()
    }
}

impl fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.a.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

pub fn weight_distribution(code: &StabilizerCode) -> Result<WeightDistribution> {
    weight_distribution_with_cap(code.gens(), DEFAULT_WEIGHT_CAP)
}

/// Enumerates all `2^s` products of `gens` in Gray-code order, sharded
/// across threads; the counts do not depend on the sharding.
pub fn weight_distribution_with_cap(gens: &[PauliString], cap: usize) -> Result<WeightDistribution> {
    let s = gens.len();
    if s > cap {
        return Err(Error::EnumerationCap { s, cap });
    }
    let n = gens.first().map_or(0, PauliString::len);
    let shard_bits = s.min(8);
    let per_shard = 1u64 << (s - shard_bits);
    let counts = (0u64..1 << shard_bits)
        .into_par_iter()
        .map(|shard| {
            let mut local = vec![0u64; n + 1];
            let start = shard * per_shard;
            let gray = start ^ (start >> 1);
            let mut acc = PauliString::identity(n);
            for (i, g) in gens.iter().enumerate() {
                if (gray >> i) & 1 == 1 {
                    acc.mul_assign(g);
                }
            }
            for idx in start..start + per_shard {
                local[acc.weight()] += 1;
                if idx + 1 < start + per_shard {
                    acc.mul_assign(&gens[(idx + 1).trailing_zeros() as usize]);
                }
            }
            local
        })
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(WeightDistribution { a: counts })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Eq,
    Ge,
    Gt,
}

impl Relation {
    fn holds(self, lhs: i128, rhs: i128) -> bool {
        match self {
            Relation::Eq => lhs == rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Gt => lhs > rhs,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Eq => "==",
            Relation::Ge => ">=",
            Relation::Gt => ">",
        }
    }
}

/// One evaluated relation `lhs <rel> rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub lhs: i128,
    pub relation: Relation,
    pub rhs: i128,
    pub holds: bool,
}

impl Check {
    fn new(name: impl Into<String>, lhs: i128, relation: Relation, rhs: i128) -> Self {
        Check {
            name: name.into(),
            lhs,
            relation,
            rhs,
            holds: relation.holds(lhs, rhs),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} {} {} {}",
            self.name,
            self.lhs,
            self.relation.symbol(),
            self.rhs,
            if self.holds { "ok" } else { "FAILED" }
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpReport {
    pub checks: Vec<Check>,
}

impl LpReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// Evaluates the three LP relations for a weight distribution, scaled by
/// `2^s` so that everything stays integral:
///
/// * `2^s A_1 = Σ (3n - 4i) A_i`
/// * `2^(s+1) A_2 = Σ ((4i - 3n + 1)^2 - 3n - 1) A_i`
/// * `Σ A_2i >= 2^(s-1)`
///
/// with sums over every weight `0..=n`.
pub fn check_lp_identities(code: &StabilizerCode, w: &WeightDistribution) -> LpReport {
    lp_identities(code.s(), w)
}

pub fn lp_identities(s: usize, w: &WeightDistribution) -> LpReport {
    let n = w.n() as i128;
    let pow = 1i128 << s;
    let terms = w.a.iter().enumerate().map(|(i, &a)| (i as i128, a as i128));
    let a1: i128 = terms.clone().map(|(i, a)| (3 * n - 4 * i) * a).sum();
    let a2: i128 = terms
        .clone()
        .map(|(i, a)| ((4 * i - 3 * n + 1).pow(2) - 3 * n - 1) * a)
        .sum();
    let even: i128 = terms.filter(|(i, _)| i % 2 == 0).map(|(_, a)| a).sum();
    let at = |i: usize| w.a.get(i).copied().unwrap_or(0) as i128;
    LpReport {
        checks: vec![
            Check::new("A_1 identity (2^s A_1 = sum (3n-4i) A_i)", pow * at(1), Relation::Eq, a1),
            Check::new(
                "A_2 identity (2^(s+1) A_2 = sum ((4i-3n+1)^2-3n-1) A_i)",
                2 * pow * at(2),
                Relation::Eq,
                a2,
            ),
            Check::new("even weights (sum A_2i >= 2^(s-1))", even, Relation::Ge, pow / 2),
        ],
    }
}

/// The three length families where the LP argument raises the bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpFamily {
    FmPlus2Minus1,
    EightFmPlus1,
    EightFmPlus2,
    None,
}

impl LpFamily {
    pub fn name(self) -> &'static str {
        match self {
            LpFamily::FmPlus2Minus1 => "f_{m+2}-1",
            LpFamily::EightFmPlus1 => "8f_m+1",
            LpFamily::EightFmPlus2 => "8f_m+2",
            LpFamily::None => "none",
        }
    }
}

impl fmt::Display for LpFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateReport {
    pub n: usize,
    pub family: LpFamily,
    pub m: Option<u32>,
    pub checks: Vec<Check>,
    pub hamming_s: usize,
    pub strengthened_bound: usize,
}

impl CertificateReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

fn lp_family(n: usize) -> (LpFamily, Option<u32>) {
    let n = n as u64;
    for m in 1u32..=29 {
        let eight = 8 * f_seq(m);
        if n == f_seq(m + 2) - 1 {
            return (LpFamily::FmPlus2Minus1, Some(m));
        }
        if n == eight + 1 {
            return (LpFamily::EightFmPlus1, Some(m));
        }
        if n == eight + 2 {
            return (LpFamily::EightFmPlus2, Some(m));
        }
        if eight > n {
            break;
        }
    }
    (LpFamily::None, None)
}

/// Evaluates every inequality the LP argument needs at length `n`; when
/// `n` is in one of the three families and all of them hold the bound is
/// `s_H + 1`, otherwise it stays `s_H`.
///
/// The polynomials are scaled by 16 to clear denominators:
/// `h(x) = (4x - 3n)(4x - 4 - 3n)`, `f(x) = (4x - 3n - 1)^2`,
/// `g(x) = (4x - 3n - 2)(4x - 3n + 2)`.
pub fn lp_certificate(n: usize) -> CertificateReport {
    let sh = hamming_s(n);
    let (family, m) = lp_family(n);
    let t = 3 * n as i128;
    let pow = 1i128 << sh;
    let sweep = |p: &dyn Fn(i128) -> i128, step: usize| {
        (0..=n).step_by(step).map(|i| p(i as i128)).min().unwrap()
    };
    let checks = match family {
        LpFamily::FmPlus2Minus1 => {
            let h = |x: i128| (4 * x - t) * (4 * x - 4 - t);
            vec![
                Check::new("3n+4 = 2^s_H", t + 4, Relation::Eq, pow),
                Check::new("3n mod 4", t % 4, Relation::Eq, 0),
                Check::new("3n/4 mod 2", (t / 4) % 2, Relation::Eq, 1),
                Check::new("min h(i), 0<=i<=n", sweep(&h, 1), Relation::Ge, 0),
                Check::new("h(1) > 2(3n+4)", h(1), Relation::Gt, 2 * (t + 4)),
                Check::new("h(2) >= 2(3n+4)", h(2), Relation::Ge, 2 * (t + 4)),
            ]
        }
        LpFamily::EightFmPlus1 => {
            let f = |x: i128| (4 * x - t - 1).pow(2);
            vec![
                Check::new("3n+5 = 2^s_H", t + 5, Relation::Eq, pow),
                Check::new("(3n+1) mod 4", (t + 1) % 4, Relation::Eq, 0),
                Check::new("(3n+1)/4 mod 2", ((t + 1) / 4) % 2, Relation::Eq, 1),
                Check::new(
                    "f(0) > (3n+5)(3n-7)+16",
                    f(0),
                    Relation::Gt,
                    (t + 5) * (t - 7) + 16,
                ),
                Check::new("f(1) > 4(3n+5)", f(1), Relation::Gt, 4 * (t + 5)),
                Check::new("f(2) > 2(3n+5)+16", f(2), Relation::Gt, 2 * (t + 5) + 16),
                Check::new("min f(2i), 0<=2i<=n", sweep(&f, 2), Relation::Ge, 16),
            ]
        }
        LpFamily::EightFmPlus2 => {
            let g = |x: i128| (4 * x - t - 2) * (4 * x - t + 2);
            vec![
                Check::new("3n+2 = 2^s_H", t + 2, Relation::Eq, pow),
                Check::new("(3n+2) mod 4", (t + 2) % 4, Relation::Eq, 0),
                Check::new("min g(i), 0<=i<=n", sweep(&g, 1), Relation::Ge, 0),
                Check::new("g(0) > (3n+2)(3n-4)", g(0), Relation::Gt, (t + 2) * (t - 4)),
                Check::new("g(1) > 2(3n+2)", g(1), Relation::Gt, 2 * (t + 2)),
                Check::new("g(2) > 2(3n+2)", g(2), Relation::Gt, 2 * (t + 2)),
            ]
        }
        LpFamily::None => Vec::new(),
    };
    let raised = family != LpFamily::None && checks.iter().all(|c| c.holds);
    CertificateReport {
        n,
        family,
        m,
        checks,
        hamming_s: sh,
        strengthened_bound: sh + usize::from(raised),
    }
}
