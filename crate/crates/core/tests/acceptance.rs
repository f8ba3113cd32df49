//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use optd3::block::GeneratorBlock;
use optd3::bounds::{check_lp_identities, f_seq, hamming_s, lp_certificate, weight_distribution};
use optd3::catalog::{self, named_block, subscript};
use optd3::construct::{build, table, theorem2_plan, PlanCase};
use optd3::families::{eight_fm_code, five_qubit_code, perfect_code, FIVE_QUBIT_ROWS};
use optd3::format::parse_rows;
use optd3::gf2::RowSpace;
use optd3::verify::{
    detects_all_small_errors, detects_all_small_errors_exhaustive, find_weight3_logical,
    verify_code, verify_code_with, DetectionMode, VerifyOptions,
};
use optd3::{PauliString, StabilizerCode};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    if t > limit {
        Err(format!("took {t:.1?}, limit {limit:?}"))
    } else {
        Ok(())
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Lengths 5..=128 as printed: `(n, n - k, s_H, label)`.
fn table_golden() -> BTreeMap<usize, (usize, usize, &'static str)> {
    let groups: [(&[usize], usize, usize); 10] = [
        (&[5], 4, 4),
        (&[6, 8], 5, 5),
        (&[7, 9, 10], 6, 5),
        (&[11, 12, 13, 14, 15, 16, 17, 21], 6, 6),
        (&[18, 19, 20], 7, 6),
        (&[22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 33, 34, 35, 36, 37, 40], 7, 7),
        (&[38, 39, 41, 42], 8, 7),
        (&[], 8, 8),
        (&[82, 83, 84], 9, 8),
        (&[], 9, 9),
    ];
    let labels: [(usize, &str); 12] = [
        (6, "β"),
        (20, "l"),
        (36, "α"),
        (37, "α"),
        (38, "u"),
        (39, "u"),
        (41, "l"),
        (42, "l"),
        (81, "α"),
        (82, "u"),
        (83, "u"),
        (84, "l"),
    ];
    let mut out = BTreeMap::new();
    for (ns, nk, sh) in groups {
        for &n in ns {
            out.insert(n, (nk, sh, "-"));
        }
    }
    for n in (43..=81).chain([85]) {
        out.insert(n, (8, 8, "-"));
    }
    for n in 86..=128 {
        out.insert(n, (9, 9, "-"));
    }
    for (n, l) in labels {
        out.get_mut(&n).unwrap().2 = l;
    }
    // 8f_1 + {1, 2} belong to the l family; f_m and 8f_m are p
    for n in [9, 10] {
        out.get_mut(&n).unwrap().2 = "l";
    }
    for n in [5, 8, 21, 40, 85] {
        out.get_mut(&n).unwrap().2 = "p";
    }
    out
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let rows = table(5, 128).map_err(|e| e.to_string())?;
    within(start, Duration::from_secs(30))?;
    let golden = table_golden();
    ensure(rows.len() == golden.len(), || format!("{} rows", rows.len()))?;
    for row in &rows {
        let (nk, sh, tag) = golden[&row.n];
        ensure((row.s, row.hamming_s, row.tag) == (nk, sh, tag), || {
            format!("n = {}: got {row}, expected {nk} {sh} {tag}", row.n)
        })?;
    }
    Ok(format!("124 lengths match in {:.1?}", start.elapsed()))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    for n in 5..=128 {
        let code = build(n).map_err(|e| e.to_string())?;
        let report = verify_code_with(
            &code,
            VerifyOptions {
                exhaustive: true,
                ..VerifyOptions::default()
            },
        );
        let mode = if n == 6 {
            DetectionMode::Degenerate
        } else {
            DetectionMode::Pure
        };
        ensure(report.mode == mode, || format!("n = {n}: mode {:?}", report.mode))?;
        ensure(report.is_valid(), || format!("n = {n}:\n{report}"))?;
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("zero counterexamples in {:.1?}", start.elapsed()))
}

fn criterion_3() -> Outcome {
    let p = theorem2_plan(38).map_err(|e| e.to_string())?;
    ensure((p.case, p.m, p.alpha, p.beta) == (PlanCase::A, 2, 5, 3), || format!("{p:?}"))?;
    let p = theorem2_plan(371).map_err(|e| e.to_string())?;
    ensure((p.case, p.m, p.alpha, p.beta) == (PlanCase::B, 3, 38, 2), || format!("{p:?}"))?;
    ensure(p.provenance() == "[8*26]>[2^7]>[35]", || p.provenance())?;
    let c = build(81).map_err(|e| e.to_string())?;
    ensure(c.provenance() == "[2^6]>[17]" && c.s() == 8, || {
        format!("81 via {} s = {}", c.provenance(), c.s())
    })?;
    let c = build(371).map_err(|e| e.to_string())?;
    ensure(verify_code(&c).is_valid(), || "371 fails verification".into())?;
    ensure(c.s() == 11 && hamming_s(371) == 11, || format!("371 s = {}", c.s()))?;
    Ok("38, 81, 371 as worked".into())
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    for m in 2..=5 {
        let c = perfect_code(m).map_err(|e| e.to_string())?;
        ensure(c.n() as u64 == f_seq(m) && 1u64 << (2 * m) == 3 * f_seq(m) + 1, || {
            format!("f_{m}")
        })?;
        ensure(1usize << c.s() == 3 * c.n() + 1, || format!("f_{m}: s = {}", c.s()))?;
        ensure(verify_code(&c).is_valid(), || format!("f_{m} fails verification"))?;
    }
    for m in 1..=3 {
        let c = eight_fm_code(m).map_err(|e| e.to_string())?;
        let want = 2 * m as usize + 3;
        ensure(c.s() == want && hamming_s(c.n()) == want, || {
            format!("8f_{m}: s = {}, s_H = {}", c.s(), hamming_s(c.n()))
        })?;
        ensure(verify_code(&c).is_valid(), || format!("8f_{m} fails verification"))?;
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("f_2..f_5 and 8f_1..8f_3 saturate in {:.1?}", start.elapsed()))
}

fn criterion_5() -> Outcome {
    let mut checked = 0;
    for n in 5..=341 {
        let code = build(n).map_err(|e| e.to_string())?;
        if code.s() > 13 {
            continue;
        }
        let w = weight_distribution(&code).map_err(|e| e.to_string())?;
        let report = check_lp_identities(&code, &w);
        ensure(report.all_hold(), || {
            let lines: Vec<String> = report.checks.iter().map(ToString::to_string).collect();
            format!("n = {n}: {}", lines.join("; "))
        })?;
        ensure(w.total() == 1u64 << code.s(), || format!("n = {n}: total {}", w.total()))?;
        if code.pure() {
            ensure(w.a[1] == 0 && w.a[2] == 0, || format!("n = {n}: A_1, A_2 = {}, {}", w.a[1], w.a[2]))?;
        }
        checked += 1;
    }
    Ok(format!("{checked} codes, zero violations"))
}

const BUILD_CAP: usize = 3000;

fn criterion_6() -> Outcome {
    let mut built = 0;
    for m in 1..=10u32 {
        for n in [f_seq(m + 2) - 1, 8 * f_seq(m) + 1, 8 * f_seq(m) + 2] {
            let n = n as usize;
            let cert = lp_certificate(n);
            ensure(cert.all_hold(), || {
                let failed: Vec<String> =
                    cert.checks.iter().filter(|c| !c.holds).map(ToString::to_string).collect();
                format!("n = {n}: {}", failed.join("; "))
            })?;
            ensure(cert.strengthened_bound == hamming_s(n) + 1, || {
                format!("n = {n}: bound {}", cert.strengthened_bound)
            })?;
            if n <= BUILD_CAP {
                let c = build(n).map_err(|e| e.to_string())?;
                ensure(c.s() == hamming_s(n) + 1, || format!("n = {n}: built s = {}", c.s()))?;
                built += 1;
            }
        }
    }
    Ok(format!("30 certificates, {built} builds at s_H + 1"))
}

fn block_named(name: &str, text: &str) -> Result<GeneratorBlock, String> {
    let from_text = parse_rows(text).map_err(|e| format!("{name}: {e}"))?;
    let b = named_block(name).map_err(|e| format!("{name}: {e}"))?;
    ensure(b == from_text, || format!("{name} differs from its fixture"))?;
    Ok(b)
}

fn pure_code(name: &str, block: GeneratorBlock, nks: (usize, usize)) -> Result<(), String> {
    let c = StabilizerCode::new(block, true, name).map_err(|e| format!("{name}: {e}"))?;
    let r = verify_code_with(
        &c,
        VerifyOptions {
            exhaustive: true,
            ..VerifyOptions::default()
        },
    );
    ensure(r.is_valid() && (c.n(), c.k()) == nks, || format!("{name}:\n{r}"))
}

fn defect_matches(name: &str, b: &GeneratorBlock) -> Result<(), String> {
    ensure(detects_all_small_errors_exhaustive(b.gens(), DetectionMode::Pure).passed(), || {
        format!("{name} misses a small error")
    })?;
    ensure(Some(b.defect()) == subscript(name), || format!("{name}: e = {}", b.defect()))
}

fn criterion_7() -> Outcome {
    let five = parse_rows(catalog::FIVE_QUBIT_TEXT).map_err(|e| e.to_string())?;
    ensure(five == *five_qubit_code().block(), || "five-qubit rows differ".into())?;
    let printed: Vec<String> = five.gens().iter().map(ToString::to_string).collect();
    ensure(printed == FIVE_QUBIT_ROWS, || format!("{printed:?}"))?;
    pure_code("[5]", five, (5, 1))?;
    pure_code("[2^3]", parse_rows(catalog::EIGHT_QUBIT_TEXT).map_err(|e| e.to_string())?, (8, 3))?;
    pure_code("[17]", block_named("[17]", catalog::SEVENTEEN_TEXT)?, (17, 11))?;

    for name in ["[1]_1", "[2,4]_2", "[3,4]_2", "[4,4]_1", "[3,5]_2", "[5,5]_2", "[7,5]_1"] {
        defect_matches(name, &named_block(name).map_err(|e| e.to_string())?)?;
    }

    let table = catalog::thirty_six_code().map_err(|e| e.to_string())?;
    pure_code("[36] transcribed", table.into_block(), (36, 29))?;
    let pasted = catalog::small_code(36).map_err(|e| e.to_string())?;
    pure_code("[36] pasted", pasted.into_block(), (36, 29))?;

    for (text, left, right) in [
        (catalog::PARTITION_A_TEXT, "[10]", "[6,0,4]"),
        (catalog::PARTITION_B_TEXT, "[10,6]_1", "[6,6]_1"),
        (catalog::PARTITION_C_TEXT, "[10,6]_2", "[6,6]_2"),
    ] {
        let whole = parse_rows(text).map_err(|e| e.to_string())?;
        let keep = |r: std::ops::Range<usize>| -> Result<GeneratorBlock, String> {
            let cols: Vec<usize> = r.collect();
            GeneratorBlock::new(whole.gens().iter().map(|g| g.restrict(&cols)).collect())
                .map_err(|e| e.to_string())
        };
        let (l, r) = (keep(0..10)?, keep(10..16)?);
        ensure(l == named_block(left).map_err(|e| e.to_string())?, || format!("{left} differs"))?;
        ensure(r == named_block(right).map_err(|e| e.to_string())?, || format!("{right} differs"))?;
        if subscript(left).is_some() {
            defect_matches(left, &l)?;
            defect_matches(right, &r)?;
        } else {
            ensure(l.defect() == 0 && r.defect() == 0, || "partition a halves do not commute".into())?;
        }
        pure_code(&format!("{left}|{right}"), whole, (16, 10))?;
    }

    for name in ["[18,7]_1", "[18,7]_2", "[20,7]_2", "[26,7]_2", "[28,7]_1", "[28,7]_2"] {
        defect_matches(name, &named_block(name).map_err(|e| e.to_string())?)?;
    }
    Ok("all transcriptions verify with their e values".into())
}

/// Independent oracle for a weight-3 witness.
fn is_weight3_logical(e: &PauliString, gens: &[PauliString]) -> bool {
    let mut space = RowSpace::new(2 * e.len());
    for g in gens {
        space.insert(&g.symplectic_bits());
    }
    e.weight() == 3 && gens.iter().all(|g| g.commutes(e)) && !space.contains(&e.symplectic_bits())
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let mut found = 0;
    for n in 5..=40 {
        let c = build(n).map_err(|e| e.to_string())?;
        if c.k() == 0 {
            continue;
        }
        let w = find_weight3_logical(c.gens()).ok_or_else(|| format!("n = {n}: no witness"))?;
        ensure(is_weight3_logical(&w, c.gens()), || format!("n = {n}: bad witness {w}"))?;
        found += 1;
    }
    let six = catalog::six_zero_four_code().map_err(|e| e.to_string())?;
    ensure(find_weight3_logical(six.gens()).is_none(), || "[[6,0,4]] has a witness".into())?;
    within(start, Duration::from_secs(30))?;
    Ok(format!("{found} witnesses, none for [[6,0,4]], in {:.1?}", start.elapsed()))
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    for (n, s) in [(2728, 13), (1365, 12)] {
        let c = build(n).map_err(|e| e.to_string())?;
        ensure(c.s() == s, || format!("n = {n}: s = {}", c.s()))?;
        let d = detects_all_small_errors_exhaustive(c.gens(), DetectionMode::Pure);
        ensure(d.passed(), || format!("n = {n}: misses {:?}", d.counterexample))?;
        let fast = detects_all_small_errors(c.gens(), DetectionMode::Pure);
        ensure(fast == d, || format!("n = {n}: fast and exhaustive checks disagree"))?;
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!("2728 and 1365 verified in {:.1?}", start.elapsed()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("table of optimal lengths 5..128", criterion_1),
        ("exhaustive detection 5..128", criterion_2),
        ("worked examples", criterion_3),
        ("perfect saturation", criterion_4),
        ("LP identities", criterion_5),
        ("LP certificates", criterion_6),
        ("golden transcriptions", criterion_7),
        ("exact distance", criterion_8),
        ("scale check", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
