use optd3::bounds::{classify_length, hamming_s, LengthFamily};
use optd3::construct::{build, build_with, theorem2_plan, BuildOptions, PlanCase};
use optd3::format::{parse_code_text, render_code, OutputFormat};
use optd3::verify::{
    detects_all_small_errors, detects_all_small_errors_exhaustive, DetectionMode,
};
use proptest::prelude::*;
use rayon::prelude::*;

#[test]
fn every_length_to_3000_meets_its_family_bound() {
    let failures: Vec<String> = (5..=3000usize)
        .into_par_iter()
        .filter_map(|n| {
            let class = classify_length(n).unwrap();
            let code = match build(n) {
                Ok(c) => c,
                Err(e) => return Some(format!("{n}: {e}")),
            };
            let sh = hamming_s(n);
            let want = match class.family {
                LengthFamily::PlainA | LengthFamily::PlainB => sh,
                LengthFamily::UpperU | LengthFamily::LpL => sh + 1,
                LengthFamily::PerfectFm | LengthFamily::PerfectEightFm => sh,
                LengthFamily::Small | LengthFamily::Degenerate6 => class.s_best,
            };
            (code.n() != n || code.s() != want).then(|| format!("{n}: s = {}", code.s()))
        })
        .collect();
    assert!(failures.is_empty(), "{failures:?}");
}

#[test]
fn perfect_lengths_saturate() {
    for n in [5usize, 21, 85, 341, 1365] {
        assert_eq!(1usize << build(n).unwrap().s(), 3 * n + 1, "n = {n}");
    }
    for (m, n) in [(1, 8usize), (2, 40), (3, 168), (4, 680), (5, 2728)] {
        assert_eq!(build(n).unwrap().s(), 2 * m + 3, "n = {n}");
    }
}

#[test]
fn chain_generator_accounting() {
    for n in (38..=3000).step_by(7) {
        let plan = theorem2_plan(n).unwrap();
        let code = build_with(
            n,
            BuildOptions {
                prefer_theorem2: true,
            },
        )
        .unwrap();
        let want = match plan.case {
            PlanCase::A => 2 * plan.m as usize + 4,
            PlanCase::B => 2 * plan.m as usize + 5,
        };
        assert_eq!(code.s(), want, "n = {n}");
        assert_eq!(code.provenance(), plan.provenance());
    }
}

#[test]
fn exhaustive_check_agrees_with_fast_check_up_to_400() {
    (5..=400usize).into_par_iter().for_each(|n| {
        let code = build(n).unwrap();
        let mode = if code.pure() {
            DetectionMode::Pure
        } else {
            DetectionMode::Degenerate
        };
        let slow = detects_all_small_errors_exhaustive(code.gens(), mode);
        assert!(slow.passed(), "n = {n}");
        assert_eq!(slow, detects_all_small_errors(code.gens(), mode), "n = {n}");
    });
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn built_codes_pass_the_exhaustive_sweep(n in 401usize..3000) {
        let code = build(n).unwrap();
        prop_assert!(detects_all_small_errors_exhaustive(code.gens(), DetectionMode::Pure).passed());
    }

    #[test]
    fn every_format_round_trips(n in 5usize..200) {
        let code = build(n).unwrap();
        for f in [OutputFormat::Pauli, OutputFormat::Check, OutputFormat::Records] {
            let back = parse_code_text(&render_code(&code, f)).unwrap();
            prop_assert_eq!(&back.block, code.block());
            prop_assert_eq!(back.pure, Some(code.pure()));
            prop_assert_eq!(back.provenance.as_deref(), Some(code.provenance()));
        }
    }
}
