//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line (run with `cargo test --test acceptance -- --nocapture` to see
//! them all).  Every tolerance is exact equality; the time limits are
//! asserted with `std::time::Instant`.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use weilcodes::charsums::{
    classify_j, j_beta_of, label_representatives, s_brute, s_closed_binomial, s_period_brute,
    s_period_scalar, s_theorem31, sweep_all_b, w_value,
};
use weilcodes::claims::{run_verify, Status};
use weilcodes::codes::{
    a2_perp_brute, a2_perp_closed, defining_set, dual_report, f_classify, hamming_bound_check,
    predicted_trace_pair, trace_pair, weight_distribution_brute, weight_distribution_closed,
    weight_distribution_closed_for, BetaClass, CodeSpec, DualDistance,
};
use weilcodes::cyclotomy::{admissible_divisors, pair_count_table};
use weilcodes::eisenstein::Eisenstein;
use weilcodes::gf3x::{FieldContext, FieldParams};
use weilcodes::{Error, JLabel};

fn ctx(ell: u64, m: u32) -> FieldContext {
    FieldContext::build(FieldParams::validate(ell, m).unwrap()).unwrap()
}

fn ctx_closed(ell: u64, m: u32) -> FieldContext {
    FieldContext::build(FieldParams::validate_closed_form(ell, m).unwrap()).unwrap()
}

fn report(criterion: u32, name: &str, detail: String) {
    println!("criterion {:>2}: PASS: {} ({})", criterion, name, detail);
}

/// β with j_β = j under the normalized g.
fn beta_for_j(c: &FieldContext, j: u64) -> weilcodes::FieldElement {
    if j == 0 {
        c.one()
    } else {
        c.g_pow(c.params.q - 1 - j as u128)
    }
}

/// All sweep cases: β = 0 plus one representative per exponent residue.
fn sweep_specs(c: &FieldContext) -> Vec<(u8, Option<u64>, CodeSpec)> {
    let mut out = Vec::new();
    for alpha in [0u8, 1, 2] {
        out.push((
            alpha,
            None,
            CodeSpec {
                alpha,
                beta: c.zero(),
            },
        ));
        for j in 0..c.params.period {
            out.push((
                alpha,
                Some(j),
                CodeSpec {
                    alpha,
                    beta: beta_for_j(c, j),
                },
            ));
        }
    }
    out
}

#[test]
fn criterion_01_binomial_sum_oracle_equivalence() {
    let start = Instant::now();
    let mut checked = 0u64;
    for c in [ctx(5, 1), ctx(7, 1)] {
        let qm1 = c.params.q - 1;
        let g_inv = c.inv(&c.g).unwrap();
        for a_sign in [1u8, 2] {
            let a = c.scalar(a_sign);
            let sweep = sweep_all_b(&c, a_sign).unwrap();
            let mut b = c.one(); // b = g^{-i}
            for (i, brute) in sweep.iter().enumerate() {
                let closed = s_closed_binomial(&c, &a, &b).unwrap();
                assert_eq!(
                    closed, *brute,
                    "mismatch at (ell, m) = ({}, {}), a = {}, i = {}",
                    c.params.ell, c.params.m, a_sign, i
                );
                b = c.mul(&b, &g_inv);
                checked += 1;
            }
            // Tie the indexed sweep to the generic brute sum.
            for i in [0usize, 1, 7, qm1 as usize - 1] {
                let b = c.g_pow(qm1 - i as u128);
                assert_eq!(sweep[i], s_brute(&c, &a, &b).unwrap());
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {:?}", elapsed);
    report(
        1,
        "brute = period-sum reduction for every (a, b)",
        format!("{} sums at (5,1) and (7,1) in {:?}", checked, elapsed),
    );
}

#[test]
fn criterion_02_final_sum_table_with_hit_counts() {
    let start = Instant::now();
    for c in [ctx(5, 1), ctx(7, 1)] {
        let p = &c.params;
        let qm1 = p.q - 1;
        let mut hits: BTreeMap<JLabel, u64> = BTreeMap::new();
        for a_sign in [1u8, 2] {
            let sweep = sweep_all_b(&c, a_sign).unwrap();
            for (i, brute) in sweep.iter().enumerate() {
                let b = c.g_pow(qm1 - i as u128 % qm1);
                let by_table = s_theorem31(&c, a_sign, &b).unwrap();
                assert_eq!(by_table, *brute, "a = {}, i = {}", a_sign, i);
                let label = classify_j(p, i as u64 % p.period).unwrap().label;
                *hits.entry(label).or_insert(0) += 1;
            }
        }
        // Per-clause hit counts; empty classes are reported as skipped.
        let mut lines = Vec::new();
        for label in weilcodes::charsums::ALL_LABELS {
            let count = hits.get(&label).copied().unwrap_or(0);
            if count == 0 {
                lines.push(format!(
                    "{}: SKIPPED (class empty at these parameters)",
                    label
                ));
                assert_eq!(label.size(p), 0);
            } else {
                lines.push(format!("{}: {}", label, count));
                assert_eq!(count, 2 * label.size(p) * (qm1 as u64 / p.period));
            }
        }
        println!(
            "criterion  2: clause hits at ({}, {}): {}",
            p.ell,
            p.m,
            lines.join(", ")
        );
    }
    let elapsed = start.elapsed();
    report(
        2,
        "final sum table equals brute with full clause coverage",
        format!("{:?}", elapsed),
    );
}

#[test]
fn criterion_03_trace_table() {
    for (ell, m) in [(5u64, 1u32), (7, 1), (5, 2), (7, 2)] {
        let c = ctx_closed(ell, m);
        let start = Instant::now();
        for j in 0..c.params.period {
            assert_eq!(
                c.trace(c.xi_pow(j)),
                weilcodes::gf3x::trace_xi_power(&c.params, j),
                "j = {} at ({}, {})",
                j,
                ell,
                m
            );
        }
        let elapsed = start.elapsed();
        assert!(
            elapsed < Duration::from_secs(1),
            "({}, {}) took {:?}",
            ell,
            m,
            elapsed
        );
    }
    report(
        3,
        "five-case trace table exact on the full period",
        "(5,1) (7,1) (5,2) (7,2)".into(),
    );
}

#[test]
fn criterion_04_scalar_period_sums() {
    let c5 = ctx(5, 1);
    assert_eq!(s_period_brute(&c5, &c5.one()), Eisenstein::from_int(-5));
    assert_eq!(s_period_scalar(&c5.params), -5); // 2ℓ^m − 3ℓ branch
    let c7 = ctx(7, 1);
    assert_eq!(s_period_brute(&c7, &c7.one()), Eisenstein::from_int(-4));
    assert_eq!(s_period_scalar(&c7.params), -4); // 2ℓ^m − 3ℓ + 3 branch
    report(
        4,
        "scalar period sums match both branch formulas",
        "S(1) = -5 / -4".into(),
    );
}

#[test]
fn criterion_05_weight_distributions() {
    let start = Instant::now();
    let mut count = 0u32;
    for c in [ctx(5, 1), ctx(7, 1)] {
        for (alpha, j, spec) in sweep_specs(&c) {
            let brute = weight_distribution_brute(&c, &spec);
            let closed = weight_distribution_closed_for(&c, &spec);
            match (brute, closed) {
                (Ok(b), Ok(cl)) => assert_eq!(b, cl, "alpha = {}, j = {:?}", alpha, j),
                (Err(Error::EmptyCode), Err(Error::EmptyCode)) => {}
                (b, cl) => panic!("route disagreement: {:?} vs {:?}", b, cl),
            }
            count += 1;
        }
    }
    // The two explicit exceptional codes at (5,1), reproduced exactly.
    let c = ctx(5, 1);
    let three_weight = weight_distribution_brute(
        &c,
        &CodeSpec {
            alpha: 1,
            beta: beta_for_j(&c, 0),
        },
    )
    .unwrap();
    assert_eq!(three_weight.n, 22);
    assert_eq!(
        three_weight.weights,
        [(12u128, 22u128), (15, 40), (18, 18)]
            .into_iter()
            .collect::<BTreeMap<_, _>>()
    );
    let two_weight = weight_distribution_brute(
        &c,
        &CodeSpec {
            alpha: 0,
            beta: beta_for_j(&c, 1),
        },
    )
    .unwrap();
    assert_eq!(two_weight.n, 27);
    assert_eq!(
        two_weight.weights,
        [(18u128, 78u128), (27, 2)]
            .into_iter()
            .collect::<BTreeMap<_, _>>()
    );
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {:?}", elapsed);
    report(
        5,
        "brute = closed distributions incl. both exceptional codes",
        format!("{} sweeps in {:?}", count, elapsed),
    );
}

#[test]
fn criterion_06_power_moment_identities() {
    let mut count = 0u32;
    for c in [ctx(5, 1), ctx(7, 1)] {
        for (_, _, spec) in sweep_specs(&c) {
            match weight_distribution_brute(&c, &spec) {
                Ok(dist) => {
                    let a2 = a2_perp_brute(&c, &spec).unwrap();
                    dist.pless_check(c.params.q, a2).unwrap();
                    count += 1;
                }
                Err(Error::EmptyCode) => {}
                Err(e) => panic!("{e}"),
            }
        }
    }
    report(
        6,
        "first three power-moment identities exact on every brute distribution",
        format!("{} distributions", count),
    );
}

#[test]
fn criterion_07_a2_dual_formula() {
    for c in [ctx(5, 1), ctx(7, 1)] {
        for (alpha, j, spec) in sweep_specs(&c) {
            let brute = a2_perp_brute(&c, &spec).unwrap();
            let class = match j {
                None => BetaClass::Zero,
                Some(j) => BetaClass::Class(classify_j(&c.params, j).unwrap().label),
            };
            let closed = a2_perp_closed(&c.params, alpha, class).unwrap();
            assert_eq!(brute, closed, "alpha = {}, j = {:?}", alpha, j);
        }
    }
    // The exceptional zero case: ℓ ≡ −1 (mod 3), m = 1, α = 0, every β ≠ 0
    // (all of J \ J″ at these parameters).
    let c = ctx(5, 1);
    for j in 0..c.params.period {
        let spec = CodeSpec {
            alpha: 0,
            beta: beta_for_j(&c, j),
        };
        assert_eq!(a2_perp_brute(&c, &spec).unwrap(), 0);
    }
    report(
        7,
        "dual weight-2 count: formula = enumeration, exceptional case = 0",
        "both desk fields".into(),
    );
}

#[test]
fn criterion_08_trace_pair_classification() {
    for c in [ctx(5, 1), ctx(7, 1)] {
        let mut sizes: BTreeMap<_, u64> = BTreeMap::new();
        for k in 0..(c.params.q - 1) {
            let x = c.g_pow(k);
            let label = f_classify(&c, &x).unwrap();
            *sizes.entry(label).or_insert(0) += 1;
            assert_eq!(
                trace_pair(&c, &x).unwrap(),
                predicted_trace_pair(&c.params, label),
                "k = {}",
                k
            );
        }
        assert_eq!(sizes.values().sum::<u64>() as u128, c.params.q - 1);
    }
    report(
        8,
        "predicted trace pairs match everywhere; class sizes sum to q-1",
        "(5,1) and (7,1)".into(),
    );
}

#[test]
fn criterion_09_pair_counts() {
    let c = ctx(7, 1);
    // d0 ≈ 2.39 admits d = 2 (and only d ∈ {1, 2} among divisors of q−1).
    assert_eq!(admissible_divisors(&c), vec![1, 2]);
    for exp in 0..20u128 {
        let beta = c.g_pow(exp);
        let table = pair_count_table(&c, 2, &beta).unwrap();
        let total: u128 = table.iter().flatten().sum();
        assert_eq!(total, c.params.q - 3);
        for (j1, row) in table.iter().enumerate() {
            for (j2, &v) in row.iter().enumerate() {
                assert!(v > 0, "N_{{{},{}}} = 0 for beta = g^{}", j1, j2, exp);
            }
        }
    }
    report(
        9,
        "all pair counts positive at d = 2 with totals q-3",
        "20 beta values at (7,1)".into(),
    );
}

#[test]
fn criterion_10_dual_reports_and_optimality() {
    // Distance split across the sweeps.
    for c in [ctx(5, 1), ctx(7, 1)] {
        let p = &c.params;
        for (alpha, j, spec) in sweep_specs(&c) {
            let class = match j {
                None => BetaClass::Zero,
                Some(j) => BetaClass::Class(classify_j(p, j).unwrap().label),
            };
            match dual_report(p, alpha, class) {
                Ok(dual) => {
                    assert_eq!(dual.dual_dim + p.e as u128, dual.n);
                    assert_eq!(dual.a2_perp, a2_perp_brute(&c, &spec).unwrap() as u128);
                    let exceptional = p.ell % 3 == 2 && p.m == 1 && alpha == 0 && j.is_some();
                    let expected = if exceptional {
                        DualDistance::AtLeastThree
                    } else {
                        DualDistance::Two
                    };
                    assert_eq!(dual.d_min, expected, "alpha = {}, j = {:?}", alpha, j);
                }
                Err(Error::EmptyCode) => assert!(alpha == 0 && j.is_none() && p.ell == 5),
                Err(e) => panic!("{e}"),
            }
        }
    }
    // The α = β = 0 optimality claim, checked rather than assumed.
    let c7 = ctx(7, 1);
    let dual = dual_report(&c7.params, 0, BetaClass::Zero).unwrap();
    assert_eq!(dual.n, 104);
    assert_eq!(dual.sphere_packing_optimal, Some(false));
    assert!(!dual.n_exceeds_half_qm1); // 104 <= 364: the bound is inconclusive here
    assert!(!hamming_bound_check(dual.n, dual.dual_dim, 2));
    println!(
        "criterion 10: at (7,1) alpha=beta=0 the sphere-packing bound does NOT certify \
         optimality (n = 104 <= (q-1)/2 = 364); reported, not asserted"
    );
    let p52 = FieldParams::validate(5, 2).unwrap();
    let dual52 = dual_report(&p52, 0, BetaClass::Zero).unwrap();
    assert_eq!(dual52.n, 2_789_427_520);
    assert_eq!(dual52.sphere_packing_optimal, Some(true));
    assert!(dual52.n_exceeds_half_qm1);
    report(
        10,
        "dual distance split reproduced; optimality verdicts recorded",
        format!(
            "(7,1): bound inconclusive; (5,2): certified optimal (n = {} > {})",
            dual52.n,
            (p52.q - 1) / 2
        ),
    );
}

#[test]
fn criterion_11_closed_form_only_fields() {
    let start = Instant::now();
    for (ell, m) in [(5u64, 2u32), (7, 2)] {
        let c = ctx_closed(ell, m);
        let p = &c.params;
        assert!(!c.enumeration_available());
        // Enumeration APIs refuse cleanly.
        match weight_distribution_brute(
            &c,
            &CodeSpec {
                alpha: 1,
                beta: c.zero(),
            },
        ) {
            Err(Error::EnumerationUnavailable(_)) => {}
            other => panic!("expected EnumerationUnavailable, got {:?}", other),
        }
        // Every closed-form report passes integrality and the moment
        // identities with the formula-based dual count.
        let mut reports = 0u32;
        for alpha in [0u8, 1, 2] {
            let mut cases = vec![BetaClass::Zero];
            cases.extend(
                label_representatives(p)
                    .iter()
                    .map(|cl| BetaClass::Class(cl.label)),
            );
            for class in cases {
                match weight_distribution_closed(p, alpha, class) {
                    Ok(dist) => {
                        let a2 = a2_perp_closed(p, alpha, class).unwrap();
                        dist.pless_check(p.q, a2).unwrap();
                        assert_eq!(dist.total_nonzero(), p.q - 1);
                        reports += 1;
                    }
                    Err(Error::EmptyCode) => {
                        assert!(alpha == 0 && class == BetaClass::Zero && p.ell % 3 == 2 && m == 1)
                    }
                    Err(e) => panic!("{e}"),
                }
            }
        }
        assert!(
            reports >= 30,
            "only {} closed reports at ({}, {})",
            reports,
            ell,
            m
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {:?}", elapsed);
    report(
        11,
        "closed-form-only fields: exact templates + moment identities",
        format!("(5,2) q = 3^20 and (7,2) q = 3^42 in {:?}", elapsed),
    );
}

#[test]
fn verification_sweeps_have_no_failures() {
    // The full claim adjudication drives the acceptance narrative: every
    // discrepancy with the printed tables must surface as REINTERPRETED
    // (with both values) or SKIPPED (with a reason), never FAILED.
    for (ell, m) in [(5u64, 1u32), (7, 1)] {
        let c = ctx(ell, m);
        let summary = run_verify(&c, true).unwrap();
        assert_eq!(summary.failed(), 0, "failures at ({}, {})", ell, m);
        assert!(summary.count(Status::Reinterpreted) > 0);
    }
    for (ell, m) in [(5u64, 2u32), (7, 2), (17, 1), (19, 1)] {
        let c = ctx_closed(ell, m);
        let summary = run_verify(&c, false).unwrap();
        assert_eq!(summary.failed(), 0, "failures at ({}, {})", ell, m);
    }
}

#[test]
fn w_values_consistent_and_rational() {
    // w(α, β) agrees between the honest brute route and the class
    // templates, and is always a rational integer.
    for c in [ctx(5, 1), ctx(7, 1)] {
        for alpha in [0u8, 1, 2] {
            for j in 0..c.params.period {
                let beta = beta_for_j(&c, j);
                assert_eq!(j_beta_of(&c, &beta).unwrap(), j);
                let rep = w_value(&c, alpha, &beta).unwrap();
                assert!(rep.consistent && rep.value.is_rational());
            }
            let rep = w_value(&c, alpha, &c.zero()).unwrap();
            assert!(rep.consistent && rep.value.is_rational());
        }
    }
}

#[test]
fn defining_set_sizes_match_closed_lengths() {
    for c in [ctx(5, 1), ctx(7, 1)] {
        for (alpha, j, spec) in sweep_specs(&c) {
            let class = match j {
                None => BetaClass::Zero,
                Some(j) => BetaClass::Class(classify_j(&c.params, j).unwrap().label),
            };
            let closed = weilcodes::codes::code_length_closed(&c.params, alpha, class).unwrap();
            assert_eq!(closed, defining_set(&c, &spec).unwrap().len() as u128);
        }
    }
}
