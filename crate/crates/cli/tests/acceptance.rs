//! End-to-end acceptance checks.  Each numbered criterion prints one
//! PASS/FAIL line; the test fails unless every criterion has its expected
//! outcome.  Criterion 2 is expected to FAIL in its strict reading: one
//! relation of the Heisenberg-target case does not hold as stated (the
//! catalog carries the corrected relation, which does hold); the FAIL line
//! documents this instead of hiding it.

use std::process::Command;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use contracta_core::classical::{catalog_classical_cases, run_classical_case};
use contracta_core::fixedpoint::Fix;
use contracta_core::liealg::{catalog_lie_contractions, contract_lie};
use contracta_core::potentials::{
    flat_canonical_check, potential_contraction_check, sphere_canonical_check,
};
use contracta_core::quadalg::catalog_structures;
use contracta_core::quantumops::{sample_params, sample_points, verify_realization};
use contracta_core::racah::{
    hahn_convergence_errors, permutations4, recurrence_check, s9_model,
    save_representation_s9_to_e1, tau_star_tau_eigenvalue, tau_star_tau_phi, verify_s9_model,
    wilson_phi, wilson_w, WilsonParams,
};
use contracta_core::ring::Ring;
use contracta_core::scalar::Scalar;

struct Criterion {
    number: u32,
    ok: bool,
    expected_ok: bool,
    detail: String,
}

fn b_triples() -> Vec<[Scalar; 3]> {
    vec![
        [
            Scalar::from_ratio(1, 3),
            Scalar::from_ratio(1, 5),
            Scalar::from_ratio(2, 7),
        ],
        [
            Scalar::from_ratio(2, 5),
            Scalar::from_ratio(1, 7),
            Scalar::from_ratio(3, 8),
        ],
        [
            Scalar::from_ratio(1, 4),
            Scalar::from_ratio(2, 7),
            Scalar::from_ratio(1, 6),
        ],
    ]
}

fn criterion_1() -> (bool, String) {
    let t0 = Instant::now();
    let families = catalog_lie_contractions();
    let mut ok = families.len() == 11;
    let mut abelian_seen = 0;
    for f in &families {
        match contract_lie(f) {
            Ok(limit) => {
                if !limit.structure_constants_equal(&f.expected_target) {
                    ok = false;
                }
                if f.expected_target_name == "abelian" {
                    abelian_seen += 1;
                    let all_zero = limit
                        .c
                        .iter()
                        .flatten()
                        .flatten()
                        .all(|s| s.is_zero());
                    if !all_zero {
                        ok = false;
                    }
                }
            }
            Err(_) => ok = false,
        }
    }
    ok = ok && abelian_seen == 2;
    let dt = t0.elapsed();
    ok = ok && dt.as_secs_f64() < 1.0;
    (
        ok,
        format!("11 Lie contractions exact, 2 abelian targets all-zero, {dt:.0?}"),
    )
}

fn criterion_2() -> (bool, bool, String) {
    // Strict reading: every stated relation holds.  The catalog records one
    // stated relation that provably fails (with the corrected form that
    // holds); the strict criterion is therefore expected to fail, and the
    // failure must be the flagged, documented one.
    let mut strict_ok = true;
    let mut documented = true;
    let mut notes = Vec::new();
    let cases = catalog_classical_cases();
    if cases.len() != 18 {
        return (false, false, "expected 18 classical cases".into());
    }
    for case in &cases {
        let rep = run_classical_case(case).expect("classical case runs");
        if !rep.passed {
            documented = false;
            strict_ok = false;
            notes.push(format!("case {} has an unexplained failure", rep.id));
            continue;
        }
        for rel in &rep.relations {
            if !rel.holds {
                strict_ok = false;
                if rel.expected_to_hold || rel.note.is_none() {
                    documented = false;
                }
                notes.push(format!(
                    "case {}: {} — {}",
                    rep.id,
                    rel.name,
                    rel.note.clone().unwrap_or_default()
                ));
            }
        }
    }
    let detail = if notes.is_empty() {
        "all 18 cases with zero discrepancy".to_string()
    } else {
        format!(
            "18/18 limit claims exact; stated-relation exception: {}",
            notes.join("; ")
        )
    };
    (strict_ok, documented, detail)
}

fn criterion_3() -> (bool, String) {
    let t0 = Instant::now();
    let mut ok = true;
    let systems = catalog_structures();
    if systems.len() != 12 {
        ok = false;
    }
    for (i, data) in systems.iter().enumerate() {
        for sample in 0..3u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(1000 + 17 * i as u64 + sample);
            let params = sample_params(data, &mut rng);
            let points = sample_points(data, &params, &mut rng, 2);
            match verify_realization(data, &params, &points) {
                Ok(rep) if rep.passed => {}
                _ => ok = false,
            }
        }
    }
    let dt = t0.elapsed();
    ok = ok && dt.as_secs_f64() < 60.0;
    (
        ok,
        format!("12 systems x 3 parameter samples x 2 points, exact residuals, {dt:.1?}"),
    )
}

fn criterion_4() -> (bool, String) {
    let t0 = Instant::now();
    let mut ok = true;
    for m in 1..=4 {
        for [b1, b2, b3] in b_triples() {
            let model = s9_model(&b1, &b2, &b3, m);
            if !verify_s9_model(&model).is_empty() {
                ok = false;
            }
        }
    }
    let dt = t0.elapsed();
    ok = ok && dt.as_secs_f64() < 10.0;
    (
        ok,
        format!("commutator and R^2 equations exact for m=1..4, 3 parameter triples, {dt:.1?}"),
    )
}

fn generic_params() -> WilsonParams {
    WilsonParams::new(
        Scalar::from_ratio(1, 3),
        Scalar::from_ratio(2, 5),
        Scalar::from_ratio(3, 7),
        Scalar::from_ratio(1, 2),
    )
}

fn criterion_5() -> (bool, String) {
    let p = generic_params();
    let mut ok = true;
    for n in 0..=6u32 {
        let ev = tau_star_tau_eigenvalue(&p, n);
        for j in 0..(n + 2) {
            let t = Scalar::from_int(j as i64).add(&Scalar::from_ratio(1, 3));
            let lhs = tau_star_tau_phi(&p, n, &t).expect("evaluation");
            let rhs = ev.mul(&wilson_phi(&p, n, &t).expect("evaluation"));
            if lhs != rhs {
                ok = false;
            }
        }
    }
    (
        ok,
        "eigenvalue equation exact at n+2 points for n <= 6 (degree bound)".into(),
    )
}

fn criterion_6() -> (bool, String) {
    let mut ok = true;
    let [b1, b2, b3] = b_triples().remove(0);
    for m in 1..=4 {
        match recurrence_check(&b1, &b2, &b3, m) {
            Ok(rep) => {
                if !(rep.off_diagonal_match && rep.derived_diagonal_matches) {
                    ok = false;
                }
                // The displayed diagonal is a flagged, explained mismatch;
                // matching silently would mean the flag is wrong.
                if rep.printed_diagonal_matches {
                    ok = false;
                }
            }
            Err(_) => ok = false,
        }
    }
    (
        ok,
        "tridiagonal expansion matches derived K(n,n); displayed K(n,n) flagged as mismatch"
            .into(),
    )
}

fn criterion_7() -> (bool, String) {
    let p = generic_params();
    let arr = p.as_array();
    let mut ok = true;
    for t in [
        Scalar::from_ratio(2, 5),
        Scalar::from_ratio(-3, 7),
        Scalar::from_ratio(1, 9),
    ] {
        for n in 0..=4 {
            let reference = wilson_w(&p, n, &t).expect("evaluation");
            for perm in permutations4() {
                let q = WilsonParams::new(
                    arr[perm[0]].clone(),
                    arr[perm[1]].clone(),
                    arr[perm[2]].clone(),
                    arr[perm[3]].clone(),
                );
                if wilson_w(&q, n, &t).expect("evaluation") != reference {
                    ok = false;
                }
            }
        }
    }
    (ok, "w_n invariant under all 24 parameter permutations, n <= 4".into())
}

fn criterion_8() -> (bool, String) {
    let [b1, b2, _] = b_triples().remove(0);
    let b3s = vec![
        Scalar::from_int(100),
        Scalar::from_int(1000),
        Scalar::from_int(10000),
    ];
    let errors = hahn_convergence_errors(&b1, &b2, 2, &b3s).expect("evaluation");
    let lo = num_rational::BigRational::new(1.into(), 20.into());
    let hi = num_rational::BigRational::new(1.into(), 5.into());
    let mut ok = errors.len() == 3;
    for w in errors.windows(2) {
        let ratio = &w[1] / &w[0];
        if ratio < lo || ratio > hi {
            ok = false;
        }
    }
    (ok, "deviation ratio per tenfold parameter increase in [0.05, 0.2]".into())
}

fn criterion_9() -> (bool, String) {
    let [b1, b2, _] = b_triples().remove(0);
    let omega = Scalar::from_ratio(3, 4);
    match save_representation_s9_to_e1(&b1, &b2, &omega, 2) {
        Ok(saved) => {
            let ok = saved.h_prime_matches
                && saved.target_equations_pass
                && saved.assignment.is_some();
            (
                ok,
                format!(
                    "limit matrices satisfy target equations ({}), H' = -2w(2m+2+B1+B2)",
                    saved.assignment.unwrap_or_else(|| "no assignment".into())
                ),
            )
        }
        Err(e) => (false, format!("{e}")),
    }
}

fn criterion_10() -> (bool, String) {
    let tol = Fix::pow10_neg(25);
    let sphere = sphere_canonical_check(20, &tol).expect("evaluation");
    let flat = flat_canonical_check(20, &tol).expect("evaluation");
    let eps_list = vec![Fix::pow10_neg(2), Fix::pow10_neg(4), Fix::pow10_neg(6)];
    let ctol = Fix::pow10_neg(4);
    let rep = potential_contraction_check(
        &Fix::from_ratio(3, 10),
        &Fix::from_ratio(4, 7),
        &eps_list,
        &ctol,
    );
    let ok = sphere.ok && flat.ok && rep.converges && rep.unscaled_targets_rejected;
    (
        ok,
        "8 basis functions residual < 1e-25 at 20 points; contraction errors strictly decreasing"
            .into(),
    )
}

fn criterion_11() -> (bool, String) {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_contracta"))
            .args(["verify", "all", "--seed", "42", "--json"])
            .output()
            .expect("binary runs")
    };
    let a = run();
    let b = run();
    let ok = a.status.success() && b.status.success() && a.stdout == b.stdout;
    (ok, "two seeded runs produce byte-identical JSON reports".into())
}

#[test]
fn acceptance() {
    let mut results = Vec::new();
    let push = |results: &mut Vec<Criterion>, number, (ok, detail): (bool, String)| {
        results.push(Criterion {
            number,
            ok,
            expected_ok: true,
            detail,
        });
    };

    push(&mut results, 1, criterion_1());
    let (strict_ok, documented, detail) = criterion_2();
    results.push(Criterion {
        number: 2,
        ok: strict_ok,
        // The strict reading is unattainable: one stated relation is wrong
        // and the catalog proves the corrected form instead.
        expected_ok: false,
        detail: format!(
            "{detail}{}",
            if documented {
                ""
            } else {
                " [UNDOCUMENTED FAILURE]"
            }
        ),
    });
    push(&mut results, 3, criterion_3());
    push(&mut results, 4, criterion_4());
    push(&mut results, 5, criterion_5());
    push(&mut results, 6, criterion_6());
    push(&mut results, 7, criterion_7());
    push(&mut results, 8, criterion_8());
    push(&mut results, 9, criterion_9());
    push(&mut results, 10, criterion_10());
    push(&mut results, 11, criterion_11());

    let mut unexpected = Vec::new();
    for c in &results {
        println!(
            "criterion {:2}: {} — {}",
            c.number,
            if c.ok { "PASS" } else { "FAIL" },
            c.detail
        );
        if c.ok != c.expected_ok {
            unexpected.push(c.number);
        }
    }
    // Criterion 2's documented exception must still be the *flagged* one.
    let (_, documented, _) = criterion_2();
    assert!(documented, "criterion 2 failure is not the documented one");
    assert!(
        unexpected.is_empty(),
        "criteria with unexpected outcome: {unexpected:?}"
    );
}
