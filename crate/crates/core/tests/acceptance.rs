//! Acceptance suite. Every criterion runs at zero tolerance over ℚ or
//! ℚ(i,√2) and prints one PASS/FAIL line; the process exits nonzero if any
//! criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use qksl_core::clifford::{build_frame, check_right_inverses, check_summe, check_wedge_identities, Clifford};
use qksl_core::dims::check_dimensions;
use qksl_core::killing::{
    check_curvature_term_vanishing, check_killing_curvature, check_laplace, check_skew_hermitian, CurvatureModel,
    Quartic,
};
use qksl_core::rep_spaces::{
    check_kom1, check_kom2, check_operator_identity, check_pr_tilde_k, check_projector_relations_e,
    check_projector_relations_h, check_wedge_circ, PrimitiveCalculus,
};
use qksl_core::scalars::q;
use qksl_core::weitzenbock::{
    check_twistor_corollary, d_minus_minus_closed_form, derive_min_identity, min_identity_targets,
    solve_limiting_system, solve_psi_minus_row,
};
use qksl_core::wolf::{
    build_classical_wolf, check_classical_family, check_trace_identity, check_wolf_table, curvature_endomorphism,
    wolf_row, wolf_table, ClassicalFamily, Regularity,
};
use qksl_core::{Report, Result, Status};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<Report>;
type Criterion = (&'static str, fn() -> Outcome);

fn c1_operator_calculus() -> Outcome {
    let mut rep = Report::new();
    for n in 2..=4usize {
        let pc = PrimitiveCalculus::new(n)?;
        for s in 0..=n as i32 {
            rep.absorb(&format!("n={n} s={s} kom1"), check_kom1(&pc, s)?);
            if s < n as i32 {
                rep.absorb(&format!("n={n} s={s} e∧_∘"), check_wedge_circ(&pc, s)?);
            }
            if s >= 2 {
                rep.absorb(&format!("n={n} s={s} operator identity"), check_operator_identity(&pc, s)?);
            }
        }
    }
    for r in 0..=4 {
        rep.absorb(&format!("r={r} kom2"), check_kom2(r)?);
    }
    Ok(rep)
}

fn c2_number_operators() -> Outcome {
    let mut rep = Report::new();
    for n in 2..=3usize {
        let cl = Clifford::new(n)?;
        let frame = build_frame(&cl)?;
        for r in 0..=3 {
            for s in 0..=n as i32 {
                rep.absorb(&format!("n={n}"), check_summe(&cl, &frame, r, s)?);
            }
        }
    }
    Ok(rep)
}

fn c3_right_inverses() -> Outcome {
    let mut rep = Report::new();
    for n in 2..=3usize {
        let cl = Clifford::new(n)?;
        let frame = build_frame(&cl)?;
        for r in 0..=n as i32 {
            rep.absorb(&format!("n={n} r={r}"), check_right_inverses(&cl, &frame, r)?);
        }
    }
    Ok(rep)
}

fn c4_projectors() -> Outcome {
    let mut rep = Report::new();
    for r in 0..=3 {
        rep.absorb(&format!("r={r} H-side"), check_projector_relations_h(r)?);
    }
    for n in 2..=3usize {
        let pc = PrimitiveCalculus::new(n)?;
        for s in 2..=n as i32 {
            rep.absorb(&format!("n={n} s={s} E-side"), check_projector_relations_e(&pc, s)?);
        }
        for s in 1..=n as i32 {
            rep.absorb(&format!("n={n} s={s} p̃r_K"), check_pr_tilde_k(&pc, s)?);
        }
    }
    Ok(rep)
}

fn c5_curvature_term() -> Outcome {
    let mut rep = Report::new();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in 2..=3usize {
        let cl = Clifford::new(n)?;
        for s in 2..=n as i32 {
            for r in 0..=2 {
                rep.absorb(&format!("n={n} r={r} s={s}"), check_curvature_term_vanishing(&cl, r, s, &mut rng)?);
            }
        }
    }
    Ok(rep)
}

fn c6_weitzenbock() -> Outcome {
    let mut rep = Report::new();
    for n in 2..=6usize {
        for r in 1..n as i32 {
            let found = derive_min_identity(n, r)?;
            let (targets, lhs) = min_identity_targets(n, r);
            let ok = !found.is_empty()
                && found.iter().all(|m| {
                    m.lhs == lhs.to_string() && m.coefficients.iter().zip(&targets).all(|((_, c), t)| *c == t.to_string())
                });
            rep.check(format!("n={n} r={r} key identity"), ok, || format!("{found:?}"));
        }
    }
    for n in 2..=8usize {
        let sol = solve_limiting_system(n)?;
        rep.check(
            format!("n={n} (D⁻₋)*D⁻₋ψ₁ = (κ/2)(n+4)(n−1)/(n(n+2))ψ₁"),
            sol.d_minus_minus == d_minus_minus_closed_form(n),
            || format!("got {}κ", sol.d_minus_minus),
        );
        rep.check(format!("n={n} (T⁻)*T⁻ψ₁ = 0"), sol.t_minus == q(0, 1), || format!("got {}κ", sol.t_minus));
        rep.absorb(&format!("n={n} ψ₋ row"), solve_psi_minus_row(n)?);
    }
    for n in 2..=4usize {
        for s in 2..=n as i32 {
            for r in 0..=3 {
                rep.absorb(&format!("n={n} r={r} s={s} corollary"), check_twistor_corollary(n, r, s)?);
            }
        }
    }
    Ok(rep)
}

fn c7_killing_curvature() -> Outcome {
    let mut rep = Report::new();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 2..=3usize {
        let cl = Clifford::new(n)?;
        let kappa = q(2 * n as i64, 1);
        rep.absorb(&format!("n={n} ℍPⁿ"), check_killing_curvature(&cl, &CurvatureModel::projective(n, kappa.clone()))?);
        for k in 0..5 {
            let model = CurvatureModel::new(n, q(k as i64 - 2, 3), Quartic::random(2 * n, &mut rng))?;
            rep.absorb(&format!("n={n} random 𝔎 #{k}"), check_killing_curvature(&cl, &model)?);
        }
        rep.absorb(&format!("n={n} wedge identities"), check_wedge_identities(&cl, 3, &mut rng)?);
    }
    Ok(rep)
}

fn c8_laplace_hermitian() -> Outcome {
    let mut rep = Report::new();
    for n in 2..=8usize {
        rep.absorb(&format!("n={n} Δ"), check_laplace(n)?);
    }
    for n in 2..=3usize {
        let cl = Clifford::new(n)?;
        rep.absorb(&format!("n={n} G"), check_skew_hermitian(&cl, &build_frame(&cl)?)?);
    }
    Ok(rep)
}

fn c9_wolf() -> Outcome {
    let mut rep = Report::new();
    for n in 2..=3usize {
        let table = wolf_table(n)?;
        for (row, family) in ClassicalFamily::ALL.into_iter().enumerate() {
            let tag = format!("{} n={n}", family.name());
            rep.absorb(&tag, check_classical_family(family, n)?);
            let (g, cd) = build_classical_wolf(family, n)?;
            let (rho, _) = curvature_endomorphism(&g, &cd)?;
            let listed = &table[row].rho_tabulated;
            rep.check(format!("{tag}: ρ eigenvalues match the table"), &rho.eigenvalues == listed, || {
                format!("{:?}", rho.eigenvalues.iter().map(|x| x.to_string()).collect::<Vec<_>>())
            });
        }
        rep.absorb(&format!("table n={n}"), check_wolf_table(n)?);
        let degenerate: Vec<String> = table
            .iter()
            .filter(|e| wolf_row(e).map(|r| r.verdict == Regularity::Degenerate).unwrap_or(false))
            .map(|e| e.name.clone())
            .collect();
        rep.check(format!("n={n}: only ℍPⁿ is degenerate"), degenerate == [table[0].name.clone()], || {
            format!("{degenerate:?}")
        });
    }
    let table = wolf_table(2)?;
    for (prefix, want) in [("F4", q(4, 9)), ("E6", q(1, 2)), ("E7", q(5, 9)), ("E8", q(3, 5)), ("G2", q(1, 6))] {
        let entry = table.iter().find(|e| e.name.starts_with(prefix)).expect("entry present");
        let tr = check_trace_identity(entry)?;
        let got = tr.solved.map(|k| tr.l[k].clone());
        rep.check(format!("{prefix}: solved l = {want}"), got.as_ref() == Some(&want), || format!("{got:?}"));
    }
    Ok(rep)
}

fn c10_dimensions() -> Outcome {
    let mut rep = Report::new();
    for n in 1..=4usize {
        rep.absorb(&format!("n={n}"), check_dimensions(n)?);
    }
    Ok(rep)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("operator calculus", c1_operator_calculus),
        ("number operators", c2_number_operators),
        ("right inverses", c3_right_inverses),
        ("projectors", c4_projectors),
        ("curvature term", c5_curvature_term),
        ("Weitzenböck coefficients", c6_weitzenbock),
        ("Killing curvature", c7_killing_curvature),
        ("Laplace and hermitian", c8_laplace_hermitian),
        ("Wolf spaces", c9_wolf),
        ("dimensions", c10_dimensions),
    ];
    let results: Vec<(Outcome, u128)> = std::thread::scope(|scope| {
        let handles: Vec<_> = criteria
            .iter()
            .map(|(_, f)| {
                scope.spawn(move || {
                    let t = Instant::now();
                    let out = f();
                    (out, t.elapsed().as_millis())
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("criterion panicked")).collect()
    });
    let mut all = true;
    for (k, ((name, _), (out, ms))) in criteria.iter().zip(&results).enumerate() {
        let line = match out {
            Ok(rep) if rep.passed() => format!(
                "PASS  {} checks, {} skipped",
                rep.count(Status::Pass),
                rep.count(Status::Skipped)
            ),
            Ok(rep) => {
                let f = rep.first_failure().expect("a failed check");
                format!("FAIL  {} of {} checks failed; first: {} ({})", rep.count(Status::Fail), rep.checks.len(), f.name, f.detail.clone().unwrap_or_default())
            }
            Err(e) => format!("FAIL  error: {e}"),
        };
        all &= line.starts_with("PASS");
        println!("criterion {:>2} [{name}] tolerance 0 (exact): {line}  [{ms} ms]", k + 1);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
