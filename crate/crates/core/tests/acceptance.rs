//! Acceptance criteria. Runs every criterion, prints one PASS/FAIL line each
//! and exits non-zero if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{brute_alpha, random_graph, rng, theta_odd_cycle};
use exclusivity::graph::{
    complete, empty, find_isomorphism, make_circulant, make_cycle, make_prism,
    make_shrikhande_complement,
};
use exclusivity::invariants::{
    bounds_report, fractional_packing, maximal_cliques, BoundsOptions, BoundsReport,
};
use exclusivity::scenario::{builtin, exclusivity_graph, CliqueHypergraph};
use exclusivity::solvers::theta_sdp;
use exclusivity::structure::find_induced;
use exclusivity::{BigRational, Graph};
use num::ToPrimitive;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn q(p: i64, d: i64) -> BigRational {
    BigRational::new(p.into(), d.into())
}

fn near(value: f64, target: f64, tol: f64) -> bool {
    (value - target).abs() <= tol
}

/// Both ends of the certified bracket lie within `tol` of `target`.
fn theta_within(r: &BoundsReport, target: f64, tol: f64) -> Result<(f64, f64), String> {
    let t = r.theta.as_ref().map_err(|e| e.to_string())?;
    ensure(
        near(t.lower, target, tol) && near(t.upper, target, tol),
        format!(
            "theta bracket [{}, {}] not within {tol} of {target}",
            t.lower, t.upper
        ),
    )?;
    Ok((t.lower, t.upper))
}

fn alpha_star(r: &BoundsReport) -> Result<BigRational, String> {
    r.alpha_star
        .as_ref()
        .map(|p| p.value.clone())
        .map_err(|e| e.to_string())
}

fn compile(name: &str) -> Result<(Graph, CliqueHypergraph), String> {
    exclusivity_graph(&builtin(name).map_err(|e| e.to_string())?).map_err(|e| e.to_string())
}

fn opts(tol: f64) -> BoundsOptions {
    BoundsOptions {
        tol: Some(tol),
        ..Default::default()
    }
}

fn three_box() -> Check {
    let (g, gamma) = compile("three-box")?;
    ensure(
        find_isomorphism(&g, &make_prism()).is_some(),
        "compiled graph is not the prism",
    )?;
    let r = bounds_report(&g, Some(&gamma), &opts(1e-7));
    ensure(r.alpha.size == 2, format!("alpha = {}", r.alpha.size))?;
    let (lo, hi) = theta_within(&r, 2.0, 1e-6)?;
    ensure(alpha_star(&r)? == q(2, 1), "alpha* != 2")?;
    let ctx = r
        .alpha_star_gamma
        .as_ref()
        .unwrap()
        .as_ref()
        .map_err(|e| e.to_string())?;
    ensure(
        ctx.value == q(3, 1),
        format!("alpha*(G, contexts) = {}", ctx.value),
    )?;
    ensure(ctx.certify(&g, &gamma), "context packing not certified")?;
    Ok(format!(
        "alpha=2 theta=[{lo:.9},{hi:.9}] alpha*=2 alpha*(contexts)=3"
    ))
}

fn kcbs() -> Check {
    let (g, _) = compile("kcbs")?;
    ensure(
        find_isomorphism(&g, &make_cycle(5).unwrap()).is_some(),
        "compiled graph is not C5",
    )?;
    let r = bounds_report(&g, None, &opts(1e-7));
    ensure(r.alpha.size == 2 && brute_alpha(&g) == 2, "alpha != 2")?;
    let (lo, hi) = theta_within(&r, 5f64.sqrt(), 1e-6)?;
    ensure(alpha_star(&r)? == q(5, 2), "alpha* != 5/2")?;
    Ok(format!("alpha=2 theta=[{lo:.9},{hi:.9}] alpha*=5/2"))
}

fn kcbs_product() -> Check {
    let c5 = make_cycle(5).unwrap();
    let g = c5.or_product(&c5);
    let r = bounds_report(&g, None, &opts(1e-5));
    let (lo, hi) = theta_within(&r, 5.0, 1e-4)?;
    ensure(alpha_star(&r)? == q(5, 1), "alpha*(C5*C5) != 5")?;
    ensure(
        r.specker_saturation() == Some(true),
        "saturation flag not set",
    )?;
    Ok(format!("theta=[{lo:.7},{hi:.7}] alpha*=5 saturated"))
}

fn mermin() -> Check {
    let (g, _) = compile("mermin")?;
    ensure(g.order() == 16, "expected 16 events")?;
    ensure(
        find_isomorphism(&g, &make_shrikhande_complement()).is_some(),
        "compiled graph is not the Shrikhande complement",
    )?;
    let r = bounds_report(&g, None, &opts(1e-7));
    ensure(r.alpha.size == 3, format!("alpha = {}", r.alpha.size))?;
    let (lo, hi) = theta_within(&r, 4.0, 1e-6)?;
    ensure(alpha_star(&r)? == q(4, 1), "alpha* != 4")?;
    ensure(
        r.quantum_classical_separation() == Some(true),
        "separation flag not set",
    )?;
    Ok(format!(
        "alpha=3 theta=[{lo:.9},{hi:.9}] alpha*=4 separated"
    ))
}

fn chsh() -> Check {
    let (g, _) = compile("chsh")?;
    let ci8 = make_circulant(8, &[1, 4]).unwrap();
    ensure(
        find_isomorphism(&g, &ci8).is_some(),
        "compiled graph is not Ci8(1,4)",
    )?;
    let r = bounds_report(&g, None, &opts(1e-7));
    ensure(r.alpha.size == 3 && brute_alpha(&g) == 3, "alpha != 3")?;
    let oracle = (6.0 + 4.0 * 2f64.sqrt()).sqrt();
    ensure(near(oracle, 2.0 + 2f64.sqrt(), 1e-12), "oracle mismatch")?;
    let (lo, hi) = theta_within(&r, oracle, 1e-6)?;
    ensure(alpha_star(&r)? == q(4, 1), "alpha* != 4")?;
    Ok(format!(
        "alpha=3 theta=[{lo:.9},{hi:.9}] alpha*=4 (PR value 4 not excluded)"
    ))
}

fn pr_box_exclusion() -> Check {
    let ci8 = make_circulant(8, &[1, 4]).unwrap();
    let g = ci8.or_product(&ci8);
    let r = bounds_report(&g, None, &BoundsOptions::default());
    let star = r.alpha_star.as_ref().map_err(|e| e.to_string())?;
    ensure(star.value == q(64, 5), format!("alpha* = {}", star.value))?;
    let gamma = CliqueHypergraph::new(&g, maximal_cliques(&g).unwrap()).unwrap();
    ensure(star.certify(&g, &gamma), "packing not certified by duality")?;
    let (lo, hi) = theta_within(&r, 6.0 + 4.0 * 2f64.sqrt(), 1e-3)?;
    // uniform PR weights 1/4 on all 64 events, total 16
    let pr = q(1, 4);
    let violated = gamma
        .cliques()
        .iter()
        .find(|c| pr.clone() * BigRational::from_integer((c.len() as i64).into()) > q(1, 1))
        .ok_or("no clique constraint violated by the PR weights")?;
    ensure(
        violated.len() >= 5 && g.is_clique(violated),
        "violating set is not a 5-clique",
    )?;
    Ok(format!(
        "alpha*=64/5 theta=[{lo:.6},{hi:.6}] PR total 16 violates clique {violated:?}"
    ))
}

fn induced_c5() -> Check {
    let host = make_circulant(8, &[1, 4]).unwrap();
    let c5 = make_cycle(5).unwrap();
    let w = find_induced(&host, &c5, "C5")
        .map_err(|e| e.to_string())?
        .ok_or("no witness")?;
    ensure(w.verify(&host, &c5), "witness does not verify")?;
    Ok(format!("C5 on {:?}", w.vertices))
}

fn sandwich() -> Check {
    let mut r = rng(2024);
    let mut count = 0;
    for trial in 0..120 {
        let n = 1 + trial % 12;
        let g = random_graph(&mut r, n, [0.2, 0.35, 0.5, 0.65, 0.8][trial % 5]);
        let alpha = brute_alpha(&g) as f64;
        let t = theta_sdp(&g, 1e-7).map_err(|e| format!("trial {trial}: {e}"))?;
        let gamma = CliqueHypergraph::new(&g, maximal_cliques(&g).unwrap()).unwrap();
        let p = fractional_packing(&g, &gamma).map_err(|e| e.to_string())?;
        ensure(
            p.certify(&g, &gamma),
            format!("trial {trial}: LP not certified"),
        )?;
        let star = p.value.to_f64().unwrap();
        let theta = t.midpoint();
        ensure(
            alpha <= theta + 1e-6 && theta + 1e-6 <= star + 2e-6,
            format!("trial {trial}: alpha={alpha} theta={theta} alpha*={star}"),
        )?;
        count += 1;
    }
    Ok(format!("{count} random graphs, n <= 12"))
}

fn theta_oracles() -> Check {
    for m in [5, 7, 9] {
        let b = theta_sdp(&make_cycle(m).unwrap(), 1e-7).map_err(|e| e.to_string())?;
        let want = theta_odd_cycle(m);
        ensure(
            near(b.lower, want, 1e-6) && near(b.upper, want, 1e-6),
            format!("C{m}: [{}, {}] vs {want}", b.lower, b.upper),
        )?;
    }
    for n in 1..=8 {
        let k = theta_sdp(&complete(n), 1e-9).map_err(|e| e.to_string())?;
        ensure(
            near(k.lower, 1.0, 1e-8) && near(k.upper, 1.0, 1e-8),
            format!("K{n}"),
        )?;
        let e = theta_sdp(&empty(n), 1e-9).map_err(|e| e.to_string())?;
        let nf = n as f64;
        ensure(
            near(e.lower, nf, 1e-8) && near(e.upper, nf, 1e-8),
            format!("empty {n}"),
        )?;
    }
    Ok("C5,C7,C9 closed form; K_n = 1, empty_n = n for n <= 8".into())
}

fn multiplicativity() -> Check {
    let mut parts = Vec::new();
    for (label, g) in [
        ("C5", make_cycle(5).unwrap()),
        ("Ci8(1,4)", make_circulant(8, &[1, 4]).unwrap()),
    ] {
        let single = theta_sdp(&g, 1e-6).map_err(|e| e.to_string())?.midpoint();
        let prod = theta_sdp(&g.or_product(&g), 1e-5)
            .map_err(|e| e.to_string())?
            .midpoint();
        let diff = (prod - single * single).abs();
        ensure(
            diff <= 1e-3,
            format!("{label}: |{prod} - {single}^2| = {diff}"),
        )?;
        parts.push(format!("{label}: {diff:.2e}"));
    }
    Ok(parts.join(", "))
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Check,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            id: 1,
            name: "three-box game",
            limit: Duration::from_secs(1),
            run: three_box,
        },
        Criterion {
            id: 2,
            name: "KCBS",
            limit: Duration::from_secs(1),
            run: kcbs,
        },
        Criterion {
            id: 3,
            name: "KCBS product",
            limit: Duration::from_secs(10),
            run: kcbs_product,
        },
        Criterion {
            id: 4,
            name: "Mermin",
            limit: Duration::from_secs(10),
            run: mermin,
        },
        Criterion {
            id: 5,
            name: "CHSH single copy",
            limit: Duration::from_secs(2),
            run: chsh,
        },
        Criterion {
            id: 6,
            name: "PR-box exclusion",
            limit: Duration::from_secs(60),
            run: pr_box_exclusion,
        },
        Criterion {
            id: 7,
            name: "induced C5 in CHSH",
            limit: Duration::from_secs(1),
            run: induced_c5,
        },
        Criterion {
            id: 8,
            name: "sandwich suite",
            limit: Duration::from_secs(60),
            run: sandwich,
        },
        Criterion {
            id: 9,
            name: "theta oracles",
            limit: Duration::from_secs(5),
            run: theta_oracles,
        },
        Criterion {
            id: 10,
            name: "multiplicativity",
            limit: Duration::from_secs(60),
            run: multiplicativity,
        },
    ];

    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|detail| {
            if elapsed <= c.limit {
                Ok(detail)
            } else {
                Err(format!("{detail}; took {elapsed:?}, limit {:?}", c.limit))
            }
        });
        match outcome {
            Ok(detail) => println!(
                "PASS  {:>2} {:<20} {:>9.1?}  {detail}",
                c.id, c.name, elapsed
            ),
            Err(why) => {
                failed += 1;
                println!("FAIL  {:>2} {:<20} {:>9.1?}  {why}", c.id, c.name, elapsed);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
