//! The reference suite: every headline value recomputed and compared.

use std::collections::BTreeMap;
use std::time::Instant;

use exclusivity::graph::{
    complete, empty, find_isomorphism, make_circulant, make_cycle, make_prism,
    make_shrikhande_complement,
};
use exclusivity::invariants::{
    bounds_report, independence_number, maximal_cliques, rational_to_f64, BoundsOptions,
    BoundsReport,
};
use exclusivity::scenario::{builtin, exclusivity_graph, CliqueHypergraph, Scenario};
use exclusivity::solvers::theta_sdp;
use exclusivity::structure::find_induced;
use exclusivity::{BigRational, Graph, Result};
use num::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::report::{millis, Claim, GraphStats, Rational, SpotEntry, SuiteSection};

#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    /// Comparison tolerance for every floating-point claim. When unset each
    /// claim uses its own default (1e-6, 1e-4 or 1e-3).
    pub tol: Option<f64>,
    /// Builtin scenario to sabotage by dropping its last event.
    pub corrupt_builtin: Option<String>,
    pub spot_data: bool,
}

struct Suite<'a> {
    opts: &'a SuiteOptions,
    criterion: u32,
    claims: Vec<Claim>,
}

impl Suite<'_> {
    fn tol(&self, default: f64) -> f64 {
        self.opts.tol.unwrap_or(default)
    }

    /// Bounds at a solver tolerance one decade tighter than the comparison.
    fn bounds(&self, g: &Graph, gamma: Option<&CliqueHypergraph>, cmp_tol: f64) -> BoundsReport {
        let opts = BoundsOptions {
            tol: Some(cmp_tol / 10.0),
            ..Default::default()
        };
        bounds_report(g, gamma, &opts)
    }

    fn claim(
        &mut self,
        name: impl Into<String>,
        expected: impl ToString,
        observed: impl ToString,
        pass: bool,
    ) {
        self.claims.push(Claim {
            criterion: self.criterion,
            name: name.into(),
            expected: expected.to_string(),
            observed: observed.to_string(),
            pass,
        });
    }

    fn isomorphic(&mut self, g: &Graph, to: &Graph, label: &str) {
        let ok = find_isomorphism(g, to).is_some();
        let observed = format!("n={} e={}", g.order(), g.edge_count());
        self.claim(
            format!("graph is {label}"),
            label,
            if ok { label.to_string() } else { observed },
            ok,
        );
    }

    fn alpha(&mut self, r: &BoundsReport, want: usize) {
        self.claim("alpha", want, r.alpha.size, r.alpha.size == want);
    }

    fn theta(&mut self, label: &str, r: &BoundsReport, want: f64, tol: f64) {
        match &r.theta {
            Ok(t) => {
                let ok = (t.lower - want).abs() <= tol && (t.upper - want).abs() <= tol;
                self.claim(
                    format!("{label} within {tol:e}"),
                    format!("{want:.9}"),
                    format!("[{:.9}, {:.9}]", t.lower, t.upper),
                    ok,
                );
            }
            Err(e) => self.claim(
                format!("{label} within {tol:e}"),
                format!("{want:.9}"),
                e,
                false,
            ),
        }
    }

    fn packing(
        &mut self,
        name: &str,
        p: Option<&Result<exclusivity::invariants::Packing>>,
        want: (i64, i64),
    ) {
        let want = BigRational::new(want.0.into(), want.1.into());
        let shown = Rational::new(&want).exact;
        match p {
            Some(Ok(p)) => self.claim(name, shown, Rational::new(&p.value).exact, p.value == want),
            Some(Err(e)) => self.claim(name, shown, e, false),
            None => self.claim(name, shown, "not computed", false),
        }
    }

    fn flag(&mut self, name: &str, observed: Option<bool>) {
        let text = observed.map_or("n/a".to_string(), |b| b.to_string());
        self.claim(name, true, text, observed == Some(true));
    }
}

fn compiled(name: &str, opts: &SuiteOptions) -> Result<(Graph, CliqueHypergraph)> {
    let mut s = builtin(name)?;
    if opts.corrupt_builtin.as_deref() == Some(name) {
        let mut events = s.events().to_vec();
        events.pop();
        s = Scenario::new(events, s.contexts().map(<[_]>::to_vec))?;
    }
    exclusivity_graph(&s)
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("valid random edges")
}

fn midpoint(r: &BoundsReport) -> Option<f64> {
    r.theta.as_ref().ok().map(|t| t.midpoint())
}

pub fn run_suite(opts: &SuiteOptions, timing: &mut BTreeMap<String, f64>) -> SuiteSection {
    let mut suite = Suite {
        opts,
        criterion: 0,
        claims: Vec::new(),
    };
    let sqrt2 = 2f64.sqrt();
    // theta midpoints reused by the multiplicativity check
    let mut theta_c5 = None;
    let mut theta_c5_sq = None;
    let mut theta_ci8 = None;
    let mut theta_ci8_sq = None;

    let mut stage = |suite: &mut Suite, name: &str, f: &mut dyn FnMut(&mut Suite)| {
        suite.criterion += 1;
        let start = Instant::now();
        f(suite);
        timing.insert(
            format!("{:02} {name}", suite.criterion),
            millis(start.elapsed()),
        );
    };

    stage(
        &mut suite,
        "three-box",
        &mut |s| match compiled("three-box", opts) {
            Ok((g, gamma)) => {
                s.isomorphic(&g, &make_prism(), "prism");
                let tol = s.tol(1e-6);
                let r = s.bounds(&g, Some(&gamma), tol);
                s.alpha(&r, 2);
                s.theta("theta", &r, 2.0, tol);
                s.packing("alpha* over cliques", Some(&r.alpha_star), (2, 1));
                s.packing("alpha* over contexts", r.alpha_star_gamma.as_ref(), (3, 1));
            }
            Err(e) => s.claim("compile three-box", "ok", e, false),
        },
    );

    stage(&mut suite, "kcbs", &mut |s| match compiled("kcbs", opts) {
        Ok((g, _)) => {
            s.isomorphic(&g, &make_cycle(5).unwrap(), "C5");
            let tol = s.tol(1e-6);
            let r = s.bounds(&g, None, tol);
            s.alpha(&r, 2);
            s.theta("theta", &r, 5f64.sqrt(), tol);
            s.packing("alpha*", Some(&r.alpha_star), (5, 2));
            theta_c5 = midpoint(&r);
        }
        Err(e) => s.claim("compile kcbs", "ok", e, false),
    });

    stage(
        &mut suite,
        "kcbs product",
        &mut |s| match compiled("kcbs", opts) {
            Ok((g, _)) => {
                let tol = s.tol(1e-4);
                let r = s.bounds(&g.or_product(&g), None, tol);
                s.theta("theta", &r, 5.0, tol);
                s.packing("alpha*", Some(&r.alpha_star), (5, 1));
                s.flag("theta saturates alpha*", r.specker_saturation());
                theta_c5_sq = midpoint(&r);
            }
            Err(e) => s.claim("compile kcbs", "ok", e, false),
        },
    );

    stage(
        &mut suite,
        "mermin",
        &mut |s| match compiled("mermin", opts) {
            Ok((g, _)) => {
                s.isomorphic(&g, &make_shrikhande_complement(), "Shrikhande complement");
                let tol = s.tol(1e-6);
                let r = s.bounds(&g, None, tol);
                s.alpha(&r, 3);
                s.theta("theta", &r, 4.0, tol);
                s.packing("alpha*", Some(&r.alpha_star), (4, 1));
                s.flag(
                    "quantum-classical separation",
                    r.quantum_classical_separation(),
                );
            }
            Err(e) => s.claim("compile mermin", "ok", e, false),
        },
    );

    let chsh = compiled("chsh", opts);
    stage(&mut suite, "chsh", &mut |s| match &chsh {
        Ok((g, _)) => {
            s.isomorphic(g, &make_circulant(8, &[1, 4]).unwrap(), "Ci8(1,4)");
            let tol = s.tol(1e-6);
            let r = s.bounds(g, None, tol);
            s.alpha(&r, 3);
            s.theta("theta", &r, 2.0 + sqrt2, tol);
            s.packing("alpha*", Some(&r.alpha_star), (4, 1));
            theta_ci8 = midpoint(&r);
        }
        Err(e) => s.claim("compile chsh", "ok", e, false),
    });

    stage(&mut suite, "pr-box exclusion", &mut |s| match &chsh {
        Ok((g, _)) => {
            let g2 = g.or_product(g);
            let tol = s.tol(1e-3);
            let r = s.bounds(&g2, None, tol);
            s.packing("alpha* of two copies", Some(&r.alpha_star), (64, 5));
            s.theta("theta", &r, 6.0 + 4.0 * sqrt2, tol);
            theta_ci8_sq = midpoint(&r);
            // uniform weight 1/4 breaks any clique of five or more events
            let quarter = BigRational::new(1.into(), 4.into());
            let violated = maximal_cliques(&g2).ok().and_then(|cliques| {
                cliques.into_iter().find(|c| {
                    quarter.clone() * BigRational::from_integer(c.len().into()) > BigRational::one()
                })
            });
            match violated {
                Some(c) => s.claim(
                    "PR weights violate a clique",
                    "clique of size >= 5",
                    format!("{c:?}"),
                    true,
                ),
                None => s.claim(
                    "PR weights violate a clique",
                    "clique of size >= 5",
                    "none",
                    false,
                ),
            }
        }
        Err(e) => s.claim("compile chsh", "ok", e, false),
    });

    stage(&mut suite, "induced C5", &mut |s| match &chsh {
        Ok((g, _)) => {
            let c5 = make_cycle(5).unwrap();
            match find_induced(g, &c5, "C5") {
                Ok(Some(w)) if w.verify(g, &c5) => s.claim(
                    "induced C5 in CHSH graph",
                    "witness",
                    format!("{:?}", w.vertices),
                    true,
                ),
                Ok(Some(w)) => s.claim(
                    "induced C5 in CHSH graph",
                    "witness",
                    format!("bad witness {:?}", w.vertices),
                    false,
                ),
                Ok(None) => s.claim("induced C5 in CHSH graph", "witness", "none", false),
                Err(e) => s.claim("induced C5 in CHSH graph", "witness", e, false),
            }
        }
        Err(e) => s.claim("compile chsh", "ok", e, false),
    });

    stage(&mut suite, "sandwich", &mut |s| {
        let tol = s.tol(1e-6);
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let mut bad = None;
        let trials = 100;
        for trial in 0..trials {
            let n = 1 + trial % 12;
            let p = rng.random_range(0.15..0.85);
            let g = random_graph(&mut rng, n, p);
            let alpha = independence_number(&g).size as f64;
            let r = s.bounds(&g, None, tol);
            let ok = match (&r.theta, &r.alpha_star) {
                (Ok(t), Ok(p)) => {
                    let star = rational_to_f64(&p.value);
                    let gamma = CliqueHypergraph::new(&g, maximal_cliques(&g).unwrap()).unwrap();
                    alpha <= t.midpoint() + tol
                        && t.midpoint() <= star + tol
                        && p.certify(&g, &gamma)
                }
                _ => false,
            };
            if !ok && bad.is_none() {
                bad = Some(trial);
            }
        }
        let observed = bad.map_or(format!("{trials} graphs ok"), |t| {
            format!("graph {t} fails")
        });
        s.claim(
            "alpha <= theta <= alpha* on random graphs",
            format!("{trials} graphs ok"),
            observed,
            bad.is_none(),
        );
    });

    stage(&mut suite, "theta oracles", &mut |s| {
        let tol = s.tol(1e-6);
        for m in [5usize, 7, 9] {
            let mf = m as f64;
            let want =
                mf * (std::f64::consts::PI / mf).cos() / (1.0 + (std::f64::consts::PI / mf).cos());
            let r = s.bounds(&make_cycle(m).unwrap(), None, tol);
            s.theta(&format!("theta(C{m})"), &r, want, tol);
        }
        let tol = s.tol(1e-8);
        let mut ok = true;
        for n in 1..=8 {
            let check = |g: &Graph, want: f64| {
                theta_sdp(g, tol / 10.0)
                    .is_ok_and(|t| (t.lower - want).abs() <= tol && (t.upper - want).abs() <= tol)
            };
            ok &= check(&complete(n), 1.0) && check(&empty(n), n as f64);
        }
        s.claim(
            format!("theta(K_n) = 1, theta(empty_n) = n within {tol:e}"),
            "n <= 8",
            if ok { "ok" } else { "mismatch" },
            ok,
        );
    });

    stage(&mut suite, "multiplicativity", &mut |s| {
        let tol = s.tol(1e-3);
        for (label, single, square) in [
            ("C5", theta_c5, theta_c5_sq),
            ("Ci8(1,4)", theta_ci8, theta_ci8_sq),
        ] {
            match (single, square) {
                (Some(a), Some(b)) => {
                    let diff = (b - a * a).abs();
                    s.claim(
                        format!("theta({label} * {label}) = theta^2"),
                        format!("diff <= {tol:e}"),
                        format!("{diff:.2e}"),
                        diff <= tol,
                    );
                }
                _ => s.claim(
                    format!("theta({label} * {label}) = theta^2"),
                    format!("diff <= {tol:e}"),
                    "theta unavailable",
                    false,
                ),
            }
        }
    });

    let mut spot_data = Vec::new();
    if opts.spot_data {
        let start = Instant::now();
        for m in [5usize, 7] {
            let base = make_cycle(m).unwrap().complement();
            for power in 1..=2 {
                let g = if power == 1 {
                    base.clone()
                } else {
                    base.or_product(&base)
                };
                let r = bounds_report(&g, None, &BoundsOptions::default());
                spot_data.push(SpotEntry {
                    graph: format!("anti-C{m}^{power}"),
                    stats: GraphStats::of(&g),
                    alpha: r.alpha.size,
                    theta: r.theta.as_ref().ok().map(|t| [t.lower, t.upper]),
                    alpha_star: r.alpha_star.as_ref().ok().map(|p| Rational::new(&p.value)),
                });
            }
        }
        timing.insert("spot data".into(), millis(start.elapsed()));
    }

    SuiteSection {
        claims: suite.claims,
        spot_data,
    }
}
