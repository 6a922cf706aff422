//! The report document printed by every subcommand, as text or JSON.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use exclusivity::invariants::{rational_to_f64, BoundsReport, Packing};
use exclusivity::structure::InducedWitness;
use exclusivity::{BigRational, Error, Graph};
use serde::{Deserialize, Serialize};

pub const TOOL_VERSION: &str = concat!("excl ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool_version: String,
    pub input_descriptor: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph_stats: Option<GraphStats>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<BoundsSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<SearchSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub suite: Option<SuiteSection>,
    /// Wall time per stage, milliseconds.
    pub timing_ms: BTreeMap<String, f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphStats {
    pub n: usize,
    pub edges: usize,
}

impl GraphStats {
    pub fn of(g: &Graph) -> Self {
        GraphStats {
            n: g.order(),
            edges: g.edge_count(),
        }
    }
}

/// Exact value as `p/q` with an advisory decimal rendering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rational {
    pub exact: String,
    pub decimal: String,
}

impl Rational {
    pub fn new(q: &BigRational) -> Self {
        Rational {
            exact: format!("{}/{}", q.numer(), q.denom()),
            decimal: significant(rational_to_f64(q), 10),
        }
    }
}

/// `x` rounded to `digits` significant digits, fixed notation.
pub fn significant(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ThetaSection {
    /// Certified `[lower, upper]`.
    pub bracket: [f64; 2],
    pub iterations: usize,
    /// Set when the solver stopped early; the bracket is then the best one
    /// it reached.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PackingSection {
    pub value: Rational,
    pub weights: Vec<Rational>,
    /// Vertices outside every hyperedge.
    pub uncovered: Vec<usize>,
}

impl PackingSection {
    pub fn new(p: &Packing) -> Self {
        PackingSection {
            value: Rational::new(&p.value),
            weights: p.weights.iter().map(Rational::new).collect(),
            uncovered: p.uncovered.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundsSection {
    pub tol: f64,
    pub alpha: usize,
    pub alpha_witness: Vec<usize>,
    pub theta: Option<ThetaSection>,
    pub alpha_star: Option<PackingSection>,
    /// Packing over the scenario contexts, when requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha_star_contexts: Option<PackingSection>,
    pub quantum_classical_separation: Option<bool>,
    pub specker_saturation: Option<bool>,
    pub hierarchy_holds: bool,
    /// Per-field errors, keyed by field name.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub errors: BTreeMap<String, String>,
}

impl BoundsSection {
    pub fn new(r: &BoundsReport) -> Self {
        let mut errors = BTreeMap::new();
        let theta = match &r.theta {
            Ok(t) => Some(ThetaSection {
                bracket: [t.lower, t.upper],
                iterations: t.iterations,
                failure: None,
            }),
            Err(Error::SolverFailure { message, best }) => Some(ThetaSection {
                bracket: [best.lower, best.upper],
                iterations: best.iterations,
                failure: Some(message.clone()),
            }),
            Err(e) => {
                errors.insert("theta".into(), e.to_string());
                None
            }
        };
        let mut packing = |name: &str, p: Option<&exclusivity::Result<Packing>>| match p? {
            Ok(p) => Some(PackingSection::new(p)),
            Err(e) => {
                errors.insert(name.into(), e.to_string());
                None
            }
        };
        let alpha_star = packing("alpha_star", Some(&r.alpha_star));
        let alpha_star_contexts = packing("alpha_star_contexts", r.alpha_star_gamma.as_ref());
        BoundsSection {
            tol: r.tol,
            alpha: r.alpha.size,
            alpha_witness: r.alpha.vertices.clone(),
            theta,
            alpha_star,
            alpha_star_contexts,
            quantum_classical_separation: r.quantum_classical_separation(),
            specker_saturation: r.specker_saturation(),
            hierarchy_holds: r.hierarchy_holds(),
            errors,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchStatus {
    Found,
    /// The search space was exhausted without a match.
    NoneFound,
    BudgetExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub pattern: String,
    pub vertices: Vec<usize>,
    /// Host image of each pattern vertex.
    pub mapping: Vec<usize>,
}

impl From<&InducedWitness> for Witness {
    fn from(w: &InducedWitness) -> Self {
        Witness {
            pattern: w.pattern_name.clone(),
            vertices: w.vertices.clone(),
            mapping: w.mapping.0.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSection {
    pub pattern: String,
    pub budget: u64,
    pub status: SearchStatus,
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub criterion: u32,
    pub name: String,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
}

/// Bounds for one graph of the `complement(C_m)` power family; recorded,
/// not judged.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpotEntry {
    pub graph: String,
    pub stats: GraphStats,
    pub alpha: usize,
    pub theta: Option<[f64; 2]>,
    pub alpha_star: Option<Rational>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteSection {
    pub claims: Vec<Claim>,
    pub spot_data: Vec<SpotEntry>,
}

impl SuiteSection {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| !c.pass)
    }
}

pub fn millis(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

impl ReportDocument {
    pub fn new(input_descriptor: impl Into<String>) -> Self {
        ReportDocument {
            tool_version: TOOL_VERSION.to_string(),
            input_descriptor: input_descriptor.into(),
            graph_stats: None,
            bounds: None,
            witnesses: None,
            suite: None,
            timing_ms: BTreeMap::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Human-readable rendering.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |key: &str, value: String| {
            let _ = writeln!(out, "{key:<22}{value}");
        };
        line("input", self.input_descriptor.clone());
        if let Some(s) = &self.graph_stats {
            line("vertices", s.n.to_string());
            line("edges", s.edges.to_string());
        }
        if let Some(b) = &self.bounds {
            line("alpha", format!("{}  {:?}", b.alpha, b.alpha_witness));
            if let Some(t) = &b.theta {
                let mut v = format!(
                    "[{:.10}, {:.10}]  tol {:e}, {} iterations",
                    t.bracket[0], t.bracket[1], b.tol, t.iterations
                );
                if let Some(f) = &t.failure {
                    v.push_str(&format!("  FAILED: {f}"));
                }
                line("theta", v);
            }
            let packing = |p: &PackingSection| {
                let mut v = format!("{}  ({})", p.value.exact, p.value.decimal);
                if !p.uncovered.is_empty() {
                    v.push_str(&format!("  uncovered {:?}", p.uncovered));
                }
                v
            };
            if let Some(p) = &b.alpha_star {
                line("alpha* (cliques)", packing(p));
            }
            if let Some(p) = &b.alpha_star_contexts {
                line("alpha* (contexts)", packing(p));
            }
            let flag = |f: Option<bool>| match f {
                Some(true) => "yes".to_string(),
                Some(false) => "no".to_string(),
                None => "n/a".to_string(),
            };
            line("separation", flag(b.quantum_classical_separation));
            line("saturation", flag(b.specker_saturation));
            line("hierarchy", flag(Some(b.hierarchy_holds)));
            for (field, err) in &b.errors {
                line(&format!("error ({field})"), err.clone());
            }
        }
        if let Some(w) = &self.witnesses {
            let status = match w.status {
                SearchStatus::Found => "found",
                SearchStatus::NoneFound => "none found (search exhausted)",
                SearchStatus::BudgetExhausted => "budget exhausted",
            };
            line("pattern", w.pattern.clone());
            line("status", format!("{status}  budget {}", w.budget));
            for wit in &w.witnesses {
                line(
                    "witness",
                    format!("{:?}  mapping {:?}", wit.vertices, wit.mapping),
                );
            }
        }
        if let Some(s) = &self.suite {
            for c in &s.claims {
                let _ = writeln!(
                    out,
                    "{}  {:>2}  {:<48} expected {:<22} observed {}",
                    if c.pass { "PASS" } else { "FAIL" },
                    c.criterion,
                    c.name,
                    c.expected,
                    c.observed
                );
            }
            if !s.spot_data.is_empty() {
                let _ = writeln!(out, "\nspot data (no expected values)");
            }
            for e in &s.spot_data {
                let theta = e
                    .theta
                    .map_or("n/a".to_string(), |t| format!("[{:.8}, {:.8}]", t[0], t[1]));
                let star = e
                    .alpha_star
                    .as_ref()
                    .map_or("n/a".to_string(), |r| r.exact.clone());
                let _ = writeln!(
                    out,
                    "  {:<18} n={:<3} alpha={:<3} theta={theta}  alpha*={star}",
                    e.graph, e.stats.n, e.alpha
                );
            }
            let failed = s.failures().count();
            let _ = writeln!(
                out,
                "\n{} of {} claims passed",
                s.claims.len() - failed,
                s.claims.len()
            );
        }
        if !self.timing_ms.is_empty() {
            let stages: Vec<String> = self
                .timing_ms
                .iter()
                .map(|(k, v)| format!("{k} {v:.1}"))
                .collect();
            let _ = writeln!(out, "{:<22}{}", "timing (ms)", stages.join(", "));
        }
        out
    }
}
