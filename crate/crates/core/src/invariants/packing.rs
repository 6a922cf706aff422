//! Fractional packing number `alpha*(G, Γ)`: the LP
//! `max sum w_i` s.t. `sum_{i in C} w_i <= 1` for every `C` in Γ, `0 <= w <= 1`.

use num::{BigRational, One, ToPrimitive, Zero};

use crate::error::Result;
use crate::graph::Graph;
use crate::scenario::CliqueHypergraph;
use crate::solvers::{lp_solve, LinearProgram};

/// Hypergraphs up to this size go to the simplex in one piece; larger ones
/// are solved by adding violated clique rows on demand.
const DIRECT_ROWS: usize = 256;

const SCREEN_MARGIN: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct Packing {
    pub value: BigRational,
    pub weights: Vec<BigRational>,
    /// One multiplier per hyperedge, aligned with `Γ.cliques()`.
    pub clique_duals: Vec<BigRational>,
    pub bound_duals: Vec<BigRational>,
    /// Vertices in no hyperedge; they are limited only by `w_i <= 1`.
    pub uncovered: Vec<usize>,
    /// Clique rows present in the final LP.
    pub active_rows: usize,
}

impl Packing {
    /// Exact certificate against the full hypergraph: primal feasibility,
    /// dual feasibility, and matching objective values.
    pub fn certify(&self, g: &Graph, gamma: &CliqueHypergraph) -> bool {
        let n = g.order();
        let zero = BigRational::zero();
        let one = BigRational::one();
        if self.weights.len() != n
            || self.clique_duals.len() != gamma.len()
            || self.bound_duals.len() != n
        {
            return false;
        }
        let primal = self.weights.iter().all(|w| *w >= zero && *w <= one)
            && gamma
                .cliques()
                .iter()
                .all(|c| c.iter().map(|&v| &self.weights[v]).sum::<BigRational>() <= one);
        let mut cover = self.bound_duals.clone();
        for (c, y) in gamma.cliques().iter().zip(&self.clique_duals) {
            for &v in c {
                cover[v] += y;
            }
        }
        let dual = self
            .clique_duals
            .iter()
            .chain(&self.bound_duals)
            .all(|y| *y >= zero)
            && cover.iter().all(|s| *s >= one);
        let primal_value: BigRational = self.weights.iter().sum();
        let dual_value: BigRational = self.clique_duals.iter().sum::<BigRational>()
            + self.bound_duals.iter().sum::<BigRational>();
        primal && dual && primal_value == self.value && dual_value == self.value
    }
}

pub fn fractional_packing(g: &Graph, gamma: &CliqueHypergraph) -> Result<Packing> {
    let n = g.order();
    let cliques = gamma.cliques();
    let one = BigRational::one();

    let mut active: Vec<usize> = if cliques.len() <= DIRECT_ROWS {
        (0..cliques.len()).collect()
    } else {
        initial_cover(n, cliques)
    };
    let batch = n.max(32);

    loop {
        let mut lp = LinearProgram::new(vec![one.clone(); n]);
        for &k in &active {
            let mut row = vec![BigRational::zero(); n];
            for &v in &cliques[k] {
                row[v] = one.clone();
            }
            lp.add_constraint(row, one.clone());
        }
        let sol = lp_solve(&lp)?;

        // Screen in floating point; only near-tight rows get the exact sum.
        let approx: Vec<f64> = sol
            .assignment
            .iter()
            .map(|w| w.to_f64().unwrap_or(f64::NAN))
            .collect();
        let mut violated: Vec<(BigRational, usize)> = cliques
            .iter()
            .enumerate()
            // NaN loads are kept and settled by the exact check
            .filter(|(_, c)| {
                c.iter().map(|&v| approx[v]).sum::<f64>() >= 1.0 - SCREEN_MARGIN
                    || c.iter().any(|&v| approx[v].is_nan())
            })
            .filter_map(|(k, c)| {
                let load: BigRational = c.iter().map(|&v| &sol.assignment[v]).sum();
                (load > one).then_some((load, k))
            })
            .collect();
        if violated.is_empty() {
            let mut clique_duals = vec![BigRational::zero(); cliques.len()];
            for (&k, y) in active.iter().zip(sol.duals) {
                clique_duals[k] = y;
            }
            return Ok(Packing {
                value: sol.value,
                weights: sol.assignment,
                clique_duals,
                bound_duals: sol.bound_duals,
                uncovered: gamma.uncovered(n),
                active_rows: active.len(),
            });
        }
        violated.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        active.extend(violated.into_iter().take(batch).map(|(_, k)| k));
        active.sort_unstable();
    }
}

/// For each vertex, the largest clique containing it (lowest index on ties).
fn initial_cover(n: usize, cliques: &[Vec<usize>]) -> Vec<usize> {
    let mut best: Vec<Option<usize>> = vec![None; n];
    for (k, c) in cliques.iter().enumerate() {
        for &v in c {
            if best[v].is_none_or(|b| cliques[b].len() < c.len()) {
                best[v] = Some(k);
            }
        }
    }
    let mut out: Vec<usize> = best.into_iter().flatten().collect();
    out.sort_unstable();
    out.dedup();
    out
}
