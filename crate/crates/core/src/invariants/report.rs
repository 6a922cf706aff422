use std::thread;

use num::{BigRational, ToPrimitive};

use super::{
    fractional_packing, independence_number, maximal_cliques_with_limit, IndependentSet, Packing,
};
use crate::error::Result;
use crate::graph::Graph;
use crate::scenario::CliqueHypergraph;
use crate::solvers::{default_theta_tol, theta_sdp_with, SdpOptions, ThetaBracket};

#[derive(Clone, Debug)]
pub struct BoundsOptions {
    /// Theta bracket width; `None` picks [`default_theta_tol`].
    pub tol: Option<f64>,
    pub max_cliques: u64,
    pub max_iter: usize,
}

impl Default for BoundsOptions {
    fn default() -> Self {
        BoundsOptions {
            tol: None,
            max_cliques: super::DEFAULT_MAX_CLIQUES,
            max_iter: SdpOptions::with_tol(1.0).max_iter,
        }
    }
}

/// All bounds for one graph. Fields that fail keep their error; the others
/// are still populated.
#[derive(Debug)]
pub struct BoundsReport {
    pub tol: f64,
    pub alpha: IndependentSet,
    pub theta: Result<ThetaBracket>,
    /// Packing over all maximal cliques.
    pub alpha_star: Result<Packing>,
    /// Packing over a caller-supplied hypergraph (e.g. scenario contexts).
    pub alpha_star_gamma: Option<Result<Packing>>,
}

impl BoundsReport {
    /// Quantum bound exceeds the classical one: `theta.lower > alpha`.
    pub fn quantum_classical_separation(&self) -> Option<bool> {
        let theta = self.theta.as_ref().ok()?;
        Some(theta.lower > self.alpha.size as f64 + self.tol)
    }

    /// Theta and the packing number agree within the tolerance.
    pub fn specker_saturation(&self) -> Option<bool> {
        let theta = self.theta.as_ref().ok()?;
        let star = rational_to_f64(&self.alpha_star.as_ref().ok()?.value);
        Some(theta.contains(star, self.tol))
    }

    /// `alpha <= theta <= alpha*` within the tolerance, on the fields that
    /// were computed.
    pub fn hierarchy_holds(&self) -> bool {
        let alpha = self.alpha.size as f64;
        let Ok(theta) = &self.theta else {
            return true;
        };
        let lower_ok = alpha <= theta.upper + self.tol;
        let upper_ok = match &self.alpha_star {
            Ok(p) => theta.lower <= rational_to_f64(&p.value) + self.tol,
            Err(_) => true,
        };
        lower_ok && upper_ok
    }
}

pub fn rational_to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

pub fn bounds_report(
    g: &Graph,
    gamma_context: Option<&CliqueHypergraph>,
    opts: &BoundsOptions,
) -> BoundsReport {
    let tol = opts.tol.unwrap_or_else(|| default_theta_tol(g.order()));
    thread::scope(|s| {
        let sdp = SdpOptions {
            tol,
            max_iter: opts.max_iter,
        };
        let theta = s.spawn(move || theta_sdp_with(g, &sdp));
        let alpha = independence_number(g);
        let alpha_star = maximal_cliques_with_limit(g, opts.max_cliques)
            .and_then(|c| CliqueHypergraph::new(g, c))
            .and_then(|gamma| fractional_packing(g, &gamma));
        let alpha_star_gamma = gamma_context.map(|gamma| fractional_packing(g, gamma));
        BoundsReport {
            tol,
            alpha,
            theta: theta.join().expect("theta worker panicked"),
            alpha_star,
            alpha_star_gamma,
        }
    })
}
