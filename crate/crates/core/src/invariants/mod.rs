//! The invariant hierarchy `alpha(G) <= theta(G) <= alpha*(G)` and the
//! context-restricted packing number `alpha*(G, Γ)`.

mod cliques;
mod independence;
mod packing;
mod report;

pub use cliques::{maximal_cliques, maximal_cliques_with_limit, DEFAULT_MAX_CLIQUES};
pub use independence::{independence_number, IndependentSet};
pub use packing::{fractional_packing, Packing};
pub use report::{bounds_report, rational_to_f64, BoundsOptions, BoundsReport};

use crate::error::Result;
use crate::graph::Graph;
use crate::solvers::{theta_sdp, ThetaBracket};

pub fn lovasz_theta(g: &Graph, tol: f64) -> Result<ThetaBracket> {
    theta_sdp(g, tol)
}
