//! Optimisation kernels: an exact rational simplex for packing LPs and a
//! dense primal-dual interior-point method for the Lovász theta SDP.

mod lp;
mod sdp;

pub use lp::{lp_solve, lp_solve_exact, Constraint, LinearProgram, LpSolution};
pub use sdp::{
    default_theta_tol, theta_sdp, theta_sdp_with, DualWitness, SdpOptions, ThetaBracket,
};
