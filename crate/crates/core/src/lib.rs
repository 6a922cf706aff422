//! Exclusivity graphs of measurement scenarios and the three bounds on sums
//! of event probabilities they determine: the independence number (classical),
//! the Lovász theta number (quantum), and the fractional packing number over a
//! clique hypergraph (consistent exclusivity).

pub mod bitset;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod scenario;
pub mod solvers;
pub mod structure;

pub use error::{Error, Result};
pub use graph::{Graph, VertexMap};
pub use num::BigRational;
