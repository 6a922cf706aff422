//! Induced-subgraph search for odd holes, odd antiholes and arbitrary
//! pattern graphs.

use crate::error::{Error, Result};
use crate::graph::{find_isomorphism, make_cycle, Graph, VertexMap};

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedWitness {
    pub pattern_name: String,
    /// Host vertices of the copy, ascending.
    pub vertices: Vec<usize>,
    /// Pattern vertex `i` maps to host vertex `mapping.image(i)`.
    pub mapping: VertexMap,
}

impl InducedWitness {
    /// Re-checks the witness against `host` and `pattern` from scratch.
    pub fn verify(&self, host: &Graph, pattern: &Graph) -> bool {
        let mut sorted = self.mapping.0.clone();
        sorted.sort_unstable();
        sorted == self.vertices
            && self.mapping.is_induced_embedding(pattern, host)
            && host
                .induced(&self.vertices)
                .is_ok_and(|sub| find_isomorphism(pattern, &sub).is_some())
    }
}

pub fn find_induced(host: &Graph, pattern: &Graph, name: &str) -> Result<Option<InducedWitness>> {
    find_induced_with_budget(host, pattern, name, DEFAULT_NODE_BUDGET)
}

/// First induced copy of `pattern` in `host` in search order: pattern
/// vertices are placed in a fixed order, host candidates tried ascending.
/// `budget` caps the number of candidate placements.
pub fn find_induced_with_budget(
    host: &Graph,
    pattern: &Graph,
    name: &str,
    budget: u64,
) -> Result<Option<InducedWitness>> {
    if pattern.order() > host.order() {
        return Ok(None);
    }
    let order = placement_order(pattern);
    let mut search = Search {
        host,
        pattern,
        order: &order,
        map: vec![usize::MAX; pattern.order()],
        used: vec![false; host.order()],
        nodes: 0,
        budget,
    };
    if !search.extend(0)? {
        return Ok(None);
    }
    let mapping = VertexMap(search.map);
    let mut vertices = mapping.0.clone();
    vertices.sort_unstable();
    Ok(Some(InducedWitness {
        pattern_name: name.to_string(),
        vertices,
        mapping,
    }))
}

/// Highest-degree vertex first, then greedily the vertex with most placed
/// neighbours (ties: higher degree, lower index).
fn placement_order(p: &Graph) -> Vec<usize> {
    let n = p.order();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], p.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex remains");
        placed[v] = true;
        order.push(v);
        for u in p.neighbors(v).iter() {
            links[u] += 1;
        }
    }
    order
}

struct Search<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    order: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(true);
        }
        let v = self.order[depth];
        let need = self.pattern.degree(v);
        for w in 0..self.host.order() {
            if self.used[w] || self.host.degree(w) < need {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::ResourceLimit {
                    what: "induced-subgraph search nodes",
                    limit: self.budget,
                });
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&u| self.pattern.adjacent(u, v) == self.host.adjacent(self.map[u], w));
            if !consistent {
                continue;
            }
            self.map[v] = w;
            self.used[w] = true;
            if self.extend(depth + 1)? {
                return Ok(true);
            }
            self.used[w] = false;
        }
        self.map[v] = usize::MAX;
        Ok(false)
    }
}

/// For every odd `m` in `5..=max_m`, the first induced `C_m` and the first
/// induced complement of `C_m`, labelled `C<m>` and `anti-C<m>`.
pub fn scan_odd_structures(host: &Graph, max_m: usize, budget: u64) -> Result<Vec<InducedWitness>> {
    if max_m < 5 || max_m.is_multiple_of(2) {
        return Err(Error::invalid(format!(
            "max_m must be odd and >= 5, got {max_m}"
        )));
    }
    let mut out = Vec::new();
    for m in (5..=max_m).step_by(2) {
        let hole = make_cycle(m)?;
        let antihole = hole.complement();
        for (name, pattern) in [(format!("C{m}"), &hole), (format!("anti-C{m}"), &antihole)] {
            if let Some(w) = find_induced_with_budget(host, pattern, &name, budget)? {
                out.push(w);
            }
        }
    }
    Ok(out)
}
