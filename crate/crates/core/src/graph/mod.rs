//! Finite simple undirected graphs with bitset adjacency.
//!
//! Every constructor returns a graph whose adjacency is symmetric and has no
//! self-loops. Vertices are `0..n`.

mod generators;
mod io;
mod iso;

pub use generators::{
    complete, empty, make_circulant, make_cycle, make_prism, make_shrikhande,
    make_shrikhande_complement,
};
pub use io::{parse_graph, write_graph};
pub use iso::find_isomorphism;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::new(n); n],
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!(
                    "edge ({u},{v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.adj[u].iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn is_regular(&self) -> bool {
        let d = self.degrees();
        d.windows(2).all(|w| w[0] == w[1])
    }

    /// True when `vertices` are pairwise adjacent.
    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| {
            vertices[i + 1..]
                .iter()
                .all(|&v| u != v && self.adjacent(u, v))
        })
    }

    /// True when `vertices` are pairwise non-adjacent.
    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| {
            vertices[i + 1..]
                .iter()
                .all(|&v| u != v && !self.adjacent(u, v))
        })
    }

    /// Checks symmetry and irreflexivity of the adjacency relation.
    pub fn check_invariants(&self) -> bool {
        (0..self.n).all(|u| {
            !self.adj[u].contains(u)
                && self.adj[u]
                    .iter()
                    .all(|v| v < self.n && self.adj[v].contains(u))
        })
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            let mut row = VertexSet::full(self.n).difference(&self.adj[u]);
            row.remove(u);
            g.adj[u] = row;
        }
        g
    }

    /// OR (co-normal) product. Vertex `(a, b)` has index `a * h.order() + b`;
    /// distinct pairs are adjacent when `a~a'` in `self` or `b~b'` in `h`.
    pub fn or_product(&self, h: &Graph) -> Graph {
        let (n1, n2) = (self.n, h.n);
        let mut g = Graph::new(n1 * n2);
        for a in 0..n1 {
            for b in 0..n2 {
                let p = a * n2 + b;
                for a2 in 0..n1 {
                    let row_adj = self.adjacent(a, a2);
                    for b2 in 0..n2 {
                        let q = a2 * n2 + b2;
                        if p != q && (row_adj || h.adjacent(b, b2)) {
                            g.adj[p].insert(q);
                        }
                    }
                }
            }
        }
        g
    }

    /// Subgraph induced on `vertices`, relabelled in ascending vertex order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if let Some(&v) = sorted.iter().find(|&&v| v >= self.n) {
            return Err(Error::invalid(format!(
                "vertex {v} out of range for {} vertices",
                self.n
            )));
        }
        let mut g = Graph::new(sorted.len());
        for (i, &u) in sorted.iter().enumerate() {
            for (j, &v) in sorted.iter().enumerate().skip(i + 1) {
                if self.adjacent(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }
}

/// Injective vertex map: `entries[i]` is the image of vertex `i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VertexMap(pub Vec<usize>);

impl VertexMap {
    pub fn identity(n: usize) -> Self {
        VertexMap((0..n).collect())
    }

    pub fn image(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = self.0.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    /// True when the map is an induced embedding of `from` into `to`:
    /// injective and preserving adjacency and non-adjacency.
    pub fn is_induced_embedding(&self, from: &Graph, to: &Graph) -> bool {
        self.len() == from.order()
            && self.0.iter().all(|&v| v < to.order())
            && self.is_injective()
            && (0..from.order()).all(|u| {
                (u + 1..from.order())
                    .all(|v| from.adjacent(u, v) == to.adjacent(self.0[u], self.0[v]))
            })
    }

    /// True when the map is an isomorphism from `g` onto `h`.
    pub fn is_isomorphism(&self, g: &Graph, h: &Graph) -> bool {
        g.order() == h.order() && self.is_induced_embedding(g, h)
    }
}
