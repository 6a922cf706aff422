//! Maximum independent set as maximum clique of the complement, by
//! branch-and-bound with a greedy colouring bound.

use crate::bitset::VertexSet;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependentSet {
    pub size: usize,
    /// Ascending witness.
    pub vertices: Vec<usize>,
}

pub fn independence_number(g: &Graph) -> IndependentSet {
    let n = g.order();
    let h = g.complement();
    // Relabel so that index order is descending degree in the complement
    // (ties by index); the colouring below scans in index order.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(h.degree(v)), v));
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let adj: Vec<VertexSet> = order
        .iter()
        .map(|&v| VertexSet::from_iter_with_capacity(n, h.neighbors(v).iter().map(|u| pos[u])))
        .collect();

    let mut search = CliqueSearch {
        adj: &adj,
        current: Vec::new(),
        best: Vec::new(),
    };
    search.expand(VertexSet::full(n));

    let mut vertices: Vec<usize> = search.best.iter().map(|&i| order[i]).collect();
    vertices.sort_unstable();
    debug_assert!(g.is_independent(&vertices));
    IndependentSet {
        size: vertices.len(),
        vertices,
    }
}

struct CliqueSearch<'a> {
    adj: &'a [VertexSet],
    current: Vec<usize>,
    best: Vec<usize>,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, candidates: VertexSet) {
        let (verts, colors) = self.color(&candidates);
        let mut p = candidates;
        for i in (0..verts.len()).rev() {
            if self.current.len() + colors[i] <= self.best.len() {
                return;
            }
            let v = verts[i];
            self.current.push(v);
            let next = p.intersection(&self.adj[v]);
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            p.remove(v);
        }
    }

    /// Greedy sequential colouring; returns vertices sorted by colour with
    /// their colour numbers (1-based), an upper bound on any clique among
    /// the prefix.
    fn color(&self, p: &VertexSet) -> (Vec<usize>, Vec<usize>) {
        let mut uncolored = p.clone();
        let mut verts = Vec::with_capacity(p.len());
        let mut colors = Vec::with_capacity(p.len());
        let mut k = 0;
        while !uncolored.is_empty() {
            k += 1;
            let mut q = uncolored.clone();
            while let Some(v) = q.first() {
                q.remove(v);
                q.difference_with(&self.adj[v]);
                uncolored.remove(v);
                verts.push(v);
                colors.push(k);
            }
        }
        (verts, colors)
    }
}
