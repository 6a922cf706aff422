//! Isomorphism testing by colour refinement followed by backtracking.

use std::collections::BTreeMap;

use super::{Graph, VertexMap};

/// Returns an adjacency-preserving bijection `g -> h`, or `None`.
///
/// The search is deterministic: candidates are tried in ascending order.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<VertexMap> {
    let n = g.order();
    if n != h.order() || g.edge_count() != h.edge_count() {
        return None;
    }
    let (cg, ch) = refine_jointly(g, h);
    let mut hist_g = cg.clone();
    let mut hist_h = ch.clone();
    hist_g.sort_unstable();
    hist_h.sort_unstable();
    if hist_g != hist_h {
        return None;
    }

    let order = search_order(g, &cg);
    let mut state = Search {
        g,
        h,
        cg: &cg,
        ch: &ch,
        order: &order,
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    if state.extend(0) {
        Some(VertexMap(state.map))
    } else {
        None
    }
}

/// Stable colouring of the disjoint union of `g` and `h`, so colours are
/// comparable across the two graphs.
fn refine_jointly(g: &Graph, h: &Graph) -> (Vec<usize>, Vec<usize>) {
    let n = g.order();
    let graphs = [g, h];
    let mut colors: [Vec<usize>; 2] = [g.degrees(), h.degrees()];
    let mut classes = distinct(&colors);
    loop {
        let mut signatures: [Vec<(usize, Vec<usize>)>; 2] = [Vec::new(), Vec::new()];
        for (k, graph) in graphs.iter().enumerate() {
            for v in 0..n {
                let mut nb: Vec<usize> = graph.neighbors(v).iter().map(|u| colors[k][u]).collect();
                nb.sort_unstable();
                signatures[k].push((colors[k][v], nb));
            }
        }
        let mut palette = BTreeMap::new();
        for sig in signatures.iter().flatten() {
            let next = palette.len();
            palette.entry(sig.clone()).or_insert(next);
        }
        // Renumber by sorted signature so the colouring does not depend on
        // which graph was scanned first.
        for (i, c) in palette.values_mut().enumerate() {
            *c = i;
        }
        let next: [Vec<usize>; 2] = [
            signatures[0].iter().map(|s| palette[s]).collect(),
            signatures[1].iter().map(|s| palette[s]).collect(),
        ];
        let next_classes = distinct(&next);
        colors = next;
        if next_classes == classes {
            break;
        }
        classes = next_classes;
    }
    let [a, b] = colors;
    (a, b)
}

fn distinct(colors: &[Vec<usize>; 2]) -> usize {
    let mut all: Vec<usize> = colors.iter().flatten().copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

/// Vertices of `g` ordered to maximise early adjacency checks: start from the
/// rarest colour class, then repeatedly take the vertex with most already
/// ordered neighbours (ties: rarer colour, then lower index).
fn search_order(g: &Graph, colors: &[usize]) -> Vec<usize> {
    let n = g.order();
    let mut class_size = BTreeMap::new();
    for &c in colors {
        *class_size.entry(c).or_insert(0usize) += 1;
    }
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (std::cmp::Reverse(links[v]), class_size[&colors[v]], v))
            .expect("unplaced vertex remains");
        placed[v] = true;
        order.push(v);
        for u in g.neighbors(v).iter() {
            links[u] += 1;
        }
    }
    order
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    cg: &'a [usize],
    ch: &'a [usize],
    order: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for w in 0..self.h.order() {
            if self.used[w] || self.cg[v] != self.ch[w] {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&u| self.g.adjacent(u, v) == self.h.adjacent(self.map[u], w));
            if !consistent {
                continue;
            }
            self.map[v] = w;
            self.used[w] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[w] = false;
            self.map[v] = usize::MAX;
        }
        false
    }
}
