use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_MAX_CLIQUES: u64 = 1_000_000;

/// All maximal cliques, each ascending, the list in lexicographic order.
pub fn maximal_cliques(g: &Graph) -> Result<Vec<Vec<usize>>> {
    maximal_cliques_with_limit(g, DEFAULT_MAX_CLIQUES)
}

/// Bron–Kerbosch with Tomita pivoting, outer loop in degeneracy order.
pub fn maximal_cliques_with_limit(g: &Graph, limit: u64) -> Result<Vec<Vec<usize>>> {
    let n = g.order();
    let mut out = Vec::new();
    let mut remaining = VertexSet::full(n);
    let mut done = VertexSet::new(n);
    for v in degeneracy_order(g) {
        let nb = g.neighbors(v);
        let p = remaining.intersection(nb);
        let x = done.intersection(nb);
        let mut r = vec![v];
        expand(g, &mut r, p, x, &mut out, limit)?;
        remaining.remove(v);
        done.insert(v);
    }
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    Ok(out)
}

fn expand(
    g: &Graph,
    r: &mut Vec<usize>,
    mut p: VertexSet,
    mut x: VertexSet,
    out: &mut Vec<Vec<usize>>,
    limit: u64,
) -> Result<()> {
    if p.is_empty() {
        if x.is_empty() {
            if out.len() as u64 >= limit {
                return Err(Error::ResourceLimit {
                    what: "maximal clique count",
                    limit,
                });
            }
            out.push(r.clone());
        }
        return Ok(());
    }
    // pivot maximising |P ∩ N(u)| over u in P ∪ X
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| (p.intersection_len(g.neighbors(u)), std::cmp::Reverse(u)))
        .expect("P is non-empty");
    let candidates = p.difference(g.neighbors(pivot));
    for v in candidates.iter() {
        let nb = g.neighbors(v);
        r.push(v);
        expand(g, r, p.intersection(nb), x.intersection(nb), out, limit)?;
        r.pop();
        p.remove(v);
        x.insert(v);
    }
    Ok(())
}

/// Repeatedly remove a minimum-degree vertex (lowest index on ties).
fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut deg = g.degrees();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("vertex remains");
        removed[v] = true;
        order.push(v);
        for u in g.neighbors(v).iter() {
            deg[u] -= 1;
        }
    }
    order
}
