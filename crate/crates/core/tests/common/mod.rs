//! Brute-force oracles, independent of the library's search code.

#![allow(dead_code)]

use exclusivity::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn members(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Largest independent set size by scanning all 2^n subsets.
pub fn brute_alpha(g: &Graph) -> usize {
    let n = g.order();
    (0u32..1 << n)
        .filter(|&mask| {
            let vs = members(mask, n);
            vs.iter()
                .enumerate()
                .all(|(i, &u)| vs[i + 1..].iter().all(|&v| !g.adjacent(u, v)))
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Maximal cliques by scanning all subsets; sorted like the library output.
pub fn brute_maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let is_clique = |vs: &[usize]| {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.adjacent(u, v)))
    };
    let mut out: Vec<Vec<usize>> = (1u32..1 << n)
        .map(|mask| members(mask, n))
        .filter(|vs| is_clique(vs))
        .filter(|vs| (0..n).all(|w| vs.contains(&w) || !vs.iter().all(|&v| g.adjacent(v, w))))
        .collect();
    out.sort();
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    let mut used = vec![false; n];
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    n == h.order()
        && permutations(n)
            .iter()
            .any(|p| (0..n).all(|u| (u + 1..n).all(|v| g.adjacent(u, v) == h.adjacent(p[u], p[v]))))
}

/// Does some `pattern.order()`-subset of `host` induce a copy of `pattern`?
pub fn brute_contains_induced(host: &Graph, pattern: &Graph) -> bool {
    let k = pattern.order();
    let n = host.order();
    if k > n {
        return false;
    }
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .any(|mask| brute_isomorphic(pattern, &host.induced(&members(mask, n)).unwrap()))
}

/// Theta of the odd cycle C_m.
pub fn theta_odd_cycle(m: usize) -> f64 {
    let c = (std::f64::consts::PI / m as f64).cos();
    m as f64 * c / (1.0 + c)
}
