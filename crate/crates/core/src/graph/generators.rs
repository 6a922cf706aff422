use super::Graph;
use crate::error::{Error, Result};

pub fn empty(n: usize) -> Graph {
    Graph::new(n)
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n).complement()
}

/// Cycle `C_n`: `i ~ i±1 (mod n)`.
pub fn make_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::invalid(format!("cycle needs n >= 3, got {n}")));
    }
    make_circulant(n, &[1])
}

/// Circulant graph `Ci_n(d_1, .., d_k)`: `i ~ i±d (mod n)` for every listed distance.
pub fn make_circulant(n: usize, distances: &[usize]) -> Result<Graph> {
    if let Some(&d) = distances.iter().find(|&&d| d == 0 || d > n / 2) {
        return Err(Error::invalid(format!(
            "circulant distance {d} outside 1..={}",
            n / 2
        )));
    }
    let mut g = Graph::new(n);
    for i in 0..n {
        for &d in distances {
            g.add_edge(i, (i + d) % n);
        }
    }
    Ok(g)
}

/// Triangular prism: triangles {0,1,2} and {3,4,5} joined by 0-3, 1-4, 2-5.
pub fn make_prism() -> Graph {
    Graph::from_edges(
        6,
        [
            (0, 1),
            (0, 2),
            (1, 2),
            (3, 4),
            (3, 5),
            (4, 5),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    )
    .expect("static edge list")
}

/// Shrikhande graph: Cayley graph of Z4 x Z4 with connection set
/// ±(1,0), ±(0,1), ±(1,1). Vertex `(a, b)` has index `4a + b`.
pub fn make_shrikhande() -> Graph {
    const STEPS: [(usize, usize); 3] = [(1, 0), (0, 1), (1, 1)];
    let mut g = Graph::new(16);
    for a in 0..4 {
        for b in 0..4 {
            for (da, db) in STEPS {
                g.add_edge(4 * a + b, 4 * ((a + da) % 4) + (b + db) % 4);
            }
        }
    }
    g
}

pub fn make_shrikhande_complement() -> Graph {
    make_shrikhande().complement()
}
