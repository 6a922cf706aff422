//! Lovász theta by a dense primal-dual interior-point method.
//!
//! Primal: `max <J, X>` s.t. `tr X = 1`, `X_uv = 0` on edges, `X ⪰ 0`.
//! Dual:   `min t` s.t. `t I + sum_e y_e (e_u e_v' + e_v e_u') - J ⪰ 0`.
//!
//! Search directions are HKM with a Mehrotra predictor-corrector. After every
//! iteration both iterates are turned into certified bounds:
//!
//! * lower: zero the edge entries of `X`, shift by its most negative
//!   eigenvalue, renormalise the trace; the result is primal feasible.
//! * upper: for the current edge multipliers the smallest feasible `t` is
//!   `lambda_max(J - sum_e y_e E_e)`.

use nalgebra::{Cholesky, DMatrix, DVector, SymmetricEigen};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq)]
pub struct SdpOptions {
    pub tol: f64,
    pub max_iter: usize,
}

impl SdpOptions {
    pub fn with_tol(tol: f64) -> Self {
        SdpOptions { tol, max_iter: 500 }
    }
}

/// 1e-6 up to 32 vertices, 1e-4 above.
pub fn default_theta_tol(n: usize) -> f64 {
    if n <= 32 {
        1e-6
    } else {
        1e-4
    }
}

/// Dual certificate: with these edge multipliers, `t I + sum y_e E_e - J`
/// is positive semidefinite.
#[derive(Clone, Debug, PartialEq)]
pub struct DualWitness {
    pub edges: Vec<(usize, usize)>,
    pub multipliers: Vec<f64>,
    pub t: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ThetaBracket {
    pub lower: f64,
    pub upper: f64,
    /// Unit-trace PSD matrix vanishing on edges; `lower = sum of entries`.
    pub primal_witness: DMatrix<f64>,
    pub dual_witness: DualWitness,
    pub iterations: usize,
}

impl ThetaBracket {
    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lower + self.upper)
    }

    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    pub fn contains(&self, value: f64, slack: f64) -> bool {
        self.lower - slack <= value && value <= self.upper + slack
    }
}

pub fn theta_sdp(g: &Graph, tol: f64) -> Result<ThetaBracket> {
    theta_sdp_with(g, &SdpOptions::with_tol(tol))
}

pub fn theta_sdp_with(g: &Graph, opts: &SdpOptions) -> Result<ThetaBracket> {
    let n = g.order();
    if n == 0 {
        return Err(Error::invalid("theta of the empty vertex set is undefined"));
    }
    if opts.tol.is_nan() || opts.tol <= 0.0 {
        return Err(Error::invalid(format!(
            "tolerance must be positive, got {}",
            opts.tol
        )));
    }
    Ipm::new(g).run(opts)
}

struct Ipm {
    n: usize,
    edges: Vec<(usize, usize)>,
}

struct Direction {
    dx: DMatrix<f64>,
    dy: DVector<f64>,
    dz: DMatrix<f64>,
}

const STEP_FRACTION: f64 = 0.98;

impl Ipm {
    fn new(g: &Graph) -> Self {
        Ipm {
            n: g.order(),
            edges: g.edges(),
        }
    }

    fn m(&self) -> usize {
        self.edges.len() + 1
    }

    /// `A(K)`: `[tr K, K_uv + K_vu, ..]`.
    fn apply(&self, k: &DMatrix<f64>) -> DVector<f64> {
        let mut out = DVector::zeros(self.m());
        out[0] = k.trace();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            out[i + 1] = k[(u, v)] + k[(v, u)];
        }
        out
    }

    /// `A^T(y) = y_0 I + sum_e y_e E_e`.
    fn adjoint(&self, y: &DVector<f64>) -> DMatrix<f64> {
        let mut out = DMatrix::from_diagonal_element(self.n, self.n, y[0]);
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            out[(u, v)] += y[i + 1];
            out[(v, u)] += y[i + 1];
        }
        out
    }

    fn rhs_b(&self) -> DVector<f64> {
        let mut b = DVector::zeros(self.m());
        b[0] = 1.0;
        b
    }

    /// Schur complement `M_ij = tr(A_i X A_j W)` with `W = Z^-1`.
    fn schur(&self, x: &DMatrix<f64>, w: &DMatrix<f64>) -> DMatrix<f64> {
        let m = self.m();
        let mut s = DMatrix::zeros(m, m);
        let xw = x * w;
        s[(0, 0)] = xw.trace();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            let val = xw[(u, v)] + xw[(v, u)];
            s[(0, i + 1)] = val;
            s[(i + 1, 0)] = val;
        }
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            for (j, &(k, l)) in self.edges.iter().enumerate().skip(i) {
                let val = x[(v, k)] * w[(l, u)]
                    + x[(v, l)] * w[(k, u)]
                    + x[(u, k)] * w[(l, v)]
                    + x[(u, l)] * w[(k, v)];
                s[(i + 1, j + 1)] = val;
                s[(j + 1, i + 1)] = val;
            }
        }
        s
    }

    #[allow(clippy::too_many_arguments)]
    fn direction(
        &self,
        chol: &Cholesky<f64, nalgebra::Dyn>,
        x: &DMatrix<f64>,
        w: &DMatrix<f64>,
        rd: &DMatrix<f64>,
        target: f64,
        second_order: Option<&DMatrix<f64>>,
    ) -> Direction {
        // M dy = A(target W - D W + X Rd W) - b
        let mut inner = w * target + x * rd * w;
        if let Some(d) = second_order {
            inner -= d * w;
        }
        let rhs = self.apply(&inner) - self.rhs_b();
        let dy = chol.solve(&rhs);
        let dz = self.adjoint(&dy) - rd;
        let mut dx = w * target - x - x * &dz * w;
        if let Some(d) = second_order {
            dx -= d * w;
        }
        let dx = symmetrize(&dx);
        Direction { dx, dy, dz }
    }

    fn run(&self, opts: &SdpOptions) -> Result<ThetaBracket> {
        let n = self.n;
        let nf = n as f64;
        let j = DMatrix::from_element(n, n, 1.0);

        let mut x = DMatrix::from_diagonal_element(n, n, 1.0 / nf);
        let mut y = DVector::zeros(self.m());
        y[0] = nf + 1.0;
        let mut z = self.adjoint(&y) - &j;

        let mut best_lower = self.certify_primal(&x);
        let mut best_upper = self.certify_dual(&y, &j);
        let mut iterations = 0;

        loop {
            if best_upper.t - best_lower.1 <= opts.tol {
                break;
            }
            if iterations >= opts.max_iter {
                return Err(self.failure(
                    format!("no convergence within {} iterations", opts.max_iter),
                    best_lower,
                    best_upper,
                    iterations,
                ));
            }
            iterations += 1;

            let mu = x.dot(&z) / nf;
            let rd = &j - self.adjoint(&y) + &z;

            let Some(w) = z.clone().cholesky().map(|c| c.inverse()) else {
                return Err(self.failure(
                    "dual slack lost definiteness".into(),
                    best_lower,
                    best_upper,
                    iterations,
                ));
            };
            let w = symmetrize(&w);
            let schur = self.schur(&x, &w);
            let Some(chol) = factor_regularized(schur) else {
                return Err(self.failure(
                    "Schur complement not factorizable".into(),
                    best_lower,
                    best_upper,
                    iterations,
                ));
            };

            let pred = self.direction(&chol, &x, &w, &rd, 0.0, None);
            let ap = (STEP_FRACTION * max_step(&x, &pred.dx)).min(1.0);
            let ad = (STEP_FRACTION * max_step(&z, &pred.dz)).min(1.0);
            let mu_aff = (&x + &pred.dx * ap).dot(&(&z + &pred.dz * ad)) / nf;
            let sigma = (mu_aff / mu).clamp(0.0, 1.0).powi(3);

            let second = &pred.dx * &pred.dz;
            let corr = self.direction(&chol, &x, &w, &rd, sigma * mu, Some(&second));
            let ap = (STEP_FRACTION * max_step(&x, &corr.dx)).min(1.0);
            let ad = (STEP_FRACTION * max_step(&z, &corr.dz)).min(1.0);
            if ap < 1e-12 && ad < 1e-12 {
                return Err(self.failure(
                    "step length collapsed".into(),
                    best_lower,
                    best_upper,
                    iterations,
                ));
            }

            x += &corr.dx * ap;
            x = symmetrize(&x);
            y += &corr.dy * ad;
            z += &corr.dz * ad;
            z = symmetrize(&z);

            let lower = self.certify_primal(&x);
            if lower.1 > best_lower.1 {
                best_lower = lower;
            }
            let upper = self.certify_dual(&y, &j);
            if upper.t < best_upper.t {
                best_upper = upper;
            }
            if mu < 1e-15 && best_upper.t - best_lower.1 > opts.tol {
                return Err(self.failure(
                    "duality measure underflow".into(),
                    best_lower,
                    best_upper,
                    iterations,
                ));
            }
        }

        Ok(ThetaBracket {
            lower: best_lower.1,
            upper: best_upper.t,
            primal_witness: best_lower.0,
            dual_witness: best_upper,
            iterations,
        })
    }

    /// Feasible primal point near `x` and its objective value.
    fn certify_primal(&self, x: &DMatrix<f64>) -> (DMatrix<f64>, f64) {
        let mut p = symmetrize(x);
        for &(u, v) in &self.edges {
            p[(u, v)] = 0.0;
            p[(v, u)] = 0.0;
        }
        let lam_min = SymmetricEigen::new(p.clone()).eigenvalues.min();
        if lam_min < 0.0 {
            for i in 0..self.n {
                p[(i, i)] -= lam_min;
            }
        }
        let tr = p.trace();
        p /= tr;
        let value = p.sum();
        (p, value)
    }

    fn certify_dual(&self, y: &DVector<f64>, j: &DMatrix<f64>) -> DualWitness {
        let mut k = j.clone();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            k[(u, v)] -= y[i + 1];
            k[(v, u)] -= y[i + 1];
        }
        let t = SymmetricEigen::new(k).eigenvalues.max();
        DualWitness {
            edges: self.edges.clone(),
            multipliers: y.iter().skip(1).copied().collect(),
            t,
        }
    }

    fn failure(
        &self,
        message: String,
        lower: (DMatrix<f64>, f64),
        upper: DualWitness,
        iterations: usize,
    ) -> Error {
        Error::SolverFailure {
            message,
            best: Box::new(ThetaBracket {
                lower: lower.1,
                upper: upper.t,
                primal_witness: lower.0,
                dual_witness: upper,
                iterations,
            }),
        }
    }
}

fn symmetrize(a: &DMatrix<f64>) -> DMatrix<f64> {
    (a + a.transpose()) * 0.5
}

fn factor_regularized(mut s: DMatrix<f64>) -> Option<Cholesky<f64, nalgebra::Dyn>> {
    let scale = s.diagonal().amax().max(1.0);
    let mut shift = 0.0;
    for _ in 0..8 {
        if let Some(c) = s.clone().cholesky() {
            return Some(c);
        }
        let next = if shift == 0.0 {
            1e-14 * scale
        } else {
            shift * 100.0
        };
        for i in 0..s.nrows() {
            s[(i, i)] += next - shift;
        }
        shift = next;
    }
    None
}

/// Largest `alpha` with `a + alpha d ⪰ 0`, for positive definite `a`.
fn max_step(a: &DMatrix<f64>, d: &DMatrix<f64>) -> f64 {
    let Some(chol) = a.clone().cholesky() else {
        return 0.0;
    };
    let l = chol.l();
    let Some(half) = l.solve_lower_triangular(d) else {
        return 0.0;
    };
    let Some(s) = l.solve_lower_triangular(&half.transpose()) else {
        return 0.0;
    };
    let lam = SymmetricEigen::new(symmetrize(&s)).eigenvalues.min();
    if lam >= 0.0 {
        f64::INFINITY
    } else {
        -1.0 / lam
    }
}
