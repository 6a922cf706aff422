//! Exact solver for `max c.w  s.t.  A w <= b,  0 <= w <= 1`.
//!
//! [`lp_solve`] runs a floating-point tableau simplex to locate an optimal
//! basis, then recomputes primal and dual solutions for that basis in exact
//! rational arithmetic and accepts them only if they certify optimality
//! exactly. If certification fails it falls back to [`lp_solve_exact`], a
//! rational tableau simplex under Bland's rule.
//!
//! In both tableaus the upper bounds are carried as explicit rows.

use num::{BigRational, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct Constraint {
    pub coeffs: Vec<BigRational>,
    pub bound: BigRational,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LinearProgram {
    pub num_vars: usize,
    pub objective: Vec<BigRational>,
    pub constraints: Vec<Constraint>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LpSolution {
    pub value: BigRational,
    pub assignment: Vec<BigRational>,
    /// One multiplier per constraint row, in input order.
    pub duals: Vec<BigRational>,
    /// Multipliers on the `w_i <= 1` bounds.
    pub bound_duals: Vec<BigRational>,
    pub dual_value: BigRational,
    pub pivots: usize,
}

impl LinearProgram {
    pub fn new(objective: Vec<BigRational>) -> Self {
        LinearProgram {
            num_vars: objective.len(),
            objective,
            constraints: Vec::new(),
        }
    }

    pub fn add_constraint(&mut self, coeffs: Vec<BigRational>, bound: BigRational) {
        self.constraints.push(Constraint { coeffs, bound });
    }

    fn validate(&self) -> Result<()> {
        if self.objective.len() != self.num_vars {
            return Err(Error::invalid(format!(
                "objective has {} coefficients for {} variables",
                self.objective.len(),
                self.num_vars
            )));
        }
        for (i, c) in self.constraints.iter().enumerate() {
            if c.coeffs.len() != self.num_vars {
                return Err(Error::invalid(format!(
                    "constraint {i} has {} coefficients for {} variables",
                    c.coeffs.len(),
                    self.num_vars
                )));
            }
            if c.bound.is_negative() {
                return Err(Error::invalid(format!(
                    "constraint {i} has negative bound; w = 0 must be feasible"
                )));
            }
        }
        Ok(())
    }
}

impl LpSolution {
    /// Exact optimality certificate: primal feasibility, dual feasibility,
    /// and equal objective values.
    pub fn certify(&self, lp: &LinearProgram) -> bool {
        let n = lp.num_vars;
        let zero = BigRational::zero();
        let one = BigRational::one();
        if self.assignment.len() != n
            || self.duals.len() != lp.constraints.len()
            || self.bound_duals.len() != n
        {
            return false;
        }
        let primal_ok = self.assignment.iter().all(|w| *w >= zero && *w <= one)
            && lp.constraints.iter().all(|c| {
                let lhs: BigRational = c
                    .coeffs
                    .iter()
                    .zip(&self.assignment)
                    .map(|(a, w)| a * w)
                    .sum();
                lhs <= c.bound
            });
        let value: BigRational = lp
            .objective
            .iter()
            .zip(&self.assignment)
            .map(|(c, w)| c * w)
            .sum();
        let dual_ok = self
            .duals
            .iter()
            .chain(&self.bound_duals)
            .all(|y| *y >= zero)
            && (0..n).all(|j| {
                let col: BigRational = lp
                    .constraints
                    .iter()
                    .zip(&self.duals)
                    .map(|(c, y)| &c.coeffs[j] * y)
                    .sum::<BigRational>()
                    + &self.bound_duals[j];
                col >= lp.objective[j]
            });
        let dual_value: BigRational = lp
            .constraints
            .iter()
            .zip(&self.duals)
            .map(|(c, y)| &c.bound * y)
            .sum::<BigRational>()
            + self.bound_duals.iter().sum::<BigRational>();
        primal_ok
            && dual_ok
            && value == self.value
            && dual_value == self.dual_value
            && value == dual_value
    }
}

pub fn lp_solve(lp: &LinearProgram) -> Result<LpSolution> {
    lp.validate()?;
    if let Some(basis) = float_basis(lp) {
        if let Some(sol) = solution_from_basis(lp, &basis.columns, basis.pivots) {
            return Ok(sol);
        }
    }
    lp_solve_exact(lp)
}

/// Rational tableau simplex with Bland's rule throughout.
pub fn lp_solve_exact(lp: &LinearProgram) -> Result<LpSolution> {
    lp.validate()?;
    let n = lp.num_vars;
    let m = lp.constraints.len();
    let rows = m + n;
    let cols = n + rows;
    let zero = BigRational::zero();
    let one = BigRational::one();

    // Row r: [structural | slacks | rhs]; slack of row r is column n + r.
    let mut tab: Vec<Vec<BigRational>> = Vec::with_capacity(rows);
    for (r, c) in lp.constraints.iter().enumerate() {
        let mut row = vec![zero.clone(); cols + 1];
        row[..n].clone_from_slice(&c.coeffs);
        row[n + r] = one.clone();
        row[cols] = c.bound.clone();
        tab.push(row);
    }
    for j in 0..n {
        let mut row = vec![zero.clone(); cols + 1];
        row[j] = one.clone();
        row[n + m + j] = one.clone();
        row[cols] = one.clone();
        tab.push(row);
    }
    // Reduced costs c_j - c_B B^-1 A_j; last entry is -(objective value).
    let mut reduced = vec![zero.clone(); cols + 1];
    reduced[..n].clone_from_slice(&lp.objective);
    let mut basis: Vec<usize> = (n..cols).collect();

    let mut pivots = 0;
    // Bland: lowest-index improving column.
    while let Some(enter) = (0..cols).find(|&j| reduced[j].is_positive()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for (r, row) in tab.iter().enumerate() {
            if !row[enter].is_positive() {
                continue;
            }
            let ratio = &row[cols] / &row[enter];
            let better = match &leave {
                None => true,
                Some((best_r, best)) => {
                    ratio < *best || (ratio == *best && basis[r] < basis[*best_r])
                }
            };
            if better {
                leave = Some((r, ratio));
            }
        }
        let Some((pr, _)) = leave else {
            // Unreachable under the box bounds: every column has a bound row.
            return Err(Error::invalid("linear program is unbounded"));
        };
        pivot(&mut tab, &mut reduced, pr, enter);
        basis[pr] = enter;
        pivots += 1;
    }

    let mut assignment = vec![zero.clone(); n];
    for (r, &b) in basis.iter().enumerate() {
        if b < n {
            assignment[b] = tab[r][cols].clone();
        }
    }
    let value = -&reduced[cols];
    let duals: Vec<BigRational> = (0..m).map(|r| -&reduced[n + r]).collect();
    let bound_duals: Vec<BigRational> = (0..n).map(|j| -&reduced[n + m + j]).collect();
    let dual_value = lp
        .constraints
        .iter()
        .zip(&duals)
        .map(|(c, y)| &c.bound * y)
        .sum::<BigRational>()
        + bound_duals.iter().sum::<BigRational>();

    let sol = LpSolution {
        value,
        assignment,
        duals,
        bound_duals,
        dual_value,
        pivots,
    };
    debug_assert!(sol.certify(lp), "simplex produced an uncertified optimum");
    Ok(sol)
}

struct FloatBasis {
    columns: Vec<usize>,
    pivots: usize,
}

const EPS: f64 = 1e-9;
/// Consecutive degenerate pivots tolerated under the largest-coefficient
/// rule before switching to Bland's rule.
const DEGENERATE_STREAK: usize = 50;

/// Floating-point tableau simplex; returns the final basis (one column per
/// row), or `None` if it fails to terminate within the pivot budget.
fn float_basis(lp: &LinearProgram) -> Option<FloatBasis> {
    let n = lp.num_vars;
    let m = lp.constraints.len();
    let rows = m + n;
    let cols = n + rows;
    let width = cols + 1;
    let to_f64 = |q: &BigRational| q.to_f64().unwrap_or(f64::NAN);

    let mut tab = vec![0.0f64; rows * width];
    for (r, c) in lp.constraints.iter().enumerate() {
        let row = &mut tab[r * width..(r + 1) * width];
        for (x, q) in row.iter_mut().zip(&c.coeffs) {
            *x = to_f64(q);
        }
        row[n + r] = 1.0;
        row[cols] = to_f64(&c.bound);
    }
    for j in 0..n {
        let row = &mut tab[(m + j) * width..(m + j + 1) * width];
        row[j] = 1.0;
        row[n + m + j] = 1.0;
        row[cols] = 1.0;
    }
    let mut reduced = vec![0.0f64; width];
    for (x, q) in reduced.iter_mut().zip(&lp.objective) {
        *x = to_f64(q);
    }
    let mut basis: Vec<usize> = (n..cols).collect();

    let budget = 50 * (rows + cols) + 1000;
    let mut streak = 0;
    let mut pivots = 0;
    loop {
        let bland = streak >= DEGENERATE_STREAK;
        let enter = if bland {
            (0..cols).find(|&j| reduced[j] > EPS)
        } else {
            (0..cols)
                .filter(|&j| reduced[j] > EPS)
                .max_by(|&a, &b| reduced[a].total_cmp(&reduced[b]).then(b.cmp(&a)))
        };
        let Some(enter) = enter else {
            break;
        };
        let mut leave: Option<(usize, f64)> = None;
        for r in 0..rows {
            let a = tab[r * width + enter];
            if a <= EPS {
                continue;
            }
            let ratio = tab[r * width + cols].max(0.0) / a;
            let better = match leave {
                None => true,
                Some((br, best)) => {
                    if ratio < best - 1e-12 * (1.0 + best.abs()) {
                        true
                    } else if ratio <= best + 1e-12 * (1.0 + best.abs()) {
                        if bland {
                            basis[r] < basis[br]
                        } else {
                            a > tab[br * width + enter]
                        }
                    } else {
                        false
                    }
                }
            };
            if better {
                leave = Some((r, ratio));
            }
        }
        let (pr, ratio) = leave?;
        streak = if ratio <= EPS { streak + 1 } else { 0 };

        let inv = 1.0 / tab[pr * width + enter];
        for x in &mut tab[pr * width..(pr + 1) * width] {
            *x *= inv;
        }
        let pivot_row: Vec<f64> = tab[pr * width..(pr + 1) * width].to_vec();
        let support: Vec<usize> = (0..width).filter(|&j| pivot_row[j] != 0.0).collect();
        for r in (0..rows).filter(|&r| r != pr) {
            let row = &mut tab[r * width..(r + 1) * width];
            let f = row[enter];
            if f != 0.0 {
                for &j in &support {
                    row[j] -= f * pivot_row[j];
                }
                row[enter] = 0.0;
            }
        }
        let f = reduced[enter];
        for &j in &support {
            reduced[j] -= f * pivot_row[j];
        }
        reduced[enter] = 0.0;
        basis[pr] = enter;

        pivots += 1;
        if pivots > budget {
            return None;
        }
    }
    Some(FloatBasis {
        columns: basis,
        pivots,
    })
}

/// Exact primal and dual solutions for a basis, kept only if they certify
/// optimality.
fn solution_from_basis(lp: &LinearProgram, basis: &[usize], pivots: usize) -> Option<LpSolution> {
    let n = lp.num_vars;
    let m = lp.constraints.len();
    let rows = m + n;
    let zero = BigRational::zero();
    let one = BigRational::one();

    let in_basis: Vec<bool> = {
        let mut v = vec![false; n + rows];
        for &b in basis {
            v[b] = true;
        }
        v
    };
    let structural: Vec<usize> = (0..n).filter(|&j| in_basis[j]).collect();
    let tight: Vec<usize> = (0..rows).filter(|&r| !in_basis[n + r]).collect();
    if structural.len() != tight.len() {
        return None;
    }
    let coeff = |r: usize, j: usize| -> BigRational {
        if r < m {
            lp.constraints[r].coeffs[j].clone()
        } else if r - m == j {
            one.clone()
        } else {
            zero.clone()
        }
    };
    let rhs = |r: usize| -> BigRational {
        if r < m {
            lp.constraints[r].bound.clone()
        } else {
            one.clone()
        }
    };

    let a: Vec<Vec<BigRational>> = tight
        .iter()
        .map(|&r| structural.iter().map(|&j| coeff(r, j)).collect())
        .collect();
    let at: Vec<Vec<BigRational>> = (0..structural.len())
        .map(|i| (0..tight.len()).map(|k| a[k][i].clone()).collect())
        .collect();
    let x_s = solve_rational(a, tight.iter().map(|&r| rhs(r)).collect())?;
    let y_t = solve_rational(
        at,
        structural
            .iter()
            .map(|&j| lp.objective[j].clone())
            .collect(),
    )?;

    let mut assignment = vec![zero.clone(); n];
    for (&j, x) in structural.iter().zip(x_s) {
        assignment[j] = x;
    }
    let mut duals = vec![zero.clone(); m];
    let mut bound_duals = vec![zero.clone(); n];
    for (&r, y) in tight.iter().zip(y_t) {
        if r < m {
            duals[r] = y;
        } else {
            bound_duals[r - m] = y;
        }
    }
    let value: BigRational = lp
        .objective
        .iter()
        .zip(&assignment)
        .map(|(c, x)| c * x)
        .sum();
    let dual_value = lp
        .constraints
        .iter()
        .zip(&duals)
        .map(|(c, y)| &c.bound * y)
        .sum::<BigRational>()
        + bound_duals.iter().sum::<BigRational>();
    let sol = LpSolution {
        value,
        assignment,
        duals,
        bound_duals,
        dual_value,
        pivots,
    };
    sol.certify(lp).then_some(sol)
}

/// Gaussian elimination over the rationals; `None` if `a` is singular.
fn solve_rational(
    mut a: Vec<Vec<BigRational>>,
    mut b: Vec<BigRational>,
) -> Option<Vec<BigRational>> {
    let k = b.len();
    for col in 0..k {
        let p = (col..k).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, p);
        b.swap(col, p);
        let inv = a[col][col].recip();
        for x in a[col][col..].iter_mut() {
            *x *= &inv;
        }
        b[col] *= &inv;
        let (head, tail) = a.split_at_mut(col + 1);
        let pivot_row = &head[col];
        let (b_head, b_tail) = b.split_at_mut(col + 1);
        for (row, rb) in tail.iter_mut().zip(b_tail.iter_mut()) {
            if row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for j in col..k {
                if !pivot_row[j].is_zero() {
                    row[j] -= &f * &pivot_row[j];
                }
            }
            *rb -= &f * &b_head[col];
        }
    }
    for col in (0..k).rev() {
        let mut acc = b[col].clone();
        for j in col + 1..k {
            if !a[col][j].is_zero() {
                acc -= &a[col][j] * &b[j];
            }
        }
        b[col] = acc;
    }
    Some(b)
}

fn pivot(tab: &mut [Vec<BigRational>], reduced: &mut [BigRational], pr: usize, pc: usize) {
    let inv = tab[pr][pc].recip();
    for x in tab[pr].iter_mut() {
        if !x.is_zero() {
            *x *= &inv;
        }
    }
    let pivot_row = std::mem::take(&mut tab[pr]);
    let support: Vec<usize> = (0..pivot_row.len())
        .filter(|&j| !pivot_row[j].is_zero())
        .collect();
    let eliminate = |row: &mut [BigRational]| {
        if row[pc].is_zero() {
            return;
        }
        let f = row[pc].clone();
        for &j in &support {
            row[j] -= &f * &pivot_row[j];
        }
    };
    for (r, row) in tab.iter_mut().enumerate() {
        if r != pr {
            eliminate(row);
        }
    }
    eliminate(reduced);
    tab[pr] = pivot_row;
}
