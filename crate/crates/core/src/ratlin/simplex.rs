//! Exact feasibility for systems of linear equations, weak and strict
//! inequalities.
//!
//! Free variables are split as `x = x+ - x-`. Every strict row `a.x > c`
//! becomes `a.x - t >= c` with one shared gap variable `0 <= t <= 1`. Phase 1
//! finds a basic feasible point with artificial variables; phase 2 maximizes
//! `t`. The strict system is feasible iff the optimum gap is positive. Both
//! phases pivot with Bland's rule, so they terminate without perturbation.

use num::{One, Signed, Zero};

use super::{RatVec, Rational};
use crate::error::{Error, Result};

/// `coeffs . x  (op)  rhs`, where the operator is given by the list the
/// constraint is passed in.
pub type LinearConstraint = (RatVec, Rational);

struct Tableau {
    /// `rows x (ncols + 1)`; the last column is the right-hand side.
    a: Vec<Vec<Rational>>,
    /// Reduced costs, `ncols + 1` entries; the last one is minus the objective.
    cost: Vec<Rational>,
    basis: Vec<usize>,
    ncols: usize,
}

enum Outcome {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Rational {
        &self.a[i][self.ncols]
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.a[row][col].clone();
        for x in self.a[row].iter_mut() {
            *x /= &p;
        }
        let pivot_row = self.a[row].clone();
        for (i, r) in self.a.iter_mut().enumerate() {
            if i == row || r[col].is_zero() {
                continue;
            }
            let f = r[col].clone();
            for (x, y) in r.iter_mut().zip(&pivot_row) {
                *x -= &f * y;
            }
        }
        if !self.cost[col].is_zero() {
            let f = self.cost[col].clone();
            for (x, y) in self.cost.iter_mut().zip(&pivot_row) {
                *x -= &f * y;
            }
        }
        self.basis[row] = col;
    }

    /// Minimizes the current cost row over columns `< allowed`.
    fn run(&mut self, allowed: usize) -> Outcome {
        loop {
            // Bland: lowest-index improving column
            let Some(col) = (0..allowed).find(|&j| self.cost[j].is_negative()) else {
                return Outcome::Optimal;
            };
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..self.a.len() {
                let coef = &self.a[i][col];
                if !coef.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / coef;
                let better = match &best {
                    None => true,
                    Some((bi, br)) => {
                        ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi])
                    }
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            let Some((row, _)) = best else {
                return Outcome::Unbounded;
            };
            self.pivot(row, col);
        }
    }

    fn value(&self, col: usize) -> Rational {
        self.basis
            .iter()
            .position(|&b| b == col)
            .map(|i| self.rhs(i).clone())
            .unwrap_or_else(Rational::zero)
    }
}

fn check_dims(list: &[LinearConstraint], dim: usize) -> Result<()> {
    match list.iter().find(|(a, _)| a.dim() != dim) {
        Some((a, _)) => Err(Error::DimensionMismatch {
            expected: dim,
            found: a.dim(),
        }),
        None => Ok(()),
    }
}

/// Finds `x` with `a.x > c` for every strict row, `a.x >= c` for every weak
/// row and `a.x = c` for every equation, or returns `None` if no such `x`
/// exists. Exact: a returned witness satisfies every row with no tolerance.
pub fn feasible(
    strict: &[LinearConstraint],
    weak: &[LinearConstraint],
    eq: &[LinearConstraint],
    dim: usize,
) -> Result<Option<RatVec>> {
    check_dims(strict, dim)?;
    check_dims(weak, dim)?;
    check_dims(eq, dim)?;

    let has_gap = !strict.is_empty();
    // column layout: x+ | x- | t | slacks | u (t + u = 1) | artificials
    let gap_col = 2 * dim;
    let slack0 = gap_col + usize::from(has_gap);
    let n_ineq = strict.len() + weak.len();
    let u_col = slack0 + n_ineq;
    let n_struct = u_col + usize::from(has_gap);

    let mut rows: Vec<(Vec<Rational>, Rational)> = Vec::new();
    let mut push = |a: &RatVec, c: &Rational, slack: Option<usize>, gap: bool| {
        let mut row = vec![Rational::zero(); n_struct];
        for (k, x) in a.iter().enumerate() {
            row[k] = x.clone();
            row[dim + k] = -x;
        }
        if gap {
            row[gap_col] = -Rational::one();
        }
        if let Some(s) = slack {
            row[s] = -Rational::one();
        }
        rows.push((row, c.clone()));
    };
    for (k, (a, c)) in strict.iter().enumerate() {
        push(a, c, Some(slack0 + k), true);
    }
    for (k, (a, c)) in weak.iter().enumerate() {
        push(a, c, Some(slack0 + strict.len() + k), false);
    }
    for (a, c) in eq {
        push(a, c, None, false);
    }
    if has_gap {
        let mut row = vec![Rational::zero(); n_struct];
        row[gap_col] = Rational::one();
        row[u_col] = Rational::one();
        rows.push((row, Rational::one()));
    }

    let m = rows.len();
    let ncols = n_struct + m;
    let mut a = Vec::with_capacity(m);
    for (i, (mut row, mut c)) in rows.into_iter().enumerate() {
        if c.is_negative() {
            row.iter_mut().for_each(|x| *x = -&*x);
            c = -c;
        }
        row.resize(ncols, Rational::zero());
        row[n_struct + i] = Rational::one();
        row.push(c);
        a.push(row);
    }

    // phase 1: minimize the sum of artificials
    let mut cost = vec![Rational::zero(); ncols + 1];
    for row in &a {
        for j in 0..n_struct {
            cost[j] -= &row[j];
        }
        cost[ncols] -= &row[ncols];
    }
    let mut tab = Tableau {
        a,
        cost,
        basis: (n_struct..ncols).collect(),
        ncols,
    };
    tab.run(n_struct);
    if !tab.cost[ncols].is_zero() {
        return Ok(None);
    }

    // drive zero-level artificials out of the basis; drop redundant rows
    let mut i = 0;
    while i < tab.a.len() {
        if tab.basis[i] >= n_struct {
            match (0..n_struct).find(|&j| !tab.a[i][j].is_zero()) {
                Some(j) => tab.pivot(i, j),
                None => {
                    tab.a.remove(i);
                    tab.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }

    if has_gap {
        // phase 2: maximize t, i.e. minimize -t
        let mut cost = vec![Rational::zero(); ncols + 1];
        cost[gap_col] = -Rational::one();
        for (row, &b) in tab.a.iter().zip(&tab.basis) {
            if b == gap_col {
                for (x, y) in cost.iter_mut().zip(row) {
                    *x += y;
                }
            }
        }
        tab.cost = cost;
        if let Outcome::Unbounded = tab.run(n_struct) {
            unreachable!("gap variable is bounded by 1");
        }
        if !tab.value(gap_col).is_positive() {
            return Ok(None);
        }
    }

    let x: RatVec = (0..dim)
        .map(|k| tab.value(k) - tab.value(dim + k))
        .collect();
    debug_assert!(strict.iter().all(|(a, c)| a.dot(&x) > *c));
    debug_assert!(weak.iter().all(|(a, c)| a.dot(&x) >= *c));
    debug_assert!(eq.iter().all(|(a, c)| a.dot(&x) == *c));
    Ok(Some(x))
}
