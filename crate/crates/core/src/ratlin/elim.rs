//! Fraction-free (Bareiss-style) Gauss-Jordan elimination.
//!
//! Each row is first scaled to integers, which changes neither the row space
//! nor the kernel. Elimination then works over `BigInt` with exact division by
//! the previous pivot; every intermediate entry is a minor of the scaled
//! matrix, so the division never leaves a remainder. At the end all pivot
//! entries equal the last pivot `d`, which makes the kernel readable without
//! any further division.

use num::{BigInt, Integer, One, Zero};

use super::{normalize_primitive, RatMat, RatVec, Rational};
use crate::error::{Error, Result};

struct Reduced {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    diag: BigInt,
}

fn integer_rows(m: &RatMat) -> Vec<Vec<BigInt>> {
    m.row_iter()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .collect()
}

fn reduce(m: &RatMat) -> Reduced {
    let mut a = integer_rows(m);
    let nrows = m.rows();
    let ncols = m.cols();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let piv = a[r][c].clone();
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                let num = &piv * &*x - &f * y;
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "inexact fraction-free division");
                *x = q;
            }
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    Reduced {
        rows: a,
        pivots,
        diag: prev,
    }
}

/// Exact rank.
pub fn rank(m: &RatMat) -> usize {
    reduce(m).pivots.len()
}

/// Basis of `{v : M v = 0}`, one primitive integer vector per free column.
pub fn kernel_basis(m: &RatMat) -> Vec<RatVec> {
    let red = reduce(m);
    let n = m.cols();
    let mut is_pivot = vec![false; n];
    for &p in &red.pivots {
        is_pivot[p] = true;
    }
    (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = RatVec::zeros(n);
            v[f] = Rational::from_integer(red.diag.clone());
            for (row, &p) in red.rows.iter().zip(&red.pivots) {
                v[p] = Rational::from_integer(-&row[f]);
            }
            normalize_primitive(&v).expect("kernel vector has a nonzero free entry")
        })
        .collect()
}

/// Basis of `{v : M v = 0, v_i = 0 for i not in allowed}`, embedded in the
/// full coordinate space.
pub fn restricted_kernel(m: &RatMat, allowed: &[usize]) -> Result<Vec<RatVec>> {
    let n = m.cols();
    if let Some(&bad) = allowed.iter().find(|&&i| i >= n) {
        return Err(Error::IndexOutOfRange { index: bad, dim: n });
    }
    let sub = m.select_columns(allowed);
    Ok(kernel_basis(&sub)
        .into_iter()
        .map(|k| {
            let mut v = RatVec::zeros(n);
            for (x, &i) in k.into_entries().into_iter().zip(allowed) {
                v[i] = x;
            }
            v
        })
        .collect())
}
