//! Exact rational linear algebra.
//!
//! Scalars are [`num::BigRational`], which keeps every value in lowest terms
//! with a positive denominator. Vectors and matrices are thin owned wrappers.
//! Kernels and ranks come from fraction-free elimination ([`kernel_basis`],
//! [`rank`]); linear feasibility with strict inequalities comes from a
//! two-phase rational simplex ([`feasible`]).

mod elim;
mod simplex;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Index, IndexMut};

use num::{BigInt, Integer, One, Signed, Zero};

use crate::error::{Error, Result};

pub use elim::{kernel_basis, rank, restricted_kernel};
pub use simplex::{feasible, LinearConstraint};

pub type Rational = num::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// A dense vector of rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct RatVec(Vec<Rational>);

impl RatVec {
    pub fn new(entries: Vec<Rational>) -> Self {
        Self(entries)
    }

    pub fn zeros(dim: usize) -> Self {
        Self(vec![Rational::zero(); dim])
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[i] = Rational::one();
        v
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        Self(entries.iter().map(|&x| rat(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Indices of the nonzero entries, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn support_size(&self) -> usize {
        self.0.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn dot(&self, other: &RatVec) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn dot_slice(&self, other: &[Rational]) -> Rational {
        debug_assert_eq!(self.dim(), other.len());
        self.0
            .iter()
            .zip(other)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn add(&self, other: &RatVec) -> RatVec {
        debug_assert_eq!(self.dim(), other.dim());
        RatVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &RatVec) -> RatVec {
        debug_assert_eq!(self.dim(), other.dim());
        RatVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, lambda: &Rational) -> RatVec {
        RatVec(self.0.iter().map(|a| a * lambda).collect())
    }

    pub fn neg(&self) -> RatVec {
        RatVec(self.0.iter().map(|a| -a).collect())
    }

    /// `self - lambda * other`
    pub fn sub_scaled(&self, lambda: &Rational, other: &RatVec) -> RatVec {
        debug_assert_eq!(self.dim(), other.dim());
        RatVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a - lambda * b)
                .collect(),
        )
    }

    /// The first `n` coordinates.
    pub fn head(&self, n: usize) -> RatVec {
        RatVec(self.0[..n].to_vec())
    }

    pub fn concat(&self, tail: &[Rational]) -> RatVec {
        let mut v = self.0.clone();
        v.extend_from_slice(tail);
        RatVec(v)
    }

    /// If `self = lambda * other` for some `lambda`, returns it. Only the
    /// zero vector is a multiple of the zero vector.
    pub fn ratio_to(&self, other: &RatVec) -> Option<Rational> {
        if self.dim() != other.dim() {
            return None;
        }
        if other.is_zero() {
            return self.is_zero().then(Rational::one);
        }
        let k = other.0.iter().position(|x| !x.is_zero())?;
        let lambda = &self.0[k] / &other.0[k];
        self.0
            .iter()
            .zip(&other.0)
            .all(|(a, b)| *a == &lambda * b)
            .then_some(lambda)
    }

    pub fn is_proportional(&self, other: &RatVec) -> bool {
        self.ratio_to(other).is_some() || other.ratio_to(self).is_some()
    }

    /// Total order used for every deterministic listing: ascending support
    /// (as an index sequence), then entries.
    pub fn support_order(&self, other: &RatVec) -> Ordering {
        self.support()
            .cmp(&other.support())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl Index<usize> for RatVec {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl IndexMut<usize> for RatVec {
    fn index_mut(&mut self, i: usize) -> &mut Rational {
        &mut self.0[i]
    }
}

impl From<Vec<Rational>> for RatVec {
    fn from(v: Vec<Rational>) -> Self {
        Self(v)
    }
}

impl FromIterator<Rational> for RatVec {
    fn from_iter<I: IntoIterator<Item = Rational>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl fmt::Display for RatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Row-major dense rational matrix. A matrix may have zero rows and still
/// carry a column count.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Self {
            rows: n,
            cols,
            data,
        })
    }

    /// Convenience constructor; panics on ragged input.
    pub fn from_i64(cols: usize, rows: &[&[i64]]) -> Self {
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
        .expect("ragged matrix literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> RatVec {
        RatVec(self.row(i).to_vec())
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Rational]> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn mul_vec(&self, v: &RatVec) -> Result<RatVec> {
        if v.dim() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.dim(),
            });
        }
        Ok(self.row_iter().map(|r| v.dot_slice(r)).collect())
    }

    pub fn push_row(&mut self, row: &[Rational]) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: row.len(),
            });
        }
        self.data.extend_from_slice(row);
        self.rows += 1;
        Ok(())
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn vstack(&self, other: &RatMat) -> Result<RatMat> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(RatMat {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn select_rows(&self, rows: &[usize]) -> RatMat {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &i in rows {
            data.extend_from_slice(self.row(i));
        }
        RatMat {
            rows: rows.len(),
            cols: self.cols,
            data,
        }
    }

    pub fn select_columns(&self, cols: &[usize]) -> RatMat {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for i in 0..self.rows {
            let r = self.row(i);
            data.extend(cols.iter().map(|&j| r[j].clone()));
        }
        RatMat {
            rows: self.rows,
            cols: cols.len(),
            data,
        }
    }

    pub fn neg(&self) -> RatMat {
        RatMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        self.row_iter().map(<[Rational]>::to_vec).collect()
    }
}

impl Index<(usize, usize)> for RatMat {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RatMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

/// Clears denominators and common factors: returns the unique `lambda * v`
/// with `lambda > 0` whose entries are coprime integers.
pub fn normalize_primitive(v: &RatVec) -> Result<RatVec> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x)).abs();
    Ok(ints
        .into_iter()
        .map(|x| Rational::from_integer(x / &gcd))
        .collect())
}
