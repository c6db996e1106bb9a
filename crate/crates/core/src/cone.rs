//! Polyhedral cones `C = {x : Ax >= 0}`.
//!
//! A cone is handled through its graph lift `C~ = {(x, Ax) : x in C}`, which
//! is the s-cone `ker([A | -I]) ∩ {s >= 0}` over `r + m` coordinates. The map
//! `x -> (x, Ax)` preserves and reflects conformal sums, so the conformally
//! non-decomposable vectors of `C` are exactly the projections of the EVs of
//! the lift.
//!
//! The lift here is the graph over all of `R^r` rather than over `span(C)`.
//! Both give the same set: any `(x, Ax)` with `Ax >= 0` has `x in C`, hence in
//! `span(C)`. Only the subspace dimension differs, and the cone dimension is
//! computed separately by [`PolyCone::dim`].

use itertools::Itertools;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ratlin::{
    feasible, kernel_basis, normalize_primitive, rank, LinearConstraint, RatMat, RatVec, Rational,
};
use crate::scone::{ConicDecomposition, SCone};
use crate::signs::Sign;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyCone {
    a: RatMat,
}

/// The s-cone `{(x, s) : Ax - s = 0, s >= 0}` together with the number of
/// original coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedCone {
    pub scone: SCone,
    pub original_dim: usize,
}

impl LiftedCone {
    pub fn project(&self, v: &RatVec) -> RatVec {
        v.head(self.original_dim)
    }
}

impl PolyCone {
    pub fn new(a: RatMat) -> Self {
        Self { a }
    }

    /// `R^dim`, no inequalities.
    pub fn whole_space(dim: usize) -> Self {
        Self {
            a: RatMat::zeros(0, dim),
        }
    }

    pub fn matrix(&self) -> &RatMat {
        &self.a
    }

    pub fn ambient_dim(&self) -> usize {
        self.a.cols()
    }

    fn check_dim(&self, x: &RatVec) -> Result<()> {
        if x.dim() != self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                found: x.dim(),
            });
        }
        Ok(())
    }

    pub fn lift(&self) -> LiftedCone {
        let (m, r) = (self.a.rows(), self.a.cols());
        let mut rows = Vec::with_capacity(m);
        for i in 0..m {
            let mut row = self.a.row(i).to_vec();
            row.extend((0..m).map(|k| {
                if k == i {
                    -Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            rows.push(row);
        }
        let kernel_of = RatMat::from_rows(r + m, rows).expect("rows have r + m entries");
        LiftedCone {
            scone: SCone::new(kernel_of, (r..r + m).collect()).expect("indices in range"),
            original_dim: r,
        }
    }

    /// `(x, Ax)`
    pub fn lift_vector(&self, x: &RatVec) -> Result<RatVec> {
        let ax = self.a.mul_vec(x)?;
        Ok(x.concat(ax.entries()))
    }

    pub fn first_violation(&self, x: &RatVec) -> Result<Option<String>> {
        self.check_dim(x)?;
        for (i, row) in self.a.row_iter().enumerate() {
            let val = x.dot_slice(row);
            if val.is_negative() {
                return Ok(Some(format!(
                    "inequality row {} evaluates to {val}, expected >= 0",
                    i + 1
                )));
            }
        }
        Ok(None)
    }

    pub fn contains(&self, x: &RatVec) -> Result<bool> {
        Ok(self.first_violation(x)?.is_none())
    }

    fn require_member(&self, x: &RatVec) -> Result<()> {
        match self.first_violation(x)? {
            Some(msg) => Err(Error::NotMember(msg)),
            None => Ok(()),
        }
    }

    /// Conformal non-decomposability, decided on the lift.
    pub fn is_elementary(&self, x: &RatVec) -> Result<bool> {
        self.check_dim(x)?;
        let lifted = self.lift_vector(x)?;
        self.lift().scone.is_elementary(&lifted)
    }

    /// Primitive representatives of the EV rays, sorted by support then
    /// entries.
    pub fn enumerate_evs(&self) -> Vec<RatVec> {
        let lifted = self.lift();
        let mut evs: Vec<RatVec> = lifted
            .scone
            .enumerate_evs()
            .iter()
            .map(|e| normalize_primitive(&lifted.project(e)).expect("lift is injective"))
            .collect();
        evs.sort_by(RatVec::support_order);
        evs.dedup();
        evs
    }

    pub fn conformal_decompose(&self, x: &RatVec) -> Result<ConicDecomposition> {
        self.require_member(x)?;
        let lifted = self.lift();
        let evs = lifted.scone.enumerate_evs();
        self.decompose_on_lift(&lifted, &evs, x)
    }

    /// Decomposition against precomputed lifted EVs.
    pub fn decompose_on_lift(
        &self,
        lifted: &LiftedCone,
        lifted_evs: &[RatVec],
        x: &RatVec,
    ) -> Result<ConicDecomposition> {
        self.require_member(x)?;
        let d = lifted
            .scone
            .conformal_decompose_with(lifted_evs, &self.lift_vector(x)?)?;
        Ok(ConicDecomposition {
            input: x.clone(),
            terms: d.terms.iter().map(|t| lifted.project(t)).collect(),
        })
    }

    /// Indices of the rows with `a_i x = 0`.
    pub fn tight_rows(&self, x: &RatVec) -> Result<Vec<usize>> {
        self.check_dim(x)?;
        Ok((0..self.a.rows())
            .filter(|&i| x.dot_slice(self.a.row(i)).is_zero())
            .collect())
    }

    /// Extremality: `x` is a nonzero member and the tight rows cut out a
    /// line. The smallest face containing `x` is `C ∩ {tight rows = 0}`,
    /// whose linear span is the kernel of the tight rows (x is in its
    /// relative interior); `x` spans an extreme ray iff that face is the ray
    /// itself, i.e. the kernel is one-dimensional.
    pub fn is_extreme(&self, x: &RatVec) -> Result<bool> {
        self.check_dim(x)?;
        if x.is_zero() || !self.contains(x)? {
            return Ok(false);
        }
        Ok(self.face_dim(x)? == 1)
    }

    /// Dimension of the kernel of the tight rows at `x`.
    pub fn face_dim(&self, x: &RatVec) -> Result<usize> {
        let tight = self.tight_rows(x)?;
        Ok(kernel_basis(&self.a.select_rows(&tight)).len())
    }

    /// Rows that vanish on all of `C`.
    pub fn implicit_equalities(&self) -> Vec<usize> {
        let r = self.ambient_dim();
        let weak: Vec<LinearConstraint> = self
            .a
            .row_iter()
            .map(|row| (RatVec::new(row.to_vec()), Rational::zero()))
            .collect();
        (0..self.a.rows())
            .filter(|&i| {
                let strict = [weak[i].clone()];
                feasible(&strict, &weak, &[], r)
                    .expect("consistent dimensions")
                    .is_none()
            })
            .collect()
    }

    /// `dim(C) = r - rank(implicit equality rows)`.
    pub fn dim(&self) -> usize {
        let eq = self.implicit_equalities();
        self.ambient_dim() - rank(&self.a.select_rows(&eq))
    }

    /// `C ∩ O` for the closed orthant `O` of the sign vector `signs`:
    /// `x_i >= 0` for `+`, `-x_i >= 0` for `-` and both for `0`.
    pub fn intersect_orthant(&self, signs: &[Sign]) -> Result<PolyCone> {
        let r = self.ambient_dim();
        if signs.len() != r {
            return Err(Error::DimensionMismatch {
                expected: r,
                found: signs.len(),
            });
        }
        let mut a = self.a.clone();
        for (i, s) in signs.iter().enumerate() {
            let e = RatVec::unit(r, i);
            match s {
                Sign::Pos => a.push_row(e.entries())?,
                Sign::Neg => a.push_row(e.neg().entries())?,
                Sign::Zero => {
                    a.push_row(e.entries())?;
                    a.push_row(e.neg().entries())?;
                }
            }
        }
        Ok(PolyCone::new(a))
    }

    /// Nonzero members in the relative interior: a witness with every
    /// non-implicit-equality row strictly positive. Useful as a sampling
    /// anchor; `None` when `C = {0}`.
    pub fn interior_witness(&self) -> Option<RatVec> {
        let r = self.ambient_dim();
        let eq = self.implicit_equalities();
        let weak: Vec<LinearConstraint> = self
            .a
            .row_iter()
            .map(|row| (RatVec::new(row.to_vec()), Rational::zero()))
            .collect();
        let strict: Vec<LinearConstraint> = (0..self.a.rows())
            .filter(|i| !eq.contains(i))
            .map(|i| weak[i].clone())
            .collect_vec();
        feasible(&strict, &weak, &[], r).ok().flatten()
    }
}
