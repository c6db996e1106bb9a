//! s-cones: a linear subspace `S = ker(M)` with nonnegativity imposed on an
//! arbitrary set of coordinates `F`.
//!
//! Elementary vectors (EVs) of an s-cone are its support-minimal members.
//! For s-cones support-minimality, support-wise non-decomposability and
//! conformal non-decomposability coincide, and every member is a conformal
//! sum of at most `dim(S)` EVs. Up to positive scaling there are finitely
//! many EVs, one per sign-compatible circuit orientation of `M`.
//!
//! A member `v` is elementary iff `{w in S : supp(w) ⊆ supp(v)}` is a line.
//! If that space had dimension two or more, some `w` in it is not
//! proportional to `v`, and moving from `v` along `w` until the first
//! coordinate vanishes gives a member with strictly smaller support. If it is
//! a line, every nonzero member with support inside `supp(v)` is a multiple
//! of `v` and so has the same support.

use itertools::Itertools;
use num::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ratlin::{
    feasible, kernel_basis, normalize_primitive, rank, restricted_kernel, LinearConstraint, RatMat,
    RatVec, Rational,
};
use crate::signs::conforms;

/// `{v : M v = 0, v_i >= 0 for i in nonneg}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SCone {
    kernel_of: RatMat,
    nonneg: Vec<usize>,
}

/// A conformal sum of elementary vectors. Each term is a positive multiple
/// of an EV; terms are ordered so that every term has a coordinate that is
/// nonzero in it and zero in all earlier terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicDecomposition {
    pub input: RatVec,
    pub terms: Vec<RatVec>,
}

impl ConicDecomposition {
    pub fn sum(&self) -> RatVec {
        self.terms
            .iter()
            .fold(RatVec::zeros(self.input.dim()), |acc, t| acc.add(t))
    }

    /// Each term as `(weight, primitive EV)` with `term = weight * ev`.
    pub fn weighted_terms(&self) -> Vec<(Rational, RatVec)> {
        self.terms
            .iter()
            .map(|t| {
                let ev = normalize_primitive(t).expect("terms are nonzero");
                let w = t.ratio_to(&ev).expect("positive multiple");
                (w, ev)
            })
            .collect()
    }

    /// Every term has a coordinate that is nonzero there and zero in all
    /// earlier terms.
    pub fn has_private_coordinate_order(&self) -> bool {
        self.terms.iter().enumerate().all(|(k, t)| {
            t.support()
                .into_iter()
                .any(|i| self.terms[..k].iter().all(|s| s[i].is_zero()))
        })
    }
}

impl SCone {
    pub fn new(kernel_of: RatMat, nonneg: Vec<usize>) -> Result<Self> {
        let r = kernel_of.cols();
        if let Some(&bad) = nonneg.iter().find(|&&i| i >= r) {
            return Err(Error::IndexOutOfRange { index: bad, dim: r });
        }
        let nonneg = nonneg.into_iter().sorted().dedup().collect();
        Ok(Self { kernel_of, nonneg })
    }

    /// The whole space `R^dim`.
    pub fn full_space(dim: usize) -> Self {
        Self {
            kernel_of: RatMat::zeros(0, dim),
            nonneg: Vec::new(),
        }
    }

    pub fn kernel_of(&self) -> &RatMat {
        &self.kernel_of
    }

    pub fn nonneg(&self) -> &[usize] {
        &self.nonneg
    }

    pub fn dim(&self) -> usize {
        self.kernel_of.cols()
    }

    /// `dim(S) = r - rank(M)`.
    pub fn subspace_dim(&self) -> usize {
        self.dim() - rank(&self.kernel_of)
    }

    /// Dimension of the cone itself: `dim(S)` minus the rank gained by the
    /// sign-constrained coordinates that vanish on every member.
    pub fn cone_dim(&self) -> usize {
        let r = self.dim();
        let eq: Vec<LinearConstraint> = self
            .kernel_of
            .row_iter()
            .map(|row| (RatVec::new(row.to_vec()), Rational::zero()))
            .collect();
        let weak: Vec<LinearConstraint> = self
            .nonneg
            .iter()
            .map(|&f| (RatVec::unit(r, f), Rational::zero()))
            .collect();
        let mut m = self.kernel_of.clone();
        for (k, &f) in self.nonneg.iter().enumerate() {
            let strict = [weak[k].clone()];
            if feasible(&strict, &weak, &eq, r)
                .expect("consistent dimensions")
                .is_none()
            {
                m.push_row(RatVec::unit(r, f).entries()).expect("r columns");
            }
        }
        r - rank(&m)
    }

    /// Same cone with the given coordinates additionally forced to zero.
    pub fn with_zero_coordinates(&self, zero: &[usize]) -> Result<SCone> {
        let r = self.dim();
        let mut m = self.kernel_of.clone();
        for &j in zero {
            if j >= r {
                return Err(Error::IndexOutOfRange { index: j, dim: r });
            }
            m.push_row(RatVec::unit(r, j).entries())?;
        }
        SCone::new(m, self.nonneg.clone())
    }

    fn check_dim(&self, v: &RatVec) -> Result<()> {
        if v.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.dim(),
            });
        }
        Ok(())
    }

    /// Description of the first violated constraint, if any.
    pub fn first_violation(&self, v: &RatVec) -> Result<Option<String>> {
        self.check_dim(v)?;
        for (i, row) in self.kernel_of.row_iter().enumerate() {
            let val = v.dot_slice(row);
            if !val.is_zero() {
                return Ok(Some(format!(
                    "kernel row {} evaluates to {val}, expected 0",
                    i + 1
                )));
            }
        }
        for &i in &self.nonneg {
            if v[i].is_negative() {
                return Ok(Some(format!(
                    "coordinate {} is {}, expected >= 0",
                    i + 1,
                    v[i]
                )));
            }
        }
        Ok(None)
    }

    pub fn contains(&self, v: &RatVec) -> Result<bool> {
        Ok(self.first_violation(v)?.is_none())
    }

    fn require_member(&self, v: &RatVec) -> Result<()> {
        match self.first_violation(v)? {
            Some(msg) => Err(Error::NotMember(msg)),
            None => Ok(()),
        }
    }

    fn nonneg_ok(&self, v: &RatVec) -> bool {
        self.nonneg.iter().all(|&i| !v[i].is_negative())
    }

    /// One step of support reduction: `x'' = x - lambda x'` with `x''` a
    /// nonzero member, `sign(x'') <= sign(x)` and `supp(x'')` strictly
    /// smaller than `supp(x)`. `lambda` is the largest positive value keeping
    /// `sign(x'') <= sign(x)` when `x'` agrees in sign with `x` somewhere on
    /// its support, otherwise the negative value closest to zero that zeroes
    /// a coordinate. In particular `lambda > 0` whenever `x'` conforms to `x`.
    pub fn conformal_reduce(&self, x: &RatVec, xp: &RatVec) -> Result<(Rational, RatVec)> {
        self.require_member(x)?;
        self.require_member(xp)?;
        if x.is_zero() || xp.is_zero() {
            return Err(Error::ZeroVector);
        }
        if x.is_proportional(xp) {
            return Err(Error::Proportional);
        }
        let supp = xp.support();
        if supp.iter().any(|&i| x[i].is_zero()) {
            return Err(Error::SupportNotContained);
        }
        let ratios = supp.iter().map(|&i| &x[i] / &xp[i]);
        let lambda = match ratios.clone().filter(Signed::is_positive).min() {
            Some(l) => l,
            None => ratios.max().expect("nonempty support"),
        };
        let reduced = x.sub_scaled(&lambda, xp);
        debug_assert!(conforms(&reduced, x)?);
        debug_assert!(reduced.support_size() < x.support_size());
        Ok((lambda, reduced))
    }

    /// Support-minimal membership via the restricted-kernel line criterion.
    pub fn is_elementary(&self, v: &RatVec) -> Result<bool> {
        self.check_dim(v)?;
        if v.is_zero() || !self.contains(v)? {
            return Ok(false);
        }
        Ok(restricted_kernel(&self.kernel_of, &v.support())?.len() == 1)
    }

    /// One primitive representative per EV ray, sorted by support then
    /// entries. Candidate supports are all index sets of size at most
    /// `rank(M) + 1`; a set is kept when its restricted kernel is a line whose
    /// generator has exactly that support, in every orientation admitted by
    /// the sign constraints.
    pub fn enumerate_evs(&self) -> Vec<RatVec> {
        let r = self.dim();
        let max_size = (rank(&self.kernel_of) + 1).min(r);
        let mut evs: Vec<RatVec> = (1..=max_size)
            .flat_map(|k| (0..r).combinations(k))
            .collect::<Vec<_>>()
            .into_par_iter()
            .flat_map_iter(|support| self.circuit_orientations(&support))
            .collect();
        evs.sort_by(RatVec::support_order);
        evs.dedup();
        evs
    }

    fn circuit_orientations(&self, support: &[usize]) -> Vec<RatVec> {
        let ker = restricted_kernel(&self.kernel_of, support).expect("indices in range");
        if ker.len() != 1 {
            return Vec::new();
        }
        let g = &ker[0];
        if g.support_size() != support.len() {
            return Vec::new();
        }
        [g.clone(), g.neg()]
            .into_iter()
            .filter(|v| self.nonneg_ok(v))
            .collect()
    }

    /// Conformal decomposition into EVs, enumerating the EVs first.
    pub fn conformal_decompose(&self, x: &RatVec) -> Result<ConicDecomposition> {
        let evs = self.enumerate_evs();
        self.conformal_decompose_with(&evs, x)
    }

    /// Greedy conformal decomposition against a precomputed EV list (as
    /// returned by [`SCone::enumerate_evs`]). Each round takes the first EV
    /// in list order that conforms to the residual and subtracts the largest
    /// multiple that keeps the residual conformal, which zeroes at least one
    /// coordinate. Terms are returned in reverse extraction order.
    pub fn conformal_decompose_with(
        &self,
        evs: &[RatVec],
        x: &RatVec,
    ) -> Result<ConicDecomposition> {
        self.require_member(x)?;
        let mut residual = x.clone();
        let mut terms = Vec::new();
        while !residual.is_zero() {
            let Some(e) = evs.iter().find(|e| conforms(e, &residual).unwrap_or(false)) else {
                // impossible for a complete EV list of this cone
                return Err(Error::Shape(
                    "EV list does not generate the residual conformally".into(),
                ));
            };
            let lambda = e
                .support()
                .into_iter()
                .map(|i| &residual[i] / &e[i])
                .min()
                .expect("EVs are nonzero");
            let term = e.scale(&lambda);
            residual = residual.sub(&term);
            terms.push(term);
        }
        terms.reverse();
        Ok(ConicDecomposition {
            input: x.clone(),
            terms,
        })
    }

    /// Support-wise non-decomposability, decided exactly.
    ///
    /// `x = x1 + x2` with supports inside `supp(x)` and `supp(x1) != supp(x2)`
    /// exists iff, after possibly swapping the parts, some `i` in `supp(x)`
    /// has `x1_i = 0` (then `x2_i = x_i != 0`). So it suffices to ask, for
    /// each such `i` and each `j` and sign, whether a member `x1` with
    /// `supp(x1) ⊆ supp(x) \ {i}`, `x - x1` a member and `±x1_j > 0` exists.
    pub fn is_swnd(&self, x: &RatVec) -> Result<bool> {
        self.require_member(x)?;
        if x.is_zero() {
            return Err(Error::ZeroVector);
        }
        let r = self.dim();
        let supp = x.support();
        let mut base_eq: Vec<LinearConstraint> = self
            .kernel_of
            .row_iter()
            .map(|row| (RatVec::new(row.to_vec()), Rational::zero()))
            .collect();
        for i in (0..r).filter(|i| x[*i].is_zero()) {
            base_eq.push((RatVec::unit(r, i), Rational::zero()));
        }
        let mut weak: Vec<LinearConstraint> = Vec::new();
        for &f in &self.nonneg {
            // x1_f >= 0 and x_f - x1_f >= 0
            weak.push((RatVec::unit(r, f), Rational::zero()));
            weak.push((RatVec::unit(r, f).neg(), -x[f].clone()));
        }
        for &i in &supp {
            let mut eq = base_eq.clone();
            eq.push((RatVec::unit(r, i), Rational::zero()));
            for &j in supp.iter().filter(|&&j| j != i) {
                for unit in [RatVec::unit(r, j), RatVec::unit(r, j).neg()] {
                    let strict = [(unit, Rational::zero())];
                    if feasible(&strict, &weak, &eq, r)?.is_some() {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// `true` iff every EV ray has a positive multiple in `g`. By
    /// minimality of the EV set among conformal generating sets, this is
    /// exactly the condition for `g` to generate every member conformally.
    pub fn is_conformal_generating_superset(&self, g: &[RatVec]) -> Result<bool> {
        for v in g {
            self.require_member(v)?;
        }
        let reps: Vec<RatVec> = g
            .iter()
            .filter(|v| !v.is_zero())
            .map(|v| normalize_primitive(v).expect("nonzero"))
            .collect();
        Ok(self.enumerate_evs().iter().all(|e| reps.contains(e)))
    }

    /// A basis of `S`.
    pub fn subspace_basis(&self) -> Vec<RatVec> {
        kernel_basis(&self.kernel_of)
    }
}
