//! Definition-level reference procedures.
//!
//! Everything here decides the special-vector predicates straight from their
//! definitions with exact feasibility problems, independent of the
//! restricted-kernel criteria used by [`crate::scone`], [`crate::cone`] and
//! [`crate::polyhedron`]. All of it is exponential and guarded by size.
//!
//! Non-proportionality is an open condition; it is made finite by fixing one
//! coordinate `j` in the support of `x`: `y` is a multiple of `x` iff
//! `x_j y_i = x_i y_j` for every `i`, so `y` is not a multiple iff one of the
//! finitely many strict rows `±(x_j y_i - x_i y_j) > 0` is satisfiable.

pub mod random;

use itertools::Itertools;
use num::{Signed, Zero};

use crate::cone::PolyCone;
use crate::error::{Error, Result};
use crate::polyhedron::Polyhedron;
use crate::ratlin::{feasible, normalize_primitive, LinearConstraint, RatVec, Rational};
use crate::scone::SCone;
use crate::signs::conforms;

pub const BRUTE_EVS_MAX_DIM: usize = 12;
pub const BRUTE_CND_MAX_DIM: usize = 8;
pub const MIN_CONFORMAL_MAX_BOUND: usize = 6;

fn homogeneous(row: &[Rational]) -> LinearConstraint {
    (RatVec::new(row.to_vec()), Rational::zero())
}

/// All EV rays of `k`, by support-minimality straight from the definition.
///
/// Supports are visited by increasing size. A support that contains an
/// already accepted one is not minimal and is skipped. For any other support
/// `T`, every nonzero member with support inside `T` must have support
/// exactly `T` (a smaller one would have been accepted earlier), so `T` is a
/// minimal support iff some member has `±v_i > 0` for some `i` in `T`. Each
/// such witness is an EV; collecting witnesses over all `i` and both signs
/// yields every orientation of the ray set on `T`.
pub fn brute_evs(k: &SCone) -> Result<Vec<RatVec>> {
    let r = k.dim();
    if r > BRUTE_EVS_MAX_DIM {
        return Err(Error::SizeGuard(format!(
            "{r} coordinates, limit {BRUTE_EVS_MAX_DIM}"
        )));
    }
    let kernel_rows: Vec<LinearConstraint> = k.kernel_of().row_iter().map(homogeneous).collect();
    let weak: Vec<LinearConstraint> = k
        .nonneg()
        .iter()
        .map(|&f| (RatVec::unit(r, f), Rational::zero()))
        .collect();
    let mut minimal: Vec<Vec<usize>> = Vec::new();
    let mut out: Vec<RatVec> = Vec::new();
    for size in 1..=r {
        for t in (0..r).combinations(size) {
            if minimal.iter().any(|m| m.iter().all(|i| t.contains(i))) {
                continue;
            }
            let mut eq = kernel_rows.clone();
            eq.extend(
                (0..r)
                    .filter(|i| !t.contains(i))
                    .map(|i| (RatVec::unit(r, i), Rational::zero())),
            );
            let mut found = false;
            for &i in &t {
                let signs: &[bool] = if k.nonneg().contains(&i) {
                    &[true]
                } else {
                    &[true, false]
                };
                for &positive in signs {
                    let unit = RatVec::unit(r, i);
                    let strict = [(if positive { unit } else { unit.neg() }, Rational::zero())];
                    if let Some(w) = feasible(&strict, &weak, &eq, r)? {
                        assert_eq!(w.support(), t, "witness support must be exactly T");
                        let w = normalize_primitive(&w)?;
                        if !out.contains(&w) {
                            out.push(w);
                        }
                        found = true;
                    }
                }
            }
            if found {
                minimal.push(t);
            }
        }
    }
    out.sort_by(RatVec::support_order);
    Ok(out)
}

/// Smallest number of EVs (at most `bound`) with a strictly positive
/// combination equal to `x`, using only EVs conformal to `x`.
pub fn min_conformal_size(k: &SCone, x: &RatVec, bound: usize) -> Result<Option<usize>> {
    if bound > MIN_CONFORMAL_MAX_BOUND {
        return Err(Error::SizeGuard(format!(
            "bound {bound}, limit {MIN_CONFORMAL_MAX_BOUND}"
        )));
    }
    if let Some(msg) = k.first_violation(x)? {
        return Err(Error::NotMember(msg));
    }
    if x.is_zero() {
        return Ok(Some(0));
    }
    let evs: Vec<RatVec> = brute_evs(k)?
        .into_iter()
        .filter(|e| conforms(e, x).unwrap_or(false))
        .collect();
    for size in 1..=bound {
        for subset in evs.iter().combinations(size) {
            if positive_combination(&subset, x)?.is_some() {
                return Ok(Some(size));
            }
        }
    }
    Ok(None)
}

/// Coefficients `lambda > 0` with `sum lambda_i v_i = x`, if they exist.
pub fn positive_combination(vectors: &[&RatVec], x: &RatVec) -> Result<Option<RatVec>> {
    let n = vectors.len();
    let eq: Vec<LinearConstraint> = (0..x.dim())
        .map(|c| (vectors.iter().map(|v| v[c].clone()).collect(), x[c].clone()))
        .collect();
    let strict: Vec<LinearConstraint> = (0..n)
        .map(|i| (RatVec::unit(n, i), Rational::zero()))
        .collect();
    feasible(&strict, &[], &eq, n)
}

/// Searches `y` with `eq . y = 0`, `y_i = 0` off `supp(x)`, `ineq . y >= 0`
/// and `ineq . (x - y) >= 0`, both `y` and `x - y` conformal to `x`, and `y`
/// not a multiple of `x`. Such `y` exists iff `x = y + (x - y)` is a
/// conformal split into non-proportional members.
fn conformal_split(x: &RatVec, eq_rows: &[LinearConstraint], ineq_rows: &[RatVec]) -> Result<bool> {
    let r = x.dim();
    let supp = x.support();
    let Some(&pivot) = supp.first() else {
        return Err(Error::ZeroVector);
    };
    let mut eq: Vec<LinearConstraint> = eq_rows.to_vec();
    eq.extend(
        (0..r)
            .filter(|i| x[*i].is_zero())
            .map(|i| (RatVec::unit(r, i), Rational::zero())),
    );
    let mut weak: Vec<LinearConstraint> = Vec::new();
    for a in ineq_rows {
        weak.push((a.clone(), Rational::zero()));
        weak.push((a.neg(), -a.dot(x)));
    }
    for &i in &supp {
        let e = if x[i].is_positive() {
            RatVec::unit(r, i)
        } else {
            RatVec::unit(r, i).neg()
        };
        let xi = e.dot(x);
        weak.push((e.clone(), Rational::zero()));
        weak.push((e.neg(), -xi));
    }
    for &i in supp.iter().filter(|&&i| i != pivot) {
        // x_pivot * y_i - x_i * y_pivot
        let mut row = RatVec::zeros(r);
        row[i] = x[pivot].clone();
        row[pivot] = -x[i].clone();
        for strict_row in [row.clone(), row.neg()] {
            if feasible(&[(strict_row, Rational::zero())], &weak, &eq, r)?.is_some() {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Conformal non-decomposability in an s-cone, from the definition.
pub fn brute_cnd(k: &SCone, x: &RatVec) -> Result<bool> {
    let r = k.dim();
    if r > BRUTE_CND_MAX_DIM {
        return Err(Error::SizeGuard(format!(
            "{r} coordinates, limit {BRUTE_CND_MAX_DIM}"
        )));
    }
    if let Some(msg) = k.first_violation(x)? {
        return Err(Error::NotMember(msg));
    }
    let eq: Vec<LinearConstraint> = k.kernel_of().row_iter().map(homogeneous).collect();
    let ineq: Vec<RatVec> = k.nonneg().iter().map(|&f| RatVec::unit(r, f)).collect();
    Ok(!conformal_split(x, &eq, &ineq)?)
}

/// Conformal non-decomposability in a polyhedral cone, from the definition.
pub fn brute_cnd_cone(c: &PolyCone, x: &RatVec) -> Result<bool> {
    let r = c.ambient_dim();
    if r > BRUTE_CND_MAX_DIM {
        return Err(Error::SizeGuard(format!(
            "{r} coordinates, limit {BRUTE_CND_MAX_DIM}"
        )));
    }
    if let Some(msg) = c.first_violation(x)? {
        return Err(Error::NotMember(msg));
    }
    let ineq: Vec<RatVec> = (0..c.matrix().rows())
        .map(|i| c.matrix().row_vec(i))
        .collect();
    Ok(!conformal_split(x, &[], &ineq)?)
}

/// Convex-conformal non-decomposability, from the definition: `x` is ccND
/// iff no `y != 0` has `x + y` and `x - y` both in `P` and conformal to `x`.
pub fn brute_ccnd(p: &Polyhedron, x: &RatVec) -> Result<bool> {
    let r = p.ambient_dim();
    if r > BRUTE_CND_MAX_DIM {
        return Err(Error::SizeGuard(format!(
            "{r} coordinates, limit {BRUTE_CND_MAX_DIM}"
        )));
    }
    if let Some(msg) = p.first_violation(x)? {
        return Err(Error::NotMember(msg));
    }
    let slack = p.slack(x)?;
    let mut weak: Vec<LinearConstraint> = Vec::new();
    for i in 0..p.a_in().rows() {
        let a = p.a_in().row_vec(i);
        // a.(x +- y) >= b  <=>  +-a.y >= -slack_i
        weak.push((a.clone(), -slack[i].clone()));
        weak.push((a.neg(), -slack[i].clone()));
    }
    let mut eq: Vec<LinearConstraint> = p.a_eq().row_iter().map(homogeneous).collect();
    for i in 0..r {
        let e = RatVec::unit(r, i);
        if x[i].is_zero() {
            eq.push((e, Rational::zero()));
        } else {
            // s (x_i +- y_i) >= 0  <=>  +-s y_i >= -|x_i|
            weak.push((e.clone(), -x[i].abs()));
            weak.push((e.neg(), -x[i].abs()));
        }
    }
    for i in 0..r {
        for e in [RatVec::unit(r, i), RatVec::unit(r, i).neg()] {
            if feasible(&[(e, Rational::zero())], &weak, &eq, r)?.is_some() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every `size`-subset of `evs` with a strictly positive combination equal
/// to `x`, flagged `true` when some member of the subset has no private
/// coordinate (one that is nonzero in it and zero in all the others).
pub fn decomposing_subsets(
    evs: &[RatVec],
    x: &RatVec,
    size: usize,
) -> Result<Vec<(Vec<RatVec>, bool)>> {
    let mut out = Vec::new();
    for subset in evs.iter().combinations(size) {
        if positive_combination(&subset, x)?.is_none() {
            continue;
        }
        let lacks_private = subset.iter().enumerate().any(|(k, e)| {
            !e.support().into_iter().any(|i| {
                subset
                    .iter()
                    .enumerate()
                    .all(|(l, o)| l == k || o[i].is_zero())
            })
        });
        out.push((subset.into_iter().cloned().collect(), lacks_private));
    }
    Ok(out)
}
