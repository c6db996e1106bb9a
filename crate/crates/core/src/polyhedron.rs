//! Polyhedra `P = {x : A_in x >= b_in, A_eq x = b_eq}`.
//!
//! A polyhedron is lifted to the s-cone over `(x, xi, s)` with
//! `A_in x - xi b_in - s = 0`, `A_eq x - xi b_eq = 0`, `xi >= 0`, `s >= 0`.
//! Its slice `xi = 1` is `P` (with the slack values attached) and its slice
//! `xi = 0` is the recession cone. EVs of the lift with `xi = 0` project to
//! the conformally non-decomposable directions of the recession cone; EVs
//! with `xi > 0`, rescaled to `xi = 1`, project to the convex-conformally
//! non-decomposable points of `P`.
//!
//! Equality rows constrain the lifted subspace directly instead of being
//! split into two inequalities: both slacks of such a pair would vanish on
//! the whole lift, so the EVs are the same.

use num::{One, Signed, Zero};

use crate::cone::PolyCone;
use crate::error::{Error, Result};
use crate::ratlin::{
    feasible, normalize_primitive, rank, LinearConstraint, RatMat, RatVec, Rational,
};
use crate::scone::SCone;
use crate::signs::Sign;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polyhedron {
    a_in: RatMat,
    b_in: RatVec,
    a_eq: RatMat,
    b_eq: RatVec,
}

/// The two sorts of elementary vectors of a polyhedron.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PolyhedronEVs {
    /// Recession-cone EVs, primitive integer representatives.
    pub conic: Vec<RatVec>,
    /// Convex-conformally non-decomposable points, exact.
    pub points: Vec<RatVec>,
}

/// `input = sum(conic_terms) + sum(lambda * point)` with `lambda >= 0`
/// summing to one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineDecomposition {
    pub input: RatVec,
    pub conic_terms: Vec<RatVec>,
    pub convex_terms: Vec<(Rational, RatVec)>,
}

impl AffineDecomposition {
    pub fn sum(&self) -> RatVec {
        let mut acc = RatVec::zeros(self.input.dim());
        for t in &self.conic_terms {
            acc = acc.add(t);
        }
        for (l, p) in &self.convex_terms {
            acc = acc.add(&p.scale(l));
        }
        acc
    }

    pub fn weight_sum(&self) -> Rational {
        self.convex_terms
            .iter()
            .fold(Rational::zero(), |acc, (l, _)| acc + l)
    }

    pub fn len(&self) -> usize {
        self.conic_terms.len() + self.convex_terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl Polyhedron {
    pub fn new(a_in: RatMat, b_in: RatVec, a_eq: RatMat, b_eq: RatVec) -> Result<Self> {
        if a_in.cols() != a_eq.cols() {
            return Err(Error::Shape(format!(
                "inequality matrix has {} columns, equality matrix has {}",
                a_in.cols(),
                a_eq.cols()
            )));
        }
        if b_in.dim() != a_in.rows() {
            return Err(Error::DimensionMismatch {
                expected: a_in.rows(),
                found: b_in.dim(),
            });
        }
        if b_eq.dim() != a_eq.rows() {
            return Err(Error::DimensionMismatch {
                expected: a_eq.rows(),
                found: b_eq.dim(),
            });
        }
        Ok(Self {
            a_in,
            b_in,
            a_eq,
            b_eq,
        })
    }

    /// `{x : A x >= b}`
    pub fn from_inequalities(a: RatMat, b: RatVec) -> Result<Self> {
        let r = a.cols();
        Self::new(a, b, RatMat::zeros(0, r), RatVec::zeros(0))
    }

    pub fn ambient_dim(&self) -> usize {
        self.a_in.cols()
    }

    pub fn a_in(&self) -> &RatMat {
        &self.a_in
    }

    pub fn b_in(&self) -> &RatVec {
        &self.b_in
    }

    pub fn a_eq(&self) -> &RatMat {
        &self.a_eq
    }

    pub fn b_eq(&self) -> &RatVec {
        &self.b_eq
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

    /// `A_in x - b_in`
    pub fn slack(&self, x: &RatVec) -> Result<RatVec> {
        Ok(self.a_in.mul_vec(x)?.sub(&self.b_in))
    }

    pub fn first_violation(&self, x: &RatVec) -> Result<Option<String>> {
        self.check_dim(x)?;
        for (i, row) in self.a_in.row_iter().enumerate() {
            let val = x.dot_slice(row);
            if val < self.b_in[i] {
                return Ok(Some(format!(
                    "inequality row {} evaluates to {val}, expected >= {}",
                    i + 1,
                    self.b_in[i]
                )));
            }
        }
        for (i, row) in self.a_eq.row_iter().enumerate() {
            let val = x.dot_slice(row);
            if val != self.b_eq[i] {
                return Ok(Some(format!(
                    "equality row {} evaluates to {val}, expected {}",
                    i + 1,
                    self.b_eq[i]
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

    /// `{x : A_in x >= 0, A_eq x = 0}`, equalities as row pairs.
    pub fn recession_cone(&self) -> PolyCone {
        let a = self
            .a_in
            .vstack(&self.a_eq)
            .and_then(|m| m.vstack(&self.a_eq.neg()))
            .expect("same column count");
        PolyCone::new(a)
    }

    /// The cone over `(x, xi)`: `[A_in | -b_in] >= 0`, `xi >= 0`, and
    /// `[A_eq | -b_eq]` as a row pair.
    pub fn homogenize(&self) -> PolyCone {
        let r = self.ambient_dim();
        let mut a = RatMat::zeros(0, r + 1);
        for (row, b) in self.a_in.row_iter().zip(self.b_in.iter()) {
            let mut h = row.to_vec();
            h.push(-b);
            a.push_row(&h).expect("r + 1 entries");
        }
        a.push_row(RatVec::unit(r + 1, r).entries())
            .expect("r + 1 entries");
        for (row, b) in self.a_eq.row_iter().zip(self.b_eq.iter()) {
            let mut h = row.to_vec();
            h.push(-b);
            a.push_row(&h).expect("r + 1 entries");
            let neg: Vec<Rational> = h.iter().map(|x| -x).collect();
            a.push_row(&neg).expect("r + 1 entries");
        }
        PolyCone::new(a)
    }

    /// s-cone over `(x, xi, s)`; coordinate `r` is `xi`, coordinates
    /// `r + 1 ..` are the slacks.
    pub fn lift(&self) -> SCone {
        let (r, m) = (self.ambient_dim(), self.a_in.rows());
        let width = r + 1 + m;
        let mut k = RatMat::zeros(0, width);
        for i in 0..m {
            let mut row = self.a_in.row(i).to_vec();
            row.push(-&self.b_in[i]);
            row.extend((0..m).map(|j| {
                if i == j {
                    -Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            k.push_row(&row).expect("width entries");
        }
        for (row, b) in self.a_eq.row_iter().zip(self.b_eq.iter()) {
            let mut h = row.to_vec();
            h.push(-b);
            h.resize(width, Rational::zero());
            k.push_row(&h).expect("width entries");
        }
        SCone::new(k, (r..width).collect()).expect("indices in range")
    }

    /// `(x, 1, A_in x - b_in)`
    pub fn lift_point(&self, x: &RatVec) -> Result<RatVec> {
        let s = self.slack(x)?;
        Ok(x.concat(&[Rational::one()]).concat(s.entries()))
    }

    /// `(v, 0, A_in v)`
    pub fn lift_direction(&self, v: &RatVec) -> Result<RatVec> {
        let s = self.a_in.mul_vec(v)?;
        Ok(v.concat(&[Rational::zero()]).concat(s.entries()))
    }

    fn weak_rows(&self) -> (Vec<LinearConstraint>, Vec<LinearConstraint>) {
        let weak = self
            .a_in
            .row_iter()
            .zip(self.b_in.iter())
            .map(|(row, b)| (RatVec::new(row.to_vec()), b.clone()))
            .collect();
        let eq = self
            .a_eq
            .row_iter()
            .zip(self.b_eq.iter())
            .map(|(row, b)| (RatVec::new(row.to_vec()), b.clone()))
            .collect();
        (weak, eq)
    }

    /// Some member of `P`, or `None` when `P` is empty.
    pub fn witness(&self) -> Option<RatVec> {
        let (weak, eq) = self.weak_rows();
        feasible(&[], &weak, &eq, self.ambient_dim()).expect("consistent dimensions")
    }

    pub fn is_empty(&self) -> bool {
        self.witness().is_none()
    }

    /// Inequality rows that hold with equality on all of `P`.
    pub fn implicit_equalities(&self) -> Vec<usize> {
        let (weak, eq) = self.weak_rows();
        (0..weak.len())
            .filter(|&i| {
                let strict = [weak[i].clone()];
                feasible(&strict, &weak, &eq, self.ambient_dim())
                    .expect("consistent dimensions")
                    .is_none()
            })
            .collect()
    }

    /// `dim(P) = r - rank(A_eq ; implicit equality rows of A_in)`.
    pub fn dim(&self) -> Result<usize> {
        if self.is_empty() {
            return Err(Error::EmptyPolyhedron);
        }
        let implicit = self.a_in.select_rows(&self.implicit_equalities());
        let all = self.a_eq.vstack(&implicit).expect("same column count");
        Ok(self.ambient_dim() - rank(&all))
    }

    /// Vertex test: `x` is a member and the active rows (tight inequalities
    /// plus all equalities) have rank `r`.
    pub fn is_vertex(&self, x: &RatVec) -> Result<bool> {
        self.check_dim(x)?;
        if !self.contains(x)? {
            return Ok(false);
        }
        Ok(self.active_rank(x)? == self.ambient_dim())
    }

    pub fn active_rank(&self, x: &RatVec) -> Result<usize> {
        let s = self.slack(x)?;
        let tight: Vec<usize> = (0..s.dim()).filter(|&i| s[i].is_zero()).collect();
        let active = self
            .a_in
            .select_rows(&tight)
            .vstack(&self.a_eq)
            .expect("same column count");
        Ok(rank(&active))
    }

    /// Convex-conformal non-decomposability, decided on the lift.
    pub fn is_ccnd(&self, x: &RatVec) -> Result<bool> {
        self.check_dim(x)?;
        if !self.contains(x)? {
            return Ok(false);
        }
        self.lift().is_elementary(&self.lift_point(x)?)
    }

    /// Both sorts of EVs, each list sorted by support then entries. Empty
    /// when `P` is empty.
    pub fn enumerate_evs(&self) -> PolyhedronEVs {
        if self.is_empty() {
            return PolyhedronEVs::default();
        }
        let evs = self.lift().enumerate_evs();
        self.split_lifted_evs(&evs)
    }

    fn split_lifted_evs(&self, evs: &[RatVec]) -> PolyhedronEVs {
        let r = self.ambient_dim();
        let mut out = PolyhedronEVs::default();
        for e in evs {
            let xi = &e[r];
            if xi.is_zero() {
                out.conic
                    .push(normalize_primitive(&e.head(r)).expect("nonzero direction"));
            } else {
                out.points.push(e.head(r).scale(&xi.recip()));
            }
        }
        out.conic.sort_by(RatVec::support_order);
        out.conic.dedup();
        out.points.sort_by(RatVec::support_order);
        out.points.dedup();
        out
    }

    pub fn conformal_decompose(&self, x: &RatVec) -> Result<AffineDecomposition> {
        self.require_member(x)?;
        let lift = self.lift();
        let evs = lift.enumerate_evs();
        self.decompose_with_lifted(&lift, &evs, x)
    }

    /// Decomposition against precomputed EVs of [`Polyhedron::lift`].
    pub fn decompose_with_lifted(
        &self,
        lift: &SCone,
        lifted_evs: &[RatVec],
        x: &RatVec,
    ) -> Result<AffineDecomposition> {
        self.require_member(x)?;
        let r = self.ambient_dim();
        let d = lift.conformal_decompose_with(lifted_evs, &self.lift_point(x)?)?;
        let mut conic_terms = Vec::new();
        let mut convex_terms = Vec::new();
        for t in d.terms {
            let tau = t[r].clone();
            if tau.is_zero() {
                conic_terms.push(t.head(r));
            } else {
                debug_assert!(tau.is_positive());
                let point = t.head(r).scale(&tau.recip());
                convex_terms.push((tau, point));
            }
        }
        Ok(AffineDecomposition {
            input: x.clone(),
            conic_terms,
            convex_terms,
        })
    }

    /// `P ∩ O` for the closed orthant of `signs`; coordinates with sign `0`
    /// become equalities.
    pub fn intersect_orthant(&self, signs: &[Sign]) -> Result<Polyhedron> {
        let r = self.ambient_dim();
        if signs.len() != r {
            return Err(Error::DimensionMismatch {
                expected: r,
                found: signs.len(),
            });
        }
        let mut a_in = self.a_in.clone();
        let mut b_in = self.b_in.entries().to_vec();
        let mut a_eq = self.a_eq.clone();
        let mut b_eq = self.b_eq.entries().to_vec();
        for (i, s) in signs.iter().enumerate() {
            let e = RatVec::unit(r, i);
            match s {
                Sign::Pos => {
                    a_in.push_row(e.entries())?;
                    b_in.push(Rational::zero());
                }
                Sign::Neg => {
                    a_in.push_row(e.neg().entries())?;
                    b_in.push(Rational::zero());
                }
                Sign::Zero => {
                    a_eq.push_row(e.entries())?;
                    b_eq.push(Rational::zero());
                }
            }
        }
        Polyhedron::new(a_in, RatVec::new(b_in), a_eq, RatVec::new(b_eq))
    }

    /// Same polyhedron with extra equalities `x_j = 0`.
    pub fn with_zero_coordinates(&self, zero: &[usize]) -> Result<Polyhedron> {
        let r = self.ambient_dim();
        let mut a_eq = self.a_eq.clone();
        let mut b_eq = self.b_eq.entries().to_vec();
        for &j in zero {
            if j >= r {
                return Err(Error::IndexOutOfRange { index: j, dim: r });
            }
            a_eq.push_row(RatVec::unit(r, j).entries())?;
            b_eq.push(Rational::zero());
        }
        Polyhedron::new(
            self.a_in.clone(),
            self.b_in.clone(),
            a_eq,
            RatVec::new(b_eq),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratlin::{rat, ratio};

    fn v(x: &[i64]) -> RatVec {
        RatVec::from_i64(x)
    }

    fn plane_polyhedron() -> Polyhedron {
        Polyhedron::from_inequalities(
            RatMat::from_i64(2, &[&[3, 1], &[-3, 3], &[0, 2]]),
            v(&[1, -1, 1]),
        )
        .unwrap()
    }

    fn flux_polyhedron() -> Polyhedron {
        Polyhedron::new(
            RatMat::from_i64(
                4,
                &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[-1, 0, 0, 0]],
            ),
            v(&[0, 0, 0, -2]),
            RatMat::from_i64(4, &[&[1, -1, 0, -1], &[0, 1, -1, 0]]),
            v(&[0, 0]),
        )
        .unwrap()
    }

    fn half_line() -> Polyhedron {
        Polyhedron::from_inequalities(RatMat::from_i64(1, &[&[1]]), v(&[0])).unwrap()
    }

    fn pt(x: &[(i64, i64)]) -> RatVec {
        x.iter().map(|&(n, d)| ratio(n, d)).collect()
    }

    #[test]
    fn recession_cones() {
        assert_eq!(
            flux_polyhedron().recession_cone().enumerate_evs(),
            vec![v(&[0, 1, 1, -1])]
        );
        assert_eq!(
            plane_polyhedron().recession_cone().enumerate_evs(),
            vec![v(&[-1, 3]), v(&[1, 1]), v(&[0, 1])]
        );
        let segment =
            Polyhedron::from_inequalities(RatMat::from_i64(1, &[&[1], &[-1]]), v(&[0, -1]))
                .unwrap();
        assert!(segment.recession_cone().enumerate_evs().is_empty());
    }

    #[test]
    fn homogenization_slices() {
        let p = Polyhedron::from_inequalities(RatMat::from_i64(1, &[&[1]]), v(&[1])).unwrap();
        let h = p.homogenize();
        assert_eq!(h.matrix(), &RatMat::from_i64(2, &[&[1, -1], &[0, 1]]));
        for x in -3..=3 {
            let x = rat(x);
            let at0 = RatVec::new(vec![x.clone(), rat(0)]);
            let at1 = RatVec::new(vec![x.clone(), rat(1)]);
            let xv = RatVec::new(vec![x]);
            assert_eq!(
                h.contains(&at0).unwrap(),
                p.recession_cone().contains(&xv).unwrap()
            );
            assert_eq!(h.contains(&at1).unwrap(), p.contains(&xv).unwrap());
        }
    }

    #[test]
    fn lift_of_flux_polyhedron() {
        let p = flux_polyhedron();
        let l = p.lift();
        assert_eq!(l.dim(), 9);
        assert_eq!(l.nonneg(), &[4, 5, 6, 7, 8]);
        let x = v(&[2, 1, 1, 1]);
        let lifted = p.lift_point(&x).unwrap();
        assert_eq!(lifted, v(&[2, 1, 1, 1, 1, 2, 1, 1, 0]));
        assert!(l.contains(&lifted).unwrap());
        let d = p.lift_direction(&v(&[0, 1, 1, -1])).unwrap();
        assert_eq!(d, v(&[0, 1, 1, -1, 0, 0, 1, 1, 0]));
        assert!(l.is_elementary(&d).unwrap());
    }

    #[test]
    fn vertices() {
        let p = plane_polyhedron();
        assert!(p.is_vertex(&pt(&[(1, 6), (1, 2)])).unwrap());
        assert!(!p.is_vertex(&v(&[0, 1])).unwrap());
        assert!(p.is_vertex(&pt(&[(5, 6), (1, 2)])).unwrap());
    }

    #[test]
    fn ccnd_examples() {
        let p = plane_polyhedron();
        assert!(p.is_ccnd(&v(&[0, 1])).unwrap());
        assert!(flux_polyhedron().is_ccnd(&RatVec::zeros(4)).unwrap());
        let inner = pt(&[(1, 2), (3, 4)]);
        assert!(p.contains(&inner).unwrap());
        assert!(!p.is_ccnd(&inner).unwrap());
    }

    #[test]
    fn enumerate_flux_polyhedron() {
        let evs = flux_polyhedron().enumerate_evs();
        assert_eq!(evs.conic, vec![v(&[0, 1, 1, -1])]);
        assert_eq!(
            evs.points,
            vec![v(&[0, 0, 0, 0]), v(&[2, 2, 2, 0]), v(&[2, 0, 0, 2])]
        );
    }

    #[test]
    fn enumerate_plane_polyhedron() {
        let evs = plane_polyhedron().enumerate_evs();
        assert_eq!(evs.conic, vec![v(&[-1, 3]), v(&[1, 1]), v(&[0, 1])]);
        assert_eq!(
            evs.points,
            vec![pt(&[(1, 6), (1, 2)]), pt(&[(5, 6), (1, 2)]), v(&[0, 1])]
        );
    }

    #[test]
    fn enumerate_half_line() {
        let evs = half_line().enumerate_evs();
        assert_eq!(evs.conic, vec![v(&[1])]);
        assert_eq!(evs.points, vec![v(&[0])]);
    }

    #[test]
    fn decompose_examples() {
        let p = flux_polyhedron();
        let d = p.conformal_decompose(&v(&[2, 1, 1, 1])).unwrap();
        assert!(d.conic_terms.is_empty());
        let mut convex = d.convex_terms.clone();
        convex.sort_by(|a, b| a.1.support_order(&b.1));
        assert_eq!(
            convex,
            vec![
                (ratio(1, 2), v(&[2, 2, 2, 0])),
                (ratio(1, 2), v(&[2, 0, 0, 2]))
            ]
        );
        let d = p.conformal_decompose(&v(&[1, 1, 1, 0])).unwrap();
        assert!(d.conic_terms.is_empty());
        let mut convex = d.convex_terms.clone();
        convex.sort_by(|a, b| a.1.support_order(&b.1));
        assert_eq!(
            convex,
            vec![
                (ratio(1, 2), v(&[0, 0, 0, 0])),
                (ratio(1, 2), v(&[2, 2, 2, 0]))
            ]
        );
        let d = half_line().conformal_decompose(&v(&[3])).unwrap();
        assert_eq!(d.conic_terms, vec![v(&[3])]);
        assert_eq!(d.convex_terms, vec![(rat(1), v(&[0]))]);
        assert!(matches!(
            half_line().conformal_decompose(&v(&[-1])),
            Err(Error::NotMember(_))
        ));
    }

    #[test]
    fn dimensions() {
        assert_eq!(plane_polyhedron().dim().unwrap(), 2);
        assert_eq!(flux_polyhedron().dim().unwrap(), 2);
        let strip =
            Polyhedron::from_inequalities(RatMat::from_i64(2, &[&[1, 0], &[-1, 0]]), v(&[0, 0]))
                .unwrap();
        assert_eq!(strip.dim().unwrap(), 1);
        let empty =
            Polyhedron::from_inequalities(RatMat::from_i64(1, &[&[1], &[-1]]), v(&[1, 0])).unwrap();
        assert_eq!(empty.dim(), Err(Error::EmptyPolyhedron));
        assert_eq!(empty.enumerate_evs(), PolyhedronEVs::default());
        assert!(matches!(
            empty.conformal_decompose(&v(&[0])),
            Err(Error::NotMember(_))
        ));
    }
}
