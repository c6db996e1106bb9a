//! Metabolic networks: flux cones, flux polyhedra, elementary modes and
//! knockouts.
//!
//! Knocking out reactions never requires recomputing EVs. If `x` has zeros in
//! the knocked-out coordinates, so does every part of a conformal sum for
//! `x`; hence the EVs of the restricted system are exactly the original EVs
//! that vanish there.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::polyhedron::{Polyhedron, PolyhedronEVs};
use crate::ratlin::{RatMat, RatVec, Rational};
use crate::scone::SCone;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetabolicNetwork {
    stoichiometry: RatMat,
    irreversible: Vec<usize>,
    reaction_names: Vec<String>,
    metabolite_names: Vec<String>,
}

impl MetabolicNetwork {
    pub fn new(
        stoichiometry: RatMat,
        irreversible: Vec<usize>,
        reaction_names: Vec<String>,
        metabolite_names: Vec<String>,
    ) -> Result<Self> {
        let (n, r) = (stoichiometry.rows(), stoichiometry.cols());
        if reaction_names.len() != r {
            return Err(Error::Shape(format!(
                "{} reaction names for {r} reactions",
                reaction_names.len()
            )));
        }
        if metabolite_names.len() != n {
            return Err(Error::Shape(format!(
                "{} metabolite names for {n} metabolites",
                metabolite_names.len()
            )));
        }
        if let Some(&bad) = irreversible.iter().find(|&&i| i >= r) {
            return Err(Error::IndexOutOfRange { index: bad, dim: r });
        }
        let mut irreversible = irreversible;
        irreversible.sort_unstable();
        irreversible.dedup();
        Ok(Self {
            stoichiometry,
            irreversible,
            reaction_names,
            metabolite_names,
        })
    }

    /// Network with generated names `R1..Rr`, `M1..Mn`.
    pub fn unnamed(stoichiometry: RatMat, irreversible: Vec<usize>) -> Result<Self> {
        let reactions = (1..=stoichiometry.cols())
            .map(|i| format!("R{i}"))
            .collect();
        let metabolites = (1..=stoichiometry.rows())
            .map(|i| format!("M{i}"))
            .collect();
        Self::new(stoichiometry, irreversible, reactions, metabolites)
    }

    pub fn stoichiometry(&self) -> &RatMat {
        &self.stoichiometry
    }

    pub fn irreversible(&self) -> &[usize] {
        &self.irreversible
    }

    pub fn reaction_names(&self) -> &[String] {
        &self.reaction_names
    }

    pub fn metabolite_names(&self) -> &[String] {
        &self.metabolite_names
    }

    pub fn reactions(&self) -> usize {
        self.stoichiometry.cols()
    }

    pub fn flux_cone(&self) -> SCone {
        SCone::new(self.stoichiometry.clone(), self.irreversible.clone())
            .expect("validated indices")
    }

    /// Elementary modes: the EVs of the flux cone.
    pub fn enumerate_ems(&self) -> Vec<RatVec> {
        self.flux_cone().enumerate_evs()
    }

    /// `N f = 0`, `f_i >= 0` for irreversible `i`, and the box bounds.
    pub fn flux_polyhedron(&self, bounds: &ReactionBounds) -> Result<Polyhedron> {
        let r = self.reactions();
        let mut a_in = RatMat::zeros(0, r);
        let mut b_in = Vec::new();
        for &i in &self.irreversible {
            a_in.push_row(RatVec::unit(r, i).entries())?;
            b_in.push(Rational::from_integer(0.into()));
        }
        for (&j, (lower, upper)) in bounds.iter() {
            if j >= r {
                return Err(Error::IndexOutOfRange { index: j, dim: r });
            }
            if let (Some(l), Some(u)) = (lower, upper) {
                if l > u {
                    return Err(Error::InvalidBounds { reaction: j });
                }
            }
            if let Some(l) = lower {
                a_in.push_row(RatVec::unit(r, j).entries())?;
                b_in.push(l.clone());
            }
            if let Some(u) = upper {
                a_in.push_row(RatVec::unit(r, j).neg().entries())?;
                b_in.push(-u);
            }
        }
        Polyhedron::new(
            a_in,
            RatVec::new(b_in),
            self.stoichiometry.clone(),
            RatVec::zeros(self.stoichiometry.rows()),
        )
    }
}

/// Optional lower and upper flux bounds per reaction (0-based index).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReactionBounds(BTreeMap<usize, (Option<Rational>, Option<Rational>)>);

impl ReactionBounds {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(
        &mut self,
        reaction: usize,
        lower: Option<Rational>,
        upper: Option<Rational>,
    ) -> Result<()> {
        if let (Some(l), Some(u)) = (&lower, &upper) {
            if l > u {
                return Err(Error::InvalidBounds { reaction });
            }
        }
        self.0.insert(reaction, (lower, upper));
        Ok(())
    }

    pub fn upper(mut self, reaction: usize, value: Rational) -> Self {
        self.0.entry(reaction).or_default().1 = Some(value);
        self
    }

    pub fn lower(mut self, reaction: usize, value: Rational) -> Self {
        self.0.entry(reaction).or_default().0 = Some(value);
        self
    }

    pub fn iter(&self) -> impl Iterator<Item = (&usize, &(Option<Rational>, Option<Rational>))> {
        self.0.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

fn check_indices(dim: usize, dead: &[usize]) -> Result<()> {
    match dead.iter().find(|&&j| j >= dim) {
        Some(&j) => Err(Error::IndexOutOfRange { index: j, dim }),
        None => Ok(()),
    }
}

fn vanishes_on(v: &RatVec, dead: &[usize]) -> bool {
    dead.iter().all(|&j| num::Zero::is_zero(&v[j]))
}

/// Keeps the vectors whose `dead` coordinates are all zero.
pub fn knockout_vectors(evs: &[RatVec], dim: usize, dead: &[usize]) -> Result<Vec<RatVec>> {
    check_indices(dim, dead)?;
    Ok(evs
        .iter()
        .filter(|v| vanishes_on(v, dead))
        .cloned()
        .collect())
}

/// Knockout filter applied to both sorts of polyhedron EVs. Every member of
/// the restricted polyhedron is a convex-conformal sum that needs at least
/// one surviving point, so if no point survives the restriction is empty and
/// so is its EV set.
pub fn knockout_polyhedron_evs(
    evs: &PolyhedronEVs,
    dim: usize,
    dead: &[usize],
) -> Result<PolyhedronEVs> {
    let points = knockout_vectors(&evs.points, dim, dead)?;
    if points.is_empty() {
        return Ok(PolyhedronEVs::default());
    }
    Ok(PolyhedronEVs {
        conic: knockout_vectors(&evs.conic, dim, dead)?,
        points,
    })
}
