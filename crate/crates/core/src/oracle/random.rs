//! Seeded random instances for property checks. Entries are small integers
//! in `-3..=3`; `density` is the probability that an entry is nonzero.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cone::PolyCone;
use crate::polyhedron::{Polyhedron, PolyhedronEVs};
use crate::ratlin::{rat, RatMat, RatVec, Rational};
use crate::scone::SCone;

pub type InstanceRng = ChaCha8Rng;

pub fn rng(seed: u64) -> InstanceRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn entry(rng: &mut InstanceRng, density: f64) -> i64 {
    if rng.gen_bool(density) {
        loop {
            let x = rng.gen_range(-3..=3);
            if x != 0 {
                return x;
            }
        }
    }
    0
}

pub fn matrix(rng: &mut InstanceRng, rows: usize, cols: usize, density: f64) -> RatMat {
    let data = (0..rows)
        .map(|_| (0..cols).map(|_| rat(entry(rng, density))).collect())
        .collect();
    RatMat::from_rows(cols, data).expect("rectangular")
}

pub fn vector(rng: &mut InstanceRng, dim: usize, density: f64) -> RatVec {
    (0..dim).map(|_| rat(entry(rng, density))).collect()
}

/// s-cone with `rows x cols` kernel matrix; each coordinate is sign
/// constrained with probability `nonneg_prob`.
pub fn scone(
    rng: &mut InstanceRng,
    rows: usize,
    cols: usize,
    density: f64,
    nonneg_prob: f64,
) -> SCone {
    let m = matrix(rng, rows, cols, density);
    let f = (0..cols).filter(|_| rng.gen_bool(nonneg_prob)).collect();
    SCone::new(m, f).expect("indices in range")
}

pub fn polycone(rng: &mut InstanceRng, rows: usize, cols: usize, density: f64) -> PolyCone {
    PolyCone::new(matrix(rng, rows, cols, density))
}

pub fn polyhedron(rng: &mut InstanceRng, rows: usize, cols: usize, density: f64) -> Polyhedron {
    let a = matrix(rng, rows, cols, density);
    let b = vector(rng, rows, 0.7);
    Polyhedron::from_inequalities(a, b).expect("matching shapes")
}

/// Random nonnegative integer combination (coefficients `0..=3`) of `gens`.
pub fn conic_combination(rng: &mut InstanceRng, gens: &[RatVec], dim: usize) -> RatVec {
    let mut acc = RatVec::zeros(dim);
    for g in gens {
        let c: i64 = rng.gen_range(0..=3);
        if c > 0 {
            acc = acc.add(&g.scale(&rat(c)));
        }
    }
    acc
}

/// Random member of a polyhedron built from its EVs: a convex combination
/// of the points plus a conic combination of the directions.
pub fn polyhedron_member(rng: &mut InstanceRng, evs: &PolyhedronEVs, dim: usize) -> Option<RatVec> {
    if evs.points.is_empty() {
        return None;
    }
    let weights: Vec<i64> = evs.points.iter().map(|_| rng.gen_range(0..=3)).collect();
    let total: i64 = weights.iter().sum();
    let mut acc = if total == 0 {
        let k = rng.gen_range(0..evs.points.len());
        evs.points[k].clone()
    } else {
        let mut acc = RatVec::zeros(dim);
        for (w, p) in weights.iter().zip(&evs.points) {
            acc = acc.add(&p.scale(&Rational::new((*w).into(), total.into())));
        }
        acc
    };
    acc = acc.add(&conic_combination(rng, &evs.conic, dim));
    Some(acc)
}
