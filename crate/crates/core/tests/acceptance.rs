//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Random instances are seeded; each criterion prints the seeds it
//! used so a failure can be replayed.

use std::collections::BTreeSet;
use std::ops::Range;
use std::process::ExitCode;
use std::time::Instant;

use elvec::cone::PolyCone;
use elvec::flux::{knockout_polyhedron_evs, knockout_vectors, MetabolicNetwork, ReactionBounds};
use elvec::oracle::random::{self, InstanceRng};
use elvec::oracle::{
    brute_ccnd, brute_cnd, brute_cnd_cone, brute_evs, decomposing_subsets, min_conformal_size,
};
use elvec::ratlin::{normalize_primitive, rat, ratio};
use elvec::signs::{conforms, sign_of, Sign};
use elvec::{Polyhedron, RatMat, RatVec, SCone};
use itertools::Itertools;
use num::{One, Signed};
use rand::Rng;
use rayon::prelude::*;

type Outcome = Result<String, String>;

const RANDOM_CASES: u64 = 100;
const ORTHANT_CASES: u64 = 50;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn v(x: &[i64]) -> RatVec {
    RatVec::from_i64(x)
}

fn ok<T, E: std::fmt::Debug>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| format!("unexpected error: {e:?}"))
}

fn ray_set(vs: &[RatVec]) -> BTreeSet<RatVec> {
    vs.iter()
        .filter(|x| !x.is_zero())
        .map(|x| normalize_primitive(x).expect("nonzero"))
        .collect()
}

fn signs(x: &RatVec) -> Vec<Sign> {
    sign_of(x).signs()
}

// fixtures

fn small_network() -> MetabolicNetwork {
    MetabolicNetwork::unnamed(
        RatMat::from_i64(4, &[&[1, -1, 0, -1], &[0, 1, -1, 0]]),
        vec![0, 1, 2],
    )
    .unwrap()
}

fn four_ev_cone() -> SCone {
    SCone::new(RatMat::from_i64(4, &[&[1, -1, -1, 1]]), vec![0, 1, 2, 3]).unwrap()
}

fn plane_cone() -> PolyCone {
    PolyCone::new(RatMat::from_i64(2, &[&[3, 1], &[-1, 1]]))
}

fn plane_polyhedron() -> Polyhedron {
    Polyhedron::from_inequalities(
        RatMat::from_i64(2, &[&[3, 1], &[-3, 3], &[0, 2]]),
        v(&[1, -1, 1]),
    )
    .unwrap()
}

fn flux_polyhedron() -> Polyhedron {
    small_network()
        .flux_polyhedron(&ReactionBounds::new().upper(0, rat(2)))
        .unwrap()
}

fn scone_fixtures() -> Vec<(&'static str, SCone)> {
    vec![
        ("small flux cone", small_network().flux_cone()),
        ("four-EV cone", four_ev_cone()),
        (
            "four-EV subspace",
            SCone::new(RatMat::from_i64(4, &[&[1, -1, -1, 1]]), vec![]).unwrap(),
        ),
        (
            "nonnegative quadrant",
            SCone::new(RatMat::zeros(0, 2), vec![0, 1]).unwrap(),
        ),
        ("plane", SCone::full_space(2)),
        ("plane cone lift", plane_cone().lift().scone),
        ("plane polyhedron lift", plane_polyhedron().lift()),
        ("flux polyhedron lift", flux_polyhedron().lift()),
    ]
}

fn cone_fixtures() -> Vec<(&'static str, PolyCone)> {
    vec![
        ("plane cone", plane_cone()),
        (
            "plane cone in the nonnegative quadrant",
            plane_cone()
                .intersect_orthant(&[Sign::Pos, Sign::Pos])
                .unwrap(),
        ),
        (
            "plane polyhedron recession cone",
            plane_polyhedron().recession_cone(),
        ),
        ("half-plane", PolyCone::new(RatMat::from_i64(2, &[&[1, 0]]))),
    ]
}

fn polyhedron_fixtures() -> Vec<(&'static str, Polyhedron)> {
    vec![
        ("plane polyhedron", plane_polyhedron()),
        ("flux polyhedron", flux_polyhedron()),
    ]
}

// random instances

fn random_scone(g: &mut InstanceRng) -> SCone {
    let r = g.gen_range(2..=6);
    let m = g.gen_range(1..=4.min(r));
    random::scone(g, m, r, 0.6, 0.5)
}

fn random_cone(g: &mut InstanceRng) -> PolyCone {
    let r = g.gen_range(2..=4);
    let m = g.gen_range(1..=4);
    random::polycone(g, m, r, 0.7)
}

fn random_polyhedron(g: &mut InstanceRng) -> Polyhedron {
    let r = g.gen_range(1..=3);
    let m = g.gen_range(1..=4);
    random::polyhedron(g, m, r, 0.7)
}

/// A handful of nonzero members: each generator, a few random conic
/// combinations and some pairwise sums.
fn sample_members(g: &mut InstanceRng, gens: &[RatVec], dim: usize, extra: usize) -> Vec<RatVec> {
    let mut out: Vec<RatVec> = gens.to_vec();
    for _ in 0..extra {
        let x = random::conic_combination(g, gens, dim);
        if !x.is_zero() {
            out.push(x);
        }
    }
    for (a, b) in gens.iter().tuple_combinations().take(6) {
        out.push(a.add(b));
    }
    out.retain(|x| !x.is_zero());
    out
}

fn polyhedron_members(g: &mut InstanceRng, p: &Polyhedron, extra: usize) -> Vec<RatVec> {
    let evs = p.enumerate_evs();
    let mut out = evs.points.clone();
    for _ in 0..extra {
        if let Some(x) = random::polyhedron_member(g, &evs, p.ambient_dim()) {
            out.push(x);
        }
    }
    out
}

/// Runs `f` on every seed in parallel; the first failing seed in seed order
/// is reported. Returns the total count of checked vectors.
fn over_seeds(
    seeds: Range<u64>,
    f: impl Fn(&mut InstanceRng) -> Result<usize, String> + Sync,
) -> Result<usize, String> {
    let results: Vec<Result<usize, String>> = seeds
        .into_par_iter()
        .map(|seed| f(&mut random::rng(seed)).map_err(|e| format!("seed {seed}: {e}")))
        .collect();
    results.into_iter().sum()
}

// shared checks

fn check_scone_decomposition(k: &SCone, evs: &[RatVec], x: &RatVec) -> Result<usize, String> {
    let d = ok(k.conformal_decompose_with(evs, x))?;
    ensure!(d.sum() == *x, "terms of {x} sum to {}", d.sum());
    for t in &d.terms {
        ensure!(ok(conforms(t, x))?, "term {t} not conformal to {x}");
        ensure!(ok(k.is_elementary(t))?, "term {t} of {x} is not elementary");
    }
    ensure!(
        d.has_private_coordinate_order(),
        "terms of {x} lack private coordinates"
    );
    ensure!(
        d.terms.len() <= k.subspace_dim(),
        "{} terms for {x} exceed dim S = {}",
        d.terms.len(),
        k.subspace_dim()
    );
    ensure!(
        d.terms.len() <= x.support_size(),
        "{} terms for {x} exceed its support size",
        d.terms.len()
    );
    Ok(d.terms.len())
}

fn check_cone_decomposition(c: &PolyCone, x: &RatVec) -> Result<usize, String> {
    let d = ok(c.conformal_decompose(x))?;
    ensure!(d.sum() == *x, "terms of {x} sum to {}", d.sum());
    let ax = ok(c.matrix().mul_vec(x))?;
    for t in &d.terms {
        ensure!(ok(conforms(t, x))?, "term {t} not conformal to {x}");
        let at = ok(c.matrix().mul_vec(t))?;
        ensure!(ok(conforms(&at, &ax))?, "A{t} not conformal to A{x}");
        ensure!(ok(c.is_elementary(t))?, "term {t} is not elementary");
    }
    let bound = x.support_size() + ax.support_size();
    ensure!(
        d.terms.len() <= c.dim(),
        "{} terms exceed dim C = {}",
        d.terms.len(),
        c.dim()
    );
    ensure!(
        d.terms.len() <= bound,
        "{} terms exceed support bound {bound}",
        d.terms.len()
    );
    Ok(d.terms.len())
}

fn check_polyhedron_decomposition(p: &Polyhedron, x: &RatVec) -> Result<usize, String> {
    let d = ok(p.conformal_decompose(x))?;
    ensure!(d.sum() == *x, "terms of {x} sum to {}", d.sum());
    ensure!(
        d.weight_sum().is_one(),
        "convex weights of {x} sum to {}",
        d.weight_sum()
    );
    ensure!(!d.convex_terms.is_empty(), "no convex term for {x}");
    let dim = ok(p.dim())?;
    ensure!(
        d.len() <= dim + 1,
        "{} terms for {x} exceed dim P + 1 = {}",
        d.len(),
        dim + 1
    );
    let evs = p.enumerate_evs();
    for (w, pt) in &d.convex_terms {
        ensure!(w.is_positive(), "nonpositive weight {w}");
        ensure!(
            evs.points.contains(pt),
            "convex term {pt} is not an EV point"
        );
        ensure!(ok(conforms(pt, x))?, "point {pt} not conformal to {x}");
    }
    for t in &d.conic_terms {
        ensure!(ok(conforms(t, x))?, "conic term {t} not conformal to {x}");
        ensure!(
            evs.conic.contains(&normalize_primitive(t).unwrap()),
            "conic term {t} is not an EV ray"
        );
    }
    Ok(d.len())
}

// criteria

fn criterion1() -> Outcome {
    let ems = small_network().enumerate_ems();
    let want = [v(&[1, 0, 0, 1]), v(&[0, 1, 1, -1]), v(&[1, 1, 1, 0])];
    ensure!(ray_set(&ems) == ray_set(&want), "got {ems:?}");
    ensure!(ems.len() == 3, "duplicate rays in {ems:?}");
    Ok("3 elementary modes".into())
}

fn criterion2() -> Outcome {
    let k = small_network().flux_cone();
    let f = v(&[2, 1, 1, 1]);
    let d = ok(k.conformal_decompose(&f))?;
    let e1 = v(&[1, 1, 1, 0]);
    let e2 = v(&[0, 1, 1, -1]);
    let e3 = v(&[1, 0, 0, 1]);
    ensure!(d.sum() == f, "reconstruction failed");
    let got: BTreeSet<RatVec> = d.terms.iter().cloned().collect();
    ensure!(got == BTreeSet::from([e1, e3]), "terms {:?}", d.terms);
    for t in &d.terms {
        ensure!(ok(conforms(t, &f))?, "term {t} not conformal");
        ensure!(!t.is_proportional(&e2), "non-conformal EM e2 used");
    }
    ensure!(!ok(conforms(&e2, &f))?, "e2 unexpectedly conformal to f");
    Ok("f = e1 + e3".into())
}

fn criterion3() -> Outcome {
    let k = four_ev_cone();
    let evs = k.enumerate_evs();
    let want = [
        v(&[1, 1, 0, 0]),
        v(&[1, 0, 1, 0]),
        v(&[0, 1, 0, 1]),
        v(&[0, 0, 1, 1]),
    ];
    ensure!(ray_set(&evs) == ray_set(&want), "EVs {evs:?}");
    ensure!(
        ray_set(&ok(brute_evs(&k))?) == ray_set(&want),
        "oracle EVs differ"
    );
    let x = v(&[1, 2, 3, 4]);
    let min = ok(min_conformal_size(&k, &x, 6))?;
    ensure!(min == Some(3), "min conformal size {min:?}");
    let subsets = ok(decomposing_subsets(&evs, &x, 3))?;
    ensure!(!subsets.is_empty(), "no 3-subset decomposes x");
    for (s, lacks_private) in &subsets {
        ensure!(
            *lacks_private,
            "subset {s:?} has private coordinates for every EV"
        );
    }
    Ok(format!(
        "min size 3; {} decomposing 3-subsets all lack a private coordinate",
        subsets.len()
    ))
}

fn criterion4() -> Outcome {
    let mut checked = 0usize;
    let mut g = random::rng(4_000);
    for (name, k) in scone_fixtures() {
        let evs = k.enumerate_evs();
        for x in sample_members(&mut g, &evs, k.dim(), 5) {
            check_scone_decomposition(&k, &evs, &x).map_err(|e| format!("{name}: {e}"))?;
            checked += 1;
        }
    }
    for (name, c) in cone_fixtures() {
        for x in sample_members(&mut g, &c.enumerate_evs(), c.ambient_dim(), 5) {
            check_cone_decomposition(&c, &x).map_err(|e| format!("{name}: {e}"))?;
            checked += 1;
        }
    }
    for (name, p) in polyhedron_fixtures() {
        for x in polyhedron_members(&mut g, &p, 8) {
            check_polyhedron_decomposition(&p, &x).map_err(|e| format!("{name}: {e}"))?;
            checked += 1;
        }
    }
    let seeds = 4_001..4_001 + RANDOM_CASES;
    checked += over_seeds(seeds.clone(), |g| {
        let mut n = 0;
        let k = random_scone(g);
        let evs = k.enumerate_evs();
        for x in sample_members(g, &evs, k.dim(), 3) {
            n += check_scone_decomposition(&k, &evs, &x).map(|_| 1)?;
        }
        let c = random_cone(g);
        for x in sample_members(g, &c.enumerate_evs(), c.ambient_dim(), 3) {
            n += check_cone_decomposition(&c, &x).map(|_| 1)?;
        }
        let p = random_polyhedron(g);
        for x in polyhedron_members(g, &p, 3) {
            n += check_polyhedron_decomposition(&p, &x).map(|_| 1)?;
        }
        Ok(n)
    })?;
    Ok(format!("{checked} decompositions; seeds {seeds:?}"))
}

fn criterion5() -> Outcome {
    let c = plane_cone();
    let evs = c.enumerate_evs();
    let (r1, r2, r3) = (v(&[-1, 3]), v(&[0, 1]), v(&[1, 1]));
    ensure!(
        ray_set(&evs) == ray_set(&[r1.clone(), r2.clone(), r3.clone()]),
        "EVs {evs:?}"
    );
    ensure!(!ok(c.is_extreme(&r2))?, "(0,1) extreme in C");
    let quadrant = ok(c.intersect_orthant(&[Sign::Pos, Sign::Pos]))?;
    ensure!(
        ok(quadrant.is_extreme(&r2))?,
        "(0,1) not extreme in C ∩ R²≥"
    );
    let mut g = random::rng(5_000);
    for _ in 0..50 {
        let a = ratio(g.gen_range(0..=20), g.gen_range(1..=7));
        let b = ratio(g.gen_range(0..=20), g.gen_range(1..=7));
        let x = r2.scale(&a).add(&r3.scale(&b));
        let d = ok(c.conformal_decompose(&x))?;
        ensure!(d.sum() == x, "reconstruction of {x}");
        for t in &d.terms {
            let ray = normalize_primitive(t).unwrap();
            ensure!(ray == r2 || ray == r3, "decomposition of {x} uses {ray}");
        }
    }
    Ok("rays r1, r2, r3; 50 quadrant samples use only r2, r3 (seed 5000)".into())
}

fn criterion6() -> Outcome {
    let p = plane_polyhedron();
    let evs = p.enumerate_evs();
    let want_points = [
        v(&[0, 1]),
        RatVec::new(vec![ratio(1, 6), ratio(1, 2)]),
        RatVec::new(vec![ratio(5, 6), ratio(1, 2)]),
    ];
    let got: BTreeSet<RatVec> = evs.points.iter().cloned().collect();
    ensure!(
        got == want_points.iter().cloned().collect(),
        "points {:?}",
        evs.points
    );
    ensure!(
        ray_set(&evs.conic) == ray_set(&plane_cone().enumerate_evs()),
        "conic {:?}",
        evs.conic
    );
    let x = v(&[0, 1]);
    ensure!(!ok(p.is_vertex(&x))?, "(0,1) is a vertex");
    ensure!(ok(p.is_ccnd(&x))?, "(0,1) is not ccND");
    ensure!(ok(brute_ccnd(&p, &x))?, "oracle says (0,1) is not ccND");
    Ok("3 points, 3 rays; (0,1) ccND but not a vertex".into())
}

fn criterion7() -> Outcome {
    let p = flux_polyhedron();
    let evs = p.enumerate_evs();
    ensure!(
        evs.conic == vec![v(&[0, 1, 1, -1])],
        "conic {:?}",
        evs.conic
    );
    let got: BTreeSet<RatVec> = evs.points.iter().cloned().collect();
    let want: BTreeSet<RatVec> = [v(&[2, 0, 0, 2]), v(&[2, 2, 2, 0]), v(&[0, 0, 0, 0])].into();
    ensure!(got == want, "points {:?}", evs.points);
    let knocked = ok(knockout_polyhedron_evs(&evs, 4, &[3]))?;
    ensure!(
        knocked.conic.is_empty(),
        "conic after knockout {:?}",
        knocked.conic
    );
    let got: BTreeSet<RatVec> = knocked.points.iter().cloned().collect();
    let want: BTreeSet<RatVec> = [v(&[2, 2, 2, 0]), v(&[0, 0, 0, 0])].into();
    ensure!(got == want, "points after knockout {:?}", knocked.points);
    let recomputed = ok(p.with_zero_coordinates(&[3]))?.enumerate_evs();
    ensure!(recomputed == knocked, "recomputation {recomputed:?}");
    let cone_knocked = ok(knockout_vectors(&small_network().enumerate_ems(), 4, &[3]))?;
    let cone_recomputed =
        ok(small_network().flux_cone().with_zero_coordinates(&[3]))?.enumerate_evs();
    ensure!(
        cone_knocked == cone_recomputed,
        "cone knockout differs from recomputation"
    );
    Ok("knockout of reaction 4 matches recomputation".into())
}

fn predicates_agree(k: &SCone, x: &RatVec) -> Result<(), String> {
    let el = ok(k.is_elementary(x))?;
    let sw = ok(k.is_swnd(x))?;
    let cnd = ok(brute_cnd(k, x))?;
    ensure!(
        el == sw && sw == cnd,
        "{x}: elementary {el}, swND {sw}, brute cND {cnd}"
    );
    Ok(())
}

fn criterion8() -> Outcome {
    let mut checked = 0usize;
    let mut g = random::rng(8_000);
    for (name, k) in scone_fixtures() {
        if k.dim() > elvec::oracle::BRUTE_CND_MAX_DIM {
            continue;
        }
        let evs = k.enumerate_evs();
        for x in sample_members(&mut g, &evs, k.dim(), 4) {
            predicates_agree(&k, &x).map_err(|e| format!("{name}: {e}"))?;
            checked += 1;
        }
    }
    let seeds = 8_001..8_001 + RANDOM_CASES;
    checked += over_seeds(seeds.clone(), |g| {
        let k = random_scone(g);
        let members = sample_members(g, &k.enumerate_evs(), k.dim(), 3);
        for x in &members {
            predicates_agree(&k, x)?;
        }
        Ok(members.len())
    })?;
    Ok(format!("{checked} vectors agree; seeds {seeds:?}"))
}

fn cone_orthant_agree(c: &PolyCone, x: &RatVec) -> Result<(), String> {
    let cnd = ok(c.is_elementary(x))?;
    let ex = ok(ok(c.intersect_orthant(&signs(x)))?.is_extreme(x))?;
    let brute = ok(brute_cnd_cone(c, x))?;
    ensure!(
        cnd == ex && ex == brute,
        "{x}: cND {cnd}, EX in orthant {ex}, brute cND {brute}"
    );
    Ok(())
}

fn polyhedron_orthant_agree(p: &Polyhedron, x: &RatVec) -> Result<(), String> {
    let ccnd = ok(p.is_ccnd(x))?;
    let ve = ok(ok(p.intersect_orthant(&signs(x)))?.is_vertex(x))?;
    let brute = ok(brute_ccnd(p, x))?;
    ensure!(
        ccnd == ve && ve == brute,
        "{x}: ccND {ccnd}, VE in orthant {ve}, brute ccND {brute}"
    );
    Ok(())
}

fn criterion9() -> Outcome {
    let mut checked = 0usize;
    let mut g = random::rng(9_000);
    for (name, c) in cone_fixtures() {
        for x in sample_members(&mut g, &c.enumerate_evs(), c.ambient_dim(), 4) {
            cone_orthant_agree(&c, &x).map_err(|e| format!("{name}: {e}"))?;
            checked += 1;
        }
    }
    for (name, p) in polyhedron_fixtures() {
        for x in polyhedron_members(&mut g, &p, 6) {
            polyhedron_orthant_agree(&p, &x).map_err(|e| format!("{name}: {e}"))?;
            checked += 1;
        }
    }
    let seeds = 9_001..9_001 + ORTHANT_CASES;
    checked += over_seeds(seeds.clone(), |g| {
        let c = random_cone(g);
        let cone_members = sample_members(g, &c.enumerate_evs(), c.ambient_dim(), 3);
        for x in &cone_members {
            cone_orthant_agree(&c, x).map_err(|e| format!("cone: {e}"))?;
        }
        let p = random_polyhedron(g);
        let points = polyhedron_members(g, &p, 4);
        for x in &points {
            polyhedron_orthant_agree(&p, x).map_err(|e| format!("polyhedron: {e}"))?;
        }
        Ok(cone_members.len() + points.len())
    })?;
    Ok(format!("{checked} vectors agree; seeds {seeds:?}"))
}

/// A proper subset is rejected, and independently the missing EV cannot be
/// written as a conformal sum of the subset. A superset is accepted, and
/// sampled members decompose conformally over it.
fn criterion10() -> Outcome {
    let mut subsets = 0usize;
    let mut g = random::rng(10_000);
    for (name, k) in scone_fixtures() {
        let evs = k.enumerate_evs();
        let n = evs.len();
        ensure!(n <= 16, "{name}: {n} EVs, too many subsets");
        for mask in 0u32..(1 << n) - 1 {
            let subset: Vec<RatVec> = (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| evs[i].clone())
                .collect();
            ensure!(
                !ok(k.is_conformal_generating_superset(&subset))?,
                "{name}: proper subset {subset:?} accepted"
            );
            let missing = (0..n).find(|i| mask & (1 << i) == 0).unwrap();
            ensure!(
                k.conformal_decompose_with(&subset, &evs[missing]).is_err(),
                "{name}: {} decomposed without its own ray",
                evs[missing]
            );
            subsets += 1;
        }
        let members = sample_members(&mut g, &evs, k.dim(), 4);
        for extra in 0..4 {
            let mut superset: Vec<RatVec> = evs.iter().map(|e| e.scale(&rat(extra + 1))).collect();
            superset.extend(members.iter().take(extra as usize * 3).cloned());
            ensure!(
                ok(k.is_conformal_generating_superset(&superset))?,
                "{name}: superset rejected"
            );
            for x in &members {
                let d = ok(k.conformal_decompose_with(&superset, x))?;
                ensure!(d.sum() == *x, "{name}: superset decomposition of {x}");
                for t in &d.terms {
                    ensure!(ok(conforms(t, x))?, "{name}: nonconformal term {t} for {x}");
                }
            }
        }
    }
    Ok(format!(
        "{subsets} proper subsets rejected; supersets accepted"
    ))
}

fn criterion11() -> Outcome {
    for (name, k) in scone_fixtures() {
        let fast = k.enumerate_evs();
        let brute = ok(brute_evs(&k))?;
        ensure!(
            ray_set(&fast) == ray_set(&brute),
            "{name}: {fast:?} vs {brute:?}"
        );
    }
    let seeds = 11_001..11_001 + RANDOM_CASES;
    let total = over_seeds(seeds.clone(), |g| {
        let k = random_scone(g);
        let fast = k.enumerate_evs();
        let brute = ok(brute_evs(&k))?;
        ensure!(ray_set(&fast) == ray_set(&brute), "{fast:?} vs {brute:?}");
        ensure!(ray_set(&fast).len() == fast.len(), "duplicate rays");
        Ok(fast.len())
    })?;
    Ok(format!("{total} random EV rays agree; seeds {seeds:?}"))
}

fn main() -> ExitCode {
    let criteria: [(usize, fn() -> Outcome); 11] = [
        (1, criterion1),
        (2, criterion2),
        (3, criterion3),
        (4, criterion4),
        (5, criterion5),
        (6, criterion6),
        (7, criterion7),
        (8, criterion8),
        (9, criterion9),
        (10, criterion10),
        (11, criterion11),
    ];
    let mut failed = 0;
    for (n, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(note) => println!("criterion {n}: PASS ({note}; {ms} ms)"),
            Err(why) => {
                failed += 1;
                println!("criterion {n}: FAIL ({why})");
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all 11 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 11 criteria failed");
        ExitCode::FAILURE
    }
}
