//! `verify`: runs the invariant suite on one instance and reports every
//! failed check by name.

use std::collections::BTreeSet;

use elvec::oracle::random;
use elvec::oracle::{brute_ccnd, brute_cnd, brute_evs, BRUTE_CND_MAX_DIM, BRUTE_EVS_MAX_DIM};
use elvec::ratlin::normalize_primitive;
use elvec::signs::{conforms, sign_of};
use elvec::{ConicDecomposition, PolyCone, Polyhedron, RatVec, SCone};
use num::One;
use serde_json::{json, Value};

use crate::doc::{Expected, Instance, Model};
use crate::CliError;

#[derive(Default)]
struct Check {
    name: &'static str,
    checked: usize,
    skipped: Option<String>,
    failures: Vec<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check {
            name,
            ..Default::default()
        }
    }

    fn expect(&mut self, cond: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !cond {
            self.failures.push(what());
        }
    }

    /// Like `expect`, with library errors counted as failures.
    fn expect_ok(&mut self, r: elvec::Result<bool>, what: impl FnOnce() -> String) {
        match r {
            Ok(b) => self.expect(b, what),
            Err(e) => self.expect(false, || format!("{}: {e}", what())),
        }
    }

    fn skip(mut self, why: impl Into<String>) -> Self {
        self.skipped = Some(why.into());
        self
    }

    fn status(&self) -> &'static str {
        if !self.failures.is_empty() {
            "fail"
        } else if self.skipped.is_some() && self.checked == 0 {
            "skipped"
        } else {
            "pass"
        }
    }
}

fn rays(vs: &[RatVec]) -> BTreeSet<RatVec> {
    vs.iter()
        .filter(|v| !v.is_zero())
        .map(|v| normalize_primitive(v).expect("nonzero"))
        .collect()
}

fn compare_sets(c: &mut Check, what: &str, want: &BTreeSet<RatVec>, got: &BTreeSet<RatVec>) {
    for w in want {
        c.expect(got.contains(w), || {
            format!("expected {what} {w} is missing")
        });
    }
    for g in got {
        c.expect(want.contains(g), || format!("{what} {g} was not expected"));
    }
}

fn expected_check(exp: &Expected, conic: &[RatVec], points: Option<&[RatVec]>) -> Check {
    let mut c = Check::new("expected_evs");
    compare_sets(&mut c, "ray", &rays(&exp.conic), &rays(conic));
    if let (Some(want), Some(got)) = (&exp.points, points) {
        let want: BTreeSet<RatVec> = want.iter().cloned().collect();
        let got: BTreeSet<RatVec> = got.iter().cloned().collect();
        compare_sets(&mut c, "point", &want, &got);
    }
    c
}

/// Distinct EVs of an s-cone have distinct sign vectors.
fn sign_check(lifted: &[RatVec]) -> Check {
    let mut c = Check::new("sign_uniqueness");
    let mut seen = BTreeSet::new();
    for v in lifted {
        let s = sign_of(v).to_string();
        let fresh = seen.insert(s.clone());
        c.expect(fresh, || format!("sign vector {s} occurs twice ({v})"));
    }
    c
}

fn oracle_evs(c: &mut Check, k: &SCone, evs: &[RatVec]) -> bool {
    if k.dim() > BRUTE_EVS_MAX_DIM {
        return false;
    }
    match brute_evs(k) {
        Ok(brute) => compare_sets(c, "oracle ray", &rays(&brute), &rays(evs)),
        Err(e) => c.expect(false, || format!("oracle failed: {e}")),
    }
    true
}

fn oracle_cnd(c: &mut Check, k: &SCone, xs: &[RatVec]) -> bool {
    if k.dim() > BRUTE_CND_MAX_DIM {
        return false;
    }
    for x in xs.iter().filter(|x| !x.is_zero()) {
        match (k.is_elementary(x), brute_cnd(k, x)) {
            (Ok(a), Ok(b)) => c.expect(a == b, || format!("{x}: elementary {a}, oracle {b}")),
            (a, b) => c.expect(false, || format!("{x}: {a:?} / {b:?}")),
        }
    }
    true
}

/// Notes which oracle parts were too large to run.
fn oracle_limits(c: Check, evs_done: bool, cnd_done: bool, dim: usize) -> Check {
    if !evs_done {
        c.skip(format!(
            "ray oracle skipped: lifted dimension {dim} exceeds {BRUTE_EVS_MAX_DIM}"
        ))
    } else if !cnd_done {
        c.skip(format!(
            "non-decomposability oracle skipped: dimension exceeds {BRUTE_CND_MAX_DIM}"
        ))
    } else {
        c
    }
}

fn decomposition_order(c: &mut Check, d: &ConicDecomposition) {
    c.expect(d.has_private_coordinate_order(), || {
        format!("terms for {} are not in private-coordinate order", d.input)
    });
}

fn verify_scone(k: &SCone, exp: Option<&Expected>, samples: usize, seed: u64) -> Vec<Check> {
    let evs = k.enumerate_evs();
    let mut checks = Vec::new();
    if let Some(e) = exp {
        checks.push(expected_check(e, &evs, None));
    }
    let mut pred = Check::new("ev_predicates");
    for e in &evs {
        pred.expect_ok(k.is_elementary(e), || format!("{e} is not support-minimal"));
    }
    checks.push(pred);
    checks.push(sign_check(&evs));

    let mut g = random::rng(seed);
    let xs: Vec<RatVec> = (0..samples)
        .map(|_| random::conic_combination(&mut g, &evs, k.dim()))
        .collect();
    let mut dec = Check::new("decompositions");
    for x in &xs {
        match k.conformal_decompose_with(&evs, x) {
            Ok(d) => {
                dec.expect(d.sum() == *x, || {
                    format!("terms for {x} do not reconstruct it")
                });
                for t in &d.terms {
                    dec.expect(conforms(t, x).unwrap_or(false), || {
                        format!("term {t} not conformal to {x}")
                    });
                }
                let n = d.terms.len();
                dec.expect(n <= k.subspace_dim(), || {
                    format!("{n} terms for {x} exceed dim S")
                });
                dec.expect(n <= x.support_size(), || {
                    format!("{n} terms for {x} exceed |supp x|")
                });
                decomposition_order(&mut dec, &d);
            }
            Err(e) => dec.expect(false, || format!("{x}: {e}")),
        }
    }
    checks.push(dec);

    let mut oracle = Check::new("oracle_agreement");
    let mut members = evs.clone();
    members.extend(xs);
    let evs_done = oracle_evs(&mut oracle, k, &evs);
    let cnd_done = oracle_cnd(&mut oracle, k, &members);
    checks.push(oracle_limits(oracle, evs_done, cnd_done, k.dim()));
    checks
}

fn verify_cone(cone: &PolyCone, exp: Option<&Expected>, samples: usize, seed: u64) -> Vec<Check> {
    let lifted = cone.lift();
    let lifted_evs = lifted.scone.enumerate_evs();
    let evs = cone.enumerate_evs();
    let mut checks = Vec::new();
    if let Some(e) = exp {
        checks.push(expected_check(e, &evs, None));
    }
    let mut pred = Check::new("ev_predicates");
    for e in &evs {
        pred.expect_ok(cone.is_elementary(e), || {
            format!("{e} is not conformally non-decomposable")
        });
    }
    pred.expect(evs.len() == lifted_evs.len(), || {
        format!("{} EVs but {} lifted EVs", evs.len(), lifted_evs.len())
    });
    checks.push(pred);
    checks.push(sign_check(&lifted_evs));

    let mut g = random::rng(seed);
    let xs: Vec<RatVec> = (0..samples)
        .map(|_| random::conic_combination(&mut g, &evs, cone.ambient_dim()))
        .collect();
    let dim = cone.dim();
    let mut dec = Check::new("decompositions");
    for x in &xs {
        let lx = cone.lift_vector(x).expect("dimension checked");
        match lifted.scone.conformal_decompose_with(&lifted_evs, &lx) {
            Ok(d) => {
                dec.expect(d.sum() == lx, || {
                    format!("terms for {x} do not reconstruct it")
                });
                for t in &d.terms {
                    dec.expect(conforms(t, &lx).unwrap_or(false), || {
                        format!("term {} not conformal to {x}", lifted.project(t))
                    });
                }
                let n = d.terms.len();
                let bound = lx.support_size();
                dec.expect(n <= dim, || {
                    format!("{n} terms for {x} exceed dim C = {dim}")
                });
                dec.expect(n <= bound, || {
                    format!("{n} terms for {x} exceed |supp x| + |supp Ax| = {bound}")
                });
                decomposition_order(&mut dec, &d);
            }
            Err(e) => dec.expect(false, || format!("{x}: {e}")),
        }
    }
    checks.push(dec);

    let mut oracle = Check::new("oracle_agreement");
    let lxs: Vec<RatVec> = xs
        .iter()
        .chain(&evs)
        .map(|x| cone.lift_vector(x).expect("dimension checked"))
        .collect();
    let evs_done = oracle_evs(&mut oracle, &lifted.scone, &lifted_evs);
    let cnd_done = oracle_cnd(&mut oracle, &lifted.scone, &lxs);
    checks.push(oracle_limits(
        oracle,
        evs_done,
        cnd_done,
        lifted.scone.dim(),
    ));
    checks
}

fn verify_polyhedron(
    p: &Polyhedron,
    exp: Option<&Expected>,
    samples: usize,
    seed: u64,
) -> Vec<Check> {
    let lift = p.lift();
    let evs = p.enumerate_evs();
    let lifted_evs = if p.is_empty() {
        Vec::new()
    } else {
        lift.enumerate_evs()
    };
    let mut checks = Vec::new();
    if let Some(e) = exp {
        checks.push(expected_check(e, &evs.conic, Some(&evs.points)));
    }
    let mut pred = Check::new("ev_predicates");
    let rec = p.recession_cone();
    for d in &evs.conic {
        pred.expect_ok(rec.is_elementary(d), || {
            format!("direction {d} is not elementary in the recession cone")
        });
    }
    for x in &evs.points {
        pred.expect_ok(p.is_ccnd(x), || {
            format!("point {x} is not convex-conformally non-decomposable")
        });
    }
    checks.push(pred);
    checks.push(sign_check(&lifted_evs));

    let mut g = random::rng(seed);
    let xs: Vec<RatVec> = (0..samples)
        .filter_map(|_| random::polyhedron_member(&mut g, &evs, p.ambient_dim()))
        .collect();
    let mut dec = Check::new("decompositions");
    if let Ok(dim) = p.dim() {
        for x in &xs {
            let lx = p.lift_point(x).expect("dimension checked");
            let ordered = lift.conformal_decompose_with(&lifted_evs, &lx);
            match (p.decompose_with_lifted(&lift, &lifted_evs, x), ordered) {
                (Ok(d), Ok(ordered)) => {
                    dec.expect(d.sum() == *x, || {
                        format!("terms for {x} do not reconstruct it")
                    });
                    dec.expect(d.weight_sum().is_one(), || {
                        format!("convex weights for {x} sum to {}", d.weight_sum())
                    });
                    dec.expect(!d.convex_terms.is_empty(), || {
                        format!("no convex term for {x}")
                    });
                    for (_, q) in &d.convex_terms {
                        dec.expect(conforms(q, x).unwrap_or(false), || {
                            format!("point {q} not conformal to {x}")
                        });
                    }
                    for t in &d.conic_terms {
                        dec.expect(conforms(t, x).unwrap_or(false), || {
                            format!("direction {t} not conformal to {x}")
                        });
                    }
                    let n = d.len();
                    dec.expect(n <= dim + 1, || {
                        format!("{n} terms for {x} exceed dim P + 1 = {}", dim + 1)
                    });
                    decomposition_order(&mut dec, &ordered);
                }
                (Err(e), _) | (_, Err(e)) => dec.expect(false, || format!("{x}: {e}")),
            }
        }
    } else {
        dec = dec.skip("empty polyhedron");
    }
    checks.push(dec);

    let mut oracle = Check::new("oracle_agreement");
    let evs_done = !p.is_empty() && oracle_evs(&mut oracle, &lift, &lifted_evs);
    let ccnd_done = p.ambient_dim() <= BRUTE_CND_MAX_DIM;
    if ccnd_done {
        for x in evs.points.iter().chain(&xs) {
            match (p.is_ccnd(x), brute_ccnd(p, x)) {
                (Ok(a), Ok(b)) => oracle.expect(a == b, || format!("{x}: ccND {a}, oracle {b}")),
                (a, b) => oracle.expect(false, || format!("{x}: {a:?} / {b:?}")),
            }
        }
    }
    if p.is_empty() {
        oracle = oracle.skip("empty polyhedron");
    } else {
        oracle = oracle_limits(oracle, evs_done, ccnd_done, lift.dim());
    }
    checks.push(oracle);
    checks
}

/// Runs every check; the boolean is `true` iff none failed.
pub fn verify(inst: &Instance, samples: usize, seed: u64) -> Result<(Value, bool), CliError> {
    let exp = inst.expected.as_ref();
    let checks = match &inst.model {
        Model::SCone(k) => verify_scone(k, exp, samples, seed),
        Model::Cone(c) => verify_cone(c, exp, samples, seed),
        Model::Polyhedron(p) => verify_polyhedron(p, exp, samples, seed),
    };
    let passed = checks.iter().all(|c| c.failures.is_empty());
    let failures: Vec<Value> = checks
        .iter()
        .flat_map(|c| {
            c.failures
                .iter()
                .map(move |f| json!({"check": c.name, "detail": f}))
        })
        .collect();
    let summary: Vec<Value> = checks
        .iter()
        .map(|c| {
            let mut v = json!({"name": c.name, "status": c.status(), "checked": c.checked});
            if let Some(why) = &c.skipped {
                v["note"] = Value::String(why.clone());
            }
            v
        })
        .collect();
    Ok((
        json!({
            "kind": inst.kind.name(),
            "samples": samples,
            "seed": seed,
            "passed": passed,
            "checks": summary,
            "failures": failures,
        }),
        passed,
    ))
}
