//! Command implementations behind the `elvec` binary. Every command turns an
//! [`doc::Instance`] into a JSON report; the binary only handles files,
//! flags and exit codes.

pub mod doc;
mod verify;

use elvec::flux::{knockout_polyhedron_evs, knockout_vectors};
use elvec::oracle::{brute_cnd, BRUTE_CND_MAX_DIM};
use elvec::ratlin::{normalize_primitive, restricted_kernel};
use elvec::signs::conforms;
use elvec::{PolyhedronEVs, RatVec, SCone};
use num::One;
use serde_json::{json, Value};

use doc::{Instance, Model};

pub use verify::verify;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("not a member: {0}")]
    NonMember(String),
    #[error("internal check failed: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Internal(_) => 1,
            CliError::Input(_) => 2,
            CliError::NonMember(_) => 3,
        }
    }
}

impl From<elvec::Error> for CliError {
    fn from(e: elvec::Error) -> Self {
        match e {
            elvec::Error::NotMember(msg) => CliError::NonMember(msg),
            other => CliError::Input(other.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Predicate {
    /// support-minimal
    Sm,
    /// support-wise non-decomposable
    Swnd,
    /// conformally non-decomposable
    Cnd,
    /// extreme ray
    Ex,
    /// vertex
    Ve,
    /// convex-conformally non-decomposable
    Ccnd,
}

impl Predicate {
    fn name(self) -> &'static str {
        match self {
            Predicate::Sm => "sm",
            Predicate::Swnd => "swnd",
            Predicate::Cnd => "cnd",
            Predicate::Ex => "ex",
            Predicate::Ve => "ve",
            Predicate::Ccnd => "ccnd",
        }
    }
}

pub(crate) fn vec_json(v: &RatVec) -> Value {
    Value::Array(v.iter().map(|q| Value::String(q.to_string())).collect())
}

pub(crate) fn vecs_json(vs: &[RatVec]) -> Value {
    Value::Array(vs.iter().map(vec_json).collect())
}

fn one_based(idx: &[usize]) -> Vec<usize> {
    idx.iter().map(|i| i + 1).collect()
}

fn check_dim(inst: &Instance, x: &RatVec) -> Result<(), CliError> {
    let r = inst.ambient_dim();
    if x.dim() != r {
        return Err(CliError::Input(format!(
            "vector has {} entries, expected {r}",
            x.dim()
        )));
    }
    Ok(())
}

fn evs_json(evs: &PolyhedronEVs) -> Value {
    json!({"conic": vecs_json(&evs.conic), "points": vecs_json(&evs.points)})
}

pub fn enumerate(inst: &Instance) -> Value {
    match &inst.model {
        Model::SCone(k) => json!({"conic": vecs_json(&k.enumerate_evs())}),
        Model::Cone(c) => json!({"conic": vecs_json(&c.enumerate_evs())}),
        Model::Polyhedron(p) => evs_json(&p.enumerate_evs()),
    }
}

fn weighted(terms: &[RatVec]) -> Value {
    terms
        .iter()
        .map(|t| {
            let ev = normalize_primitive(t).expect("terms are nonzero");
            let w = t.ratio_to(&ev).expect("positive multiple");
            json!({"weight": w.to_string(), "ev": vec_json(&ev)})
        })
        .collect()
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), CliError> {
    if cond {
        Ok(())
    } else {
        Err(CliError::Internal(what()))
    }
}

fn ensure_conformal(terms: &[RatVec], x: &RatVec) -> Result<(), CliError> {
    for t in terms {
        ensure(conforms(t, x)?, || {
            format!("term {t} is not conformal to {x}")
        })?;
    }
    Ok(())
}

/// Conformal decomposition, re-verified (reconstruction and conformality)
/// before it is reported.
pub fn decompose(inst: &Instance, x: &RatVec) -> Result<Value, CliError> {
    check_dim(inst, x)?;
    match &inst.model {
        Model::SCone(k) => {
            let d = k.conformal_decompose(x)?;
            ensure(d.sum() == *x, || "terms do not sum to the input".into())?;
            ensure_conformal(&d.terms, x)?;
            Ok(json!({"input": vec_json(x), "terms": weighted(&d.terms)}))
        }
        Model::Cone(c) => {
            let d = c.conformal_decompose(x)?;
            ensure(d.sum() == *x, || "terms do not sum to the input".into())?;
            let lifted: Vec<RatVec> = d
                .terms
                .iter()
                .map(|t| c.lift_vector(t))
                .collect::<Result<_, _>>()?;
            ensure_conformal(&lifted, &c.lift_vector(x)?)?;
            Ok(json!({"input": vec_json(x), "terms": weighted(&d.terms)}))
        }
        Model::Polyhedron(p) => {
            let d = p.conformal_decompose(x)?;
            ensure(d.sum() == *x, || "terms do not sum to the input".into())?;
            ensure(d.weight_sum().is_one(), || {
                format!("convex weights sum to {}", d.weight_sum())
            })?;
            let points: Vec<RatVec> = d.convex_terms.iter().map(|(_, q)| q.clone()).collect();
            ensure_conformal(&points, x)?;
            ensure_conformal(&d.conic_terms, x)?;
            let convex: Value = d
                .convex_terms
                .iter()
                .map(|(l, q)| json!({"lambda": l.to_string(), "point": vec_json(q)}))
                .collect();
            Ok(json!({
                "input": vec_json(x),
                "convex_terms": convex,
                "conic_terms": weighted(&d.conic_terms),
            }))
        }
    }
}

fn set_text(idx: &[usize]) -> String {
    let items: Vec<String> = idx.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", items.join(","))
}

/// s-cone predicates. `label` names the vector in justifications.
fn scone_predicate(
    k: &SCone,
    x: &RatVec,
    pred: Predicate,
    label: &str,
) -> Result<(bool, String), CliError> {
    if x.is_zero() {
        return Ok((false, "the zero vector is not elementary".into()));
    }
    let supp = x.support();
    Ok(match pred {
        Predicate::Sm => {
            let line = restricted_kernel(k.kernel_of(), &supp)?.len();
            (
                k.is_elementary(x)?,
                format!(
                    "members supported in supp({label}) = {} form a space of dimension {line}",
                    set_text(&supp)
                ),
            )
        }
        Predicate::Swnd => {
            let r = k.is_swnd(x)?;
            let why = if r {
                "no member split into parts with different supports inside supp".to_string()
            } else {
                "a split into two members with different supports exists".to_string()
            };
            (r, format!("{why} ({label}, support {})", set_text(&supp)))
        }
        Predicate::Cnd => {
            if k.dim() <= BRUTE_CND_MAX_DIM {
                let r = brute_cnd(k, x)?;
                let why = if r {
                    "every conformal split is proportional"
                } else {
                    "a non-proportional conformal split exists"
                };
                (r, format!("{why} (exhaustive search on {label})"))
            } else {
                let line = restricted_kernel(k.kernel_of(), &supp)?.len();
                (
                    k.is_elementary(x)?,
                    format!("equivalent to support-minimality here; restricted kernel of {label} has dimension {line}"),
                )
            }
        }
        _ => unreachable!("filtered by the caller"),
    })
}

fn mismatch(pred: Predicate, inst: &Instance) -> CliError {
    CliError::Input(format!(
        "predicate {} does not apply to kind {}",
        pred.name(),
        inst.kind.name()
    ))
}

pub fn check(inst: &Instance, x: &RatVec, pred: Predicate) -> Result<Value, CliError> {
    check_dim(inst, x)?;
    let (result, justification) = match (&inst.model, pred) {
        (Model::SCone(k), Predicate::Sm | Predicate::Swnd | Predicate::Cnd) => {
            if let Some(msg) = k.first_violation(x)? {
                return Err(CliError::NonMember(msg));
            }
            scone_predicate(k, x, pred, "x")?
        }
        (Model::Cone(c), Predicate::Sm | Predicate::Swnd | Predicate::Cnd) => {
            if let Some(msg) = c.first_violation(x)? {
                return Err(CliError::NonMember(msg));
            }
            let lifted = c.lift();
            scone_predicate(&lifted.scone, &c.lift_vector(x)?, pred, "(x, Ax)")?
        }
        (Model::Cone(c), Predicate::Ex) => {
            if let Some(msg) = c.first_violation(x)? {
                return Err(CliError::NonMember(msg));
            }
            let tight = c.tight_rows(x)?;
            let face = c.face_dim(x)?;
            (
                c.is_extreme(x)?,
                format!(
                    "tight rows {} leave a face of dimension {face}",
                    set_text(&tight)
                ),
            )
        }
        (Model::Polyhedron(p), Predicate::Ve) => {
            if let Some(msg) = p.first_violation(x)? {
                return Err(CliError::NonMember(msg));
            }
            let rank = p.active_rank(x)?;
            (
                p.is_vertex(x)?,
                format!("active constraints have rank {rank} of {}", p.ambient_dim()),
            )
        }
        (Model::Polyhedron(p), Predicate::Ccnd) => {
            if let Some(msg) = p.first_violation(x)? {
                return Err(CliError::NonMember(msg));
            }
            let lift = p.lift();
            let lx = p.lift_point(x)?;
            let line = restricted_kernel(lift.kernel_of(), &lx.support())?.len();
            (
                p.is_ccnd(x)?,
                format!("members of the lift supported in supp(x, 1, Ax - b) form a space of dimension {line}"),
            )
        }
        _ => return Err(mismatch(pred, inst)),
    };
    Ok(json!({
        "predicate": pred.name(),
        "vector": vec_json(x),
        "result": result,
        "justification": justification,
    }))
}

pub fn knockout(inst: &Instance, dead: &[usize]) -> Result<Value, CliError> {
    if !inst.is_flux() {
        return Err(CliError::Input(format!(
            "knockout needs a flux kind, not {}",
            inst.kind.name()
        )));
    }
    let r = inst.ambient_dim();
    if let Some(&j) = dead.iter().find(|&&j| j >= r) {
        return Err(CliError::Input(format!(
            "reaction {} out of range 1..={r}",
            j + 1
        )));
    }
    let mut dead = dead.to_vec();
    dead.sort_unstable();
    dead.dedup();
    match &inst.model {
        Model::SCone(k) => {
            let evs = k.enumerate_evs();
            let kept = knockout_vectors(&evs, r, &dead)?;
            Ok(json!({
                "reactions": one_based(&dead),
                "count_before": {"conic": evs.len()},
                "count_after": {"conic": kept.len()},
                "conic": vecs_json(&kept),
            }))
        }
        Model::Polyhedron(p) => {
            let evs = p.enumerate_evs();
            let kept = knockout_polyhedron_evs(&evs, r, &dead)?;
            Ok(json!({
                "reactions": one_based(&dead),
                "count_before": {"conic": evs.conic.len(), "points": evs.points.len()},
                "count_after": {"conic": kept.conic.len(), "points": kept.points.len()},
                "conic": vecs_json(&kept.conic),
                "points": vecs_json(&kept.points),
            }))
        }
        Model::Cone(_) => unreachable!("flux kinds are s-cones or polyhedra"),
    }
}

pub fn dim(inst: &Instance) -> Result<Value, CliError> {
    Ok(match &inst.model {
        Model::SCone(k) => json!({"dim": k.cone_dim(), "subspace_dim": k.subspace_dim()}),
        Model::Cone(c) => json!({"dim": c.dim()}),
        Model::Polyhedron(p) => {
            if p.is_empty() {
                json!({"dim": null, "empty": true})
            } else {
                json!({"dim": p.dim()?, "empty": false})
            }
        }
    })
}

/// Canonical rendering: pretty JSON with sorted keys and a final newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}
