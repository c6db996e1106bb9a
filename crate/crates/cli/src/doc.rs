//! JSON instance documents.
//!
//! Numbers are exact: each entry is either a JSON integer or a string
//! `"p/q"` / `"p"`. Index sets and bound keys are 1-based.

use std::collections::BTreeMap;

use elvec::{
    MetabolicNetwork, PolyCone, Polyhedron, RatMat, RatVec, Rational, ReactionBounds, SCone,
};
use serde::Deserialize;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Subspace,
    SCone,
    Cone,
    Polyhedron,
    FluxCone,
    FluxPolyhedron,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Subspace => "subspace",
            Kind::SCone => "s_cone",
            Kind::Cone => "cone",
            Kind::Polyhedron => "polyhedron",
            Kind::FluxCone => "flux_cone",
            Kind::FluxPolyhedron => "flux_polyhedron",
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Number {
    Int(i64),
    Text(String),
}

impl Number {
    fn to_rational(&self) -> Result<Rational, CliError> {
        match self {
            Number::Int(n) => Ok(Rational::from_integer((*n).into())),
            Number::Text(s) => parse_rational(s),
        }
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, CliError> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| CliError::Input(format!("bad rational {s:?}: {e}")))
}

/// Comma-separated rationals, as given to `--vector`.
pub fn parse_vector(s: &str) -> Result<RatVec, CliError> {
    if s.trim().is_empty() {
        return Ok(RatVec::zeros(0));
    }
    s.split(',').map(parse_rational).collect()
}

/// Comma-separated 1-based indices, converted to 0-based.
pub fn parse_indices(s: &str) -> Result<Vec<usize>, CliError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            let i: usize = t
                .trim()
                .parse()
                .map_err(|_| CliError::Input(format!("bad index {t:?}")))?;
            zero_based(i)
        })
        .collect()
}

fn zero_based(i: usize) -> Result<usize, CliError> {
    i.checked_sub(1)
        .ok_or_else(|| CliError::Input("indices are 1-based; got 0".into()))
}

#[derive(Debug, Default, Deserialize)]
pub struct BoundDoc {
    pub lower: Option<Number>,
    pub upper: Option<Number>,
}

#[derive(Debug, Default, Deserialize)]
pub struct ExpectedDoc {
    #[serde(default)]
    pub conic: Vec<Vec<Number>>,
    pub points: Option<Vec<Vec<Number>>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub kind: Kind,
    #[serde(default)]
    pub description: Option<String>,
    pub dim: Option<usize>,
    pub kernel_matrix: Option<Vec<Vec<Number>>>,
    pub nonneg: Option<Vec<usize>>,
    #[serde(alias = "inequalities")]
    pub matrix: Option<Vec<Vec<Number>>>,
    pub a_in: Option<Vec<Vec<Number>>>,
    pub b_in: Option<Vec<Number>>,
    pub a_eq: Option<Vec<Vec<Number>>>,
    pub b_eq: Option<Vec<Number>>,
    pub stoichiometry: Option<Vec<Vec<Number>>>,
    pub irreversible: Option<Vec<usize>>,
    pub reaction_names: Option<Vec<String>>,
    pub metabolite_names: Option<Vec<String>>,
    pub bounds: Option<BTreeMap<String, BoundDoc>>,
    pub expected_evs: Option<ExpectedDoc>,
}

pub enum Model {
    SCone(SCone),
    Cone(PolyCone),
    Polyhedron(Polyhedron),
}

pub struct Expected {
    pub conic: Vec<RatVec>,
    pub points: Option<Vec<RatVec>>,
}

pub struct Instance {
    pub kind: Kind,
    pub model: Model,
    pub network: Option<MetabolicNetwork>,
    pub expected: Option<Expected>,
}

impl Instance {
    pub fn ambient_dim(&self) -> usize {
        match &self.model {
            Model::SCone(k) => k.dim(),
            Model::Cone(c) => c.ambient_dim(),
            Model::Polyhedron(p) => p.ambient_dim(),
        }
    }

    pub fn is_flux(&self) -> bool {
        self.network.is_some()
    }
}

fn require<T>(field: Option<T>, name: &str, kind: Kind) -> Result<T, CliError> {
    field.ok_or_else(|| CliError::Input(format!("kind {} requires field {name:?}", kind.name())))
}

fn forbid<T>(field: &Option<T>, name: &str, kind: Kind) -> Result<(), CliError> {
    match field {
        Some(_) => Err(CliError::Input(format!(
            "field {name:?} is not used by kind {}",
            kind.name()
        ))),
        None => Ok(()),
    }
}

fn vector(entries: &[Number]) -> Result<RatVec, CliError> {
    entries.iter().map(Number::to_rational).collect()
}

/// Builds a matrix; `cols` comes from the rows, or from `dim` when there are
/// no rows. Ragged rows and disagreement with `dim` are input errors.
fn matrix(rows: &[Vec<Number>], dim: Option<usize>, name: &str) -> Result<RatMat, CliError> {
    let cols = match (rows.first(), dim) {
        (Some(first), Some(d)) if first.len() != d => {
            return Err(CliError::Input(format!(
                "{name} has {} columns but dim is {d}",
                first.len()
            )))
        }
        (Some(first), _) => first.len(),
        (None, Some(d)) => d,
        (None, None) => {
            return Err(CliError::Input(format!(
                "{name} has no rows; give \"dim\" to fix the number of columns"
            )))
        }
    };
    let data = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            if row.len() != cols {
                return Err(CliError::Input(format!(
                    "{name} row {} has {} entries, expected {cols}",
                    i + 1,
                    row.len()
                )));
            }
            Ok(vector(row)?.into_entries())
        })
        .collect::<Result<Vec<_>, _>>()?;
    RatMat::from_rows(cols, data).map_err(|e| CliError::Input(e.to_string()))
}

fn indices(list: &[usize], dim: usize, name: &str) -> Result<Vec<usize>, CliError> {
    list.iter()
        .map(|&i| {
            let j = zero_based(i)?;
            if j >= dim {
                return Err(CliError::Input(format!(
                    "{name} index {i} out of range 1..={dim}"
                )));
            }
            Ok(j)
        })
        .collect()
}

fn vectors(list: &[Vec<Number>], dim: usize, name: &str) -> Result<Vec<RatVec>, CliError> {
    list.iter()
        .map(|v| {
            let v = vector(v)?;
            if v.dim() != dim {
                return Err(CliError::Input(format!(
                    "{name} vector has {} entries, expected {dim}",
                    v.dim()
                )));
            }
            Ok(v)
        })
        .collect()
}

pub fn parse(text: &str) -> Result<Instance, CliError> {
    let doc: Document = serde_json::from_str(text)
        .map_err(|e| CliError::Input(format!("invalid document: {e}")))?;
    build(doc)
}

fn build(doc: Document) -> Result<Instance, CliError> {
    let kind = doc.kind;
    let (model, network) = match kind {
        Kind::Subspace | Kind::SCone => {
            for (f, n) in [
                (&doc.matrix, "matrix"),
                (&doc.a_in, "a_in"),
                (&doc.stoichiometry, "stoichiometry"),
            ] {
                forbid(f, n, kind)?;
            }
            let m = matrix(
                &require(doc.kernel_matrix, "kernel_matrix", kind)?,
                doc.dim,
                "kernel_matrix",
            )?;
            let nonneg = match (kind, doc.nonneg) {
                (Kind::Subspace, Some(f)) if !f.is_empty() => {
                    return Err(CliError::Input(
                        "a subspace has no sign-constrained coordinates".into(),
                    ))
                }
                (Kind::Subspace, _) => Vec::new(),
                (_, f) => indices(&require(f, "nonneg", kind)?, m.cols(), "nonneg")?,
            };
            let k = SCone::new(m, nonneg).map_err(|e| CliError::Input(e.to_string()))?;
            (Model::SCone(k), None)
        }
        Kind::Cone => {
            forbid(&doc.kernel_matrix, "kernel_matrix", kind)?;
            forbid(&doc.a_in, "a_in", kind)?;
            let a = matrix(&require(doc.matrix, "matrix", kind)?, doc.dim, "matrix")?;
            (Model::Cone(PolyCone::new(a)), None)
        }
        Kind::Polyhedron => {
            forbid(&doc.kernel_matrix, "kernel_matrix", kind)?;
            forbid(&doc.matrix, "matrix", kind)?;
            let a_in_rows = doc.a_in.unwrap_or_default();
            let a_eq_rows = doc.a_eq.unwrap_or_default();
            let dim = doc
                .dim
                .or_else(|| a_in_rows.first().or(a_eq_rows.first()).map(Vec::len));
            let a_in = matrix(&a_in_rows, dim, "a_in")?;
            let a_eq = matrix(&a_eq_rows, dim, "a_eq")?;
            let b_in = vector(&doc.b_in.unwrap_or_default())?;
            let b_eq = vector(&doc.b_eq.unwrap_or_default())?;
            let p = Polyhedron::new(a_in, b_in, a_eq, b_eq)
                .map_err(|e| CliError::Input(e.to_string()))?;
            (Model::Polyhedron(p), None)
        }
        Kind::FluxCone | Kind::FluxPolyhedron => {
            forbid(&doc.kernel_matrix, "kernel_matrix", kind)?;
            forbid(&doc.matrix, "matrix", kind)?;
            forbid(&doc.a_in, "a_in", kind)?;
            let n = matrix(
                &require(doc.stoichiometry, "stoichiometry", kind)?,
                doc.dim,
                "stoichiometry",
            )?;
            let r = n.cols();
            let irr = indices(
                &require(doc.irreversible, "irreversible", kind)?,
                r,
                "irreversible",
            )?;
            let reactions = doc
                .reaction_names
                .unwrap_or_else(|| (1..=r).map(|i| format!("R{i}")).collect());
            let metabolites = doc
                .metabolite_names
                .unwrap_or_else(|| (1..=n.rows()).map(|i| format!("M{i}")).collect());
            let net = MetabolicNetwork::new(n, irr, reactions, metabolites)
                .map_err(|e| CliError::Input(e.to_string()))?;
            if kind == Kind::FluxCone {
                forbid(&doc.bounds, "bounds", kind)?;
                (Model::SCone(net.flux_cone()), Some(net))
            } else {
                let mut bounds = ReactionBounds::new();
                for (key, b) in doc.bounds.unwrap_or_default() {
                    let i: usize = key
                        .parse()
                        .map_err(|_| CliError::Input(format!("bad reaction key {key:?}")))?;
                    let j = indices(&[i], r, "bounds")?[0];
                    let lower = b.lower.as_ref().map(Number::to_rational).transpose()?;
                    let upper = b.upper.as_ref().map(Number::to_rational).transpose()?;
                    bounds.set(j, lower, upper).map_err(|_| {
                        CliError::Input(format!("reaction {i}: lower bound exceeds upper bound"))
                    })?;
                }
                let p = net
                    .flux_polyhedron(&bounds)
                    .map_err(|e| CliError::Input(e.to_string()))?;
                (Model::Polyhedron(p), Some(net))
            }
        }
    };
    let mut inst = Instance {
        kind,
        model,
        network,
        expected: None,
    };
    if let Some(e) = doc.expected_evs {
        let dim = inst.ambient_dim();
        let is_poly = matches!(inst.model, Model::Polyhedron(_));
        if e.points.is_some() && !is_poly {
            return Err(CliError::Input(format!(
                "expected_evs.points does not apply to kind {}",
                kind.name()
            )));
        }
        inst.expected = Some(Expected {
            conic: vectors(&e.conic, dim, "expected_evs.conic")?,
            points: e
                .points
                .map(|p| vectors(&p, dim, "expected_evs.points"))
                .transpose()?,
        });
    }
    Ok(inst)
}
