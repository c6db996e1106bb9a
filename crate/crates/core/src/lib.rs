//! Elementary vectors of s-cones, polyhedral cones and polyhedra.
//!
//! Every nonzero member of an s-cone (a linear subspace with sign
//! constraints on some coordinates) is a conformal sum of support-minimal
//! members. Through a graph lift the same holds for general polyhedral
//! cones `{x : Ax >= 0}`, and through homogenization for polyhedra
//! `{x : Ax >= b}`. This crate enumerates those elementary vectors and
//! computes cancelation-free decompositions, all in exact rational
//! arithmetic.
//!
//! Module map:
//!
//! - [`ratlin`]: rationals, vectors, matrices, kernels, rank, exact feasibility.
//! - [`signs`]: sign vectors and conformality.
//! - [`scone`]: s-cones, elementary vectors, conformal decomposition.
//! - [`cone`]: polyhedral cones via the lift `x -> (x, Ax)`.
//! - [`polyhedron`]: polyhedra, recession cones, convex-conformal decomposition.
//! - [`flux`]: metabolic networks, flux cones and flux polyhedra, knockouts.
//! - [`oracle`]: definition-level brute-force checks and random instances.

pub mod cone;
mod error;
pub mod flux;
pub mod oracle;
pub mod polyhedron;
pub mod ratlin;
pub mod scone;
pub mod signs;

pub use cone::{LiftedCone, PolyCone};
pub use error::{Error, Result};
pub use flux::{MetabolicNetwork, ReactionBounds};
pub use polyhedron::{AffineDecomposition, Polyhedron, PolyhedronEVs};
pub use ratlin::{RatMat, RatVec, Rational};
pub use scone::{ConicDecomposition, SCone};
pub use signs::{Sign, SignVector};
