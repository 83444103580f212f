//! Exact invariant geometry of metric Lie algebras.
//!
//! Given rational structure constants and a nondegenerate rational metric,
//! this crate computes the Levi-Civita connection of the left-invariant
//! metric, its curvature, Ricci and Weyl tensors, and a set of analyses on
//! top: Einstein and Ricci soliton solvers, Ledger conditions, parallel
//! null line fields and harmonicity of invariant vector fields. All
//! arithmetic is exact over the rationals.

pub mod fields;
pub mod geometry;
pub mod lie;
pub mod linalg;
pub mod model;
pub mod rational;
pub mod soliton;

pub use fields::{HarmonicityReport, InvariantVectorField};
pub use geometry::{ConnectionCoefficients, CurvatureData, GeometryError, MetricLieAlgebra, RicciData, Tensor};
pub use lie::{DerivationBasis, LieAlgebraModel};
pub use linalg::{AffineSolution, RatMatrix};
pub use model::{builtin, load_model, Model, ModelDocument, ModelError};
pub use rational::Rational;
pub use soliton::{SolitonClass, SolitonVerdict};
