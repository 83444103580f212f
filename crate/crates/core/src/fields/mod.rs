//! Invariant vector fields: covariant derivatives, rough Laplacian,
//! harmonicity, geodesic and Killing checks, parallel fields and energy.
//!
//! The rough Laplacian is taken without the customary minus sign,
//! `∇*∇V = g^{ij}(∇_{u_i}∇_{u_j}V - ∇_{∇_{u_i}u_j}V)`, which in a
//! pseudo-orthonormal frame is `Σ ε_i(∇_{e_i}∇_{e_i}V - ∇_{∇_{e_i}e_i}V)`.

mod walker;

use num_traits::Zero;

pub use walker::{parallel_null_line_fields, NullLineSearch};

use crate::geometry::MetricLieAlgebra;
use crate::linalg::{nullspace, rank, vector, RatMatrix};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("field has {found} coefficients, model has dimension {dim}")]
    DimensionMismatch { found: usize, dim: usize },
    #[error("volume must be positive, got {0}")]
    NonPositiveVolume(Rational),
}

/// A left-invariant vector field, by its coefficients in the model basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantVectorField(pub Vec<Rational>);

impl InvariantVectorField {
    pub fn new(m: &MetricLieAlgebra, coefficients: Vec<Rational>) -> Result<Self, FieldError> {
        if coefficients.len() != m.dim() {
            return Err(FieldError::DimensionMismatch { found: coefficients.len(), dim: m.dim() });
        }
        Ok(Self(coefficients))
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarmonicityReport {
    /// Column `i` is `∇_{u_i} V`.
    pub nabla_v: RatMatrix,
    pub rough_laplacian: Vec<Rational>,
    /// `tr[R(∇.V, V).] = g^{ij} R(∇_{u_i}V, V) u_j`.
    pub curvature_term: Vec<Rational>,
    pub is_harmonic_section: bool,
    pub is_harmonic_map: bool,
    /// `∇*∇V` and `V` linearly dependent.
    pub is_critical_constant_length: bool,
    pub is_geodesic: bool,
    pub is_killing: bool,
    pub is_parallel: bool,
    pub lie_derivative_metric: RatMatrix,
    /// `‖∇V‖² = g^{ij} g(∇_{u_i}V, ∇_{u_j}V)`.
    pub energy_density: Rational,
    pub squared_length: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnergyReport {
    pub density: Rational,
    pub volume: Rational,
    /// `(n/2 + density/2) · volume`.
    pub total: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarmonicMapClassification {
    /// Basis of the harmonic sections.
    pub subspace: Vec<Vec<Rational>>,
    /// The curvature term vanishes on the whole subspace.
    pub quadratic_obstruction_vanishes: bool,
    /// Polarization probes: basis vectors, then pairwise sums, each with its curvature term.
    pub witnesses: Vec<(Vec<Rational>, Vec<Rational>)>,
}

/// Matrix whose column `i` is `∇_{u_i} V`.
pub fn nabla_field(m: &MetricLieAlgebra, v: &[Rational]) -> RatMatrix {
    let n = m.dim();
    let cols: Vec<Vec<Rational>> = m.levi_civita().lambdas.iter().map(|l| l.mul_vec(v)).collect();
    RatMatrix::from_columns(n, &cols).expect("n columns")
}

/// Matrix of the linear map `V ↦ ∇*∇V`.
pub fn rough_laplacian_operator(m: &MetricLieAlgebra) -> RatMatrix {
    let n = m.dim();
    let conn = m.levi_civita();
    let ginv = m.inverse_metric();
    let mut out = RatMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let gij = &ginv[(i, j)];
            if gij.is_zero() {
                continue;
            }
            let term = &(&conn.lambdas[i] * &conn.lambdas[j]) - &conn.along(&conn.basis(i, j));
            out = &out + &term.scale(gij);
        }
    }
    out
}

pub fn rough_laplacian(m: &MetricLieAlgebra, v: &[Rational]) -> Vec<Rational> {
    rough_laplacian_operator(m).mul_vec(v)
}

/// `g^{ij} R(∇_{u_i}V, V) u_j`; quadratic in `V`.
pub fn curvature_term(m: &MetricLieAlgebra, v: &[Rational]) -> Vec<Rational> {
    let n = m.dim();
    let ginv = m.inverse_metric();
    let curv = m.curvature();
    let nabla = nabla_field(m, v);
    let mut out = vector::zeros(n);
    for i in 0..n {
        let r = curv.operator(&nabla.column(i), v);
        for j in 0..n {
            if !ginv[(i, j)].is_zero() {
                vector::axpy(&mut out, &ginv[(i, j)], &r.column(j));
            }
        }
    }
    out
}

/// `(ℒ_V g)_{jk} = g(∇_{u_j}V, u_k) + g(u_j, ∇_{u_k}V)`.
pub fn lie_derivative_metric(m: &MetricLieAlgebra, v: &[Rational]) -> RatMatrix {
    let lowered = m.metric() * &nabla_field(m, v);
    // lowered[(k, j)] = g(u_k, ∇_{u_j} V)
    &lowered + &lowered.transpose()
}

pub fn energy_density(m: &MetricLieAlgebra, v: &[Rational]) -> Rational {
    let nabla = nabla_field(m, v);
    // tr(g⁻¹ · Nᵀ g N) = g^{ij} g(N e_i, N e_j)
    let gram = &(&nabla.transpose() * m.metric()) * &nabla;
    (m.inverse_metric() * &gram).trace()
}

pub fn analyze_field(m: &MetricLieAlgebra, field: &InvariantVectorField) -> HarmonicityReport {
    let v = field.coefficients();
    let n = m.dim();
    let nabla_v = nabla_field(m, v);
    let rough_laplacian = rough_laplacian(m, v);
    let curvature_term = curvature_term(m, v);
    let is_harmonic_section = vector::is_zero(&rough_laplacian);
    let is_harmonic_map = is_harmonic_section && vector::is_zero(&curvature_term);
    let pair = RatMatrix::from_columns(n, &[rough_laplacian.clone(), v.to_vec()]).expect("length n");
    let is_critical_constant_length = rank(&pair) <= 1;
    let is_geodesic = vector::is_zero(&m.levi_civita().nabla(v, v));
    let lie_derivative_metric = lie_derivative_metric(m, v);
    let is_killing = lie_derivative_metric.is_zero();
    let is_parallel = nabla_v.is_zero();
    HarmonicityReport {
        energy_density: energy_density(m, v),
        squared_length: m.inner(v, v),
        nabla_v,
        rough_laplacian,
        curvature_term,
        is_harmonic_section,
        is_harmonic_map,
        is_critical_constant_length,
        is_geodesic,
        is_killing,
        is_parallel,
        lie_derivative_metric,
    }
}

/// Basis of `{V : ∇*∇V = 0}`.
pub fn harmonic_section_space(m: &MetricLieAlgebra) -> Vec<Vec<Rational>> {
    nullspace(&rough_laplacian_operator(m))
}

pub fn harmonic_map_classification(m: &MetricLieAlgebra) -> HarmonicMapClassification {
    let subspace = harmonic_section_space(m);
    let mut probes: Vec<Vec<Rational>> = subspace.clone();
    for a in 0..subspace.len() {
        for b in a + 1..subspace.len() {
            probes.push(vector::add(&subspace[a], &subspace[b]));
        }
    }
    let witnesses: Vec<(Vec<Rational>, Vec<Rational>)> = probes
        .into_iter()
        .map(|p| {
            let t = curvature_term(m, &p);
            (p, t)
        })
        .collect();
    let quadratic_obstruction_vanishes = witnesses.iter().all(|(_, t)| vector::is_zero(t));
    HarmonicMapClassification { subspace, quadratic_obstruction_vanishes, witnesses }
}

/// Basis of `{X : ∇_{u_i}X = 0 for all i}`.
pub fn parallel_fields(m: &MetricLieAlgebra) -> Vec<Vec<Rational>> {
    let stacked = RatMatrix::vstack(&m.levi_civita().lambdas).expect("square blocks");
    nullspace(&stacked)
}

pub fn energy_report(
    m: &MetricLieAlgebra,
    field: &InvariantVectorField,
    volume: &Rational,
) -> Result<EnergyReport, FieldError> {
    if volume <= &Rational::zero() {
        return Err(FieldError::NonPositiveVolume(volume.clone()));
    }
    let density = energy_density(m, field.coefficients());
    let half = Rational::new(1.into(), 2.into());
    let n = Rational::from_integer(m.dim().into());
    let total = (n * &half + &density * &half) * volume;
    Ok(EnergyReport { density, volume: volume.clone(), total })
}
