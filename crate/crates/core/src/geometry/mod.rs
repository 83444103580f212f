//! Invariant pseudo-Riemannian geometry of a metric Lie algebra.
//!
//! Conventions used throughout:
//!
//! * `(Λ_i)^k_j` is the `u_k` coefficient of `∇_{u_i} u_j`;
//! * `R(x, y) = ∇_x ∇_y - ∇_y ∇_x - ∇_{[x,y]}`, i.e. `[Λ_x, Λ_y] - Λ_{[x,y]}`;
//! * `R_{ijkl} = g(R(u_i, u_j) u_k, u_l)`;
//! * `ρ(y, z) = tr(x ↦ R(x, y) z)`, `Rc = g⁻¹ρ`, `τ = tr Rc`.

mod connection;
mod curvature;
mod ledger;
mod tensor;

use std::sync::OnceLock;

use num_traits::Zero;

pub use connection::ConnectionCoefficients;
pub use curvature::{CurvatureData, RicciData};
pub use ledger::LedgerReport;
pub use tensor::{MultiIndices, Tensor};

use crate::lie::{LieAlgebraModel, LieError};
use crate::linalg::{matrix_inverse, vector, LinalgError, RatMatrix};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeometryError {
    #[error("metric is {rows}x{cols} but the algebra has dimension {dim}")]
    MetricShape { rows: usize, cols: usize, dim: usize },
    #[error("metric is not symmetric: g[{0}][{1}] != g[{1}][{0}]")]
    AsymmetricMetric(usize, usize),
    #[error("metric is degenerate")]
    SingularMetric,
    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    JacobiFailure(usize, usize, usize),
    #[error("operation requires dimension at least 4, got {0}")]
    UnsupportedDimension(usize),
    #[error("covariant derivative needs a tensor of rank at least 1")]
    ZeroRankTensor,
    #[error("tensor has dimension {found}, model has dimension {dim}")]
    TensorDimension { found: usize, dim: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// A Lie algebra with a nondegenerate symmetric bilinear form.
///
/// Connection, curvature and Ricci data are computed lazily once and
/// cached; the value is otherwise immutable.
#[derive(Debug, Clone)]
pub struct MetricLieAlgebra {
    algebra: LieAlgebraModel,
    metric: RatMatrix,
    inverse_metric: RatMatrix,
    connection: OnceLock<ConnectionCoefficients>,
    curvature: OnceLock<CurvatureData>,
    ricci: OnceLock<RicciData>,
}

impl PartialEq for MetricLieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra && self.metric == other.metric
    }
}

impl Eq for MetricLieAlgebra {}

impl MetricLieAlgebra {
    /// Validates the Jacobi identity, symmetry and nondegeneracy.
    pub fn new(algebra: LieAlgebraModel, metric: RatMatrix) -> Result<Self, GeometryError> {
        let n = algebra.dim();
        if metric.rows() != n || metric.cols() != n {
            return Err(GeometryError::MetricShape { rows: metric.rows(), cols: metric.cols(), dim: n });
        }
        for i in 0..n {
            for j in 0..i {
                if metric[(i, j)] != metric[(j, i)] {
                    return Err(GeometryError::AsymmetricMetric(j, i));
                }
            }
        }
        if let Some(&(i, j, k)) = algebra.jacobi_check().violations.first() {
            return Err(GeometryError::JacobiFailure(i, j, k));
        }
        let inverse_metric = match matrix_inverse(&metric) {
            Ok(inv) => inv,
            Err(LinalgError::SingularMatrix) => return Err(GeometryError::SingularMetric),
            Err(e) => return Err(e.into()),
        };
        Ok(Self {
            algebra,
            metric,
            inverse_metric,
            connection: OnceLock::new(),
            curvature: OnceLock::new(),
            ricci: OnceLock::new(),
        })
    }

    pub fn algebra(&self) -> &LieAlgebraModel {
        &self.algebra
    }

    pub fn metric(&self) -> &RatMatrix {
        &self.metric
    }

    pub fn inverse_metric(&self) -> &RatMatrix {
        &self.inverse_metric
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn labels(&self) -> &[String] {
        self.algebra.labels()
    }

    /// `g(x, y)`.
    pub fn inner(&self, x: &[Rational], y: &[Rational]) -> Rational {
        vector::bilinear(&self.metric, x, y)
    }

    /// Levi-Civita connection from the Koszul formula.
    pub fn levi_civita(&self) -> &ConnectionCoefficients {
        self.connection.get_or_init(|| ConnectionCoefficients::koszul(self))
    }

    pub fn curvature(&self) -> &CurvatureData {
        self.curvature.get_or_init(|| CurvatureData::compute(self))
    }

    pub fn ricci(&self) -> &RicciData {
        self.ricci.get_or_init(|| RicciData::compute(self))
    }

    /// True when every `ad x` is skew for `g`.
    pub fn is_biinvariant(&self) -> bool {
        let n = self.dim();
        (0..n).all(|x| {
            let ad = self.algebra.ad_basis(x);
            // g ad + ad^T g = 0
            (&(&self.metric * &ad) + &(&ad.transpose() * &self.metric)).is_zero()
        })
    }

    /// Re-expresses the model in a new basis. Column `a` of `basis` holds
    /// the old coordinates of the new basis vector `a`.
    pub fn change_of_basis(&self, basis: &RatMatrix, labels: Vec<String>) -> Result<Self, GeometryError> {
        let n = self.dim();
        if basis.rows() != n || basis.cols() != n {
            return Err(LinalgError::DimensionMismatch { expected: n, found: basis.rows().max(basis.cols()) }.into());
        }
        let inv = matrix_inverse(basis)?;
        let cols: Vec<Vec<Rational>> = (0..n).map(|a| basis.column(a)).collect();
        let mut entries = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let br = self.algebra.bracket(&cols[a], &cols[b]).expect("dimension n");
                let new = inv.mul_vec(&br);
                if !vector::is_zero(&new) {
                    entries.push((a, b, new));
                }
            }
        }
        if labels.len() != n {
            return Err(LieError::LabelCount { count: labels.len(), dim: n }.into());
        }
        let algebra = LieAlgebraModel::new(labels, entries)?;
        let metric = &(&basis.transpose() * &self.metric) * basis;
        Self::new(algebra, metric)
    }

    /// Covariant derivative of an invariant `(0,k)` tensor; slot 0 of the
    /// result is the differentiation direction.
    pub fn covariant_derivative(&self, t: &Tensor) -> Result<Tensor, GeometryError> {
        let n = self.dim();
        if t.rank() == 0 {
            return Err(GeometryError::ZeroRankTensor);
        }
        if t.dim() != n {
            return Err(GeometryError::TensorDimension { found: t.dim(), dim: n });
        }
        let lambdas = &self.levi_civita().lambdas;
        let k = t.rank();
        Ok(Tensor::from_fn(n, k + 1, |idx| {
            let m = idx[0];
            let args = &idx[1..];
            let mut sum = Rational::zero();
            let mut slot_args = args.to_vec();
            for s in 0..k {
                for p in 0..n {
                    let coeff = &lambdas[m][(p, args[s])];
                    if coeff.is_zero() {
                        continue;
                    }
                    slot_args[s] = p;
                    sum -= coeff * t.get(&slot_args);
                }
                slot_args[s] = args[s];
            }
            sum
        }))
    }

    /// Weyl conformal tensor `C_{ijkl}`, same index placement as `R_{ijkl}`.
    /// Defined for `n ≥ 3`; it vanishes identically when `n = 3`.
    pub fn weyl(&self) -> Result<Tensor, GeometryError> {
        let n = self.dim();
        if n < 3 {
            return Err(GeometryError::UnsupportedDimension(n));
        }
        let r = &self.curvature().r04;
        let ric = self.ricci();
        let g = &self.metric;
        let rho = &ric.rho;
        let nr = Rational::from_integer(n.into());
        let one = Rational::from_integer(1.into());
        let two = Rational::from_integer(2.into());
        let c1 = &one / (&nr - &two);
        let c2 = &ric.scalar / ((&nr - &one) * (&nr - &two));
        Ok(Tensor::from_fn(n, 4, |idx| {
            let (i, j, k, l) = (idx[0], idx[1], idx[2], idx[3]);
            // (Qx∧y + x∧Qy) and (x∧y) lowered, with (x∧y)z = g(y,z)x - g(x,z)y
            let kn_rho = &g[(j, k)] * &rho[(i, l)] - &rho[(i, k)] * &g[(j, l)] + &rho[(j, k)] * &g[(i, l)]
                - &g[(i, k)] * &rho[(j, l)];
            let kn_g = &g[(j, k)] * &g[(i, l)] - &g[(i, k)] * &g[(j, l)];
            r.get(idx) - &c1 * kn_rho + &c2 * kn_g
        }))
    }

    pub fn ledger_conditions(&self) -> LedgerReport {
        ledger::evaluate(self)
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;
    use crate::rational::{int, rat};

    pub fn labels(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    pub fn e(n: usize, i: usize) -> Vec<Rational> {
        vector::unit(n, i)
    }

    pub fn oscillator() -> MetricLieAlgebra {
        let l = LieAlgebraModel::new(
            labels(&["P", "X1", "Y1", "Q"]),
            [(1, 2, e(4, 0)), (3, 1, e(4, 2)), (3, 2, vector::scale(&e(4, 1), &int(-1)))],
        )
        .unwrap();
        let mut g = RatMatrix::zeros(4, 4);
        g[(0, 3)] = int(1);
        g[(3, 0)] = int(1);
        g[(1, 1)] = int(1);
        g[(2, 2)] = int(1);
        MetricLieAlgebra::new(l, g).unwrap()
    }

    pub fn heisenberg() -> MetricLieAlgebra {
        let l = LieAlgebraModel::new(labels(&["e1", "e2", "e3"]), [(0, 1, e(3, 2))]).unwrap();
        MetricLieAlgebra::new(l, RatMatrix::identity(3)).unwrap()
    }

    pub fn su2(scale: i64) -> MetricLieAlgebra {
        let l = LieAlgebraModel::new(labels(&["e1", "e2", "e3"]), [(0, 1, e(3, 2)), (1, 2, e(3, 0)), (2, 0, e(3, 1))])
            .unwrap();
        MetricLieAlgebra::new(l, RatMatrix::identity(3).scale(&int(scale))).unwrap()
    }

    pub fn su2x_r() -> MetricLieAlgebra {
        let l = LieAlgebraModel::new(
            labels(&["e1", "e2", "e3", "e4"]),
            [(0, 1, e(4, 2)), (1, 2, e(4, 0)), (2, 0, e(4, 1))],
        )
        .unwrap();
        MetricLieAlgebra::new(l, RatMatrix::diagonal(&[int(2), int(2), int(2), int(1)])).unwrap()
    }

    pub fn minkowski() -> MetricLieAlgebra {
        let l = LieAlgebraModel::abelian(labels(&["e1", "e2", "e3", "e4"]));
        MetricLieAlgebra::new(l, RatMatrix::diagonal(&[int(1), int(1), int(1), int(-1)])).unwrap()
    }

    pub fn half() -> Rational {
        rat(1, 2)
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn rejects_bad_metrics() {
        let l = LieAlgebraModel::abelian(labels(&["a", "b"]));
        let mut g = RatMatrix::identity(2);
        g[(0, 1)] = int(1);
        assert_eq!(MetricLieAlgebra::new(l.clone(), g), Err(GeometryError::AsymmetricMetric(0, 1)));
        let ones = RatMatrix::from_fn(2, 2, |_, _| int(1));
        assert_eq!(MetricLieAlgebra::new(l.clone(), ones), Err(GeometryError::SingularMetric));
        assert!(matches!(MetricLieAlgebra::new(l, RatMatrix::identity(3)), Err(GeometryError::MetricShape { .. })));
    }

    #[test]
    fn rejects_non_lie_input() {
        let l = LieAlgebraModel::new(labels(&["e1", "e2", "e3"]), [(0, 1, e(3, 2)), (0, 2, e(3, 1)), (1, 2, e(3, 1))])
            .unwrap();
        assert_eq!(MetricLieAlgebra::new(l, RatMatrix::identity(3)), Err(GeometryError::JacobiFailure(0, 1, 2)));
    }

    #[test]
    fn oscillator_metric_is_an_involution() {
        let m = oscillator();
        assert_eq!(m.inverse_metric(), m.metric());
    }

    #[test]
    fn biinvariance() {
        assert!(oscillator().is_biinvariant());
        assert!(!heisenberg().is_biinvariant());
        assert!(minkowski().is_biinvariant());
        assert!(su2x_r().is_biinvariant());
    }

    #[test]
    fn oscillator_frame_change() {
        let m = oscillator();
        // columns: e1 = -P+X1, e2 = X1+Q, e3 = Y1, e4 = -P+X1+Q
        let b = RatMatrix::from_columns(
            4,
            &[
                vec![int(-1), int(1), int(0), int(0)],
                vec![int(0), int(1), int(0), int(1)],
                vec![int(0), int(0), int(1), int(0)],
                vec![int(-1), int(1), int(0), int(1)],
            ],
        )
        .unwrap();
        let f = m.change_of_basis(&b, labels(&["e1", "e2", "e3", "e4"])).unwrap();
        assert_eq!(f.metric(), &RatMatrix::diagonal(&[int(1), int(1), int(1), int(-1)]));
        let a = f.algebra();
        let neg = |v: Vec<Rational>| vector::scale(&v, &int(-1));
        assert_eq!(a.basis_bracket(0, 1), neg(e(4, 2)));
        assert_eq!(a.basis_bracket(0, 2), vector::sub(&e(4, 1), &e(4, 3)));
        assert_eq!(a.basis_bracket(1, 2), neg(e(4, 0)));
        assert_eq!(a.basis_bracket(2, 3), e(4, 0));
        assert_eq!(a.basis_bracket(0, 3), neg(e(4, 2)));
        assert!(vector::is_zero(&a.basis_bracket(1, 3)));
        assert_eq!(m.change_of_basis(&RatMatrix::identity(4), m.labels().to_vec()).unwrap(), m);
        assert!(matches!(
            m.change_of_basis(&RatMatrix::zeros(4, 4), m.labels().to_vec()),
            Err(GeometryError::Linalg(LinalgError::SingularMatrix))
        ));
    }

    #[test]
    fn weyl_vanishes_on_conformally_flat_fixtures() {
        for m in [oscillator(), su2x_r(), minkowski()] {
            assert!(m.weyl().unwrap().is_zero());
        }
        assert!(heisenberg().weyl().unwrap().is_zero());
        let plane =
            MetricLieAlgebra::new(LieAlgebraModel::abelian(labels(&["a", "b"])), RatMatrix::identity(2)).unwrap();
        assert_eq!(plane.weyl(), Err(GeometryError::UnsupportedDimension(2)));
    }

    #[test]
    fn weyl_is_trace_free_on_a_curved_example() {
        // Heisenberg x R with a Lorentzian factor: not conformally flat in general
        let l = LieAlgebraModel::new(labels(&["e1", "e2", "e3", "e4"]), [(0, 1, e(4, 2))]).unwrap();
        let m = MetricLieAlgebra::new(l, RatMatrix::diagonal(&[int(1), int(1), int(1), int(-1)])).unwrap();
        let c = m.weyl().unwrap();
        for (a, b) in [(0, 2), (0, 3), (1, 2), (1, 3)] {
            assert!(c.metric_trace(m.inverse_metric(), a, b).is_zero());
        }
    }

    #[test]
    fn covariant_derivatives() {
        let osc = oscillator();
        let g = Tensor::from_matrix(osc.metric());
        assert!(osc.covariant_derivative(&g).unwrap().is_zero());
        let rho = Tensor::from_matrix(&osc.ricci().rho);
        assert!(osc.covariant_derivative(&rho).unwrap().is_zero());

        let h = heisenberg();
        let drho = h.covariant_derivative(&Tensor::from_matrix(&h.ricci().rho)).unwrap();
        // -rho(∇_1 e2, e3) - rho(e2, ∇_1 e3) = -rho(½e3, e3) - rho(e2, -½e2) = -¼ - ¼
        assert_eq!(drho.get(&[0, 1, 2]), &rat(-1, 2));
        assert_eq!(osc.covariant_derivative(&Tensor::zeros(4, 0)), Err(GeometryError::ZeroRankTensor));
    }
}
