use num_traits::Zero;

use super::{MetricLieAlgebra, Tensor};
use crate::linalg::{vector, RatMatrix};
use crate::rational::Rational;

/// Curvature of the Levi-Civita connection on invariant fields.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvatureData {
    /// `R(u_i, u_j)` as matrices, at index `i * n + j`.
    endomorphisms: Vec<RatMatrix>,
    /// `R_{ijkl} = g(R(u_i,u_j)u_k, u_l)`.
    pub r04: Tensor,
}

impl CurvatureData {
    pub(super) fn compute(m: &MetricLieAlgebra) -> Self {
        let n = m.dim();
        let conn = m.levi_civita();
        let lam = &conn.lambdas;
        let mut endomorphisms = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let bracket = m.algebra().basis_bracket(i, j);
                endomorphisms.push(&lam[i].commutator(&lam[j]) - &conn.along(&bracket));
            }
        }
        let g = m.metric();
        let r04 = Tensor::from_fn(n, 4, |idx| {
            let (i, j, k, l) = (idx[0], idx[1], idx[2], idx[3]);
            let col = endomorphisms[i * n + j].column(k);
            vector::bilinear(g, &col, &vector::unit(n, l))
        });
        Self { endomorphisms, r04 }
    }

    pub fn dim(&self) -> usize {
        self.r04.dim()
    }

    /// Matrix of `R(u_i, u_j)`.
    pub fn endomorphism(&self, i: usize, j: usize) -> &RatMatrix {
        &self.endomorphisms[i * self.dim() + j]
    }

    /// `R^l_{ijk}`: the `u_l` coefficient of `R(u_i,u_j)u_k`.
    pub fn r13(&self, i: usize, j: usize, k: usize, l: usize) -> &Rational {
        &self.endomorphism(i, j)[(l, k)]
    }

    /// `R(x, y)` for arbitrary invariant vectors.
    pub fn operator(&self, x: &[Rational], y: &[Rational]) -> RatMatrix {
        let n = self.dim();
        let mut out = RatMatrix::zeros(n, n);
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                out = &out + &self.endomorphism(i, j).scale(&(xi * yj));
            }
        }
        out
    }

    /// `R(x, y) z`.
    pub fn apply(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vec<Rational> {
        self.operator(x, y).mul_vec(z)
    }

    pub fn is_flat(&self) -> bool {
        self.r04.is_zero()
    }
}

/// Ricci tensor, Ricci operator and scalar curvature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RicciData {
    pub rho: RatMatrix,
    /// `Rc^i_j = g^{ik} ρ_{kj}`.
    pub ricci_operator: RatMatrix,
    pub scalar: Rational,
}

impl RicciData {
    pub(super) fn compute(m: &MetricLieAlgebra) -> Self {
        let n = m.dim();
        let curv = m.curvature();
        // ρ(u_j, u_k) = Σ_i (R(u_i,u_j)u_k)^i
        let rho = RatMatrix::from_fn(n, n, |j, k| (0..n).map(|i| curv.r13(i, j, k, i).clone()).sum());
        let ricci_operator = m.inverse_metric() * &rho;
        let scalar = ricci_operator.trace();
        Self { rho, ricci_operator, scalar }
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn oscillator_curvature_components() {
        let m = oscillator();
        let r = m.curvature();
        let (x1, q) = (e(4, 1), e(4, 3));
        assert_eq!(r.apply(&x1, &q, &x1), vector::scale(&e(4, 0), &rat(-1, 4)));
        assert_eq!(r.apply(&x1, &q, &q), vector::scale(&x1, &rat(1, 4)));
        assert_eq!(r.r04.get(&[1, 3, 1, 3]), &rat(-1, 4));
        assert_eq!(r.r04.get(&[2, 3, 2, 3]), &rat(-1, 4));
        // R(x,y)z = -¼[[x,y],z] for a bi-invariant metric
        let a = m.algebra();
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    let expect = vector::scale(&a.bracket(&a.basis_bracket(i, j), &e(4, k)).unwrap(), &rat(-1, 4));
                    assert_eq!(r.endomorphism(i, j).column(k), expect);
                }
            }
        }
    }

    #[test]
    fn flat_abelian() {
        assert!(minkowski().curvature().is_flat());
    }

    #[test]
    fn oscillator_ricci() {
        let m = oscillator();
        let ric = m.ricci();
        let mut rho = RatMatrix::zeros(4, 4);
        rho[(3, 3)] = rat(1, 2);
        assert_eq!(ric.rho, rho);
        let mut rc = RatMatrix::zeros(4, 4);
        rc[(0, 3)] = rat(1, 2);
        assert_eq!(ric.ricci_operator, rc);
        assert_eq!(ric.scalar, int(0));
    }

    #[test]
    fn heisenberg_ricci() {
        let ric = heisenberg().ricci().clone();
        assert_eq!(ric.rho, RatMatrix::diagonal(&[rat(-1, 2), rat(-1, 2), rat(1, 2)]));
        assert_eq!(ric.scalar, rat(-1, 2));
    }

    #[test]
    fn ricci_via_inverse_metric_contraction() {
        // ρ_{jk} = g^{il} R_{ijkl}
        for m in [oscillator(), heisenberg(), su2x_r()] {
            let traced = m.curvature().r04.metric_trace(m.inverse_metric(), 0, 3);
            assert_eq!(traced.to_matrix(), m.ricci().rho);
        }
    }
}
