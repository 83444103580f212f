use num_traits::Zero;

use super::MetricLieAlgebra;
use crate::linalg::{vector, RatMatrix};
use crate::rational::Rational;

/// Levi-Civita connection on left-invariant fields: `∇_{u_i} u_j = Λ_i e_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectionCoefficients {
    pub lambdas: Vec<RatMatrix>,
}

impl ConnectionCoefficients {
    /// Solves `2g(∇_x y, z) = g([x,y],z) - g([y,z],x) + g([z,x],y)` on
    /// basis triples, then raises the free index with `g⁻¹`.
    pub(super) fn koszul(m: &MetricLieAlgebra) -> Self {
        let n = m.dim();
        let alg = m.algebra();
        let g = m.metric();
        let half = Rational::new(1.into(), 2.into());
        // lowered[i][j][l] = g([u_i,u_j], u_l)
        let lowered: Vec<Vec<Vec<Rational>>> =
            (0..n).map(|i| (0..n).map(|j| g.mul_vec(&alg.basis_bracket(i, j))).collect()).collect();
        let lambdas = (0..n)
            .map(|i| {
                let columns: Vec<Vec<Rational>> = (0..n)
                    .map(|j| {
                        let w: Vec<Rational> = (0..n)
                            .map(|l| (&lowered[i][j][l] - &lowered[j][l][i] + &lowered[l][i][j]) * &half)
                            .collect();
                        m.inverse_metric().mul_vec(&w)
                    })
                    .collect();
                RatMatrix::from_columns(n, &columns).expect("n columns of length n")
            })
            .collect();
        Self { lambdas }
    }

    pub fn dim(&self) -> usize {
        self.lambdas.len()
    }

    /// `Λ_x = Σ x^i Λ_i`, the matrix of `∇_x` on invariant fields.
    pub fn along(&self, x: &[Rational]) -> RatMatrix {
        let n = self.dim();
        x.iter()
            .zip(&self.lambdas)
            .filter(|(c, _)| !c.is_zero())
            .fold(RatMatrix::zeros(n, n), |acc, (c, l)| &acc + &l.scale(c))
    }

    /// `∇_x y` for invariant fields.
    pub fn nabla(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        self.along(x).mul_vec(y)
    }

    /// `∇_{u_i} u_j`.
    pub fn basis(&self, i: usize, j: usize) -> Vec<Rational> {
        self.lambdas[i].column(j)
    }

    /// Torsion-free: `∇_{u_i}u_j - ∇_{u_j}u_i = [u_i, u_j]` for every pair.
    pub fn is_torsion_free(&self, m: &MetricLieAlgebra) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| vector::sub(&self.basis(i, j), &self.basis(j, i)) == m.algebra().basis_bracket(i, j))
        })
    }

    /// Metric-compatible: every `Λ_i` is skew for `g`.
    pub fn is_metric_compatible(&self, m: &MetricLieAlgebra) -> bool {
        let g = m.metric();
        self.lambdas.iter().all(|l| (&(g * l) + &(&l.transpose() * g)).is_zero())
    }
}
