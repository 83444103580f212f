//! Ledger conditions L3 and L5 and local symmetry.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::{MetricLieAlgebra, Tensor};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LedgerReport {
    /// Cyclic sum of `∇ρ` vanishes on all basis triples.
    pub l3: bool,
    /// First basis triple with a nonzero cyclic sum.
    pub l3_witness: Option<(usize, usize, usize)>,
    /// The degree-5 L5 form vanishes identically in `X`.
    pub l5: bool,
    /// First sorted monomial of that form with a nonzero coefficient.
    pub l5_witness: Option<Vec<usize>>,
    /// `∇R = 0`.
    pub locally_symmetric: bool,
}

pub(super) fn evaluate(m: &MetricLieAlgebra) -> LedgerReport {
    let n = m.dim();
    let rho = Tensor::from_matrix(&m.ricci().rho);
    let drho = m.covariant_derivative(&rho).expect("rank 2");
    let mut l3_witness = None;
    'outer: for x in 0..n {
        for y in x..n {
            for z in y..n {
                let cyc = drho.get(&[x, y, z]) + drho.get(&[y, z, x]) + drho.get(&[z, x, y]);
                if !cyc.is_zero() {
                    l3_witness = Some((x, y, z));
                    break 'outer;
                }
            }
        }
    }
    let dr = m.covariant_derivative(&m.curvature().r04).expect("rank 4");
    let locally_symmetric = dr.is_zero();
    let l5_witness = if locally_symmetric { None } else { l5_obstruction(m, &dr) };
    LedgerReport { l3: l3_witness.is_none(), l3_witness, l5: l5_witness.is_none(), l5_witness, locally_symmetric }
}

/// Coefficients of `Σ g^{ac} g^{bd} R(X,u_a,X,u_b) (∇_X R)(X,u_c,X,u_d)`
/// as a polynomial in the coordinates of `X`, collected by sorted monomial.
/// Returns the first monomial whose coefficient does not vanish.
fn l5_obstruction(m: &MetricLieAlgebra, dr: &Tensor) -> Option<Vec<usize>> {
    let n = m.dim();
    let r = &m.curvature().r04;
    let ginv = m.inverse_metric();
    // raised[p][q][c][d] = Σ_{a,b} g^{ac} g^{bd} R_{paqb}
    let raised = Tensor::from_fn(n, 4, |idx| {
        let (p, q, c, d) = (idx[0], idx[1], idx[2], idx[3]);
        let mut sum = Rational::zero();
        for a in 0..n {
            if ginv[(a, c)].is_zero() {
                continue;
            }
            for b in 0..n {
                if ginv[(b, d)].is_zero() {
                    continue;
                }
                sum += &ginv[(a, c)] * &ginv[(b, d)] * r.get(&[p, a, q, b]);
            }
        }
        sum
    });
    let mut coefficients: BTreeMap<Vec<usize>, Rational> = BTreeMap::new();
    for (pq, left) in raised.nonzero() {
        let (p, q, c, d) = (pq[0], pq[1], pq[2], pq[3]);
        for rr in 0..n {
            for s in 0..n {
                for t in 0..n {
                    let right = dr.get(&[rr, s, c, t, d]);
                    if right.is_zero() {
                        continue;
                    }
                    let mut key = vec![p, q, rr, s, t];
                    key.sort_unstable();
                    *coefficients.entry(key).or_insert_with(Rational::zero) += left * right;
                }
            }
        }
    }
    coefficients.into_iter().find(|(_, v)| !v.is_zero()).map(|(k, _)| k)
}
