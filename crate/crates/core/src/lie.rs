//! Lie algebras given by rational structure constants.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::linalg::{nullspace, vector, RatMatrix};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("bracket of basis vector {0} with itself cannot be prescribed")]
    SelfBracket(usize),
    #[error("bracket ({0}, {1}) given more than once")]
    DuplicateBracket(usize, usize),
    #[error("vector has length {found}, algebra has dimension {dim}")]
    DimensionMismatch { found: usize, dim: usize },
    #[error("{count} basis labels for dimension {dim}")]
    LabelCount { count: usize, dim: usize },
}

/// A finite-dimensional Lie algebra with a labelled basis.
///
/// Brackets `[u_i, u_j]` are stored only for `i < j`; the other order is
/// produced by negation, so antisymmetry holds by construction. The Jacobi
/// identity is not enforced here (see [`LieAlgebraModel::jacobi_check`]);
/// every metric analysis goes through
/// [`MetricLieAlgebra`](crate::geometry::MetricLieAlgebra), which refuses
/// algebras that fail it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebraModel {
    labels: Vec<String>,
    brackets: BTreeMap<(usize, usize), Vec<Rational>>,
}

/// Result of a Jacobi identity scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiReport {
    pub holds: bool,
    /// Basis triples `(i, j, k)`, `i < j < k`, with a nonzero cyclic sum.
    pub violations: Vec<(usize, usize, usize)>,
}

/// A basis of `Der(g)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationBasis {
    pub generators: Vec<RatMatrix>,
}

impl LieAlgebraModel {
    /// Builds an algebra from `(i, j, [u_i, u_j])` entries. Entries with
    /// `i > j` are stored negated; giving both orders of a pair is an error.
    pub fn new(
        labels: Vec<String>,
        entries: impl IntoIterator<Item = (usize, usize, Vec<Rational>)>,
    ) -> Result<Self, LieError> {
        let n = labels.len();
        let mut brackets = BTreeMap::new();
        for (i, j, value) in entries {
            for index in [i, j] {
                if index >= n {
                    return Err(LieError::IndexOutOfRange { index, dim: n });
                }
            }
            if value.len() != n {
                return Err(LieError::DimensionMismatch { found: value.len(), dim: n });
            }
            if i == j {
                return Err(LieError::SelfBracket(i));
            }
            let (key, value) = if i < j { ((i, j), value) } else { ((j, i), value.iter().map(|x| -x).collect()) };
            if brackets.contains_key(&key) {
                return Err(LieError::DuplicateBracket(key.0, key.1));
            }
            if !vector::is_zero(&value) {
                brackets.insert(key, value);
            }
        }
        Ok(Self { labels, brackets })
    }

    /// The abelian algebra on the given labels.
    pub fn abelian(labels: Vec<String>) -> Self {
        Self { labels, brackets: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Nonzero brackets `[u_i, u_j]`, `i < j`.
    pub fn stored_brackets(&self) -> impl Iterator<Item = (usize, usize, &[Rational])> {
        self.brackets.iter().map(|(&(i, j), v)| (i, j, v.as_slice()))
    }

    /// `[u_i, u_j]` for any pair of basis indices.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<Rational> {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.brackets.get(&(i, j)).cloned(),
            std::cmp::Ordering::Greater => self.brackets.get(&(j, i)).map(|v| v.iter().map(|x| -x).collect()),
            std::cmp::Ordering::Equal => None,
        }
        .unwrap_or_else(|| vector::zeros(self.dim()))
    }

    /// Structure constant `c^k_{ij}`, the `u_k` coefficient of `[u_i, u_j]`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Rational {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.brackets.get(&(i, j)).map(|v| v[k].clone()),
            std::cmp::Ordering::Greater => self.brackets.get(&(j, i)).map(|v| -v[k].clone()),
            std::cmp::Ordering::Equal => None,
        }
        .unwrap_or_else(Rational::zero)
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>, LieError> {
        let n = self.dim();
        for v in [x, y] {
            if v.len() != n {
                return Err(LieError::DimensionMismatch { found: v.len(), dim: n });
            }
        }
        let mut out = vector::zeros(n);
        for (&(i, j), c) in &self.brackets {
            let coeff = &x[i] * &y[j] - &x[j] * &y[i];
            vector::axpy(&mut out, &coeff, c);
        }
        Ok(out)
    }

    /// Matrix of `ad(x) = [x, ·]`.
    pub fn ad(&self, x: &[Rational]) -> Result<RatMatrix, LieError> {
        let n = self.dim();
        let columns = (0..n).map(|j| self.bracket(x, &vector::unit(n, j))).collect::<Result<Vec<_>, _>>()?;
        Ok(RatMatrix::from_columns(n, &columns).expect("columns have length n"))
    }

    /// `ad(u_i)`.
    pub fn ad_basis(&self, i: usize) -> RatMatrix {
        let n = self.dim();
        RatMatrix::from_fn(n, n, |k, j| self.structure_constant(i, j, k))
    }

    /// Scans every basis triple for the cyclic Jacobi sum.
    pub fn jacobi_check(&self) -> JacobiReport {
        let n = self.dim();
        let mut violations = Vec::new();
        let br = |a: &[Rational], b: &[Rational]| self.bracket(a, b).expect("dimension n");
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (ui, uj, uk) = (vector::unit(n, i), vector::unit(n, j), vector::unit(n, k));
                    let sum = vector::add(
                        &vector::add(&br(&br(&ui, &uj), &uk), &br(&br(&uj, &uk), &ui)),
                        &br(&br(&uk, &ui), &uj),
                    );
                    if !vector::is_zero(&sum) {
                        violations.push((i, j, k));
                    }
                }
            }
        }
        JacobiReport { holds: violations.is_empty(), violations }
    }

    /// Killing form `B_ij = tr(ad u_i ∘ ad u_j)`.
    pub fn killing_form(&self) -> RatMatrix {
        let n = self.dim();
        let ads: Vec<RatMatrix> = (0..n).map(|i| self.ad_basis(i)).collect();
        RatMatrix::from_fn(n, n, |i, j| (&ads[i] * &ads[j]).trace())
    }

    /// Basis of the center.
    pub fn center(&self) -> Vec<Vec<Rational>> {
        let n = self.dim();
        let ads: Vec<RatMatrix> = (0..n).map(|i| self.ad_basis(i)).collect();
        nullspace(&RatMatrix::vstack(&ads).expect("square blocks"))
    }

    /// True when `d` satisfies `d[u_i,u_j] = [d u_i, u_j] + [u_i, d u_j]` on every basis pair.
    pub fn is_derivation(&self, d: &RatMatrix) -> bool {
        let n = self.dim();
        if d.rows() != n || d.cols() != n {
            return false;
        }
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                let lhs = d.mul_vec(&self.basis_bracket(i, j));
                let rhs = vector::add(
                    &self.bracket(&d.column(i), &vector::unit(n, j)).expect("dimension n"),
                    &self.bracket(&vector::unit(n, i), &d.column(j)).expect("dimension n"),
                );
                lhs == rhs
            })
        })
    }

    /// Exact basis of the derivation algebra, solving the Leibniz rule
    /// as a linear system in the `n²` entries of `D` (row-major unknowns).
    pub fn derivation_algebra(&self) -> DerivationBasis {
        let n = self.dim();
        let unknown = |r: usize, s: usize| r * n + s;
        let mut rows = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    let mut row = vector::zeros(n * n);
                    // (D[u_i,u_j])_k = sum_r D^k_r c^r_ij
                    for r in 0..n {
                        row[unknown(k, r)] += self.structure_constant(i, j, r);
                    }
                    // -([D u_i, u_j])_k = -sum_r D^r_i c^k_rj
                    // -([u_i, D u_j])_k = -sum_r D^r_j c^k_ir
                    for r in 0..n {
                        row[unknown(r, i)] -= self.structure_constant(r, j, k);
                        row[unknown(r, j)] -= self.structure_constant(i, r, k);
                    }
                    if !vector::is_zero(&row) {
                        rows.push(row);
                    }
                }
            }
        }
        let generators = if rows.is_empty() {
            (0..n * n).map(|e| matrix_from_unknowns(n, &vector::unit(n * n, e))).collect()
        } else {
            let system = RatMatrix::from_rows(rows).expect("uniform rows");
            nullspace(&system).iter().map(|v| matrix_from_unknowns(n, v)).collect()
        };
        DerivationBasis { generators }
    }
}

fn matrix_from_unknowns(n: usize, v: &[Rational]) -> RatMatrix {
    RatMatrix::from_vec(n, n, v.to_vec()).expect("n*n unknowns")
}

impl DerivationBasis {
    /// Linear combination `Σ t_k D_k`.
    pub fn combine(&self, coords: &[Rational]) -> RatMatrix {
        assert_eq!(coords.len(), self.generators.len());
        let n = self.generators.first().map_or(0, RatMatrix::rows);
        coords.iter().zip(&self.generators).fold(RatMatrix::zeros(n, n), |acc, (t, d)| &acc + &d.scale(t))
    }

    /// True when `d` is a combination of the generators.
    pub fn contains(&self, d: &RatMatrix) -> bool {
        let flat: Vec<Vec<Rational>> = self.generators.iter().map(|g| g.entries().to_vec()).collect();
        crate::linalg::in_span(&flat, d.entries())
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }
}
