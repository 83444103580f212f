use num_traits::{One, Zero};

use super::matrix::vector;
use super::{LinalgError, RatMatrix};
use crate::rational::Rational;

/// Exact description of the solution set of `A x = b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSolution {
    pub feasible: bool,
    /// One exact solution, present iff `feasible`.
    pub particular: Option<Vec<Rational>>,
    /// Basis of the homogeneous solution space.
    pub kernel_basis: Vec<Vec<Rational>>,
    /// `rank(A)`.
    pub rank: usize,
    /// `rank(A | b)`; exceeds `rank` exactly when the system is inconsistent.
    pub augmented_rank: usize,
}

impl AffineSolution {
    /// Number of unknowns.
    pub fn unknowns(&self) -> usize {
        self.particular.as_ref().map(Vec::len).or_else(|| self.kernel_basis.first().map(Vec::len)).unwrap_or(0)
    }

    /// True when the solution is unique.
    pub fn is_unique(&self) -> bool {
        self.feasible && self.kernel_basis.is_empty()
    }

    /// True when coordinate `i` takes the same value on every solution.
    pub fn coordinate_pinned(&self, i: usize) -> bool {
        self.kernel_basis.iter().all(|k| k[i].is_zero())
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut RatMatrix) -> Vec<usize> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                let tmp = m[(p, j)].clone();
                m[(p, j)] = m[(r, j)].clone();
                m[(r, j)] = tmp;
            }
        }
        let inv = Rational::one() / &m[(r, c)];
        for j in c..cols {
            let v = &m[(r, j)] * &inv;
            m[(r, j)] = v;
        }
        for i in 0..rows {
            if i == r || m[(i, c)].is_zero() {
                continue;
            }
            let factor = m[(i, c)].clone();
            for j in c..cols {
                if m[(r, j)].is_zero() {
                    continue;
                }
                let delta = &factor * &m[(r, j)];
                m[(i, j)] -= delta;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(a: &RatMatrix) -> usize {
    rref(&mut a.clone()).len()
}

/// Exact basis of `{x : A x = 0}`, one vector per free column of the RREF.
pub fn nullspace(a: &RatMatrix) -> Vec<Vec<Rational>> {
    let mut m = a.clone();
    let pivots = rref(&mut m);
    kernel_from_rref(&m, &pivots, a.cols())
}

fn kernel_from_rref(m: &RatMatrix, pivots: &[usize], cols: usize) -> Vec<Vec<Rational>> {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|free| {
            let mut v = vector::zeros(cols);
            v[free] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[(r, free)].clone();
            }
            v
        })
        .collect()
}

/// Solves `A x = b` exactly.
pub fn solve_affine(a: &RatMatrix, b: &[Rational]) -> Result<AffineSolution, LinalgError> {
    if a.rows() != b.len() {
        return Err(LinalgError::DimensionMismatch { expected: a.rows(), found: b.len() });
    }
    let n = a.cols();
    let mut aug = RatMatrix::from_fn(a.rows(), n + 1, |i, j| if j < n { a[(i, j)].clone() } else { b[i].clone() });
    let pivots = rref(&mut aug);
    let augmented_rank = pivots.len();
    let feasible = pivots.last() != Some(&n);
    let rank = if feasible { augmented_rank } else { augmented_rank - 1 };
    let kernel_basis = kernel_from_rref(&aug, &pivots[..rank], n);
    let particular = feasible.then(|| {
        let mut x = vector::zeros(n);
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug[(r, n)].clone();
        }
        x
    });
    Ok(AffineSolution { feasible, particular, kernel_basis, rank, augmented_rank })
}

/// Exact inverse via Gauss-Jordan elimination.
pub fn matrix_inverse(a: &RatMatrix) -> Result<RatMatrix, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let n = a.rows();
    let mut aug = RatMatrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            a[(i, j)].clone()
        } else if j - n == i {
            Rational::one()
        } else {
            Rational::zero()
        }
    });
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(LinalgError::SingularMatrix);
    }
    Ok(RatMatrix::from_fn(n, n, |i, j| aug[(i, n + j)].clone()))
}

pub fn determinant(a: &RatMatrix) -> Result<Rational, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let n = a.rows();
    let mut m = a.clone();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
            return Ok(Rational::zero());
        };
        if p != c {
            for j in 0..n {
                let tmp = m[(p, j)].clone();
                m[(p, j)] = m[(c, j)].clone();
                m[(c, j)] = tmp;
            }
            det = -det;
        }
        let pivot = m[(c, c)].clone();
        det *= &pivot;
        for i in c + 1..n {
            if m[(i, c)].is_zero() {
                continue;
            }
            let f = &m[(i, c)] / &pivot;
            for j in c..n {
                let d = &f * &m[(c, j)];
                m[(i, j)] -= d;
            }
        }
    }
    Ok(det)
}

/// Basis of the intersection of two subspaces given by spanning sets.
pub fn intersect_spans(a: &[Vec<Rational>], b: &[Vec<Rational>], dim: usize) -> Vec<Vec<Rational>> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    // Solve  sum s_i a_i - sum t_j b_j = 0 and map back through a.
    let m = RatMatrix::from_fn(dim, a.len() + b.len(), |i, j| {
        if j < a.len() {
            a[j][i].clone()
        } else {
            -b[j - a.len()][i].clone()
        }
    });
    let mut out: Vec<Vec<Rational>> = Vec::new();
    for coeffs in nullspace(&m) {
        let mut v = vector::zeros(dim);
        for (s, ai) in coeffs[..a.len()].iter().zip(a) {
            vector::axpy(&mut v, s, ai);
        }
        out.push(v);
    }
    independent_subset(&out, dim)
}

/// Greedy maximal linearly independent subset, in order.
pub fn independent_subset(vectors: &[Vec<Rational>], dim: usize) -> Vec<Vec<Rational>> {
    let mut kept: Vec<Vec<Rational>> = Vec::new();
    for v in vectors {
        let mut candidate = kept.clone();
        candidate.push(v.clone());
        let m = RatMatrix::from_columns(dim, &candidate).expect("uniform vector length");
        if rank(&m) == candidate.len() {
            kept.push(v.clone());
        }
    }
    kept
}

/// True when `v` lies in the span of `basis`.
pub fn in_span(basis: &[Vec<Rational>], v: &[Rational]) -> bool {
    if vector::is_zero(v) {
        return true;
    }
    if basis.is_empty() {
        return false;
    }
    let m = RatMatrix::from_columns(v.len(), basis).expect("uniform vector length");
    solve_affine(&m, v).map(|s| s.feasible).unwrap_or(false)
}

/// True when two spanning sets span the same subspace.
pub fn same_span(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> bool {
    b.iter().all(|v| in_span(a, v)) && a.iter().all(|v| in_span(b, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn m(rows: Vec<Vec<i64>>) -> RatMatrix {
        RatMatrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(int).collect()).collect()).unwrap()
    }

    #[test]
    fn identity_system() {
        let s = solve_affine(&RatMatrix::identity(2), &[int(1), int(2)]).unwrap();
        assert!(s.feasible);
        assert_eq!(s.particular, Some(vec![int(1), int(2)]));
        assert!(s.kernel_basis.is_empty());
    }

    #[test]
    fn inconsistent_rows() {
        let s = solve_affine(&m(vec![vec![1, 1], vec![1, 1]]), &[int(1), int(2)]).unwrap();
        assert!(!s.feasible);
        assert!(s.particular.is_none());
        assert_eq!((s.rank, s.augmented_rank), (1, 2));
    }

    #[test]
    fn underdetermined_system() {
        let s = solve_affine(&m(vec![vec![1, 1], vec![1, 1]]), &[int(1), int(1)]).unwrap();
        assert!(s.feasible);
        assert_eq!(s.particular, Some(vec![int(1), int(0)]));
        assert_eq!(s.kernel_basis, vec![vec![int(-1), int(1)]]);
    }

    #[test]
    fn rhs_length_checked() {
        assert!(matches!(solve_affine(&RatMatrix::identity(2), &[int(1)]), Err(LinalgError::DimensionMismatch { .. })));
    }

    #[test]
    fn nullspace_cases() {
        assert!(nullspace(&RatMatrix::identity(3)).is_empty());
        assert_eq!(nullspace(&RatMatrix::zeros(3, 3)).len(), 3);
        let row = m(vec![vec![1, 2, 3]]);
        let basis = nullspace(&row);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert_eq!(&v[0] + int(2) * &v[1] + int(3) * &v[2], int(0));
        }
    }

    #[test]
    fn inverses() {
        let d = RatMatrix::diagonal(&[int(2), int(2), int(2), int(1)]);
        assert_eq!(matrix_inverse(&d).unwrap(), RatMatrix::diagonal(&[rat(1, 2), rat(1, 2), rat(1, 2), int(1)]));
        assert_eq!(matrix_inverse(&m(vec![vec![1, 1], vec![1, 1]])), Err(LinalgError::SingularMatrix));
        assert!(matches!(matrix_inverse(&RatMatrix::zeros(2, 3)), Err(LinalgError::NotSquare { .. })));
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&m(vec![vec![0, 1], vec![1, 0]])).unwrap(), int(-1));
        assert_eq!(determinant(&m(vec![vec![1, 2], vec![2, 4]])).unwrap(), int(0));
        assert_eq!(determinant(&m(vec![vec![2, 0, 1], vec![1, 3, 0], vec![0, 1, 1]])).unwrap(), int(7));
    }

    #[test]
    fn span_intersection() {
        let e = |i| crate::linalg::vector::unit(3, i);
        let a = vec![e(0), e(1)];
        let b = vec![e(1), e(2)];
        let cap = intersect_spans(&a, &b, 3);
        assert_eq!(cap.len(), 1);
        assert!(same_span(&cap, &[e(1)]));
    }
}
