use num_traits::Zero;

use crate::linalg::RatMatrix;
use crate::rational::Rational;

/// Components of a fully covariant tensor of rank `rank` on an
/// `dim`-dimensional space, stored with the last index varying fastest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor {
    dim: usize,
    rank: usize,
    data: Vec<Rational>,
}

impl Tensor {
    pub fn zeros(dim: usize, rank: usize) -> Self {
        Self { dim, rank, data: vec![Rational::zero(); dim.pow(rank as u32)] }
    }

    pub fn from_fn(dim: usize, rank: usize, mut f: impl FnMut(&[usize]) -> Rational) -> Self {
        let mut t = Self::zeros(dim, rank);
        for (flat, idx) in MultiIndices::new(dim, rank).enumerate() {
            t.data[flat] = f(&idx);
        }
        t
    }

    pub fn from_matrix(m: &RatMatrix) -> Self {
        assert!(m.is_square());
        Self { dim: m.rows(), rank: 2, data: m.entries().to_vec() }
    }

    pub fn to_matrix(&self) -> RatMatrix {
        assert_eq!(self.rank, 2);
        RatMatrix::from_vec(self.dim, self.dim, self.data.clone()).expect("dim^2 entries")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    fn offset(&self, idx: &[usize]) -> usize {
        assert_eq!(idx.len(), self.rank, "index arity");
        idx.iter().fold(0, |acc, &i| {
            assert!(i < self.dim, "tensor index out of range");
            acc * self.dim + i
        })
    }

    pub fn get(&self, idx: &[usize]) -> &Rational {
        &self.data[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], value: Rational) {
        let o = self.offset(idx);
        self.data[o] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Nonzero components with their multi-indices.
    pub fn nonzero(&self) -> impl Iterator<Item = (Vec<usize>, &Rational)> {
        MultiIndices::new(self.dim, self.rank).zip(&self.data).filter(|(_, v)| !v.is_zero())
    }

    /// Contraction of slots `a < b` with the inverse metric.
    pub fn metric_trace(&self, inverse_metric: &RatMatrix, a: usize, b: usize) -> Tensor {
        assert!(a < b && b < self.rank);
        let n = self.dim;
        Tensor::from_fn(n, self.rank - 2, |rest| {
            let mut full = vec![0; self.rank];
            let mut it = rest.iter();
            for (s, slot) in full.iter_mut().enumerate() {
                if s != a && s != b {
                    *slot = *it.next().expect("rank - 2 free slots");
                }
            }
            let mut sum = Rational::zero();
            for i in 0..n {
                for j in 0..n {
                    let g = &inverse_metric[(i, j)];
                    if g.is_zero() {
                        continue;
                    }
                    full[a] = i;
                    full[b] = j;
                    sum += g * self.get(&full);
                }
            }
            sum
        })
    }
}

/// All multi-indices of a given arity, in storage order.
#[derive(Debug, Clone)]
pub struct MultiIndices {
    dim: usize,
    current: Option<Vec<usize>>,
}

impl MultiIndices {
    pub fn new(dim: usize, rank: usize) -> Self {
        let current = (dim > 0 || rank == 0).then(|| vec![0; rank]);
        Self { dim, current }
    }
}

impl Iterator for MultiIndices {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let mut next = out.clone();
        let mut pos = next.len();
        loop {
            if pos == 0 {
                self.current = None;
                break;
            }
            pos -= 1;
            next[pos] += 1;
            if next[pos] < self.dim {
                self.current = Some(next);
                break;
            }
            next[pos] = 0;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multi_index_order() {
        let all: Vec<_> = MultiIndices::new(2, 2).collect();
        assert_eq!(all, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(MultiIndices::new(3, 0).count(), 1);
        assert_eq!(MultiIndices::new(3, 4).count(), 81);
    }

    #[test]
    fn matrix_roundtrip() {
        let m = RatMatrix::from_fn(3, 3, |i, j| Rational::from_integer((i * 3 + j).into()));
        let t = Tensor::from_matrix(&m);
        assert_eq!(t.get(&[1, 2]), &m[(1, 2)]);
        assert_eq!(t.to_matrix(), m);
    }
}
