use num_traits::Zero;

use super::matrix::vector;
use super::RatMatrix;
use crate::rational::Rational;

/// A basis in which a symmetric bilinear form is diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalForm {
    /// Columns of the congruence; `basis[i]` has form value `diagonal[i]`.
    pub basis: Vec<Vec<Rational>>,
    pub diagonal: Vec<Rational>,
}

impl DiagonalForm {
    /// `(positive, negative, zero)` counts.
    pub fn inertia(&self) -> (usize, usize, usize) {
        let pos = self.diagonal.iter().filter(|d| **d > Rational::zero()).count();
        let neg = self.diagonal.iter().filter(|d| **d < Rational::zero()).count();
        (pos, neg, self.diagonal.len() - pos - neg)
    }

    /// Basis vectors spanning the radical.
    pub fn radical(&self) -> Vec<Vec<Rational>> {
        self.basis.iter().zip(&self.diagonal).filter(|(_, d)| d.is_zero()).map(|(v, _)| v.clone()).collect()
    }
}

/// Diagonalizes a symmetric matrix by congruence over the rationals
/// (symmetric Gaussian elimination, no square roots).
pub fn diagonalize_form(s: &RatMatrix) -> DiagonalForm {
    assert!(s.is_symmetric(), "form must be symmetric");
    let k = s.rows();
    let mut basis: Vec<Vec<Rational>> = (0..k).map(|i| vector::unit(k, i)).collect();
    let form = |a: &[Rational], b: &[Rational]| vector::bilinear(s, a, b);
    for i in 0..k {
        if form(&basis[i], &basis[i]).is_zero() {
            if let Some(j) = (i + 1..k).find(|&j| !form(&basis[j], &basis[j]).is_zero()) {
                basis.swap(i, j);
            } else if let Some(j) = (i + 1..k).find(|&j| !form(&basis[i], &basis[j]).is_zero()) {
                basis[i] = vector::add(&basis[i], &basis[j]);
            } else {
                continue;
            }
        }
        let pivot = form(&basis[i], &basis[i]);
        for j in i + 1..k {
            let f = form(&basis[i], &basis[j]) / &pivot;
            if !f.is_zero() {
                let vi = basis[i].clone();
                vector::axpy(&mut basis[j], &-f, &vi);
            }
        }
    }
    let diagonal = basis.iter().map(|v| form(v, v)).collect();
    DiagonalForm { basis, diagonal }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn hyperbolic_plane() {
        let s = RatMatrix::from_rows(vec![vec![int(0), int(1)], vec![int(1), int(0)]]).unwrap();
        let d = diagonalize_form(&s);
        assert_eq!(d.inertia(), (1, 1, 0));
        for i in 0..2 {
            for j in 0..2 {
                let v = vector::bilinear(&s, &d.basis[i], &d.basis[j]);
                assert_eq!(v.is_zero(), i != j || d.diagonal[i].is_zero());
            }
        }
    }

    #[test]
    fn degenerate_form_radical() {
        let s = RatMatrix::from_rows(vec![
            vec![int(1), int(1), int(0)],
            vec![int(1), int(1), int(0)],
            vec![int(0), int(0), int(0)],
        ])
        .unwrap();
        let d = diagonalize_form(&s);
        assert_eq!(d.inertia(), (1, 0, 2));
        for v in d.radical() {
            assert!(vector::is_zero(&s.mul_vec(&v)));
        }
    }
}
