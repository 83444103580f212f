use super::poly::{characteristic_polynomial, Poly};
use super::{nullspace, RatMatrix};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Eigenpair {
    pub value: Rational,
    /// Algebraic multiplicity as a root of the characteristic polynomial.
    pub multiplicity: usize,
    /// Exact basis of `ker(A - value I)`.
    pub eigenspace: Vec<Vec<Rational>>,
}

/// Rational part of a spectrum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSpectrum {
    pub eigenpairs: Vec<Eigenpair>,
    /// Set iff the characteristic polynomial keeps a factor of positive
    /// degree after all rational roots are removed.
    pub has_irrational_factors: bool,
    /// That leftover factor (a nonzero constant when there is none).
    pub residual: Poly,
}

impl RationalSpectrum {
    /// True when the leftover factor has real (necessarily irrational) roots.
    pub fn has_real_irrational_roots(&self) -> bool {
        self.residual.count_real_roots() > 0
    }

    pub fn eigenvalue(&self, value: &Rational) -> Option<&Eigenpair> {
        self.eigenpairs.iter().find(|p| &p.value == value)
    }
}

/// Rational eigenvalues of a square matrix with exact eigenspaces.
pub fn rational_eigen(a: &RatMatrix) -> RationalSpectrum {
    let n = a.rows();
    let (roots, residual) = characteristic_polynomial(a).rational_roots();
    let eigenpairs = roots
        .into_iter()
        .map(|(value, multiplicity)| {
            let shifted = a - &RatMatrix::identity(n).scale(&value);
            Eigenpair { eigenspace: nullspace(&shifted), value, multiplicity }
        })
        .collect();
    let has_irrational_factors = residual.degree().unwrap_or(0) > 0;
    RationalSpectrum { eigenpairs, has_irrational_factors, residual }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn diagonal_spectrum() {
        let s = rational_eigen(&RatMatrix::diagonal(&[rat(1, 2), rat(1, 2), int(0)]));
        assert!(!s.has_irrational_factors);
        assert_eq!(s.eigenpairs.len(), 2);
        assert_eq!(s.eigenvalue(&rat(1, 2)).unwrap().eigenspace.len(), 2);
        assert_eq!(s.eigenvalue(&int(0)).unwrap().eigenspace.len(), 1);
    }

    #[test]
    fn rotation_has_no_rational_eigenvalues() {
        let r = RatMatrix::from_rows(vec![vec![int(0), int(-1)], vec![int(1), int(0)]]).unwrap();
        let s = rational_eigen(&r);
        assert!(s.eigenpairs.is_empty());
        assert!(s.has_irrational_factors);
        assert!(!s.has_real_irrational_roots());
    }

    #[test]
    fn sqrt_two_flagged_as_real() {
        let a = RatMatrix::from_rows(vec![vec![int(0), int(2)], vec![int(1), int(0)]]).unwrap();
        let s = rational_eigen(&a);
        assert!(s.eigenpairs.is_empty());
        assert!(s.has_real_irrational_roots());
    }

    #[test]
    fn defective_matrix_geometric_multiplicity() {
        let j = RatMatrix::from_rows(vec![vec![int(3), int(1)], vec![int(0), int(3)]]).unwrap();
        let s = rational_eigen(&j);
        let p = s.eigenvalue(&int(3)).unwrap();
        assert_eq!(p.multiplicity, 2);
        assert_eq!(p.eigenspace.len(), 1);
    }
}
