//! Univariate polynomials over the rationals, just enough for spectra:
//! characteristic polynomials, rational-root extraction and Sturm counts.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::RatMatrix;
use crate::rational::Rational;

/// Coefficients stored lowest degree first, without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * Rational::from_integer(BigInt::from(k))).collect(),
        )
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&d| d >= dd) else {
            return (Poly::zero(), self.clone());
        };
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let q = &rem[k + dd] / &lead;
            if q.is_zero() {
                continue;
            }
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// Divides by `(x - root)`, returning the quotient when it divides exactly.
    pub fn deflate(&self, root: &Rational) -> Option<Poly> {
        let linear = Poly::new(vec![-root.clone(), Rational::one()]);
        let (q, r) = self.div_rem(&linear);
        r.is_zero().then_some(q)
    }

    fn sign_at_infinity(&self, positive: bool) -> i32 {
        let Some(d) = self.degree() else { return 0 };
        let s = if self.leading().is_positive() { 1 } else { -1 };
        if positive || d % 2 == 0 {
            s
        } else {
            -s
        }
    }

    /// Number of distinct real roots (Sturm's theorem).
    pub fn count_real_roots(&self) -> usize {
        if self.degree().unwrap_or(0) == 0 {
            return 0;
        }
        let mut chain = vec![self.clone(), self.derivative()];
        loop {
            let n = chain.len();
            let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(Poly::new(r.coeffs.iter().map(|c| -c).collect()));
        }
        let changes = |positive: bool| {
            let signs: Vec<i32> = chain.iter().map(|p| p.sign_at_infinity(positive)).filter(|&s| s != 0).collect();
            signs.windows(2).filter(|w| w[0] != w[1]).count()
        };
        changes(false) - changes(true)
    }

    /// Distinct rational roots with their multiplicities, plus the
    /// cofactor left after removing them.
    pub fn rational_roots(&self) -> (Vec<(Rational, usize)>, Poly) {
        let mut rest = self.clone();
        let mut roots = Vec::new();
        if rest.is_zero() {
            return (roots, rest);
        }
        let zero = Rational::zero();
        let mut mult = 0;
        while rest.degree().unwrap_or(0) > 0 && rest.coeffs[0].is_zero() {
            rest = rest.deflate(&zero).expect("x divides");
            mult += 1;
        }
        if mult > 0 {
            roots.push((zero, mult));
        }
        if rest.degree().unwrap_or(0) == 0 {
            return (roots, rest);
        }
        let ints = integer_coefficients(&rest);
        let constant = ints[0].abs();
        let lead = ints.last().expect("nonzero").abs();
        for p in divisors(&constant) {
            for q in divisors(&lead) {
                if !p.gcd(&q).is_one() {
                    continue;
                }
                for sign in [1, -1] {
                    let cand = Rational::new(BigInt::from(sign) * &p, q.clone());
                    let mut mult = 0;
                    while rest.degree().unwrap_or(0) > 0 {
                        match rest.deflate(&cand) {
                            Some(q) => {
                                rest = q;
                                mult += 1;
                            }
                            None => break,
                        }
                    }
                    if mult > 0 {
                        roots.push((cand, mult));
                    }
                }
            }
        }
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        (roots, rest)
    }
}

/// Characteristic polynomial `det(x I - A)` by the Faddeev-LeVerrier recursion.
pub fn characteristic_polynomial(a: &RatMatrix) -> Poly {
    assert!(a.is_square(), "characteristic polynomial of a non-square matrix");
    let n = a.rows();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut m = RatMatrix::zeros(n, n);
    let id = RatMatrix::identity(n);
    for k in 1..=n {
        m = &(a * &m) + &id.scale(&coeffs[n - k + 1]);
        let am = a * &m;
        coeffs[n - k] = -am.trace() / Rational::from_integer(BigInt::from(k));
    }
    Poly::new(coeffs)
}

/// Scales a rational polynomial to primitive integer coefficients.
fn integer_coefficients(p: &Poly) -> Vec<BigInt> {
    let lcm = p.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    p.coeffs.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect()
}

/// Positive divisors of a nonzero integer by trial division.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    debug_assert!(n.sign() == Sign::Plus);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            let other = n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn poly(c: &[Rational]) -> Poly {
        Poly::new(c.to_vec())
    }

    #[test]
    fn charpoly_of_rotation() {
        let r = RatMatrix::from_rows(vec![vec![int(0), int(-1)], vec![int(1), int(0)]]).unwrap();
        assert_eq!(characteristic_polynomial(&r), poly(&[int(1), int(0), int(1)]));
    }

    #[test]
    fn charpoly_matches_determinant_expansion() {
        // det(xI - A) evaluated at a few points against the determinant routine
        let a = RatMatrix::from_rows(vec![
            vec![int(2), rat(1, 3), int(0)],
            vec![int(-1), int(1), int(4)],
            vec![rat(1, 2), int(0), int(-3)],
        ])
        .unwrap();
        let p = characteristic_polynomial(&a);
        for x in [int(0), int(1), rat(-5, 2), int(7)] {
            let shifted = &RatMatrix::identity(3).scale(&x) - &a;
            assert_eq!(p.eval(&x), crate::linalg::determinant(&shifted).unwrap());
        }
    }

    #[test]
    fn rational_roots_with_multiplicity() {
        // (x - 1/2)^2 x (x^2 + 1)
        let p = poly(&[int(0), rat(1, 4), int(-1), rat(5, 4), int(-1), int(1)]);
        let (roots, rest) = p.rational_roots();
        assert_eq!(roots, vec![(int(0), 1), (rat(1, 2), 2)]);
        assert_eq!(rest, poly(&[int(1), int(0), int(1)]));
        assert_eq!(rest.count_real_roots(), 0);
    }

    #[test]
    fn sturm_counts() {
        assert_eq!(poly(&[int(-2), int(0), int(1)]).count_real_roots(), 2);
        assert_eq!(poly(&[int(0), int(-1), int(0), int(1)]).count_real_roots(), 3);
        assert_eq!(poly(&[rat(1, 4), int(0), int(1)]).count_real_roots(), 0);
        // repeated root counted once
        assert_eq!(poly(&[int(1), int(-2), int(1)]).count_real_roots(), 1);
    }

    #[test]
    fn division() {
        let p = poly(&[int(-1), int(0), int(1)]);
        let (q, r) = p.div_rem(&poly(&[int(-1), int(1)]));
        assert_eq!(q, poly(&[int(1), int(1)]));
        assert!(r.is_zero());
    }
}
