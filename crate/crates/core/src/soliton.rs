//! Einstein, invariant Ricci soliton and algebraic Ricci soliton solvers.
//!
//! Each solver sets up an exact affine system, reports the full solution
//! family, and re-checks its witness through the geometry layer before
//! returning. Infeasibility comes with the ranks of the coefficient and
//! augmented matrices.
//!
//! Sign conventions: the soliton equation is `ℒ_X g = ς g - ρ`, and a
//! constant `> 0`, `= 0`, `< 0` is classified shrinking, steady, expanding.

use num_traits::{One, Zero};

use crate::fields;
use crate::geometry::MetricLieAlgebra;
use crate::lie::DerivationBasis;
use crate::linalg::{solve_affine, AffineSolution, RatMatrix};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolitonKind {
    Einstein,
    InvariantRicci,
    AlgebraicRicci,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolitonClass {
    Shrinking,
    Steady,
    Expanding,
}

impl SolitonClass {
    pub fn of(constant: &Rational) -> Self {
        if constant > &Rational::zero() {
            SolitonClass::Shrinking
        } else if constant.is_zero() {
            SolitonClass::Steady
        } else {
            SolitonClass::Expanding
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SolitonClass::Shrinking => "shrinking",
            SolitonClass::Steady => "steady",
            SolitonClass::Expanding => "expanding",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolitonWitness {
    /// Einstein: the constant is the whole witness.
    None,
    /// Invariant soliton field `X` from the particular solution.
    InvariantField { field: Vec<Rational> },
    /// Algebraic soliton `Rc = c Id + D`, with the derivation basis the
    /// family's coordinates refer to.
    Derivation { derivation: RatMatrix, basis: DerivationBasis },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolitonVerdict {
    pub kind: SolitonKind,
    pub feasible: bool,
    /// `λ`, `ς` or `c` of the particular solution.
    pub constant: Option<Rational>,
    /// True when every solution shares the same constant.
    pub constant_pinned: bool,
    /// Present when feasible with a pinned constant.
    pub soliton_class: Option<SolitonClass>,
    pub witness: SolitonWitness,
    /// Unknowns: Einstein `(λ)`; invariant `(X¹..Xⁿ, ς)`;
    /// algebraic `(c, t¹..tᵐ)` over the derivation basis.
    pub family: AffineSolution,
    /// Result of re-evaluating the witness through the geometry layer.
    pub verified: bool,
}

impl SolitonVerdict {
    fn build(
        kind: SolitonKind,
        family: AffineSolution,
        constant_slot: usize,
        witness: impl FnOnce(&[Rational]) -> SolitonWitness,
        verify: impl FnOnce(&Rational, &SolitonWitness) -> bool,
    ) -> Self {
        match family.particular.clone() {
            Some(x) => {
                let constant = x[constant_slot].clone();
                let constant_pinned = family.coordinate_pinned(constant_slot);
                let witness = witness(&x);
                let verified = verify(&constant, &witness);
                Self {
                    kind,
                    feasible: true,
                    soliton_class: constant_pinned.then(|| SolitonClass::of(&constant)),
                    constant: Some(constant),
                    constant_pinned,
                    witness,
                    family,
                    verified,
                }
            }
            None => Self {
                kind,
                feasible: false,
                constant: None,
                constant_pinned: false,
                soliton_class: None,
                witness: SolitonWitness::None,
                family,
                verified: true,
            },
        }
    }
}

/// `ρ = λ g` for a rational `λ`.
pub fn einstein_solve(m: &MetricLieAlgebra) -> SolitonVerdict {
    let n = m.dim();
    let g = m.metric();
    let rho = &m.ricci().rho;
    let a = RatMatrix::from_fn(n * n, 1, |r, _| g[(r / n, r % n)].clone());
    let b = rho.entries().to_vec();
    let family = solve_affine(&a, &b).expect("n² rows");
    SolitonVerdict::build(
        SolitonKind::Einstein,
        family,
        0,
        |_| SolitonWitness::None,
        |lambda, _| &g.scale(lambda) == rho,
    )
}

/// `ℒ_X g = ς g - ρ` with `X` left-invariant.
pub fn invariant_ricci_soliton_solve(m: &MetricLieAlgebra) -> SolitonVerdict {
    let n = m.dim();
    let g = m.metric();
    let rho = &m.ricci().rho;
    // ℒ_X g is linear in X: column s holds ℒ_{u_s} g
    let lie: Vec<RatMatrix> = (0..n).map(|s| fields::lie_derivative_metric(m, &unit(n, s))).collect();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for j in 0..n {
        for k in j..n {
            let mut row: Vec<Rational> = lie.iter().map(|l| l[(j, k)].clone()).collect();
            row.push(-g[(j, k)].clone());
            rows.push(row);
            rhs.push(-rho[(j, k)].clone());
        }
    }
    let a = RatMatrix::from_rows(rows).expect("uniform rows");
    let family = solve_affine(&a, &rhs).expect("matching rows");
    SolitonVerdict::build(
        SolitonKind::InvariantRicci,
        family,
        n,
        |x| SolitonWitness::InvariantField { field: x[..n].to_vec() },
        |sigma, w| match w {
            SolitonWitness::InvariantField { field } => verify_invariant_soliton(m, field, sigma),
            _ => false,
        },
    )
}

/// `Rc = c Id + D` with `D` ranging over the full derivation algebra.
pub fn algebraic_ricci_soliton_solve(m: &MetricLieAlgebra) -> SolitonVerdict {
    let n = m.dim();
    let basis = m.algebra().derivation_algebra();
    let rc = &m.ricci().ricci_operator;
    let id = RatMatrix::identity(n);
    let a = RatMatrix::from_fn(n * n, 1 + basis.dim(), |r, col| {
        let (i, j) = (r / n, r % n);
        if col == 0 {
            id[(i, j)].clone()
        } else {
            basis.generators[col - 1][(i, j)].clone()
        }
    });
    let family = solve_affine(&a, rc.entries()).expect("n² rows");
    SolitonVerdict::build(
        SolitonKind::AlgebraicRicci,
        family,
        0,
        |x| SolitonWitness::Derivation { derivation: basis.combine(&x[1..]), basis: basis.clone() },
        |c, w| match w {
            SolitonWitness::Derivation { derivation, .. } => verify_algebraic_soliton(m, c, derivation),
            _ => false,
        },
    )
}

/// Plug-back: `ℒ_X g = ς g - ρ`, evaluated independently of the solver.
pub fn verify_invariant_soliton(m: &MetricLieAlgebra, field: &[Rational], sigma: &Rational) -> bool {
    let lhs = fields::lie_derivative_metric(m, field);
    let rhs = &m.metric().scale(sigma) - &m.ricci().rho;
    lhs == rhs
}

/// Plug-back: `D` is a derivation and `Rc = c Id + D`.
pub fn verify_algebraic_soliton(m: &MetricLieAlgebra, c: &Rational, d: &RatMatrix) -> bool {
    let n = m.dim();
    m.algebra().is_derivation(d) && m.ricci().ricci_operator == &RatMatrix::identity(n).scale(c) + d
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::fixtures::*;
    use crate::rational::{int, rat};

    #[test]
    fn einstein_cases() {
        let v = einstein_solve(&oscillator());
        assert!(!v.feasible);
        assert!(v.family.augmented_rank > v.family.rank);

        let v = einstein_solve(&su2(2));
        assert!(v.feasible && v.verified);
        assert_eq!(v.constant, Some(rat(1, 4)));
        assert_eq!(v.soliton_class, Some(SolitonClass::Shrinking));

        let v = einstein_solve(&minkowski());
        assert_eq!(v.constant, Some(int(0)));
        assert_eq!(v.soliton_class, Some(SolitonClass::Steady));
    }

    #[test]
    fn invariant_soliton_cases() {
        let v = invariant_ricci_soliton_solve(&oscillator());
        assert!(!v.feasible);
        assert!(v.family.augmented_rank > v.family.rank);

        let v = invariant_ricci_soliton_solve(&minkowski());
        assert!(v.feasible && v.verified);
        assert_eq!(v.constant, Some(int(0)));
        assert!(v.constant_pinned);
        assert_eq!(v.family.kernel_basis.len(), 4);

        let v = invariant_ricci_soliton_solve(&heisenberg());
        if let (true, SolitonWitness::InvariantField { field }) = (v.feasible, &v.witness) {
            assert!(verify_invariant_soliton(&heisenberg(), field, v.constant.as_ref().unwrap()));
        }
        assert!(v.verified);
    }

    #[test]
    fn algebraic_soliton_cases() {
        let v = algebraic_ricci_soliton_solve(&minkowski());
        assert!(v.feasible && v.verified);
        assert_eq!(v.constant, Some(int(0)));

        let h = heisenberg();
        let v = algebraic_ricci_soliton_solve(&h);
        assert!(v.feasible && v.verified);
        assert_eq!(v.constant, Some(rat(-3, 2)));
        assert_eq!(v.soliton_class, Some(SolitonClass::Expanding));
        match &v.witness {
            SolitonWitness::Derivation { derivation, .. } => {
                assert_eq!(derivation, &RatMatrix::diagonal(&[int(1), int(1), int(2)]))
            }
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn oscillator_algebraic_verdict_verifies() {
        let m = oscillator();
        let v = algebraic_ricci_soliton_solve(&m);
        assert!(v.verified);
        if v.feasible {
            let SolitonWitness::Derivation { derivation, .. } = &v.witness else { panic!() };
            assert!(verify_algebraic_soliton(&m, v.constant.as_ref().unwrap(), derivation));
        }
    }

    #[test]
    fn einstein_scaling() {
        let base = su2(2);
        let scaled = MetricLieAlgebra::new(base.algebra().clone(), base.metric().scale(&int(3))).unwrap();
        let a = einstein_solve(&base);
        let b = einstein_solve(&scaled);
        assert_eq!(a.feasible, b.feasible);
        assert_eq!(b.constant.unwrap(), a.constant.unwrap() / int(3));
    }
}
