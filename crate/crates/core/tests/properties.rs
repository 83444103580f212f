use geomlab_core::fields::{curvature_term, harmonic_section_space, rough_laplacian};
use geomlab_core::linalg::{matrix_inverse, same_span, solve_affine, vector, RatMatrix};
use geomlab_core::model::{builtin, parse_model_json, BUILTIN_NAMES};
use geomlab_core::rational::{format_rational, parse_rational, rat, Rational};
use geomlab_core::soliton::{einstein_solve, invariant_ricci_soliton_solve, SolitonWitness};
use geomlab_core::MetricLieAlgebra;
use num_traits::Zero;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=9).prop_map(|(p, q)| rat(p, q))
}

fn vector_of(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec(rational(), n)
}

fn fixture() -> impl Strategy<Value = MetricLieAlgebra> {
    proptest::sample::select(BUILTIN_NAMES.to_vec()).prop_map(|name| builtin(name).unwrap().geometry)
}

fn fixture_with_vectors(count: usize) -> impl Strategy<Value = (MetricLieAlgebra, Vec<Vec<Rational>>)> {
    fixture().prop_flat_map(move |m| {
        let n = m.dim();
        (Just(m), proptest::collection::vec(vector_of(n), count))
    })
}

fn invertible(n: usize) -> impl Strategy<Value = RatMatrix> {
    proptest::collection::vec((-3i64..=3, 1i64..=2).prop_map(|(p, q)| rat(p, q)), n * n)
        .prop_map(move |data| RatMatrix::from_vec(n, n, data).unwrap())
        .prop_filter("singular", |b| matrix_inverse(b).is_ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rational_strings_round_trip(x in rational()) {
        prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
    }

    #[test]
    fn affine_solutions_solve_the_system(
        data in vector_of(12),
        x in vector_of(4),
    ) {
        let a = RatMatrix::from_vec(3, 4, data).unwrap();
        let b = a.mul_vec(&x);
        let sol = solve_affine(&a, &b).unwrap();
        prop_assert!(sol.feasible);
        prop_assert_eq!(a.mul_vec(sol.particular.as_ref().unwrap()), b);
        prop_assert_eq!(sol.kernel_basis.len(), 4 - sol.rank);
        for k in &sol.kernel_basis {
            prop_assert!(vector::is_zero(&a.mul_vec(k)));
        }
    }

    #[test]
    fn rough_laplacian_is_linear((m, vs) in fixture_with_vectors(2), k in rational()) {
        let (u, v) = (&vs[0], &vs[1]);
        let combo = vector::add(&vector::scale(u, &k), v);
        let expected = vector::add(&vector::scale(&rough_laplacian(&m, u), &k), &rough_laplacian(&m, v));
        prop_assert_eq!(rough_laplacian(&m, &combo), expected);
    }

    #[test]
    fn curvature_term_is_quadratic((m, vs) in fixture_with_vectors(3), k in rational()) {
        let (u, v, w) = (&vs[0], &vs[1], &vs[2]);
        let q = |x: &[Rational]| curvature_term(&m, x);
        let scaled = q(&vector::scale(u, &k));
        prop_assert_eq!(scaled, vector::scale(&q(u), &(&k * &k)));
        // polarization B(x, y) = Q(x + y) - Q(x) - Q(y) is additive in x
        let polar = |x: &[Rational], y: &[Rational]| vector::sub(&vector::sub(&q(&vector::add(x, y)), &q(x)), &q(y));
        prop_assert_eq!(polar(&vector::add(u, v), w), vector::add(&polar(u, w), &polar(v, w)));
    }

    #[test]
    fn geometry_is_natural_under_change_of_basis(
        (m, b) in fixture().prop_flat_map(|m| { let n = m.dim(); (Just(m), invertible(n)) })
    ) {
        let n = m.dim();
        let binv = matrix_inverse(&b).unwrap();
        let t = m.change_of_basis(&b, (0..n).map(|i| format!("f{i}")).collect()).unwrap();
        for i in 0..n {
            let expected = &(&binv * &m.levi_civita().along(&b.column(i))) * &b;
            prop_assert_eq!(&t.levi_civita().lambdas[i], &expected);
        }
        prop_assert_eq!(&t.ricci().rho, &(&(&b.transpose() * &m.ricci().rho) * &b));
        prop_assert_eq!(&t.ricci().scalar, &m.ricci().scalar);
        prop_assert_eq!(t.is_biinvariant(), m.is_biinvariant());
        let mapped: Vec<Vec<Rational>> = harmonic_section_space(&m).iter().map(|v| binv.mul_vec(v)).collect();
        prop_assert!(same_span(&mapped, &harmonic_section_space(&t)));
    }

    #[test]
    fn einstein_scaling((m, kappa) in (fixture(), (1i64..=9, 1i64..=9).prop_map(|(p, q)| rat(p, q)))) {
        let scaled = MetricLieAlgebra::new(m.algebra().clone(), m.metric().scale(&kappa)).unwrap();
        let (a, b) = (einstein_solve(&m), einstein_solve(&scaled));
        prop_assert_eq!(a.feasible, b.feasible);
        if let (Some(la), Some(lb)) = (a.constant, b.constant) {
            prop_assert_eq!(lb, la / kappa);
        }
    }
}

#[test]
fn einstein_implies_trivial_invariant_soliton() {
    for name in BUILTIN_NAMES {
        let m = builtin(name).unwrap().geometry;
        let e = einstein_solve(&m);
        let s = invariant_ricci_soliton_solve(&m);
        assert!(e.verified && s.verified, "{name}");
        if let Some(lambda) = e.constant {
            assert!(s.feasible, "{name}");
            let zero = vec![Rational::zero(); m.dim()];
            assert!(geomlab_core::soliton::verify_invariant_soliton(&m, &zero, &lambda), "{name}");
            if let SolitonWitness::InvariantField { field } = &s.witness {
                assert_eq!(field.len(), m.dim());
            }
        }
    }
}

#[test]
fn json_round_trip_is_byte_stable() {
    for name in BUILTIN_NAMES {
        let text = builtin(name).unwrap().to_json();
        assert_eq!(parse_model_json(&text).unwrap().to_json(), text, "{name}");
    }
}
