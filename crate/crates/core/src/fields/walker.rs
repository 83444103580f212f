use num_traits::{One, Zero};

use crate::geometry::MetricLieAlgebra;
use crate::linalg::{diagonalize_form, intersect_spans, rational_eigen, vector, RatMatrix};
use crate::rational::{rational_sqrt, Rational};

/// Invariant parallel null line fields `span{X}`: `∇_{u_i}X = ω_i X`, `g(X,X) = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NullLineSearch {
    /// Generators, scaled so the first nonzero coordinate is 1.
    pub lines: Vec<Vec<Rational>>,
    /// Common eigenspaces of dimension ≥ 2 on which `g` vanishes
    /// identically; every line inside qualifies.
    pub null_subspaces: Vec<Vec<Vec<Rational>>>,
    /// Common eigenspaces whose null cone has no finite rational description.
    pub unresolved: Vec<Vec<Vec<Rational>>>,
    /// Set when lines may exist that the search could not enumerate: a
    /// connection matrix with real irrational eigenvalues, or an unresolved space.
    pub incomplete: bool,
}

pub fn parallel_null_line_fields(m: &MetricLieAlgebra) -> NullLineSearch {
    let n = m.dim();
    let lambdas = &m.levi_civita().lambdas;
    let mut incomplete = false;
    let mut candidates: Vec<Vec<Vec<Rational>>> = vec![(0..n).map(|i| vector::unit(n, i)).collect()];
    for lambda in lambdas {
        let spectrum = rational_eigen(lambda);
        incomplete |= spectrum.has_real_irrational_roots();
        let mut next = Vec::new();
        for space in &candidates {
            for pair in &spectrum.eigenpairs {
                let common = intersect_spans(space, &pair.eigenspace, n);
                if !common.is_empty() {
                    next.push(common);
                }
            }
        }
        candidates = next;
        if candidates.is_empty() {
            break;
        }
    }

    let mut search =
        NullLineSearch { lines: Vec::new(), null_subspaces: Vec::new(), unresolved: Vec::new(), incomplete };
    for space in candidates {
        classify_space(m, space, &mut search);
    }
    search
}

fn classify_space(m: &MetricLieAlgebra, space: Vec<Vec<Rational>>, out: &mut NullLineSearch) {
    let n = m.dim();
    let k = space.len();
    let embed = |coords: &[Rational]| {
        let mut v = vector::zeros(n);
        for (c, b) in coords.iter().zip(&space) {
            vector::axpy(&mut v, c, b);
        }
        v
    };
    let restricted = RatMatrix::from_fn(k, k, |a, b| m.inner(&space[a], &space[b]));
    let form = diagonalize_form(&restricted);
    let (pos, neg, zero) = form.inertia();
    let push_null = |vectors: Vec<Vec<Rational>>, out: &mut NullLineSearch| match vectors.len() {
        0 => {}
        1 => out.lines.push(normalized(&vectors[0])),
        _ => out.null_subspaces.push(vectors),
    };
    if zero == k {
        push_null(space.clone(), out);
    } else if pos == 0 || neg == 0 {
        let radical = form.radical().iter().map(|c| embed(c)).collect();
        push_null(radical, out);
    } else if k == 2 {
        // d0 y0² + d1 y1² = 0 with opposite signs
        let ratio = -&form.diagonal[1] / &form.diagonal[0];
        match rational_sqrt(&ratio) {
            Some(s) => {
                for sign in [Rational::one(), -Rational::one()] {
                    let y0 = &s * &sign;
                    let coords: Vec<Rational> = (0..2).map(|b| &form.basis[0][b] * &y0 + &form.basis[1][b]).collect();
                    out.lines.push(normalized(&embed(&coords)));
                }
            }
            None => {
                out.unresolved.push(space);
                out.incomplete = true;
            }
        }
    } else {
        out.unresolved.push(space);
        out.incomplete = true;
    }
}

fn normalized(v: &[Rational]) -> Vec<Rational> {
    match v.iter().find(|x| !x.is_zero()) {
        Some(lead) => {
            let inv = Rational::one() / lead;
            vector::scale(v, &inv)
        }
        None => v.to_vec(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::fixtures::*;
    use crate::lie::LieAlgebraModel;
    use crate::rational::int;

    fn assert_parallel_null(m: &MetricLieAlgebra, x: &[Rational]) {
        assert!(m.inner(x, x).is_zero());
        for l in &m.levi_civita().lambdas {
            let image = l.mul_vec(x);
            let pair = RatMatrix::from_columns(m.dim(), &[image, x.to_vec()]).unwrap();
            assert!(crate::linalg::rank(&pair) <= 1);
        }
    }

    #[test]
    fn oscillator_has_only_p() {
        let m = oscillator();
        let s = parallel_null_line_fields(&m);
        assert_eq!(s.lines, vec![e(4, 0)]);
        assert!(s.null_subspaces.is_empty() && s.unresolved.is_empty());
        assert!(!s.incomplete);
        assert_parallel_null(&m, &s.lines[0]);
    }

    #[test]
    fn riemannian_spaces_have_none() {
        let flat =
            MetricLieAlgebra::new(LieAlgebraModel::abelian(labels(&["a", "b", "c"])), RatMatrix::identity(3)).unwrap();
        for m in [flat, heisenberg()] {
            let s = parallel_null_line_fields(&m);
            assert!(s.lines.is_empty() && s.null_subspaces.is_empty());
            assert!(!s.incomplete);
        }
    }

    #[test]
    fn flat_lorentzian_plane_has_two_null_lines() {
        let m = MetricLieAlgebra::new(
            LieAlgebraModel::abelian(labels(&["t", "x"])),
            RatMatrix::diagonal(&[int(-1), int(1)]),
        )
        .unwrap();
        let s = parallel_null_line_fields(&m);
        assert_eq!(s.lines.len(), 2);
        for l in &s.lines {
            assert_parallel_null(&m, l);
        }
    }

    #[test]
    fn irrational_null_cone_flagged() {
        let m = MetricLieAlgebra::new(
            LieAlgebraModel::abelian(labels(&["t", "x"])),
            RatMatrix::diagonal(&[int(-2), int(1)]),
        )
        .unwrap();
        let s = parallel_null_line_fields(&m);
        assert!(s.lines.is_empty());
        assert!(s.incomplete);
        assert_eq!(s.unresolved.len(), 1);
    }
}
