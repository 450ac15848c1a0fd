use super::*;
use crate::linalg::{frac, rat};
use proptest::prelude::*;

fn mi(v: &[u32]) -> MultiIndex {
    MultiIndex::new(v.to_vec())
}

fn field(n: usize, terms: &[(usize, &[u32], i64)]) -> PolyVectorField {
    PolyVectorField::from_terms(
        n,
        Truncation::Infinite,
        terms.iter().map(|(j, m, c)| (*j, mi(m), rat(*c))),
    )
    .unwrap()
}

/// Directional derivative `Dp(x) v` recovered from values of
/// `t -> p(x + t v)` by Lagrange interpolation at `t = 0..=deg`.
fn directional_by_interpolation(p: &Polynomial, x: &[Rational], v: &[Rational]) -> Rational {
    let deg = p.max_degree().unwrap_or(0) as i64;
    let ts: Vec<Rational> = (0..=deg).map(rat).collect();
    let vals: Vec<Rational> = ts
        .iter()
        .map(|t| {
            let pt: Vec<Rational> = x.iter().zip(v).map(|(a, b)| a + t * b).collect();
            p.eval(&pt)
        })
        .collect();
    // Derivative at t = 0 of the interpolating polynomial.
    let mut acc = Rational::zero();
    for i in 0..ts.len() {
        // d/dt prod_{k != i} (t - t_k)/(t_i - t_k) at t = 0
        let mut denom = Rational::one();
        for k in 0..ts.len() {
            if k != i {
                denom *= &ts[i] - &ts[k];
            }
        }
        let mut sum = Rational::zero();
        for skip in 0..ts.len() {
            if skip == i {
                continue;
            }
            let mut prod = Rational::one();
            for k in 0..ts.len() {
                if k != i && k != skip {
                    prod *= -&ts[k];
                }
            }
            sum += prod;
        }
        acc += &vals[i] * sum / denom;
    }
    acc
}

fn eval_field(f: &PolyVectorField, x: &[Rational]) -> Vec<Rational> {
    f.components().iter().map(|c| c.eval(x)).collect()
}

fn arb_field(n: usize, max_deg: u32) -> impl Strategy<Value = PolyVectorField> {
    let monos = monomials_up_to(n, 1, max_deg);
    let count = monos.len() * n;
    proptest::collection::vec((-2i64..3, 0u8..3), count).prop_map(move |cs| {
        let mut terms = Vec::new();
        let mut k = 0;
        for j in 0..n {
            for m in &monos {
                let (c, keep) = cs[k];
                k += 1;
                if keep == 0 {
                    terms.push((j, m.clone(), rat(c)));
                }
            }
        }
        PolyVectorField::from_terms(n, Truncation::Infinite, terms).unwrap()
    })
}

fn arb_series(n: usize, max_deg: u32) -> impl Strategy<Value = PolySeries> {
    let monos = monomials_up_to(n, 0, max_deg);
    proptest::collection::vec(-2i64..3, monos.len()).prop_map(move |cs| {
        PolySeries::exact(Polynomial::from_terms(
            n,
            monos.iter().cloned().zip(cs.into_iter().map(rat)),
        ))
    })
}

#[test]
fn graded_lex_order() {
    let mut v = monomials_of_degree(2, 2);
    assert_eq!(v, vec![mi(&[2, 0]), mi(&[1, 1]), mi(&[0, 2])]);
    v.reverse();
    v.sort();
    assert_eq!(v[0], mi(&[2, 0]));
    assert!(mi(&[0, 1]) < mi(&[2, 0]));
    assert_eq!(monomials_of_degree(3, 2).len(), 6);
}

#[test]
fn bracket_with_linear_diagonal() {
    // [x^m e_j, A x] for A = diag(l) equals (l_j - <m,l>) x^m e_j... with
    // the convention [g,h] = Dh g - Dg h.
    let a = field(2, &[(0, &[1, 0], 2), (1, &[0, 1], 3)]);
    let g = field(2, &[(0, &[1, 1], 1)]);
    let b = lie_bracket(&g, &a).unwrap();
    // Dh g = diag(2,3) g = 2 x1x2 e1; Dg h = (x2 * 2x1 + x1 * 3x2) e1 = 5 x1x2 e1
    assert_eq!(b, field(2, &[(0, &[1, 1], -3)]));
}

#[test]
fn divergence_and_determinant_examples() {
    // f = (x1 (1 + x1 x2), -x2), g = (x1, -x2): det = -(x1 x2)^2
    let f = field(2, &[(0, &[1, 0], 1), (0, &[2, 1], 1), (1, &[0, 1], -1)]);
    let g = field(2, &[(0, &[1, 0], 1), (1, &[0, 1], -1)]);
    let det = determinant_multiplier(&f, &[g]).unwrap();
    assert_eq!(
        det.poly(),
        &Polynomial::from_terms(2, [(mi(&[2, 2]), rat(-1))])
    );
    // X_f(det) = div f * det
    let lhs = lie_derivative(&f, &det).unwrap();
    let rhs = divergence(&f).mul(&det);
    assert_eq!(lhs.poly(), rhs.poly());
    // Dependent columns give zero.
    assert!(determinant_multiplier(&f, std::slice::from_ref(&f)).unwrap().is_zero());
    // (1 + x1 x2) diag(1,-1) x is divergence free.
    let h = field(
        2,
        &[
            (0, &[1, 0], 1),
            (0, &[2, 1], 1),
            (1, &[0, 1], -1),
            (1, &[1, 2], -1),
        ],
    );
    assert!(divergence(&h).is_zero());
}

#[test]
fn truncation_budgets() {
    let f = field(2, &[(0, &[1, 0], 1)]).with_trunc(Truncation::Degree(3));
    let g = field(2, &[(1, &[0, 1], 1)]).with_trunc(Truncation::Degree(5));
    assert_eq!(lie_bracket(&f, &g).unwrap().trunc(), Truncation::Degree(3));
    let q = field(2, &[(0, &[2, 0], 1)]).with_trunc(Truncation::Degree(5));
    // Unknown tail of f starts at degree 4 and meets a field of low degree 2.
    assert_eq!(lie_bracket(&f, &q).unwrap().trunc(), Truncation::Degree(4));
    assert_eq!(divergence(&f).trunc(), Truncation::Degree(2));
    let s = PolySeries::new(Polynomial::variable(2, 0), Truncation::Degree(2));
    assert_eq!(s.mul(&s).trunc(), Truncation::Degree(3));
    assert_eq!(
        PolySeries::new(Polynomial::constant(2, frac(1, 2)), Truncation::Degree(4)).trunc(),
        Truncation::Degree(4)
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bracket_antisymmetric(g in arb_field(2, 3), h in arb_field(2, 3)) {
        let a = lie_bracket(&g, &h).unwrap();
        let b = lie_bracket(&h, &g).unwrap();
        prop_assert!(a.add(&b).is_zero());
    }

    #[test]
    fn bracket_jacobi_identity(f in arb_field(2, 2), g in arb_field(2, 2), h in arb_field(2, 2)) {
        let t1 = lie_bracket(&f, &lie_bracket(&g, &h).unwrap()).unwrap();
        let t2 = lie_bracket(&g, &lie_bracket(&h, &f).unwrap()).unwrap();
        let t3 = lie_bracket(&h, &lie_bracket(&f, &g).unwrap()).unwrap();
        prop_assert!(t1.add(&t2).add(&t3).is_zero());
    }

    #[test]
    fn bracket_matches_pointwise_derivatives(g in arb_field(2, 3), h in arb_field(2, 3), x0 in -3i64..4, x1 in -3i64..4) {
        let x = vec![frac(x0, 2), rat(x1)];
        let br = lie_bracket(&g, &h).unwrap();
        let gx = eval_field(&g, &x);
        let hx = eval_field(&h, &x);
        for i in 0..2 {
            let expected = directional_by_interpolation(h.component(i), &x, &gx)
                - directional_by_interpolation(g.component(i), &x, &hx);
            prop_assert_eq!(br.component(i).eval(&x), expected);
        }
    }

    #[test]
    fn lie_derivative_of_bracket(g in arb_field(2, 2), h in arb_field(2, 2), phi in arb_series(2, 2)) {
        // X_[g,h] phi = X_g X_h phi - X_h X_g phi
        let lhs = lie_derivative(&lie_bracket(&g, &h).unwrap(), &phi).unwrap();
        let xg_xh = lie_derivative(&g, &lie_derivative(&h, &phi).unwrap()).unwrap();
        let xh_xg = lie_derivative(&h, &lie_derivative(&g, &phi).unwrap()).unwrap();
        let rhs = xg_xh.sub(&xh_xg);
        prop_assert_eq!(lhs.poly(), rhs.poly());
    }

    #[test]
    fn bracket_with_scalar_multiples(g in arb_field(2, 2), h in arb_field(2, 2), phi in arb_series(2, 2), psi in arb_series(2, 1)) {
        // [phi g, psi h] = phi psi [g,h] + phi X_g(psi) h - psi X_h(phi) g
        let lhs = lie_bracket(&g.mul_series(&phi), &h.mul_series(&psi)).unwrap();
        let rhs = lie_bracket(&g, &h).unwrap().mul_series(&phi.mul(&psi))
            .add(&h.mul_series(&phi.mul(&lie_derivative(&g, &psi).unwrap())))
            .sub(&g.mul_series(&psi.mul(&lie_derivative(&h, &phi).unwrap())));
        prop_assert_eq!(lhs.components(), rhs.components());
    }

    #[test]
    fn divergence_of_scaled_field(f in arb_field(2, 2), phi in arb_series(2, 2)) {
        // div(phi f) = X_f(phi) + phi div f
        let lhs = divergence(&f.mul_series(&phi));
        let rhs = lie_derivative(&f, &phi).unwrap().add(&phi.mul(&divergence(&f)));
        prop_assert_eq!(lhs.poly(), rhs.poly());
    }
}
