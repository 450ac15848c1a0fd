//! Seeded generators and brute-force oracles shared by integration tests.

#![allow(dead_code)]

use nfkit_core::field::{monomials_up_to, MultiIndex};
use nfkit_core::linalg::{rat, RatMatrix};
use nfkit_core::normal_form::semisimple_remainder;
use nfkit_core::resonance::resonant_multiindices;
use nfkit_core::{EigenSpectrum, PolySeries, PolyVectorField, Polynomial, Rational, Truncation};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn mi(v: &[u32]) -> MultiIndex {
    MultiIndex::new(v.to_vec())
}

pub fn diag(xs: &[i64]) -> EigenSpectrum {
    EigenSpectrum::rational_diagonal(&xs.iter().map(|&x| rat(x)).collect::<Vec<_>>()).unwrap()
}

/// Rational `p/q` with `|p| <= 9`, `1 <= q <= 5`.
pub fn rational(r: &mut impl Rng) -> Rational {
    Rational::new(r.gen_range(-9..=9).into(), r.gen_range(1..=5).into())
}

pub fn nonzero(r: &mut impl Rng) -> Rational {
    loop {
        let x = rational(r);
        if x != rat(0) {
            return x;
        }
    }
}

pub fn field(n: usize, terms: &[(usize, &[u32], Rational)]) -> PolyVectorField {
    PolyVectorField::from_terms(
        n,
        Truncation::Infinite,
        terms.iter().map(|(j, m, c)| (*j, mi(m), c.clone())),
    )
    .unwrap()
}

/// `A_s x` for a spectrum with rational eigenvalues, zero otherwise.
pub fn semisimple_field(s: &EigenSpectrum) -> PolyVectorField {
    match s.semisimple_matrix() {
        Some(a) => PolyVectorField::linear(&a),
        None => PolyVectorField::zero(s.n(), Truncation::Infinite),
    }
}

/// Linear part plus random resonant terms of degree `2..=top`, each kept
/// with probability `density`.
pub fn random_pdnf(s: &EigenSpectrum, r: &mut impl Rng, top: u32, density: f64) -> PolyVectorField {
    let n = s.n();
    let mut f = semisimple_field(s).add(&PolyVectorField::linear(s.nilpotent()));
    for d in 2..=top {
        for j in 0..n {
            for m in resonant_multiindices(s, j, d) {
                if r.gen_bool(density) {
                    f = f.add(&PolyVectorField::monomial(n, j, m, nonzero(r)));
                }
            }
        }
    }
    f
}

/// Nonlinear part of a stored field.
pub fn nonlinear(s: &EigenSpectrum, f: &PolyVectorField) -> PolyVectorField {
    semisimple_remainder(s, f).unwrap().nonlinear_part()
}

/// Random polynomial in `n` variables of degree `<= top`.
pub fn random_poly(n: usize, r: &mut impl Rng, top: u32, density: f64) -> Polynomial {
    let mut terms = Vec::new();
    for m in monomials_up_to(n, 0, top) {
        if r.gen_bool(density) {
            terms.push((m, nonzero(r)));
        }
    }
    Polynomial::from_terms(n, terms)
}

pub fn random_field(n: usize, r: &mut impl Rng, top: u32, density: f64) -> PolyVectorField {
    let comps = (0..n).map(|_| random_poly(n, r, top, density)).collect();
    PolyVectorField::from_components(comps, Truncation::Infinite).unwrap()
}

pub fn exact(p: Polynomial) -> PolySeries {
    PolySeries::exact(p)
}

/// Coefficients of a field on `x^m e_j` for `1 <= |m| <= top`.
pub fn coords(f: &PolyVectorField, top: u32) -> Vec<Rational> {
    let n = f.n();
    let mut out = Vec::new();
    for m in monomials_up_to(n, 1, top) {
        for j in 0..n {
            out.push(f.coeff(j, &m));
        }
    }
    out
}

pub fn diagonal_field(d: &[Rational]) -> PolyVectorField {
    let mut m = RatMatrix::zeros(d.len(), d.len());
    for (i, v) in d.iter().enumerate() {
        m[(i, i)] = v.clone();
    }
    PolyVectorField::linear(&m)
}

/// All nonzero `d >= 0` with `|d| <= top` and `<d, lambda> = 0`, by
/// exhaustive enumeration.
pub fn monoid_elements(s: &EigenSpectrum, top: u32) -> Vec<MultiIndex> {
    monomials_up_to(s.n(), 1, top)
        .into_iter()
        .filter(|m| s.pairing(m.exps()).iter().all(|x| *x == rat(0)))
        .collect()
}

/// Whether `d` is a sum of the given generators.
pub fn decomposes(d: &MultiIndex, gens: &[MultiIndex]) -> bool {
    if d.degree() == 0 {
        return true;
    }
    gens.iter()
        .filter_map(|g| d.checked_sub(g))
        .any(|rest| decomposes(&rest, gens))
}

/// Whether some nonzero monoid element lies strictly below `g`.
pub fn is_reducible(s: &EigenSpectrum, g: &MultiIndex) -> bool {
    let mut below = vec![MultiIndex::zero(g.len())];
    for i in 0..g.len() {
        below = below
            .into_iter()
            .flat_map(|b| (0..=g.get(i)).map(move |k| (b.clone(), k)))
            .map(|(b, k)| {
                let mut v = b.into_vec();
                v[i] = k;
                MultiIndex::new(v)
            })
            .collect();
    }
    below
        .iter()
        .filter(|e| e.degree() > 0 && *e != g)
        .any(|e| s.pairing(e.exps()).iter().all(|x| *x == rat(0)))
}

/// Condition on `diag(d1, d2, -d3)` decided by exhaustive search: the
/// resonances of the first two components all contain the component's own
/// variable, and the invariant monoid has exactly two minimal elements.
/// Minimal elements `(a, b, c)` satisfy `a, b <= d3` and `c <= max(d1, d2)`,
/// and a resonance without `x_1` exists iff one exists with `m_3 < d2`.
pub fn dim3_brute(d1: u64, d2: u64, d3: u64) -> bool {
    let free = |own: u64, other: u64| {
        // other * m2 - d3 * m3 = own has no solution with m3 < other.
        !(0..other).any(|m3| (own + d3 * m3).is_multiple_of(other))
    };
    if !free(d1, d2) || !free(d2, d1) {
        return false;
    }
    let mut elems = Vec::new();
    for c in 0..=d1.max(d2) {
        for a in 0..=d3 {
            let rest = (d3 * c) as i64 - (d1 * a) as i64;
            if rest >= 0 && (rest as u64).is_multiple_of(d2) {
                let b = rest as u64 / d2;
                if b <= d3 && a + b + c > 0 {
                    elems.push((a, b, c));
                }
            }
        }
    }
    let minimal = elems
        .iter()
        .filter(|&&(a, b, c)| {
            !elems
                .iter()
                .any(|&(x, y, z)| (x, y, z) != (a, b, c) && x <= a && y <= b && z <= c)
        })
        .count();
    minimal == 2
}

/// Coprime `l1, l2 > 1` with `l2 | d1`, `l1 | d2`, `d3 = l1 l2`, by search.
pub fn dim3_factors(d1: u64, d2: u64, d3: u64) -> Vec<(u64, u64)> {
    (2..=d3)
        .filter(|l1| d3.is_multiple_of(*l1))
        .map(|l1| (l1, d3 / l1))
        .filter(|&(l1, l2)| l2 > 1 && num_gcd(l1, l2) == 1 && d1.is_multiple_of(l2) && d2.is_multiple_of(l1))
        .collect()
}

pub fn num_gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

/// Random sample without replacement.
pub fn pick<T: Clone>(r: &mut impl Rng, xs: &[T], k: usize) -> Vec<T> {
    xs.choose_multiple(r, k).cloned().collect()
}
