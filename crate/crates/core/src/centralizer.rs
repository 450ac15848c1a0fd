//! Centralizers and normalizers of fields in normal form.
//!
//! Every solver builds one linear system whose unknowns are coefficients
//! of a candidate field (and, for normalizers, of a scalar factor) and
//! whose equations are the coefficients of a bracket expression, then
//! reads the solution space off the kernel.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::{
    lie_bracket, lie_derivative, monomials_up_to, MultiIndex, PolySeries, PolyVectorField,
    Polynomial, Truncation,
};
use crate::linalg::{mat_kernel, mat_rank, RatMatrix, Rational};
use crate::normal_form::{full_field, pdnf_remainder};
use crate::resonance::{resonance_set, resonant_multiindices, ResonanceSet};
use crate::spectrum::EigenSpectrum;

/// Solution space of a centralizer computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralizerResult {
    pub dimension: usize,
    /// True for the full formal centralizer, false for a truncation.
    pub exact: bool,
    /// Degree up to which commutation was imposed, for truncated results.
    pub truncation: Option<u32>,
    pub basis: Vec<PolyVectorField>,
    /// Dimension of the linear commutant of `A_s` and `A_n`.
    pub commutant_dim: usize,
    /// Number of nonlinear resonant unknowns.
    pub resonance_count: usize,
    /// For truncated results, entry `k - 1` is the number of independent
    /// solutions of lowest degree `k`.
    pub graded: Option<Vec<usize>>,
}

/// Matrices `B` with `[B, A_s] = [B, A_n] = 0`, in kernel echelon order.
pub fn linear_commutant(s: &EigenSpectrum) -> Vec<RatMatrix> {
    let n = s.n();
    let idx = |a: usize, b: usize| a * n + b;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    // (B A_s - A_s B)_{ab} = B_ab (lambda_b - lambda_a), coordinatewise.
    for a in 0..n {
        for b in 0..n {
            if s.row(a) != s.row(b) {
                let mut r = vec![Rational::zero(); n * n];
                r[idx(a, b)] = Rational::from_integer(1.into());
                rows.push(r);
            }
        }
    }
    let nil = s.nilpotent();
    if !nil.is_zero() {
        for a in 0..n {
            for b in 0..n {
                let mut r = vec![Rational::zero(); n * n];
                for c in 0..n {
                    // sum_c B_ac N_cb - N_ac B_cb
                    r[idx(a, c)] += &nil[(c, b)];
                    r[idx(c, b)] -= &nil[(a, c)];
                }
                if r.iter().any(|x| !x.is_zero()) {
                    rows.push(r);
                }
            }
        }
    }
    let m = RatMatrix::from_rows_with_cols(rows, n * n).expect("square system");
    mat_kernel(&m)
        .into_iter()
        .map(|v| {
            let mut b = RatMatrix::zeros(n, n);
            for a in 0..n {
                for c in 0..n {
                    b[(a, c)] = v[idx(a, c)].clone();
                }
            }
            b
        })
        .collect()
}

/// Key of an equation: component and exponent.
type Key = (usize, MultiIndex);

/// Coefficient matrix whose column `c` holds the coefficients of
/// `images[c]` at every key of degree `<= bound`.
fn assemble(images: &[PolyVectorField], bound: Option<u32>) -> (RatMatrix, Vec<Key>) {
    let mut keys: BTreeSet<Key> = BTreeSet::new();
    for img in images {
        for (j, m, _) in img.terms() {
            if bound.is_none_or(|b| m.degree() <= b) {
                keys.insert((j, m.clone()));
            }
        }
    }
    let keys: Vec<Key> = keys.into_iter().collect();
    let pos: BTreeMap<&Key, usize> = keys.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let mut m = RatMatrix::zeros(keys.len(), images.len());
    for (c, img) in images.iter().enumerate() {
        for (j, e, v) in img.terms() {
            if let Some(&r) = pos.get(&(j, e.clone())) {
                m[(r, c)] = v.clone();
            }
        }
    }
    (m, keys)
}

fn combine(gens: &[PolyVectorField], coeffs: &[Rational], n: usize) -> PolyVectorField {
    let mut out = PolyVectorField::zero(n, Truncation::Infinite);
    for (g, c) in gens.iter().zip(coeffs) {
        if !c.is_zero() {
            out = out.add(&g.scale(c));
        }
    }
    out
}

/// Homogeneous fields `h` of degree `d` with `[h, f] = 0`, over every
/// monomial field of that degree. `f` must be exact.
pub fn homogeneous_commutant(f: &PolyVectorField, d: u32) -> Result<Vec<PolyVectorField>> {
    let n = f.n();
    let one = Rational::from_integer(1.into());
    let gens: Vec<PolyVectorField> = monomials_up_to(n, d, d)
        .into_iter()
        .flat_map(|m| (0..n).map(move |j| (j, m.clone())))
        .map(|(j, m)| PolyVectorField::monomial(n, j, m, one.clone()))
        .collect();
    let images = gens
        .iter()
        .map(|g| lie_bracket(g, f))
        .collect::<Result<Vec<_>>>()?;
    let (m, _) = assemble(&images, None);
    Ok(mat_kernel(&m)
        .iter()
        .map(|v| combine(&gens, v, n))
        .collect())
}

/// Exact formal centralizer of a normal form with finitely many
/// resonances. Unknowns are the commutant coordinates followed by one
/// coefficient per nonlinear resonance; the equations are all
/// coefficients of `[g, A_n x + p]` (the bracket with `A_s` vanishes on
/// this ansatz).
pub fn centralizer_exact(s: &EigenSpectrum, f: &PolyVectorField) -> Result<CentralizerResult> {
    let res = resonance_set(s, None)?;
    if !res.finite {
        return Err(Error::InfiniteResonance);
    }
    let rem = pdnf_remainder(s, f)?;
    if rem.trunc() != Truncation::Infinite {
        return Err(Error::InvalidArgument(
            "the exact centralizer needs a polynomial field (trunc = inf)".into(),
        ));
    }
    let n = s.n();
    let commutant = linear_commutant(s);
    let d = commutant.len();
    let one = Rational::from_integer(1.into());
    let mut gens: Vec<PolyVectorField> = commutant.iter().map(PolyVectorField::linear).collect();
    gens.extend(
        res.pairs()
            .map(|(j, m)| PolyVectorField::monomial(n, j, m.clone(), one.clone())),
    );
    let images = gens
        .iter()
        .map(|g| lie_bracket(g, &rem))
        .collect::<Result<Vec<_>>>()?;
    for img in &images {
        for (j, m, _) in img.terms() {
            if m.degree() < 2 || !s.is_resonant(j, m) {
                return Err(Error::ClosureViolation {
                    j: j + 1,
                    m: m.clone().into_vec(),
                });
            }
        }
    }
    let (mat, _) = assemble(&images, None);
    let kernel = mat_kernel(&mat);
    let r = res.count();
    let dimension = kernel.len();
    if dimension < d || dimension > d + r {
        return Err(Error::IdentityFailure(format!(
            "centralizer dimension {dimension} outside [{d}, {}]",
            d + r
        )));
    }
    let basis = kernel.iter().map(|v| combine(&gens, v, n)).collect();
    Ok(CentralizerResult {
        dimension,
        exact: true,
        truncation: None,
        basis,
        commutant_dim: d,
        resonance_count: r,
        graded: None,
    })
}

/// Lower and upper dimension bounds `sum n_k^2 <= dim <= sum n_k (n_k + r_k)`
/// for a diagonal linear part, where `n_k` are eigenvalue multiplicities
/// and `r_k` the number of resonances of one component in block `k`.
pub fn block_bounds(s: &EigenSpectrum, res: &ResonanceSet) -> Option<(usize, usize)> {
    if s.has_nilpotent() {
        return None;
    }
    let mut lo = 0;
    let mut hi = 0;
    for block in s.eigen_blocks() {
        let nk = block.len();
        let rk = res.per_component[block[0]].len();
        lo += nk * nk;
        hi += nk * (nk + rk);
    }
    Some((lo, hi))
}

/// Resonant generators of degree `1..=top`: linear `x_i e_j` with equal
/// eigenvalues, then nonlinear resonances degree by degree.
fn resonant_generators(s: &EigenSpectrum, top: u32) -> Vec<(usize, MultiIndex)> {
    let n = s.n();
    let mut out = Vec::new();
    for d in 1..=top {
        for j in 0..n {
            for m in resonant_multiindices(s, j, d) {
                out.push((j, m));
            }
        }
    }
    out
}

fn check_known(t: Truncation, needed: u32) -> Result<()> {
    match t {
        Truncation::Degree(k) if k < needed => {
            Err(Error::TruncationTooShallow { known: k, needed })
        }
        _ => Ok(()),
    }
}

/// Dimension of the solutions whose terms all have degree `>= k`, for
/// every `k`, from the kernel dimension of the column-restricted system.
fn graded_dims(mat: &RatMatrix, degrees: &[u32], top: u32) -> Vec<usize> {
    let sub_dim = |k: u32| -> usize {
        let cols: Vec<usize> = (0..degrees.len()).filter(|&c| degrees[c] >= k).collect();
        if cols.is_empty() {
            return 0;
        }
        let rows = (0..mat.rows())
            .map(|r| cols.iter().map(|&c| mat[(r, c)].clone()).collect())
            .collect();
        let sub = RatMatrix::from_rows_with_cols(rows, cols.len()).expect("shape");
        cols.len() - mat_rank(&sub)
    };
    let dims: Vec<usize> = (1..=top + 1).map(sub_dim).collect();
    (0..top as usize).map(|i| dims[i] - dims[i + 1]).collect()
}

/// Fields `g` supported on resonant monomials of degree `1..=D` with
/// `[g, f] = 0` modulo terms of degree `> D`.
pub fn centralizer_truncated(
    s: &EigenSpectrum,
    f: &PolyVectorField,
    degree: u32,
) -> Result<CentralizerResult> {
    if degree == 0 {
        return Err(Error::InvalidArgument(
            "truncation degree must be positive".into(),
        ));
    }
    let rem = pdnf_remainder(s, f)?;
    check_known(rem.trunc(), degree)?;
    let n = s.n();
    let one = Rational::from_integer(1.into());
    let gens_keys = resonant_generators(s, degree);
    let gens: Vec<PolyVectorField> = gens_keys
        .iter()
        .map(|(j, m)| PolyVectorField::monomial(n, *j, m.clone(), one.clone()))
        .collect();
    let images = gens
        .iter()
        .map(|g| lie_bracket(g, &rem))
        .collect::<Result<Vec<_>>>()?;
    let (mat, _) = assemble(&images, Some(degree));
    let kernel = mat_kernel(&mat);
    let degrees: Vec<u32> = gens_keys.iter().map(|(_, m)| m.degree()).collect();
    let graded = graded_dims(&mat, &degrees, degree);
    let basis = kernel
        .iter()
        .map(|v| combine(&gens, v, n).with_trunc(Truncation::Degree(degree)))
        .collect();
    let linear = degrees.iter().filter(|&&d| d == 1).count();
    Ok(CentralizerResult {
        dimension: kernel.len(),
        exact: false,
        truncation: Some(degree),
        basis,
        commutant_dim: linear_commutant(s).len(),
        resonance_count: gens_keys.len() - linear,
        graded: Some(graded),
    })
}

/// A normalizer element: `[g, f] = lambda f` modulo degree `> D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizerPair {
    pub g: PolyVectorField,
    pub lambda: PolySeries,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizerResult {
    pub dimension: usize,
    pub truncation: u32,
    pub basis: Vec<NormalizerPair>,
}

/// Pairs `(g, lambda)` with `g(0) = 0`, `g` of degree `<= D`, `lambda` of
/// degree `<= D - 1`, and `[g, f] - lambda f = 0` modulo degree `> D`.
/// Needs rational eigenvalues (`q <= 1`).
pub fn normalizer_truncated(
    s: &EigenSpectrum,
    f: &PolyVectorField,
    degree: u32,
) -> Result<NormalizerResult> {
    if degree == 0 {
        return Err(Error::InvalidArgument(
            "truncation degree must be positive".into(),
        ));
    }
    let rem = pdnf_remainder(s, f)?;
    let full = full_field(s, &rem)?;
    check_known(full.trunc(), degree)?;
    let n = s.n();
    let one = Rational::from_integer(1.into());
    let mut g_gens = Vec::new();
    for m in monomials_up_to(n, 1, degree) {
        for j in 0..n {
            g_gens.push(PolyVectorField::monomial(n, j, m.clone(), one.clone()));
        }
    }
    let l_gens: Vec<MultiIndex> = monomials_up_to(n, 0, degree - 1);
    let mut images = g_gens
        .iter()
        .map(|g| lie_bracket(g, &full))
        .collect::<Result<Vec<_>>>()?;
    for a in &l_gens {
        let phi = PolySeries::exact(Polynomial::monomial(a.clone(), -one.clone()));
        images.push(full.mul_series(&phi));
    }
    let (mat, _) = assemble(&images, Some(degree));
    let kernel = mat_kernel(&mat);
    let ng = g_gens.len();
    let basis = kernel
        .iter()
        .map(|v| {
            let g = combine(&g_gens, &v[..ng], n).with_trunc(Truncation::Degree(degree));
            let lam =
                Polynomial::from_terms(n, l_gens.iter().cloned().zip(v[ng..].iter().cloned()));
            NormalizerPair {
                g,
                lambda: PolySeries::new(lam, Truncation::Degree(degree - 1)),
            }
        })
        .collect();
    Ok(NormalizerResult {
        dimension: kernel.len(),
        truncation: degree,
        basis,
    })
}

/// Output of [`normalizer_reduce`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizerReduction {
    /// `beta` with `[g - beta f, f] = alpha f`.
    pub beta: PolySeries,
    /// First integral of `A_s`, vanishing at the origin.
    pub alpha: PolySeries,
    /// `[A_s x, g - beta f] = 0` modulo degree `> D`.
    pub commutes_with_semisimple: bool,
}

fn eigen_split(s: &EigenSpectrum, p: &Polynomial) -> BTreeMap<Vec<Rational>, Polynomial> {
    let mut out: BTreeMap<Vec<Rational>, Polynomial> = BTreeMap::new();
    for (m, c) in p.terms() {
        out.entry(s.pairing(m.exps()))
            .or_insert_with(|| Polynomial::zero(p.n()))
            .add_term(m.clone(), c.clone());
    }
    out
}

/// Given a normalizer pair `(g, lambda)` of `f` modulo degree `> D`, builds
/// `beta` degree by degree so that `alpha = lambda + X_f(beta)` is a first
/// integral of `A_s`. On each eigenspace of `X_{A_s}` with eigenvalue
/// `c != 0`, `X_A = c + X_{A_n}` is inverted by a finite Neumann sum.
pub fn normalizer_reduce(
    s: &EigenSpectrum,
    f: &PolyVectorField,
    g: &PolyVectorField,
    lambda: &PolySeries,
    degree: u32,
) -> Result<NormalizerReduction> {
    if degree == 0 {
        return Err(Error::InvalidArgument(
            "truncation degree must be positive".into(),
        ));
    }
    let rem = pdnf_remainder(s, f)?;
    let a_s = s.semisimple_matrix().ok_or(Error::UnsupportedRank(s.q()))?;
    if a_s.is_zero() {
        return Err(Error::ZeroSemisimplePart);
    }
    let full = full_field(s, &rem)?;
    check_known(full.trunc(), degree)?;
    check_known(g.trunc(), degree)?;
    check_known(lambda.trunc(), degree - 1)?;
    let n = s.n();
    let d = Truncation::Degree(degree);
    let g = g.with_trunc(d);
    let lam = PolySeries::new(lambda.poly().clone(), Truncation::Degree(degree - 1));
    let exact_f = full.with_trunc(Truncation::Infinite);
    let residual = lie_bracket(&g, &exact_f)?
        .sub(&exact_f.mul_series(&lam))
        .with_trunc(d);
    if !residual.is_zero() {
        return Err(Error::NotNormalizerPair(
            "[g, f] - lambda f has nonzero terms up to the truncation degree".into(),
        ));
    }
    if !lam.poly().homogeneous(0).is_zero() {
        return Err(Error::NotNormalizerPair("lambda(0) must vanish".into()));
    }
    let nil_field = PolyVectorField::linear(s.nilpotent());
    let higher: Vec<PolyVectorField> = (2..=degree)
        .map(|l| rem.homogeneous(l))
        .filter(|h| !h.is_zero())
        .collect();
    let mut beta_parts: Vec<Polynomial> = Vec::new();
    for k in 0..degree {
        let mut r = lam.poly().homogeneous(k);
        for h in &higher {
            let l = h.max_degree().expect("nonzero homogeneous part");
            if k + 1 >= l {
                let b = &beta_parts[(k + 1 - l) as usize];
                r = r.add(&b.directional(h.components()));
            }
        }
        let mut beta_k = Polynomial::zero(n);
        for (c, part) in eigen_split(s, &r) {
            if c.iter().all(Zero::is_zero) {
                continue;
            }
            let c = c[0].clone();
            // beta = -(c + N)^{-1} part = sum_i (-1)^{i+1} N^i(part) / c^{i+1}
            let mut term = part.scale(&(-Rational::from_integer(1.into()) / &c));
            while !term.is_zero() {
                beta_k = beta_k.add(&term);
                term = term
                    .directional(nil_field.components())
                    .scale(&(-Rational::from_integer(1.into()) / &c));
            }
        }
        beta_parts.push(beta_k);
    }
    let mut beta_poly = Polynomial::zero(n);
    for b in &beta_parts {
        beta_poly = beta_poly.add(b);
    }
    let beta = PolySeries::new(beta_poly, Truncation::Degree(degree - 1));
    let alpha_poly = lam.poly().add(
        &lie_derivative(&exact_f, &PolySeries::exact(beta.poly().clone()))?
            .poly()
            .truncated(degree - 1),
    );
    let alpha = PolySeries::new(alpha_poly, Truncation::Degree(degree - 1));
    if alpha
        .poly()
        .terms()
        .any(|(m, _)| !s.is_invariant_exponent(m.exps()))
    {
        return Err(Error::IdentityFailure(
            "alpha is not a first integral of A_s".into(),
        ));
    }
    let h = g.sub(
        &exact_f
            .mul_series(&PolySeries::exact(beta.poly().clone()))
            .with_trunc(d),
    );
    let comm = lie_bracket(&PolyVectorField::linear(&a_s), &h)?.with_trunc(d);
    Ok(NormalizerReduction {
        beta,
        alpha,
        commutes_with_semisimple: comm.is_zero(),
    })
}
