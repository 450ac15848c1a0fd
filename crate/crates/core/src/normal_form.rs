//! Fields in Poincare-Dulac normal form relative to a spectrum.
//!
//! A field is read as `f = A_s x + A_n x + p(x)`. Its stored linear part
//! may either contain the semisimple part (possible only when the
//! eigenvalues are rational, `q <= 1`, where `A_s = diag(Lambda[i][0])`)
//! or omit it, in which case `A_s` is taken from the spectrum and acts
//! through eigenvalue coordinates. In both readings the off-diagonal
//! linear terms must equal the nilpotent part of the spectrum.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::{MultiIndex, PolyVectorField};
use crate::linalg::Rational;
use crate::resonance::resonance_set;
use crate::spectrum::EigenSpectrum;

/// Splits `f` into `A_s x` and the remainder `A_n x + p`, returning the
/// remainder. Fails with `LinearPartMismatch` when the linear part is
/// neither `A_s + A_n` nor `A_n`.
pub fn semisimple_remainder(s: &EigenSpectrum, f: &PolyVectorField) -> Result<PolyVectorField> {
    let n = s.n();
    if f.n() != n {
        return Err(Error::DimensionMismatch(format!(
            "field of dimension {} against spectrum of dimension {n}",
            f.n()
        )));
    }
    let lin = f.linear_part();
    for i in 0..n {
        for j in 0..n {
            if i != j && lin[(i, j)] != s.nilpotent()[(i, j)] {
                return Err(Error::LinearPartMismatch);
            }
        }
    }
    let diag: Vec<Rational> = (0..n).map(|i| lin[(i, i)].clone()).collect();
    if diag.iter().all(Zero::is_zero) {
        return Ok(f.clone());
    }
    let a_s = s.semisimple_matrix().ok_or(Error::LinearPartMismatch)?;
    if (0..n).any(|i| diag[i] != a_s[(i, i)]) {
        return Err(Error::LinearPartMismatch);
    }
    Ok(f.sub(&PolyVectorField::linear(&a_s)))
}

/// `A_s x + remainder` as a rational field; needs `q <= 1`.
pub fn full_field(s: &EigenSpectrum, remainder: &PolyVectorField) -> Result<PolyVectorField> {
    let a_s = s.semisimple_matrix().ok_or(Error::UnsupportedRank(s.q()))?;
    Ok(PolyVectorField::linear(&a_s)
        .with_trunc(remainder.trunc())
        .add(remainder))
}

/// First non-resonant nonlinear term `(j, m)` of the remainder, if any.
fn first_nonresonant(s: &EigenSpectrum, rem: &PolyVectorField) -> Option<(usize, MultiIndex)> {
    rem.terms()
        .find(|(j, m, _)| m.degree() != 1 && (m.degree() == 0 || !s.is_resonant(*j, m)))
        .map(|(j, m, _)| (j, m.clone()))
}

/// True when every nonlinear term of `f` is resonant.
pub fn is_pdnf(s: &EigenSpectrum, f: &PolyVectorField) -> Result<bool> {
    let rem = semisimple_remainder(s, f)?;
    Ok(first_nonresonant(s, &rem).is_none())
}

/// Like [`is_pdnf`] but returns the remainder `A_n x + p`, or `NotPdnf`
/// naming the first offending term.
pub fn pdnf_remainder(s: &EigenSpectrum, f: &PolyVectorField) -> Result<PolyVectorField> {
    let rem = semisimple_remainder(s, f)?;
    match first_nonresonant(s, &rem) {
        None => Ok(rem),
        Some((j, m)) => Err(Error::NotPdnf {
            j: j + 1,
            m: m.into_vec(),
        }),
    }
}

/// Unit vector monomials `x^m e_j` for every resonance with
/// `2 <= |m| <= max_degree`. Without a degree the resonance degree bound
/// is used, which requires a finite resonance set.
pub fn pdnf_basis(s: &EigenSpectrum, max_degree: Option<u32>) -> Result<Vec<PolyVectorField>> {
    let top = match max_degree {
        Some(d) => d,
        None => resonance_set(s, None)?
            .degree_bound
            .ok_or(Error::InfiniteResonanceWithoutCap)?,
    };
    let res = resonance_set(s, Some(top))?;
    let one = Rational::from_integer(1.into());
    Ok(res
        .pairs()
        .filter(|(_, m)| m.degree() <= top)
        .map(|(j, m)| PolyVectorField::monomial(s.n(), j, m.clone(), one.clone()))
        .collect())
}
