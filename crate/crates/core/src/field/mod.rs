//! Sparse polynomial series and vector fields with truncation bookkeeping.
//!
//! A [`PolySeries`] or [`PolyVectorField`] carries a [`Truncation`]: terms of
//! degree above it are unknown, and every operation reports the largest
//! degree up to which its result is still determined. Genuine polynomials
//! use [`Truncation::Infinite`].

mod multiindex;
mod polynomial;

use num_traits::{One, Zero};

pub use multiindex::{monomials_of_degree, monomials_up_to, MultiIndex};
pub use polynomial::Polynomial;

use crate::error::{Error, Result};
use crate::linalg::{RatMatrix, Rational};

/// Degree up to which a series is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Truncation {
    Degree(u32),
    Infinite,
}

impl Truncation {
    pub fn min(self, other: Truncation) -> Truncation {
        std::cmp::min(self, other)
    }

    /// Shifts a finite budget by `k`, clamping at zero.
    pub fn shift(self, k: i64) -> Truncation {
        match self {
            Truncation::Infinite => Truncation::Infinite,
            Truncation::Degree(d) => Truncation::Degree((d as i64 + k).max(0) as u32),
        }
    }

    pub fn admits(self, degree: u32) -> bool {
        match self {
            Truncation::Infinite => true,
            Truncation::Degree(d) => degree <= d,
        }
    }

    pub fn degree(self) -> Option<u32> {
        match self {
            Truncation::Degree(d) => Some(d),
            Truncation::Infinite => None,
        }
    }
}

/// Lowest degree that may carry a nonzero term: the lowest stored degree,
/// or the first unknown degree, whichever is smaller. `None` means the
/// series is exactly zero.
fn effective_low(low: Option<u32>, t: Truncation) -> Option<u32> {
    match (low, t) {
        (Some(l), Truncation::Degree(d)) => Some(l.min(d + 1)),
        (Some(l), Truncation::Infinite) => Some(l),
        (None, Truncation::Degree(d)) => Some(d + 1),
        (None, Truncation::Infinite) => None,
    }
}

/// Budget of a product-like combination in which the unknown tail of one
/// factor (beyond `t`) meets a factor of effective low degree `low`, and
/// the combined degree is `a + b + offset`.
fn combined(t: Truncation, low: Option<u32>, offset: i64) -> Truncation {
    match low {
        None => Truncation::Infinite,
        Some(l) => t.shift(l as i64 + offset),
    }
}

fn clip(p: Polynomial, t: Truncation) -> Polynomial {
    match t {
        Truncation::Infinite => p,
        Truncation::Degree(d) => p.truncated(d),
    }
}

/// Scalar power series truncated at some degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySeries {
    poly: Polynomial,
    trunc: Truncation,
}

impl PolySeries {
    pub fn new(poly: Polynomial, trunc: Truncation) -> Self {
        PolySeries {
            poly: clip(poly, trunc),
            trunc,
        }
    }

    pub fn exact(poly: Polynomial) -> Self {
        Self::new(poly, Truncation::Infinite)
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn trunc(&self) -> Truncation {
        self.trunc
    }

    pub fn n(&self) -> usize {
        self.poly.n()
    }

    fn eff_low(&self) -> Option<u32> {
        effective_low(self.poly.low_degree(), self.trunc)
    }

    pub fn add(&self, other: &PolySeries) -> PolySeries {
        Self::new(self.poly.add(&other.poly), self.trunc.min(other.trunc))
    }

    pub fn sub(&self, other: &PolySeries) -> PolySeries {
        Self::new(self.poly.sub(&other.poly), self.trunc.min(other.trunc))
    }

    pub fn scale(&self, k: &Rational) -> PolySeries {
        Self::new(self.poly.scale(k), self.trunc)
    }

    pub fn mul(&self, other: &PolySeries) -> PolySeries {
        let t =
            combined(self.trunc, other.eff_low(), 0).min(combined(other.trunc, self.eff_low(), 0));
        Self::new(self.poly.mul_bounded(&other.poly, t.degree()), t)
    }

    /// Equality of the parts both series determine.
    pub fn agrees_with(&self, other: &PolySeries) -> bool {
        let t = self.trunc.min(other.trunc);
        clip(self.poly.clone(), t) == clip(other.poly.clone(), t)
    }

    /// True when every determined coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }
}

/// Vector field `sum_j f_j(x) e_j` with polynomial components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyVectorField {
    comps: Vec<Polynomial>,
    trunc: Truncation,
}

impl PolyVectorField {
    pub fn zero(n: usize, trunc: Truncation) -> Self {
        PolyVectorField {
            comps: vec![Polynomial::zero(n); n],
            trunc,
        }
    }

    pub fn from_components(comps: Vec<Polynomial>, trunc: Truncation) -> Result<Self> {
        let n = comps.len();
        if comps.iter().any(|c| c.n() != n) {
            return Err(Error::DimensionMismatch(
                "every component must have one variable per component".into(),
            ));
        }
        Ok(PolyVectorField {
            comps: comps.into_iter().map(|c| clip(c, trunc)).collect(),
            trunc,
        })
    }

    /// Builds a field from `(j, m, c)` terms with zero-based `j`.
    pub fn from_terms(
        n: usize,
        trunc: Truncation,
        terms: impl IntoIterator<Item = (usize, MultiIndex, Rational)>,
    ) -> Result<Self> {
        let mut f = Self::zero(n, trunc);
        for (j, m, c) in terms {
            if j >= n || m.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "term in component {j} with {} exponents in dimension {n}",
                    m.len()
                )));
            }
            if trunc.admits(m.degree()) {
                f.comps[j].add_term(m, c);
            }
        }
        Ok(f)
    }

    /// The single term `c x^m e_j`.
    pub fn monomial(n: usize, j: usize, m: MultiIndex, c: Rational) -> Self {
        let mut f = Self::zero(n, Truncation::Infinite);
        f.comps[j].add_term(m, c);
        f
    }

    /// The linear field `x -> a x`.
    pub fn linear(a: &RatMatrix) -> Self {
        let n = a.rows();
        let mut f = Self::zero(n, Truncation::Infinite);
        for i in 0..n {
            for j in 0..n {
                if !a[(i, j)].is_zero() {
                    f.comps[i].add_term(MultiIndex::unit(n, j), a[(i, j)].clone());
                }
            }
        }
        f
    }

    pub fn n(&self) -> usize {
        self.comps.len()
    }

    pub fn trunc(&self) -> Truncation {
        self.trunc
    }

    pub fn with_trunc(&self, trunc: Truncation) -> Self {
        PolyVectorField {
            comps: self.comps.iter().map(|c| clip(c.clone(), trunc)).collect(),
            trunc: self.trunc.min(trunc),
        }
    }

    pub fn component(&self, j: usize) -> &Polynomial {
        &self.comps[j]
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Polynomial::is_zero)
    }

    /// Terms `(j, m, c)` ordered by component, then graded-lex in `m`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &MultiIndex, &Rational)> {
        self.comps
            .iter()
            .enumerate()
            .flat_map(|(j, p)| p.terms().map(move |(m, c)| (j, m, c)))
    }

    pub fn coeff(&self, j: usize, m: &MultiIndex) -> Rational {
        self.comps[j].coeff(m)
    }

    pub fn low_degree(&self) -> Option<u32> {
        self.comps.iter().filter_map(Polynomial::low_degree).min()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.comps.iter().filter_map(Polynomial::max_degree).max()
    }

    fn eff_low(&self) -> Option<u32> {
        effective_low(self.low_degree(), self.trunc)
    }

    /// Matrix of the degree-one terms.
    pub fn linear_part(&self) -> RatMatrix {
        let n = self.n();
        let mut a = RatMatrix::zeros(n, n);
        for (j, m, c) in self.terms() {
            if m.degree() == 1 {
                let k = m.exps().iter().position(|&e| e == 1).expect("degree one");
                a[(j, k)] = c.clone();
            }
        }
        a
    }

    pub fn homogeneous(&self, d: u32) -> PolyVectorField {
        PolyVectorField {
            comps: self.comps.iter().map(|c| c.homogeneous(d)).collect(),
            trunc: Truncation::Infinite,
        }
    }

    /// Terms of degree `>= 2`, keeping the truncation.
    pub fn nonlinear_part(&self) -> PolyVectorField {
        let comps = self
            .comps
            .iter()
            .map(|c| {
                Polynomial::from_terms(
                    c.n(),
                    c.terms()
                        .filter(|(m, _)| m.degree() >= 2)
                        .map(|(m, c)| (m.clone(), c.clone())),
                )
            })
            .collect();
        PolyVectorField {
            comps,
            trunc: self.trunc,
        }
    }

    pub fn add(&self, other: &PolyVectorField) -> PolyVectorField {
        let t = self.trunc.min(other.trunc);
        PolyVectorField {
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| clip(a.add(b), t))
                .collect(),
            trunc: t,
        }
    }

    pub fn sub(&self, other: &PolyVectorField) -> PolyVectorField {
        let t = self.trunc.min(other.trunc);
        PolyVectorField {
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| clip(a.sub(b), t))
                .collect(),
            trunc: t,
        }
    }

    pub fn scale(&self, k: &Rational) -> PolyVectorField {
        PolyVectorField {
            comps: self.comps.iter().map(|c| c.scale(k)).collect(),
            trunc: self.trunc,
        }
    }

    /// The product `psi * self` of a scalar series and this field.
    pub fn mul_series(&self, psi: &PolySeries) -> PolyVectorField {
        let t = combined(psi.trunc, self.eff_low(), 0).min(combined(self.trunc, psi.eff_low(), 0));
        PolyVectorField {
            comps: self
                .comps
                .iter()
                .map(|c| psi.poly.mul_bounded(c, t.degree()))
                .collect(),
            trunc: t,
        }
    }

    /// Drops every term of degree above `d`.
    pub fn truncated(&self, d: u32) -> PolyVectorField {
        self.with_trunc(Truncation::Degree(d))
    }

    /// Equality of the parts both fields determine.
    pub fn agrees_with(&self, other: &PolyVectorField) -> bool {
        let t = self.trunc.min(other.trunc);
        self.comps
            .iter()
            .zip(&other.comps)
            .all(|(a, b)| clip(a.clone(), t) == clip(b.clone(), t))
    }
}

/// Lie bracket `[g, h] = Dh g - Dg h`.
pub fn lie_bracket(g: &PolyVectorField, h: &PolyVectorField) -> Result<PolyVectorField> {
    if g.n() != h.n() {
        return Err(Error::DimensionMismatch(
            "bracket of fields of different dimension".into(),
        ));
    }
    let t = combined(g.trunc, h.eff_low(), -1).min(combined(h.trunc, g.eff_low(), -1));
    let comps = (0..g.n())
        .map(|i| {
            clip(
                h.comps[i]
                    .directional(&g.comps)
                    .sub(&g.comps[i].directional(&h.comps)),
                t,
            )
        })
        .collect();
    Ok(PolyVectorField { comps, trunc: t })
}

/// Lie derivative `X_g(phi) = D phi g`.
pub fn lie_derivative(g: &PolyVectorField, phi: &PolySeries) -> Result<PolySeries> {
    if g.n() != phi.n() {
        return Err(Error::DimensionMismatch(
            "field and series of different dimension".into(),
        ));
    }
    let t = combined(phi.trunc, g.eff_low(), -1).min(combined(g.trunc, phi.eff_low(), -1));
    Ok(PolySeries::new(phi.poly.directional(&g.comps), t))
}

/// Divergence `tr Df`.
pub fn divergence(f: &PolyVectorField) -> PolySeries {
    let mut d = Polynomial::zero(f.n());
    for (i, c) in f.comps.iter().enumerate() {
        d = d.add(&c.derivative(i));
    }
    PolySeries::new(d, f.trunc.shift(-1))
}

/// Determinant of the matrix with columns `f, g_1, ..., g_{n-1}`.
pub fn determinant_multiplier(f: &PolyVectorField, gs: &[PolyVectorField]) -> Result<PolySeries> {
    let n = f.n();
    if gs.len() + 1 != n || gs.iter().any(|g| g.n() != n) {
        return Err(Error::DimensionMismatch(format!(
            "need {} further fields of dimension {n}",
            n.saturating_sub(1)
        )));
    }
    let cols: Vec<&PolyVectorField> = std::iter::once(f).chain(gs.iter()).collect();
    let entry = |r: usize, c: usize| PolySeries::new(cols[c].comps[r].clone(), cols[c].trunc);
    fn det(
        rows: &[usize],
        col: usize,
        n: usize,
        entry: &dyn Fn(usize, usize) -> PolySeries,
    ) -> PolySeries {
        if col == n {
            return PolySeries::exact(Polynomial::constant(n, Rational::one()));
        }
        let mut acc: Option<PolySeries> = None;
        for (k, &r) in rows.iter().enumerate() {
            let rest: Vec<usize> = rows.iter().copied().filter(|&x| x != r).collect();
            let mut term = entry(r, col).mul(&det(&rest, col + 1, n, entry));
            if k % 2 == 1 {
                term = term.scale(&-Rational::one());
            }
            acc = Some(match acc {
                None => term,
                Some(a) => a.add(&term),
            });
        }
        acc.expect("nonempty")
    }
    let rows: Vec<usize> = (0..n).collect();
    Ok(det(&rows, 0, n, &entry))
}

#[cfg(test)]
mod tests;
