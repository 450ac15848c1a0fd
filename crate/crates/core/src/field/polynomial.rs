use std::collections::BTreeMap;

use num_traits::Zero;

use super::multiindex::MultiIndex;
use crate::linalg::Rational;

/// Sparse polynomial in `n` variables with rational coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<MultiIndex, Rational>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Self::monomial(MultiIndex::zero(n), c)
    }

    pub fn monomial(m: MultiIndex, c: Rational) -> Self {
        let mut p = Self::zero(m.len());
        p.add_term(m, c);
        p
    }

    /// The coordinate function `x_i`.
    pub fn variable(n: usize, i: usize) -> Self {
        Self::monomial(MultiIndex::unit(n, i), Rational::from_integer(1.into()))
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (MultiIndex, Rational)>) -> Self {
        let mut p = Self::zero(n);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &MultiIndex) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: MultiIndex, c: Rational) {
        debug_assert_eq!(m.len(), self.n);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn low_degree(&self) -> Option<u32> {
        self.terms.keys().map(MultiIndex::degree).min()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(MultiIndex::degree).max()
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn scale(&self, k: &Rational) -> Polynomial {
        if k.is_zero() {
            return Self::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.mul_bounded(other, None)
    }

    /// Product keeping only terms of degree `<= bound` when given.
    pub fn mul_bounded(&self, other: &Polynomial, bound: Option<u32>) -> Polynomial {
        let mut out = Self::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some(bd) = bound {
                    if a.degree() + b.degree() > bd {
                        continue;
                    }
                }
                out.add_term(a.add(b), ca * cb);
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &MultiIndex, c: &Rational) -> Polynomial {
        let mut out = Self::zero(self.n);
        for (a, ca) in &self.terms {
            out.add_term(a.add(m), ca * c);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut out = Self::constant(self.n, Rational::from_integer(1.into()));
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Partial derivative with respect to `x_i`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            let e = m.get(i);
            if let Some(d) = m.decrement(i) {
                out.add_term(d, c * Rational::from_integer(e.into()));
            }
        }
        out
    }

    /// Drops every term of degree above `d`.
    pub fn truncated(&self, d: u32) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn homogeneous(&self, d: u32) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Substitutes `y_i -> x^{images[i]}`; the result lives in `n_out`
    /// variables.
    pub fn substitute_monomials(&self, images: &[MultiIndex], n_out: usize) -> Polynomial {
        let mut out = Self::zero(n_out);
        for (k, c) in &self.terms {
            let mut e = MultiIndex::zero(n_out);
            for (i, &ki) in k.exps().iter().enumerate() {
                for _ in 0..ki {
                    e = e.add(&images[i]);
                }
            }
            out.add_term(e, c.clone());
        }
        out
    }

    /// Value at a rational point.
    pub fn eval(&self, x: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &e) in x.iter().zip(m.exps()) {
                for _ in 0..e {
                    t *= xi;
                }
            }
            acc += t;
        }
        acc
    }

    /// Lie derivative `sum_k g_k d(self)/dx_k` along the components `g`.
    pub fn directional(&self, g: &[Polynomial]) -> Polynomial {
        let mut out = Self::zero(self.n);
        for (k, gk) in g.iter().enumerate() {
            if gk.is_zero() {
                continue;
            }
            let d = self.derivative(k);
            if !d.is_zero() {
                out = out.add(&d.mul(gk));
            }
        }
        out
    }
}
