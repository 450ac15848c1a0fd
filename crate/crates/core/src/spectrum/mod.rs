//! Eigenvalue data of a linear part `A = A_s + A_n` and the lattice
//! questions it raises.
//!
//! Eigenvalue `lambda_i` is stored as its coordinate row `Lambda[i]` over
//! an implicit basis `nu_1..nu_q` of the rational span of the spectrum.
//! Since the `nu_k` are rationally independent, `<m, lambda> = lambda_j`
//! holds exactly when it holds for each of the `q` coordinates.

mod hilbert;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use hilbert::{integer_solution, minimal_solutions, IntegerSearch, MinimalSolutions};

use crate::error::{Error, Result};
use crate::field::MultiIndex;
use crate::linalg::{clear_denominators, lp_max, mat_rank, rat, LpOutcome, RatMatrix, Rational};

/// Degree cap used by [`hilbert_basis`].
pub const DEFAULT_HILBERT_CAP: u32 = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenSpectrum {
    lambda: Vec<Vec<Rational>>,
    q: usize,
    nilpotent: RatMatrix,
}

impl EigenSpectrum {
    /// Validates and builds a spectrum from an `n x q` coordinate matrix
    /// and a strictly upper triangular nilpotent part given as zero-based
    /// `(i, j, value)` entries.
    pub fn new(
        lambda: Vec<Vec<Rational>>,
        q: usize,
        nilpotent: &[(usize, usize, Rational)],
    ) -> Result<Self> {
        let n = lambda.len();
        if let Some(i) = lambda.iter().position(|r| r.len() != q) {
            return Err(Error::DimensionMismatch(format!(
                "eigenvalue {} has {} coordinates, expected {q}",
                i + 1,
                lambda[i].len()
            )));
        }
        let rank = mat_rank(&RatMatrix::from_rows_with_cols(lambda.clone(), q)?);
        if rank != q {
            return Err(Error::RankMismatch { rank, q });
        }
        let mut nil = RatMatrix::zeros(n, n);
        for (i, j, v) in nilpotent {
            let (i, j) = (*i, *j);
            if i >= n || j >= n || i >= j {
                return Err(Error::InvalidArgument(format!(
                    "nilpotent entry ({}, {}) must satisfy 1 <= i < j <= {n}",
                    i + 1,
                    j + 1
                )));
            }
            if v.is_zero() {
                continue;
            }
            if lambda[i] != lambda[j] {
                return Err(Error::NilpotentViolatesCommutation { i: i + 1, j: j + 1 });
            }
            nil[(i, j)] = v.clone();
        }
        Ok(EigenSpectrum {
            lambda,
            q,
            nilpotent: nil,
        })
    }

    /// Spectrum of `diag(values)` with all eigenvalues rational.
    pub fn rational_diagonal(values: &[Rational]) -> Result<Self> {
        if values.iter().all(Zero::is_zero) {
            return Self::new(vec![Vec::new(); values.len()], 0, &[]);
        }
        Self::new(values.iter().map(|v| vec![v.clone()]).collect(), 1, &[])
    }

    /// Spectrum from integer coordinate rows.
    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        let q = rows.first().map_or(0, |r| r.len());
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
            q,
            &[],
        )
    }

    /// Same eigenvalues with a new nilpotent part.
    pub fn with_nilpotent(&self, entries: &[(usize, usize, Rational)]) -> Result<Self> {
        Self::new(self.lambda.clone(), self.q, entries)
    }

    pub fn n(&self) -> usize {
        self.lambda.len()
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn lambda(&self) -> &[Vec<Rational>] {
        &self.lambda
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.lambda[i]
    }

    pub fn nilpotent(&self) -> &RatMatrix {
        &self.nilpotent
    }

    pub fn has_nilpotent(&self) -> bool {
        !self.nilpotent.is_zero()
    }

    /// Nonzero nilpotent entries as zero-based `(i, j, value)`.
    pub fn nilpotent_entries(&self) -> Vec<(usize, usize, Rational)> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if !self.nilpotent[(i, j)].is_zero() {
                    out.push((i, j, self.nilpotent[(i, j)].clone()));
                }
            }
        }
        out
    }

    /// Coordinates of `<m, lambda>`.
    pub fn pairing(&self, m: &[u32]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.q];
        for (i, &mi) in m.iter().enumerate() {
            if mi == 0 {
                continue;
            }
            let k = rat(mi as i64);
            for (o, l) in out.iter_mut().zip(&self.lambda[i]) {
                *o += &k * l;
            }
        }
        out
    }

    /// Coordinates of `lambda_1 + ... + lambda_n`, the trace of `A_s`.
    pub fn trace(&self) -> Vec<Rational> {
        self.pairing(&vec![1; self.n()])
    }

    /// `<m, lambda> = lambda_j`.
    pub fn is_resonant(&self, j: usize, m: &MultiIndex) -> bool {
        self.pairing(m.exps()) == self.lambda[j]
    }

    /// `<m, lambda> = 0`.
    pub fn is_invariant_exponent(&self, m: &[u32]) -> bool {
        self.pairing(m).iter().all(Zero::is_zero)
    }

    /// True when every eigenvalue is a rational multiple of one basis
    /// element, so `A_s` can be written down with rational entries.
    pub fn semisimple_matrix(&self) -> Option<RatMatrix> {
        if self.q > 1 {
            return None;
        }
        let n = self.n();
        let mut a = RatMatrix::zeros(n, n);
        for i in 0..n {
            if self.q == 1 {
                a[(i, i)] = self.lambda[i][0].clone();
            }
        }
        Some(a)
    }

    /// Groups of coordinates sharing one eigenvalue, in order of first
    /// appearance.
    pub fn eigen_blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for i in 0..self.n() {
            match blocks
                .iter_mut()
                .find(|b| self.lambda[b[0]] == self.lambda[i])
            {
                Some(b) => b.push(i),
                None => blocks.push(vec![i]),
            }
        }
        blocks
    }

    /// Column images `Lambda[i]` used by lattice searches.
    pub(crate) fn images(&self) -> Vec<Vec<Rational>> {
        self.lambda.clone()
    }
}

/// Hilbert basis of `{d in Z_+^n : Lambda^T d = 0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertBasis {
    pub generators: Vec<MultiIndex>,
    /// False when the degree cap was reached first; the generators found
    /// are then only those up to the cap.
    pub complete: bool,
    pub cap: u32,
}

pub fn hilbert_basis(s: &EigenSpectrum) -> Result<HilbertBasis> {
    hilbert_basis_with_cap(s, DEFAULT_HILBERT_CAP)
}

pub fn hilbert_basis_with_cap(s: &EigenSpectrum, cap: u32) -> Result<HilbertBasis> {
    if s.q == 0 {
        // Every exponent is invariant; the unit vectors generate.
        return Ok(HilbertBasis {
            generators: (0..s.n()).map(|i| MultiIndex::unit(s.n(), i)).collect(),
            complete: true,
            cap,
        });
    }
    let r = minimal_solutions(&s.images(), cap)?;
    Ok(HilbertBasis {
        generators: r.solutions,
        complete: r.complete,
        cap,
    })
}

/// LP maximizing `d_obj` over `{d >= 0, Lambda^T d = 0, sum d = 1}`.
fn relation_lp(s: &EigenSpectrum, obj: Option<usize>) -> Result<LpOutcome> {
    let n = s.n();
    let mut rows: Vec<Vec<Rational>> = (0..s.q)
        .map(|k| (0..n).map(|i| s.lambda[i][k].clone()).collect())
        .collect();
    rows.push(vec![Rational::one(); n]);
    let mut b = vec![Rational::zero(); s.q];
    b.push(Rational::one());
    let a = RatMatrix::from_rows_with_cols(rows, n)?;
    let mut c = vec![Rational::zero(); n];
    if let Some(i) = obj {
        c[i] = Rational::one();
    }
    lp_max(&c, &a, &b)
}

/// True when `A_s` has only finitely many resonances, i.e. no nonzero
/// `d >= 0` has `<d, lambda> = 0`. Decided by linear programming, so it
/// agrees with the Hilbert basis being empty without any degree cap.
pub fn is_finite_linear_centralizer(s: &EigenSpectrum) -> Result<bool> {
    Ok(!relation_lp(s, None)?.is_feasible())
}

/// Indices `i` for which some `d >= 0` with `<d, lambda> = 0` has `d_i > 0`,
/// which is the union of the supports of the Hilbert basis elements.
pub fn relation_support(s: &EigenSpectrum) -> Result<Vec<bool>> {
    (0..s.n())
        .map(|i| {
            Ok(match relation_lp(s, Some(i))? {
                LpOutcome::Optimal { value, .. } => value.is_positive(),
                LpOutcome::Unbounded => true,
                LpOutcome::Infeasible => false,
            })
        })
        .collect()
}

/// True when a relation with every `d_i > 0` exists.
pub fn has_positive_relation(s: &EigenSpectrum) -> Result<bool> {
    Ok(relation_support(s)?.iter().all(|&b| b))
}

/// Zero-based `(U, W)`: coordinates inside and outside the relation support.
pub fn uw_decomposition(s: &EigenSpectrum) -> Result<(Vec<usize>, Vec<usize>)> {
    let sup = relation_support(s)?;
    let u = (0..s.n()).filter(|&i| sup[i]).collect();
    let w = (0..s.n()).filter(|&i| !sup[i]).collect();
    Ok((u, w))
}

/// Diagonals of the integer matrices `C_1..C_q` with
/// `A_s = sum_k nu_k C_k` up to positive scaling of each `nu_k`:
/// column `k` of `Lambda` times the lcm of its denominators, optionally
/// divided by the gcd of its entries.
pub fn c_matrix_basis(s: &EigenSpectrum, normalize_gcd: bool) -> Vec<Vec<BigInt>> {
    (0..s.q)
        .map(|k| {
            let col: Vec<Rational> = (0..s.n()).map(|i| s.lambda[i][k].clone()).collect();
            let ints = clear_denominators(&col);
            if !normalize_gcd {
                return ints;
            }
            let g = ints.iter().fold(BigInt::zero(), |a, x| a.gcd(x));
            if g.is_zero() {
                ints
            } else {
                ints.into_iter().map(|x| x / &g).collect()
            }
        })
        .collect()
}

/// Outcome of the three-dimensional classification for `diag(d1, d2, -d3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dim3Classification {
    pub holds: bool,
    pub l1: Option<u64>,
    pub l2: Option<u64>,
}

/// Decides whether coprime `l1, l2 > 1` exist with `d3 = l1 l2`,
/// `l2 | d1` and `l1 | d2`; for `diag(d1, d2, -d3)` this is exactly the
/// case of a free normal form module with independent invariants.
pub fn classify_dim3(d1: u64, d2: u64, d3: u64) -> Result<Dim3Classification> {
    if d1 == 0 || d2 == 0 || d3 == 0 {
        return Err(Error::InvalidArgument("degrees must be positive".into()));
    }
    if d1.gcd(&d2).gcd(&d3) != 1 {
        return Err(Error::GcdNotOne);
    }
    for l1 in 2..d3 {
        if !d3.is_multiple_of(l1) {
            continue;
        }
        let l2 = d3 / l1;
        if l2 > 1 && l1.gcd(&l2) == 1 && d1.is_multiple_of(l2) && d2.is_multiple_of(l1) {
            return Ok(Dim3Classification {
                holds: true,
                l1: Some(l1),
                l2: Some(l2),
            });
        }
    }
    Ok(Dim3Classification {
        holds: false,
        l1: None,
        l2: None,
    })
}
