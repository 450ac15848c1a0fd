//! Monomial first integrals of `A_s` and reduction by invariants.
//!
//! The invariant algebra of `A_s` is spanned by monomials `x^d` with
//! `<d, lambda> = 0`; its generators are the Hilbert basis of that monoid.
//! When the generators are algebraically independent and every resonant
//! term of a field is divisible by its own coordinate, the field can be
//! written as `A_s x + sum_j eta_j(x) x_j e_j` with invariant `eta_j`, and
//! pushed forward along `Psi = (psi_1, ..., psi_r)` to an `r`-variable field.

use num_traits::{One, Zero};

use crate::centralizer::homogeneous_commutant;
use crate::error::{Error, Result};
use crate::field::{
    lie_derivative, MultiIndex, PolySeries, PolyVectorField, Polynomial, Truncation,
};
use crate::linalg::{
    is_nonneg_integer, mat_rank, mat_solve, rat, RatMatrix, Rational, SolveOutcome,
};
use crate::normal_form::pdnf_remainder;
use crate::resonance::{
    commuting_degree_ladder, semiinvariant_degree_ladder, CommutingLadder, SemiInvariantLadder,
};
use crate::spectrum::{
    hilbert_basis_with_cap, integer_solution, EigenSpectrum, IntegerSearch, DEFAULT_HILBERT_CAP,
};

/// Monomial generators `psi_i = x^{generators[i]}` of the invariant algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantAlgebra {
    pub generators: Vec<MultiIndex>,
    /// Ambient dimension `n`.
    pub n: usize,
    /// True when the exponent rows are linearly independent over Q.
    pub independent: bool,
}

impl InvariantAlgebra {
    pub fn r(&self) -> usize {
        self.generators.len()
    }

    /// The `r x n` exponent matrix `M`.
    pub fn exponent_matrix(&self) -> RatMatrix {
        let mut m = RatMatrix::zeros(self.r(), self.n);
        for (i, g) in self.generators.iter().enumerate() {
            for k in 0..self.n {
                m[(i, k)] = rat(g.get(k) as i64);
            }
        }
        m
    }

    /// `psi_i` as an ambient polynomial.
    pub fn generator(&self, i: usize) -> Polynomial {
        Polynomial::monomial(self.generators[i].clone(), Rational::one())
    }

    /// Writes an invariant exponent as `sum k_i generators[i]`.
    pub fn rewrite(&self, e: &MultiIndex) -> Result<MultiIndex> {
        if !self.independent {
            return Err(Error::DependentGenerators);
        }
        if self.r() == 0 {
            return if e.degree() == 0 {
                Ok(MultiIndex::zero(0))
            } else {
                Err(Error::RewriteFailure(e.exps().to_vec()))
            };
        }
        let mt = self.exponent_matrix().transpose();
        let b: Vec<Rational> = e.exps().iter().map(|&x| rat(x as i64)).collect();
        match mat_solve(&mt, &b)? {
            SolveOutcome::Solved(sol) if sol.particular.iter().all(is_nonneg_integer) => {
                Ok(MultiIndex::new(
                    sol.particular
                        .iter()
                        .map(|k| k.to_integer().try_into().unwrap_or(u32::MAX))
                        .collect(),
                ))
            }
            _ => Err(Error::RewriteFailure(e.exps().to_vec())),
        }
    }

    /// `p(Psi(x))` for a polynomial `p` in `r` variables.
    pub fn pull_back(&self, p: &Polynomial) -> Polynomial {
        p.substitute_monomials(&self.generators, self.n)
    }

    fn max_generator_degree(&self) -> u32 {
        self.generators
            .iter()
            .map(MultiIndex::degree)
            .max()
            .unwrap_or(1)
            .max(1)
    }

    fn min_generator_degree(&self) -> u32 {
        self.generators
            .iter()
            .map(MultiIndex::degree)
            .min()
            .unwrap_or(1)
            .max(1)
    }
}

/// Hilbert basis generators with the default search cap.
pub fn invariant_generators(s: &EigenSpectrum) -> Result<InvariantAlgebra> {
    invariant_generators_with_cap(s, DEFAULT_HILBERT_CAP)
}

/// Fails with `CapReached` when the Hilbert basis search is incomplete.
pub fn invariant_generators_with_cap(s: &EigenSpectrum, cap: u32) -> Result<InvariantAlgebra> {
    let hb = hilbert_basis_with_cap(s, cap)?;
    if !hb.complete {
        return Err(Error::CapReached(cap as usize));
    }
    let mut inv = InvariantAlgebra {
        generators: hb.generators,
        n: s.n(),
        independent: true,
    };
    inv.independent = mat_rank(&inv.exponent_matrix()) == inv.r();
    Ok(inv)
}

/// Three-valued answer of a lattice search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    Unknown,
}

/// Result of [`check_free_module`] or [`check_onediv`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleCheck {
    pub verdict: Verdict,
    /// Zero-based component and exponent of a violating monomial.
    pub witness: Option<(usize, MultiIndex)>,
    /// For the divisor check: whether `div A_s = trace(A_s)` is nonzero.
    pub trace_nonzero: Option<bool>,
}

/// Searches each `j` for `m` with `m_j = 0` and `<m, lambda> = target`.
fn search_without_coordinate(
    s: &EigenSpectrum,
    target: impl Fn(usize) -> Vec<Rational>,
    search_bound: u32,
) -> Result<(Verdict, Option<(usize, MultiIndex)>)> {
    let mut unknown = false;
    for j in 0..s.n() {
        match integer_solution(s.lambda(), &target(j), &[j], search_bound)? {
            IntegerSearch::Found(m) => return Ok((Verdict::Fails, Some((j, MultiIndex::new(m))))),
            IntegerSearch::None => {}
            IntegerSearch::CapReached => unknown = true,
        }
    }
    Ok((
        if unknown {
            Verdict::Unknown
        } else {
            Verdict::Holds
        },
        None,
    ))
}

/// Whether every resonance `<m, lambda> = lambda_j` has `m_j > 0`, so the
/// polynomial commutant of `A_s` is free over the invariants with basis
/// `x_j e_j`.
pub fn check_free_module(s: &EigenSpectrum, search_bound: u32) -> Result<ModuleCheck> {
    if let Some(i) = (0..s.n()).find(|&i| s.row(i).iter().all(Zero::is_zero)) {
        return Err(Error::ZeroEigenvalue(i + 1));
    }
    let (verdict, witness) = search_without_coordinate(s, |j| s.row(j).to_vec(), search_bound)?;
    Ok(ModuleCheck {
        verdict,
        witness,
        trace_nonzero: None,
    })
}

/// Whether every `m` with `<m, lambda> = trace(A_s)` has `m >= (1, ..., 1)`,
/// i.e. the semi-invariants with cofactor `div A_s` are generated by
/// `x_1 ... x_n`.
pub fn check_onediv(s: &EigenSpectrum, search_bound: u32) -> Result<ModuleCheck> {
    let trace = s.trace();
    let nonzero = trace.iter().any(|t| !t.is_zero());
    if !nonzero {
        return Ok(ModuleCheck {
            verdict: Verdict::Fails,
            witness: Some((0, MultiIndex::zero(s.n()))),
            trace_nonzero: Some(false),
        });
    }
    let (verdict, witness) = search_without_coordinate(s, |_| trace.clone(), search_bound)?;
    Ok(ModuleCheck {
        verdict,
        witness,
        trace_nonzero: Some(true),
    })
}

/// Ambient truncation degree `T` to the `y`-degree up to which every
/// coefficient of the rewritten `eta_j` is known.
fn eta_truncation(inv: &InvariantAlgebra, t: Truncation) -> Truncation {
    match t {
        Truncation::Infinite => Truncation::Infinite,
        // x^m = x_j x^e with |m| <= T, so |e| <= T - 1.
        Truncation::Degree(d) => {
            Truncation::Degree(d.saturating_sub(1) / inv.max_generator_degree())
        }
    }
}

/// The `r`-variable series `eta_hat_j` with `f = A_s x + sum_j eta_hat_j(Psi) x_j e_j`.
pub fn decompose_eta(
    s: &EigenSpectrum,
    inv: &InvariantAlgebra,
    f: &PolyVectorField,
) -> Result<Vec<PolySeries>> {
    let rem = pdnf_remainder(s, f)?;
    if !inv.independent {
        return Err(Error::DependentGenerators);
    }
    if inv.n != s.n() {
        return Err(Error::DimensionMismatch(
            "invariant algebra and spectrum differ in dimension".into(),
        ));
    }
    let r = inv.r();
    let mut etas = vec![Polynomial::zero(r); s.n()];
    for (j, m, c) in rem.terms() {
        let e = m.decrement(j).ok_or_else(|| Error::NotFreeModuleShape {
            j: j + 1,
            m: m.exps().to_vec(),
        })?;
        etas[j].add_term(inv.rewrite(&e)?, c.clone());
    }
    let t = eta_truncation(inv, rem.trunc());
    Ok(etas.into_iter().map(|p| PolySeries::new(p, t)).collect())
}

/// A field pushed forward along the invariant map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedField {
    pub r: usize,
    /// `f_hat_i = y_i sum_j M_ij eta_hat_j`.
    pub field: PolyVectorField,
    /// `nu_ij`: coefficient of `y_j` in `sum_k M_ik eta_hat_k`.
    pub nu: RatMatrix,
    pub eta: Vec<PolySeries>,
}

impl ReducedField {
    /// The homogeneous quadratic field `y_i sum_j nu_ij y_j`.
    pub fn from_nu(nu: &RatMatrix) -> Result<Self> {
        let r = nu.rows();
        if nu.cols() != r {
            return Err(Error::DimensionMismatch("nu must be square".into()));
        }
        let mut terms = Vec::new();
        for i in 0..r {
            for j in 0..r {
                let e = MultiIndex::unit(r, i).add(&MultiIndex::unit(r, j));
                terms.push((i, e, nu[(i, j)].clone()));
            }
        }
        Ok(ReducedField {
            r,
            field: PolyVectorField::from_terms(r, Truncation::Infinite, terms)?,
            nu: nu.clone(),
            eta: Vec::new(),
        })
    }

    /// Spectrum with zero semisimple part in `r` variables, under which
    /// the reduced field is trivially in normal form.
    pub fn spectrum(&self) -> EigenSpectrum {
        EigenSpectrum::new(vec![Vec::new(); self.r], 0, &[]).expect("q = 0 spectrum is valid")
    }

    /// Homogeneous quadratic part `y_i sum_j nu_ij y_j`.
    pub fn quadratic_part(&self) -> PolyVectorField {
        self.field.homogeneous(2)
    }
}

/// Reduced field `f_hat` with `D Psi f = f_hat(Psi)`, verified exactly up
/// to the known truncation.
pub fn reduce_vectorfield(
    s: &EigenSpectrum,
    inv: &InvariantAlgebra,
    f: &PolyVectorField,
) -> Result<ReducedField> {
    let etas = decompose_eta(s, inv, f)?;
    let r = inv.r();
    let m = inv.exponent_matrix();
    let t_eta = etas
        .first()
        .map(PolySeries::trunc)
        .unwrap_or(Truncation::Infinite);
    let t_hat = t_eta.shift(1);
    let mut comps = Vec::with_capacity(r);
    for i in 0..r {
        let mut acc = Polynomial::zero(r);
        for (j, eta) in etas.iter().enumerate() {
            if !m[(i, j)].is_zero() {
                acc = acc.add(&eta.poly().scale(&m[(i, j)]));
            }
        }
        comps.push(acc.mul(&Polynomial::variable(r, i)));
    }
    let field = PolyVectorField::from_components(comps, t_hat)?;
    let mut nu = RatMatrix::zeros(r, r);
    for i in 0..r {
        for j in 0..r {
            let mut e = MultiIndex::unit(r, i);
            e = e.add(&MultiIndex::unit(r, j));
            nu[(i, j)] = field.coeff(i, &e);
        }
    }
    let red = ReducedField {
        r,
        field,
        nu,
        eta: etas,
    };
    verify_reduction(s, inv, f, &red)?;
    Ok(red)
}

/// Checks `X_f(psi_i) = f_hat_i(Psi)` coefficientwise. `A_s` annihilates
/// every `psi_i`, so only the remainder contributes.
pub fn verify_reduction(
    s: &EigenSpectrum,
    inv: &InvariantAlgebra,
    f: &PolyVectorField,
    red: &ReducedField,
) -> Result<()> {
    let rem = pdnf_remainder(s, f)?;
    // Terms of f_hat of y-degree above the known range have x-degree at
    // least (t + 1) min |psi|.
    let rhs_known = match red.field.trunc() {
        Truncation::Infinite => Truncation::Infinite,
        Truncation::Degree(t) => Truncation::Degree((t + 1) * inv.min_generator_degree() - 1),
    };
    for i in 0..inv.r() {
        let lhs = lie_derivative(&rem, &PolySeries::exact(inv.generator(i)))?;
        let rhs = PolySeries::new(inv.pull_back(red.field.component(i)), rhs_known);
        let t = lhs.trunc().min(rhs_known);
        let diff = PolySeries::new(lhs.poly().sub(rhs.poly()), t);
        if !diff.is_zero() {
            return Err(Error::IdentityFailure(format!(
                "D psi_{} f differs from f_hat_{}(Psi)",
                i + 1,
                i + 1
            )));
        }
    }
    Ok(())
}

/// Evidence that the reduced quadratic field has trivial centralizer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrivialityCertificate {
    pub certified: bool,
    pub reasons: Vec<String>,
    /// Diagonal of `D f_hat_2(c)` at `c = e_1 / nu_11`: `2, nu_21/nu_11, ...`.
    pub eigenvalues: Vec<Rational>,
    pub commuting: Option<CommutingLadder>,
    /// Kernel dimensions of `h -> [h, f_hat_2]` on homogeneous `h` of degree 0, 1, 2.
    pub kernel_dims: Vec<usize>,
    /// Degrees of possible homogeneous first integrals of `f_hat_2`.
    pub first_integrals: Option<SemiInvariantLadder>,
}

/// Certifies that only multiples of `f_hat_2` commute with it, using the
/// fixed point `c = e_1 / nu_11`.
pub fn triviality_certificate(red: &ReducedField, cap: u32) -> Result<TrivialityCertificate> {
    let mut cert = TrivialityCertificate {
        certified: false,
        reasons: Vec::new(),
        eigenvalues: Vec::new(),
        commuting: None,
        kernel_dims: Vec::new(),
        first_integrals: None,
    };
    if red.r == 0 {
        cert.reasons.push("reduced field has no variables".into());
        return Ok(cert);
    }
    let nu11 = red.nu[(0, 0)].clone();
    if nu11.is_zero() {
        cert.reasons
            .push("nu_11 = 0, no fixed point on the first axis".into());
        return Ok(cert);
    }
    let mut mu = vec![rat(2)];
    mu.extend((1..red.r).map(|j| &red.nu[(j, 0)] / &nu11));
    let ladder = commuting_degree_ladder(&mu, cap);
    let mut ok = true;
    if !ladder.complete {
        ok = false;
        cert.reasons.push(format!(
            "commuting degree ladder incomplete: some eigenvalue ratio is not positive, searched to {}",
            ladder.searched_to
        ));
    } else if ladder.degrees != [2] {
        ok = false;
        cert.reasons
            .push(format!("commuting degrees {:?} besides 2", ladder.degrees));
    }
    let f2 = red.quadratic_part();
    for d in 0..=2u32 {
        let k = homogeneous_commutant(&f2, d)?.len();
        cert.kernel_dims.push(k);
        let expected = usize::from(d == 2);
        if k != expected {
            ok = false;
            cert.reasons.push(format!(
                "degree {d} commutant has dimension {k}, expected {expected}"
            ));
        }
    }
    cert.first_integrals = Some(semiinvariant_degree_ladder(&mu, &Rational::zero(), cap));
    cert.eigenvalues = mu;
    cert.commuting = Some(ladder);
    if ok {
        cert.reasons.push(
            "only degree 2 admits commuting terms and its commutant is spanned by f_hat_2".into(),
        );
    }
    cert.certified = ok;
    Ok(cert)
}
