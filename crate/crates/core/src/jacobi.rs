//! Formal inverse Jacobi multipliers `phi` with `X_f(phi) = div f * phi`.
//!
//! Every term of a multiplier of a normal form satisfies
//! `<m, lambda> = trace(A_s)`, so `X_{A_s}` and `div A_s` cancel on the
//! ansatz and only the remainder `A_n x + p` enters the linear systems.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{
    divergence, lie_derivative, MultiIndex, PolySeries, PolyVectorField, Polynomial, Truncation,
};
use crate::invariants::{InvariantAlgebra, ReducedField};
use crate::linalg::{mat_kernel, normalize_leading, projected_rank, RatMatrix, Rational};
use crate::normal_form::pdnf_remainder;
use crate::resonance::{
    multiindices_with_pairing, semiinvariant_degree_ladder, SemiInvariantLadder,
};
use crate::spectrum::EigenSpectrum;

/// Monomials of degree `d` with `<m, lambda> = trace(A_s)`.
pub fn multiplier_support(s: &EigenSpectrum, d: u32) -> Vec<MultiIndex> {
    multiindices_with_pairing(s, &s.trace(), d)
}

/// True when `div f` is a first integral of `A_s`, i.e. every term of the
/// divergence of the remainder is an invariant monomial.
pub fn divergence_integral_check(s: &EigenSpectrum, f: &PolyVectorField) -> Result<bool> {
    let rem = pdnf_remainder(s, f)?;
    Ok(divergence(&rem)
        .poly()
        .terms()
        .all(|(m, _)| s.is_invariant_exponent(m.exps())))
}

/// `X_f(phi) - div f * phi` computed from the remainder; valid whenever
/// every term of `phi` lies in the multiplier support.
fn residual(rem: &PolyVectorField, phi: &PolySeries) -> Result<PolySeries> {
    let x = lie_derivative(rem, phi)?;
    Ok(x.sub(&divergence(rem).mul(phi)))
}

/// Whether `phi` is an inverse Jacobi multiplier of `f` within the known
/// truncation: every term lies in the support and the residual vanishes.
pub fn is_multiplier(s: &EigenSpectrum, f: &PolyVectorField, phi: &PolySeries) -> Result<bool> {
    let rem = pdnf_remainder(s, f)?;
    let t = s.trace();
    if phi.poly().terms().any(|(m, _)| s.pairing(m.exps()) != t) {
        return Ok(false);
    }
    Ok(residual(&rem, phi)?.is_zero())
}

/// Outcome for one candidate lowest order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LadderStatus {
    /// A multiplier with nonzero lowest part of this order exists up to
    /// the truncation; `leading_dimension` counts independent lowest parts.
    Solved {
        multiplier: PolySeries,
        leading_dimension: usize,
        solution_dimension: usize,
    },
    /// Every solution through `phi_d` forces the lowest part to vanish.
    InconsistentAtDegree(u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LadderEntry {
    pub r: u32,
    pub status: LadderStatus,
}

/// Quadratic fixed point data used to bound the lowest order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointLadder {
    /// Zero-based axis `i` with `c = e_i / kappa`.
    pub axis: usize,
    pub kappa: Rational,
    pub eigenvalues: Vec<Rational>,
    pub cofactor: Rational,
    pub ladder: SemiInvariantLadder,
    /// True when the ladder is complete and every admissible order lies in
    /// the scanned range, so no multiplier has a lowest order outside it.
    pub covers_range: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplierLadder {
    pub truncation: u32,
    pub entries: Vec<LadderEntry>,
    pub support_note: String,
    pub fixed_point: Option<FixedPointLadder>,
}

/// Fixed point `c = e_i / kappa` of the quadratic part with a triangular
/// Jacobian, when `A_n = 0`.
fn quadratic_fixed_point(
    rem: &PolyVectorField,
    r_min: u32,
    r_max: u32,
) -> Option<FixedPointLadder> {
    let n = rem.n();
    if !rem.linear_part().is_zero() {
        return None;
    }
    let f2 = rem.homogeneous(2);
    if f2.is_zero() {
        return None;
    }
    for i in 0..n {
        let sq = MultiIndex::unit(n, i).add(&MultiIndex::unit(n, i));
        let kappa = f2.coeff(i, &sq);
        if kappa.is_zero() || (0..n).any(|j| j != i && !f2.coeff(j, &sq).is_zero()) {
            continue;
        }
        // D f2(e_i)[j][k] is the coefficient of x_i x_k in component j,
        // doubled on the diagonal k = i.
        let mut jac = RatMatrix::zeros(n, n);
        for j in 0..n {
            for k in 0..n {
                let e = MultiIndex::unit(n, i).add(&MultiIndex::unit(n, k));
                let c = f2.coeff(j, &e);
                jac[(j, k)] = if k == i {
                    c * Rational::from_integer(2.into())
                } else {
                    c
                };
            }
        }
        let upper = (0..n).all(|j| (0..j).all(|k| jac[(j, k)].is_zero()));
        let lower = (0..n).all(|j| (j + 1..n).all(|k| jac[(j, k)].is_zero()));
        if !upper && !lower {
            continue;
        }
        let eigenvalues: Vec<Rational> = (0..n).map(|j| &jac[(j, j)] / &kappa).collect();
        let div2 = divergence(&f2);
        let cofactor = div2.poly().coeff(&MultiIndex::unit(n, i)) / &kappa;
        let ladder = semiinvariant_degree_ladder(&eigenvalues, &cofactor, r_max);
        let covers_range = ladder.complete
            && ladder
                .solutions
                .iter()
                .all(|sol| (r_min..=r_max).contains(&sol.s));
        return Some(FixedPointLadder {
            axis: i,
            kappa,
            eigenvalues,
            cofactor,
            ladder,
            covers_range,
        });
    }
    None
}

/// Coefficient system of the residual for unknowns on `support`, keeping
/// equation degrees `lo..=hi`.
fn residual_system(
    rem: &PolyVectorField,
    support: &[MultiIndex],
    lo: u32,
    hi: u32,
) -> Result<RatMatrix> {
    let images: Vec<Polynomial> = support
        .iter()
        .map(|m| {
            let phi = PolySeries::exact(Polynomial::monomial(m.clone(), Rational::one()));
            residual(rem, &phi).map(|r| r.poly().clone())
        })
        .collect::<Result<_>>()?;
    let mut keys: Vec<MultiIndex> = images
        .iter()
        .flat_map(|p| p.terms().map(|(m, _)| m.clone()))
        .filter(|m| (lo..=hi).contains(&m.degree()))
        .collect();
    keys.sort();
    keys.dedup();
    let mut mat = RatMatrix::zeros(keys.len(), support.len());
    for (c, p) in images.iter().enumerate() {
        for (m, v) in p.terms() {
            if let Ok(r) = keys.binary_search(m) {
                mat[(r, c)] = v.clone();
            }
        }
    }
    Ok(mat)
}

/// Searches, for each `r` in `r_min..=r_max`, a multiplier
/// `phi = phi_r + ... + phi_top` with `phi_r != 0`. The unknowns are the
/// support coefficients of degrees `r..=top`; the equations are all residual
/// degrees determined by them, i.e. up to `top + l - 1` where `l` is the
/// lowest degree of the remainder. The entry is
/// `InconsistentAtDegree(top)` for the smallest `top <= D` at which the
/// lowest part is forced to vanish.
pub fn solve_multiplier(
    s: &EigenSpectrum,
    f: &PolyVectorField,
    r_min: u32,
    r_max: u32,
    truncation: u32,
) -> Result<MultiplierLadder> {
    if r_min > r_max || truncation < r_max {
        return Err(Error::InvalidArgument(format!(
            "need r_min <= r_max <= D, got {r_min}, {r_max}, {truncation}"
        )));
    }
    let rem = pdnf_remainder(s, f)?;
    // A term of degree k raises degree by k - 1.
    let shift = rem.low_degree().map(|d| d.saturating_sub(1));
    if let Truncation::Degree(t) = rem.trunc() {
        // Unknown terms start at degree t + 1 when nothing is stored.
        let sh = shift.unwrap_or(t);
        let needed = truncation + sh + 1 - r_min;
        if needed > t {
            return Err(Error::TruncationTooShallow { known: t, needed });
        }
    }
    let supports: Vec<Vec<MultiIndex>> =
        (0..=truncation).map(|d| multiplier_support(s, d)).collect();
    let mut entries = Vec::new();
    for r in r_min..=r_max {
        let lead = supports[r as usize].len();
        if lead == 0 {
            entries.push(LadderEntry {
                r,
                status: LadderStatus::InconsistentAtDegree(r),
            });
            continue;
        }
        let mut status = None;
        for top in r..=truncation {
            let unknowns: Vec<MultiIndex> = (r..=top)
                .flat_map(|d| supports[d as usize].iter().cloned())
                .collect();
            let kernel = match shift {
                None => identity_basis(unknowns.len()),
                Some(sh) => mat_kernel(&residual_system(&rem, &unknowns, r + sh, top + sh)?),
            };
            let lead_coords: Vec<usize> = (0..lead).collect();
            let lead_dim = projected_rank(&kernel, &lead_coords);
            if lead_dim == 0 {
                status = Some(LadderStatus::InconsistentAtDegree(top));
                break;
            }
            if top == truncation {
                let mut v = kernel
                    .iter()
                    .find(|v| v[..lead].iter().any(|x| !x.is_zero()))
                    .expect("projected rank is positive")
                    .clone();
                normalize_leading(&mut v);
                let poly = Polynomial::from_terms(s.n(), unknowns.iter().cloned().zip(v));
                status = Some(LadderStatus::Solved {
                    multiplier: PolySeries::new(poly, Truncation::Degree(truncation)),
                    leading_dimension: lead_dim,
                    solution_dimension: kernel.len(),
                });
            }
        }
        entries.push(LadderEntry {
            r,
            status: status.expect("loop sets a status"),
        });
    }
    Ok(MultiplierLadder {
        truncation,
        entries,
        support_note: "monomials x^m with <m, lambda> = trace(A_s)".into(),
        fixed_point: quadratic_fixed_point(&rem, r_min, r_max),
    })
}

fn identity_basis(k: usize) -> Vec<Vec<Rational>> {
    (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// Direction of [`transfer_reduced`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    ToReduced,
    ToAmbient,
}

/// Maps `sigma * rho_hat(Psi)` with `sigma = x_1 ... x_n` to
/// `y_1 ... y_r * rho_hat` and back.
pub fn transfer_reduced(
    inv: &InvariantAlgebra,
    direction: Direction,
    candidate: &PolySeries,
) -> Result<PolySeries> {
    if !inv.independent {
        return Err(Error::DependentGenerators);
    }
    let r = inv.r();
    let (n_in, n_out) = match direction {
        Direction::ToReduced => (inv.n, r),
        Direction::ToAmbient => (r, inv.n),
    };
    if candidate.n() != n_in {
        return Err(Error::DimensionMismatch(format!(
            "candidate has {} variables, expected {n_in}",
            candidate.n()
        )));
    }
    let ones_in = MultiIndex::new(vec![1; n_in]);
    let ones_out = MultiIndex::new(vec![1; n_out]);
    let mut out = Polynomial::zero(n_out);
    for (m, c) in candidate.poly().terms() {
        let rest = m.checked_sub(&ones_in).ok_or_else(|| {
            Error::WrongShape(format!(
                "term with exponent {:?} is not divisible by the product of all variables",
                m.exps()
            ))
        })?;
        let image = match direction {
            Direction::ToReduced => inv.rewrite(&rest).map_err(|_| {
                Error::WrongShape(format!(
                    "cofactor exponent {:?} is not an invariant monomial",
                    rest.exps()
                ))
            })?,
            Direction::ToAmbient => Polynomial::monomial(rest, Rational::one())
                .substitute_monomials(&inv.generators, inv.n)
                .terms()
                .next()
                .map(|(e, _)| e.clone())
                .expect("monomial image"),
        };
        out.add_term(image.add(&ones_out), c.clone());
    }
    let gmax = inv
        .generators
        .iter()
        .map(MultiIndex::degree)
        .max()
        .unwrap_or(1)
        .max(1);
    let gmin = inv
        .generators
        .iter()
        .map(MultiIndex::degree)
        .min()
        .unwrap_or(1)
        .max(1);
    let trunc = match (candidate.trunc(), direction) {
        (Truncation::Infinite, _) => Truncation::Infinite,
        // y^k with n + gmax |k| <= T is known.
        (Truncation::Degree(t), Direction::ToReduced) => {
            if t < inv.n as u32 {
                Truncation::Degree(0)
            } else {
                Truncation::Degree(r as u32 + (t - inv.n as u32) / gmax)
            }
        }
        // x-degrees below n + gmin (t - r + 1) come from known terms only.
        (Truncation::Degree(t), Direction::ToAmbient) => {
            let k = (t + 1).saturating_sub(r as u32);
            Truncation::Degree((inv.n as u32 + gmin * k).saturating_sub(1))
        }
    };
    Ok(PolySeries::new(out, trunc))
}

/// Multiplier property checked on both sides of the transfer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TransferCheck {
    pub ambient: bool,
    pub reduced: bool,
}

pub fn verify_transfer(
    s: &EigenSpectrum,
    f: &PolyVectorField,
    red: &ReducedField,
    ambient: &PolySeries,
    reduced: &PolySeries,
) -> Result<TransferCheck> {
    Ok(TransferCheck {
        ambient: is_multiplier(s, f, ambient)?,
        reduced: is_multiplier(&red.spectrum(), &red.field, reduced)?,
    })
}

/// Verdict of the quadratic obstruction system on a reduced field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ObstructionStatus {
    NoMultiplier,
    /// Coefficients `alpha` of `rho_hat = sum alpha_i y_i`, leading entry 1.
    UniqueCandidate(Vec<Rational>),
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Obstruction {
    pub status: ObstructionStatus,
    /// Rows `mu_ij alpha_i + mu_ji alpha_j = 0` for `i < j`, with
    /// `mu_ij = nu_ij - nu_jj`.
    pub system: RatMatrix,
    pub kernel: Vec<Vec<Rational>>,
}

/// Conditions on `rho_hat = sum alpha_i y_i` for `y_1 ... y_r rho_hat` to
/// be a multiplier of the quadratic part of the reduced field.
pub fn reduced_multiplier_obstruction(red: &ReducedField) -> Obstruction {
    let r = red.r;
    let nu = &red.nu;
    let mu = |i: usize, j: usize| &nu[(i, j)] - &nu[(j, j)];
    let mut rows = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            let mut row = vec![Rational::zero(); r];
            row[i] = mu(i, j);
            row[j] = mu(j, i);
            rows.push(row);
        }
    }
    let system = RatMatrix::from_rows_with_cols(rows, r).expect("rows have r entries");
    let kernel = mat_kernel(&system);
    let status = if r >= 3 && kernel.is_empty() {
        ObstructionStatus::NoMultiplier
    } else if r == 2 && kernel.len() == 1 {
        let mut a = kernel[0].clone();
        normalize_leading(&mut a);
        ObstructionStatus::UniqueCandidate(a)
    } else {
        ObstructionStatus::Undecided
    };
    Obstruction {
        status,
        system,
        kernel,
    }
}
