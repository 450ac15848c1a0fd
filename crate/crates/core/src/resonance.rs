//! Resonances of a spectrum, resonance degree bounds and the degree
//! ladders constraining semi-invariants and commuting fields of
//! homogeneous quadratic systems.

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::MultiIndex;
use crate::linalg::{floor_rational, lp_max, rat, LpOutcome, RatMatrix, Rational};
use crate::spectrum::{is_finite_linear_centralizer, EigenSpectrum};

/// Exponents `m` of degree `d` with `<m, lambda> = target`, in graded-lex
/// order. Coordinates whose column in `Lambda` has a uniform sign prune
/// partial sums that overshoot the target.
pub fn multiindices_with_pairing(
    s: &EigenSpectrum,
    target: &[Rational],
    d: u32,
) -> Vec<MultiIndex> {
    let n = s.n();
    let q = s.q();
    // sign[k] = 1 if column k is nonnegative, -1 if nonpositive, 0 otherwise
    let sign: Vec<i8> = (0..q)
        .map(|k| {
            let col = (0..n).map(|i| &s.row(i)[k]);
            if col.clone().all(|x| !x.is_negative()) {
                1
            } else if col.clone().all(|x| !x.is_positive()) {
                -1
            } else {
                0
            }
        })
        .collect();
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    let mut partial = vec![Rational::zero(); q];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        i: usize,
        left: u32,
        s: &EigenSpectrum,
        target: &[Rational],
        sign: &[i8],
        cur: &mut Vec<u32>,
        partial: &mut Vec<Rational>,
        out: &mut Vec<MultiIndex>,
    ) {
        let n = cur.len();
        let overshoot = partial
            .iter()
            .zip(target)
            .zip(sign)
            .any(|((p, t), &sg)| (sg == 1 && p > t) || (sg == -1 && p < t));
        if overshoot {
            return;
        }
        if i == n {
            if left == 0 && partial.as_slice() == target {
                out.push(MultiIndex::new(cur.clone()));
            }
            return;
        }
        if n == 0 {
            return;
        }
        let range: Box<dyn Iterator<Item = u32>> = if i + 1 == n {
            Box::new(std::iter::once(left))
        } else {
            Box::new((0..=left).rev())
        };
        for a in range {
            cur[i] = a;
            let k = rat(a as i64);
            for (p, l) in partial.iter_mut().zip(s.row(i)) {
                *p += &k * l;
            }
            rec(i + 1, left - a, s, target, sign, cur, partial, out);
            for (p, l) in partial.iter_mut().zip(s.row(i)) {
                *p -= &k * l;
            }
        }
        cur[i] = 0;
    }
    if n == 0 {
        if d == 0 && target.iter().all(Zero::is_zero) {
            out.push(MultiIndex::new(Vec::new()));
        }
        return out;
    }
    rec(0, d, s, target, &sign, &mut cur, &mut partial, &mut out);
    out
}

/// Resonant exponents for component `j` (zero-based) of degree `d`.
pub fn resonant_multiindices(s: &EigenSpectrum, j: usize, d: u32) -> Vec<MultiIndex> {
    multiindices_with_pairing(s, s.row(j), d)
}

/// Largest degree of a resonance `<m, lambda> = lambda_j`, `m >= 0`, over
/// all `j`: the floor of the LP maximum of `|m|`. Only defined when the
/// resonance set is finite.
pub fn resonance_degree_bound(s: &EigenSpectrum) -> Result<u32> {
    if !is_finite_linear_centralizer(s)? {
        return Err(Error::InfiniteResonance);
    }
    let n = s.n();
    let a = RatMatrix::from_rows_with_cols(
        (0..s.q())
            .map(|k| (0..n).map(|i| s.row(i)[k].clone()).collect())
            .collect(),
        n,
    )?;
    let c = vec![Rational::one(); n];
    let mut best = 1u32;
    for j in 0..n {
        match lp_max(&c, &a, s.row(j))? {
            LpOutcome::Optimal { value, .. } => {
                let v = floor_rational(&value)
                    .to_u32()
                    .ok_or_else(|| Error::InvalidArgument("degree bound too large".into()))?;
                best = best.max(v);
            }
            LpOutcome::Unbounded => return Err(Error::InfiniteResonance),
            LpOutcome::Infeasible => unreachable!("m = e_j is feasible"),
        }
    }
    Ok(best)
}

/// Nonlinear resonances `R_j = {m : |m| >= 2, <m, lambda> = lambda_j}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResonanceSet {
    pub finite: bool,
    /// Resonance degree bound when the set is finite.
    pub degree_bound: Option<u32>,
    /// Degree cap used to list an infinite set.
    pub cap: Option<u32>,
    /// Per component (zero-based), graded-lex ordered.
    pub per_component: Vec<Vec<MultiIndex>>,
}

impl ResonanceSet {
    /// Total count of listed resonances.
    pub fn count(&self) -> usize {
        self.per_component.iter().map(Vec::len).sum()
    }

    /// `(j, m)` pairs, component by component.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, &MultiIndex)> {
        self.per_component
            .iter()
            .enumerate()
            .flat_map(|(j, ms)| ms.iter().map(move |m| (j, m)))
    }
}

/// Lists the nonlinear resonances. A finite set is listed completely up to
/// its degree bound (a cap, if given, is ignored); an infinite set needs
/// an explicit cap.
pub fn resonance_set(s: &EigenSpectrum, cap: Option<u32>) -> Result<ResonanceSet> {
    let finite = is_finite_linear_centralizer(s)?;
    let (top, degree_bound, cap) = if finite {
        let b = resonance_degree_bound(s)?;
        (b, Some(b), None)
    } else {
        let c = cap.ok_or(Error::InfiniteResonanceWithoutCap)?;
        (c, None, Some(c))
    };
    let per_component = (0..s.n())
        .map(|j| {
            (2..=top)
                .flat_map(|d| resonant_multiindices(s, j, d))
                .collect()
        })
        .collect();
    Ok(ResonanceSet {
        finite,
        degree_bound,
        cap,
        per_component,
    })
}

/// One solution of the semi-invariant ladder: degree `s`, the power `k`
/// of the linear factor and the exponents `k_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LadderSolution {
    pub s: u32,
    pub k: u32,
    pub ks: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiInvariantLadder {
    pub solutions: Vec<LadderSolution>,
    /// Largest degree examined.
    pub searched_to: u32,
    /// True when positivity of the eigenvalues bounds every solution, so
    /// the list is exhaustive.
    pub complete: bool,
}

fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    crate::field::monomials_of_degree(parts, total)
        .into_iter()
        .map(MultiIndex::into_vec)
        .collect()
}

fn dot(ks: &[u32], mu: &[Rational]) -> Rational {
    ks.iter()
        .zip(mu)
        .filter(|(k, _)| **k != 0)
        .map(|(k, m)| rat(*k as i64) * m)
        .sum()
}

/// `min(1, min mu)` when every `mu_i > 0`.
fn positive_floor(mu: &[Rational]) -> Option<Rational> {
    if mu.iter().all(Signed::is_positive) {
        Some(
            mu.iter()
                .fold(Rational::one(), |a, m| if *m < a { m.clone() } else { a }),
        )
    } else {
        None
    }
}

/// Degrees `2 <= s` admitting `k + sum k_i = s` and
/// `k + sum k_i mu_i = cofactor` with nonnegative integers. When every
/// `mu_i > 0` the degree is bounded by `cofactor / min(1, min mu)` and the
/// answer is complete; otherwise the search stops at `cap`.
pub fn semiinvariant_degree_ladder(
    mu: &[Rational],
    cofactor: &Rational,
    cap: u32,
) -> SemiInvariantLadder {
    let (top, complete) = match positive_floor(mu) {
        Some(m) => {
            let b = floor_rational(&(cofactor / m));
            (b.to_u32().unwrap_or(0).max(1), true)
        }
        None => (cap, false),
    };
    let mut solutions = Vec::new();
    for s in 2..=top {
        for k in (0..=s).rev() {
            for ks in compositions(s - k, mu.len()) {
                if rat(k as i64) + dot(&ks, mu) == *cofactor {
                    solutions.push(LadderSolution { s, k, ks });
                }
            }
        }
    }
    SemiInvariantLadder {
        solutions,
        searched_to: top,
        complete,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutingLadder {
    /// Feasible degrees `s > 1`.
    pub degrees: Vec<u32>,
    pub searched_to: u32,
    pub complete: bool,
}

/// Degrees `1 < s` for which `l + sum l_i = s` and
/// `l + sum l_i mu_i = mu_k` has a nonnegative integer solution for some
/// `k`. With every `mu_i > 0`, `s <= max mu / min(1, min mu)` and the list
/// is complete.
pub fn commuting_degree_ladder(mu: &[Rational], cap: u32) -> CommutingLadder {
    let (top, complete) = match positive_floor(mu) {
        Some(m) => {
            let mx = mu.iter().max().cloned().unwrap_or_else(Rational::zero);
            (floor_rational(&(mx / m)).to_u32().unwrap_or(0).max(1), true)
        }
        None => (cap, false),
    };
    let mut degrees = Vec::new();
    for s in 2..=top {
        let feasible = (0..=s).any(|l| {
            compositions(s - l, mu.len())
                .iter()
                .any(|ls| mu.iter().any(|mk| rat(l as i64) + dot(ls, mu) == *mk))
        });
        if feasible {
            degrees.push(s);
        }
    }
    CommutingLadder {
        degrees,
        searched_to: top,
        complete,
    }
}
