//! Minimal nonnegative integer solutions of homogeneous linear systems.
//!
//! Completion search in the style of Contejean and Devie: candidates grow
//! one unit vector at a time, and `v` is only extended by `e_i` when the
//! image of `e_i` points back towards the kernel (`<Av, Ae_i> < 0`).
//! Candidates dominating a known solution are discarded. Only the Gram
//! matrix of the column images is needed, so the search runs on `i128`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::field::MultiIndex;
use crate::linalg::{lcm_denominators, Rational};

/// Result of a bounded completion search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalSolutions {
    /// Minimal nonzero solutions found, graded-lex ordered.
    pub solutions: Vec<MultiIndex>,
    /// False when the degree cap stopped the search with candidates left.
    pub complete: bool,
}

/// Gram matrix of the column images after clearing denominators
/// coordinatewise (a positive rescaling of each coordinate, which leaves
/// the solution set unchanged).
pub(crate) fn gram(images: &[Vec<Rational>]) -> Result<Vec<Vec<i128>>> {
    let q = images.first().map_or(0, Vec::len);
    let scales: Vec<BigInt> = (0..q)
        .map(|k| lcm_denominators(images.iter().map(|v| &v[k])))
        .collect();
    let ints: Vec<Vec<BigInt>> = images
        .iter()
        .map(|v| {
            v.iter()
                .zip(&scales)
                .map(|(x, s)| (x * Rational::from_integer(s.clone())).to_integer())
                .collect()
        })
        .collect();
    let n = images.len();
    let mut g = vec![vec![0i128; n]; n];
    for a in 0..n {
        for b in 0..n {
            let dot: BigInt = ints[a].iter().zip(&ints[b]).map(|(x, y)| x * y).sum();
            g[a][b] = dot
                .to_i128()
                .ok_or_else(|| Error::InvalidArgument("eigenvalue coordinates too large".into()))?;
        }
    }
    Ok(g)
}

/// Options restricting the search.
pub(crate) struct SearchLimits<'a> {
    /// Largest total degree explored.
    pub cap: u32,
    /// Optional per-variable upper bounds.
    pub upper: &'a [Option<u32>],
    /// Stop as soon as a solution satisfying this predicate appears.
    pub stop_on: Option<&'a dyn Fn(&MultiIndex) -> bool>,
}

pub(crate) fn minimal_solutions_gram(g: &[Vec<i128>], limits: &SearchLimits) -> MinimalSolutions {
    let n = g.len();
    let allowed = |v: &MultiIndex, i: usize| {
        limits
            .upper
            .get(i)
            .copied()
            .flatten()
            .is_none_or(|u| v.get(i) < u)
    };
    let mut found: Vec<MultiIndex> = Vec::new();
    let mut level: BTreeSet<MultiIndex> = (0..n)
        .map(|i| MultiIndex::unit(n, i))
        .filter(|v| {
            (0..n).all(|i| {
                limits
                    .upper
                    .get(i)
                    .copied()
                    .flatten()
                    .is_none_or(|u| v.get(i) <= u)
            })
        })
        .collect();
    let mut degree = 1;
    while !level.is_empty() {
        if degree > limits.cap {
            found.sort();
            return MinimalSolutions {
                solutions: found,
                complete: false,
            };
        }
        let dots = |v: &MultiIndex| -> Vec<i128> {
            (0..n)
                .map(|i| (0..n).map(|k| v.get(k) as i128 * g[k][i]).sum())
                .collect()
        };
        let mut pending = Vec::new();
        for v in &level {
            let d = dots(v);
            let norm: i128 = (0..n).map(|i| v.get(i) as i128 * d[i]).sum();
            if norm == 0 {
                found.push(v.clone());
                if let Some(stop) = limits.stop_on {
                    if stop(v) {
                        found.sort();
                        return MinimalSolutions {
                            solutions: found,
                            complete: true,
                        };
                    }
                }
            } else {
                pending.push((v.clone(), d));
            }
        }
        let mut next = BTreeSet::new();
        for (v, d) in pending {
            for i in 0..n {
                if d[i] < 0 && allowed(&v, i) {
                    let w = v.increment(i);
                    if !found.iter().any(|b| w.dominates(b)) {
                        next.insert(w);
                    }
                }
            }
        }
        level = next;
        degree += 1;
    }
    found.sort();
    MinimalSolutions {
        solutions: found,
        complete: true,
    }
}

/// Minimal nonzero `d >= 0` with `sum_i d_i images[i] = 0`.
pub fn minimal_solutions(images: &[Vec<Rational>], cap: u32) -> Result<MinimalSolutions> {
    let g = gram(images)?;
    Ok(minimal_solutions_gram(
        &g,
        &SearchLimits {
            cap,
            upper: &[],
            stop_on: None,
        },
    ))
}

/// Outcome of a nonnegative integer feasibility search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntegerSearch {
    Found(Vec<u32>),
    None,
    CapReached,
}

/// Looks for `m >= 0` with `sum_i m_i images[i] = target` and `m_i = 0`
/// for every excluded index, by homogenizing with an extra variable `t`
/// of image `-target` restricted to `t <= 1`. Any solution with `t = 1`
/// splits off a minimal one with `t = 1`, so the search is complete
/// whenever it terminates below the cap.
pub fn integer_solution(
    images: &[Vec<Rational>],
    target: &[Rational],
    excluded: &[usize],
    cap: u32,
) -> Result<IntegerSearch> {
    let vars: Vec<usize> = (0..images.len())
        .filter(|i| !excluded.contains(i))
        .collect();
    let mut cols: Vec<Vec<Rational>> = vars.iter().map(|&i| images[i].clone()).collect();
    cols.push(target.iter().map(|x| -x).collect());
    let t = vars.len();
    let g = gram(&cols)?;
    let mut upper = vec![None; t + 1];
    upper[t] = Some(1);
    let stop = move |v: &MultiIndex| v.get(t) == 1;
    let res = minimal_solutions_gram(
        &g,
        &SearchLimits {
            cap: cap.saturating_add(1),
            upper: &upper,
            stop_on: Some(&stop),
        },
    );
    if let Some(sol) = res.solutions.iter().find(|v| v.get(t) == 1) {
        let mut m = vec![0u32; images.len()];
        for (k, &i) in vars.iter().enumerate() {
            m[i] = sol.get(k);
        }
        return Ok(IntegerSearch::Found(m));
    }
    Ok(if res.complete {
        IntegerSearch::None
    } else {
        IntegerSearch::CapReached
    })
}
