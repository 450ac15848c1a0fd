//! Exact two-phase simplex over `{x >= 0, A x = b}` with Bland's rule.

use num_traits::{One, Signed, Zero};

use super::matrix::RatMatrix;
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal {
        value: Rational,
        point: Vec<Rational>,
    },
    Unbounded,
    Infeasible,
}

impl LpOutcome {
    pub fn is_feasible(&self) -> bool {
        !matches!(self, LpOutcome::Infeasible)
    }
}

struct Tableau {
    /// `m` constraint rows, each `width` coefficients followed by the rhs.
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    width: usize,
}

enum Phase {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for x in self.rows[r].iter_mut() {
            *x = &*x / &p;
        }
        let prow = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        self.basis[r] = c;
    }

    fn rhs(&self, r: usize) -> &Rational {
        &self.rows[r][self.width]
    }

    /// Maximizes `cost . x` over columns `< allowed`, starting from the
    /// current (feasible) basis.
    fn optimize(&mut self, cost: &[Rational], allowed: usize) -> Phase {
        loop {
            let entering = (0..allowed).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let mut d = cost[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !self.rows[i][j].is_zero() && !cost[b].is_zero() {
                        d -= &cost[b] * &self.rows[i][j];
                    }
                }
                d.is_positive()
            });
            let Some(c) = entering else {
                return Phase::Optimal;
            };
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &best {
                    None => true,
                    Some((bi, br)) => {
                        ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi])
                    }
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            let Some((r, _)) = best else {
                return Phase::Unbounded;
            };
            self.pivot(r, c);
        }
    }
}

/// Maximizes `c . x` subject to `a x = b`, `x >= 0`, exactly.
pub fn lp_max(c: &[Rational], a: &RatMatrix, b: &[Rational]) -> Result<LpOutcome> {
    let n = a.cols();
    let m = a.rows();
    if c.len() != n || b.len() != m {
        return Err(Error::DimensionMismatch(format!(
            "lp with {m}x{n} constraints, cost of length {}, rhs of length {}",
            c.len(),
            b.len()
        )));
    }
    // Phase one: artificial column n + i for row i.
    let width = n + m;
    let mut rows = Vec::with_capacity(m);
    for i in 0..m {
        let neg = b[i].is_negative();
        let mut row = vec![Rational::zero(); width + 1];
        for j in 0..n {
            row[j] = if neg { -&a[(i, j)] } else { a[(i, j)].clone() };
        }
        row[n + i] = Rational::one();
        row[width] = if neg { -&b[i] } else { b[i].clone() };
        rows.push(row);
    }
    let mut t = Tableau {
        rows,
        basis: (n..n + m).collect(),
        width,
    };
    let mut phase1 = vec![Rational::zero(); width];
    for x in phase1.iter_mut().skip(n) {
        *x = -Rational::one();
    }
    t.optimize(&phase1, width);
    let infeasibility: Rational = (0..m)
        .filter(|&i| t.basis[i] >= n)
        .map(|i| t.rhs(i).clone())
        .sum();
    if infeasibility.is_positive() {
        return Ok(LpOutcome::Infeasible);
    }
    // Drive remaining artificials out of the basis, dropping redundant rows.
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= n {
            match (0..n).find(|&j| !t.rows[i][j].is_zero()) {
                Some(j) => {
                    t.pivot(i, j);
                    i += 1;
                }
                None => {
                    t.rows.remove(i);
                    t.basis.remove(i);
                }
            }
        } else {
            i += 1;
        }
    }
    let mut cost = c.to_vec();
    cost.resize(width, Rational::zero());
    match t.optimize(&cost, n) {
        Phase::Unbounded => Ok(LpOutcome::Unbounded),
        Phase::Optimal => {
            let mut point = vec![Rational::zero(); n];
            for (i, &bv) in t.basis.iter().enumerate() {
                point[bv] = t.rhs(i).clone();
            }
            let value = c
                .iter()
                .zip(&point)
                .filter(|(x, y)| !x.is_zero() && !y.is_zero())
                .map(|(x, y)| x * y)
                .sum();
            Ok(LpOutcome::Optimal { value, point })
        }
    }
}
