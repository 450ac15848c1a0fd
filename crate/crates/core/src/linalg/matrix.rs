//! Dense rational matrices with fraction-free elimination.
//!
//! Rows are cleared of denominators and reduced with Bareiss' one-step
//! fraction-free scheme over `BigInt`, so every intermediate entry is an
//! exact minor of the input. Kernel bases come out in reduced echelon form:
//! one vector per free column, in increasing column order, with that free
//! coordinate equal to one and every other free coordinate zero.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::rational::{clear_denominators, Rational};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::from_integer(1.into());
        }
        m
    }

    /// Builds a matrix from row vectors; all rows must share one length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows_with_cols(rows, cols)
    }

    /// Like [`RatMatrix::from_rows`] but fixes the column count, so an
    /// empty row list still has a shape.
    pub fn from_rows_with_cols(rows: Vec<Vec<Rational>>, cols: usize) -> Result<Self> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has length {}, expected {cols}",
                    r.len()
                )));
            }
            data.extend(r);
        }
        Ok(RatMatrix {
            rows: nrows,
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("matrix shapes differ".into()));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Ok(RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        &mut self.data[r * self.cols + c]
    }
}

/// Integer row echelon form produced by Bareiss elimination.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

fn bareiss(m: &RatMatrix) -> Echelon {
    let mut a: Vec<Vec<BigInt>> = (0..m.rows())
        .map(|r| clear_denominators(m.row(r)))
        .collect();
    let nrows = a.len();
    let ncols = m.cols();
    let mut pivots = Vec::new();
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in (r + 1)..nrows {
            if a[i][c].is_zero() {
                // Entries still need the scaling so later divisions stay exact.
                for j in (c + 1)..ncols {
                    if !a[i][j].is_zero() {
                        a[i][j] = &a[r][c] * &a[i][j] / &prev;
                    }
                }
                continue;
            }
            for j in (c + 1)..ncols {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    a.truncate(pivots.len());
    Echelon { rows: a, pivots }
}

/// Back substitution on an echelon form with a prescribed set of values.
/// `x` holds the free coordinates on entry; `rhs` is the right-hand side.
fn back_substitute(e: &Echelon, x: &mut [Rational], rhs: &[BigInt]) {
    for (k, &p) in e.pivots.iter().enumerate().rev() {
        let row = &e.rows[k];
        let mut acc = Rational::from_integer(rhs[k].clone());
        for (j, xj) in x.iter().enumerate().skip(p + 1) {
            if !row[j].is_zero() && !xj.is_zero() {
                acc -= Rational::from_integer(row[j].clone()) * xj;
            }
        }
        x[p] = acc / Rational::from_integer(row[p].clone());
    }
}

pub fn mat_rank(m: &RatMatrix) -> usize {
    bareiss(m).pivots.len()
}

/// Basis of `{x : m x = 0}` in reduced echelon order.
pub fn mat_kernel(m: &RatMatrix) -> Vec<Vec<Rational>> {
    let e = bareiss(m);
    let n = m.cols();
    let mut is_pivot = vec![false; n];
    for &p in &e.pivots {
        is_pivot[p] = true;
    }
    let zeros = vec![BigInt::zero(); e.pivots.len()];
    (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut x = vec![Rational::zero(); n];
            x[f] = Rational::from_integer(1.into());
            back_substitute(&e, &mut x, &zeros);
            x
        })
        .collect()
}

/// Affine solution set `particular + span(kernel)` of `m x = b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSpace {
    pub particular: Vec<Rational>,
    pub kernel: Vec<Vec<Rational>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Solved(SolutionSpace),
    Inconsistent,
}

pub fn mat_solve(m: &RatMatrix, b: &[Rational]) -> Result<SolveOutcome> {
    if b.len() != m.rows() {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side of length {} against {} rows",
            b.len(),
            m.rows()
        )));
    }
    let n = m.cols();
    let mut aug = RatMatrix::zeros(m.rows(), n + 1);
    for r in 0..m.rows() {
        for c in 0..n {
            aug[(r, c)] = m[(r, c)].clone();
        }
        aug[(r, n)] = b[r].clone();
    }
    let mut e = bareiss(&aug);
    if e.pivots.last() == Some(&n) {
        return Ok(SolveOutcome::Inconsistent);
    }
    let rhs: Vec<BigInt> = e.rows.iter().map(|row| row[n].clone()).collect();
    for row in &mut e.rows {
        row.truncate(n);
    }
    let mut particular = vec![Rational::zero(); n];
    back_substitute(&e, &mut particular, &rhs);
    Ok(SolveOutcome::Solved(SolutionSpace {
        particular,
        kernel: mat_kernel(m),
    }))
}

/// True when some vector of the span has a nonzero coordinate in `coords`.
pub fn span_touches(basis: &[Vec<Rational>], coords: &[usize]) -> bool {
    basis
        .iter()
        .any(|v| coords.iter().any(|&c| !v[c].is_zero()))
}

/// Rank of the projection of a span onto the given coordinates.
pub fn projected_rank(basis: &[Vec<Rational>], coords: &[usize]) -> usize {
    let rows: Vec<Vec<Rational>> = basis
        .iter()
        .map(|v| coords.iter().map(|&c| v[c].clone()).collect())
        .collect();
    match RatMatrix::from_rows_with_cols(rows, coords.len()) {
        Ok(m) => mat_rank(&m),
        Err(_) => 0,
    }
}

/// True when `v` lies in the span of `basis`.
pub fn in_span(basis: &[Vec<Rational>], v: &[Rational]) -> bool {
    if v.iter().all(Zero::is_zero) {
        return true;
    }
    let dim = v.len();
    let mut rows: Vec<Vec<Rational>> = basis.to_vec();
    let Ok(m) = RatMatrix::from_rows_with_cols(rows.clone(), dim) else {
        return false;
    };
    let r0 = mat_rank(&m);
    rows.push(v.to_vec());
    match RatMatrix::from_rows_with_cols(rows, dim) {
        Ok(m2) => mat_rank(&m2) == r0,
        Err(_) => false,
    }
}

/// Scales a vector so its first nonzero entry is one.
pub fn normalize_leading(v: &mut [Rational]) {
    if let Some(lead) = v.iter().find(|x| !x.is_zero()).cloned() {
        for x in v.iter_mut() {
            *x = &*x / &lead;
        }
    }
}

/// Scales a rational vector to a primitive integer vector with positive
/// leading entry.
pub fn primitive_integer(v: &[Rational]) -> Vec<BigInt> {
    use num_integer::Integer;
    let ints = clear_denominators(v);
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let sign = ints
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative());
    ints.into_iter()
        .map(|x| {
            let y = x / &g;
            if sign {
                -y
            } else {
                y
            }
        })
        .collect()
}
