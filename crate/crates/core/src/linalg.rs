//! Dense rational matrices and fraction-free elimination.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{expect_dim, Error, Result};
use crate::exact::{zero_vector, Rational, Vector};

/// A linear map in coordinates. Column `j` is the image of the `j`-th basis
/// vector; storage is row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearMap {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl LinearMap {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        LinearMap {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| {
            if r == c {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        LinearMap {
            rows,
            cols,
            entries,
        }
    }

    /// Builds a `rows × cols` map from row vectors. A zero-row input needs the
    /// column count supplied separately, hence `cols`.
    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            expect_dim("matrix row length", cols, row.len())?;
            entries.extend(row);
        }
        Ok(LinearMap {
            rows: n,
            cols,
            entries,
        })
    }

    /// Builds a map from the images of the basis vectors.
    pub fn from_columns(columns: &[Vector], rows: usize) -> Result<Self> {
        for col in columns {
            expect_dim("matrix column length", rows, col.len())?;
        }
        Ok(Self::from_fn(rows, columns.len(), |r, c| {
            columns[c][r].clone()
        }))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn apply(&self, v: &[Rational]) -> Result<Vector> {
        expect_dim("linear map argument", self.cols, v.len())?;
        Ok(self.apply_unchecked(v))
    }

    pub(crate) fn apply_unchecked(&self, v: &[Rational]) -> Vector {
        let mut out = zero_vector(self.rows);
        for (c, vc) in v.iter().enumerate() {
            if vc.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let m = self.get(r, c);
                if !m.is_zero() {
                    *o += m * vc;
                }
            }
        }
        out
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        expect_dim("composition", self.cols, other.rows)?;
        Ok(self * other)
    }

    pub fn transpose(&self) -> LinearMap {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, a: &Rational) -> LinearMap {
        LinearMap {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| a * e).collect(),
        }
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        bareiss(integer_rows(self)).rank
    }

    pub fn determinant(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::input("determinant of a non-square matrix"));
        }
        let scaled = integer_rows(self);
        let mut denom = BigInt::one();
        for (factor, _) in &scaled {
            denom *= factor;
        }
        let elim = bareiss(scaled);
        if elim.rank < self.rows {
            return Ok(Rational::zero());
        }
        let mut det = elim.last_pivot;
        if elim.swaps % 2 == 1 {
            det = -det;
        }
        Ok(Rational::new(det, denom))
    }

    /// Whether `v` lies in the span of this map's columns.
    pub fn column_span_contains(&self, v: &[Rational]) -> Result<bool> {
        expect_dim("span membership", self.rows, v.len())?;
        let mut columns: Vec<Vector> = (0..self.cols).map(|c| self.column(c)).collect();
        let base = self.rank();
        columns.push(v.to_vec());
        let extended = LinearMap::from_columns(&columns, self.rows)?;
        Ok(extended.rank() == base)
    }
}

impl Mul<&LinearMap> for &LinearMap {
    type Output = LinearMap;

    fn mul(self, rhs: &LinearMap) -> LinearMap {
        assert_eq!(self.cols, rhs.rows, "matrix product shape");
        let mut out = LinearMap::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        out.entries[r * rhs.cols + c] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add<&LinearMap> for &LinearMap {
    type Output = LinearMap;

    fn add(self, rhs: &LinearMap) -> LinearMap {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum shape");
        LinearMap {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&LinearMap> for &LinearMap {
    type Output = LinearMap;

    fn sub(self, rhs: &LinearMap) -> LinearMap {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference shape");
        LinearMap {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &LinearMap {
    type Output = LinearMap;

    fn neg(self) -> LinearMap {
        LinearMap {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }
}

/// Linear combination `Σ coeffs[i] · family[i]` of equally shaped maps.
pub fn combine(family: &[LinearMap], coeffs: &[Rational], rows: usize, cols: usize) -> LinearMap {
    debug_assert_eq!(family.len(), coeffs.len());
    let mut out = LinearMap::zeros(rows, cols);
    for (m, c) in family.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for (o, e) in out.entries.iter_mut().zip(&m.entries) {
            if !e.is_zero() {
                *o += c * e;
            }
        }
    }
    out
}

// Each row is scaled to integers; the scale factor is kept for determinants.
fn integer_rows(m: &LinearMap) -> Vec<(BigInt, Vec<BigInt>)> {
    (0..m.rows)
        .map(|r| {
            let row = m.row(r);
            let lcm = row
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            let ints = row
                .iter()
                .map(|x| x.numer() * (&lcm / x.denom()))
                .collect();
            (lcm, ints)
        })
        .collect()
}

struct Elimination {
    rank: usize,
    swaps: usize,
    last_pivot: BigInt,
}

// Bareiss elimination: every intermediate entry is a minor of the input, so
// the division by the previous pivot is exact.
fn bareiss(rows: Vec<(BigInt, Vec<BigInt>)>) -> Elimination {
    let mut m: Vec<Vec<BigInt>> = rows.into_iter().map(|(_, r)| r).collect();
    let n_rows = m.len();
    let n_cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut swaps = 0;
    for col in 0..n_cols {
        if rank == n_rows {
            break;
        }
        let Some(pivot) = (rank..n_rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        if pivot != rank {
            m.swap(pivot, rank);
            swaps += 1;
        }
        for i in rank + 1..n_rows {
            for j in col + 1..n_cols {
                let v = &m[i][j] * &m[rank][col] - &m[i][col] * &m[rank][j];
                debug_assert!((&v % &prev).is_zero());
                m[i][j] = v / &prev;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    Elimination {
        rank,
        swaps,
        last_pivot: prev,
    }
}

/// `|det| == 1` for unimodular integer-valued forms.
pub fn is_unimodular(m: &LinearMap) -> Result<bool> {
    let det = m.determinant()?;
    Ok(det.abs().is_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};

    fn m(rows: &[&[i64]]) -> LinearMap {
        let cols = rows.first().map_or(0, |r| r.len());
        LinearMap::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect(),
            cols,
        )
        .unwrap()
    }

    #[test]
    fn rank_and_determinant_small_cases() {
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(m(&[&[0, 0], &[0, 0]]).rank(), 0);
        assert_eq!(m(&[&[0, 1], &[1, 0]]).determinant().unwrap(), rat(-1));
        assert_eq!(m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]).determinant().unwrap(), rat(18));
        assert_eq!(m(&[&[0, 1, 2], &[0, 2, 4], &[1, 0, 0]]).rank(), 2);
    }

    #[test]
    fn determinant_with_fractions() {
        let a = LinearMap::from_rows(
            vec![vec![ratio(1, 2), ratio(1, 3)], vec![ratio(1, 4), ratio(1, 5)]],
            2,
        )
        .unwrap();
        // 1/10 - 1/12 = 1/60
        assert_eq!(a.determinant().unwrap(), ratio(1, 60));
    }

    #[test]
    fn span_membership() {
        let basis = m(&[&[1, 0], &[1, 0], &[0, 1]]);
        assert!(basis.column_span_contains(&[rat(2), rat(2), rat(5)]).unwrap());
        assert!(!basis.column_span_contains(&[rat(1), rat(2), rat(0)]).unwrap());
    }

    #[test]
    fn composition_checks_shapes() {
        let a = LinearMap::zeros(2, 3);
        let b = LinearMap::zeros(2, 2);
        assert!(a.compose(&b).is_err());
        assert!(b.compose(&a).is_ok());
    }
}
