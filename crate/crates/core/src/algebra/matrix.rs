//! Exact matrices and fraction-free determinants.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use super::LaurentPolynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("fraction-free elimination hit an inexact division")]
    InexactDivision,
}

/// An integral domain whose divisions can be checked for exactness.
pub trait ExactDomain: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / divisor` when exact, `None` otherwise.
    fn div_exact(&self, divisor: &Self) -> Option<Self>;
}

impl ExactDomain for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if Zero::is_zero(divisor) {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        Zero::is_zero(&r).then_some(q)
    }
}

impl ExactDomain for LaurentPolynomial {
    fn zero() -> Self {
        LaurentPolynomial::zero()
    }

    fn one() -> Self {
        LaurentPolynomial::one()
    }

    fn is_zero(&self) -> bool {
        LaurentPolynomial::is_zero(self)
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn neg(&self) -> Self {
        -self.clone()
    }

    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        self.exact_div(divisor)
    }
}

/// Determinant by Bareiss fraction-free elimination with row pivoting.
///
/// Every intermediate entry is a minor of the input, so each division by the
/// previous pivot is exact over an integral domain.
pub fn bareiss_determinant<T: ExactDomain>(mut rows: Vec<Vec<T>>) -> Result<T, AlgebraError> {
    let n = rows.len();
    if let Some(bad) = rows.iter().find(|r| r.len() != n) {
        return Err(AlgebraError::NotSquare {
            rows: n,
            cols: bad.len(),
        });
    }
    if n == 0 {
        return Ok(T::one());
    }
    let mut negate = false;
    let mut previous = T::one();
    for k in 0..n - 1 {
        if rows[k][k].is_zero() {
            match (k + 1..n).find(|&r| !rows[r][k].is_zero()) {
                Some(r) => {
                    rows.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(T::zero()),
            }
        }
        let (top, bottom) = rows.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in bottom.iter_mut() {
            for j in k + 1..n {
                let cross = row[j].mul(&pivot_row[k]).sub(&row[k].mul(&pivot_row[j]));
                row[j] = cross
                    .div_exact(&previous)
                    .ok_or(AlgebraError::InexactDivision)?;
            }
            row[k] = T::zero();
        }
        previous = rows[k][k].clone();
    }
    let det = rows[n - 1][n - 1].clone();
    Ok(if negate { det.neg() } else { det })
}

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            entries: vec![BigInt::default(); rows * cols],
        }
    }

    pub fn from_rows<C: Into<BigInt> + Clone>(rows: &[Vec<C>]) -> Result<Self, AlgebraError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(AlgebraError::DimensionMismatch("ragged rows".into()));
        }
        Ok(IntegerMatrix {
            rows: rows.len(),
            cols,
            entries: rows.iter().flatten().cloned().map(Into::into).collect(),
        })
    }

    pub fn row_count(&self) -> usize {
        self.rows
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: impl Into<BigInt>) {
        self.entries[r * self.cols + c] = value.into();
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        if self.cols == 0 {
            return vec![Vec::new(); self.rows];
        }
        self.entries
            .chunks(self.cols)
            .map(<[BigInt]>::to_vec)
            .collect()
    }

    pub fn transpose(&self) -> IntegerMatrix {
        let mut out = IntegerMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn add(&self, rhs: &IntegerMatrix) -> Result<IntegerMatrix, AlgebraError> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(AlgebraError::DimensionMismatch(format!(
                "{}x{} + {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(IntegerMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && *self == self.transpose()
    }

    pub fn determinant(&self) -> Result<BigInt, AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        bareiss_determinant(self.to_rows())
    }
}

/// Integer row lists, one row per line: `[a, b, c]`.
impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_rows() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Square matrix over `Z[t, t⁻¹]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentMatrix {
    size: usize,
    entries: Vec<LaurentPolynomial>,
}

impl LaurentMatrix {
    pub fn identity(size: usize) -> Self {
        let mut entries = vec![LaurentPolynomial::zero(); size * size];
        for k in 0..size {
            entries[k * size + k] = LaurentPolynomial::one();
        }
        LaurentMatrix { size, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, r: usize, c: usize) -> &LaurentPolynomial {
        &self.entries[r * self.size + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: LaurentPolynomial) {
        self.entries[r * self.size + c] = value;
    }

    pub fn to_rows(&self) -> Vec<Vec<LaurentPolynomial>> {
        if self.size == 0 {
            return Vec::new();
        }
        self.entries
            .chunks(self.size)
            .map(<[LaurentPolynomial]>::to_vec)
            .collect()
    }

    pub fn mul(&self, rhs: &LaurentMatrix) -> Result<LaurentMatrix, AlgebraError> {
        if self.size != rhs.size {
            return Err(AlgebraError::DimensionMismatch(format!(
                "{0}x{0} * {1}x{1}",
                self.size, rhs.size
            )));
        }
        let n = self.size;
        let mut out = LaurentMatrix {
            size: n,
            entries: vec![LaurentPolynomial::zero(); n * n],
        };
        for r in 0..n {
            for c in 0..n {
                let mut acc = LaurentPolynomial::zero();
                for k in 0..n {
                    acc = &acc + &(self.get(r, k) * rhs.get(k, c));
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    /// `I - self`.
    pub fn identity_minus(&self) -> LaurentMatrix {
        let mut out = self.clone();
        for r in 0..self.size {
            for c in 0..self.size {
                let diag = if r == c {
                    LaurentPolynomial::one()
                } else {
                    LaurentPolynomial::zero()
                };
                out.set(r, c, &diag - self.get(r, c));
            }
        }
        out
    }

    pub fn determinant(&self) -> Result<LaurentPolynomial, AlgebraError> {
        bareiss_determinant(self.to_rows())
    }
}
