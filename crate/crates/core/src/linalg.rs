//! Exact integer and rational matrices.
//!
//! Everything here is arbitrary precision. Walk-matrix entries grow like
//! `d^(n-1)`, so fixed-width integers are not an option even for modest `n`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

fn check_dims(rows: usize, cols: usize) {
    assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
}

impl IntMatrix {
    pub fn from_fn<T: Into<BigInt>>(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        check_dims(rows, cols);
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols).into()).collect();
        IntMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 || rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged or empty row list".into()));
        }
        Ok(Self::from_fn(r, c, |i, j| rows[i][j]))
    }

    /// Column matrix from a vector.
    pub fn column(v: &[BigInt]) -> Self {
        check_dims(v.len(), 1);
        IntMatrix { rows: v.len(), cols: 1, data: v.to_vec() }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| i64::from(i == j))
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

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = BigInt::zero();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    if !a.is_zero() {
                        acc += a * other.get(k, j);
                    }
                }
                data.push(acc);
            }
        }
        Ok(IntMatrix { rows: self.rows, cols: other.cols, data })
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if self.cols != v.len() {
            return Err(Error::Dimension(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    pub fn pow(&self, mut e: u32) -> Result<IntMatrix> {
        if !self.is_square() {
            return Err(Error::Dimension("power of a non-square matrix".into()));
        }
        let mut base = self.clone();
        let mut acc = IntMatrix::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn trace(&self) -> BigInt {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    /// Fraction-free (Bareiss) elimination. Every intermediate division is exact.
    pub fn det(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::Dimension("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut m = self.data.clone();
        let mut sign = false;
        let mut prev = BigInt::one();
        for k in 0..n {
            if m[k * n + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !m[r * n + k].is_zero()) else {
                    return Ok(BigInt::zero());
                };
                for j in 0..n {
                    m.swap(k * n + j, p * n + j);
                }
                sign = !sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[i * n + j] * &m[k * n + k] - &m[i * n + k] * &m[k * n + j];
                    m[i * n + j] = v / &prev;
                }
            }
            prev = m[k * n + k].clone();
        }
        let d = m[n * n - 1].clone();
        Ok(if sign { -d } else { d })
    }

    /// Faddeev–LeVerrier: `M_0 = 0`, `M_k = A M_{k-1} + c_{k-1} I`,
    /// `c_k = -tr(A M_k) / k`, where `det(xI - A) = Σ c_k x^(n-k)`.
    pub fn char_poly(&self) -> Result<CharPoly> {
        if !self.is_square() {
            return Err(Error::Dimension("characteristic polynomial of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut coeffs = vec![BigInt::one()];
        let mut m = IntMatrix { rows: n, cols: n, data: vec![BigInt::zero(); n * n] };
        for k in 1..=n {
            let mut next = self.mul(&m)?;
            let c_prev = &coeffs[k - 1];
            for i in 0..n {
                next.data[i * n + i] += c_prev;
            }
            let am = self.mul(&next)?;
            let (q, r) = am.trace().div_rem(&BigInt::from(k));
            if !r.is_zero() {
                return Err(Error::Internal("inexact Faddeev-LeVerrier division".into()));
            }
            coeffs.push(-q);
            m = next;
        }
        Ok(CharPoly { coeffs })
    }

    /// Exact inverse by Gauss–Jordan elimination over the rationals.
    pub fn rat_inverse(&self) -> Result<RatMatrix> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let w = 2 * n;
        let mut m: Vec<BigRational> = Vec::with_capacity(n * w);
        for i in 0..n {
            for j in 0..n {
                m.push(BigRational::from_integer(self.get(i, j).clone()));
            }
            for j in 0..n {
                m.push(if i == j { BigRational::one() } else { BigRational::zero() });
            }
        }
        for col in 0..n {
            let piv = (col..n).find(|&r| !m[r * w + col].is_zero()).ok_or(Error::Singular)?;
            if piv != col {
                for j in 0..w {
                    m.swap(piv * w + j, col * w + j);
                }
            }
            let inv = m[col * w + col].recip();
            for j in col..w {
                m[col * w + j] *= &inv;
            }
            for r in 0..n {
                if r == col || m[r * w + col].is_zero() {
                    continue;
                }
                let f = m[r * w + col].clone();
                for j in col..w {
                    let delta = &f * &m[col * w + j];
                    m[r * w + j] -= delta;
                }
            }
        }
        let data = (0..n)
            .flat_map(|i| m[i * w + n..(i + 1) * w].to_vec())
            .collect();
        Ok(RatMatrix { rows: n, cols: n, data })
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().cloned().map(BigRational::from_integer).collect(),
        }
    }
}

/// `𝟏` of length `n`.
pub fn ones(n: usize) -> Vec<BigInt> {
    vec![BigInt::one(); n]
}

impl RatMatrix {
    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> BigRational) -> Self {
        check_dims(rows, cols);
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        RatMatrix { rows, cols, data }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { BigRational::one() } else { BigRational::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = BigRational::zero();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    if !a.is_zero() {
                        acc += a * other.get(k, j);
                    }
                }
                data.push(acc);
            }
        }
        Ok(RatMatrix { rows: self.rows, cols: other.cols, data })
    }

    pub fn row_sums(&self) -> Vec<BigRational> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j)).sum())
            .collect()
    }

    pub fn col_sums(&self) -> Vec<BigRational> {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.get(i, j)).sum())
            .collect()
    }

    /// Non-negative entries with all row and column sums equal to one.
    pub fn is_doubly_stochastic(&self) -> bool {
        let one = BigRational::one();
        self.data.iter().all(|x| !x.is_negative())
            && self.row_sums().iter().all(|s| *s == one)
            && self.col_sums().iter().all(|s| *s == one)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == RatMatrix::identity(self.rows)
    }

    /// If every entry is 0 or 1 with exactly one 1 per row and column,
    /// returns `perm` with `self[perm[j]][j] = 1`.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut perm = vec![usize::MAX; n];
        let mut row_hit = vec![false; n];
        for j in 0..n {
            for i in 0..n {
                let v = self.get(i, j);
                if v.is_one() {
                    if perm[j] != usize::MAX || row_hit[i] {
                        return None;
                    }
                    perm[j] = i;
                    row_hit[i] = true;
                } else if !v.is_zero() {
                    return None;
                }
            }
        }
        perm.iter().all(|&p| p != usize::MAX).then_some(perm)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Integer coefficients of `det(xI - A) = Σ_i coeffs[i] x^(n-i)`; `coeffs[0] = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    /// The characteristic polynomial of the 0x0 matrix.
    pub fn one() -> Self {
        CharPoly { coeffs: vec![BigInt::one()] }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// Whether `x^2 - c` divides the polynomial exactly.
    pub fn divisible_by_x2_minus(&self, c: &BigInt) -> bool {
        // synthetic division by a monic quadratic, highest degree first
        let mut rem: Vec<BigInt> = self.coeffs.clone();
        let len = rem.len();
        if len < 3 {
            return false;
        }
        for i in 0..len - 2 {
            let lead = rem[i].clone();
            if !lead.is_zero() {
                rem[i + 2] += &lead * c;
            }
        }
        rem[len - 2].is_zero() && rem[len - 1].is_zero()
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = n - i;
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            if !mag.is_one() || p == 0 {
                write!(f, "{mag}")?;
            }
            match p {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{p}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Serialize for CharPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(JsonInt))
    }
}

/// Serializes as a JSON number when it fits in `i64`, otherwise as a decimal string.
pub struct JsonInt<'a>(pub &'a BigInt);

impl Serialize for JsonInt<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}
