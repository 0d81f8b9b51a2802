//! Dense square matrices over a [`Scalar`].

use crate::scalar::{CxRational, Scalar};
use num_complex::Complex64;
use serde::Serialize;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    side: usize,
    data: Vec<T>,
}

pub type ExactMatrix = Matrix<CxRational>;
pub type FloatMatrix = Matrix<Complex64>;

impl<T: Scalar> Matrix<T> {
    pub fn zeros(side: usize) -> Self {
        Matrix { side, data: vec![T::zero(); side * side] }
    }

    pub fn identity(side: usize) -> Self {
        Self::from_fn(side, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn from_fn(side: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(side * side);
        for i in 0..side {
            for j in 0..side {
                data.push(f(i, j));
            }
        }
        Matrix { side, data }
    }

    /// Panics unless `rows` is square.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let side = rows.len();
        assert!(rows.iter().all(|r| r.len() == side), "matrix rows must form a square");
        Matrix { side, data: rows.into_iter().flatten().collect() }
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.side + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.side + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        self.data.chunks(self.side).map(|r| r.to_vec()).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { side: self.side, data: self.data.iter().map(f).collect() }
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| x.clone() * s.clone())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.side, |i, j| self.get(j, i).clone())
    }

    pub fn conj(&self) -> Self {
        self.map(|x| x.conj())
    }

    pub fn adjoint(&self) -> Self {
        self.transpose().conj()
    }

    pub fn kron(&self, other: &Self) -> Self {
        let (a, b) = (self.side, other.side);
        Self::from_fn(a * b, |i, j| self.get(i / b, j / b).clone() * other.get(i % b, j % b).clone())
    }

    pub fn trace(&self) -> T {
        (0..self.side).fold(T::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        &(self * other) + &(other * self)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.negligible())
    }

    pub fn close(&self, other: &Self) -> bool {
        self.side == other.side && self.data.iter().zip(&other.data).all(|(a, b)| a.close(b))
    }

    pub fn is_identity(&self) -> bool {
        self.close(&Self::identity(self.side))
    }

    /// Largest entry modulus, used for residual reports.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|x| x.to_c64().norm()).fold(0.0, f64::max)
    }

    fn first_nonzero(&self) -> Option<usize> {
        self.data.iter().position(|x| !x.negligible())
    }

    /// Returns `s` with `self = s·other` when such a scalar exists.
    pub fn proportional_to(&self, other: &Self) -> Option<T> {
        if self.side != other.side {
            return None;
        }
        let k = other.first_nonzero()?;
        let s = self.data[k].clone() * other.data[k].inv()?;
        other.scale(&s).close(self).then_some(s)
    }

    /// Returns `s` with `self = s·I` when `self` is a scalar matrix.
    pub fn scalar_value(&self) -> Option<T> {
        self.proportional_to(&Self::identity(self.side))
    }

    /// Sign relation between two matrices: commute, anticommute or neither.
    pub fn relation(&self, other: &Self) -> Relation {
        if self.commutator(other).is_zero() {
            Relation::Commutes
        } else if self.anticommutator(other).is_zero() {
            Relation::Anticommutes
        } else {
            Relation::Neither
        }
    }

    /// Multiplies by ±1 so the first nonzero entry (row-major) has positive real part,
    /// or zero real part and positive imaginary part.
    pub fn canonical_sign(&self) -> Self {
        match self.first_nonzero() {
            Some(k) => {
                let z = self.data[k].to_c64();
                let positive = if z.re.abs() > crate::scalar::FLOAT_TOL { z.re > 0.0 } else { z.im > 0.0 };
                if positive {
                    self.clone()
                } else {
                    -self.clone()
                }
            }
            None => self.clone(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(self.side), |acc, _| &acc * self)
    }

    pub fn to_float(&self) -> FloatMatrix {
        self.map(|x| x.to_c64())
    }
}

impl ExactMatrix {
    /// JSON form `{side, entries: [[re_num, re_den, im_num, im_den], ...]}` in row-major order.
    pub fn to_json(&self) -> MatrixJson {
        MatrixJson { side: self.side, entries: self.data.iter().map(|x| x.to_quad()).collect() }
    }

    pub fn rank(&self) -> usize {
        crate::linalg::rank(self.rows())
    }

    /// Returns true if every entry is real.
    pub fn is_real(&self) -> bool {
        self.data.iter().all(|x| x.is_real())
    }

    pub fn to_text(&self) -> String {
        let cells: Vec<String> = self.data.iter().map(|x| x.to_string()).collect();
        let w = cells.iter().map(|c| c.len()).max().unwrap_or(1);
        cells
            .chunks(self.side)
            .map(|row| row.iter().map(|c| format!("{c:>w$}")).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl Serialize for ExactMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct MatrixJson {
    pub side: usize,
    pub entries: Vec<[i128; 4]>,
}

/// Commutation relation between two operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Relation {
    Commutes,
    Anticommutes,
    Neither,
}

impl Relation {
    pub fn symbol(self) -> char {
        match self {
            Relation::Commutes => 'C',
            Relation::Anticommutes => 'A',
            Relation::Neither => 'N',
        }
    }
}

impl<T: Scalar> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.data.chunks(self.side)).finish()
    }
}

impl<'a, T: Scalar> Mul<&'a Matrix<T>> for &'a Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, o: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.side, o.side, "matrix side mismatch");
        let n = self.side;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &o.data[k * n + j];
                    if !b.is_zero() {
                        let cur = std::mem::replace(&mut out.data[i * n + j], T::zero());
                        out.data[i * n + j] = cur + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }
}

impl<T: Scalar> Mul for Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, o: Matrix<T>) -> Matrix<T> {
        &self * &o
    }
}

impl<'a, T: Scalar> Add<&'a Matrix<T>> for &'a Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, o: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.side, o.side, "matrix side mismatch");
        Matrix { side: self.side, data: self.data.iter().zip(&o.data).map(|(a, b)| a.clone() + b.clone()).collect() }
    }
}

impl<'a, T: Scalar> Sub<&'a Matrix<T>> for &'a Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, o: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.side, o.side, "matrix side mismatch");
        Matrix { side: self.side, data: self.data.iter().zip(&o.data).map(|(a, b)| a.clone() - b.clone()).collect() }
    }
}

impl<T: Scalar> Neg for Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        Matrix { side: self.side, data: self.data.into_iter().map(|x| -x).collect() }
    }
}

/// Product of a sequence of matrices; `side` is used for the empty product.
pub fn product<'a, T: Scalar + 'a>(side: usize, mats: impl IntoIterator<Item = &'a Matrix<T>>) -> Matrix<T> {
    mats.into_iter().fold(Matrix::identity(side), |acc, m| &acc * m)
}

/// Builds an exact matrix from small integer complex pairs `(re, im)`.
pub fn exact(rows: &[&[(i128, i128)]]) -> ExactMatrix {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&(a, b)| CxRational::from_int(a, b)).collect()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s1() -> ExactMatrix {
        exact(&[&[(0, 0), (1, 0)], &[(1, 0), (0, 0)]])
    }
    fn s2() -> ExactMatrix {
        exact(&[&[(0, 0), (0, -1)], &[(0, 1), (0, 0)]])
    }

    #[test]
    fn kron_dims_and_mixed_product() {
        let a = s1().kron(&s2());
        assert_eq!(a.side(), 4);
        let lhs = &s1().kron(&s2()) * &s2().kron(&s1());
        let rhs = (&s1() * &s2()).kron(&(&s2() * &s1()));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn relations_and_proportionality() {
        assert_eq!(s1().relation(&s2()), Relation::Anticommutes);
        assert_eq!(s1().relation(&s1()), Relation::Commutes);
        let m = s1().scale(&CxRational::i());
        assert_eq!(m.proportional_to(&s1()), Some(CxRational::i()));
        assert_eq!(s1().proportional_to(&s2()), None);
    }

    #[test]
    fn canonical_sign_flips_leading_negative() {
        assert_eq!((-s2()).canonical_sign(), -s2());
        assert_eq!(s2().canonical_sign(), -s2());
        assert_eq!((-s1()).canonical_sign(), s1());
    }
}
