//! Scalar fields: exact complex rationals and double-precision complex numbers.

use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

/// Exact rational with 128-bit numerator and denominator.
pub type Rational = Ratio<i128>;

const OVERFLOW: &str = "rational arithmetic overflowed i128";

fn radd(a: &Rational, b: &Rational) -> Rational {
    a.checked_add(b).expect(OVERFLOW)
}
fn rsub(a: &Rational, b: &Rational) -> Rational {
    a.checked_sub(b).expect(OVERFLOW)
}
fn rmul(a: &Rational, b: &Rational) -> Rational {
    a.checked_mul(b).expect(OVERFLOW)
}
fn rdiv(a: &Rational, b: &Rational) -> Rational {
    a.checked_div(b).expect(OVERFLOW)
}

/// Shorthand for the rational `n/d`.
pub fn rat(n: i128, d: i128) -> Rational {
    Rational::new(n, d)
}

/// Exact complex number with rational real and imaginary parts.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct CxRational {
    pub re: Rational,
    pub im: Rational,
}

impl CxRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        CxRational { re, im }
    }

    pub fn from_int(re: i128, im: i128) -> Self {
        CxRational::new(Rational::from_integer(re), Rational::from_integer(im))
    }

    pub fn real(re: Rational) -> Self {
        CxRational::new(re, Rational::zero())
    }

    pub fn imag(im: Rational) -> Self {
        CxRational::new(Rational::zero(), im)
    }

    pub fn i() -> Self {
        CxRational::from_int(0, 1)
    }

    pub fn conj(&self) -> Self {
        CxRational::new(self.re, -self.im)
    }

    pub fn norm_sqr(&self) -> Rational {
        radd(&rmul(&self.re, &self.re), &rmul(&self.im, &self.im))
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let d = self.norm_sqr();
        Some(CxRational::new(rdiv(&self.re, &d), rdiv(&-self.im, &d)))
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn to_c64(&self) -> Complex64 {
        let f = |r: &Rational| *r.numer() as f64 / *r.denom() as f64;
        Complex64::new(f(&self.re), f(&self.im))
    }

    /// Exact square root of a rational when it exists (negative inputs give `i·√|x|`).
    pub fn sqrt_rational(x: &Rational) -> Option<Self> {
        let abs = x.abs();
        let r = Rational::new(isqrt(*abs.numer())?, isqrt(*abs.denom())?);
        Some(if x.is_negative() { CxRational::imag(r) } else { CxRational::real(r) })
    }

    /// `[re_num, re_den, im_num, im_den]` as used in JSON emission.
    pub fn to_quad(&self) -> [i128; 4] {
        [*self.re.numer(), *self.re.denom(), *self.im.numer(), *self.im.denom()]
    }
}

fn isqrt(n: i128) -> Option<i128> {
    if n < 0 {
        return None;
    }
    let mut r = (n as f64).sqrt() as i128;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    (r * r == n).then_some(r)
}

impl fmt::Debug for CxRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CxRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) if self.im == Rational::one() => write!(f, "i"),
            (true, false) if self.im == -Rational::one() => write!(f, "-i"),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) if self.im.is_negative() => write!(f, "{}-{}i", self.re, -self.im),
            (false, false) => write!(f, "{}+{}i", self.re, self.im),
        }
    }
}

impl From<i128> for CxRational {
    fn from(v: i128) -> Self {
        CxRational::from_int(v, 0)
    }
}

impl From<Rational> for CxRational {
    fn from(v: Rational) -> Self {
        CxRational::real(v)
    }
}

impl Add for CxRational {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        &self + &o
    }
}
impl<'a> Add<&'a CxRational> for &'a CxRational {
    type Output = CxRational;
    fn add(self, o: &CxRational) -> CxRational {
        CxRational::new(radd(&self.re, &o.re), radd(&self.im, &o.im))
    }
}
impl AddAssign for CxRational {
    fn add_assign(&mut self, o: Self) {
        *self = &*self + &o;
    }
}
impl Sub for CxRational {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        &self - &o
    }
}
impl<'a> Sub<&'a CxRational> for &'a CxRational {
    type Output = CxRational;
    fn sub(self, o: &CxRational) -> CxRational {
        CxRational::new(rsub(&self.re, &o.re), rsub(&self.im, &o.im))
    }
}
impl Mul for CxRational {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        &self * &o
    }
}
impl<'a> Mul<&'a CxRational> for &'a CxRational {
    type Output = CxRational;
    fn mul(self, o: &CxRational) -> CxRational {
        if self.im.is_zero() && o.im.is_zero() {
            return CxRational::real(rmul(&self.re, &o.re));
        }
        CxRational::new(
            rsub(&rmul(&self.re, &o.re), &rmul(&self.im, &o.im)),
            radd(&rmul(&self.re, &o.im), &rmul(&self.im, &o.re)),
        )
    }
}
impl Div for CxRational {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        self * o.inv().expect("division by zero")
    }
}
impl Neg for CxRational {
    type Output = Self;
    fn neg(self) -> Self {
        CxRational::new(-self.re, -self.im)
    }
}

impl Zero for CxRational {
    fn zero() -> Self {
        CxRational::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}
impl One for CxRational {
    fn one() -> Self {
        CxRational::from_int(1, 0)
    }
}

/// Common interface for matrix entries.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    const EXACT: bool;
    fn i() -> Self;
    fn conj(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn from_cx(c: &CxRational) -> Self;
    fn to_c64(&self) -> Complex64;
    /// Exact equality for exact scalars, 1e-12 closeness otherwise.
    fn close(&self, other: &Self) -> bool;
    fn negligible(&self) -> bool {
        self.close(&Self::zero())
    }
}

impl Scalar for CxRational {
    const EXACT: bool = true;
    fn i() -> Self {
        CxRational::i()
    }
    fn conj(&self) -> Self {
        CxRational::conj(self)
    }
    fn inv(&self) -> Option<Self> {
        CxRational::inv(self)
    }
    fn from_cx(c: &CxRational) -> Self {
        c.clone()
    }
    fn to_c64(&self) -> Complex64 {
        CxRational::to_c64(self)
    }
    fn close(&self, other: &Self) -> bool {
        self == other
    }
}

/// Absolute tolerance used for floating-point comparisons.
pub const FLOAT_TOL: f64 = 1e-12;

impl Scalar for Complex64 {
    const EXACT: bool = false;
    fn i() -> Self {
        Complex64::new(0.0, 1.0)
    }
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
    fn inv(&self) -> Option<Self> {
        (self.norm() > FLOAT_TOL).then(|| Complex64::new(1.0, 0.0) / self)
    }
    fn from_cx(c: &CxRational) -> Self {
        c.to_c64()
    }
    fn to_c64(&self) -> Complex64 {
        *self
    }
    fn close(&self, other: &Self) -> bool {
        (self - other).norm() <= FLOAT_TOL
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_ops() {
        let a = CxRational::new(rat(1, 2), rat(-3, 4));
        let b = CxRational::from_int(2, 1);
        assert_eq!(&(&a * &b) * &b.inv().unwrap(), a);
        assert_eq!(CxRational::i() * CxRational::i(), -CxRational::one());
        assert_eq!(a.conj().conj(), a);
    }

    #[test]
    fn exact_sqrt() {
        assert_eq!(CxRational::sqrt_rational(&rat(9, 4)), Some(CxRational::real(rat(3, 2))));
        assert_eq!(CxRational::sqrt_rational(&rat(-1, 4)), Some(CxRational::imag(rat(1, 2))));
        assert_eq!(CxRational::sqrt_rational(&rat(2, 1)), None);
    }

    #[test]
    fn display() {
        assert_eq!(CxRational::from_int(0, -1).to_string(), "-i");
        assert_eq!(CxRational::new(rat(1, 2), rat(-1, 3)).to_string(), "1/2-1/3i");
    }
}
