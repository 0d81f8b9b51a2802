//! Multivectors of Cℓ(p,q) and ℂn with the fundamental (anti)automorphisms.
//!
//! Real contexts use generators with eᵢ² = +1 for i ≤ p and −1 otherwise. Complex contexts
//! use generators that all square to +1; `p` and `q` there only fix the real split
//! eᵢ (i ≤ p), i·eᵢ (i > p) used by the pseudo-conjugation.

use crate::error::{Error, Result};
use crate::scalar::{rat, CxRational};
use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Real,
    Complex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    pub p: usize,
    pub q: usize,
    pub field: Field,
}

impl Signature {
    pub fn new(p: usize, q: usize, field: Field) -> Result<Self> {
        if p + q == 0 {
            return Err(Error::EmptySignature { p, q });
        }
        if p + q > 30 {
            return Err(Error::TooManyGenerators(p + q));
        }
        Ok(Signature { p, q, field })
    }

    pub fn real(p: usize, q: usize) -> Result<Self> {
        Self::new(p, q, Field::Real)
    }

    /// ℂn with the real split Cℓ(p,q).
    pub fn complex_split(p: usize, q: usize) -> Result<Self> {
        Self::new(p, q, Field::Complex)
    }

    /// ℂn with the trivial split Cℓ(n,0).
    pub fn complex(n: usize) -> Result<Self> {
        Self::new(n, 0, Field::Complex)
    }

    pub fn n(&self) -> usize {
        self.p + self.q
    }

    /// (p − q) mod 8 in 0..8.
    pub fn pq_mod8(&self) -> usize {
        (self.p as i64 - self.q as i64).rem_euclid(8) as usize
    }

    /// Square of the 0-based generator `i`.
    pub fn generator_square(&self, i: usize) -> i32 {
        match self.field {
            Field::Complex => 1,
            Field::Real if i < self.p => 1,
            Field::Real => -1,
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.field {
            Field::Real => write!(f, "Cl({},{})", self.p, self.q),
            Field::Complex => write!(f, "C{}[{},{}]", self.n(), self.p, self.q),
        }
    }
}

/// Basis blade as a bitmask over generator indices (bit i ↔ e_{i+1}).
pub type Blade = u32;

pub fn grade(b: Blade) -> u32 {
    b.count_ones()
}

/// Sign and mask of the product of two blades.
pub fn blade_product(sig: &Signature, a: Blade, b: Blade) -> (i32, Blade) {
    let mut swaps = 0u32;
    let mut x = a >> 1;
    while x != 0 {
        swaps += (x & b).count_ones();
        x >>= 1;
    }
    let mut sign = if swaps.is_multiple_of(2) { 1 } else { -1 };
    let common = a & b;
    for i in 0..32 {
        if common >> i & 1 == 1 {
            sign *= sig.generator_square(i);
        }
    }
    (sign, a ^ b)
}

/// Sparse element of a Clifford algebra with exact complex-rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Multivector {
    sig: Signature,
    terms: BTreeMap<Blade, CxRational>,
}

impl Multivector {
    pub fn zero(sig: Signature) -> Self {
        Multivector { sig, terms: BTreeMap::new() }
    }

    pub fn scalar(sig: Signature, c: CxRational) -> Self {
        Self::blade(sig, 0, c)
    }

    pub fn one(sig: Signature) -> Self {
        Self::scalar(sig, CxRational::one())
    }

    pub fn blade(sig: Signature, mask: Blade, c: CxRational) -> Self {
        let mut m = Self::zero(sig);
        m.add_term(mask, c);
        m
    }

    /// Generator e_i, 1-based as in the usual notation.
    pub fn generator(sig: Signature, i: usize) -> Self {
        assert!(i >= 1 && i <= sig.n(), "generator index out of range");
        Self::blade(sig, 1 << (i - 1), CxRational::one())
    }

    /// Blade e_{i1} e_{i2} ... from 1-based indices (any order, with sign).
    pub fn from_indices(sig: Signature, idx: &[usize]) -> Self {
        idx.iter().fold(Self::one(sig), |acc, &i| &acc * &Self::generator(sig, i))
    }

    pub fn from_terms(sig: Signature, terms: impl IntoIterator<Item = (Blade, CxRational)>) -> Self {
        let mut m = Self::zero(sig);
        for (b, c) in terms {
            m.add_term(b, c);
        }
        m
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn terms(&self) -> &BTreeMap<Blade, CxRational> {
        &self.terms
    }

    pub fn coefficient(&self, b: Blade) -> CxRational {
        self.terms.get(&b).cloned().unwrap_or_else(CxRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, b: Blade, c: CxRational) {
        assert!(b >> self.sig.n() == 0, "blade outside the algebra");
        let cur = self.terms.remove(&b).unwrap_or_else(CxRational::zero);
        let next = cur + c;
        if !next.is_zero() {
            self.terms.insert(b, next);
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.sig == other.sig {
            Ok(())
        } else {
            Err(Error::ContextMismatch(self.sig.to_string(), other.sig.to_string()))
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.sig);
        for (&a, x) in &self.terms {
            for (&b, y) in &other.terms {
                let (s, m) = blade_product(&self.sig, a, b);
                let c = x * y;
                out.add_term(m, if s > 0 { c } else { -c });
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (&b, c) in &other.terms {
            out.add_term(b, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &CxRational) -> Self {
        Self::from_terms(self.sig, self.terms.iter().map(|(&b, x)| (b, x * c)))
    }

    fn map_blades(&self, f: impl Fn(Blade, &CxRational) -> CxRational) -> Self {
        Self::from_terms(self.sig, self.terms.iter().map(|(&b, x)| (b, f(b, x))))
    }

    /// Part of grade `k`.
    pub fn grade_part(&self, k: u32) -> Self {
        Self::from_terms(self.sig, self.terms.iter().filter(|(&b, _)| grade(b) == k).map(|(&b, x)| (b, x.clone())))
    }

    /// Random element with small integer-ratio coefficients on a random subset of blades.
    pub fn random<R: Rng>(sig: Signature, rng: &mut R, max_terms: usize) -> Self {
        let nb = 1u64 << sig.n();
        let k = rng.gen_range(1..=max_terms.max(1));
        Self::from_terms(
            sig,
            (0..k).map(|_| {
                let b = rng.gen_range(0..nb) as Blade;
                let re = rat(rng.gen_range(-4..=4), rng.gen_range(1..=3));
                let im = if sig.field == Field::Complex { rat(rng.gen_range(-4..=4), rng.gen_range(1..=3)) } else { rat(0, 1) };
                (b, CxRational::new(re, im))
            }),
        )
    }
}

impl<'a> std::ops::Mul<&'a Multivector> for &'a Multivector {
    type Output = Multivector;
    fn mul(self, o: &Multivector) -> Multivector {
        self.try_mul(o).expect("geometric product of elements from different algebras")
    }
}

impl<'a> std::ops::Add<&'a Multivector> for &'a Multivector {
    type Output = Multivector;
    fn add(self, o: &Multivector) -> Multivector {
        self.try_add(o).expect("sum of elements from different algebras")
    }
}

impl<'a> std::ops::Sub<&'a Multivector> for &'a Multivector {
    type Output = Multivector;
    fn sub(self, o: &Multivector) -> Multivector {
        self + &o.scale(&-CxRational::one())
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&b, c)| {
                if b == 0 {
                    format!("({c})")
                } else {
                    let idx: Vec<String> = (0..32).filter(|i| b >> i & 1 == 1).map(|i| (i + 1).to_string()).collect();
                    format!("({c})e{}", idx.join("_"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// e₁·e₂-style product; rejects elements from different algebras.
pub fn geometric_product(x: &Multivector, y: &Multivector) -> Result<Multivector> {
    x.try_mul(y)
}

fn sign(neg: bool) -> CxRational {
    if neg {
        -CxRational::one()
    } else {
        CxRational::one()
    }
}

/// 𝒜 ↦ 𝒜⋆: grade-k part scaled by (−1)ᵏ.
pub fn grade_involution(x: &Multivector) -> Multivector {
    x.map_blades(|b, c| c * &sign(grade(b) % 2 == 1))
}

/// 𝒜 ↦ 𝒜̃: grade-k part scaled by (−1)^{k(k−1)/2}.
pub fn reversion(x: &Multivector) -> Multivector {
    x.map_blades(|b, c| {
        let k = grade(b);
        c * &sign((k * k.saturating_sub(1) / 2) % 2 == 1)
    })
}

/// 𝒜 ↦ (𝒜⋆)~: grade-k part scaled by (−1)^{k(k+1)/2}.
pub fn conjugation(x: &Multivector) -> Multivector {
    x.map_blades(|b, c| {
        let k = grade(b);
        c * &sign((k * (k + 1) / 2) % 2 == 1)
    })
}

/// 𝒜 ↦ 𝒜̄: complex conjugation with respect to the real split subalgebra.
///
/// In a real context this is the identity.
pub fn pseudo_conjugation(x: &Multivector) -> Multivector {
    let sig = x.signature();
    match sig.field {
        Field::Real => x.clone(),
        Field::Complex => {
            let imag_mask: Blade = (((1u64 << sig.n()) - 1) as Blade) & !(((1u64 << sig.p) - 1) as Blade);
            x.map_blades(|b, c| &c.conj() * &sign((b & imag_mask).count_ones() % 2 == 1))
        }
    }
}

/// The four fundamental (anti)automorphisms and their pseudo-versions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Automorphism {
    Identity,
    Star,
    Tilde,
    TildeStar,
    Bar,
    BarStar,
    BarTilde,
    BarTildeStar,
}

impl Automorphism {
    pub const FUNDAMENTAL: [Automorphism; 4] =
        [Automorphism::Identity, Automorphism::Star, Automorphism::Tilde, Automorphism::TildeStar];

    pub const ALL: [Automorphism; 8] = [
        Automorphism::Identity,
        Automorphism::Star,
        Automorphism::Tilde,
        Automorphism::TildeStar,
        Automorphism::Bar,
        Automorphism::BarStar,
        Automorphism::BarTilde,
        Automorphism::BarTildeStar,
    ];

    pub fn apply(self, x: &Multivector) -> Multivector {
        use Automorphism::*;
        let base = match self {
            Identity | Bar => x.clone(),
            Star | BarStar => grade_involution(x),
            Tilde | BarTilde => reversion(x),
            TildeStar | BarTildeStar => conjugation(x),
        };
        match self {
            Bar | BarStar | BarTilde | BarTildeStar => pseudo_conjugation(&base),
            _ => base,
        }
    }

    /// Reverses the order of products.
    pub fn is_anti(self) -> bool {
        use Automorphism::*;
        matches!(self, Tilde | TildeStar | BarTilde | BarTildeStar)
    }

    /// The discrete transformation it represents.
    pub fn physical_name(self) -> &'static str {
        use Automorphism::*;
        match self {
            Identity => "I",
            Star => "P",
            Tilde => "T",
            TildeStar => "PT",
            Bar => "C",
            BarStar => "CP",
            BarTilde => "CT",
            BarTildeStar => "CPT",
        }
    }

    pub fn symbol(self) -> &'static str {
        use Automorphism::*;
        match self {
            Identity => "id",
            Star => "star",
            Tilde => "tilde",
            TildeStar => "tilde_star",
            Bar => "bar",
            BarStar => "bar_star",
            BarTilde => "bar_tilde",
            BarTildeStar => "bar_tilde_star",
        }
    }

    /// Composition table of {Id, ⋆, ˜, ˜⋆}: the Klein four-group.
    pub fn compose(self, other: Automorphism) -> Option<Automorphism> {
        let idx = |a: Automorphism| Self::FUNDAMENTAL.iter().position(|&f| f == a);
        let (i, j) = (idx(self)?, idx(other)?);
        Some(Self::FUNDAMENTAL[i ^ j])
    }
}

/// Volume element ω = e₁e₂⋯eₙ together with the sign of ω².
pub fn volume_element(sig: Signature) -> (Multivector, i32) {
    let w = Multivector::blade(sig, ((1u64 << sig.n()) - 1) as Blade, CxRational::one());
    let sq = &w * &w;
    let s = if sq.coefficient(0) == CxRational::one() { 1 } else { -1 };
    (w, s)
}

/// Tabulated sign of ω² in a real context: +1 iff p−q ≡ 0,1,4,5 (mod 8).
pub fn omega_square_table(sig: &Signature) -> i32 {
    if [0, 1, 4, 5].contains(&sig.pq_mod8()) {
        1
    } else {
        -1
    }
}

/// ε with (εω)² = 1 for an odd algebra: 1 or i.
pub fn epsilon(sig: Signature) -> Result<CxRational> {
    let (_, s) = volume_element(sig);
    match (s, sig.field) {
        (1, _) => Ok(CxRational::one()),
        (_, Field::Complex) => Ok(CxRational::i()),
        _ => Err(Error::NoCentralSplit),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HelicityPair {
    pub plus: Multivector,
    pub minus: Multivector,
}

/// λ± = (1 ± εω)/2 of an odd complex algebra.
pub fn helicity_idempotents(sig: Signature) -> Result<(Multivector, Multivector)> {
    if sig.field != Field::Complex {
        return Err(Error::NeedsComplex);
    }
    if sig.n().is_multiple_of(2) {
        return Err(Error::NeedsOdd(sig.n()));
    }
    let (w, _) = volume_element(sig);
    let ew = w.scale(&epsilon(sig)?);
    let half = CxRational::real(rat(1, 2));
    let one = Multivector::one(sig);
    Ok(((&one + &ew).scale(&half), (&one - &ew).scale(&half)))
}

/// Splits φ into λ₊φ and λ₋φ.
pub fn helicity_split(x: &Multivector) -> Result<HelicityPair> {
    let (lp, lm) = helicity_idempotents(x.signature())?;
    Ok(HelicityPair { plus: &lp * x, minus: &lm * x })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(sig: Signature, i: usize) -> Multivector {
        Multivector::generator(sig, i)
    }

    #[test]
    fn generator_products() {
        let s = Signature::real(2, 1).unwrap();
        let e12 = &e(s, 1) * &e(s, 2);
        assert_eq!(e12, Multivector::blade(s, 0b11, CxRational::one()));
        assert_eq!(&e(s, 2) * &e(s, 1), e12.scale(&-CxRational::one()));
        assert_eq!(&e(s, 3) * &e(s, 3), Multivector::scalar(s, -CxRational::one()));
        assert_eq!(&e(s, 1) * &e(s, 1), Multivector::one(s));
    }

    #[test]
    fn omega_in_cl30() {
        let s = Signature::real(3, 0).unwrap();
        let (w, sq) = volume_element(s);
        assert_eq!(sq, -1);
        assert_eq!(&w * &w, Multivector::scalar(s, -CxRational::one()));
        for i in 1..=3 {
            assert!((&(&w * &e(s, i)) - &(&e(s, i) * &w)).is_zero());
        }
    }

    #[test]
    fn omega_square_cases() {
        assert_eq!(volume_element(Signature::real(1, 3).unwrap()).1, -1);
        for (p, q) in [(1, 0), (3, 2), (5, 0), (0, 3), (2, 5)] {
            let s = Signature::real(p, q).unwrap();
            assert_eq!(volume_element(s).1, 1, "{s}");
            assert_eq!(omega_square_table(&s), 1);
        }
    }

    #[test]
    fn involutions_on_low_grades() {
        let s = Signature::real(2, 0).unwrap();
        let e1 = e(s, 1);
        let e12 = &e1 * &e(s, 2);
        let neg = |m: &Multivector| m.scale(&-CxRational::one());
        assert_eq!(grade_involution(&e1), neg(&e1));
        assert_eq!(grade_involution(&e12), e12);
        assert_eq!(reversion(&e12), neg(&e12));
        assert_eq!(reversion(&e1), e1);
        assert_eq!(conjugation(&e1), neg(&e1));
        assert_eq!(conjugation(&e12), neg(&e12));
    }

    #[test]
    fn pseudo_conjugation_cases() {
        let s = Signature::complex_split(3, 0).unwrap();
        let i_one = Multivector::scalar(s, CxRational::i());
        assert_eq!(pseudo_conjugation(&i_one), i_one.scale(&-CxRational::one()));
        let x = &e(s, 1) + &e(s, 2).scale(&CxRational::i());
        let y = &e(s, 1) - &e(s, 2).scale(&CxRational::i());
        assert_eq!(pseudo_conjugation(&x), y);
        let (w, _) = volume_element(s);
        assert_eq!(pseudo_conjugation(&w), w);
        let s12 = Signature::complex_split(1, 2).unwrap();
        let (w, _) = volume_element(s12);
        assert_eq!(pseudo_conjugation(&w), w);
        let s21 = Signature::complex_split(2, 1).unwrap();
        let (w, _) = volume_element(s21);
        assert_eq!(pseudo_conjugation(&w), w.scale(&-CxRational::one()));
    }

    #[test]
    fn real_split_generators_are_fixed_by_bar() {
        let s = Signature::complex_split(1, 2).unwrap();
        let e2r = e(s, 2).scale(&CxRational::i());
        assert_eq!(pseudo_conjugation(&e2r), e2r);
        assert_eq!(&e2r * &e2r, Multivector::scalar(s, -CxRational::one()));
    }

    #[test]
    fn klein_table() {
        use Automorphism::*;
        assert_eq!(Star.compose(Tilde), Some(TildeStar));
        assert_eq!(Tilde.compose(Tilde), Some(Identity));
        assert_eq!(Bar.compose(Star), None);
    }

    #[test]
    fn c3_helicity() {
        let s = Signature::complex(3).unwrap();
        let (lp, lm) = helicity_idempotents(s).unwrap();
        let w = Multivector::from_indices(s, &[1, 2, 3]);
        let half = CxRational::real(rat(1, 2));
        let expect_p = (&Multivector::one(s) + &w.scale(&CxRational::i())).scale(&half);
        assert_eq!(lp, expect_p);
        assert!((&lp * &lm).is_zero());
        assert_eq!(&lp * &lp, lp);
        assert_eq!(&lp + &lm, Multivector::one(s));
        assert!(helicity_idempotents(Signature::complex(4).unwrap()).is_err());
    }

    #[test]
    fn context_mismatch_rejected() {
        let a = Multivector::one(Signature::real(1, 0).unwrap());
        let b = Multivector::one(Signature::real(0, 1).unwrap());
        assert!(geometric_product(&a, &b).is_err());
    }
}
