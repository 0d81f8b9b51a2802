//! The central-idempotent homomorphism of odd algebras and the quotient classes.

use crate::algebra::{epsilon, volume_element, Automorphism, Blade, Field, Multivector, Signature};
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::scalar::CxRational;
use crate::spinrep::{represent, spinbasis, SpinBasis};
use num_traits::One;
use serde::Serialize;

fn odd_mod8(p: usize, q: usize) -> usize {
    (p as i64 - q as i64).rem_euclid(8) as usize
}

/// εω of an odd algebra with (εω)² = 1.
pub fn eps_omega(sig: Signature) -> Result<Multivector> {
    if sig.n().is_multiple_of(2) {
        return Err(Error::NeedsOdd(sig.n()));
    }
    let (w, _) = volume_element(sig);
    Ok(w.scale(&epsilon(sig)?))
}

/// 𝒜¹ + εω𝒜² ↦ 𝒜¹ + 𝒜², returned as an element of the even subalgebra.
pub fn epsilon_map(x: &Multivector) -> Result<Multivector> {
    let ew = eps_omega(x.signature())?;
    let odd = Multivector::from_terms(
        x.signature(),
        x.terms().iter().filter(|(&b, _)| b.count_ones() % 2 == 1).map(|(&b, c)| (b, c.clone())),
    );
    let even = x - &odd;
    Ok(&even + &(&ew * &odd))
}

/// Whether σ preserves ker ε, i.e. σ(εω) = εω.
pub fn descends(sigma: Automorphism, sig: Signature) -> Result<bool> {
    let ew = eps_omega(sig)?;
    Ok(sigma.apply(&ew) == ew)
}

/// Spinor representation in which εω acts as +I.
pub fn positive_rep(sig: Signature) -> Result<SpinBasis> {
    let mut b = spinbasis(sig.n())?.with_context(sig);
    let ew = represent(&b, &eps_omega(sig)?)?;
    match ew.scalar_value() {
        Some(s) if s == CxRational::one() => {}
        Some(s) if s == -CxRational::one() => {
            let last = b.mats.len() - 1;
            b.mats[last] = -b.mats[last].clone();
        }
        _ => return Err(Error::NoSolution("volume element is not central in the representation".into())),
    }
    Ok(b)
}

/// Matrix-level descent: ρ₊(σ(B − εωB)) = 0 for every basis blade B.
pub fn descends_matrix(sigma: Automorphism, sig: Signature) -> Result<bool> {
    let b = positive_rep(sig)?;
    let ew = eps_omega(sig)?;
    for mask in 0..(1u64 << sig.n()) {
        let blade = Multivector::blade(sig, mask as Blade, CxRational::one());
        let k = &blade - &(&ew * &blade);
        if !represent(&b, &sigma.apply(&k))?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The matrix of ε in the positive representation: χ(ρ(x)) = ρ₊(x).
pub fn chi_matrix(x: &Multivector) -> Result<ExactMatrix> {
    represent(&positive_rep(x.signature())?, x)
}

pub const NONTRIVIAL: [Automorphism; 7] = [
    Automorphism::Star,
    Automorphism::Tilde,
    Automorphism::TildeStar,
    Automorphism::Bar,
    Automorphism::BarStar,
    Automorphism::BarTilde,
    Automorphism::BarTildeStar,
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransferFlag {
    pub automorphism: Automorphism,
    pub transfers: bool,
    pub rule: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransferReport {
    pub p: usize,
    pub q: usize,
    pub field: Field,
    pub flags: Vec<TransferFlag>,
}

impl TransferReport {
    pub fn transfers(&self, a: Automorphism) -> bool {
        self.flags.iter().any(|f| f.automorphism == a && f.transfers)
    }
}

/// Stated transfer rules for ℂ_{n+1} with real split Cℓ(p,q).
pub fn transfer_conditions_complex(p: usize, q: usize) -> Result<TransferReport> {
    let n1 = p + q;
    if n1.is_multiple_of(2) {
        return Err(Error::NeedsOdd(n1));
    }
    let d = odd_mod8(p, q);
    let n1_1 = n1 % 4 == 1;
    let n1_3 = !n1_1;
    let d15 = d == 1 || d == 5;
    let d37 = !d15;
    use Automorphism::*;
    let flags = vec![
        TransferFlag { automorphism: Star, transfers: false, rule: "never" },
        TransferFlag { automorphism: Tilde, transfers: n1_1, rule: "n+1 ≡ 1 (mod 4)" },
        TransferFlag { automorphism: TildeStar, transfers: n1_3, rule: "n+1 ≡ 3 (mod 4)" },
        TransferFlag {
            automorphism: Bar,
            transfers: (n1_3 && d37) || (n1_1 && d15),
            rule: "n+1 ≡ 3 and p−q ≡ 3,7, or n+1 ≡ 1 and p−q ≡ 1,5 (mod 8)",
        },
        TransferFlag {
            automorphism: BarStar,
            transfers: (n1_3 && d15) || (n1_1 && d37),
            rule: "n+1 ≡ 3 and p−q ≡ 1,5, or n+1 ≡ 1 and p−q ≡ 3,7 (mod 8)",
        },
        TransferFlag { automorphism: BarTilde, transfers: n1_3 && d15, rule: "n+1 ≡ 3 (mod 4) and p−q ≡ 1,5 (mod 8)" },
        TransferFlag { automorphism: BarTildeStar, transfers: d37, rule: "p−q ≡ 3,7 (mod 8)" },
    ];
    Ok(TransferReport { p, q, field: Field::Complex, flags })
}

/// Stated transfer rules for Cℓ(p,q) with p − q ≡ 1, 5 (mod 8).
pub fn transfer_conditions_real(p: usize, q: usize) -> Result<TransferReport> {
    let d = odd_mod8(p, q);
    if d != 1 && d != 5 {
        return Err(Error::WrongType(d));
    }
    let qe = q.is_multiple_of(2);
    use Automorphism::*;
    let flags = vec![
        TransferFlag { automorphism: Star, transfers: false, rule: "never" },
        TransferFlag { automorphism: Tilde, transfers: true, rule: "always" },
        TransferFlag { automorphism: TildeStar, transfers: false, rule: "never" },
        TransferFlag { automorphism: Bar, transfers: qe, rule: "q even" },
        TransferFlag { automorphism: BarStar, transfers: !qe, rule: "q odd" },
        TransferFlag { automorphism: BarTilde, transfers: qe, rule: "q even" },
        TransferFlag { automorphism: BarTildeStar, transfers: !qe, rule: "q odd" },
    ];
    Ok(TransferReport { p, q, field: Field::Real, flags })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum QuotientClass {
    A1,
    A2,
    B,
    C,
    D1,
    D2,
    E1,
    E2,
    F1,
    F2,
}

impl QuotientClass {
    pub const ALL: [QuotientClass; 10] = [
        QuotientClass::A1,
        QuotientClass::A2,
        QuotientClass::B,
        QuotientClass::C,
        QuotientClass::D1,
        QuotientClass::D2,
        QuotientClass::E1,
        QuotientClass::E2,
        QuotientClass::F1,
        QuotientClass::F2,
    ];

    pub fn label(self) -> &'static str {
        match self {
            QuotientClass::A1 => "a1",
            QuotientClass::A2 => "a2",
            QuotientClass::B => "b",
            QuotientClass::C => "c",
            QuotientClass::D1 => "d1",
            QuotientClass::D2 => "d2",
            QuotientClass::E1 => "e1",
            QuotientClass::E2 => "e2",
            QuotientClass::F1 => "f1",
            QuotientClass::F2 => "f2",
        }
    }

    /// Admitted discrete symmetries.
    pub fn symmetries(self) -> &'static [&'static str] {
        match self {
            QuotientClass::A1 => &["T", "C∼I"],
            QuotientClass::A2 => &["T", "C"],
            QuotientClass::B => &["T", "CP", "CPT"],
            QuotientClass::C => &["PT", "C", "CPT"],
            QuotientClass::D1 => &["PT", "CP∼IP", "CT∼IT"],
            QuotientClass::D2 => &["PT", "CP", "CT"],
            QuotientClass::E1 => &["T", "C∼I", "CT∼IT"],
            QuotientClass::E2 => &["T", "CP∼IP", "CPT∼IPT"],
            QuotientClass::F1 => &["T", "C∼C′", "CT∼C′T"],
            QuotientClass::F2 => &["T", "CP∼C′P", "CPT∼C′PT"],
        }
    }

    pub fn is_real(self) -> bool {
        matches!(self, QuotientClass::E1 | QuotientClass::E2 | QuotientClass::F1 | QuotientClass::F2)
    }
}

/// Class of the quotient of ℂ_{p+q} (complex) or Cℓ(p,q) (real, p − q ≡ 1,5).
pub fn classify_quotient(p: usize, q: usize, field: Field) -> Result<QuotientClass> {
    let sig = Signature::new(p, q, field)?;
    let n1 = sig.n();
    let d = odd_mod8(p, q);
    match field {
        Field::Complex => {
            if n1 % 2 == 0 {
                return Err(Error::NeedsOdd(n1));
            }
            Ok(match (n1 % 4, d) {
                (1, 1) => QuotientClass::A1,
                (1, 5) => QuotientClass::A2,
                (1, _) => QuotientClass::B,
                (_, 3) | (_, 7) => QuotientClass::C,
                (_, 1) => QuotientClass::D1,
                _ => QuotientClass::D2,
            })
        }
        Field::Real => match (d, q % 2) {
            (1, 0) => Ok(QuotientClass::E1),
            (1, _) => Ok(QuotientClass::E2),
            (5, 0) => Ok(QuotientClass::F1),
            (5, _) => Ok(QuotientClass::F2),
            _ => Err(Error::WrongType(d)),
        },
    }
}

fn base_name(s: &str) -> &str {
    s.split('∼').next().unwrap_or(s)
}

/// Stated and computed symmetry content of one quotient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientRecord {
    pub p: usize,
    pub q: usize,
    pub field: Field,
    pub class: QuotientClass,
    pub symmetries: Vec<&'static str>,
    /// Physical names of the nontrivial (anti)automorphisms that descend.
    pub computed: Vec<&'static str>,
    /// Automorphisms flagged as transferring that do not descend.
    pub flagged_not_descending: Vec<&'static str>,
    /// Automorphisms that descend but are not flagged.
    pub descending_not_flagged: Vec<&'static str>,
}

impl QuotientRecord {
    pub fn computed_matches_stated(&self) -> bool {
        let mut a: Vec<&str> = self.symmetries.iter().map(|s| base_name(s)).collect();
        let mut b = self.computed.clone();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }

    pub fn flags_agree(&self) -> bool {
        self.flagged_not_descending.is_empty() && self.descending_not_flagged.is_empty()
    }
}

pub fn quotient_record(p: usize, q: usize, field: Field) -> Result<QuotientRecord> {
    let class = classify_quotient(p, q, field)?;
    let sig = Signature::new(p, q, field)?;
    let report = match field {
        Field::Complex => transfer_conditions_complex(p, q)?,
        Field::Real => transfer_conditions_real(p, q)?,
    };
    let mut computed = Vec::new();
    let mut flagged_not_descending = Vec::new();
    let mut descending_not_flagged = Vec::new();
    for a in NONTRIVIAL {
        let d = descends(a, sig)?;
        if d {
            computed.push(a.physical_name());
        }
        match (report.transfers(a), d) {
            (true, false) => flagged_not_descending.push(a.physical_name()),
            (false, true) => descending_not_flagged.push(a.physical_name()),
            _ => {}
        }
    }
    Ok(QuotientRecord {
        p,
        q,
        field,
        class,
        symmetries: class.symmetries().to_vec(),
        computed,
        flagged_not_descending,
        descending_not_flagged,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(p: usize, q: usize) -> Signature {
        Signature::complex_split(p, q).unwrap()
    }

    #[test]
    fn epsilon_basics() {
        let s = c(3, 0);
        let ew = eps_omega(s).unwrap();
        assert_eq!(epsilon_map(&ew).unwrap(), Multivector::one(s));
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let x = Multivector::random(s, &mut rng, 5);
            let y = Multivector::random(s, &mut rng, 5);
            assert!(epsilon_map(&(&x - &(&ew * &x))).unwrap().is_zero());
            let lhs = epsilon_map(&(&x * &y)).unwrap();
            let rhs = &epsilon_map(&x).unwrap() * &epsilon_map(&y).unwrap();
            assert_eq!(lhs, rhs);
        }
        assert!(epsilon_map(&Multivector::one(Signature::real(3, 0).unwrap())).is_err());
    }

    #[test]
    fn star_never_descends() {
        for (p, q) in [(3, 0), (1, 2), (5, 0), (2, 3), (7, 0), (4, 3)] {
            assert!(!descends(Automorphism::Star, c(p, q)).unwrap());
        }
    }

    #[test]
    fn matrix_and_algebra_descent_agree() {
        for (p, q) in [(3, 0), (2, 1), (1, 2), (0, 3), (5, 0), (3, 2), (4, 1)] {
            for a in NONTRIVIAL {
                assert_eq!(descends(a, c(p, q)).unwrap(), descends_matrix(a, c(p, q)).unwrap(), "{a:?} ({p},{q})");
            }
        }
        for (p, q) in [(1, 0), (3, 2), (1, 4), (0, 3)] {
            let s = Signature::real(p, q).unwrap();
            for a in NONTRIVIAL {
                assert_eq!(descends(a, s).unwrap(), descends_matrix(a, s).unwrap(), "{a:?} real ({p},{q})");
            }
        }
    }

    #[test]
    fn classes() {
        assert_eq!(classify_quotient(3, 0, Field::Complex), Ok(QuotientClass::C));
        assert_eq!(classify_quotient(3, 2, Field::Real), Ok(QuotientClass::E1));
        assert_eq!(classify_quotient(1, 4, Field::Real), Ok(QuotientClass::F1));
        assert!(classify_quotient(2, 3, Field::Real).is_err());
        assert_eq!(classify_quotient(0, 3, Field::Real), Ok(QuotientClass::F2));
        assert_eq!(classify_quotient(5, 0, Field::Real), Ok(QuotientClass::F1));
        assert_eq!(classify_quotient(2, 1, Field::Real), Ok(QuotientClass::E2));
        assert!(classify_quotient(2, 2, Field::Complex).is_err());
        assert!(classify_quotient(3, 0, Field::Real).is_err());
    }

    #[test]
    fn three_zero_record() {
        let r = quotient_record(3, 0, Field::Complex).unwrap();
        assert_eq!(r.symmetries, vec!["PT", "C", "CPT"]);
        assert_eq!(r.computed, vec!["PT", "CP", "CT"]);
        assert!(!r.flags_agree());
    }

    #[test]
    fn real_q_even_agrees() {
        for (p, q) in [(1, 0), (3, 2), (5, 0), (1, 4)] {
            let r = quotient_record(p, q, Field::Real).unwrap();
            assert!(r.computed_matches_stated(), "{r:?}");
        }
    }
}
