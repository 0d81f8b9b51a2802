//! Division rings, Radon–Hurwitz numbers, primitive idempotents, Karoubi factorization
//! and Brauer–Wall class arithmetic.

use crate::algebra::{blade_product, grade, Blade, Multivector, Signature};
use crate::error::{Error, Result};
use crate::linalg::{self, Echelon};
use crate::scalar::{rat, CxRational, Rational};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RingClass {
    R,
    #[serde(rename = "R+R")]
    RR,
    C,
    H,
    #[serde(rename = "H+H")]
    HH,
}

impl RingClass {
    /// Real dimension of the division ring fCℓf for a primitive idempotent f.
    pub fn primitive_corner_dim(self) -> usize {
        match self {
            RingClass::R | RingClass::RR => 1,
            RingClass::C => 2,
            RingClass::H | RingClass::HH => 4,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            RingClass::R => "R",
            RingClass::RR => "R+R",
            RingClass::C => "C",
            RingClass::H => "H",
            RingClass::HH => "H+H",
        }
    }
}

fn pq_mod8(p: usize, q: usize) -> usize {
    (p as i64 - q as i64).rem_euclid(8) as usize
}

pub fn ring_class(p: usize, q: usize) -> RingClass {
    match pq_mod8(p, q) {
        0 | 2 => RingClass::R,
        1 => RingClass::RR,
        3 | 7 => RingClass::C,
        4 | 6 => RingClass::H,
        _ => RingClass::HH,
    }
}

const RH: [i64; 8] = [0, 1, 2, 2, 3, 3, 3, 3];

/// r₀..r₇ = 0,1,2,2,3,3,3,3 with r_{i+8} = rᵢ + 4.
pub fn radon_hurwitz(i: i64) -> Result<i64> {
    if i < 0 {
        return Err(Error::NegativeIndex(i));
    }
    Ok(radon_hurwitz_extended(i))
}

/// The same table extended to all integers by r_{i−8} = rᵢ − 4.
pub fn radon_hurwitz_extended(i: i64) -> i64 {
    RH[i.rem_euclid(8) as usize] + 4 * i.div_euclid(8)
}

/// t = q − r_{q−p}.
pub fn idempotent_degree_formula(p: usize, q: usize) -> i64 {
    q as i64 - radon_hurwitz_extended(q as i64 - p as i64)
}

fn blade_square(sig: &Signature, b: Blade) -> i32 {
    blade_product(sig, b, b).0
}

fn blades_commute(sig: &Signature, a: Blade, b: Blade) -> bool {
    blade_product(sig, a, b).0 == blade_product(sig, b, a).0
}

/// Blades with square +1, excluding the scalar, ordered by grade then index tuple.
fn positive_blades(sig: &Signature) -> Vec<Blade> {
    let mut v: Vec<Blade> = (1..(1u64 << sig.n()) as Blade).filter(|&b| blade_square(sig, b) == 1).collect();
    v.sort_by_key(|&b| (grade(b), (0..32).filter(|i| b >> i & 1 == 1).collect::<Vec<u32>>()));
    v
}

fn gf2_independent(set: &[Blade], b: Blade) -> bool {
    let mut basis: Vec<Blade> = Vec::new();
    for &x in set.iter().chain(std::iter::once(&b)) {
        let mut y = x;
        for &v in &basis {
            y = y.min(y ^ v);
        }
        if y == 0 {
            return false;
        }
        basis.push(y);
        basis.sort_unstable_by(|a, b| b.cmp(a));
    }
    true
}

/// f = ∏ ½(1 + e_α).
pub fn idempotent_from(sig: Signature, blades: &[Blade]) -> Multivector {
    let half = CxRational::real(rat(1, 2));
    blades.iter().fold(Multivector::one(sig), |f, &b| {
        let factor = (&Multivector::one(sig) + &Multivector::blade(sig, b, CxRational::from(1))).scale(&half);
        &f * &factor
    })
}

/// Real dimension of f·Cℓ·f.
pub fn corner_dimension(f: &Multivector) -> usize {
    let sig = f.signature();
    let nb = 1usize << sig.n();
    let mut e = Echelon::new();
    for b in 0..nb {
        let x = &(f * &Multivector::blade(sig, b as Blade, CxRational::from(1))) * f;
        let dense: Vec<CxRational> = (0..nb).map(|k| x.coefficient(k as Blade)).collect();
        e.insert(linalg::to_sparse(&dense));
    }
    e.rank()
}

/// Result of the commuting-blade search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdempotentSearch {
    pub blades: Vec<Blade>,
    pub corner_dim: usize,
}

/// Depth-first search (lexicographic) for commuting, independent +1-square blades whose
/// idempotent has a division-ring corner.
pub fn search_primitive(p: usize, q: usize) -> Result<IdempotentSearch> {
    let sig = Signature::real(p, q)?;
    if p + q > SEARCH_MAX_N {
        return Err(Error::SearchLimit(p + q, SEARCH_MAX_N));
    }
    let target = ring_class(p, q).primitive_corner_dim();
    let cands = positive_blades(&sig);
    fn dfs(sig: Signature, cands: &[Blade], chosen: &mut Vec<Blade>, target: usize) -> Option<usize> {
        let d = corner_dimension(&idempotent_from(sig, chosen));
        if d == target {
            return Some(d);
        }
        for &b in cands {
            if chosen.iter().all(|&c| blades_commute(&sig, b, c)) && gf2_independent(chosen, b) {
                chosen.push(b);
                if let Some(d) = dfs(sig, cands, chosen, target) {
                    return Some(d);
                }
                chosen.pop();
            }
        }
        None
    }
    let mut chosen = Vec::new();
    let d = dfs(sig, &cands, &mut chosen, target)
        .ok_or_else(|| Error::NoSolution(format!("no primitive idempotent found for Cl({p},{q})")))?;
    Ok(IdempotentSearch { blades: chosen, corner_dim: d })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdempotentDegree {
    pub t: usize,
    pub formula: i64,
    /// Whether the brute-force search ran (p + q ≤ SEARCH_MAX_N).
    pub searched: bool,
    pub warning: Option<String>,
}

/// Largest p + q for which the commuting-blade search is run.
pub const SEARCH_MAX_N: usize = 10;

/// t from the formula, cross-checked against the brute-force search (which wins).
pub fn idempotent_degree(p: usize, q: usize) -> Result<IdempotentDegree> {
    Signature::real(p, q)?;
    let formula = idempotent_degree_formula(p, q);
    if p + q > SEARCH_MAX_N {
        return Ok(IdempotentDegree { t: formula.max(0) as usize, formula, searched: false, warning: None });
    }
    let found = search_primitive(p, q)?.blades.len();
    let warning = (found as i64 != formula)
        .then(|| format!("formula gives t = {formula}, search gives t = {found}; using the search value"));
    Ok(IdempotentDegree { t: found, formula, searched: true, warning })
}

/// Primitive idempotent ½(1+e_{α1})⋯½(1+e_{αt}) with the lexicographically smallest blade set.
pub fn primitive_idempotent(p: usize, q: usize) -> Result<(Multivector, Vec<Blade>)> {
    let s = search_primitive(p, q)?;
    Ok((idempotent_from(Signature::real(p, q)?, &s.blades), s.blades))
}

/// Factors Cℓ(sᵢ,tᵢ) with sᵢ+tᵢ = 2: peel Cℓ(1,1) (positive, remainder unchanged) while
/// possible, else Cℓ(2,0) or Cℓ(0,2) (negative, remainder signature flipped).
pub fn karoubi_factorization(p: usize, q: usize) -> Result<Vec<(usize, usize)>> {
    if p + q == 0 {
        return Err(Error::EmptySignature { p, q });
    }
    if (p + q) % 2 == 1 {
        return Err(Error::NeedsEven(p + q));
    }
    let (mut p, mut q) = (p, q);
    let mut out = Vec::new();
    while p + q > 0 {
        if p >= 1 && q >= 1 {
            out.push((1, 1));
            p -= 1;
            q -= 1;
        } else if p >= 2 {
            out.push((2, 0));
            (p, q) = (q, p - 2);
        } else {
            out.push((0, 2));
            (p, q) = (q - 2, p);
        }
    }
    Ok(out)
}

/// l₀ = r/2 = (p+q)/4 for a factorization into r two-generator pieces.
pub fn l0_of(p: usize, q: usize) -> Rational {
    rat((p + q) as i128, 4)
}

/// Real Brauer–Wall class (q − p) mod 8.
pub fn bw_real_class(p: usize, q: usize) -> usize {
    pq_mod8(q, p)
}

pub fn bw_complex_class(n: usize) -> usize {
    n % 2
}

pub fn bw_real_add(c1: usize, c2: usize) -> usize {
    (c1 + c2) % 8
}

pub fn bw_complex_add(c1: usize, c2: usize) -> usize {
    (c1 + c2) % 2
}

/// Sum of the factor classes under the graded product.
pub fn karoubi_class_sum(factors: &[(usize, usize)]) -> usize {
    factors.iter().fold(0, |acc, &(s, t)| bw_real_add(acc, bw_real_class(s, t)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RepClass {
    R0,
    R2,
    H4,
    H6,
    C3,
    C7,
    Doubled,
}

/// Class of the real representation for p − q ≡ 0,2,4,6 (mod 8).
pub fn rep_class(p: usize, q: usize) -> Result<RepClass> {
    match pq_mod8(p, q) {
        0 => Ok(RepClass::R0),
        2 => Ok(RepClass::R2),
        4 => Ok(RepClass::H4),
        6 => Ok(RepClass::H6),
        k => Err(Error::OddType(k)),
    }
}

fn any_rep_class(p: usize, q: usize) -> RepClass {
    match pq_mod8(p, q) {
        3 => RepClass::C3,
        7 => RepClass::C7,
        1 | 5 => RepClass::Doubled,
        _ => rep_class(p, q).expect("even type"),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassificationRecord {
    pub p: usize,
    pub q: usize,
    pub ring: RingClass,
    pub pq_mod8: usize,
    pub t: usize,
    pub t_formula: i64,
    pub rep_class: RepClass,
    pub bw_real_class: usize,
    pub karoubi: Option<Vec<(usize, usize)>>,
    pub l0: Option<String>,
    pub warnings: Vec<String>,
}

pub fn classify(p: usize, q: usize) -> Result<ClassificationRecord> {
    Signature::real(p, q)?;
    let deg = idempotent_degree(p, q)?;
    let karoubi = karoubi_factorization(p, q).ok();
    Ok(ClassificationRecord {
        p,
        q,
        ring: ring_class(p, q),
        pq_mod8: pq_mod8(p, q),
        t: deg.t,
        t_formula: deg.formula,
        rep_class: any_rep_class(p, q),
        bw_real_class: bw_real_class(p, q),
        l0: karoubi.as_ref().map(|_| l0_of(p, q).to_string()),
        karoubi,
        warnings: deg.warning.into_iter().collect(),
    })
}
