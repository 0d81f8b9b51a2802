//! Matrices W, E, C, Π of the discrete symmetries in a spinor basis.

use crate::algebra::{Automorphism, Multivector};
use crate::error::{Error, Result};
use crate::linalg::{self, SparseRow};
use crate::matrix::{product, ExactMatrix, Relation};
use crate::scalar::CxRational;
use crate::spinrep::{represent, spinbasis, SpinBasis};
use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;

/// Inverse of a matrix whose square is ±I.
pub fn unit_inverse(m: &ExactMatrix) -> Option<ExactMatrix> {
    let s = (m * m).scalar_value()?;
    Some(m.scale(&s.inv()?))
}

fn sign_of_square(m: &ExactMatrix) -> Option<i8> {
    let s = (m * m).scalar_value()?;
    if s == CxRational::one() {
        Some(1)
    } else if s == -CxRational::one() {
        Some(-1)
    } else {
        None
    }
}

pub fn is_symmetric(m: &ExactMatrix) -> bool {
    m.transpose() == *m
}

pub fn is_skew(m: &ExactMatrix) -> bool {
    m.transpose() == -m.clone()
}

/// W = 𝓔₁𝓔₂⋯𝓔ₙ.
pub fn matrix_w(basis: &SpinBasis) -> Result<ExactMatrix> {
    if basis.n() % 2 == 1 {
        return Err(Error::NeedsEven(basis.n()));
    }
    Ok(product(basis.side(), &basis.mats).canonical_sign())
}

/// Indices of the symmetric and of the skew-symmetric generators.
pub fn partition_sets(basis: &SpinBasis) -> Result<(Vec<usize>, Vec<usize>)> {
    let mut sym = Vec::new();
    let mut skew = Vec::new();
    for (i, m) in basis.mats.iter().enumerate() {
        if is_symmetric(m) {
            sym.push(i);
        } else if is_skew(m) {
            skew.push(i);
        } else {
            return Err(Error::NoSolution(format!("generator {} is neither symmetric nor skew", i + 1)));
        }
    }
    Ok((sym, skew))
}

fn product_of(basis: &SpinBasis, idx: &[usize]) -> ExactMatrix {
    product(basis.side(), idx.iter().map(|&i| &basis.mats[i])).canonical_sign()
}

/// Number of symmetric generators.
pub fn symmetric_count(basis: &SpinBasis) -> Result<usize> {
    Ok(partition_sets(basis)?.0.len())
}

/// E with 𝓔ᵢE = E𝓔ᵢᵀ: product of the symmetric generators for odd m, else of the skew ones.
pub fn matrix_e(basis: &SpinBasis) -> Result<ExactMatrix> {
    if basis.n() % 2 == 1 {
        return Err(Error::NeedsEven(basis.n()));
    }
    let (sym, skew) = partition_sets(basis)?;
    Ok(product_of(basis, if sym.len() % 2 == 1 { &sym } else { &skew }))
}

/// C with C𝓔ᵢᵀ = −𝓔ᵢC: the complementary product.
pub fn matrix_c(basis: &SpinBasis) -> Result<ExactMatrix> {
    if basis.n() % 2 == 1 {
        return Err(Error::NeedsEven(basis.n()));
    }
    let (sym, skew) = partition_sets(basis)?;
    Ok(product_of(basis, if sym.len() % 2 == 1 { &skew } else { &sym }))
}

/// Outcome of the defining conditions for E and C.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EcConditions {
    pub e_intertwines: bool,
    pub c_intertwines: bool,
    pub e_transpose_law: bool,
    pub c_transpose_law: bool,
    pub c_proportional_to_ewt: bool,
}

impl EcConditions {
    pub fn all(&self) -> bool {
        self.e_intertwines && self.c_intertwines && self.e_transpose_law && self.c_transpose_law && self.c_proportional_to_ewt
    }
}

fn parity_sign(k: usize) -> CxRational {
    if k.is_multiple_of(2) {
        CxRational::one()
    } else {
        -CxRational::one()
    }
}

pub fn check_ec(basis: &SpinBasis, w: &ExactMatrix, e: &ExactMatrix, c: &ExactMatrix, m: usize) -> EcConditions {
    let e_intertwines = basis.mats.iter().all(|g| g * e == e * &g.transpose());
    let c_intertwines = basis.mats.iter().all(|g| (c * &g.transpose()) == -(g * c));
    let e_transpose_law = e.transpose() == e.scale(&parity_sign(m * m.saturating_sub(1) / 2));
    let c_transpose_law = c.transpose() == c.scale(&parity_sign(m * (m + 1) / 2));
    let c_proportional_to_ewt = c.proportional_to(&(e * &w.transpose())).is_some();
    EcConditions { e_intertwines, c_intertwines, e_transpose_law, c_transpose_law, c_proportional_to_ewt }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GroupClass {
    Z2xZ2,
    Z4,
    D4modZ2,
    Q4modZ2,
}

impl GroupClass {
    pub fn is_abelian(self) -> bool {
        matches!(self, GroupClass::Z2xZ2 | GroupClass::Z4)
    }
}

/// Group {I, W, E, C} up to sign, with signs of (W², E², C²).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GroupClassification {
    pub class: GroupClass,
    pub triple: [i8; 3],
    pub raw_triple: [i8; 3],
    pub abelian: bool,
}

/// Complex case: squares can be rescaled by i, so only commutativity matters.
pub fn classify_complex(w: &ExactMatrix, e: &ExactMatrix, c: &ExactMatrix) -> Result<GroupClassification> {
    let raw = squares(w, e, c)?;
    let abelian = w.relation(e) == Relation::Commutes;
    let (class, triple) = if abelian { (GroupClass::Z2xZ2, [1; 3]) } else { (GroupClass::Q4modZ2, [-1; 3]) };
    Ok(GroupClassification { class, triple, raw_triple: raw, abelian })
}

/// Real case: the squares are invariants.
pub fn classify_real(w: &ExactMatrix, e: &ExactMatrix, c: &ExactMatrix) -> Result<GroupClassification> {
    let triple = squares(w, e, c)?;
    let abelian = e.relation(c) == Relation::Commutes;
    let class = match (abelian, triple) {
        (true, [1, 1, 1]) => GroupClass::Z2xZ2,
        (true, _) => GroupClass::Z4,
        (false, [-1, -1, -1]) => GroupClass::Q4modZ2,
        (false, _) => GroupClass::D4modZ2,
    };
    Ok(GroupClassification { class, triple, raw_triple: triple, abelian })
}

fn squares(w: &ExactMatrix, e: &ExactMatrix, c: &ExactMatrix) -> Result<[i8; 3]> {
    let s = |m: &ExactMatrix| sign_of_square(m).ok_or_else(|| Error::NoSolution("square is not ±I".into()));
    Ok([s(w)?, s(e)?, s(c)?])
}

/// Reflection group of ℂn in the canonical basis.
pub fn reflection_group_class(n: usize) -> Result<GroupClassification> {
    let b = spinbasis(n)?;
    classify_complex(&matrix_w(&b)?, &matrix_e(&b)?, &matrix_c(&b)?)
}

/// Expected complex class: Z2xZ2 for n ≡ 0 (mod 4), Q4/Z2 for n ≡ 2.
pub fn expected_complex_class(n: usize) -> Option<(GroupClass, [i8; 3])> {
    match n % 4 {
        0 => Some((GroupClass::Z2xZ2, [1, 1, 1])),
        2 => Some((GroupClass::Q4modZ2, [-1, -1, -1])),
        _ => None,
    }
}

/// W, E, C of Cℓ(p,q) built from the real-split generators: E collects the generators of
/// square −1 when p is even and those of square +1 when p is odd; C collects the rest.
pub fn real_wec(p: usize, q: usize) -> Result<(ExactMatrix, ExactMatrix, ExactMatrix)> {
    if (p + q) % 2 == 1 {
        return Err(Error::NeedsEven(p + q));
    }
    let b = spinbasis(p + q)?;
    let gens = b.real_split(p);
    let side = b.side();
    let pos = product(side, &gens[..p]).canonical_sign();
    let neg = product(side, &gens[p..]).canonical_sign();
    let w = product(side, &gens).canonical_sign();
    Ok(if p.is_multiple_of(2) { (w, neg, pos) } else { (w, pos, neg) })
}

pub fn reflection_group_class_real(p: usize, q: usize) -> Result<GroupClassification> {
    let (w, e, c) = real_wec(p, q)?;
    classify_real(&w, &e, &c)
}

/// Quoted real cases for p − q ≡ 0, 2 (mod 8).
pub fn expected_real_class(p: usize, q: usize) -> Option<(GroupClass, [i8; 3])> {
    use GroupClass::*;
    let d = (p as i64 - q as i64).rem_euclid(8);
    match (d, p % 4, q % 4) {
        (0, 0, 0) => Some((Z2xZ2, [1, 1, 1])),
        (0, 2, 2) => Some((Z4, [1, -1, -1])),
        (0, 3, 3) => Some((D4modZ2, [1, -1, 1])),
        (0, 1, 1) => Some((D4modZ2, [1, 1, -1])),
        (2, 0, 2) => Some((Z4, [-1, -1, 1])),
        (2, 2, 0) => Some((Z4, [-1, 1, -1])),
        (2, 3, 1) => Some((Q4modZ2, [-1, -1, -1])),
        (2, 1, 3) => Some((D4modZ2, [-1, 1, 1])),
        _ => None,
    }
}

/// Full symmetry data of a complex basis.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SymmetrySet {
    pub w: ExactMatrix,
    pub e: ExactMatrix,
    pub c: ExactMatrix,
    pub pi: Option<ExactMatrix>,
    pub m: usize,
    pub a: usize,
    pub b: usize,
    pub squares: [i8; 3],
}

pub fn symmetry_set(basis: &SpinBasis) -> Result<SymmetrySet> {
    let w = matrix_w(basis)?;
    let e = matrix_e(basis)?;
    let c = matrix_c(basis)?;
    let m = symmetric_count(basis)?;
    let kinds = generator_kinds(&basis.mats);
    let a = kinds.iter().filter(|&&k| k == GenKind::Imaginary).count();
    let pi = pi_from_generators(&basis.mats).ok().filter(|p| !p.scalar).map(|p| p.matrix);
    Ok(SymmetrySet { squares: squares(&w, &e, &c)?, w, e, c, pi, m, a, b: basis.n() - a })
}

/// Checks at matrix level that W, E, C realize ⋆, ˜ and ˜⋆ on random elements.
pub fn automorphisms_realized<R: Rng>(basis: &SpinBasis, rng: &mut R, samples: usize) -> Result<bool> {
    let w = matrix_w(basis)?;
    let e = matrix_e(basis)?;
    let c = matrix_c(basis)?;
    let inv = |m: &ExactMatrix| unit_inverse(m).ok_or_else(|| Error::NoSolution("not invertible".into()));
    let (wi, ei, ci) = (inv(&w)?, inv(&e)?, inv(&c)?);
    for _ in 0..samples {
        let x = Multivector::random(basis.context, rng, 6);
        let xm = represent(basis, &x)?;
        let star = represent(basis, &Automorphism::Star.apply(&x))?;
        let tilde = represent(basis, &Automorphism::Tilde.apply(&x))?;
        let conj = represent(basis, &Automorphism::TildeStar.apply(&x))?;
        if star != &(&w * &xm) * &wi || tilde != &(&e * &xm.transpose()) * &ei || conj != &(&c * &xm.transpose()) * &ci {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GenKind {
    Real,
    Imaginary,
    Mixed,
}

pub fn generator_kinds(gens: &[ExactMatrix]) -> Vec<GenKind> {
    gens.iter()
        .map(|g| {
            let c = g.conj();
            if c == *g {
                GenKind::Real
            } else if c == -g.clone() {
                GenKind::Imaginary
            } else {
                GenKind::Mixed
            }
        })
        .collect()
}

/// Π with Π·conj(𝓔ᵢ)·Π⁻¹ = 𝓔ᵢ, built as a product of generators of one kind.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PiMatrix {
    pub matrix: ExactMatrix,
    /// 0-based generator indices in the product.
    pub factors: Vec<usize>,
    pub a: usize,
    pub b: usize,
    /// Π ∼ I (all generators real).
    pub scalar: bool,
}

/// Π is the product of the imaginary generators when their number a is even,
/// otherwise of the real ones.
pub fn pi_from_generators(gens: &[ExactMatrix]) -> Result<PiMatrix> {
    let kinds = generator_kinds(gens);
    if kinds.contains(&GenKind::Mixed) {
        return Err(Error::NoSolution("a generator is neither real nor imaginary".into()));
    }
    let imag: Vec<usize> = (0..gens.len()).filter(|&i| kinds[i] == GenKind::Imaginary).collect();
    let real: Vec<usize> = (0..gens.len()).filter(|&i| kinds[i] == GenKind::Real).collect();
    let (a, b) = (imag.len(), real.len());
    let factors = if a % 2 == 0 { imag } else { real };
    let side = gens[0].side();
    let matrix = product(side, factors.iter().map(|&i| &gens[i])).canonical_sign();
    if !pi_condition(gens, &matrix) {
        return Err(Error::NoSolution(format!("product formula fails with a = {a}, b = {b}")));
    }
    Ok(PiMatrix { matrix, scalar: a == 0, factors, a, b })
}

/// Π for Cℓ(p,q) over the real split of the canonical basis.
pub fn matrix_pi(p: usize, q: usize) -> Result<PiMatrix> {
    let d = (p as i64 - q as i64).rem_euclid(8) as usize;
    if d % 2 == 1 {
        return Err(Error::OddType(d));
    }
    pi_from_generators(&spinbasis(p + q)?.real_split(p))
}

/// Π·conj(G) = G·Π for every generator.
pub fn pi_condition(gens: &[ExactMatrix], pi: &ExactMatrix) -> bool {
    gens.iter().all(|g| pi * &g.conj() == g * pi)
}

/// All solutions X of X·conj(G) = G·X, as a basis of matrices.
pub fn pi_oracle(gens: &[ExactMatrix]) -> Vec<ExactMatrix> {
    let side = gens[0].side();
    let var = |r: usize, c: usize| r * side + c;
    let mut rows: Vec<SparseRow> = Vec::new();
    for g in gens {
        let gc = g.conj();
        for i in 0..side {
            for j in 0..side {
                let mut row = SparseRow::new();
                let mut add = |k: usize, v: CxRational| {
                    if !v.is_zero() {
                        let cur = row.remove(&k).unwrap_or_else(CxRational::zero);
                        let next = cur + v;
                        if !next.is_zero() {
                            row.insert(k, next);
                        }
                    }
                };
                for k in 0..side {
                    add(var(i, k), gc.get(k, j).clone());
                    add(var(k, j), -g.get(i, k).clone());
                }
                rows.push(row);
            }
        }
    }
    linalg::nullspace(rows, side * side)
        .into_iter()
        .map(|v| ExactMatrix::from_fn(side, |i, j| v[var(i, j)].clone()))
        .collect()
}

/// s with Π·conj(Π) = s·I.
pub fn pipi_dot(pi: &ExactMatrix) -> Option<i8> {
    let s = (pi * &pi.conj()).scalar_value()?;
    if s == CxRational::one() {
        Some(1)
    } else if s == -CxRational::one() {
        Some(-1)
    } else {
        None
    }
}

/// Stated law: +1 when the number of factors is ≡ 0,1 (mod 4), −1 when ≡ 2,3.
pub fn pipi_dot_stated(factors: usize) -> i8 {
    if factors % 4 < 2 {
        1
    } else {
        -1
    }
}

/// +1 if Π and W commute, −1 if they anticommute.
pub fn pi_w_commutator(pi: &ExactMatrix, w: &ExactMatrix) -> Option<i8> {
    match pi.relation(w) {
        Relation::Commutes => Some(1),
        Relation::Anticommutes => Some(-1),
        Relation::Neither => None,
    }
}

/// Parity rule: commute iff ab is even.
pub fn pi_w_expected(a: usize, b: usize) -> i8 {
    if (a * b).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompatReport {
    /// Relation of Π with A23, A13, A12, B1, B2, B3.
    pub relations: Vec<Relation>,
    /// Π commutes with all six operators.
    pub com: bool,
    /// Π commutes with the rotation generators.
    pub com2: bool,
}

pub fn charge_conjugation_compat(pi: &ExactMatrix, ops: &crate::lorentz::OperatorSet<CxRational>) -> CompatReport {
    let relations: Vec<Relation> = ops.all().iter().map(|o| pi.relation(o)).collect();
    let com = relations.iter().all(|&r| r == Relation::Commutes);
    let com2 = relations[..3].iter().all(|&r| r == Relation::Commutes);
    CompatReport { relations, com, com2 }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spinrep::pauli_basis;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn c2_matrices() {
        let b = spinbasis(2).unwrap();
        let [s0, s1, s2, s3] = pauli_basis();
        let w = matrix_w(&b).unwrap();
        assert_eq!(w, s3.scale(&CxRational::i()));
        assert_eq!(&w * &w, -s0);
        assert_eq!(matrix_e(&b).unwrap(), s1);
        let c = matrix_c(&b).unwrap();
        assert!(c.proportional_to(&s2).is_some());
        let g = reflection_group_class(2).unwrap();
        assert_eq!((g.class, g.raw_triple), (GroupClass::Q4modZ2, [-1, 1, 1]));
    }

    #[test]
    fn conditions_for_even_n() {
        for n in (2..=8).step_by(2) {
            let b = spinbasis(n).unwrap();
            let (w, e, c) = (matrix_w(&b).unwrap(), matrix_e(&b).unwrap(), matrix_c(&b).unwrap());
            let m = symmetric_count(&b).unwrap();
            assert_eq!(m, n / 2);
            assert!(check_ec(&b, &w, &e, &c, m).all(), "n = {n}");
            let w2 = if n % 4 == 0 { ExactMatrix::identity(b.side()) } else { -ExactMatrix::identity(b.side()) };
            assert_eq!(&w * &w, w2);
            for g in &b.mats {
                assert_eq!(&(&w * g) * &unit_inverse(&w).unwrap(), -g.clone());
            }
        }
        assert!(matrix_w(&spinbasis(3).unwrap()).is_err());
    }

    #[test]
    fn complex_classes() {
        for n in [2, 4, 6, 8] {
            let g = reflection_group_class(n).unwrap();
            assert_eq!(Some((g.class, g.triple)), expected_complex_class(n));
        }
        let raw: Vec<[i8; 3]> = [2, 4, 6, 8].iter().map(|&n| reflection_group_class(n).unwrap().raw_triple).collect();
        assert_eq!(raw, vec![[-1, 1, 1], [1, -1, -1], [-1, -1, -1], [1, 1, 1]]);
    }

    #[test]
    fn real_classes() {
        for p in 0..=8 {
            for q in 0..=8 {
                if p + q == 0 || p + q > 8 {
                    continue;
                }
                if let Some(expect) = expected_real_class(p, q) {
                    let g = reflection_group_class_real(p, q).unwrap();
                    assert_eq!((g.class, g.triple), expect, "({p},{q})");
                }
            }
        }
        let (_, e, _) = real_wec(8, 0).unwrap();
        assert!(e.is_identity());
    }

    #[test]
    fn automorphism_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in [2, 4, 6] {
            assert!(automorphisms_realized(&spinbasis(n).unwrap(), &mut rng, 5).unwrap());
        }
    }

    #[test]
    fn pi_matches_oracle() {
        for (p, q) in [(0, 2), (1, 3), (4, 0), (0, 4), (2, 4), (3, 5), (5, 1), (7, 1)] {
            let pi = matrix_pi(p, q).unwrap();
            let gens = spinbasis(p + q).unwrap().real_split(p);
            let sol = pi_oracle(&gens);
            assert_eq!(sol.len(), 1, "({p},{q})");
            assert!(pi.matrix.proportional_to(&sol[0]).is_some());
        }
        assert!(matrix_pi(1, 1).unwrap().scalar);
        assert!(matrix_pi(3, 0).is_err());
    }

    #[test]
    fn pipi_dot_is_product_of_squares() {
        for (p, q) in [(0, 2), (1, 3), (2, 4), (7, 1), (4, 0), (0, 6)] {
            let pi = matrix_pi(p, q).unwrap();
            let gens = spinbasis(p + q).unwrap().real_split(p);
            let f = pi.factors.len();
            let sq: i8 = pi.factors.iter().map(|&i| sign_of_square(&gens[i]).unwrap()).product();
            let expect = pipi_dot_stated(f) * sq;
            assert_eq!(pipi_dot(&pi.matrix), Some(expect), "({p},{q})");
        }
        // The stated law alone misses the sign from generators of square −1.
        let pi = matrix_pi(0, 2).unwrap();
        assert_ne!(pipi_dot(&pi.matrix), Some(pipi_dot_stated(pi.factors.len())));
    }

    #[test]
    fn pi_w_parity() {
        for (p, q) in [(0, 2), (1, 3), (4, 0), (2, 4), (7, 1), (1, 5)] {
            let pi = matrix_pi(p, q).unwrap();
            let w = product(1 << ((p + q) / 2), &spinbasis(p + q).unwrap().real_split(p));
            assert_eq!(pi_w_commutator(&pi.matrix, &w), Some(pi_w_expected(pi.a, pi.b)), "({p},{q})");
        }
    }
}
