//! Spinor representations of ℂn by Kronecker products of Pauli matrices.

use crate::algebra::{Blade, Field, Multivector, Signature};
use crate::error::{Error, Result};
use crate::linalg::{self, Echelon};
use crate::matrix::{exact, product, ExactMatrix};
use crate::scalar::CxRational;

/// σ₀, σ₁, σ₂, σ₃.
pub fn pauli_basis() -> [ExactMatrix; 4] {
    [
        exact(&[&[(1, 0), (0, 0)], &[(0, 0), (1, 0)]]),
        exact(&[&[(0, 0), (1, 0)], &[(1, 0), (0, 0)]]),
        exact(&[&[(0, 0), (0, -1)], &[(0, 1), (0, 0)]]),
        exact(&[&[(1, 0), (0, 0)], &[(0, 0), (-1, 0)]]),
    ]
}

fn kron_all(factors: &[&ExactMatrix]) -> ExactMatrix {
    factors.iter().skip(1).fold(factors[0].clone(), |acc, m| acc.kron(m))
}

fn slot_product(k: usize, j: usize, head: &ExactMatrix, mid: &ExactMatrix, tail: &ExactMatrix) -> ExactMatrix {
    let f: Vec<&ExactMatrix> = (0..k).map(|s| if s < j { head } else if s == j { mid } else { tail }).collect();
    kron_all(&f)
}

/// Ordered generator matrices of a complex algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinBasis {
    pub context: Signature,
    pub mats: Vec<ExactMatrix>,
}

/// 𝓔ⱼ = σ₃^{⊗(j−1)} ⊗ σ₁ ⊗ σ₀^{⊗(k−j)}, 𝓔ₖ₊ⱼ likewise with σ₂.
pub fn build_even_spinbasis(k: usize) -> SpinBasis {
    assert!(k >= 1, "k must be positive");
    let [s0, s1, s2, s3] = pauli_basis();
    let mut mats: Vec<ExactMatrix> = (0..k).map(|j| slot_product(k, j, &s3, &s1, &s0)).collect();
    mats.extend((0..k).map(|j| slot_product(k, j, &s3, &s2, &s0)));
    SpinBasis { context: Signature::complex(2 * k).expect("k ≥ 1"), mats }
}

/// 𝓔₂ₖ₊₁ = σ₃^{⊗k}.
pub fn extend_odd(k: usize) -> ExactMatrix {
    assert!(k >= 1, "k must be positive");
    let s3 = &pauli_basis()[3];
    kron_all(&vec![s3; k])
}

/// Canonical basis of ℂn: the even construction plus σ₃^{⊗k} when n is odd.
pub fn spinbasis(n: usize) -> Result<SpinBasis> {
    if n == 0 {
        return Err(Error::EmptySignature { p: 0, q: 0 });
    }
    if n == 1 {
        return Ok(SpinBasis { context: Signature::complex(1)?, mats: vec![ExactMatrix::identity(1)] });
    }
    let k = n / 2;
    let mut b = build_even_spinbasis(k);
    if n % 2 == 1 {
        b.mats.push(extend_odd(k));
        b.context = Signature::complex(n)?;
    }
    Ok(b)
}

/// 𝒩ⱼ = 𝓔ⱼ𝓔ₖ₊ⱼ = i·σ₀ ⊗ ⋯ ⊗ σ₃ (slot j) ⊗ ⋯ ⊗ σ₀.
pub fn n_matrix(k: usize, j: usize) -> ExactMatrix {
    let b = build_even_spinbasis(k);
    &b.mats[j - 1] * &b.mats[k + j - 1]
}

impl SpinBasis {
    pub fn n(&self) -> usize {
        self.mats.len()
    }

    pub fn side(&self) -> usize {
        self.mats[0].side()
    }

    /// Re-labels the context (e.g. to attach a real split) without changing matrices.
    pub fn with_context(mut self, sig: Signature) -> Self {
        assert_eq!(sig.n(), self.n());
        self.context = sig;
        self
    }

    /// Matrix of the basis blade `mask` as the ordered product of generators.
    pub fn blade_matrix(&self, mask: Blade) -> ExactMatrix {
        product(self.side(), (0..self.n()).filter(|i| mask >> i & 1 == 1).map(|i| &self.mats[i]))
    }

    /// Generator matrices of the real split: 𝓔ᵢ for i ≤ p, i·𝓔ᵢ for i > p.
    pub fn real_split(&self, p: usize) -> Vec<ExactMatrix> {
        self.mats.iter().enumerate().map(|(i, m)| if i < p { m.clone() } else { m.scale(&CxRational::i()) }).collect()
    }

    /// Checks 𝓔ᵢ² = I and 𝓔ᵢ𝓔ⱼ + 𝓔ⱼ𝓔ᵢ = 0 for all i ≠ j.
    pub fn check_clifford(&self) -> CliffordCheck {
        let mut squares_ok = true;
        let mut anticomm_ok = true;
        for (i, a) in self.mats.iter().enumerate() {
            squares_ok &= (a * a).is_identity();
            for b in &self.mats[i + 1..] {
                anticomm_ok &= a.anticommutator(b).is_zero();
            }
        }
        CliffordCheck { squares_ok, anticomm_ok }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CliffordCheck {
    pub squares_ok: bool,
    pub anticomm_ok: bool,
}

impl CliffordCheck {
    pub fn ok(&self) -> bool {
        self.squares_ok && self.anticomm_ok
    }
}

/// Linear extension of eᵢ ↦ 𝓔ᵢ; in a real context eᵢ ↦ i𝓔ᵢ for i > p.
pub fn represent(basis: &SpinBasis, x: &Multivector) -> Result<ExactMatrix> {
    let sig = x.signature();
    if sig.n() != basis.n() {
        return Err(Error::ArityMismatch { basis: basis.n(), element: sig.n() });
    }
    let gens = match sig.field {
        Field::Complex => basis.mats.clone(),
        Field::Real => basis.real_split(sig.p),
    };
    let side = basis.side();
    let mut out = ExactMatrix::zeros(side);
    for (&b, c) in x.terms() {
        let m = product(side, (0..sig.n()).filter(|i| b >> i & 1 == 1).map(|i| &gens[i]));
        out = &out + &m.scale(c);
    }
    Ok(out)
}

/// Rank of the 2ⁿ generator products viewed as vectors.
pub fn span_rank(basis: &SpinBasis) -> usize {
    let mut e = Echelon::new();
    for mask in 0..(1u64 << basis.n()) {
        e.insert(linalg::to_sparse(basis.blade_matrix(mask as Blade).entries()));
    }
    e.rank()
}

/// Element P¹ + U·P² of ℂ₂ₖ₊₁ stored by its two even-part slots.
#[derive(Clone, Debug, PartialEq)]
pub struct OddElement {
    pub even: ExactMatrix,
    pub upart: ExactMatrix,
}

impl OddElement {
    pub fn new(even: ExactMatrix, upart: ExactMatrix) -> Self {
        assert_eq!(even.side(), upart.side());
        OddElement { even, upart }
    }

    pub fn u(side: usize) -> Self {
        OddElement::new(ExactMatrix::zeros(side), ExactMatrix::identity(side))
    }

    pub fn add(&self, o: &Self) -> Self {
        OddElement::new(&self.even + &o.even, &self.upart + &o.upart)
    }

    /// Product using that U is central with U² = 1.
    pub fn mul(&self, o: &Self) -> Self {
        OddElement::new(
            &(&self.even * &o.even) + &(&self.upart * &o.upart),
            &(&self.even * &o.upart) + &(&self.upart * &o.even),
        )
    }

    /// P¹ − U·P¹.
    pub fn kernel_element(p: &ExactMatrix) -> Self {
        OddElement::new(p.clone(), -p.clone())
    }
}

/// χ(P¹ + U·P²) = P¹ + P².
pub fn chi_quotient(x: &OddElement) -> ExactMatrix {
    &x.even + &x.upart
}

/// Scalar u with ε𝓔₁⋯𝓔₂ₖ₊₁ = u·I in the canonical basis.
pub fn u_scalar(k: usize) -> CxRational {
    let b = spinbasis(2 * k + 1).expect("k ≥ 1");
    let eps = crate::algebra::epsilon(b.context).expect("complex odd algebra");
    let u = product(b.side(), &b.mats).scale(&eps);
    u.scalar_value().expect("volume element is central")
}

/// Dimension of ker χ over the two-slot space, via rank of χ on its basis.
pub fn chi_kernel_dimension(k: usize) -> (usize, usize) {
    let b = build_even_spinbasis(k);
    let side = b.side();
    let evens: Vec<ExactMatrix> = (0..1u64 << b.n()).map(|m| b.blade_matrix(m as Blade)).collect();
    let zero = ExactMatrix::zeros(side);
    let images = evens
        .iter()
        .flat_map(|p| [OddElement::new(p.clone(), zero.clone()), OddElement::new(zero.clone(), p.clone())])
        .map(|x| linalg::to_sparse(chi_quotient(&x).entries()));
    let rank = linalg::rank_sparse(images);
    let total = 2 * evens.len();
    (total - rank, total)
}

/// Identity used as χ(U).
pub fn chi_of_u(side: usize) -> ExactMatrix {
    chi_quotient(&OddElement::u(side))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::exact;
    use num_traits::One;

    fn printed_c4() -> Vec<ExactMatrix> {
        let z = (0, 0);
        vec![
            exact(&[&[z, z, (1, 0), z], &[z, z, z, (1, 0)], &[(1, 0), z, z, z], &[z, (1, 0), z, z]]),
            exact(&[&[z, (1, 0), z, z], &[(1, 0), z, z, z], &[z, z, z, (-1, 0)], &[z, z, (-1, 0), z]]),
            exact(&[&[z, z, (0, -1), z], &[z, z, z, (0, -1)], &[(0, 1), z, z, z], &[z, (0, 1), z, z]]),
            exact(&[&[z, (0, -1), z, z], &[(0, 1), z, z, z], &[z, z, z, (0, 1)], &[z, z, (0, -1), z]]),
        ]
    }

    #[test]
    fn pauli_relations() {
        let [s0, s1, s2, s3] = pauli_basis();
        assert_eq!(&s1 * &s2, s3.scale(&CxRational::i()));
        for s in [&s1, &s2, &s3] {
            assert_eq!(s * s, s0);
        }
    }

    #[test]
    fn c4_reproduces_printed_matrices() {
        assert_eq!(build_even_spinbasis(2).mats, printed_c4());
    }

    #[test]
    fn small_cases() {
        let [_, s1, s2, s3] = pauli_basis();
        assert_eq!(build_even_spinbasis(1).mats, vec![s1, s2]);
        assert_eq!(extend_odd(1), s3);
        let b3 = build_even_spinbasis(3);
        assert_eq!(b3.mats[2], s3.kron(&s3).kron(&pauli_basis()[1]));
    }

    #[test]
    fn odd_extension_anticommutes() {
        for k in 1..=4 {
            let b = spinbasis(2 * k + 1).unwrap();
            assert!(b.check_clifford().ok());
        }
        let e5 = extend_odd(2);
        assert!(e5.anticommutator(&printed_c4()[0]).is_zero());
    }

    #[test]
    fn n_matrix_has_sigma3_in_slot() {
        let [s0, _, _, s3] = pauli_basis();
        let i = CxRational::i();
        assert_eq!(n_matrix(3, 2), s0.kron(&s3).kron(&s0).scale(&i));
        assert_eq!(n_matrix(2, 1), s3.kron(&s0).scale(&i));
    }

    #[test]
    fn spans() {
        assert_eq!(span_rank(&spinbasis(2).unwrap()), 4);
        assert_eq!(span_rank(&spinbasis(4).unwrap()), 16);
        assert_eq!(span_rank(&spinbasis(6).unwrap()), 64);
    }

    #[test]
    fn represent_identity_and_blade() {
        let b = spinbasis(4).unwrap();
        let s = b.context;
        assert!(represent(&b, &Multivector::one(s)).unwrap().is_identity());
        let e12 = Multivector::from_indices(s, &[1, 2]);
        assert_eq!(represent(&b, &e12).unwrap(), &printed_c4()[0] * &printed_c4()[1]);
        let wrong = Multivector::one(Signature::complex(3).unwrap());
        assert!(represent(&b, &wrong).is_err());
    }

    #[test]
    fn chi_basics() {
        assert!(chi_of_u(4).is_identity());
        let p = printed_c4()[0].clone();
        assert!(chi_quotient(&OddElement::kernel_element(&p)).is_zero());
        assert_eq!(chi_kernel_dimension(1), (4, 8));
        assert_eq!(chi_kernel_dimension(2), (16, 32));
        assert_eq!(u_scalar(1), -CxRational::one());
    }
}
