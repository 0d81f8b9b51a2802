//! Dirac–Hestenes spinors of the spacetime algebra, helicity projection and the
//! massless plane-wave equations.

use crate::error::{Error, Result};
use crate::matrix::{ExactMatrix, Matrix};
use crate::scalar::{rat, CxRational, Rational};
use crate::spinrep::pauli_basis;
use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;

fn block(a: &ExactMatrix, b: &ExactMatrix, c: &ExactMatrix, d: &ExactMatrix) -> ExactMatrix {
    let h = a.side();
    ExactMatrix::from_fn(2 * h, |i, j| {
        let m = match (i < h, j < h) {
            (true, true) => a,
            (true, false) => b,
            (false, true) => c,
            (false, false) => d,
        };
        m.get(i % h, j % h).clone()
    })
}

/// γ₀ = diag(I, −I), Γᵢ = [[0, σᵢ], [−σᵢ, 0]].
pub fn gamma_basis() -> [ExactMatrix; 4] {
    let [s0, s1, s2, s3] = pauli_basis();
    let z = ExactMatrix::zeros(2);
    let g = |s: &ExactMatrix| block(&z, s, &-s.clone(), &z);
    [block(&s0, &z, &z, &-s0.clone()), g(&s1), g(&s2), g(&s3)]
}

/// γ₅ = γ₀Γ₁Γ₂Γ₃ (squares to −I).
pub fn gamma5() -> ExactMatrix {
    let [g0, g1, g2, g3] = gamma_basis();
    &(&(&g0 * &g1) * &g2) * &g3
}

/// P± = ½(I ∓ iγ₅).
pub fn helicity_projectors() -> (ExactMatrix, ExactMatrix) {
    let i5 = gamma5().scale(&CxRational::i());
    let id = ExactMatrix::identity(4);
    let half = CxRational::real(rat(1, 2));
    ((&id - &i5).scale(&half), (&id + &i5).scale(&half))
}

/// Even-subalgebra coefficients of a Dirac–Hestenes spinor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DhSpinor {
    pub a0: Rational,
    pub a01: Rational,
    pub a02: Rational,
    pub a03: Rational,
    pub a12: Rational,
    pub a13: Rational,
    pub a23: Rational,
    pub a0123: Rational,
}

impl DhSpinor {
    pub fn from_array(a: [Rational; 8]) -> Self {
        let [a0, a01, a02, a03, a12, a13, a23, a0123] = a;
        DhSpinor { a0, a01, a02, a03, a12, a13, a23, a0123 }
    }

    pub fn to_array(&self) -> [Rational; 8] {
        [self.a0, self.a01, self.a02, self.a03, self.a12, self.a13, self.a23, self.a0123]
    }

    pub fn random<R: Rng>(rng: &mut R) -> Self {
        Self::from_array(std::array::from_fn(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=4))))
    }

    /// φ₁ = a0 − i a12, φ₂ = a13 − i a23, φ₃ = a03 − i a0123, φ₄ = a01 + i a02.
    pub fn phis(&self) -> [CxRational; 4] {
        [
            CxRational::new(self.a0, -self.a12),
            CxRational::new(self.a13, -self.a23),
            CxRational::new(self.a03, -self.a0123),
            CxRational::new(self.a01, self.a02),
        ]
    }

    /// Amplitude annihilated by the massless equation for k along +x₃:
    /// a0 = a03, a12 = a0123, a13 = −a01, a23 = a02.
    pub fn massless_along_z(a0: Rational, a12: Rational, a01: Rational, a02: Rational) -> Self {
        DhSpinor { a0, a01, a02, a03: a0, a12, a13: -a01, a23: a02, a0123: a12 }
    }
}

/// The 4×4 biquaternion matrix of a spinor.
pub fn dh_matrix(s: &DhSpinor) -> ExactMatrix {
    let [p1, p2, p3, p4] = s.phis();
    let c = |z: &CxRational| z.conj();
    let n = |z: CxRational| -z;
    Matrix::from_rows(vec![
        vec![p1.clone(), n(c(&p2)), p3.clone(), c(&p4)],
        vec![p2.clone(), c(&p1), p4.clone(), n(c(&p3))],
        vec![p3.clone(), c(&p4), p1.clone(), n(c(&p2))],
        vec![p4.clone(), n(c(&p3)), p2.clone(), c(&p1)],
    ])
}

/// Blade-by-blade expansion Σ a_A γ_A in the γ-basis.
pub fn dh_blade_matrix(s: &DhSpinor) -> ExactMatrix {
    let [g0, g1, g2, g3] = gamma_basis();
    let blades = [
        ExactMatrix::identity(4),
        &g0 * &g1,
        &g0 * &g2,
        &g0 * &g3,
        &g1 * &g2,
        &g1 * &g3,
        &g2 * &g3,
        gamma5(),
    ];
    blades
        .iter()
        .zip(s.to_array())
        .fold(ExactMatrix::zeros(4), |acc, (b, a)| &acc + &b.scale(&CxRational::real(a)))
}

fn g21() -> ExactMatrix {
    let [_, g1, g2, _] = gamma_basis();
    &g2 * &g1
}

/// φ± = P±·Φ·Γ₂Γ₁.
pub fn helicity_split(s: &DhSpinor) -> (ExactMatrix, ExactMatrix) {
    let (pp, pm) = helicity_projectors();
    let phi = &dh_matrix(s) * &g21();
    (&pp * &phi, &pm * &phi)
}

/// Closed form of φ± in terms of φ₁..φ₄ (upper sign for φ⁺).
pub fn split_closed_form(s: &DhSpinor, plus: bool) -> ExactMatrix {
    let [p1, p2, p3, p4] = s.phis();
    let sg = if plus { CxRational::one() } else { -CxRational::one() };
    let c = |z: &CxRational| z.conj();
    let m = |a: &CxRational, b: &CxRational| a - &(&sg * b);
    let pl = |a: &CxRational, b: &CxRational| a + &(&sg * b);
    let top = vec![
        vec![m(&p1, &p3), pl(&c(&p2), &c(&p4)), m(&p3, &p1), -pl(&c(&p4), &c(&p2))],
        vec![m(&p2, &p4), -pl(&c(&p1), &c(&p3)), m(&p4, &p2), pl(&c(&p3), &c(&p1))],
    ];
    let bottom = top.iter().map(|r| r.iter().map(|x| -(&sg * x)).collect()).collect::<Vec<_>>();
    let rows = top.into_iter().chain(bottom).collect();
    let half_i = CxRational::imag(rat(1, 2));
    Matrix::from_rows(rows).scale(&half_i)
}

/// The two Weyl spinors (first two columns of the upper block) of φ⁺ or φ⁻.
pub fn weyl_pair(phi: &ExactMatrix) -> [[CxRational; 2]; 2] {
    [[phi.get(0, 0).clone(), phi.get(1, 0).clone()], [phi.get(0, 1).clone(), phi.get(1, 1).clone()]]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Chirality {
    Undotted,
    Dotted,
}

/// Sign of the phase: exp(±i(k·x − ωt)).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Phase {
    Positive,
    Negative,
}

impl Phase {
    fn factor(self) -> CxRational {
        match self {
            Phase::Positive => CxRational::i(),
            Phase::Negative => -CxRational::i(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlaneWave {
    pub u: [CxRational; 2],
    pub k: [Rational; 3],
    pub omega: Rational,
    pub chirality: Chirality,
    pub phase: Phase,
}

fn rational_sqrt(x: Rational) -> Option<Rational> {
    let s = CxRational::sqrt_rational(&x)?;
    s.is_real().then_some(s.re)
}

impl PlaneWave {
    pub fn new(u: [CxRational; 2], k: [Rational; 3], omega: Rational, chirality: Chirality) -> Self {
        PlaneWave { u, k, omega, chirality, phase: Phase::Positive }
    }

    /// ω = |k|; requires |k| rational.
    pub fn on_shell(u: [CxRational; 2], k: [Rational; 3], chirality: Chirality) -> Result<Self> {
        let k2 = k.iter().fold(Rational::zero(), |a, x| a + x * x);
        let omega = rational_sqrt(k2).ok_or_else(|| Error::NoSolution(format!("|k|² = {k2} has no rational root")))?;
        Ok(Self::new(u, k, omega, chirality))
    }

    pub fn with_phase(mut self, phase: Phase) -> Self {
        self.phase = phase;
        self
    }

    pub fn is_on_shell(&self) -> bool {
        self.omega * self.omega == self.k.iter().fold(Rational::zero(), |a, x| a + x * x)
    }
}

/// On-shell plane wave of the given chirality with zero Weyl residual.
pub fn weyl_zero_mode(k: [Rational; 3], chirality: Chirality) -> Result<PlaneWave> {
    let zero = PlaneWave::on_shell([CxRational::zero(), CxRational::zero()], k, chirality)?;
    if zero.omega.is_zero() {
        return Err(Error::NoSolution("k = 0 has no nontrivial zero mode".into()));
    }
    // Kernel of ω ± σ·k with the sign flipped for the dotted case.
    let s = match chirality {
        Chirality::Undotted => Rational::one(),
        Chirality::Dotted => -Rational::one(),
    };
    let [k1, k2, k3] = k.map(|x| x * s);
    let w = zero.omega;
    let u = if w + k3 != Rational::zero() {
        [CxRational::new(k1, -k2), CxRational::real(-(w + k3))]
    } else {
        [CxRational::real(w - k3), CxRational::new(-k1, -k2)]
    };
    Ok(PlaneWave { u, ..zero })
}

/// σ·k.
pub fn sigma_dot(k: &[Rational; 3]) -> ExactMatrix {
    let [_, s1, s2, s3] = pauli_basis();
    let r = |x: Rational| CxRational::real(x);
    &(&s1.scale(&r(k[0])) + &s2.scale(&r(k[1]))) + &s3.scale(&r(k[2]))
}

/// Operator (∂₀ ∓ σ·∂) evaluated on the plane wave: −i(ω ± σ·k) for the positive phase.
fn weyl_operator(k: &[Rational; 3], omega: Rational, chirality: Chirality, phase: Phase) -> ExactMatrix {
    let w = ExactMatrix::identity(2).scale(&CxRational::real(omega));
    let sk = sigma_dot(k);
    let inner = match chirality {
        Chirality::Undotted => &w + &sk,
        Chirality::Dotted => &w - &sk,
    };
    inner.scale(&-phase.factor())
}

fn apply2(m: &ExactMatrix, u: &[CxRational; 2]) -> [CxRational; 2] {
    std::array::from_fn(|i| m.get(i, 0) * &u[0] + m.get(i, 1) * &u[1])
}

/// Constant residual of the Weyl equation on u·exp(i(k·x − ωt)).
pub fn weyl_residual(w: &PlaneWave) -> [CxRational; 2] {
    apply2(&weyl_operator(&w.k, w.omega, w.chirality, w.phase), &w.u)
}

/// Dirac operator γ₀∂₀ + ΣΓⱼ∂ⱼ on the plane wave.
pub fn dirac_symbol(k: &[Rational; 3], omega: Rational, phase: Phase) -> ExactMatrix {
    let [g0, g1, g2, g3] = gamma_basis();
    let kg = &(&g1.scale(&CxRational::real(k[0])) + &g2.scale(&CxRational::real(k[1]))) + &g3.scale(&CxRational::real(k[2]));
    (&g0.scale(&CxRational::real(omega)) - &kg).scale(&-phase.factor())
}

/// ∂(Φ)Γ₂Γ₁ − mΦγ₀ for the constant amplitude Φ.
pub fn dh_residual_matrix(phi: &ExactMatrix, k: &[Rational; 3], omega: Rational, mass: Rational, phase: Phase) -> ExactMatrix {
    let g0 = &gamma_basis()[0];
    let kin = &(&dirac_symbol(k, omega, phase) * phi) * &g21();
    &kin - &(phi * g0).scale(&CxRational::real(mass))
}

pub fn dh_residual(s: &DhSpinor, k: &[Rational; 3], omega: Rational, mass: Rational) -> ExactMatrix {
    dh_residual_matrix(&dh_matrix(s), k, omega, mass, Phase::Positive)
}

/// Massless residual decomposed through the helicity split.
#[derive(Debug, Clone, PartialEq)]
pub struct Decoupling {
    /// Weyl operator (undotted) applied to the upper block of φ⁺.
    pub undotted: ExactMatrix,
    /// Weyl operator (dotted) applied to the upper block of φ⁻.
    pub dotted: ExactMatrix,
    pub residual: ExactMatrix,
}

impl Decoupling {
    /// Residual equals [[U + D], [U − D]] blockwise.
    pub fn consistent(&self) -> bool {
        let r = &self.residual;
        (0..2).all(|i| {
            (0..4).all(|j| {
                r.get(i, j) == &(self.undotted.get(i, j).clone() + self.dotted.get(i, j).clone())
                    && r.get(i + 2, j) == &(self.undotted.get(i, j).clone() - self.dotted.get(i, j).clone())
            })
        })
    }

    pub fn both_zero(&self) -> bool {
        self.undotted.is_zero() && self.dotted.is_zero()
    }
}

fn upper_block(m: &ExactMatrix) -> Vec<Vec<CxRational>> {
    (0..2).map(|i| (0..4).map(|j| m.get(i, j).clone()).collect()).collect()
}

fn op_on_block(op: &ExactMatrix, blk: &[Vec<CxRational>]) -> ExactMatrix {
    let mut out = ExactMatrix::zeros(4);
    for i in 0..2 {
        for j in 0..4 {
            out.set(i, j, op.get(i, 0) * &blk[0][j] + op.get(i, 1) * &blk[1][j]);
        }
    }
    out
}

/// Splits the massless residual into its two Weyl parts (stored in the upper 2×4 block).
pub fn massless_decoupling(s: &DhSpinor, k: &[Rational; 3], omega: Rational) -> Decoupling {
    let (pp, pm) = helicity_split(s);
    let undotted = op_on_block(&weyl_operator(k, omega, Chirality::Undotted, Phase::Positive), &upper_block(&pp));
    let dotted = op_on_block(&weyl_operator(k, omega, Chirality::Dotted, Phase::Positive), &upper_block(&pm));
    Decoupling { undotted, dotted, residual: dh_residual(s, k, omega, Rational::zero()) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn r(n: i128) -> Rational {
        Rational::from(n)
    }

    fn cx(re: i128, im: i128) -> CxRational {
        CxRational::from_int(re, im)
    }

    #[test]
    fn gammas() {
        let [g0, g1, g2, g3] = gamma_basis();
        assert!((&g0 * &g0).is_identity());
        for g in [&g1, &g2, &g3] {
            assert_eq!(g * g, -ExactMatrix::identity(4));
            assert!(g.anticommutator(&g0).is_zero());
        }
        assert!(g1.anticommutator(&g2).is_zero());
        let g5 = gamma5();
        assert_eq!(&g5 * &g5, -ExactMatrix::identity(4));
    }

    #[test]
    fn gamma5_central_in_even_part() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let s = DhSpinor::random(&mut rng);
            assert!(gamma5().commutator(&dh_matrix(&s)).is_zero());
            assert!(gamma5().commutator(&dh_blade_matrix(&s)).is_zero());
        }
    }

    #[test]
    fn projectors() {
        let (p, m) = helicity_projectors();
        assert_eq!(&p * &p, p);
        assert_eq!(&m * &m, m);
        assert!((&p * &m).is_zero());
        assert!((&p + &m).is_identity());
        for g in gamma_basis() {
            assert_eq!(&p * &g, &g * &m);
        }
    }

    #[test]
    fn scalar_spinor() {
        let mut a = [Rational::zero(); 8];
        a[0] = r(1);
        let s = DhSpinor::from_array(a);
        assert!(dh_matrix(&s).is_identity());
        assert!(dh_blade_matrix(&s).is_identity());
    }

    #[test]
    fn printed_form_differs_from_expansion_in_a13_only() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let s = DhSpinor::random(&mut rng);
        let mut t = s.clone();
        t.a13 = -t.a13;
        assert_eq!(dh_matrix(&s), dh_blade_matrix(&t));
        if !s.a13.is_zero() {
            assert_ne!(dh_matrix(&s), dh_blade_matrix(&s));
        }
    }

    #[test]
    fn split_matches_closed_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let s = DhSpinor::random(&mut rng);
            let (p, m) = helicity_split(&s);
            assert_eq!(p, split_closed_form(&s, true));
            assert_eq!(m, split_closed_form(&s, false));
            let [p1, p2, p3, p4] = s.phis();
            let h = CxRational::imag(rat(1, 2));
            let psi = weyl_pair(&p);
            assert_eq!(psi[0], [&h * &(&p1 - &p3), &h * &(&p2 - &p4)]);
            assert_eq!(psi[1], [&h * &(&p2.conj() + &p4.conj()), &h * &-(&p1.conj() + &p3.conj())]);
            for i in 0..2 {
                for j in 0..4 {
                    assert_eq!(p.get(i + 2, j), &-p.get(i, j).clone());
                    assert_eq!(m.get(i + 2, j), m.get(i, j));
                }
            }
        }
    }

    #[test]
    fn weyl_zero_modes() {
        let k = [r(0), r(0), r(1)];
        let u = PlaneWave::on_shell([cx(0, 0), cx(1, 0)], k, Chirality::Undotted).unwrap();
        assert_eq!(u.omega, r(1));
        assert!(weyl_residual(&u).iter().all(|x| x.is_zero()));
        let d = PlaneWave::on_shell([cx(1, 0), cx(0, 0)], k, Chirality::Dotted).unwrap();
        assert!(weyl_residual(&d).iter().all(|x| x.is_zero()));
        let wrong = PlaneWave::on_shell([cx(0, 0), cx(1, 0)], k, Chirality::Dotted).unwrap();
        assert!(!weyl_residual(&wrong).iter().all(|x| x.is_zero()));
        let neg = u.clone().with_phase(Phase::Negative);
        assert!(weyl_residual(&neg).iter().all(|x| x.is_zero()));
        let off = PlaneWave::new([cx(0, 0), cx(1, 0)], k, r(2), Chirality::Undotted);
        assert!(!off.is_on_shell());
        assert!(!weyl_residual(&off).iter().all(|x| x.is_zero()));
        assert!(PlaneWave::on_shell([cx(1, 0), cx(0, 0)], [r(1), r(1), r(0)], Chirality::Dotted).is_err());
    }

    #[test]
    fn zero_modes_for_general_k() {
        for k in [[3, 4, 0], [0, 0, -1], [2, 3, 6], [-1, 4, 8], [0, 0, 5]] {
            let k = k.map(r);
            for ch in [Chirality::Undotted, Chirality::Dotted] {
                let w = weyl_zero_mode(k, ch).unwrap();
                assert!(w.u.iter().any(|x| !x.is_zero()));
                assert!(weyl_residual(&w).iter().all(|x| x.is_zero()), "{k:?} {ch:?}");
            }
        }
        assert!(weyl_zero_mode([r(0), r(0), r(0)], Chirality::Dotted).is_err());
    }

    #[test]
    fn pythagorean_wave() {
        let k = [r(3), r(4), r(0)];
        let w = PlaneWave::on_shell([cx(1, 0), cx(0, 0)], k, Chirality::Dotted).unwrap();
        assert_eq!(w.omega, r(5));
    }

    #[test]
    fn massless_dh() {
        let k = [r(0), r(0), r(1)];
        let s = DhSpinor::massless_along_z(rat(1, 2), r(3), rat(-2, 3), r(1));
        assert!(dh_residual(&s, &k, r(1), r(0)).is_zero());
        assert!(!dh_residual(&s, &k, r(1), r(1)).is_zero());
        let d = massless_decoupling(&s, &k, r(1));
        assert!(d.consistent() && d.both_zero());
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..20 {
            let s = DhSpinor::random(&mut rng);
            let d = massless_decoupling(&s, &[r(3), r(0), r(4)], r(5));
            assert!(d.consistent());
            assert_eq!(d.residual.is_zero(), d.both_zero());
        }
    }
}
