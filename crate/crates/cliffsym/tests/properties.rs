use cliffsym::algebra::{
    conjugation, grade_involution, pseudo_conjugation, reversion, volume_element, Automorphism, Field, Multivector,
    Signature,
};
use cliffsym::classification::{classify, karoubi_factorization, primitive_idempotent, ring_class};
use cliffsym::neutrino::{
    dh_matrix, dh_residual, gamma5, helicity_split as dh_split, massless_decoupling, sigma_dot, weyl_residual,
    weyl_zero_mode, Chirality, DhSpinor,
};
use cliffsym::quotient::{classify_quotient, QuotientClass};
use cliffsym::scalar::{CxRational, Rational};
use cliffsym::spinrep::{build_even_spinbasis, chi_kernel_dimension, extend_odd, represent, spinbasis};
use cliffsym::symmetries::{matrix_c, matrix_e, matrix_w};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

fn signature() -> impl Strategy<Value = Signature> {
    (1usize..=9, 0usize..=9, any::<bool>()).prop_map(|(n, p, real)| {
        let p = p.min(n);
        if real {
            Signature::real(p, n - p).unwrap()
        } else {
            Signature::complex_split(p, n - p).unwrap()
        }
    })
}

fn triple(sig: Signature, seed: u64) -> (Multivector, Multivector, Multivector) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (Multivector::random(sig, &mut rng, 5), Multivector::random(sig, &mut rng, 5), Multivector::random(sig, &mut rng, 5))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn product_is_associative(sig in signature(), seed in any::<u64>()) {
        let (x, y, z) = triple(sig, seed);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
    }

    #[test]
    fn involution_laws(sig in signature(), seed in any::<u64>()) {
        let (x, y, _) = triple(sig, seed);
        let xy = &x * &y;
        prop_assert_eq!(grade_involution(&xy), &grade_involution(&x) * &grade_involution(&y));
        prop_assert_eq!(reversion(&xy), &reversion(&y) * &reversion(&x));
        prop_assert_eq!(conjugation(&xy), &conjugation(&y) * &conjugation(&x));
        prop_assert_eq!(pseudo_conjugation(&xy), &pseudo_conjugation(&x) * &pseudo_conjugation(&y));
        for f in [grade_involution, reversion, conjugation, pseudo_conjugation] {
            prop_assert_eq!(f(&f(&x)), x.clone());
        }
    }

    #[test]
    fn fundamental_automorphisms_form_klein_group(sig in signature(), seed in any::<u64>()) {
        let (x, _, _) = triple(sig, seed);
        for a in Automorphism::FUNDAMENTAL {
            for b in Automorphism::FUNDAMENTAL {
                let ab = a.compose(b).unwrap();
                prop_assert_eq!(a.apply(&b.apply(&x)), ab.apply(&x));
            }
        }
    }

    #[test]
    fn volume_element_center(sig in signature()) {
        let (w, _) = volume_element(sig);
        for i in 1..=sig.n() {
            let e = Multivector::generator(sig, i);
            let (we, ew) = (&w * &e, &e * &w);
            if sig.n() % 2 == 1 {
                prop_assert_eq!(we, ew);
            } else {
                prop_assert_eq!(we, ew.scale(&-CxRational::from(1)));
            }
        }
    }

    #[test]
    fn representation_is_a_homomorphism(n in 1usize..=6, seed in any::<u64>()) {
        let b = spinbasis(n).unwrap();
        let (x, y, _) = triple(b.context, seed);
        let rx = represent(&b, &x).unwrap();
        let ry = represent(&b, &y).unwrap();
        prop_assert_eq!(represent(&b, &(&x * &y)).unwrap(), &rx * &ry);
    }

    #[test]
    fn ring_class_periodic(p in 0usize..=12, q in 0usize..=12) {
        prop_assume!(p + q > 0);
        prop_assert_eq!(ring_class(p, q), ring_class(p + 8, q));
        prop_assert_eq!(ring_class(p, q), ring_class(p, q + 8));
    }

    #[test]
    fn l0_is_quarter_dimension(p in 0usize..=8, q in 0usize..=8) {
        prop_assume!(p + q > 0);
        let r = classify(p, q).unwrap();
        if let Some(l0) = r.l0 {
            prop_assert_eq!(l0, Rational::new((p + q) as i128, 4).to_string());
        }
    }

    #[test]
    fn karoubi_factors_preserve_dimension(p in 0usize..=8, q in 0usize..=8) {
        prop_assume!(p + q > 0 && (p + q) % 2 == 0);
        let f = karoubi_factorization(p, q).unwrap();
        prop_assert_eq!(f.iter().map(|&(a, b)| a + b).sum::<usize>(), p + q);
        prop_assert!(f.iter().all(|&(a, b)| a + b == 2));
    }

    #[test]
    fn gamma5_is_central_in_the_even_part(seed in any::<u64>()) {
        let s = DhSpinor::random(&mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert!(gamma5().commutator(&dh_matrix(&s)).is_zero());
        let (a, b) = dh_split(&s);
        let g21 = {
            let g = cliffsym::neutrino::gamma_basis();
            &g[2] * &g[1]
        };
        prop_assert_eq!(&a + &b, &dh_matrix(&s) * &g21);
    }

    #[test]
    fn massless_decoupling_iff(seed in any::<u64>(), kidx in 0usize..6) {
        let ks = [[0, 0, 1], [3, 4, 0], [2, 3, 6], [-1, 4, 8], [0, -5, 12], [1, 2, -2]];
        let k = ks[kidx].map(Rational::from);
        let w = weyl_zero_mode(k, Chirality::Undotted).unwrap().omega;
        let s = DhSpinor::random(&mut ChaCha8Rng::seed_from_u64(seed));
        let d = massless_decoupling(&s, &k, w);
        prop_assert!(d.consistent());
        prop_assert_eq!(dh_residual(&s, &k, w, Rational::from(0)).is_zero(), d.both_zero());
    }

    #[test]
    fn zero_modes_have_definite_helicity(k in prop::array::uniform3(-6i128..=6), m in 1i128..4) {
        // Scale a primitive triple so that |k| is rational.
        let base = [[3, 4, 0], [2, 3, 6], [1, 2, 2], [0, 0, 1]][(k[0].rem_euclid(4)) as usize];
        let signs = [k[1].signum().max(0) * 2 - 1, k[2].signum().max(0) * 2 - 1, 1];
        let kv: [Rational; 3] = std::array::from_fn(|i| Rational::from(base[i] * signs[i] * m));
        for (ch, sign) in [(Chirality::Undotted, -1), (Chirality::Dotted, 1)] {
            let w = weyl_zero_mode(kv, ch).unwrap();
            prop_assert!(weyl_residual(&w).iter().all(num_traits::Zero::is_zero));
            let sk = sigma_dot(&kv);
            let lhs: Vec<CxRational> = (0..2).map(|i| sk.get(i, 0) * &w.u[0] + sk.get(i, 1) * &w.u[1]).collect();
            let s = CxRational::real(w.omega * Rational::from(sign));
            for i in 0..2 {
                prop_assert_eq!(lhs[i].clone(), &s * &w.u[i]);
            }
        }
    }
}

#[test]
fn associativity_two_hundred_trials_per_signature() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for n in 1..=9 {
        for sig in [Signature::real(n / 2, n - n / 2).unwrap(), Signature::complex(n).unwrap()] {
            for _ in 0..200 {
                let x = Multivector::random(sig, &mut rng, 4);
                let y = Multivector::random(sig, &mut rng, 4);
                let z = Multivector::random(sig, &mut rng, 4);
                assert_eq!(&(&x * &y) * &z, &x * &(&y * &z), "{sig}");
            }
        }
    }
}

#[test]
fn clifford_relations_with_odd_extension() {
    for k in 1..=5 {
        let mut b = build_even_spinbasis(k);
        b.mats.push(extend_odd(k));
        assert!(b.check_clifford().ok(), "k = {k}");
    }
}

#[test]
fn chi_kernel_is_half() {
    for k in 1..=3 {
        let (ker, total) = chi_kernel_dimension(k);
        assert_eq!(2 * ker, total);
    }
}

#[test]
fn primitive_idempotents_have_minimal_rank() {
    for n in (2..=8).step_by(2) {
        let b = spinbasis(n).unwrap();
        for p in 0..=n {
            let (f, blades) = primitive_idempotent(p, n - p).unwrap();
            let sig = Signature::real(p, n - p).unwrap();
            let bb = b.clone().with_context(sig);
            let m = represent(&bb, &f).unwrap();
            assert_eq!(m.rank(), b.side() >> blades.len(), "({p},{})", n - p);
        }
    }
}

#[test]
fn w_e_c_realize_automorphisms_as_a_group() {
    for n in [2, 4, 6, 8] {
        let b = spinbasis(n).unwrap();
        let (w, e, c) = (matrix_w(&b).unwrap(), matrix_e(&b).unwrap(), matrix_c(&b).unwrap());
        // E·W realizes ˜⋆, so it agrees with C up to a scalar.
        assert!((&e * &w).proportional_to(&c).is_some() || (&w * &e).proportional_to(&c).is_some(), "n = {n}");
        for m in [&w, &e, &c] {
            assert!((m * m).scalar_value().is_some());
        }
    }
}

#[test]
fn quotient_classification_is_total() {
    let mut complex = BTreeSet::new();
    for p in 0..=9 {
        for q in 0..=9 {
            let n = p + q;
            if n % 2 == 0 {
                assert!(classify_quotient(p, q, Field::Complex).is_err());
                continue;
            }
            let c = classify_quotient(p, q, Field::Complex).unwrap();
            assert_eq!(c, classify_quotient(p, q, Field::Complex).unwrap());
            if [3, 5, 7, 9].contains(&n) {
                complex.insert(c);
            }
            let real_ok = matches!((p as i64 - q as i64).rem_euclid(8), 1 | 5);
            assert_eq!(classify_quotient(p, q, Field::Real).is_ok(), real_ok, "({p},{q})");
        }
    }
    assert_eq!(complex.len(), 6);
    assert!(complex.iter().all(|c| !c.is_real()));
    assert!(!complex.contains(&QuotientClass::E1));
}
