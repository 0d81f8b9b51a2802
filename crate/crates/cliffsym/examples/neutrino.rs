// Dirac–Hestenes spinors, helicity projection and massless plane waves.

use cliffsym::neutrino::{
    dh_matrix, dh_residual, helicity_projectors, helicity_split, massless_decoupling, weyl_pair, weyl_residual,
    weyl_zero_mode, Chirality, DhSpinor,
};
use cliffsym::scalar::{rat, Rational};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::error::Error;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let (pp, pm) = helicity_projectors();
    println!("P+ =\n{}\nP- =\n{}", pp.to_text(), pm.to_text());

    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let s = DhSpinor::random(&mut rng);
    println!("\nspinor matrix:\n{}", dh_matrix(&s).to_text());
    let (plus, minus) = helicity_split(&s);
    println!("left-handed pair {:?}\nright-handed pair {:?}", weyl_pair(&plus), weyl_pair(&minus));

    let k = [3, 4, 12].map(Rational::from);
    for ch in [Chirality::Undotted, Chirality::Dotted] {
        let w = weyl_zero_mode(k, ch)?;
        println!("{ch:?} zero mode u = {:?}, ω = {}, residual {:?}", w.u, w.omega, weyl_residual(&w));
    }

    let d = massless_decoupling(&s, &k, Rational::from(13));
    println!("\nresidual splits into Weyl parts: {}", d.consistent());
    let z = DhSpinor::massless_along_z(rat(1, 1), rat(2, 1), rat(0, 1), rat(-1, 1));
    let kz = [0, 0, 1].map(Rational::from);
    println!("massless solution along x3 residual zero: {}", dh_residual(&z, &kz, Rational::from(1), Rational::from(0)).is_zero());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
