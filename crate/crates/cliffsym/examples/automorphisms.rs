// Involutions of the algebra and the helicity split of an odd complex algebra.

use cliffsym::algebra::{helicity_split, volume_element, Automorphism, Multivector, Signature};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::error::Error;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let sig = Signature::complex_split(1, 3)?;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let x = Multivector::random(sig, &mut rng, 4);
    println!("x = {x}");
    for a in Automorphism::ALL {
        println!("{:>14} {:>3}: {}", a.symbol(), a.physical_name(), a.apply(&x));
    }

    let c3 = Signature::complex(3)?;
    let (w, sq) = volume_element(c3);
    println!("\nC3 volume element {w}, square {sq}");
    let y = Multivector::random(c3, &mut rng, 5);
    let h = helicity_split(&y)?;
    println!("y   = {y}\ny+  = {}\ny-  = {}", h.plus, h.minus);
    assert_eq!(&h.plus + &h.minus, y);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
