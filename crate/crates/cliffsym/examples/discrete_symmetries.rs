// W, E, C and Π matrices and the reflection group they generate.

use cliffsym::spinrep::spinbasis;
use cliffsym::symmetries::{
    check_ec, matrix_pi, pipi_dot, reflection_group_class, reflection_group_class_real, symmetry_set,
};
use std::error::Error;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for n in [2, 4, 6, 8] {
        let b = spinbasis(n)?;
        let s = symmetry_set(&b)?;
        let ok = check_ec(&b, &s.w, &s.e, &s.c, s.m).all();
        let g = reflection_group_class(n)?;
        println!("C{n}: m = {}, conditions {ok}, group {:?}, squares {:?}", s.m, g.class, g.raw_triple);
    }
    println!();
    for (p, q) in [(4, 0), (3, 1), (1, 3), (2, 2), (8, 0), (1, 5)] {
        let g = reflection_group_class_real(p, q)?;
        println!("Cl({p},{q}): {:?} {:?}", g.class, g.triple);
    }
    println!();
    for (p, q) in [(0, 2), (1, 3), (4, 0), (2, 4)] {
        let pi = matrix_pi(p, q)?;
        println!("Cl({p},{q}): Π from generators {:?} (a={}, b={}), ΠΠ̇ = {:?}", pi.factors, pi.a, pi.b, pipi_dot(&pi.matrix));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
