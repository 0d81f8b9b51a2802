// Canonical Kronecker-product generators and matrix images of multivectors.

use cliffsym::algebra::Multivector;
use cliffsym::spinrep::{represent, span_rank, spinbasis};
use std::error::Error;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let b = spinbasis(4)?;
    for (i, m) in b.mats.iter().enumerate() {
        println!("E{}:\n{}\n", i + 1, m.to_text());
    }
    assert!(b.check_clifford().ok());
    println!("span rank of C4: {}", span_rank(&b));

    let e12 = Multivector::from_indices(b.context, &[1, 2]);
    let m = represent(&b, &e12)?;
    println!("E1E2 =\n{}", m.to_text());

    let odd = spinbasis(5)?;
    println!("C5 adds E5 =\n{}", odd.mats[4].to_text());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
