// Infinitesimal operators of Lorentz-group representations.

use cliffsym::lorentz::{gn_operators, ladder, tensor_operators, H3Convention, RepParams, OPERATOR_NAMES};
use cliffsym::scalar::rat;
use cliffsym::spinrep::spinbasis;
use std::error::Error;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let fund = gn_operators(&RepParams::new(rat(1, 2), rat(3, 2))?);
    let ops = fund.exact().ok_or("fundamental operators are rational")?;
    for (name, m) in OPERATOR_NAMES.iter().zip(ops.all()) {
        println!("{name}:\n{}", m.to_text());
    }
    println!("commutation relations hold: {}", ops.satisfies_commut());
    println!("ladder relations hold: {}", ladder(ops, H3Convention::Corrected).satisfies_commut2());

    for (l0, l1) in [(rat(0, 1), rat(2, 1)), (rat(1, 1), rat(2, 1)), (rat(1, 2), rat(5, 2))] {
        let p = RepParams::new(l0, l1)?;
        let g = gn_operators(&p);
        let worst = g.commut_residuals().iter().map(|r| r.max_abs).fold(0.0, f64::max);
        println!("({l0},{l1}): dim {}, exact {}, worst residual {worst:.1e}", p.dim(), g.is_exact());
    }

    let t = tensor_operators(&spinbasis(6)?, 1, 2, 3, false)?;
    println!("tensor operators on C6 (side {}) satisfy the relations: {}", t.dim(), t.satisfies_commut());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
