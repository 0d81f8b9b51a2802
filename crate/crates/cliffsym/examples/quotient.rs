// Quotient classes of odd-dimensional algebras and which symmetries survive.

use cliffsym::algebra::Field;
use cliffsym::quotient::quotient_record;
use std::error::Error;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for n in [3, 5, 7] {
        for p in 0..=n {
            let q = n - p;
            for field in [Field::Complex, Field::Real] {
                let Ok(r) = quotient_record(p, q, field) else { continue };
                println!(
                    "{:?} ({p},{q}) class {:<2} stated {:<28} descending {}",
                    field,
                    r.class.label(),
                    r.symmetries.join(","),
                    r.computed.join(",")
                );
            }
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
