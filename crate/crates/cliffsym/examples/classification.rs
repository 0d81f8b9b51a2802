// Division-ring class, primitive idempotents and factorizations of Cl(p,q).

use cliffsym::classification::{classify, primitive_idempotent};
use std::error::Error;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    println!("{:>7} {:>4} {:>3} {:>3}  factorization", "(p,q)", "ring", "mod", "t");
    for n in 1..=6 {
        for p in 0..=n {
            let r = classify(p, n - p)?;
            let k = r.karoubi.as_ref().map_or(String::from("-"), |f| format!("{f:?}"));
            println!("{:>7} {:>4} {:>3} {:>3}  {k}", format!("({},{})", r.p, r.q), r.ring.label(), r.pq_mod8, r.t);
        }
    }
    let (f, _) = primitive_idempotent(1, 3)?;
    assert_eq!(&f * &f, f);
    println!("primitive idempotent of Cl(1,3): {f}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
