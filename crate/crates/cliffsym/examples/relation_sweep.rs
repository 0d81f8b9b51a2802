// Commutation pattern of W, E, C with the Lorentz generators over all generator placements.

use cliffsym::lorentz::{n2_anomaly, relation_sweep};
use std::error::Error;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let cases = relation_sweep(&[4, 6, 8], true)?;
    println!("{:>2} {:>9} {:>3} {:>5}  family   predicted", "n", "regime", "m", "cab");
    for c in &cases {
        let pat = format!("{}{}{}", c.pattern.c as u8, c.pattern.a as u8, c.pattern.b as u8);
        let fam = |f: Option<cliffsym::lorentz::Family>| f.map_or("-", |f| f.label());
        let note = if c.realized() { "" } else { "  (not realizable)" };
        println!("{:>2} {:>9} {:>3} {:>5}  {:<8} {:<8}{note}", c.n, format!("{:?}", c.regime), c.m, pat, fam(c.family), fam(c.predicted));
    }
    println!("all realizable cases match: {}", cases.iter().all(|c| c.passes()));
    let t = n2_anomaly();
    println!("\nn = 2 table:\n{}\nW row consistent: {}", t.to_text(), t.w_row_ok());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
