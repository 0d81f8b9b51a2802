// Running the property suites programmatically and reading the report.

use cliffsym::cli::cmd_verify;
use cliffsym::verify::{Suite, VerifyConfig};
use std::error::Error;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let cfg = VerifyConfig { max_n: 6, seed: 7, parallel: true };
    for suite in Suite::ALL {
        let r = cmd_verify(Some(suite), &cfg);
        let k = r.counters;
        println!("{suite:<12} {:>4} checks {:>4} pass {:>3} fail {:>2} xfail", k.total, k.passed, k.failed, k.expected_failures);
    }
    let neutrino = cmd_verify(Some(Suite::Neutrino), &cfg);
    println!("\n{}", neutrino.to_json());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
