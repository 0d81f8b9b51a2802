//! Every example must run to completion.

mod automorphisms {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/automorphisms.rs"));
}

mod classification {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/classification.rs"));
}

mod discrete_symmetries {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/discrete_symmetries.rs"));
}

mod lorentz_operators {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/lorentz_operators.rs"));
}

mod neutrino {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/neutrino.rs"));
}

mod quotient {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/quotient.rs"));
}

mod relation_sweep {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/relation_sweep.rs"));
}

mod spinbasis {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/spinbasis.rs"));
}

mod verify_report {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/verify_report.rs"));
}

#[test]
fn example_automorphisms() {
    automorphisms::run_example().unwrap();
}

#[test]
fn example_classification() {
    classification::run_example().unwrap();
}

#[test]
fn example_discrete_symmetries() {
    discrete_symmetries::run_example().unwrap();
}

#[test]
fn example_lorentz_operators() {
    lorentz_operators::run_example().unwrap();
}

#[test]
fn example_neutrino() {
    neutrino::run_example().unwrap();
}

#[test]
fn example_quotient() {
    quotient::run_example().unwrap();
}

#[test]
fn example_relation_sweep() {
    relation_sweep::run_example().unwrap();
}

#[test]
fn example_spinbasis() {
    spinbasis::run_example().unwrap();
}

#[test]
fn example_verify_report() {
    verify_report::run_example().unwrap();
}
