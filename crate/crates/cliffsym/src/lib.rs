pub mod algebra;
pub mod classification;
pub mod error;
pub mod linalg;
pub mod matrix;
pub mod scalar;
pub mod spinrep;
pub mod lorentz;
pub mod symmetries;
pub mod quotient;
pub mod neutrino;
pub mod verify;
pub mod cli;
