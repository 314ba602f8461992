pub mod error;
pub mod ring;
pub mod scalar;
pub mod poly;
pub mod eps;
pub mod matrix;
pub mod jet;
pub mod liealg;
pub mod classical;
pub mod quadalg;
pub mod quantumops;
pub mod racah;
pub mod fixedpoint;
pub mod potentials;
pub mod report;
pub mod askey;
