//! Report, plotting and verification pieces behind the `rl-alg` binary.

pub mod plot;
pub mod report;
pub mod verify;
