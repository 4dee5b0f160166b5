//! Kolmogorov-space realism inequalities: finite outcome spaces, classical
//! validity checking, and quantum evaluations for spin and meson systems.

pub mod dsl;
pub mod exec;
pub mod linalg;
pub mod meson;
pub mod outcome;
pub mod spin;
pub mod suite;
