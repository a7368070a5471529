//! `gamma` and the invariants it is compared against.

pub mod bounds;
pub mod cheeger;
pub mod gamma;
pub mod spectral;
