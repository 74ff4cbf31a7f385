//! Time-optimal control of a single qubit: closed-form and numerical
//! propagators, constant frame transformations, the hyperbolic continuation,
//! and a verifier for the algebraic relations among them.

pub mod adjoint;
pub mod brach;
pub mod claims;
pub mod cmat;
pub mod error;
pub mod families;
pub mod frames;
pub mod gates;
pub mod generator;
pub mod hyper;
pub mod propnum;
pub mod stark;
pub mod suite;

pub use error::{Error, Result};
