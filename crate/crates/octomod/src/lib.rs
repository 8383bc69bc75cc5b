//! Exact computations with octonionic bimodules and para-linear maps.

pub mod bimodule;
pub mod error;
pub mod functors;
pub mod homalg;
pub mod json;
pub mod linalg;
pub mod octonion;
pub mod paralinear;
pub mod rational;
pub mod tensor;
pub mod verify;

pub use error::{Error, Result};
pub use octonion::Octonion;
pub use rational::Rational;
