//! Integral discriminants J_{n|r} of homogeneous forms.
//!
//! The crate covers the cases (n|2), (2|3), (2|4), (2|5) and (3|3): exact
//! invariant theory over the rationals, ε-tensor contraction, Ward-identity
//! operators, Gauss hypergeometric evaluation and quadrature oracles.

pub mod error;
pub mod forms;
pub mod invariants;
pub mod jnr;
pub mod oracle;
pub mod polyalg;
pub mod quad;
pub mod scalar;
pub mod specfun;
pub mod tensornet;
pub mod wardops;

pub use error::{Error, Result};
pub use forms::{FormShape, MultiIndex, SymmetricForm};
pub use polyalg::SparsePoly;
pub use scalar::{Q, Scalar};
