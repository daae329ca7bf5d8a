//! Exact arithmetic for L-functions of constant abelian schemes `B x X / X`
//! over finite fields: Weil polynomial certification, composed products,
//! analytic and algebraic ranks, trace-pairing regulators, special values and
//! Tate-Shafarevich orders.

pub mod bsd;
pub mod cli;
pub mod error;
pub mod exactpoly;
pub mod homrank;
pub mod lfunction;
pub mod regulator;
pub mod tensor;
pub mod weil;

pub use error::{Error, ErrorClass, Result};
pub use exactpoly::{IntegerPolynomial, RationalScalar};
pub use weil::{PrimeFieldSize, WeilPolynomial};
