//! Exact verification of q-continued fractions and q-series identities.
//!
//! The crate is organised bottom-up:
//!
//! * [`arith`]: coefficient rings (rationals, Eisenstein rationals, complex
//!   floats for numeric spot checks).
//! * [`series`]: truncated power series, Pochhammer products, Gaussian
//!   binomials and summation drivers.
//! * [`cfrac`]: continued-fraction convergents, contractions and
//!   stabilization certificates.
//! * [`objects`]: the concrete fractions, closed forms and limit identities.
//! * [`verifier`]: the identity registry and verification reports.

pub mod arith;
pub mod cfrac;
pub mod error;
pub mod objects;
pub mod series;
pub mod verifier;

pub use error::{Error, Result};
