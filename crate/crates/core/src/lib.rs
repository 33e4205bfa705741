//! Generalized Mersenne primes in real quadratic fields Q(√d).
//!
//! For a real quadratic field of class number 1 with ring of integers O_K,
//! pick a unit u ≠ ±1 and set α = 1 + u. When α is irreducible, the elements
//!
//! ```text
//!     M_{p,α} = (α^p − 1)/(α − 1) = 1 + α + ... + α^{p−1}
//! ```
//!
//! play the role of Mersenne numbers: |N(M_{p,α})| prime makes M_{p,α} a
//! Mersenne prime of the field. This crate provides the exact arithmetic
//! ([`quadint`]), fundamental units via continued fractions ([`units`]),
//! candidate classification and search ([`mersenne`]), a probable-prime
//! pipeline ([`primality`]), and x² + 7y² representations of the Q(√2)
//! Mersenne norms ([`quadform`]).
//!
//! The crate is `no_std`-compatible (with `alloc`); the companion CLI crate
//! carries all IO and file formats.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod mersenne;
pub mod primality;
pub mod quadform;
pub mod quadint;
pub mod units;

mod error;

pub use error::Error;
pub use quadint::{FieldCtx, QuadInt};
pub use units::UnitElem;
