//! Numerical and symbolic toolkit for multiple zeta values, multiple
//! zeta-star values and their alternating variants.
//!
//! The crate is organized around five pieces:
//!
//! * [`composition`] — index compositions, the two-letter iterated-integral
//!   words that encode them, duality and weight/depth/height statistics.
//! * [`bigreal`] — a small arbitrary-precision binary float used by every
//!   numeric routine, with an explicit working-precision contract.
//! * [`eval`] — the summation engine: nested-sum evaluation with
//!   Euler–Maclaurin (and Boole, for alternating entries) tail corrections,
//!   plus the supporting special functions.
//! * [`algebra`] — exact shuffle and stuffle products with rational
//!   coefficients.
//! * [`oracle`] — low-precision adaptive quadrature of integral
//!   representations, used as an independent cross-check of the engine.
//! * [`identities`] — a catalog of verifiable identities with parameterized
//!   left/right evaluation legs and a reporting harness.
//!
//! The crate is `no_std`-compatible (requires `alloc`); the default `std`
//! feature only adds `std::error::Error` impls and wall-clock timings in
//! verification reports.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod algebra;
pub mod bigreal;
pub mod composition;
pub mod eval;
pub mod identities;
pub mod numbers;
pub mod oracle;

pub use bigreal::BigReal;
pub use composition::{Composition, IndexEntry, Letter, Stats, Word};
pub use eval::EvalConfig;
