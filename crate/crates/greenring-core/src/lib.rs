//! Exact-arithmetic engine for the module category of a 72-dimensional
//! copointed Hopf algebra over the function algebra on the symmetric group S3.
//!
//! The crate builds every indecomposable module of the algebra (two simples,
//! two projectives, syzygy/cosyzygy families, and the parametrised (k,k)
//! families), decomposes tensor products into indecomposable summands by
//! exact linear algebra over the rationals, and realises the Green ring
//! symbolically via a confluent rewriting system.
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point anywhere, so every identity checked here is exact.
//!
//! The crate is `no_std` (with `alloc`); IO, configuration and the command
//! line interface live in the companion `greenring-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod decomp;
pub mod error;
pub mod greenring;
pub mod linalg;
pub mod morita;
pub mod reps;
pub mod scalars;
pub mod zoo;

pub use error::Error;
pub use scalars::{ParameterPoint, ProjParam, Scalar, Triple};

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
