//! Exact construction and verification of finite-dimensional Hopf braces,
//! skew braces, matched pairs, bijective 1-cocycles and the Yang–Baxter
//! operators they induce.
//!
//! Everything here is `no_std` with `alloc`; IO, file formats and the command
//! line live in the companion `hopfbrace` crate.

#![no_std]
extern crate alloc;

pub mod brace;
pub mod error;
pub mod hopf;
mod kit;
pub mod lsa;
pub mod matched;
pub mod report;
pub mod scalars;
pub mod skew;
pub mod tensor;
pub mod yang_baxter;

pub use error::{Error, Result};
pub use hopf::{HopfAlgebraData, Space, Verified};
pub use report::{AxiomReport, Failure};
pub use scalars::{FieldSpec, Scalar};
pub use tensor::{LegPermutation, LinMap};
