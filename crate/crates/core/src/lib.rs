//! Exact structure-constant algebra for monoidal Hom-corings, Hom-entwining
//! structures and Hom-Doi-Koppinen data.
//!
//! Every object is a finite-dimensional space with a fixed basis; structure
//! maps are dense matrices over an exact [`Field`], and every axiom checker
//! evaluates both sides of an identity on all basis tuples.

#![no_std]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod check;
pub mod coring;
pub mod doi_koppinen;
pub mod entwining;
pub mod error;
pub mod field;
pub mod linalg;
pub mod maps;
pub mod quotient;
pub mod structures;
pub mod tensor;
pub mod witness;

pub use check::{Verdict, Violation};
pub use error::{Error, Result};
pub use field::{Field, Fp, Rational};
pub use linalg::LinearMap;
pub use quotient::{build_quotient, QuotientSpace};
pub use tensor::Tensor;
