//! Exact computations with ℤ₂-graded algebras given by structure constants.
//!
//! A [`SuperAlgebraData`] holds a graded basis, an optional binary product,
//! an optional ternary product and an optional even twisting map, all with
//! rational coefficients. On top of it the crate provides
//!
//! * derived products ([`products`]): supercommutator, super-Jordan product,
//!   Hom-associator and Hom-Jordan associator;
//! * exhaustive axiom checkers ([`identities`]) for right/left
//!   Hom-alternativity, Bol and Hom-Bol superalgebras and (Hom-)Lie
//!   supertriple systems;
//! * constructions ([`constructions`]) such as the Bol superalgebra of a right
//!   alternative superalgebra, Yau twists and derived Hom-superalgebras;
//! * a text format for identities ([`dsl`]) that cross-checks all of the above;
//! * built-in example algebras ([`fixtures`]) and JSON files ([`io`]).
//!
//! ```
//! use superbol::{constructions, fixtures, identities, ScaleConvention};
//!
//! let star = fixtures::example_4_1_star();
//! let bol = constructions::bol_from_right_alternative(&star, &ScaleConvention::unit())?;
//! assert!(bol.same_structure(&fixtures::example_4_1_bol()));
//! assert!(identities::check_bol_super(&bol)?.passed());
//! # Ok::<(), superbol::Error>(())
//! ```

pub mod algebra;
pub mod constructions;
pub mod dsl;
pub mod error;
pub mod fixtures;
pub mod grading;
pub mod identities;
pub mod io;
pub mod map;
pub mod products;
pub mod regression;
pub mod report;
pub mod scalar;
pub mod tensor;
pub mod vector;

pub use algebra::{check_grading_compat, check_multiplicative, SuperAlgebraData};
pub use error::Error;
pub use grading::{Grading, Parity};
pub use map::GradedLinearMap;
pub use products::{JordanSign, ScaleConvention};
pub use report::{AxiomId, CheckReport, Counterexample, Verdict};
pub use scalar::Scalar;
pub use tensor::{BinaryStructure, TernaryStructure};
pub use vector::SuperVector;

/// The guide's chapters, compiled so their snippets run as doc-tests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/grading.md")]
    pub mod grading {}
    #[doc = include_str!("../../../book/src/algebras.md")]
    pub mod algebras {}
    #[doc = include_str!("../../../book/src/identities.md")]
    pub mod identities {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    pub mod constructions {}
    #[doc = include_str!("../../../book/src/dsl.md")]
    pub mod dsl {}
    #[doc = include_str!("../../../book/src/files.md")]
    pub mod files {}
}
