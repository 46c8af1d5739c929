//! Support τ-tilting theory of a finite-dimensional algebra and classical
//! tilting theory of its duplicated algebra, computed exactly over 𝔽_p.
//!
//! The crate is organised bottom-up:
//!
//! * [`linalg`] — dense matrices over a prime field;
//! * [`algebra`] — structure-constant algebras, path algebras of bound
//!   quivers, the dual bimodule and the duplicated algebra;
//! * [`module`], [`homological`], [`decompose`], [`endo`] — right modules,
//!   homomorphisms, covers, envelopes, τ, Ext¹, Krull–Schmidt decomposition
//!   and endomorphism algebras;
//! * [`tautilt`] — indecomposables, support τ-tilting posets, Bongartz
//!   intervals, reduction and maximal green sequences;
//! * [`dup`] — the maps between modules over an algebra and over its
//!   duplicated algebra, and the checks that tie them together.

pub mod algebra;
pub mod decompose;

pub mod dup;
pub mod endo;
pub mod error;
pub mod homological;
pub mod io;
pub mod linalg;
pub mod module;
pub mod tautilt;
pub mod verify;

pub use algebra::{Algebra, BoundQuiver};
pub use error::{Error, Result};
pub use linalg::Mat;
pub use module::{GradedMap, Module, ModuleMap};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/quickstart.md")]
    mod quickstart {}
    #[doc = include_str!("../../../book/src/algebras.md")]
    mod algebras {}
    #[doc = include_str!("../../../book/src/modules.md")]
    mod modules {}
    #[doc = include_str!("../../../book/src/posets.md")]
    mod posets {}
    #[doc = include_str!("../../../book/src/duplication.md")]
    mod duplication {}
}
