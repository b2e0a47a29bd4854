//! Universal GL weight system on permutations and chord diagrams.
//!
//! The crate evaluates the polynomial-valued invariant `w_GL(σ)` in the
//! Casimir variables `C0, C1, C2, …` by a local recurrence on permutation
//! digraphs, and ships two independent cross-checks:
//!
//! * [`uea`] works directly in the universal enveloping superalgebra
//!   `U(gl(m|n))`, summing matrix-unit words with super signs and reducing
//!   them to PBW normal form;
//! * [`hc`] computes Harish–Chandra images of the Casimir elements and the
//!   supersymmetric generating series they satisfy.
//!
//! Everything here is `no_std` (with `alloc`) and exact: coefficients are
//! arbitrary-precision rationals, signs live in the two-element field.
//! IO, file formats and the command-line front end live in the companion
//! `glweight` crate.

#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

pub mod error;
pub mod glrec;
pub mod hc;
pub mod perm;
pub mod poly;
pub mod signfn;
pub mod uea;

pub use error::{Error, Result};
pub use glrec::{specialize, w_gl, w_gl_diagram, Evaluator, LocalMemo, MemoStore, ReductionPolicy};
pub use perm::{ChordDiagram, Digraph, Permutation};
pub use poly::{Monomial, Namespace, Poly};
pub use signfn::SignFunction;
pub use uea::{Generator, GeneratorOrder, Signature, UeaElement};

/// Exact rational coefficient type used throughout the crate.
pub type Rational = num_rational::BigRational;
