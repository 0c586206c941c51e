//! Exact computer algebra for finite-dimensional Hopf-Galois extensions.
//!
//! The crate represents Hopf algebras and comodule algebras by structure
//! constants over exact fields (the rationals or GF(p^d)), decides and
//! certifies Hopf-Galois extensions, and computes the associated invariants:
//! translation maps, Miyashita-Ulbrich actions, cleft-extension cocycles,
//! crossed products, low-degree Sweedler cohomology and Picard groups of
//! Galois objects.
//!
//! Start with [`builtins`] for ready-made worked examples, or parse a
//! structure-constant document with [`hgx`]. The `hgx` binary exposes the
//! same functionality as a command-line tool; `examples/` contains one
//! runnable walkthrough per major capability.

pub mod field;
pub mod linalg;

mod error;

pub use error::Error;

pub mod hopf;

pub mod galois;

pub mod cleft;

pub mod cohomology;

pub mod picard;

pub mod builtins;

pub mod hgx;
pub mod report;
pub mod cli;
