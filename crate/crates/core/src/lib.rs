//! Exact-arithmetic invariants of normal surface singularities from their
//! resolution (plumbing) graphs.
//!
//! Everything is computed over the rationals with arbitrary-precision
//! integers; there is no floating point anywhere. From a negative-definite
//! plumbing graph the crate derives the intersection lattice, the
//! discriminant group H = L'/L with its theta character, the unit-cube and
//! anti-nef class liftings via Laufer-type computation sequences, the Artin
//! rationality test, per-spin^c Seiberg-Witten invariants of rational
//! graphs, the equivariant geometric genus of the universal abelian cover,
//! and star-shaped graphs synthesised from Seifert data.
//!
//! A note on naming: the three-vertex chain of -2 curves used throughout the
//! tests is the cyclic quotient singularity of order 4. It is sometimes
//! labelled A_4 after that group order even though the A_n convention by
//! vertex count would call it A_3; we always mean the explicit graph.

pub mod classgroup;
pub mod cover;
pub mod cycle;
pub mod error;
pub mod graph;
pub mod lattice;
pub mod lifting;
pub mod numeric;
pub mod rational;
pub mod seifert;
pub mod snf;

pub use classgroup::{ClassGroup, GroupClass, DEFAULT_ENUMERATION_CAP};
pub use cycle::Cycle;
pub use error::{Error, Result};
pub use graph::PlumbingGraph;
pub use lattice::{ConeFlags, Lattice};
pub use num::{BigInt, BigRational};
