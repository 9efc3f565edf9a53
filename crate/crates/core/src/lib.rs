//! Coding constructions between countable structures, made executable at desk scale.
//!
//! The crate is organised around the constructions it implements:
//!
//! * [`structure`], [`types`], [`formula`] and [`iso`] form the substrate: finite relational
//!   structures, the global enumeration of atomic types, a formula AST with a brute-force
//!   evaluator and a Σ/Π classifier, and an isomorphism checker.
//! * [`dyadic`] is the computable dense order with countably many dense colour classes that
//!   stands in for the rationals.
//! * [`marker`] is Marker's embedding of directed graphs in undirected graphs together with its
//!   existential decoder and a streaming decoder.
//! * [`fslin`] is the Friedman–Stanley ordering `L(G)` with membership, blocks, minimal-length
//!   analysis, shapes and first-coordinate automorphisms.
//! * [`backforth`] decides the finite-level back-and-forth relations and generates their
//!   defining formulas; it also issues equivalence certificates for tuples of `L(G)`.
//! * [`interp`] checks effective interpretations on finite carriers.
//! * [`codings`] holds the daisy graphs and shuffle sums.
//! * [`cli`] wires everything into the `structcode` binary.

pub mod backforth;
pub mod cli;
pub mod codings;
pub mod dyadic;
pub mod error;
pub mod fslin;
pub mod formula;
pub mod interp;
pub mod iso;
pub mod marker;
pub mod sexp;
pub mod structure;
pub mod symbol;
pub mod types;

pub use error::{Error, Result};
