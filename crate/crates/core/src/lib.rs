//! Exact decision procedures for additive separability of finite point sets.
//!
//! A finite set `S` of points over `n` coordinate axes is *good* when every
//! function on `S` splits as a sum `u1(x1) + u2(x2) + ... + un(xn)` of
//! one-variable functions. This crate decides goodness, produces integer
//! *loop certificates* witnessing failure, computes explicit additive
//! decompositions for concrete function tables, and cross-validates the
//! algebraic criterion against an independent link-structure criterion for
//! two and three axes.
//!
//! Coordinates are opaque symbols compared only for equality; all arithmetic
//! is exact rational over arbitrary-precision integers, so every verdict and
//! certificate is sound rather than approximate. The crate is `no_std`
//! (`alloc` required); IO, JSON schemas and the command-line interface live
//! in the companion `addsep` crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod analysis;
pub mod linalg;
pub mod links;
pub mod matrix;
pub mod set;

pub use analysis::{
    check_hereditary, decompose, evaluate, find_loop, is_good, loop_functional, product_loop,
    verify_loop, AnalysisError, DecomposeOutcome, Decomposition, GoodnessVerdict,
    HereditaryReport, LoopCertificate,
};
pub use linalg::{
    fundamental_circuit, integerize, rank_exact, solve_exact, CircuitOutcome, CircuitWitness,
    LinalgError, RationalMatrix, SolveOutcome,
};
pub use links::{good_via_links, is_uniquely_linked, linked_components, ComponentPartition, LinksError};
pub use matrix::IncidenceMatrix;
pub use set::{FunctionTable, Point, PointSet, SetError, Symbol};

/// Exact rational scalar used throughout: arbitrary-precision numerator and
/// denominator, always kept in lowest terms.
pub type Rational = num_rational::BigRational;

/// Arbitrary-precision signed integer.
pub type Int = num_bigint::BigInt;
