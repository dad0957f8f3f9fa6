//! Iterative erasure decoding and erasure quantization on graph codes.
//!
//! The two peeling algorithms are exact duals: decoding a code with
//! parity-check matrix H fails in the same trials as quantizing with
//! the dual generator (the same matrix) on the complementary erasure
//! pattern. This crate provides the bit-packed GF(2) kernels, the
//! normal-graph machinery with ensemble sampling and alist I/O, the
//! message algebras, both peeling algorithms, the rank-based optimal
//! counterparts, and a Monte Carlo harness that exercises all of it.

pub mod algebra;
pub mod error;
pub mod gf2;
pub mod graph;
pub mod oracle;
pub mod peel;
pub mod report;
pub mod sim;

pub use error::Error;
pub use gf2::{BitVector, RightSolution, SparseBinaryMatrix};
pub use graph::{CodeGraph, DegreeDistribution, GraphRole};
pub use peel::{
    distortion, erasure_decode, erasure_quantize, DecodeOutcome, ErasurePattern, ErasureWord,
    QuantOutcome, TieBreak,
};
