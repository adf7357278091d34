//! Analysis toolkit for linear programming decoding of binary linear codes.
//!
//! The crate centers on the *fundamental polytope* of a parity-check matrix:
//! the LP relaxation whose vertices are the codewords together with
//! fractional pseudocodewords. It provides
//!
//! - GF(2) linear algebra, alist I/O and Tanner-graph cycle counts
//!   ([`code_algebra`]),
//! - BPSK/AWGN channel helpers ([`channel`]),
//! - a self-contained dense simplex solver ([`lp_core`]),
//! - LP decoding with lazy odd-set cut generation ([`lp_decoder`]),
//! - sum-product BP and brute-force ML reference decoders
//!   ([`reference_decoders`]),
//! - exact extreme-ray enumeration of the fundamental cone and pseudoweight
//!   spectra ([`cone_analysis`]),
//! - branch-and-bound search for the minimal pseudoweight
//!   ([`min_pseudoweight`]),
//! - 2D decision-region mapping ([`region_mapper`]),
//! - ML/LP union bounds ([`bounds`]), and
//! - a deterministic Monte-Carlo frame-error-rate harness ([`sim`]).

pub mod bounds;
pub mod channel;
pub mod code_algebra;
pub mod cone_analysis;
pub mod lp_core;
pub mod lp_decoder;
pub mod min_pseudoweight;
pub mod reference_decoders;
pub mod region_mapper;
pub mod sim;

pub use code_algebra::BinaryMatrix;
pub use cone_analysis::Pseudocodeword;
