//! Exact-arithmetic toolkit for the binary symplectic group and the Clifford group.
//!
//! The crate decomposes any element of Sp(2m;2) into a minimal product of
//! symplectic transvections, and any Clifford gate into a global phase, a
//! Pauli, and a minimal product of transvection gates. On top of the
//! decomposition it computes gate supports (which Pauli basis terms appear in
//! a gate) and Pauli commutants (which Pauli operators commute with a gate),
//! all over exact GF(2) / Gaussian-integer arithmetic.
//!
//! Layering, bottom up:
//!
//! * [`gf2`] — bit-packed vectors and matrices over GF(2): XOR row ops,
//!   RREF with recorded transform, inverse, kernel bases.
//! * [`symplectic`] — the group Sp(2m;2): the symplectic inner product,
//!   transvections, fixed/residue spaces, Gram and path matrices, the
//!   product-reconstruction identity, generators, and DOT export.
//! * [`decompose`] — minimal transvection decompositions: hyperbolic fix-up,
//!   congruence triangularization, rank-peeling oracle, brute-force
//!   minimality check for small m.
//! * [`pauli`] — phase-tracked Heisenberg-Weyl algebra plus dense
//!   realizations for small m.
//! * [`circuit`] — a tiny Clifford circuit DSL (`h 0; cnot 0 1`) with exact
//!   symbolic conjugation and symplectic/dense lowering.
//! * [`clifford`] — dense Clifford unitaries, transvection gates, the gate
//!   decomposition algorithm, support sets, and commutants.
//! * [`cli`] — the `transvec` command-line front end.
//!
//! See the crate `examples/` directory for a runnable tour of each
//! capability, and `transvec --help` for the CLI.

pub mod circuit;
pub mod cli;
pub mod clifford;
pub mod decompose;
mod error;
pub mod gf2;
pub mod pauli;
pub mod symplectic;

pub use circuit::{parse_circuit, CircuitProgram, Gate};
pub use clifford::{
    decompose_circuit, decompose_clifford, equal_up_to_phase, transvection_gate,
    CliffordDecomposition, Commutant, DenseUnitary, GlobalPhase, SupportSet,
};
pub use decompose::{
    brute_force_min_length, decompose_peeling, decompose_symplectic, verify_decomposition,
    SymplecticDecomposition,
};
pub use error::{Error, Result};
pub use gf2::{BitMatrix, BitVec};
pub use pauli::Pauli;
pub use symplectic::{
    gram_data, reconstruct, residue_matrix, sip, GramData, ResidueMatrix, SymplecticMatrix,
    Transvection,
};
