//! Exact tools for Butson-type complex Hadamard matrices `BH(n, q)`: square matrices
//! whose entries are `q`-th roots of unity and whose rows are pairwise orthogonal.
//!
//! * [`cyclo`]: integer combinations of roots of unity with exact zero testing.
//! * [`bmatrix`]: exponent-encoded matrices, verification, dephasing, equivalence moves.
//! * [`format`]: grid and JSON file formats.
//! * [`petrescu`]: the `[X Y T; Y X T; T* T* D]` block array and its equation systems.
//! * [`search`]: backtracking search for block arrays of order `3s+1`.
//! * [`registry`]: search engines selectable by name.

pub mod bmatrix;
pub mod cyclo;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod petrescu;
pub mod registry;
pub mod ring;
pub mod search;

pub use bmatrix::{ExponentMatrix, Move, VerificationReport, Violation};
pub use cyclo::{cyclotomic_poly, CycElem, Eisenstein, IntPolynomial};
pub use error::{Error, Result};
pub use petrescu::{PetrescuBlocks, SumMatrix};
pub use registry::{EngineRegistry, SearchEngine};
pub use search::{SearchConfig, SearchOutcome, SearchStats, Solution};
