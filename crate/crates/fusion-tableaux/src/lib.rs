//! Exact-arithmetic toolkit connecting three gradings of the same space
//! and verifying that they agree:
//!
//! 1. the **major-index** grading on two-row standard Young tableaux
//!    ([`tableaux`]), together with its stable limit over the principal
//!    embedding;
//! 2. the **fusion-product** grading of `(C^2)^{⊗N}`, built by exact
//!    Gaussian elimination over the rationals ([`fusion`]), whose
//!    multiplicity q-characters are Kostka–Foulkes reversals ([`qseries`]);
//! 3. the **degree** grading of the charge-0 free-boson Fock space,
//!    realized on the ring of symmetric functions ([`symfunc`]) with
//!    Heisenberg and Virasoro operators and an explicit vertex-operator
//!    evaluator producing Schur functions ([`fock`]).
//!
//! All coefficients are arbitrary-precision integers or rationals; no
//! floating point appears anywhere. Every identity the crate claims is
//! checked by [`harness::run_suite`], which the `fusion-tableaux` binary
//! wraps as `verify`/`table` subcommands. The `examples/` directory has
//! one runnable walkthrough per capability:
//!
//! ```bash
//! cargo run --example tableau_statistics
//! cargo run --example stable_embedding
//! cargo run --example qbinomial_level
//! cargo run --example kostka_foulkes
//! cargo run --example fusion_grading
//! cargo run --example symmetric_functions
//! cargo run --example heisenberg_virasoro
//! cargo run --example vertex_schur
//! ```

#![forbid(unsafe_code)]

pub mod error;
pub mod fock;
pub mod fusion;
pub mod harness;
pub mod linalg;
pub mod mpoly;
pub mod partition;
pub mod qpoly;
pub mod qseries;
pub mod symfunc;
pub mod tableaux;

pub use error::Error;
pub use mpoly::MultivariatePoly;
pub use partition::Partition;
pub use qpoly::QPoly;
pub use symfunc::{Basis, SymFunc};
pub use tableaux::{StableTableau, TwoRowSYT};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
