//! Exact tools for the recurrence `A(n) = 6A(n-1) - A(n-2)`.
//!
//! The crate is organised bottom-up:
//!
//! - [`exact_arith`]: the field `Q(√2)` and the units `α, β, γ, δ`.
//! - [`sequences`]: the families `T, L, B, C, E, NSW, R`, arbitrary seeds,
//!   log-time terms, closed forms and generating-function prefixes.
//! - [`symbolic`]: exponential-polynomial canonical forms and an identity
//!   prover with a small parsed language and a built-in corpus.
//! - [`pell`]: the square equation for arbitrary seeds, cascade
//!   certificates, classification into `μ·{T, B, C, L}` and a brute-force
//!   generalized Pell oracle.
//! - [`cli`]: the command-line front end behind the `pell-recurrence` binary.
//!
//! ## Examples
//!
//! Each major capability has a runnable example in `examples/`:
//!
//! ```text
//! examples/
//! ├── sequence_families.rs   # prefixes, negative indices, cross relations
//! ├── closed_forms.rs        # Q(√2) arithmetic, Binet coefficients, generating function
//! ├── prove_identities.rs    # the identity corpus and ad-hoc expressions
//! ├── classify_seeds.rs      # reducing seeds to a multiple of T, B, C or L
//! ├── pell_certificates.rs   # cascade certificates and the h/r formulas
//! └── pell_oracle.rs         # brute force against the family parameterizations
//! ```
//!
//! Run one with `cargo run --example classify_seeds`.
//!
//! ```
//! use pell_recurrence::pell::{classify, Classification, SeedPair};
//! use pell_recurrence::sequences::Family;
//!
//! let seed = SeedPair::new(3, 1).unwrap();
//! let Classification::Member { family, shift, scale } = classify(&seed) else { unreachable!() };
//! assert_eq!((family, shift, scale.to_string()), (Family::L, -1, "1/2".to_string()));
//! ```

pub mod cli;
pub mod exact_arith;
pub mod pell;
pub mod sequences;
pub mod symbolic;

pub use exact_arith::{QuadInt, QuadRat};
pub use sequences::{family_term, Family, RecurrenceSpec};
