//! Arithmetic-function harmonics: sieves and convolution algebras, the ⊗
//! product on power series, polylogarithm-family series evaluation, exact
//! Franel integrals, gcd Gram matrices with Smith determinants, biorthogonal
//! Riesz expansions, and the Mellin semigroup — each identity wired to an
//! executable verification.
//!
//! Start with the runnable examples:
//!
//! ```bash
//! cargo run --example convolution_algebra
//! cargo run --example franel_integrals
//! cargo run --example gram_spectra
//! ```
//!
//! or the CLI:
//!
//! ```bash
//! arith-harmonics verify franel-sawtooth --r-max 50
//! arith-harmonics figure --which fig1 --out fig1.csv
//! ```

pub mod analytic;
pub mod arith;
pub mod asympt;
pub mod cli;
pub mod error;
pub mod gram;
pub mod identities;
pub mod report;
pub mod series;

pub use error::{Error, Result};
pub use report::{IdentityReport, Verdict};
