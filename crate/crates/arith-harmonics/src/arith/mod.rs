//! Sieved arithmetic functions over `1..=n_max` and the Dirichlet / unitary
//! convolution algebra. Everything here is exact unless the function itself
//! is irrational (Λ, σ_a with non-integer `a`).

mod ops;
mod ramanujan;
mod sieve;
mod table;

pub use ops::{
    divisor_count_k, dprime_count_k, generalized_mobius, generalized_mobius_int, romanoff_check,
};
pub use ramanujan::{ramanujan_sum, ramanujan_sum_brute_force, RamanujanTable};
pub use sieve::Sieve;
pub use table::{
    dirichlet_convolve, mobius_invert, unitary_convolve, ArithKind, ArithTable, ConvScalar,
};
pub(crate) use table::{dirichlet_convolve_slices, unitary_convolve_slices};
