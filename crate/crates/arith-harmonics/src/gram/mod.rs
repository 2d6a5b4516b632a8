//! GCD-power matrices: exact Smith determinants via Jordan totients, the
//! Gram matrices M_{s,N} of the dilated polylogarithm system with their
//! ζ-ratio spectral window, the coefficient inner products behind them, and
//! the biorthogonal Riesz system ψ_n with expansion/reconstruction.

mod biorth;
mod inner;
mod matrix;
mod smith;

pub use biorth::{
    pairing, pairing_exact, polylog_psi_pairing_exact, riesz_expand, riesz_expand_exact,
    riesz_reconstruct, riesz_reconstruct_exact, BiorthCoeffs,
};
pub use inner::{inner_product_brute_force, mobius_polylog_inner_product, polylog_inner_product};
pub use matrix::{big_rational_to_f64, GramSpec};
pub use smith::{smith_det_bareiss, smith_det_closed_form};
