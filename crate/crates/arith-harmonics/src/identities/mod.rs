//! Executable verification of the arithmetic identities: exact Franel
//! integrals, Ramanujan's two formulas, Delange/Lucht expansions, the
//! μ-subseries lemmas, Besicovitch root sums with their exact finite core,
//! Liouville identities and Chowla-type correlation scans.

mod besicovitch;
mod chowla;
mod expansions;
mod franel;
mod ramanujan;

pub use besicovitch::{
    besicovitch_sum, liouville_alternating, mu_tail_bound_check, truncated_root_sum_exact,
    truncated_root_sum_float, BesicovitchKind, MuTailBound,
};
pub use chowla::{chowla_correlation_scan, CorrelationKind, CorrelationPoint, CorrelationScan};
pub use expansions::{delange_expand, lucht_transform, lucht_transform_complex, DelangeExpansion};
pub use franel::{
    franel_logsin, franel_quadratic_form, franel_sawtooth, franel_sawtooth_closed_form,
    mikolas_integral, ExactRational,
};
pub use ramanujan::{
    mu_subseries, musq_coprime_series, phi_s, ramanujan_dual_formula, ramanujan_point_formula,
};
