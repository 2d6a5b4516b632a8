//! Numerical evaluation of the special functions and series: ζ, Γ, Hurwitz
//! ζ, the polylogarithm ℒ_s, the Möbius series ℳ_s, Liouville 𝒩_s, the
//! Ramanujan series 𝒞_{s,l} with its dual evaluation route, and the
//! Estermann function.
//!
//! ```bash
//! cargo run --example series_evaluation
//! ```

use arith_harmonics::analytic::{
    estermann, gamma_fn, hurwitz_zeta, liouville_series, mobius_series, polylog, ramanujan_series,
    zeta, BoundaryMode, ComplexParam,
};
use num_complex::Complex64;
use std::f64::consts::PI;

fn main() -> arith_harmonics::Result<()> {
    let s2 = ComplexParam::real(2.0)?;
    let s3 = ComplexParam::real(3.0)?;

    println!(
        "ζ(2)  = {:.15}   (π²/6  = {:.15})",
        zeta(s2)?.re,
        PI * PI / 6.0
    );
    println!(
        "ζ(4)/ζ(2)² = {:.15}  (= 2/5)",
        zeta(ComplexParam::real(4.0)?)?.re / zeta(s2)?.re.powi(2)
    );
    println!(
        "Γ(1/2) = {:.15}  (√π = {:.15})",
        gamma_fn(ComplexParam::real(0.5)?)?.re,
        PI.sqrt()
    );
    println!(
        "ζ(2, 1/2) = {:.15}  (π²/2 = {:.15})",
        hurwitz_zeta(s2, 0.5)?.re,
        PI * PI / 2.0
    );

    let li = polylog(s3, Complex64::new(1.0, 0.0), 1e-10)?;
    println!(
        "\nℒ₃(1) = {:.12} with rigorous tail ≤ {:.1e} ({} terms)",
        li.value.re, li.tail_estimate, li.terms_used
    );

    let m = mobius_series(
        s2,
        Complex64::new(1.0, 0.0),
        1_000_000,
        BoundaryMode::Direct,
    )?;
    println!(
        "ℳ₂(1) = {:.10}  (1/ζ(2) = {:.10}), heuristic tail {:.1e}",
        m.value.re,
        6.0 / (PI * PI),
        m.tail_estimate
    );

    let nl = liouville_series(
        s2,
        Complex64::new(1.0, 0.0),
        1_000_000,
        BoundaryMode::Direct,
    )?;
    println!(
        "𝒩₂(1) = {:.10}  (ζ(4)/ζ(2) = π²/15 = {:.10})",
        nl.value.re,
        PI * PI / 15.0
    );

    // 𝒞_{s,l} runs both the direct sum and Σ_{d|l} d^{1−s} ℳ_s(z^d) and
    // must see them agree before returning
    let c = ramanujan_series(s3, 4, Complex64::new(1.0, 0.0), 500_000)?;
    let z3 = zeta(s3)?.re;
    println!(
        "\n𝒞_{{3,4}}(1) = {:.10}  (σ₂(4)/(4²ζ(3)) = {:.10})",
        c.value.re,
        21.0 / (16.0 * z3)
    );

    let e = estermann(s3, ComplexParam::real(1.0)?, Complex64::new(0.5, 0.0), 4000)?;
    println!(
        "E(3, 1, 1/2) = {:.12} (dilation route cross-checked internally)",
        e.value.re
    );

    // Abel evaluation of a boundary series
    let abel = mobius_series(
        ComplexParam::real(1.0)?,
        Complex64::new(-1.0, 0.0),
        200_000,
        BoundaryMode::Abel,
    )?;
    println!(
        "\nℳ₁(−1) by Abel means ≈ {:.8} (extrapolation step {:.1e})",
        abel.value.re, abel.tail_estimate
    );
    Ok(())
}
