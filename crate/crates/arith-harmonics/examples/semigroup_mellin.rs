//! The Mellin semigroup T_s(f)(z) = (1/Γ(s)) ∫ f(e^{−t}z) t^{s−1} dt: its
//! coefficient action a_n ↦ a_n n^{−s}, the semigroup law, and the
//! quadrature cross-check.
//!
//! ```bash
//! cargo run --example semigroup_mellin
//! ```

use arith_harmonics::analytic::ComplexParam;
use arith_harmonics::asympt::{t_semigroup_coeff, t_semigroup_quadrature};
use arith_harmonics::series::TruncatedSeries;
use num_complex::Complex64;

fn main() -> arith_harmonics::Result<()> {
    let f = TruncatedSeries::new(
        (1..=16)
            .map(|n| Complex64::new(1.0 / n as f64, 0.0))
            .collect::<Vec<_>>(),
    )?;
    let z = Complex64::new(0.35, 0.1);

    // T_k sends ℳ₀-style coefficients to parameter k: a_n → a_n/n^k
    let t2 = t_semigroup_coeff(&f, ComplexParam::real(2.0)?);
    println!(
        "T₂ coefficient action on a_n = 1/n: a₄ = {} (= 1/4³)",
        t2.coeff(4).re
    );

    // semigroup law at the coefficient level, complex parameters included
    let s1 = ComplexParam::new(0.6, 0.4)?;
    let s2 = ComplexParam::new(0.9, -0.4)?;
    let lhs = t_semigroup_coeff(&t_semigroup_coeff(&f, s1), s2);
    let rhs = t_semigroup_coeff(&f, ComplexParam::real(1.5)?);
    let max_gap = (1..=16)
        .map(|n| (lhs.coeff(n) - rhs.coeff(n)).norm())
        .fold(0.0f64, f64::max);
    println!("‖T_{{0.6+0.4i}}∘T_{{0.9−0.4i}} − T_{{1.5}}‖ on coefficients = {max_gap:.2e}");

    // Mellin quadrature agrees with the coefficient route
    for s in [0.5, 1.5] {
        let sp = ComplexParam::real(s)?;
        let q = t_semigroup_quadrature(&f, sp, z, 1e-10)?;
        let c = t_semigroup_coeff(&f, sp).eval_complex(z, |a| *a);
        println!(
            "s = {s}: quadrature {q:.12}, coefficients {c:.12}, |Δ| = {:.1e}",
            (q - c).norm()
        );
    }

    // Γ-integral sanity: T_s(z) = z for every s
    let id = TruncatedSeries::new(vec![Complex64::new(1.0, 0.0)])?;
    let q = t_semigroup_quadrature(&id, ComplexParam::real(0.7)?, z, 1e-10)?;
    println!(
        "T_s(z) at z = {z}: {q} (identity up to {:.1e})",
        (q - z).norm()
    );
    Ok(())
}
