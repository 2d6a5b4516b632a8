//! F(x) = Σ (cos(x/j) − 1): the ζ(2k)-Taylor identity, the Σf(z/n^s)
//! transform it comes from, and the asymptotic fit — the linear coefficient
//! lands on −π/2 and the remainder grows subpolynomially.
//!
//! ```bash
//! cargo run --example flett_asymptotics
//! ```

use arith_harmonics::analytic::ComplexParam;
use arith_harmonics::asympt::{
    chp_transform, cos_sum, cos_sum_envelope, cos_sum_taylor, linear_term_and_remainder,
};
use arith_harmonics::series::TruncatedSeries;
use num_complex::Complex64;
use std::f64::consts::PI;

fn main() -> arith_harmonics::Result<()> {
    println!("F(x) = Σ(cos(x/j) − 1) against Σ(−1)^k ζ(2k)/(2k)! x^{{2k}}:");
    for x in [0.5, 1.0, 4.0, 9.5] {
        let lhs = cos_sum(x, 1e-12)?;
        let rhs = cos_sum_taylor(x, 1e-12)?;
        println!(
            "  x = {x:>4}: F = {lhs:+.12}, Taylor = {rhs:+.12}, |Δ| = {:.1e}",
            (lhs - rhs).abs()
        );
    }

    // the general transform Σ_n f(z/n^s) = Σ_k a_k ζ(ks) z^k
    let f = TruncatedSeries::new(vec![
        Complex64::new(0.0, 0.0),
        Complex64::new(1.0, 0.0),
        Complex64::new(-0.5, 0.0),
    ])?;
    let rep = chp_transform(&f, ComplexParam::real(0.8)?, Complex64::new(0.6, 0.0), 1e-8)?;
    println!(
        "\nΣ f(z/n^s) vs Σ a_k ζ(ks) z^k (deg 3, s = 0.8, z = 0.6): |Δ| = {:.1e}",
        rep.abs_error
    );

    // asymptotics: F(x) = −(π/2)x + O(x^{σ₀}), σ₀ < 1
    let fit = linear_term_and_remainder(50_000.0, 40)?;
    println!(
        "\nlinear fit over the top decade: c₁ = {:+.6}  (−π/2 = {:+.6})",
        fit.linear_coeff,
        -PI / 2.0
    );
    println!(
        "remainder exponent (Theil–Sen): {:.3}  (interquartile {:.3}..{:.3}, residual {:.3})",
        fit.remainder_exponent,
        fit.remainder_exponent_ci.0,
        fit.remainder_exponent_ci.1,
        fit.fit_residual
    );

    println!("\nenvelope |F(x)| ≤ Σ min(2, x²/2j²):");
    for x in [10.0, 1000.0] {
        println!(
            "  x = {x:>6}: |F| = {:.3}, envelope = {:.3}",
            cos_sum(x, 1e-9)?.abs(),
            cos_sum_envelope(x)
        );
    }
    Ok(())
}
