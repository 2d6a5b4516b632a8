//! Boundary polylogarithm values by Abel means, the two-term Hurwitz-zeta
//! decomposition ℒ_s(e^{2πix}) = A_s ζ(1−s,x) + B_s ζ(1−s,1−x), Kubert
//! distribution identities, the Perron–Frobenius operator, and the Takagi
//! function.
//!
//! ```bash
//! cargo run --example lerch_decomposition
//! ```

use arith_harmonics::analytic::{
    bernoulli_poly, hurwitz_zeta, lerch_coefficients, lerch_decomposition_check, log_two_sin,
    perron_frobenius, polylog_boundary_abel, takagi, ComplexParam, GridFn,
};
use num_complex::Complex64;

fn main() -> arith_harmonics::Result<()> {
    let s = ComplexParam::real(0.5)?;

    let (a, b) = lerch_coefficients(s)?;
    println!("A_{{1/2}} = {a:.10}");
    println!("B_{{1/2}} = {b:.10}");

    println!("\nℒ_{{1/2}}(e^{{2πix}}) by Abel means, residual of the decomposition:");
    for x in [0.2, 0.3, 0.5] {
        let v = polylog_boundary_abel(s, x, 1e-8)?;
        let r = lerch_decomposition_check(s, x, 1e-8)?;
        println!("  x = {x}: value = {v:.9}, residual = {r:.2e}");
    }

    // Kubert identity for 𝔩(x) = ℒ_s(e^{2πix}) at an absolutely convergent s
    let s25 = ComplexParam::real(2.5)?;
    let boundary = |x: f64| -> arith_harmonics::Result<Complex64> {
        Ok(arith_harmonics::analytic::polylog(
            s25,
            Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * x),
            1e-12,
        )?
        .value)
    };
    for (m, x) in [(2u32, 0.1f64), (3, 0.37)] {
        let mut sum = Complex64::new(0.0, 0.0);
        for k in 0..m {
            sum += boundary((x + k as f64) / m as f64)?;
        }
        let lhs = (m as f64).powf(2.5 - 1.0) * sum;
        let rhs = boundary(x)?;
        println!(
            "m^{{s−1}} Σ_k 𝔩((x+{m})/m) − 𝔩(x) at x = {x}: |Δ| = {:.2e}",
            (lhs - rhs).norm()
        );
    }

    // the log|2 sin| distribution relation, an exact Kubert instance
    let mut lhs = 0.0;
    for k in 0..4 {
        lhs += log_two_sin(0.13 + k as f64 / 4.0)?;
    }
    println!(
        "\nΣ_k log|2sin π(x+k/4)| − log|2sin 4πx| = {:.2e}",
        lhs - log_two_sin(0.52)?
    );

    // Perron–Frobenius: Bernoulli polynomials and Hurwitz zeta are
    // eigenfunctions with eigenvalues p^{−n} and p^{s−1}
    let u = GridFn::sample(120, |x| bernoulli_poly(3, x).unwrap())?;
    let pu = perron_frobenius(&u, 3)?;
    let (x0, v0) = pu.points().next().unwrap();
    println!(
        "\n(P_ψ₃ B₃)({x0}) = {v0:.10} vs 3^{{-3}}·B₃ = {:.10}",
        bernoulli_poly(3, x0)? / 27.0
    );

    let h = GridFn::sample(90, |x| {
        hurwitz_zeta(ComplexParam::real(2.5).unwrap(), x)
            .unwrap()
            .re
    })?;
    let ph = perron_frobenius(&h, 2)?;
    let (x1, v1) = ph.points().next().unwrap();
    let expect = 2f64.powf(1.5) * hurwitz_zeta(ComplexParam::real(2.5)?, x1)?.re;
    println!("(P_ψ₂ ζ(2.5,·))({x1:.4}) = {v1:.8} vs 2^{{s-1}}ζ(2.5,x) = {expect:.8}");

    // the λ = 1/2 eigenfunction is continuous and nowhere differentiable
    println!(
        "\nTakagi: T(1/2) = {}, T(1/3) = {:.12}",
        takagi(0.5, 60)?,
        takagi(1.0 / 3.0, 60)?
    );
    Ok(())
}
