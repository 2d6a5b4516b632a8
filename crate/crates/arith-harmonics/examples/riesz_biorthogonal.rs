//! The biorthogonal system ψ_n of the dilated polylogarithm Riesz basis:
//! exact biorthogonality, expansion/reconstruction, and the Estermann
//! function's expansion coefficients.
//!
//! ```bash
//! cargo run --example riesz_biorthogonal
//! ```

use arith_harmonics::gram::{
    polylog_psi_pairing_exact, riesz_expand, riesz_expand_exact, riesz_reconstruct_exact,
    BiorthCoeffs,
};
use arith_harmonics::series::{estermann_coeffs, TruncatedSeries};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;

fn main() -> arith_harmonics::Result<()> {
    // ψ_{12,2}: sparse on the divisors of 12, leading coefficient 1 at d = 12
    let psi = BiorthCoeffs::new(12, 2)?;
    println!("ψ_12 (s = 2) sparse coefficients d → μ(12/d)·d²/12²:");
    for (d, c) in psi.coeffs() {
        println!("  d = {d:>2}: {c}");
    }

    // (ℒ_s(z^m) | ψ_n) = [m = n], exactly
    print!("\npairings (ℒ(z^m)|ψ_n) for m,n ≤ 6:\n    ");
    for n in 1..=6u64 {
        print!(" n={n}");
    }
    println!();
    for m in 1..=6u64 {
        print!("m={m}: ");
        for n in 1..=6 {
            print!("  {} ", polylog_psi_pairing_exact(m, n, 2)?);
        }
        println!();
    }

    // expand a series in the basis and reconstruct it exactly
    let g = TruncatedSeries::new(
        (1..=32i64)
            .map(|n| BigRational::new(BigInt::from((n * n) % 7 - 3), BigInt::from(n)))
            .collect::<Vec<_>>(),
    )?;
    let alpha = riesz_expand_exact(&g, 2)?;
    let back = riesz_reconstruct_exact(&alpha, 2)?;
    println!(
        "\nround trip g → α → Σ α_k ℒ(z^k) reproduces g exactly: {}",
        back == g
    );

    // Estermann: E(s,a,·) = Σ_p p^{a−s} ℒ_s(z^p)
    let s = Complex64::new(3.0, 0.0);
    let a = Complex64::new(0.5, 0.0);
    let e = estermann_coeffs(s, a, 64)?;
    let coef = riesz_expand(&e, s)?;
    println!("\nEstermann expansion coefficients α_p (must be p^{{a−s}} = p^{{-2.5}}):");
    for p in [1usize, 2, 3, 5, 8] {
        println!(
            "  α_{p} = {:.12}  vs  {:.12}",
            coef.coeff(p).re,
            (p as f64).powf(-2.5)
        );
    }
    Ok(())
}
