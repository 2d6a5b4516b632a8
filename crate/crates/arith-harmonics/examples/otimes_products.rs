//! The ⊗ product on power series: mutual inverses, k-fold powers, the
//! unitary companion ⊠, and Lambert resummation.
//!
//! ```bash
//! cargo run --example otimes_products
//! ```

use arith_harmonics::arith::Sieve;
use arith_harmonics::series::{mobius_coeffs_exact, polylog_coeffs_exact, TruncatedSeries};
use num_bigint::BigInt;
use num_rational::BigRational;

fn to_series(values: &[i64]) -> TruncatedSeries<BigRational> {
    TruncatedSeries::new(
        values
            .iter()
            .map(|&v| BigRational::from_integer(BigInt::from(v)))
            .collect(),
    )
    .expect("nonempty")
}

fn main() -> arith_harmonics::Result<()> {
    let n = 64;

    // ℒ₂ and ℳ₂ are mutual ⊗-inverses
    let l2 = polylog_coeffs_exact(2, n)?;
    let m2 = mobius_coeffs_exact(2, n)?;
    let e = TruncatedSeries::<BigRational>::identity(n)?;
    println!("ℒ₂ ⊗ ℳ₂ == e(z) = z:  {}", l2.otimes(&m2)? == e);
    println!("otimes_inverse(ℒ₂) == ℳ₂: {}", l2.otimes_inverse()? == m2);

    // k-fold ⊗ of the all-ones series gives d(n,k)
    let ones = TruncatedSeries::<BigRational>::ones(n)?;
    let d3 = ones.otimes_power(3)?;
    println!(
        "\nd(n,3) for n = 1..12: {:?}",
        (1..=12)
            .map(|i| d3.coeff(i).to_integer())
            .collect::<Vec<_>>()
    );

    // ℳ₀ ⊗ ℳ₀ = μ⋆μ: −2 at primes, +1 at prime squares, 0 at cubes
    let sieve = Sieve::new(n)?;
    let m0 = to_series(sieve.mu().values());
    let sq = m0.otimes(&m0)?;
    println!(
        "\n(ℳ₀⊗ℳ₀) coefficients at 7, 49 (p, p²): {}, {}",
        sq.coeff(7),
        sq.coeff(49)
    );
    println!(
        "(ℳ₀⊗ℳ₀) coefficient at 8 = 2³ is {} — the (−2)^{{n_a}} form only holds on cubefree n",
        sq.coeff(8)
    );

    // ⊠ on the all-ones series counts unitary divisors
    let boxed = ones.boxtimes(&ones)?;
    println!(
        "\nd̃(n) = (1 ⊠ 1)_n for n = 1..12: {:?}",
        (1..=12)
            .map(|i| boxed.coeff(i).to_integer())
            .collect::<Vec<_>>()
    );

    // Lambert resummation: Σ μ(n) xⁿ/(1−xⁿ) = x and Σ Φ(n) xⁿ/(1−xⁿ) = x/(1−x)²
    println!("\nlambert_resum(μ) == z: {}", m0.lambert_resum() == e);
    let phi = to_series(sieve.phi().values());
    let resummed = phi.lambert_resum();
    println!(
        "lambert_resum(Φ) coefficients 1..8: {:?}",
        (1..=8)
            .map(|i| resummed.coeff(i).to_integer())
            .collect::<Vec<_>>()
    );
    Ok(())
}
