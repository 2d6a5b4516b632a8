//! Dirichlet and unitary convolution, Möbius inversion, the μ_α family and
//! Ramanujan sums with Hölder's closed form.
//!
//! ```bash
//! cargo run --example convolution_algebra
//! ```

use arith_harmonics::arith::{
    dirichlet_convolve, generalized_mobius_int, mobius_invert, ramanujan_sum,
    ramanujan_sum_brute_force, romanoff_check, unitary_convolve, ArithKind, ArithTable, Sieve,
};

fn main() -> arith_harmonics::Result<()> {
    let n = 24;
    let sieve = Sieve::new(n)?;
    let ones = ArithTable::new(ArithKind::Custom, vec![1i64; n])?;

    // μ ⋆ 1 = e
    let e = dirichlet_convolve(&sieve.mu(), &ones)?;
    println!("(μ⋆1)(1..8) = {:?}   — the ⋆-identity", &e.values()[..8]);

    // J_k ⋆ 1 = n^k
    let j2_sum = dirichlet_convolve(&sieve.jordan(2)?, &ones)?;
    println!("(J₂⋆1)(1..8) = {:?}  — the squares", &j2_sum.values()[..8]);

    // Möbius inversion: n ↦ n recovers Φ
    let id = ArithTable::new(ArithKind::Custom, (1..=n as i64).collect())?;
    let phi = mobius_invert(&id)?;
    println!("mobius_invert(n)(1..8) = {:?} = Φ", &phi.values()[..8]);

    // unitary divisor count d̃ = 1 ⊔ 1
    let dt = unitary_convolve(&ones, &ones)?;
    println!(
        "d̃(12) = {} (coprime ordered factor pairs of 12)",
        dt.get(12)
    );

    // μ_α at integer orders: μ₁ = μ, μ₋₁ ≡ 1, μ₀ = e, and μ_{a+b} = μ_a ⋆ μ_b
    let mu2 = generalized_mobius_int(2, n)?;
    let mu_1 = generalized_mobius_int(1, n)?;
    let conv = dirichlet_convolve(&mu_1, &mu_1)?;
    println!("μ₁⋆μ₁ == μ₂ entrywise: {}", conv.values() == mu2.values());

    // Ramanujan sums: Hölder vs the defining exponential sum
    println!("\nc_q(n) for q = 6:");
    for m in 1..=6 {
        let exact = ramanujan_sum(6, m)?;
        let (re, im) = ramanujan_sum_brute_force(6, m);
        println!("  c_6({m}) = {exact}   (exponential sum {re:+.12}{im:+.1e}i)");
    }
    println!("c_6(6) = Φ(6) = {}", ramanujan_sum(6, 6)?);
    println!("c_6(5) = μ(6) = {}", ramanujan_sum(6, 5)?);

    // Romanoff's vanishing sum
    let f: Vec<i64> = (1..=12).map(|v| v * v + 3).collect();
    println!(
        "\nromanoff(n=12, k=5, arbitrary f) = {}",
        romanoff_check(12, 5, &f)?
    );
    Ok(())
}
