//! Root-of-unity sums: the exact finite identity Σ_h f(e^{2πih/k}) =
//! k Σ_j a_{jk} (cyclotomic route vs divisor slice), the Besicovitch sums of
//! ℳ_s and 𝒩_s with closed forms, the alternating Liouville identity, and
//! the μ-tail bound report.
//!
//! ```bash
//! cargo run --example besicovitch_roots
//! ```

use arith_harmonics::analytic::ComplexParam;
use arith_harmonics::arith::Sieve;
use arith_harmonics::cli::verdict_str;
use arith_harmonics::identities::{
    besicovitch_sum, liouville_alternating, mu_tail_bound_check, truncated_root_sum_exact,
    BesicovitchKind,
};
use arith_harmonics::series::TruncatedSeries;
use num_bigint::BigInt;
use num_rational::BigRational;

fn main() -> arith_harmonics::Result<()> {
    // the finite core: a_n = μ(n)/n, k = 3, N = 9 gives −1/2 on both routes
    let sieve = Sieve::new(9)?;
    let mu = sieve.mu();
    let f = TruncatedSeries::new(
        (1..=9)
            .map(|n| BigRational::new(BigInt::from(*mu.get(n)), BigInt::from(n as i64)))
            .collect::<Vec<_>>(),
    )?;
    let (direct, slice) = truncated_root_sum_exact(&f, 3)?;
    println!("Σ_h f_9(e^{{2πih/3}}) in ℚ(ω): {direct}   slice route 3·Σ a_3j: {slice}");

    // Σ_h ℳ_s(e^{2πih/k}) = μ(k)·k/(Φ_s(k)ζ(s)) at s = 2
    let s2 = ComplexParam::real(2.0)?;
    println!("\nBesicovitch sums at s = 2 (numeric roots vs closed form):");
    for k in [2u64, 3, 4, 6, 10] {
        let r = besicovitch_sum(BesicovitchKind::Mobius, k, s2, 1_000_000)?;
        println!(
            "  μ-case k = {k:>2}: {} |err| = {:.2e}",
            verdict_str(r.verdict),
            r.abs_error
        );
    }
    for k in [2u64, 3, 9] {
        let r = besicovitch_sum(BesicovitchKind::Liouville, k, s2, 1_000_000)?;
        println!(
            "  λ-case k = {k:>2}: {} |err| = {:.2e}",
            verdict_str(r.verdict),
            r.abs_error
        );
    }

    // s → 1: the sums vanish (heuristic at finite truncation)
    let s1 = ComplexParam::real(1.0)?;
    let r = besicovitch_sum(BesicovitchKind::Mobius, 3, s1, 5_000_000)?;
    println!(
        "\nΣ_h ℳ₁(e^{{2πih/3}}) at 5e6 terms: |value| = {:.2e} ({})",
        r.abs_error,
        verdict_str(r.verdict)
    );

    // Σ (−1)^{n+1} λ(n)/n^s = (1 + 2^{1−s}) ζ(2s)/ζ(s)
    println!("\nalternating Liouville identity:");
    for s in [2.0, 3.0, 1.2] {
        let r = liouville_alternating(ComplexParam::real(s)?, 1_000_000)?;
        println!(
            "  s = {s}: {} |err| = {:.2e}",
            verdict_str(r.verdict),
            r.abs_error
        );
    }

    // μ-tail: the dual-route value always verifies; the displayed bound
    // P_D(τ) ≤ e(τ−1) only holds away from τ = 1
    println!("\nΣ_j μ(jD)/j^τ closed-form check and the P_D(τ) ≤ e(τ−1) report:");
    for (d, tau) in [(2u64, 1.4), (6, 1.3), (2, 1.05), (1, 1.2)] {
        let b = mu_tail_bound_check(d, tau, 1_000_000)?;
        println!(
            "  D = {d:>2}, τ = {tau}: value {} |err| = {:.1e}; P_D = {:.4}, e(τ−1) = {:.4}, bound holds: {}",
            verdict_str(b.report.verdict),
            b.report.abs_error,
            b.p_d,
            b.bound_e_tau,
            b.bound_holds
        );
    }
    Ok(())
}
