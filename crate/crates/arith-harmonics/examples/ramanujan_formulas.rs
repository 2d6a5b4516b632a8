//! Ramanujan's two closed forms for sums of c_k, the Mangoldt special case
//! at s = 1, and the μ-subseries lemmas.
//!
//! ```bash
//! cargo run --example ramanujan_formulas
//! ```

use arith_harmonics::analytic::ComplexParam;
use arith_harmonics::cli::verdict_str;
use arith_harmonics::identities::{
    mu_subseries, musq_coprime_series, ramanujan_dual_formula, ramanujan_point_formula,
};

fn main() -> arith_harmonics::Result<()> {
    let s2 = ComplexParam::real(2.0)?;

    println!("Σ_m c_k(m)/m² = ζ(2) Σ_{{d|k}} d^{{-1}} μ(k/d)   (period-blocked partial sums)");
    for k in [2u64, 4, 6, 12] {
        let r = ramanujan_point_formula(k, s2, 100_000)?;
        println!(
            "  k = {k:>2}: {} |err| = {:.2e}",
            verdict_str(r.verdict),
            r.abs_error
        );
    }

    println!("\nΣ_m c_k(m)/m = −Λ(k)   (s = 1, heuristic verdicts)");
    let s1 = ComplexParam::real(1.0)?;
    for k in [2u64, 3, 8, 9, 6, 10] {
        let r = ramanujan_point_formula(k, s1, 1_000_000)?;
        println!(
            "  k = {k:>2}: {} |err| = {:.2e}",
            verdict_str(r.verdict),
            r.abs_error
        );
    }

    println!("\nΣ_k c_k(m)/k² = σ_{{-1}}(m)/ζ(2)");
    for m in [1u64, 2, 6, 30] {
        let r = ramanujan_dual_formula(m, s2, 1_000_000)?;
        println!(
            "  m = {m:>2}: {} |err| = {:.2e}",
            verdict_str(r.verdict),
            r.abs_error
        );
    }

    println!("\nΣ_n μ(qn)/n² = μ(q) q²/(Φ₂(q) ζ(2))");
    for q in [1u64, 2, 3, 4, 6] {
        let r = mu_subseries(q, s2, 1_000_000)?;
        println!(
            "  q = {q}: {} |err| = {:.2e}",
            verdict_str(r.verdict),
            r.abs_error
        );
    }

    println!("\nΣ_{{(m,n)=1}} |μ(m)|/m² = n² ζ(2)/(ψ_n(2) ζ(4))");
    for n in [1u64, 2, 4, 9] {
        let r = musq_coprime_series(n, s2, 1_000_000)?;
        println!(
            "  n = {n}: {} |err| = {:.2e}",
            verdict_str(r.verdict),
            r.abs_error
        );
    }
    Ok(())
}
