//! Correlation trend scans for μ and λ: single sums (Mertens scale), shifted
//! pair correlations, and the all-squared anti-example whose density is
//! 6/π² rather than o(M).
//!
//! ```bash
//! cargo run --example chowla_scan
//! ```

use arith_harmonics::identities::{chowla_correlation_scan, CorrelationKind};
use std::f64::consts::PI;

fn main() -> arith_harmonics::Result<()> {
    let m = 1_000_000;

    let scan = chowla_correlation_scan(CorrelationKind::Mobius, &[0], &[1], m)?;
    println!("Σ μ(n) / M:");
    for p in &scan.points {
        println!("  M = {:>8}: {:+.3e}", p.m, p.normalized);
    }

    let scan = chowla_correlation_scan(CorrelationKind::Liouville, &[0, 1], &[1, 1], m)?;
    println!("\nΣ λ(n)λ(n+1) / M (pair correlation):");
    for p in &scan.points {
        println!("  M = {:>8}: {:+.3e}", p.m, p.normalized);
    }

    let scan = chowla_correlation_scan(CorrelationKind::Mobius, &[0, 2], &[1, 1], m)?;
    println!("\nΣ μ(n)μ(n+2) / M:");
    for p in &scan.points {
        println!("  M = {:>8}: {:+.3e}", p.m, p.normalized);
    }

    let scan = chowla_correlation_scan(CorrelationKind::Mobius, &[0], &[2], m)?;
    println!("\nanti-example Σ μ²(n) / M (squarefree density, NOT o(M)):");
    for p in &scan.points {
        println!(
            "  M = {:>8}: {:.6}  (6/π² = {:.6})",
            p.m,
            p.normalized,
            6.0 / (PI * PI)
        );
    }
    assert!(scan.positive_density_warning);
    Ok(())
}
