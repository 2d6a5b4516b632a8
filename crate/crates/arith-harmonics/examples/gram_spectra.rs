//! Smith determinants, the Gram matrices M_{s,N} = (gcd(m,n)^{2s}/(mn)^s),
//! their closed-form determinants and the ζ-ratio eigenvalue window.
//!
//! ```bash
//! cargo run --example gram_spectra
//! ```

use arith_harmonics::analytic::ComplexParam;
use arith_harmonics::gram::{
    inner_product_brute_force, mobius_polylog_inner_product, polylog_inner_product,
    smith_det_bareiss, smith_det_closed_form, GramSpec,
};

fn main() -> arith_harmonics::Result<()> {
    println!("Smith determinants det(gcd(m,n)^r) = Π J_r(k):");
    for (r, n) in [(1u32, 3usize), (1, 8), (2, 4), (3, 6)] {
        let closed = smith_det_closed_form(r, n)?;
        let literal = smith_det_bareiss(r, n)?;
        println!(
            "  r={r} N={n}: {closed}  (Bareiss agrees: {})",
            closed == literal
        );
    }

    println!("\ndet M_{{s,N}} = (N!)^{{-2s}} Π J_{{2s}}(k):");
    for (s, n) in [(1.0, 2usize), (1.5, 50), (2.0, 120)] {
        let g = GramSpec::new(s, n)?;
        let rel = (g.det() - g.det_closed_form()?).abs() / g.det_closed_form()?.abs();
        println!(
            "  s={s} N={n}: det = {:.6e}, closed-form rel err = {rel:.2e}",
            g.det()
        );
    }

    println!("\nextreme eigenvalues vs [ζ(2s)/ζ(s)², ζ(s)²/ζ(2s)]:");
    for (s, n) in [(1.1, 100usize), (2.0, 100), (3.0, 200)] {
        let g = GramSpec::new(s, n)?;
        let (lo, hi) = g.eigenvalue_bounds()?;
        let (lmin, lmax) = g.extreme_eigenvalues()?;
        println!("  s={s} N={n}: λ ∈ [{lmin:.6}, {lmax:.6}] ⊂ [{lo:.6}, {hi:.6}]");
    }

    // the coefficient inner products behind the matrix entries
    let s = ComplexParam::real(2.0)?;
    println!(
        "\n(ℒ₂(z²)|ℒ₂(z⁴)) closed form  = {:.12}",
        polylog_inner_product(2, 4, s)?.re
    );
    println!(
        "(ℒ₂(z²)|ℒ₂(z⁴)) brute force  = {:.12}",
        inner_product_brute_force(2, 4, s, false, 100_000)?.re
    );
    println!(
        "(ℳ₂(z²)|ℒ₂(z³)) closed form  = {:.12}",
        mobius_polylog_inner_product(2, 3, s)?.re
    );
    println!(
        "(ℳ₂(z²)|ℒ₂(z³)) brute force  = {:.12}",
        inner_product_brute_force(2, 3, s, true, 100_000)?.re
    );
    Ok(())
}
