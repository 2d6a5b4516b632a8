//! Franel integrals: the exact sawtooth product integral, its log-sin
//! companion by singularity-aware quadrature, the Hurwitz-zeta variant, and
//! the positivity of the gcd quadratic form.
//!
//! ```bash
//! cargo run --example franel_integrals
//! ```

use arith_harmonics::analytic::ComplexParam;
use arith_harmonics::identities::{
    franel_logsin, franel_quadratic_form, franel_sawtooth, franel_sawtooth_closed_form,
    mikolas_integral,
};
use num_bigint::BigInt;
use num_rational::BigRational;

fn main() -> arith_harmonics::Result<()> {
    println!("∫₀¹ {{rt}}{{st}} dt, exact rationals:");
    for (r, s) in [(1u64, 1u64), (2, 3), (4, 6), (10, 15), (7, 7)] {
        let v = franel_sawtooth(r, s)?;
        println!(
            "  (r,s) = ({r:>2},{s:>2}): {v}  == gcd²/(12rs) = {}",
            franel_sawtooth_closed_form(r, s)
        );
    }

    println!("\n∫₀¹ log(2|sin rπt|) log(2|sin sπt|) dt vs (π²/12)·gcd²/(rs):");
    for (r, s) in [(1u64, 1u64), (2, 3), (5, 7), (6, 9)] {
        let rep = franel_logsin(r, s, 100_000)?;
        println!("  (r,s) = ({r},{s}): |err| = {:.2e}", rep.abs_error);
    }

    println!("\nHurwitz-zeta Franel integral at s = 3/2:");
    let s = ComplexParam::real(1.5)?;
    for (a, b) in [(1u64, 1u64), (2, 3), (3, 4)] {
        let rep = mikolas_integral(a, b, s, 100_000)?;
        println!("  (a,b) = ({a},{b}): |err| = {:.2e}", rep.abs_error);
    }

    // Σ gcd(m,n)²/(mn) c_m c_n = 12 ∫ (Σ c_p {pt})² dt ≥ 0, exactly
    let c: Vec<BigRational> = [(3i64, 1i64), (-1, 2), (5, 3), (-2, 1)]
        .iter()
        .map(|&(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
        .collect();
    let (lhs, rhs) = franel_quadratic_form(&c)?;
    println!(
        "\ngcd quadratic form = 12·∫(Σ c_p {{pt}})²: {} == {} (≥ 0)",
        lhs, rhs
    );
    Ok(())
}
