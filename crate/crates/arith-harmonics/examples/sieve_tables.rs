//! Every arithmetic function the sieve can build, from one
//! smallest-prime-factor pass.
//!
//! ```bash
//! cargo run --example sieve_tables
//! ```

use arith_harmonics::arith::Sieve;
use num_complex::Complex64;

fn main() -> arith_harmonics::Result<()> {
    let n = 30;
    let sieve = Sieve::new(n)?;

    println!("n:        {:>4?}", (1..=12).collect::<Vec<_>>());
    println!("μ(n):     {:>4?}", &sieve.mu().values()[..12]);
    println!("λ(n):     {:>4?}", &sieve.lambda().values()[..12]);
    println!("Φ(n):     {:>4?}", &sieve.phi().values()[..12]);
    println!("J₂(n):    {:>4?}", &sieve.jordan(2)?.values()[..12]);
    println!("θ(n)=2^ω: {:>4?}", &sieve.theta().values()[..12]);
    println!("ω(n):     {:>4?}", &sieve.omega().values()[..12]);
    println!("n_a(n):   {:>4?}", &sieve.n_simple().values()[..12]);
    println!("|μ(n)|:   {:>4?}", &sieve.mu_abs().values()[..12]);

    let mangoldt = sieve.mangoldt();
    println!("\nΛ(n) is log p exactly at prime powers:");
    for n in [2usize, 4, 6, 8, 9, 12, 25, 27] {
        println!("  Λ({n:>2}) = {:.6}", mangoldt.get(n));
    }

    // σ_a with a complex exponent
    let sigma = sieve.sigma(Complex64::new(0.5, 1.0));
    println!("\nσ_(0.5+i)(12) = {:.6}", sigma.get(12));

    // multiplicativity, spot-checked
    let phi = sieve.phi();
    println!(
        "\nΦ(4)·Φ(7) = {} = Φ(28) = {}",
        phi.get(4) * phi.get(7),
        phi.get(28)
    );
    Ok(())
}
