use num_complex::Complex64;

use crate::analytic::{zeta_raw, ComplexParam};
use crate::arith::Sieve;
use crate::error::{Error, Result};
use crate::identities::phi_s;

/// (ℒ_s(z^m) | ℒ_s(z^n)) = Σ_{km=ln} (kl)^{−s} = gcd(m,n)^{2s}/(mn)^s · ζ(2s),
/// under the coefficient pairing (f|g) = Σ a_k conj(b_k), for Re s > 1.
pub fn polylog_inner_product(m: u64, n: u64, s: ComplexParam) -> Result<Complex64> {
    check_args(m, n, s)?;
    let sc = s.as_complex();
    let g = num_integer::gcd(m, n) as f64;
    let ratio = Complex64::new(g * g / (m as f64 * n as f64), 0.0);
    Ok(ratio.powc(sc) * zeta_raw(2.0 * sc)?)
}

/// (ℳ_s(z^m) | ℒ_s(z^n)) = gcd(m,n)^{2s}/(mn)^s · μ(δ) δ^{2s}/(Φ_{2s}(δ) ζ(2s))
/// with δ = δ(m,n) = lcm(m,n)/m: the pairs km = ln force k = jδ, and
/// μ(jδ) = μ(δ)μ(j) on (j,δ)=1 gives the coprime-restricted Euler product
/// Σ_{(j,δ)=1} μ(j)/j^{2s} = δ^{2s}/(Φ_{2s}(δ) ζ(2s)).
pub fn mobius_polylog_inner_product(m: u64, n: u64, s: ComplexParam) -> Result<Complex64> {
    check_args(m, n, s)?;
    let sc = s.as_complex();
    let g = num_integer::gcd(m, n);
    let delta = n / g; // lcm(m,n)/m
    let mu_delta = mu_u64(delta);
    if mu_delta == 0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let gf = g as f64;
    let ratio = Complex64::new(gf * gf / (m as f64 * n as f64), 0.0);
    let delta_2s = Complex64::new(delta as f64, 0.0).powc(2.0 * sc);
    Ok(
        ratio.powc(sc) * mu_delta as f64 * delta_2s
            / (phi_s(delta, 2.0 * sc) * zeta_raw(2.0 * sc)?),
    )
}

/// Brute-force oracle: Σ over pairs km = ln with k, l ≤ k_max of w(k)/(kl)^s,
/// where w ≡ 1 or w = μ. Exposed for tests and the verification suites.
pub fn inner_product_brute_force(
    m: u64,
    n: u64,
    s: ComplexParam,
    mobius_weight: bool,
    k_max: u64,
) -> Result<Complex64> {
    check_args(m, n, s)?;
    let sc = s.as_complex();
    let g = num_integer::gcd(m, n);
    let delta_m = n / g; // k runs over multiples of lcm/m
    let delta_n = m / g;
    let sieve = Sieve::new((k_max * delta_m) as usize)?;
    let mu = sieve.mu();
    let mut acc = Complex64::new(0.0, 0.0);
    let mut j = 1u64;
    loop {
        let k = j * delta_m;
        let l = j * delta_n;
        if k > k_max * delta_m {
            break;
        }
        let w = if mobius_weight {
            *mu.get(k as usize)
        } else {
            1
        };
        if w != 0 {
            acc += w as f64
                * Complex64::new(k as f64, 0.0).powc(-sc)
                * Complex64::new(l as f64, 0.0).powc(-sc);
        }
        j += 1;
    }
    Ok(acc)
}

fn check_args(m: u64, n: u64, s: ComplexParam) -> Result<()> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument("indices must be >= 1".into()));
    }
    if s.re() <= 1.0 {
        return Err(Error::Domain(format!(
            "inner products need Re s > 1, got {s}"
        )));
    }
    Ok(())
}

fn mu_u64(mut n: u64) -> i64 {
    let mut k = 0;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            k += 1;
        }
        p += 1;
    }
    if n > 1 {
        k += 1;
    }
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}
