use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;

use crate::arith::Sieve;
use crate::error::{Error, Result};
use crate::series::{
    mobius_coeffs, mobius_coeffs_exact, polylog_coeffs, polylog_coeffs_exact, rational_power,
    TruncatedSeries,
};

/// The biorthogonal element ψ_{n,s}(z) = n^{−s} Σ_{d|n} μ(n/d) d^s z^d,
/// stored sparsely on the divisors of n. The coefficient at d = n is 1.
#[derive(Debug, Clone)]
pub struct BiorthCoeffs {
    n: u64,
    coeffs: BTreeMap<u64, BigRational>,
}

impl BiorthCoeffs {
    /// Exact construction for integer s.
    pub fn new(n: u64, s: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("psi index must be >= 1".into()));
        }
        let sieve = Sieve::new(n as usize)?;
        let mu = sieve.mu();
        let mut coeffs = BTreeMap::new();
        for d in 1..=n {
            if n % d != 0 {
                continue;
            }
            let m = *mu.get((n / d) as usize);
            if m == 0 {
                continue;
            }
            // μ(n/d) d^s / n^s
            let v = rational_power(d as i64, s)
                * rational_power(n as i64, -s)
                * BigRational::from_integer(BigInt::from(m));
            coeffs.insert(d, v);
        }
        Ok(BiorthCoeffs { n, coeffs })
    }

    pub fn index(&self) -> u64 {
        self.n
    }

    pub fn coeffs(&self) -> &BTreeMap<u64, BigRational> {
        &self.coeffs
    }

    /// Dense coefficient vector up to `order`.
    pub fn to_series(&self, order: usize) -> Result<TruncatedSeries<BigRational>> {
        let mut v = vec![BigRational::zero(); order];
        for (&d, c) in &self.coeffs {
            if (d as usize) <= order {
                v[d as usize - 1] = c.clone();
            }
        }
        TruncatedSeries::new(v)
    }
}

/// Exact ℓ² coefficient pairing (f|g) = Σ a_n b_n of rational series
/// (no conjugation needed over ℚ).
pub fn pairing_exact(
    a: &TruncatedSeries<BigRational>,
    b: &TruncatedSeries<BigRational>,
) -> BigRational {
    let n = a.order().min(b.order());
    let mut acc = BigRational::zero();
    for i in 1..=n {
        acc += a.coeff(i) * b.coeff(i);
    }
    acc
}

/// Float pairing with conjugation on the second slot.
pub fn pairing(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x * y.conj()).sum()
}

/// (ℒ_s(z^m) | ψ_n) over ℚ for integer s: the dilated polylog has
/// coefficients (j/m)^{−s} at multiples of m, so the pairing runs over the
/// divisors of n that m divides. Equals [m = n].
pub fn polylog_psi_pairing_exact(m: u64, n: u64, s: i64) -> Result<BigRational> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument("indices must be >= 1".into()));
    }
    let psi = BiorthCoeffs::new(n, s)?;
    let mut acc = BigRational::zero();
    for (&d, c) in psi.coeffs() {
        if d % m == 0 {
            acc += rational_power((d / m) as i64, -s) * c;
        }
    }
    Ok(acc)
}

/// Expansion of g in the Riesz basis (ℒ_s(z^k))_k: the coefficient sequence
/// is α = g ⊗ ℳ_s, which agrees with α_n = (g | ψ_n) for real s.
pub fn riesz_expand_exact(
    g: &TruncatedSeries<BigRational>,
    s: i64,
) -> Result<TruncatedSeries<BigRational>> {
    let m = mobius_coeffs_exact(s, g.order())?;
    g.otimes(&m)
}

/// Reconstruction Σ_k α_k ℒ_s(z^k) = α ⊗ ℒ_s at the coefficient level.
pub fn riesz_reconstruct_exact(
    alpha: &TruncatedSeries<BigRational>,
    s: i64,
) -> Result<TruncatedSeries<BigRational>> {
    let l = polylog_coeffs_exact(s, alpha.order())?;
    alpha.otimes(&l)
}

/// Float versions for non-integer s.
pub fn riesz_expand(
    g: &TruncatedSeries<Complex64>,
    s: Complex64,
) -> Result<TruncatedSeries<Complex64>> {
    let m = mobius_coeffs(s, g.order())?;
    g.otimes(&m)
}

pub fn riesz_reconstruct(
    alpha: &TruncatedSeries<Complex64>,
    s: Complex64,
) -> Result<TruncatedSeries<Complex64>> {
    let l = polylog_coeffs(s, alpha.order())?;
    alpha.otimes(&l)
}
