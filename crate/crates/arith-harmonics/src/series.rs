//! Truncated power series Σ_{n=1}^{N} a_n z^n under the Dirichlet product ⊗
//! and the unitary product ⊠, together with Lambert resummation. All series
//! vanish at the origin; the constant term does not exist by construction.
//!
//! Truncation is exact for these products: coefficient n of A ⊗ B depends
//! only on coefficients d ≤ n, so no truncation error is introduced (unlike
//! Cauchy products).

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::One;

use crate::arith::{
    dirichlet_convolve_slices, unitary_convolve_slices, ArithTable, ConvScalar, Sieve,
};
use crate::error::{Error, Result};

/// Scalars a series can hold: exact rationals or complex floats, plus
/// anything else that forms a field-like structure under +, ·, /.
pub trait SeriesScalar:
    ConvScalar + One + PartialEq + std::ops::Sub<Output = Self> + std::ops::Div<Output = Self>
{
}

impl<T> SeriesScalar for T where
    T: ConvScalar + One + PartialEq + std::ops::Sub<Output = Self> + std::ops::Div<Output = Self>
{
}

/// Coefficients (a_1, …, a_N) of a power series in H₀²-style normalization.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<T>,
}

impl<T: SeriesScalar> TruncatedSeries<T> {
    pub fn new(coeffs: Vec<T>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument(
                "series order must be at least 1".into(),
            ));
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// The identity element e(z) = z.
    pub fn identity(order: usize) -> Result<Self> {
        let mut coeffs = vec![T::zero(); order.max(1)];
        coeffs[0] = T::one();
        Self::new(coeffs)
    }

    /// All coefficients 1 (the series z/(1−z) truncated).
    pub fn ones(order: usize) -> Result<Self> {
        Self::new(vec![T::one(); order])
    }

    pub fn from_table(table: &ArithTable<T>) -> Self {
        TruncatedSeries {
            coeffs: table.values().to_vec(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient a_n (1-indexed).
    #[inline]
    pub fn coeff(&self, n: usize) -> &T {
        &self.coeffs[n - 1]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::InvalidArgument(format!(
                "series orders differ: {} vs {}",
                self.order(),
                other.order()
            )));
        }
        Ok(())
    }

    /// Dirichlet product: coefficient n of the result is (a⋆b)_n = Σ_{d|n} a_d b_{n/d}.
    pub fn otimes(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncatedSeries {
            coeffs: dirichlet_convolve_slices(&self.coeffs, &other.coeffs),
        })
    }

    /// k-fold ⊗ power, k ≥ 1.
    pub fn otimes_power(&self, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument(
                "otimes_power requires k >= 1".into(),
            ));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.otimes(self)?;
        }
        Ok(acc)
    }

    /// ⊗-inverse B with A ⊗ B = e, by the recursive divisor solve
    /// b_n = (e_n − Σ_{d|n, d<n} a_{n/d} b_d) / a_1. Requires a_1 ≠ 0.
    pub fn otimes_inverse(&self) -> Result<Self> {
        let a1 = &self.coeffs[0];
        if a1.is_zero() {
            return Err(Error::NotInvertible);
        }
        let n_max = self.order();
        let mut b = vec![T::zero(); n_max];
        b[0] = T::one() / a1.clone();
        for n in 2..=n_max {
            // Σ over divisors d < n of n: a_{n/d} b_d
            let mut acc = T::zero();
            for d in 1..n {
                if n % d == 0 {
                    acc += self.coeffs[n / d - 1].clone() * b[d - 1].clone();
                }
            }
            b[n - 1] = (T::zero() - acc) / a1.clone();
        }
        Ok(TruncatedSeries { coeffs: b })
    }

    /// Unitary product: coefficient n is Σ_{pq=n, gcd(p,q)=1} a_p b_q.
    pub fn boxtimes(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncatedSeries {
            coeffs: unitary_convolve_slices(&self.coeffs, &other.coeffs),
        })
    }

    /// Lambert resummation: from G₂(x) = Σ g(n) xⁿ to G₁(x) = Σ g(n) xⁿ/(1−xⁿ),
    /// i.e. G₁ = Σ_n G₂(xⁿ) at the coefficient level: out_n = Σ_{d|n} g_d.
    pub fn lambert_resum(&self) -> Self {
        let n_max = self.order();
        let mut out = vec![T::zero(); n_max];
        for d in 1..=n_max {
            let gd = &self.coeffs[d - 1];
            if gd.is_zero() {
                continue;
            }
            let mut m = d;
            while m <= n_max {
                out[m - 1] += gd.clone();
                m += d;
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// Apply a multiplier φ to f under ⊗. Identical to `otimes`; named so the
    /// (ℒ_τ, ℳ_τ) reciprocal-multiplier pairing is an explicit relationship.
    pub fn multiplier_apply(phi: &Self, f: &Self) -> Result<Self> {
        phi.otimes(f)
    }

    /// Coefficient shadow of z d/dz: a_n ↦ n·a_n. Sends the series of
    /// parameter s to the series of parameter s−1 for ℒ and ℳ.
    pub fn theta_derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| a.clone() * T::from_int((i + 1) as i64))
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Evaluate the polynomial Σ a_n z^n by Horner's rule after mapping
    /// coefficients to complex floats.
    pub fn eval_complex(&self, z: Complex64, to_c: impl Fn(&T) -> Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for a in self.coeffs.iter().rev() {
            acc = acc * z + to_c(a);
        }
        acc * z
    }
}

/// Exact rational coefficients 1/n^s of the polylogarithm, integer s (may be ≤ 0).
pub fn polylog_coeffs_exact(s: i64, order: usize) -> Result<TruncatedSeries<BigRational>> {
    let coeffs = (1..=order as i64).map(|n| rational_power(n, -s)).collect();
    TruncatedSeries::new(coeffs)
}

/// Exact rational coefficients μ(n)/n^s, integer s.
pub fn mobius_coeffs_exact(s: i64, order: usize) -> Result<TruncatedSeries<BigRational>> {
    let sieve = Sieve::new(order)?;
    let mu = sieve.mu();
    let coeffs = (1..=order)
        .map(|n| rational_power(n as i64, -s) * BigRational::from_integer(BigInt::from(*mu.get(n))))
        .collect();
    TruncatedSeries::new(coeffs)
}

/// n^k as an exact rational, k of either sign.
pub fn rational_power(n: i64, k: i64) -> BigRational {
    let p = BigInt::from(n).pow(k.unsigned_abs() as u32);
    if k >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

/// Float coefficients 1/n^s.
pub fn polylog_coeffs(s: Complex64, order: usize) -> Result<TruncatedSeries<Complex64>> {
    let coeffs = (1..=order)
        .map(|n| Complex64::new(n as f64, 0.0).powc(-s))
        .collect();
    TruncatedSeries::new(coeffs)
}

/// Float coefficients μ(n)/n^s.
pub fn mobius_coeffs(s: Complex64, order: usize) -> Result<TruncatedSeries<Complex64>> {
    let sieve = Sieve::new(order)?;
    let mu = sieve.mu();
    let coeffs = (1..=order)
        .map(|n| Complex64::new(n as f64, 0.0).powc(-s) * *mu.get(n) as f64)
        .collect();
    TruncatedSeries::new(coeffs)
}

/// Float Estermann coefficients σ_a(n)/n^s.
pub fn estermann_coeffs(
    s: Complex64,
    a: Complex64,
    order: usize,
) -> Result<TruncatedSeries<Complex64>> {
    let sieve = Sieve::new(order)?;
    let sigma = sieve.sigma(a);
    let coeffs = (1..=order)
        .map(|n| sigma.get(n) * Complex64::new(n as f64, 0.0).powc(-s))
        .collect();
    TruncatedSeries::new(coeffs)
}
