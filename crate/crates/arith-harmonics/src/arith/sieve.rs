use num_complex::Complex64;

use crate::arith::{ArithKind, ArithTable};
use crate::error::{Error, Result};

/// Smallest-prime-factor sieve shared by every arithmetic-function builder.
///
/// One linear pass gives `spf[n]` for all n ≤ n_max; each multiplicative
/// function is then filled in O(n_max) using the decomposition n = p^e · m
/// with p = spf(n) and p ∤ m.
pub struct Sieve {
    spf: Vec<u32>,
    primes: Vec<u32>,
}

impl Sieve {
    pub fn new(n_max: usize) -> Result<Self> {
        if n_max == 0 {
            return Err(Error::InvalidArgument("n_max must be at least 1".into()));
        }
        if n_max > u32::MAX as usize {
            return Err(Error::InvalidArgument(
                "n_max too large for the sieve".into(),
            ));
        }
        let mut spf = vec![0u32; n_max + 1];
        let mut primes = Vec::new();
        for i in 2..=n_max {
            if spf[i] == 0 {
                spf[i] = i as u32;
                primes.push(i as u32);
            }
            for &p in &primes {
                let ip = i * p as usize;
                if p > spf[i] || ip > n_max {
                    break;
                }
                spf[ip] = p;
            }
        }
        if n_max >= 1 {
            spf[1] = 1;
        }
        Ok(Sieve { spf, primes })
    }

    pub fn n_max(&self) -> usize {
        self.spf.len() - 1
    }

    pub fn primes(&self) -> &[u32] {
        &self.primes
    }

    /// Smallest prime factor of n ≥ 2.
    #[inline]
    pub fn spf(&self, n: usize) -> u32 {
        self.spf[n]
    }

    /// Prime factorization of n ≤ n_max as (p, exponent) pairs.
    pub fn factorize(&self, n: usize) -> Vec<(u64, u32)> {
        let mut out = Vec::new();
        let mut m = n;
        while m > 1 {
            let p = self.spf[m] as usize;
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            out.push((p as u64, e));
        }
        out
    }

    /// Fills a table of a multiplicative function from its prime-power values.
    /// `f_pe(p, e)` must return f(p^e).
    fn fill_multiplicative<T, F>(&self, one: T, mut f_pe: F) -> Vec<T>
    where
        T: Clone + std::ops::Mul<Output = T>,
        F: FnMut(u64, u32) -> T,
    {
        let n_max = self.n_max();
        let mut values = vec![one; n_max];
        // pe_part[n] = p^e with p = spf(n); pe_exp[n] = e
        let mut pe_part = vec![0u32; n_max + 1];
        let mut pe_exp = vec![0u32; n_max + 1];
        for n in 2..=n_max {
            let p = self.spf[n] as usize;
            let m = n / p;
            if m % p == 0 {
                pe_part[n] = pe_part[m] * p as u32;
                pe_exp[n] = pe_exp[m] + 1;
            } else {
                pe_part[n] = p as u32;
                pe_exp[n] = 1;
            }
            let pe = pe_part[n] as usize;
            let rest = n / pe;
            let head = f_pe(p as u64, pe_exp[n]);
            values[n - 1] = if rest == 1 {
                head
            } else {
                mul_clone(&values[rest - 1], head)
            };
        }
        values
    }

    /// Möbius function μ.
    pub fn mu(&self) -> ArithTable<i64> {
        let n_max = self.n_max();
        let mut v = vec![0i64; n_max];
        v[0] = 1;
        for n in 2..=n_max {
            let p = self.spf[n] as usize;
            let m = n / p;
            v[n - 1] = if m % p == 0 { 0 } else { -v[m - 1] };
        }
        ArithTable::new(ArithKind::Mu, v).expect("n_max >= 1")
    }

    /// Liouville function λ.
    pub fn lambda(&self) -> ArithTable<i64> {
        let n_max = self.n_max();
        let mut v = vec![0i64; n_max];
        v[0] = 1;
        for n in 2..=n_max {
            let p = self.spf[n] as usize;
            v[n - 1] = -v[n / p - 1];
        }
        ArithTable::new(ArithKind::Lambda, v).expect("n_max >= 1")
    }

    /// Euler totient Φ.
    pub fn phi(&self) -> ArithTable<i64> {
        let n_max = self.n_max();
        let mut v = vec![0i64; n_max];
        v[0] = 1;
        for n in 2..=n_max {
            let p = self.spf[n] as usize;
            let m = n / p;
            v[n - 1] = if m % p == 0 {
                v[m - 1] * p as i64
            } else {
                v[m - 1] * (p as i64 - 1)
            };
        }
        ArithTable::new(ArithKind::Phi, v).expect("n_max >= 1")
    }

    /// Jordan totient J_k(n) = n^k Π_{p|n} (1 − p^{−k}). Errors when a value
    /// would overflow i64.
    pub fn jordan(&self, k: u32) -> Result<ArithTable<i64>> {
        if k == 0 {
            return Err(Error::InvalidArgument("jordan requires k >= 1".into()));
        }
        // J_k(n) ≤ n^k must fit i128 during the fill
        if (self.n_max() as f64).ln() * f64::from(k) > 85.0 {
            return Err(Error::InvalidArgument(format!(
                "jordan({k}) values exceed integer range at n_max {}",
                self.n_max()
            )));
        }
        // J_k(p^e) = p^{k(e−1)} (p^k − 1)
        let wide = self.fill_multiplicative(1i128, |p, e| {
            (p as i128).pow(k * (e - 1)) * ((p as i128).pow(k) - 1)
        });
        let mut values = Vec::with_capacity(wide.len());
        for v in wide {
            values.push(i64::try_from(v).map_err(|_| {
                Error::InvalidArgument(format!(
                    "jordan({k}) overflows i64 at this n_max; reduce k or n_max"
                ))
            })?);
        }
        ArithTable::new(ArithKind::Jordan(k), values)
    }

    /// θ(n) = 2^ω(n), the number of unitary divisors.
    pub fn theta(&self) -> ArithTable<i64> {
        let values = self.fill_multiplicative(1i64, |_, _| 2);
        ArithTable::new(ArithKind::Theta, values).expect("n_max >= 1")
    }

    /// |μ(n)|, the squarefree indicator.
    pub fn mu_abs(&self) -> ArithTable<i64> {
        let values = self.fill_multiplicative(1i64, |_, e| if e == 1 { 1 } else { 0 });
        ArithTable::new(ArithKind::MuAbs, values).expect("n_max >= 1")
    }

    /// ω(n), the number of distinct prime divisors (additive, ω(1) = 0).
    pub fn omega(&self) -> ArithTable<i64> {
        let n_max = self.n_max();
        let mut v = vec![0i64; n_max];
        for n in 2..=n_max {
            let p = self.spf[n] as usize;
            let mut m = n;
            while m % p == 0 {
                m /= p;
            }
            v[n - 1] = v[m - 1] + 1;
        }
        ArithTable::new(ArithKind::Omega, v).expect("n_max >= 1")
    }

    /// n_a(n), the number of simple prime divisors: primes p with p | n, p² ∤ n.
    pub fn n_simple(&self) -> ArithTable<i64> {
        let n_max = self.n_max();
        let mut v = vec![0i64; n_max];
        for n in 2..=n_max {
            let p = self.spf[n] as usize;
            let mut m = n;
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            v[n - 1] = v[m - 1] + i64::from(e == 1);
        }
        ArithTable::new(ArithKind::NSimple, v).expect("n_max >= 1")
    }

    /// von Mangoldt Λ(n): log p at prime powers, 0 elsewhere. The only
    /// builtin stored as binary floats.
    pub fn mangoldt(&self) -> ArithTable<f64> {
        let n_max = self.n_max();
        let mut v = vec![0f64; n_max];
        for n in 2..=n_max {
            let p = self.spf[n] as usize;
            let mut m = n;
            while m % p == 0 {
                m /= p;
            }
            if m == 1 {
                v[n - 1] = (p as f64).ln();
            }
        }
        ArithTable::new(ArithKind::Mangoldt, v).expect("n_max >= 1")
    }

    /// σ_a(n) = Σ_{d|n} d^a for complex a, by exact divisor enumeration with
    /// one complex power per divisor value.
    pub fn sigma(&self, a: Complex64) -> ArithTable<Complex64> {
        let n_max = self.n_max();
        let mut v = vec![Complex64::new(0.0, 0.0); n_max];
        for d in 1..=n_max {
            let da = Complex64::new(d as f64, 0.0).powc(a);
            let mut m = d;
            while m <= n_max {
                v[m - 1] += da;
                m += d;
            }
        }
        ArithTable::new(ArithKind::Sigma(a), v).expect("n_max >= 1")
    }

    /// Dispatch by kind tag; integer-valued kinds only.
    pub fn table_int(&self, kind: &ArithKind) -> Result<ArithTable<i64>> {
        match kind {
            ArithKind::Mu => Ok(self.mu()),
            ArithKind::Lambda => Ok(self.lambda()),
            ArithKind::Phi => Ok(self.phi()),
            ArithKind::Jordan(k) => self.jordan(*k),
            ArithKind::Theta => Ok(self.theta()),
            ArithKind::MuAbs => Ok(self.mu_abs()),
            ArithKind::Omega => Ok(self.omega()),
            ArithKind::NSimple => Ok(self.n_simple()),
            other => Err(Error::InvalidArgument(format!(
                "{other:?} is not an integer-valued sieve kind"
            ))),
        }
    }
}

fn mul_clone<T: Clone>(a: &T, b: T) -> T
where
    T: std::ops::Mul<Output = T>,
{
    a.clone() * b
}
