use num_complex::Complex64;

use crate::arith::{dirichlet_convolve, ArithKind, ArithTable, ConvScalar, Sieve};
use crate::error::{Error, Result};

/// d(n, k): the number of ordered factorizations of n into k positive factors.
/// d(·, 1) ≡ 1 and d(·, k+1) = d(·, k) ⋆ 1; d(n, 2) is the divisor count.
pub fn divisor_count_k(n_max: usize, k: u32) -> Result<ArithTable<i64>> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "divisor_count_k requires k >= 1".into(),
        ));
    }
    let ones = ArithTable::new(ArithKind::Custom, vec![1i64; n_max])?;
    let mut acc = ones.clone();
    for _ in 1..k {
        acc = dirichlet_convolve(&acc, &ones)?;
    }
    Ok(acc)
}

/// d′(n, k): coefficients of 1/ζ(s)^k. d′(·, 2) = μ⋆μ and d′(·, k+1) = d′(·, k) ⋆ μ.
pub fn dprime_count_k(n_max: usize, k: u32) -> Result<ArithTable<i64>> {
    if k < 2 {
        return Err(Error::InvalidArgument(
            "dprime_count_k requires k >= 2".into(),
        ));
    }
    let sieve = Sieve::new(n_max)?;
    let mu = sieve.mu();
    let mut acc = dirichlet_convolve(&mu, &mu)?;
    for _ in 2..k {
        acc = dirichlet_convolve(&acc, &mu)?;
    }
    Ok(acc)
}

/// Binomial coefficient C(α, k) = α(α−1)⋯(α−k+1)/k! for complex α.
fn binom_complex(alpha: Complex64, k: u32) -> Complex64 {
    let mut out = Complex64::new(1.0, 0.0);
    for i in 0..k {
        out = out * (alpha - Complex64::new(i as f64, 0.0)) / Complex64::new((i + 1) as f64, 0.0);
    }
    out
}

/// Exact C(α, k) for integer α. Negative α reduces to C(α, k) = (−1)^k C(k−α−1, k).
fn binom_int(alpha: i64, k: u32) -> i64 {
    if alpha >= 0 {
        if i64::from(k) > alpha {
            return 0;
        }
        let mut out: i128 = 1;
        for i in 0..i64::from(k) {
            out = out * (alpha - i) as i128 / (i + 1) as i128;
        }
        out as i64
    } else {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        sign * binom_int(i64::from(k) - alpha - 1, k)
    }
}

/// μ_α: the multiplicative function with μ_α(p^k) = (−1)^k C(α, k).
/// μ_1 = μ, μ_0 = e, μ_{−1} ≡ 1, and μ_{α+β} = μ_α ⋆ μ_β.
pub fn generalized_mobius(alpha: Complex64, n_max: usize) -> Result<ArithTable<Complex64>> {
    let sieve = Sieve::new(n_max)?;
    let values = fill_mu_alpha(&sieve, |k| {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        binom_complex(alpha, k) * sign
    });
    ArithTable::new(ArithKind::Custom, values)
}

/// μ_α for integer α, exactly.
pub fn generalized_mobius_int(alpha: i64, n_max: usize) -> Result<ArithTable<i64>> {
    let sieve = Sieve::new(n_max)?;
    let values = fill_mu_alpha(&sieve, |k| {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        sign * binom_int(alpha, k)
    });
    ArithTable::new(ArithKind::Custom, values)
}

fn fill_mu_alpha<T: ConvScalar, F: Fn(u32) -> T>(sieve: &Sieve, prime_power: F) -> Vec<T> {
    let n_max = sieve.n_max();
    let mut values = vec![T::from_int(1); n_max];
    for n in 2..=n_max {
        let p = sieve.spf(n) as usize;
        let mut m = n;
        let mut e = 0;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        let head = prime_power(e);
        values[n - 1] = if m == 1 {
            head
        } else {
            values[m - 1].clone() * head
        };
    }
    values
}

/// Romanoff's vanishing sum Σ_{d|n} μ(n/d) f(gcd(d, k)), which is 0 whenever
/// k < n. `f` holds f(1..=n) with f(i) at index i−1.
pub fn romanoff_check<T: ConvScalar>(n: u64, k: u64, f: &[T]) -> Result<T> {
    if k >= n {
        return Err(Error::Precondition(format!(
            "romanoff requires k < n, got k={k}, n={n}"
        )));
    }
    if (f.len() as u64) < n {
        return Err(Error::InvalidArgument("f must be defined on 1..=n".into()));
    }
    let mut out = T::zero();
    for d in 1..=n {
        if n % d != 0 {
            continue;
        }
        let mu = super::ramanujan::mu_of(n / d);
        if mu == 0 {
            continue;
        }
        let g = num_integer::gcd(d, k);
        out += T::from_int(mu) * f[(g - 1) as usize].clone();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    /// Ordered factorizations of n into k factors, counted by brute recursion.
    fn d_brute(n: u64, k: u32) -> i64 {
        if k == 1 {
            return 1;
        }
        let mut total = 0;
        for d in 1..=n {
            if n % d == 0 {
                total += d_brute(n / d, k - 1);
            }
        }
        total
    }

    #[test]
    fn divisor_count_matches_brute_force() {
        let t2 = divisor_count_k(60, 2).unwrap();
        let t3 = divisor_count_k(60, 3).unwrap();
        for n in 1..=60 {
            assert_eq!(*t2.get(n as usize), d_brute(n, 2), "d({n},2)");
            assert_eq!(*t3.get(n as usize), d_brute(n, 3), "d({n},3)");
        }
        // d(p, k) = k and d(1, k) = 1
        let t5 = divisor_count_k(60, 5).unwrap();
        for p in [2usize, 3, 5, 7, 11, 13] {
            assert_eq!(*t5.get(p), 5);
        }
        assert_eq!(*t5.get(1), 1);
    }

    #[test]
    fn dprime_is_simple_prime_power() {
        // μ⋆μ(p^e) is −2, 1, 0 for e = 1, 2, ≥3, so d'(n,2) = (−2)^{n_a(n)}
        // exactly on cubefree n and 0 elsewhere.
        let n = 10_000;
        let t = dprime_count_k(n, 2).unwrap();
        let sieve = Sieve::new(n).unwrap();
        let na = sieve.n_simple();
        for m in 1..=n {
            let cubefree = sieve.factorize(m).iter().all(|&(_, e)| e <= 2);
            let expect = if cubefree {
                (-2i64).pow(*na.get(m) as u32)
            } else {
                0
            };
            assert_eq!(*t.get(m), expect, "d'({m},2)");
        }
        // prime, prime-square and prime-cube values
        assert_eq!(*t.get(7), -2);
        assert_eq!(*t.get(49), 1);
        assert_eq!(*t.get(8), 0);
    }

    #[test]
    fn generalized_mobius_special_cases() {
        let n = 200;
        let sieve = Sieve::new(n).unwrap();
        assert_eq!(
            generalized_mobius_int(1, n).unwrap().values(),
            sieve.mu().values()
        );
        assert!(generalized_mobius_int(-1, n)
            .unwrap()
            .values()
            .iter()
            .all(|&v| v == 1));
        let e = generalized_mobius_int(0, n).unwrap();
        assert_eq!(*e.get(1), 1);
        assert!((2..=n).all(|i| *e.get(i) == 0));
    }

    #[test]
    fn mu_alpha_convolution_law_exact() {
        let n = 400;
        for (a, b) in [(1i64, 1), (2, -1), (-2, 3), (0, 4)] {
            let lhs = crate::arith::dirichlet_convolve(
                &generalized_mobius_int(a, n).unwrap(),
                &generalized_mobius_int(b, n).unwrap(),
            )
            .unwrap();
            let rhs = generalized_mobius_int(a + b, n).unwrap();
            assert_eq!(lhs.values(), rhs.values(), "μ_{a} ⋆ μ_{b}");
        }
    }

    #[test]
    fn mu_alpha_convolution_law_float() {
        let n = 2000;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..4 {
            let a = Complex64::new(rng.gen_range(-2.0..2.0), 0.0);
            let b = Complex64::new(rng.gen_range(-2.0..2.0), 0.0);
            let lhs = crate::arith::dirichlet_convolve(
                &generalized_mobius(a, n).unwrap(),
                &generalized_mobius(b, n).unwrap(),
            )
            .unwrap();
            let rhs = generalized_mobius(a + b, n).unwrap();
            for i in 1..=n {
                assert!(
                    (lhs.get(i) - rhs.get(i)).norm() < 1e-10,
                    "α={a} β={b} n={i}: {} vs {}",
                    lhs.get(i),
                    rhs.get(i)
                );
            }
        }
    }

    #[test]
    fn romanoff_vanishes() {
        // n=4, k=2: terms reduce to −f(2)+f(2)
        let f: Vec<i64> = vec![3, 5, 7, 11];
        assert_eq!(romanoff_check(4, 2, &f).unwrap(), 0);
        assert_eq!(romanoff_check(4, 3, &f).unwrap(), 0);
        assert_eq!(romanoff_check(2, 1, &[42i64, 42]).unwrap(), 0);
        assert!(romanoff_check(4, 4, &f).is_err());
        assert!(romanoff_check(4, 9, &f).is_err());

        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..1000 {
            let n = rng.gen_range(2u64..=120);
            let k = rng.gen_range(1u64..n);
            let f: Vec<i64> = (0..n).map(|_| rng.gen_range(-100i64..=100)).collect();
            assert_eq!(romanoff_check(n, k, &f).unwrap(), 0, "n={n} k={k}");
        }
    }
}
