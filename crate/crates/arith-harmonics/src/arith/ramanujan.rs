use std::f64::consts::PI;

use crate::error::{Error, Result};

fn factorize_trial(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn phi_u64(n: u64) -> u64 {
    let mut out = n;
    for (p, _) in factorize_trial(n) {
        out = out / p * (p - 1);
    }
    out
}

fn mu_u64(n: u64) -> i64 {
    let f = factorize_trial(n);
    if f.iter().any(|&(_, e)| e > 1) {
        return 0;
    }
    if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// μ(n) by trial division, for callers that only need a few values.
pub(crate) fn mu_of(n: u64) -> i64 {
    mu_u64(n)
}

/// Ramanujan sum c_q(n) = Σ_{a ≤ q, (a,q)=1} e^{2πian/q}, exactly, by
/// Hölder's closed form c_q(n) = Φ(q)/Φ(q/g) · μ(q/g) with g = gcd(q, n).
pub fn ramanujan_sum(q: u64, n: u64) -> Result<i64> {
    if q == 0 || n == 0 {
        return Err(Error::InvalidArgument(
            "ramanujan_sum requires q, n >= 1".into(),
        ));
    }
    let g = num_integer::gcd(q, n);
    let k = q / g;
    let phi_q = phi_u64(q);
    let phi_k = phi_u64(k);
    debug_assert_eq!(phi_q % phi_k, 0, "Φ(q/g) divides Φ(q) when q/g | q");
    Ok((phi_q / phi_k) as i64 * mu_u64(k))
}

/// The defining exponential sum, evaluated in floats. Test oracle for the
/// Hölder route; the imaginary part must vanish to rounding.
pub fn ramanujan_sum_brute_force(q: u64, n: u64) -> (f64, f64) {
    let mut re = 0.0;
    let mut im = 0.0;
    for a in 1..=q {
        if num_integer::gcd(a, q) == 1 {
            let t = 2.0 * PI * (a as f64) * (n as f64) / (q as f64);
            re += t.cos();
            im += t.sin();
        }
    }
    (re, im)
}

/// c_q(1..=n_max) as exact integers. Periodic in n with period q.
#[derive(Debug, Clone)]
pub struct RamanujanTable {
    q: u64,
    values: Vec<i64>,
}

impl RamanujanTable {
    pub fn new(q: u64, n_max: usize) -> Result<Self> {
        if q == 0 || n_max == 0 {
            return Err(Error::InvalidArgument(
                "RamanujanTable requires q, n_max >= 1".into(),
            ));
        }
        // compute one period, then replicate
        let qe = q as usize;
        let mut head = Vec::with_capacity(qe);
        for r in 1..=q {
            head.push(ramanujan_sum(q, r)?);
        }
        let values = (1..=n_max).map(|n| head[(n - 1) % qe]).collect();
        Ok(RamanujanTable { q, values })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n_max(&self) -> usize {
        self.values.len()
    }

    #[inline]
    pub fn get(&self, n: usize) -> i64 {
        self.values[n - 1]
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// Sum of c_q over one full period; zero for every q > 1.
    pub fn period_sum(&self) -> i64 {
        (1..=self.q)
            .map(|r| ramanujan_sum(self.q, r).expect("q, r >= 1"))
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn holder_matches_exponential_sum() {
        for q in 1..=200u64 {
            for n in 1..=200u64 {
                let exact = ramanujan_sum(q, n).unwrap();
                let (re, im) = ramanujan_sum_brute_force(q, n);
                assert!(im.abs() < 1e-9, "imaginary residue at ({q},{n})");
                assert!(
                    (re - exact as f64).abs() < 1e-9,
                    "c_{q}({n}): Hölder {exact} vs sum {re}"
                );
            }
        }
    }

    #[test]
    fn special_values() {
        // coprime arguments give μ(q)
        assert_eq!(ramanujan_sum(6, 5).unwrap(), 1); // μ(6)
        assert_eq!(ramanujan_sum(10, 3).unwrap(), 1); // μ(10)
        assert_eq!(ramanujan_sum(7, 3).unwrap(), -1); // μ(7)
                                                      // q | n gives Φ(q)
        assert_eq!(ramanujan_sum(6, 6).unwrap(), 2);
        assert_eq!(ramanujan_sum(12, 24).unwrap(), 4);
        // q = 1
        for n in 1..=10 {
            assert_eq!(ramanujan_sum(1, n).unwrap(), 1);
        }
    }

    #[test]
    fn periodicity_and_multiplicativity_in_q() {
        let t = RamanujanTable::new(12, 100).unwrap();
        for n in 1..=88 {
            assert_eq!(t.get(n), t.get(n + 12));
        }
        // c_{q1}(n) c_{q2}(n) = c_{q1 q2}(n) for coprime q1, q2
        for q1 in 1..=20u64 {
            for q2 in 1..=20u64 {
                if num_integer::gcd(q1, q2) != 1 || q1 * q2 > 500 {
                    continue;
                }
                for n in 1..=40 {
                    assert_eq!(
                        ramanujan_sum(q1, n).unwrap() * ramanujan_sum(q2, n).unwrap(),
                        ramanujan_sum(q1 * q2, n).unwrap(),
                        "q1={q1} q2={q2} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn period_sum_vanishes_for_q_above_one() {
        for q in 2..=50 {
            let t = RamanujanTable::new(q, q as usize).unwrap();
            assert_eq!(t.period_sum(), 0, "period sum at q={q}");
        }
        assert_eq!(RamanujanTable::new(1, 1).unwrap().period_sum(), 1);
    }
}
