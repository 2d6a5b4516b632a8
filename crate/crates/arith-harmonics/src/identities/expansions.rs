use num_complex::Complex64;

use crate::arith::Sieve;
use crate::error::{Error, Result};
use crate::report::IdentityReport;

/// Output of a Ramanujan–Fourier expansion: the coefficients f̂(q) and the
/// reconstruction report at the probed points.
#[derive(Debug, Clone)]
pub struct DelangeExpansion {
    pub coefficients: Vec<Complex64>,
    pub reconstruction: Vec<IdentityReport>,
    /// Empirical check of Σ 2^{ω(n)} |g(n)|/n: relative growth of the last
    /// quarter of the partial sums. Large values mean the hypothesis is
    /// doubtful at this truncation.
    pub hypothesis_residual: f64,
}

/// Ramanujan expansion of f = g⋆1 by the explicit coefficient formula
/// f̂(q) = Σ_m g(qm)/(qm), reconstructed through f(n) = Σ_q f̂(q) c_q(n)
/// and compared against the direct divisor sum.
///
/// `g` holds g(1..=len) with len ≥ q_max·m_max; index i is g(i+1).
pub fn delange_expand(
    g: &[f64],
    q_max: usize,
    m_max: usize,
    probe_n: &[usize],
    tol: f64,
) -> Result<DelangeExpansion> {
    if q_max == 0 || m_max == 0 {
        return Err(Error::InvalidArgument(
            "q_max and m_max must be >= 1".into(),
        ));
    }
    if g.len() < q_max * m_max {
        return Err(Error::InvalidArgument(format!(
            "g must cover 1..={} but has length {}",
            q_max * m_max,
            g.len()
        )));
    }
    if let Some(&bad) = probe_n.iter().find(|&&n| n == 0 || n > g.len()) {
        return Err(Error::InvalidArgument(format!(
            "probe point {bad} outside the table 1..={}",
            g.len()
        )));
    }

    // Delange hypothesis scan: Σ 2^{ω(n)} |g(n)|/n partial sums
    let sieve = Sieve::new(g.len())?;
    let theta = sieve.theta();
    let mut partial = 0.0;
    let mut at_three_quarters = 0.0;
    for n in 1..=g.len() {
        partial += *theta.get(n) as f64 * g[n - 1].abs() / n as f64;
        if 4 * n == 3 * g.len() {
            at_three_quarters = partial;
        }
    }
    let hypothesis_residual = if partial > 0.0 {
        (partial - at_three_quarters) / partial
    } else {
        0.0
    };

    let mut coefficients = Vec::with_capacity(q_max);
    for q in 1..=q_max {
        let mut acc = 0.0;
        for m in 1..=m_max {
            acc += g[q * m - 1] / (q * m) as f64;
        }
        coefficients.push(Complex64::new(acc, 0.0));
    }

    // c_q(n) via Hölder with the sieve's Φ and μ
    let phi = sieve.phi();
    let mu = sieve.mu();
    let c_qn = |q: usize, n: usize| -> f64 {
        let g0 = num_integer::gcd(q, n);
        let kg = q / g0;
        ((phi.get(q) / phi.get(kg)) * mu.get(kg)) as f64
    };

    let mut reconstruction = Vec::new();
    for &n in probe_n {
        let mut rec = Complex64::new(0.0, 0.0);
        for q in 1..=q_max {
            rec += coefficients[q - 1] * c_qn(q, n);
        }
        let mut direct = 0.0;
        for d in 1..=n {
            if n % d == 0 {
                direct += g[d - 1];
            }
        }
        reconstruction.push(
            IdentityReport::numeric(
                "delange-reconstruction",
                rec,
                Complex64::new(direct, 0.0),
                tol,
            )
            .with_param("n", n)
            .with_param("q_max", q_max)
            .with_param("m_max", m_max),
        );
    }

    Ok(DelangeExpansion {
        coefficients,
        reconstruction,
        hypothesis_residual,
    })
}

/// Lucht's companion transform γ(k) = k Σ_{n ≤ N} μ(n) g(kn), the ⋆-inverse
/// side of ĝ(k) = Σ_n g(n) c_n(k): when both converge, 1⋆γ = ĝ.
pub fn lucht_transform(g: &[f64], k: usize, n_truncation: usize) -> Result<f64> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be >= 1".into()));
    }
    if g.len() < k * n_truncation {
        return Err(Error::InvalidArgument(format!(
            "g must cover 1..={} but has length {}",
            k * n_truncation,
            g.len()
        )));
    }
    let sieve = Sieve::new(n_truncation)?;
    let mu = sieve.mu();
    let mut acc = 0.0;
    for n in 1..=n_truncation {
        let m = *mu.get(n);
        if m != 0 {
            acc += m as f64 * g[k * n - 1];
        }
    }
    Ok(k as f64 * acc)
}

/// Complex-valued variant for g(n) = zⁿ/n^s test functions.
pub fn lucht_transform_complex(
    g: &[Complex64],
    k: usize,
    n_truncation: usize,
) -> Result<Complex64> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be >= 1".into()));
    }
    if g.len() < k * n_truncation {
        return Err(Error::InvalidArgument(
            "g too short for this truncation".into(),
        ));
    }
    let sieve = Sieve::new(n_truncation)?;
    let mu = sieve.mu();
    let mut acc = Complex64::new(0.0, 0.0);
    for n in 1..=n_truncation {
        let m = *mu.get(n);
        if m != 0 {
            acc += m as f64 * g[k * n - 1];
        }
    }
    Ok(k as f64 * acc)
}
