use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::f64::consts::PI;

use crate::analytic::{zeta, zeta_raw, ComplexParam};
use crate::arith::Sieve;
use crate::error::{Error, Result};
use crate::identities::ramanujan::phi_s;
use crate::report::IdentityReport;
use crate::series::TruncatedSeries;

/// Cyclotomic polynomial Φ_k as integer coefficients (index = degree),
/// by repeated exact division of x^k − 1 by the Φ_d for proper divisors d.
fn cyclotomic_poly(k: usize) -> Vec<BigInt> {
    fn divide_exact(num: &mut Vec<BigInt>, den: &[BigInt]) {
        // polynomial long division, exact by construction
        let mut out = vec![BigInt::zero(); num.len() - den.len() + 1];
        let lead = den.last().expect("nonempty divisor").clone();
        for i in (0..out.len()).rev() {
            let c = num[i + den.len() - 1].clone() / &lead;
            if !c.is_zero() {
                for (j, d) in den.iter().enumerate() {
                    let v = num[i + j].clone() - &c * d;
                    num[i + j] = v;
                }
            }
            out[i] = c;
        }
        *num = out;
    }

    let mut polys: Vec<Vec<BigInt>> = vec![Vec::new(); k + 1];
    for d in 1..=k {
        if k % d != 0 {
            continue;
        }
        // x^d − 1
        let mut p = vec![BigInt::zero(); d + 1];
        p[0] = BigInt::from(-1);
        p[d] = BigInt::one();
        for e in 1..d {
            if d % e == 0 {
                let phi_e = polys[e].clone();
                divide_exact(&mut p, &phi_e);
            }
        }
        polys[d] = p;
    }
    polys[k].clone()
}

/// Reduce a rational polynomial modulo Φ_k (exact).
fn reduce_mod_cyclotomic(mut poly: Vec<BigRational>, phi: &[BigInt]) -> Vec<BigRational> {
    let deg_phi = phi.len() - 1;
    let lead = BigRational::from_integer(phi[deg_phi].clone());
    while poly.len() > deg_phi {
        let top = poly.len() - 1;
        let c = poly[top].clone() / &lead;
        if !c.is_zero() {
            for (j, pj) in phi.iter().enumerate() {
                let idx = top - deg_phi + j;
                let v = poly[idx].clone() - &c * BigRational::from_integer(pj.clone());
                poly[idx] = v;
            }
        }
        poly.pop();
    }
    poly
}

/// Both routes of the exact finite identity Σ_{h=1}^{k} f_N(e^{2πih/k}) =
/// k Σ_{j ≤ N/k} a_{jk} for an exact-coefficient truncated series.
///
/// The direct route works in ℚ(ω): the sum Σ_h Σ_n a_n x^{nh mod k} is
/// assembled in ℚ[x]/(x^k−1) and reduced modulo the cyclotomic polynomial
/// Φ_k; the result must collapse to a constant, which is the value.
pub fn truncated_root_sum_exact(
    f: &TruncatedSeries<BigRational>,
    k: usize,
) -> Result<(BigRational, BigRational)> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be >= 1".into()));
    }
    let n_max = f.order();

    // slice route
    let mut slice = BigRational::zero();
    let mut n = k;
    while n <= n_max {
        slice += f.coeff(n);
        n += k;
    }
    slice *= BigRational::from_integer(BigInt::from(k as i64));

    // direct route in ℚ[x]/(x^k − 1), then mod Φ_k
    let mut wrapped = vec![BigRational::zero(); k];
    for n in 1..=n_max {
        let a = f.coeff(n);
        if a.is_zero() {
            continue;
        }
        let step = n % k;
        let mut idx = 0usize;
        for _ in 1..=k {
            idx = (idx + step) % k;
            wrapped[idx] += a;
        }
    }
    let phi = cyclotomic_poly(k);
    let reduced = reduce_mod_cyclotomic(wrapped, &phi);
    let direct = reduced.first().cloned().unwrap_or_else(BigRational::zero);
    for (d, c) in reduced.iter().enumerate().skip(1) {
        if !c.is_zero() {
            return Err(Error::Inconsistency(format!(
                "root sum did not reduce to a constant: degree-{d} coefficient {c}"
            )));
        }
    }
    Ok((direct, slice))
}

/// Float version: genuinely evaluates the truncated series at every k-th
/// root of unity and compares with k·Σ a_{jk}.
pub fn truncated_root_sum_float(coeffs: &[Complex64], k: usize) -> Result<(Complex64, Complex64)> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be >= 1".into()));
    }
    let n_max = coeffs.len();
    let mut direct = Complex64::new(0.0, 0.0);
    for h in 1..=k {
        let z = Complex64::from_polar(1.0, 2.0 * PI * h as f64 / k as f64);
        let mut acc = Complex64::new(0.0, 0.0);
        for c in coeffs.iter().rev() {
            acc = acc * z + c;
        }
        direct += acc * z;
    }
    let mut slice = Complex64::new(0.0, 0.0);
    let mut n = k;
    while n <= n_max {
        slice += coeffs[n - 1];
        n += k;
    }
    Ok((direct, slice * k as f64))
}

/// Which weight sequence a Besicovitch root sum runs on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BesicovitchKind {
    Mobius,
    Liouville,
}

/// Theorem route: Σ_{h=1}^{k} ℳ_s(e^{2πih/k}) = μ(k)·k/(Φ_s(k) ζ(s)), and
/// the Liouville companion Σ_h 𝒩_s(e^{2πih/k}) = λ(k) k^{1−s} ζ(2s)/ζ(s)
/// (no coprimality restriction since λ is completely multiplicative).
///
/// The numeric left side folds the series through numerically evaluated
/// root-power sums S_r = Σ_h ω^{rh}, which is the same finite sum as
/// evaluating the truncation at each root and adding.
pub fn besicovitch_sum(
    kind: BesicovitchKind,
    k: u64,
    s: ComplexParam,
    n_terms: usize,
) -> Result<IdentityReport> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "besicovitch_sum requires k >= 1".into(),
        ));
    }
    let sc = s.as_complex();
    let at_one = sc == Complex64::new(1.0, 0.0);
    if sc.re < 1.0 {
        return Err(Error::Domain(format!("requires Re s >= 1, got {s}")));
    }

    let sieve = Sieve::new(n_terms.max(k as usize))?;
    let weights = match kind {
        BesicovitchKind::Mobius => sieve.mu(),
        BesicovitchKind::Liouville => sieve.lambda(),
    };

    // numeric root-power sums per residue class
    let ku = k as usize;
    let mut root_pow = vec![Complex64::new(0.0, 0.0); ku];
    for (r, rp) in root_pow.iter_mut().enumerate() {
        let mut acc = Complex64::new(0.0, 0.0);
        for h in 1..=ku {
            acc += Complex64::from_polar(1.0, 2.0 * PI * (r * h % ku) as f64 / ku as f64);
        }
        *rp = acc;
    }
    let int_exp = if sc.im == 0.0 && sc.re == sc.re.round() {
        Some(sc.re as i32)
    } else {
        None
    };
    let mut lhs = Complex64::new(0.0, 0.0);
    for n in 1..=n_terms {
        let w = *weights.get(n);
        if w != 0 {
            let pw = match int_exp {
                Some(e) => Complex64::new((n as f64).powi(-e), 0.0),
                None => Complex64::new(n as f64, 0.0).powc(-sc),
            };
            lhs += w as f64 * pw * root_pow[n % ku];
        }
    }

    // weights is the μ or λ table, so the k-th weight is μ(k) or λ(k)
    let wk = *weights.get(k as usize);
    let (rhs, name) = match kind {
        BesicovitchKind::Mobius => {
            let rhs = if at_one {
                Complex64::new(0.0, 0.0)
            } else {
                wk as f64 * k as f64 / (phi_s(k, sc) * zeta(s)?)
            };
            (rhs, "besicovitch-mobius")
        }
        BesicovitchKind::Liouville => {
            let rhs = if at_one {
                Complex64::new(0.0, 0.0)
            } else {
                wk as f64
                    * Complex64::new(k as f64, 0.0).powc(Complex64::new(1.0, 0.0) - sc)
                    * zeta_raw(2.0 * sc)?
                    / zeta(s)?
            };
            (rhs, "besicovitch-liouville")
        }
    };

    let report = if at_one {
        IdentityReport::heuristic(name, lhs, rhs, 1e-2)
    } else {
        IdentityReport::numeric(name, lhs, rhs, 1e-6)
    };
    Ok(report
        .with_param("k", k)
        .with_param("s", s)
        .with_n_terms(n_terms as u64))
}

/// Tail-bound data for Σ_j μ(jD)/j^τ on 1 < τ < 3/2:
/// the closed form is μ(D)/(ζ(τ) P_D(τ)) with P_D(τ) = Π_{p|D}(1−p^{−τ}),
/// verified against the partial sum. The companion inequality
/// P_D(τ) ≤ e(τ−1) is evaluated and reported per case; since P_D(τ) has a
/// positive limit as τ → 1⁺ while e(τ−1) → 0, it can only hold for τ away
/// from 1 (at D = 2 the crossover sits near τ ≈ 1.21).
pub struct MuTailBound {
    pub value_partial_sum: f64,
    pub value_closed_form: f64,
    pub p_d: f64,
    pub bound_e_tau: f64,
    pub bound_holds: bool,
    pub report: IdentityReport,
}

pub fn mu_tail_bound_check(d: u64, tau: f64, n_terms: usize) -> Result<MuTailBound> {
    if !(1.0 < tau && tau < 1.5) {
        return Err(Error::Domain(format!("requires 1 < τ < 3/2, got {tau}")));
    }
    if d == 0 {
        return Err(Error::InvalidArgument("D must be >= 1".into()));
    }
    let sieve = Sieve::new(n_terms)?;
    let mu = sieve.mu();
    let mu_d = mu_of_u64(d);
    let mut partial = 0.0;
    if mu_d != 0 {
        for j in 1..=n_terms as u64 {
            if num_integer::gcd(j, d) != 1 {
                continue;
            }
            let m = *mu.get(j as usize);
            if m != 0 {
                partial += (mu_d * m) as f64 / (j as f64).powf(tau);
            }
        }
    }
    let tau_c = ComplexParam::real(tau)?;
    let p_d = phi_s(d, Complex64::new(tau, 0.0)).re / (d as f64).powf(tau);
    let closed = if mu_d == 0 {
        0.0
    } else {
        mu_d as f64 / (zeta(tau_c)?.re * p_d)
    };
    let bound = std::f64::consts::E * (tau - 1.0);
    let report = IdentityReport::heuristic(
        "mu-tail-closed-form",
        Complex64::new(partial, 0.0),
        Complex64::new(closed, 0.0),
        2e-4,
    )
    .with_param("D", d)
    .with_param("tau", tau)
    .with_n_terms(n_terms as u64);
    Ok(MuTailBound {
        value_partial_sum: partial,
        value_closed_form: closed,
        p_d,
        bound_e_tau: bound,
        bound_holds: p_d <= bound,
        report,
    })
}

fn mu_of_u64(mut n: u64) -> i64 {
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

/// Σ (−1)^{n+1} λ(n)/n^s = (1 + 2^{1−s}) ζ(2s)/ζ(s) for Re s > 1.
pub fn liouville_alternating(s: ComplexParam, n_terms: usize) -> Result<IdentityReport> {
    let sc = s.as_complex();
    if sc.re <= 1.0 {
        return Err(Error::Domain(format!("requires Re s > 1, got {s}")));
    }
    let sieve = Sieve::new(n_terms)?;
    let lam = sieve.lambda();
    let int_exp = sc.im == 0.0 && sc.re == sc.re.round();
    let mut lhs = Complex64::new(0.0, 0.0);
    for n in 1..=n_terms {
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        let pw = if int_exp {
            Complex64::new((n as f64).powi(-sc.re as i32), 0.0)
        } else {
            Complex64::new(n as f64, 0.0).powc(-sc)
        };
        lhs += sign * *lam.get(n) as f64 * pw;
    }
    let rhs = (Complex64::new(1.0, 0.0)
        + Complex64::new(2.0, 0.0) * Complex64::new(2.0, 0.0).powc(-sc))
        * zeta_raw(2.0 * sc)?
        / zeta(s)?;
    Ok(
        IdentityReport::numeric("liouville-alternating", lhs, rhs, 1e-6)
            .with_param("s", s)
            .with_n_terms(n_terms as u64),
    )
}
