//! Acceptance suite: one test per criterion, each printing a single
//! `criterion NN PASS/FAIL — summary` line (visible with `--nocapture`).
//! Every tolerance is pinned here, in code.

use std::f64::consts::PI;
use std::time::Instant;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use arith_harmonics::analytic::{
    lerch_decomposition_check, mobius_series, BoundaryMode, ComplexParam,
};
use arith_harmonics::arith::{divisor_count_k, dprime_count_k, ramanujan_sum, Sieve};
use arith_harmonics::asympt::{
    cos_sum, cos_sum_taylor, linear_term_and_remainder, t_semigroup_coeff, t_semigroup_quadrature,
};
use arith_harmonics::cli::{figure_data, FigureKind};
use arith_harmonics::gram::{
    polylog_psi_pairing_exact, riesz_expand, riesz_expand_exact, riesz_reconstruct_exact,
    smith_det_bareiss, smith_det_closed_form, GramSpec,
};
use arith_harmonics::identities::{
    besicovitch_sum, franel_logsin, franel_sawtooth, franel_sawtooth_closed_form,
    ramanujan_dual_formula, ramanujan_point_formula, truncated_root_sum_exact, BesicovitchKind,
};
use arith_harmonics::series::{
    estermann_coeffs, mobius_coeffs_exact, polylog_coeffs_exact, rational_power, TruncatedSeries,
};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn verdict(id: u32, ok: bool, summary: &str) {
    println!(
        "criterion {id:02} {} — {summary}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {id:02} failed: {summary}");
}

#[test]
fn criterion_01_franel_sawtooth_exact() {
    let t0 = Instant::now();
    let mut cases = 0u32;
    let mut ok = true;
    for r in 1..=50 {
        for s in 1..=50 {
            cases += 1;
            if franel_sawtooth(r, s).unwrap() != franel_sawtooth_closed_form(r, s) {
                ok = false;
            }
        }
    }
    let dt = t0.elapsed().as_secs_f64();
    verdict(
        1,
        ok && dt < 10.0,
        &format!("∫{{rt}}{{st}}dt = gcd²/(12rs) exactly, {cases} cases in {dt:.2}s (< 10s)"),
    );
}

#[test]
fn criterion_02_franel_logsin() {
    let t0 = Instant::now();
    let mut worst = 0.0f64;
    for r in 1..=12 {
        for s in 1..=12 {
            let rep = franel_logsin(r, s, 100_000).unwrap();
            worst = worst.max(rep.abs_error);
        }
    }
    let dt = t0.elapsed().as_secs_f64();
    verdict(
        2,
        worst <= 1e-6 && dt < 60.0,
        &format!("log-sin quadrature vs (π²/12)gcd²/(rs), worst |err| = {worst:.2e} ≤ 1e-6, {dt:.2}s (< 60s)"),
    );
}

#[test]
fn criterion_03_smith_and_gram_determinants() {
    // closed form Π J_r(k) equals the exact Bareiss determinant, every N ≤ 64
    let mut smith_ok = true;
    for r in 1..=3u32 {
        for n in 1..=64usize {
            if smith_det_closed_form(r, n).unwrap() != smith_det_bareiss(r, n).unwrap() {
                smith_ok = false;
            }
        }
    }
    // det M_{s,N} vs (N!)^{−2s} Π J_{2s}(k) to relative 1e−8
    let mut worst_rel = 0.0f64;
    for &s in &[1.0, 1.5, 2.0] {
        for &n in &[1usize, 2, 3, 5, 10, 25, 50, 100, 141, 200] {
            let g = GramSpec::new(s, n).unwrap();
            let lu = g.det();
            let closed = g.det_closed_form().unwrap();
            worst_rel = worst_rel.max((lu - closed).abs() / closed.abs());
        }
    }
    verdict(
        3,
        smith_ok && worst_rel <= 1e-8,
        &format!(
            "Smith dets exact for r ≤ 3, N ≤ 64; Gram det worst rel err = {worst_rel:.2e} ≤ 1e-8"
        ),
    );
}

#[test]
fn criterion_04_eigenvalue_sandwich() {
    let mut ok = true;
    let mut msg = String::new();
    for &s in &[1.1, 1.5, 2.0, 3.0] {
        for &n in &[10usize, 50, 100, 200] {
            let g = GramSpec::new(s, n).unwrap();
            let (lo, hi) = g.eigenvalue_bounds().unwrap();
            let (lmin, lmax) = g.extreme_eigenvalues().unwrap();
            if !(lmin >= lo - 1e-9 && lmax <= hi + 1e-9) {
                ok = false;
                msg = format!("s={s} N={n}: [{lmin}, {lmax}] outside [{lo}, {hi}]");
            }
        }
    }
    // at s = 2 the window is exactly [2/5, 5/2]
    let g = GramSpec::new(2.0, 100).unwrap();
    let (lo, hi) = g.eigenvalue_bounds().unwrap();
    let window_exact = (lo - 0.4).abs() < 1e-12 && (hi - 2.5).abs() < 1e-12;
    verdict(
        4,
        ok && window_exact,
        &format!(
            "extreme eigenvalues inside [ζ(2s)/ζ(s)², ζ(s)²/ζ(2s)] (s=2 window = [2/5, 5/2]) {msg}"
        ),
    );
}

/// Dirichlet convolution by trial division only: the brute-force oracle.
fn naive_convolve(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len();
    let mut out = vec![BigRational::zero(); n];
    for m in 1..=n {
        let mut acc = BigRational::zero();
        for d in 1..=m {
            if m % d == 0 {
                acc += a[d - 1].clone() * b[m / d - 1].clone();
            }
        }
        out[m - 1] = acc;
    }
    out
}

#[test]
fn criterion_05_otimes_algebra() {
    let n = 2048usize;
    // ℒ₂ ⊗ ℳ₂ = e exactly, with ℳ₂ both as the ⊗-inverse and as μ(n)/n²
    let l2 = polylog_coeffs_exact(2, n).unwrap();
    let m2 = mobius_coeffs_exact(2, n).unwrap();
    let e = TruncatedSeries::<BigRational>::identity(n).unwrap();
    let prod_ok = l2.otimes(&m2).unwrap() == e && l2.otimes_inverse().unwrap() == m2;

    // ℳ₀ ⊗ ℳ₀ against brute-force μ⋆μ; on cubefree n this is (−2)^{n_a}
    // (the (−2)^{n_a} form fails at non-cubefree n, e.g. μ⋆μ(8) = 0 — the
    // divisor enumeration is the governing oracle)
    let sieve = Sieve::new(n).unwrap();
    let mu = sieve.mu();
    let m0 =
        TruncatedSeries::new(mu.values().iter().map(|&v| rat(v, 1)).collect::<Vec<_>>()).unwrap();
    let m0_sq = m0.otimes(&m0).unwrap();
    let brute = naive_convolve(m0.coeffs(), m0.coeffs());
    let mut mumu_ok = m0_sq.coeffs() == &brute[..];
    let na = sieve.n_simple();
    for k in 1..=n {
        let cubefree = sieve.factorize(k).iter().all(|&(_, e)| e <= 2);
        let expect = if cubefree {
            rat((-2i64).pow(*na.get(k) as u32), 1)
        } else {
            rat(0, 1)
        };
        if *m0_sq.coeff(k) != expect {
            mumu_ok = false;
        }
    }

    // k-fold ⊗ of all-ones and of μ give d(n,k), d′(n,k) against both the
    // sieve route and the trial-division oracle
    let ones = TruncatedSeries::<BigRational>::ones(n).unwrap();
    let mut dk_ok = true;
    for k in 2..=4u32 {
        let folded = ones.otimes_power(k).unwrap();
        let table = divisor_count_k(n, k).unwrap();
        let mut oracle = ones.coeffs().to_vec();
        for _ in 1..k {
            oracle = naive_convolve(&oracle, ones.coeffs());
        }
        for i in 1..=n {
            if *folded.coeff(i) != rat(*table.get(i), 1) || *folded.coeff(i) != oracle[i - 1] {
                dk_ok = false;
            }
        }
    }
    let mut dpk_ok = true;
    for k in 2..=3u32 {
        let folded = m0.otimes_power(k).unwrap();
        let table = dprime_count_k(n, k).unwrap();
        for i in 1..=n {
            if *folded.coeff(i) != rat(*table.get(i), 1) {
                dpk_ok = false;
            }
        }
    }
    verdict(
        5,
        prod_ok && mumu_ok && dk_ok && dpk_ok,
        "ℒ⊗ℳ = e, ℳ₀⊗ℳ₀ = μ⋆μ (= (−2)^{n_a} on cubefree n), k-fold powers = d(n,k), d′(n,k), N = 2048 exact",
    );
}

#[test]
fn criterion_06_ramanujan_formulas() {
    let mut worst = 0.0f64;
    for &s in &[2.0, 3.0] {
        let sp = ComplexParam::real(s).unwrap();
        for k in 2..=50 {
            let r = ramanujan_point_formula(k, sp, 50_000).unwrap();
            worst = worst.max(r.abs_error);
        }
        for m in 1..=50 {
            let r = ramanujan_dual_formula(m, sp, 1_000_000).unwrap();
            worst = worst.max(r.abs_error);
        }
    }
    let mut worst_mangoldt = 0.0f64;
    let s1 = ComplexParam::real(1.0).unwrap();
    for k in 2..=20 {
        let r = ramanujan_point_formula(k, s1, 1_000_000).unwrap();
        assert!(r.is_heuristic(), "s = 1 must carry a heuristic verdict");
        worst_mangoldt = worst_mangoldt.max(r.abs_error);
    }
    verdict(
        6,
        worst <= 1e-6 && worst_mangoldt <= 1e-3,
        &format!(
            "point/dual formulas worst |err| = {worst:.2e} ≤ 1e-6 (k,m ≤ 50, s ∈ {{2,3}}); Σc_k(m)/m = −Λ(k) worst = {worst_mangoldt:.2e} ≤ 1e-3"
        ),
    );
}

#[test]
fn criterion_07_orthogonality_of_ramanujan_sums() {
    // exact period averages over L = lcm(r,s): Σ c_r(n)c_s(n+h) = L·(Φ(r) or c_r(h))·[r=s]
    let mut ok = true;
    let mut heads: Vec<Vec<i64>> = Vec::with_capacity(61);
    heads.push(Vec::new());
    for q in 1..=60u64 {
        heads.push((1..=q).map(|n| ramanujan_sum(q, n).unwrap()).collect());
    }
    let phi = Sieve::new(60).unwrap().phi();
    for r in 1..=60u64 {
        for s in 1..=60u64 {
            let l = num_integer::lcm(r, s);
            // h = 0 (plain orthogonality) and shifted h = 1..=20
            for h in 0..=20u64 {
                let mut acc: i64 = 0;
                for n in 1..=l {
                    let cr = heads[r as usize][((n - 1) % r) as usize];
                    let cs = heads[s as usize][((n + h - 1) % s) as usize];
                    acc += cr * cs;
                }
                let expect = if r != s {
                    0
                } else if h == 0 {
                    l as i64 * phi.get(r as usize)
                } else {
                    l as i64 * heads[r as usize][((h - 1) % r) as usize]
                };
                if acc != expect {
                    ok = false;
                }
            }
        }
    }
    verdict(
        7,
        ok,
        "period averages: (1/L)Σ c_r(n)c_s(n+h) = Φ(r)·[r=s] (h=0) and c_r(h)·[r=s] (h ≤ 20), r,s ≤ 60, exact",
    );
}

#[test]
fn criterion_08_besicovitch_kubert() {
    // exact dual route on 500 random series, all k ≤ 20
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut exact_ok = true;
    for _ in 0..500 {
        let order = rng.gen_range(1..=128);
        let coeffs: Vec<BigRational> = (0..order)
            .map(|_| rat(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=4)))
            .collect();
        let f = TruncatedSeries::new(coeffs).unwrap();
        for k in 1..=20 {
            let (direct, slice) = truncated_root_sum_exact(&f, k).unwrap();
            if direct != slice {
                exact_ok = false;
            }
        }
    }

    // numeric route vs closed form at s = 2, k ≤ 30
    let s2 = ComplexParam::real(2.0).unwrap();
    let mut worst = 0.0f64;
    for k in 1..=30 {
        let r = besicovitch_sum(BesicovitchKind::Mobius, k, s2, 2_000_000).unwrap();
        worst = worst.max(r.abs_error);
        let r = besicovitch_sum(BesicovitchKind::Liouville, k, s2, 2_000_000).unwrap();
        worst = worst.max(r.abs_error);
    }

    // s = 1 heuristic vanishing at 10⁷ terms
    let s1 = ComplexParam::real(1.0).unwrap();
    let mut worst_s1 = 0.0f64;
    for k in [2u64, 3, 5] {
        let r = besicovitch_sum(BesicovitchKind::Mobius, k, s1, 10_000_000).unwrap();
        assert!(r.is_heuristic());
        worst_s1 = worst_s1.max(r.abs_error);
    }
    verdict(
        8,
        exact_ok && worst <= 1e-6 && worst_s1 <= 1e-2,
        &format!(
            "root-sum dual route exact (500 series, k ≤ 20); numeric vs closed form worst = {worst:.2e} ≤ 1e-6 (s=2, k ≤ 30); s=1 worst |value| = {worst_s1:.2e} ≤ 1e-2 at 1e7 terms"
        ),
    );
}

#[test]
fn criterion_09_biorthogonality_riesz() {
    let one = rat(1, 1);
    let zero = rat(0, 1);
    let mut pairing_ok = true;
    for m in 1..=64u64 {
        for n in 1..=64u64 {
            let p = polylog_psi_pairing_exact(m, n, 2).unwrap();
            let expect = if m == n { &one } else { &zero };
            if p != *expect {
                pairing_ok = false;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut rt_ok = true;
    for _ in 0..100 {
        let coeffs: Vec<BigRational> = (0..256)
            .map(|_| rat(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=4)))
            .collect();
        let g = TruncatedSeries::new(coeffs).unwrap();
        let alpha = riesz_expand_exact(&g, 2).unwrap();
        if riesz_reconstruct_exact(&alpha, 2).unwrap() != g {
            rt_ok = false;
        }
    }
    // Estermann expansion coefficients p^{a−s}
    let s = Complex64::new(3.0, 0.0);
    let a = Complex64::new(0.5, 0.0);
    let e = estermann_coeffs(s, a, 128).unwrap();
    let alpha = riesz_expand(&e, s).unwrap();
    let mut est_ok = true;
    for p in 1..=128usize {
        let expect = Complex64::new(p as f64, 0.0).powc(a - s);
        if (alpha.coeff(p) - expect).norm() > 1e-12 {
            est_ok = false;
        }
    }
    verdict(
        9,
        pairing_ok && rt_ok && est_ok,
        "(ℒ(z^m)|ψ_n) = [m=n] exact (m,n ≤ 64); expand/reconstruct exact on 100 series; Estermann coefficients p^{a−s}",
    );
}

#[test]
fn criterion_10_t_semigroup() {
    // coefficient route exact
    let f = TruncatedSeries::new(
        (1..=24)
            .map(|k| Complex64::new(0.7 / k as f64, 0.01 * k as f64))
            .collect::<Vec<_>>(),
    )
    .unwrap();
    let s1 = ComplexParam::real(0.7).unwrap();
    let s2 = ComplexParam::real(0.8).unwrap();
    let s12 = ComplexParam::real(1.5).unwrap();
    let lhs = t_semigroup_coeff(&t_semigroup_coeff(&f, s1), s2);
    let rhs = t_semigroup_coeff(&f, s12);
    let coeff_ok = (1..=24).all(|n| (lhs.coeff(n) - rhs.coeff(n)).norm() < 1e-14);

    // quadrature route ≤ 1e−7, including the composed case at z = 0.3
    let z = Complex64::new(0.3, 0.0);
    let mut worst = 0.0f64;
    for s in [0.5, 1.5, 2.0] {
        let sp = ComplexParam::real(s).unwrap();
        let q = t_semigroup_quadrature(&f, sp, z, 1e-10).unwrap();
        let c = t_semigroup_coeff(&f, sp).eval_complex(z, |a| *a);
        worst = worst.max((q - c).norm());
    }
    let q_composed = t_semigroup_quadrature(&f, s12, z, 1e-10).unwrap();
    let c_composed = lhs.eval_complex(z, |a| *a);
    worst = worst.max((q_composed - c_composed).norm());
    verdict(
        10,
        coeff_ok && worst <= 1e-7,
        &format!("T_s coefficient semigroup exact; quadrature worst |err| = {worst:.2e} ≤ 1e-7 incl. T_0.7∘T_0.8 = T_1.5"),
    );
}

#[test]
fn criterion_11_flett_asymptotics() {
    // cos_sum vs ζ(2k)-Taylor on [0, 10]
    let mut worst = 0.0f64;
    for i in 0..=40 {
        let x = i as f64 * 0.25;
        let lhs = cos_sum(x, 1e-12).unwrap();
        let rhs = cos_sum_taylor(x, 1e-12).unwrap();
        worst = worst.max((lhs - rhs).abs());
    }

    let fit = linear_term_and_remainder(100_000.0, 40).unwrap();
    let c1 = fit.linear_coeff.abs();

    // The linear term is sometimes quoted with magnitude π; the fit — the
    // governing oracle here — gives π/2, matching both the residue of
    // Γ(−s)ζ(s)cos(πs/2)x^s at its SIMPLE pole s = 1 (the cosine zero
    // halves the Γζ double pole) and ∫₀^∞ (1−cos v)/v² dv = π/2.
    // The π value is asserted to fail; π/2 is asserted to hold within 2%.
    let magnitude_pi = (c1 - PI).abs() <= 0.02 * PI;
    println!(
        "criterion 11 note — magnitude-π reading of the linear term {}: fitted |c1| = {c1:.6}, π/2 = {:.6}",
        if magnitude_pi { "PASSES" } else { "FAILS (refuted by the fit)" },
        PI / 2.0
    );
    let oracle_ok = (c1 - PI / 2.0).abs() <= 0.02 * (PI / 2.0);
    let refutation_ok = !magnitude_pi;

    verdict(
        11,
        worst <= 1e-9 && oracle_ok && refutation_ok && fit.remainder_exponent < 1.0,
        &format!(
            "Flett identity worst |err| = {worst:.2e} ≤ 1e-9; fitted |c1| = {c1:.5} = π/2 ± 2% (magnitude π refuted); remainder exponent {:.3} < 1",
            fit.remainder_exponent
        ),
    );
}

#[test]
fn criterion_12_lerch_decomposition() {
    let s = ComplexParam::real(0.5).unwrap();
    let mut worst = 0.0f64;
    for &x in &[0.2, 0.3, 0.5] {
        let r = lerch_decomposition_check(s, x, 1e-8).unwrap();
        worst = worst.max(r);
    }
    verdict(
        12,
        worst <= 1e-6,
        &format!("Abel-extrapolated ℒ_s(e^{{2πix}}) vs A_sζ(1−s,x)+B_sζ(1−s,1−x), worst residual = {worst:.2e} ≤ 1e-6"),
    );
}

#[test]
fn criterion_13_figures() {
    let t0 = Instant::now();
    let fig1 = figure_data(FigureKind::Fig1, 100_000, 2000).unwrap();
    let fig2 = figure_data(FigureKind::Fig2, 100_000, 2000).unwrap();
    let dt = t0.elapsed().as_secs_f64();

    // footer root-sums equal the exact k-slice identity, zero tolerance:
    // recompute from an independently built sieve in identical arithmetic
    let sieve = Sieve::new(100_000).unwrap();
    let mu = sieve.mu();
    let lam = sieve.lambda();
    let mut footer_ok = true;
    for (data, table) in [(&fig1, &mu), (&fig2, &lam)] {
        let weights: Vec<f64> = (1..=100_000)
            .map(|n| *table.get(n) as f64 / n as f64)
            .collect();
        let f0: f64 = weights.iter().sum();
        for &(k, v) in &data.footer {
            let mut slice = 0.0;
            let mut n = k as usize;
            while n <= 100_000 {
                slice += weights[n - 1];
                n += k as usize;
            }
            if v != f0 + k as f64 * slice {
                footer_ok = false;
            }
        }
    }

    // the identity itself certified in exact rationals at N = 2000
    let mu_series = TruncatedSeries::new(
        (1..=2000)
            .map(|n| rat(*mu.get(n), 1) * rational_power(n as i64, -1))
            .collect::<Vec<_>>(),
    )
    .unwrap();
    let mut exact_ok = true;
    for k in 2..=10usize {
        let (direct, slice) = truncated_root_sum_exact(&mu_series, k).unwrap();
        if direct != slice {
            exact_ok = false;
        }
    }

    // determinism (smaller size): byte-identical rows on repeat
    let again = figure_data(FigureKind::Fig1, 100_000, 2000).unwrap();
    let deterministic = fig1.rows == again.rows && fig1.footer == again.footer;

    verdict(
        13,
        footer_ok && exact_ok && deterministic && dt < 30.0 && fig1.rows.len() == 2000 && fig2.rows.len() == 2000,
        &format!("figures at N = 1e5, 2000 points in {dt:.2}s (< 30s); footer root-sums exact; deterministic"),
    );
}

/// The one-off BigRational helper must round-trip simple values.
#[test]
fn sanity_rational_helpers() {
    assert_eq!(rational_power(2, -3), rat(1, 8));
    assert_eq!(rational_power(3, 2), rat(9, 1));
    assert!(rat(0, 5).is_zero());
    assert!(rat(5, 5).is_one());
    // interior coverage for the Abel machinery used by criterion 12
    let m = mobius_series(
        ComplexParam::real(1.0).unwrap(),
        Complex64::new(0.5, 0.0),
        4000,
        BoundaryMode::Abel,
    )
    .unwrap();
    let d = mobius_series(
        ComplexParam::real(1.0).unwrap(),
        Complex64::new(0.5, 0.0),
        4000,
        BoundaryMode::Direct,
    )
    .unwrap();
    assert!((m.value - d.value).norm() < 1e-9);
}
