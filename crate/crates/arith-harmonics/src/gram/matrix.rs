use nalgebra::{DMatrix, DVector};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::analytic::{zeta, ComplexParam};
use crate::arith::Sieve;
use crate::error::{Error, Result};

/// The Gram matrix M_{s,N} = (gcd(m,n)^{2s}/(mn)^s) of the dilated
/// polylogarithm system, with its determinant and extreme eigenvalues.
/// Spectral statements need real s; the entries are built as
/// exp(s·(2 ln gcd − ln m − ln n)) from exact integer gcds.
#[derive(Debug, Clone)]
pub struct GramSpec {
    s: f64,
    n: usize,
    matrix: DMatrix<f64>,
}

impl GramSpec {
    pub fn new(s: f64, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("gram matrix needs N >= 1".into()));
        }
        if !s.is_finite() {
            return Err(Error::InvalidArgument("s must be finite".into()));
        }
        // build the lower triangle and mirror, so symmetry is bit-exact
        let mut matrix = DMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..=i {
                let g = num_integer::gcd((i + 1) as u64, (j + 1) as u64) as f64;
                let v = if i == j {
                    1.0
                } else {
                    (s * (2.0 * g.ln() - ((i + 1) as f64).ln() - ((j + 1) as f64).ln())).exp()
                };
                matrix[(i, j)] = v;
                matrix[(j, i)] = v;
            }
        }
        Ok(GramSpec { s, n, matrix })
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    /// Determinant via Cholesky when the matrix is positive definite (real
    /// s ≥ 1 in practice), LU otherwise.
    pub fn det(&self) -> f64 {
        match self.matrix.clone().cholesky() {
            Some(ch) => ch.determinant(),
            None => self.matrix.clone().lu().determinant(),
        }
    }

    /// The closed form det M_{s,N} = (N!)^{−2s} Π J_{2s}(k), evaluated
    /// stably as Π_{k≤N} Π_{p|k} (1 − p^{−2s}).
    pub fn det_closed_form(&self) -> Result<f64> {
        let sieve = Sieve::new(self.n.max(2))?;
        let mut out = 1.0;
        for k in 2..=self.n {
            for (p, _) in sieve.factorize(k) {
                out *= 1.0 - (p as f64).powf(-2.0 * self.s);
            }
        }
        Ok(out)
    }

    /// Exact closed form for integer 2s, as a rational (N!)^{−2s} Π J_{2s}(k).
    pub fn det_closed_form_exact(&self) -> Result<Option<BigRational>> {
        let two_s = 2.0 * self.s;
        if two_s != two_s.round() || two_s < 1.0 || two_s > 40.0 {
            return Ok(None);
        }
        let r = two_s as u32;
        let sieve = Sieve::new(self.n)?;
        let jr = sieve.jordan(r)?;
        let mut num = BigInt::one();
        for k in 1..=self.n {
            num *= BigInt::from(*jr.get(k));
        }
        let mut fact = BigInt::one();
        for k in 2..=self.n {
            fact *= BigInt::from(k as u64);
        }
        Ok(Some(BigRational::new(num, fact.pow(r))))
    }

    /// Smallest and largest eigenvalue from the dense symmetric solver.
    pub fn extreme_eigenvalues(&self) -> Result<(f64, f64)> {
        let eig = self.matrix.clone().symmetric_eigen();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for &v in eig.eigenvalues.iter() {
            lo = lo.min(v);
            hi = hi.max(v);
        }
        if !lo.is_finite() || !hi.is_finite() {
            return Err(Error::Numeric(
                "eigensolve produced non-finite values".into(),
            ));
        }
        Ok((lo, hi))
    }

    /// ζ-ratio spectral window [ζ(2s)/ζ(s)², ζ(s)²/ζ(2s)] valid for s > 1.
    pub fn eigenvalue_bounds(&self) -> Result<(f64, f64)> {
        if self.s <= 1.0 {
            return Err(Error::Domain(format!(
                "the spectral window needs real s > 1, got {}",
                self.s
            )));
        }
        let zs = zeta(ComplexParam::real(self.s)?)?.re;
        let z2s = zeta(ComplexParam::real(2.0 * self.s)?)?.re;
        Ok((z2s / (zs * zs), zs * zs / z2s))
    }

    /// The quadratic form a*M a for a real vector.
    pub fn quadratic_form(&self, a: &[f64]) -> Result<f64> {
        if a.len() != self.n {
            return Err(Error::InvalidArgument("vector length must match N".into()));
        }
        let v = DVector::from_column_slice(a);
        Ok((v.transpose() * &self.matrix * &v)[(0, 0)])
    }
}

/// f64 value of a possibly enormous rational, via a common bit shift that
/// keeps the quotient in range.
pub fn big_rational_to_f64(r: &BigRational) -> f64 {
    let nb = r.numer().bits();
    let db = r.denom().bits();
    let shift = nb.max(db).saturating_sub(96);
    let num = r.numer() >> shift;
    let den = r.denom() >> shift;
    let nf: f64 = num.to_string().parse().unwrap_or(f64::NAN);
    let df: f64 = den.to_string().parse().unwrap_or(f64::NAN);
    nf / df
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn two_by_two_case() {
        // s=1, N=2: [[1, 1/2],[1/2, 1]], det = 3/4 = (2!)^{−2} J₂(1) J₂(2)
        let g = GramSpec::new(1.0, 2).unwrap();
        assert!((g.matrix()[(0, 1)] - 0.5).abs() < 1e-15);
        assert!((g.det() - 0.75).abs() < 1e-12);
        let exact = g.det_closed_form_exact().unwrap().unwrap();
        assert_eq!(exact, BigRational::new(BigInt::from(3), BigInt::from(4)));
        assert!((g.det_closed_form().unwrap() - 0.75).abs() < 1e-12);
        // N=1 determinant is 1
        assert!((GramSpec::new(1.7, 1).unwrap().det() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn diagonal_is_one_and_symmetric() {
        let g = GramSpec::new(1.3, 40).unwrap();
        for i in 0..40 {
            assert!((g.matrix()[(i, i)] - 1.0).abs() < 1e-14);
            for j in 0..i {
                assert_eq!(g.matrix()[(i, j)], g.matrix()[(j, i)]);
            }
        }
    }

    #[test]
    fn determinant_dual_route() {
        for &s in &[1.0, 1.5, 2.0] {
            for &n in &[10usize, 50, 120] {
                let g = GramSpec::new(s, n).unwrap();
                let lu = g.det();
                let closed = g.det_closed_form().unwrap();
                assert!(
                    (lu - closed).abs() / closed.abs() < 1e-8,
                    "s={s} N={n}: {lu} vs {closed}"
                );
                // exact route where 2s is an integer
                if let Some(exact) = g.det_closed_form_exact().unwrap() {
                    let ex = big_rational_to_f64(&exact);
                    assert!((closed - ex).abs() / ex.abs() < 1e-10, "s={s} N={n}");
                }
            }
        }
    }

    #[test]
    fn eigenvalue_window() {
        // s=2: window exactly [2/5, 5/2]
        let g = GramSpec::new(2.0, 100).unwrap();
        let (lo, hi) = g.eigenvalue_bounds().unwrap();
        assert!((lo - 0.4).abs() < 1e-12 && (hi - 2.5).abs() < 1e-12);
        let (lmin, lmax) = g.extreme_eigenvalues().unwrap();
        assert!(
            lmin >= lo - 1e-9 && lmax <= hi + 1e-9,
            "[{lmin}, {lmax}] vs [{lo}, {hi}]"
        );
        // N=1: both eigenvalues are 1, inside the window
        let g1 = GramSpec::new(2.0, 1).unwrap();
        let (a, b) = g1.extreme_eigenvalues().unwrap();
        assert!((a - 1.0).abs() < 1e-12 && (b - 1.0).abs() < 1e-12);
    }

    #[test]
    fn interlacing_in_n() {
        // nested principal submatrices: λ_min decreases, λ_max increases
        let mut prev: Option<(f64, f64)> = None;
        for n in (10..=100).step_by(10) {
            let g = GramSpec::new(1.5, n).unwrap();
            let (lo, hi) = g.extreme_eigenvalues().unwrap();
            if let Some((plo, phi)) = prev {
                assert!(lo <= plo + 1e-10, "λ_min must shrink: {lo} vs {plo}");
                assert!(hi >= phi - 1e-10, "λ_max must grow: {hi} vs {phi}");
            }
            prev = Some((lo, hi));
        }
    }

    #[test]
    fn quadratic_form_sandwich() {
        let g = GramSpec::new(1.5, 64).unwrap();
        let (lo, hi) = g.eigenvalue_bounds().unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for _ in 0..100 {
            let mut a: Vec<f64> = (0..64).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let norm: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
            a.iter_mut().for_each(|x| *x /= norm);
            let q = g.quadratic_form(&a).unwrap();
            assert!(
                q >= lo - 1e-9 && q <= hi + 1e-9,
                "q = {q} outside [{lo}, {hi}]"
            );
        }
    }

    #[test]
    fn positive_definite_for_s_above_one() {
        for &s in &[1.1, 1.5, 2.0, 3.0] {
            let g = GramSpec::new(s, 120).unwrap();
            assert!(g.det() > 0.0, "det at s={s}");
            let (lmin, _) = g.extreme_eigenvalues().unwrap();
            assert!(lmin > 0.0, "λ_min at s={s}");
        }
    }
}
