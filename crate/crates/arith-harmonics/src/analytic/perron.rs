use crate::error::{Error, Result};

/// A function sampled on the uniform interior grid i/resolution,
/// i = 1..resolution−1, of the open interval (0, 1).
#[derive(Debug, Clone)]
pub struct GridFn {
    resolution: usize,
    values: Vec<f64>,
}

impl GridFn {
    pub fn sample<F: Fn(f64) -> f64>(resolution: usize, f: F) -> Result<Self> {
        if resolution < 2 {
            return Err(Error::InvalidArgument(
                "grid resolution must be at least 2".into(),
            ));
        }
        let values = (1..resolution)
            .map(|i| f(i as f64 / resolution as f64))
            .collect();
        Ok(GridFn { resolution, values })
    }

    pub fn resolution(&self) -> usize {
        self.resolution
    }

    /// Value at the grid point i/resolution, i = 1..resolution−1.
    pub fn at(&self, i: usize) -> f64 {
        self.values[i - 1]
    }

    pub fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(|(j, &v)| ((j + 1) as f64 / self.resolution as f64, v))
    }
}

/// The Perron–Frobenius operator of the p-Bernoulli map:
/// (P u)(x) = (1/p) Σ_{j<p} u((x+j)/p).
///
/// The input grid must have resolution divisible by p; the output lives on
/// the coarser grid of resolution R/p, where every needed sample
/// (m + jR/p)/R is an exact input grid point — no interpolation happens.
pub fn perron_frobenius(u: &GridFn, p: usize) -> Result<GridFn> {
    if p < 2 {
        return Err(Error::InvalidArgument(
            "perron_frobenius requires p >= 2".into(),
        ));
    }
    if u.resolution % p != 0 {
        return Err(Error::InvalidArgument(format!(
            "grid resolution {} is not divisible by p = {p}",
            u.resolution
        )));
    }
    let r_out = u.resolution / p;
    if r_out < 2 {
        return Err(Error::InvalidArgument(
            "output grid would be degenerate; raise the resolution".into(),
        ));
    }
    let values = (1..r_out)
        .map(|m| {
            let mut acc = 0.0;
            for j in 0..p {
                acc += u.at(m + j * r_out);
            }
            acc / p as f64
        })
        .collect();
    Ok(GridFn {
        resolution: r_out,
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::{bernoulli_poly, hurwitz_zeta, ComplexParam};

    #[test]
    fn constant_is_fixed() {
        let u = GridFn::sample(60, |_| 1.0).unwrap();
        for p in [2, 3, 5] {
            let pu = perron_frobenius(&u, p).unwrap();
            for (_, v) in pu.points() {
                assert!((v - 1.0).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn bernoulli_polynomials_are_eigenfunctions() {
        // P B_n = p^{−n} B_n exactly on the grid (distribution relation)
        for n in [1u32, 2, 3, 4] {
            let u = GridFn::sample(120, |x| bernoulli_poly(n, x).unwrap()).unwrap();
            for p in [2usize, 3] {
                let pu = perron_frobenius(&u, p).unwrap();
                let lam = (p as f64).powi(-(n as i32));
                for (x, v) in pu.points() {
                    let expect = lam * bernoulli_poly(n, x).unwrap();
                    assert!(
                        (v - expect).abs() < 1e-12,
                        "B_{n}, p={p}, x={x}: {v} vs {expect}"
                    );
                }
            }
        }
    }

    #[test]
    fn hurwitz_zeta_is_eigenfunction() {
        // P ζ(s,·) = p^{s−1} ζ(s,·): eigenvalue k^{s−1} for the transfer operator
        let s = ComplexParam::real(2.5).unwrap();
        let u = GridFn::sample(90, |x| hurwitz_zeta(s, x).unwrap().re).unwrap();
        for p in [2usize, 3] {
            let pu = perron_frobenius(&u, p).unwrap();
            let lam = (p as f64).powf(2.5 - 1.0);
            for (x, v) in pu.points() {
                let expect = lam * hurwitz_zeta(s, x).unwrap().re;
                assert!(
                    (v - expect).abs() / expect.abs() < 1e-10,
                    "p={p}, x={x}: {v} vs {expect}"
                );
            }
        }
    }

    #[test]
    fn validation() {
        let u = GridFn::sample(10, |x| x).unwrap();
        assert!(perron_frobenius(&u, 3).is_err()); // 3 ∤ 10
        assert!(perron_frobenius(&u, 1).is_err());
        assert!(GridFn::sample(1, |x| x).is_err());
    }
}
