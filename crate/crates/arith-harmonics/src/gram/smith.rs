use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::Sieve;
use crate::error::{Error, Result};

/// Smith's closed form Δ_N^{(r)} = J_r(1) J_r(2) ⋯ J_r(N) for the
/// determinant of (gcd(m,n)^r).
pub fn smith_det_closed_form(r: u32, n: usize) -> Result<BigInt> {
    if r == 0 || n == 0 {
        return Err(Error::InvalidArgument(
            "smith_det requires r, N >= 1".into(),
        ));
    }
    let sieve = Sieve::new(n)?;
    let jr = sieve.jordan(r)?;
    let mut out = BigInt::one();
    for k in 1..=n {
        out *= BigInt::from(*jr.get(k));
    }
    Ok(out)
}

/// Exact determinant of the literal matrix (gcd(m,n)^r) by fraction-free
/// Bareiss elimination over BigInt.
pub fn smith_det_bareiss(r: u32, n: usize) -> Result<BigInt> {
    if r == 0 || n == 0 {
        return Err(Error::InvalidArgument(
            "smith_det requires r, N >= 1".into(),
        ));
    }
    let mut m: Vec<Vec<BigInt>> = (1..=n as u64)
        .map(|i| {
            (1..=n as u64)
                .map(|j| BigInt::from(num_integer::gcd(i, j)).pow(r))
                .collect()
        })
        .collect();
    Ok(bareiss(&mut m))
}

/// Fraction-free determinant; consumes the matrix in place.
pub(crate) fn bareiss(m: &mut [Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev; // exact by the Bareiss identity
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        // r=1, N=3: det [[1,1,1],[1,2,1],[1,1,3]] = 2 = Φ(1)Φ(2)Φ(3)
        assert_eq!(smith_det_closed_form(1, 3).unwrap(), BigInt::from(2));
        assert_eq!(smith_det_bareiss(1, 3).unwrap(), BigInt::from(2));
        // r=1, N=1
        assert_eq!(smith_det_closed_form(1, 1).unwrap(), BigInt::one());
        // r=2, N=4: J₂ products 1·3·8·12 = 288
        assert_eq!(smith_det_closed_form(2, 4).unwrap(), BigInt::from(288));
        assert_eq!(smith_det_bareiss(2, 4).unwrap(), BigInt::from(288));
    }

    #[test]
    fn closed_form_equals_bareiss() {
        for r in 1..=3 {
            for n in [1usize, 2, 5, 9, 16, 24] {
                assert_eq!(
                    smith_det_closed_form(r, n).unwrap(),
                    smith_det_bareiss(r, n).unwrap(),
                    "r={r} N={n}"
                );
            }
        }
    }

    #[test]
    fn positivity_of_smith_determinants() {
        for r in 1..=3 {
            for n in 1..=12 {
                assert!(
                    smith_det_closed_form(r, n).unwrap() > BigInt::zero(),
                    "r={r} N={n}"
                );
            }
        }
    }

    #[test]
    fn bareiss_on_singular_matrix() {
        let mut m = vec![
            vec![BigInt::from(1), BigInt::from(2)],
            vec![BigInt::from(2), BigInt::from(4)],
        ];
        assert!(bareiss(&mut m).is_zero());
    }
}
