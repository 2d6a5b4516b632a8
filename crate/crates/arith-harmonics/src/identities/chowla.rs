use crate::arith::Sieve;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorrelationKind {
    Mobius,
    Liouville,
}

/// One row of a correlation scan: the normalized sum S(M)/M at a checkpoint.
#[derive(Debug, Clone, Copy)]
pub struct CorrelationPoint {
    pub m: usize,
    pub normalized: f64,
}

/// Trend data for Σ_{m≤M} f^{ε₁}(m+n₁)⋯f^{ε_l}(m+n_l) with f = μ or λ.
/// No verdict is attached: these are conjecture scans, reported as trends.
#[derive(Debug, Clone)]
pub struct CorrelationScan {
    pub kind: CorrelationKind,
    pub shifts: Vec<u64>,
    pub exponents: Vec<u8>,
    pub points: Vec<CorrelationPoint>,
    /// Set when every exponent is 2: the sum then has positive density and
    /// o(M) is not expected (squarefree density 6/π² for μ).
    pub positive_density_warning: bool,
}

impl CorrelationScan {
    pub fn final_value(&self) -> f64 {
        self.points.last().map(|p| p.normalized).unwrap_or(0.0)
    }
}

/// Runs the scan up to M, reporting S/M at M/4, M/2 and M.
pub fn chowla_correlation_scan(
    kind: CorrelationKind,
    shifts: &[u64],
    exponents: &[u8],
    m: usize,
) -> Result<CorrelationScan> {
    if shifts.is_empty() || shifts.len() != exponents.len() {
        return Err(Error::InvalidArgument(
            "shifts and exponents must be nonempty and of equal length".into(),
        ));
    }
    let mut sorted = shifts.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != shifts.len() {
        return Err(Error::InvalidArgument("shifts must be distinct".into()));
    }
    if exponents.iter().any(|&e| e != 1 && e != 2) {
        return Err(Error::InvalidArgument("exponents must be 1 or 2".into()));
    }
    if m < 4 {
        return Err(Error::InvalidArgument("M must be at least 4".into()));
    }
    let max_shift = *shifts.iter().max().expect("nonempty") as usize;
    let sieve = Sieve::new(m + max_shift)?;
    let table = match kind {
        CorrelationKind::Mobius => sieve.mu(),
        CorrelationKind::Liouville => sieve.lambda(),
    };

    let checkpoints = [m / 4, m / 2, m];
    let mut points = Vec::with_capacity(3);
    let mut acc: i64 = 0;
    let mut ci = 0;
    for n in 1..=m {
        let mut prod: i64 = 1;
        for (&sh, &e) in shifts.iter().zip(exponents) {
            let v = *table.get(n + sh as usize);
            prod *= if e == 1 { v } else { v * v };
            if prod == 0 {
                break;
            }
        }
        acc += prod;
        while ci < checkpoints.len() && n == checkpoints[ci] {
            points.push(CorrelationPoint {
                m: n,
                normalized: acc as f64 / n as f64,
            });
            ci += 1;
        }
    }

    Ok(CorrelationScan {
        kind,
        shifts: shifts.to_vec(),
        exponents: exponents.to_vec(),
        points,
        positive_density_warning: exponents.iter().all(|&e| e == 2),
    })
}
