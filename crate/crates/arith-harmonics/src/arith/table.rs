use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;

use crate::arith::Sieve;
use crate::error::{Error, Result};

/// Scalar kinds an [`ArithTable`] can hold. The convolution machinery is
/// generic over this trait so exact integer, exact rational and float tables
/// all share one implementation.
pub trait ConvScalar: Clone + Zero + std::ops::Mul<Output = Self> + std::ops::AddAssign {
    fn from_int(v: i64) -> Self;
}

impl ConvScalar for i64 {
    fn from_int(v: i64) -> Self {
        v
    }
}

impl ConvScalar for i128 {
    fn from_int(v: i64) -> Self {
        v as i128
    }
}

impl ConvScalar for f64 {
    fn from_int(v: i64) -> Self {
        v as f64
    }
}

impl ConvScalar for Complex64 {
    fn from_int(v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }
}

impl ConvScalar for BigInt {
    fn from_int(v: i64) -> Self {
        BigInt::from(v)
    }
}

impl ConvScalar for BigRational {
    fn from_int(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

/// Tag identifying which arithmetic function a table holds.
#[derive(Debug, Clone, PartialEq)]
pub enum ArithKind {
    /// Möbius μ(n)
    Mu,
    /// Liouville λ(n) = (−1)^Ω(n)
    Lambda,
    /// Euler totient Φ(n)
    Phi,
    /// Jordan totient J_k(n)
    Jordan(u32),
    /// σ_a(n) = Σ_{d|n} d^a for complex a
    Sigma(Complex64),
    /// von Mangoldt Λ(n)
    Mangoldt,
    /// θ(n) = 2^ω(n)
    Theta,
    /// n_a(n), the number of simple prime divisors (p | n, p² ∤ n)
    NSimple,
    /// ω(n), the number of distinct prime divisors
    Omega,
    /// |μ(n)|, the squarefree indicator
    MuAbs,
    /// anything assembled by the caller or produced by an operation
    Custom,
}

impl ArithKind {
    /// Whether tables of this kind satisfy f(mn) = f(m)f(n) for coprime m, n.
    pub fn is_multiplicative(&self) -> bool {
        !matches!(
            self,
            ArithKind::Mangoldt | ArithKind::NSimple | ArithKind::Omega | ArithKind::Custom
        )
    }
}

/// Values f(1..=n_max) of an arithmetic function, 1-indexed through [`ArithTable::get`].
#[derive(Debug, Clone)]
pub struct ArithTable<T> {
    kind: ArithKind,
    values: Vec<T>,
}

impl<T> ArithTable<T> {
    pub fn new(kind: ArithKind, values: Vec<T>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidArgument("n_max must be at least 1".into()));
        }
        Ok(ArithTable { kind, values })
    }

    pub fn kind(&self) -> &ArithKind {
        &self.kind
    }

    pub fn n_max(&self) -> usize {
        self.values.len()
    }

    /// Value at n (1-indexed). Panics if n is out of range, like slice indexing.
    #[inline]
    pub fn get(&self, n: usize) -> &T {
        &self.values[n - 1]
    }

    /// The raw 0-indexed slice: element i holds f(i+1).
    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }

    /// Iterate (n, f(n)) pairs.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &T)> {
        self.values.iter().enumerate().map(|(i, v)| (i + 1, v))
    }
}

impl<T: Clone> ArithTable<T> {
    pub fn map<U, F: FnMut(&T) -> U>(&self, f: F) -> ArithTable<U> {
        ArithTable {
            kind: ArithKind::Custom,
            values: self.values.iter().map(f).collect(),
        }
    }
}

fn check_same_len<T, U>(f: &ArithTable<T>, g: &ArithTable<U>) -> Result<()> {
    if f.n_max() != g.n_max() {
        return Err(Error::InvalidArgument(format!(
            "tables have mismatched n_max: {} vs {}",
            f.n_max(),
            g.n_max()
        )));
    }
    Ok(())
}

/// Core divisor-sum loop over 0-indexed slices (element i holds f(i+1)).
pub(crate) fn dirichlet_convolve_slices<T: ConvScalar>(a: &[T], b: &[T]) -> Vec<T> {
    let n = a.len();
    let mut out = vec![T::zero(); n];
    for d in 1..=n {
        let fd = &a[d - 1];
        if fd.is_zero() {
            continue;
        }
        let mut m = d;
        let mut q = 1;
        while m <= n {
            out[m - 1] += fd.clone() * b[q - 1].clone();
            m += d;
            q += 1;
        }
    }
    out
}

/// Coprime-pair loop shared by the unitary product on tables and series.
pub(crate) fn unitary_convolve_slices<T: ConvScalar>(a: &[T], b: &[T]) -> Vec<T> {
    let n = a.len();
    let mut out = vec![T::zero(); n];
    for d in 1..=n {
        let fd = &a[d - 1];
        if fd.is_zero() {
            continue;
        }
        let mut m = d;
        let mut q = 1usize;
        while m <= n {
            if num_integer::gcd(d, q) == 1 {
                out[m - 1] += fd.clone() * b[q - 1].clone();
            }
            m += d;
            q += 1;
        }
    }
    out
}

/// Dirichlet convolution (f⋆g)(n) = Σ_{d|n} f(d) g(n/d), exact when the inputs are.
pub fn dirichlet_convolve<T: ConvScalar>(
    f: &ArithTable<T>,
    g: &ArithTable<T>,
) -> Result<ArithTable<T>> {
    check_same_len(f, g)?;
    let out = dirichlet_convolve_slices(f.values(), g.values());
    Ok(ArithTable {
        kind: ArithKind::Custom,
        values: out,
    })
}

/// Möbius inversion: returns g with g(n) = Σ_{d|n} f(d) μ(n/d), so that g⋆1 = f.
pub fn mobius_invert<T: ConvScalar>(f: &ArithTable<T>) -> Result<ArithTable<T>> {
    let sieve = Sieve::new(f.n_max())?;
    let mu = sieve.mu();
    let mu_t = mu.map(|&v| T::from_int(v));
    dirichlet_convolve(f, &mu_t)
}

/// Unitary convolution (f⊔g)(n) = Σ_{pq=n, gcd(p,q)=1} f(p) g(q).
pub fn unitary_convolve<T: ConvScalar>(
    f: &ArithTable<T>,
    g: &ArithTable<T>,
) -> Result<ArithTable<T>> {
    check_same_len(f, g)?;
    let out = unitary_convolve_slices(f.values(), g.values());
    Ok(ArithTable {
        kind: ArithKind::Custom,
        values: out,
    })
}
