//! Exact rational ground truth.
//!
//! Bernoulli numbers use the convention `B_1 = -1/2`, the one for which
//! `B_n(x + 1) - B_n(x) = n x^(n-1)`. The opposite convention flips the sign of
//! every odd-degree term and breaks the telescoping sums downstream.
//!
//! Everything here is arbitrary-precision and independent of the modular code
//! paths; it is only fast enough for small primes (`p <= 13`).

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

pub use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::modring::{PadicRational, PrimePower, Residue};
use crate::sums::WeightKind;

pub const DEFAULT_BOUND: usize = 200;

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn to_big(q: &PadicRational) -> BigRational {
    BigRational::new(BigInt::from(q.num()), BigInt::from(q.den()))
}

fn binomial_int(n: usize, k: usize) -> BigInt {
    let mut c = BigInt::one();
    for i in 0..k {
        c = c * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    c
}

/// Exact Bernoulli and Euler numbers up to a fixed index.
///
/// Built eagerly so the tables can be shared across threads without
/// synchronisation.
#[derive(Clone, Debug)]
pub struct NumberTables {
    bernoulli: Vec<BigRational>,
    euler: Vec<BigRational>,
}

impl NumberTables {
    pub fn new(bound: usize) -> Self {
        let mut bernoulli: Vec<BigRational> = Vec::with_capacity(bound + 1);
        bernoulli.push(BigRational::one());
        // sum_{k=0}^{n} C(n+1, k) B_k = 0
        for n in 1..=bound {
            let mut row = BigInt::one(); // C(n+1, 0)
            let mut acc = BigRational::zero();
            for (k, b) in bernoulli.iter().enumerate() {
                if !b.is_zero() {
                    acc += b * BigRational::from_integer(row.clone());
                }
                row = row * BigInt::from(n + 1 - k) / BigInt::from(k + 1);
            }
            bernoulli.push(-acc / BigRational::from_integer(BigInt::from(n + 1)));
        }

        let mut euler: Vec<BigRational> = Vec::with_capacity(bound + 1);
        for n in 0..=bound {
            if n == 0 {
                euler.push(BigRational::one());
            } else if n % 2 == 1 {
                euler.push(BigRational::zero());
            } else {
                // sum_{k=0}^{n/2} C(n, 2k) E_{2k} = 0
                let mut acc = BigRational::zero();
                for k in 0..n / 2 {
                    acc += &euler[2 * k] * BigRational::from_integer(binomial_int(n, 2 * k));
                }
                euler.push(-acc);
            }
        }
        Self { bernoulli, euler }
    }

    pub fn bound(&self) -> usize {
        self.bernoulli.len() - 1
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.bound() {
            return Err(Error::BoundExceeded {
                index: n,
                bound: self.bound(),
            });
        }
        Ok(())
    }

    pub fn bernoulli(&self, n: usize) -> Result<BigRational> {
        self.check(n)?;
        Ok(self.bernoulli[n].clone())
    }

    pub fn euler(&self, n: usize) -> Result<BigRational> {
        self.check(n)?;
        Ok(self.euler[n].clone())
    }

    /// `B_n(x) = sum_k C(n, k) B_k x^(n-k)`.
    pub fn bernoulli_poly(&self, n: usize, x: &BigRational) -> Result<BigRational> {
        self.check(n)?;
        // Horner in x over coefficients C(n,k) B_k, highest power first.
        let mut acc = BigRational::zero();
        let mut c = BigInt::one();
        for k in 0..=n {
            acc = acc * x + &self.bernoulli[k] * BigRational::from_integer(c.clone());
            c = c * BigInt::from(n - k) / BigInt::from(k + 1);
        }
        Ok(acc)
    }

    /// `E_n(x) = sum_k C(n, k) (E_k / 2^k) (x - 1/2)^(n-k)`.
    pub fn euler_poly(&self, n: usize, x: &BigRational) -> Result<BigRational> {
        self.check(n)?;
        let y = x - rat(1, 2);
        let mut acc = BigRational::zero();
        let mut c = BigInt::one();
        let mut half_pow = BigRational::one();
        for k in 0..=n {
            acc = acc * &y + &self.euler[k] * BigRational::from_integer(c.clone()) * &half_pow;
            c = c * BigInt::from(n - k) / BigInt::from(k + 1);
            half_pow /= BigRational::from_integer(BigInt::from(2));
        }
        Ok(acc)
    }
}

pub fn bernoulli_number_exact(n: usize) -> Result<BigRational> {
    if n > DEFAULT_BOUND {
        return Err(Error::BoundExceeded {
            index: n,
            bound: DEFAULT_BOUND,
        });
    }
    NumberTables::new(n).bernoulli(n)
}

pub fn euler_number_exact(n: usize) -> Result<BigRational> {
    if n > DEFAULT_BOUND {
        return Err(Error::BoundExceeded {
            index: n,
            bound: DEFAULT_BOUND,
        });
    }
    NumberTables::new(n).euler(n)
}

pub fn bernoulli_poly_eval_exact(n: usize, x: &BigRational) -> Result<BigRational> {
    if n > DEFAULT_BOUND {
        return Err(Error::BoundExceeded {
            index: n,
            bound: DEFAULT_BOUND,
        });
    }
    NumberTables::new(n).bernoulli_poly(n, x)
}

pub fn euler_poly_eval_exact(n: usize, x: &BigRational) -> Result<BigRational> {
    if n > DEFAULT_BOUND {
        return Err(Error::BoundExceeded {
            index: n,
            bound: DEFAULT_BOUND,
        });
    }
    NumberTables::new(n).euler_poly(n, x)
}

/// The residue of `q` modulo `p^e`; fails when `p` divides the denominator.
pub fn reduce_mod(q: &BigRational, m: PrimePower) -> Result<Residue> {
    let modulus = BigInt::from(m.modulus());
    let p = BigInt::from(m.p());
    if q.denom().is_multiple_of(&p) {
        return Err(Error::NotPIntegral(q.to_string(), m.p()));
    }
    let to_residue = |x: &BigInt| -> Residue {
        let r = x.mod_floor(&modulus);
        let v: u128 = r.try_into().expect("reduced value fits the modulus");
        Residue::new(v, m)
    };
    Ok(to_residue(q.numer()) * to_residue(q.denom()).inverse()?)
}

/// Generalized binomial `C(x, k) = x (x-1) ... (x-k+1) / k!`.
pub fn binom_rational(x: &BigRational, k: usize) -> BigRational {
    let mut c = BigRational::one();
    for i in 0..k {
        c = c * (x - BigRational::from_integer(BigInt::from(i)))
            / BigRational::from_integer(BigInt::from(i + 1));
    }
    c
}

/// Brute-force `sum_k C(-a, k) C(a-1, k) w(k)` over `0 <= k <= p-1`.
pub fn oracle_sum_exact(a: &PadicRational, weight: WeightKind, p: u64) -> Result<BigRational> {
    if !a.is_p_integral(p) {
        return Err(Error::NotPIntegral(a.to_string(), p));
    }
    let a = to_big(a);
    let one = BigRational::one();
    let neg_a = -a.clone();
    let a_minus_one = &a - &one;
    let mut h = BigRational::zero();
    let mut h2 = BigRational::zero();
    let mut total = BigRational::zero();
    for k in 0..p as usize {
        if k > 0 {
            let kk = BigRational::from_integer(BigInt::from(k));
            h += kk.recip();
            h2 += (&kk * &kk).recip();
        }
        let t = binom_rational(&neg_a, k) * binom_rational(&a_minus_one, k);
        let odd = BigRational::from_integer(BigInt::from(2 * k + 1));
        let term = match weight {
            WeightKind::One => t,
            WeightKind::H => t * &h,
            WeightKind::H2 => t * &h2,
            WeightKind::HoverK => {
                if k == 0 {
                    continue;
                }
                t * &h / BigRational::from_integer(BigInt::from(k))
            }
            WeightKind::Inv2k1 => t / odd,
            WeightKind::H2over2k1 => t * &h2 / odd,
        };
        total += term;
    }
    Ok(total)
}

/// Dense polynomial with exact rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::new(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }
}

impl Add for RationalPolynomial {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.into_iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.into_iter().enumerate() {
            out[i] += c;
        }
        Self::new(out)
    }
}

impl Neg for RationalPolynomial {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Sub for RationalPolynomial {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for RationalPolynomial {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }
}

/// Values the identity expressions can be evaluated over: exact rationals
/// (point evaluation) or rational polynomials (coefficient expansion).
pub trait IdentityScalar:
    Clone + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self>
{
    fn from_rational(c: BigRational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    fn scale(self, c: &BigRational) -> Self {
        self * Self::from_rational(c.clone())
    }
}

impl IdentityScalar for BigRational {
    fn from_rational(c: BigRational) -> Self {
        c
    }
}

impl IdentityScalar for RationalPolynomial {
    fn from_rational(c: BigRational) -> Self {
        Self::constant(c)
    }
}

/// `[C(top, 0), .., C(top, n)]`.
fn binom_row<T: IdentityScalar>(top: &T, n: usize) -> Vec<T> {
    let mut row = Vec::with_capacity(n + 1);
    let mut c = T::from_int(1);
    row.push(c.clone());
    for i in 0..n {
        c = (c * (top.clone() - T::from_int(i as i64))).scale(&rat(1, i as i64 + 1));
        row.push(c.clone());
    }
    row
}

/// The polynomial identities used by the two main proofs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdentityKind {
    /// `C(-x,k)C(x-1,k) + C(x,k)C(-x-1,k) = 2(C(x-1,k)C(-x-1,k) - C(x-1,k-1)C(-x-1,k-1))`, `k >= 1`.
    SymmetricDifference,
    /// `(1/n) sum_{k=1}^n (k^2 - k x^2) C(x,k)C(-x,k) = (n^2 - x^2) C(x,n)C(-x,n)`, `n >= 1`.
    WeightedSquareSum,
    /// Weighted variant of [`IdentityKind::SymmetricDifference`] with `2x +- 1` factors, `k >= 1`.
    OddWeightedDifference,
    /// `sum_{k=0}^n C(x,k)C(-x,k) = C(x-1,n)C(-x-1,n)`.
    ProductPrefixSum,
    /// `m sum_{k=0}^n C(x,k)C(-x,m-k) = (m-n) C(x-1,n)C(-x,m-n)`, `m >= n >= 0`.
    Convolution,
    /// Two-step recurrence for the `H^(2)`-weighted partial sums, times `x^2`.
    SecondOrderStep,
    /// Same for the `H^(2)/(2k+1)`-weighted partial sums, times `x^2`.
    OddSecondOrderStep,
}

impl IdentityKind {
    pub const ALL: [IdentityKind; 7] = [
        Self::SymmetricDifference,
        Self::WeightedSquareSum,
        Self::OddWeightedDifference,
        Self::ProductPrefixSum,
        Self::Convolution,
        Self::SecondOrderStep,
        Self::OddSecondOrderStep,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Self::SymmetricDifference => "symmetric_difference",
            Self::WeightedSquareSum => "weighted_square_sum",
            Self::OddWeightedDifference => "odd_weighted_difference",
            Self::ProductPrefixSum => "product_prefix_sum",
            Self::Convolution => "convolution",
            Self::SecondOrderStep => "second_order_step",
            Self::OddSecondOrderStep => "odd_second_order_step",
        }
    }

    /// Largest admissible size parameter by default.
    pub fn default_bound(&self) -> usize {
        match self {
            Self::SymmetricDifference | Self::OddWeightedDifference | Self::WeightedSquareSum | Self::ProductPrefixSum => 60,
            Self::SecondOrderStep | Self::OddSecondOrderStep => 40,
            Self::Convolution => 30,
        }
    }

    /// Number of size parameters: 2 for the convolution, 1 otherwise.
    pub fn arity(&self) -> usize {
        match self {
            Self::Convolution => 2,
            _ => 1,
        }
    }

    /// Degree bound in `x` of both sides.
    fn degree(&self, size: &[usize]) -> usize {
        match self {
            Self::SymmetricDifference => 2 * size[0],
            Self::WeightedSquareSum => 2 * size[0] + 2,
            Self::OddWeightedDifference => 2 * size[0] + 1,
            Self::ProductPrefixSum => 2 * size[0],
            Self::Convolution => size[0],
            Self::SecondOrderStep => 2 * size[0] + 2,
            Self::OddSecondOrderStep => 2 * size[0] + 3,
        }
    }

    fn validate(&self, size: &[usize]) -> Result<()> {
        let bad = |index: usize| Error::BoundExceeded {
            index,
            bound: self.default_bound(),
        };
        if size.len() != self.arity() {
            return Err(bad(size.len()));
        }
        match self {
            Self::SymmetricDifference | Self::OddWeightedDifference | Self::WeightedSquareSum if size[0] == 0 => Err(bad(0)),
            Self::Convolution if size[1] > size[0] => Err(bad(size[1])),
            _ => {
                let max = size.iter().copied().max().unwrap_or(0);
                if max > self.default_bound() {
                    Err(bad(max))
                } else {
                    Ok(())
                }
            }
        }
    }

    /// Both sides evaluated at `x`.
    pub fn sides<T: IdentityScalar>(&self, size: &[usize], x: &T) -> (T, T) {
        let one = T::from_int(1);
        let two = T::from_int(2);
        let neg_x = T::from_int(0) - x.clone();
        match self {
            Self::SymmetricDifference | Self::OddWeightedDifference => {
                let k = size[0];
                let b_negx = binom_row(&neg_x, k);
                let b_xm1 = binom_row(&(x.clone() - one.clone()), k);
                let b_x = binom_row(x, k);
                let b_negxm1 = binom_row(&(neg_x.clone() - one.clone()), k);
                let diff = b_xm1[k].clone() * b_negxm1[k].clone()
                    - b_xm1[k - 1].clone() * b_negxm1[k - 1].clone();
                if *self == Self::SymmetricDifference {
                    let lhs = b_negx[k].clone() * b_xm1[k].clone()
                        + b_x[k].clone() * b_negxm1[k].clone();
                    (lhs, two * diff)
                } else {
                    let lhs = (two.clone() * x.clone() + one.clone())
                        * b_x[k].clone()
                        * b_negxm1[k].clone()
                        - (two.clone() * x.clone() - one.clone())
                            * b_negx[k].clone()
                            * b_xm1[k].clone();
                    (lhs, T::from_int(2 * (2 * k as i64 + 1)) * diff)
                }
            }
            Self::WeightedSquareSum => {
                let n = size[0];
                let b_x = binom_row(x, n);
                let b_negx = binom_row(&neg_x, n);
                let x2 = x.clone() * x.clone();
                let mut acc = T::from_int(0);
                for k in 1..=n {
                    let kk = k as i64;
                    let w = T::from_int(kk * kk) - T::from_int(kk) * x2.clone();
                    acc = acc + w * b_x[k].clone() * b_negx[k].clone();
                }
                let lhs = acc.scale(&rat(1, n as i64));
                let rhs = (T::from_int((n * n) as i64) - x2) * b_x[n].clone() * b_negx[n].clone();
                (lhs, rhs)
            }
            Self::ProductPrefixSum => {
                let n = size[0];
                let b_x = binom_row(x, n);
                let b_negx = binom_row(&neg_x, n);
                let lhs = (0..=n).fold(T::from_int(0), |acc, k| {
                    acc + b_x[k].clone() * b_negx[k].clone()
                });
                let rhs = binom_row(&(x.clone() - one.clone()), n)[n].clone()
                    * binom_row(&(neg_x - one), n)[n].clone();
                (lhs, rhs)
            }
            Self::Convolution => {
                let (m, n) = (size[0], size[1]);
                let b_x = binom_row(x, n);
                let b_negx = binom_row(&neg_x, m);
                let sum = (0..=n).fold(T::from_int(0), |acc, k| {
                    acc + b_x[k].clone() * b_negx[m - k].clone()
                });
                let lhs = T::from_int(m as i64) * sum;
                let rhs = T::from_int((m - n) as i64)
                    * binom_row(&(x.clone() - one), n)[n].clone()
                    * b_negx[m - n].clone();
                (lhs, rhs)
            }
            Self::SecondOrderStep | Self::OddSecondOrderStep => {
                let n = size[0];
                let x1 = x.clone() + one.clone();
                let x2 = x.clone() * x.clone();
                // Sum_{k<=n} C(-y,k)C(y-1,k) c_k with c_k = H2_k or H2_k/(2k+1).
                let partial = |y: &T| {
                    let neg_y = T::from_int(0) - y.clone();
                    let a = binom_row(&neg_y, n);
                    let b = binom_row(&(y.clone() - T::from_int(1)), n);
                    let mut h2 = BigRational::zero();
                    let mut acc = T::from_int(0);
                    for k in 0..=n {
                        if k > 0 {
                            h2 += rat(1, (k * k) as i64);
                        }
                        let c = if *self == Self::SecondOrderStep {
                            h2.clone()
                        } else {
                            &h2 / rat(2 * k as i64 + 1, 1)
                        };
                        acc = acc + (a[k].clone() * b[k].clone()).scale(&c);
                    }
                    acc
                };
                let lhs_core = if *self == Self::SecondOrderStep {
                    partial(x) + partial(&x1)
                } else {
                    (two.clone() * x.clone() + one.clone()) * partial(&x1)
                        - (two.clone() * x.clone() - one.clone()) * partial(x)
                };
                let h2n = (1..=n).fold(BigRational::zero(), |acc, k| acc + rat(1, (k * k) as i64));
                let prod = binom_row(&(x.clone() - one.clone()), n)[n].clone()
                    * binom_row(&(neg_x - one.clone()), n)[n].clone();
                let rhs = two.clone() * prod * (x2.clone().scale(&h2n) + one) - two;
                (x2 * lhs_core, rhs)
            }
        }
    }
}

/// Check an identity by exact evaluation at `degree + 1` points `x = 101, 102, ..`.
pub fn verify_poly_identity(kind: IdentityKind, size: &[usize]) -> Result<bool> {
    kind.validate(size)?;
    let points = kind.degree(size) + 1;
    for i in 0..points {
        let x = BigRational::from_integer(BigInt::from(101 + i as i64));
        let (lhs, rhs) = kind.sides(size, &x);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Check an identity by expanding both sides as polynomials in `x`.
pub fn verify_poly_identity_expanded(kind: IdentityKind, size: &[usize]) -> Result<bool> {
    kind.validate(size)?;
    let (lhs, rhs) = kind.sides(size, &RationalPolynomial::x());
    Ok(lhs == rhs)
}

/// Every size of `kind` up to `max_size` (capped at the default bound).
pub fn identity_sizes(kind: IdentityKind, max_size: usize) -> Vec<Vec<usize>> {
    let cap = max_size.min(kind.default_bound());
    match kind {
        IdentityKind::Convolution => (0..=cap)
            .flat_map(|m| (0..=m).map(move |n| vec![m, n]))
            .collect(),
        IdentityKind::SymmetricDifference | IdentityKind::OddWeightedDifference | IdentityKind::WeightedSquareSum => {
            (1..=cap).map(|k| vec![k]).collect()
        }
        IdentityKind::ProductPrefixSum | IdentityKind::SecondOrderStep | IdentityKind::OddSecondOrderStep => {
            (0..=cap).map(|n| vec![n]).collect()
        }
    }
}
