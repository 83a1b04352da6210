//! Residue arithmetic over prime-power moduli.
//!
//! Every [`Residue`] carries its [`PrimePower`]; combining residues with
//! different moduli is a contract violation and panics. Values are stored in
//! `u128`, and products fall back to a double-and-add loop once the modulus no
//! longer fits in 64 bits, so moduli up to `2^126` are exact.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::primes::is_prime;

const MAX_MODULUS: u128 = 1 << 126;

#[inline]
fn add_mod(a: u128, b: u128, m: u128) -> u128 {
    let s = a + b;
    if s >= m {
        s - m
    } else {
        s
    }
}

#[inline]
fn mul_mod(a: u128, b: u128, m: u128) -> u128 {
    if m <= u64::MAX as u128 {
        return a * b % m;
    }
    let mut a = a % m;
    let mut b = b % m;
    let mut r = 0;
    while b > 0 {
        if b & 1 == 1 {
            r = add_mod(r, a, m);
        }
        a = add_mod(a, a, m);
        b >>= 1;
    }
    r
}

/// The modulus `p^e` for a prime `p > 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimePower {
    p: u64,
    e: u32,
    m: u128,
}

impl PrimePower {
    pub fn new(p: u64, e: u32) -> Result<Self> {
        if p <= 3 || !is_prime(p) {
            return Err(Error::InvalidModulus {
                p,
                e,
                reason: "base must be a prime greater than 3",
            });
        }
        if e == 0 {
            return Err(Error::InvalidModulus {
                p,
                e,
                reason: "exponent must be at least 1",
            });
        }
        let mut m: u128 = 1;
        for _ in 0..e {
            m = m
                .checked_mul(p as u128)
                .filter(|&m| m < MAX_MODULUS)
                .ok_or(Error::InvalidModulus {
                    p,
                    e,
                    reason: "modulus exceeds 2^126",
                })?;
        }
        Ok(Self { p, e, m })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    /// The integer `p^e`.
    pub fn modulus(&self) -> u128 {
        self.m
    }

    /// Same prime, different exponent.
    pub fn with_exp(&self, e: u32) -> Result<Self> {
        Self::new(self.p, e)
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.p, self.e)
    }
}

/// A residue class in `[0, p^e)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u128,
    modulus: PrimePower,
}

impl Residue {
    pub fn new(value: u128, modulus: PrimePower) -> Self {
        Self {
            value: value % modulus.m,
            modulus,
        }
    }

    pub fn from_i128(value: i128, modulus: PrimePower) -> Self {
        let m = modulus.m;
        let value = if value >= 0 {
            value as u128 % m
        } else {
            let r = value.unsigned_abs() % m;
            if r == 0 {
                0
            } else {
                m - r
            }
        };
        Self { value, modulus }
    }

    pub fn zero(modulus: PrimePower) -> Self {
        Self { value: 0, modulus }
    }

    pub fn one(modulus: PrimePower) -> Self {
        Self { value: 1, modulus }
    }

    /// `(-1)^k` as a residue.
    pub fn sign(k: u64, modulus: PrimePower) -> Self {
        if k.is_multiple_of(2) {
            Self::one(modulus)
        } else {
            -Self::one(modulus)
        }
    }

    pub fn value(&self) -> u128 {
        self.value
    }

    pub fn modulus(&self) -> PrimePower {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn is_unit(&self) -> bool {
        !self.value.is_multiple_of(self.modulus.p as u128)
    }

    pub fn pow(&self, mut n: u128) -> Self {
        let m = self.modulus.m;
        let mut base = self.value;
        let mut acc = 1 % m;
        while n > 0 {
            if n & 1 == 1 {
                acc = mul_mod(acc, base, m);
            }
            base = mul_mod(base, base, m);
            n >>= 1;
        }
        Self {
            value: acc,
            modulus: self.modulus,
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::NotAUnit {
                value: self.value,
                modulus: self.modulus.m,
            });
        }
        // Extended Euclid on (value, m); coefficients tracked modulo m.
        let m = self.modulus.m;
        let (mut r0, mut r1) = (m, self.value);
        let (mut t0, mut t1) = (0u128, 1u128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            let qt = mul_mod(q % m, t1, m);
            (t0, t1) = (t1, if t0 >= qt { t0 - qt } else { m - (qt - t0) });
        }
        debug_assert_eq!(r0, 1);
        Ok(Self {
            value: t0,
            modulus: self.modulus,
        })
    }

    /// Reduce to a lower precision `p^e`.
    pub fn reduce(&self, e: u32) -> Self {
        assert!(
            e >= 1 && e <= self.modulus.e,
            "cannot reduce {} to exponent {e}",
            self.modulus
        );
        let modulus = self.modulus.with_exp(e).expect("lower exponent is valid");
        Self::new(self.value, modulus)
    }

    /// Divide by `p`, which must divide the representative; the result lives
    /// one digit lower.
    pub fn div_p_exact(&self) -> Result<Self> {
        let p = self.modulus.p as u128;
        if self.modulus.e < 2 {
            return Err(Error::ValuationTooLow(format!(
                "cannot divide a residue modulo {} by p",
                self.modulus
            )));
        }
        if !self.value.is_multiple_of(p) {
            return Err(Error::ValuationTooLow(format!(
                "{} modulo {} is not divisible by {}",
                self.value, self.modulus, p
            )));
        }
        let modulus = self.modulus.with_exp(self.modulus.e - 1)?;
        Ok(Self {
            value: self.value / p,
            modulus,
        })
    }

    /// `p^k * x`, lifted to modulus `p^(e+k)`; exact for `x` known mod `p^e`.
    pub fn lift_times_p_pow(&self, k: u32) -> Result<Self> {
        let modulus = self.modulus.with_exp(self.modulus.e + k)?;
        let pk = (self.modulus.p as u128).pow(k);
        Ok(Self::new(self.value * pk, modulus))
    }

    /// Representative in `(-m/2, m/2]`.
    pub fn symmetric(&self) -> i128 {
        let m = self.modulus.m;
        if self.value > m / 2 {
            -((m - self.value) as i128)
        } else {
            self.value as i128
        }
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(
            self.modulus, other.modulus,
            "mixed-modulus residue arithmetic"
        );
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus.m)
    }
}

impl Add for Residue {
    type Output = Residue;
    fn add(self, rhs: Residue) -> Residue {
        self.check_same(&rhs);
        Residue {
            value: add_mod(self.value, rhs.value, self.modulus.m),
            modulus: self.modulus,
        }
    }
}

impl Sub for Residue {
    type Output = Residue;
    fn sub(self, rhs: Residue) -> Residue {
        self + (-rhs)
    }
}

impl Neg for Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        let value = if self.value == 0 {
            0
        } else {
            self.modulus.m - self.value
        };
        Residue {
            value,
            modulus: self.modulus,
        }
    }
}

impl Mul for Residue {
    type Output = Residue;
    fn mul(self, rhs: Residue) -> Residue {
        self.check_same(&rhs);
        Residue {
            value: mul_mod(self.value, rhs.value, self.modulus.m),
            modulus: self.modulus,
        }
    }
}

impl std::iter::Sum for Residue {
    fn sum<I: Iterator<Item = Residue>>(mut iter: I) -> Residue {
        let first = iter.next().expect("sum of residues needs at least one term");
        iter.fold(first, |acc, x| acc + x)
    }
}

/// Inverse of a unit modulo `p^e`.
pub fn mod_inverse(x: Residue) -> Result<Residue> {
    x.inverse()
}

/// `x^n` by square-and-multiply.
pub fn mod_pow(x: Residue, n: u128) -> Residue {
    x.pow(n)
}

/// Inverses of every `x` in `xs` with a single modular inversion.
///
/// All inputs must be units.
pub fn batch_inverse(xs: &[Residue]) -> Result<Vec<Residue>> {
    let Some(first) = xs.first() else {
        return Ok(Vec::new());
    };
    let mut prefix = Vec::with_capacity(xs.len());
    let mut acc = Residue::one(first.modulus);
    for &x in xs {
        if !x.is_unit() {
            return Err(Error::NotAUnit {
                value: x.value,
                modulus: x.modulus.m,
            });
        }
        prefix.push(acc);
        acc = acc * x;
    }
    let mut inv = acc.inverse()?;
    let mut out = vec![Residue::zero(first.modulus); xs.len()];
    for i in (0..xs.len()).rev() {
        out[i] = inv * prefix[i];
        inv = inv * xs[i];
    }
    Ok(out)
}

/// A rational number used as a p-adic argument; always in lowest terms with a
/// positive denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PadicRational {
    num: i128,
    den: i128,
}

impl PadicRational {
    pub fn new(num: i128, den: i128) -> Result<Self> {
        if den == 0 {
            return Err(Error::ZeroDenominator);
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = num.checked_neg().ok_or(Error::Overflow)?;
            den = den.checked_neg().ok_or(Error::Overflow)?;
        }
        Ok(Self { num, den })
    }

    pub fn integer(n: i128) -> Self {
        Self { num: n, den: 1 }
    }

    pub fn num(&self) -> i128 {
        self.num
    }

    pub fn den(&self) -> i128 {
        self.den
    }

    pub fn is_p_integral(&self, p: u64) -> bool {
        self.den % p as i128 != 0
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let l = self.den.lcm(&other.den);
        let a = self
            .num
            .checked_mul(l / self.den)
            .ok_or(Error::Overflow)?;
        let b = other
            .num
            .checked_mul(l / other.den)
            .ok_or(Error::Overflow)?;
        Self::new(a.checked_add(b).ok_or(Error::Overflow)?, l)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let g1 = self.num.gcd(&other.den).max(1);
        let g2 = other.num.gcd(&self.den).max(1);
        let num = (self.num / g1)
            .checked_mul(other.num / g2)
            .ok_or(Error::Overflow)?;
        let den = (self.den / g2)
            .checked_mul(other.den / g1)
            .ok_or(Error::Overflow)?;
        Self::new(num, den)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Ord for PadicRational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

impl PartialOrd for PadicRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PadicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for PadicRational {
    type Err = Error;

    /// Accepts `c/d` or a bare integer `c`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(s.to_string());
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n: i128 = n.trim().parse().map_err(|_| bad())?;
                let d: i128 = d.trim().parse().map_err(|_| bad())?;
                Self::new(n, d).map_err(|_| bad())
            }
            None => Ok(Self::integer(s.parse().map_err(|_| bad())?)),
        }
    }
}

/// `q` as a residue modulo `m`; requires `p ∤ den(q)`.
pub fn embed_rational(q: &PadicRational, m: PrimePower) -> Result<Residue> {
    if !q.is_p_integral(m.p) {
        return Err(Error::NotPIntegral(q.to_string(), m.p));
    }
    let den = Residue::from_i128(q.den, m).inverse()?;
    Ok(Residue::from_i128(q.num, m) * den)
}

/// The unique `r` in `{0, .., p-1}` with `q ≡ r (mod p)`.
pub fn least_nonneg_residue(q: &PadicRational, p: u64) -> Result<u64> {
    let m = PrimePower::new(p, 1)?;
    Ok(embed_rational(q, m)?.value() as u64)
}

/// Jacobi symbol `(a/n)` for odd positive `n`.
pub fn jacobi_symbol(a: i128, n: u128) -> i8 {
    assert!(n % 2 == 1, "Jacobi symbol needs an odd positive modulus");
    let mut a = if a >= 0 {
        a as u128 % n
    } else {
        let r = a.unsigned_abs() % n;
        if r == 0 {
            0
        } else {
            n - r
        }
    };
    let mut n = n;
    let mut result = 1i8;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if n % 8 == 3 || n % 8 == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

/// `p^val * unit` with an exactly tracked valuation.
///
/// `Zero` is exact zero. A finite valuation at or above the unit's precision
/// means "indistinguishable from zero at this precision", which collapses to
/// the zero residue but is not the same element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ValuatedUnit {
    Zero(PrimePower),
    Finite { val: u32, unit: Residue },
}

impl ValuatedUnit {
    pub fn new(val: u32, unit: Residue) -> Result<Self> {
        if !unit.is_unit() {
            return Err(Error::NotAUnit {
                value: unit.value(),
                modulus: unit.modulus().modulus(),
            });
        }
        Ok(Self::Finite { val, unit })
    }

    pub fn one(m: PrimePower) -> Self {
        Self::Finite {
            val: 0,
            unit: Residue::one(m),
        }
    }

    /// Split an exact integer into its `p`-power and unit part.
    pub fn from_integer(n: i128, m: PrimePower) -> Self {
        if n == 0 {
            return Self::Zero(m);
        }
        let p = m.p() as i128;
        let mut n = n;
        let mut val = 0;
        while n % p == 0 {
            n /= p;
            val += 1;
        }
        Self::Finite {
            val,
            unit: Residue::from_i128(n, m),
        }
    }

    /// Valuation, `None` for exact zero.
    pub fn valuation(&self) -> Option<u32> {
        match self {
            Self::Zero(_) => None,
            Self::Finite { val, .. } => Some(*val),
        }
    }

    pub fn unit(&self) -> Option<Residue> {
        match self {
            Self::Zero(_) => None,
            Self::Finite { unit, .. } => Some(*unit),
        }
    }

    /// Precision the unit is tracked at.
    pub fn precision(&self) -> PrimePower {
        match self {
            Self::Zero(m) => *m,
            Self::Finite { unit, .. } => unit.modulus(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.precision(), other.precision(), "mixed-modulus valuated units");
        match (self, other) {
            (Self::Finite { val: v1, unit: u1 }, Self::Finite { val: v2, unit: u2 }) => {
                Self::Finite {
                    val: v1 + v2,
                    unit: *u1 * *u2,
                }
            }
            _ => Self::Zero(self.precision()),
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        assert_eq!(self.precision(), other.precision(), "mixed-modulus valuated units");
        match (self, other) {
            (_, Self::Zero(m)) => Err(Error::NotAUnit {
                value: 0,
                modulus: m.modulus(),
            }),
            (Self::Zero(m), _) => Ok(Self::Zero(*m)),
            (Self::Finite { val: v1, unit: u1 }, Self::Finite { val: v2, unit: u2 }) => {
                if v2 > v1 {
                    return Err(Error::NegativeValuation(u1.modulus().p()));
                }
                Ok(Self::Finite {
                    val: v1 - v2,
                    unit: *u1 * u2.inverse()?,
                })
            }
        }
    }

    /// Reduce `p^val * unit` into `[0, p^e)` for the target modulus.
    ///
    /// Panics if the unit is not known to the precision the target needs.
    pub fn collapse(&self, target: PrimePower) -> Residue {
        assert_eq!(target.p(), self.precision().p(), "collapse across primes");
        match self {
            Self::Zero(_) => Residue::zero(target),
            Self::Finite { val, .. } if *val >= target.e() => Residue::zero(target),
            Self::Finite { val, unit } => {
                let need = target.e() - val;
                assert!(
                    unit.modulus().e() >= need,
                    "unit tracked modulo {} cannot fill {} digits",
                    unit.modulus(),
                    need
                );
                let pv = (target.p() as u128).pow(*val);
                Residue::new(unit.reduce(need).value() * pv, target)
            }
        }
    }
}

pub fn vu_mul(x: &ValuatedUnit, y: &ValuatedUnit) -> ValuatedUnit {
    x.mul(y)
}

pub fn vu_div(x: &ValuatedUnit, y: &ValuatedUnit) -> Result<ValuatedUnit> {
    x.div(y)
}

pub fn vu_collapse(x: &ValuatedUnit, target: PrimePower) -> Residue {
    x.collapse(target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pp(p: u64, e: u32) -> PrimePower {
        PrimePower::new(p, e).unwrap()
    }

    fn r(v: u128, p: u64, e: u32) -> Residue {
        Residue::new(v, pp(p, e))
    }

    fn q(n: i128, d: i128) -> PadicRational {
        PadicRational::new(n, d).unwrap()
    }

    #[test]
    fn prime_power_validation() {
        assert_eq!(pp(5, 2).modulus(), 25);
        assert!(PrimePower::new(3, 1).is_err());
        assert!(PrimePower::new(9, 1).is_err());
        assert!(PrimePower::new(7, 0).is_err());
        assert!(PrimePower::new(10_007, 9).is_ok());
        assert!(PrimePower::new(10_007, 10).is_err());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(mod_inverse(r(1, 5, 2)).unwrap().value(), 1);
        assert_eq!(mod_inverse(r(3, 5, 2)).unwrap().value(), 17);
        assert_eq!(mod_inverse(r(2, 7, 1)).unwrap().value(), 4);
        assert!(matches!(
            mod_inverse(r(10, 5, 2)),
            Err(Error::NotAUnit { .. })
        ));
    }

    #[test]
    fn pow_examples() {
        assert_eq!(mod_pow(r(2, 5, 2), 4).value(), 16);
        assert_eq!(mod_pow(r(3, 7, 1), 6).value(), 1);
        assert_eq!(mod_pow(r(5, 7, 2), 0).value(), 1);
    }

    #[test]
    fn embed_examples() {
        assert_eq!(embed_rational(&q(1, 3), pp(5, 2)).unwrap().value(), 17);
        assert_eq!(embed_rational(&q(25, 12), pp(5, 2)).unwrap().value(), 0);
        assert_eq!(embed_rational(&q(-1, 2), pp(7, 2)).unwrap().value(), 24);
        assert!(matches!(
            embed_rational(&q(1, 5), pp(5, 2)),
            Err(Error::NotPIntegral(..))
        ));
    }

    #[test]
    fn least_residue_examples() {
        assert_eq!(least_nonneg_residue(&q(1, 2), 5).unwrap(), 3);
        assert_eq!(least_nonneg_residue(&q(1, 3), 7).unwrap(), 5);
        assert_eq!(least_nonneg_residue(&q(0, 1), 11).unwrap(), 0);
        assert!(least_nonneg_residue(&q(1, 7), 7).is_err());
    }

    #[test]
    fn jacobi_examples() {
        assert_eq!(jacobi_symbol(-1, 5), 1);
        assert_eq!(jacobi_symbol(5, 7), -1);
        assert_eq!(jacobi_symbol(3, 5), -1);
        assert_eq!(jacobi_symbol(10, 5), 0);
        assert_eq!(jacobi_symbol(2, 15), 1);
        assert_eq!(jacobi_symbol(7, 1), 1);
    }

    #[test]
    fn jacobi_matches_euler_criterion() {
        for p in crate::primes::sieve_primes(5, 199) {
            let m = pp(p, 1);
            for a in 0..p {
                let e = Residue::new(a as u128, m).pow(((p - 1) / 2) as u128).value();
                let expected = match e {
                    0 => 0,
                    1 => 1,
                    x if x == (p - 1) as u128 => -1,
                    _ => unreachable!(),
                };
                assert_eq!(jacobi_symbol(a as i128, p as u128), expected, "({a}/{p})");
            }
        }
    }

    #[test]
    fn large_modulus_arithmetic_is_exact() {
        // 9973^5 exceeds 2^64; compare against arbitrary precision.
        use num_bigint::BigUint;
        let m = pp(9973, 5);
        let a = Residue::new(m.modulus() - 12345, m);
        let b = Residue::new(m.modulus() / 3 + 7, m);
        let expected = (BigUint::from(a.value()) * BigUint::from(b.value()))
            % BigUint::from(m.modulus());
        assert_eq!(BigUint::from((a * b).value()), expected);
        let inv = b.inverse().unwrap();
        assert_eq!((inv * b).value(), 1);
    }

    #[test]
    fn batch_inverse_matches_single() {
        let m = pp(11, 3);
        let xs: Vec<Residue> = (1..200u128)
            .filter(|k| k % 11 != 0)
            .map(|k| Residue::new(k, m))
            .collect();
        let inv = batch_inverse(&xs).unwrap();
        for (x, y) in xs.iter().zip(&inv) {
            assert_eq!(*y, x.inverse().unwrap());
        }
    }

    #[test]
    fn div_p_and_lift() {
        let x = r(15, 5, 2);
        let y = x.div_p_exact().unwrap();
        assert_eq!((y.value(), y.modulus().e()), (3, 1));
        assert!(r(7, 5, 2).div_p_exact().is_err());
        let z = y.lift_times_p_pow(1).unwrap();
        assert_eq!(z, x);
    }

    #[test]
    fn rational_normalization_and_parse() {
        assert_eq!(q(4, -6), q(-2, 3));
        assert_eq!("3/-9".parse::<PadicRational>().unwrap(), q(-1, 3));
        assert_eq!("5".parse::<PadicRational>().unwrap(), q(5, 1));
        assert!("1/0".parse::<PadicRational>().is_err());
        assert!("x".parse::<PadicRational>().is_err());
        assert_eq!(q(1, 2).to_string(), "1/2");
        assert_eq!(PadicRational::integer(3).to_string(), "3/1");
    }

    #[test]
    fn valuated_unit_examples() {
        let m = pp(5, 2);
        let x = ValuatedUnit::new(1, Residue::new(2, m)).unwrap();
        let y = ValuatedUnit::new(2, Residue::new(3, m)).unwrap();
        let xy = vu_mul(&x, &y);
        assert_eq!(xy.valuation(), Some(3));
        assert_eq!(xy.unit().unwrap().value(), 6);

        let u = ValuatedUnit::new(0, Residue::new(7, m)).unwrap();
        assert_eq!(vu_mul(&u, &ValuatedUnit::Zero(m)), ValuatedUnit::Zero(m));

        let a = ValuatedUnit::new(2, Residue::new(3, m)).unwrap();
        let b = ValuatedUnit::new(3, Residue::new(1, m)).unwrap();
        assert!(matches!(vu_div(&a, &b), Err(Error::NegativeValuation(5))));

        assert_eq!(vu_collapse(&a, m).value(), 0);
        let c = ValuatedUnit::new(1, Residue::new(3, m)).unwrap();
        assert_eq!(vu_collapse(&c, m).value(), 15);
        assert_eq!(vu_collapse(&ValuatedUnit::Zero(m), pp(5, 1)).value(), 0);
    }

    #[test]
    fn valuated_unit_from_integer() {
        let m = pp(7, 3);
        let v = ValuatedUnit::from_integer(-98, m);
        assert_eq!(v.valuation(), Some(2));
        assert_eq!(v.unit().unwrap(), Residue::from_i128(-2, m));
        assert_eq!(v.collapse(m), Residue::from_i128(-98, m));
        assert_eq!(ValuatedUnit::from_integer(0, m), ValuatedUnit::Zero(m));
    }

    fn small_rational(p: u64) -> impl Strategy<Value = PadicRational> {
        (-500i128..500, 1i128..60)
            .prop_filter("p-integral", move |(_, d)| d % p as i128 != 0)
            .prop_map(|(n, d)| PadicRational::new(n, d).unwrap())
    }

    proptest! {
        #[test]
        fn inverse_is_involutive(v in 1u128..1_000_000, idx in 0usize..4, e in 1u32..5) {
            let p = [5u64, 7, 11, 13][idx];
            let x = Residue::new(v, pp(p, e));
            prop_assume!(x.is_unit());
            let y = x.inverse().unwrap();
            prop_assert_eq!(y.inverse().unwrap(), x);
            prop_assert_eq!((x * y).value(), 1);
        }

        #[test]
        fn embed_is_ring_homomorphism(a in small_rational(7), b in small_rational(7), e in 1u32..5) {
            let m = pp(7, e);
            let ea = embed_rational(&a, m).unwrap();
            let eb = embed_rational(&b, m).unwrap();
            prop_assert_eq!(embed_rational(&a.checked_add(&b).unwrap(), m).unwrap(), ea + eb);
            prop_assert_eq!(embed_rational(&a.checked_mul(&b).unwrap(), m).unwrap(), ea * eb);
        }

        #[test]
        fn least_residue_is_embedding_mod_p(a in small_rational(11)) {
            prop_assert_eq!(
                least_nonneg_residue(&a, 11).unwrap() as u128,
                embed_rational(&a, pp(11, 1)).unwrap().value()
            );
        }

        #[test]
        fn collapse_is_multiplicative(
            n1 in -5000i128..5000, n2 in -5000i128..5000, e in 1u32..5
        ) {
            let m = pp(5, e);
            let x = ValuatedUnit::from_integer(n1, m);
            let y = ValuatedUnit::from_integer(n2, m);
            prop_assert_eq!(x.mul(&y).collapse(m), x.collapse(m) * y.collapse(m));
        }
    }
}
