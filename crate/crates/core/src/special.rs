//! Special values modulo `p` and `p^2`: harmonic prefixes, Fermat and Lucas
//! quotients, and Bernoulli/Euler polynomial values computed through power
//! sums instead of polynomial evaluation.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::modring::{
    batch_inverse, embed_rational, jacobi_symbol, least_nonneg_residue, PadicRational, PrimePower,
    Residue,
};
use crate::primes::is_prime;

/// Highest precision the harmonic tables are built at.
pub const MAX_TABLE_EXP: u32 = 5;

/// `H_k`, `H^(2)_k` and `1/k` modulo `p^e` for `0 <= k <= p-1`.
#[derive(Clone, Debug)]
pub struct HarmonicTables {
    modulus: PrimePower,
    inv: Vec<Residue>,
    h: Vec<Residue>,
    h2: Vec<Residue>,
}

impl HarmonicTables {
    pub fn modulus(&self) -> PrimePower {
        self.modulus
    }

    pub fn p(&self) -> u64 {
        self.modulus.p()
    }

    /// `1/k`; index 0 holds zero.
    pub fn inv(&self, k: u64) -> Residue {
        self.inv[k as usize]
    }

    pub fn h(&self, k: u64) -> Residue {
        self.h[k as usize]
    }

    pub fn h2(&self, k: u64) -> Residue {
        self.h2[k as usize]
    }

    pub fn h_all(&self) -> &[Residue] {
        &self.h
    }

    pub fn h2_all(&self) -> &[Residue] {
        &self.h2
    }
}

pub fn harmonic_prefixes(p: u64, e: u32) -> Result<HarmonicTables> {
    if e > MAX_TABLE_EXP {
        return Err(Error::InvalidModulus {
            p,
            e,
            reason: "harmonic tables support e <= 5",
        });
    }
    let m = PrimePower::new(p, e)?;
    let ks: Vec<Residue> = (1..p).map(|k| Residue::new(k as u128, m)).collect();
    let mut inv = vec![Residue::zero(m)];
    inv.extend(batch_inverse(&ks)?);
    let mut h = Vec::with_capacity(p as usize);
    let mut h2 = Vec::with_capacity(p as usize);
    let (mut acc, mut acc2) = (Residue::zero(m), Residue::zero(m));
    h.push(acc);
    h2.push(acc2);
    for x in &inv[1..] {
        acc = acc + *x;
        acc2 = acc2 + *x * *x;
        h.push(acc);
        h2.push(acc2);
    }
    Ok(HarmonicTables {
        modulus: m,
        inv,
        h,
        h2,
    })
}

/// Prefix sums of `k^-2` over `1 <= k <= s`, `p ∤ k`, modulo `p^2`, for
/// `0 <= s < p^2`; one table plain, one with the sign `(-1)^k`.
#[derive(Clone, Debug)]
struct InverseSquareTable {
    unsigned: Vec<u128>,
    alternating: Vec<u128>,
}

impl InverseSquareTable {
    fn new(p: u64) -> Result<Self> {
        let m = PrimePower::new(p, 2)?;
        let n = (p * p) as usize;
        let ks: Vec<Residue> = (1..n as u64)
            .filter(|k| k % p != 0)
            .map(|k| Residue::new(k as u128, m))
            .collect();
        let invs = batch_inverse(&ks)?;
        let mut unsigned = Vec::with_capacity(n);
        let mut alternating = Vec::with_capacity(n);
        let (mut u, mut a) = (Residue::zero(m), Residue::zero(m));
        unsigned.push(0);
        alternating.push(0);
        let mut it = invs.into_iter();
        for k in 1..n as u64 {
            if k % p != 0 {
                let x = it.next().expect("one inverse per admissible k");
                let sq = x * x;
                u = u + sq;
                a = if k % 2 == 0 { a + sq } else { a - sq };
            }
            unsigned.push(u.value());
            alternating.push(a.value());
        }
        Ok(Self {
            unsigned,
            alternating,
        })
    }
}

/// Per-prime lazily built tables and quotients. Build one per worker.
#[derive(Debug)]
pub struct PrimeContext {
    p: u64,
    tables: [OnceLock<HarmonicTables>; MAX_TABLE_EXP as usize],
    inv_square: OnceLock<InverseSquareTable>,
    alt_mod_p: OnceLock<Vec<Residue>>,
    fermat: [OnceLock<Residue>; 3],
    lucas: [OnceLock<Result<Residue>>; 3],
    euler_p3: OnceLock<Residue>,
    euler_phi2: OnceLock<Residue>,
}

impl PrimeContext {
    pub fn new(p: u64) -> Result<Self> {
        if p <= 3 || !is_prime(p) {
            return Err(Error::BadPrime {
                p,
                reason: "expected a prime p > 3".into(),
            });
        }
        PrimePower::new(p, MAX_TABLE_EXP)?;
        Ok(Self {
            p,
            tables: Default::default(),
            inv_square: OnceLock::new(),
            alt_mod_p: OnceLock::new(),
            fermat: Default::default(),
            lucas: Default::default(),
            euler_p3: OnceLock::new(),
            euler_phi2: OnceLock::new(),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn pp(&self, e: u32) -> PrimePower {
        PrimePower::new(self.p, e).expect("exponent within the supported range")
    }

    pub fn harmonic(&self, e: u32) -> &HarmonicTables {
        assert!((1..=MAX_TABLE_EXP).contains(&e), "table exponent {e} out of range");
        self.tables[e as usize - 1]
            .get_or_init(|| harmonic_prefixes(self.p, e).expect("validated prime"))
    }

    fn inv_square_table(&self) -> &InverseSquareTable {
        self.inv_square
            .get_or_init(|| InverseSquareTable::new(self.p).expect("validated prime"))
    }

    /// `alt[r] = sum_{1 <= t < r} (-1)^t t^-2 mod p`, for `0 <= r <= p`.
    fn alternating_mod_p(&self) -> &[Residue] {
        self.alt_mod_p.get_or_init(|| {
            let tab = self.harmonic(1);
            let m = tab.modulus();
            let mut out = vec![Residue::zero(m); 2];
            let mut acc = Residue::zero(m);
            for t in 1..self.p {
                let x = tab.inv(t);
                acc = if t % 2 == 0 { acc + x * x } else { acc - x * x };
                out.push(acc);
            }
            out
        })
    }

    /// Sum of `k^-2` (or `(-1)^(m-k) k^-2`) over `0 < k < m`, `p ∤ k`, mod `p^e`.
    pub fn inv_square_partial(&self, m: u128, e: u32, signed: bool) -> Result<Residue> {
        if m == 0 {
            return Err(Error::Parse("inv_square_partial needs m >= 1".into()));
        }
        if e == 0 || e > 2 {
            return Err(Error::InvalidModulus {
                p: self.p,
                e,
                reason: "inverse-square partial sums support e <= 2",
            });
        }
        let block = (self.p as u128) * (self.p as u128);
        let q = (m - 1) / block;
        let s = ((m - 1) % block) as usize;
        let tab = self.inv_square_table();
        let m2 = self.pp(2);
        let value = if signed {
            // Each full block cancels under k <-> p^2 - k; only the sign survives.
            let v = Residue::new(tab.alternating[s], m2);
            if (m - q).is_multiple_of(2) {
                v
            } else {
                -v
            }
        } else {
            Residue::new(tab.unsigned[s], m2)
        };
        Ok(value.reduce(e))
    }

    /// `q_p(a) mod p^e` for `a` in {2, 3, 5}, cached at `p^2`.
    pub fn fermat_small(&self, a: u64, e: u32) -> Result<Residue> {
        let slot = match a {
            2 => 0,
            3 => 1,
            5 => 2,
            _ => return fermat_quotient(a as i128, self.p, e),
        };
        if e > 2 {
            return fermat_quotient(a as i128, self.p, e);
        }
        let q = match self.fermat[slot].get() {
            Some(q) => *q,
            None => {
                let q = fermat_quotient(a as i128, self.p, 2)?;
                *self.fermat[slot].get_or_init(|| q)
            }
        };
        Ok(q.reduce(e))
    }

    pub fn lucas_quotient(&self, kind: LucasKind) -> Result<Residue> {
        let slot = kind as usize;
        self.lucas[slot]
            .get_or_init(|| lucas_quotient(kind, self.p))
            .clone()
    }

    /// `B_{p-2}(a) mod p`.
    pub fn bpoly_p2_value(&self, a: &PadicRational) -> Result<Residue> {
        let r = least_nonneg_residue(&a.checked_sub(&PadicRational::integer(1))?, self.p)?;
        let two = Residue::new(2, self.pp(1));
        Ok(-(two * self.harmonic(1).h2(r)))
    }

    /// `B_{p-1}(a) - B_{p-1} mod p`.
    pub fn bpoly_p1_diff(&self, a: &PadicRational) -> Result<Residue> {
        let r = least_nonneg_residue(a, self.p)?;
        if r == 0 {
            return Ok(Residue::zero(self.pp(1)));
        }
        Ok(-self.harmonic(1).h(r - 1))
    }

    /// `E_{p-3}(a) mod p`.
    pub fn epoly_p3_value(&self, a: &PadicRational) -> Result<Residue> {
        let r = least_nonneg_residue(a, self.p)?;
        if r == 0 {
            return Ok(Residue::zero(self.pp(1)));
        }
        let alt = self.alternating_mod_p()[r as usize];
        let two = Residue::new(2, self.pp(1));
        Ok(Residue::sign(r - 1, self.pp(1)) * two * alt)
    }

    /// `E_{φ(p^2)-2}(a) mod p^2`.
    pub fn epoly_phi2_value(&self, a: &PadicRational) -> Result<Residue> {
        let m2 = self.pp(2);
        let mut m = embed_rational(a, m2)?.value();
        if m == 0 {
            m = m2.modulus();
        }
        let two = Residue::new(2, m2);
        Ok(-(two * self.inv_square_partial(m, 2, true)?))
    }

    /// `B_{φ(p^2)-1}(a) mod p^2`, using the representative `m ≡ a (mod p^3)`.
    pub fn bpoly_phi1_value(&self, a: &PadicRational) -> Result<Residue> {
        let m3 = self.pp(3);
        let mut m = embed_rational(a, m3)?.value();
        if m == 0 {
            m = m3.modulus();
        }
        let m2 = self.pp(2);
        let scale = Residue::new(self.p as u128 - 1, m2).inverse()?;
        Ok(scale * self.inv_square_partial(m, 2, false)?)
    }

    /// `E_{p-3} mod p` (`e = 1`) or `E_{φ(p^2)-2} mod p^2` (`e = 2`).
    pub fn euler_number_mod(&self, e: u32) -> Result<Residue> {
        let half = PadicRational::new(1, 2)?;
        let slot = match e {
            1 => &self.euler_p3,
            2 => &self.euler_phi2,
            _ => {
                return Err(Error::InvalidModulus {
                    p: self.p,
                    e,
                    reason: "Euler numbers are available mod p and p^2",
                })
            }
        };
        if let Some(v) = slot.get() {
            return Ok(*v);
        }
        let m = self.pp(e);
        let at_half = if e == 1 {
            self.epoly_p3_value(&half)?
        } else {
            self.epoly_phi2_value(&half)?
        };
        let v = at_half * Residue::new(4, m).inverse()?;
        Ok(*slot.get_or_init(|| v))
    }

    /// `B_n mod p` for `0 <= n <= p-3`.
    pub fn bernoulli_mod_p(&self, n: u64) -> Result<Residue> {
        bernoulli_mod_p(n, self.p)
    }
}

pub fn inv_square_partial(m: u128, p: u64, e: u32, signed: bool) -> Result<Residue> {
    PrimeContext::new(p)?.inv_square_partial(m, e, signed)
}

/// `(a^(p-1) - 1)/p mod p^e`.
pub fn fermat_quotient(a: i128, p: u64, e: u32) -> Result<Residue> {
    if a % p as i128 == 0 {
        return Err(Error::NotCoprime { a, p });
    }
    if e == 0 || e > 4 {
        return Err(Error::InvalidModulus {
            p,
            e,
            reason: "Fermat quotients support 1 <= e <= 4",
        });
    }
    let m = PrimePower::new(p, e + 1)?;
    let x = Residue::from_i128(a, m).pow(p as u128 - 1) - Residue::one(m);
    x.div_p_exact()
}

pub fn bpoly_p2_value(a: &PadicRational, p: u64) -> Result<Residue> {
    PrimeContext::new(p)?.bpoly_p2_value(a)
}

pub fn bpoly_p1_diff(a: &PadicRational, p: u64) -> Result<Residue> {
    PrimeContext::new(p)?.bpoly_p1_diff(a)
}

pub fn epoly_p3_value(a: &PadicRational, p: u64) -> Result<Residue> {
    PrimeContext::new(p)?.epoly_p3_value(a)
}

pub fn epoly_phi2_value(a: &PadicRational, p: u64) -> Result<Residue> {
    PrimeContext::new(p)?.epoly_phi2_value(a)
}

pub fn bpoly_phi1_value(a: &PadicRational, p: u64) -> Result<Residue> {
    PrimeContext::new(p)?.bpoly_phi1_value(a)
}

pub fn euler_number_mod(p: u64, e: u32) -> Result<Residue> {
    PrimeContext::new(p)?.euler_number_mod(e)
}

/// Second-order linear recurrences `x_{n+1} = c x_n + d x_{n-1}`, `x_0 = 0`, `x_1 = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LucasKind {
    Fibonacci = 0,
    Pell = 1,
    S4 = 2,
}

impl LucasKind {
    fn coefficients(self) -> (i128, i128) {
        match self {
            Self::Fibonacci => (1, 1),
            Self::Pell => (2, 1),
            Self::S4 => (4, -1),
        }
    }

    /// The `D` in the character `(D/p)` that picks the index `p - (D/p)`.
    pub fn discriminant_class(self) -> i128 {
        match self {
            Self::Fibonacci => 5,
            Self::Pell => 2,
            Self::S4 => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Fibonacci => "fibonacci",
            Self::Pell => "pell",
            Self::S4 => "s4",
        }
    }
}

pub fn lucas_sequence_mod(kind: LucasKind, n: u64, m: PrimePower) -> Residue {
    let (c, d) = kind.coefficients();
    let r = |v: i128| Residue::from_i128(v, m);
    let mul = |x: [Residue; 4], y: [Residue; 4]| {
        [
            x[0] * y[0] + x[1] * y[2],
            x[0] * y[1] + x[1] * y[3],
            x[2] * y[0] + x[3] * y[2],
            x[2] * y[1] + x[3] * y[3],
        ]
    };
    // [[c, d], [1, 0]]^n = [[x_{n+1}, d x_n], [x_n, d x_{n-1}]]
    let mut base = [r(c), r(d), r(1), r(0)];
    let mut acc = [r(1), r(0), r(0), r(1)];
    let mut n = n;
    while n > 0 {
        if n & 1 == 1 {
            acc = mul(acc, base);
        }
        base = mul(base, base);
        n >>= 1;
    }
    acc[2]
}

/// `x_{p-(D/p)} / p mod p`.
pub fn lucas_quotient(kind: LucasKind, p: u64) -> Result<Residue> {
    let d = kind.discriminant_class();
    if d % p as i128 == 0 {
        return Err(Error::BadPrime {
            p,
            reason: format!("{} quotient needs p ∤ {d}", kind.name()),
        });
    }
    let chi = jacobi_symbol(d, p as u128);
    let index = if chi == 1 { p - 1 } else { p + 1 };
    let x = lucas_sequence_mod(kind, index, PrimePower::new(p, 2)?);
    x.div_p_exact().map_err(|_| {
        Error::IndexTermNotDivisible(format!(
            "{} term {index} is not divisible by {p}",
            kind.name()
        ))
    })
}

/// `B_n mod p` for `0 <= n <= p-3` from `sum_{k<p} k^n ≡ p B_n (mod p^2)`.
pub fn bernoulli_mod_p(n: u64, p: u64) -> Result<Residue> {
    let m1 = PrimePower::new(p, 1)?;
    if n + 3 > p {
        return Err(Error::BoundExceeded {
            index: n as usize,
            bound: p as usize - 3,
        });
    }
    match n {
        0 => return Ok(Residue::one(m1)),
        1 => return Ok(-Residue::new(2, m1).inverse()?),
        n if n % 2 == 1 => return Ok(Residue::zero(m1)),
        _ => {}
    }
    let m2 = PrimePower::new(p, 2)?;
    let s: Residue = (1..p)
        .map(|k| Residue::new(k as u128, m2).pow(n as u128))
        .sum();
    s.div_p_exact()
}

/// `B_0, ..., B_{p-3} mod p` from the recurrence `sum_k C(n+1,k) B_k = 0`.
pub fn bernoulli_table_mod_p(p: u64) -> Result<Vec<Residue>> {
    let m = PrimePower::new(p, 1)?;
    let top = p as usize - 3;
    let r = |v: u64| Residue::new(v as u128, m);
    let mut b = vec![Residue::one(m)];
    for n in 1..=top {
        let mut c = Residue::one(m);
        let mut acc = Residue::zero(m);
        for (k, bk) in b.iter().enumerate() {
            acc = acc + c * *bk;
            c = c * r((n + 1 - k) as u64) * r(k as u64 + 1).inverse()?;
        }
        b.push(-acc * r(n as u64 + 1).inverse()?);
    }
    Ok(b)
}

/// `B_{p-2}(a) mod p` by expanding `sum_k C(p-2,k) B_k a^(p-2-k)`; the
/// slow cross-check route.
pub fn bpoly_p2_by_expansion(a: &PadicRational, p: u64) -> Result<Residue> {
    let m = PrimePower::new(p, 1)?;
    let b = bernoulli_table_mod_p(p)?;
    let x = embed_rational(a, m)?;
    let n = p as usize - 2;
    let r = |v: usize| Residue::new(v as u128, m);
    let mut acc = Residue::zero(m);
    let mut c = Residue::one(m);
    #[allow(clippy::needless_range_loop)]
    for k in 0..n {
        // B_{p-2} itself vanishes, so k stops at p-3.
        acc = acc + c * b[k] * x.pow((n - k) as u128);
        c = c * r(n - k) * r(k + 1).inverse()?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i128, d: i128) -> PadicRational {
        PadicRational::new(n, d).unwrap()
    }

    fn vals(xs: &[Residue]) -> Vec<u128> {
        xs.iter().map(|x| x.value()).collect()
    }

    #[test]
    fn harmonic_examples() {
        let t = harmonic_prefixes(5, 2).unwrap();
        assert_eq!(vals(t.h_all()), vec![0, 1, 14, 6, 0]);
        assert_eq!(vals(t.h2_all()), vec![0, 1, 20, 9, 20]);
        assert!(harmonic_prefixes(5, 1).unwrap().h(4).is_zero());
        assert!(harmonic_prefixes(7, 1).unwrap().h2(6).is_zero());
        assert!(harmonic_prefixes(5, 6).is_err());
    }

    #[test]
    fn inv_square_examples() {
        assert!(inv_square_partial(1, 7, 2, false).unwrap().is_zero());
        assert_eq!(inv_square_partial(3, 5, 1, false).unwrap().value(), 0);
        assert_eq!(inv_square_partial(3, 5, 1, true).unwrap().value(), 2);
    }

    #[test]
    fn inv_square_matches_direct_sum() {
        for p in [5u64, 7, 11] {
            let ctx = PrimeContext::new(p).unwrap();
            let m2 = ctx.pp(2);
            let top = 2 * (p * p) as u128 + 17;
            let (mut u, mut a) = (Residue::zero(m2), Residue::zero(m2));
            for m in 1..=top {
                // u, a hold sums over k < m
                for signed in [false, true] {
                    let want = if signed {
                        if m % 2 == 0 {
                            a
                        } else {
                            -a
                        }
                    } else {
                        u
                    };
                    assert_eq!(ctx.inv_square_partial(m, 2, signed).unwrap(), want);
                }
                if m % p as u128 != 0 {
                    let x = Residue::new(m, m2).inverse().unwrap();
                    u = u + x * x;
                    a = if m % 2 == 0 { a + x * x } else { a - x * x };
                }
            }
        }
    }

    #[test]
    fn full_range_inverse_squares_vanish() {
        for p in [5u64, 7, 11, 13, 101] {
            let pp = (p * p) as u128;
            assert!(inv_square_partial(pp.div_ceil(2), p, 2, false).unwrap().is_zero());
            assert!(inv_square_partial(pp, p, 2, false).unwrap().is_zero());
        }
    }

    #[test]
    fn fermat_examples() {
        assert_eq!(fermat_quotient(2, 5, 1).unwrap().value(), 3);
        assert_eq!(fermat_quotient(3, 5, 2).unwrap().value(), 16);
        assert_eq!(fermat_quotient(2, 7, 1).unwrap().value(), 2);
        assert!(matches!(fermat_quotient(10, 5, 1), Err(Error::NotCoprime { .. })));
        let ctx = PrimeContext::new(7).unwrap();
        assert_eq!(ctx.fermat_small(2, 1).unwrap().value(), 2);
    }

    #[test]
    fn bpoly_examples() {
        assert_eq!(bpoly_p2_value(&q(1, 3), 5).unwrap().value(), 3);
        assert!(bpoly_p2_value(&q(1, 1), 11).unwrap().is_zero());
        assert!(bpoly_p2_value(&q(1, 2), 7).unwrap().is_zero());
        assert!(matches!(bpoly_p2_value(&q(1, 5), 5), Err(Error::NotPIntegral(..))));

        assert_eq!(bpoly_p1_diff(&q(1, 2), 5).unwrap().value(), 1);
        assert!(bpoly_p1_diff(&q(1, 1), 13).unwrap().is_zero());
        assert_eq!(bpoly_p1_diff(&q(2, 5), 7).unwrap().value(), 6);
    }

    #[test]
    fn epoly_examples() {
        assert_eq!(epoly_p3_value(&q(1, 2), 5).unwrap().value(), 1);
        assert!(epoly_p3_value(&q(1, 1), 7).unwrap().is_zero());
        assert_eq!(epoly_p3_value(&q(1, 4), 7).unwrap().value(), 2);

        assert_eq!(epoly_phi2_value(&q(1, 2), 5).unwrap().value(), 11);
        assert!(epoly_phi2_value(&q(1, 1), 7).unwrap().is_zero());
        assert_eq!(bpoly_phi1_value(&q(1, 3), 5).unwrap().value(), 14);
    }

    #[test]
    fn phi2_reduces_to_p3_value() {
        for p in [5u64, 7, 11, 13, 31] {
            let ctx = PrimeContext::new(p).unwrap();
            for (n, d) in [(1, 2), (1, 3), (2, 3), (1, 4), (3, 7), (5, 1), (-4, 9)] {
                let a = q(n, d);
                if d % p as i128 == 0 {
                    continue;
                }
                assert_eq!(
                    ctx.epoly_phi2_value(&a).unwrap().reduce(1),
                    ctx.epoly_p3_value(&a).unwrap()
                );
            }
        }
    }

    #[test]
    fn epoly_representative_independent() {
        // m and m + p^2 give the same signed value up to the prescribed sign.
        for p in [5u64, 7, 13] {
            let ctx = PrimeContext::new(p).unwrap();
            let pp = (p * p) as u128;
            for m in 1..=pp {
                let a = ctx.inv_square_partial(m, 2, true).unwrap();
                let b = ctx.inv_square_partial(m + pp, 2, true).unwrap();
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn lucas_examples() {
        let m49 = PrimePower::new(7, 2).unwrap();
        let m25 = PrimePower::new(5, 2).unwrap();
        assert_eq!(lucas_sequence_mod(LucasKind::Fibonacci, 8, m49).value(), 21);
        assert_eq!(lucas_sequence_mod(LucasKind::Pell, 6, m49).value(), 21);
        assert_eq!(lucas_sequence_mod(LucasKind::S4, 6, m25).value(), 5);
        assert_eq!(lucas_sequence_mod(LucasKind::S4, 0, m25).value(), 0);

        assert_eq!(lucas_quotient(LucasKind::Fibonacci, 7).unwrap().value(), 3);
        assert_eq!(lucas_quotient(LucasKind::Pell, 7).unwrap().value(), 3);
        assert_eq!(lucas_quotient(LucasKind::S4, 5).unwrap().value(), 1);
        assert!(matches!(
            lucas_quotient(LucasKind::Fibonacci, 5),
            Err(Error::BadPrime { .. })
        ));
        for p in crate::primes::sieve_primes(7, 500) {
            for kind in [LucasKind::Fibonacci, LucasKind::Pell, LucasKind::S4] {
                lucas_quotient(kind, p).unwrap();
            }
        }
    }

    #[test]
    fn euler_number_examples() {
        assert_eq!(euler_number_mod(7, 1).unwrap().value(), 5);
        assert_eq!(euler_number_mod(5, 1).unwrap().value(), 4);
        assert_eq!(euler_number_mod(5, 2).unwrap().value(), 9);
    }

    #[test]
    fn bernoulli_routes_agree() {
        for p in crate::primes::sieve_primes(5, 199) {
            let table = bernoulli_table_mod_p(p).unwrap();
            for (n, b) in table.iter().enumerate() {
                assert_eq!(bernoulli_mod_p(n as u64, p).unwrap(), *b, "B_{n} mod {p}");
            }
        }
        // B_2 = 1/6, B_4 = -1/30
        assert_eq!(bernoulli_mod_p(2, 7).unwrap().value(), 6);
        assert_eq!(bernoulli_mod_p(4, 7).unwrap().value(), 3);
    }

    #[test]
    fn bpoly_expansion_cross_check() {
        for p in [5u64, 7, 11, 13, 53, 199] {
            let ctx = PrimeContext::new(p).unwrap();
            for (n, d) in [(1, 2), (1, 3), (2, 3), (1, 4), (5, 6), (7, 12), (3, 1), (0, 1)] {
                if d % p as i128 == 0 {
                    continue;
                }
                let a = q(n, d);
                assert_eq!(
                    ctx.bpoly_p2_value(&a).unwrap(),
                    bpoly_p2_by_expansion(&a, p).unwrap(),
                    "a = {a}, p = {p}"
                );
            }
        }
    }
}
