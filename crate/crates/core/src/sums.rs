//! Left-hand sides: the `C(-a,k) C(a-1,k)` family with harmonic weights, the
//! central binomial families, perturbed products and the conjectural sums.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::modring::{embed_rational, PadicRational, PrimePower, Residue, ValuatedUnit};
use crate::special::{HarmonicTables, PrimeContext};

/// Highest precision the summation routines accept.
pub const MAX_SUM_EXP: u32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WeightKind {
    One,
    H,
    H2,
    /// `H_k / k`, summed from `k = 1`.
    HoverK,
    Inv2k1,
    H2over2k1,
}

impl WeightKind {
    pub const ALL: [WeightKind; 6] = [
        Self::One,
        Self::H,
        Self::H2,
        Self::HoverK,
        Self::Inv2k1,
        Self::H2over2k1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::One => "one",
            Self::H => "h",
            Self::H2 => "h2",
            Self::HoverK => "h-over-k",
            Self::Inv2k1 => "inv2k1",
            Self::H2over2k1 => "h2-over-2k1",
        }
    }
}

impl fmt::Display for WeightKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WeightKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|w| w.name() == s)
            .ok_or_else(|| Error::Parse(s.to_string()))
    }
}

/// The four families `C(2k,k)^2/16^k`, `C(2k,k)C(3k,k)/27^k`,
/// `C(4k,2k)C(2k,k)/64^k`, `C(6k,3k)C(3k,k)/432^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CentralFamily {
    Cb2,
    Cb3,
    Cb4,
    Cb6,
}

impl CentralFamily {
    pub const ALL: [CentralFamily; 4] = [Self::Cb2, Self::Cb3, Self::Cb4, Self::Cb6];

    /// The generic parameter the family coincides with.
    pub fn parameter(self) -> PadicRational {
        let d = match self {
            Self::Cb2 => 2,
            Self::Cb3 => 3,
            Self::Cb4 => 4,
            Self::Cb6 => 6,
        };
        PadicRational::new(1, d).expect("nonzero denominator")
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Cb2 => "cb2",
            Self::Cb3 => "cb3",
            Self::Cb4 => "cb4",
            Self::Cb6 => "cb6",
        }
    }

    fn stream(self) -> (BinomialKind, u64) {
        match self {
            Self::Cb2 => (BinomialKind::Cb2, 16),
            Self::Cb3 => (BinomialKind::Cb3, 27),
            Self::Cb4 => (BinomialKind::Cb4, 64),
            Self::Cb6 => (BinomialKind::Cb6, 432),
        }
    }
}

impl FromStr for CentralFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    Generic(PadicRational),
    Central(CentralFamily),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PerturbKind {
    OnePerturb,
    TwoPerturb,
}

/// Result of a perturbed sum; `surrogate` is only produced for `TwoPerturb`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PerturbedValue {
    pub direct: Residue,
    pub surrogate: Option<Residue>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConjectureKind {
    C121Combo,
    C122,
    C123,
    C124,
    C125,
    StCkOverK,
}

impl ConjectureKind {
    pub fn exponent(self) -> u32 {
        match self {
            Self::C121Combo => 4,
            Self::C123 => 1,
            _ => 3,
        }
    }
}

fn check_exp(p: u64, e: u32, max: u32) -> Result<()> {
    if e == 0 || e > max {
        return Err(Error::InvalidModulus {
            p,
            e,
            reason: "precision out of range for this sum",
        });
    }
    Ok(())
}

/// Multiply a term known mod `p^(e+1)` by its weight and reduce to `p^e`.
///
/// The extra digit pays for the single division by `p` at `2k+1 = p`.
fn weighted_term(
    t: Residue,
    k: u64,
    w: WeightKind,
    tab: &HarmonicTables,
    e: u32,
) -> Result<Residue> {
    let p = tab.p();
    let odd = |x: Residue| -> Result<Residue> {
        let d = 2 * k + 1;
        if d == p {
            x.div_p_exact()
        } else {
            Ok((x * Residue::new(d as u128, x.modulus()).inverse()?).reduce(e))
        }
    };
    let v = match w {
        WeightKind::One => t.reduce(e),
        WeightKind::H => (t * tab.h(k)).reduce(e),
        WeightKind::H2 => (t * tab.h2(k)).reduce(e),
        WeightKind::HoverK => {
            if k == 0 {
                Residue::zero(t.modulus()).reduce(e)
            } else {
                (t * tab.h(k) * tab.inv(k)).reduce(e)
            }
        }
        WeightKind::Inv2k1 => odd(t).map_err(|_| {
            Error::NotPIntegral(format!("term {k} divided by {}", 2 * k + 1), p)
        })?,
        WeightKind::H2over2k1 => odd(t * tab.h2(k)).map_err(|_| {
            Error::NotPIntegral(format!("term {k} divided by {}", 2 * k + 1), p)
        })?,
    };
    Ok(v)
}

pub fn jacobi_like_sum_with(
    ctx: &PrimeContext,
    a: &PadicRational,
    w: WeightKind,
    e: u32,
) -> Result<Residue> {
    let p = ctx.p();
    check_exp(p, e, MAX_SUM_EXP)?;
    let tab = ctx.harmonic(e + 1);
    let m = tab.modulus();
    let x = embed_rational(a, m)?;
    let one = Residue::one(m);
    let mut t = one;
    let mut acc = Residue::zero(ctx.pp(e));
    for k in 0..p {
        if k > 0 {
            let kk = Residue::new(k as u128, m);
            let inv = tab.inv(k);
            t = t * (x - kk) * (one - x - kk) * inv * inv;
        }
        acc = acc + weighted_term(t, k, w, tab, e)?;
    }
    Ok(acc)
}

/// `sum_{k<p} C(-a,k) C(a-1,k) w(k) mod p^e`.
pub fn jacobi_like_sum(a: &PadicRational, w: WeightKind, p: u64, e: u32) -> Result<Residue> {
    jacobi_like_sum_with(&PrimeContext::new(p)?, a, w, e)
}

/// Integer binomial products built by exact ratio updates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum BinomialKind {
    /// `C(2k,k)`
    Central,
    /// `C(2k,k)^2`
    Cb2,
    /// `C(2k,k) C(3k,k)`
    Cb3,
    /// `C(4k,2k) C(2k,k)`
    Cb4,
    /// `C(6k,3k) C(3k,k)`
    Cb6,
}

impl BinomialKind {
    /// Numerator and denominator factors of the ratio from `k-1` to `k`.
    fn ratio(self, k: i128) -> (Vec<i128>, Vec<i128>) {
        match self {
            Self::Central => (vec![2 * k, 2 * k - 1], vec![k, k]),
            Self::Cb2 => (vec![2 * k, 2 * k - 1, 2 * k, 2 * k - 1], vec![k, k, k, k]),
            Self::Cb3 => (vec![3 * k, 3 * k - 1, 3 * k - 2], vec![k, k, k]),
            Self::Cb4 => (
                vec![4 * k, 4 * k - 1, 4 * k - 2, 4 * k - 3],
                vec![2 * k, 2 * k - 1, k, k],
            ),
            Self::Cb6 => (
                (0..6).map(|i| 6 * k - i).collect(),
                vec![3 * k, 3 * k - 1, 3 * k - 2, 2 * k, 2 * k - 1, k],
            ),
        }
    }
}

/// `binomial(k) / base^k` for `0 <= k < p`, with units tracked at `unit_prec`.
fn binomial_stream(
    kind: BinomialKind,
    base: u64,
    unit_prec: PrimePower,
) -> Result<Vec<ValuatedUnit>> {
    let p = unit_prec.p();
    let base_inv = ValuatedUnit::from_integer(base as i128, unit_prec);
    let mut cur = ValuatedUnit::one(unit_prec);
    let mut out = Vec::with_capacity(p as usize);
    out.push(cur);
    for k in 1..p as i128 {
        let (num, den) = kind.ratio(k);
        let mut n = ValuatedUnit::one(unit_prec);
        for f in num {
            n = n.mul(&ValuatedUnit::from_integer(f, unit_prec));
        }
        let mut d = base_inv;
        for f in den {
            d = d.mul(&ValuatedUnit::from_integer(f, unit_prec));
        }
        cur = cur.mul(&n).div(&d)?;
        out.push(cur);
    }
    Ok(out)
}

pub fn central_binomial_sum_with(
    ctx: &PrimeContext,
    family: CentralFamily,
    w: WeightKind,
    e: u32,
) -> Result<Residue> {
    check_exp(ctx.p(), e, MAX_SUM_EXP)?;
    let (kind, base) = family.stream();
    let terms = binomial_stream(kind, base, ctx.pp(e + 2))?;
    let tab = ctx.harmonic(e + 1);
    let mut acc = Residue::zero(ctx.pp(e));
    for (k, t) in terms.iter().enumerate() {
        acc = acc + weighted_term(t.collapse(tab.modulus()), k as u64, w, tab, e)?;
    }
    Ok(acc)
}

pub fn central_binomial_sum(family: CentralFamily, w: WeightKind, p: u64, e: u32) -> Result<Residue> {
    central_binomial_sum_with(&PrimeContext::new(p)?, family, w, e)
}

pub fn perturbed_sum_with(
    ctx: &PrimeContext,
    kind: PerturbKind,
    a: &PadicRational,
    e: u32,
) -> Result<PerturbedValue> {
    let p = ctx.p();
    let max = match kind {
        PerturbKind::OnePerturb => 2,
        PerturbKind::TwoPerturb => 3,
    };
    check_exp(p, e, max)?;
    let m = ctx.pp(e);
    let tab = ctx.harmonic(e);
    let x = embed_rational(a, m)?;
    let one = Residue::one(m);
    let pr = Residue::new(p as u128, m);
    let mut t = one;
    // (-1)^k C(p-1,k) = prod (1 - p/j); (-1)^k C(p-1,k) C(p+k,k) = prod (1 - p^2/j^2)
    let mut c = one;
    let mut direct = Residue::zero(m);
    let mut surrogate = Residue::zero(m);
    for k in 0..p {
        if k > 0 {
            let kk = Residue::new(k as u128, m);
            let inv = tab.inv(k);
            t = t * (x - kk) * (one - x - kk) * inv * inv;
            c = match kind {
                PerturbKind::OnePerturb => c * (one - pr * inv),
                PerturbKind::TwoPerturb => c * (one - pr * pr * inv * inv),
            };
        }
        direct = direct + c * t;
        surrogate = surrogate + (one - pr * pr * tab.h2(k)) * t;
    }
    Ok(PerturbedValue {
        direct,
        surrogate: (kind == PerturbKind::TwoPerturb).then_some(surrogate),
    })
}

pub fn perturbed_sum(kind: PerturbKind, a: &PadicRational, p: u64, e: u32) -> Result<PerturbedValue> {
    perturbed_sum_with(&PrimeContext::new(p)?, kind, a, e)
}

/// Directly sum `C(p-1,k) C(p+k,k) (-1)^k C(-a,k) C(a-1,k)` from integer
/// binomial ratios; a slower route used to test the product form.
pub fn two_perturb_by_binomials(a: &PadicRational, p: u64, e: u32) -> Result<Residue> {
    let ctx = PrimeContext::new(p)?;
    check_exp(p, e, 3)?;
    let m = ctx.pp(e);
    let tab = ctx.harmonic(e);
    let x = embed_rational(a, m)?;
    let one = Residue::one(m);
    let (mut t, mut b1, mut b2) = (one, one, one);
    let mut acc = Residue::zero(m);
    for k in 0..p {
        if k > 0 {
            let kk = Residue::new(k as u128, m);
            let inv = tab.inv(k);
            t = t * (x - kk) * (one - x - kk) * inv * inv;
            b1 = b1 * Residue::new((p - k) as u128, m) * inv;
            b2 = b2 * Residue::new((p + k) as u128, m) * inv;
        }
        acc = acc + Residue::sign(k, m) * b1 * b2 * t;
    }
    Ok(acc)
}

pub fn conjecture_sum_with(ctx: &PrimeContext, kind: ConjectureKind) -> Result<Residue> {
    let p = ctx.p();
    let e = kind.exponent();
    let target = ctx.pp(e);
    match kind {
        ConjectureKind::C121Combo => {
            let one = central_binomial_sum_with(ctx, CentralFamily::Cb3, WeightKind::One, 4)?;
            let odd = central_binomial_sum_with(ctx, CentralFamily::Cb3, WeightKind::Inv2k1, 4)?;
            Ok(Residue::new(2, target) * one - odd)
        }
        ConjectureKind::C122 => {
            let prec = ctx.pp(e + 2);
            let terms = binomial_stream(BinomialKind::Cb4, 48, prec)?;
            let mut acc = Residue::zero(target);
            for (k, t) in terms.iter().enumerate().skip(1) {
                let k = k as i128;
                // C(4k, 2k+1) = C(4k, 2k) * 2k / (2k+1)
                let v = t
                    .mul(&ValuatedUnit::from_integer(2 * k, prec))
                    .div(&ValuatedUnit::from_integer(2 * k + 1, prec))?;
                acc = acc + v.collapse(target);
            }
            Ok(acc)
        }
        ConjectureKind::C123 => {
            let terms = binomial_stream(BinomialKind::Cb2, 16, ctx.pp(3))?;
            let tab = ctx.harmonic(2);
            let mut acc = Residue::zero(target);
            for (k, t) in terms.iter().enumerate().take((p as usize - 3) / 2 + 1) {
                acc = acc + weighted_term(t.collapse(tab.modulus()), k as u64, WeightKind::H2over2k1, tab, 1)?;
            }
            Ok(acc)
        }
        ConjectureKind::C124 | ConjectureKind::C125 | ConjectureKind::StCkOverK => {
            let (bk, base) = match kind {
                ConjectureKind::C124 => (BinomialKind::Cb2, 16),
                _ => (BinomialKind::Central, 1),
            };
            let terms = binomial_stream(bk, base, ctx.pp(e + 2))?;
            let tab = ctx.harmonic(e);
            let mut acc = Residue::zero(target);
            for (k, t) in terms.iter().enumerate().skip(1) {
                let k = k as u64;
                let mut v = t.collapse(target) * tab.inv(k);
                if kind != ConjectureKind::StCkOverK {
                    v = v * tab.h2(k);
                }
                acc = acc + v;
            }
            Ok(acc)
        }
    }
}

pub fn conjecture_sum(kind: ConjectureKind, p: u64) -> Result<Residue> {
    conjecture_sum_with(&PrimeContext::new(p)?, kind)
}

/// `H_{p-1} / p^2 mod p^3`.
pub fn harmonic_quotient_with(ctx: &PrimeContext) -> Result<Residue> {
    ctx.harmonic(5).h(ctx.p() - 1).div_p_exact()?.div_p_exact()
}

pub fn harmonic_quotient(p: u64) -> Result<Residue> {
    harmonic_quotient_with(&PrimeContext::new(p)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i128, d: i128) -> PadicRational {
        PadicRational::new(n, d).unwrap()
    }

    #[test]
    fn jacobi_like_examples() {
        assert_eq!(jacobi_like_sum(&q(1, 2), WeightKind::H, 5, 2).unwrap().value(), 3);
        assert_eq!(jacobi_like_sum(&q(1, 2), WeightKind::HoverK, 5, 1).unwrap().value(), 1);
        assert_eq!(
            jacobi_like_sum(&q(1, 3), WeightKind::H2over2k1, 5, 1).unwrap().value(),
            1
        );
        assert!(matches!(
            jacobi_like_sum(&q(1, 5), WeightKind::One, 5, 1),
            Err(Error::NotPIntegral(..))
        ));
    }

    #[test]
    fn inv2k1_at_half_is_rejected() {
        // a ≡ 1/2 makes the middle term a unit, so dividing by p leaves Z_p.
        assert!(matches!(
            jacobi_like_sum(&q(1, 2), WeightKind::Inv2k1, 7, 1),
            Err(Error::NotPIntegral(..))
        ));
    }

    #[test]
    fn central_examples() {
        use CentralFamily::*;
        assert_eq!(central_binomial_sum(Cb2, WeightKind::One, 5, 2).unwrap().value(), 1);
        assert_eq!(central_binomial_sum(Cb2, WeightKind::H2, 5, 2).unwrap().value(), 14);
        assert_eq!(central_binomial_sum(Cb3, WeightKind::One, 5, 1).unwrap().value(), 4);
    }

    #[test]
    fn perturbed_examples() {
        let v = perturbed_sum(PerturbKind::OnePerturb, &q(1, 2), 5, 2).unwrap();
        assert_eq!(v.direct.value(), 11);
        assert!(v.surrogate.is_none());
        for p in [5u64, 7, 11] {
            let v = perturbed_sum(PerturbKind::OnePerturb, &q(1, 1), p, 2).unwrap();
            assert_eq!(v.direct.value(), 1);
            let v = perturbed_sum(PerturbKind::TwoPerturb, &q(1, 1), p, 3).unwrap();
            assert_eq!(v.direct.value(), 1);
            assert_eq!(v.surrogate.unwrap().value(), 1);
        }
    }

    #[test]
    fn two_perturb_routes_agree() {
        for p in [5u64, 7, 11, 13, 17] {
            for a in [q(1, 2), q(1, 3), q(2, 7), q(5, 1), q(-3, 4)] {
                if a.den() % p as i128 == 0 {
                    continue;
                }
                let v = perturbed_sum(PerturbKind::TwoPerturb, &a, p, 3).unwrap();
                assert_eq!(v.direct, two_perturb_by_binomials(&a, p, 3).unwrap());
                assert_eq!(v.direct, v.surrogate.unwrap());
            }
        }
    }

    #[test]
    fn conjecture_examples() {
        assert_eq!(conjecture_sum(ConjectureKind::C122, 5).unwrap().value(), 0);
        assert_eq!(conjecture_sum(ConjectureKind::C123, 5).unwrap().value(), 3);
        assert_eq!(conjecture_sum(ConjectureKind::StCkOverK, 5).unwrap().value(), 50);
    }

    #[test]
    fn harmonic_quotient_examples() {
        assert_eq!(harmonic_quotient(5).unwrap().value(), 73);
        assert_eq!(harmonic_quotient(7).unwrap().value(), 223);
        assert_eq!(harmonic_quotient(7).unwrap().reduce(1).value(), 6);
    }

    #[test]
    fn weight_names_round_trip() {
        for w in WeightKind::ALL {
            assert_eq!(w.name().parse::<WeightKind>().unwrap(), w);
        }
        for f in CentralFamily::ALL {
            assert_eq!(f.name().parse::<CentralFamily>().unwrap(), f);
        }
    }
}
