//! Named congruences: each pairs a left-hand-side evaluator with its
//! special-value right-hand side at a fixed modulus.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::modring::{
    batch_inverse, embed_rational, jacobi_symbol, least_nonneg_residue, PadicRational, PrimePower,
    Residue,
};
use crate::primes::{is_prime, sieve_primes};
use crate::special::{LucasKind, PrimeContext};
use crate::sums::{
    central_binomial_sum_with, conjecture_sum_with, harmonic_quotient_with, jacobi_like_sum_with,
    perturbed_sum_with, CentralFamily, ConjectureKind, PerturbKind, WeightKind,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Proven,
    Conjecture,
    /// Kept for the record; never counts as a failure.
    Recorded,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Proven => "proven",
            Self::Conjecture => "conjecture",
            Self::Recorded => "recorded",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Status {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "proven" => Ok(Self::Proven),
            "conjecture" => Ok(Self::Conjecture),
            "recorded" => Ok(Self::Recorded),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArgMode {
    None,
    /// The standard argument set, or a caller-supplied one.
    Standard,
    /// `c/d` for `1 <= c < d`, `gcd(c, d) = 1`.
    Fraction(i128),
}

type Evaluator = fn(&PrimeContext, Option<&PadicRational>) -> Result<(Residue, Residue)>;

#[derive(Clone, Copy)]
pub struct CheckDescriptor {
    pub name: &'static str,
    pub min_p: u64,
    pub exponent: u32,
    pub args: ArgMode,
    pub status: Status,
    /// Primes dividing any of these are skipped.
    pub skip_divisors: &'static [u64],
    pub summary: &'static str,
    eval: Evaluator,
}

impl CheckDescriptor {
    pub fn needs_a(&self) -> bool {
        self.args != ArgMode::None
    }

    pub fn admits(&self, p: u64) -> bool {
        p >= self.min_p && is_prime(p) && self.skip_divisors.iter().all(|d| d % p != 0)
    }

    /// Arguments this check runs over at `p`.
    pub fn arguments(&self, p: u64, custom: Option<&[PadicRational]>) -> Vec<Option<PadicRational>> {
        match self.args {
            ArgMode::None => vec![None],
            ArgMode::Standard => match custom {
                Some(list) => list
                    .iter()
                    .filter(|a| a.is_p_integral(p))
                    .map(|a| Some(*a))
                    .collect(),
                None => standard_arguments(p).into_iter().map(Some).collect(),
            },
            ArgMode::Fraction(d) => fraction_arguments(d).into_iter().map(Some).collect(),
        }
    }
}

impl fmt::Debug for CheckDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CheckDescriptor")
            .field("name", &self.name)
            .field("min_p", &self.min_p)
            .field("exponent", &self.exponent)
            .field("args", &self.args)
            .field("status", &self.status)
            .finish()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub p: u64,
    pub a: Option<PadicRational>,
    pub modulus: u128,
    pub lhs: Residue,
    pub rhs: Residue,
    pub pass: bool,
    pub status: Status,
}

fn fraction_arguments(d: i128) -> Vec<PadicRational> {
    (1..d)
        .filter(|c| num_integer::gcd(*c, d) == 1)
        .map(|c| PadicRational::new(c, d).expect("nonzero denominator"))
        .collect()
}

/// `{c/d : 1 <= c < d <= 12, gcd(c,d) = 1} ∪ {1..6}` with `p ∤ d`, plus the
/// integer `p` when no member reduces to 0 mod `p`.
pub fn standard_arguments(p: u64) -> Vec<PadicRational> {
    let mut out: Vec<PadicRational> = Vec::new();
    for d in 2..=12i128 {
        if d % p as i128 == 0 {
            continue;
        }
        out.extend(fraction_arguments(d));
    }
    out.extend((1..=6).map(PadicRational::integer));
    let degenerate = out
        .iter()
        .any(|a| least_nonneg_residue(a, p).map(|r| r == 0).unwrap_or(false));
    if !degenerate {
        out.push(PadicRational::integer(p as i128));
    }
    out
}

// ---- small helpers for right-hand sides ----

fn pp(ctx: &PrimeContext, e: u32) -> PrimePower {
    ctx.pp(e)
}

fn int(ctx: &PrimeContext, v: i128, e: u32) -> Residue {
    Residue::from_i128(v, pp(ctx, e))
}

fn frac(ctx: &PrimeContext, n: i128, d: i128, e: u32) -> Result<Residue> {
    embed_rational(&PadicRational::new(n, d)?, pp(ctx, e))
}

/// `(a/p)` as a residue.
fn legendre(ctx: &PrimeContext, a: i128, e: u32) -> Residue {
    int(ctx, jacobi_symbol(a, ctx.p() as u128) as i128, e)
}

/// `(p/3)`.
fn p_over_3(ctx: &PrimeContext, e: u32) -> Residue {
    int(ctx, jacobi_symbol(ctx.p() as i128, 3) as i128, e)
}

/// `(n/d) * p^k * x mod p^e`, where `x` only needs to be known to the
/// precision left after the total power of `p` is pulled out.
fn p_scaled(ctx: &PrimeContext, n: i128, d: i128, k: u32, x: Residue, e: u32) -> Result<Residue> {
    let p = ctx.p() as i128;
    let c = PadicRational::new(n, d)?;
    let (mut n, mut d) = (c.num(), c.den());
    let mut v = k as i32;
    if n == 0 {
        return Ok(Residue::zero(pp(ctx, e)));
    }
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    while d % p == 0 {
        d /= p;
        v -= 1;
    }
    if v < 0 {
        return Err(Error::NegativeValuation(ctx.p()));
    }
    let v = v as u32;
    if v >= e {
        return Ok(Residue::zero(pp(ctx, e)));
    }
    let need = e - v;
    if x.modulus().e() < need {
        return Err(Error::ValuationTooLow(format!(
            "value known mod {} but {need} digits are needed",
            x.modulus()
        )));
    }
    let unit = frac(ctx, n, d, need)?;
    (unit * x.reduce(need)).lift_times_p_pow(v)
}

/// `S / d mod p^e` where `p` may divide `d` once; `sum(e')` evaluates `S mod p^e'`.
fn divided(
    ctx: &PrimeContext,
    d: i128,
    e: u32,
    sum: impl Fn(u32) -> Result<Residue>,
) -> Result<Residue> {
    let p = ctx.p() as i128;
    if d % p == 0 {
        let s = sum(e + 1)?;
        (s * frac(ctx, 1, d / p, e + 1)?).div_p_exact()
    } else {
        Ok(sum(e)? * frac(ctx, 1, d, e)?)
    }
}

/// `B_n` at the precision a `p^2`-scaled coefficient may need; exact for `B_0`.
fn bernoulli_for_scaling(ctx: &PrimeContext, n: u64) -> Result<Residue> {
    if n == 0 {
        Ok(Residue::one(pp(ctx, 3)))
    } else {
        ctx.bernoulli_mod_p(n)
    }
}

fn arg(a: Option<&PadicRational>) -> Result<&PadicRational> {
    a.ok_or_else(|| Error::Parse("this check needs an argument a".into()))
}

fn lehmer(ctx: &PrimeContext, j: u64) -> Result<Residue> {
    let p = ctx.p();
    let m = pp(ctx, 2);
    let terms: Vec<Residue> = (1..=p / j)
        .map(|k| Residue::new((p - j * k) as u128, m))
        .collect();
    Ok(batch_inverse(&terms)?
        .into_iter()
        .fold(Residue::zero(m), |acc, t| acc + t))
}

fn inverse_square_direct(ctx: &PrimeContext, upto: u64) -> Result<Residue> {
    let p = ctx.p();
    let m = pp(ctx, 2);
    let terms: Vec<Residue> = (1..=upto)
        .filter(|k| k % p != 0)
        .map(|k| Residue::new(k as u128, m))
        .collect();
    Ok(batch_inverse(&terms)?
        .into_iter()
        .fold(Residue::zero(m), |acc, x| acc + x * x))
}

fn central(ctx: &PrimeContext, f: CentralFamily, w: WeightKind, e: u32) -> Result<Residue> {
    central_binomial_sum_with(ctx, f, w, e)
}

// ---- evaluators ----

fn wolst_h(ctx: &PrimeContext, _: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let lhs = ctx.harmonic(2).h(ctx.p() - 1);
    Ok((lhs, Residue::zero(pp(ctx, 2))))
}

fn wolst_h2(ctx: &PrimeContext, _: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let lhs = ctx.harmonic(1).h2(ctx.p() - 1);
    Ok((lhs, Residue::zero(pp(ctx, 1))))
}

fn rv_16(ctx: &PrimeContext, _: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    Ok((central(ctx, CentralFamily::Cb2, WeightKind::One, 2)?, legendre(ctx, -1, 2)))
}

fn rv_27(ctx: &PrimeContext, _: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    Ok((central(ctx, CentralFamily::Cb3, WeightKind::One, 2)?, p_over_3(ctx, 2)))
}

fn rv_64(ctx: &PrimeContext, _: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    Ok((central(ctx, CentralFamily::Cb4, WeightKind::One, 2)?, legendre(ctx, -2, 2)))
}

fn rv_432(ctx: &PrimeContext, _: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    Ok((central(ctx, CentralFamily::Cb6, WeightKind::One, 2)?, legendre(ctx, -1, 2)))
}

fn third() -> PadicRational {
    PadicRational::new(1, 3).expect("nonzero denominator")
}

fn quarter() -> PadicRational {
    PadicRational::new(1, 4).expect("nonzero denominator")
}

fn sun_11(ctx: &PrimeContext, _: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let lhs = central(ctx, CentralFamily::Cb2, WeightKind::One, 3)?;
    let rhs = legendre(ctx, -1, 3) - p_scaled(ctx, 1, 1, 2, ctx.euler_number_mod(1)?, 3)?;
    Ok((lhs, rhs))
}

fn sun_12(ctx: &PrimeContext, _: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let lhs = central(ctx, CentralFamily::Cb3, WeightKind::One, 3)?;
    let b = ctx.bpoly_p2_value(&third())?;
    Ok((lhs, p_over_3(ctx, 3) - p_scaled(ctx, 1, 3, 2, b, 3)?))
}

fn sun_13(ctx: &PrimeContext, _: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let lhs = central(ctx, CentralFamily::Cb4, WeightKind::One, 3)?;
    let e = ctx.epoly_p3_value(&quarter())?;
    Ok((lhs, legendre(ctx, -2, 3) - p_scaled(ctx, 3, 16, 2, e, 3)?))
}

fn sun_14(ctx: &PrimeContext, _: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let lhs = central(ctx, CentralFamily::Cb6, WeightKind::One, 3)?;
    let e = ctx.euler_number_mod(1)?;
    Ok((lhs, legendre(ctx, -1, 3) - p_scaled(ctx, 25, 9, 2, e, 3)?))
}

fn sun_15(ctx: &PrimeContext, _: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let lhs = central(ctx, CentralFamily::Cb3, WeightKind::Inv2k1, 3)?;
    let b = ctx.bpoly_p2_value(&third())?;
    Ok((lhs, p_over_3(ctx, 3) - p_scaled(ctx, 2, 3, 2, b, 3)?))
}

fn sun_16(ctx: &PrimeContext, _: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let lhs = central(ctx, CentralFamily::Cb4, WeightKind::Inv2k1, 3)?;
    let e = ctx.euler_number_mod(1)?;
    Ok((lhs, legendre(ctx, -1, 3) - p_scaled(ctx, 3, 1, 2, e, 3)?))
}

fn sun_17(ctx: &PrimeContext, _: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let lhs = central(ctx, CentralFamily::Cb6, WeightKind::Inv2k1, 2)?;
    Ok((lhs, p_over_3(ctx, 2)))
}

fn thm11_a(ctx: &PrimeContext, a: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let a = arg(a)?;
    let lhs = jacobi_like_sum_with(ctx, a, WeightKind::H, 2)?;
    let r = least_nonneg_residue(a, ctx.p())?;
    let x = embed_rational(a, pp(ctx, 2))?;
    let mut terms = Vec::new();
    for k in 1..r {
        terms.push(x - int(ctx, k as i128, 2));
    }
    let s = batch_inverse(&terms)?
        .into_iter()
        .fold(Residue::zero(pp(ctx, 2)), |acc, t| acc + t);
    let rhs = if r == 0 {
        Residue::zero(pp(ctx, 2))
    } else {
        Residue::sign(r - 1, pp(ctx, 2)) * int(ctx, 2, 2) * s
    };
    Ok((lhs, rhs))
}

fn thm11_b(ctx: &PrimeContext, a: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let a = arg(a)?;
    let p = ctx.p();
    let lhs = jacobi_like_sum_with(ctx, a, WeightKind::H, 2)?;
    let r = least_nonneg_residue(a, p)?;
    let s = if r == 0 { p - 1 } else { r - 1 };
    let h = ctx.harmonic(2).h(s);
    let diff = a.checked_sub(&PadicRational::integer(r as i128))?;
    let b = ctx.bpoly_p2_value(a)?;
    let shift = p_scaled(ctx, diff.num(), diff.den(), 0, b, 2)?;
    let rhs = Residue::sign(s, pp(ctx, 2)) * (int(ctx, 2, 2) * h + shift);
    Ok((lhs, rhs))
}

fn thm11_c(ctx: &PrimeContext, a: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let a = arg(a)?;
    let lhs = jacobi_like_sum_with(ctx, a, WeightKind::H, 1)?;
    let r = least_nonneg_residue(a, ctx.p())?;
    let rhs = Residue::sign(r, pp(ctx, 1)) * int(ctx, 2, 1) * ctx.bpoly_p1_diff(a)?;
    Ok((lhs, rhs))
}

fn neg_residue_index(ctx: &PrimeContext, a: &PadicRational) -> Result<u64> {
    least_nonneg_residue(&a.neg(), ctx.p())
}

fn rem11_hoverk(ctx: &PrimeContext, a: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let a = arg(a)?;
    let lhs = jacobi_like_sum_with(ctx, a, WeightKind::HoverK, 1)?;
    let rhs = Residue::sign(neg_residue_index(ctx, a)?, pp(ctx, 1)) * ctx.epoly_p3_value(a)?;
    Ok((lhs, rhs))
}

fn eq19(ctx: &PrimeContext, a: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let a = arg(a)?;
    let lhs = perturbed_sum_with(ctx, PerturbKind::OnePerturb, a, 2)?.direct;
    let inner = Residue::one(pp(ctx, 2)) + p_scaled(ctx, 2, 1, 1, ctx.bpoly_p1_diff(a)?, 2)?;
    let rhs = Residue::sign(neg_residue_index(ctx, a)?, pp(ctx, 2)) * inner;
    Ok((lhs, rhs))
}

/// `c1 * q + p * c2 * q^2 mod p^2` for a Fermat quotient known mod `p^2`.
fn quotient_poly(ctx: &PrimeContext, q: Residue, c1: (i128, i128), c2: (i128, i128)) -> Result<Residue> {
    let sq = (q * q).reduce(1);
    Ok(frac(ctx, c1.0, c1.1, 2)? * q + p_scaled(ctx, c2.0, c2.1, 1, sq, 2)?)
}

fn cor11_10(ctx: &PrimeContext, _: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let lhs = legendre(ctx, -1, 2) * central(ctx, CentralFamily::Cb2, WeightKind::H, 2)?;
    let q2 = ctx.fermat_small(2, 2)?;
    Ok((lhs, quotient_poly(ctx, q2, (-2, 1), (1, 1))?))
}

fn cor11_10_derived(ctx: &PrimeContext, _: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let lhs = legendre(ctx, -1, 2) * central(ctx, CentralFamily::Cb2, WeightKind::H, 2)?;
    let q2 = ctx.fermat_small(2, 2)?;
    Ok((lhs, quotient_poly(ctx, q2, (-4, 1), (2, 1))?))
}

fn cor11_11(ctx: &PrimeContext, _: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let lhs = p_over_3(ctx, 2) * central(ctx, CentralFamily::Cb3, WeightKind::H, 2)?;
    let q3 = ctx.fermat_small(3, 2)?;
    Ok((lhs, quotient_poly(ctx, q3, (-3, 1), (3, 2))?))
}

fn cor11_12(ctx: &PrimeContext, _: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let lhs = legendre(ctx, -2, 2) * central(ctx, CentralFamily::Cb4, WeightKind::H, 2)?;
    let q2 = ctx.fermat_small(2, 2)?;
    Ok((lhs, quotient_poly(ctx, q2, (-6, 1), (3, 1))?))
}

fn cor11_13(ctx: &PrimeContext, _: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let lhs = legendre(ctx, -1, 2) * central(ctx, CentralFamily::Cb6, WeightKind::H, 2)?;
    let q2 = ctx.fermat_small(2, 2)?;
    let q3 = ctx.fermat_small(3, 2)?;
    let rhs = quotient_poly(ctx, q3, (-3, 1), (3, 2))? + quotient_poly(ctx, q2, (-4, 1), (2, 1))?;
    Ok((lhs, rhs))
}

fn lehmer_25(ctx: &PrimeContext, _: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let q2 = ctx.fermat_small(2, 2)?;
    Ok((lehmer(ctx, 2)?, quotient_poly(ctx, q2, (1, 1), (-1, 2))?))
}

fn lehmer_26(ctx: &PrimeContext, _: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let q3 = ctx.fermat_small(3, 2)?;
    Ok((lehmer(ctx, 3)?, quotient_poly(ctx, q3, (1, 2), (-1, 4))?))
}

fn lehmer_27(ctx: &PrimeContext, _: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let q2 = ctx.fermat_small(2, 2)?;
    Ok((lehmer(ctx, 4)?, quotient_poly(ctx, q2, (3, 4), (-3, 8))?))
}

fn lehmer_28(ctx: &PrimeContext, _: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let q2 = ctx.fermat_small(2, 2)?;
    let q3 = ctx.fermat_small(3, 2)?;
    let rhs = quotient_poly(ctx, q3, (1, 4), (-1, 8))? + quotient_poly(ctx, q2, (1, 3), (-1, 6))?;
    Ok((lehmer(ctx, 6)?, rhs))
}

fn gs_lhs(ctx: &PrimeContext, a: Option<&PadicRational>) -> Result<(PadicRational, Residue)> {
    let a = *arg(a)?;
    Ok((a, ctx.bpoly_p1_diff(&a)?))
}

fn gs_d5(ctx: &PrimeContext, a: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let (a, lhs) = gs_lhs(ctx, a)?;
    let p = ctx.p() as i128;
    let chi = int(ctx, jacobi_symbol(a.num() * p, 5) as i128, 1);
    let f = ctx.lucas_quotient(LucasKind::Fibonacci)?;
    let q5 = ctx.fermat_small(5, 1)?;
    Ok((lhs, frac(ctx, 5, 4, 1)? * (chi * f + q5)))
}

fn gs_d8(ctx: &PrimeContext, a: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let (a, lhs) = gs_lhs(ctx, a)?;
    let p = ctx.p() as u128;
    let chi = int(ctx, jacobi_symbol(2, a.num() as u128 * p) as i128, 1);
    let pell = ctx.lucas_quotient(LucasKind::Pell)?;
    let q2 = ctx.fermat_small(2, 1)?;
    Ok((lhs, int(ctx, 2, 1) * chi * pell + int(ctx, 4, 1) * q2))
}

fn gs_d10(ctx: &PrimeContext, a: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let (a, lhs) = gs_lhs(ctx, a)?;
    let p = ctx.p() as i128;
    let chi = int(ctx, jacobi_symbol(a.num() * p, 5) as i128, 1);
    let f = ctx.lucas_quotient(LucasKind::Fibonacci)?;
    let q5 = ctx.fermat_small(5, 1)?;
    let q2 = ctx.fermat_small(2, 1)?;
    let rhs = frac(ctx, 15, 4, 1)? * chi * f + frac(ctx, 5, 4, 1)? * q5 + int(ctx, 2, 1) * q2;
    Ok((lhs, rhs))
}

fn gs_d12(ctx: &PrimeContext, a: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let (a, lhs) = gs_lhs(ctx, a)?;
    let chi = int(ctx, jacobi_symbol(3, a.num() as u128) as i128, 1);
    let s = ctx.lucas_quotient(LucasKind::S4)?;
    let q2 = ctx.fermat_small(2, 1)?;
    let q3 = ctx.fermat_small(3, 1)?;
    let rhs = int(ctx, 3, 1) * chi * s + int(ctx, 3, 1) * q2 + frac(ctx, 3, 2, 1)? * q3;
    Ok((lhs, rhs))
}

fn thm12_114(ctx: &PrimeContext, a: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let a = arg(a)?;
    let lhs = jacobi_like_sum_with(ctx, a, WeightKind::H2, 2)?;
    Ok((lhs, -ctx.epoly_phi2_value(a)?))
}

fn two_a_minus_one(ctx: &PrimeContext, a: &PadicRational, e: u32) -> Result<Residue> {
    let x = embed_rational(a, pp(ctx, e))?;
    Ok(int(ctx, 2, e) * x - Residue::one(pp(ctx, e)))
}

fn thm12_115(ctx: &PrimeContext, a: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let a = arg(a)?;
    let lhs = two_a_minus_one(ctx, a, 2)? * jacobi_like_sum_with(ctx, a, WeightKind::H2over2k1, 2)?;
    let p = ctx.p() as i128;
    Ok((lhs, int(ctx, 2 - 2 * p, 2) * ctx.bpoly_phi1_value(a)?))
}

fn thm12_116(ctx: &PrimeContext, a: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let a = arg(a)?;
    let lhs = jacobi_like_sum_with(ctx, a, WeightKind::H2, 1)?;
    Ok((lhs, -ctx.epoly_p3_value(a)?))
}

fn thm12_117(ctx: &PrimeContext, a: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let a = arg(a)?;
    let lhs = two_a_minus_one(ctx, a, 1)? * jacobi_like_sum_with(ctx, a, WeightKind::H2over2k1, 1)?;
    Ok((lhs, ctx.bpoly_p2_value(a)?))
}

fn cor12_118(ctx: &PrimeContext, _: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let lhs = central(ctx, CentralFamily::Cb4, WeightKind::H2, 2)?;
    Ok((lhs, -ctx.epoly_phi2_value(&quarter())?))
}

fn cor12_118_modp(ctx: &PrimeContext, _: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let lhs = central(ctx, CentralFamily::Cb4, WeightKind::H2, 1)?;
    Ok((lhs, -ctx.epoly_p3_value(&quarter())?))
}

fn minus_four_euler(ctx: &PrimeContext, e: u32) -> Result<Residue> {
    Ok(int(ctx, -4, e) * ctx.euler_number_mod(e)?)
}

fn cor12_119(ctx: &PrimeContext, _: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let lhs = central(ctx, CentralFamily::Cb2, WeightKind::H2, 2)?;
    Ok((lhs, minus_four_euler(ctx, 2)?))
}

fn cor12_119_cb4w(ctx: &PrimeContext, _: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let lhs = divided(ctx, 4, 2, |e| central(ctx, CentralFamily::Cb4, WeightKind::H2over2k1, e))?;
    Ok((lhs, minus_four_euler(ctx, 2)?))
}

fn cor12_119_cb6(ctx: &PrimeContext, _: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let lhs = divided(ctx, 5, 2, |e| central(ctx, CentralFamily::Cb6, WeightKind::H2, e))?;
    Ok((lhs, minus_four_euler(ctx, 2)?))
}

fn cor12_119_modp(ctx: &PrimeContext, _: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let lhs = central(ctx, CentralFamily::Cb2, WeightKind::H2, 1)?;
    Ok((lhs, minus_four_euler(ctx, 1)?))
}

fn third_phi_rhs(ctx: &PrimeContext) -> Result<Residue> {
    let p = ctx.p() as i128;
    Ok(int(ctx, 3 * p - 3, 2) * ctx.bpoly_phi1_value(&third())?)
}

fn cor12_120(ctx: &PrimeContext, _: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let lhs = central(ctx, CentralFamily::Cb3, WeightKind::H2, 2)?;
    Ok((lhs, third_phi_rhs(ctx)?))
}

fn cor12_120_cb3w(ctx: &PrimeContext, _: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let lhs = divided(ctx, 2, 2, |e| central(ctx, CentralFamily::Cb3, WeightKind::H2over2k1, e))?;
    Ok((lhs, third_phi_rhs(ctx)?))
}

fn cor12_120_cb6w(ctx: &PrimeContext, _: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let lhs = divided(ctx, 5, 2, |e| central(ctx, CentralFamily::Cb6, WeightKind::H2over2k1, e))?;
    Ok((lhs, third_phi_rhs(ctx)?))
}

fn cor12_120_modp(ctx: &PrimeContext, _: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let lhs = central(ctx, CentralFamily::Cb3, WeightKind::H2, 1)?;
    Ok((lhs, frac(ctx, -3, 2, 1)? * ctx.bpoly_p2_value(&third())?))
}

fn lem33(ctx: &PrimeContext, _: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let p = ctx.p();
    Ok((inverse_square_direct(ctx, (p * p - 1) / 2)?, Residue::zero(pp(ctx, 2))))
}

fn lem33_full(ctx: &PrimeContext, _: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let p = ctx.p();
    Ok((inverse_square_direct(ctx, p * p - 1)?, Residue::zero(pp(ctx, 2))))
}

fn rem12_identity(ctx: &PrimeContext, a: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let v = perturbed_sum_with(ctx, PerturbKind::TwoPerturb, arg(a)?, 3)?;
    Ok((v.direct, v.surrogate.expect("two-perturb returns a surrogate")))
}

fn rem15_hquot(ctx: &PrimeContext, _: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let lhs = harmonic_quotient_with(ctx)?.reduce(1);
    let b = ctx.bernoulli_mod_p(ctx.p() - 3)?;
    Ok((lhs, -b * frac(ctx, 1, 3, 1)?))
}

fn conj_121(ctx: &PrimeContext, _: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    Ok((conjecture_sum_with(ctx, ConjectureKind::C121Combo)?, p_over_3(ctx, 4)))
}

fn conj_122(ctx: &PrimeContext, _: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let b = ctx.bpoly_p2_value(&third())?;
    Ok((conjecture_sum_with(ctx, ConjectureKind::C122)?, p_scaled(ctx, 5, 12, 2, b, 3)?))
}

fn conj_123(ctx: &PrimeContext, _: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let b = ctx.bernoulli_mod_p(ctx.p() - 3)?;
    Ok((conjecture_sum_with(ctx, ConjectureKind::C123)?, int(ctx, -7, 1) * b))
}

fn conj_124(ctx: &PrimeContext, _: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let hq = harmonic_quotient_with(ctx)?;
    let b = bernoulli_for_scaling(ctx, ctx.p() - 5)?;
    let rhs = int(ctx, -12, 3) * hq + p_scaled(ctx, 7, 10, 2, b, 3)?;
    Ok((conjecture_sum_with(ctx, ConjectureKind::C124)?, rhs))
}

fn conj_125(ctx: &PrimeContext, _: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let hq = harmonic_quotient_with(ctx)?;
    let b = bernoulli_for_scaling(ctx, ctx.p() - 5)?;
    let rhs = frac(ctx, 2, 3, 3)? * hq + p_scaled(ctx, 76, 135, 2, b, 3)?;
    Ok((conjecture_sum_with(ctx, ConjectureKind::C125)?, rhs))
}

fn st_remark15(ctx: &PrimeContext, _: Option<&PadicRational>) -> Result<(Residue, Residue)> {
    let b = ctx.bernoulli_mod_p(ctx.p() - 3)?;
    Ok((conjecture_sum_with(ctx, ConjectureKind::StCkOverK)?, p_scaled(ctx, 8, 9, 2, b, 3)?))
}

#[allow(clippy::too_many_arguments)]
const fn check(
    name: &'static str,
    min_p: u64,
    exponent: u32,
    args: ArgMode,
    status: Status,
    skip_divisors: &'static [u64],
    summary: &'static str,
    eval: Evaluator,
) -> CheckDescriptor {
    CheckDescriptor {
        name,
        min_p,
        exponent,
        args,
        status,
        skip_divisors,
        summary,
        eval,
    }
}

use ArgMode::{Fraction, None as NoArg, Standard};
use Status::{Conjecture, Proven, Recorded};

static REGISTRY: &[CheckDescriptor] = &[
    check("wolst_h", 5, 2, NoArg, Proven, &[], "H_{p-1} = 0", wolst_h),
    check("wolst_h2", 5, 1, NoArg, Proven, &[], "H2_{p-1} = 0", wolst_h2),
    check("rv_16", 5, 2, NoArg, Proven, &[], "sum C(2k,k)^2/16^k = (-1/p)", rv_16),
    check("rv_27", 5, 2, NoArg, Proven, &[], "sum C(2k,k)C(3k,k)/27^k = (p/3)", rv_27),
    check("rv_64", 5, 2, NoArg, Proven, &[], "sum C(4k,2k)C(2k,k)/64^k = (-2/p)", rv_64),
    check("rv_432", 5, 2, NoArg, Proven, &[], "sum C(6k,3k)C(3k,k)/432^k = (-1/p)", rv_432),
    check("sun_11", 5, 3, NoArg, Proven, &[], "cb2 sum = (-1/p) - p^2 E_{p-3}", sun_11),
    check("sun_12", 5, 3, NoArg, Proven, &[], "cb3 sum = (p/3) - p^2 B_{p-2}(1/3)/3", sun_12),
    check("sun_13", 5, 3, NoArg, Proven, &[], "cb4 sum = (-2/p) - 3p^2 E_{p-3}(1/4)/16", sun_13),
    check("sun_14", 5, 3, NoArg, Proven, &[], "cb6 sum = (-1/p) - 25p^2 E_{p-3}/9", sun_14),
    check("sun_15", 5, 3, NoArg, Proven, &[], "cb3/(2k+1) sum = (p/3) - 2p^2 B_{p-2}(1/3)/3", sun_15),
    check("sun_16", 5, 3, NoArg, Proven, &[], "cb4/(2k+1) sum = (-1/p) - 3p^2 E_{p-3}", sun_16),
    check("sun_17", 5, 2, NoArg, Proven, &[], "cb6/(2k+1) sum = (p/3)", sun_17),
    check("thm11_a", 5, 2, Standard, Proven, &[], "H-weighted sum, first form", thm11_a),
    check("thm11_b", 5, 2, Standard, Proven, &[], "H-weighted sum, harmonic form", thm11_b),
    check("thm11_c", 5, 1, Standard, Proven, &[], "H-weighted sum mod p", thm11_c),
    check("rem11_hoverk", 5, 1, Standard, Proven, &[], "H/k-weighted sum", rem11_hoverk),
    check("eq19", 5, 2, Standard, Proven, &[], "sum with the extra C(p-1,k)(-1)^k", eq19),
    check("cor11_10", 5, 2, NoArg, Recorded, &[], "cb2 H sum, transcribed form", cor11_10),
    check("cor11_10_derived", 5, 2, NoArg, Proven, &[], "cb2 H sum = -4q2 + 2p q2^2", cor11_10_derived),
    check("cor11_11", 5, 2, NoArg, Proven, &[], "cb3 H sum", cor11_11),
    check("cor11_12", 5, 2, NoArg, Proven, &[], "cb4 H sum", cor11_12),
    check("cor11_13", 5, 2, NoArg, Proven, &[], "cb6 H sum", cor11_13),
    check("lehmer_25", 5, 2, NoArg, Proven, &[], "sum 1/(p-2k)", lehmer_25),
    check("lehmer_26", 5, 2, NoArg, Proven, &[], "sum 1/(p-3k)", lehmer_26),
    check("lehmer_27", 5, 2, NoArg, Proven, &[], "sum 1/(p-4k)", lehmer_27),
    check("lehmer_28", 7, 2, NoArg, Proven, &[], "sum 1/(p-6k)", lehmer_28),
    check("gs_d5", 5, 1, Fraction(5), Proven, &[5], "B_{p-1}(c/5) - B_{p-1}", gs_d5),
    check("gs_d8", 5, 1, Fraction(8), Proven, &[], "B_{p-1}(c/8) - B_{p-1}", gs_d8),
    check("gs_d10", 5, 1, Fraction(10), Proven, &[5], "B_{p-1}(c/10) - B_{p-1}", gs_d10),
    check("gs_d12", 5, 1, Fraction(12), Proven, &[], "B_{p-1}(c/12) - B_{p-1}", gs_d12),
    check("thm12_114", 5, 2, Standard, Proven, &[], "H2-weighted sum mod p^2", thm12_114),
    check("thm12_115", 5, 2, Standard, Proven, &[], "H2/(2k+1)-weighted sum mod p^2", thm12_115),
    check("thm12_116", 5, 1, Standard, Proven, &[], "H2-weighted sum mod p", thm12_116),
    check("thm12_117", 5, 1, Standard, Proven, &[], "H2/(2k+1)-weighted sum mod p", thm12_117),
    check("cor12_118", 5, 2, NoArg, Proven, &[], "cb4 H2 sum", cor12_118),
    check("cor12_118_modp", 5, 1, NoArg, Proven, &[], "cb4 H2 sum mod p", cor12_118_modp),
    check("cor12_119", 5, 2, NoArg, Proven, &[], "cb2 H2 sum", cor12_119),
    check("cor12_119_cb4w", 5, 2, NoArg, Proven, &[], "cb4 H2/(2k+1) sum / 4", cor12_119_cb4w),
    check("cor12_119_cb6", 5, 2, NoArg, Proven, &[], "cb6 H2 sum / 5", cor12_119_cb6),
    check("cor12_119_modp", 5, 1, NoArg, Proven, &[], "cb2 H2 sum mod p", cor12_119_modp),
    check("cor12_120", 5, 2, NoArg, Proven, &[], "cb3 H2 sum", cor12_120),
    check("cor12_120_cb3w", 5, 2, NoArg, Proven, &[], "cb3 H2/(2k+1) sum / 2", cor12_120_cb3w),
    check("cor12_120_cb6w", 5, 2, NoArg, Proven, &[], "cb6 H2/(2k+1) sum / 5", cor12_120_cb6w),
    check("cor12_120_modp", 5, 1, NoArg, Proven, &[], "cb3 H2 sum mod p", cor12_120_modp),
    check("lem33", 5, 2, NoArg, Proven, &[], "half-range inverse squares vanish", lem33),
    check("lem33_full", 5, 2, NoArg, Proven, &[], "full-range inverse squares vanish", lem33_full),
    check("rem12_identity", 5, 3, Standard, Proven, &[], "C(p-1,k)C(p+k,k) product form", rem12_identity),
    check("rem15_hquot", 5, 1, NoArg, Proven, &[], "H_{p-1}/p^2 = -B_{p-3}/3", rem15_hquot),
    check("conj_121", 5, 4, NoArg, Conjecture, &[], "2 cb3 - cb3/(2k+1) = (p/3)", conj_121),
    check("conj_122", 5, 3, NoArg, Conjecture, &[], "C(2k,k)C(4k,2k+1)/48^k", conj_122),
    check("conj_123", 5, 1, NoArg, Conjecture, &[], "cb2 H2/(2k+1) to (p-3)/2", conj_123),
    check("conj_124", 5, 3, NoArg, Conjecture, &[], "cb2 H2/k", conj_124),
    check("conj_125", 5, 3, NoArg, Conjecture, &[], "C(2k,k) H2/k", conj_125),
    check("st_remark15", 5, 3, NoArg, Proven, &[], "sum C(2k,k)/k", st_remark15),
];

pub fn registry() -> &'static [CheckDescriptor] {
    REGISTRY
}

pub fn find_check(name: &str) -> Result<&'static CheckDescriptor> {
    REGISTRY
        .iter()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::UnknownCheck(name.to_string()))
}

/// Expand `all` or a comma-separated list into descriptors, in registry order
/// for `all` and in the given order otherwise.
pub fn resolve_checks(list: &str, include_conjectures: bool) -> Result<Vec<&'static CheckDescriptor>> {
    if list.trim() == "all" {
        return Ok(REGISTRY
            .iter()
            .filter(|c| include_conjectures || c.status != Status::Conjecture)
            .collect());
    }
    let mut out: Vec<&'static CheckDescriptor> = Vec::new();
    for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let c = find_check(name)?;
        if !out.iter().any(|d| d.name == c.name) {
            out.push(c);
        }
    }
    Ok(out)
}

fn evaluate(
    desc: &CheckDescriptor,
    ctx: &PrimeContext,
    a: Option<&PadicRational>,
) -> Result<CheckResult> {
    let p = ctx.p();
    if !desc.admits(p) {
        return Err(Error::BadPrime {
            p,
            reason: format!("{} needs a prime p >= {} not dividing {:?}", desc.name, desc.min_p, desc.skip_divisors),
        });
    }
    if desc.needs_a() && a.is_none() {
        return Err(Error::Parse(format!("{} needs an argument a", desc.name)));
    }
    let a = if desc.needs_a() { a } else { None };
    let (lhs, rhs) = (desc.eval)(ctx, a)?;
    let m = pp(ctx, desc.exponent);
    debug_assert_eq!(lhs.modulus(), m, "{} lhs modulus", desc.name);
    debug_assert_eq!(rhs.modulus(), m, "{} rhs modulus", desc.name);
    Ok(CheckResult {
        name: desc.name.to_string(),
        p,
        a: a.copied(),
        modulus: m.modulus(),
        pass: lhs == rhs,
        lhs,
        rhs,
        status: desc.status,
    })
}

pub fn run_check_with(ctx: &PrimeContext, name: &str, a: Option<&PadicRational>) -> Result<CheckResult> {
    evaluate(find_check(name)?, ctx, a)
}

pub fn run_check(name: &str, p: u64, a: Option<&PadicRational>) -> Result<CheckResult> {
    let desc = find_check(name)?;
    if !desc.admits(p) {
        return Err(Error::BadPrime {
            p,
            reason: format!("{} is not admissible here", desc.name),
        });
    }
    evaluate(desc, &PrimeContext::new(p)?, a)
}

/// Every result for one prime, grouped per check in the order given.
/// Checks not admitting `p` contribute an empty group.
pub fn run_prime(
    checks: &[&CheckDescriptor],
    p: u64,
    custom_args: Option<&[PadicRational]>,
) -> Result<Vec<Vec<CheckResult>>> {
    let ctx = PrimeContext::new(p)?;
    let mut out = Vec::with_capacity(checks.len());
    for desc in checks {
        let mut group = Vec::new();
        if desc.admits(p) {
            for a in desc.arguments(p, custom_args) {
                group.push(evaluate(desc, &ctx, a.as_ref())?);
            }
        }
        out.push(group);
    }
    Ok(out)
}

/// Flatten per-prime groups (primes ascending) into check-major order.
pub fn interleave(per_prime: Vec<Vec<Vec<CheckResult>>>, n_checks: usize) -> Vec<CheckResult> {
    let mut columns: Vec<Vec<Vec<CheckResult>>> = vec![Vec::new(); n_checks];
    for groups in per_prime {
        for (i, g) in groups.into_iter().enumerate() {
            columns[i].push(g);
        }
    }
    columns.into_iter().flatten().flatten().collect()
}

/// Sequential suite run: results ordered by check, then prime, then argument.
pub fn run_suite(
    checks: &[&CheckDescriptor],
    primes: &[u64],
    custom_args: Option<&[PadicRational]>,
) -> Result<Vec<CheckResult>> {
    let per_prime = primes
        .iter()
        .map(|&p| run_prime(checks, p, custom_args))
        .collect::<Result<Vec<_>>>()?;
    Ok(interleave(per_prime, checks.len()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SearchTarget {
    /// `E_{p-3}(1/4) ≡ 0 (mod p)`
    EulerQuarter,
    /// `B_{p-2}(1/3) ≡ 0 (mod p)`
    BernoulliThird,
}

impl FromStr for SearchTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "euler-quarter" | "euler_quarter" => Ok(Self::EulerQuarter),
            "bernoulli-third" | "bernoulli_third" => Ok(Self::BernoulliThird),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

pub fn search_hit(target: SearchTarget, p: u64) -> Result<bool> {
    let ctx = PrimeContext::new(p)?;
    let v = match target {
        SearchTarget::EulerQuarter => ctx.epoly_p3_value(&quarter())?,
        SearchTarget::BernoulliThird => ctx.bpoly_p2_value(&third())?,
    };
    Ok(v.is_zero())
}

pub fn search_zero(target: SearchTarget, p_max: u64) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for p in sieve_primes(5, p_max) {
        if search_hit(target, p)? {
            out.push(p);
        }
    }
    Ok(out)
}
