//! WebAssembly bindings for the demo page.
//!
//! Each exported function takes plain strings and numbers and returns a JSON
//! string; errors come back as `{"error": "..."}` instead of exceptions so the
//! page can show them inline. The `*_json` functions hold the logic and are
//! tested natively.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use congrlab::checks::{self, SearchTarget};
use congrlab::primes::{is_prime, sieve_primes};
use congrlab::special::PrimeContext;
use congrlab::sums::{central_binomial_sum_with, jacobi_like_sum_with, CentralFamily, WeightKind};
use congrlab::PadicRational;

/// Keeps a single call under a second or so in the browser.
pub const GRID_P_MAX: u64 = 1000;
pub const SEARCH_P_MAX: u64 = 20_000;

#[derive(Serialize)]
struct Failure {
    error: String,
}

#[derive(Serialize)]
struct SumValue {
    p: u64,
    exponent: u32,
    modulus: u64,
    value: u64,
    /// Representative in `(-m/2, m/2]`.
    symmetric: i64,
}

#[derive(Serialize)]
struct GridCell {
    p: u64,
    a: Option<String>,
    modulus: u64,
    lhs: u64,
    rhs: u64,
    pass: bool,
}

#[derive(Serialize)]
struct Grid {
    check: String,
    status: String,
    exponent: u32,
    cells: Vec<GridCell>,
}

#[derive(Serialize)]
struct SearchPoint {
    p: u64,
    value: u64,
}

#[derive(Serialize)]
struct Search {
    target: String,
    zeros: Vec<u64>,
    points: Vec<SearchPoint>,
}

fn to_json<T: Serialize>(r: Result<T, String>) -> String {
    match r {
        Ok(v) => serde_json::to_string(&v),
        Err(error) => serde_json::to_string(&Failure { error }),
    }
    .expect("plain data serializes")
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn checked_prime(p: u64) -> Result<PrimeContext, String> {
    if p < 5 || !is_prime(p) {
        return Err(format!("p must be a prime >= 5, got {p}"));
    }
    PrimeContext::new(p).map_err(err)
}

/// One sum mod `p^e`. `family` is `generic`, `cb2`, `cb3`, `cb4` or `cb6`;
/// `a` is only read for `generic`.
pub fn eval_sum_json(p: u64, e: u32, family: &str, a: &str, weight: &str) -> String {
    to_json((|| {
        let ctx = checked_prime(p)?;
        let w: WeightKind = weight.parse().map_err(err)?;
        let v = if family == "generic" {
            let a: PadicRational = a.parse().map_err(err)?;
            jacobi_like_sum_with(&ctx, &a, w, e)
        } else {
            let f: CentralFamily = family.parse().map_err(err)?;
            central_binomial_sum_with(&ctx, f, w, e)
        }
        .map_err(err)?;
        Ok(SumValue {
            p,
            exponent: e,
            modulus: v.modulus().modulus() as u64,
            value: v.value() as u64,
            symmetric: v.symmetric() as i64,
        })
    })())
}

/// A check over every admissible prime in `[p_min, p_max]`. `a_list` is empty
/// for the standard arguments or a comma-separated list of `c/d`.
pub fn check_grid_json(name: &str, p_min: u64, p_max: u64, a_list: &str) -> String {
    to_json((|| {
        if p_min < 5 || p_min > p_max || p_max > GRID_P_MAX {
            return Err(format!("need 5 <= p_min <= p_max <= {GRID_P_MAX}"));
        }
        let desc = checks::find_check(name).map_err(err)?;
        let custom = a_list
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<PadicRational>().map_err(err))
            .collect::<Result<Vec<_>, _>>()?;
        let custom = (!custom.is_empty()).then_some(custom);
        let primes = sieve_primes(p_min, p_max);
        let results = checks::run_suite(&[desc], &primes, custom.as_deref()).map_err(err)?;
        Ok(Grid {
            check: desc.name.to_string(),
            status: desc.status.as_str().to_string(),
            exponent: desc.exponent,
            cells: results
                .iter()
                .map(|r| GridCell {
                    p: r.p,
                    a: r.a.map(|a| a.to_string()),
                    modulus: r.modulus as u64,
                    lhs: r.lhs.value() as u64,
                    rhs: r.rhs.value() as u64,
                    pass: r.pass,
                })
                .collect(),
        })
    })())
}

/// The special value mod `p` for every prime up to `p_max`, plus the zeros.
/// `target` is `euler-quarter` or `bernoulli-third`.
pub fn search_json(target: &str, p_max: u64) -> String {
    to_json((|| {
        if !(5..=SEARCH_P_MAX).contains(&p_max) {
            return Err(format!("need 5 <= p_max <= {SEARCH_P_MAX}"));
        }
        let t: SearchTarget = target.parse().map_err(err)?;
        let quarter = PadicRational::new(1, 4).map_err(err)?;
        let third = PadicRational::new(1, 3).map_err(err)?;
        let mut points = Vec::new();
        let mut zeros = Vec::new();
        for p in sieve_primes(5, p_max) {
            let ctx = PrimeContext::new(p).map_err(err)?;
            let v = match t {
                SearchTarget::EulerQuarter => ctx.epoly_p3_value(&quarter),
                SearchTarget::BernoulliThird => ctx.bpoly_p2_value(&third),
            }
            .map_err(err)?;
            if v.is_zero() {
                zeros.push(p);
            }
            points.push(SearchPoint {
                p,
                value: v.value() as u64,
            });
        }
        Ok(Search {
            target: target.to_string(),
            zeros,
            points,
        })
    })())
}

/// Names and summaries of every registered check, for the page's picker.
pub fn list_checks_json() -> String {
    #[derive(Serialize)]
    struct Entry {
        name: &'static str,
        exponent: u32,
        status: &'static str,
        summary: &'static str,
    }
    let entries: Vec<Entry> = checks::registry()
        .iter()
        .map(|c| Entry {
            name: c.name,
            exponent: c.exponent,
            status: c.status.as_str(),
            summary: c.summary,
        })
        .collect();
    serde_json::to_string(&entries).expect("plain data serializes")
}

#[wasm_bindgen]
pub fn eval_sum(p: u32, e: u32, family: &str, a: &str, weight: &str) -> String {
    eval_sum_json(p as u64, e, family, a, weight)
}

#[wasm_bindgen]
pub fn check_grid(name: &str, p_min: u32, p_max: u32, a_list: &str) -> String {
    check_grid_json(name, p_min as u64, p_max as u64, a_list)
}

#[wasm_bindgen]
pub fn search(target: &str, p_max: u32) -> String {
    search_json(target, p_max as u64)
}

#[wasm_bindgen]
pub fn list_checks() -> String {
    list_checks_json()
}
