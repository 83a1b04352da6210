//! Exact modular arithmetic for congruences involving harmonic numbers,
//! central binomial sums and Bernoulli/Euler polynomial values modulo prime
//! powers.

pub mod checks;
pub mod error;
pub mod modring;
pub mod oracle;
pub mod primes;
pub mod special;
pub mod sums;

pub use error::{Error, Result};
pub use modring::{PadicRational, PrimePower, Residue, ValuatedUnit};
pub use special::PrimeContext;
