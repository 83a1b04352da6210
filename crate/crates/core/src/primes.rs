//! Primality and prime enumeration for the verification ranges.

/// Deterministic Miller-Rabin for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(small) {
            return n == small;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let n128 = n as u128;
    let pow = |mut b: u128, mut e: u64| {
        let mut r = 1u128;
        b %= n128;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % n128;
            }
            b = b * b % n128;
            e >>= 1;
        }
        r
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a as u128, d);
        if x == 1 || x == n128 - 1 {
            continue;
        }
        for _ in 1..s {
            x = x * x % n128;
            if x == n128 - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// All primes in `[max(5, p_min), p_max]`, ascending.
pub fn sieve_primes(p_min: u64, p_max: u64) -> Vec<u64> {
    let lo = p_min.max(5);
    if p_max < lo {
        return Vec::new();
    }
    let n = p_max as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    let mut i = 2usize;
    while i * i <= n {
        if !composite[i] {
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
        i += 1;
    }
    for (k, &c) in composite.iter().enumerate().skip(lo as usize) {
        if !c {
            out.push(k as u64);
        }
    }
    out
}
