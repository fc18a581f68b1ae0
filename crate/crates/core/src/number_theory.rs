//! Elementary number theory: totient, divisors, primality, 2-adic
//! decomposition and the searches for nearly doubled primes.
//!
//! Everything here is a pure function of its arguments. Arguments that feed
//! the cycle-index machinery stay far below 2^32, so trial division is all the
//! factorization that is ever needed. Primality, on the other hand, must cope
//! with numbers of the form `t·2^k + 1` well beyond 64 bits.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default number of random Miller-Rabin rounds above 2^64.
pub const DEFAULT_MR_ROUNDS: u32 = 40;

/// Witnesses that make Miller-Rabin deterministic for every n < 2^64.
const MR_WITNESSES_U64: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

const SMALL_PRIMES: [u32; 54] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193,
    197, 199, 211, 223, 227, 229, 233, 239, 241, 251,
];

/// `n = odd_part · 2^two_exponent` with `odd_part` odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddPartDecomposition {
    pub n: u64,
    pub odd_part: u64,
    pub two_exponent: u32,
}

/// A pair of primes `(q, p)` with `p = 2q - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrimePair {
    pub q: u64,
    pub p: u64,
}

fn require_positive(n: u64, what: &str) -> Result<()> {
    if n == 0 {
        Err(Error::domain(format!("{what} is undefined at 0")))
    } else {
        Ok(())
    }
}

/// Prime factorization by trial division, ascending primes.
pub fn factorize(mut n: u64) -> Result<Vec<(u64, u32)>> {
    require_positive(n, "factorization")?;
    let mut factors = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            factors.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        factors.push((n, 1));
    }
    Ok(factors)
}

pub fn euler_phi(n: u64) -> Result<u64> {
    require_positive(n, "euler_phi")?;
    let mut phi = n;
    for (p, _) in factorize(n)? {
        phi = phi / p * (p - 1);
    }
    Ok(phi)
}

/// Divisors of `n`, ascending.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    require_positive(n, "divisors")?;
    let mut divs = vec![1u64];
    for (p, e) in factorize(n)? {
        let current = divs.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..current {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    Ok(divs)
}

pub fn odd_part_decomposition(n: u64) -> Result<OddPartDecomposition> {
    require_positive(n, "odd_part_decomposition")?;
    let two_exponent = n.trailing_zeros();
    Ok(OddPartDecomposition {
        n,
        odd_part: n >> two_exponent,
        two_exponent,
    })
}

/// If `n = p^k` for a prime `p` and `k >= 1`, returns `(p, k)`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    match factorize(n).ok()?.as_slice() {
        [(p, k)] => Some((*p, *k)),
        _ => None,
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality for the full `u64` range.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &SMALL_PRIMES {
        let p = p as u64;
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let d_shift = (n - 1).trailing_zeros();
    let d = (n - 1) >> d_shift;
    'witness: for &a in &MR_WITNESSES_U64 {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..d_shift {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn strong_probable_prime(
    n: &BigUint,
    n_minus_one: &BigUint,
    d: &BigUint,
    s: u64,
    a: &BigUint,
) -> bool {
    let mut x = a.modpow(d, n);
    if x.is_one() || &x == n_minus_one {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if &x == n_minus_one {
            return true;
        }
        if x.is_one() {
            return false;
        }
    }
    false
}

/// Miller-Rabin primality test.
///
/// Exact for `n < 2^64`. Above that, base 2 plus `rounds` random bases, so a
/// composite slips through with probability at most `4^-rounds`.
pub fn is_prime(n: &BigUint, rounds: u32) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    for &p in &SMALL_PRIMES {
        if (n % p).is_zero() {
            return false;
        }
    }
    let n_minus_one = n - 1u32;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    if !strong_probable_prime(n, &n_minus_one, &d, s, &BigUint::from(2u32)) {
        return false;
    }
    let mut rng = rand::thread_rng();
    (0..rounds).all(|_| {
        // n > 2^64, so any base below 2^64 lies in [2, n - 2].
        let a = BigUint::from(rng.gen_range(3..u64::MAX));
        strong_probable_prime(n, &n_minus_one, &d, s, &a)
    })
}

fn sieve(limit: u64) -> Vec<bool> {
    let len = limit as usize + 1;
    let mut is_p = vec![true; len];
    is_p[0] = false;
    if len > 1 {
        is_p[1] = false;
    }
    let mut i = 2usize;
    while i * i < len {
        if is_p[i] {
            let mut j = i * i;
            while j < len {
                is_p[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    is_p
}

/// All prime pairs `(q, p = 2q - 1)` with `p <= limit`, ordered by `p`.
pub fn nearly_doubled_primes(limit: u64) -> Vec<PrimePair> {
    if limit < 3 {
        return Vec::new();
    }
    let is_p = sieve(limit);
    (2..=limit.div_ceil(2))
        .filter(|&q| is_p[q as usize] && is_p[(2 * q - 1) as usize])
        .map(|q| PrimePair { q, p: 2 * q - 1 })
        .collect()
}

/// Indices `k <= k_max` such that `ptilde·2^k + 1` and `ptilde·2^(k+1) + 1`
/// are both prime, i.e. `q = ptilde·2^k + 1` and `p = 2q - 1` form a
/// Cunningham chain of the second kind of length 2.
pub fn cunningham_pairs(ptilde: u64, k_max: u32, rounds: u32) -> Result<Vec<u32>> {
    if ptilde.is_even() {
        return Err(Error::domain(format!("ptilde must be odd, got {ptilde}")));
    }
    let base = BigUint::from(ptilde);
    let primality: Vec<bool> = (0..=k_max + 1)
        .map(|k| is_prime(&((&base << k) + 1u32), rounds))
        .collect();
    Ok((0..=k_max)
        .filter(|&k| primality[k as usize] && primality[k as usize + 1])
        .collect())
}
