//! Machine-integer helpers: primality, factorization and modular arithmetic.
//!
//! Everything here works by trial division, which is adequate below
//! [`MAX_FIELD_SIZE`].

/// Largest field size accepted anywhere in the crate. Trial division of
/// `q - 1` stays below a million steps under this bound.
pub const MAX_FIELD_SIZE: u64 = 1 << 40;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factors of `m` with multiplicity, in nondecreasing order.
/// `factor_integer(1)` is empty.
///
/// # Panics
/// If `m == 0`.
pub fn factor_integer(mut m: u64) -> Vec<u64> {
    assert!(m >= 1, "factor_integer requires m >= 1");
    let mut out = Vec::new();
    while m.is_multiple_of(2) {
        out.push(2);
        m /= 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= m {
        while m.is_multiple_of(d) {
            out.push(d);
            m /= d;
        }
        d += 2;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// Distinct prime divisors of `m`.
pub fn prime_divisors(m: u64) -> Vec<u64> {
    let mut f = factor_integer(m);
    f.dedup();
    f
}

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

#[inline]
pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

pub fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

/// Inverse of `a` modulo the prime `p`, or `None` for `a ≡ 0`.
pub fn inv_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return None;
    }
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1);
    Some(t0.rem_euclid(p as i128) as u64)
}

/// Reduce a signed integer into `[0, p)`.
pub fn reduce_i128(v: i128, p: u64) -> u64 {
    v.rem_euclid(p as i128) as u64
}
