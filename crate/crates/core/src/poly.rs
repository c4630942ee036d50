//! Dense polynomials over GF(p), coefficients in ascending degree order.
//!
//! Only what extension-field arithmetic and modulus selection need.

use crate::arith::{add_mod, inv_mod, mul_mod, sub_mod};

/// Drop trailing zero coefficients. The zero polynomial is the empty vector.
pub fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let len = a.len().max(b.len());
    let out = (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            sub_mod(x, y, p)
        })
        .collect();
    trim(out)
}

pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = add_mod(out[i + j], mul_mod(x, y, p), p);
        }
    }
    trim(out)
}

/// Remainder of `a` modulo a nonzero `m`.
pub fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let dm = degree(m).expect("division by the zero polynomial");
    let lead_inv = inv_mod(m[dm], p).expect("leading coefficient is nonzero");
    let mut r = trim(a.to_vec());
    while let Some(dr) = degree(&r) {
        if dr < dm {
            break;
        }
        let c = mul_mod(r[dr], lead_inv, p);
        let shift = dr - dm;
        for (i, &mc) in m[..=dm].iter().enumerate() {
            r[i + shift] = sub_mod(r[i + shift], mul_mod(c, mc, p), p);
        }
        r = trim(r);
    }
    r
}

pub fn mul_mod_poly(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    rem(&mul(a, b, p), m, p)
}

pub fn pow_mod_poly(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = rem(&[1], m, p);
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod_poly(&acc, &b, m, p);
        }
        b = mul_mod_poly(&b, &b, m, p);
        e >>= 1;
    }
    acc
}

pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Irreducibility of a polynomial of degree `k >= 1` over GF(p): no
/// irreducible factor of degree `d <= k/2`, checked as
/// `gcd(f, t^(p^d) - t) = 1` for each such `d`.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let Some(k) = degree(f) else {
        return false;
    };
    if k == 0 {
        return false;
    }
    let t = vec![0, 1];
    let mut frob = t.clone();
    for _ in 1..=k / 2 {
        frob = pow_mod_poly(&frob, p, f, p);
        let g = gcd(f, &sub(&frob, &t, p), p);
        if degree(&g) != Some(0) {
            return false;
        }
    }
    true
}

/// The smallest monic irreducible polynomial of degree `k` over GF(p),
/// scanning the lower coefficients as base-`p` digits of a counter
/// (coefficient of `t^(k-1)` most significant).
pub fn smallest_irreducible(p: u64, k: usize) -> Vec<u64> {
    let mut lower = vec![0u64; k];
    loop {
        let mut f = lower.clone();
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
        // increment the counter; an irreducible always exists so this terminates
        let mut i = 0;
        loop {
            lower[i] += 1;
            if lower[i] < p {
                break;
            }
            lower[i] = 0;
            i += 1;
        }
    }
}
