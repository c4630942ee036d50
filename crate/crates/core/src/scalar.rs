//! The scalar abstraction all matrix code is written against.
//!
//! A [`Scalar`] is an element of some exact field. Unlike `num_traits::Zero`
//! and `num_traits::One`, the field can be a runtime value (a prime or a
//! modulus chosen from the command line), so constants are produced from a
//! field handle rather than from the type alone.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::arith::prime_divisors;
use crate::error::{Error, Result};

/// Multiplicative order of a group element or matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderResult {
    Finite(u64),
    Infinite,
}

impl OrderResult {
    pub fn finite(self) -> Option<u64> {
        match self {
            OrderResult::Finite(m) => Some(m),
            OrderResult::Infinite => None,
        }
    }
}

impl fmt::Display for OrderResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderResult::Finite(m) => write!(f, "{m}"),
            OrderResult::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for OrderResult {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(1))?;
        match self {
            OrderResult::Finite(m) => map.serialize_entry("order", m)?,
            OrderResult::Infinite => map.serialize_entry("order", "infinite")?,
        }
        map.end()
    }
}

/// Outcome of searching for the order by repeated multiplication.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SearchResult {
    Found(u64),
    Exceeded(u64),
}

impl SearchResult {
    /// Whether this search outcome is consistent with a closed-form order.
    /// An exhausted search only agrees with an infinite order.
    pub fn agrees_with(self, order: OrderResult) -> bool {
        match (self, order) {
            (SearchResult::Found(a), OrderResult::Finite(b)) => a == b,
            (SearchResult::Exceeded(_), OrderResult::Infinite) => true,
            _ => false,
        }
    }
}

impl fmt::Display for SearchResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchResult::Found(m) => write!(f, "{m}"),
            SearchResult::Exceeded(cap) => write!(f, "exceeded (cap {cap})"),
        }
    }
}

impl Serialize for SearchResult {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            SearchResult::Found(m) => {
                let mut map = s.serialize_map(Some(1))?;
                map.serialize_entry("order", m)?;
                map.end()
            }
            SearchResult::Exceeded(cap) => {
                let mut map = s.serialize_map(Some(2))?;
                map.serialize_entry("order", "exceeded")?;
                map.serialize_entry("cap", cap)?;
                map.end()
            }
        }
    }
}

/// An element of an exact field.
///
/// The arithmetic operators may panic if the operands live in different
/// fields; matrix code only ever combines entries of one field.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Runtime description of the ambient field.
    type Field: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn field(&self) -> Self::Field;
    fn zero(field: &Self::Field) -> Self;
    fn one(field: &Self::Field) -> Self;
    fn from_i64(field: &Self::Field, v: i64) -> Self;
    /// `0` for characteristic zero.
    fn characteristic(field: &Self::Field) -> u64;
    /// Number of elements, `None` when infinite.
    fn field_size(field: &Self::Field) -> Option<u64>;

    fn is_zero(&self) -> bool;
    fn inv(&self) -> Result<Self>;
    fn multiplicative_order(&self) -> Result<OrderResult>;

    fn is_one(&self) -> bool {
        *self == Self::one(&self.field())
    }

    /// Square-and-multiply. `pow(0)` is one for every base, zero included.
    fn pow(&self, e: i64) -> Result<Self> {
        let mut base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one(&self.field());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        Ok(acc)
    }

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }
}

/// Order of a nonzero `a` in a finite field with `q` elements: start at
/// `q - 1` and strip each prime factor while the power stays one.
pub fn order_in_finite_field<S: Scalar>(a: &S, q: u64) -> Result<OrderResult> {
    if a.is_zero() {
        return Err(Error::ZeroElement);
    }
    let mut m = q - 1;
    for l in prime_divisors(q - 1) {
        while m.is_multiple_of(l) && a.pow((m / l) as i64)?.is_one() {
            m /= l;
        }
    }
    Ok(OrderResult::Finite(m))
}

/// Marker for the field of rationals backing [`BigRational`] scalars.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Scalar for BigRational {
    type Field = Rationals;

    fn field(&self) -> Rationals {
        Rationals
    }

    fn zero(_: &Rationals) -> Self {
        <BigRational as Zero>::zero()
    }

    fn one(_: &Rationals) -> Self {
        <BigRational as One>::one()
    }

    fn from_i64(_: &Rationals, v: i64) -> Self {
        BigRational::from_integer(v.into())
    }

    fn characteristic(_: &Rationals) -> u64 {
        0
    }

    fn field_size(_: &Rationals) -> Option<u64> {
        None
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_one(&self) -> bool {
        One::is_one(self)
    }

    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }

    fn multiplicative_order(&self) -> Result<OrderResult> {
        rational_order(self)
    }
}

/// In ℚ only ±1 have finite order.
pub(crate) fn rational_order(a: &BigRational) -> Result<OrderResult> {
    if Zero::is_zero(a) {
        Err(Error::ZeroElement)
    } else if One::is_one(a) {
        Ok(OrderResult::Finite(1))
    } else if a.is_negative() && One::is_one(&-a.clone()) {
        Ok(OrderResult::Finite(2))
    } else {
        Ok(OrderResult::Infinite)
    }
}
