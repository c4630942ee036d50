//! Runtime-selected exact fields: GF(p), GF(p^k) and ℚ.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, LazyLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{self, MAX_FIELD_SIZE};
use crate::error::{Error, Result};
use crate::poly;
use crate::scalar::{order_in_finite_field, rational_order, OrderResult, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Prime,
    Extension,
    Rational,
}

#[derive(Debug, PartialEq, Eq, Hash)]
enum Inner {
    Prime { p: u64 },
    // modulus is monic of degree k, ascending coefficients, length k + 1
    Extension { p: u64, modulus: Vec<u64> },
    Rational,
}

/// A field descriptor. Cheap to clone; equality is structural.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

static RATIONALS: LazyLock<Field> = LazyLock::new(|| Field(Arc::new(Inner::Rational)));

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Field {}

impl Field {
    /// GF(p).
    pub fn prime(p: u64) -> Result<Field> {
        if p > MAX_FIELD_SIZE {
            return Err(Error::FieldTooLarge(p.to_string()));
        }
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field(Arc::new(Inner::Prime { p })))
    }

    /// GF(p^k) as GF(p)[t]/(modulus). Without an explicit modulus the
    /// smallest monic irreducible of degree `k` is used, ordering candidates
    /// by their lower coefficients read as a base-`p` number with the
    /// `t^(k-1)` coefficient most significant.
    pub fn extension(p: u64, k: usize, modulus: Option<Vec<u64>>) -> Result<Field> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k < 2 {
            return Err(Error::InvalidModulus(format!(
                "extension degree must be at least 2, got {k}"
            )));
        }
        match u32::try_from(k).ok().and_then(|k| p.checked_pow(k)) {
            Some(q) if q <= MAX_FIELD_SIZE => {}
            _ => return Err(Error::FieldTooLarge(format!("{p}^{k}"))),
        }
        let modulus = match modulus {
            Some(m) => {
                if m.len() != k + 1 {
                    return Err(Error::InvalidModulus(format!(
                        "expected {} coefficients for degree {k}, got {}",
                        k + 1,
                        m.len()
                    )));
                }
                if let Some(&c) = m.iter().find(|&&c| c >= p) {
                    return Err(Error::InvalidModulus(format!(
                        "coefficient {c} is not reduced mod {p}"
                    )));
                }
                if m[k] != 1 {
                    return Err(Error::InvalidModulus("modulus must be monic".into()));
                }
                if !poly::is_irreducible(&m, p) {
                    return Err(Error::Reducible(format_poly(&m)));
                }
                m
            }
            None => poly::smallest_irreducible(p, k),
        };
        Ok(Field(Arc::new(Inner::Extension { p, modulus })))
    }

    /// ℚ. Every call returns the same shared descriptor.
    pub fn rational() -> Field {
        RATIONALS.clone()
    }

    pub fn kind(&self) -> FieldKind {
        match *self.0 {
            Inner::Prime { .. } => FieldKind::Prime,
            Inner::Extension { .. } => FieldKind::Extension,
            Inner::Rational => FieldKind::Rational,
        }
    }

    pub fn characteristic(&self) -> u64 {
        match *self.0 {
            Inner::Prime { p } | Inner::Extension { p, .. } => p,
            Inner::Rational => 0,
        }
    }

    pub fn degree(&self) -> usize {
        match &*self.0 {
            Inner::Extension { modulus, .. } => modulus.len() - 1,
            _ => 1,
        }
    }

    pub fn modulus(&self) -> Option<&[u64]> {
        match &*self.0 {
            Inner::Extension { modulus, .. } => Some(modulus),
            _ => None,
        }
    }

    /// Number of elements, `None` for ℚ.
    pub fn size(&self) -> Option<u64> {
        match &*self.0 {
            Inner::Prime { p } => Some(*p),
            Inner::Extension { p, modulus } => Some(p.pow(modulus.len() as u32 - 1)),
            Inner::Rational => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.size().is_some()
    }

    pub fn zero(&self) -> FieldElement {
        self.from_int(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    /// Image of an integer under the canonical map ℤ → F.
    pub fn from_int(&self, v: i64) -> FieldElement {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_bigint(&self, v: &BigInt) -> FieldElement {
        let repr = match &*self.0 {
            Inner::Prime { p } => Repr::Prime(reduce_bigint(v, *p)),
            Inner::Extension { p, modulus } => {
                let mut c = vec![0; modulus.len() - 1];
                c[0] = reduce_bigint(v, *p);
                Repr::Ext(c)
            }
            Inner::Rational => Repr::Rational(BigRational::from_integer(v.clone())),
        };
        self.wrap(repr)
    }

    /// `c0 + c1 t + c2 t^2 + ...` from unreduced, possibly negative
    /// coefficients. Outside extension fields at most one coefficient is
    /// accepted.
    pub fn from_coefficients(&self, coeffs: &[i64]) -> Result<FieldElement> {
        match &*self.0 {
            Inner::Extension { p, modulus } => {
                let k = modulus.len() - 1;
                if coeffs.len() > k {
                    return Err(Error::Parse(format!(
                        "element has {} coefficients but the field has degree {k}",
                        coeffs.len()
                    )));
                }
                let mut c = vec![0; k];
                for (dst, &src) in c.iter_mut().zip(coeffs) {
                    *dst = arith::reduce_i128(src as i128, *p);
                }
                Ok(self.wrap(Repr::Ext(c)))
            }
            _ => match coeffs {
                [] => Ok(self.zero()),
                [v] => Ok(self.from_int(*v)),
                _ => Err(Error::Parse(format!(
                    "coefficient vectors are only meaningful in extension fields, not {self}"
                ))),
            },
        }
    }

    /// `num / den` in this field.
    pub fn ratio(&self, num: &BigInt, den: &BigInt) -> Result<FieldElement> {
        let d = self.from_bigint(den);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match &*self.0 {
            Inner::Rational => {
                Ok(self.wrap(Repr::Rational(BigRational::new(num.clone(), den.clone()))))
            }
            _ => self.from_bigint(num).try_mul(&d.inv()?),
        }
    }

    /// Element with the given canonical index: the value itself in GF(p),
    /// `Σ c_i p^i` in GF(p^k).
    pub fn element_at(&self, index: u64) -> Result<FieldElement> {
        let size = self.size().ok_or(Error::InfiniteField)?;
        if index >= size {
            return Err(Error::Parse(format!(
                "index {index} out of range for {self}"
            )));
        }
        let p = self.characteristic();
        let repr = match self.kind() {
            FieldKind::Prime => Repr::Prime(index),
            _ => {
                let mut rest = index;
                let c = (0..self.degree())
                    .map(|_| {
                        let d = rest % p;
                        rest /= p;
                        d
                    })
                    .collect();
                Repr::Ext(c)
            }
        };
        Ok(self.wrap(repr))
    }

    /// All elements in canonical index order.
    pub fn elements(&self) -> Result<Vec<FieldElement>> {
        let size = self.size().ok_or(Error::InfiniteField)?;
        (0..size).map(|i| self.element_at(i)).collect()
    }

    /// Parse an element in this field's text form: a decimal integer in
    /// GF(p) (reduced mod p), `[c0,c1,...]` or a bare integer in GF(p^k),
    /// `a/b` or `a` in ℚ.
    pub fn parse_element(&self, text: &str) -> Result<FieldElement> {
        let s = text.trim();
        let bad = || Error::Parse(format!("cannot parse {text:?} as an element of {self}"));
        if let Some(inner) = s.strip_prefix('[') {
            let inner = inner.strip_suffix(']').ok_or_else(bad)?;
            if self.kind() != FieldKind::Extension {
                return Err(bad());
            }
            let coeffs = inner
                .split(',')
                .map(|c| c.trim().parse::<i64>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            return self.from_coefficients(&coeffs);
        }
        match s.split_once('/') {
            Some((n, d)) if self.kind() == FieldKind::Rational => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in {text:?}")));
                }
                self.ratio(&n, &d)
            }
            Some(_) => Err(bad()),
            None => {
                let v: BigInt = s.parse().map_err(|_| bad())?;
                Ok(self.from_bigint(&v))
            }
        }
    }

    fn wrap(&self, repr: Repr) -> FieldElement {
        FieldElement {
            field: self.clone(),
            repr,
        }
    }
}

fn reduce_bigint(v: &BigInt, p: u64) -> u64 {
    let r = v % BigInt::from(p);
    let r = if r < BigInt::zero() {
        r + BigInt::from(p)
    } else {
        r
    };
    r.to_u64().expect("residue fits in u64")
}

/// Human-readable polynomial in `t`, highest degree first.
pub fn format_poly(coeffs: &[u64]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| {
            let var = match i {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{i}"),
            };
            match (c, i) {
                (_, 0) => c.to_string(),
                (1, _) => var,
                _ => format!("{c}{var}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// Field spec grammar: `gf:p`, `gf:p^k`, `gf:p^k:m=c0,...,ck`, `qq`.
impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            Inner::Prime { p } => write!(f, "gf:{p}"),
            Inner::Extension { p, modulus } => {
                let m: Vec<String> = modulus.iter().map(u64::to_string).collect();
                write!(f, "gf:{p}^{}:m={}", modulus.len() - 1, m.join(","))
            }
            Inner::Rational => f.write_str("qq"),
        }
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({self})")
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Field> {
        let s = spec.trim();
        let bad = |why: &str| Error::Parse(format!("bad field spec {spec:?}: {why}"));
        if s == "qq" {
            return Ok(Field::rational());
        }
        let rest = s
            .strip_prefix("gf:")
            .ok_or_else(|| bad("expected gf:... or qq"))?;
        let (size, modulus) = match rest.split_once(':') {
            Some((size, m)) => {
                let list = m
                    .strip_prefix("m=")
                    .ok_or_else(|| bad("expected m=c0,...,ck after the size"))?;
                let coeffs = list
                    .split(',')
                    .map(|c| c.trim().parse::<u64>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| bad("modulus coefficients must be non-negative integers"))?;
                (size, Some(coeffs))
            }
            None => (rest, None),
        };
        let (p, k) = match size.split_once('^') {
            Some((p, k)) => (p, Some(k)),
            None => (size, None),
        };
        let p: u64 = p
            .parse()
            .map_err(|_| bad("characteristic is not an integer"))?;
        let k: usize = match k {
            Some(k) => k.parse().map_err(|_| bad("degree is not an integer"))?,
            None => 1,
        };
        match (k, modulus) {
            (0, _) => Err(bad("degree must be positive")),
            (1, None) => Field::prime(p),
            (1, Some(_)) => Err(bad("a modulus needs degree at least 2")),
            (k, m) => Field::extension(p, k, m),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Repr {
    Prime(u64),
    Ext(Vec<u64>),
    Rational(BigRational),
}

/// An element of a [`Field`], always stored in canonical form.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    repr: Repr,
}

impl FieldElement {
    pub fn parent(&self) -> &Field {
        &self.field
    }

    /// Residue in `[0, p)` for prime-field elements.
    pub fn as_residue(&self) -> Option<u64> {
        match self.repr {
            Repr::Prime(v) => Some(v),
            _ => None,
        }
    }

    /// Coefficients `c0..c(k-1)` for extension-field elements.
    pub fn coefficients(&self) -> Option<&[u64]> {
        match &self.repr {
            Repr::Ext(c) => Some(c),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.repr {
            Repr::Rational(r) => Some(r),
            _ => None,
        }
    }

    /// Position in [`Field::elements`]; `None` in ℚ.
    pub fn canonical_index(&self) -> Option<u64> {
        let p = self.field.characteristic();
        match &self.repr {
            Repr::Prime(v) => Some(*v),
            Repr::Ext(c) => Some(c.iter().rev().fold(0, |acc, &d| acc * p + d)),
            Repr::Rational(_) => None,
        }
    }

    fn check_same(&self, other: &FieldElement) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::MixedFields(
                self.field.to_string(),
                other.field.to_string(),
            ))
        }
    }

    fn with(&self, repr: Repr) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            repr,
        }
    }

    pub fn try_add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_same(other)?;
        let p = self.field.characteristic();
        Ok(self.with(match (&self.repr, &other.repr) {
            (Repr::Prime(a), Repr::Prime(b)) => Repr::Prime(arith::add_mod(*a, *b, p)),
            (Repr::Ext(a), Repr::Ext(b)) => Repr::Ext(
                a.iter()
                    .zip(b)
                    .map(|(&x, &y)| arith::add_mod(x, y, p))
                    .collect(),
            ),
            (Repr::Rational(a), Repr::Rational(b)) => Repr::Rational(a + b),
            _ => unreachable!("representation matches parent field"),
        }))
    }

    pub fn try_sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_same(other)?;
        self.try_add(&other.negated())
    }

    pub fn try_mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_same(other)?;
        let p = self.field.characteristic();
        Ok(self.with(match (&self.repr, &other.repr) {
            (Repr::Prime(a), Repr::Prime(b)) => Repr::Prime(arith::mul_mod(*a, *b, p)),
            (Repr::Ext(a), Repr::Ext(b)) => {
                let m = self.field.modulus().expect("extension field");
                let mut c = poly::mul_mod_poly(a, b, m, p);
                c.resize(a.len(), 0);
                Repr::Ext(c)
            }
            (Repr::Rational(a), Repr::Rational(b)) => Repr::Rational(a * b),
            _ => unreachable!("representation matches parent field"),
        }))
    }

    pub fn try_div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_same(other)?;
        self.try_mul(&other.inv()?)
    }

    pub fn negated(&self) -> FieldElement {
        let p = self.field.characteristic();
        self.with(match &self.repr {
            Repr::Prime(a) => Repr::Prime(arith::sub_mod(0, *a, p)),
            Repr::Ext(a) => Repr::Ext(a.iter().map(|&x| arith::sub_mod(0, x, p)).collect()),
            Repr::Rational(a) => Repr::Rational(-a),
        })
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Prime(v) => write!(f, "{v}"),
            Repr::Ext(c) => {
                let parts: Vec<String> = c.iter().map(u64::to_string).collect();
                write!(f, "[{}]", parts.join(","))
            }
            Repr::Rational(r) => write!(f, "{r}"),
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {}", self.field)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl std::ops::$trait for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.$try(&rhs).expect("operands in the same field")
            }
        }

        impl<'a> std::ops::$trait<&'a FieldElement> for &'a FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &'a FieldElement) -> FieldElement {
                self.$try(rhs).expect("operands in the same field")
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl std::ops::Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.negated()
    }
}

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.negated()
    }
}

impl Scalar for FieldElement {
    type Field = Field;

    fn field(&self) -> Field {
        self.field.clone()
    }

    fn zero(field: &Field) -> Self {
        field.zero()
    }

    fn one(field: &Field) -> Self {
        field.one()
    }

    fn from_i64(field: &Field, v: i64) -> Self {
        field.from_int(v)
    }

    fn characteristic(field: &Field) -> u64 {
        field.characteristic()
    }

    fn field_size(field: &Field) -> Option<u64> {
        field.size()
    }

    fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Prime(v) => *v == 0,
            Repr::Ext(c) => c.iter().all(|&x| x == 0),
            Repr::Rational(r) => Zero::is_zero(r),
        }
    }

    fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Prime(v) => *v == 1,
            Repr::Ext(c) => c[0] == 1 && c[1..].iter().all(|&x| x == 0),
            Repr::Rational(r) => One::is_one(r),
        }
    }

    fn inv(&self) -> Result<Self> {
        if Scalar::is_zero(self) {
            return Err(Error::DivisionByZero);
        }
        let p = self.field.characteristic();
        match &self.repr {
            Repr::Prime(v) => {
                Ok(self.with(Repr::Prime(arith::inv_mod(*v, p).expect("nonzero residue"))))
            }
            // a^(q-2) = a^(-1) in GF(q)
            Repr::Ext(_) => {
                let q = self.field.size().expect("finite");
                self.pow_unsigned(q - 2)
            }
            Repr::Rational(r) => Ok(self.with(Repr::Rational(r.recip()))),
        }
    }

    fn multiplicative_order(&self) -> Result<OrderResult> {
        match (&self.repr, self.field.size()) {
            (Repr::Rational(r), _) => rational_order(r),
            (_, Some(q)) => order_in_finite_field(self, q),
            (_, None) => unreachable!("only ℚ is infinite"),
        }
    }
}

impl FieldElement {
    fn pow_unsigned(&self, mut e: u64) -> Result<FieldElement> {
        let mut acc = self.field.one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(acc)
    }
}
