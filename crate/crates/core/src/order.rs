//! Orders of `Q(y, x)`, `P1(y)` and `P2(x)`: a closed formula and a
//! brute-force search to check it against.

use crate::error::{Error, Result};
use crate::pascal::q_matrix;
use crate::scalar::{OrderResult, Scalar, SearchResult};
use crate::spectral::require_dimension;

/// Search budget used when over ℚ no cap is given.
pub const RATIONAL_DEFAULT_CAP: u64 = 1000;

/// Order of `Q(y, x)` from the closed formula:
///
/// * `x² ≠ 1`: the multiplicative order of `x²`;
/// * `x² = 1, y = 0`: 1, since `Q(0, ±1)` is the identity;
/// * `x² = 1, y ≠ 0`: the characteristic, or infinite in characteristic 0.
pub fn q_order<S: Scalar>(y: &S, x: &S, n: usize) -> Result<OrderResult> {
    require_dimension(n)?;
    if x.is_zero() {
        return Err(Error::ZeroParameter("x"));
    }
    let x2 = x.square();
    if !x2.is_one() {
        return x2.multiplicative_order();
    }
    if y.is_zero() {
        return Ok(OrderResult::Finite(1));
    }
    match S::characteristic(&x.field()) {
        0 => Ok(OrderResult::Infinite),
        p => Ok(OrderResult::Finite(p)),
    }
}

/// `characteristic · q^n` for finite fields (saturating), which bounds the
/// order of every Zhang-Liu matrix; [`RATIONAL_DEFAULT_CAP`] over ℚ.
pub fn default_cap<S: Scalar>(field: &S::Field, n: usize) -> u64 {
    match S::field_size(field) {
        Some(q) => {
            let qn = u32::try_from(n)
                .ok()
                .and_then(|n| q.checked_pow(n))
                .unwrap_or(u64::MAX);
            S::characteristic(field).saturating_mul(qn)
        }
        None => RATIONAL_DEFAULT_CAP,
    }
}

/// Multiply `Q(y, x)` into an accumulator until it becomes the identity,
/// giving up after `cap` factors.
pub fn q_order_bruteforce<S: Scalar>(y: &S, x: &S, n: usize, cap: u64) -> Result<SearchResult> {
    require_dimension(n)?;
    let q = q_matrix(y, x, n)?;
    let mut acc = q.clone();
    for m in 1..=cap {
        if acc.is_identity() {
            return Ok(SearchResult::Found(m));
        }
        if m < cap {
            acc = acc.mul(&q)?;
        }
    }
    Ok(SearchResult::Exceeded(cap))
}

/// Order of `P1(y) = Q(y, 1)`. Since `P1(y)^m = P1(my)`, this is 1 for
/// `y = 0` and the characteristic otherwise.
pub fn p1_order<S: Scalar>(y: &S, n: usize) -> Result<OrderResult> {
    require_dimension(n)?;
    if y.is_zero() {
        return Ok(OrderResult::Finite(1));
    }
    match S::characteristic(&y.field()) {
        0 => Ok(OrderResult::Infinite),
        p => Ok(OrderResult::Finite(p)),
    }
}

/// Order of `P2(x) = Q(1, x)`.
pub fn p2_order<S: Scalar>(x: &S, n: usize) -> Result<OrderResult> {
    q_order(&S::one(&x.field()), x, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Field, FieldElement};
    use crate::matrix::SquareMatrix;

    #[test]
    fn formula_examples() {
        let f5 = Field::prime(5).unwrap();
        assert_eq!(
            q_order(&f5.one(), &f5.from_int(2), 3),
            Ok(OrderResult::Finite(2))
        );
        let f3 = Field::prime(3).unwrap();
        assert_eq!(q_order(&f3.one(), &f3.one(), 2), Ok(OrderResult::Finite(3)));
        assert_eq!(
            q_order(&f3.zero(), &f3.from_int(2), 2),
            Ok(OrderResult::Finite(1))
        );
        let q = Field::rational();
        assert_eq!(
            q_order(&q.one(), &q.from_int(2), 2),
            Ok(OrderResult::Infinite)
        );
        assert_eq!(
            q_order(&q.one(), &q.from_int(-1), 2),
            Ok(OrderResult::Infinite)
        );
        assert_eq!(
            q_order(&q.zero(), &q.from_int(-1), 2),
            Ok(OrderResult::Finite(1))
        );
        assert_eq!(
            q_order(&f3.one(), &f3.zero(), 2),
            Err(Error::ZeroParameter("x"))
        );
        assert_eq!(
            q_order(&f3.one(), &f3.one(), 1),
            Err(Error::DimensionTooSmall { n: 1, min: 2 })
        );
    }

    #[test]
    fn bruteforce_examples() {
        let f7 = Field::prime(7).unwrap();
        let q = q_matrix(&f7.from_int(3), &f7.from_int(2), 2).unwrap();
        let q2 = q.mul(&q).unwrap();
        let expected: SquareMatrix<FieldElement> = SquareMatrix::from_rows(
            f7.clone(),
            vec![
                vec![f7.one(), f7.from_int(2)],
                vec![f7.zero(), f7.from_int(2)],
            ],
        )
        .unwrap();
        assert_eq!(q2, expected);
        assert_eq!(
            q_order_bruteforce(&f7.from_int(3), &f7.from_int(2), 2, 100),
            Ok(SearchResult::Found(3))
        );
        for f in ["gf:2", "gf:5", "gf:3^2"] {
            let f: Field = f.parse().unwrap();
            assert_eq!(
                q_order_bruteforce(&f.zero(), &f.one(), 4, 10),
                Ok(SearchResult::Found(1))
            );
        }
        let q = Field::rational();
        assert_eq!(
            q_order_bruteforce(&q.one(), &q.from_int(2), 2, 1000),
            Ok(SearchResult::Exceeded(1000))
        );
        assert_eq!(
            q_order_bruteforce(&f7.from_int(3), &f7.from_int(2), 2, 2),
            Ok(SearchResult::Exceeded(2))
        );
        assert_eq!(
            q_order_bruteforce(&f7.from_int(3), &f7.from_int(2), 2, 3),
            Ok(SearchResult::Found(3))
        );
    }

    #[test]
    fn specialization_examples() {
        let f5 = Field::prime(5).unwrap();
        assert_eq!(p1_order(&f5.zero(), 3), Ok(OrderResult::Finite(1)));
        assert_eq!(p1_order(&f5.from_int(2), 3), Ok(OrderResult::Finite(5)));
        let q = Field::rational();
        assert_eq!(p1_order(&q.one(), 2), Ok(OrderResult::Infinite));

        let f7 = Field::prime(7).unwrap();
        assert_eq!(p2_order(&f7.from_int(2), 2), Ok(OrderResult::Finite(3)));
        assert_eq!(p2_order(&f5.one(), 2), Ok(OrderResult::Finite(5)));
        assert_eq!(p2_order(&f5.from_int(3), 2), Ok(OrderResult::Finite(2)));
        assert_eq!(p2_order(&f5.zero(), 2), Err(Error::ZeroParameter("x")));
    }

    #[test]
    fn caps() {
        let f3 = Field::prime(3).unwrap();
        assert_eq!(default_cap::<FieldElement>(&f3, 2), 27);
        assert_eq!(default_cap::<FieldElement>(&Field::rational(), 2), 1000);
        let big = Field::prime(1_000_003).unwrap();
        assert_eq!(default_cap::<FieldElement>(&big, 8), u64::MAX);
    }
}
