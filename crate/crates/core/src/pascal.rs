//! Binomial coefficients inside a field and the Pascal-type matrix families.
//!
//! With one-based indices `i, j` and `j >= i`, the families are
//!
//! * `P1(y)`:   `y^(j-i) · C(j-1, i-1)`
//! * `P2(x)`:   `x^(j+i-2) · C(j-1, i-1)`
//! * `Q(y, x)`: `y^(j-i) · x^(j+i-2) · C(j-1, i-1)`
//! * `D(α)`:    diagonal, `α^(i-1)`
//!
//! and every entry below the diagonal is zero. Powers follow `0^0 = 1`.

use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::scalar::Scalar;

/// Rows of Pascal's triangle reduced into a field, grown on demand by the
/// additive recurrence so no integer division ever happens.
#[derive(Debug, Clone)]
pub struct BinomialTable<S: Scalar> {
    field: S::Field,
    rows: Vec<Vec<S>>,
}

impl<S: Scalar> BinomialTable<S> {
    pub fn new(field: &S::Field) -> Self {
        Self {
            field: field.clone(),
            rows: vec![vec![S::one(field)]],
        }
    }

    /// Image of `C(m, r)`; zero outside `0 <= r <= m`.
    pub fn get(&mut self, m: usize, r: i64) -> S {
        if r < 0 || r as usize > m {
            return S::zero(&self.field);
        }
        self.extend_to(m);
        self.rows[m][r as usize].clone()
    }

    fn extend_to(&mut self, m: usize) {
        while self.rows.len() <= m {
            let prev = self.rows.last().expect("row 0 exists");
            let len = prev.len();
            let mut next = Vec::with_capacity(len + 1);
            next.push(S::one(&self.field));
            for r in 1..len {
                next.push(prev[r - 1].clone() + prev[r].clone());
            }
            next.push(S::one(&self.field));
            self.rows.push(next);
        }
    }
}

/// `C(m, r)` mapped into `field`.
pub fn binomial<S: Scalar>(m: usize, r: i64, field: &S::Field) -> S {
    BinomialTable::<S>::new(field).get(m, r)
}

fn check_dimension(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::DimensionTooSmall { n, min: 1 })
    } else {
        Ok(())
    }
}

/// `[1, a, a², …, a^(count-1)]`.
fn powers<S: Scalar>(a: &S, count: usize) -> Vec<S> {
    let mut out = Vec::with_capacity(count);
    let mut acc = S::one(&a.field());
    for _ in 0..count {
        out.push(acc.clone());
        acc = acc * a.clone();
    }
    out
}

/// Shared builder: entry `(a, b)` (zero-based, `b >= a`) is
/// `y^(b-a) · x^(a+b) · C(b, a)`.
fn zhang_liu_like<S: Scalar>(y: &S, x: &S, n: usize) -> SquareMatrix<S> {
    let field = y.field();
    let y_pow = powers(y, n);
    let x_pow = powers(x, 2 * n - 1);
    let mut binom = BinomialTable::<S>::new(&field);
    SquareMatrix::from_fn(field.clone(), n, |a, b| {
        if b < a {
            S::zero(&field)
        } else {
            y_pow[b - a].clone() * x_pow[a + b].clone() * binom.get(b, a as i64)
        }
    })
}

/// Generalized Pascal matrix of the first kind. `y` may be zero.
pub fn p1_matrix<S: Scalar>(y: &S, n: usize) -> Result<SquareMatrix<S>> {
    check_dimension(n)?;
    Ok(zhang_liu_like(y, &S::one(&y.field()), n))
}

/// Pascal matrix of the second kind; `x` must be nonzero.
pub fn p2_matrix<S: Scalar>(x: &S, n: usize) -> Result<SquareMatrix<S>> {
    check_dimension(n)?;
    if x.is_zero() {
        return Err(Error::ZeroParameter("x"));
    }
    Ok(zhang_liu_like(&S::one(&x.field()), x, n))
}

/// Zhang-Liu matrix `Q(y, x)`; `x` must be nonzero, `y` is arbitrary.
pub fn q_matrix<S: Scalar>(y: &S, x: &S, n: usize) -> Result<SquareMatrix<S>> {
    check_dimension(n)?;
    if y.field() != x.field() {
        return Err(Error::MixedFields(
            format!("{:?}", y.field()),
            format!("{:?}", x.field()),
        ));
    }
    if x.is_zero() {
        return Err(Error::ZeroParameter("x"));
    }
    Ok(zhang_liu_like(y, x, n))
}

/// `diag(1, α, α², …, α^(n-1))`.
pub fn d_matrix<S: Scalar>(alpha: &S, n: usize) -> Result<SquareMatrix<S>> {
    check_dimension(n)?;
    Ok(SquareMatrix::diagonal(&alpha.field(), powers(alpha, n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Field, FieldElement};

    fn mat(field: &Field, rows: &[&[i64]]) -> SquareMatrix<FieldElement> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_int(v)).collect())
            .collect();
        SquareMatrix::from_rows(field.clone(), rows).unwrap()
    }

    #[test]
    fn binomial_examples() {
        let f5 = Field::prime(5).unwrap();
        assert_eq!(binomial::<FieldElement>(4, 2, &f5), f5.from_int(1));
        assert_eq!(binomial::<FieldElement>(5, 2, &f5), f5.zero());
        assert_eq!(binomial::<FieldElement>(7, 0, &f5), f5.one());
        assert_eq!(binomial::<FieldElement>(3, -1, &f5), f5.zero());
        assert_eq!(binomial::<FieldElement>(3, 4, &f5), f5.zero());
        let q = Field::rational();
        assert_eq!(binomial::<FieldElement>(10, 3, &q), q.from_int(120));
    }

    #[test]
    fn p1_examples() {
        let q = Field::rational();
        assert_eq!(
            p1_matrix(&q.one(), 3).unwrap(),
            mat(&q, &[&[1, 1, 1], &[0, 1, 2], &[0, 0, 1]])
        );
        let f5 = Field::prime(5).unwrap();
        assert!(p1_matrix(&f5.zero(), 3).unwrap().is_identity());
        assert_eq!(
            p1_matrix(&f5.from_int(4), 3).unwrap(),
            mat(&f5, &[&[1, 4, 1], &[0, 1, 3], &[0, 0, 1]])
        );
        assert_eq!(
            p1_matrix(&f5.one(), 0),
            Err(Error::DimensionTooSmall { n: 0, min: 1 })
        );
    }

    #[test]
    fn p2_examples() {
        let f7 = Field::prime(7).unwrap();
        assert_eq!(
            p2_matrix(&f7.from_int(2), 2).unwrap(),
            mat(&f7, &[&[1, 2], &[0, 4]])
        );
        assert_eq!(
            p2_matrix(&f7.one(), 3).unwrap(),
            mat(&f7, &[&[1, 1, 1], &[0, 1, 2], &[0, 0, 1]])
        );
        assert_eq!(p2_matrix(&f7.zero(), 2), Err(Error::ZeroParameter("x")));
    }

    #[test]
    fn q_examples() {
        let f5 = Field::prime(5).unwrap();
        assert_eq!(
            q_matrix(&f5.one(), &f5.from_int(2), 3).unwrap(),
            mat(&f5, &[&[1, 2, 4], &[0, 4, 1], &[0, 0, 1]])
        );
        let f7 = Field::prime(7).unwrap();
        assert_eq!(
            q_matrix(&f7.from_int(3), &f7.from_int(2), 2).unwrap(),
            mat(&f7, &[&[1, 6], &[0, 4]])
        );
        assert_eq!(
            q_matrix(&f7.one(), &f7.zero(), 2),
            Err(Error::ZeroParameter("x"))
        );
        assert!(matches!(
            q_matrix(&f5.one(), &f7.one(), 2),
            Err(Error::MixedFields(..))
        ));
    }

    #[test]
    fn d_examples() {
        let f5 = Field::prime(5).unwrap();
        assert_eq!(
            d_matrix(&f5.from_int(4), 3).unwrap(),
            mat(&f5, &[&[1, 0, 0], &[0, 4, 0], &[0, 0, 1]])
        );
        assert!(d_matrix(&f5.one(), 4).unwrap().is_identity());
        let f7 = Field::prime(7).unwrap();
        assert_eq!(
            d_matrix(&f7.from_int(4), 2).unwrap(),
            mat(&f7, &[&[1, 0], &[0, 4]])
        );
        // 0^0 = 1 in the corner
        assert_eq!(
            d_matrix(&f7.zero(), 2).unwrap(),
            mat(&f7, &[&[1, 0], &[0, 0]])
        );
    }

    #[test]
    fn one_by_one_matrices() {
        let f3 = Field::prime(3).unwrap();
        assert!(q_matrix(&f3.one(), &f3.from_int(2), 1)
            .unwrap()
            .is_identity());
    }
}
