//! Eigen-decomposition of Zhang-Liu matrices and the diagonalizability test.
//!
//! For `x² ≠ 1` and `z = yx / (x² − 1)`,
//! `Q(y, x) = P1(z) · D(x²) · P1(−z)` with `P1(−z) = P1(z)⁻¹`, so the
//! columns of `P1(z)` are eigenvectors with eigenvalues `1, x², x⁴, …`.

use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::pascal::{d_matrix, p1_matrix, q_matrix};
use crate::scalar::Scalar;

/// Statements about `Q(y, x)` are only made for `n >= 2`.
pub(crate) fn require_dimension(n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::DimensionTooSmall { n, min: 2 })
    } else {
        Ok(())
    }
}

fn require_nonzero<S: Scalar>(x: &S) -> Result<()> {
    if x.is_zero() {
        Err(Error::ZeroParameter("x"))
    } else {
        Ok(())
    }
}

/// `yx / (x² − 1)`.
pub fn z_parameter<S: Scalar>(y: &S, x: &S) -> Result<S> {
    require_nonzero(x)?;
    if y.field() != x.field() {
        return Err(Error::MixedFields(
            format!("{:?}", y.field()),
            format!("{:?}", x.field()),
        ));
    }
    let denom = x.square() - S::one(&x.field());
    if denom.is_zero() {
        return Err(Error::SingularParameter);
    }
    Ok(y.clone() * x.clone() * denom.inv()?)
}

/// `Q(y, x) = left · middle · right` with `left = P1(z)`, `middle = D(x²)`
/// and `right = P1(−z)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition<S: Scalar> {
    pub z: S,
    pub left: SquareMatrix<S>,
    pub middle: SquareMatrix<S>,
    pub right: SquareMatrix<S>,
    pub source_y: S,
    pub source_x: S,
    pub n: usize,
}

pub fn factorize_q<S: Scalar>(y: &S, x: &S, n: usize) -> Result<Decomposition<S>> {
    require_dimension(n)?;
    let z = z_parameter(y, x)?;
    Ok(Decomposition {
        left: p1_matrix(&z, n)?,
        middle: d_matrix(&x.square(), n)?,
        right: p1_matrix(&-z.clone(), n)?,
        z,
        source_y: y.clone(),
        source_x: x.clone(),
        n,
    })
}

/// Recompute the triple product against `Q(y, x)` and check that the outer
/// factors are mutually inverse.
pub fn verify_factorization<S: Scalar>(d: &Decomposition<S>) -> bool {
    let check = || -> Result<bool> {
        let q = q_matrix(&d.source_y, &d.source_x, d.n)?;
        let product = d.left.mul(&d.middle)?.mul(&d.right)?;
        let inverse_pair = d.left.mul(&d.right)?;
        Ok(product == q && inverse_pair.is_identity())
    };
    check().unwrap_or(false)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Eigenpair<S: Scalar> {
    pub value: S,
    pub vector: Vec<S>,
}

/// The `n` eigenpairs `((x²)^(j-1), column j of P1(z))`.
pub fn eigenpairs<S: Scalar>(y: &S, x: &S, n: usize) -> Result<Vec<Eigenpair<S>>> {
    let d = factorize_q(y, x, n)?;
    let values = d.middle.diagonal_entries();
    Ok(values
        .into_iter()
        .enumerate()
        .map(|(j, value)| Eigenpair {
            value,
            vector: d.left.column(j),
        })
        .collect())
}

/// Closed-form criterion: diagonalizable iff `x² ≠ 1` or `y = 0`.
pub fn is_diagonalizable<S: Scalar>(y: &S, x: &S, n: usize) -> Result<bool> {
    require_dimension(n)?;
    require_nonzero(x)?;
    Ok(!x.square().is_one() || y.is_zero())
}

/// Rank-based check for an upper-triangular matrix: its eigenvalues are the
/// diagonal entries, and it is diagonalizable iff the geometric
/// multiplicities `n − rank(M − λI)` over the distinct eigenvalues sum to `n`.
pub fn diagonalizable_oracle<S: Scalar>(m: &SquareMatrix<S>) -> Result<bool> {
    if let Some((i, j)) = m.first_subdiagonal_nonzero() {
        return Err(Error::NotTriangular(i, j));
    }
    let mut distinct: Vec<S> = Vec::new();
    for d in m.diagonal_entries() {
        if !distinct.contains(&d) {
            distinct.push(d);
        }
    }
    let n = m.n();
    let total: usize = distinct.iter().map(|l| n - m.shift(l).rank()).sum();
    Ok(total == n)
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
    fn z_examples() {
        let f5 = Field::prime(5).unwrap();
        assert_eq!(
            z_parameter(&f5.one(), &f5.from_int(2)).unwrap(),
            f5.from_int(4)
        );
        let f7 = Field::prime(7).unwrap();
        assert_eq!(
            z_parameter(&f7.from_int(3), &f7.from_int(2)).unwrap(),
            f7.from_int(2)
        );
        assert_eq!(z_parameter(&f7.zero(), &f7.from_int(3)).unwrap(), f7.zero());
        assert_eq!(
            z_parameter(&f7.one(), &f7.from_int(6)),
            Err(Error::SingularParameter)
        );
        assert_eq!(
            z_parameter(&f7.one(), &f7.zero()),
            Err(Error::ZeroParameter("x"))
        );
        let q = Field::rational();
        assert_eq!(
            z_parameter(&q.parse_element("1/2").unwrap(), &q.from_int(3)).unwrap(),
            q.parse_element("3/16").unwrap()
        );
    }

    #[test]
    fn characteristic_two_collapse() {
        // 1 = −1 in GF(2^k); only x = 1 is singular
        let f4 = Field::extension(2, 2, None).unwrap();
        for x in f4.elements().unwrap().into_iter().skip(1) {
            let singular = z_parameter(&f4.one(), &x) == Err(Error::SingularParameter);
            assert_eq!(singular, x.is_one());
        }
    }

    #[test]
    fn factorization_examples() {
        let f5 = Field::prime(5).unwrap();
        let d = factorize_q(&f5.one(), &f5.from_int(2), 3).unwrap();
        assert_eq!(d.z, f5.from_int(4));
        assert_eq!(d.left, mat(&f5, &[&[1, 4, 1], &[0, 1, 3], &[0, 0, 1]]));
        assert_eq!(d.middle, mat(&f5, &[&[1, 0, 0], &[0, 4, 0], &[0, 0, 1]]));
        assert_eq!(d.right, mat(&f5, &[&[1, 1, 1], &[0, 1, 2], &[0, 0, 1]]));
        assert!(verify_factorization(&d));

        let mut tampered = d.clone();
        tampered.middle = SquareMatrix::identity(&f5, 3);
        assert!(!verify_factorization(&tampered));

        let f7 = Field::prime(7).unwrap();
        let d = factorize_q(&f7.from_int(3), &f7.from_int(2), 2).unwrap();
        assert_eq!(d.left, mat(&f7, &[&[1, 2], &[0, 1]]));
        assert_eq!(d.middle, mat(&f7, &[&[1, 0], &[0, 4]]));
        assert_eq!(d.right, mat(&f7, &[&[1, 5], &[0, 1]]));
        assert_eq!(
            d.left.mul(&d.middle).unwrap().mul(&d.right).unwrap(),
            mat(&f7, &[&[1, 6], &[0, 4]])
        );

        let d = factorize_q(&f5.zero(), &f5.from_int(2), 2).unwrap();
        assert!(d.left.is_identity() && d.right.is_identity());
        assert_eq!(d.middle, mat(&f5, &[&[1, 0], &[0, 4]]));

        let d = factorize_q(&f7.zero(), &f7.from_int(3), 4).unwrap();
        assert!(verify_factorization(&d));
    }

    #[test]
    fn factorization_preconditions() {
        let f5 = Field::prime(5).unwrap();
        assert_eq!(
            factorize_q(&f5.one(), &f5.from_int(2), 1),
            Err(Error::DimensionTooSmall { n: 1, min: 2 })
        );
        assert_eq!(
            factorize_q(&f5.one(), &f5.from_int(4), 3),
            Err(Error::SingularParameter)
        );
    }

    #[test]
    fn eigenpair_examples() {
        let f5 = Field::prime(5).unwrap();
        let pairs = eigenpairs(&f5.one(), &f5.from_int(2), 3).unwrap();
        let values: Vec<_> = pairs.iter().map(|p| p.value.clone()).collect();
        assert_eq!(values, vec![f5.from_int(1), f5.from_int(4), f5.from_int(1)]);
        assert_eq!(pairs[1].vector, vec![f5.from_int(4), f5.one(), f5.zero()]);
        let q = q_matrix(&f5.one(), &f5.from_int(2), 3).unwrap();
        assert_eq!(
            q.mul_vec(&pairs[1].vector).unwrap(),
            vec![f5.from_int(1), f5.from_int(4), f5.zero()]
        );

        let f7 = Field::prime(7).unwrap();
        let pairs = eigenpairs(&f7.zero(), &f7.from_int(2), 2).unwrap();
        assert_eq!(pairs[0].vector, vec![f7.one(), f7.zero()]);
        assert_eq!(pairs[1].vector, vec![f7.zero(), f7.one()]);
        let pairs = eigenpairs(&f7.from_int(3), &f7.from_int(2), 2).unwrap();
        assert_eq!(pairs[1].value, f7.from_int(4));
        assert_eq!(pairs[1].vector, vec![f7.from_int(2), f7.one()]);
    }

    #[test]
    fn criterion_examples() {
        let f5 = Field::prime(5).unwrap();
        for n in 2..5 {
            assert!(!is_diagonalizable(&f5.one(), &f5.one(), n).unwrap());
        }
        assert!(is_diagonalizable(&f5.zero(), &f5.one(), 2).unwrap());
        assert!(is_diagonalizable(&f5.one(), &f5.from_int(2), 2).unwrap());
        assert!(!is_diagonalizable(&f5.one(), &f5.from_int(4), 2).unwrap());
        assert_eq!(
            is_diagonalizable(&f5.one(), &f5.zero(), 2),
            Err(Error::ZeroParameter("x"))
        );
    }

    #[test]
    fn oracle_examples() {
        let f3 = Field::prime(3).unwrap();
        assert!(!diagonalizable_oracle(&q_matrix(&f3.one(), &f3.one(), 2).unwrap()).unwrap());
        for f in [f3.clone(), Field::rational()] {
            assert!(diagonalizable_oracle(&SquareMatrix::<FieldElement>::identity(&f, 3)).unwrap());
        }
        let f5 = Field::prime(5).unwrap();
        let q = q_matrix(&f5.one(), &f5.from_int(2), 3).unwrap();
        assert_eq!(q.shift(&f5.one()).rank(), 1);
        assert_eq!(q.shift(&f5.from_int(4)).rank(), 2);
        assert!(diagonalizable_oracle(&q).unwrap());
        assert_eq!(
            diagonalizable_oracle(&mat(&f5, &[&[1, 0], &[1, 1]])),
            Err(Error::NotTriangular(1, 0))
        );
    }
}
