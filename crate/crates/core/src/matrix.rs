//! Dense square matrices over any [`Scalar`].

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// An `n × n` matrix stored row-major. All entries belong to `field`.
#[derive(Clone, PartialEq)]
pub struct SquareMatrix<S: Scalar> {
    field: S::Field,
    n: usize,
    entries: Vec<S>,
}

impl<S: Scalar> SquareMatrix<S> {
    /// Build from row-major entries. Fails if the count is not `n²`, if
    /// `n = 0`, or if an entry lives in another field.
    pub fn from_entries(field: S::Field, n: usize, entries: Vec<S>) -> Result<Self> {
        if n == 0 {
            return Err(Error::DimensionTooSmall { n, min: 1 });
        }
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch(entries.len(), n * n));
        }
        if let Some(e) = entries.iter().find(|e| e.field() != field) {
            return Err(Error::MixedFields(
                format!("{:?}", e.field()),
                format!("{field:?}"),
            ));
        }
        Ok(Self { field, n, entries })
    }

    pub fn from_rows(field: S::Field, rows: Vec<Vec<S>>) -> Result<Self> {
        let n = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(r.len(), n));
        }
        Self::from_entries(field, n, rows.into_iter().flatten().collect())
    }

    /// Entry `(i, j)` is `f(i, j)` with zero-based indices.
    pub fn from_fn(field: S::Field, n: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        assert!(n >= 1, "matrices have dimension at least 1");
        let entries = (0..n * n).map(|k| f(k / n, k % n)).collect();
        Self { field, n, entries }
    }

    pub fn zero(field: &S::Field, n: usize) -> Self {
        Self::from_fn(field.clone(), n, |_, _| S::zero(field))
    }

    pub fn identity(field: &S::Field, n: usize) -> Self {
        Self::from_fn(field.clone(), n, |i, j| {
            if i == j {
                S::one(field)
            } else {
                S::zero(field)
            }
        })
    }

    pub fn diagonal(field: &S::Field, diag: Vec<S>) -> Self {
        let n = diag.len();
        let mut m = Self::zero(field, n);
        for (i, d) in diag.into_iter().enumerate() {
            m.entries[i * n + i] = d;
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &S::Field {
        &self.field
    }

    /// Zero-based entry access.
    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        assert!(v.field() == self.field, "entry from another field");
        self.entries[i * self.n + j] = v;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[S]> {
        self.entries.chunks(self.n)
    }

    pub fn column(&self, j: usize) -> Vec<S> {
        (0..self.n).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn diagonal_entries(&self) -> Vec<S> {
        (0..self.n).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.rows().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, e)| if i == j { e.is_one() } else { e.is_zero() })
        })
    }

    /// First nonzero entry strictly below the diagonal, if any.
    pub fn first_subdiagonal_nonzero(&self) -> Option<(usize, usize)> {
        (1..self.n)
            .flat_map(|i| (0..i).map(move |j| (i, j)))
            .find(|&(i, j)| !self.get(i, j).is_zero())
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.first_subdiagonal_nonzero().is_none()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::MixedFields(
                format!("{:?}", self.field),
                format!("{:?}", other.field),
            ));
        }
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let n = self.n;
        let zero = S::zero(&self.field);
        Ok(Self::from_fn(self.field.clone(), n, |i, j| {
            (0..n).fold(zero.clone(), |acc, k| {
                acc + self.get(i, k).clone() * other.get(k, j).clone()
            })
        }))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(S, S) -> S) -> Self {
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| f(a.clone(), b.clone()))
            .collect();
        Self {
            field: self.field.clone(),
            n: self.n,
            entries,
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        Self {
            field: self.field.clone(),
            n: self.n,
            entries: self.entries.iter().map(|e| c.clone() * e.clone()).collect(),
        }
    }

    /// `M - λI`.
    pub fn shift(&self, lambda: &S) -> Self {
        let mut m = self.clone();
        for i in 0..self.n {
            let d = m.get(i, i).clone() - lambda.clone();
            m.entries[i * self.n + i] = d;
        }
        m
    }

    pub fn mul_vec(&self, v: &[S]) -> Result<Vec<S>> {
        if v.len() != self.n {
            return Err(Error::DimensionMismatch(self.n, v.len()));
        }
        let zero = S::zero(&self.field);
        Ok(self
            .rows()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(zero.clone(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    /// `self^e` by repeated squaring; `pow(0)` is the identity.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::identity(&self.field, self.n);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same shape");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same shape");
            }
        }
        acc
    }

    /// Rank by Gaussian elimination over the field.
    pub fn rank(&self) -> usize {
        let n = self.n;
        let mut rows: Vec<Vec<S>> = self.rows().map(<[S]>::to_vec).collect();
        let mut rank = 0;
        for col in 0..n {
            let Some(pivot) = (rank..n).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, pivot);
            let inv = rows[rank][col].inv().expect("pivot is nonzero");
            let pivot_row: Vec<S> = rows[rank].iter().map(|e| e.clone() * inv.clone()).collect();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == rank || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for (e, p) in row.iter_mut().zip(&pivot_row) {
                    *e = e.clone() - factor.clone() * p.clone();
                }
            }
            rows[rank] = pivot_row;
            rank += 1;
            if rank == n {
                break;
            }
        }
        rank
    }
}

impl<S: Scalar + fmt::Display> fmt::Display for SquareMatrix<S> {
    /// One bracketed, comma-separated row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "[{}]", cells.join(","))?;
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for SquareMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[S]> = self.rows().collect();
        f.debug_struct("SquareMatrix")
            .field("n", &self.n)
            .field("rows", &rows)
            .finish()
    }
}
