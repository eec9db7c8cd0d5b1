//! Dense exact linear algebra: reduced row-echelon forms, kernels,
//! linear solves and canonical subspaces.

use std::fmt;
use std::ops::{Index, IndexMut};

use thiserror::Error;

use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("linear system has no solution")]
    Inconsistent,
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![Scalar::zero(field); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one(field);
        }
        m
    }

    /// Builds a matrix from rows. All rows must have length `cols`.
    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            for x in row {
                assert_eq!(x.field(), field, "matrix entry in wrong field");
                data.push(x);
            }
        }
        Matrix {
            field,
            rows: n,
            cols,
            data,
        }
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            field,
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&v| Scalar::from_i64(field, v)).collect())
                .collect(),
        )
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = &out[(i, j)] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| dot(self.row(i), v, self.field))
            .collect())
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        self.zip_with(rhs, |a, b| a - b)
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    fn zip_with(
        &self,
        rhs: &Matrix,
        f: impl Fn(&Scalar, &Scalar) -> Scalar,
    ) -> Result<Matrix, LinalgError> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(LinalgError::DimensionMismatch {
                expected: self.rows * self.cols,
                found: rhs.rows * rhs.cols,
            });
        }
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// The reduced row-echelon form (zero rows kept at the bottom) and the
    /// rank. Pivots are the first nonzero entry found scanning down a column.
    pub fn rref(&self) -> (Matrix, usize) {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(pivot) = (rank..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(rank, pivot);
            let inv = m[(rank, col)].inv().expect("pivot is nonzero");
            for j in col..m.cols {
                m[(rank, j)] = &m[(rank, j)] * &inv;
            }
            for r in 0..m.rows {
                if r == rank || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for j in col..m.cols {
                    let delta = &factor * &m[(rank, j)];
                    m[(r, j)] = &m[(r, j)] - &delta;
                }
            }
            rank += 1;
        }
        (m, rank)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// `{v : self·v = 0}` as a canonical subspace of the column space.
    pub fn kernel(&self) -> Subspace {
        let (r, rank) = self.rref();
        let pivots = pivot_columns(&r, rank);
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![Scalar::zero(self.field); self.cols];
            v[free] = Scalar::one(self.field);
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -&r[(row, free)];
            }
            basis.push(v);
        }
        Subspace::from_rows(&Matrix::from_rows(self.field, self.cols, basis))
    }

    /// Some `x` with `self·x = b`. Free variables are set to zero.
    pub fn solve(&self, b: &Matrix) -> Result<Matrix, LinalgError> {
        if b.rows != self.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.rows,
                found: b.rows,
            });
        }
        let aug = self.hstack(b);
        let (r, rank) = aug.rref();
        let pivots = pivot_columns(&r, rank);
        if pivots.iter().any(|&c| c >= self.cols) {
            return Err(LinalgError::Inconsistent);
        }
        let mut x = Matrix::zeros(self.field, self.cols, b.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x[(pc, j)] = r[(row, self.cols + j)].clone();
            }
        }
        Ok(x)
    }

    pub fn invert(&self) -> Result<Matrix, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let (r, rank) = self.hstack(&Matrix::identity(self.field, n)).rref();
        if rank < n || (0..n).any(|i| !r[(i, i)].is_one()) {
            return Err(LinalgError::Singular);
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }

    fn hstack(&self, other: &Matrix) -> Matrix {
        let cols = self.cols + other.cols;
        let rows = (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .chain(other.row(i))
                    .cloned()
                    .collect::<Vec<_>>()
            })
            .collect();
        Matrix::from_rows(self.field, cols, rows)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;

    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.row_vectors() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

pub fn dot(a: &[Scalar], b: &[Scalar], field: Field) -> Scalar {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Scalar::zero(field), |acc, (x, y)| &acc + &(x * y))
}

fn pivot_columns(rref: &Matrix, rank: usize) -> Vec<usize> {
    (0..rank)
        .map(|i| {
            rref.row(i)
                .iter()
                .position(|x| !x.is_zero())
                .expect("nonzero row above rank")
        })
        .collect()
}

/// A linear subspace of `field^ambient`, stored as the RREF of a spanning
/// set with zero rows dropped. Two subspaces are equal iff their stored
/// bases are identical.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
        }
    }

    /// The span of the rows of `rows`.
    pub fn from_rows(rows: &Matrix) -> Self {
        let (r, rank) = rows.rref();
        let kept = (0..rank).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            ambient: rows.cols(),
            basis: Matrix::from_rows(rows.field(), rows.cols(), kept),
        }
    }

    pub fn from_vectors(field: Field, ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        Subspace::from_rows(&Matrix::from_rows(field, ambient, vectors.to_vec()))
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// The canonical RREF basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool, LinalgError> {
        if v.len() != self.ambient {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient,
                found: v.len(),
            });
        }
        let mut v = v.to_vec();
        for row in self.basis.row_vectors() {
            let pc = row.iter().position(|x| !x.is_zero()).expect("RREF row");
            if v[pc].is_zero() {
                continue;
            }
            let factor = v[pc].clone();
            for (x, r) in v.iter_mut().zip(row) {
                *x = &*x - &(&factor * r);
            }
        }
        Ok(v.iter().all(Scalar::is_zero))
    }

    /// `self ⊆ other`.
    pub fn leq(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_ambient(other)?;
        for row in self.basis.row_vectors() {
            if !other.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equal(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_ambient(other)?;
        Ok(self == other)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        Ok(Subspace::from_rows(&self.basis.vstack(&other.basis)?))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }
}
