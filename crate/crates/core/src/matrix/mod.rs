//! Dense matrices over exact rationals or polynomials.

mod det;
mod rank;

use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

pub use det::{
    bareiss, cofactor_expansion, determinant, minor_expansion, symbolic_determinant, COFACTOR_MAX, SYMBOLIC_GUARD,
};
pub use rank::rational_rank;

use crate::{Error, Poly, Rational, Result};

/// Row-major matrix with a single entry type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if rows * cols != data.len() {
            return Err(Error::Shape(format!("{rows}x{cols} needs {} entries, got {}", rows * cols, data.len())));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        let nrows = rows.len();
        Ok(Matrix { rows: nrows, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Zero-based entry access; panics when out of range.
    pub fn get(&self, i: usize, j: usize) -> &T {
        assert!(i < self.rows && j < self.cols, "({i}, {j}) outside {}x{}", self.rows, self.cols);
        &self.data[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut T {
        assert!(i < self.rows && j < self.cols, "({i}, {j}) outside {}x{}", self.rows, self.cols);
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Drops the listed (zero-based) rows and columns, keeping the rest in order.
    pub fn submatrix(&self, delete_rows: &[usize], delete_cols: &[usize]) -> Result<Self> {
        if let Some(i) = delete_rows.iter().find(|&&i| i >= self.rows) {
            return Err(Error::Index(format!("row {i} outside {} rows", self.rows)));
        }
        if let Some(j) = delete_cols.iter().find(|&&j| j >= self.cols) {
            return Err(Error::Index(format!("column {j} outside {} columns", self.cols)));
        }
        let keep_rows: Vec<usize> = (0..self.rows).filter(|i| !delete_rows.contains(i)).collect();
        let keep_cols: Vec<usize> = (0..self.cols).filter(|j| !delete_cols.contains(j)).collect();
        Ok(self.select(&keep_rows, &keep_cols))
    }

    /// Keeps exactly the listed rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<U>(&self, f: impl FnMut(&T) -> Result<U>) -> Result<Matrix<U>> {
        Ok(Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect::<Result<_>>()? })
    }
}

impl Matrix<Rational> {
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn from_integers(rows: &[&[i64]]) -> Result<Self> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| Rational::from(v)).collect()).collect())
    }
}

impl Matrix<Poly> {
    /// Entrywise evaluation at a full point `(x, α₁, …)`.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Matrix<Rational>> {
        self.try_map(|p| p.evaluate(point))
    }

    /// Reads every entry as a constant; a kind error if any is not.
    pub fn to_rational(&self) -> Result<Matrix<Rational>> {
        self.try_map(|p| {
            p.as_constant().ok_or_else(|| Error::Kind(format!("entry {p} is not constant; evaluate first")))
        })
    }

    /// Rank over ℚ of a matrix whose entries are all constant polynomials.
    pub fn rational_rank(&self) -> Result<usize> {
        Ok(rational_rank(&self.to_rational()?))
    }

    /// Applies `f` to every entry, e.g. a partial derivative.
    pub fn map_poly(&self, f: impl FnMut(&Poly) -> Result<Poly>) -> Result<Matrix<Poly>> {
        self.try_map(f)
    }
}

/// JSON form: an array of rows, each an array of canonical entry strings.
impl<T: Serialize + Clone> Serialize for Matrix<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.rows))?;
        for i in 0..self.rows {
            seq.serialize_element(self.row(i))?;
        }
        seq.end()
    }
}
