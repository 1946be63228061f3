//! Dense square matrices over exact rationals, plus the plain-text matrix format.
//!
//! The text format is a header line holding the order `n`, followed by `n`
//! lines of `n` whitespace-separated entries, each either `<int>` or
//! `<int>/<int>`. Blank lines and lines starting with `#` are skipped.

use std::fmt;
use std::ops::{Index, IndexMut};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Exact rational scalar, always kept in lowest terms with a positive denominator.
pub type Scalar = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix order must be at least 1")]
    EmptyMatrix,
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: missing or malformed order header")]
    MalformedHeader { line: usize },
    #[error("line {line}: cannot parse entry `{token}` as a rational")]
    MalformedEntry { line: usize, token: String },
    #[error("line {line}: expected {expected} entries, found {found}")]
    WrongRowLength {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("expected {expected} matrix rows, found {found}")]
    WrongRowCount { expected: usize, found: usize },
    #[error("line {line}: unexpected content after the last matrix row")]
    TrailingContent { line: usize },
}

/// Parses `<int>` or `<int>/<int>`; rejects a zero denominator.
pub fn parse_scalar(token: &str) -> Option<Scalar> {
    match token.split_once('/') {
        None => BigInt::from_str(token).ok().map(Scalar::from_integer),
        Some((num, den)) => {
            let num = BigInt::from_str(num).ok()?;
            let den = BigInt::from_str(den).ok()?;
            if den.is_zero() {
                return None;
            }
            Some(Scalar::new(num, den))
        }
    }
}

/// Dense `order × order` matrix stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    order: usize,
    entries: Vec<Scalar>,
}

impl ExactMatrix {
    pub fn zeros(order: usize) -> Result<Self, MatrixError> {
        if order == 0 {
            return Err(MatrixError::EmptyMatrix);
        }
        Ok(Self {
            order,
            entries: vec![Scalar::zero(); order * order],
        })
    }

    pub fn identity(order: usize) -> Result<Self, MatrixError> {
        let mut m = Self::zeros(order)?;
        for i in 0..order {
            m[(i, i)] = Scalar::one();
        }
        Ok(m)
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, MatrixError> {
        let order = rows.len();
        if order == 0 {
            return Err(MatrixError::EmptyMatrix);
        }
        let mut entries = Vec::with_capacity(order * order);
        for (row, values) in rows.into_iter().enumerate() {
            if values.len() != order {
                return Err(MatrixError::RaggedRow {
                    row,
                    expected: order,
                    found: values.len(),
                });
            }
            entries.extend(values);
        }
        Ok(Self { order, entries })
    }

    /// Convenience constructor for integer matrices.
    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self, MatrixError> {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.as_ref()
                        .iter()
                        .map(|&v| Scalar::from_integer(v.into()))
                        .collect()
                })
                .collect(),
        )
    }

    /// Builds a matrix by evaluating `f(row, col)` for every cell.
    pub fn from_fn(
        order: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Result<Self, MatrixError> {
        if order == 0 {
            return Err(MatrixError::EmptyMatrix);
        }
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(f(i, j));
            }
        }
        Ok(Self { order, entries })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Scalar]> {
        self.entries.chunks(self.order)
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|e| e.is_integer())
    }

    pub fn transpose(&self) -> Self {
        let n = self.order;
        let mut entries = Vec::with_capacity(n * n);
        for j in 0..n {
            for i in 0..n {
                entries.push(self[(i, j)].clone());
            }
        }
        Self { order: n, entries }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let n = self.order;
        for j in 0..n {
            self.entries.swap(a * n + j, b * n + j);
        }
    }

    pub fn scaled(&self, factor: &Scalar) -> Self {
        Self {
            order: self.order,
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }

    /// Square submatrix keeping the listed rows and columns, in the given order.
    ///
    /// Returns `None` if the two index lists differ in length or are empty.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Option<Self> {
        if rows.len() != cols.len() || rows.is_empty() {
            return None;
        }
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                entries.push(self[(i, j)].clone());
            }
        }
        Some(Self {
            order: rows.len(),
            entries,
        })
    }

    /// Deletes one row and one column. `None` when the result would be empty.
    pub fn minor(&self, row: usize, col: usize) -> Option<Self> {
        let rows: Vec<usize> = (0..self.order).filter(|&i| i != row).collect();
        let cols: Vec<usize> = (0..self.order).filter(|&j| j != col).collect();
        self.submatrix(&rows, &cols)
    }

    /// Applies the symmetric permutation `P M Pᵀ`: entry `(i, j)` of the result
    /// is entry `(perm[i], perm[j])` of `self`. Determinants are unchanged.
    pub fn permuted(&self, perm: &[usize]) -> Option<Self> {
        if perm.len() != self.order {
            return None;
        }
        let mut seen = vec![false; self.order];
        for &p in perm {
            if p >= self.order || std::mem::replace(&mut seen[p], true) {
                return None;
            }
        }
        self.submatrix(perm, perm)
    }

    pub fn parse(text: &str) -> Result<Self, MatrixError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (header_line, header) = lines
            .next()
            .ok_or(MatrixError::MalformedHeader { line: 1 })?;
        let order: usize = header
            .parse()
            .map_err(|_| MatrixError::MalformedHeader { line: header_line })?;
        if order == 0 {
            return Err(MatrixError::EmptyMatrix);
        }

        let mut rows = Vec::with_capacity(order);
        for (line, content) in lines {
            if rows.len() == order {
                return Err(MatrixError::TrailingContent { line });
            }
            let row = content
                .split_whitespace()
                .map(|tok| {
                    parse_scalar(tok).ok_or_else(|| MatrixError::MalformedEntry {
                        line,
                        token: tok.to_string(),
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            if row.len() != order {
                return Err(MatrixError::WrongRowLength {
                    line,
                    expected: order,
                    found: row.len(),
                });
            }
            rows.push(row);
        }
        if rows.len() != order {
            return Err(MatrixError::WrongRowCount {
                expected: order,
                found: rows.len(),
            });
        }
        Self::from_rows(rows)
    }
}

impl Index<(usize, usize)> for ExactMatrix {
    type Output = Scalar;

    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        assert!(
            i < self.order && j < self.order,
            "index ({i}, {j}) out of range"
        );
        &self.entries[i * self.order + j]
    }
}

impl IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        assert!(
            i < self.order && j < self.order,
            "index ({i}, {j}) out of range"
        );
        &mut self.entries[i * self.order + j]
    }
}

/// Writes the text format accepted by [`ExactMatrix::parse`].
impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.order)?;
        for row in self.rows() {
            let mut first = true;
            for e in row {
                if !first {
                    f.write_str(" ")?;
                }
                first = false;
                write!(f, "{e}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl FromStr for ExactMatrix {
    type Err = MatrixError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}
