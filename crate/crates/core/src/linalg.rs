//! Coordinate vectors and small dense matrices over a ring.

use std::fmt;

use crate::rings::{ensure_same_ring, Comparison, ExactEq, Ring, RingElement};
use crate::{Error, Result};

/// An element of the free module `R^n` in the standard basis.
#[derive(Clone, Debug)]
pub struct Vector {
    ring: Ring,
    entries: Vec<RingElement>,
}

impl Vector {
    pub fn new(ring: &Ring, entries: Vec<RingElement>) -> Result<Self> {
        for e in &entries {
            ensure_same_ring(ring, e.ring())?;
        }
        Ok(Vector {
            ring: ring.clone(),
            entries,
        })
    }

    pub fn zero(ring: &Ring, len: usize) -> Self {
        Vector {
            ring: ring.clone(),
            entries: vec![RingElement::zero(ring); len],
        }
    }

    pub fn basis(ring: &Ring, len: usize, index: usize) -> Self {
        let mut v = Self::zero(ring, len);
        v.entries[index] = RingElement::one(ring);
        v
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[RingElement] {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> &RingElement {
        &self.entries[i]
    }

    pub fn into_entries(self) -> Vec<RingElement> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RingElement::is_zero)
    }

    pub(crate) fn check_compatible(&self, other: &Vector) -> Result<()> {
        ensure_same_ring(&self.ring, &other.ring)?;
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(())
    }

    fn zip_with(
        &self,
        other: &Vector,
        f: impl Fn(&RingElement, &RingElement) -> RingElement,
    ) -> Result<Vector> {
        self.check_compatible(other)?;
        Ok(Vector {
            ring: self.ring.clone(),
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn add(&self, other: &Vector) -> Result<Vector> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Vector) -> Result<Vector> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn neg(&self) -> Vector {
        self.map(|e| -e)
    }

    pub fn scale(&self, r: &RingElement) -> Result<Vector> {
        ensure_same_ring(&self.ring, r.ring())?;
        Ok(self.map(|e| r * e))
    }

    pub fn map(&self, f: impl Fn(&RingElement) -> RingElement) -> Vector {
        Vector {
            ring: self.ring.clone(),
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn try_map(&self, f: impl Fn(&RingElement) -> Result<RingElement>) -> Result<Vector> {
        Ok(Vector {
            ring: self.ring.clone(),
            entries: self.entries.iter().map(f).collect::<Result<_>>()?,
        })
    }

    /// Standard dot product `Σ a_i b_i`.
    pub fn dot(&self, other: &Vector) -> Result<RingElement> {
        self.check_compatible(other)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .fold(RingElement::zero(&self.ring), |acc, (a, b)| acc + a * b))
    }

    /// Canonical text of each entry.
    pub fn render(&self) -> Vec<String> {
        self.entries.iter().map(ToString::to_string).collect()
    }
}

impl ExactEq for Vector {
    fn compare(&self, other: &Self) -> Comparison {
        if self.len() != other.len() {
            return Comparison {
                equal: false,
                precision: None,
            };
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .fold(Comparison::EQUAL, |acc, (a, b)| acc.and(a.compare(b)))
    }
}

impl PartialEq for Vector {
    fn eq(&self, other: &Self) -> bool {
        self.compare(other).equal
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.render().join(", "))
    }
}

/// Row-major dense matrix.
#[derive(Clone, Debug)]
pub struct Matrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    data: Vec<RingElement>,
}

impl Matrix {
    pub fn from_rows(ring: &Ring, rows: Vec<Vec<RingElement>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::DimensionMismatch {
                    expected: ncols,
                    found: row.len(),
                });
            }
            for e in row {
                ensure_same_ring(ring, e.ring())?;
                data.push(e);
            }
        }
        Ok(Matrix {
            ring: ring.clone(),
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    pub fn from_fn(
        ring: &Ring,
        rows: usize,
        cols: usize,
        f: impl Fn(usize, usize) -> RingElement,
    ) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        Matrix {
            ring: ring.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn try_from_fn(
        ring: &Ring,
        rows: usize,
        cols: usize,
        f: impl Fn(usize, usize) -> Result<RingElement>,
    ) -> Result<Self> {
        let data = (0..rows * cols)
            .map(|k| f(k / cols, k % cols))
            .collect::<Result<_>>()?;
        Ok(Matrix {
            ring: ring.clone(),
            rows,
            cols,
            data,
        })
    }

    pub fn zero(ring: &Ring, n: usize) -> Self {
        Self::from_fn(ring, n, n, |_, _| RingElement::zero(ring))
    }

    pub fn identity(ring: &Ring, n: usize) -> Self {
        Self::from_fn(ring, n, n, |i, j| {
            if i == j {
                RingElement::one(ring)
            } else {
                RingElement::zero(ring)
            }
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RingElement {
        &self.data[i * self.cols + j]
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector {
            ring: self.ring.clone(),
            entries: (0..self.rows).map(|i| self.get(i, j).clone()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(RingElement::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Self::from_fn(&self.ring, self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
    }

    fn check_same_shape(&self, other: &Matrix) -> Result<()> {
        ensure_same_ring(&self.ring, &other.ring)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        Ok(Self::from_fn(&self.ring, self.rows, self.cols, |i, j| {
            self.get(i, j) + other.get(i, j)
        }))
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        Ok(Self::from_fn(&self.ring, self.rows, self.cols, |i, j| {
            self.get(i, j) - other.get(i, j)
        }))
    }

    pub fn neg(&self) -> Matrix {
        self.map(|e| -e)
    }

    pub fn scale(&self, r: &RingElement) -> Result<Matrix> {
        ensure_same_ring(&self.ring, r.ring())?;
        Ok(self.map(|e| r * e))
    }

    pub fn map(&self, f: impl Fn(&RingElement) -> RingElement) -> Matrix {
        Matrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map(&self, f: impl Fn(&RingElement) -> Result<RingElement>) -> Result<Matrix> {
        Ok(Matrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        ensure_same_ring(&self.ring, &other.ring)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        Ok(Self::from_fn(&self.ring, self.rows, other.cols, |i, j| {
            (0..self.cols).fold(RingElement::zero(&self.ring), |acc, k| {
                acc + self.get(i, k) * other.get(k, j)
            })
        }))
    }

    pub fn mul_vec(&self, v: &Vector) -> Result<Vector> {
        ensure_same_ring(&self.ring, v.ring())?;
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok(Vector {
            ring: self.ring.clone(),
            entries: (0..self.rows)
                .map(|i| {
                    (0..self.cols).fold(RingElement::zero(&self.ring), |acc, k| {
                        acc + self.get(i, k) * v.entry(k)
                    })
                })
                .collect(),
        })
    }

    fn minor(&self, row: usize, col: usize) -> Matrix {
        let n = self.rows;
        Self::from_fn(&self.ring, n - 1, n - 1, |i, j| {
            let si = if i < row { i } else { i + 1 };
            let sj = if j < col { j } else { j + 1 };
            self.get(si, sj).clone()
        })
    }

    /// Determinant by cofactor expansion; intended for the small ranks used here.
    pub fn determinant(&self) -> Result<RingElement> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        Ok(self.det_square())
    }

    fn det_square(&self) -> RingElement {
        match self.rows {
            0 => RingElement::one(&self.ring),
            1 => self.get(0, 0).clone(),
            2 => self.get(0, 0) * self.get(1, 1) - self.get(0, 1) * self.get(1, 0),
            n => (0..n).fold(RingElement::zero(&self.ring), |acc, j| {
                let term = self.get(0, j) * self.minor(0, j).det_square();
                if j % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            }),
        }
    }

    /// Classical adjugate: `adj(M) * M = det(M) * I`.
    pub fn adjugate(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        if n == 1 {
            return Ok(Self::identity(&self.ring, 1));
        }
        Ok(Self::from_fn(&self.ring, n, n, |i, j| {
            let c = self.minor(j, i).det_square();
            if (i + j) % 2 == 0 {
                c
            } else {
                -c
            }
        }))
    }

    pub fn render(&self) -> Vec<String> {
        self.data.iter().map(ToString::to_string).collect()
    }
}

impl ExactEq for Matrix {
    fn compare(&self, other: &Self) -> Comparison {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Comparison {
                equal: false,
                precision: None,
            };
        }
        self.data
            .iter()
            .zip(&other.data)
            .fold(Comparison::EQUAL, |acc, (a, b)| acc.and(a.compare(b)))
    }
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.compare(other).equal
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
