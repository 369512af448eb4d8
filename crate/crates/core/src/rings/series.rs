//! Truncated power series in one variable with explicit precision.
//!
//! A [`Series`] with `k` stored coefficients is known modulo `t^k`; its
//! precision is `k`. Binary operations produce the minimum precision of the
//! operands and a derivative loses one coefficient.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::{Error, Rational, Result};

#[derive(Clone, Debug, Hash)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        Series { coeffs }
    }

    pub fn zero(precision: usize) -> Self {
        Series {
            coeffs: vec![Rational::zero(); precision],
        }
    }

    pub fn constant(c: Rational, precision: usize) -> Self {
        let mut s = Self::zero(precision);
        if precision > 0 {
            s.coeffs[0] = c;
        }
        s
    }

    /// `t^k` at the given precision (zero if `k >= precision`).
    pub fn monomial(k: usize, c: Rational, precision: usize) -> Self {
        let mut s = Self::zero(precision);
        if k < precision {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Option<&Rational> {
        self.coeffs.get(k)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero known coefficient.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, precision: usize) -> Series {
        Series {
            coeffs: self.coeffs[..precision.min(self.precision())].to_vec(),
        }
    }

    /// Compares the coefficients both series know; returns equality and that precision.
    pub fn agree(&self, other: &Series) -> (bool, usize) {
        let p = self.precision().min(other.precision());
        (self.coeffs[..p] == other.coeffs[..p], p)
    }

    pub fn scale(&self, c: &Rational) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn derive(&self) -> Result<Series> {
        if self.precision() <= 1 {
            return Err(Error::PrecisionExhausted);
        }
        Ok(Series {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(k.into()))
                .collect(),
        })
    }

    pub fn pow(&self, exp: u32) -> Series {
        let mut result = Series::constant(num_traits::One::one(), self.precision());
        for _ in 0..exp {
            result = &result * self;
        }
        result
    }

    /// `self / divisor` when the quotient is a power series known to positive precision.
    ///
    /// If `divisor` has order `k`, `self` must vanish below `t^k`, and the
    /// quotient is known to `min(precisions) - k` coefficients.
    pub fn divide(&self, divisor: &Series) -> Result<Option<Series>> {
        let k = divisor.order().ok_or(Error::DivisionByZero)?;
        let p = self.precision().min(divisor.precision());
        if p <= k {
            return Ok(None);
        }
        if self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Ok(None);
        }
        let a = &self.coeffs[k..p];
        let b = &divisor.coeffs[k..p];
        let b0 = &b[0];
        let mut q: Vec<Rational> = Vec::with_capacity(p - k);
        for n in 0..p - k {
            let mut acc = a[n].clone();
            for j in 1..=n {
                acc -= &b[j] * &q[n - j];
            }
            q.push(acc / b0);
        }
        Ok(Some(Series { coeffs: q }))
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        let p = self.precision().min(rhs.precision());
        let mut out = Series::zero(p);
        for (i, a) in self.coeffs.iter().enumerate().take(p) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(p - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}
