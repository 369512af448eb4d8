//! Exact carriers for the coefficient algebra `R`.
//!
//! Three concrete rings are supported: ℚ[t1..tn], its fraction field, and
//! ℚ[[t]]/(t^N). A [`RingElement`] carries a shared [`Ring`] handle and
//! binary operations require both operands to come from the same ring.

mod parse;
mod poly;
mod ratfunc;
mod series;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

pub use parse::{parse_expression, parse_expression_with, Bindings};
pub use poly::{gcd, Monomial, Poly};
pub use ratfunc::RatFunc;
pub use series::Series;

use crate::{Error, Rational, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RingKind {
    Poly,
    RatFunc,
    Series,
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RingKind::Poly => "poly",
            RingKind::RatFunc => "ratfunc",
            RingKind::Series => "series",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingDescriptor {
    pub kind: RingKind,
    pub variables: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub truncation: Option<usize>,
}

/// Shared handle to a ring descriptor.
pub type Ring = Arc<RingDescriptor>;

impl RingDescriptor {
    pub fn new(kind: RingKind, variables: Vec<String>, truncation: Option<usize>) -> Result<Ring> {
        if variables.is_empty() {
            return Err(Error::InvalidRing(
                "at least one variable is required".into(),
            ));
        }
        for (i, v) in variables.iter().enumerate() {
            let valid = v
                .chars()
                .next()
                .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::InvalidRing(format!("invalid variable name `{v}`")));
            }
            if variables[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        match kind {
            RingKind::Series => {
                if variables.len() != 1 {
                    return Err(Error::InvalidRing(
                        "series rings have exactly one variable".into(),
                    ));
                }
                match truncation {
                    Some(n) if n >= 2 => {}
                    _ => {
                        return Err(Error::InvalidRing(
                            "series truncation must be at least 2".into(),
                        ))
                    }
                }
            }
            _ => {
                if truncation.is_some() {
                    return Err(Error::InvalidRing(
                        "truncation only applies to series rings".into(),
                    ));
                }
            }
        }
        Ok(Arc::new(RingDescriptor {
            kind,
            variables,
            truncation,
        }))
    }

    pub fn poly<S: AsRef<str>>(vars: &[S]) -> Result<Ring> {
        Self::new(RingKind::Poly, names(vars), None)
    }

    pub fn ratfunc<S: AsRef<str>>(vars: &[S]) -> Result<Ring> {
        Self::new(RingKind::RatFunc, names(vars), None)
    }

    pub fn series(var: &str, truncation: usize) -> Result<Ring> {
        Self::new(RingKind::Series, vec![var.to_string()], Some(truncation))
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }
}

fn names<S: AsRef<str>>(vars: &[S]) -> Vec<String> {
    vars.iter().map(|s| s.as_ref().to_string()).collect()
}

pub(crate) fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

pub(crate) fn ensure_same_ring(a: &Ring, b: &Ring) -> Result<()> {
    if same_ring(a, b) {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

#[derive(Clone, Debug)]
pub enum Value {
    Poly(Poly),
    RatFunc(RatFunc),
    Series(Series),
}

/// Outcome of an exact comparison. `precision` is set when series were
/// compared and records the number of coefficients that were checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub equal: bool,
    pub precision: Option<usize>,
}

impl Comparison {
    pub const EQUAL: Comparison = Comparison {
        equal: true,
        precision: None,
    };

    pub fn and(self, other: Comparison) -> Comparison {
        let precision = match (self.precision, other.precision) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        Comparison {
            equal: self.equal && other.equal,
            precision,
        }
    }
}

/// Exact equality with series precision bookkeeping.
pub trait ExactEq {
    fn compare(&self, other: &Self) -> Comparison;
}

#[derive(Clone, Debug)]
pub struct RingElement {
    ring: Ring,
    value: Value,
}

impl RingElement {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn value(&self) -> &Value {
        &self.value
    }

    pub fn from_poly(ring: &Ring, p: Poly) -> Self {
        debug_assert_eq!(p.nvars(), ring.nvars());
        let value = match ring.kind {
            RingKind::Poly => Value::Poly(p),
            RingKind::RatFunc => Value::RatFunc(RatFunc::from_poly(p)),
            RingKind::Series => {
                let n = ring.truncation.unwrap();
                let mut coeffs = vec![Rational::zero(); n];
                for (m, c) in p.terms() {
                    let k = m.exponents()[0] as usize;
                    if k < n {
                        coeffs[k] = c.clone();
                    }
                }
                Value::Series(Series::new(coeffs))
            }
        };
        RingElement {
            ring: ring.clone(),
            value,
        }
    }

    pub fn from_ratfunc(ring: &Ring, r: RatFunc) -> Result<Self> {
        match ring.kind {
            RingKind::RatFunc => Ok(RingElement {
                ring: ring.clone(),
                value: Value::RatFunc(r),
            }),
            _ if r.is_polynomial() => Ok(Self::from_poly(ring, r.numerator().clone())),
            RingKind::Poly => Err(Error::DivisionNotAllowed),
            RingKind::Series => {
                let num = Self::from_poly(ring, r.numerator().clone());
                let den = Self::from_poly(ring, r.denominator().clone());
                num.divide(&den)
            }
        }
    }

    /// A series element; its precision may be anything up to the ring's truncation.
    pub fn from_series(ring: &Ring, s: Series) -> Result<Self> {
        if ring.kind != RingKind::Series {
            return Err(Error::RingMismatch);
        }
        let n = ring.truncation.unwrap();
        let s = if s.precision() > n { s.truncate(n) } else { s };
        Ok(RingElement {
            ring: ring.clone(),
            value: Value::Series(s),
        })
    }

    pub fn from_rational(ring: &Ring, c: Rational) -> Self {
        Self::from_poly(ring, Poly::constant(ring.nvars(), c))
    }

    pub fn from_int(ring: &Ring, n: i64) -> Self {
        Self::from_rational(ring, Rational::from_integer(n.into()))
    }

    pub fn zero(ring: &Ring) -> Self {
        Self::from_rational(ring, Rational::zero())
    }

    pub fn one(ring: &Ring) -> Self {
        Self::from_rational(ring, Rational::one())
    }

    pub fn var(ring: &Ring, index: usize) -> Result<Self> {
        if index >= ring.nvars() {
            return Err(Error::DimensionMismatch {
                expected: ring.nvars(),
                found: index,
            });
        }
        Ok(Self::from_poly(ring, Poly::var(ring.nvars(), index)))
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        match &self.value {
            Value::Poly(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_series(&self) -> Option<&Series> {
        match &self.value {
            Value::Series(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_ratfunc(&self) -> Option<&RatFunc> {
        match &self.value {
            Value::RatFunc(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Poly(p) => p.is_zero(),
            Value::RatFunc(r) => r.is_zero(),
            Value::Series(s) => s.is_zero(),
        }
    }

    /// Series precision, `None` for exact carriers.
    pub fn precision(&self) -> Option<usize> {
        self.as_series().map(Series::precision)
    }

    fn with(&self, value: Value) -> Self {
        RingElement {
            ring: self.ring.clone(),
            value,
        }
    }

    fn zip(&self, rhs: &RingElement, op: BinOp) -> Result<RingElement> {
        ensure_same_ring(&self.ring, &rhs.ring)?;
        let value = match (&self.value, &rhs.value) {
            (Value::Poly(a), Value::Poly(b)) => Value::Poly(match op {
                BinOp::Add => a + b,
                BinOp::Sub => a - b,
                BinOp::Mul => a * b,
            }),
            (Value::RatFunc(a), Value::RatFunc(b)) => Value::RatFunc(match op {
                BinOp::Add => a + b,
                BinOp::Sub => a - b,
                BinOp::Mul => a * b,
            }),
            (Value::Series(a), Value::Series(b)) => Value::Series(match op {
                BinOp::Add => a + b,
                BinOp::Sub => a - b,
                BinOp::Mul => a * b,
            }),
            _ => return Err(Error::RingMismatch),
        };
        Ok(self.with(value))
    }

    pub fn try_add(&self, rhs: &RingElement) -> Result<RingElement> {
        self.zip(rhs, BinOp::Add)
    }

    pub fn try_sub(&self, rhs: &RingElement) -> Result<RingElement> {
        self.zip(rhs, BinOp::Sub)
    }

    pub fn try_mul(&self, rhs: &RingElement) -> Result<RingElement> {
        self.zip(rhs, BinOp::Mul)
    }

    pub fn scale(&self, c: &Rational) -> RingElement {
        self.with(match &self.value {
            Value::Poly(p) => Value::Poly(p.scale(c)),
            Value::RatFunc(r) => Value::RatFunc(r.scale(c)),
            Value::Series(s) => Value::Series(s.scale(c)),
        })
    }

    pub fn pow(&self, exp: u32) -> RingElement {
        self.with(match &self.value {
            Value::Poly(p) => Value::Poly(p.pow(exp)),
            Value::RatFunc(r) => Value::RatFunc(r.pow(exp)),
            Value::Series(s) => Value::Series(s.pow(exp)),
        })
    }

    /// `∂/∂t_var`. Series lose one coefficient of precision.
    pub fn derive(&self, var: usize) -> Result<RingElement> {
        if var >= self.ring.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.ring.nvars(),
                found: var,
            });
        }
        Ok(self.with(match &self.value {
            Value::Poly(p) => Value::Poly(p.derive(var)),
            Value::RatFunc(r) => Value::RatFunc(r.derive(var)),
            Value::Series(s) => Value::Series(s.derive()?),
        }))
    }

    /// `c` with `c * divisor == self`, if it exists in the carrier.
    pub fn exact_divide(&self, divisor: &RingElement) -> Result<Option<RingElement>> {
        ensure_same_ring(&self.ring, &divisor.ring)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match (&self.value, &divisor.value) {
            (Value::Poly(a), Value::Poly(b)) => a.exact_div(b).map(|q| self.with(Value::Poly(q))),
            (Value::RatFunc(a), Value::RatFunc(b)) => Some(self.with(Value::RatFunc(a.div(b)?))),
            (Value::Series(a), Value::Series(b)) => {
                a.divide(b)?.map(|q| self.with(Value::Series(q)))
            }
            _ => return Err(Error::RingMismatch),
        })
    }

    /// Field-style division used by the expression parser.
    pub fn divide(&self, divisor: &RingElement) -> Result<RingElement> {
        if self.ring.kind == RingKind::Poly {
            return Err(Error::DivisionNotAllowed);
        }
        self.exact_divide(divisor)?.ok_or(Error::NotDivisible)
    }

    /// Re-expresses a polynomial or series element in another ring with the same variables.
    pub fn coerce(&self, target: &Ring) -> Result<RingElement> {
        if same_ring(&self.ring, target) {
            return Ok(self.clone());
        }
        if self.ring.variables != target.variables {
            return Err(Error::RingMismatch);
        }
        match &self.value {
            Value::Poly(p) => Ok(Self::from_poly(target, p.clone())),
            Value::RatFunc(r) => Self::from_ratfunc(target, r.clone()),
            Value::Series(s) => {
                if target.kind == RingKind::Series {
                    return Self::from_series(target, s.clone());
                }
                Err(Error::RingMismatch)
            }
        }
    }
}

#[derive(Clone, Copy)]
enum BinOp {
    Add,
    Sub,
    Mul,
}

impl ExactEq for RingElement {
    fn compare(&self, other: &Self) -> Comparison {
        if !same_ring(&self.ring, &other.ring) {
            return Comparison {
                equal: false,
                precision: None,
            };
        }
        match (&self.value, &other.value) {
            (Value::Poly(a), Value::Poly(b)) => Comparison {
                equal: a == b,
                precision: None,
            },
            (Value::RatFunc(a), Value::RatFunc(b)) => Comparison {
                equal: a == b,
                precision: None,
            },
            (Value::Series(a), Value::Series(b)) => {
                let (equal, p) = a.agree(b);
                Comparison {
                    equal,
                    precision: Some(p),
                }
            }
            _ => Comparison {
                equal: false,
                precision: None,
            },
        }
    }
}

/// Series compare on their common precision, so this relation is not transitive.
impl PartialEq for RingElement {
    fn eq(&self, other: &Self) -> bool {
        self.compare(other).equal
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&RingElement> for &RingElement {
            type Output = RingElement;
            fn $method(self, rhs: &RingElement) -> RingElement {
                self.$checked(rhs)
                    .expect("ring element operands from different rings")
            }
        }
        impl $trait<RingElement> for RingElement {
            type Output = RingElement;
            fn $method(self, rhs: RingElement) -> RingElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&RingElement> for RingElement {
            type Output = RingElement;
            fn $method(self, rhs: &RingElement) -> RingElement {
                (&self).$method(rhs)
            }
        }
        impl $trait<RingElement> for &RingElement {
            type Output = RingElement;
            fn $method(self, rhs: RingElement) -> RingElement {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        self.with(match &self.value {
            Value::Poly(p) => Value::Poly(-p),
            Value::RatFunc(r) => Value::RatFunc(-r),
            Value::Series(s) => Value::Series(-s),
        })
    }
}

impl Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        -&self
    }
}

/// Canonical text form, parseable by [`parse_expression`] for polynomial,
/// rational-function, and full-precision series elements.
impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = &self.ring.variables;
        match &self.value {
            Value::Poly(p) => poly::write_poly(f, p, names),
            Value::RatFunc(r) => {
                if r.is_polynomial() {
                    poly::write_poly(f, r.numerator(), names)
                } else {
                    write!(f, "(")?;
                    poly::write_poly(f, r.numerator(), names)?;
                    write!(f, ")/(")?;
                    poly::write_poly(f, r.denominator(), names)?;
                    write!(f, ")")
                }
            }
            Value::Series(s) => {
                let p = Poly::from_terms(
                    1,
                    s.coeffs()
                        .iter()
                        .enumerate()
                        .map(|(k, c)| (Monomial::var_pow(1, 0, k as u32), c.clone())),
                );
                let full = self.ring.truncation == Some(s.precision());
                if full || !p.is_zero() {
                    poly::write_poly(f, &p, names)?;
                }
                if !full {
                    if !p.is_zero() {
                        write!(f, " + ")?;
                    }
                    write!(f, "O({}^{})", names[0], s.precision())?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptor_validation() {
        assert!(RingDescriptor::poly(&["t1", "t1"]).is_err());
        assert!(RingDescriptor::poly::<&str>(&[]).is_err());
        assert!(RingDescriptor::series("t", 1).is_err());
        assert!(
            RingDescriptor::new(RingKind::Series, vec!["s".into(), "t".into()], Some(4)).is_err()
        );
        assert!(RingDescriptor::new(RingKind::Poly, vec!["t".into()], Some(4)).is_err());
        assert!(RingDescriptor::poly(&["1t"]).is_err());
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let a = RingDescriptor::poly(&["t"]).unwrap();
        let b = RingDescriptor::poly(&["s"]).unwrap();
        let x = RingElement::one(&a);
        let y = RingElement::one(&b);
        assert_eq!(x.try_add(&y).unwrap_err(), Error::RingMismatch);
        assert_ne!(x, y);
    }

    #[test]
    fn exact_divide_examples() {
        let r = RingDescriptor::poly(&["t"]).unwrap();
        let t = RingElement::var(&r, 0).unwrap();
        let two_t3 = t.pow(3).scale(&Rational::from_integer(2.into()));
        assert_eq!(
            two_t3.exact_divide(&t.pow(3)).unwrap(),
            Some(RingElement::from_int(&r, 2))
        );
        assert_eq!(RingElement::one(&r).exact_divide(&t).unwrap(), None);
        assert_eq!(
            t.exact_divide(&RingElement::zero(&r)).unwrap_err(),
            Error::DivisionByZero
        );
    }

    #[test]
    fn series_display_marks_lost_precision() {
        let r = RingDescriptor::series("t", 4).unwrap();
        let t = RingElement::var(&r, 0).unwrap();
        let sq = &t * &t;
        assert_eq!(sq.to_string(), "t^2");
        assert_eq!(sq.derive(0).unwrap().to_string(), "2*t + O(t^3)");
        let zero = RingElement::one(&r).derive(0).unwrap();
        assert_eq!(zero.to_string(), "O(t^3)");
    }
}
