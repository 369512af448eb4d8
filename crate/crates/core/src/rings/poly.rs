//! Sparse multivariate polynomials over ℚ.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose ordering is
//! graded lexicographic (total degree first, then lexicographic with `t1`
//! most significant). Zero coefficients are never stored, so two
//! polynomials are equal exactly when their term maps are equal.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::Rational;

/// An exponent vector, one entry per ring variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        Self::var_pow(nvars, index, 1)
    }

    pub fn var_pow(nvars: usize, index: usize, exp: u32) -> Self {
        let mut e = vec![0; nvars];
        e[index] = exp;
        Monomial(e)
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` if every exponent of `other` is bounded by `self`.
    pub fn divide(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_sub(b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(nvars, Monomial::one(nvars), c)
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        Self::monomial(nvars, Monomial::var(nvars, index), Rational::one())
    }

    pub fn monomial(nvars: usize, m: Monomial, c: Rational) -> Self {
        debug_assert_eq!(m.0.len(), nvars);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { nvars, terms }
    }

    /// Builds a polynomial from possibly repeated, possibly zero terms.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Poly::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// The value of a constant polynomial (zero included).
    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> Rational {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    /// The coefficient of `var^k`, as a polynomial not involving `var`.
    pub fn coeff_in(&self, var: usize, k: u32) -> Poly {
        Poly::from_terms(
            self.nvars,
            self.terms
                .iter()
                .filter(|(m, _)| m.0[var] == k)
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    e[var] = 0;
                    (Monomial(e), c.clone())
                }),
        )
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(n, c)| (n.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut result = Poly::one(self.nvars);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Partial derivative with respect to variable `var`.
    pub fn derive(&self, var: usize) -> Poly {
        Poly::from_terms(
            self.nvars,
            self.terms
                .iter()
                .filter(|(m, _)| m.0[var] > 0)
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    let k = e[var];
                    e[var] -= 1;
                    (Monomial(e), c * Rational::from_integer(k.into()))
                }),
        )
    }

    /// Scales so that the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading_coefficient();
        self.scale(&lc.recip())
    }

    /// Exact division: `Some(q)` with `q * divisor == self`, if such `q` exists.
    ///
    /// Panics if `divisor` is zero.
    pub fn exact_div(&self, divisor: &Poly) -> Option<Poly> {
        assert!(!divisor.is_zero(), "exact_div by zero polynomial");
        let (lm, lc) = divisor.leading_term().unwrap();
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.nvars);
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.divide(lm)?;
            let qc = c / lc;
            let step = divisor.mul_monomial(&qm).scale(&qc);
            rem = &rem - &step;
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Pseudo-remainder of `self` by `divisor`, viewing both as univariate in `var`.
    fn pseudo_rem(&self, divisor: &Poly, var: usize) -> Poly {
        let m = divisor.degree_in(var);
        let lc = divisor.coeff_in(var, m);
        let mut r = self.clone();
        while !r.is_zero() && r.degree_in(var) >= m {
            let d = r.degree_in(var);
            let lr = r.coeff_in(var, d);
            let shift = Monomial::var_pow(self.nvars, var, d - m);
            r = &(&r * &lc) - &(&lr * divisor).mul_monomial(&shift);
        }
        r
    }

    /// Monic gcd of the coefficients of `self` viewed as univariate in `var`.
    fn content_in(&self, var: usize) -> Poly {
        let mut g = Poly::zero(self.nvars);
        for k in 0..=self.degree_in(var) {
            let c = self.coeff_in(var, k);
            if !c.is_zero() {
                g = gcd(&g, &c);
                if g.is_one() {
                    break;
                }
            }
        }
        g
    }

    /// Substitutes `point[j]` for every variable `j != var`.
    fn specialize(&self, var: usize, point: &[Rational]) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut c = c.clone();
            for (j, &e) in m.0.iter().enumerate() {
                if j != var && e > 0 {
                    c *= num_traits::pow(point[j].clone(), e as usize);
                }
            }
            out.add_term(Monomial::var_pow(self.nvars, var, m.0[var]), c);
        }
        out
    }

    fn primitive_in(&self, var: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        self.exact_div(&self.content_in(var))
            .expect("content divides polynomial")
            .monic()
    }
}

/// Monic greatest common divisor over ℚ, by recursive primitive remainder sequences.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    let nvars = a.nvars;
    let Some(var) = (0..nvars).find(|&v| a.degree_in(v) > 0 || b.degree_in(v) > 0) else {
        return Poly::one(nvars);
    };
    let content = gcd(&a.content_in(var), &b.content_in(var));
    let mut p = a.primitive_in(var);
    let mut q = b.primitive_in(var);
    if p.degree_in(var) < q.degree_in(var) {
        std::mem::swap(&mut p, &mut q);
    }
    if coprime_images(&p, &q, var) {
        return content.monic();
    }
    let g = loop {
        if q.is_zero() {
            break p;
        }
        if q.degree_in(var) == 0 {
            break Poly::one(nvars);
        }
        let r = p.pseudo_rem(&q, var);
        p = q;
        q = r.primitive_in(var);
    };
    (&content * &g).monic()
}

/// True when some specialization of the other variables keeps both leading
/// coefficients in `var` and has a constant gcd; the true gcd is then free of `var`.
fn coprime_images(p: &Poly, q: &Poly, var: usize) -> bool {
    let others = (0..p.nvars).filter(|&j| j != var);
    if q.degree_in(var) == 0
        || others
            .clone()
            .all(|j| p.degree_in(j) == 0 && q.degree_in(j) == 0)
    {
        return false;
    }
    let (lp, lq) = (
        p.coeff_in(var, p.degree_in(var)),
        q.coeff_in(var, q.degree_in(var)),
    );
    for attempt in 0..4i64 {
        let point: Vec<Rational> = (0..p.nvars as i64)
            .map(|j| Rational::from_integer((2 + 3 * j + 7 * attempt).into()))
            .collect();
        let origin = |f: &Poly| {
            f.specialize(var, &point)
                .constant_value()
                .unwrap_or_else(Rational::zero)
        };
        if origin(&lp).is_zero() || origin(&lq).is_zero() {
            continue;
        }
        return gcd(&p.specialize(var, &point), &q.specialize(var, &point)).is_one();
    }
    false
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

/// Writes `p` with the given variable names, highest term first.
pub(crate) fn write_poly(
    f: &mut std::fmt::Formatter<'_>,
    p: &Poly,
    names: &[String],
) -> std::fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    for (i, (m, c)) in p.terms().rev().enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => write!(f, "-")?,
            (0, false) => {}
            (_, true) => write!(f, " - ")?,
            (_, false) => write!(f, " + ")?,
        }
        let abs = c.abs();
        let mono = format_monomial(m, names);
        match (abs.is_one(), mono.is_empty()) {
            (true, false) => write!(f, "{mono}")?,
            (_, true) => write!(f, "{abs}")?,
            (false, false) => write!(f, "{abs}*{mono}")?,
        }
    }
    Ok(())
}

fn format_monomial(m: &Monomial, names: &[String]) -> String {
    m.exponents()
        .iter()
        .zip(names)
        .filter(|(&e, _)| e > 0)
        .map(|(&e, name)| {
            if e == 1 {
                name.clone()
            } else {
                format!("{name}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}
