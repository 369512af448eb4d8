//! Rational functions: reduced quotients of polynomials with a monic denominator.

use std::ops::{Add, Mul, Neg, Sub};

use super::poly::{gcd, Poly};
use crate::{Error, Rational, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let nvars = num.nvars();
        if num.is_zero() {
            return Ok(RatFunc {
                num,
                den: Poly::one(nvars),
            });
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides numerator"),
                den.exact_div(&g).expect("gcd divides denominator"),
            )
        };
        let lc = den.leading_coefficient().recip();
        Ok(RatFunc {
            num: num.scale(&lc),
            den: den.scale(&lc),
        })
    }

    /// Scales an already coprime pair so the denominator is monic.
    fn coprime(num: Poly, den: Poly) -> Self {
        let lc = den.leading_coefficient().recip();
        RatFunc {
            num: num.scale(&lc),
            den: den.scale(&lc),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        let den = Poly::one(p.nvars());
        RatFunc { num: p, den }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn scale(&self, c: &Rational) -> RatFunc {
        if num_traits::Zero::is_zero(c) {
            return RatFunc::from_poly(Poly::zero(self.num.nvars()));
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<RatFunc> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &RatFunc) -> Result<RatFunc> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn pow(&self, exp: u32) -> RatFunc {
        // Powers of coprime polynomials stay coprime.
        RatFunc {
            num: self.num.pow(exp),
            den: self.den.pow(exp),
        }
    }

    /// Quotient rule: (n/d)' = (n'd - nd') / d².
    pub fn derive(&self, var: usize) -> RatFunc {
        let dd = self.den.derive(var);
        let n = &(&self.num.derive(var) * &self.den) - &(&self.num * &dd);
        if n.is_zero() {
            return RatFunc::from_poly(n);
        }
        let d2 = &self.den * &self.den;
        // gcd(n'd - nd', d) = gcd(d', d) when n and d are coprime
        if gcd(&self.den, &dd).is_one() {
            RatFunc::coprime(n, d2)
        } else {
            RatFunc::new(n, d2).expect("nonzero denominator")
        }
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone()).unwrap();
        }
        let g = gcd(&self.den, &rhs.den);
        if g.is_one() {
            return RatFunc::coprime(
                &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
                &self.den * &rhs.den,
            );
        }
        let d1 = self.den.exact_div(&g).expect("gcd divides");
        let d2 = rhs.den.exact_div(&g).expect("gcd divides");
        let num = &(&self.num * &d2) + &(&rhs.num * &d1);
        if num.is_zero() {
            return RatFunc::from_poly(num);
        }
        let h = gcd(&num, &g);
        let den = &d1 * &rhs.den;
        if h.is_one() {
            RatFunc::coprime(num, den)
        } else {
            RatFunc::coprime(
                num.exact_div(&h).expect("gcd divides"),
                den.exact_div(&h).expect("gcd divides"),
            )
        }
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::from_poly(Poly::zero(self.num.nvars()));
        }
        let reduce = |n: &Poly, d: &Poly| {
            let g = gcd(n, d);
            if g.is_one() {
                (n.clone(), d.clone())
            } else {
                (
                    n.exact_div(&g).expect("gcd divides"),
                    d.exact_div(&g).expect("gcd divides"),
                )
            }
        };
        let (n1, d2) = reduce(&self.num, &rhs.den);
        let (n2, d1) = reduce(&rhs.num, &self.den);
        RatFunc::coprime(&n1 * &n2, &d1 * &d2)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> Poly {
        Poly::var(1, 0)
    }

    #[test]
    fn normalizes_common_factors_and_sign() {
        let one = Poly::one(1);
        let num = &(&t() - &one) * &t();
        let den = (&(&t() - &one) * &t().pow(2)).scale(&Rational::from_integer((-2).into()));
        let r = RatFunc::new(num, den).unwrap();
        assert_eq!(r.denominator(), &t());
        assert_eq!(
            r.numerator(),
            &Poly::constant(1, Rational::new((-1).into(), 2.into()))
        );
    }

    #[test]
    fn quotient_rule() {
        // d/dt (t²+1)/t = (t²-1)/t²
        let one = Poly::one(1);
        let r = RatFunc::new(&t().pow(2) + &one, t()).unwrap();
        let expected = RatFunc::new(&t().pow(2) - &one, t().pow(2)).unwrap();
        assert_eq!(r.derive(0), expected);
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(RatFunc::new(t(), Poly::zero(1)), Err(Error::DivisionByZero));
    }
}
