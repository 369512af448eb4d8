#![allow(dead_code)]

use cyclor::rings::{Monomial, Poly};
use cyclor::{
    parse_expression, OneForm, Rational, Ring, RingDescriptor, RingElement, Vector, VectorField,
};
use proptest::prelude::*;

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn poly_ring(vars: &[&str]) -> Ring {
    RingDescriptor::poly(vars).unwrap()
}

pub fn e(ring: &Ring, s: &str) -> RingElement {
    parse_expression(s, ring).unwrap_or_else(|err| panic!("{s}: {err}"))
}

pub fn vf(ring: &Ring, cs: &[&str]) -> VectorField {
    VectorField::new(ring, cs.iter().map(|c| e(ring, c)).collect()).unwrap()
}

pub fn form(ring: &Ring, cs: &[&str]) -> OneForm {
    OneForm::new(ring, cs.iter().map(|c| e(ring, c)).collect()).unwrap()
}

pub fn vector(ring: &Ring, cs: &[&str]) -> Vector {
    Vector::new(ring, cs.iter().map(|c| e(ring, c)).collect()).unwrap()
}

/// Evaluates a polynomial at a rational point, term by term.
pub fn eval_poly(p: &Poly, point: &[Rational]) -> Rational {
    p.terms().fold(q(0, 1), |acc, (m, c)| {
        let value = m
            .exponents()
            .iter()
            .zip(point)
            .fold(c.clone(), |v, (&k, x)| {
                v * num_traits::pow(x.clone(), k as usize)
            });
        acc + value
    })
}

/// Sparse polynomials with small integer coefficients.
pub fn poly_strategy(nvars: usize, max_degree: u32) -> impl Strategy<Value = Poly> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_degree, nvars), -9i64..=9),
        0..5,
    )
    .prop_map(move |terms| {
        Poly::from_terms(
            nvars,
            terms
                .into_iter()
                .map(|(exps, c)| (Monomial::from_exponents(exps), q(c, 1))),
        )
    })
}

pub fn poly_element(ring: &Ring) -> impl Strategy<Value = RingElement> {
    let ring = ring.clone();
    poly_strategy(ring.nvars(), 3).prop_map(move |p| RingElement::from_poly(&ring, p))
}

pub fn point_strategy(nvars: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-7i64..=7, 1i64..=5), nvars)
        .prop_map(|v| v.into_iter().map(|(n, d)| q(n, d)).collect())
}

pub fn field_strategy(ring: &Ring) -> impl Strategy<Value = VectorField> {
    let r = ring.clone();
    prop::collection::vec(poly_element(ring), ring.nvars())
        .prop_map(move |cs| VectorField::new(&r, cs).unwrap())
}

pub fn form_strategy(ring: &Ring) -> impl Strategy<Value = OneForm> {
    let r = ring.clone();
    prop::collection::vec(poly_element(ring), ring.nvars())
        .prop_map(move |cs| OneForm::new(&r, cs).unwrap())
}
