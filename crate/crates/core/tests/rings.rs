mod common;

use common::*;
use cyclor::rings::{gcd, Poly, RatFunc, Series};
use cyclor::{parse_expression, Error, Rational, RingDescriptor, RingElement};
use proptest::prelude::*;

fn derivative_oracle(p: &Poly, var: usize) -> Poly {
    Poly::from_terms(
        p.nvars(),
        p.terms()
            .filter(|(m, _)| m.exponents()[var] > 0)
            .map(|(m, c)| {
                let mut exps = m.exponents().to_vec();
                let k = exps[var];
                exps[var] -= 1;
                (
                    cyclor::rings::Monomial::from_exponents(exps),
                    c * Rational::from_integer(k.into()),
                )
            }),
    )
}

#[test]
fn parse_examples_against_oracles() {
    let r = poly_ring(&["t"]);
    let p = e(&r, "(t+1)*(t-1)");
    for x in -3..=3 {
        let x = q(x, 2);
        assert_eq!(
            eval_poly(p.as_poly().unwrap(), std::slice::from_ref(&x)),
            &x * &x - q(1, 1)
        );
    }
    assert_eq!(p.as_poly().unwrap().num_terms(), 2);

    let s = RingDescriptor::series("t", 4).unwrap();
    let g = e(&s, "1/(1-t)");
    assert_eq!(
        g.as_series().unwrap().coeffs(),
        &[q(1, 1), q(1, 1), q(1, 1), q(1, 1)]
    );
    // (1 - t)·g = 1 up to the precision
    assert_eq!(&g * &e(&s, "1 - t"), e(&s, "1"));
}

#[test]
fn derive_examples() {
    let r = poly_ring(&["t1", "t2"]);
    assert_eq!(
        e(&r, "t1^3*t2 + t2^2").derive(0).unwrap(),
        e(&r, "3*t1^2*t2")
    );
    assert!(e(&r, "5").derive(1).unwrap().is_zero());
    let s = RingDescriptor::series("t", 4).unwrap();
    let d = e(&s, "1 + t^2/6").derive(0).unwrap();
    assert_eq!(d.precision(), Some(3));
    assert_eq!(
        d.as_series().unwrap().coeffs(),
        &[q(0, 1), q(1, 3), q(0, 1)]
    );
    let rf = RingDescriptor::ratfunc(&["t"]).unwrap();
    assert_eq!(
        e(&rf, "(t^2 + 1)/t").derive(0).unwrap(),
        e(&rf, "(t^2 - 1)/t^2")
    );
}

#[test]
fn exact_divide_examples() {
    let r = poly_ring(&["t1", "t2"]);
    assert_eq!(
        e(&r, "t1^2 - t2^2")
            .exact_divide(&e(&r, "t1 - t2"))
            .unwrap(),
        Some(e(&r, "t1 + t2"))
    );
    assert_eq!(e(&r, "t1 + 1").exact_divide(&e(&r, "t1")).unwrap(), None);
    assert_eq!(
        e(&r, "t1").exact_divide(&e(&r, "0")).unwrap_err(),
        Error::DivisionByZero
    );
    let s = RingDescriptor::series("t", 5).unwrap();
    assert_eq!(e(&s, "1").exact_divide(&e(&s, "t")).unwrap(), None);
}

#[test]
fn mismatched_rings_are_rejected() {
    let a = poly_ring(&["t"]);
    let b = RingDescriptor::series("t", 5).unwrap();
    assert_eq!(
        e(&a, "t").try_add(&e(&b, "t")).unwrap_err(),
        Error::RingMismatch
    );
    assert!(RingDescriptor::series("t", 1).is_err());
    assert!(RingDescriptor::poly(&["t", "t"]).is_err());
}

fn ring2() -> cyclor::Ring {
    poly_ring(&["t1", "t2"])
}

fn ratfunc_strategy() -> impl Strategy<Value = RingElement> {
    let r = RingDescriptor::ratfunc(&["t1", "t2"]).unwrap();
    (poly_strategy(2, 2), poly_strategy(2, 2)).prop_filter_map("zero denominator", move |(n, d)| {
        RatFunc::new(n, d)
            .ok()
            .map(|f| RingElement::from_ratfunc(&r, f).unwrap())
    })
}

fn series_strategy(prec: usize) -> impl Strategy<Value = RingElement> {
    let r = RingDescriptor::series("t", 8).unwrap();
    prop::collection::vec(-9i64..=9, prec).prop_map(move |cs| {
        RingElement::from_series(&r, Series::new(cs.into_iter().map(|c| q(c, 1)).collect()))
            .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn poly_ops_are_evaluation_homomorphic(a in poly_element(&ring2()), b in poly_element(&ring2()), x in point_strategy(2)) {
        let ev = |r: &RingElement| eval_poly(r.as_poly().unwrap(), &x);
        prop_assert_eq!(ev(&(&a * &b)), ev(&a) * ev(&b));
        prop_assert_eq!(ev(&(&a + &b)), ev(&a) + ev(&b));
        prop_assert_eq!(ev(&(&a - &b)), ev(&a) - ev(&b));
        prop_assert_eq!(ev(&a.pow(3)), ev(&a) * ev(&a) * ev(&a));
    }

    #[test]
    fn ring_axioms(a in poly_element(&ring2()), b in poly_element(&ring2()), c in poly_element(&ring2())) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &RingElement::one(&ring2()), a.clone());
    }

    #[test]
    fn ratfunc_axioms_and_normal_form(a in ratfunc_strategy(), b in ratfunc_strategy(), c in ratfunc_strategy()) {
        prop_assert_eq!(&(&a + &b) * &c, &a * &c + &b * &c);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        let f = a.as_ratfunc().unwrap();
        prop_assert!(f.denominator().leading_coefficient() == q(1, 1));
        prop_assert!(gcd(f.numerator(), f.denominator()).total_degree().unwrap_or(0) == 0);
        if !b.is_zero() {
            let quotient = a.exact_divide(&b).unwrap().unwrap();
            prop_assert_eq!(&quotient * &b, a.clone());
        }
    }

    #[test]
    fn series_precision_bookkeeping((a, b) in (2usize..=8, 2usize..=8).prop_flat_map(|(p, k)| (series_strategy(p), series_strategy(k)))) {
        let (p, k) = (a.precision().unwrap(), b.precision().unwrap());
        prop_assert_eq!((&a + &b).precision(), Some(p.min(k)));
        prop_assert_eq!((&a * &b).precision(), Some(p.min(k)));
        prop_assert_eq!(a.derive(0).unwrap().precision(), Some(p - 1));
    }

    #[test]
    fn series_ring_axioms(a in series_strategy(8), b in series_strategy(8), c in series_strategy(8)) {
        prop_assert_eq!(&(&a + &b) * &c, &a * &c + &b * &c);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!((&a * &b).derive(0).unwrap(), a.derive(0).unwrap() * &b + &a * b.derive(0).unwrap());
    }

    #[test]
    fn derive_matches_oracle_and_leibniz(a in poly_element(&ring2()), b in poly_element(&ring2()), var in 0usize..2) {
        let d = a.derive(var).unwrap();
        prop_assert_eq!(d.as_poly().unwrap(), &derivative_oracle(a.as_poly().unwrap(), var));
        prop_assert_eq!((&a * &b).derive(var).unwrap(), a.derive(var).unwrap() * &b + &a * b.derive(var).unwrap());
    }

    #[test]
    fn ratfunc_leibniz(a in ratfunc_strategy(), b in ratfunc_strategy(), var in 0usize..2) {
        prop_assert_eq!((&a * &b).derive(var).unwrap(), a.derive(var).unwrap() * &b + &a * b.derive(var).unwrap());
    }

    #[test]
    fn exact_divide_recovers_factor(a in poly_element(&ring2()), b in poly_element(&ring2())) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_divide(&b).unwrap(), Some(a.clone()));
        if let Some(c) = a.exact_divide(&b).unwrap() {
            prop_assert_eq!(&c * &b, a);
        }
    }

    #[test]
    fn gcd_divides_both(a in poly_strategy(2, 2), b in poly_strategy(2, 2), c in poly_strategy(2, 2)) {
        prop_assume!(!c.is_zero() && !(a.is_zero() && b.is_zero()));
        let ac = &a * &c;
        let bc = &b * &c;
        let g = gcd(&ac, &bc);
        prop_assert!(ac.exact_div(&g).is_some());
        prop_assert!(bc.exact_div(&g).is_some());
        prop_assert!(g.exact_div(&c.monic()).is_some());
    }

    #[test]
    fn print_parse_round_trip(a in poly_element(&ring2()), f in ratfunc_strategy(), s in series_strategy(8)) {
        prop_assert_eq!(parse_expression(&a.to_string(), a.ring()).unwrap(), a.clone());
        prop_assert_eq!(parse_expression(&f.to_string(), f.ring()).unwrap(), f.clone());
        let back = parse_expression(&s.to_string(), s.ring()).unwrap();
        prop_assert_eq!(back.as_series().unwrap().coeffs(), s.as_series().unwrap().coeffs());
    }
}
