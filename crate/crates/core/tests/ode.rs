mod common;

use common::*;
use cyclor::calculus::vf_bracket;
use cyclor::ode::*;
use cyclor::prelie::{bracket, eigen_solve, standard_omega_instance, Variant};
use cyclor::rings::RingDescriptor;
use cyclor::{Rational, RingElement, SamplerConfig};
use proptest::prelude::*;

fn airy_series(n: usize) -> RingElement {
    let ring = RingDescriptor::series("t", n).unwrap();
    RingElement::from_series(&ring, series_solve(&SecondOrderOde::airy(n).unwrap())).unwrap()
}

#[test]
fn airy_matches_three_step_recurrence() {
    let n = 32;
    let mut a = vec![q(0, 1); n];
    a[0] = q(1, 1);
    for k in 3..n {
        a[k] = a[k - 3].clone() / Rational::from_integer(((k * (k - 1)) as i64).into());
    }
    assert_eq!(
        series_solve(&SecondOrderOde::airy(n).unwrap()).coeffs(),
        &a[..]
    );
}

#[test]
fn airy_second_order_condition() {
    let g = airy_series(32);
    let ring = g.ring().clone();
    let d = vf(&ring, &["1"]);
    let dg = dg_field(&g).unwrap();
    let lhs = vf_bracket(&d, &vf_bracket(&d, &dg).unwrap()).unwrap();
    let rhs = dg.scale(&e(&ring, "t")).unwrap();
    assert_eq!(lhs, rhs);
    assert_eq!(lhs.coeff(0).precision(), Some(30));
}

#[test]
fn closing_example_on_airy() {
    let g = airy_series(32);
    let res = closing_example_check(&g, &SamplerConfig::default()).unwrap();
    assert!(res.passed(), "{res:?}");
    assert_eq!(res.trials, 100);
    assert!(res.precision.unwrap() >= 29);
}

#[test]
fn closing_example_by_hand() {
    let r = poly_ring(&["t"]);
    let s =
        standard_omega_instance(&vf(&r, &["1"]), &vf(&r, &["1"]), Variant::Thm2, false).unwrap();
    let b = bracket(&s, &vector(&r, &["t"]), &vector(&r, &["t^2"])).unwrap();
    assert_eq!(b, vector(&r, &["t^2"]));
    assert_eq!(-hirota(&e(&r, "t"), &e(&r, "t^2")).unwrap(), e(&r, "t^2"));
    assert!(
        reproduce_closing_example(&e(&r, "1"), &e(&r, "t"), &e(&r, "t^2"))
            .unwrap()
            .passed()
    );

    let sq = standard_omega_instance(&vf(&r, &["1"]), &vf(&r, &["t^2 - 3"]), Variant::Thm2, false)
        .unwrap();
    let f = vector(&r, &["t^3 + t"]);
    assert!(bracket(&sq, &f, &f).unwrap().is_zero());
}

#[test]
fn first_order_obstruction() {
    let r = poly_ring(&["t"]);
    let (x, y) = (vf(&r, &["1"]), vf(&r, &["t"]));
    assert_eq!(eigen_solve(&x, &y, 1).unwrap(), None);
    assert_eq!(eigen_solve(&x, &y, 2).unwrap(), Some(e(&r, "0")));
}

#[test]
fn dg_bracket_checks_pass() {
    let cfg = SamplerConfig::default();
    assert!(dg_bracket_check(&poly_ring(&["t"]), &cfg).unwrap().passed());
    assert!(
        dg_bracket_check(&RingDescriptor::series("t", 10).unwrap(), &cfg)
            .unwrap()
            .passed()
    );
    assert!(dg_bracket_check(
        &RingDescriptor::ratfunc(&["t"]).unwrap(),
        &cfg.clone().with_trials(30)
    )
    .unwrap()
    .passed());
}

fn univariate() -> cyclor::Ring {
    poly_ring(&["t"])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn series_solution_satisfies_the_equation(
        c in poly_strategy(1, 3),
        a0 in -5i64..=5,
        a1 in -5i64..=5,
        n in 3usize..=16,
    ) {
        let ode = SecondOrderOde::new(c.clone(), q(a0, 1), q(a1, 1), n).unwrap();
        let g = series_solve(&ode);
        prop_assert_eq!(&g.coeffs()[..2], &[q(a0, 1), q(a1, 1)]);
        let ring = RingDescriptor::series("t", n).unwrap();
        let g = RingElement::from_series(&ring, g).unwrap();
        let c = RingElement::from_poly(&univariate(), c).coerce(&ring).unwrap();
        let residual = g.derive(0).unwrap().derive(0).unwrap() - &c * &g;
        prop_assert!(residual.is_zero());
        prop_assert_eq!(residual.precision(), Some(n - 2));
    }

    #[test]
    fn dg_bracket_formula(f in poly_element(&univariate()), g in poly_element(&univariate())) {
        let lhs = vf_bracket(&dg_field(&f).unwrap(), &dg_field(&g).unwrap()).unwrap();
        let rhs = dg_field(&(&f * g.derive(0).unwrap() - f.derive(0).unwrap() * &g)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn fraction_field_rescaling(f in poly_strategy(1, 3), g in poly_strategy(1, 3)) {
        prop_assume!(!g.is_zero());
        let rf = RingDescriptor::ratfunc(&["t"]).unwrap();
        let (f, g) = (RingElement::from_poly(&univariate(), f).coerce(&rf).unwrap(), RingElement::from_poly(&univariate(), g).coerce(&rf).unwrap());
        let (df, dg) = (f.derive(0).unwrap(), g.derive(0).unwrap());
        let lhs = dg_field(&(&f * &dg - &df * &g)).unwrap();
        let factor = (&f * &dg).exact_divide(&g).unwrap().unwrap() - &df;
        prop_assert_eq!(lhs, dg_field(&g).unwrap().scale(&factor).unwrap());
    }

    #[test]
    fn hirota_is_antisymmetric(f in poly_element(&univariate()), h in poly_element(&univariate())) {
        prop_assert!(hirota(&f, &f).unwrap().is_zero());
        prop_assert_eq!(hirota(&f, &h).unwrap(), -hirota(&h, &f).unwrap());
    }

    #[test]
    fn closing_example_on_polynomials(g in poly_element(&univariate()), f in poly_element(&univariate()), h in poly_element(&univariate())) {
        prop_assume!(!g.is_zero());
        prop_assert!(reproduce_closing_example(&g, &f, &h).unwrap().passed());
    }
}
