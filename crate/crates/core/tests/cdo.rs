mod common;

use common::*;
use cyclor::calculus::{apply, vf_bracket};
use cyclor::cdo::*;
use cyclor::{Error, Matrix, Ring, RingElement, SamplerConfig, Status, Vector, VectorField};
use proptest::prelude::*;

fn ring2() -> Ring {
    poly_ring(&["t1", "t2"])
}

fn module(rank: usize) -> FreeModuleDesc {
    FreeModuleDesc::new(&ring2(), rank).unwrap()
}

fn vector_strategy(rank: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(poly_element(&ring2()), rank)
        .prop_map(|v| Vector::new(&ring2(), v).unwrap())
}

fn matrix_strategy(rank: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(poly_element(&ring2()), rank * rank)
        .prop_map(move |v| Matrix::from_fn(&ring2(), rank, rank, |i, j| v[i * rank + j].clone()))
}

fn operator_strategy(rank: usize) -> impl Strategy<Value = CdoOperator> {
    (matrix_strategy(rank), field_strategy(&ring2()))
        .prop_map(move |(a, x)| CdoOperator::new(&module(rank), a, x).unwrap())
}

/// Idempotents `[[1, a], [0, 0]]`, `[[0, a], [0, 1]]`, and their transposes.
fn idempotent_strategy() -> impl Strategy<Value = IdempotentPresentation> {
    (poly_element(&ring2()), 0usize..4).prop_map(|(a, shape)| {
        let r = ring2();
        let (one, zero) = (RingElement::one(&r), RingElement::zero(&r));
        let rows = match shape {
            0 => vec![vec![one.clone(), a], vec![zero.clone(), zero]],
            1 => vec![vec![zero.clone(), a], vec![zero, one]],
            2 => vec![vec![one, zero.clone()], vec![a, zero]],
            _ => vec![vec![zero.clone(), zero], vec![a, one]],
        };
        IdempotentPresentation::new(&module(2), Matrix::from_rows(&r, rows).unwrap()).unwrap()
    })
}

/// `Σ_i X(f_i)·P(e_i)`, summed directly.
fn summation_lift(pres: &IdempotentPresentation, x: &VectorField, f: &Vector) -> Vector {
    let p = pres.matrix();
    (0..f.len()).fold(Vector::zero(f.ring(), f.len()), |acc, i| {
        acc.add(&p.column(i).scale(&apply(x, f.entry(i)).unwrap()).unwrap())
            .unwrap()
    })
}

fn small() -> SamplerConfig {
    SamplerConfig::default().with_trials(10)
}

#[test]
fn squaring_is_not_a_cdo() {
    let m = module(2);
    let x = VectorField::basis(&m.ring, 0);
    let square = |v: &Vector| Ok(v.map(|c| c * c));
    let res = cdo_check_fn("squaring", &m, &x, &SamplerConfig::default(), square).unwrap();
    assert_eq!(res.status, Status::Fail);
    let w = res.witness.unwrap();
    assert_eq!(w.input("r").unwrap().value, vec!["t1"]);
    let v = &w.input("v").unwrap().value;
    let v = Vector::new(&m.ring, v.iter().map(|s| e(&m.ring, s)).collect()).unwrap();
    let r = e(&m.ring, "t1");
    let lhs = square(&v.scale(&r).unwrap())
        .unwrap()
        .sub(&square(&v).unwrap().scale(&r).unwrap())
        .unwrap();
    assert_ne!(lhs, v.scale(&apply(&x, &r).unwrap()).unwrap());
}

#[test]
fn linear_operators_pass() {
    let m = module(2);
    let a = Matrix::from_rows(
        &m.ring,
        vec![
            vec![e(&m.ring, "t1"), e(&m.ring, "3")],
            vec![e(&m.ring, "t2^2"), e(&m.ring, "0")],
        ],
    )
    .unwrap();
    let op = CdoOperator::new(&m, a, VectorField::zero(&m.ring)).unwrap();
    assert!(cdo_check(&op, &SamplerConfig::default()).unwrap().passed());
}

#[test]
fn lift_examples() {
    let r = poly_ring(&["t"]);
    let m = FreeModuleDesc::new(&r, 2).unwrap();
    let p = Matrix::from_rows(
        &r,
        vec![vec![e(&r, "1"), e(&r, "t")], vec![e(&r, "0"), e(&r, "0")]],
    )
    .unwrap();
    let pres = IdempotentPresentation::new(&m, p).unwrap();
    let d = vf(&r, &["1"]);
    let lift = projective_lift(&pres, &d).unwrap();
    let s = e(&r, "t^4 - t");
    let n = Vector::new(&r, vec![s.clone(), e(&r, "0")]).unwrap();
    assert_eq!(lift.apply(&n).unwrap(), summation_lift(&pres, &d, &n));
    assert_eq!(
        lift.apply(&n).unwrap(),
        Vector::new(&r, vec![s.derive(0).unwrap(), e(&r, "0")]).unwrap()
    );

    let bad = Matrix::from_rows(
        &r,
        vec![vec![e(&r, "t"), e(&r, "0")], vec![e(&r, "0"), e(&r, "1")]],
    )
    .unwrap();
    assert_eq!(
        IdempotentPresentation::new(&m, bad).unwrap_err(),
        Error::NotIdempotent
    );
}

#[test]
fn anchor_surjectivity() {
    let r = ring2();
    let p = Matrix::from_rows(
        &r,
        vec![
            vec![e(&r, "1"), e(&r, "t1*t2")],
            vec![e(&r, "0"), e(&r, "0")],
        ],
    )
    .unwrap();
    let pres = IdempotentPresentation::new(&module(2), p).unwrap();
    for i in 0..2 {
        let d = VectorField::basis(&r, i);
        assert_eq!(projective_lift(&pres, &d).unwrap().field(), &d);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bracket_is_the_commutator(op1 in operator_strategy(2), op2 in operator_strategy(2), vs in prop::collection::vec(vector_strategy(2), 100)) {
        let b = cdo_bracket(&op1, &op2).unwrap();
        for v in &vs {
            let commutator = op1.apply(&op2.apply(v).unwrap()).unwrap().sub(&op2.apply(&op1.apply(v).unwrap()).unwrap()).unwrap();
            prop_assert_eq!(b.apply(v).unwrap(), commutator);
        }
        prop_assert_eq!(b.field(), &vf_bracket(op1.field(), op2.field()).unwrap());
        prop_assert!(cdo_bracket(&op1, &op1).unwrap() == CdoOperator::zero(&module(2)));
        prop_assert!(cdo_check(&b, &small()).unwrap().passed());
    }

    #[test]
    fn lift_agrees_with_summation_formula(pres in idempotent_strategy(), x in field_strategy(&ring2()), f in vector_strategy(2), r in poly_element(&ring2())) {
        let lift = projective_lift(&pres, &x).unwrap();
        let n = pres.project(&f).unwrap();
        let dn = lift.apply(&n).unwrap();
        prop_assert_eq!(&dn, &summation_lift(&pres, &x, &n));
        prop_assert_eq!(pres.project(&dn).unwrap(), dn.clone());
        let leibniz = dn.scale(&r).unwrap().add(&n.scale(&apply(&x, &r).unwrap()).unwrap()).unwrap();
        prop_assert_eq!(lift.apply(&n.scale(&r).unwrap()).unwrap(), leibniz);
        prop_assert!(cdo_check(&lift, &small()).unwrap().passed());
    }

    #[test]
    fn connection_is_linear_and_anchored(pres in idempotent_strategy(), anchor in matrix_strategy(2), l1 in vector_strategy(2), l2 in vector_strategy(2), r in poly_element(&ring2())) {
        let conn = connection_from_lift(anchor, &pres).unwrap();
        let nabla = |l: &Vector| conn.apply(l).unwrap();
        prop_assert!(nabla(&l1.scale(&r).unwrap()) == nabla(&l1).scale(&r).unwrap());
        prop_assert!(nabla(&l1.add(&l2).unwrap()) == nabla(&l1).add(&nabla(&l2)).unwrap());
        let op = nabla(&l1);
        prop_assert_eq!(op.field(), &conn.anchor(&l1).unwrap());
    }
}
