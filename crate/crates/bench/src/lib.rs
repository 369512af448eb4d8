//! Workloads shared by the benchmarks.

use cyclor::ode::{dg_field, series_solve, SecondOrderOde};
use cyclor::prelie::{standard_omega_instance, Variant};
use cyclor::verifier::Sampler;
use cyclor::{PreLieStructure, Ring, RingDescriptor, RingElement, SamplerConfig, VectorField};

/// `count` sampled elements of `ring`, reproducible across runs.
pub fn elements(ring: &Ring, count: usize, max_degree: u32) -> Vec<RingElement> {
    let cfg = SamplerConfig {
        max_degree,
        max_terms: 6,
        ..SamplerConfig::default()
    };
    let mut s = Sampler::new(&cfg, 0xbe7c);
    (0..count).map(|_| s.nonzero_element(ring)).collect()
}

/// The thm2 structure with `X = ∂` and `Y = g∂`, `g` the Airy series mod `t^order`.
pub fn airy_structure(order: usize) -> PreLieStructure {
    let ring = RingDescriptor::series("t", order).unwrap();
    let g = RingElement::from_series(&ring, series_solve(&SecondOrderOde::airy(order).unwrap()))
        .unwrap();
    standard_omega_instance(
        &VectorField::basis(&ring, 0),
        &dg_field(&g).unwrap(),
        Variant::Thm2,
        false,
    )
    .unwrap()
}

pub fn euler_structure() -> PreLieStructure {
    let ring = RingDescriptor::poly(&["t1", "t2"]).unwrap();
    let p = |s| cyclor::parse_expression(s, &ring).unwrap();
    let x = VectorField::new(&ring, vec![p("t1"), p("t2")]).unwrap();
    let y = VectorField::new(&ring, vec![p("t1*t2"), p("0")]).unwrap();
    standard_omega_instance(&x, &y, Variant::Thm1, false).unwrap()
}
