//! One-variable fields `D_g = g·d/dt`, the Hirota operator, and series
//! solutions of `g'' = c·g`.

use num_traits::Zero;

use crate::calculus::{vf_bracket, VectorField};
use crate::linalg::Vector;
use crate::prelie::{bracket, standard_omega_instance, PreLieStructure, Variant};
use crate::rings::{Poly, Ring, RingElement, Series};
use crate::verifier::{run_trials, CheckResult, Evidence, SamplerConfig, Status};
use crate::{Error, Rational, Result};

const CLOSING_STREAM: u64 = 0x300;
const DG_BRACKET_STREAM: u64 = 0x301;

fn univariate(ring: &Ring) -> Result<()> {
    if ring.nvars() == 1 {
        Ok(())
    } else {
        Err(Error::NotUnivariate)
    }
}

/// `D_g = g·∂`.
pub fn dg_field(g: &RingElement) -> Result<VectorField> {
    univariate(g.ring())?;
    VectorField::new(g.ring(), vec![g.clone()])
}

/// `D_H(f, h) = f′h − fh′`.
pub fn hirota(f: &RingElement, h: &RingElement) -> Result<RingElement> {
    univariate(f.ring())?;
    Ok(f.derive(0)? * h - f * h.derive(0)?)
}

/// `g'' = c·g` with `g(0) = a0`, `g'(0) = a1`, solved modulo `t^truncation`.
#[derive(Clone, Debug, PartialEq)]
pub struct SecondOrderOde {
    pub c: Poly,
    pub a0: Rational,
    pub a1: Rational,
    pub truncation: usize,
}

impl SecondOrderOde {
    pub fn new(c: Poly, a0: Rational, a1: Rational, truncation: usize) -> Result<Self> {
        if c.nvars() != 1 {
            return Err(Error::NotUnivariate);
        }
        if truncation < 3 {
            return Err(Error::InvalidRing("truncation must be at least 3".into()));
        }
        Ok(SecondOrderOde {
            c,
            a0,
            a1,
            truncation,
        })
    }

    /// `c = t`, `g(0) = 1`, `g'(0) = 0`.
    pub fn airy(truncation: usize) -> Result<Self> {
        Self::new(
            Poly::var(1, 0),
            Rational::from_integer(1.into()),
            Rational::zero(),
            truncation,
        )
    }
}

/// Coefficients from `(n+2)(n+1)·a_{n+2} = Σ_k c_k·a_{n−k}`.
pub fn series_solve(ode: &SecondOrderOde) -> Series {
    let n = ode.truncation;
    let c: Vec<Rational> = (0..n as u32)
        .map(|k| ode.c.coeff_in(0, k).constant_value().unwrap_or_default())
        .collect();
    let mut a = vec![Rational::zero(); n];
    a[0] = ode.a0.clone();
    if n > 1 {
        a[1] = ode.a1.clone();
    }
    for m in 0..n.saturating_sub(2) {
        let s = (0..=m)
            .filter(|k| !c[*k].is_zero())
            .fold(Rational::zero(), |acc, k| acc + &c[k] * &a[m - k]);
        a[m + 2] = s / Rational::from_integer(((m + 2) * (m + 1)).into());
    }
    Series::new(a)
}

fn form(ring: &Ring, coeff: RingElement) -> Result<Vector> {
    Vector::new(ring, vec![coeff])
}

/// `[f dt, h dt]` in the thm2 structure with `X = ∂`, `Y = D_g`, against `−g·D_H(f, h) dt`.
pub fn reproduce_closing_example(
    g: &RingElement,
    f: &RingElement,
    h: &RingElement,
) -> Result<CheckResult> {
    let ring = g.ring();
    let s = standard_omega_instance(
        &dg_field(&RingElement::one(ring))?,
        &dg_field(g)?,
        Variant::Thm2,
        false,
    )?;
    let cmp = closing_evidence(&s, g, f, h)?;
    let c = cmp.comparison();
    Ok(CheckResult {
        name: "closing_example".into(),
        status: if c.equal { Status::Pass } else { Status::Fail },
        trials: 1,
        witness: (!c.equal).then(|| cmp.witness()),
        precision: c.precision,
        note: None,
    })
}

fn closing_evidence(
    s: &PreLieStructure,
    g: &RingElement,
    f: &RingElement,
    h: &RingElement,
) -> Result<Evidence> {
    let ring = g.ring();
    let lhs = bracket(s, &form(ring, f.clone())?, &form(ring, h.clone())?)?;
    let rhs = form(ring, -(g * hirota(f, h)?))?;
    Ok(Evidence::new(s.l_item(lhs), s.l_item(rhs))
        .input("f", f.clone())
        .input("h", h.clone()))
}

/// The closing example on `cfg.trials` random polynomial pairs, coerced into `g`'s ring.
pub fn closing_example_check(g: &RingElement, cfg: &SamplerConfig) -> Result<CheckResult> {
    let ring = g.ring().clone();
    univariate(&ring)?;
    let s = standard_omega_instance(
        &dg_field(&RingElement::one(&ring))?,
        &dg_field(g)?,
        Variant::Thm2,
        false,
    )?;
    let poly_ring = crate::rings::RingDescriptor::poly(&ring.variables[..])?;
    run_trials(
        "closing_example",
        cfg,
        CLOSING_STREAM,
        cfg.trials,
        |sampler, _| {
            let f = sampler.element(&poly_ring).coerce(&ring)?;
            let h = sampler.element(&poly_ring).coerce(&ring)?;
            closing_evidence(&s, g, &f, &h)
        },
    )
}

/// `[D_f, D_g] = D_{fg′−f′g}` on random pairs.
pub fn dg_bracket_check(ring: &Ring, cfg: &SamplerConfig) -> Result<CheckResult> {
    univariate(ring)?;
    run_trials(
        "dg_bracket",
        cfg,
        DG_BRACKET_STREAM,
        cfg.trials,
        |sampler, _| {
            let f = sampler.element(ring);
            let g = sampler.element(ring);
            let lhs = vf_bracket(&dg_field(&f)?, &dg_field(&g)?)?;
            let rhs = dg_field(&(&f * g.derive(0)? - f.derive(0)? * &g))?;
            Ok(Evidence::new(lhs, rhs).input("f", f).input("g", g))
        },
    )
}
