//! The registry of identities the verifier knows how to test.

use std::fmt;
use std::str::FromStr;

use super::{run_trials, CheckResult, Evidence, Sampler, SamplerConfig, Status};
use crate::calculus::{
    apply, d_oneform, d_scalar, lie_derivative, pair, vf_bracket, TwoForm, VectorField,
};
use crate::cdo::cdo_bracket;
use crate::prelie::{
    anchor, anchor_of_differential, associator, bracket, jacobiator, nabla_operator,
    skew_asymmetry_witness, PreLieStructure,
};
use crate::rings::Ring;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CheckKind {
    DLeibniz,
    LdModule,
    LdField,
    Ld2,
    ModuleBracket,
    VfJacobi,
    DdZero,
    Duality,
    Leibniz,
    BracketJacobi,
    LeftSymmetry,
    AnchorHom,
    Flatness,
    SkewProbe,
}

impl CheckKind {
    /// Suite order for ring targets.
    pub const CALCULUS: [CheckKind; 7] = [
        CheckKind::DLeibniz,
        CheckKind::LdModule,
        CheckKind::LdField,
        CheckKind::Ld2,
        CheckKind::ModuleBracket,
        CheckKind::VfJacobi,
        CheckKind::DdZero,
    ];

    /// Suite order for structure targets. `SkewProbe` only applies to `Ω¹` instances.
    pub const STRUCTURE: [CheckKind; 7] = [
        CheckKind::Duality,
        CheckKind::Leibniz,
        CheckKind::BracketJacobi,
        CheckKind::LeftSymmetry,
        CheckKind::AnchorHom,
        CheckKind::Flatness,
        CheckKind::SkewProbe,
    ];

    pub fn all() -> impl Iterator<Item = CheckKind> {
        Self::CALCULUS.into_iter().chain(Self::STRUCTURE)
    }

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::DLeibniz => "d_leibniz",
            CheckKind::LdModule => "ld_module",
            CheckKind::LdField => "ld_field",
            CheckKind::Ld2 => "ld2",
            CheckKind::ModuleBracket => "module_bracket",
            CheckKind::VfJacobi => "vf_jacobi",
            CheckKind::DdZero => "dd_zero",
            CheckKind::Duality => "duality",
            CheckKind::Leibniz => "leibniz",
            CheckKind::BracketJacobi => "bracket_jacobi",
            CheckKind::LeftSymmetry => "left_symmetry",
            CheckKind::AnchorHom => "anchor_hom",
            CheckKind::Flatness => "flatness",
            CheckKind::SkewProbe => "skew_probe",
        }
    }

    pub fn is_calculus(self) -> bool {
        Self::CALCULUS.contains(&self)
    }

    fn stream(self) -> u64 {
        Self::all().position(|k| k == self).expect("registered") as u64 + 1
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::all()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown check kind `{s}`")))
    }
}

#[derive(Clone, Copy, Debug)]
pub enum Target<'a> {
    Ring(&'a Ring),
    Structure(&'a PreLieStructure),
}

impl Target<'_> {
    fn applicable(&self, kind: CheckKind) -> bool {
        match self {
            Target::Ring(_) => kind.is_calculus(),
            Target::Structure(s) => {
                !kind.is_calculus() && (kind != CheckKind::SkewProbe || s.omega().is_some())
            }
        }
    }
}

pub fn run_check(target: Target<'_>, kind: CheckKind, cfg: &SamplerConfig) -> Result<CheckResult> {
    if !target.applicable(kind) {
        return Err(Error::Config(format!(
            "check `{kind}` does not apply to this target"
        )));
    }
    match target {
        Target::Ring(ring) => calculus_check(ring, kind, cfg),
        Target::Structure(s) => structure_check(s, kind, cfg),
    }
}

/// Every applicable check in registry order.
pub fn run_suite(target: Target<'_>, cfg: &SamplerConfig) -> Result<Vec<CheckResult>> {
    CheckKind::all()
        .filter(|k| target.applicable(*k))
        .map(|k| run_check(target, k, cfg))
        .collect()
}

/// Any failure fails; otherwise any inapplicable result makes the whole inapplicable.
pub fn overall_status<'a>(results: impl IntoIterator<Item = &'a CheckResult>) -> Status {
    let mut overall = Status::Pass;
    for r in results {
        match r.status {
            Status::Fail => return Status::Fail,
            Status::Inapplicable => overall = Status::Inapplicable,
            Status::Pass => {}
        }
    }
    overall
}

fn calculus_check(ring: &Ring, kind: CheckKind, cfg: &SamplerConfig) -> Result<CheckResult> {
    let field = |s: &mut Sampler| s.vector_field(ring);
    run_trials(kind.name(), cfg, kind.stream(), cfg.trials, |s, _| {
        Ok(match kind {
            CheckKind::DLeibniz => {
                let (r, t) = (s.element(ring), s.element(ring));
                let lhs = d_scalar(&(&r * &t))?;
                let rhs = d_scalar(&r)?.scale(&t)?.add(&d_scalar(&t)?.scale(&r)?)?;
                Evidence::new(lhs, rhs).input("r", r).input("s", t)
            }
            CheckKind::LdModule => {
                let (x, r, a) = (field(s), s.element(ring), s.one_form(ring));
                let lhs = lie_derivative(&x, &a.scale(&r)?)?;
                let rhs = a
                    .scale(&apply(&x, &r)?)?
                    .add(&lie_derivative(&x, &a)?.scale(&r)?)?;
                Evidence::new(lhs, rhs)
                    .input("X", x)
                    .input("r", r)
                    .input("alpha", a)
            }
            CheckKind::LdField => {
                let (x, r, a) = (field(s), s.element(ring), s.one_form(ring));
                let lhs = lie_derivative(&x.scale(&r)?, &a)?;
                let rhs = lie_derivative(&x, &a)?
                    .scale(&r)?
                    .add(&d_scalar(&r)?.scale(&pair(&a, &x)?)?)?;
                Evidence::new(lhs, rhs)
                    .input("X", x)
                    .input("r", r)
                    .input("alpha", a)
            }
            CheckKind::Ld2 => {
                let (x, y, a) = (field(s), field(s), s.one_form(ring));
                let lhs = pair(&lie_derivative(&x, &a)?, &y)?;
                let rhs = d_oneform(&a)?.evaluate(&x, &y)? + apply(&y, &pair(&a, &x)?)?;
                Evidence::new(lhs, rhs)
                    .input("X", x)
                    .input("Y", y)
                    .input("alpha", a)
            }
            CheckKind::ModuleBracket => {
                let (r, t, x, y) = (s.element(ring), s.element(ring), field(s), field(s));
                let lhs = vf_bracket(&x.scale(&r)?, &y.scale(&t)?)?;
                let rhs = y
                    .scale(&(&r * apply(&x, &t)?))?
                    .sub(&x.scale(&(&t * apply(&y, &r)?))?)?
                    .add(&vf_bracket(&x, &y)?.scale(&(&r * &t))?)?;
                Evidence::new(lhs, rhs)
                    .input("r", r)
                    .input("s", t)
                    .input("X", x)
                    .input("Y", y)
            }
            CheckKind::VfJacobi => {
                let (x, y, z) = (field(s), field(s), field(s));
                let lhs = vf_bracket(&x, &vf_bracket(&y, &z)?)?
                    .add(&vf_bracket(&y, &vf_bracket(&z, &x)?)?)?
                    .add(&vf_bracket(&z, &vf_bracket(&x, &y)?)?)?;
                Evidence::new(lhs, VectorField::zero(ring))
                    .input("X", x)
                    .input("Y", y)
                    .input("Z", z)
            }
            CheckKind::DdZero => {
                let r = s.element(ring);
                Evidence::new(d_oneform(&d_scalar(&r)?)?, TwoForm::zero(ring)).input("r", r)
            }
            _ => unreachable!("structure check on a ring target"),
        })
    })
}

fn structure_check(
    st: &PreLieStructure,
    kind: CheckKind,
    cfg: &SamplerConfig,
) -> Result<CheckResult> {
    let ring = st.ring();
    let rank = st.l_module().rank;
    let l = |s: &mut Sampler| s.vector(ring, rank);
    let w = |v: &crate::linalg::Vector| st.l_item(v.clone());
    let result = run_trials(kind.name(), cfg, kind.stream(), cfg.trials, |s, _| {
        Ok(match kind {
            CheckKind::Duality => {
                let data = st.data();
                let (a, n) = (l(s), s.vector(ring, data.space.n().rank));
                let lhs = apply(&data.x0, &data.space.pair(&a, &n)?)?;
                let rhs = data.space.pair(&data.e0.apply(&a)?, &n)?
                    + data.space.pair(&a, &data.d0.apply(&n)?)?;
                Evidence::new(lhs, rhs).input("l", w(&a)).input("n", n)
            }
            CheckKind::Leibniz => {
                let (r, l1, l2) = (s.element(ring), l(s), l(s));
                let lhs = bracket(st, &l1, &l2.scale(&r)?)?;
                let rhs = bracket(st, &l1, &l2)?
                    .scale(&r)?
                    .add(&l2.scale(&apply(&anchor(st, &l1)?, &r)?)?)?;
                Evidence::new(w(&lhs), w(&rhs))
                    .input("r", r)
                    .input("l1", w(&l1))
                    .input("l2", w(&l2))
            }
            CheckKind::BracketJacobi => {
                let (l1, l2, l3) = (l(s), l(s), l(s));
                let lhs = jacobiator(st, &l1, &l2, &l3)?;
                let zero = st.l_module().zero();
                Evidence::new(w(&lhs), w(&zero))
                    .input("l1", w(&l1))
                    .input("l2", w(&l2))
                    .input("l3", w(&l3))
            }
            CheckKind::LeftSymmetry => {
                let (l1, l2, l3) = (l(s), l(s), l(s));
                let lhs = associator(st, &l1, &l2, &l3)?;
                let rhs = associator(st, &l2, &l1, &l3)?;
                Evidence::new(w(&lhs), w(&rhs))
                    .input("l1", w(&l1))
                    .input("l2", w(&l2))
                    .input("l3", w(&l3))
            }
            CheckKind::AnchorHom => {
                let (l1, l2) = (l(s), l(s));
                let lhs = anchor(st, &bracket(st, &l1, &l2)?)?;
                let rhs = vf_bracket(&anchor(st, &l1)?, &anchor(st, &l2)?)?;
                Evidence::new(lhs, rhs)
                    .input("l1", w(&l1))
                    .input("l2", w(&l2))
            }
            CheckKind::Flatness => {
                let (l1, l2) = (l(s), l(s));
                let lhs = nabla_operator(st, &bracket(st, &l1, &l2)?)?;
                let rhs = cdo_bracket(&nabla_operator(st, &l1)?, &nabla_operator(st, &l2)?)?;
                Evidence::new(lhs, rhs)
                    .input("l1", w(&l1))
                    .input("l2", w(&l2))
            }
            CheckKind::SkewProbe => {
                let (x, y) = st.omega().expect("applicability checked");
                let (r1, r2) = (s.element(ring), s.element(ring));
                let lhs = anchor_of_differential(st, &r1, &r2)?;
                let rhs = apply(y, &r1)? * apply(x, &r2)?;
                Evidence::new(lhs, rhs).input("r1", r1).input("r2", r2)
            }
            _ => unreachable!("calculus check on a structure target"),
        })
    })?;
    if kind == CheckKind::SkewProbe && result.status == Status::Pass {
        let note = match skew_asymmetry_witness(st, cfg)? {
            Some(w) => format!(
                "not skew: r1 = {}, r2 = {}: Y(r1)X(r2) = {}, -Y(r2)X(r1) = {}",
                w.inputs[0].value[0], w.inputs[1].value[0], w.lhs[0], w.rhs[0]
            ),
            None => "no asymmetry witness found".to_string(),
        };
        return Ok(CheckResult {
            note: Some(note),
            ..result
        });
    }
    Ok(result)
}
