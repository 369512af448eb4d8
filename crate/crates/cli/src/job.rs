//! Verification jobs read from TOML spec files.
//!
//! ```toml
//! [ring]
//! kind = "series"          # poly | ratfunc | series
//! variables = ["t"]
//! truncation = 32          # series only
//!
//! [construction]
//! theorem = "thm2"         # thm1 | thm2
//! X = ["1"]
//! Y = ["airy"]
//!
//! [construction.ode]       # optional: binds the series solution of g'' = c·g
//! name = "airy"
//! c = "t"
//! a0 = 1
//! a1 = 0
//!
//! [checks]                 # every key optional
//! run = ["leibniz", "left_symmetry"]
//! trials = 100
//! seed = 1
//! force = false
//! ```

use std::path::Path;

use cyclor::ode::{series_solve, SecondOrderOde};
use cyclor::rings::{parse_expression_with, Bindings};
use cyclor::{
    CheckKind, Rational, Ring, RingDescriptor, RingElement, RingKind, SamplerConfig, Variant,
    VectorField,
};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    ring: RawRing,
    construction: RawConstruction,
    #[serde(default)]
    checks: RawChecks,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRing {
    kind: RingKind,
    variables: Vec<String>,
    truncation: Option<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConstruction {
    theorem: String,
    #[serde(rename = "X")]
    x: Vec<String>,
    #[serde(rename = "Y")]
    y: Vec<String>,
    ode: Option<RawOde>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOde {
    #[serde(default = "default_ode_name")]
    name: String,
    c: String,
    #[serde(default)]
    a0: Scalar,
    #[serde(default)]
    a1: Scalar,
}

fn default_ode_name() -> String {
    "g".to_string()
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(untagged)]
enum Scalar {
    Int(i64),
    Text(String),
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::Int(0)
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawChecks {
    run: Option<Vec<String>>,
    trials: Option<usize>,
    max_degree: Option<u32>,
    max_terms: Option<usize>,
    coeff_bound: Option<i64>,
    seed: Option<u64>,
    force: Option<bool>,
}

/// `g'' = c·g` with `g(0) = a0`, `g'(0) = a1`, bound to `name` in `Y`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OdeBlock {
    pub name: String,
    pub c: String,
    pub a0: String,
    pub a1: String,
}

#[derive(Clone, Debug)]
pub struct VerificationJob {
    pub source: String,
    pub ring: Ring,
    pub theorem: Variant,
    pub x: VectorField,
    pub y: VectorField,
    pub x_text: Vec<String>,
    pub y_text: Vec<String>,
    pub ode: Option<OdeBlock>,
    pub checks: Vec<CheckKind>,
    pub sampler: SamplerConfig,
    pub force: bool,
}

/// The job as echoed in reports.
#[derive(Clone, Debug, Serialize)]
pub struct JobEcho {
    pub source: String,
    pub ring: RingDescriptor,
    pub theorem: Variant,
    #[serde(rename = "X")]
    pub x: Vec<String>,
    #[serde(rename = "Y")]
    pub y: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ode: Option<OdeBlock>,
    pub checks: Vec<String>,
    pub sampler: SamplerConfig,
    pub force: bool,
}

impl VerificationJob {
    pub fn echo(&self) -> JobEcho {
        JobEcho {
            source: self.source.clone(),
            ring: (*self.ring).clone(),
            theorem: self.theorem,
            x: self.x_text.clone(),
            y: self.y_text.clone(),
            ode: self.ode.clone(),
            checks: self.checks.iter().map(|k| k.name().to_string()).collect(),
            sampler: self.sampler.clone(),
            force: self.force,
        }
    }
}

pub fn parse_spec(path: &Path) -> Result<VerificationJob, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| match e.kind() {
        std::io::ErrorKind::NotFound => CliError::FileNotFound(path.to_path_buf()),
        _ => CliError::Io(e),
    })?;
    let source = path.file_name().map_or_else(
        || path.display().to_string(),
        |n| n.to_string_lossy().into_owned(),
    );
    parse_spec_str(&text, &source)
}

pub fn parse_spec_str(text: &str, source: &str) -> Result<VerificationJob, CliError> {
    let raw: RawSpec = toml::from_str(text).map_err(|e| CliError::schema(source, e.message()))?;

    let ring = RingDescriptor::new(raw.ring.kind, raw.ring.variables, raw.ring.truncation)
        .map_err(|e| CliError::schema("ring", e.to_string()))?;
    let theorem: Variant = raw.construction.theorem.parse().map_err(|_| {
        CliError::schema(
            "construction.theorem",
            format!(
                "expected thm1 or thm2, found `{}`",
                raw.construction.theorem
            ),
        )
    })?;

    let mut bindings = Bindings::new();
    let ode = match raw.construction.ode {
        Some(o) => {
            let (block, g) = solve_ode(&ring, o, source)?;
            bindings.insert(block.name.clone(), g);
            Some(block)
        }
        None => None,
    };

    let field = |key: &str, exprs: &[String]| -> Result<VectorField, CliError> {
        if exprs.len() != ring.nvars() {
            return Err(CliError::schema(
                format!("construction.{key}"),
                format!(
                    "length mismatch: expected {}, found {}",
                    ring.nvars(),
                    exprs.len()
                ),
            ));
        }
        let coeffs = exprs
            .iter()
            .enumerate()
            .map(|(i, s)| {
                expression(
                    s,
                    &ring,
                    &bindings,
                    source,
                    &format!("construction.{key}[{i}]"),
                )
            })
            .collect::<Result<_, _>>()?;
        Ok(VectorField::new(&ring, coeffs)?)
    };
    let x = field("X", &raw.construction.x)?;
    let y = field("Y", &raw.construction.y)?;

    let checks = match raw.checks.run.clone() {
        None => CheckKind::STRUCTURE.to_vec(),
        Some(names) => {
            let mut kinds = Vec::new();
            for name in names {
                let kind: CheckKind = name.parse().map_err(|_| {
                    CliError::schema("checks.run", format!("unknown kind `{name}`"))
                })?;
                if !kinds.contains(&kind) {
                    kinds.push(kind);
                }
            }
            kinds
        }
    };

    let d = SamplerConfig::default();
    let c = raw.checks;
    let sampler = SamplerConfig {
        seed: c.seed.unwrap_or(d.seed),
        trials: c.trials.unwrap_or(d.trials),
        max_degree: c.max_degree.unwrap_or(d.max_degree),
        max_terms: c.max_terms.unwrap_or(d.max_terms),
        coeff_bound: c.coeff_bound.unwrap_or(d.coeff_bound),
    };
    if sampler.max_terms == 0 {
        return Err(CliError::schema("checks.max_terms", "must be positive"));
    }
    if sampler.coeff_bound <= 0 {
        return Err(CliError::schema("checks.coeff_bound", "must be positive"));
    }

    Ok(VerificationJob {
        source: source.to_string(),
        ring,
        theorem,
        x,
        y,
        x_text: raw.construction.x,
        y_text: raw.construction.y,
        ode,
        checks,
        sampler,
        force: c.force.unwrap_or(false),
    })
}

fn expression(
    text: &str,
    ring: &Ring,
    bindings: &Bindings,
    source: &str,
    key: &str,
) -> Result<RingElement, CliError> {
    parse_expression_with(text, ring, bindings).map_err(|e| match e {
        cyclor::Error::Syntax { position, expected } => CliError::Syntax {
            file: source.to_string(),
            key: key.to_string(),
            position,
            expected,
        },
        other => CliError::schema(key, other.to_string()),
    })
}

fn scalar(s: &Scalar, key: &str, source: &str) -> Result<Rational, CliError> {
    match s {
        Scalar::Int(n) => Ok(Rational::from_integer((*n).into())),
        Scalar::Text(t) => {
            let q = RingDescriptor::poly(&["t"])?;
            expression(t, &q, &Bindings::new(), source, key)?
                .as_poly()
                .and_then(|p| p.constant_value())
                .ok_or_else(|| CliError::schema(key, "expected a rational constant"))
        }
    }
}

fn solve_ode(ring: &Ring, raw: RawOde, source: &str) -> Result<(OdeBlock, RingElement), CliError> {
    let (Some(truncation), 1) = (ring.truncation, ring.nvars()) else {
        return Err(CliError::schema(
            "construction.ode",
            "requires a one-variable series ring",
        ));
    };
    if ring.var_index(&raw.name).is_some() {
        return Err(CliError::schema(
            "construction.ode.name",
            "shadows a ring variable",
        ));
    }
    let poly_ring = RingDescriptor::poly(&ring.variables)?;
    let c = expression(
        &raw.c,
        &poly_ring,
        &Bindings::new(),
        source,
        "construction.ode.c",
    )?;
    let a0 = scalar(&raw.a0, "construction.ode.a0", source)?;
    let a1 = scalar(&raw.a1, "construction.ode.a1", source)?;
    let ode = SecondOrderOde::new(
        c.as_poly().expect("polynomial ring").clone(),
        a0.clone(),
        a1.clone(),
        truncation,
    )
    .map_err(|e| CliError::schema("construction.ode", e.to_string()))?;
    let g = RingElement::from_series(ring, series_solve(&ode))?;
    let block = OdeBlock {
        name: raw.name,
        c: c.to_string(),
        a0: a0.to_string(),
        a1: a1.to_string(),
    };
    Ok((block, g))
}
