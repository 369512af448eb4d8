//! Seeded, exact verification engine.
//!
//! A check evaluates both sides of an identity on independently sampled
//! inputs. Trials run in parallel, each on its own sampler stream, and are
//! merged in trial order so results never depend on scheduling.

mod checks;
mod sampler;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use checks::{overall_status, run_check, run_suite, CheckKind, Target};
pub use sampler::{sample_element, Sampler, SamplerConfig};

use crate::calculus::{OneForm, TwoForm, VectorField};
use crate::cdo::CdoOperator;
use crate::linalg::Vector;
use crate::rings::{Comparison, ExactEq, RingElement};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inapplicable,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inapplicable => "inapplicable",
        }
    }
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One rendered input. `kind` is `scalar`, `field`, `form`, `vector`, `two_form` or `operator`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessEntry {
    pub name: String,
    pub kind: String,
    pub value: Vec<String>,
}

/// Sampled inputs plus both evaluated sides, all in parseable canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub inputs: Vec<WitnessEntry>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

impl Witness {
    pub fn input(&self, name: &str) -> Option<&WitnessEntry> {
        self.inputs.iter().find(|e| e.name == name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub trials: usize,
    pub witness: Option<Witness>,
    pub precision: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn inapplicable(name: &str, note: &str) -> Self {
        CheckResult {
            name: name.to_string(),
            status: Status::Inapplicable,
            trials: 0,
            witness: None,
            precision: None,
            note: Some(note.to_string()),
        }
    }
}

/// Anything that can appear as an input or a side of an identity.
#[derive(Clone, Debug)]
pub enum Item {
    Scalar(RingElement),
    Field(VectorField),
    Form(OneForm),
    Vector(Vector),
    TwoForm(TwoForm),
    Operator(CdoOperator),
}

impl Item {
    pub fn kind(&self) -> &'static str {
        match self {
            Item::Scalar(_) => "scalar",
            Item::Field(_) => "field",
            Item::Form(_) => "form",
            Item::Vector(_) => "vector",
            Item::TwoForm(_) => "two_form",
            Item::Operator(_) => "operator",
        }
    }

    pub fn render(&self) -> Vec<String> {
        match self {
            Item::Scalar(r) => vec![r.to_string()],
            Item::Field(x) => x.render(),
            Item::Form(a) => a.render(),
            Item::Vector(v) => v.render(),
            Item::TwoForm(w) => w.render(),
            Item::Operator(op) => op.render(),
        }
    }

    pub fn compare(&self, other: &Item) -> Comparison {
        let unequal = Comparison {
            equal: false,
            precision: None,
        };
        match (self, other) {
            (Item::Scalar(a), Item::Scalar(b)) => a.compare(b),
            (Item::Field(a), Item::Field(b)) => a.compare(b),
            (Item::Form(a), Item::Form(b)) => a.compare(b),
            (Item::Vector(a), Item::Vector(b)) => a.compare(b),
            (Item::TwoForm(a), Item::TwoForm(b)) => a.compare(b),
            (Item::Operator(a), Item::Operator(b)) => a.compare(b),
            _ => unequal,
        }
    }
}

macro_rules! item_from {
    ($($t:ty => $v:ident),*) => {$(
        impl From<$t> for Item {
            fn from(x: $t) -> Item {
                Item::$v(x)
            }
        }
    )*};
}

item_from!(RingElement => Scalar, VectorField => Field, OneForm => Form, Vector => Vector, TwoForm => TwoForm, CdoOperator => Operator);

/// The inputs of one trial and the two sides it produced.
pub struct Evidence {
    inputs: Vec<(String, Item)>,
    lhs: Item,
    rhs: Item,
}

impl Evidence {
    pub fn new(lhs: impl Into<Item>, rhs: impl Into<Item>) -> Self {
        Evidence {
            inputs: Vec::new(),
            lhs: lhs.into(),
            rhs: rhs.into(),
        }
    }

    pub fn input(mut self, name: &str, value: impl Into<Item>) -> Self {
        self.inputs.push((name.to_string(), value.into()));
        self
    }

    pub fn comparison(&self) -> Comparison {
        self.lhs.compare(&self.rhs)
    }

    pub fn witness(&self) -> Witness {
        Witness {
            inputs: self
                .inputs
                .iter()
                .map(|(name, item)| WitnessEntry {
                    name: name.clone(),
                    kind: item.kind().to_string(),
                    value: item.render(),
                })
                .collect(),
            lhs: self.lhs.render(),
            rhs: self.rhs.render(),
        }
    }
}

/// Stream index for trial `trial` of the check registered as `check`.
pub fn stream_for(check: u64, trial: usize) -> u64 {
    (check << 32) | trial as u64
}

/// Runs `trials` independent trials; trial `i` draws from stream `stream_for(check, i)`.
pub fn run_trials<F>(
    name: &str,
    cfg: &SamplerConfig,
    check: u64,
    trials: usize,
    trial: F,
) -> Result<CheckResult>
where
    F: Fn(&mut Sampler, usize) -> Result<Evidence> + Sync,
{
    if trials == 0 {
        return Ok(CheckResult::inapplicable(name, "no trials requested"));
    }
    let outcomes: Vec<Result<(Comparison, Option<Witness>)>> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut sampler = Sampler::new(cfg, stream_for(check, i));
            let ev = trial(&mut sampler, i)?;
            let cmp = ev.comparison();
            Ok((cmp, (!cmp.equal).then(|| ev.witness())))
        })
        .collect();

    let mut precision = Comparison::EQUAL;
    for (i, outcome) in outcomes.into_iter().enumerate() {
        let (cmp, witness) = outcome?;
        precision = precision.and(cmp);
        if !cmp.equal {
            return Ok(CheckResult {
                name: name.to_string(),
                status: Status::Fail,
                trials: i + 1,
                witness,
                precision: precision.precision,
                note: None,
            });
        }
    }
    Ok(CheckResult {
        name: name.to_string(),
        status: Status::Pass,
        trials,
        witness: None,
        precision: precision.precision,
        note: None,
    })
}
