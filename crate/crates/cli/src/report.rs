use std::io::Write;

use cyclor::prelie::{eigen_solve, standard_omega_instance, symmetry_condition};
use cyclor::verifier::{overall_status, run_check, Target};
use cyclor::{CheckResult, Status, Witness};
use serde::Serialize;

use crate::job::{JobEcho, VerificationJob};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug, Serialize)]
pub struct Eigen {
    pub order: u32,
    pub c: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Conditions {
    pub symmetry: CheckResult,
    pub eigen: Eigen,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub job: JobEcho,
    pub conditions: Conditions,
    pub checks: Vec<CheckResult>,
    pub overall: Status,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        match self.overall {
            Status::Fail => 1,
            Status::Pass | Status::Inapplicable => 0,
        }
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub fn execute(job: &VerificationJob) -> Result<Report, CliError> {
    let structure = standard_omega_instance(&job.x, &job.y, job.theorem, job.force)?;
    let symmetry = symmetry_condition(&structure);
    let order = job.theorem.order();
    let c = eigen_solve(&job.x, &job.y, order)
        .ok()
        .flatten()
        .map(|c| c.to_string());

    let checks = job
        .checks
        .iter()
        .map(|&kind| {
            let target = if kind.is_calculus() {
                Target::Ring(&job.ring)
            } else {
                Target::Structure(&structure)
            };
            run_check(target, kind, &job.sampler)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let overall = overall_status(std::iter::once(&symmetry).chain(&checks));

    Ok(Report {
        job: job.echo(),
        conditions: Conditions {
            symmetry,
            eigen: Eigen { order, c },
        },
        checks,
        overall,
    })
}

pub fn emit(report: &Report, format: Format, sink: &mut dyn Write) -> std::io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *sink, report)?;
            writeln!(sink)
        }
        Format::Text => emit_text(report, sink),
    }
}

fn emit_text(report: &Report, out: &mut dyn Write) -> std::io::Result<()> {
    let job = &report.job;
    let ring = &job.ring;
    write!(out, "ring: {}({})", ring.kind, ring.variables.join(", "))?;
    match ring.truncation {
        Some(n) => writeln!(out, " mod t^{n}")?,
        None => writeln!(out)?,
    }
    writeln!(
        out,
        "construction: {}  X = [{}]  Y = [{}]",
        job.theorem,
        job.x.join(", "),
        job.y.join(", ")
    )?;
    if let Some(ode) = &job.ode {
        writeln!(
            out,
            "  {}'' = ({})·{}, {}(0) = {}, {}'(0) = {}",
            ode.name, ode.c, ode.name, ode.name, ode.a0, ode.name, ode.a1
        )?;
    }
    writeln!(
        out,
        "seed {}, {} trials{}",
        job.sampler.seed,
        job.sampler.trials,
        if job.force { ", forced" } else { "" }
    )?;
    writeln!(out)?;

    let cond = &report.conditions;
    let rows: Vec<&CheckResult> = std::iter::once(&cond.symmetry)
        .chain(&report.checks)
        .collect();
    let width = rows.iter().map(|r| r.name.len()).max().unwrap_or(0).max(5);
    writeln!(
        out,
        "{:width$}  {:12}  {:>6}  precision",
        "check", "status", "trials"
    )?;
    for r in &rows {
        let precision = r
            .precision
            .map_or_else(|| "-".to_string(), |p| p.to_string());
        writeln!(
            out,
            "{:width$}  {:12}  {:>6}  {}",
            r.name,
            r.status.as_str(),
            r.trials,
            precision
        )?;
    }
    let c = cond.eigen.c.as_deref().unwrap_or("none");
    writeln!(out, "eigen (order {}): c = {}", cond.eigen.order, c)?;

    for r in &rows {
        if let Some(w) = &r.witness {
            writeln!(out)?;
            write_witness(out, &r.name, w)?;
        }
        if let Some(note) = &r.note {
            writeln!(out)?;
            writeln!(out, "{}: {}", r.name, note)?;
        }
    }
    writeln!(out)?;
    writeln!(out, "overall: {}", report.overall)
}

fn write_witness(out: &mut dyn Write, name: &str, w: &Witness) -> std::io::Result<()> {
    writeln!(out, "witness for {name}:")?;
    for input in &w.inputs {
        writeln!(
            out,
            "  {} ({}) = [{}]",
            input.name,
            input.kind,
            input.value.join(", ")
        )?;
    }
    writeln!(out, "  lhs = [{}]", w.lhs.join(", "))?;
    writeln!(out, "  rhs = [{}]", w.rhs.join(", "))
}
