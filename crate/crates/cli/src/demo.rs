use std::io::Write;

use cyclor::calculus::VectorField;
use cyclor::ode::{
    closing_example_check, dg_bracket_check, dg_field, series_solve, SecondOrderOde,
};
use cyclor::prelie::eigen_solve;
use cyclor::verifier::overall_status;
use cyclor::{CheckResult, RingDescriptor, RingElement, SamplerConfig, Status};

use crate::CliError;

/// The closing example with `g` the Airy series modulo `t^order`.
#[derive(Clone, Debug)]
pub struct AiryDemo {
    pub order: usize,
    pub c: Option<String>,
    pub results: Vec<CheckResult>,
}

impl AiryDemo {
    pub fn overall(&self) -> Status {
        if self.c.is_none() {
            return Status::Fail;
        }
        overall_status(&self.results)
    }

    pub fn write(&self, out: &mut dyn Write) -> std::io::Result<()> {
        writeln!(
            out,
            "g'' = t·g, g(0) = 1, g'(0) = 0, modulo t^{}",
            self.order
        )?;
        writeln!(
            out,
            "eigen (order 2): c = {}",
            self.c.as_deref().unwrap_or("none")
        )?;
        for r in &self.results {
            let precision = r
                .precision
                .map_or_else(|| "-".to_string(), |p| p.to_string());
            writeln!(
                out,
                "{:16}  {:4}  {:>4} trials  precision {}",
                r.name,
                r.status.as_str(),
                r.trials,
                precision
            )?;
            if let Some(w) = &r.witness {
                writeln!(out, "  lhs = [{}]", w.lhs.join(", "))?;
                writeln!(out, "  rhs = [{}]", w.rhs.join(", "))?;
            }
        }
        writeln!(out, "overall: {}", self.overall())
    }
}

pub fn airy_demo(order: usize, cfg: &SamplerConfig) -> Result<AiryDemo, CliError> {
    let ode = SecondOrderOde::airy(order).map_err(|e| CliError::schema("order", e.to_string()))?;
    let ring = RingDescriptor::series("t", order)?;
    let g = RingElement::from_series(&ring, series_solve(&ode))?;
    let c = eigen_solve(&VectorField::basis(&ring, 0), &dg_field(&g)?, 2)?.map(|c| c.to_string());
    let results = vec![
        closing_example_check(&g, cfg)?,
        dg_bracket_check(&RingDescriptor::poly(&["t"])?, cfg)?,
    ];
    Ok(AiryDemo { order, c, results })
}
