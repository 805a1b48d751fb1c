//! Text and JSON rendering of command outputs.
//!
//! Text mode prints values in the input grammar, so everything it emits
//! parses back to the same element. JSON mode emits one object per command
//! line; germs use the schema
//! `{"modulus": m, "classes": [[{"exp": "p/q", "coef": "p/q"}, …], …]}`
//! with rationals as strings.

use num_rational::BigRational;
use num_traits::Signed;
use serde_json::{json, Value as Json};

use rpa_core::scalars::ratio;
use rpa_core::suites::SuiteReport;
use rpa_core::{Germ, GridOperator, RpaComplex, RpaReal, StepWave};

use crate::session::{Output, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// Renders one command output as a line; `Output::None` renders nothing.
pub fn render(output: &Output, format: Format) -> Option<String> {
    match format {
        Format::Text => render_text(output),
        Format::Json => render_json(output).map(|v| v.to_string()),
    }
}

fn render_text(output: &Output) -> Option<String> {
    match output {
        Output::None => None,
        Output::Value(v) => Some(value_text(v)),
        Output::Classification(c) => Some(c.to_string()),
        Output::Cmp(verdict) => Some((*verdict).to_string()),
        Output::Heisenberg {
            holds,
            residual,
            classification,
        } => Some(format!(
            "holds={holds} residual={residual} classification={classification}"
        )),
        Output::Wintner { trace, nonzero } => Some(format!("trace={trace} nonzero={nonzero}")),
        Output::Fuzz(report) => {
            let mut line = format!(
                "suite={} cases={} passed={} failed={}",
                report.suite, report.cases, report.passed, report.failed
            );
            if let Some(ce) = &report.first_counterexample {
                line.push_str(&format!(
                    "\ncounterexample case={} check={}",
                    ce.case_index, ce.check
                ));
                for (name, value) in &ce.values {
                    line.push_str(&format!("\n  {name} = {value}"));
                }
            }
            Some(line)
        }
        Output::Scalar { re, im } => Some(scalar_text(re, im.as_ref())),
    }
}

fn value_text(v: &Value) -> String {
    match v {
        Value::Real(x) => x.to_string(),
        Value::Complex(z) => z.to_string(),
        Value::Wave(w) => w.to_string(),
        Value::Operator(op) => op.to_string(),
    }
}

fn scalar_text(re: &BigRational, im: Option<&BigRational>) -> String {
    match im {
        None => ratio::format(re),
        Some(im) if im.is_negative() => {
            format!("{} - {}i", ratio::format(re), ratio::format(&im.abs()))
        }
        Some(im) => format!("{} + {}i", ratio::format(re), ratio::format(im)),
    }
}

fn render_json(output: &Output) -> Option<Json> {
    match output {
        Output::None => None,
        Output::Value(v) => Some(value_json(v)),
        Output::Classification(c) => Some(json!({ "classification": c.to_string() })),
        Output::Cmp(verdict) => Some(json!({ "cmp": verdict })),
        Output::Heisenberg {
            holds,
            residual,
            classification,
        } => Some(json!({
            "holds": holds,
            "residual": germ_json(residual.germ()),
            "classification": classification.to_string(),
        })),
        Output::Wintner { trace, nonzero } => Some(json!({
            "trace": complex_json(trace),
            "nonzero": nonzero,
        })),
        Output::Fuzz(report) => Some(fuzz_json(report)),
        Output::Scalar { re, im } => Some(match im {
            None => json!({ "value": ratio::format(re) }),
            Some(im) => json!({ "re": ratio::format(re), "im": ratio::format(im) }),
        }),
    }
}

pub fn germ_json(germ: &Germ) -> Json {
    let classes: Vec<Json> = germ
        .class_polys()
        .iter()
        .map(|poly| {
            poly.terms()
                .map(
                    |(exp, coef)| json!({ "exp": ratio::format(exp), "coef": ratio::format(coef) }),
                )
                .collect()
        })
        .collect();
    json!({ "modulus": germ.modulus(), "classes": classes })
}

pub fn real_json(x: &RpaReal) -> Json {
    germ_json(x.germ())
}

pub fn complex_json(z: &RpaComplex) -> Json {
    json!({ "re": real_json(z.re_part()), "im": real_json(z.im_part()) })
}

pub fn value_json(v: &Value) -> Json {
    match v {
        Value::Real(x) => real_json(x),
        Value::Complex(z) => complex_json(z),
        Value::Wave(w) => wave_json(w),
        Value::Operator(op) => operator_json(op),
    }
}

pub fn wave_json(w: &StepWave) -> Json {
    json!({
        "breaks": w.grid().breakpoints().iter().map(real_json).collect::<Vec<_>>(),
        "coeffs": w.coeffs().iter().map(complex_json).collect::<Vec<_>>(),
    })
}

pub fn operator_json(op: &GridOperator) -> Json {
    json!({
        "grid": op.grid().breakpoints().iter().map(real_json).collect::<Vec<_>>(),
        "matrix": op
            .matrix()
            .iter()
            .map(|row| row.iter().map(complex_json).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

fn fuzz_json(report: &SuiteReport) -> Json {
    let counterexample = report.first_counterexample.as_ref().map(|ce| {
        json!({
            "case": ce.case_index,
            "check": ce.check,
            "values": ce
                .values
                .iter()
                .map(|(name, value)| json!({ "name": name, "value": value }))
                .collect::<Vec<_>>(),
        })
    });
    json!({
        "suite": report.suite,
        "cases": report.cases,
        "passed": report.passed,
        "failed": report.failed,
        "counterexample": counterexample,
    })
}
