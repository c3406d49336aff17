//! Shared rendering helpers for sample-based verification results.

use serde::Serialize;

use crate::config::{Format, RunConfig};
use flagbundle_core::Point64;

#[derive(Debug, Clone, Serialize)]
pub struct SampleRow {
    pub point: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub datum: String,
    pub tolerance: f64,
    pub max_residual: f64,
    pub pass: bool,
    pub rows: Vec<SampleRow>,
}

pub fn point_string(z: &Point64) -> String {
    let coords: Vec<String> =
        z.0.iter()
            .map(|c| format!("{:+.4}{:+.4}i", c.re, c.im))
            .collect();
    format!("({})", coords.join(", "))
}

pub fn suite_report(suite: &str, datum: &str, tolerance: f64, rows: Vec<SampleRow>) -> SuiteReport {
    let max_residual = rows.iter().map(|r| r.residual).fold(0.0f64, f64::max);
    let pass = rows.iter().all(|r| r.pass);
    SuiteReport {
        suite: suite.to_string(),
        datum: datum.to_string(),
        tolerance,
        max_residual,
        pass,
        rows,
    }
}

pub fn render(report: &SuiteReport, cfg: &RunConfig) {
    match cfg.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(report).unwrap()),
        Format::Csv => {
            println!("point,residual,tolerance,pass");
            for r in &report.rows {
                println!("\"{}\",{},{},{}", r.point, r.residual, r.tolerance, r.pass);
            }
        }
        Format::Markdown => {
            println!(
                "# verify {} on {} — {}",
                report.suite,
                report.datum,
                if report.pass { "PASS" } else { "FAIL" }
            );
            println!();
            println!("| point | residual | tolerance | pass |");
            println!("|---|---|---|---|");
            for r in &report.rows {
                println!(
                    "| {} | {:.3e} | {:.1e} | {} |",
                    r.point, r.residual, r.tolerance, r.pass
                );
            }
            println!();
            println!("max residual: {:.3e}", report.max_residual);
        }
    }
}

pub fn join_i64(v: &[i64]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(";")
}

pub fn join_usize(v: &[usize]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(";")
}
