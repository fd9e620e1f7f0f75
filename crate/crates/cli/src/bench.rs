//! Deterministic benchmark harness: a suite file lists
//! `generator,n,seed,method` rows; the output is a CSV table whose only
//! non-reproducible column is the wall time. Rows run sequentially and
//! per-row failures are recorded, not fatal.

use std::time::Instant;

use megset::{exact_meg, meg_apx, Error};

use crate::generate::{generate, GraphKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchMethod {
    Exact,
    Greedy,
}

impl BenchMethod {
    fn as_str(&self) -> &'static str {
        match self {
            BenchMethod::Exact => "exact",
            BenchMethod::Greedy => "greedy",
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteRow {
    pub kind: GraphKind,
    pub n: usize,
    pub seed: u64,
    pub method: BenchMethod,
}

/// Parses `generator,n,seed,method` lines; `#` comments and blank lines are
/// skipped. Errors name the offending line.
pub fn parse_suite(text: &str) -> Result<Vec<SuiteRow>, String> {
    let mut rows = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split(',').map(str::trim).collect();
        if fields.len() != 4 {
            return Err(format!("suite line {line}: expected generator,n,seed,method"));
        }
        let kind = GraphKind::parse(fields[0])
            .ok_or_else(|| format!("suite line {line}: unknown generator '{}'", fields[0]))?;
        let n: usize = fields[1]
            .parse()
            .map_err(|_| format!("suite line {line}: bad vertex count '{}'", fields[1]))?;
        let seed: u64 = fields[2]
            .parse()
            .map_err(|_| format!("suite line {line}: bad seed '{}'", fields[2]))?;
        let method = match fields[3] {
            "exact" => BenchMethod::Exact,
            "greedy" => BenchMethod::Greedy,
            other => return Err(format!("suite line {line}: unknown method '{other}'")),
        };
        rows.push(SuiteRow {
            kind,
            n,
            seed,
            method,
        });
    }
    Ok(rows)
}

/// Runs every row and renders the CSV table.
pub fn run_suite(rows: &[SuiteRow]) -> String {
    let mut out = String::from("generator,n,seed,method,size,certified,wall_us,status\n");
    for row in rows {
        let start = Instant::now();
        let outcome = generate(row.kind, row.n, row.seed).and_then(|g| match row.method {
            BenchMethod::Exact => exact_meg(&g),
            BenchMethod::Greedy => meg_apx(&g),
        });
        let wall_us = start.elapsed().as_micros();
        let (size, certified, status) = match outcome {
            Ok(report) => (
                report.size.to_string(),
                report.certified.to_string(),
                "ok".to_string(),
            ),
            Err(Error::BudgetExceeded(_)) => {
                (String::new(), String::new(), "resource-error".to_string())
            }
            Err(_) => (String::new(), String::new(), "precondition-error".to_string()),
        };
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            row.kind.as_str(),
            row.n,
            row.seed,
            row.method.as_str(),
            size,
            certified,
            wall_us,
            status
        ));
    }
    out
}
