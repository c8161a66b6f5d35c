//! Report construction and rendering for each subcommand.

use std::fmt::Write as _;

use hipster_core::recurrences::{family_params, sandwich_report};
use hipster_core::singularity::{closed_form_binary_roots, GrowthInterval};
use hipster_core::tree_enum::census;
use hipster_core::verify::{run_verification, VerificationReport, VerifyOptions};
use hipster_core::{exact_series, growth_interval, FamilyId};
use serde::Serialize;

use crate::Format;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Computation(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Computation(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Computation(m) => f.write_str(m),
        }
    }
}

/// One row of a coefficient report. Counts are decimal strings.
#[derive(Debug, Serialize)]
pub struct Row {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f: Option<String>,
    pub h: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<String>,
    pub ok: bool,
}

#[derive(Debug, Serialize)]
pub struct CoefficientReport {
    pub family: String,
    pub order: usize,
    pub rows: Vec<Row>,
}

#[derive(Debug, Serialize)]
struct GrowthJson {
    family: String,
    lower: f64,
    upper: f64,
    rho_lower_eq: f64,
    rho_upper_eq: f64,
    bracket_width: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    closed_form_delta: Option<f64>,
}

#[derive(Debug)]
pub struct GrowthEntry {
    interval: GrowthInterval,
    /// |upper radical - upper root|, binary only.
    closed_form_delta: Option<f64>,
    /// |cube-root radical - lower root|, binary only; reported, not checked.
    cube_root_delta: Option<f64>,
}

impl GrowthEntry {
    fn json(&self) -> GrowthJson {
        let g = &self.interval;
        GrowthJson {
            family: g.family.to_string(),
            lower: sig12(g.lower),
            upper: sig12(g.upper),
            rho_lower_eq: sig12(g.rho_lower_eq),
            rho_upper_eq: sig12(g.rho_upper_eq),
            bracket_width: sig12(self.bracket_width()),
            closed_form_delta: self.closed_form_delta.map(sig12),
        }
    }

    fn bracket_width(&self) -> f64 {
        self.interval
            .lower_root
            .bracket_width()
            .max(self.interval.upper_root.bracket_width())
    }
}

#[derive(Debug, Serialize)]
struct VerifyJson<'a> {
    pass: bool,
    checks: Vec<CheckJson<'a>>,
}

#[derive(Debug, Serialize)]
struct CheckJson<'a> {
    section: &'a str,
    name: &'a str,
    pass: bool,
    detail: &'a str,
}

#[derive(Debug)]
pub enum Report {
    Count(CoefficientReport),
    Bounds(CoefficientReport),
    Growth { entries: Vec<GrowthEntry>, many: bool },
    Verify(VerificationReport),
}

/// Same text as the JSON output.
fn float(x: f64) -> String {
    serde_json::to_string(&x).expect("finite")
}

/// Rounds to 12 significant digits.
fn sig12(x: f64) -> f64 {
    format!("{x:.11e}").parse().unwrap_or(x)
}

pub fn count(family: FamilyId, n_max: usize, oracle_limit: Option<usize>) -> Result<Report, CliError> {
    let oracle = match oracle_limit {
        None => None,
        Some(limit) if n_max > limit => {
            return Err(CliError::Usage(format!(
                "--n {n_max} exceeds the oracle limit {limit} for {family}; \
                 lower --n or raise --oracle-limit"
            )))
        }
        Some(limit) => Some(
            census(family, n_max, limit).map_err(|e| CliError::Computation(e.to_string()))?,
        ),
    };
    let h = exact_series(family, n_max).to_integers().expect("counting series");
    let rows = h
        .iter()
        .enumerate()
        .map(|(n, hn)| {
            let brute = oracle.as_ref().map(|rows| rows[n].1);
            Row {
                n,
                f: None,
                h: hn.to_string(),
                g: None,
                oracle: brute.map(|b| b.to_string()),
                ok: brute.is_none_or(|b| hn == &b.into()),
            }
        })
        .collect();
    Ok(Report::Count(CoefficientReport {
        family: family.to_string(),
        order: n_max,
        rows,
    }))
}

pub fn bounds(family: FamilyId, n_max: usize) -> Report {
    let s = sandwich_report(family, n_max);
    let rows = s
        .rows
        .iter()
        .map(|r| Row {
            n: r.n,
            f: Some(r.lower.to_string()),
            h: r.exact.to_string(),
            g: Some(r.upper.to_string()),
            oracle: None,
            ok: r.ordered,
        })
        .collect();
    Report::Bounds(CoefficientReport {
        family: family.to_string(),
        order: n_max,
        rows,
    })
}

pub fn growth(families: &[FamilyId], tol: f64, many: bool) -> Result<Report, CliError> {
    let entries = families
        .iter()
        .map(|&family| {
            let interval =
                growth_interval(family, tol).map_err(|e| CliError::Computation(e.to_string()))?;
            let (closed_form_delta, cube_root_delta) = if family == FamilyId::BinaryPlane {
                let (upper, lower) = closed_form_binary_roots();
                (
                    Some((upper - interval.rho_upper_eq).abs()),
                    Some((lower - interval.rho_lower_eq).abs()),
                )
            } else {
                (None, None)
            };
            Ok(GrowthEntry {
                interval,
                closed_form_delta,
                cube_root_delta,
            })
        })
        .collect::<Result<_, CliError>>()?;
    Ok(Report::Growth { entries, many })
}

pub fn verify(order: usize, tol: f64, oracle_limit: Option<usize>, inject_fault: bool) -> Report {
    let mut opts = VerifyOptions {
        residual_order: order,
        tol,
        oracle_limit,
        ..VerifyOptions::default()
    };
    if inject_fault {
        let mut p = family_params(FamilyId::BinaryPlane);
        p.c0 += 1;
        opts.params_override = Some((FamilyId::BinaryPlane, p));
    }
    Report::Verify(run_verification(&opts))
}

impl Report {
    pub fn pass(&self) -> bool {
        match self {
            Report::Count(r) | Report::Bounds(r) => r.rows.iter().all(|row| row.ok),
            Report::Growth { .. } => true,
            Report::Verify(v) => v.pass(),
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => self.table(),
            Format::Json => {
                let mut s = self.json();
                s.push('\n');
                s
            }
            Format::Csv => self.csv(),
        }
    }

    fn json(&self) -> String {
        let v = match self {
            Report::Count(r) | Report::Bounds(r) => serde_json::to_string_pretty(r),
            Report::Growth { entries, many: false } => serde_json::to_string_pretty(&entries[0].json()),
            Report::Growth { entries, many: true } => {
                let all: Vec<_> = entries.iter().map(GrowthEntry::json).collect();
                serde_json::to_string_pretty(&all)
            }
            Report::Verify(v) => serde_json::to_string_pretty(&VerifyJson {
                pass: v.pass(),
                checks: v
                    .checks
                    .iter()
                    .map(|c| CheckJson {
                        section: c.section,
                        name: &c.name,
                        pass: c.pass,
                        detail: &c.detail,
                    })
                    .collect(),
            }),
        };
        v.expect("reports serialize")
    }

    fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        match self {
            Report::Count(r) => {
                let with_oracle = r.rows.iter().any(|row| row.oracle.is_some());
                if with_oracle {
                    w.write_record(["n", "h", "oracle", "ok"]).unwrap();
                } else {
                    w.write_record(["n", "h", "ok"]).unwrap();
                }
                for row in &r.rows {
                    let mut rec = vec![row.n.to_string(), row.h.clone()];
                    if let Some(o) = &row.oracle {
                        rec.push(o.clone());
                    }
                    rec.push(row.ok.to_string());
                    w.write_record(&rec).unwrap();
                }
            }
            Report::Bounds(r) => {
                w.write_record(["n", "f", "h", "g", "ok"]).unwrap();
                for row in &r.rows {
                    w.write_record([
                        row.n.to_string(),
                        row.f.clone().unwrap_or_default(),
                        row.h.clone(),
                        row.g.clone().unwrap_or_default(),
                        row.ok.to_string(),
                    ])
                    .unwrap();
                }
            }
            Report::Growth { entries, .. } => {
                w.write_record([
                    "family",
                    "lower",
                    "upper",
                    "rho_lower_eq",
                    "rho_upper_eq",
                    "bracket_width",
                    "closed_form_delta",
                ])
                .unwrap();
                for e in entries {
                    let j = e.json();
                    w.write_record([
                        j.family,
                        float(j.lower),
                        float(j.upper),
                        float(j.rho_lower_eq),
                        float(j.rho_upper_eq),
                        float(j.bracket_width),
                        j.closed_form_delta.map(float).unwrap_or_default(),
                    ])
                    .unwrap();
                }
            }
            Report::Verify(v) => {
                w.write_record(["section", "name", "pass", "detail"]).unwrap();
                for c in &v.checks {
                    w.write_record([c.section, &c.name, &c.pass.to_string(), &c.detail])
                        .unwrap();
                }
            }
        }
        String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8")
    }

    fn table(&self) -> String {
        let mut out = String::new();
        match self {
            Report::Count(r) => {
                let with_oracle = r.rows.iter().any(|row| row.oracle.is_some());
                let mut cells: Vec<Vec<String>> = vec![if with_oracle {
                    vec!["n".into(), "h_n".into(), "oracle".into(), "match".into()]
                } else {
                    vec!["n".into(), "h_n".into()]
                }];
                for row in &r.rows {
                    let mut line = vec![row.n.to_string(), row.h.clone()];
                    if let Some(o) = &row.oracle {
                        line.push(o.clone());
                        line.push(if row.ok { "yes" } else { "NO" }.into());
                    }
                    cells.push(line);
                }
                let _ = writeln!(out, "family: {}", r.family);
                out.push_str(&align(&cells));
            }
            Report::Bounds(r) => {
                let mut cells = vec![vec![
                    "n".to_string(),
                    "f_n".into(),
                    "h_n".into(),
                    "g_n".into(),
                    "ok".into(),
                ]];
                for row in &r.rows {
                    cells.push(vec![
                        row.n.to_string(),
                        row.f.clone().unwrap_or_default(),
                        row.h.clone(),
                        row.g.clone().unwrap_or_default(),
                        if row.ok { "yes" } else { "NO" }.into(),
                    ]);
                }
                let _ = writeln!(out, "family: {}", r.family);
                out.push_str(&align(&cells));
                let pass = self.pass();
                let _ = writeln!(
                    out,
                    "0 < f_n <= h_n <= g_n for n <= {}: {}",
                    r.order,
                    if pass { "pass" } else { "FAIL" }
                );
            }
            Report::Growth { entries, .. } => {
                for (i, e) in entries.iter().enumerate() {
                    if i > 0 {
                        out.push('\n');
                    }
                    let g = &e.interval;
                    let _ = writeln!(out, "family: {}", g.family);
                    for (label, r) in [("upper eq", &g.upper_root), ("lower eq", &g.lower_root)] {
                        let _ = writeln!(
                            out,
                            "  {label}: rho = {:.12}  growth = {:.12}  bracket = {:.1e}",
                            r.rho,
                            r.growth,
                            r.bracket_width()
                        );
                    }
                    let _ = writeln!(out, "  interval: [{:.6}, {:.6}]", g.lower, g.upper);
                    if let Some(d) = e.closed_form_delta {
                        let _ = writeln!(out, "  upper radical |delta| = {d:.3e}");
                    }
                    if let Some(d) = e.cube_root_delta {
                        let _ = writeln!(out, "  cube-root radical |delta| = {d:.3e} (reported only)");
                    }
                }
            }
            Report::Verify(v) => {
                for c in &v.checks {
                    let _ = writeln!(
                        out,
                        "[{}] {} {}: {}",
                        if c.pass { "PASS" } else { "FAIL" },
                        c.section,
                        c.name,
                        c.detail
                    );
                }
                let failed = v.checks.iter().filter(|c| !c.pass).count();
                let _ = writeln!(
                    out,
                    "{} checks, {} failed: {}",
                    v.checks.len(),
                    failed,
                    if failed == 0 { "pass" } else { "FAIL" }
                );
            }
        }
        out
    }
}

fn align(cells: &[Vec<String>]) -> String {
    let cols = cells.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| cells.iter().filter_map(|r| r.get(c)).map(String::len).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in cells {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(i, s)| format!("{s:>w$}", w = widths[i]))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}
