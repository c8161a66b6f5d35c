//! One-shot consistency run: brute-force oracle, census totals, residuals,
//! sandwich inequalities, growth endpoints and closed forms.

use num_bigint::BigInt;

use crate::family::{BoundKind, FamilyId};
use crate::known_gfs::census_series;
use crate::recurrences::{
    family_params, functional_equation_residual, sandwich_report, solve_recurrence,
    substituted_series, FamilyParams, Substitution,
};
use crate::series::PowerSeries;
use crate::singularity::{
    closed_form_binary_roots, discriminant, empirical_growth, find_dominant_singularity,
    growth_interval, DEFAULT_TOL,
};
use crate::tree_enum::{census, DEFAULT_ENUMERATION_LIMIT};

/// Absolute tolerance on reproduced endpoints and roots.
pub const ENDPOINT_TOL: f64 = 1e-5;
/// Slack around the growth interval for the coefficient-ratio diagnostic.
pub const RATIO_SLACK: f64 = 0.02;

/// Growth intervals and roots as published, to six decimals.
#[derive(Clone, Copy, Debug)]
pub struct PublishedValues {
    pub family: FamilyId,
    pub lower: f64,
    pub upper: f64,
    pub rho_upper_eq: Option<f64>,
    pub rho_lower_eq: Option<f64>,
}

pub const PUBLISHED: [PublishedValues; 3] = [
    PublishedValues {
        family: FamilyId::BinaryPlane,
        lower: 3.923450,
        upper: 3.923909,
        rho_upper_eq: None,
        rho_lower_eq: None,
    },
    PublishedValues {
        family: FamilyId::PlaneOneTwo,
        lower: 2.824486,
        upper: 2.854882,
        rho_upper_eq: Some(0.350277),
        rho_lower_eq: Some(0.354047),
    },
    PublishedValues {
        family: FamilyId::ColoredRightBinary,
        lower: 5.731821,
        upper: 5.732051,
        rho_upper_eq: Some(0.174458),
        rho_lower_eq: Some(0.174465),
    },
];

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Order of the functional-equation residual check.
    pub residual_order: usize,
    /// Largest `n` in the sandwich check.
    pub sandwich_order: usize,
    /// Index of the coefficient-ratio diagnostic.
    pub ratio_index: usize,
    pub tol: f64,
    /// Largest size checked against brute force, per family.
    pub oracle_limit: Option<usize>,
    /// Replaces a family's recurrence constants; used for fault injection.
    pub params_override: Option<(FamilyId, FamilyParams)>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            residual_order: crate::DEFAULT_ORDER,
            sandwich_order: 1000,
            ratio_index: 500,
            tol: DEFAULT_TOL,
            oracle_limit: None,
            params_override: None,
        }
    }
}

impl VerifyOptions {
    fn params(&self, family: FamilyId) -> FamilyParams {
        match self.params_override {
            Some((f, p)) if f == family => p,
            _ => family_params(family),
        }
    }

    fn oracle_limit(&self, family: FamilyId) -> usize {
        self.oracle_limit
            .unwrap_or_else(|| family.default_oracle_limit())
    }

    fn series(&self, family: FamilyId, kind: BoundKind, order: usize) -> PowerSeries {
        let sub = Substitution::for_kind(family, kind, order);
        PowerSeries::from_integers(solve_recurrence(self.params(family), &sub, order))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub section: &'static str,
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    fn push(&mut self, section: &'static str, name: String, pass: bool, detail: String) {
        self.checks.push(Check {
            section,
            name,
            pass,
            detail,
        });
    }
}

pub fn run_verification(opts: &VerifyOptions) -> VerificationReport {
    let mut report = VerificationReport::default();
    for family in FamilyId::ALL {
        check_oracle(opts, family, &mut report);
    }
    for family in FamilyId::ALL {
        check_residuals(opts, family, &mut report);
    }
    for family in FamilyId::ALL {
        let s = sandwich_report(family, opts.sandwich_order);
        let detail = match s.first_failure() {
            None => format!("0 < f_n <= h_n <= g_n <= total_n for n <= {}", opts.sandwich_order),
            Some(row) => format!("violated at n = {}", row.n),
        };
        report.push("sandwich", family.to_string(), s.pass(), detail);
    }
    for family in FamilyId::ALL {
        check_growth(opts, family, &mut report);
    }
    check_closed_forms(opts, &mut report);
    report
}

fn check_oracle(opts: &VerifyOptions, family: FamilyId, report: &mut VerificationReport) {
    let limit = opts.oracle_limit(family);
    let rows = match census(family, limit, limit.max(DEFAULT_ENUMERATION_LIMIT)) {
        Ok(rows) => rows,
        Err(e) => {
            report.push("oracle", family.to_string(), false, e.to_string());
            return;
        }
    };
    let h = opts.series(family, BoundKind::Exact, limit);
    let total = census_series(family, limit);
    let mismatch = rows.iter().enumerate().find(|(n, (_, hip))| {
        h.coeffs()[*n].to_integer() != BigInt::from(*hip)
    });
    let detail = match mismatch {
        None => format!("h_n equals brute force for n <= {limit}"),
        Some((n, (_, hip))) => format!("n = {n}: recurrence {} vs brute force {hip}", h.coeffs()[n]),
    };
    report.push("oracle", family.to_string(), mismatch.is_none(), detail);

    let mismatch = rows
        .iter()
        .enumerate()
        .find(|(n, (tot, _))| total.coeffs()[*n].to_integer() != BigInt::from(*tot));
    let detail = match mismatch {
        None => format!("census equals closed-form totals for n <= {limit}"),
        Some((n, (tot, _))) => format!("n = {n}: series {} vs brute force {tot}", total.coeffs()[n]),
    };
    report.push("totals", family.to_string(), mismatch.is_none(), detail);
}

fn check_residuals(opts: &VerifyOptions, family: FamilyId, report: &mut VerificationReport) {
    for kind in [BoundKind::Exact, BoundKind::Upper, BoundKind::Lower] {
        let y = opts.series(family, kind, opts.residual_order);
        let sub = substituted_series(family, kind, &y);
        let zero = functional_equation_residual(family_params(family), &y, &sub)
            .map(|r| r.is_zero())
            .unwrap_or(false);
        report.push(
            "residuals",
            format!("{family} {kind}"),
            zero,
            format!("residual through x^{} is {}", opts.residual_order, if zero { "zero" } else { "nonzero" }),
        );
    }
}

fn check_growth(opts: &VerifyOptions, family: FamilyId, report: &mut VerificationReport) {
    let published = PUBLISHED.iter().find(|p| p.family == family).expect("all families");
    let g = match growth_interval(family, opts.tol) {
        Ok(g) => g,
        Err(e) => {
            report.push("growth", family.to_string(), false, e.to_string());
            return;
        }
    };
    let close = |a: f64, b: f64| (a - b).abs() <= ENDPOINT_TOL;
    let mut ok = close(g.lower, published.lower) && close(g.upper, published.upper);
    if let Some(r) = published.rho_upper_eq {
        ok &= close(g.rho_upper_eq, r);
    }
    if let Some(r) = published.rho_lower_eq {
        ok &= close(g.rho_lower_eq, r);
    }
    report.push(
        "growth",
        family.to_string(),
        ok,
        format!(
            "[{:.6}, {:.6}] vs published [{:.6}, {:.6}]",
            g.lower, g.upper, published.lower, published.upper
        ),
    );

    let h = opts.series(family, BoundKind::Exact, opts.ratio_index);
    let (ok, detail) = match empirical_growth(&h, opts.ratio_index) {
        Ok(ratio) => (
            g.contains(ratio, RATIO_SLACK),
            format!("h_{0}/h_{1} = {ratio:.6}", opts.ratio_index, opts.ratio_index - 1),
        ),
        Err(e) => (false, e.to_string()),
    };
    report.push("ratio", family.to_string(), ok, detail);
}

fn check_closed_forms(opts: &VerifyOptions, report: &mut VerificationReport) {
    let (upper, lower) = closed_form_binary_roots();
    match find_dominant_singularity(FamilyId::BinaryPlane, BoundKind::Upper, opts.tol) {
        Ok(r) => {
            let delta = (upper - r.rho).abs();
            report.push(
                "closed_form",
                "binary upper radical".into(),
                delta < 1e-9,
                format!("|radical - rho| = {delta:.3e}"),
            );
        }
        Err(e) => report.push("closed_form", "binary upper radical".into(), false, e.to_string()),
    }
    // Reported only.
    if let Ok(r) = find_dominant_singularity(FamilyId::BinaryPlane, BoundKind::Lower, opts.tol) {
        report.push(
            "closed_form",
            "binary lower cube-root radical".into(),
            true,
            format!("|radical - rho| = {:.3e} (informational)", (lower - r.rho).abs()),
        );
    }
    let x = (4.0 - 3f64.sqrt()) / 13.0;
    let (ok, detail) = match discriminant(FamilyId::ColoredRightBinary, BoundKind::Upper, x) {
        Ok(d) => (d.abs() < 1e-10, format!("|D((4 - sqrt 3)/13)| = {:.3e}", d.abs())),
        Err(e) => (false, e.to_string()),
    };
    report.push("closed_form", "colored upper algebraic root".into(), ok, detail);
}
