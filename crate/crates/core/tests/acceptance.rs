//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hipster_core::known_gfs::census_series;
use hipster_core::recurrences::{
    family_params, functional_equation_residual, sandwich_report, substituted_series,
};
use hipster_core::series::{Coefficient, PowerSeries};
use hipster_core::singularity::{
    closed_form_binary_roots, discriminant, empirical_growth, find_dominant_singularity,
    growth_interval, DEFAULT_TOL,
};
use hipster_core::tree_enum::{census, DEFAULT_ENUMERATION_LIMIT};
use hipster_core::{bound_series, exact_series, BoundKind, FamilyId};
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

const ENDPOINT_TOL: f64 = 1e-5;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn oracle_limit(family: FamilyId) -> usize {
    match family {
        FamilyId::BinaryPlane | FamilyId::PlaneOneTwo => 14,
        FamilyId::ColoredRightBinary => 12,
    }
}

type Census = Vec<(FamilyId, Vec<(u64, u64)>)>;

fn run_census() -> (Census, Duration) {
    let start = Instant::now();
    let rows = FamilyId::ALL
        .iter()
        .map(|&f| {
            let rows = census(f, oracle_limit(f), DEFAULT_ENUMERATION_LIMIT).expect("within limit");
            (f, rows)
        })
        .collect();
    (rows, start.elapsed())
}

fn criterion_oracle(census: &Census, elapsed: Duration) -> Outcome {
    let mut notes = Vec::new();
    let mut pass = elapsed < Duration::from_secs(120);
    for (family, rows) in census {
        let h = exact_series(*family, rows.len() - 1);
        for (n, (_, hipster)) in rows.iter().enumerate() {
            if h.coeffs()[n] != Coefficient::from_integer(BigInt::from(*hipster)) {
                pass = false;
                notes.push(format!("{family} n={n}: {} vs {hipster}", h.coeffs()[n]));
            }
        }
    }
    notes.push(format!("census took {:.1}s", elapsed.as_secs_f64()));
    outcome(pass, notes.join("; "))
}

fn criterion_totals(census: &Census) -> Outcome {
    let mut pass = true;
    let mut notes = Vec::new();
    for (family, rows) in census {
        let total = census_series(*family, rows.len() - 1);
        for (n, (count, _)) in rows.iter().enumerate() {
            if total.coeffs()[n] != Coefficient::from_integer(BigInt::from(*count)) {
                pass = false;
                notes.push(format!("{family} n={n}"));
            }
        }
    }
    if pass {
        notes.push("Catalan n<=14, shifted Motzkin n<=14, little Schroeder n<=12".into());
    }
    outcome(pass, notes.join("; "))
}

fn criterion_growth() -> Outcome {
    // (family, lower, upper, rho_upper_eq, rho_lower_eq)
    let published = [
        (FamilyId::BinaryPlane, 3.923450, 3.923909, None, None),
        (FamilyId::PlaneOneTwo, 2.824486, 2.854882, Some(0.350277), Some(0.354047)),
        (FamilyId::ColoredRightBinary, 5.731821, 5.732051, Some(0.174458), Some(0.174465)),
    ];
    let mut pass = true;
    let mut notes = Vec::new();
    for (family, lower, upper, rho_u, rho_l) in published {
        let start = Instant::now();
        let g = match growth_interval(family, DEFAULT_TOL) {
            Ok(g) => g,
            Err(e) => return outcome(false, format!("{family}: {e}")),
        };
        let elapsed = start.elapsed();
        let close = |a: f64, b: f64| (a - b).abs() <= ENDPOINT_TOL;
        let mut ok = close(g.lower, lower) && close(g.upper, upper) && elapsed < Duration::from_secs(1);
        if let Some(r) = rho_u {
            ok &= close(g.rho_upper_eq, r);
        }
        if let Some(r) = rho_l {
            ok &= close(g.rho_lower_eq, r);
        }
        pass &= ok;
        notes.push(format!(
            "{family} [{:.6}, {:.6}] rho ({:.6}, {:.6})",
            g.lower, g.upper, g.rho_upper_eq, g.rho_lower_eq
        ));
    }
    outcome(pass, notes.join("; "))
}

fn criterion_closed_forms() -> Outcome {
    let (upper, lower) = closed_form_binary_roots();
    let up = find_dominant_singularity(FamilyId::BinaryPlane, BoundKind::Upper, DEFAULT_TOL).unwrap();
    let lo = find_dominant_singularity(FamilyId::BinaryPlane, BoundKind::Lower, DEFAULT_TOL).unwrap();
    let d_up = (upper - up.rho).abs();
    let x = (4.0 - 3f64.sqrt()) / 13.0;
    let d = discriminant(FamilyId::ColoredRightBinary, BoundKind::Upper, x).unwrap();
    outcome(
        d_up < 1e-9 && d.abs() < 1e-10,
        format!(
            "upper radical delta {d_up:.2e}; |D((4-sqrt3)/13)| {:.2e}; cube-root radical delta {:.2e} (reported)",
            d.abs(),
            (lower - lo.rho).abs()
        ),
    )
}

fn criterion_sandwich() -> Outcome {
    let start = Instant::now();
    let mut pass = true;
    let mut notes = Vec::new();
    for family in FamilyId::ALL {
        let report = sandwich_report(family, 1000);
        if let Some(row) = report.first_failure() {
            pass = false;
            notes.push(format!("{family} fails at n={}", row.n));
        }
    }
    let elapsed = start.elapsed();
    pass &= elapsed < Duration::from_secs(30);
    notes.push(format!("n<=1000 in {:.1}s", elapsed.as_secs_f64()));
    outcome(pass, notes.join("; "))
}

fn criterion_residuals() -> Outcome {
    let mut pass = true;
    let mut notes = Vec::new();
    for family in FamilyId::ALL {
        for kind in [BoundKind::Exact, BoundKind::Upper, BoundKind::Lower] {
            let y = bound_series(family, kind, 512);
            let sub = substituted_series(family, kind, &y);
            let zero = functional_equation_residual(family_params(family), &y, &sub)
                .map(|r| r.is_zero())
                .unwrap_or(false);
            if !zero {
                pass = false;
                notes.push(format!("{family} {kind} nonzero"));
            }
        }
    }
    if pass {
        notes.push("9 series, order 512".into());
    }
    outcome(pass, notes.join("; "))
}

fn criterion_ratio() -> Outcome {
    let mut pass = true;
    let mut notes = Vec::new();
    for family in FamilyId::ALL {
        let g = growth_interval(family, DEFAULT_TOL).unwrap();
        let ratio = empirical_growth(&exact_series(family, 500), 500).unwrap();
        let ok = g.lower - 0.02 <= ratio && ratio <= g.upper + 0.02;
        pass &= ok;
        notes.push(format!("{family} {ratio:.6}"));
    }
    outcome(pass, notes.join("; "))
}

fn arb_series(order: usize) -> impl Strategy<Value = PowerSeries> {
    prop::collection::vec((-40i64..40, 1i64..5), order + 1).prop_map(move |v| {
        let c = v
            .into_iter()
            .map(|(n, d)| Coefficient::new(n.into(), d.into()))
            .collect();
        PowerSeries::new(c, order).unwrap()
    })
}

fn cases() -> Config {
    Config {
        cases: 1000,
        failure_persistence: None,
        ..Config::default()
    }
}

fn criterion_series_properties() -> Outcome {
    let mut runner = TestRunner::new(cases());
    let triples = (0usize..8).prop_flat_map(|n| (arb_series(n), arb_series(n), arb_series(n)));
    let ring = runner.run(&triples, |(a, b, c)| {
        prop_assert_eq!(a.add(&b)?, b.add(&a)?);
        prop_assert_eq!(a.mul(&b)?, b.mul(&a)?);
        prop_assert_eq!(a.add(&b)?.add(&c)?, a.add(&b.add(&c)?)?);
        prop_assert_eq!(a.mul(&b)?.mul(&c)?, a.mul(&b.mul(&c)?)?);
        prop_assert_eq!(a.mul(&b.add(&c)?)?, a.mul(&b)?.add(&a.mul(&c)?)?);
        Ok(())
    });
    let mut runner = TestRunner::new(cases());
    let sqrt = runner.run(&(0usize..10).prop_flat_map(arb_series), |a| {
        let mut c = a.coeffs().to_vec();
        c[0] = Coefficient::from_integer(1.into());
        let a = PowerSeries::new(c, a.order())?;
        let s = a.sqrt()?;
        prop_assert_eq!(s.mul(&s)?, a);
        Ok(())
    });
    let mut runner = TestRunner::new(cases());
    let subst = runner.run(&(0usize..14).prop_flat_map(arb_series), |a| {
        let b = a.substitute_square();
        for (n, c) in b.coeffs().iter().enumerate() {
            if n % 2 == 1 {
                prop_assert_eq!(c, &Coefficient::from_integer(0.into()));
            } else {
                prop_assert_eq!(c, &a.coeffs()[n / 2]);
            }
        }
        Ok(())
    });
    let errors: Vec<String> = [
        ("ring", ring.err().map(|e| e.to_string())),
        ("sqrt", sqrt.err().map(|e| e.to_string())),
        ("substitution", subst.err().map(|e| e.to_string())),
    ]
    .into_iter()
    .filter_map(|(name, e)| e.map(|e| format!("{name}: {e}")))
    .collect();
    if errors.is_empty() {
        outcome(true, "ring axioms, sqrt roundtrip, substitution law: 1000 cases each")
    } else {
        outcome(false, errors.join("; "))
    }
}

fn main() -> ExitCode {
    let (census, census_time) = run_census();
    let results = [
        ("1 oracle equivalence", criterion_oracle(&census, census_time)),
        ("2 total-count calibration", criterion_totals(&census)),
        ("3 growth endpoints", criterion_growth()),
        ("4 closed forms", criterion_closed_forms()),
        ("5 sandwich n<=1000", criterion_sandwich()),
        ("6 functional-equation residuals", criterion_residuals()),
        ("7 ratio diagnostic", criterion_ratio()),
        ("8 series-core properties", criterion_series_properties()),
    ];
    let mut failed = 0;
    for (name, o) in &results {
        println!("[{}] criterion {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        failed += usize::from(!o.pass);
    }
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
