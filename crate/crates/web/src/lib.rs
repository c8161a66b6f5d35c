//! Browser bindings for the hipster-tree demo page in `www/`.
//!
//! Each export returns JSON text (or a flat number array) so the page needs
//! no extra glue. The `*_json` functions hold the logic and run natively.

use hipster_core::recurrences::sandwich_report;
use hipster_core::series::Coefficient;
use hipster_core::singularity::{branch_limit, discriminant};
use hipster_core::{growth_interval, BoundKind, FamilyId};
use num_traits::ToPrimitive;
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Largest table the page may request; coefficients grow past 2000 digits.
pub const MAX_TABLE_N: u32 = 2000;

fn family(name: &str) -> Result<FamilyId, String> {
    name.parse().map_err(|e| format!("{e}"))
}

fn kind(name: &str) -> Result<BoundKind, String> {
    match name {
        "upper" => Ok(BoundKind::Upper),
        "lower" => Ok(BoundKind::Lower),
        other => Err(format!("unknown bound {other:?} (expected upper or lower)")),
    }
}

/// `f_n`, `h_n`, `g_n` for `n <= n_max`, with the ratio `h_n / h_{n-1}`.
pub fn counts_json(family_name: &str, n_max: u32) -> Result<String, String> {
    if n_max > MAX_TABLE_N {
        return Err(format!("n must be at most {MAX_TABLE_N}"));
    }
    let report = sandwich_report(family(family_name)?, n_max as usize);
    let rows: Vec<_> = report
        .rows
        .iter()
        .enumerate()
        .map(|(n, r)| {
            let ratio = (n > 0).then(|| {
                let prev = &report.rows[n - 1].exact;
                Coefficient::new(r.exact.clone(), prev.clone())
            });
            json!({
                "n": r.n,
                "f": r.lower.to_string(),
                "h": r.exact.to_string(),
                "g": r.upper.to_string(),
                "ratio": ratio.and_then(|q| q.to_f64()),
                "ok": r.ordered,
            })
        })
        .collect();
    Ok(json!({ "family": family_name, "pass": report.pass(), "rows": rows }).to_string())
}

/// Samples the bound's discriminant on `[0, x_max]`, clipped below the branch
/// limit. Returns interleaved `x, D(x)` pairs.
pub fn discriminant_samples(
    family_name: &str,
    kind_name: &str,
    x_max: f64,
    samples: u32,
) -> Result<Vec<f64>, String> {
    let (f, k) = (family(family_name)?, kind(kind_name)?);
    if samples < 2 || x_max.is_nan() || x_max <= 0.0 {
        return Err("need at least two samples on a positive range".into());
    }
    let limit = branch_limit(f, k).map_err(|e| e.to_string())?;
    let top = x_max.min(limit * (1.0 - 1e-9));
    let mut out = Vec::with_capacity(2 * samples as usize);
    for i in 0..samples {
        let x = top * f64::from(i) / f64::from(samples - 1);
        let d = discriminant(f, k, x).map_err(|e| e.to_string())?;
        out.push(x);
        out.push(d);
    }
    Ok(out)
}

/// Both roots and the growth interval at bisection width `tol`.
pub fn growth_json(family_name: &str, tol: f64) -> Result<String, String> {
    let g = growth_interval(family(family_name)?, tol).map_err(|e| e.to_string())?;
    let root = |r: &hipster_core::SingularityResult| {
        json!({
            "rho": r.rho,
            "growth": r.growth,
            "bracket_lo": r.bracket_lo,
            "bracket_hi": r.bracket_hi,
            "residual": r.residual,
            "iterations": r.iterations,
        })
    };
    Ok(json!({
        "family": family_name,
        "lower": g.lower,
        "upper": g.upper,
        "rho_lower_eq": g.rho_lower_eq,
        "rho_upper_eq": g.rho_upper_eq,
        "lower_root": root(&g.lower_root),
        "upper_root": root(&g.upper_root),
    })
    .to_string())
}

#[wasm_bindgen]
pub fn counts(family: &str, n_max: u32) -> Result<String, JsValue> {
    counts_json(family, n_max).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = discriminantCurve)]
pub fn discriminant_curve(family: &str, kind: &str, x_max: f64, samples: u32) -> Result<Vec<f64>, JsValue> {
    discriminant_samples(family, kind, x_max, samples).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn growth(family: &str, tol: f64) -> Result<String, JsValue> {
    growth_json(family, tol).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    #[test]
    fn count_table() {
        let v: Value = serde_json::from_str(&counts_json("binary", 5).unwrap()).unwrap();
        let h: Vec<_> = v["rows"].as_array().unwrap().iter().map(|r| r["h"].as_str().unwrap()).collect();
        assert_eq!(h, ["1", "1", "2", "4", "12", "34"]);
        assert_eq!(v["pass"], true);
        assert!(v["rows"][0]["ratio"].is_null());
        assert_eq!(v["rows"][4]["ratio"].as_f64().unwrap(), 3.0);
        assert!(counts_json("binary", MAX_TABLE_N + 1).is_err());
        assert!(counts_json("ternary", 3).is_err());
    }

    #[test]
    fn curve_changes_sign_at_the_root() {
        let pts = discriminant_samples("colored", "upper", 0.3, 301).unwrap();
        assert_eq!(pts.len(), 602);
        assert_eq!(pts[1], 1.0);
        let crossing = pts
            .chunks(2)
            .zip(pts.chunks(2).skip(1))
            .find(|(a, b)| a[1] > 0.0 && b[1] <= 0.0)
            .map(|(a, _)| a[0])
            .unwrap();
        assert!((crossing - 0.174).abs() < 1e-3);
    }

    #[test]
    fn curve_is_clipped_to_branch_limit() {
        let pts = discriminant_samples("binary", "lower", 10.0, 50).unwrap();
        assert!(pts[pts.len() - 2] < 0.5);
        assert!(discriminant_samples("binary", "exact", 0.3, 10).is_err());
        assert!(discriminant_samples("binary", "upper", 0.3, 1).is_err());
    }

    #[test]
    fn growth_summary() {
        let v: Value = serde_json::from_str(&growth_json("one2", 1e-12).unwrap()).unwrap();
        assert!((v["lower"].as_f64().unwrap() - 2.824486).abs() < 1e-5);
        assert!((v["upper_root"]["rho"].as_f64().unwrap() - 0.350277).abs() < 1e-5);
        assert!(growth_json("one2", -1.0).is_err());
    }
}
