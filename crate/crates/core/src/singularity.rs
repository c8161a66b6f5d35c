//! Dominant singularities of the bounding series.
//!
//! Each bound solves a quadratic `a Y^2 + b Y + c = 0` with
//! `a = alpha x`, `b = -(beta x + 1)` and
//! `c = x (c0 + gamma (1 - Sub(x^2))) + 1`. The solved branch is analytic until
//! the discriminant `b^2 - 4ac` first vanishes on the positive axis, provided
//! that happens before `Sub(x^2)` itself breaks down.

use crate::family::{BoundKind, FamilyId};
use crate::known_gfs::{DomainError, KnownGf};
use crate::recurrences::family_params;
use crate::series::PowerSeries;

/// Grid spacing of the initial sign-change scan.
pub const SCAN_STEP: f64 = 1e-3;
/// Default bisection width.
pub const DEFAULT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SingularityError {
    #[error("the exact series has no closed-form discriminant")]
    ExactKind,
    #[error("discriminant of {family} {kind} has no sign change below {limit}")]
    NoSignChange {
        family: FamilyId,
        kind: BoundKind,
        limit: f64,
    },
    #[error("x = {x} is outside [0, {limit}) for {family} {kind}")]
    OutOfDomain {
        family: FamilyId,
        kind: BoundKind,
        x: f64,
        limit: f64,
    },
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error("tolerance must be positive and finite, got {0}")]
    BadTolerance(f64),
    #[error("root {rho} of {family} {kind} is not certified: {reason}")]
    Uncertified {
        family: FamilyId,
        kind: BoundKind,
        rho: f64,
        reason: &'static str,
    },
    #[error("coefficient {n} is not positive or out of range")]
    NonPositiveCoefficient { n: usize },
}

#[derive(Clone, Debug, PartialEq)]
pub struct SingularityResult {
    pub family: FamilyId,
    pub kind: BoundKind,
    /// Midpoint of the final bracket.
    pub rho: f64,
    pub bracket_lo: f64,
    pub bracket_hi: f64,
    /// Exponential growth rate `1 / rho`.
    pub growth: f64,
    /// Discriminant at `rho`.
    pub residual: f64,
    pub iterations: u32,
}

impl SingularityResult {
    pub fn bracket_width(&self) -> f64 {
        self.bracket_hi - self.bracket_lo
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GrowthInterval {
    pub family: FamilyId,
    pub lower: f64,
    pub upper: f64,
    /// Root of the lower-bound equation; its reciprocal is `lower`.
    pub rho_lower_eq: f64,
    /// Root of the upper-bound equation; its reciprocal is `upper`.
    pub rho_upper_eq: f64,
    pub lower_root: SingularityResult,
    pub upper_root: SingularityResult,
}

impl GrowthInterval {
    pub fn contains(&self, value: f64, slack: f64) -> bool {
        self.lower - slack <= value && value <= self.upper + slack
    }
}

fn substitution(family: FamilyId, kind: BoundKind) -> Result<KnownGf, SingularityError> {
    match kind {
        BoundKind::Exact => Err(SingularityError::ExactKind),
        BoundKind::Upper => Ok(KnownGf::chain_of(family)),
        BoundKind::Lower => Ok(KnownGf::total_of(family)),
    }
}

/// Smallest positive `x` at which `Sub(x^2)` stops being real-analytic.
pub fn branch_limit(family: FamilyId, kind: BoundKind) -> Result<f64, SingularityError> {
    Ok(substitution(family, kind)?.domain_limit().sqrt())
}

/// `(beta x + 1)^2 - 4 alpha x (x (c0 + gamma (1 - Sub(x^2))) + 1)`.
pub fn discriminant(family: FamilyId, kind: BoundKind, x: f64) -> Result<f64, SingularityError> {
    let gf = substitution(family, kind)?;
    let limit = gf.domain_limit().sqrt();
    if !(0.0..limit).contains(&x) {
        return Err(SingularityError::OutOfDomain {
            family,
            kind,
            x,
            limit,
        });
    }
    let p = family_params(family);
    let (alpha, beta, gamma, c0) = (p.alpha as f64, p.beta as f64, p.gamma as f64, p.c0 as f64);
    let sub = gf.eval_real(x * x)?;
    let b = beta * x + 1.0;
    let c = x * (c0 + gamma * (1.0 - sub)) + 1.0;
    Ok(b * b - 4.0 * alpha * x * c)
}

/// Scans for the first sign change of the discriminant and bisects it down
/// to width `tol`.
pub fn find_dominant_singularity(
    family: FamilyId,
    kind: BoundKind,
    tol: f64,
) -> Result<SingularityResult, SingularityError> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(SingularityError::BadTolerance(tol));
    }
    let limit = branch_limit(family, kind)?;
    let d = |x: f64| discriminant(family, kind, x);

    let mut lo = 0.0;
    let mut d_lo = d(lo)?;
    let mut hi = None;
    let mut k = 1u32;
    loop {
        let x = f64::from(k) * SCAN_STEP;
        if x >= limit {
            break;
        }
        let v = d(x)?;
        if v <= 0.0 {
            hi = Some(x);
            break;
        }
        lo = x;
        d_lo = v;
        k += 1;
    }
    let Some(mut hi) = hi else {
        return Err(SingularityError::NoSignChange { family, kind, limit });
    };
    debug_assert!(d_lo > 0.0);

    let mut iterations = 0;
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            // bracket is down to adjacent floats
            break;
        }
        if d(mid)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    let rho = 0.5 * (lo + hi);
    let uncertified = |reason| SingularityError::Uncertified {
        family,
        kind,
        rho,
        reason,
    };
    if d(lo)? <= 0.0 || d(hi)? > 0.0 {
        return Err(uncertified("bracket endpoints do not straddle zero"));
    }
    let step = tol.max(hi - lo);
    if rho + step >= limit {
        return Err(uncertified("root is not below the branch limit"));
    }
    if d((rho - step).max(0.0))? <= 0.0 || d(rho + step)? >= 0.0 {
        return Err(uncertified("discriminant does not change sign across rho"));
    }
    Ok(SingularityResult {
        family,
        kind,
        rho,
        bracket_lo: lo,
        bracket_hi: hi,
        growth: 1.0 / rho,
        residual: d(rho)?,
        iterations,
    })
}

/// The interval `[1 / rho_lower_eq, 1 / rho_upper_eq]` containing the
/// family's growth rate.
pub fn growth_interval(family: FamilyId, tol: f64) -> Result<GrowthInterval, SingularityError> {
    let lower_root = find_dominant_singularity(family, BoundKind::Lower, tol)?;
    let upper_root = find_dominant_singularity(family, BoundKind::Upper, tol)?;
    Ok(GrowthInterval {
        family,
        lower: lower_root.growth,
        upper: upper_root.growth,
        rho_lower_eq: lower_root.rho,
        rho_upper_eq: upper_root.rho,
        lower_root,
        upper_root,
    })
}

/// The two radicals given for the binary roots, upper-equation root first:
/// `(-2 - sqrt 2 + sqrt(14 + 4 sqrt 2)) / 4` and
/// `(-20 + cbrt(6400 - 768 sqrt 69) + 4 * 2^(2/3) cbrt(25 + 3 sqrt 69)) / 24`.
pub fn closed_form_binary_roots() -> (f64, f64) {
    let s2 = std::f64::consts::SQRT_2;
    let upper = (-2.0 - s2 + (14.0 + 4.0 * s2).sqrt()) / 4.0;
    let s69 = 69f64.sqrt();
    let lower = (-20.0
        + (6400.0 - 768.0 * s69).cbrt()
        + 4.0 * 2f64.powf(2.0 / 3.0) * (25.0 + 3.0 * s69).cbrt())
        / 24.0;
    (upper, lower)
}

/// `a_n / a_{n-1}` for a series with positive coefficients.
pub fn empirical_growth(series: &PowerSeries, n: usize) -> Result<f64, SingularityError> {
    if n == 0 {
        return Err(SingularityError::NonPositiveCoefficient { n });
    }
    series
        .coefficient_ratio(n)
        .ok_or(SingularityError::NonPositiveCoefficient { n })
}
