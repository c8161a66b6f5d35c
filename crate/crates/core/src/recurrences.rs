//! Coefficient recurrences for the hipster series and its bounds.
//!
//! All three families fit one functional equation,
//!
//! ```text
//! Y = x * (alpha * Y^2 - beta * Y - gamma * (Sub(x^2) - 1) + c0) + 1
//! ```
//!
//! where `Sub` is `Y` itself for the exact count, the chain series for the
//! upper bound and the total-count series for the lower bound. Extracting
//! `[x^n]` gives, for `n >= 1`,
//!
//! ```text
//! y_n = alpha * sum_{i<n} y_i y_{n-1-i} - beta * y_{n-1}
//!       - gamma * [n odd, n >= 3] * sub_{(n-1)/2} + c0 * [n = 1]
//! ```

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::family::{BoundKind, FamilyId};
use crate::known_gfs::{census_series, KnownGf};
use crate::series::PowerSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilyParams {
    /// Multiplier of the ordered pair of children.
    pub alpha: i64,
    /// Multiplier of the single-child correction.
    pub beta: i64,
    /// Multiplier of the isomorphic-pair correction.
    pub gamma: i64,
    /// Extra constant inside the bracket.
    pub c0: i64,
}

pub fn family_params(family: FamilyId) -> FamilyParams {
    let (alpha, beta, gamma, c0) = match family {
        FamilyId::BinaryPlane => (1, 0, 1, 0),
        FamilyId::PlaneOneTwo => (1, 1, 1, 1),
        FamilyId::ColoredRightBinary => (2, 1, 2, 0),
    };
    FamilyParams {
        alpha,
        beta,
        gamma,
        c0,
    }
}

/// The series substituted at `x^2`.
#[derive(Clone, Debug)]
pub enum Substitution {
    SelfReferential,
    Known(Vec<BigInt>),
}

impl Substitution {
    pub fn for_kind(family: FamilyId, kind: BoundKind, order: usize) -> Self {
        let gf = match kind {
            BoundKind::Exact => return Substitution::SelfReferential,
            BoundKind::Upper => KnownGf::chain_of(family),
            BoundKind::Lower => KnownGf::total_of(family),
        };
        // only indices up to (order - 1) / 2 are read
        let needed = order / 2;
        Substitution::Known(gf.expand(needed).to_integers().expect("counting series"))
    }
}

/// Runs the recurrence through `x^order` and returns the integer coefficients.
pub fn solve_recurrence(params: FamilyParams, sub: &Substitution, order: usize) -> Vec<BigInt> {
    let FamilyParams {
        alpha,
        beta,
        gamma,
        c0,
    } = params;
    let mut y: Vec<BigInt> = Vec::with_capacity(order + 1);
    y.push(BigInt::one());
    for n in 1..=order {
        let m = n - 1;
        // sum_{i=0}^{m} y_i y_{m-i}, folded by symmetry
        let mut conv = BigInt::zero();
        for i in 0..m.div_ceil(2) {
            conv += &y[i] * &y[m - i];
        }
        conv *= 2;
        if m % 2 == 0 {
            conv += &y[m / 2] * &y[m / 2];
        }
        let mut next = conv * alpha - &y[m] * beta;
        if m % 2 == 0 && m >= 2 {
            let k = m / 2;
            let s = match sub {
                Substitution::SelfReferential => &y[k],
                Substitution::Known(v) => &v[k],
            };
            next -= s * gamma;
        }
        if n == 1 {
            next += c0;
        }
        y.push(next);
    }
    y
}

fn to_series(coeffs: Vec<BigInt>) -> PowerSeries {
    PowerSeries::from_integers(coeffs)
}

/// The hipster counts `h_0 ..= h_order`.
pub fn exact_series(family: FamilyId, order: usize) -> PowerSeries {
    bound_series(family, BoundKind::Exact, order)
}

/// `g_n` for [`BoundKind::Upper`], `f_n` for [`BoundKind::Lower`]; the exact
/// series for [`BoundKind::Exact`].
pub fn bound_series(family: FamilyId, kind: BoundKind, order: usize) -> PowerSeries {
    let sub = Substitution::for_kind(family, kind, order);
    to_series(solve_recurrence(family_params(family), &sub, order))
}

/// The series `Sub(x^2)` used by the functional equation, given the solved
/// series `y` for the exact kind.
pub fn substituted_series(family: FamilyId, kind: BoundKind, y: &PowerSeries) -> PowerSeries {
    let order = y.order();
    match kind {
        BoundKind::Exact => y.substitute_square(),
        BoundKind::Upper => KnownGf::chain_of(family).expand(order).substitute_square(),
        BoundKind::Lower => KnownGf::total_of(family).expand(order).substitute_square(),
    }
}

/// `alpha x Y^2 - (beta x + 1) Y - gamma x (Sub(x^2) - 1) + c0 x + 1`,
/// which vanishes identically when `Y` solves the functional equation.
pub fn functional_equation_residual(
    params: FamilyParams,
    y: &PowerSeries,
    sub_at_square: &PowerSeries,
) -> Result<PowerSeries, crate::series::SeriesError> {
    use crate::series::Coefficient;
    let order = y.order();
    let q = |n: i64| Coefficient::from_integer(n.into());
    let x = PowerSeries::monomial(q(1), 1, order);
    let one = PowerSeries::one(order);
    let square_term = y.mul(y)?.shift_up(1).scale(&q(params.alpha));
    let linear = x.scale(&q(params.beta)).add(&one)?.mul(y)?;
    let sub_term = sub_at_square.sub(&one)?.shift_up(1).scale(&q(params.gamma));
    let constant = x.scale(&q(params.c0)).add(&one)?;
    square_term.sub(&linear)?.sub(&sub_term)?.add(&constant)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SandwichRow {
    pub n: usize,
    pub lower: BigInt,
    pub exact: BigInt,
    pub upper: BigInt,
    pub total: BigInt,
    /// `0 < f_n <= h_n <= g_n`
    pub ordered: bool,
    /// `g_n <= total_n`
    pub within_total: bool,
}

impl SandwichRow {
    pub fn ok(&self) -> bool {
        self.ordered && self.within_total
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SandwichReport {
    pub family: FamilyId,
    pub rows: Vec<SandwichRow>,
}

impl SandwichReport {
    pub fn pass(&self) -> bool {
        self.rows.iter().all(SandwichRow::ok)
    }

    pub fn first_failure(&self) -> Option<&SandwichRow> {
        self.rows.iter().find(|r| !r.ok())
    }
}

/// Compares `f_n`, `h_n`, `g_n` and the census count for every `n <= order`.
pub fn sandwich_report(family: FamilyId, order: usize) -> SandwichReport {
    let params = family_params(family);
    let solve = |kind| solve_recurrence(params, &Substitution::for_kind(family, kind, order), order);
    let lower = solve(BoundKind::Lower);
    let exact = solve(BoundKind::Exact);
    let upper = solve(BoundKind::Upper);
    let total = census_series(family, order)
        .to_integers()
        .expect("census counts are integers");
    let rows = (0..=order)
        .map(|n| {
            let ordered = lower[n].is_positive() && lower[n] <= exact[n] && exact[n] <= upper[n];
            let within_total = upper[n] <= total[n];
            SandwichRow {
                n,
                lower: lower[n].clone(),
                exact: exact[n].clone(),
                upper: upper[n].clone(),
                total: total[n].clone(),
                ordered,
                within_total,
            }
        })
        .collect();
    SandwichReport { family, rows }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn small(s: &PowerSeries) -> Vec<i64> {
        s.to_integers()
            .unwrap()
            .iter()
            .map(|c| c.to_i64().unwrap())
            .collect()
    }

    #[test]
    fn params() {
        let p = family_params(FamilyId::ColoredRightBinary);
        assert_eq!((p.alpha, p.beta, p.gamma, p.c0), (2, 1, 2, 0));
        let p = family_params(FamilyId::PlaneOneTwo);
        assert_eq!((p.alpha, p.beta, p.gamma, p.c0), (1, 1, 1, 1));
        let p = family_params(FamilyId::BinaryPlane);
        assert_eq!((p.alpha, p.beta, p.gamma, p.c0), (1, 0, 1, 0));
    }

    #[test]
    fn first_exact_coefficients() {
        assert_eq!(small(&exact_series(FamilyId::BinaryPlane, 5)), [1, 1, 2, 4, 12, 34]);
        assert_eq!(small(&exact_series(FamilyId::PlaneOneTwo, 5)), [1, 1, 1, 1, 3, 5]);
        assert_eq!(crate::tree_enum::count_hipster(FamilyId::PlaneOneTwo, 5).unwrap(), 5);
        assert_eq!(small(&exact_series(FamilyId::ColoredRightBinary, 4)), [1, 1, 3, 9, 39]);
        assert_eq!(small(&exact_series(FamilyId::BinaryPlane, 0)), [1]);
    }

    #[test]
    fn binary_upper_tracks_exact_until_first_non_chain_pair() {
        let h = exact_series(FamilyId::BinaryPlane, 12);
        let g = bound_series(FamilyId::BinaryPlane, BoundKind::Upper, 12);
        assert_eq!(small(&g)[..6], [1, 1, 2, 4, 12, 34]);
        let first = (0..=12).find(|&n| h.coeffs()[n] != g.coeffs()[n]);
        assert_eq!(first, Some(9));
    }

    #[test]
    fn lower_bound_is_positive_and_below() {
        let h = exact_series(FamilyId::BinaryPlane, 60);
        let f = bound_series(FamilyId::BinaryPlane, BoundKind::Lower, 60);
        for n in 0..=60 {
            assert!(f.coeffs()[n].is_positive());
            assert!(f.coeffs()[n] <= h.coeffs()[n]);
        }
    }

    #[test]
    fn residuals_vanish() {
        for family in FamilyId::ALL {
            for kind in [BoundKind::Exact, BoundKind::Upper, BoundKind::Lower] {
                let y = bound_series(family, kind, 40);
                let sub = substituted_series(family, kind, &y);
                let r = functional_equation_residual(family_params(family), &y, &sub).unwrap();
                assert!(r.is_zero(), "{family} {kind}: {r}");
            }
        }
    }

    #[test]
    fn wrong_params_leave_a_residual() {
        let y = exact_series(FamilyId::PlaneOneTwo, 20);
        let sub = y.substitute_square();
        let mut p = family_params(FamilyId::PlaneOneTwo);
        p.gamma = 2;
        assert!(!functional_equation_residual(p, &y, &sub).unwrap().is_zero());
    }

    #[test]
    fn exact_substitution_reproduces_exact_series() {
        for family in FamilyId::ALL {
            let h = exact_series(family, 50).to_integers().unwrap();
            let via = solve_recurrence(family_params(family), &Substitution::Known(h.clone()), 50);
            assert_eq!(via, h);
        }
    }

    #[test]
    fn sandwich_holds() {
        for family in FamilyId::ALL {
            let report = sandwich_report(family, 200);
            assert!(report.pass(), "{family}: {:?}", report.first_failure());
        }
    }
}
