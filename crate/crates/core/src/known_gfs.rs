//! Closed-form generating functions that enter the bounding equations.
//!
//! Each function has two faces: an exact truncated expansion, obtained by
//! expanding its radical with [`PowerSeries::sqrt`], and a real evaluation
//! used by the root finder. All six have constant term 1.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::family::FamilyId;
use crate::series::{Coefficient, PowerSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KnownGf {
    /// `(1 - sqrt(1 - 4x)) / (2x)`: binary trees.
    Catalan,
    /// `(1 - x - sqrt(1 - 2x - 3x^2)) / (2x^2)`: plane 1-2 trees on `n + 1` vertices.
    Motzkin,
    /// `(1 + x - sqrt(1 - 6x + x^2)) / (4x)`: binary trees with two-colored right edges.
    SchroederLittle,
    /// `1 + x / (1 - 2x)`: binary chains.
    ChainBinary,
    /// `1 / (1 - x)`: plane 1-2 chains.
    ChainOneTwo,
    /// `1 + x / (1 - 3x)`: colored binary chains.
    ChainColored,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DomainError {
    #[error("{gf}: radicand {radicand} is negative at x = {x}")]
    NegativeRadicand {
        gf: KnownGf,
        radicand: &'static str,
        x: f64,
    },
    #[error("{gf}: x = {x} is at or beyond the pole {pole}")]
    Pole { gf: KnownGf, pole: f64, x: f64 },
    #[error("{gf}: non-finite argument {x}")]
    NotFinite { gf: KnownGf, x: f64 },
}

impl fmt::Display for KnownGf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KnownGf::Catalan => "Catalan",
            KnownGf::Motzkin => "Motzkin",
            KnownGf::SchroederLittle => "little Schroeder",
            KnownGf::ChainBinary => "binary chain",
            KnownGf::ChainOneTwo => "1-2 chain",
            KnownGf::ChainColored => "colored chain",
        })
    }
}

impl KnownGf {
    pub const ALL: [KnownGf; 6] = [
        KnownGf::Catalan,
        KnownGf::Motzkin,
        KnownGf::SchroederLittle,
        KnownGf::ChainBinary,
        KnownGf::ChainOneTwo,
        KnownGf::ChainColored,
    ];

    /// Chain series of a family: every vertex has at most one child.
    pub fn chain_of(family: FamilyId) -> KnownGf {
        match family {
            FamilyId::BinaryPlane => KnownGf::ChainBinary,
            FamilyId::PlaneOneTwo => KnownGf::ChainOneTwo,
            FamilyId::ColoredRightBinary => KnownGf::ChainColored,
        }
    }

    /// Total-count series used for the lower bound. For plane 1-2 trees this
    /// is the Motzkin series as written, with `m_n` at `x^n`.
    pub fn total_of(family: FamilyId) -> KnownGf {
        match family {
            FamilyId::BinaryPlane => KnownGf::Catalan,
            FamilyId::PlaneOneTwo => KnownGf::Motzkin,
            FamilyId::ColoredRightBinary => KnownGf::SchroederLittle,
        }
    }

    /// Largest real argument at which the closed form is analytic.
    ///
    /// For the radicals this is the smaller root of the radicand (included);
    /// for the chains it is the pole (excluded).
    pub fn domain_limit(self) -> f64 {
        match self {
            KnownGf::Catalan => 0.25,
            KnownGf::Motzkin => 1.0 / 3.0,
            KnownGf::SchroederLittle => 3.0 - 2.0 * std::f64::consts::SQRT_2,
            KnownGf::ChainBinary => 0.5,
            KnownGf::ChainOneTwo => 1.0,
            KnownGf::ChainColored => 1.0 / 3.0,
        }
    }

    fn is_pole_limited(self) -> bool {
        matches!(
            self,
            KnownGf::ChainBinary | KnownGf::ChainOneTwo | KnownGf::ChainColored
        )
    }

    /// Exact expansion through `x^order`.
    pub fn expand(self, order: usize) -> PowerSeries {
        let q = |n: i64| Coefficient::from_integer(n.into());
        // (numerator - sqrt(radicand)) / (denominator * x^shift)
        let radical = |radicand: &[i64], numerator: &[i64], shift: usize, denominator: i64| {
            let n = order + shift;
            let poly = |c: &[i64]| {
                let mut v = vec![0i64; n + 1];
                for (i, &x) in c.iter().enumerate().take(n + 1) {
                    v[i] = x;
                }
                PowerSeries::from_integers(v)
            };
            let root = poly(radicand).sqrt().expect("radicand has constant term 1");
            poly(numerator)
                .sub(&root)
                .and_then(|s| s.shift_down(shift))
                .expect("numerator cancels the low-order terms")
                .scale(&(Coefficient::one() / q(denominator)))
        };
        match self {
            KnownGf::Catalan => radical(&[1, -4], &[1], 1, 2),
            KnownGf::Motzkin => radical(&[1, -2, -3], &[1, -1], 2, 2),
            KnownGf::SchroederLittle => radical(&[1, -6, 1], &[1, 1], 1, 4),
            KnownGf::ChainBinary => chain(order, 2),
            KnownGf::ChainOneTwo => {
                PowerSeries::from_integers(std::iter::repeat_n(1u32, order + 1))
            }
            KnownGf::ChainColored => chain(order, 3),
        }
    }

    /// Real value of the closed form at `x`.
    ///
    /// The radicals are evaluated in rationalized form, e.g.
    /// `C(x) = 2 / (1 + sqrt(1 - 4x))`, which is stable near 0 and returns the
    /// limit value 1 at `x = 0`.
    pub fn eval_real(self, x: f64) -> Result<f64, DomainError> {
        if !x.is_finite() {
            return Err(DomainError::NotFinite { gf: self, x });
        }
        let limit = self.domain_limit();
        if self.is_pole_limited() {
            if x >= limit {
                return Err(DomainError::Pole {
                    gf: self,
                    pole: limit,
                    x,
                });
            }
        } else if x > limit || (self == KnownGf::Motzkin && x < -1.0) {
            return Err(DomainError::NegativeRadicand {
                gf: self,
                radicand: self.radicand_name(),
                x,
            });
        }
        Ok(match self {
            KnownGf::Catalan => 2.0 / (1.0 + (1.0 - 4.0 * x).max(0.0).sqrt()),
            KnownGf::Motzkin => {
                2.0 / (1.0 - x + (1.0 - 2.0 * x - 3.0 * x * x).max(0.0).sqrt())
            }
            KnownGf::SchroederLittle => {
                2.0 / (1.0 + x + (1.0 - 6.0 * x + x * x).max(0.0).sqrt())
            }
            KnownGf::ChainBinary => 1.0 + x / (1.0 - 2.0 * x),
            KnownGf::ChainOneTwo => 1.0 / (1.0 - x),
            KnownGf::ChainColored => 1.0 + x / (1.0 - 3.0 * x),
        })
    }

    fn radicand_name(self) -> &'static str {
        match self {
            KnownGf::Catalan => "1 - 4x",
            KnownGf::Motzkin => "1 - 2x - 3x^2",
            KnownGf::SchroederLittle => "1 - 6x + x^2",
            _ => "",
        }
    }
}

/// `1, 1, b, b^2, ...`
fn chain(order: usize, base: u32) -> PowerSeries {
    let mut v = Vec::with_capacity(order + 1);
    v.push(BigInt::one());
    let mut p = BigInt::one();
    for _ in 0..order {
        v.push(p.clone());
        p *= base;
    }
    PowerSeries::from_integers(v)
}

/// Number of `n`-vertex trees in a family, for every `n <= order`.
///
/// Unlike [`KnownGf::total_of`], the plane 1-2 census is the Motzkin series
/// shifted by one vertex: `1, 1, 1, 2, 4, 9, ...`.
pub fn census_series(family: FamilyId, order: usize) -> PowerSeries {
    match family {
        FamilyId::BinaryPlane => KnownGf::Catalan.expand(order),
        FamilyId::ColoredRightBinary => KnownGf::SchroederLittle.expand(order),
        FamilyId::PlaneOneTwo => {
            let mut v = vec![Coefficient::one()];
            if order > 0 {
                v.extend(KnownGf::Motzkin.expand(order - 1).coeffs().iter().cloned());
            }
            PowerSeries::new(v, order).expect("length is order + 1")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn ints(s: &PowerSeries) -> Vec<i64> {
        s.to_integers()
            .expect("integral")
            .iter()
            .map(|c| c.to_i64().unwrap())
            .collect()
    }

    /// Independent recurrences for the three total-count sequences.
    fn by_recurrence(gf: KnownGf, order: usize) -> Vec<BigInt> {
        let mut a: Vec<BigInt> = vec![BigInt::one()];
        for n in 0..order {
            let next = match gf {
                // c_{n+1} = sum c_i c_{n-i}
                KnownGf::Catalan => (0..=n).map(|i| &a[i] * &a[n - i]).sum(),
                // m_{n+1} = m_n + sum_{i=0}^{n-1} m_i m_{n-1-i}
                KnownGf::Motzkin => {
                    let conv: BigInt = (0..n).map(|i| &a[i] * &a[n - 1 - i]).sum();
                    &a[n] + conv
                }
                // large Schroeder r = 2s - 1: r_{n+1} = r_n + sum r_i r_{n-i}
                KnownGf::SchroederLittle => {
                    let r = |i: usize| if i == 0 { BigInt::one() } else { 2 * &a[i] };
                    let conv: BigInt = (0..=n).map(|i| r(i) * r(n - i)).sum();
                    (r(n) + conv) / 2
                }
                _ => unreachable!(),
            };
            a.push(next);
        }
        a
    }

    #[test]
    fn chain_expansions() {
        assert_eq!(ints(&KnownGf::ChainBinary.expand(4)), [1, 1, 2, 4, 8]);
        assert_eq!(ints(&KnownGf::ChainOneTwo.expand(3)), [1, 1, 1, 1]);
        assert_eq!(ints(&KnownGf::ChainColored.expand(4)), [1, 1, 3, 9, 27]);
    }

    #[test]
    fn radical_expansions() {
        assert_eq!(ints(&KnownGf::Catalan.expand(5)), [1, 1, 2, 5, 14, 42]);
        assert_eq!(ints(&KnownGf::Motzkin.expand(5)), [1, 1, 2, 4, 9, 21]);
        assert_eq!(ints(&KnownGf::SchroederLittle.expand(5)), [1, 1, 3, 11, 45, 197]);
        assert_eq!(ints(&KnownGf::Catalan.expand(0)), [1]);
    }

    #[test]
    fn expansions_agree_with_recurrences() {
        for gf in [KnownGf::Catalan, KnownGf::Motzkin, KnownGf::SchroederLittle] {
            let series = gf.expand(29);
            assert!(series.is_integral(), "{gf}");
            assert_eq!(series.to_integers().unwrap(), by_recurrence(gf, 29), "{gf}");
        }
    }

    #[test]
    fn census_shifts_motzkin() {
        assert_eq!(ints(&census_series(FamilyId::PlaneOneTwo, 6)), [1, 1, 1, 2, 4, 9, 21]);
        assert_eq!(ints(&census_series(FamilyId::PlaneOneTwo, 0)), [1]);
        assert_eq!(ints(&census_series(FamilyId::BinaryPlane, 3)), [1, 1, 2, 5]);
    }

    #[test]
    fn real_values() {
        assert_eq!(KnownGf::Catalan.eval_real(0.0).unwrap(), 1.0);
        assert_eq!(KnownGf::Catalan.eval_real(0.25).unwrap(), 2.0);
        assert_eq!(KnownGf::ChainOneTwo.eval_real(0.5).unwrap(), 2.0);
        for gf in KnownGf::ALL {
            assert_eq!(gf.eval_real(0.0).unwrap(), 1.0, "{gf}");
        }
    }

    #[test]
    fn rationalized_forms_match_printed_forms() {
        for x in [0.01f64, 0.1, 0.2, 0.24] {
            let c = (1.0 - (1.0 - 4.0 * x).sqrt()) / (2.0 * x);
            let m = (1.0 - x - (1.0 - 2.0 * x - 3.0 * x * x).sqrt()) / (2.0 * x * x);
            let s = (1.0 + x - (1.0 - 6.0 * x + x * x).sqrt()) / (4.0 * x);
            assert!((KnownGf::Catalan.eval_real(x).unwrap() - c).abs() < 1e-12);
            assert!((KnownGf::Motzkin.eval_real(x).unwrap() - m).abs() < 1e-10);
            if x < KnownGf::SchroederLittle.domain_limit() {
                assert!((KnownGf::SchroederLittle.eval_real(x).unwrap() - s).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(
            KnownGf::Catalan.eval_real(0.26),
            Err(DomainError::NegativeRadicand { radicand: "1 - 4x", .. })
        ));
        assert!(matches!(
            KnownGf::SchroederLittle.eval_real(0.2),
            Err(DomainError::NegativeRadicand { .. })
        ));
        assert!(matches!(
            KnownGf::ChainBinary.eval_real(0.5),
            Err(DomainError::Pole { .. })
        ));
        assert!(matches!(
            KnownGf::Motzkin.eval_real(f64::NAN),
            Err(DomainError::NotFinite { .. })
        ));
        assert!(KnownGf::Motzkin.eval_real(-1.5).is_err());
    }

    #[test]
    fn real_value_matches_partial_sum() {
        let x = Coefficient::new(1.into(), 1000.into());
        for gf in KnownGf::ALL {
            let partial = gf.expand(512).eval(&x).to_f64().unwrap();
            let closed = gf.eval_real(1e-3).unwrap();
            assert!(((partial - closed) / closed).abs() < 1e-12, "{gf}: {partial} vs {closed}");
        }
    }
}
