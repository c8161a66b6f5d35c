//! Truncated formal power series with exact rational coefficients.
//!
//! A series of order `N` stores the coefficients of `x^0 ..= x^N`. Binary
//! operations insist on equal orders: silently truncating to the shorter
//! operand hides off-by-one mistakes around the `x -> x^2` substitution.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact rational coefficient, always kept in lowest terms.
pub type Coefficient = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("expected {expected} coefficients for order {order}, got {got}")]
    LengthMismatch { order: usize, expected: usize, got: usize },
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("coefficient index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("square root needs constant term 1, found {0}")]
    SqrtConstantTerm(Coefficient),
    #[error("cannot divide by x^{power}: coefficient {index} is nonzero")]
    NotDivisible { power: usize, index: usize },
    #[error("cannot shift order {order} down by {power}")]
    ShiftTooLarge { order: usize, power: usize },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PowerSeries {
    coeffs: Vec<Coefficient>,
}

impl PowerSeries {
    /// Builds a series from exactly `order + 1` coefficients.
    pub fn new(coeffs: Vec<Coefficient>, order: usize) -> Result<Self, SeriesError> {
        if coeffs.len() != order + 1 {
            return Err(SeriesError::LengthMismatch {
                order,
                expected: order + 1,
                got: coeffs.len(),
            });
        }
        Ok(PowerSeries { coeffs })
    }

    /// Builds a series from integer coefficients; the order is `len - 1`.
    ///
    /// Panics if `values` is empty.
    pub fn from_integers<I, T>(values: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let coeffs: Vec<_> = values
            .into_iter()
            .map(|v| BigRational::from_integer(v.into()))
            .collect();
        assert!(!coeffs.is_empty(), "a series needs at least one coefficient");
        PowerSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![Coefficient::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Coefficient::one(), order)
    }

    pub fn constant(c: Coefficient, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c * x^k`, or zero when `k > order`.
    pub fn monomial(c: Coefficient, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Coefficient] {
        &self.coeffs
    }

    pub fn coefficient(&self, n: usize) -> Result<&Coefficient, SeriesError> {
        self.coeffs.get(n).ok_or(SeriesError::IndexOutOfRange {
            index: n,
            order: self.order(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// True when every coefficient has denominator 1.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// The coefficients as integers, or `None` if any is fractional.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    fn check_order(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(SeriesError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(PowerSeries { coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(PowerSeries { coeffs })
    }

    pub fn neg(&self) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, k: &Coefficient) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        if let (Some(a), Some(b)) = (self.to_integers(), other.to_integers()) {
            return Ok(Self::from_integers(convolve_integers(&a, &b)));
        }
        let n = self.coeffs.len();
        let coeffs = (0..n)
            .map(|k| {
                let mut acc = Coefficient::zero();
                for i in 0..=k {
                    if self.coeffs[i].is_zero() {
                        continue;
                    }
                    acc += &self.coeffs[i] * &other.coeffs[k - i];
                }
                acc
            })
            .collect();
        Ok(PowerSeries { coeffs })
    }

    /// `a(x) -> a(x^2)` at the same order.
    pub fn substitute_square(&self) -> Self {
        let order = self.order();
        let mut out = Self::zero(order);
        for (k, c) in self.coeffs.iter().enumerate().take(order / 2 + 1) {
            out.coeffs[2 * k] = c.clone();
        }
        out
    }

    /// The square root with constant term 1, truncated at the same order.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::SqrtConstantTerm(self.coeffs[0].clone()));
        }
        if let Some(root) = self.to_integers().as_deref().and_then(integer_sqrt) {
            return Ok(Self::from_integers(root));
        }
        let two = Coefficient::from_integer(BigInt::from(2));
        let mut s: Vec<Coefficient> = Vec::with_capacity(self.coeffs.len());
        s.push(Coefficient::one());
        for n in 1..self.coeffs.len() {
            let mut cross = Coefficient::zero();
            for i in 1..n {
                cross += &s[i] * &s[n - i];
            }
            s.push((&self.coeffs[n] - cross) / &two);
        }
        Ok(PowerSeries { coeffs: s })
    }

    /// Multiplies by `x^k`, keeping the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let order = self.order();
        let mut out = Self::zero(order);
        for i in k..=order {
            out.coeffs[i] = self.coeffs[i - k].clone();
        }
        out
    }

    /// Divides by `x^k`; the result has order `order - k`.
    pub fn shift_down(&self, k: usize) -> Result<Self, SeriesError> {
        if k > self.order() {
            return Err(SeriesError::ShiftTooLarge {
                order: self.order(),
                power: k,
            });
        }
        if let Some(index) = self.coeffs[..k].iter().position(|c| !c.is_zero()) {
            return Err(SeriesError::NotDivisible { power: k, index });
        }
        Ok(PowerSeries {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// Drops coefficients above `order`.
    pub fn truncate(&self, order: usize) -> Result<Self, SeriesError> {
        if order > self.order() {
            return Err(SeriesError::IndexOutOfRange {
                index: order,
                order: self.order(),
            });
        }
        Ok(PowerSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    /// Exact value of the truncated polynomial at a rational point.
    pub fn eval(&self, x: &Coefficient) -> Coefficient {
        self.coeffs
            .iter()
            .rev()
            .fold(Coefficient::zero(), |acc, c| acc * x + c)
    }

    /// Ratio of consecutive coefficients as a float.
    pub(crate) fn coefficient_ratio(&self, n: usize) -> Option<f64> {
        let num = self.coeffs.get(n)?;
        let den = self.coeffs.get(n.checked_sub(1)?)?;
        if !num.is_positive() || !den.is_positive() {
            return None;
        }
        (num / den).to_f64()
    }
}

impl fmt::Debug for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PowerSeries[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "; O(x^{})]", self.order() + 1)
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}x^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

/// Square root of an integer series with constant term 1, if every
/// coefficient of the root is an integer.
fn integer_sqrt(a: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut s: Vec<BigInt> = Vec::with_capacity(a.len());
    s.push(BigInt::one());
    for n in 1..a.len() {
        // sum_{i=1}^{n-1} s_i s_{n-i}, folded by symmetry
        let mut cross = BigInt::zero();
        for i in 1..n.div_ceil(2) {
            cross += &s[i] * &s[n - i];
        }
        cross *= 2;
        if n % 2 == 0 && n >= 2 {
            cross += &s[n / 2] * &s[n / 2];
        }
        let twice = &a[n] - cross;
        if twice.bit(0) {
            return None;
        }
        s.push(twice >> 1);
    }
    Some(s)
}

/// Truncated convolution of two equal-length integer sequences.
pub(crate) fn convolve_integers(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    debug_assert_eq!(a.len(), b.len());
    (0..a.len())
        .map(|k| {
            let mut acc = BigInt::zero();
            for i in 0..=k {
                if !a[i].is_zero() && !b[k - i].is_zero() {
                    acc += &a[i] * &b[k - i];
                }
            }
            acc
        })
        .collect()
}
