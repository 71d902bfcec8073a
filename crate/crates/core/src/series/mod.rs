//! Truncated power series over exact rationals.
//!
//! A [`RationalSeries`] stores every coefficient below its truncation order.
//! The order is the number of guaranteed coefficients: everything at index
//! `>= order` is unknown, not zero. Binary operations never emit a coefficient
//! beyond what their inputs determine.

mod log;
mod serial;

pub use self::log::{delta_log, LogSeries};
pub use self::serial::{format_rational, parse_rational, SeriesDocument};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Sum of products, with a fast path for integral factors.
///
/// Most series in the pipeline are integral, and summing integer products
/// avoids a gcd per term.
pub(crate) fn dot<'a, I>(pairs: I) -> Rational
where
    I: IntoIterator<Item = (&'a Rational, &'a Rational)>,
{
    let mut integral = BigInt::zero();
    let mut fractional = Rational::zero();
    let mut any_fraction = false;
    for (a, b) in pairs {
        if a.is_zero() || b.is_zero() {
            continue;
        }
        if a.is_integer() && b.is_integer() {
            integral += a.numer() * b.numer();
        } else {
            fractional += a * b;
            any_fraction = true;
        }
    }
    if any_fraction {
        fractional + Rational::from_integer(integral)
    } else {
        Rational::from_integer(integral)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalSeries {
    coeffs: Vec<Rational>,
}

impl RationalSeries {
    /// Builds a series with the given truncation order, padding with zeros or
    /// dropping coefficients at or beyond `order`.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order, Rational::zero());
        RationalSeries { coeffs }
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect(), order)
    }

    pub fn from_bigints(coeffs: &[BigInt], order: usize) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
            order,
        )
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    /// `c * t^k`, known below `order`.
    pub fn monomial(c: Rational, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k < order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The coordinate `t` itself.
    pub fn var(order: usize) -> Self {
        Self::monomial(Rational::one(), 1, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Index of the first nonzero coefficient, or `order` if none is known.
    pub fn valuation(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(self.coeffs.len())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Coefficient of `t^i`. Panics if `i` is not below the order.
    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Lowers the order to `order` if that is smaller.
    pub fn truncate(&self, order: usize) -> Self {
        let n = order.min(self.order());
        RationalSeries {
            coeffs: self.coeffs[..n].to_vec(),
        }
    }

    /// Agreement on every coefficient both series know.
    pub fn eq_up_to_order(&self, other: &Self) -> bool {
        let n = self.order().min(other.order());
        self.coeffs[..n] == other.coeffs[..n]
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RationalSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        RationalSeries { coeffs }
    }

    /// Division by `t^k`; requires valuation `>= k`.
    pub fn unshift(&self, k: usize) -> Option<Self> {
        if self.valuation() < k {
            return None;
        }
        Some(RationalSeries {
            coeffs: self.coeffs[k.min(self.order())..].to_vec(),
        })
    }

    /// Ordinary derivative `d/dt`.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(m, c)| c * rat(m as i64))
            .collect();
        RationalSeries { coeffs }
    }

    /// Inverse of [`delta`] on series without constant term: divides the
    /// `t^m` coefficient by `m`, with zero integration constant.
    pub fn delta_integral(&self) -> Option<Self> {
        if self.order() > 0 && !self.coeffs[0].is_zero() {
            return None;
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(m, c)| {
                if m == 0 {
                    Rational::zero()
                } else {
                    c / rat(m as i64)
                }
            })
            .collect();
        Some(RationalSeries { coeffs })
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = mul(&result, &base);
            }
            e >>= 1;
            if e > 0 {
                base = mul(&base, &base);
            }
        }
        result
    }
}

impl fmt::Debug for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ if a.is_one() => {}
                _ => write!(f, "{a}*")?,
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.order())
    }
}

pub fn add(a: &RationalSeries, b: &RationalSeries) -> RationalSeries {
    let order = a.order().min(b.order());
    let coeffs = a.coeffs[..order]
        .iter()
        .zip(&b.coeffs[..order])
        .map(|(x, y)| x + y)
        .collect();
    RationalSeries { coeffs }
}

pub fn sub(a: &RationalSeries, b: &RationalSeries) -> RationalSeries {
    let order = a.order().min(b.order());
    let coeffs = a.coeffs[..order]
        .iter()
        .zip(&b.coeffs[..order])
        .map(|(x, y)| x - y)
        .collect();
    RationalSeries { coeffs }
}

/// Cauchy product.
///
/// Precision is relative: `a = t^va * A` with `A` known to `a.order - va`
/// terms, likewise for `b`, so the product is known below
/// `min(a.order + vb, b.order + va)`.
pub fn mul(a: &RationalSeries, b: &RationalSeries) -> RationalSeries {
    let (va, vb) = (a.valuation(), b.valuation());
    let order = (a.order() + vb).min(b.order() + va);
    mul_trunc(a, b, order)
}

/// Cauchy product restricted to indices below `order`. The caller vouches
/// that `order` is within the guaranteed precision of the product.
pub(crate) fn mul_trunc(a: &RationalSeries, b: &RationalSeries, order: usize) -> RationalSeries {
    let (va, vb) = (a.valuation(), b.valuation());
    let mut coeffs = vec![Rational::zero(); order];
    if a.order() == 0 || b.order() == 0 {
        return RationalSeries { coeffs };
    }
    for (n, slot) in coeffs.iter_mut().enumerate().skip(va + vb) {
        let lo = va.max(n.saturating_sub(b.order() - 1));
        let hi = (n - vb).min(a.order().saturating_sub(1));
        if lo > hi {
            continue;
        }
        *slot = dot((lo..=hi).map(|i| (&a.coeffs[i], &b.coeffs[n - i])));
    }
    RationalSeries { coeffs }
}

/// Multiplicative inverse of a series with nonzero constant term.
pub fn invert(a: &RationalSeries) -> Result<RationalSeries> {
    let order = a.order();
    if order == 0 || a.coeffs[0].is_zero() {
        return Err(Error::ZeroLeadingCoefficient);
    }
    let inv0 = a.coeffs[0].recip();
    let mut c: Vec<Rational> = Vec::with_capacity(order);
    c.push(inv0.clone());
    for n in 1..order {
        let s = dot((1..=n).map(|k| (&a.coeffs[k], &c[n - k])));
        c.push(-(s * &inv0));
    }
    Ok(RationalSeries { coeffs: c })
}

/// `outer(inner(t))`. The inner series must vanish at `t = 0`.
///
/// If `inner` has valuation `v`, the unknown tail of `outer` contributes at
/// `t^(v * outer.order)` and beyond, so the result order is
/// `min(v * outer.order, inner.order)`.
pub fn compose(outer: &RationalSeries, inner: &RationalSeries) -> Result<RationalSeries> {
    let v = inner.valuation();
    if v == 0 {
        return Err(Error::CompositionValuation(0));
    }
    let order = v.saturating_mul(outer.order()).min(inner.order());
    let mut result = RationalSeries::zero(order);
    if order == 0 {
        return Ok(result);
    }
    result.coeffs[0] = outer.coeffs[0].clone();
    let inner = inner.truncate(order);
    let mut power = RationalSeries::one(order);
    for k in 1..outer.order() {
        if k * v >= order {
            break;
        }
        power = mul_trunc(&power, &inner, order);
        let c = &outer.coeffs[k];
        if c.is_zero() {
            continue;
        }
        for (slot, p) in result.coeffs.iter_mut().zip(&power.coeffs).skip(k * v) {
            if !p.is_zero() {
                *slot += c * p;
            }
        }
    }
    Ok(result)
}

/// Compositional inverse of a valuation-1 series, by Lagrange inversion:
/// `[t^n] g = (1/n) [z^(n-1)] (z / f(z))^n`.
pub fn reversion(f: &RationalSeries) -> Result<RationalSeries> {
    let v = f.valuation();
    if v != 1 {
        return Err(Error::ReversionValuation(v));
    }
    let order = f.order();
    let h = invert(&f.unshift(1).expect("valuation is 1"))?;
    let len = h.order();
    let mut g = RationalSeries::zero(order);
    let mut power = RationalSeries::one(len);
    for n in 1..order {
        power = mul_trunc(&power, &h, len);
        g.coeffs[n] = &power.coeffs[n - 1] / rat(n as i64);
    }
    Ok(g)
}

/// Formal exponential of a series without constant term.
pub fn exp_series(f: &RationalSeries) -> Result<RationalSeries> {
    let order = f.order();
    if order > 0 && !f.coeffs[0].is_zero() {
        return Err(Error::ExpConstantTerm);
    }
    if order == 0 {
        return Ok(RationalSeries::zero(0));
    }
    // delta(E) = E * delta(f)
    let df = delta(f);
    let mut e: Vec<Rational> = Vec::with_capacity(order);
    e.push(Rational::one());
    for n in 1..order {
        let s = dot((1..=n).map(|k| (&df.coeffs[k], &e[n - k])));
        e.push(s / rat(n as i64));
    }
    Ok(RationalSeries { coeffs: e })
}

/// Formal logarithm of a series with constant term 1.
pub fn log_series(u: &RationalSeries) -> Result<RationalSeries> {
    let order = u.order();
    if order == 0 || !u.coeffs[0].is_one() {
        return Err(Error::LogConstantTerm);
    }
    // delta(L) * u = delta(u)
    let du = delta(u);
    let mut dl: Vec<Rational> = vec![Rational::zero(); order];
    for n in 1..order {
        let s = dot((1..n).map(|k| (&dl[k], &u.coeffs[n - k])));
        dl[n] = &du.coeffs[n] - s;
    }
    let coeffs = dl
        .into_iter()
        .enumerate()
        .map(|(m, c)| if m == 0 { c } else { c / rat(m as i64) })
        .collect();
    Ok(RationalSeries { coeffs })
}

/// The Euler operator `t d/dt`.
pub fn delta(f: &RationalSeries) -> RationalSeries {
    let coeffs = f
        .coeffs
        .iter()
        .enumerate()
        .map(|(m, c)| {
            if m == 0 {
                Rational::zero()
            } else {
                c * rat(m as i64)
            }
        })
        .collect();
    RationalSeries { coeffs }
}

impl Add for &RationalSeries {
    type Output = RationalSeries;
    fn add(self, rhs: Self) -> RationalSeries {
        add(self, rhs)
    }
}

impl Sub for &RationalSeries {
    type Output = RationalSeries;
    fn sub(self, rhs: Self) -> RationalSeries {
        sub(self, rhs)
    }
}

impl Mul for &RationalSeries {
    type Output = RationalSeries;
    fn mul(self, rhs: Self) -> RationalSeries {
        mul(self, rhs)
    }
}

impl Neg for &RationalSeries {
    type Output = RationalSeries;
    fn neg(self) -> RationalSeries {
        RationalSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[i64], order: usize) -> RationalSeries {
        RationalSeries::from_ints(c, order)
    }

    #[test]
    fn add_cancels_and_takes_min_order() {
        let r = add(&s(&[0, 1, 1], 3), &s(&[0, -1], 3));
        assert_eq!(r, s(&[0, 0, 1], 3));
        assert_eq!(r.valuation(), 2);

        let r = add(&s(&[1], 5), &s(&[], 2));
        assert_eq!(r, s(&[1], 2));
        assert_eq!(r.order(), 2);

        assert_eq!(add(&s(&[1, 120], 2), &s(&[1, -120], 2)), s(&[2], 2));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(mul(&s(&[1, 1], 3), &s(&[1, -1], 3)), s(&[1, 0, -1], 3));
        let t2 = mul(&s(&[0, 1], 3), &s(&[0, 1], 3));
        assert_eq!(t2.valuation(), 2);
        assert_eq!(t2.coeff(2), &rat(1));
        let a = s(&[1, 120, 113400], 3);
        assert_eq!(mul(&a, &a), s(&[1, 240, 241200], 3));
    }

    #[test]
    fn mul_precision_is_relative() {
        // t * (1 + O(t^2)) is known to O(t^3)
        let r = mul(&s(&[0, 1], 3), &s(&[1], 2));
        assert_eq!(r.order(), 3);
        assert_eq!(r, s(&[0, 1, 0], 3));
    }

    #[test]
    fn invert_examples() {
        assert_eq!(invert(&s(&[1, -1], 4)).unwrap(), s(&[1, 1, 1, 1], 4));
        assert_eq!(invert(&s(&[1], 6)).unwrap(), s(&[1], 6));
        assert_eq!(
            invert(&s(&[1, -3125], 3)).unwrap(),
            s(&[1, 3125, 9_765_625], 3)
        );
        assert_eq!(invert(&s(&[0, 1], 3)), Err(Error::ZeroLeadingCoefficient));
    }

    #[test]
    fn compose_examples() {
        let geom = s(&[1, 1, 1, 1, 1], 5);
        let t2 = s(&[0, 0, 1], 5);
        assert_eq!(compose(&geom, &t2).unwrap(), s(&[1, 0, 1, 0, 1], 5));

        let f = s(&[3, -1, 4, 1, 5], 5);
        assert_eq!(compose(&f, &RationalSeries::var(5)).unwrap(), f);

        let g = s(&[0, 1, 1], 4);
        assert_eq!(compose(&g, &g).unwrap(), s(&[0, 1, 2, 2], 4));

        assert_eq!(
            compose(&f, &s(&[1, 1], 5)),
            Err(Error::CompositionValuation(0))
        );
    }

    #[test]
    fn reversion_examples() {
        let t = RationalSeries::var(6);
        assert_eq!(reversion(&t).unwrap(), t);
        assert_eq!(reversion(&s(&[0, 1, 1], 3)).unwrap(), s(&[0, 1, -1], 3));
        assert_eq!(reversion(&s(&[0, 1, 770], 3)).unwrap(), s(&[0, 1, -770], 3));
        assert_eq!(reversion(&s(&[1, 1], 3)), Err(Error::ReversionValuation(0)));
        assert_eq!(
            reversion(&s(&[0, 0, 1], 3)),
            Err(Error::ReversionValuation(2))
        );
    }

    #[test]
    fn exp_log_examples() {
        let e = exp_series(&RationalSeries::var(4)).unwrap();
        assert_eq!(
            e,
            RationalSeries::new(vec![rat(1), rat(1), ratio(1, 2), ratio(1, 6)], 4)
        );
        let l = log_series(&s(&[1, 1], 4)).unwrap();
        assert_eq!(
            l,
            RationalSeries::new(vec![rat(0), rat(1), ratio(-1, 2), ratio(1, 3)], 4)
        );
        assert_eq!(
            exp_series(&s(&[0, 770], 3)).unwrap(),
            s(&[1, 770, 296_450], 3)
        );
        assert_eq!(exp_series(&s(&[1], 3)), Err(Error::ExpConstantTerm));
        assert_eq!(log_series(&s(&[2, 1], 3)), Err(Error::LogConstantTerm));
    }

    #[test]
    fn delta_and_integral() {
        assert_eq!(delta(&s(&[0, 1, 0, 1], 4)), s(&[0, 1, 0, 3], 4));
        let f = s(&[0, 2, 6, 9], 4);
        assert_eq!(delta(&f.delta_integral().unwrap()), f);
        assert!(s(&[1], 2).delta_integral().is_none());
    }

    #[test]
    fn display_is_readable() {
        let f = RationalSeries::new(vec![rat(1), rat(-1), ratio(1, 2)], 3);
        assert_eq!(f.to_string(), "1 - t + 1/2*t^2 + O(t^3)");
        assert_eq!(RationalSeries::zero(2).to_string(), "0 + O(t^2)");
    }
}
