//! Yukawa coupling of a rank-4 operator, its expression in the canonical
//! coordinate, and the instanton numbers read off its Lambert expansion
//! `Y(q) = n_0 + sum_d n_d d^3 q^d / (1 - q^d)`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::picard_fuchs::{MirrorMap, PfOperator, SolutionBasis};
use crate::series::{compose, exp_series, invert, mul, rat, ratio, Rational, RationalSeries};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YukawaData {
    /// Coupling in the coordinate `t`.
    pub w_t: RationalSeries,
    /// Coupling in the canonical coordinate `q`, for the normalized period.
    pub y_q: RationalSeries,
    pub n0: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstantonSeries {
    /// `n_0 .. n_{D_max}`.
    pub numbers: Vec<Rational>,
    /// Truncation order of the `Y(q)` they were extracted from.
    pub source_order: usize,
}

impl InstantonSeries {
    pub fn max_degree(&self) -> usize {
        self.numbers.len().saturating_sub(1)
    }
}

/// Solves `delta log W = -a_3 / (2 a_4)` with `W(0) = n0`.
pub fn yukawa_t(op: &PfOperator, n0: &Rational, order: usize) -> Result<RationalSeries> {
    if op.rank() != 4 {
        return Err(Error::NotRankFour(op.rank()));
    }
    let a3 = op.coefficient_series(3, order);
    let a4 = op.coefficient_series(4, order);
    let rhs = mul(&a3, &invert(&a4)?).truncate(order).scale(&ratio(-1, 2));
    let integral = rhs.delta_integral().ok_or(Error::NonIntegrableRhs)?;
    Ok(exp_series(&integral)?.scale(n0))
}

/// `Y(q) = [W / y0^2](t(q)) * ((q / t(q)) dt/dq)^3`.
pub fn yukawa_q(
    w_t: &RationalSeries,
    y0: &RationalSeries,
    mm: &MirrorMap,
    order: usize,
) -> Result<RationalSeries> {
    let inv = invert(y0)?;
    let base = mul(w_t, &mul(&inv, &inv)).truncate(order);
    let composed = compose(&base, &mm.t_of_q)?;
    let dt_dq = mm.t_of_q.derivative();
    let t_over_q = mm
        .t_of_q
        .unshift(1)
        .ok_or(Error::CompositionValuation(mm.t_of_q.valuation()))?;
    let factor = mul(&invert(&t_over_q)?, &dt_dq);
    let cube = mul(&mul(&factor, &factor), &factor);
    Ok(mul(&composed, &cube).truncate(order))
}

/// Yukawa data for a rank-4 operator with declared `n0`, at the basis order.
pub fn yukawa(op: &PfOperator, basis: &SolutionBasis, mm: &MirrorMap) -> Result<YukawaData> {
    if op.rank() != 4 {
        return Err(Error::NotRankFour(op.rank()));
    }
    let n0 = op
        .n0()
        .map(|n| Rational::from_integer(n.clone()))
        .ok_or_else(|| Error::MalformedSpec(format!("{}: no n0 declared", op.name())))?;
    let order = basis.order();
    let w_t = yukawa_t(op, &n0, order)?;
    let y_q = yukawa_q(&w_t, basis.holomorphic(), mm, order)?;
    Ok(YukawaData { w_t, y_q, n0 })
}

fn divisors(m: usize) -> impl Iterator<Item = usize> {
    (1..=m).filter(move |d| m.is_multiple_of(*d))
}

fn mobius(mut n: usize) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

fn cube(d: usize) -> Rational {
    let d = d as i64;
    rat(d * d * d)
}

/// `n_0 + sum_{d >= 1} n_d d^3 q^d / (1 - q^d)`, known below `order`.
pub fn lambert_expand(numbers: &[Rational], order: usize) -> RationalSeries {
    let mut coeffs = vec![Rational::zero(); order];
    if order == 0 {
        return RationalSeries::zero(0);
    }
    if let Some(n0) = numbers.first() {
        coeffs[0] = n0.clone();
    }
    for (d, n) in numbers.iter().enumerate().skip(1) {
        if n.is_zero() {
            continue;
        }
        let weight = n * cube(d);
        for m in (d..order).step_by(d) {
            coeffs[m] += &weight;
        }
    }
    RationalSeries::new(coeffs, order)
}

/// Inverts the Lambert expansion: `n_m = m^-3 sum_{d | m} mu(m/d) c_d`.
pub fn instanton_extract(y: &RationalSeries, max_degree: usize) -> Result<InstantonSeries> {
    if y.order() <= max_degree {
        return Err(Error::InsufficientOrder {
            required: max_degree + 1,
            available: y.order(),
        });
    }
    let mut numbers = Vec::with_capacity(max_degree + 1);
    numbers.push(y.coeff(0).clone());
    for m in 1..=max_degree {
        let s: Rational = divisors(m).map(|d| y.coeff(d) * rat(mobius(m / d))).sum();
        numbers.push(s / cube(m));
    }
    Ok(InstantonSeries {
        numbers,
        source_order: y.order(),
    })
}
