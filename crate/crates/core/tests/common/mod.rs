#![allow(dead_code)]

use mirror_integrality::series::{ratio, Rational, RationalSeries};
use proptest::prelude::*;

pub const PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

pub fn cases() -> ProptestConfig {
    ProptestConfig::with_cases(1000)
}

pub fn rational() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=12).prop_map(|(n, d)| ratio(n, d))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| *r != ratio(0, 1))
}

pub fn series(order: usize) -> impl Strategy<Value = RationalSeries> {
    prop::collection::vec(rational(), order).prop_map(move |c| RationalSeries::new(c, order))
}

pub fn integral_series(order: usize) -> impl Strategy<Value = RationalSeries> {
    prop::collection::vec(-40i64..=40, order)
        .prop_map(move |c| RationalSeries::from_ints(&c, order))
}

/// Random unit with constant term `c0`.
pub fn unit_series(order: usize) -> impl Strategy<Value = RationalSeries> {
    (nonzero_rational(), series(order)).prop_map(move |(c0, s)| {
        let mut c = s.into_coeffs();
        c[0] = c0;
        RationalSeries::new(c, order)
    })
}

/// Random `a t + ...` with `a != 0`.
pub fn valuation_one(order: usize) -> impl Strategy<Value = RationalSeries> {
    (nonzero_rational(), series(order)).prop_map(move |(a, s)| {
        let mut c = s.into_coeffs();
        c[0] = ratio(0, 1);
        c[1] = a;
        RationalSeries::new(c, order)
    })
}

/// Extends `f` with an arbitrary tail, to test that nothing below the
/// claimed order depends on unknown coefficients.
pub fn with_tail(f: &RationalSeries, tail: &[Rational]) -> RationalSeries {
    let mut c = f.coeffs().to_vec();
    c.extend_from_slice(tail);
    let n = c.len();
    RationalSeries::new(c, n)
}
