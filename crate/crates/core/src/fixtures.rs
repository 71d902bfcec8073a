//! Built-in operators.
//!
//! Besides the quintic, the catalog holds one-parameter hypergeometric
//! operators `delta^r - C t prod_i (delta + a_i)`, expanded with `t` to the
//! left of the `delta` powers and required to have integer coefficients.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::picard_fuchs::PfOperator;
use crate::series::{ratio, Rational};

pub const FIXTURE_NAMES: &[&str] = &["quintic", "sextic", "octic", "dectic", "hyp3-half"];

/// `delta^r - c t prod_i (delta + a_i)` for rational `a_i = num/den`.
pub fn hypergeometric(
    name: &str,
    params: &[(i64, i64)],
    c: impl Into<BigInt>,
) -> Result<PfOperator> {
    let c = Rational::from_integer(c.into());
    let r = params.len();
    // elementary symmetric functions e_0 .. e_r of the a_i
    let mut e = vec![Rational::zero(); r + 1];
    e[0] = Rational::one();
    for &(num, den) in params {
        let a = ratio(num, den);
        for k in (1..=r).rev() {
            let prev = e[k - 1].clone();
            e[k] += prev * &a;
        }
    }
    // coefficient of delta^i in prod (delta + a_j) is e_{r-i}
    let mut coefficients = Vec::with_capacity(r + 1);
    for i in 0..=r {
        let lin = -(&c * &e[r - i]);
        if !lin.is_integer() {
            return Err(Error::MalformedSpec(format!(
                "{name}: coefficient of t*delta^{i} is {lin}, not an integer"
            )));
        }
        let constant = if i == r {
            BigInt::one()
        } else {
            BigInt::zero()
        };
        coefficients.push(vec![constant, lin.to_integer()]);
    }
    PfOperator::new(name, coefficients)
}

pub fn fixture(name: &str) -> Result<PfOperator> {
    let op = match name {
        "quintic" => hypergeometric(name, &[(1, 5), (2, 5), (3, 5), (4, 5)], 3125)?
            .with_n0(5)
            .with_declared_n(30),
        "sextic" => hypergeometric(name, &[(1, 6), (1, 3), (2, 3), (5, 6)], 11664)?
            .with_n0(3)
            .with_declared_n(30),
        "octic" => hypergeometric(name, &[(1, 8), (3, 8), (5, 8), (7, 8)], 65536)?
            .with_n0(2)
            .with_declared_n(30),
        "dectic" => hypergeometric(name, &[(1, 10), (3, 10), (7, 10), (9, 10)], 800_000)?
            .with_n0(1)
            .with_declared_n(30),
        "hyp3-half" => hypergeometric(name, &[(1, 2), (1, 2), (1, 2)], 64)?.with_declared_n(2),
        _ => return Err(Error::UnknownFixture(name.to_string())),
    };
    Ok(op)
}

pub fn catalog() -> Result<Vec<PfOperator>> {
    FIXTURE_NAMES.iter().map(|name| fixture(name)).collect()
}
