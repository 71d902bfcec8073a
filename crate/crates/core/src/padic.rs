//! p-adic valuations of exact rationals, the Frobenius lift `t -> t^p`, and
//! reduction of p-integral series modulo `p^k`.
//!
//! Verdicts elsewhere in the crate are computed from exact valuations; the
//! residue representation here is a cross-check path only.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::series::{Rational, RationalSeries};

/// Precision exponent used when nothing else is requested.
pub const DEFAULT_PRECISION: u32 = 20;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub fn primes_up_to(bound: u64) -> Vec<u64> {
    (2..=bound).filter(|&n| is_prime(n)).collect()
}

/// `v_p` value; `Infinite` only for zero. Orders with every finite value
/// below infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    pub fn is_nonnegative(self) -> bool {
        self >= Valuation::Finite(0)
    }
}

impl std::ops::Add for Valuation {
    type Output = Valuation;
    fn add(self, rhs: Self) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

/// Integers as JSON numbers, infinity as the string `"inf"`.
impl Serialize for Valuation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Valuation::Finite(v) => serializer.serialize_i64(*v),
            Valuation::Infinite => serializer.serialize_str("inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PadicValuation {
    pub prime: u64,
    pub value: Valuation,
}

/// Exponent of `p` in a nonzero integer.
pub(crate) fn int_valuation(n: &BigInt, p: u64) -> i64 {
    debug_assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// Valuation without the primality check, for hot loops that validated `p`
/// once up front.
pub(crate) fn valuation_unchecked(x: &Rational, p: u64) -> Valuation {
    if x.is_zero() {
        return Valuation::Infinite;
    }
    Valuation::Finite(int_valuation(x.numer(), p) - int_valuation(x.denom(), p))
}

pub fn valuation(x: &Rational, p: u64) -> Result<PadicValuation> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(PadicValuation {
        prime: p,
        value: valuation_unchecked(x, p),
    })
}

/// First coefficient with negative `v_p`, if any.
pub fn first_negative_valuation(f: &RationalSeries, p: u64) -> Option<(usize, i64)> {
    f.coeffs().iter().enumerate().find_map(|(i, c)| {
        if c.denom().is_one() {
            return None;
        }
        match valuation_unchecked(c, p) {
            Valuation::Finite(v) if v < 0 => Some((i, v)),
            _ => None,
        }
    })
}

/// `f(t^p)`. Known below `p * (f.order - 1) + 1`.
pub fn frobenius_substitute(f: &RationalSeries, p: u64) -> RationalSeries {
    let p = p as usize;
    if f.order() == 0 {
        return RationalSeries::zero(0);
    }
    let order = p * (f.order() - 1) + 1;
    let mut coeffs = vec![Rational::zero(); order];
    for (i, c) in f.coeffs().iter().enumerate() {
        coeffs[i * p] = c.clone();
    }
    RationalSeries::new(coeffs, order)
}

/// Primes dividing some denominator of the given rationals.
///
/// Denominators are factored by trial division up to `2^20`. A cofactor left
/// over after that is reported in the second component unless it is provably
/// prime (below `2^40`), in which case it joins the prime set.
pub fn denominator_support<'a, I>(values: I) -> (BTreeSet<u64>, Vec<BigUint>)
where
    I: IntoIterator<Item = &'a Rational>,
{
    const TRIAL_LIMIT: u64 = 1 << 20;
    let mut primes = BTreeSet::new();
    let mut unfactored: Vec<BigUint> = Vec::new();
    let mut seen = BTreeSet::new();
    for r in values {
        let d = r.denom().magnitude().clone();
        if d.is_one() || !seen.insert(d.clone()) {
            continue;
        }
        let mut n: BigUint = d;
        for &p in &primes {
            while (&n % BigUint::from(p)).is_zero() {
                n /= p;
            }
        }
        let mut cand = 2u64;
        while !n.is_one() && cand <= TRIAL_LIMIT {
            if BigUint::from(cand) * cand > n {
                break;
            }
            if (&n % cand).is_zero() {
                primes.insert(cand);
                while (&n % cand).is_zero() {
                    n /= cand;
                }
            }
            cand += if cand == 2 { 1 } else { 2 };
        }
        if n.is_one() {
            continue;
        }
        match n.to_u64() {
            Some(v) if v < (1 << 40) => {
                primes.insert(v);
            }
            _ => {
                if !unfactored.contains(&n) {
                    unfactored.push(n);
                }
            }
        }
    }
    unfactored.sort();
    (primes, unfactored)
}

/// Series over `Z/p^k`, obtained by reducing a p-integral rational series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicSeries {
    prime: u64,
    precision: u32,
    modulus: BigInt,
    residues: Vec<BigInt>,
    exact_lift: bool,
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if !e.gcd.is_one() {
        return None;
    }
    Some(e.x.mod_floor(m))
}

/// Reduces every coefficient mod `p^k`. Fails at the first coefficient whose
/// denominator is divisible by `p`.
pub fn reduce_series(f: &RationalSeries, p: u64, k: u32) -> Result<PadicSeries> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if let Some((index, valuation)) = first_negative_valuation(f, p) {
        return Err(Error::NegativeValuation { index, valuation });
    }
    let modulus = BigInt::from(p).pow(k);
    let residues = f
        .coeffs()
        .iter()
        .map(|c| {
            let inv = mod_inverse(c.denom(), &modulus).expect("denominator is a p-adic unit");
            (c.numer() * inv).mod_floor(&modulus)
        })
        .collect();
    Ok(PadicSeries {
        prime: p,
        precision: k,
        modulus,
        residues,
        exact_lift: true,
    })
}

impl PadicSeries {
    pub fn prime(&self) -> u64 {
        self.prime
    }

    /// The exponent `k` of the modulus `p^k`.
    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn residues(&self) -> &[BigInt] {
        &self.residues
    }

    pub fn order(&self) -> usize {
        self.residues.len()
    }

    /// Whether every residue is the reduction of a known rational coefficient
    /// (as opposed to the output of lossy residue arithmetic).
    pub fn is_exact_lift(&self) -> bool {
        self.exact_lift
    }

    pub fn is_zero(&self) -> bool {
        self.residues.iter().all(Zero::is_zero)
    }

    fn common(&self, other: &Self) -> (u32, BigInt) {
        assert_eq!(
            self.prime, other.prime,
            "residue series over different primes"
        );
        let k = self.precision.min(other.precision);
        (k, BigInt::from(self.prime).pow(k))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (k, m) = self.common(other);
        let residues = self
            .residues
            .iter()
            .zip(&other.residues)
            .map(|(a, b)| (a + b).mod_floor(&m))
            .collect();
        PadicSeries {
            prime: self.prime,
            precision: k,
            modulus: m,
            residues,
            exact_lift: false,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (k, m) = self.common(other);
        let residues = self
            .residues
            .iter()
            .zip(&other.residues)
            .map(|(a, b)| (a - b).mod_floor(&m))
            .collect();
        PadicSeries {
            prime: self.prime,
            precision: k,
            modulus: m,
            residues,
            exact_lift: false,
        }
    }

    /// Truncated product; the order is the smaller input order.
    pub fn mul(&self, other: &Self) -> Self {
        let (k, m) = self.common(other);
        let n = self.order().min(other.order());
        let residues = (0..n)
            .map(|i| {
                let s: BigInt = (0..=i)
                    .map(|j| &self.residues[j] * &other.residues[i - j])
                    .sum();
                s.mod_floor(&m)
            })
            .collect();
        PadicSeries {
            prime: self.prime,
            precision: k,
            modulus: m,
            residues,
            exact_lift: false,
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut one = vec![BigInt::zero(); self.order()];
        if let Some(c) = one.first_mut() {
            *c = BigInt::one();
        }
        let mut result = PadicSeries {
            residues: one,
            exact_lift: false,
            ..self.clone()
        };
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// `f(t^p)` truncated to the current order.
    pub fn frobenius(&self) -> Self {
        let p = self.prime as usize;
        let mut residues = vec![BigInt::zero(); self.order()];
        for (i, r) in self.residues.iter().enumerate() {
            if i * p >= residues.len() {
                break;
            }
            residues[i * p] = r.clone();
        }
        PadicSeries {
            residues,
            exact_lift: false,
            ..self.clone()
        }
    }

    /// Exact division by `p`, losing one digit of precision. `None` unless
    /// every residue is divisible by `p`.
    pub fn divide_by_p(&self) -> Option<Self> {
        if self.precision == 0 {
            return None;
        }
        let p = BigInt::from(self.prime);
        if self.residues.iter().any(|r| !(r % &p).is_zero()) {
            return None;
        }
        let k = self.precision - 1;
        let m = p.pow(k);
        Some(PadicSeries {
            prime: self.prime,
            precision: k,
            residues: self
                .residues
                .iter()
                .map(|r| (r / &p).mod_floor(&m))
                .collect(),
            modulus: m,
            exact_lift: false,
        })
    }

    /// Agreement of residues modulo the smaller of the two moduli.
    pub fn congruent(&self, other: &Self) -> bool {
        let (_, m) = self.common(other);
        let n = self.order().min(other.order());
        (0..n).all(|i| {
            (&self.residues[i] - &other.residues[i])
                .mod_floor(&m)
                .is_zero()
        })
    }
}
