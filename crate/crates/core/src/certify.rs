//! p-adic integrality certificates.
//!
//! * Dwork: `q = t u` with `u(t^p) / u(t)^p in 1 + p t Z_p[[t]]`, witnessed
//!   by `h = (1/p) log(u(t^p) / u(t)^p)`.
//! * KSV: `Y(q) - Y(q^p) = delta^3 psi` with `psi in Z_p[[q]]`, which holds
//!   iff every instanton number is p-integral.
//! * Frobenius gauge: `Y(q) - Y(q^p) = delta m23`, `m23 = -delta m13`,
//!   `delta m14 = 2 m13`, so that `Y(q^p) - Y(q) = (1/2) delta^3 m14`.
//!
//! Verdicts come from exact valuations of rational coefficients. Every
//! certificate can re-check its witness against the defining identity.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::padic::{
    denominator_support, first_negative_valuation, frobenius_substitute, is_prime, primes_up_to,
    reduce_series, valuation_unchecked, Valuation,
};
use crate::picard_fuchs::MirrorMap;
use crate::series::{
    delta, exp_series, format_rational, invert, log_series, mul, rat, Rational, RationalSeries,
};
use crate::yukawa::InstantonSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CertificateKind {
    Dwork,
    Ksv,
    Gauge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn passed(self) -> bool {
        self == Verdict::Pass
    }

    fn from_failure(f: &Option<Failure>) -> Self {
        if f.is_some() {
            Verdict::Fail
        } else {
            Verdict::Pass
        }
    }
}

/// First coefficient outside `Z_p` (or outside `p Z_p` for Dwork's `v`) and
/// its valuation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub index: usize,
    pub valuation: i64,
}

#[derive(Serialize)]
struct Envelope<'a, W: Serialize> {
    kind: CertificateKind,
    prime: u64,
    order: usize,
    verdict: Verdict,
    witness: W,
    failure: &'a Option<Failure>,
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// `sum_{m >= 1} b_m m^-e q^m`.
fn divide_by_index_power(b: &RationalSeries, e: u32) -> RationalSeries {
    let coeffs = b
        .coeffs()
        .iter()
        .enumerate()
        .map(|(m, c)| {
            if m == 0 || c.is_zero() {
                Rational::zero()
            } else {
                c / rat(m as i64).pow(e as i32)
            }
        })
        .collect();
    RationalSeries::new(coeffs, b.order())
}

fn first_non_integral(f: &RationalSeries, p: u64) -> Option<Failure> {
    first_negative_valuation(f, p).map(|(index, valuation)| Failure { index, valuation })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DworkCertificate {
    pub prime: u64,
    pub order: usize,
    /// `h = (1/p) log(u(t^p) / u(t)^p)`.
    pub witness: RationalSeries,
    pub verdict: Verdict,
    pub failure: Option<Failure>,
    /// Unit part `u = q / (q'(0) t)`, kept for re-verification.
    unit: RationalSeries,
}

impl DworkCertificate {
    /// Re-checks `exp(p h) u(t)^p = u(t^p)` exactly.
    pub fn verify_witness(&self) -> bool {
        let p = self.prime;
        let Ok(e) = exp_series(&self.witness.scale(&rat(p as i64))) else {
            return false;
        };
        let lhs = mul(&e, &self.unit.pow(p)).truncate(self.order);
        let rhs = frobenius_substitute(&self.unit, p).truncate(self.order);
        lhs == rhs
    }

    /// Same congruence through residues mod `p^k`: `u(t^p) = u(t)^p mod p`.
    /// Only meaningful for passing certificates.
    pub fn residue_cross_check(&self, k: u32) -> Result<bool> {
        let u = reduce_series(&self.unit, self.prime, k.max(1))?;
        let diff = u.frobenius().sub(&u.pow(self.prime));
        Ok(diff.divide_by_p().is_some())
    }
}

impl Serialize for DworkCertificate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Envelope {
            kind: CertificateKind::Dwork,
            prime: self.prime,
            order: self.order,
            verdict: self.verdict,
            witness: &self.witness,
            failure: &self.failure,
        }
        .serialize(s)
    }
}

/// Dwork certificate for a series `q` of valuation 1. The unit constant
/// `q'(0)` is divided out first; its root-of-unity ambiguity is immaterial.
pub fn dwork_certify_series(q: &RationalSeries, p: u64, order: usize) -> Result<DworkCertificate> {
    check_prime(p)?;
    let u = q
        .unshift(1)
        .ok_or(Error::CompositionValuation(q.valuation()))?;
    if u.order() == 0 || u.coeff(0).is_zero() {
        return Err(Error::ZeroLeadingCoefficient);
    }
    let order = order.min(u.order());
    let u = u.scale(&u.coeff(0).recip()).truncate(order);
    let frob = frobenius_substitute(&u, p).truncate(order);
    let ratio = mul(&frob, &invert(&u.pow(p))?).truncate(order);
    // v = ratio - 1 must lie in p t Z_p[[t]]
    let failure = ratio
        .coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .find_map(|(i, c)| match valuation_unchecked(c, p) {
            Valuation::Finite(val) if val < 1 => Some(Failure {
                index: i,
                valuation: val,
            }),
            _ => None,
        });
    let witness = log_series(&ratio)?.scale(&Rational::new(BigInt::one(), BigInt::from(p)));
    Ok(DworkCertificate {
        prime: p,
        order,
        witness,
        verdict: Verdict::from_failure(&failure),
        failure,
        unit: u,
    })
}

pub fn dwork_certify(mm: &MirrorMap, p: u64, order: usize) -> Result<DworkCertificate> {
    dwork_certify_series(&mm.q_of_t, p, order)
}

/// `b_m`, the coefficients of `Y(q) - Y(q^p)`.
fn frobenius_difference(y: &RationalSeries, p: u64, order: usize) -> RationalSeries {
    let y = y.truncate(order);
    let frob = frobenius_substitute(&y, p).truncate(y.order());
    &y - &frob
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KsvCertificate {
    pub prime: u64,
    pub order: usize,
    /// `psi = sum b_m / m^3 q^m`.
    pub witness: RationalSeries,
    pub verdict: Verdict,
    pub failure: Option<Failure>,
    difference: RationalSeries,
}

impl KsvCertificate {
    /// Re-checks `delta^3 psi = Y(q) - Y(q^p)` exactly.
    pub fn verify_witness(&self) -> bool {
        delta(&delta(&delta(&self.witness))) == self.difference
    }

    /// `Y(q) - Y(q^p)` as used by the certificate.
    pub fn difference(&self) -> &RationalSeries {
        &self.difference
    }
}

impl Serialize for KsvCertificate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Envelope {
            kind: CertificateKind::Ksv,
            prime: self.prime,
            order: self.order,
            verdict: self.verdict,
            witness: &self.witness,
            failure: &self.failure,
        }
        .serialize(s)
    }
}

/// Passes iff `v_p(b_m) >= 3 v_p(m)` for every `1 <= m < order`, i.e. iff
/// the witness `psi` is p-integral. Checks at most `Y.order` coefficients.
pub fn ksv_certify(y: &RationalSeries, p: u64, order: usize) -> Result<KsvCertificate> {
    check_prime(p)?;
    let difference = frobenius_difference(y, p, order);
    let witness = divide_by_index_power(&difference, 3);
    let failure = first_non_integral(&witness, p);
    Ok(KsvCertificate {
        prime: p,
        order: difference.order(),
        witness,
        verdict: Verdict::from_failure(&failure),
        failure,
        difference,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaugeCertificate {
    pub prime: u64,
    pub order: usize,
    pub m13: RationalSeries,
    pub m23: RationalSeries,
    pub m14: RationalSeries,
    pub verdicts: GaugeVerdicts,
    pub verdict: Verdict,
    /// Lowest-index failure across the three witnesses.
    pub failure: Option<Failure>,
    difference: RationalSeries,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GaugeVerdicts {
    pub m13: Verdict,
    pub m23: Verdict,
    pub m14: Verdict,
}

#[derive(Serialize)]
struct GaugeWitness<'a> {
    m13: &'a RationalSeries,
    m23: &'a RationalSeries,
    m14: &'a RationalSeries,
    verdicts: GaugeVerdicts,
}

impl GaugeCertificate {
    /// Re-checks the relation chain exactly:
    /// `delta m23 = b`, `m23 = -delta m13`, `delta m14 = 2 m13` and
    /// `(1/2) delta^3 m14 + b = 0`.
    pub fn verify_relations(&self) -> bool {
        let b = &self.difference;
        let d = |f: &RationalSeries| delta(f);
        let half_d3 = d(&d(&d(&self.m14))).scale(&Rational::new(1.into(), 2.into()));
        d(&self.m23) == *b
            && self.m23 == -&d(&self.m13)
            && d(&self.m14) == self.m13.scale(&rat(2))
            && (&half_d3 + b).is_zero()
    }
}

impl Serialize for GaugeCertificate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Envelope {
            kind: CertificateKind::Gauge,
            prime: self.prime,
            order: self.order,
            verdict: self.verdict,
            witness: GaugeWitness {
                m13: &self.m13,
                m23: &self.m23,
                m14: &self.m14,
                verdicts: self.verdicts,
            },
            failure: &self.failure,
        }
        .serialize(s)
    }
}

/// Integrates the gauge relations with zero constants:
/// `m23 = sum b_m/m q^m`, `m13 = -sum b_m/m^2 q^m`, `m14 = -2 sum b_m/m^3 q^m`.
pub fn gauge_certify(y: &RationalSeries, p: u64, order: usize) -> Result<GaugeCertificate> {
    check_prime(p)?;
    let difference = frobenius_difference(y, p, order);
    let m23 = divide_by_index_power(&difference, 1);
    let m13 = -&divide_by_index_power(&difference, 2);
    let m14 = divide_by_index_power(&difference, 3).scale(&rat(-2));
    let f13 = first_non_integral(&m13, p);
    let f23 = first_non_integral(&m23, p);
    let f14 = first_non_integral(&m14, p);
    let verdicts = GaugeVerdicts {
        m13: Verdict::from_failure(&f13),
        m23: Verdict::from_failure(&f23),
        m14: Verdict::from_failure(&f14),
    };
    let failure = [f13, f23, f14]
        .into_iter()
        .flatten()
        .min_by_key(|f| f.index);
    Ok(GaugeCertificate {
        prime: p,
        order: difference.order(),
        m13,
        m23,
        m14,
        verdicts,
        verdict: Verdict::from_failure(&failure),
        failure,
        difference,
    })
}

/// Which primes to certify.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimeSelection {
    Bound(u64),
    List(Vec<u64>),
}

/// Everything the report needs from a pipeline run.
#[derive(Debug, Clone)]
pub struct ReportInput {
    pub name: String,
    pub rank: usize,
    pub declared_n: Option<BigInt>,
    pub q_of_t: RationalSeries,
    pub y_q: Option<RationalSeries>,
    pub instantons: Option<InstantonSeries>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateSummary {
    pub kind: CertificateKind,
    pub prime: u64,
    pub order: usize,
    pub verdict: Verdict,
    pub failure: Option<Failure>,
    /// The witness satisfies its defining identity exactly.
    pub witness_verified: bool,
}

impl CertificateSummary {
    pub fn passed(&self) -> bool {
        self.verdict.passed() && self.witness_verified
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkippedPrime {
    pub prime: u64,
    pub reason: String,
}

/// An instanton number whose denominator involves a prime outside the
/// declared `N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub degree: usize,
    pub value: String,
    pub primes: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntegralityReport {
    pub operator: String,
    pub order: usize,
    /// Instanton numbers are examined for `1 <= d <= max_degree`.
    pub max_degree: usize,
    pub mirror_map_support: Vec<u64>,
    pub instanton_support: Vec<u64>,
    /// Denominator cofactors without a prime factor below `2^20`.
    pub unfactored_denominators: Vec<String>,
    /// Product of all observed denominator primes.
    pub n_observed: String,
    pub n_declared: Option<String>,
    pub n_violations: Vec<Violation>,
    pub certified_primes: Vec<u64>,
    pub skipped_primes: Vec<SkippedPrime>,
    pub certificates: Vec<CertificateSummary>,
    pub consistent: bool,
    pub notes: Vec<String>,
}

impl IntegralityReport {
    pub fn failures(&self) -> impl Iterator<Item = &CertificateSummary> {
        self.certificates.iter().filter(|c| !c.passed())
    }
}

fn prime_factors(n: &BigInt) -> BTreeSet<u64> {
    let r = Rational::new(BigInt::one(), n.clone());
    denominator_support(std::iter::once(&r)).0
}

/// Every certificate for one prime. KSV and gauge need `Y(q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeCertificates {
    pub prime: u64,
    pub dwork: DworkCertificate,
    pub ksv: Option<KsvCertificate>,
    pub gauge: Option<GaugeCertificate>,
}

impl PrimeCertificates {
    pub fn passed(&self) -> bool {
        self.dwork.verdict.passed()
            && self.ksv.as_ref().is_none_or(|k| k.verdict.passed())
            && self.gauge.as_ref().is_none_or(|g| g.verdict.passed())
    }

    pub fn summaries(&self) -> Vec<CertificateSummary> {
        let d = &self.dwork;
        let mut out = vec![CertificateSummary {
            kind: CertificateKind::Dwork,
            prime: self.prime,
            order: d.order,
            verdict: d.verdict,
            failure: d.failure,
            witness_verified: d.verify_witness(),
        }];
        if let Some(k) = &self.ksv {
            out.push(CertificateSummary {
                kind: CertificateKind::Ksv,
                prime: self.prime,
                order: k.order,
                verdict: k.verdict,
                failure: k.failure,
                witness_verified: k.verify_witness(),
            });
        }
        if let Some(g) = &self.gauge {
            out.push(CertificateSummary {
                kind: CertificateKind::Gauge,
                prime: self.prime,
                order: g.order,
                verdict: g.verdict,
                failure: g.failure,
                witness_verified: g.verify_relations(),
            });
        }
        out
    }
}

fn working_order(input: &ReportInput) -> Result<usize> {
    let order = match &input.y_q {
        Some(y) => y.order(),
        None => input.q_of_t.order(),
    };
    if input.q_of_t.order() < order {
        return Err(Error::OrderMismatch(format!(
            "q(t) known to order {}, Y(q) to order {order}",
            input.q_of_t.order()
        )));
    }
    Ok(order)
}

/// Runs every certificate for each listed prime, in parallel, returned in
/// the order given.
pub fn certify_primes(input: &ReportInput, primes: &[u64]) -> Result<Vec<PrimeCertificates>> {
    let order = working_order(input)?;
    primes
        .par_iter()
        .map(|&p| {
            let dwork = dwork_certify_series(&input.q_of_t, p, input.q_of_t.order())?;
            let (ksv, gauge) = match &input.y_q {
                Some(y) => (
                    Some(ksv_certify(y, p, order)?),
                    Some(gauge_certify(y, p, order)?),
                ),
                None => (None, None),
            };
            Ok(PrimeCertificates {
                prime: p,
                dwork,
                ksv,
                gauge,
            })
        })
        .collect()
}

/// Splits the selected primes into admissible and skipped ones.
///
/// A prime is admissible when it exceeds the rank, does not divide the
/// declared `N`, and does not divide a denominator of `q(t)`.
pub fn select_primes(
    input: &ReportInput,
    primes: &PrimeSelection,
) -> Result<(Vec<u64>, Vec<SkippedPrime>)> {
    let candidates = match primes {
        PrimeSelection::Bound(b) => primes_up_to(*b),
        PrimeSelection::List(list) => {
            for &p in list {
                check_prime(p)?;
            }
            let mut list = list.clone();
            list.sort_unstable();
            list.dedup();
            list
        }
    };
    let declared = input.declared_n.as_ref().map(prime_factors);
    let (q_support, _) = denominator_support(input.q_of_t.coeffs());
    let mut certified = Vec::new();
    let mut skipped = Vec::new();
    for p in candidates {
        let reason = if p as usize <= input.rank {
            Some(format!("p <= rank {}", input.rank))
        } else if declared.as_ref().is_some_and(|s| s.contains(&p)) {
            Some("divides declared N".to_string())
        } else if q_support.contains(&p) {
            Some("divides a denominator of q(t)".to_string())
        } else {
            None
        };
        match reason {
            Some(reason) => skipped.push(SkippedPrime { prime: p, reason }),
            None => certified.push(p),
        }
    }
    Ok((certified, skipped))
}

/// Collects denominator supports, runs every certificate for each admissible
/// prime (see [`select_primes`]; in parallel, merged in prime order), and
/// aggregates a verdict.
///
/// Denominators of the instanton numbers are what is being tested, so they
/// do not exclude primes; any such prime outside `N` shows up as a violation
/// and as a KSV failure.
pub fn n_integrality_report(
    input: &ReportInput,
    primes: &PrimeSelection,
) -> Result<IntegralityReport> {
    let order = working_order(input)?;
    if let (Some(y), Some(n)) = (&input.y_q, &input.instantons) {
        if n.source_order != y.order() {
            return Err(Error::OrderMismatch(format!(
                "instantons extracted at order {}, Y(q) has order {}",
                n.source_order,
                y.order()
            )));
        }
    }

    let (q_support, mut unfactored) = denominator_support(input.q_of_t.coeffs());
    let numbers: &[Rational] = input.instantons.as_ref().map_or(&[], |n| &n.numbers);
    let (n_support, more) = denominator_support(numbers.iter().skip(1));
    unfactored.extend(more);
    unfactored.sort();
    unfactored.dedup();

    let declared = input.declared_n.as_ref().map(prime_factors);
    let n_violations = match &declared {
        Some(allowed) => numbers
            .iter()
            .enumerate()
            .skip(1)
            .filter_map(|(d, n)| {
                let (ps, _) = denominator_support(std::iter::once(n));
                let bad: Vec<u64> = ps.into_iter().filter(|p| !allowed.contains(p)).collect();
                has_foreign_factor(n, allowed).then(|| Violation {
                    degree: d,
                    value: format_rational(n),
                    primes: bad,
                })
            })
            .collect(),
        None => Vec::new(),
    };

    let all_support: BTreeSet<u64> = q_support.union(&n_support).copied().collect();
    let n_observed = all_support.iter().fold(BigUint::one(), |acc, &p| acc * p)
        * unfactored.iter().fold(BigUint::one(), |acc, u| acc * u);

    let (certified, skipped) = select_primes(input, primes)?;
    let certificates: Vec<CertificateSummary> = certify_primes(input, &certified)?
        .iter()
        .flat_map(PrimeCertificates::summaries)
        .collect();

    let consistent = n_violations.is_empty() && certificates.iter().all(CertificateSummary::passed);
    let max_degree = input
        .instantons
        .as_ref()
        .map_or(0, InstantonSeries::max_degree);
    let notes = vec![
        "canonical coordinate fixed in the gauge q'(0) = 1; its order at t = 0 is k = 1, so the \
         monodromy is small by construction and the mu_(p-1) ambiguity of the p-adic coordinate \
         is immaterial"
            .to_string(),
        format!(
            "certificates inspect coefficients below order {order}; instanton numbers are \
             certified only for d < {order}"
        ),
        "gauge witnesses use the +Id branch; the other branch flips their signs without \
         changing verdicts"
            .to_string(),
    ];

    Ok(IntegralityReport {
        operator: input.name.clone(),
        order,
        max_degree,
        mirror_map_support: q_support.into_iter().collect(),
        instanton_support: n_support.into_iter().collect(),
        unfactored_denominators: unfactored.iter().map(ToString::to_string).collect(),
        n_observed: n_observed.to_string(),
        n_declared: input.declared_n.as_ref().map(ToString::to_string),
        n_violations,
        certified_primes: certified,
        skipped_primes: skipped,
        certificates,
        consistent,
        notes,
    })
}

/// The denominator has a factor not accounted for by `allowed` primes.
fn has_foreign_factor(n: &Rational, allowed: &BTreeSet<u64>) -> bool {
    let mut d = n.denom().clone();
    for &p in allowed {
        let p = BigInt::from(p);
        while (&d % &p).is_zero() {
            d /= &p;
        }
    }
    !d.is_one()
}
