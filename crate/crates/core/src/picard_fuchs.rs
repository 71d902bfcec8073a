//! Picard-Fuchs operators with a point of maximally unipotent monodromy at
//! `t = 0`: validation, the Frobenius solution basis, the nilpotent monodromy
//! logarithm on that basis, and the canonical coordinate.
//!
//! Operators are written as `sum_i a_i(t) * delta^i` with `delta = t d/dt`
//! and integer polynomial coefficients. MUM at the origin means the indicial
//! polynomial is exactly `rho^r`, i.e. `a_i(0) = 0` for `i < r` and
//! `a_r(0) = 1`.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::series::{
    delta_log, exp_series, invert, mul, rat, reversion, LogSeries, Rational, RationalSeries,
};

/// Integers of magnitude below this are written as JSON numbers.
const JSON_SAFE_INT: u64 = 1 << 53;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PfOperator {
    name: String,
    coefficients: Vec<Vec<BigInt>>,
    n0: Option<BigInt>,
    declared_n: Option<BigInt>,
}

impl PfOperator {
    /// Validates and builds an operator from `a_0 .. a_r`, each listed in
    /// ascending powers of `t`.
    pub fn new(name: impl Into<String>, coefficients: Vec<Vec<BigInt>>) -> Result<Self> {
        if coefficients.len() < 3 {
            return Err(Error::MalformedSpec(format!(
                "need at least a_0, a_1, a_2 (rank >= 2), got {} coefficient polynomials",
                coefficients.len()
            )));
        }
        let coefficients: Vec<Vec<BigInt>> = coefficients
            .into_iter()
            .map(|mut p| {
                while p.last().is_some_and(Zero::is_zero) {
                    p.pop();
                }
                p
            })
            .collect();
        let r = coefficients.len() - 1;
        for (i, a) in coefficients.iter().enumerate() {
            let a0 = a.first().cloned().unwrap_or_default();
            let expected = if i == r {
                BigInt::one()
            } else {
                BigInt::zero()
            };
            if a0 != expected {
                return Err(Error::NotMum(format!(
                    "a_{i}(0) = {a0}, expected {expected} for indicial polynomial rho^{r}"
                )));
            }
        }
        Ok(PfOperator {
            name: name.into(),
            coefficients,
            n0: None,
            declared_n: None,
        })
    }

    pub fn with_n0(mut self, n0: impl Into<BigInt>) -> Self {
        self.n0 = Some(n0.into());
        self
    }

    pub fn with_declared_n(mut self, n: impl Into<BigInt>) -> Self {
        self.declared_n = Some(n.into());
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// `a_i` in ascending powers of `t`, trailing zeros removed.
    pub fn coefficient(&self, i: usize) -> &[BigInt] {
        &self.coefficients[i]
    }

    /// Classical Yukawa constant, when the spec declares one.
    pub fn n0(&self) -> Option<&BigInt> {
        self.n0.as_ref()
    }

    /// Conjectured denominator bound `N`, when the spec declares one.
    pub fn declared_n(&self) -> Option<&BigInt> {
        self.declared_n.as_ref()
    }

    /// Largest `t`-degree among the coefficient polynomials.
    pub fn degree(&self) -> usize {
        self.coefficients
            .iter()
            .map(|a| a.len().saturating_sub(1))
            .max()
            .unwrap_or(0)
    }

    /// `a_i(t)` as a series known below `order`.
    pub fn coefficient_series(&self, i: usize, order: usize) -> RationalSeries {
        RationalSeries::from_bigints(&self.coefficients[i], order)
    }

    /// Coefficient of `t^s` in `a_i`.
    fn coeff_at(&self, i: usize, s: usize) -> Option<&BigInt> {
        self.coefficients[i].get(s).filter(|c| !c.is_zero())
    }
}

fn int_to_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) if v.unsigned_abs() < JSON_SAFE_INT => Value::from(v),
        _ => Value::from(n.to_string()),
    }
}

fn int_from_json(v: &Value, what: &str) -> Result<BigInt> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                if i.unsigned_abs() >= JSON_SAFE_INT {
                    return Err(Error::MalformedSpec(format!(
                        "{what}: integer {i} is too large for a JSON number; write it as a string"
                    )));
                }
                Ok(BigInt::from(i))
            } else {
                Err(Error::MalformedSpec(format!(
                    "{what}: {n} is not an integer"
                )))
            }
        }
        Value::String(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::MalformedSpec(format!("{what}: {s:?} is not an integer"))),
        other => Err(Error::MalformedSpec(format!(
            "{what}: expected integer, got {other}"
        ))),
    }
}

/// Parses and validates an operator spec document.
pub fn load_operator(document: &str) -> Result<PfOperator> {
    let value: Value = serde_json::from_str(document)
        .map_err(|e| Error::MalformedSpec(format!("invalid JSON: {e}")))?;
    operator_from_value(&value)
}

pub fn operator_from_value(value: &Value) -> Result<PfOperator> {
    let obj = value
        .as_object()
        .ok_or_else(|| Error::MalformedSpec("top level must be an object".into()))?;
    let name = obj
        .get("name")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::MalformedSpec("missing string field \"name\"".into()))?;
    let rank = obj
        .get("rank")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::MalformedSpec("missing integer field \"rank\"".into()))?
        as usize;
    let rows = obj
        .get("delta_coefficients")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::MalformedSpec("missing array field \"delta_coefficients\"".into()))?;
    if rows.len() != rank + 1 {
        return Err(Error::MalformedSpec(format!(
            "rank {rank} needs {} coefficient polynomials, got {}",
            rank + 1,
            rows.len()
        )));
    }
    let mut coefficients = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let row = row.as_array().ok_or_else(|| {
            Error::MalformedSpec(format!("delta_coefficients[{i}] must be an array"))
        })?;
        let poly = row
            .iter()
            .enumerate()
            .map(|(s, c)| int_from_json(c, &format!("delta_coefficients[{i}][{s}]")))
            .collect::<Result<Vec<_>>>()?;
        coefficients.push(poly);
    }
    let mut op = PfOperator::new(name, coefficients)?;
    if let Some(v) = obj.get("n0") {
        op.n0 = Some(int_from_json(v, "n0")?);
    }
    if let Some(v) = obj.get("N") {
        let n = int_from_json(v, "N")?;
        if !n.is_positive() {
            return Err(Error::MalformedSpec(format!("N must be positive, got {n}")));
        }
        op.declared_n = Some(n);
    }
    Ok(op)
}

impl Serialize for PfOperator {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<Value>> = self
            .coefficients
            .iter()
            .map(|a| a.iter().map(int_to_json).collect())
            .collect();
        let mut map = serializer.serialize_map(None)?;
        map.serialize_entry("name", &self.name)?;
        map.serialize_entry("rank", &self.rank())?;
        map.serialize_entry("delta_coefficients", &rows)?;
        if let Some(n0) = &self.n0 {
            map.serialize_entry("n0", &int_to_json(n0))?;
        }
        if let Some(n) = &self.declared_n {
            map.serialize_entry("N", &int_to_json(n))?;
        }
        map.end()
    }
}

/// Truncated polynomial in `rho` modulo `rho^r`.
#[derive(Debug, Clone, PartialEq)]
struct Jet(Vec<Rational>);

impl Jet {
    fn zero(r: usize) -> Self {
        Jet(vec![Rational::zero(); r])
    }

    fn mul(&self, other: &Jet) -> Jet {
        let r = self.0.len();
        let mut out = Jet::zero(r);
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().take(r - i).enumerate() {
                if !b.is_zero() {
                    out.0[i + j] += a * b;
                }
            }
        }
        out
    }

    fn add_assign(&mut self, other: &Jet) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += b;
        }
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut c = BigInt::one();
    for i in 0..k {
        c = c * (n - i) / (i + 1);
    }
    c
}

/// `P_s(c + rho)` as a jet, where `P_s(x) = sum_i a_{i,s} x^i`.
fn shifted_indicial(op: &PfOperator, s: usize, c: usize, r: usize) -> Jet {
    let c = BigInt::from(c);
    let mut jet = Jet::zero(r);
    for i in 0..=op.rank() {
        let Some(a) = op.coeff_at(i, s) else { continue };
        // (c + rho)^i = sum_j C(i, j) c^(i-j) rho^j
        for (j, slot) in jet.0.iter_mut().enumerate().take(i.min(r - 1) + 1) {
            let term = a * binomial(i, j) * c.pow((i - j) as u32);
            *slot += Rational::from_integer(term);
        }
    }
    jet
}

/// `(m + rho)^(-r)` mod `rho^r` for `m >= 1`.
fn inverse_power_jet(m: usize, r: usize) -> Jet {
    let m = BigInt::from(m);
    let mut jet = Jet::zero(r);
    for (j, slot) in jet.0.iter_mut().enumerate() {
        let num = binomial(r + j - 1, j);
        let num = if j % 2 == 1 { -num } else { num };
        *slot = Rational::new(num, m.pow((r + j) as u32));
    }
    jet
}

/// Frobenius basis at the MUM point.
///
/// `g[k]` is the `rho^k` component of `sum_n A_n(rho) t^n`, and the solutions
/// are `y_k = sum_{j <= k} g[k - j] * L^j / j!`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionBasis {
    order: usize,
    g: Vec<RationalSeries>,
}

impl SolutionBasis {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn rank(&self) -> usize {
        self.g.len()
    }

    /// Pure power part `g_k`.
    pub fn pure_part(&self, k: usize) -> &RationalSeries {
        &self.g[k]
    }

    /// Holomorphic period `y_0 = g_0`.
    pub fn holomorphic(&self) -> &RationalSeries {
        &self.g[0]
    }

    pub fn solution(&self, k: usize) -> LogSeries {
        let mut factorial = Rational::one();
        let mut parts = Vec::with_capacity(k + 1);
        for j in 0..=k {
            if j > 0 {
                factorial *= rat(j as i64);
            }
            parts.push(self.g[k - j].scale(&factorial.recip()));
        }
        LogSeries::new(parts)
    }

    pub fn solutions(&self) -> Vec<LogSeries> {
        (0..self.rank()).map(|k| self.solution(k)).collect()
    }
}

/// Solves the recursion `A_m (m + rho)^r = -sum_{s>=1} A_{m-s} P_s(m - s + rho)`
/// with `A_0 = 1`, all in the jet ring `Q[rho]/rho^r`.
pub fn frobenius_solutions(op: &PfOperator, order: usize) -> Result<SolutionBasis> {
    if order < 2 {
        return Err(Error::InsufficientOrder {
            required: 2,
            available: order,
        });
    }
    let r = op.rank();
    let deg = op.degree();
    let mut a: Vec<Jet> = Vec::with_capacity(order);
    let mut unit = Jet::zero(r);
    unit.0[0] = Rational::one();
    a.push(unit);
    for m in 1..order {
        let mut rhs = Jet::zero(r);
        for s in 1..=deg.min(m) {
            let p = shifted_indicial(op, s, m - s, r);
            rhs.add_assign(&a[m - s].mul(&p));
        }
        let mut am = rhs.mul(&inverse_power_jet(m, r));
        for c in am.0.iter_mut() {
            *c = -&*c;
        }
        a.push(am);
    }
    let g = (0..r)
        .map(|k| RationalSeries::new(a.iter().map(|jet| jet.0[k].clone()).collect(), order))
        .collect();
    Ok(SolutionBasis { order, g })
}

/// `L(y) = sum_i a_i(t) delta^i y`, known to the order of `y`.
pub fn residual(op: &PfOperator, y: &LogSeries) -> LogSeries {
    let order = y.order();
    let mut current = y.clone();
    let mut acc = y.mul_series(&op.coefficient_series(0, order));
    for i in 1..=op.rank() {
        current = delta_log(&current);
        acc = acc.add(&current.mul_series(&op.coefficient_series(i, order)));
    }
    let parts = acc.parts().iter().map(|p| p.truncate(order)).collect();
    LogSeries::new(parts)
}

/// Matrix of `d/dL` on the Frobenius basis: row `k` holds the coordinates of
/// `d y_k / dL` in `y_0 .. y_{r-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonodromyMatrix {
    entries: Vec<Vec<Rational>>,
}

impl MonodromyMatrix {
    pub fn from_rows(entries: Vec<Vec<Rational>>) -> Self {
        MonodromyMatrix { entries }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    pub fn identity(n: usize) -> Self {
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { rat(1) } else { rat(0) })
                    .collect()
            })
            .collect();
        MonodromyMatrix { entries }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.dim();
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n)
                            .map(|k| &self.entries[i][k] * &other.entries[k][j])
                            .sum()
                    })
                    .collect()
            })
            .collect();
        MonodromyMatrix { entries }
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::identity(self.dim()), |acc, _| acc.mul(self))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Zero::is_zero)
    }

    /// Rank by fraction-exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.entries.clone();
        let rows = m.len();
        let cols = m.first().map_or(0, Vec::len);
        let mut rank = 0;
        for col in 0..cols {
            let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, pivot);
            let pivot_row = m[rank].clone();
            let inv = pivot_row[col].recip();
            for (r, row) in m.iter_mut().enumerate() {
                if r == rank || row[col].is_zero() {
                    continue;
                }
                let factor = &row[col] * &inv;
                for (x, y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= &factor * y;
                }
            }
            rank += 1;
        }
        rank
    }
}

/// Ranks of the powers of `N` that characterise maximal unipotency.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonodromyRanks {
    pub rank: usize,
    /// `rank(N^(r-1))`, expected 1.
    pub top: usize,
    /// `rank(N^(r-2))`, expected 2.
    pub subtop: usize,
    pub nilpotent: bool,
}

impl MonodromyMatrix {
    pub fn ranks(&self) -> MonodromyRanks {
        let r = self.dim();
        MonodromyRanks {
            rank: r,
            top: self.pow(r - 1).rank(),
            subtop: self.pow(r - 2).rank(),
            nilpotent: self.pow(r).is_zero(),
        }
    }
}

/// Writes a log series in the basis `y_0 .. y_{r-1}` by peeling off the top
/// power of `L`, whose coefficient must be a multiple of `g_0 / d!`.
fn coordinates(basis: &SolutionBasis, target: &LogSeries) -> Option<Vec<Rational>> {
    let r = basis.rank();
    let mut coords = vec![Rational::zero(); r];
    let mut rest = target.clone();
    while !rest.is_zero() {
        let d = rest.log_degree();
        if d >= r {
            return None;
        }
        let factorial: Rational = (1..=d as i64).map(rat).product();
        let c = rest.parts()[d].coeff(0) * factorial;
        if c.is_zero() {
            return None;
        }
        rest = rest.add(&basis.solution(d).scale(&-c.clone()));
        if rest.log_degree() == d && !rest.is_zero() {
            return None;
        }
        coords[d] += c;
    }
    Some(coords)
}

pub fn monodromy_matrix(basis: &SolutionBasis) -> Result<MonodromyMatrix> {
    let rows = basis
        .solutions()
        .iter()
        .enumerate()
        .map(|(k, y)| {
            coordinates(basis, &y.d_dlog()).ok_or_else(|| {
                Error::RankCheckFailed(format!("d y_{k}/dL is not in the span of the basis"))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let n = MonodromyMatrix { entries: rows };
    let ranks = n.ranks();
    if !ranks.nilpotent || ranks.top != 1 || ranks.subtop != 2 {
        return Err(Error::RankCheckFailed(format!(
            "N^{r} = 0: {}, rank N^{} = {}, rank N^{} = {}",
            ranks.nilpotent,
            ranks.rank - 1,
            ranks.top,
            ranks.rank - 2,
            ranks.subtop,
            r = ranks.rank
        )));
    }
    Ok(n)
}

/// Canonical coordinate `q(t)` in the gauge `q'(0) = 1`, with its inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MirrorMap {
    pub q_of_t: RationalSeries,
    pub t_of_q: RationalSeries,
    /// Order of `q` at the MUM point; 1 in this gauge.
    pub monodromy_k: usize,
}

impl MirrorMap {
    /// `q = t` and its inverse, known below `order`.
    pub fn identity(order: usize) -> Self {
        MirrorMap {
            q_of_t: RationalSeries::var(order),
            t_of_q: RationalSeries::var(order),
            monodromy_k: 1,
        }
    }

    pub fn from_q(q_of_t: RationalSeries) -> Result<Self> {
        let t_of_q = reversion(&q_of_t)?;
        Ok(MirrorMap {
            monodromy_k: q_of_t.valuation(),
            q_of_t,
            t_of_q,
        })
    }

    pub fn order(&self) -> usize {
        self.q_of_t.order()
    }
}

/// `q = t * exp(g_1 / g_0)`, from `y_1 = y_0 L + g_1`.
pub fn mirror_map(basis: &SolutionBasis) -> Result<MirrorMap> {
    if basis.rank() < 2 {
        return Err(Error::MalformedSpec("mirror map needs rank >= 2".into()));
    }
    let ratio = mul(basis.pure_part(1), &invert(basis.holomorphic())?);
    let q_of_t = exp_series(&ratio)?.shift(1);
    MirrorMap::from_q(q_of_t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn quintic() -> PfOperator {
        fixtures::fixture("quintic").unwrap()
    }

    /// (5n)! / (n!)^5, independently of the recursion.
    fn quintic_oracle(n: u64) -> BigInt {
        let fact = |k: u64| (1..=k).fold(BigInt::one(), |a, i| a * i);
        fact(5 * n) / fact(n).pow(5)
    }

    #[test]
    fn quintic_spec_document_loads() {
        let doc = r#"{"name": "quintic", "rank": 4, "n0": 5, "N": 30,
            "delta_coefficients": [[0, -120], [0, -1250], [0, -4375], [0, -6250], [1, -3125]]}"#;
        let op = load_operator(doc).unwrap();
        assert_eq!(op, quintic());
        assert_eq!(op.rank(), 4);
        assert_eq!(op.n0(), Some(&BigInt::from(5)));
    }

    #[test]
    fn rejects_non_mum() {
        let doc = r#"{"name": "x", "rank": 2, "delta_coefficients": [[1], [0], [1]]}"#;
        match load_operator(doc) {
            Err(Error::NotMum(msg)) => assert!(msg.contains("a_0(0) = 1"), "{msg}"),
            other => panic!("expected NotMum, got {other:?}"),
        }
        let doc = r#"{"name": "x", "rank": 2, "delta_coefficients": [[0, 1], [0], [2, 1]]}"#;
        match load_operator(doc) {
            Err(Error::NotMum(msg)) => assert!(msg.contains("a_2(0) = 2"), "{msg}"),
            other => panic!("expected NotMum, got {other:?}"),
        }
    }

    #[test]
    fn rejects_malformed_documents() {
        for doc in [
            "not json",
            r#"{"rank": 2, "delta_coefficients": [[0], [0], [1]]}"#,
            r#"{"name": "x", "rank": 3, "delta_coefficients": [[0], [0], [1]]}"#,
            r#"{"name": "x", "rank": 2, "delta_coefficients": [[0], [0.5], [1]]}"#,
            r#"{"name": "x", "rank": 2, "delta_coefficients": [[0], [9007199254740993], [1]]}"#,
            r#"{"name": "x", "rank": 2, "N": 0, "delta_coefficients": [[0], [0], [1]]}"#,
        ] {
            assert!(
                matches!(load_operator(doc), Err(Error::MalformedSpec(_))),
                "accepted {doc}"
            );
        }
    }

    #[test]
    fn big_integers_round_trip_as_strings() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let op = PfOperator::new(
            "big",
            vec![vec![0.into(), big.clone()], vec![0.into()], vec![1.into()]],
        )
        .unwrap();
        let json = serde_json::to_string(&op).unwrap();
        assert!(
            json.contains(r#""123456789012345678901234567890""#),
            "{json}"
        );
        assert_eq!(load_operator(&json).unwrap(), op);
    }

    #[test]
    fn quintic_holomorphic_period() {
        let basis = frobenius_solutions(&quintic(), 12).unwrap();
        for n in 0..12 {
            assert_eq!(
                basis.holomorphic().coeff(n as usize),
                &Rational::from_integer(quintic_oracle(n)),
                "n = {n}"
            );
        }
        assert_eq!(basis.pure_part(1).coeff(1), &rat(770));
    }

    #[test]
    fn residuals_vanish() {
        let op = quintic();
        let basis = frobenius_solutions(&op, 15).unwrap();
        for y in basis.solutions() {
            assert!(residual(&op, &y).is_zero());
        }
        let sum = basis.solution(0).add(&basis.solution(1));
        assert!(residual(&op, &sum).is_zero());
        let t = LogSeries::from_series(RationalSeries::var(15));
        assert!(!residual(&op, &t).is_zero());
    }

    #[test]
    fn quintic_monodromy_is_regular_nilpotent() {
        let basis = frobenius_solutions(&quintic(), 8).unwrap();
        let n = monodromy_matrix(&basis).unwrap();
        for (i, row) in n.entries().iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                let expected = if j + 1 == i { rat(1) } else { rat(0) };
                assert_eq!(x, &expected, "entry ({i}, {j})");
            }
        }
        let ranks = n.ranks();
        assert_eq!((ranks.top, ranks.subtop, ranks.nilpotent), (1, 2, true));
        assert!(!n.pow(3).is_zero());
    }

    #[test]
    fn mirror_map_leading_terms() {
        let basis = frobenius_solutions(&quintic(), 3).unwrap();
        let mm = mirror_map(&basis).unwrap();
        assert_eq!(
            mm.q_of_t.truncate(3),
            RationalSeries::from_ints(&[0, 1, 770], 3)
        );
        assert_eq!(mm.monodromy_k, 1);
    }

    #[test]
    fn trivial_extension_gives_identity_map() {
        // delta^2 has basis 1, L: g_1 = 0.
        let op = PfOperator::new("free", vec![vec![], vec![], vec![1.into()]]).unwrap();
        let basis = frobenius_solutions(&op, 6).unwrap();
        assert!(basis.pure_part(1).is_zero());
        let mm = mirror_map(&basis).unwrap();
        assert_eq!(mm.q_of_t.truncate(6), RationalSeries::var(6));
    }

    #[test]
    fn order_too_small() {
        assert!(matches!(
            frobenius_solutions(&quintic(), 1),
            Err(Error::InsufficientOrder { .. })
        ));
    }
}
