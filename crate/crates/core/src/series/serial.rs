//! JSON form of a series: coefficient strings `"num/den"` from the valuation
//! upward, plus explicit `valuation` and `order`. Coefficients are strings
//! because they routinely exceed machine precision.

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Rational, RationalSeries};

/// Always `num/den`, including integers (`5/1`).
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `num/den` or a bare integer.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d == BigInt::from(0) {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesDocument {
    pub valuation: usize,
    pub order: usize,
    pub coefficients: Vec<String>,
}

impl From<&RationalSeries> for SeriesDocument {
    fn from(s: &RationalSeries) -> Self {
        let valuation = s.valuation();
        SeriesDocument {
            valuation,
            order: s.order(),
            coefficients: s.coeffs()[valuation..]
                .iter()
                .map(format_rational)
                .collect(),
        }
    }
}

impl TryFrom<SeriesDocument> for RationalSeries {
    type Error = String;

    fn try_from(doc: SeriesDocument) -> Result<Self, String> {
        if doc.valuation + doc.coefficients.len() > doc.order {
            return Err(format!(
                "{} coefficients from valuation {} exceed order {}",
                doc.coefficients.len(),
                doc.valuation,
                doc.order
            ));
        }
        let mut coeffs = vec![Rational::from_integer(BigInt::from(0)); doc.valuation];
        for c in &doc.coefficients {
            coeffs.push(parse_rational(c).ok_or_else(|| format!("bad coefficient {c:?}"))?);
        }
        let s = RationalSeries::new(coeffs, doc.order);
        if s.valuation() != doc.valuation.min(doc.order) && !s.is_zero() {
            return Err(format!(
                "declared valuation {} is not the leading index",
                doc.valuation
            ));
        }
        Ok(s)
    }
}

impl Serialize for RationalSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SeriesDocument::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RationalSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let doc = SeriesDocument::deserialize(deserializer)?;
        RationalSeries::try_from(doc).map_err(serde::de::Error::custom)
    }
}
