use std::fmt;

use super::{add, delta, mul, rat, Rational, RationalSeries};

/// Polynomial in the formal symbol `L = log t` with series coefficients:
/// `parts[j]` multiplies `L^j`.
///
/// Trailing zero parts are dropped, except that at least one part is kept so
/// that the truncation order survives for the zero element.
#[derive(Clone, PartialEq, Eq)]
pub struct LogSeries {
    parts: Vec<RationalSeries>,
}

impl LogSeries {
    pub fn new(parts: Vec<RationalSeries>) -> Self {
        assert!(!parts.is_empty(), "a log series needs at least one part");
        let mut s = LogSeries { parts };
        s.normalize();
        s
    }

    pub fn from_series(f: RationalSeries) -> Self {
        LogSeries::new(vec![f])
    }

    /// The symbol `L` itself, as `0 + 1 * L`.
    pub fn log_t(order: usize) -> Self {
        LogSeries::new(vec![
            RationalSeries::zero(order),
            RationalSeries::one(order),
        ])
    }

    fn normalize(&mut self) {
        while self.parts.len() > 1 && self.parts.last().is_some_and(RationalSeries::is_zero) {
            self.parts.pop();
        }
    }

    pub fn parts(&self) -> &[RationalSeries] {
        &self.parts
    }

    pub fn part(&self, j: usize) -> Option<&RationalSeries> {
        self.parts.get(j)
    }

    /// Exact degree in `L`; 0 for the zero element.
    pub fn log_degree(&self) -> usize {
        self.parts.len() - 1
    }

    pub fn order(&self) -> usize {
        self.parts
            .iter()
            .map(RationalSeries::order)
            .min()
            .unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(RationalSeries::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let n = self.parts.len().max(other.parts.len());
        let zero = RationalSeries::zero(order);
        let parts = (0..n)
            .map(|j| {
                let a = self.parts.get(j).unwrap_or(&zero);
                let b = other.parts.get(j).unwrap_or(&zero);
                add(a, b).truncate(order)
            })
            .collect();
        LogSeries::new(parts)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        LogSeries::new(self.parts.iter().map(|p| p.scale(c)).collect())
    }

    /// Multiplication by an `L`-free series.
    pub fn mul_series(&self, f: &RationalSeries) -> Self {
        LogSeries::new(self.parts.iter().map(|p| mul(p, f)).collect())
    }

    /// Formal partial derivative with respect to `L`.
    pub fn d_dlog(&self) -> Self {
        if self.parts.len() == 1 {
            return LogSeries::from_series(RationalSeries::zero(self.order()));
        }
        LogSeries::new(
            self.parts
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, p)| p.scale(&rat(j as i64)))
                .collect(),
        )
    }
}

/// `t d/dt` on log-extended series, with `delta(L) = 1`:
/// `delta(f_j L^j) = delta(f_j) L^j + j f_j L^(j-1)`.
pub fn delta_log(f: &LogSeries) -> LogSeries {
    let order = f.order();
    let d = f.parts.len();
    let mut parts: Vec<RationalSeries> = f.parts.iter().map(delta).collect();
    for j in 1..d {
        let lowered = f.parts[j].scale(&rat(j as i64));
        parts[j - 1] = add(&parts[j - 1], &lowered);
    }
    LogSeries::new(parts.into_iter().map(|p| p.truncate(order)).collect())
}

impl fmt::Debug for LogSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LogSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, p) in self.parts.iter().enumerate() {
            if p.is_zero() && !(j == 0 && self.parts.len() == 1) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "({p})")?,
                1 => write!(f, "({p})*L")?,
                _ => write!(f, "({p})*L^{j}")?,
            }
        }
        Ok(())
    }
}
