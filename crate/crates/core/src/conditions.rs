//! Extended-real exponents and self-auditing boundedness reports.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Absolute tolerance used when testing a balance relation.
pub const RELATION_EPS: f64 = 1e-12;

/// A Lebesgue exponent in `[1, ∞]`; `∞` is spelled `inf` in text and JSON.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Exponent(f64);

impl Exponent {
    pub const ONE: Exponent = Exponent(1.0);
    pub const INF: Exponent = Exponent(f64::INFINITY);

    pub fn new(p: f64) -> Result<Self> {
        if p.is_nan() || p < 1.0 {
            return Err(Error::domain(format!("exponent must lie in [1, inf], got {p}")));
        }
        Ok(Exponent(p))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_inf(self) -> bool {
        self.0 == f64::INFINITY
    }

    pub fn is_finite(self) -> bool {
        self.0.is_finite()
    }

    /// `1/p`, with `1/∞ = 0`.
    pub fn recip(self) -> f64 {
        if self.is_inf() {
            0.0
        } else {
            1.0 / self.0
        }
    }

    /// The conjugate exponent `p' = p/(p-1)`, with `1' = ∞` and `∞' = 1`.
    pub fn conjugate(self) -> Exponent {
        if self.is_inf() {
            Exponent::ONE
        } else if self.0 == 1.0 {
            Exponent::INF
        } else {
            Exponent(self.0 / (self.0 - 1.0))
        }
    }

    /// `1/p'` computed without forming `p'`.
    pub fn conjugate_recip(self) -> f64 {
        1.0 - self.recip()
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_inf() {
            f.write_str("inf")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl FromStr for Exponent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t == "∞" {
            return Ok(Exponent::INF);
        }
        let v: f64 = t
            .parse()
            .map_err(|_| Error::domain(format!("cannot read exponent '{s}'")))?;
        Exponent::new(v)
    }
}

/// Parse a real that may be written `inf`.
pub fn parse_extended(s: &str) -> Result<f64> {
    let t = s.trim();
    match t {
        "inf" | "+inf" | "∞" => Ok(f64::INFINITY),
        "-inf" => Ok(f64::NEG_INFINITY),
        _ => t
            .parse()
            .map_err(|_| Error::domain(format!("cannot read number '{s}'"))),
    }
}

impl Serialize for Exponent {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.is_inf() {
            s.serialize_str("inf")
        } else {
            s.serialize_f64(self.0)
        }
    }
}

impl<'de> Deserialize<'de> for Exponent {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Text(String),
        }
        let p = match Raw::deserialize(d)? {
            Raw::Num(v) => Exponent::new(v),
            Raw::Text(t) => t.parse(),
        };
        p.map_err(serde::de::Error::custom)
    }
}

/// Serialize an `f64` that may be infinite as `inf`.
pub fn serialize_extended<S: Serializer>(v: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    if *v == f64::INFINITY {
        s.serialize_str("inf")
    } else if *v == f64::NEG_INFINITY {
        s.serialize_str("-inf")
    } else {
        s.serialize_f64(*v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Bounded,
    Unbounded,
}

/// One inequality with both sides evaluated.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Inequality {
    pub expression: String,
    pub lhs: f64,
    pub rhs: f64,
    pub strict: bool,
    pub holds: bool,
}

impl Inequality {
    /// `lhs < rhs`, where "less" means by more than rounding noise.
    pub fn less(expression: impl Into<String>, lhs: f64, rhs: f64) -> Self {
        let margin = RELATION_EPS * lhs.abs().max(rhs.abs()).max(1.0);
        Inequality {
            expression: expression.into(),
            lhs,
            rhs,
            strict: true,
            holds: rhs - lhs > margin,
        }
    }

    /// `lhs <= rhs` up to rounding noise.
    pub fn less_eq(expression: impl Into<String>, lhs: f64, rhs: f64) -> Self {
        let margin = RELATION_EPS * lhs.abs().max(rhs.abs()).max(1.0);
        Inequality {
            expression: expression.into(),
            lhs,
            rhs,
            strict: false,
            holds: lhs <= rhs + margin,
        }
    }
}

/// An equation `lhs = rhs` checked to [`RELATION_EPS`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RelationCheck {
    pub expression: String,
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
    pub epsilon: f64,
    pub holds: bool,
}

impl RelationCheck {
    pub fn new(expression: impl Into<String>, lhs: f64, rhs: f64) -> Self {
        let residual = lhs - rhs;
        RelationCheck {
            expression: expression.into(),
            lhs,
            rhs,
            residual,
            epsilon: RELATION_EPS,
            holds: residual.abs() <= RELATION_EPS,
        }
    }
}

/// Outcome of a boundedness criterion with its full arithmetic.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub operator: String,
    pub regime: String,
    /// The criterion that decided the verdict.
    pub clause: String,
    pub relations: Vec<RelationCheck>,
    pub inequalities: Vec<Inequality>,
    /// Equivalent forms shown for cross-checking; not used for the verdict.
    pub cross_checks: Vec<Inequality>,
    pub verdict: Verdict,
    /// The exact operator norm when a closed form applies.
    pub norm: Option<f64>,
}

impl ConditionReport {
    pub fn new(operator: &str, regime: &str, clause: &str) -> Self {
        ConditionReport {
            operator: operator.into(),
            regime: regime.into(),
            clause: clause.into(),
            relations: Vec::new(),
            inequalities: Vec::new(),
            cross_checks: Vec::new(),
            verdict: Verdict::Unbounded,
            norm: None,
        }
    }

    /// Set the verdict from the recorded relations and inequalities.
    pub fn decide(mut self) -> Self {
        let ok = self.relations.iter().all(|r| r.holds) && self.inequalities.iter().all(|i| i.holds);
        self.verdict = if ok { Verdict::Bounded } else { Verdict::Unbounded };
        self
    }

    pub fn is_bounded(&self) -> bool {
        self.verdict == Verdict::Bounded
    }

    /// First failing condition, for error messages.
    pub fn first_failure(&self) -> Option<String> {
        if let Some(r) = self.relations.iter().find(|r| !r.holds) {
            return Some(format!("{} (residual {:e})", r.expression, r.residual));
        }
        self.inequalities
            .iter()
            .find(|i| !i.holds)
            .map(|i| format!("{} ({} vs {})", i.expression, i.lhs, i.rhs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponent_conventions() {
        let p: Exponent = "inf".parse().unwrap();
        assert!(p.is_inf());
        assert_eq!(p.recip(), 0.0);
        assert_eq!(p.conjugate(), Exponent::ONE);
        assert!(Exponent::ONE.conjugate().is_inf());
        assert_eq!(Exponent::new(2.0).unwrap().conjugate().value(), 2.0);
        assert!(Exponent::new(0.5).is_err());
        assert_eq!(serde_json::to_string(&p).unwrap(), "\"inf\"");
        let back: Exponent = serde_json::from_str("\"inf\"").unwrap();
        assert!(back.is_inf());
        let back: Exponent = serde_json::from_str("1.5").unwrap();
        assert_eq!(back.value(), 1.5);
    }

    #[test]
    fn strict_inequality_rejects_boundary() {
        assert!(!Inequality::less("a < b", 1.0, 1.0).holds);
        assert!(Inequality::less("a < b", 1.0, 1.0 + 1e-9).holds);
        assert!(!Inequality::less("a < b", 2.0, 1.0).holds);
    }
}
