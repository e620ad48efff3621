use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Nonnegative rational in lowest terms, or the distinguished infinite value
/// reported for complete graphs.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExactRatio {
    num: u64,
    // zero encodes infinity
    den: u64,
}

impl ExactRatio {
    pub const INFINITE: ExactRatio = ExactRatio { num: 1, den: 0 };

    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidParameter("ratio with zero denominator".into()));
        }
        let g = num.gcd(&den);
        Ok(ExactRatio {
            num: num / g,
            den: den / g,
        })
    }

    pub fn integer(k: u64) -> Self {
        ExactRatio { num: k, den: 1 }
    }

    pub fn is_infinite(&self) -> bool {
        self.den == 0
    }

    pub fn numer(&self) -> u64 {
        self.num
    }

    /// Denominator, `None` for the infinite value.
    pub fn denom(&self) -> Option<u64> {
        (self.den != 0).then_some(self.den)
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_infinite() {
            f64::INFINITY
        } else {
            self.num as f64 / self.den as f64
        }
    }
}

impl Ord for ExactRatio {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => {
                let lhs = self.num as u128 * other.den as u128;
                let rhs = other.num as u128 * self.den as u128;
                lhs.cmp(&rhs)
            }
        }
    }
}

impl PartialOrd for ExactRatio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExactRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.den {
            0 => f.write_str("inf"),
            1 => write!(f, "{}", self.num),
            d => write!(f, "{}/{}", self.num, d),
        }
    }
}

impl fmt::Debug for ExactRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ExactRatio {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "inf" {
            return Ok(ExactRatio::INFINITE);
        }
        let bad = || Error::InvalidParameter(format!("cannot parse ratio '{s}'"));
        match s.split_once('/') {
            Some((p, q)) => {
                let p = p.trim().parse().map_err(|_| bad())?;
                let q = q.trim().parse().map_err(|_| bad())?;
                ExactRatio::new(p, q)
            }
            None => Ok(ExactRatio::integer(s.parse().map_err(|_| bad())?)),
        }
    }
}

impl Serialize for ExactRatio {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExactRatio {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
