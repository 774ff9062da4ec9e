use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A finite product `prod f_h^e` of Euler products `f_h = (q^h; q^h)_inf`.
///
/// Factors are kept sorted by scale with duplicate scales merged and zero
/// exponents dropped, so structurally equal quotients compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EtaQuotient {
    factors: Vec<(usize, i64)>,
}

impl EtaQuotient {
    pub fn new(factors: impl IntoIterator<Item = (usize, i64)>) -> Result<EtaQuotient> {
        let mut merged: BTreeMap<usize, i64> = BTreeMap::new();
        for (h, e) in factors {
            if h == 0 {
                return Err(Error::argument("eta quotient scales must be positive"));
            }
            *merged.entry(h).or_insert(0) += e;
        }
        Ok(EtaQuotient {
            factors: merged.into_iter().filter(|&(_, e)| e != 0).collect(),
        })
    }

    pub fn one() -> EtaQuotient {
        EtaQuotient::default()
    }

    /// `f_h^e` on its own.
    pub fn single(h: usize, e: i64) -> Result<EtaQuotient> {
        EtaQuotient::new([(h, e)])
    }

    /// `f_2 f_ell / f_1^2`, the generating function of overpartitions with
    /// ell-regular non-overlined parts.
    pub fn rstar(ell: usize) -> Result<EtaQuotient> {
        EtaQuotient::new([(2, 1), (ell, 1), (1, -2)])
    }

    pub fn factors(&self) -> &[(usize, i64)] {
        &self.factors
    }

    pub fn exponent(&self, h: usize) -> i64 {
        self.factors
            .iter()
            .find(|&&(s, _)| s == h)
            .map_or(0, |&(_, e)| e)
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn mul(&self, other: &EtaQuotient) -> EtaQuotient {
        EtaQuotient::new(self.factors.iter().chain(&other.factors).copied())
            .expect("scales already validated")
    }

    pub fn inverse(&self) -> EtaQuotient {
        self.pow(-1)
    }

    pub fn pow(&self, k: i64) -> EtaQuotient {
        EtaQuotient {
            factors: if k == 0 {
                Vec::new()
            } else {
                self.factors.iter().map(|&(h, e)| (h, e * k)).collect()
            },
        }
    }

    /// Substitutes `q -> q^k`, scaling every factor.
    pub fn dilate(&self, k: usize) -> Result<EtaQuotient> {
        if k == 0 {
            return Err(Error::argument("dilation factor must be positive"));
        }
        EtaQuotient::new(self.factors.iter().map(|&(h, e)| (h * k, e)))
    }

    /// Splits into (numerator, denominator), both with positive exponents.
    pub fn split(&self) -> (EtaQuotient, EtaQuotient) {
        let num = self.factors.iter().filter(|f| f.1 > 0).copied().collect();
        let den = self
            .factors
            .iter()
            .filter(|f| f.1 < 0)
            .map(|&(h, e)| (h, -e))
            .collect();
        (EtaQuotient { factors: num }, EtaQuotient { factors: den })
    }
}

impl fmt::Display for EtaQuotient {
    /// Comma-separated `scale:exponent` pairs, e.g. `1:-2,2:1,4:1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (h, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{h}:{e}")?;
        }
        Ok(())
    }
}

impl FromStr for EtaQuotient {
    type Err = Error;

    fn from_str(s: &str) -> Result<EtaQuotient> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(EtaQuotient::one());
        }
        let mut factors = Vec::new();
        for part in s.split(',') {
            let (h, e) = part
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected scale:exponent, got `{part}`")))?;
            let h: usize = h
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad scale `{h}`")))?;
            let e: i64 = e
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent `{e}`")))?;
            factors.push((h, e));
        }
        EtaQuotient::new(factors)
    }
}

impl Serialize for EtaQuotient {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for EtaQuotient {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalises_factors() {
        let q = EtaQuotient::new([(2, 1), (2, 1), (1, -2), (4, 0)]).unwrap();
        assert_eq!(q.factors(), &[(1, -2), (2, 2)]);
        assert_eq!(q.exponent(2), 2);
        assert_eq!(q.exponent(7), 0);
        assert!(EtaQuotient::new([(0, 1)]).is_err());
        assert!(EtaQuotient::new([(3, 2), (3, -2)]).unwrap().is_one());
    }

    #[test]
    fn parse_and_display() {
        let q: EtaQuotient = "2:1,4:1,1:-2".parse().unwrap();
        assert_eq!(q, EtaQuotient::rstar(4).unwrap());
        assert_eq!(q.to_string(), "1:-2,2:1,4:1");
        assert_eq!(q.to_string().parse::<EtaQuotient>().unwrap(), q);
        assert!("".parse::<EtaQuotient>().unwrap().is_one());
        assert!("2".parse::<EtaQuotient>().is_err());
        assert!("x:1".parse::<EtaQuotient>().is_err());
    }

    #[test]
    fn algebra() {
        let a = EtaQuotient::new([(2, 5), (1, -2), (4, -2)]).unwrap();
        assert!(a.mul(&a.inverse()).is_one());
        assert_eq!(a.dilate(2).unwrap().factors(), &[(2, -2), (4, 5), (8, -2)]);
        let (num, den) = a.split();
        assert_eq!(num.factors(), &[(2, 5)]);
        assert_eq!(den.factors(), &[(1, 2), (4, 2)]);
        assert!(a.pow(0).is_one());
    }
}
