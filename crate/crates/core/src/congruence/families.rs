//! The theorem families and proof-internal congruences as claim builders.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::legendre::{is_prime, legendre, primes_upto};
use super::{CongruenceClaim, Progression, Rhs};
use crate::error::{Error, Result};
use crate::series::EtaQuotient;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theorem {
    Thm31I,
    Thm31IIa,
    Thm31IIb,
    Thm32I,
    Thm32II,
    Thm33I,
    /// Thm 3.3(i) with offset `(9^alpha - 1)/2`; expected to fail.
    Thm33IHalf,
    Thm33II,
    Thm33III,
    Thm34I,
    Thm34II,
    Thm35I,
    Thm35II,
    Thm36I,
    Thm36II,
    Thm37I,
    Thm37II,
    Thm37III,
    Thm38I,
    Thm38II,
}

impl Theorem {
    pub const ALL: [Theorem; 20] = [
        Theorem::Thm31I,
        Theorem::Thm31IIa,
        Theorem::Thm31IIb,
        Theorem::Thm32I,
        Theorem::Thm32II,
        Theorem::Thm33I,
        Theorem::Thm33IHalf,
        Theorem::Thm33II,
        Theorem::Thm33III,
        Theorem::Thm34I,
        Theorem::Thm34II,
        Theorem::Thm35I,
        Theorem::Thm35II,
        Theorem::Thm36I,
        Theorem::Thm36II,
        Theorem::Thm37I,
        Theorem::Thm37II,
        Theorem::Thm37III,
        Theorem::Thm38I,
        Theorem::Thm38II,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Theorem::Thm31I => "thm3.1(i)",
            Theorem::Thm31IIa => "thm3.1(ii)a",
            Theorem::Thm31IIb => "thm3.1(ii)b",
            Theorem::Thm32I => "thm3.2(i)",
            Theorem::Thm32II => "thm3.2(ii)",
            Theorem::Thm33I => "thm3.3(i)",
            Theorem::Thm33IHalf => "thm3.3(i)/2",
            Theorem::Thm33II => "thm3.3(ii)",
            Theorem::Thm33III => "thm3.3(iii)",
            Theorem::Thm34I => "thm3.4(i)",
            Theorem::Thm34II => "thm3.4(ii)",
            Theorem::Thm35I => "thm3.5(i)",
            Theorem::Thm35II => "thm3.5(ii)",
            Theorem::Thm36I => "thm3.6(i)",
            Theorem::Thm36II => "thm3.6(ii)",
            Theorem::Thm37I => "thm3.7(i)",
            Theorem::Thm37II => "thm3.7(ii)",
            Theorem::Thm37III => "thm3.7(iii)",
            Theorem::Thm38I => "thm3.8(i)",
            Theorem::Thm38II => "thm3.8(ii)",
        }
    }

    /// `thm3.1` for every part of that theorem.
    pub fn group(self) -> &'static str {
        let tag = self.tag();
        &tag[..tag.find('(').expect("tags carry a part")]
    }

    /// Variants that exist only to document a misprint; never part of a group.
    pub fn is_variant(self) -> bool {
        self == Theorem::Thm33IHalf
    }

    /// The parameter that ranges over primes, with its hypothesis.
    fn prime_hypothesis(self) -> Option<(u64, i64, &'static str)> {
        match self {
            Theorem::Thm31IIa | Theorem::Thm31IIb => Some((13, -6, "p >= 13 and (-6/p) = -1")),
            Theorem::Thm34I | Theorem::Thm34II => Some((3, -1, "p >= 3 and (-1/p) = -1")),
            Theorem::Thm37I | Theorem::Thm37II => Some((5, -3, "p >= 5 and (-3/p) = -1")),
            _ => None,
        }
    }

    /// Resolves a family name: an exact tag (`thm3.1(ii)a`), a part
    /// (`thm3.1(ii)`), or a whole theorem (`thm3.1`, `3.1`).
    pub fn parse_group(name: &str) -> Result<Vec<Theorem>> {
        let mut s = name.trim().to_ascii_lowercase().replace(' ', "");
        if !s.starts_with("thm") {
            s = format!("thm{s}");
        }
        if let Some(t) = Theorem::ALL.into_iter().find(|t| t.tag() == s) {
            return Ok(vec![t]);
        }
        let found: Vec<Theorem> = Theorem::ALL
            .into_iter()
            .filter(|t| !t.is_variant())
            .filter(|t| {
                t.group() == s
                    || (t.tag().starts_with(&s)
                        && s.ends_with(')')
                        && t.tag()[s.len()..].chars().all(|c| c.is_ascii_lowercase()))
            })
            .collect();
        if found.is_empty() {
            Err(Error::Parse(format!("unknown theorem family `{name}`")))
        } else {
            Ok(found)
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Theorem> {
        let s = s.trim().to_ascii_lowercase();
        Theorem::ALL
            .into_iter()
            .find(|t| t.tag() == s)
            .ok_or_else(|| Error::Parse(format!("unknown theorem `{s}`")))
    }
}

/// Parameters for [`instantiate`]; unused ones are ignored.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Params {
    pub p: Option<u64>,
    pub alpha: Option<u32>,
    pub ell: Option<u64>,
    pub k: Option<u64>,
    pub modulus: Option<u64>,
}

impl Params {
    pub fn prime(p: u64, alpha: u32) -> Params {
        Params {
            p: Some(p),
            alpha: Some(alpha),
            ..Params::default()
        }
    }
}

fn exact_div(num: u128, den: u128, what: impl Fn() -> String) -> Result<u64> {
    if num % den != 0 {
        return Err(Error::NonIntegralOffset(format!("{} = {num}/{den}", what())));
    }
    u64::try_from(num / den).map_err(|_| Error::argument(format!("{} overflows", what())))
}

fn pow(base: u64, exp: u32) -> Result<u128> {
    (base as u128)
        .checked_pow(exp)
        .ok_or_else(|| Error::argument(format!("{base}^{exp} overflows")))
}

fn narrow(v: u128) -> Result<u64> {
    u64::try_from(v).map_err(|_| Error::argument(format!("{v} does not fit in 64 bits")))
}

struct Builder {
    family: Theorem,
    params: BTreeMap<String, u64>,
    ell: u64,
}

impl Builder {
    fn new(family: Theorem, ell: u64) -> Builder {
        let mut params = BTreeMap::new();
        params.insert("ell".to_string(), ell);
        Builder {
            family,
            params,
            ell,
        }
    }

    fn with(mut self, key: &str, value: u64) -> Builder {
        self.params.insert(key.to_string(), value);
        self
    }

    fn claim(&self, step: u64, offset: u64, modulus: Option<u64>, rhs: Rhs) -> Result<CongruenceClaim> {
        let progression = Progression::new(step, offset)?;
        Ok(CongruenceClaim {
            family: self.family.tag().to_string(),
            params: self.params.clone(),
            ell: self.ell,
            progression,
            modulus,
            description: describe(self.ell, progression, modulus, &rhs),
            rhs,
        })
    }
}

pub(crate) fn describe(ell: u64, progression: Progression, modulus: Option<u64>, rhs: &Rhs) -> String {
    let m = modulus.map_or(String::new(), |m| format!(" (mod {m})"));
    match rhs {
        Rhs::Zero => format!("R*_{ell}({progression}) ≡ 0{m}"),
        Rhs::SelfSeries => format!("R*_{ell}({progression}) ≡ R*_{ell}(n){m}"),
        Rhs::PConvolution => {
            format!("R*_{ell}({progression})/2 ≡ p(n) + sum_(v>=1) p(n - v(v+1)/2){m}")
        }
        Rhs::OverpartitionConv => {
            format!("R*_{ell}(n) + sum_(v>=1) R*_{ell}(n - {ell}v) p(v) = pbar(n)")
        }
        Rhs::D2 => format!("R*_{ell}(n) = D2(n)"),
        _ => {
            let rel = if modulus.is_some() { "≡" } else { "=" };
            format!("sum R*_{ell}({progression}) q^n {rel} {rhs}{m}")
        }
    }
}

fn require<T>(value: Option<T>, name: &'static str) -> Result<T> {
    value.ok_or(Error::MissingParameter(name))
}

fn check_prime(theorem: Theorem, p: u64) -> Result<()> {
    let (min, a, hypothesis) = theorem.prime_hypothesis().expect("prime family");
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p < min || legendre(a, p)? != -1 {
        return Err(Error::Ineligible {
            p,
            hypothesis: hypothesis.to_string(),
        });
    }
    Ok(())
}

/// All primes up to `bound` satisfying the hypothesis of a prime family.
pub fn eligible_primes(theorem: Theorem, bound: u64) -> Result<Vec<u64>> {
    if theorem.prime_hypothesis().is_none() {
        return Err(Error::argument(format!("{theorem} has no prime parameter")));
    }
    Ok(primes_upto(bound)
        .into_iter()
        .filter(|&p| check_prime(theorem, p).is_ok())
        .collect())
}

/// Concrete claims for one theorem part.
pub fn instantiate(theorem: Theorem, params: &Params) -> Result<Vec<CongruenceClaim>> {
    use Theorem::*;
    let alpha = params.alpha.unwrap_or(0);
    match theorem {
        Thm31I => {
            let b = Builder::new(theorem, 4);
            [2, 3]
                .map(|xi| b.claim(4, xi, Some(4), Rhs::Zero))
                .into_iter()
                .collect()
        }
        Thm31IIa | Thm31IIb | Thm34I | Thm34II | Thm37I | Thm37II => {
            let p = require(params.p, "p")?;
            check_prime(theorem, p)?;
            prime_family(theorem, p, alpha)
        }
        Thm32I | Thm32II => {
            let k = require(params.k, "k")?;
            if k == 0 {
                return Err(Error::argument("k must be a positive integer"));
            }
            let b = Builder::new(theorem, 5 * k).with("k", k);
            if theorem == Thm32I {
                [2, 3]
                    .map(|xi| b.claim(5, xi, Some(4), Rhs::Zero))
                    .into_iter()
                    .collect()
            } else {
                Ok(vec![b.claim(5, 1, Some(2), Rhs::Zero)?])
            }
        }
        Thm33I | Thm33IHalf | Thm33II | Thm33III => {
            let b = Builder::new(theorem, 6).with("alpha", alpha as u64);
            let nine = pow(9, alpha)?;
            let what = || format!("offset at alpha = {alpha}");
            let claim = match theorem {
                Thm33I => b.claim(narrow(nine)?, exact_div(nine - 1, 4, what)?, Some(3), Rhs::SelfSeries)?,
                Thm33IHalf => b.claim(narrow(nine)?, exact_div(nine - 1, 2, what)?, Some(3), Rhs::SelfSeries)?,
                Thm33II => b.claim(narrow(9 * nine)?, exact_div(21 * nine - 1, 4, what)?, Some(3), Rhs::Zero)?,
                _ => b.claim(narrow(9 * nine)?, exact_div(33 * nine - 1, 4, what)?, Some(3), Rhs::Zero)?,
            };
            Ok(vec![claim])
        }
        Thm35I => {
            let b = Builder::new(theorem, 8);
            [2, 3]
                .map(|xi| b.claim(4, xi, Some(4), Rhs::Zero))
                .into_iter()
                .collect()
        }
        Thm35II => {
            let b = Builder::new(theorem, 8);
            [1, 2, 3]
                .map(|xi| b.claim(16, 4 * xi + 1, Some(4), Rhs::Zero))
                .into_iter()
                .collect()
        }
        Thm36I => Ok(vec![Builder::new(theorem, 8).claim(4, 3, Some(8), Rhs::Zero)?]),
        Thm36II => {
            let b = Builder::new(theorem, 8);
            [1, 2, 3]
                .map(|xi| b.claim(8, 2 * xi + 1, Some(8), Rhs::Zero))
                .into_iter()
                .collect()
        }
        Thm37III => {
            let moduli = match params.modulus {
                None => vec![4, 2],
                Some(m @ (2 | 4)) => vec![m],
                Some(m) => {
                    return Err(Error::argument(format!(
                        "thm3.7(iii) is checked modulo 4 or 2, not {m}"
                    )))
                }
            };
            moduli
                .into_iter()
                .map(|m| {
                    Builder::new(theorem, 8)
                        .with("modulus", m)
                        .claim(16, 1, Some(m), Rhs::PConvolution)
                })
                .collect()
        }
        Thm38I => {
            let ell = require(params.ell, "ell")?;
            if ell == 0 {
                return Err(Error::argument("ell must be at least 1"));
            }
            Ok(vec![Builder::new(theorem, ell).claim(1, 0, None, Rhs::OverpartitionConv)?])
        }
        Thm38II => Ok(vec![Builder::new(theorem, 2).claim(1, 0, None, Rhs::D2)?]),
    }
}

fn prime_family(theorem: Theorem, p: u64, alpha: u32) -> Result<Vec<CongruenceClaim>> {
    use Theorem::*;
    // (ell, step factor c, offset numerator a, offset denominator d, modulus, rhs of part (i))
    // for progressions c p^(2 alpha) n + (a p^(2 alpha) - 1)/d
    let (ell, c, a, d, m, rhs) = match theorem {
        Thm31IIa | Thm31IIb => (4, 4u128, 7u128, 6u128, 4, Rhs::TwoF1PsiQ2),
        Thm34I | Thm34II => (6, 2, 5, 4, 3, Rhs::TwoPsiPsiQ4),
        _ => (8, 8, 4, 3, 8, Rhs::TwoF1Psi),
    };
    let b = Builder::new(theorem, ell)
        .with("p", p)
        .with("alpha", alpha as u64);
    let what = || format!("offset at p = {p}, alpha = {alpha}");
    let p_2a = pow(p, 2 * alpha)?;
    if matches!(theorem, Thm31IIa | Thm34I | Thm37I) {
        let offset = exact_div(a * p_2a - 1, d, what)?;
        return Ok(vec![b.claim(narrow(c * p_2a)?, offset, Some(m), rhs)?]);
    }
    let p_2a1 = p_2a * p as u128;
    let p_2a2 = p_2a1 * p as u128;
    let base = exact_div(a * p_2a2 - 1, d, what)? as u128;
    (1..p)
        .map(|r| {
            let offset = narrow(c * p_2a1 * r as u128 + base)?;
            Builder::new(theorem, ell)
                .with("p", p)
                .with("alpha", alpha as u64)
                .with("r", r)
                .claim(narrow(c * p_2a2)?, offset, Some(m), Rhs::Zero)
        })
        .collect()
}

/// Congruences that appear inside the proofs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Intermediate {
    Rast41c,
    Rast6b,
    Ras62a,
    Ra8Exact,
    R8,
    Rast8c,
    Ras8c,
    Ras61a,
}

impl Intermediate {
    pub const ALL: [Intermediate; 8] = [
        Intermediate::Rast41c,
        Intermediate::Rast6b,
        Intermediate::Ras62a,
        Intermediate::Ra8Exact,
        Intermediate::R8,
        Intermediate::Rast8c,
        Intermediate::Ras8c,
        Intermediate::Ras61a,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Intermediate::Rast41c => "RAST41C",
            Intermediate::Rast6b => "RAST6B",
            Intermediate::Ras62a => "RAS62A",
            Intermediate::Ra8Exact => "RA8_EXACT",
            Intermediate::R8 => "R8",
            Intermediate::Rast8c => "RAST8C",
            Intermediate::Ras8c => "RAS8C",
            Intermediate::Ras61a => "RAS61A",
        }
    }
}

impl fmt::Display for Intermediate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Intermediate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Intermediate> {
        let s = s.trim().to_ascii_uppercase();
        Intermediate::ALL
            .into_iter()
            .find(|i| i.tag() == s)
            .ok_or_else(|| Error::Parse(format!("unknown intermediate congruence `{s}`")))
    }
}

/// The claims behind one intermediate congruence; `RAS8C` states two
/// right-hand sides and yields one claim for each.
pub fn intermediate_claims(id: Intermediate) -> Vec<CongruenceClaim> {
    let eta = |coeff: i64, factors: &[(usize, i64)]| Rhs::Eta {
        coeff,
        quotient: EtaQuotient::new(factors.iter().copied()).expect("static factors"),
    };
    let claim = |ell: u64, step: u64, offset: u64, modulus: Option<u64>, rhs: Rhs| {
        let progression = Progression { step, offset };
        let mut params = BTreeMap::new();
        params.insert("ell".to_string(), ell);
        CongruenceClaim {
            family: id.tag().to_string(),
            params,
            ell,
            progression,
            modulus,
            description: describe(ell, progression, modulus, &rhs),
            rhs,
        }
    };
    match id {
        Intermediate::Rast41c => vec![claim(4, 4, 1, Some(4), Rhs::TwoF1PsiQ2)],
        Intermediate::Rast6b => vec![claim(6, 2, 1, Some(3), Rhs::TwoPsiPsiQ4)],
        Intermediate::Ras62a => vec![claim(6, 3, 2, Some(3), Rhs::PsiSqQ3)],
        Intermediate::Ra8Exact => {
            vec![claim(8, 2, 1, None, eta(2, &[(2, 2), (8, 2), (1, -4)]))]
        }
        Intermediate::R8 => vec![claim(8, 2, 1, Some(8), eta(2, &[(8, 2)]))],
        Intermediate::Rast8c => vec![claim(8, 4, 1, Some(4), eta(2, &[(4, 2)]))],
        Intermediate::Ras8c => vec![
            claim(8, 16, 1, Some(4), eta(2, &[(1, 2)])),
            claim(8, 16, 1, Some(4), eta(2, &[(2, 2), (1, -2)])),
        ],
        Intermediate::Ras61a => vec![claim(6, 1, 0, Some(3), Rhs::PsiSq)],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn offsets(claims: &[CongruenceClaim]) -> Vec<(u64, u64)> {
        claims
            .iter()
            .map(|c| (c.progression.step, c.progression.offset))
            .collect()
    }

    #[test]
    fn thm31_ii_at_thirteen() {
        let claims = instantiate(Theorem::Thm31IIb, &Params::prime(13, 0)).unwrap();
        assert_eq!(claims.len(), 12);
        // (7 * 13^2 - 1)/6 = 197 by integer arithmetic
        let expected: Vec<(u64, u64)> = (1..=12).map(|r| (676, 52 * r + 197)).collect();
        assert_eq!(offsets(&claims), expected);
        assert!(claims.iter().all(|c| c.modulus == Some(4) && c.rhs == Rhs::Zero));
        assert_eq!(claims[3].params["r"], 4);
    }

    #[test]
    fn named_instances() {
        let c = instantiate(Theorem::Thm33I, &Params { alpha: Some(1), ..Params::default() }).unwrap();
        assert_eq!(offsets(&c), [(9, 2)]);
        assert_eq!(c[0].rhs, Rhs::SelfSeries);
        let c = instantiate(Theorem::Thm33I, &Params { alpha: Some(2), ..Params::default() }).unwrap();
        assert_eq!(offsets(&c), [(81, 20)]);
        let c = instantiate(Theorem::Thm37I, &Params::prime(5, 0)).unwrap();
        assert_eq!(offsets(&c), [(8, 1)]);
        assert_eq!((c[0].modulus, &c[0].rhs), (Some(8), &Rhs::TwoF1Psi));
        let c = instantiate(Theorem::Thm34I, &Params::prime(3, 1)).unwrap();
        assert_eq!(offsets(&c), [(18, 11)]);
        let c = instantiate(Theorem::Thm37II, &Params::prime(5, 0)).unwrap();
        assert_eq!(offsets(&c), [(200, 73), (200, 113), (200, 153), (200, 193)]);
    }

    #[test]
    fn eligibility() {
        assert_eq!(eligible_primes(Theorem::Thm34I, 20).unwrap(), [3, 7, 11, 19]);
        assert_eq!(eligible_primes(Theorem::Thm37I, 7).unwrap(), [5]);
        assert!(eligible_primes(Theorem::Thm31IIa, 12).unwrap().is_empty());
        assert!(eligible_primes(Theorem::Thm35I, 12).is_err());
        assert_eq!(
            instantiate(Theorem::Thm31IIa, &Params::prime(11, 0)),
            Err(Error::Ineligible {
                p: 11,
                hypothesis: "p >= 13 and (-6/p) = -1".into()
            })
        );
        assert_eq!(
            instantiate(Theorem::Thm34I, &Params::prime(5, 0)).unwrap_err().to_string(),
            "prime 5 is not eligible: requires p >= 3 and (-1/p) = -1"
        );
        assert_eq!(instantiate(Theorem::Thm37I, &Params::prime(9, 0)), Err(Error::NotPrime(9)));
        assert_eq!(
            instantiate(Theorem::Thm37I, &Params::default()),
            Err(Error::MissingParameter("p"))
        );
    }

    #[test]
    fn offsets_are_integral_for_small_eligible_primes() {
        for t in [Theorem::Thm31IIa, Theorem::Thm31IIb, Theorem::Thm34I, Theorem::Thm34II, Theorem::Thm37I, Theorem::Thm37II] {
            for p in eligible_primes(t, 13).unwrap() {
                for alpha in 0..=2 {
                    instantiate(t, &Params::prime(p, alpha)).unwrap();
                }
            }
        }
        for alpha in 0..=2 {
            let params = Params { alpha: Some(alpha), ..Params::default() };
            for t in [Theorem::Thm33I, Theorem::Thm33II, Theorem::Thm33III] {
                instantiate(t, &params).unwrap();
            }
        }
    }

    #[test]
    fn vanishing_classes_tile_the_residues() {
        // r = 0 is the part (i) progression at alpha + 1, read mod p * step
        for (t_i, t_ii, p) in [(Theorem::Thm34I, Theorem::Thm34II, 3), (Theorem::Thm37I, Theorem::Thm37II, 5), (Theorem::Thm31IIa, Theorem::Thm31IIb, 13)] {
            let zero = instantiate(t_ii, &Params::prime(p, 0)).unwrap();
            let next = instantiate(t_i, &Params::prime(p, 1)).unwrap();
            let big = zero[0].progression.step;
            let mut classes: Vec<u64> = zero.iter().map(|c| c.progression.offset % big).collect();
            classes.push(next[0].progression.offset % big);
            classes.sort_unstable();
            classes.dedup();
            assert_eq!(classes.len() as u64, p);
            let small = big / p;
            assert!(classes.iter().all(|c| c % small == next[0].progression.offset % small));
            // and every index sits inside the alpha = 0 part (i) progression
            let base = instantiate(t_i, &Params::prime(p, 0)).unwrap()[0].progression;
            assert!(classes.iter().all(|c| c % base.step == base.offset % base.step));
        }
    }

    #[test]
    fn family_names() {
        assert_eq!(Theorem::parse_group("thm3.5").unwrap(), [Theorem::Thm35I, Theorem::Thm35II]);
        assert_eq!(Theorem::parse_group("3.1(ii)").unwrap(), [Theorem::Thm31IIa, Theorem::Thm31IIb]);
        assert_eq!(Theorem::parse_group("thm3.1(i)").unwrap(), [Theorem::Thm31I]);
        assert_eq!(Theorem::parse_group("thm3.3").unwrap().len(), 3);
        assert_eq!(Theorem::parse_group("thm3.3(i)/2").unwrap(), [Theorem::Thm33IHalf]);
        assert!(Theorem::parse_group("thm9").is_err());
        for t in Theorem::ALL {
            assert_eq!(t.tag().parse::<Theorem>().unwrap(), t);
        }
        let n: usize = Theorem::parse_group("thm3.5")
            .unwrap()
            .into_iter()
            .map(|t| instantiate(t, &Params::default()).unwrap().len())
            .sum();
        assert_eq!(n, 5);
    }
}
