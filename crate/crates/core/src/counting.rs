//! Partition counts computed straight from the definitions.
//!
//! Nothing here touches the series engine: each kind is a product of
//! per-part-size factors and the counts come from a knapsack-style DP over
//! part sizes. These tables are the oracles the generating functions are
//! checked against.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::series::EtaQuotient;

/// Largest `n` [`enumerate_small`] will list explicitly.
pub const ENUMERATION_LIMIT: u64 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    /// Ordinary partitions, `p(n)`.
    PlainP,
    /// Overpartitions, `p̄(n)`.
    Overpartition,
    /// Partitions with no part divisible by `ell`.
    LRegular(u64),
    /// Overpartitions whose overlined parts are `ell`-regular.
    OverlinedLRegular(u64),
    /// Overpartitions whose non-overlined parts are `ell`-regular, `R̄*_ell(n)`.
    NonOverlinedLRegular(u64),
    /// Pairs of distinct-part partitions, `D_2(n)`.
    DistinctTwoCopies,
}

/// How often a part size may appear in one of the two flavours.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Rule {
    Never,
    AtMostOnce,
    Unlimited,
}

impl Kind {
    pub fn ell(self) -> Option<u64> {
        match self {
            Kind::LRegular(l) | Kind::OverlinedLRegular(l) | Kind::NonOverlinedLRegular(l) => {
                Some(l)
            }
            _ => None,
        }
    }

    /// Generating function of the kind as an eta quotient. Only used to pair
    /// oracles with series; the counts themselves never go through it.
    pub fn quotient(self) -> EtaQuotient {
        let f = |v: &[(usize, i64)]| EtaQuotient::new(v.iter().copied()).expect("positive scales");
        match self {
            Kind::PlainP => f(&[(1, -1)]),
            Kind::Overpartition => f(&[(2, 1), (1, -2)]),
            Kind::LRegular(l) => f(&[(l as usize, 1), (1, -1)]),
            Kind::OverlinedLRegular(l) => {
                f(&[(2, 1), (l as usize, 1), (1, -2), (2 * l as usize, -1)])
            }
            Kind::NonOverlinedLRegular(l) => f(&[(2, 1), (l as usize, 1), (1, -2)]),
            Kind::DistinctTwoCopies => f(&[(2, 2), (1, -2)]),
        }
    }

    /// Rules for (plain copies, marked copies) of part size `s`. Marked means
    /// overlined, or the second copy for `DistinctTwoCopies`.
    fn rules(self, s: u64) -> (Rule, Rule) {
        let divides = |l: u64| s % l == 0;
        match self {
            Kind::PlainP => (Rule::Unlimited, Rule::Never),
            Kind::Overpartition => (Rule::Unlimited, Rule::AtMostOnce),
            Kind::LRegular(l) => (
                if divides(l) { Rule::Never } else { Rule::Unlimited },
                Rule::Never,
            ),
            Kind::OverlinedLRegular(l) => (
                Rule::Unlimited,
                if divides(l) { Rule::Never } else { Rule::AtMostOnce },
            ),
            Kind::NonOverlinedLRegular(l) => (
                if divides(l) { Rule::Never } else { Rule::Unlimited },
                Rule::AtMostOnce,
            ),
            Kind::DistinctTwoCopies => (Rule::AtMostOnce, Rule::AtMostOnce),
        }
    }

    fn validate(self) -> Result<()> {
        match self.ell() {
            Some(0) => Err(Error::argument("ell must be at least 1")),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::PlainP => f.write_str("PLAIN_P"),
            Kind::Overpartition => f.write_str("OVERPARTITION"),
            Kind::LRegular(l) => write!(f, "L_REGULAR({l})"),
            Kind::OverlinedLRegular(l) => write!(f, "OVERLINED_L_REGULAR({l})"),
            Kind::NonOverlinedLRegular(l) => write!(f, "NONOVERLINED_L_REGULAR({l})"),
            Kind::DistinctTwoCopies => f.write_str("DISTINCT_TWO_COPIES"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountTable {
    #[serde(serialize_with = "kind_string")]
    pub kind: Kind,
    pub upto: u64,
    #[serde(serialize_with = "decimal_vec")]
    pub values: Vec<BigInt>,
}

fn kind_string<S: serde::Serializer>(kind: &Kind, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(kind)
}

fn decimal_vec<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::{Error as _, SerializeSeq};
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        let n: serde_json::Number = x.to_string().parse().map_err(S::Error::custom)?;
        seq.serialize_element(&n)?;
    }
    seq.end()
}

impl CountTable {
    pub fn value(&self, n: u64) -> Option<&BigInt> {
        self.values.get(n as usize)
    }

    /// Value at `n`, zero for negative `n`.
    pub fn at(&self, n: i64) -> BigInt {
        if n < 0 {
            BigInt::zero()
        } else {
            self.values[n as usize].clone()
        }
    }

    /// `n value` lines.
    pub fn to_text(&self) -> String {
        self.values
            .iter()
            .enumerate()
            .map(|(n, v)| format!("{n} {v}\n"))
            .collect()
    }
}

/// Counts for `0..=upto` by dynamic programming over part sizes.
pub fn count(kind: Kind, upto: u64) -> Result<CountTable> {
    kind.validate()?;
    let n = upto as usize;
    let mut v = vec![BigInt::zero(); n + 1];
    v[0] = BigInt::one();
    for s in 1..=n {
        let (plain, marked) = kind.rules(s as u64);
        for rule in [plain, marked] {
            match rule {
                Rule::Never => {}
                Rule::Unlimited => {
                    for i in s..=n {
                        let add = v[i - s].clone();
                        v[i] += add;
                    }
                }
                Rule::AtMostOnce => {
                    for i in (s..=n).rev() {
                        let add = v[i - s].clone();
                        v[i] += add;
                    }
                }
            }
        }
    }
    Ok(CountTable {
        kind,
        upto,
        values: v,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Part {
    pub size: u64,
    pub marked: bool,
}

/// Parts listed largest first, a marked copy before the plain ones.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(pub Vec<Part>);

impl Partition {
    pub fn total(&self) -> u64 {
        self.0.iter().map(|p| p.size).sum()
    }
}

impl fmt::Display for Partition {
    /// `3' + 2 + 1`, with `'` marking an overlined part (or the second copy).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("()");
        }
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}{}", p.size, if p.marked { "'" } else { "" })?;
        }
        Ok(())
    }
}

/// Explicit list of the objects counted by `count(kind, n).values[n]`.
pub fn enumerate_small(kind: Kind, n: u64) -> Result<Vec<Partition>> {
    kind.validate()?;
    if n > ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            n: n as usize,
            limit: ENUMERATION_LIMIT as usize,
        });
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    walk(kind, n, n, &mut current, &mut out);
    Ok(out)
}

fn walk(kind: Kind, remaining: u64, largest: u64, current: &mut Vec<Part>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    if largest == 0 {
        return;
    }
    let s = largest;
    let (plain, marked) = kind.rules(s);
    let cap = |rule: Rule| match rule {
        Rule::Never => 0,
        Rule::AtMostOnce => 1,
        Rule::Unlimited => remaining / s,
    };
    for m in (0..=cap(marked).min(remaining / s)).rev() {
        for k in (0..=cap(plain).min((remaining - m * s) / s)).rev() {
            let used = (m + k) * s;
            let mark = current.len();
            current.extend((0..m).map(|_| Part { size: s, marked: true }));
            current.extend((0..k).map(|_| Part { size: s, marked: false }));
            walk(kind, remaining - used, s - 1, current, out);
            current.truncate(mark);
        }
    }
}
