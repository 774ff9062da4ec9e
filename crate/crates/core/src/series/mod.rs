//! Truncated formal power series in `q` with exact integer coefficients.
//!
//! A [`Series`] keeps the coefficients of `q^0 .. q^(N-1)` where `N` is its
//! order. Coefficients are arbitrary-precision integers unless a modulus is
//! attached, in which case they are stored as canonical machine-word residues
//! in `0..m`. Binary operations truncate to the smaller operand order and
//! never invent coefficients past what both operands know.

mod eta;
mod kernel;
mod text;

pub use eta::EtaQuotient;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Coefficient ring of a series: the integers, or the integers mod `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    Exact,
    Mod(u64),
}

impl Ring {
    pub fn modulus(self) -> Option<u64> {
        match self {
            Ring::Exact => None,
            Ring::Mod(m) => Some(m),
        }
    }

    pub fn from_modulus(modulus: Option<u64>) -> Result<Ring> {
        match modulus {
            None => Ok(Ring::Exact),
            Some(0) => Err(Error::argument("modulus must be positive")),
            Some(m) => Ok(Ring::Mod(m)),
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Exact => f.write_str("exact"),
            Ring::Mod(m) => write!(f, "mod {m}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Exact(Vec<BigInt>),
    Residues { modulus: u64, coeffs: Vec<u64> },
}

/// A truncated power series `c_0 + c_1 q + ... + c_{N-1} q^(N-1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Series {
    repr: Repr,
}

/// The first index where two series disagree modulo `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub index: usize,
    pub left: u64,
    pub right: u64,
}

/// Outcome of [`Series::congruent_mod`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Congruence {
    pub holds: bool,
    pub first_mismatch: Option<Mismatch>,
}

fn residue_of(c: &BigInt, m: u64) -> u64 {
    c.mod_floor(&BigInt::from(m))
        .to_u64()
        .expect("canonical residue fits in u64")
}

fn residue_of_i64(c: i64, m: u64) -> u64 {
    (c as i128).rem_euclid(m as i128) as u64
}

fn describe(modulus: Option<u64>) -> String {
    match modulus {
        None => "exact".to_string(),
        Some(m) => format!("mod {m}"),
    }
}

impl Series {
    pub fn zero(order: usize) -> Series {
        Series {
            repr: Repr::Exact(vec![BigInt::zero(); order]),
        }
    }

    pub fn one(order: usize) -> Series {
        Series::monomial(order, 0, 1)
    }

    /// `coeff * q^exponent`, truncated (so zero when `exponent >= order`).
    pub fn monomial(order: usize, exponent: usize, coeff: i64) -> Series {
        Series::from_terms(order, [(exponent, coeff)])
    }

    pub fn zero_in(ring: Ring, order: usize) -> Series {
        match ring {
            Ring::Exact => Series::zero(order),
            Ring::Mod(m) => Series {
                repr: Repr::Residues {
                    modulus: m,
                    coeffs: vec![0; order],
                },
            },
        }
    }

    pub fn one_in(ring: Ring, order: usize) -> Series {
        Series::from_terms_in(ring, order, [(0, 1)])
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Series {
        Series {
            repr: Repr::Exact(coeffs),
        }
    }

    pub fn from_ints(coeffs: &[i64]) -> Series {
        Series::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Builds a residue series; every coefficient must already lie in `0..modulus`.
    pub fn from_residues(modulus: u64, coeffs: Vec<u64>) -> Result<Series> {
        if modulus == 0 {
            return Err(Error::argument("modulus must be positive"));
        }
        if let Some(c) = coeffs.iter().find(|&&c| c >= modulus) {
            return Err(Error::argument(format!(
                "residue {c} is not reduced mod {modulus}"
            )));
        }
        Ok(Series {
            repr: Repr::Residues { modulus, coeffs },
        })
    }

    /// Sums `(exponent, coefficient)` terms; exponents at or beyond `order` are dropped.
    pub fn from_terms(order: usize, terms: impl IntoIterator<Item = (usize, i64)>) -> Series {
        Series::from_terms_in(Ring::Exact, order, terms)
    }

    pub fn from_terms_in(
        ring: Ring,
        order: usize,
        terms: impl IntoIterator<Item = (usize, i64)>,
    ) -> Series {
        match ring {
            Ring::Exact => {
                let mut coeffs = vec![BigInt::zero(); order];
                for (e, c) in terms {
                    if e < order {
                        coeffs[e] += c;
                    }
                }
                Series::from_coeffs(coeffs)
            }
            Ring::Mod(m) => {
                let mut coeffs = vec![0u64; order];
                for (e, c) in terms {
                    if e < order {
                        coeffs[e] = ((coeffs[e] as u128 + residue_of_i64(c, m) as u128)
                            % m as u128) as u64;
                    }
                }
                Series {
                    repr: Repr::Residues { modulus: m, coeffs },
                }
            }
        }
    }

    pub fn order(&self) -> usize {
        match &self.repr {
            Repr::Exact(c) => c.len(),
            Repr::Residues { coeffs, .. } => coeffs.len(),
        }
    }

    pub fn modulus(&self) -> Option<u64> {
        match &self.repr {
            Repr::Exact(_) => None,
            Repr::Residues { modulus, .. } => Some(*modulus),
        }
    }

    pub fn ring(&self) -> Ring {
        match self.modulus() {
            None => Ring::Exact,
            Some(m) => Ring::Mod(m),
        }
    }

    /// Coefficient of `q^index` (a canonical residue when a modulus is attached).
    ///
    /// Panics if `index >= self.order()`.
    pub fn coeff(&self, index: usize) -> BigInt {
        match &self.repr {
            Repr::Exact(c) => c[index].clone(),
            Repr::Residues { coeffs, .. } => BigInt::from(coeffs[index]),
        }
    }

    /// Coefficient of `q^index` reduced into `0..m`. For a residue series `m`
    /// must divide the attached modulus.
    pub fn residue(&self, index: usize, m: u64) -> Result<u64> {
        if m == 0 {
            return Err(Error::argument("modulus must be positive"));
        }
        match &self.repr {
            Repr::Exact(c) => Ok(residue_of(&c[index], m)),
            Repr::Residues { modulus, coeffs } => {
                if modulus % m != 0 {
                    return Err(Error::IncompatibleModulus {
                        left: describe(Some(*modulus)),
                        right: describe(Some(m)),
                    });
                }
                Ok(coeffs[index] % m)
            }
        }
    }

    pub fn coeffs(&self) -> Vec<BigInt> {
        (0..self.order()).map(|i| self.coeff(i)).collect()
    }

    /// Exact coefficients as a slice, or `None` for a residue series.
    pub fn exact_coeffs(&self) -> Option<&[BigInt]> {
        match &self.repr {
            Repr::Exact(c) => Some(c),
            Repr::Residues { .. } => None,
        }
    }

    /// Residues as a slice, or `None` for an exact series.
    pub fn residues(&self) -> Option<&[u64]> {
        match &self.repr {
            Repr::Exact(_) => None,
            Repr::Residues { coeffs, .. } => Some(coeffs),
        }
    }

    /// Nonzero terms as `(exponent, coefficient)` pairs.
    pub fn terms(&self) -> Vec<(usize, BigInt)> {
        match &self.repr {
            Repr::Exact(c) => c
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
            Repr::Residues { coeffs, .. } => coeffs
                .iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(|(i, &v)| (i, BigInt::from(v)))
                .collect(),
        }
    }

    pub fn nonzero_count(&self) -> usize {
        match &self.repr {
            Repr::Exact(c) => c.iter().filter(|v| !v.is_zero()).count(),
            Repr::Residues { coeffs, .. } => coeffs.iter().filter(|&&v| v != 0).count(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.nonzero_count() == 0
    }

    fn check_compatible(&self, other: &Series) -> Result<()> {
        if self.modulus() == other.modulus() {
            Ok(())
        } else {
            Err(Error::IncompatibleModulus {
                left: describe(self.modulus()),
                right: describe(other.modulus()),
            })
        }
    }

    /// Keeps the first `order` coefficients (no-op when already shorter).
    pub fn truncate(&self, order: usize) -> Series {
        let n = order.min(self.order());
        let repr = match &self.repr {
            Repr::Exact(c) => Repr::Exact(c[..n].to_vec()),
            Repr::Residues { modulus, coeffs } => Repr::Residues {
                modulus: *modulus,
                coeffs: coeffs[..n].to_vec(),
            },
        };
        Series { repr }
    }

    /// Moves the series into `ring`: reduces exact coefficients, or re-reduces
    /// residues when the target modulus divides the current one.
    pub fn into_ring(self, ring: Ring) -> Result<Series> {
        match ring {
            Ring::Exact => match self.repr {
                Repr::Exact(_) => Ok(self),
                Repr::Residues { modulus, .. } => Err(Error::IncompatibleModulus {
                    left: describe(Some(modulus)),
                    right: describe(None),
                }),
            },
            Ring::Mod(m) => {
                if self.modulus() == Some(m) {
                    Ok(self)
                } else {
                    self.reduce_mod(m)
                }
            }
        }
    }

    fn zip_with(
        &self,
        other: &Series,
        exact: impl Fn(&BigInt, &BigInt) -> BigInt,
        residue: impl Fn(u64, u64, u64) -> u64,
    ) -> Result<Series> {
        self.check_compatible(other)?;
        let repr = match (&self.repr, &other.repr) {
            (Repr::Exact(a), Repr::Exact(b)) => {
                Repr::Exact(a.iter().zip(b).map(|(x, y)| exact(x, y)).collect())
            }
            (Repr::Residues { modulus, coeffs: a }, Repr::Residues { coeffs: b, .. }) => {
                Repr::Residues {
                    modulus: *modulus,
                    coeffs: a.iter().zip(b).map(|(&x, &y)| residue(x, y, *modulus)).collect(),
                }
            }
            _ => unreachable!("moduli checked above"),
        };
        Ok(Series { repr })
    }

    pub fn add(&self, other: &Series) -> Result<Series> {
        self.zip_with(
            other,
            |x, y| x + y,
            |x, y, m| ((x as u128 + y as u128) % m as u128) as u64,
        )
    }

    pub fn sub(&self, other: &Series) -> Result<Series> {
        self.zip_with(
            other,
            |x, y| x - y,
            |x, y, m| ((x as u128 + (m - y) as u128) % m as u128) as u64,
        )
    }

    pub fn neg(&self) -> Series {
        let repr = match &self.repr {
            Repr::Exact(c) => Repr::Exact(c.iter().map(|v| -v).collect()),
            Repr::Residues { modulus, coeffs } => Repr::Residues {
                modulus: *modulus,
                coeffs: coeffs.iter().map(|&v| (modulus - v) % modulus).collect(),
            },
        };
        Series { repr }
    }

    pub fn scale(&self, k: i64) -> Series {
        let repr = match &self.repr {
            Repr::Exact(c) => Repr::Exact(c.iter().map(|v| v * k).collect()),
            Repr::Residues { modulus, coeffs } => {
                let k = residue_of_i64(k, *modulus);
                Repr::Residues {
                    modulus: *modulus,
                    coeffs: coeffs.iter().map(|&v| kernel::mul_mod(v, k, *modulus)).collect(),
                }
            }
        };
        Series { repr }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Series) -> Result<Series> {
        self.check_compatible(other)?;
        let n = self.order().min(other.order());
        let repr = match (&self.repr, &other.repr) {
            (Repr::Exact(a), Repr::Exact(b)) => Repr::Exact(kernel::mul_exact(a, b, n)),
            (Repr::Residues { modulus, coeffs: a }, Repr::Residues { coeffs: b, .. }) => {
                Repr::Residues {
                    modulus: *modulus,
                    coeffs: kernel::mul_residue(a, b, n, *modulus),
                }
            }
            _ => unreachable!("moduli checked above"),
        };
        Ok(Series { repr })
    }

    fn not_invertible(&self) -> Error {
        Error::NotInvertible {
            constant: if self.order() == 0 {
                "(empty)".to_string()
            } else {
                self.coeff(0).to_string()
            },
            context: match self.modulus() {
                None => String::new(),
                Some(m) => format!(" mod {m}"),
            },
        }
    }

    /// `num / den` by the term-by-term recurrence seeded with the unit
    /// constant term of `den`. Used where materialising `1/den` and then
    /// multiplying would turn a sparse division into a dense product.
    pub(crate) fn div_unit(num: &Series, den: &Series) -> Result<Series> {
        num.check_compatible(den)?;
        let n = num.order().min(den.order());
        if n == 0 {
            return Ok(num.truncate(0));
        }
        let repr = match (&num.repr, &den.repr) {
            (Repr::Exact(a), Repr::Exact(b)) => {
                if !b[0].magnitude().is_one() {
                    return Err(den.not_invertible());
                }
                Repr::Exact(kernel::div_exact(a, b, n))
            }
            (Repr::Residues { modulus, coeffs: a }, Repr::Residues { coeffs: b, .. }) => {
                let inv = kernel::inverse_mod(b[0], *modulus).ok_or_else(|| den.not_invertible())?;
                Repr::Residues {
                    modulus: *modulus,
                    coeffs: kernel::div_residue(a, b, n, *modulus, inv),
                }
            }
            _ => unreachable!("moduli checked above"),
        };
        Ok(Series { repr })
    }

    /// Multiplicative inverse up to the series order. The constant term must
    /// be `+1`/`-1` (exact) or a unit modulo the attached modulus.
    pub fn invert(&self) -> Result<Series> {
        if self.order() == 0 {
            return Err(self.not_invertible());
        }
        Series::div_unit(&Series::one_in(self.ring(), self.order()), self)
    }

    /// `k`-th power by binary exponentiation; negative `k` inverts first.
    pub fn pow(&self, k: i64) -> Result<Series> {
        let base = if k < 0 { self.invert()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut result = Series::one_in(self.ring(), self.order());
        let mut square = base;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&square)?;
            }
            e >>= 1;
            if e > 0 {
                square = square.mul(&square)?;
            }
        }
        Ok(result)
    }

    /// Coefficients at `offset, offset + step, ...`, exactly `count` of them.
    pub fn extract(&self, step: usize, offset: usize, count: usize) -> Result<Series> {
        if step == 0 {
            return Err(Error::argument("progression step must be positive"));
        }
        if count > 0 {
            let need = step * (count - 1) + offset + 1;
            if need > self.order() {
                return Err(Error::InsufficientOrder {
                    have: self.order(),
                    need,
                });
            }
        }
        let idx = (0..count).map(|n| step * n + offset);
        let repr = match &self.repr {
            Repr::Exact(c) => Repr::Exact(idx.map(|i| c[i].clone()).collect()),
            Repr::Residues { modulus, coeffs } => Repr::Residues {
                modulus: *modulus,
                coeffs: idx.map(|i| coeffs[i]).collect(),
            },
        };
        Ok(Series { repr })
    }

    /// Sum of the terms `a_(step*n + residue) q^n` over every index the series knows.
    pub fn dissect(&self, step: usize, residue: usize) -> Result<Series> {
        if step == 0 {
            return Err(Error::argument("dissection step must be positive"));
        }
        if residue >= step {
            return Err(Error::argument(format!(
                "residue {residue} is outside 0..{step}"
            )));
        }
        let count = self.order().saturating_sub(residue).div_ceil(step);
        self.extract(step, residue, count)
    }

    /// Reduces every coefficient into `0..m` and attaches the modulus.
    pub fn reduce_mod(&self, m: u64) -> Result<Series> {
        if m == 0 {
            return Err(Error::argument("modulus must be positive"));
        }
        let coeffs = match &self.repr {
            Repr::Exact(c) => c.iter().map(|v| residue_of(v, m)).collect(),
            Repr::Residues { modulus, coeffs } => {
                if modulus % m != 0 {
                    return Err(Error::IncompatibleModulus {
                        left: describe(Some(*modulus)),
                        right: describe(Some(m)),
                    });
                }
                coeffs.iter().map(|&v| v % m).collect()
            }
        };
        Ok(Series {
            repr: Repr::Residues { modulus: m, coeffs },
        })
    }

    /// Every index below `upto` where the two series differ modulo `m`.
    pub fn mismatches_mod(&self, other: &Series, m: u64, upto: usize) -> Result<Vec<Mismatch>> {
        if m == 0 {
            return Err(Error::argument("modulus must be positive"));
        }
        for s in [self, other] {
            if s.order() < upto {
                return Err(Error::InsufficientOrder {
                    have: s.order(),
                    need: upto,
                });
            }
        }
        let mut out = Vec::new();
        for i in 0..upto {
            let left = self.residue(i, m)?;
            let right = other.residue(i, m)?;
            if left != right {
                out.push(Mismatch {
                    index: i,
                    left,
                    right,
                });
            }
        }
        Ok(out)
    }

    /// Whether coefficients `0..upto` agree modulo `m`. Refuses (rather than
    /// truncating) when either series is shorter than `upto`.
    pub fn congruent_mod(&self, other: &Series, m: u64, upto: usize) -> Result<Congruence> {
        let first = self.mismatches_mod(other, m, upto)?.into_iter().next();
        Ok(Congruence {
            holds: first.is_none(),
            first_mismatch: first,
        })
    }

    /// Every index below `upto` where two exact series differ, with both values.
    pub fn differences(&self, other: &Series, upto: usize) -> Result<Vec<(usize, BigInt, BigInt)>> {
        self.check_compatible(other)?;
        for s in [self, other] {
            if s.order() < upto {
                return Err(Error::InsufficientOrder {
                    have: s.order(),
                    need: upto,
                });
            }
        }
        Ok((0..upto)
            .filter_map(|i| {
                let (a, b) = (self.coeff(i), other.coeff(i));
                (a != b).then_some((i, a, b))
            })
            .collect())
    }

    /// Multiplies by `q^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Series {
        let n = self.order();
        let repr = match &self.repr {
            Repr::Exact(c) => {
                let mut out = vec![BigInt::zero(); n];
                for (i, v) in c.iter().enumerate().take(n.saturating_sub(k)) {
                    out[i + k] = v.clone();
                }
                Repr::Exact(out)
            }
            Repr::Residues { modulus, coeffs } => {
                let mut out = vec![0u64; n];
                for (i, &v) in coeffs.iter().enumerate().take(n.saturating_sub(k)) {
                    out[i + k] = v;
                }
                Repr::Residues {
                    modulus: *modulus,
                    coeffs: out,
                }
            }
        };
        Series { repr }
    }

    /// Substitutes `q -> q^k` (`k >= 1`), keeping the order.
    pub fn dilate(&self, k: usize) -> Result<Series> {
        if k == 0 {
            return Err(Error::argument("dilation factor must be positive"));
        }
        let n = self.order();
        let keep = n.div_ceil(k);
        let repr = match &self.repr {
            Repr::Exact(c) => {
                let mut out = vec![BigInt::zero(); n];
                for (i, v) in c.iter().enumerate().take(keep) {
                    out[i * k] = v.clone();
                }
                Repr::Exact(out)
            }
            Repr::Residues { modulus, coeffs } => {
                let mut out = vec![0u64; n];
                for (i, &v) in coeffs.iter().enumerate().take(keep) {
                    out[i * k] = v;
                }
                Repr::Residues {
                    modulus: *modulus,
                    coeffs: out,
                }
            }
        };
        Ok(Series { repr })
    }

    /// Substitutes `q -> -q`.
    pub fn negate_q(&self) -> Series {
        let repr = match &self.repr {
            Repr::Exact(c) => Repr::Exact(
                c.iter()
                    .enumerate()
                    .map(|(i, v)| if i % 2 == 1 { -v } else { v.clone() })
                    .collect(),
            ),
            Repr::Residues { modulus, coeffs } => Repr::Residues {
                modulus: *modulus,
                coeffs: coeffs
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| if i % 2 == 1 { (modulus - v) % modulus } else { v })
                    .collect(),
            },
        };
        Series { repr }
    }

    /// True when every coefficient is `>= 0` (always true for residues).
    pub fn is_nonnegative(&self) -> bool {
        match &self.repr {
            Repr::Exact(c) => c.iter().all(|v| !v.is_negative()),
            Repr::Residues { .. } => true,
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            let (neg, mag) = (c.is_negative(), c.magnitude().clone());
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = !mag.is_one() || e == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{e}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order())?;
        if let Some(m) = self.modulus() {
            write!(f, " (mod {m})")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[i64]) -> Series {
        Series::from_ints(c)
    }

    fn f1(order: usize) -> Series {
        // pentagonal exponents, written out by hand up to q^40
        Series::from_terms(
            order,
            [
                (0, 1),
                (1, -1),
                (2, -1),
                (5, 1),
                (7, 1),
                (12, -1),
                (15, -1),
                (22, 1),
                (26, 1),
                (35, -1),
                (40, -1),
            ],
        )
    }

    #[test]
    fn add_examples() {
        let a = s(&[1, -1, 0]);
        let b = s(&[0, 1, 1]);
        assert_eq!(a.add(&b).unwrap(), s(&[1, 0, 1]));
        assert_eq!(a.add(&Series::zero(3)).unwrap(), a);
        let x = Series::from_residues(4, vec![3]).unwrap();
        let y = Series::from_residues(4, vec![2]).unwrap();
        assert_eq!(x.add(&y).unwrap(), Series::from_residues(4, vec![1]).unwrap());
    }

    #[test]
    fn add_truncates_to_min_order() {
        let a = s(&[1, 2, 3, 4]);
        let b = s(&[1, 1]);
        assert_eq!(a.add(&b).unwrap(), s(&[2, 3]));
    }

    #[test]
    fn modulus_mismatch_is_an_error() {
        let a = s(&[1, 2]);
        let b = a.reduce_mod(3).unwrap();
        let c = a.reduce_mod(5).unwrap();
        assert!(matches!(a.add(&b), Err(Error::IncompatibleModulus { .. })));
        assert!(matches!(b.mul(&c), Err(Error::IncompatibleModulus { .. })));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(s(&[1, 1, 0]).mul(&s(&[1, -1, 0])).unwrap(), s(&[1, 0, -1]));
        let a = s(&[3, -1, 4, 1, -5]);
        assert_eq!(a.mul(&Series::one(5)).unwrap(), a);
    }

    #[test]
    fn invert_examples() {
        let p = f1(8).invert().unwrap();
        assert_eq!(p, s(&[1, 1, 2, 3, 5, 7, 11, 15]));
        assert_eq!(Series::one(6).invert().unwrap(), Series::one(6));
        let a = s(&[1, -1, -1, 0, 0, 0, 0, 0, 0, 0]);
        assert_eq!(a.invert().unwrap().invert().unwrap(), a);
    }

    #[test]
    fn invert_rejects_non_units() {
        assert!(matches!(
            s(&[2, 1]).invert(),
            Err(Error::NotInvertible { .. })
        ));
        assert!(matches!(
            s(&[0, 1]).invert(),
            Err(Error::NotInvertible { .. })
        ));
        let m = s(&[2, 1]).reduce_mod(4).unwrap();
        assert!(m.invert().is_err());
        // 3 is a unit mod 4
        let u = s(&[3, 1, 2]).reduce_mod(4).unwrap();
        let inv = u.invert().unwrap();
        assert_eq!(u.mul(&inv).unwrap(), Series::one_in(Ring::Mod(4), 3));
        assert_eq!(s(&[-1, 2, 0]).invert().unwrap(), s(&[-1, -2, -4]));
    }

    #[test]
    fn pow_examples() {
        let sq = f1(6).pow(2).unwrap();
        assert_eq!(sq, s(&[1, -2, -1, 2, 1, 2]));
        let a = s(&[2, 3, 5]);
        assert_eq!(a.pow(1).unwrap(), a);
        assert_eq!(a.pow(0).unwrap(), Series::one(3));
        assert!(s(&[2, 1]).pow(-1).is_err());
        let inv2 = f1(20).pow(-2).unwrap();
        assert_eq!(inv2.mul(&f1(20).pow(2).unwrap()).unwrap(), Series::one(20));
    }

    #[test]
    fn dissect_examples() {
        let a = s(&[1, 2, 3, 4, 5]);
        assert_eq!(a.dissect(2, 1).unwrap(), s(&[2, 4]));
        assert_eq!(a.dissect(2, 0).unwrap(), s(&[1, 3, 5]));
        assert_eq!(a.dissect(1, 0).unwrap(), a);
        assert_eq!(a.dissect(7, 6).unwrap().order(), 0);
        assert!(a.dissect(2, 2).is_err());
        assert!(a.dissect(0, 0).is_err());
    }

    #[test]
    fn extract_refuses_short_series() {
        let a = s(&[1, 2, 3, 4, 5]);
        assert_eq!(a.extract(3, 1, 2).unwrap(), s(&[2, 5]));
        assert_eq!(
            a.extract(3, 1, 3),
            Err(Error::InsufficientOrder { have: 5, need: 8 })
        );
        assert_eq!(a.extract(4, 9, 0).unwrap().order(), 0);
    }

    #[test]
    fn reduce_mod_examples() {
        let r = s(&[1, -2, 7]).reduce_mod(4).unwrap();
        assert_eq!(r.residues().unwrap(), &[1, 2, 3]);
        assert!(s(&[5, -3, 8]).reduce_mod(1).unwrap().is_zero());
        assert!(s(&[1]).reduce_mod(0).is_err());
        // re-reduction only towards divisors
        let r8 = s(&[7, 6]).reduce_mod(8).unwrap();
        assert_eq!(r8.reduce_mod(4).unwrap().residues().unwrap(), &[3, 2]);
        assert!(r8.reduce_mod(3).is_err());
    }

    #[test]
    fn congruent_mod_examples() {
        let a = s(&[1, 1, 0, 0, 0, 0, 0, 0, 0, 0]);
        let b = s(&[1, -1, 0, 0, 0, 0, 0, 0, 0, 0]);
        assert!(a.congruent_mod(&b, 2, 10).unwrap().holds);
        let c = a.congruent_mod(&b, 3, 10).unwrap();
        assert!(!c.holds);
        assert_eq!(
            c.first_mismatch,
            Some(Mismatch {
                index: 1,
                left: 1,
                right: 2
            })
        );
        assert!(a.congruent_mod(&a, 7, 10).unwrap().holds);
        assert_eq!(
            a.congruent_mod(&b, 2, 11),
            Err(Error::InsufficientOrder { have: 10, need: 11 })
        );
    }

    #[test]
    fn substitutions() {
        let a = s(&[1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(a.shift(2), s(&[0, 0, 1, 2, 3, 4, 5]));
        assert_eq!(a.dilate(3).unwrap(), s(&[1, 0, 0, 2, 0, 0, 3]));
        assert_eq!(a.negate_q(), s(&[1, -2, 3, -4, 5, -6, 7]));
        let r = a.reduce_mod(5).unwrap();
        assert_eq!(r.negate_q(), a.negate_q().reduce_mod(5).unwrap());
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(s(&[1, -1, -1, 0, 2]).to_string(), "1 - q - q^2 + 2q^4 + O(q^5)");
        assert_eq!(Series::zero(3).to_string(), "0 + O(q^3)");
    }
}
