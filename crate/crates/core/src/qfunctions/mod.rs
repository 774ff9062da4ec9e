//! Named q-series: Euler products, eta quotients, the theta functions
//! `phi`, `psi`, `f(-q)`, the general two-variable theta `F(x, y)` at powers
//! of `q`, and the auxiliary series `X`, `Y` of the 5-dissection of `1/phi`.
//!
//! Every theta-type constructor sums its defining series directly; product
//! forms are only ever reached through [`eta_quotient`].

mod catalog;

pub use catalog::{standard_cases, verify_identity, IdentityCase, IdentityId};

use crate::error::{Error, Result};
use crate::series::{EtaQuotient, Ring, Series};

/// Parameters of `F(sign_x * q^a, sign_y * q^b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ThetaSpec {
    pub a: u64,
    pub b: u64,
    pub sign_x: i8,
    pub sign_y: i8,
}

impl ThetaSpec {
    pub fn new(a: u64, b: u64, sign_x: i8, sign_y: i8) -> Result<ThetaSpec> {
        if a == 0 && b == 0 {
            return Err(Error::DivergentSpec);
        }
        if !matches!(sign_x, -1 | 1) || !matches!(sign_y, -1 | 1) {
            return Err(Error::argument("theta signs must be +1 or -1"));
        }
        Ok(ThetaSpec {
            a,
            b,
            sign_x,
            sign_y,
        })
    }

    /// `F(q^a, q^b)`.
    pub fn positive(a: u64, b: u64) -> Result<ThetaSpec> {
        ThetaSpec::new(a, b, 1, 1)
    }

    /// `F(-q^a, -q^b)`.
    pub fn negative(a: u64, b: u64) -> Result<ThetaSpec> {
        ThetaSpec::new(a, b, -1, -1)
    }

    /// Exponent `a n(n+1)/2 + b n(n-1)/2` of the `n`-th term.
    pub fn exponent(&self, n: i64) -> i128 {
        let n = n as i128;
        self.a as i128 * (n * (n + 1) / 2) + self.b as i128 * (n * (n - 1) / 2)
    }

    /// Sign `sign_x^(n(n+1)/2) * sign_y^(n(n-1)/2)` of the `n`-th term.
    pub fn sign(&self, n: i64) -> i64 {
        let n = n as i128;
        let odd = |k: i128| k.rem_euclid(2) == 1;
        let mut s = 1;
        if self.sign_x < 0 && odd(n * (n + 1) / 2) {
            s = -s;
        }
        if self.sign_y < 0 && odd(n * (n - 1) / 2) {
            s = -s;
        }
        s
    }
}

/// Terms of a bilateral sum `sum_n sign(n) q^exponent(n)` below `order`.
///
/// `exponent` must be a quadratic in `n` with positive leading coefficient,
/// so each direction can stop once the exponent is past `order` and still
/// growing. Exponents must be non-negative (no Laurent terms).
fn bilateral_terms(
    order: usize,
    exponent: impl Fn(i64) -> i128,
    sign: impl Fn(i64) -> i64,
) -> Result<Vec<(usize, i64)>> {
    let limit = order as i128;
    let mut terms = Vec::new();
    for dir in [1i64, -1] {
        let mut n = if dir == 1 { 0 } else { -1 };
        loop {
            let e = exponent(n);
            if e < 0 {
                return Err(Error::argument(format!(
                    "negative exponent {e} at term {n} of a bilateral sum"
                )));
            }
            if e >= limit && exponent(n + dir) >= e {
                break;
            }
            if e < limit {
                terms.push((e as usize, sign(n)));
            }
            n += dir;
        }
    }
    Ok(terms)
}

/// `f_h = (q^h; q^h)_inf` to `order`, from the pentagonal number sum
/// `sum_v (-1)^v q^(h v(3v+1)/2)`.
pub fn euler_product(h: usize, order: usize) -> Result<Series> {
    if h == 0 {
        return Err(Error::argument("Euler product scale must be positive"));
    }
    let mut terms = Vec::new();
    for dir in [1i64, -1] {
        let mut v = if dir == 1 { 0 } else { -1 };
        loop {
            let e = h as i128 * (v as i128 * (3 * v as i128 + 1) / 2);
            if e >= order as i128 {
                break;
            }
            terms.push((e as usize, if v % 2 == 0 { 1 } else { -1 }));
            v += dir;
        }
    }
    Ok(Series::from_terms(order, terms))
}

/// Exact expansion of an eta quotient.
pub fn eta_quotient(quotient: &EtaQuotient, order: usize) -> Result<Series> {
    eta_quotient_in(quotient, Ring::Exact, order)
}

/// Expansion of an eta quotient directly in `ring`.
///
/// Numerator factors are multiplied in one at a time and denominator factors
/// divided out one at a time; each step pairs a dense series with a sparse
/// pentagonal one, so the cost is O(N^1.5) per unit of exponent.
pub fn eta_quotient_in(quotient: &EtaQuotient, ring: Ring, order: usize) -> Result<Series> {
    let mut acc = Series::one_in(ring, order);
    let (num, den) = quotient.split();
    for &(h, e) in num.factors() {
        let f = euler_product(h, order)?.into_ring(ring)?;
        for _ in 0..e {
            acc = acc.mul(&f)?;
        }
    }
    for &(h, e) in den.factors() {
        let f = euler_product(h, order)?.into_ring(ring)?;
        for _ in 0..e {
            acc = Series::div_unit(&acc, &f)?;
        }
    }
    Ok(acc)
}

/// `phi(q) = 1 + 2 sum_{v>=1} q^(v^2)`.
pub fn phi(order: usize) -> Series {
    let mut terms = vec![(0, 1)];
    let mut v = 1usize;
    while v * v < order {
        terms.push((v * v, 2));
        v += 1;
    }
    Series::from_terms(order, terms)
}

/// `psi(q) = sum_{v>=0} q^(v(v+1)/2)`.
pub fn psi(order: usize) -> Series {
    let mut terms = Vec::new();
    let mut v = 0usize;
    while v * (v + 1) / 2 < order {
        terms.push((v * (v + 1) / 2, 1));
        v += 1;
    }
    Series::from_terms(order, terms)
}

/// `phi(-q)`, built as `phi` with `q -> -q` and checked against `f_1^2 / f_2`.
pub fn phi_neg(order: usize) -> Result<Series> {
    let by_sum = phi(order).negate_q();
    let by_product = eta_quotient(&EtaQuotient::new([(1, 2), (2, -1)])?, order)?;
    if let Some((i, a, b)) = by_sum.differences(&by_product, order)?.into_iter().next() {
        return Err(Error::RouteMismatch(format!(
            "phi(-q) at q^{i}: theta sum gives {a}, f1^2/f2 gives {b}"
        )));
    }
    Ok(by_sum)
}

/// `F(sign_x q^(a*scale), sign_y q^(b*scale))` summed over all integers.
pub fn general_theta(spec: ThetaSpec, scale: usize, order: usize) -> Result<Series> {
    if spec.a == 0 && spec.b == 0 {
        return Err(Error::DivergentSpec);
    }
    if scale == 0 {
        return Err(Error::argument("theta scale must be positive"));
    }
    let terms = bilateral_terms(
        order,
        |n| spec.exponent(n) * scale as i128,
        |n| spec.sign(n),
    )?;
    Ok(Series::from_terms(order, terms))
}

/// `X(q^scale)` with `X(q) = sum_r q^(5r^2 + 2r)`.
pub fn x_series(scale: usize, order: usize) -> Result<Series> {
    quadratic_series(scale, order, 2)
}

/// `Y(q^scale)` with `Y(q) = sum_r q^(5r^2 + 4r)`.
pub fn y_series(scale: usize, order: usize) -> Result<Series> {
    quadratic_series(scale, order, 4)
}

fn quadratic_series(scale: usize, order: usize, linear: i128) -> Result<Series> {
    if scale == 0 {
        return Err(Error::argument("scale must be positive"));
    }
    let terms = bilateral_terms(
        order,
        |r| {
            let r = r as i128;
            (5 * r * r + linear * r) * scale as i128
        },
        |_| 1,
    )?;
    Ok(Series::from_terms(order, terms))
}

/// `q^(r^2) F(q^(n(n-2r)), q^(n(n+2r)))`, i.e. `sum_k q^((nk - r)^2)`, one
/// summand of the `n^2`-dissection of `phi`. The inner theta may carry a
/// negative exponent when `2r > n`; the prefactor makes every term integral.
pub(crate) fn phi_dissection_component(n: u64, r: u64, order: usize) -> Result<Series> {
    let (n, r) = (n as i128, r as i128);
    let a = n * (n - 2 * r);
    let b = n * (n + 2 * r);
    let terms = bilateral_terms(
        order,
        |k| {
            let k = k as i128;
            r * r + a * (k * (k + 1) / 2) + b * (k * (k - 1) / 2)
        },
        |_| 1,
    )?;
    Ok(Series::from_terms(order, terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &Series) -> Vec<i64> {
        s.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn euler_product_examples() {
        assert_eq!(
            euler_product(1, 8).unwrap(),
            Series::from_ints(&[1, -1, -1, 0, 0, 1, 0, 1])
        );
        assert_eq!(
            euler_product(2, 8).unwrap(),
            Series::from_ints(&[1, 0, -1, 0, -1, 0, 0, 0])
        );
        assert!(euler_product(0, 8).is_err());
        assert_eq!(euler_product(3, 0).unwrap().order(), 0);
    }

    #[test]
    fn partition_numbers_and_ramanujan_mod5() {
        let p = euler_product(1, 30).unwrap().invert().unwrap();
        assert_eq!(p.coeff(4), 5.into());
        let p = euler_product(1, 5 * 20 + 5).unwrap().invert().unwrap();
        for n in 0..=20 {
            assert_eq!(p.residue(5 * n + 4, 5).unwrap(), 0);
        }
    }

    #[test]
    fn eta_quotient_examples() {
        let op = eta_quotient(&"2:1,1:-2".parse().unwrap(), 4).unwrap();
        assert_eq!(ints(&op), [1, 2, 4, 8]);
        let r2 = eta_quotient(&EtaQuotient::rstar(2).unwrap(), 4).unwrap();
        assert_eq!(r2.coeff(3), 6.into());
        assert_eq!(eta_quotient(&EtaQuotient::one(), 7).unwrap(), Series::one(7));
    }

    #[test]
    fn eta_quotient_in_residues_matches_reduction() {
        let q = EtaQuotient::rstar(8).unwrap();
        let exact = eta_quotient(&q, 200).unwrap();
        let modular = eta_quotient_in(&q, Ring::Mod(8), 200).unwrap();
        assert_eq!(exact.reduce_mod(8).unwrap(), modular);
    }

    #[test]
    fn theta_examples() {
        assert_eq!(ints(&phi(10)), [1, 2, 0, 0, 2, 0, 0, 0, 0, 2]);
        assert_eq!(ints(&psi(11)), [1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1]);
        let pn = phi_neg(50).unwrap();
        assert_eq!(pn, phi(50).negate_q());
        let product = eta_quotient(&"2:5,1:-2,4:-2".parse().unwrap(), 50).unwrap();
        assert_eq!(phi(50), product);
    }

    #[test]
    fn general_theta_specialisations() {
        for n in [0, 1, 2, 17, 60, 301] {
            let f = |a, b, s: i8| general_theta(ThetaSpec::new(a, b, s, s).unwrap(), 1, n).unwrap();
            assert_eq!(f(1, 1, 1), phi(n));
            assert_eq!(f(1, 3, 1), psi(n));
            assert_eq!(f(1, 2, -1), euler_product(1, n).unwrap());
        }
        assert_eq!(ThetaSpec::new(0, 0, 1, 1), Err(Error::DivergentSpec));
        assert!(ThetaSpec::new(1, 1, 2, 1).is_err());
        let spec = ThetaSpec { a: 0, b: 0, sign_x: 1, sign_y: 1 };
        assert_eq!(general_theta(spec, 1, 5), Err(Error::DivergentSpec));
    }

    #[test]
    fn theta_with_one_zero_exponent() {
        // F(1, q^8) = 2 psi(q^8): the n and 1-n terms coincide
        let f = general_theta(ThetaSpec::positive(0, 8).unwrap(), 1, 100).unwrap();
        assert_eq!(f, psi(100).dilate(8).unwrap().scale(2));
    }

    #[test]
    fn scaled_theta_is_dilated_theta() {
        let spec = ThetaSpec::negative(5, 7).unwrap();
        let direct = general_theta(spec, 3, 400).unwrap();
        let dilated = general_theta(spec, 1, 400).unwrap().dilate(3).unwrap();
        assert_eq!(direct, dilated);
    }

    #[test]
    fn x_and_y_examples() {
        assert_eq!(x_series(1, 10).unwrap(), Series::from_terms(10, [(0, 1), (3, 1), (7, 1)]));
        assert_eq!(y_series(1, 10).unwrap(), Series::from_terms(10, [(0, 1), (1, 1), (9, 1)]));
        let scaled: Vec<_> = x_series(1, 8)
            .unwrap()
            .terms()
            .into_iter()
            .map(|(e, c)| (5 * e, c))
            .collect();
        assert_eq!(x_series(5, 40).unwrap().terms(), scaled);
    }

    #[test]
    fn phi_component_is_shifted_square_sum() {
        // n = 3, r = 2: exponents (3k - 2)^2
        let c = phi_dissection_component(3, 2, 200).unwrap();
        let mut expected = Vec::new();
        for k in -20i64..=20 {
            let e = (3 * k - 2).pow(2) as usize;
            if e < 200 {
                expected.push((e, 1));
            }
        }
        assert_eq!(c, Series::from_terms(200, expected));
    }
}
