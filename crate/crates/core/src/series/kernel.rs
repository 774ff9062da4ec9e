//! Inner loops for truncated products and unit division.
//!
//! Every loop walks the nonzero terms of the sparser operand only, so a
//! product with a pentagonal or theta series costs O(N * nnz) rather than
//! O(N^2). Residue loops accumulate without reduction whenever the worst-case
//! sum provably fits in a `u64`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub(super) fn support_exact(a: &[BigInt]) -> Vec<(usize, &BigInt)> {
    a.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
}

pub(super) fn support_residue(a: &[u64]) -> Vec<(usize, u64)> {
    a.iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| (i, c))
        .collect()
}

/// True when `terms` products of residues below `m` can be summed in a `u64`.
fn lazy_fits(m: u64, terms: usize) -> bool {
    let r = m.saturating_sub(1);
    r.checked_mul(r)
        .and_then(|sq| sq.checked_mul(terms as u64 + 1))
        .is_some()
}

#[inline]
pub(super) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

#[inline]
fn mul_add_mod(acc: u64, a: u64, b: u64, m: u64) -> u64 {
    ((acc as u128 + a as u128 * b as u128) % m as u128) as u64
}

pub(super) fn mul_exact(a: &[BigInt], b: &[BigInt], n: usize) -> Vec<BigInt> {
    let (a, b) = (&a[..n], &b[..n]);
    let sa = support_exact(a);
    let sb = support_exact(b);
    let (sparse, dense) = if sa.len() <= sb.len() { (sa, b) } else { (sb, a) };
    let mut out = vec![BigInt::zero(); n];
    for (i, c) in sparse {
        let tail = &dense[..n - i];
        let target = &mut out[i..];
        if c.is_one() {
            for (o, d) in target.iter_mut().zip(tail) {
                if !d.is_zero() {
                    *o += d;
                }
            }
        } else if c.is_negative() && c.magnitude().is_one() {
            for (o, d) in target.iter_mut().zip(tail) {
                if !d.is_zero() {
                    *o -= d;
                }
            }
        } else {
            for (o, d) in target.iter_mut().zip(tail) {
                if !d.is_zero() {
                    *o += c * d;
                }
            }
        }
    }
    out
}

pub(super) fn mul_residue(a: &[u64], b: &[u64], n: usize, m: u64) -> Vec<u64> {
    let (a, b) = (&a[..n], &b[..n]);
    let sa = support_residue(a);
    let sb = support_residue(b);
    let (sparse, dense) = if sa.len() <= sb.len() { (sa, b) } else { (sb, a) };
    let mut out = vec![0u64; n];
    if lazy_fits(m, sparse.len()) {
        for (i, c) in sparse {
            for (o, &d) in out[i..].iter_mut().zip(&dense[..n - i]) {
                *o += c * d;
            }
        }
        for o in &mut out {
            *o %= m;
        }
    } else {
        for (i, c) in sparse {
            for (o, &d) in out[i..].iter_mut().zip(&dense[..n - i]) {
                *o = mul_add_mod(*o, c, d, m);
            }
        }
    }
    out
}

/// Solves `den * x = num` term by term; `den[0]` must be +1 or -1.
pub(super) fn div_exact(num: &[BigInt], den: &[BigInt], n: usize) -> Vec<BigInt> {
    let negate = den[0].is_negative();
    let terms: Vec<(usize, &BigInt)> = support_exact(&den[..n])
        .into_iter()
        .filter(|&(i, _)| i > 0)
        .collect();
    let mut out: Vec<BigInt> = Vec::with_capacity(n);
    for k in 0..n {
        let mut acc = num[k].clone();
        for &(i, d) in &terms {
            if i > k {
                break;
            }
            let prev = &out[k - i];
            if prev.is_zero() {
                continue;
            }
            if d.is_one() {
                acc -= prev;
            } else if d.is_negative() && d.magnitude().is_one() {
                acc += prev;
            } else {
                acc -= d * prev;
            }
        }
        if negate {
            acc = -acc;
        }
        out.push(acc);
    }
    out
}

/// Residue counterpart of [`div_exact`]; `den0_inv` is the inverse of `den[0]` mod `m`.
pub(super) fn div_residue(num: &[u64], den: &[u64], n: usize, m: u64, den0_inv: u64) -> Vec<u64> {
    let terms: Vec<(usize, u64)> = support_residue(&den[..n])
        .into_iter()
        .filter(|&(i, _)| i > 0)
        .collect();
    let lazy = lazy_fits(m, terms.len());
    let mut out: Vec<u64> = Vec::with_capacity(n);
    for k in 0..n {
        let mut acc = 0u64;
        for &(i, d) in &terms {
            if i > k {
                break;
            }
            if lazy {
                acc += d * out[k - i];
            } else {
                acc = mul_add_mod(acc, d, out[k - i], m);
            }
        }
        let diff = ((num[k] as u128 + (m - acc % m) as u128) % m as u128) as u64;
        out.push(mul_mod(diff, den0_inv, m));
    }
    out
}

/// Inverse of `a` modulo `m`, if it exists.
pub(super) fn inverse_mod(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_mod_small() {
        assert_eq!(inverse_mod(3, 8), Some(3));
        assert_eq!(inverse_mod(2, 8), None);
        assert_eq!(inverse_mod(7, 1), Some(0));
        for m in 2..40u64 {
            for a in 1..m {
                if let Some(inv) = inverse_mod(a, m) {
                    assert_eq!(a * inv % m, 1);
                }
            }
        }
    }

    #[test]
    fn lazy_bound_rejects_overflow() {
        assert!(lazy_fits(8, 1_000_000));
        assert!(!lazy_fits(u64::MAX, 2));
    }

    #[test]
    fn residue_paths_agree_for_large_modulus() {
        // forces the reduce-every-step branch
        let m = (1u64 << 62) + 135;
        let a = vec![1, m - 1, 5, 0, m - 7];
        let b = vec![1, 3, m - 2, 9, 4];
        let prod = mul_residue(&a, &b, 5, m);
        let back = div_residue(&prod, &b, 5, m, 1);
        assert_eq!(back, a);
    }
}
