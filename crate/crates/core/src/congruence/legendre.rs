use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn primes_upto(bound: u64) -> Vec<u64> {
    (2..=bound).filter(|&n| is_prime(n)).collect()
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % m as u128) as u64;
        }
        base = ((base as u128 * base as u128) % m as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Legendre symbol `(a/p)` by Euler's criterion.
pub fn legendre(a: i64, p: u64) -> Result<i8> {
    if p == 2 || !is_prime(p) {
        return Err(Error::argument(format!("{p} is not an odd prime")));
    }
    let a = (a as i128).rem_euclid(p as i128) as u64;
    if a == 0 {
        return Ok(0);
    }
    Ok(if pow_mod(a, (p - 1) / 2, p) == 1 { 1 } else { -1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert_eq!(primes_upto(30), [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(!is_prime(0) && !is_prime(1) && !is_prime(91));
    }

    #[test]
    fn symbols_match_residue_sets() {
        for p in primes_upto(60).into_iter().skip(1) {
            let squares: Vec<u64> = (1..p).map(|x| x * x % p).collect();
            for a in -20i64..20 {
                let r = (a as i128).rem_euclid(p as i128) as u64;
                let expected = if r == 0 {
                    0
                } else if squares.contains(&r) {
                    1
                } else {
                    -1
                };
                assert_eq!(legendre(a, p).unwrap(), expected, "({a}/{p})");
            }
        }
    }

    #[test]
    fn small_cases() {
        assert_eq!(legendre(-1, 3).unwrap(), -1);
        assert_eq!(legendre(13, 13).unwrap(), 0);
        assert_eq!(legendre(-6, 13).unwrap(), -1);
        assert!(legendre(1, 2).is_err());
        assert!(legendre(1, 9).is_err());
    }
}
