use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::families::{instantiate, Params, Theorem};
use super::Progression;
use crate::error::{Error, Result};
use crate::qfunctions::eta_quotient_in;
use crate::series::{EtaQuotient, Ring};

/// Fewest coefficients any scanned progression may rest on.
const MIN_EVIDENCE: usize = 50;

/// `R̄*_ell(step n + offset) ≡ 0 (mod modulus)` on every coefficient seen.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub progression: Progression,
    /// Largest modulus within the search bound dividing every coefficient.
    pub modulus: u64,
    /// Number of coefficients checked.
    pub evidence: u64,
    /// Theorem parts this candidate re-derives, if any.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub rediscovers: Vec<String>,
}

/// Fixed-progression theorem instances with offset below the step, as
/// `(tag, progression, modulus)`.
fn known_instances(ell: u64) -> Vec<(String, Progression, u64)> {
    let mut out = Vec::new();
    let mut push = |t: Theorem, params: Params| {
        if let Ok(claims) = instantiate(t, &params) {
            for c in claims {
                let zero = matches!(c.rhs, super::Rhs::Zero);
                if zero && c.ell == ell && c.progression.offset < c.progression.step {
                    out.push((c.family.clone(), c.progression, c.modulus.unwrap_or(0)));
                }
            }
        }
    };
    for t in [Theorem::Thm31I, Theorem::Thm35I, Theorem::Thm35II, Theorem::Thm36I, Theorem::Thm36II] {
        push(t, Params::default());
    }
    for t in [Theorem::Thm33II, Theorem::Thm33III] {
        push(t, Params { alpha: Some(0), ..Params::default() });
    }
    if ell % 5 == 0 {
        let k = Params { k: Some(ell / 5), ..Params::default() };
        push(Theorem::Thm32I, k);
        push(Theorem::Thm32II, k);
    }
    push(Theorem::Thm34II, Params::prime(3, 0));
    push(Theorem::Thm37II, Params::prime(5, 0));
    out
}

/// Scans every progression `a n + b` with `a <= max_step`, `b < a` over the
/// first `order` coefficients of `R̄*_ell` for the largest modulus
/// `2 <= m <= max_modulus` dividing all of them. Sorted by evidence, then
/// progression.
pub fn search(ell: u64, max_step: u64, max_modulus: u64, order: usize) -> Result<Vec<Candidate>> {
    if ell == 0 || max_step == 0 {
        return Err(Error::argument("ell and max_step must be positive"));
    }
    if max_modulus < 2 {
        return Err(Error::argument("max_modulus must be at least 2"));
    }
    if order / (max_step as usize) < MIN_EVIDENCE {
        return Err(Error::argument(format!(
            "order {order} leaves fewer than {MIN_EVIDENCE} coefficients on step {max_step} progressions"
        )));
    }
    let lcm = (2..=max_modulus).fold(1u64, |acc, m| acc.lcm(&m));
    let series = eta_quotient_in(&EtaQuotient::rstar(ell as usize)?, Ring::Mod(lcm), order)?;
    let coeffs = series.residues().expect("residue ring");
    let known = known_instances(ell);
    let mut out = Vec::new();
    for a in 1..=max_step as usize {
        for b in 0..a {
            let values: Vec<u64> = coeffs.iter().skip(b).step_by(a).copied().collect();
            let Some(m) = (2..=max_modulus).rev().find(|&m| values.iter().all(|v| v % m == 0)) else {
                continue;
            };
            let progression = Progression {
                step: a as u64,
                offset: b as u64,
            };
            let rediscovers = known
                .iter()
                .filter(|(_, p, mk)| *p == progression && m % mk == 0)
                .map(|(tag, _, _)| tag.clone())
                .collect();
            out.push(Candidate {
                progression,
                modulus: m,
                evidence: values.len() as u64,
                rediscovers,
            });
        }
    }
    out.sort_by(|x, y| {
        y.evidence
            .cmp(&x.evidence)
            .then(x.progression.cmp(&y.progression))
    });
    Ok(out)
}

/// Known fixed-progression instances in the search window that a
/// candidate list failed to re-derive.
pub fn missing_known(ell: u64, max_step: u64, max_modulus: u64, found: &[Candidate]) -> Vec<(String, Progression, u64)> {
    known_instances(ell)
        .into_iter()
        .filter(|(_, p, m)| p.step <= max_step && *m <= max_modulus)
        .filter(|(tag, p, _)| {
            !found
                .iter()
                .any(|c| c.progression == *p && c.rediscovers.contains(tag))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rediscovers_the_mod_4_progressions() {
        let found = search(4, 4, 4, 500).unwrap();
        for b in [2, 3] {
            let c = found
                .iter()
                .find(|c| c.progression == Progression { step: 4, offset: b })
                .unwrap();
            assert_eq!(c.modulus, 4);
            assert_eq!(c.rediscovers, ["thm3.1(i)"]);
        }
        assert!(missing_known(4, 4, 4, &found).is_empty());
        assert!(found.windows(2).all(|w| w[0].evidence >= w[1].evidence));
    }

    #[test]
    fn refuses_thin_evidence() {
        assert!(search(4, 4, 4, 199).is_err());
        assert!(search(2, 2, 2, 100).is_ok());
    }
}
