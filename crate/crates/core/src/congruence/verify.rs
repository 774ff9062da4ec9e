use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use rayon::prelude::*;

use super::families::{intermediate_claims, Intermediate};
use super::{CongruenceClaim, Rhs};
use crate::counting::{count, Kind};
use crate::error::{Error, Result};
use crate::qfunctions::{euler_product, eta_quotient_in, psi};
use crate::report::{ReportBuilder, VerificationReport};
use crate::series::{EtaQuotient, Ring, Series};

/// Largest series order a claim may ask for unless told otherwise.
pub const DEFAULT_MAX_ORDER: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max_order: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_order: DEFAULT_MAX_ORDER,
        }
    }
}

/// A rayon pool sized by `QCONG_THREADS` when set, otherwise rayon's default.
pub fn thread_pool() -> rayon::ThreadPool {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = std::env::var("QCONG_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        builder = builder.num_threads(n);
    }
    builder.build().expect("thread pool")
}

type CacheKey = (EtaQuotient, Ring);

fn cache() -> &'static Mutex<HashMap<CacheKey, Series>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Series>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Expansion of `quotient` in `ring` to at least `order`, shared between
/// claims. Two threads asking for the same missing entry may both compute
/// it; the longer result wins, so the cache only ever grows.
fn cached_expansion(quotient: &EtaQuotient, ring: Ring, order: usize) -> Result<Series> {
    let key = (quotient.clone(), ring);
    if let Some(s) = cache().lock().expect("cache lock").get(&key) {
        if s.order() >= order {
            return Ok(s.truncate(order));
        }
    }
    let fresh = eta_quotient_in(quotient, ring, order)?;
    let mut map = cache().lock().expect("cache lock");
    let entry = map.entry(key).or_insert_with(|| fresh.clone());
    if entry.order() < fresh.order() {
        *entry = fresh.clone();
    }
    Ok(fresh)
}

/// Ring the source series is expanded in for this claim.
fn source_ring(claim: &CongruenceClaim) -> Ring {
    match (claim.modulus, &claim.rhs) {
        (Some(m), Rhs::PConvolution) => Ring::Mod(2 * m),
        (Some(m), _) => Ring::Mod(m),
        (None, _) => Ring::Exact,
    }
}

fn check_budget(claim: &CongruenceClaim, terms: usize, opts: &VerifyOptions) -> Result<usize> {
    if terms == 0 {
        return Err(Error::argument("at least one term must be checked"));
    }
    let need = claim.progression.required_order(terms as u64) as usize;
    if need > opts.max_order {
        return Err(Error::OrderBudget {
            need,
            limit: opts.max_order,
        });
    }
    Ok(need)
}

fn rhs_series(rhs: &Rhs, ring: Ring, terms: usize, source: &Series) -> Result<Series> {
    let exact = match rhs {
        Rhs::Zero => Series::zero(terms),
        Rhs::TwoF1PsiQ2 => euler_product(1, terms)?
            .mul(&psi(terms).dilate(2)?)?
            .scale(2),
        Rhs::TwoPsiPsiQ4 => psi(terms).mul(&psi(terms).dilate(4)?)?.scale(2),
        Rhs::TwoF1Psi => euler_product(1, terms)?.mul(&psi(terms))?.scale(2),
        Rhs::PsiSqQ3 => psi(terms).dilate(3)?.pow(2)?,
        Rhs::PsiSq => psi(terms).pow(2)?,
        Rhs::SelfSeries => return Ok(source.truncate(terms)),
        Rhs::Eta { coeff, quotient } => {
            return Ok(eta_quotient_in(quotient, ring, terms)?.scale(*coeff))
        }
        Rhs::PConvolution | Rhs::OverpartitionConv | Rhs::D2 => {
            unreachable!("oracle right-hand sides are handled separately")
        }
    };
    exact.into_ring(ring)
}

/// Checks `claim` on its first `terms` progression terms.
pub fn verify(claim: &CongruenceClaim, terms: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    let mut report = ReportBuilder::new(claim.family.clone(), claim.description.clone())
        .params(&claim.params)
        .progression(claim.progression)
        .modulus(claim.modulus);
    check_into(&mut report, claim, terms, opts)?;
    Ok(report.finish())
}

fn check_into(
    report: &mut ReportBuilder,
    claim: &CongruenceClaim,
    terms: usize,
    opts: &VerifyOptions,
) -> Result<()> {
    let need = check_budget(claim, terms, opts)?;
    let prog = claim.progression;
    match &claim.rhs {
        Rhs::D2 => {
            let left = count(Kind::NonOverlinedLRegular(claim.ell), terms as u64 - 1)?;
            let right = count(Kind::DistinctTwoCopies, terms as u64 - 1)?;
            for (n, (a, b)) in left.values.iter().zip(&right.values).enumerate() {
                if a != b {
                    report.mismatch(n as u64, n as u64, a.clone(), b.clone());
                }
            }
            report.note("both sides from the counting oracles");
        }
        Rhs::OverpartitionConv => {
            let ell = claim.ell as usize;
            let r = cached_expansion(&claim.source(), Ring::Exact, need)?;
            let r = r.exact_coeffs().expect("exact ring");
            let p = count(Kind::PlainP, (need / ell) as u64)?;
            let pbar = count(Kind::Overpartition, need as u64 - 1)?;
            for n in 0..terms {
                let mut left = r[n].clone();
                let mut v = 1;
                while ell * v <= n {
                    left += &r[n - ell * v] * &p.values[v];
                    v += 1;
                }
                if left != pbar.values[n] {
                    report.mismatch(n as u64, n as u64, left, pbar.values[n].clone());
                }
            }
            report.note("left side from the series engine and the p(n) oracle; right side from the overpartition oracle");
        }
        Rhs::PConvolution => {
            let m = claim.modulus.expect("convolution claims carry a modulus");
            let ring = source_ring(claim);
            let source = cached_expansion(&claim.source(), ring, need)?;
            let lhs = source.extract(prog.step as usize, prog.offset as usize, terms)?;
            let p = count(Kind::PlainP, terms as u64 - 1)?;
            let two_m = BigInt::from(2 * m);
            for n in 0..terms {
                let mut sum = BigInt::from(0);
                let mut v = 0;
                while v * (v + 1) / 2 <= n {
                    sum += &p.values[n - v * (v + 1) / 2];
                    v += 1;
                }
                let expected = (sum * 2u32) % &two_m;
                let found = lhs.coeff(n);
                if found != expected {
                    report.mismatch(n as u64, prog.index(n as u64), found, expected);
                }
            }
            report.note(format!(
                "checked as R ≡ 2 * sum (mod {}); sum from the p(n) oracle",
                2 * m
            ));
        }
        rhs => {
            let ring = source_ring(claim);
            let source = cached_expansion(&claim.source(), ring, need)?;
            let lhs = source.extract(prog.step as usize, prog.offset as usize, terms)?;
            let expected = rhs_series(rhs, ring, terms, &source)?;
            match claim.modulus {
                Some(m) => {
                    for mm in lhs.mismatches_mod(&expected, m, terms)? {
                        let n = mm.index as u64;
                        report.mismatch(n, prog.index(n), BigInt::from(mm.left), BigInt::from(mm.right));
                    }
                }
                None => {
                    for (n, a, b) in lhs.differences(&expected, terms)? {
                        report.mismatch(n as u64, prog.index(n as u64), a, b);
                    }
                }
            }
        }
    }
    report.checked(terms as u64);
    Ok(())
}

/// Verifies many claims in parallel; results keep the input order. Base
/// series are expanded once per (quotient, ring) at the largest order any
/// claim needs before the claims themselves run.
pub fn verify_claims(
    claims: &[(CongruenceClaim, usize)],
    opts: &VerifyOptions,
) -> Vec<Result<VerificationReport>> {
    let mut longest: HashMap<CacheKey, usize> = HashMap::new();
    for (claim, terms) in claims {
        if matches!(claim.rhs, Rhs::D2) {
            continue;
        }
        if let Ok(need) = check_budget(claim, *terms, opts) {
            let e = longest.entry((claim.source(), source_ring(claim))).or_insert(0);
            *e = (*e).max(need);
        }
    }
    let pool = thread_pool();
    pool.install(|| {
        let warm: Vec<_> = longest.into_iter().collect();
        warm.par_iter().for_each(|((q, ring), order)| {
            // failures resurface with context when the claim itself runs
            let _ = cached_expansion(q, *ring, *order);
        });
        claims
            .par_iter()
            .map(|(claim, terms)| verify(claim, *terms, opts))
            .collect()
    })
}

/// Checks one proof-internal congruence; every stated right-hand side
/// contributes to the same report.
pub fn verify_intermediate(
    id: Intermediate,
    terms: usize,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    let claims = intermediate_claims(id);
    let first = &claims[0];
    let description = claims
        .iter()
        .map(|c| c.description.as_str())
        .collect::<Vec<_>>()
        .join("; ");
    let mut report = ReportBuilder::new(id.tag(), description)
        .params(&first.params)
        .progression(first.progression)
        .modulus(first.modulus);
    for claim in &claims {
        check_into(&mut report, claim, terms, opts)?;
    }
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::{instantiate, Params, Theorem};

    #[test]
    fn small_fixed_progressions_pass() {
        let opts = VerifyOptions::default();
        for t in [Theorem::Thm31I, Theorem::Thm35I, Theorem::Thm36I] {
            for c in instantiate(t, &Params::default()).unwrap() {
                let r = verify(&c, 200, &opts).unwrap();
                assert!(r.passed(), "{r:?}");
                assert_eq!(r.terms_checked, 200);
            }
        }
    }

    #[test]
    fn false_claim_reports_counterexamples() {
        // R*_4(4n+1) is not 0 mod 4
        let mut c = instantiate(Theorem::Thm31I, &Params::default()).unwrap()[0].clone();
        c.progression.offset = 1;
        let r = verify(&c, 50, &VerifyOptions::default()).unwrap();
        assert!(!r.passed());
        assert_eq!(r.counterexamples[0].index, r.counterexamples[0].n * 4 + 1);
    }

    #[test]
    fn budget_is_enforced() {
        let c = instantiate(Theorem::Thm37II, &Params::prime(5, 1)).unwrap()[0].clone();
        let err = verify(&c, 500, &VerifyOptions { max_order: 10_000 }).unwrap_err();
        assert!(matches!(err, Error::OrderBudget { limit: 10_000, .. }));
        assert!(verify(&c, 0, &VerifyOptions::default()).is_err());
    }

    #[test]
    fn parallel_results_keep_order() {
        let claims: Vec<_> = instantiate(Theorem::Thm36II, &Params::default())
            .unwrap()
            .into_iter()
            .map(|c| (c, 100))
            .collect();
        let reports = verify_claims(&claims, &VerifyOptions::default());
        for ((c, _), r) in claims.iter().zip(reports) {
            assert_eq!(r.unwrap().progression, Some(c.progression));
        }
    }

    #[test]
    fn intermediates_small() {
        let opts = VerifyOptions::default();
        for id in Intermediate::ALL {
            let r = verify_intermediate(id, 60, &opts).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }
}
