//! Congruences for `R̄*_ell(n)` as concrete coefficient claims on arithmetic
//! progressions, and the machinery that checks them.

mod families;
mod legendre;
mod search;
mod verify;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use families::{
    eligible_primes, instantiate, intermediate_claims, Intermediate, Params, Theorem,
};
pub use legendre::{is_prime, legendre, primes_upto};
pub use search::{missing_known, search, Candidate};
pub use verify::{
    thread_pool, verify, verify_claims, verify_intermediate, VerifyOptions, DEFAULT_MAX_ORDER,
};

use crate::error::{Error, Result};
use crate::series::EtaQuotient;

/// Indices `step * n + offset` for `n >= 0`. The offset may exceed the step;
/// progressions keep the shape they have in the theorem statements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Progression {
    pub step: u64,
    pub offset: u64,
}

impl Progression {
    pub fn new(step: u64, offset: u64) -> Result<Progression> {
        if step == 0 {
            return Err(Error::argument("progression step must be positive"));
        }
        Ok(Progression { step, offset })
    }

    pub fn index(&self, n: u64) -> u64 {
        self.step * n + self.offset
    }

    /// Series order needed to read `terms` coefficients along the progression.
    pub fn required_order(&self, terms: u64) -> u64 {
        if terms == 0 {
            0
        } else {
            self.step * (terms - 1) + self.offset + 1
        }
    }

    /// Largest term count whose required order stays within `order`.
    pub fn terms_within(&self, order: u64) -> u64 {
        if order <= self.offset {
            0
        } else {
            (order - self.offset - 1) / self.step + 1
        }
    }
}

impl fmt::Display for Progression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.step, self.offset) {
            (1, 0) => f.write_str("n"),
            (1, b) => write!(f, "n+{b}"),
            (a, 0) => write!(f, "{a}n"),
            (a, b) => write!(f, "{a}n+{b}"),
        }
    }
}

/// What the dissected coefficients are compared with.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Rhs {
    Zero,
    /// `2 f_1 psi(q^2)`
    TwoF1PsiQ2,
    /// `2 psi(q) psi(q^4)`
    TwoPsiPsiQ4,
    /// `2 f_1 psi(q)`
    TwoF1Psi,
    /// `psi(q^3)^2`
    PsiSqQ3,
    /// `psi(q)^2`
    PsiSq,
    /// The undissected source series itself.
    SelfSeries,
    /// `coeff` times an eta quotient.
    Eta { coeff: i64, quotient: EtaQuotient },
    /// Halved coefficients against `sum_{v>=0} p(n - v(v+1)/2)` from the
    /// partition oracle; checked as `R ≡ 2 * sum (mod 2m)`.
    PConvolution,
    /// Exact: `R(n) + sum_{v>=1} R(n - ell v) p(v) = p̄(n)`, oracles for `p`, `p̄`.
    OverpartitionConv,
    /// Exact: `R̄*_2(n) = D_2(n)`, both from the counting oracles.
    D2,
}

impl fmt::Display for Rhs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rhs::Zero => f.write_str("0"),
            Rhs::TwoF1PsiQ2 => f.write_str("2 f1 psi(q^2)"),
            Rhs::TwoPsiPsiQ4 => f.write_str("2 psi(q) psi(q^4)"),
            Rhs::TwoF1Psi => f.write_str("2 f1 psi(q)"),
            Rhs::PsiSqQ3 => f.write_str("psi(q^3)^2"),
            Rhs::PsiSq => f.write_str("psi(q)^2"),
            Rhs::SelfSeries => f.write_str("R(n)"),
            Rhs::Eta { coeff, quotient } => write!(f, "{coeff} * [{quotient}]"),
            Rhs::PConvolution => f.write_str("sum_v p(n - v(v+1)/2)"),
            Rhs::OverpartitionConv => f.write_str("pbar(n)"),
            Rhs::D2 => f.write_str("D2(n)"),
        }
    }
}

/// One checkable statement: coefficients of `R̄*_ell` along `progression`
/// agree with `rhs` modulo `modulus` (exactly when there is none).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceClaim {
    pub family: String,
    pub params: BTreeMap<String, u64>,
    pub ell: u64,
    pub progression: Progression,
    pub modulus: Option<u64>,
    pub rhs: Rhs,
    pub description: String,
}

impl CongruenceClaim {
    /// `f_2 f_ell / f_1^2`, the generating function being dissected.
    pub fn source(&self) -> EtaQuotient {
        EtaQuotient::rstar(self.ell as usize).expect("ell is positive")
    }
}
