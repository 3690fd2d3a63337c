//! Explicit witnesses for the cross-divisibility statement on `S_n` / `A_n`:
//! for primes `q < p` dividing `n!` with `n >= 9` and `m = floor(n/p) > 1`,
//! a non-self-conjugate partition whose character lies in the principal
//! block for one prime, has degree prime to that prime, and has degree
//! divisible by the other.
//!
//! The case analysis produces an ordered list of candidate partitions for
//! the active case. Each candidate is then verified from scratch and the
//! first one that passes is returned. Verification never trusts the case
//! analysis, so a wrong branch shows up as [`WitnessError::CaseTreeFalsified`]
//! rather than as a bogus witness.

use std::fmt;

use thiserror::Error;

use crate::block::{block_label, principal_core};
use crate::degree::{degree, degree_valuation};
use crate::factored::{ArithError, FactoredNatural};
use crate::params::{CaseParameters, ParamError};
use crate::partition::{AscendingSpec, Partition, PartitionError};

/// Smallest `n` handled by the case analysis. Smaller symmetric and
/// alternating groups are left to character-table checks.
pub const MIN_N: u64 = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseId {
    IA,
    IB,
    IBFallback,
    IC,
    ICFallback1,
    ICFallback2QOdd,
    ICFallback2Q2,
    IIA,
    IIB,
    IIBFallback,
    IIC,
    IICAlt,
    IICAltQ2,
    IIIA,
    IIIB,
    IIIBAlt1,
    IIIBAlt2,
    IIIBFinal,
}

impl CaseId {
    pub const ALL: [CaseId; 18] = [
        CaseId::IA,
        CaseId::IB,
        CaseId::IBFallback,
        CaseId::IC,
        CaseId::ICFallback1,
        CaseId::ICFallback2QOdd,
        CaseId::ICFallback2Q2,
        CaseId::IIA,
        CaseId::IIB,
        CaseId::IIBFallback,
        CaseId::IIC,
        CaseId::IICAlt,
        CaseId::IICAltQ2,
        CaseId::IIIA,
        CaseId::IIIB,
        CaseId::IIIBAlt1,
        CaseId::IIIBAlt2,
        CaseId::IIIBFinal,
    ];

    pub fn label(self) -> &'static str {
        match self {
            CaseId::IA => "I.a",
            CaseId::IB => "I.b",
            CaseId::IBFallback => "I.b-fallback",
            CaseId::IC => "I.c",
            CaseId::ICFallback1 => "I.c-fallback1",
            CaseId::ICFallback2QOdd => "I.c-fallback2-qodd",
            CaseId::ICFallback2Q2 => "I.c-fallback2-q2",
            CaseId::IIA => "II.a",
            CaseId::IIB => "II.b",
            CaseId::IIBFallback => "II.b-fallback",
            CaseId::IIC => "II.c",
            CaseId::IICAlt => "II.c-alt",
            CaseId::IICAltQ2 => "II.c-alt-q2",
            CaseId::IIIA => "III.a",
            CaseId::IIIB => "III.b",
            CaseId::IIIBAlt1 => "III.b-alt1",
            CaseId::IIIBAlt2 => "III.b-alt2",
            CaseId::IIIBFinal => "III.b-final",
        }
    }

    /// Top-level branch: 1, 2 or 3.
    pub fn branch(self) -> u8 {
        match self {
            CaseId::IA
            | CaseId::IB
            | CaseId::IBFallback
            | CaseId::IC
            | CaseId::ICFallback1
            | CaseId::ICFallback2QOdd
            | CaseId::ICFallback2Q2 => 1,
            CaseId::IIA
            | CaseId::IIB
            | CaseId::IIBFallback
            | CaseId::IIC
            | CaseId::IICAlt
            | CaseId::IICAltQ2 => 2,
            _ => 3,
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A partition proposed by the case analysis, with the prime whose
/// principal block should contain it and the prime that should divide its
/// degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessCandidate {
    pub case_id: CaseId,
    pub spec: AscendingSpec,
    pub host_prime: u64,
    pub divisor_prime: u64,
}

/// A verified witness. Every fact here was recomputed from the partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub candidate: WitnessCandidate,
    /// Position of the candidate in the case's fallback order.
    pub candidate_index: usize,
    pub partition: Partition,
    pub degree: FactoredNatural,
    pub host_valuation: u32,
    pub divisor_valuation: u32,
    pub self_conjugate: bool,
}

impl Witness {
    pub fn case_id(&self) -> CaseId {
        self.candidate.case_id
    }

    pub fn host_prime(&self) -> u64 {
        self.candidate.host_prime
    }

    pub fn divisor_prime(&self) -> u64 {
        self.candidate.divisor_prime
    }
}

/// Why a candidate was rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerificationFailure {
    #[error("spec {spec} sums to {got}, expected {expected}")]
    SpecSumMismatch {
        spec: String,
        expected: u64,
        got: u64,
    },
    #[error("malformed spec: {0}")]
    MalformedSpec(#[from] PartitionError),
    #[error("{prime}-core is {core}, principal core is {expected}")]
    NotInPrincipalBlock {
        prime: u64,
        core: Partition,
        expected: Partition,
    },
    #[error("degree divisible by host prime {prime} (valuation {valuation})")]
    HostDividesDegree { prime: u64, valuation: u32 },
    #[error("degree prime to divisor prime {prime}")]
    DivisorMissing { prime: u64 },
    #[error("partition {0} is self-conjugate")]
    SelfConjugate(Partition),
    #[error("degree arithmetic failed: {0}")]
    Arith(#[from] ArithError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error("small-n: deferred to table methods (n = {n} < {MIN_N})")]
    SmallN { n: u64 },
    #[error("abelian-sylow: m = {m} <= 1 for p = {p}, Sylow p-subgroup is abelian; deferred")]
    AbelianSylowDeferred { m: u64, p: u64 },
    #[error("case-analysis guard violated at {params}: {what}")]
    GuardViolated { params: String, what: String },
    #[error("no candidate verified at {params}: {}", render_failures(.failures))]
    CaseTreeFalsified {
        params: String,
        failures: Vec<(CaseId, String, VerificationFailure)>,
    },
}

impl WitnessError {
    /// Deferrals are expected outcomes, not contradictions.
    pub fn is_deferral(&self) -> bool {
        matches!(
            self,
            Self::SmallN { .. } | Self::AbelianSylowDeferred { .. }
        )
    }

    /// True when the error contradicts the mathematics (or the
    /// implementation of it) rather than the input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Self::GuardViolated { .. } | Self::CaseTreeFalsified { .. }
        )
    }
}

fn render_failures(failures: &[(CaseId, String, VerificationFailure)]) -> String {
    failures
        .iter()
        .map(|(id, spec, f)| format!("{id} {spec}: {f}"))
        .collect::<Vec<_>>()
        .join("; ")
}

fn describe(params: &CaseParameters) -> String {
    format!(
        "(n={}, p={}, q={}, m={}, w={}, r={}, b={})",
        params.n, params.p, params.q, params.m, params.w, params.r, params.b
    )
}

/// Which of the three top-level branches applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// `r > 0`
    One,
    /// `r = 0` and `a_1 q^{t_1} < b_1 p^{s_1}`
    Two,
    /// `r = 0` and `a_1 q^{t_1} > b_1 p^{s_1}`
    Three,
}

pub fn branch(params: &CaseParameters) -> Result<Branch, WitnessError> {
    if params.r > 0 {
        return Ok(Branch::One);
    }
    let (low_q, low_p) = (params.lowest_q_term(), params.lowest_p_term());
    match low_q.cmp(&low_p) {
        std::cmp::Ordering::Less => Ok(Branch::Two),
        std::cmp::Ordering::Greater => Ok(Branch::Three),
        std::cmp::Ordering::Equal => Err(guard(params, "a_1 q^{t_1} = b_1 p^{s_1}")),
    }
}

fn guard(params: &CaseParameters, what: &str) -> WitnessError {
    WitnessError::GuardViolated {
        params: describe(params),
        what: what.to_string(),
    }
}

/// Checks the hypotheses of the case analysis: `n >= 9` and `m > 1`.
fn check_scope(params: &CaseParameters) -> Result<(), WitnessError> {
    if params.n < MIN_N {
        return Err(WitnessError::SmallN { n: params.n });
    }
    if params.m <= 1 {
        return Err(WitnessError::AbelianSylowDeferred {
            m: params.m,
            p: params.p,
        });
    }
    Ok(())
}

/// Ordered candidates for the case selected by `params`.
pub fn candidate_list(params: &CaseParameters) -> Result<Vec<WitnessCandidate>, WitnessError> {
    check_scope(params)?;
    let CaseParameters {
        n,
        p,
        q,
        m,
        w,
        r,
        b,
        ..
    } = *params;
    let mp = params.mp();
    let sub = |x: u64, y: u64, what: &str| {
        x.checked_sub(y)
            .map(|v| v as usize)
            .ok_or_else(|| guard(params, &format!("negative multiplicity in {what}")))
    };
    let (bu, ru) = (b as usize, r as usize);
    let at_p = |case_id, spec| WitnessCandidate {
        case_id,
        spec,
        host_prime: p,
        divisor_prime: q,
    };
    let at_q = |case_id, spec| WitnessCandidate {
        case_id,
        spec,
        host_prime: q,
        divisor_prime: p,
    };

    let mut out = Vec::new();
    match branch(params)? {
        Branch::One => {
            let ones = sub(mp, r + 1, "(1^{mp-r-1}, ...)")?;
            if b == 0 {
                out.push(at_p(CaseId::IA, AscendingSpec::ones(ones).then(1 + ru)));
            } else if r != b {
                let spec = if r < b {
                    AscendingSpec::ones(ones).then(1 + ru).then(bu)
                } else {
                    AscendingSpec::ones(ones).then(1 + bu).then(ru)
                };
                out.push(at_p(CaseId::IB, spec));
                out.push(at_p(
                    CaseId::IBFallback,
                    AscendingSpec::ones(mp as usize).then(bu),
                ));
            } else {
                let wq = w * q;
                if r + 1 >= wq {
                    return Err(guard(params, "r + 1 < wq"));
                }
                out.push(at_p(
                    CaseId::IC,
                    AscendingSpec::ones(ru).then(ru + 1).then(wq as usize - 1),
                ));
                out.push(at_p(
                    CaseId::ICFallback1,
                    AscendingSpec::ones(sub(wq, 2, "(1^{wq-2}, ...)")?)
                        .then(1 + ru)
                        .then(1 + ru),
                ));
                if q != 2 {
                    out.push(at_p(
                        CaseId::ICFallback2QOdd,
                        AscendingSpec::ones(mp as usize).then(ru),
                    ));
                } else {
                    out.push(at_q(
                        CaseId::ICFallback2Q2,
                        AscendingSpec::ones(sub(n, 2, "(1^{n-2}, 2)")?).then(2),
                    ));
                }
            }
        }
        Branch::Two => {
            let low_q = params.lowest_q_term();
            let lq = low_q as usize;
            let ones = sub(mp, low_q + 1, "(1^{mp-a_1q^{t_1}-1}, ...)")?;
            if b == 0 {
                out.push(at_p(CaseId::IIA, AscendingSpec::ones(ones).then(1 + lq)));
            } else if low_q != b {
                let spec = if low_q < b {
                    AscendingSpec::ones(ones).then(1 + lq).then(bu)
                } else {
                    AscendingSpec::ones(ones).then(1 + bu).then(lq)
                };
                out.push(at_p(CaseId::IIB, spec));
                out.push(at_p(
                    CaseId::IIBFallback,
                    AscendingSpec::ones(mp as usize).then(bu),
                ));
            } else {
                out.push(at_p(
                    CaseId::IIC,
                    AscendingSpec::ones(sub(mp, b + 2, "(1^{mp-b-2}, ...)")?)
                        .then(bu + 1)
                        .then(bu + 1),
                ));
                if p == b + 1 && (m - 1) % p == 0 {
                    if params.lowest_p_term() != p {
                        return Err(guard(
                            params,
                            "b_1 p^{s_1} = p when p = b + 1 and p | m - 1",
                        ));
                    }
                    out.push(at_p(
                        CaseId::IICAlt,
                        AscendingSpec::ones(sub(mp, p, "(1^{mp-p}, ...)")?).then(bu + p as usize),
                    ));
                }
                let t2 = params.t2().ok_or_else(|| guard(params, "t_2 exists"))?;
                if q == 2 && t2 == params.t1() + 1 {
                    out.push(at_q(
                        CaseId::IICAltQ2,
                        AscendingSpec::ones(mp as usize - 1).then(bu + 1),
                    ));
                }
            }
        }
        Branch::Three => {
            let low_p = params.lowest_p_term();
            if low_p >= mp {
                return Err(guard(params, "mp != b_1 p^{s_1}"));
            }
            let lp = low_p as usize;
            let ones = sub(mp, low_p + 1, "(1^{mp-b_1p^{s_1}-1}, ...)")?;
            if b == 0 {
                out.push(at_q(CaseId::IIIA, AscendingSpec::ones(ones).then(1 + lp)));
            } else {
                out.push(at_q(
                    CaseId::IIIB,
                    AscendingSpec::ones(ones).then(bu + 1).then(lp),
                ));
                out.push(at_p(
                    CaseId::IIIBAlt1,
                    AscendingSpec::ones(0).then(bu + 1).then(mp as usize - 1),
                ));
                out.push(at_p(
                    CaseId::IIIBAlt2,
                    AscendingSpec::ones(mp as usize).then(bu),
                ));
                out.push(at_q(
                    CaseId::IIIBFinal,
                    AscendingSpec::ones(mp as usize - 1).then(1 + bu),
                ));
            }
        }
    }
    Ok(out)
}

/// Builds the candidate's partition and checks, from scratch, that it lies
/// in the host prime's principal block, has degree prime to the host prime,
/// has degree divisible by the divisor prime, and is not self-conjugate.
pub fn verify_candidate(
    candidate: &WitnessCandidate,
    n: u64,
) -> Result<Witness, VerificationFailure> {
    let got = candidate.spec.sum() as u64;
    if got != n {
        return Err(VerificationFailure::SpecSumMismatch {
            spec: candidate.spec.to_string(),
            expected: n,
            got,
        });
    }
    let partition = candidate.spec.to_partition()?;
    let host = candidate.host_prime;
    let divisor = candidate.divisor_prime;

    let label = block_label(&partition, host);
    let expected = principal_core(partition.size(), host);
    if label.core != expected {
        return Err(VerificationFailure::NotInPrincipalBlock {
            prime: host,
            core: label.core,
            expected,
        });
    }
    let host_valuation = degree_valuation(&partition, host)?;
    if host_valuation != 0 {
        return Err(VerificationFailure::HostDividesDegree {
            prime: host,
            valuation: host_valuation,
        });
    }
    let divisor_valuation = degree_valuation(&partition, divisor)?;
    if divisor_valuation == 0 {
        return Err(VerificationFailure::DivisorMissing { prime: divisor });
    }
    if partition.is_self_conjugate() {
        return Err(VerificationFailure::SelfConjugate(partition));
    }
    let degree = degree(&partition)?;
    debug_assert_eq!(degree.valuation(host), host_valuation);
    debug_assert_eq!(degree.valuation(divisor), divisor_valuation);
    Ok(Witness {
        candidate: candidate.clone(),
        candidate_index: 0,
        partition,
        degree,
        host_valuation,
        divisor_valuation,
        self_conjugate: false,
    })
}

/// First verified candidate for `(n, p, q)`; the primes may come in either
/// order.
pub fn construct_witness(n: u64, p: u64, q: u64) -> Result<Witness, WitnessError> {
    let params = CaseParameters::derive(n, p, q)?;
    construct_witness_from(&params)
}

pub fn construct_witness_from(params: &CaseParameters) -> Result<Witness, WitnessError> {
    let candidates = candidate_list(params)?;
    let mut failures = Vec::new();
    for (index, candidate) in candidates.iter().enumerate() {
        match verify_candidate(candidate, params.n) {
            Ok(mut witness) => {
                witness.candidate_index = index;
                return Ok(witness);
            }
            Err(e) => failures.push((candidate.case_id, candidate.spec.to_string(), e)),
        }
    }
    Err(WitnessError::CaseTreeFalsified {
        params: describe(params),
        failures,
    })
}
