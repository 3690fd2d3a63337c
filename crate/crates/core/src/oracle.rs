//! Brute-force ground truth over all partitions of `n`.
//!
//! Nothing here calls into the witness construction: block membership and
//! degree valuations are recomputed per partition from cores and hooks.
//! [`cross_validate`] is the one place the two meet.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::block::principal_block_contains;
use crate::degree::degree_valuation;
use crate::factored::{is_prime, ArithError};
use crate::params::ParamError;
use crate::partition::{partitions_of, Partition};
use crate::witness::{construct_witness, CaseId, Witness, WitnessError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupKind {
    /// The symmetric group.
    Sn,
    /// The alternating group, seen through characters of `S_n` labelled by
    /// non-self-conjugate partitions (those restrict irreducibly).
    An,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupKind::Sn => "sn",
            GroupKind::An => "an",
        })
    }
}

impl FromStr for GroupKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "sn" | "s" => Ok(GroupKind::Sn),
            "an" | "a" => Ok(GroupKind::An),
            other => Err(format!("unknown group kind {other:?} (expected sn or an)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub group_kind: GroupKind,
    pub n: u64,
    pub p: u64,
    pub q: u64,
    /// For the cross-divisibility check: some witness exists on either side.
    /// For the set-equality check: the two sets differ.
    pub condition_holds: bool,
    /// Members of `Irr_{p'}(B_p)` with degree divisible by `q`.
    pub witnesses_p_block: BTreeSet<Partition>,
    /// Members of `Irr_{q'}(B_q)` with degree divisible by `p`.
    pub witnesses_q_block: BTreeSet<Partition>,
    /// `Irr_{p'}(B_p(S_n))` as partition labels.
    pub set_b_p: BTreeSet<Partition>,
    pub set_b_q: BTreeSet<Partition>,
    pub sets_equal: bool,
}

impl ConjectureReport {
    /// Equal p'- and q'-sets for distinct primes.
    pub fn set_violation(&self) -> bool {
        self.sets_equal && self.p != self.q
    }

    pub fn witness_count(&self) -> usize {
        self.witnesses_p_block.len() + self.witnesses_q_block.len()
    }
}

fn check_primes(n: u64, p: u64, q: u64) -> Result<(), ParamError> {
    for x in [p, q] {
        if !is_prime(x) {
            return Err(ParamError::NotPrime(x));
        }
    }
    if p == q {
        return Err(ParamError::SamePrime(p));
    }
    for x in [p, q] {
        if x > n {
            return Err(ParamError::PrimeExceedsN { p: x, n });
        }
    }
    Ok(())
}

/// Per-partition facts needed for one `(p, q)` pair.
struct Row {
    partition: Partition,
    self_conjugate: bool,
    in_block: [bool; 2],
    valuation: [u32; 2],
}

fn rows(n: u64, primes: [u64; 2]) -> Result<Vec<Row>, ArithError> {
    partitions_of(n as usize)
        .map(|lam| {
            Ok(Row {
                self_conjugate: lam.is_self_conjugate(),
                in_block: primes.map(|p| principal_block_contains(&lam, p)),
                valuation: [
                    degree_valuation(&lam, primes[0])?,
                    degree_valuation(&lam, primes[1])?,
                ],
                partition: lam,
            })
        })
        .collect()
}

fn build_report(n: u64, p: u64, q: u64, kind: GroupKind) -> Result<ConjectureReport, OracleError> {
    check_primes(n, p, q)?;
    let rows = rows(n, [p, q])?;
    let mut report = ConjectureReport {
        group_kind: kind,
        n,
        p,
        q,
        condition_holds: false,
        witnesses_p_block: BTreeSet::new(),
        witnesses_q_block: BTreeSet::new(),
        set_b_p: BTreeSet::new(),
        set_b_q: BTreeSet::new(),
        sets_equal: false,
    };
    for row in rows {
        let restricts = kind == GroupKind::Sn || !row.self_conjugate;
        if row.in_block[0] && row.valuation[0] == 0 {
            report.set_b_p.insert(row.partition.clone());
            if row.valuation[1] > 0 && restricts {
                report.witnesses_p_block.insert(row.partition.clone());
            }
        }
        if row.in_block[1] && row.valuation[1] == 0 {
            report.set_b_q.insert(row.partition.clone());
            if row.valuation[0] > 0 && restricts {
                report.witnesses_q_block.insert(row.partition);
            }
        }
    }
    report.sets_equal = report.set_b_p == report.set_b_q;
    Ok(report)
}

/// Exhaustive witness sets: p-block side first, then q-block side.
pub fn witness_sets(
    n: u64,
    p: u64,
    q: u64,
    kind: GroupKind,
) -> Result<(BTreeSet<Partition>, BTreeSet<Partition>), OracleError> {
    let r = build_report(n, p, q, kind)?;
    Ok((r.witnesses_p_block, r.witnesses_q_block))
}

/// Holds iff some character in `Irr_{p'}(B_p)` has degree divisible by `q`
/// or some character in `Irr_{q'}(B_q)` has degree divisible by `p`.
pub fn check_conj_c(
    n: u64,
    p: u64,
    q: u64,
    kind: GroupKind,
) -> Result<ConjectureReport, OracleError> {
    let mut r = build_report(n, p, q, kind)?;
    r.condition_holds = r.witness_count() > 0;
    Ok(r)
}

/// Compares `Irr_{p'}(B_p(S_n))` with `Irr_{q'}(B_q(S_n))`.
pub fn check_conj_b(n: u64, p: u64, q: u64) -> Result<ConjectureReport, OracleError> {
    let mut r = build_report(n, p, q, GroupKind::Sn)?;
    r.condition_holds = !r.set_violation();
    Ok(r)
}

/// The witness constructor's answer for `(n, p, q)` next to the oracle's.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossValidation {
    pub n: u64,
    pub p: u64,
    pub q: u64,
    pub constructor: Result<Witness, WitnessError>,
    /// `Some(true)` iff the constructed witness is in the oracle's set for
    /// its host prime; `None` when nothing was constructed.
    pub oracle_agrees: Option<bool>,
    /// The oracle's own existence verdict (symmetric group).
    pub oracle_condition_holds: bool,
}

impl CrossValidation {
    pub fn case_id(&self) -> Option<CaseId> {
        self.constructor.as_ref().ok().map(Witness::case_id)
    }
}

pub fn cross_validate(n: u64, p: u64, q: u64) -> Result<CrossValidation, OracleError> {
    let report = check_conj_c(n, p, q, GroupKind::Sn)?;
    let constructor = construct_witness(n, p, q);
    if let Err(WitnessError::Params(e)) = &constructor {
        return Err(e.clone().into());
    }
    let oracle_agrees = constructor.as_ref().ok().map(|w| {
        let set = if w.host_prime() == p {
            &report.witnesses_p_block
        } else {
            &report.witnesses_q_block
        };
        set.contains(&w.partition)
    });
    Ok(CrossValidation {
        n,
        p,
        q,
        constructor,
        oracle_agrees,
        oracle_condition_holds: report.condition_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hook9() -> Partition {
        Partition::new(vec![2, 1, 1, 1, 1, 1, 1, 1]).unwrap()
    }

    #[test]
    fn nine_three_two() {
        let (wp, _) = witness_sets(9, 3, 2, GroupKind::Sn).unwrap();
        assert!(wp.contains(&hook9()));
        let (wp, _) = witness_sets(9, 3, 2, GroupKind::An).unwrap();
        assert!(wp.contains(&hook9()));
        assert!(
            check_conj_c(9, 3, 2, GroupKind::Sn)
                .unwrap()
                .condition_holds
        );
        assert!(
            check_conj_c(9, 3, 2, GroupKind::An)
                .unwrap()
                .condition_holds
        );
    }

    #[test]
    fn small_n_computes_without_claims() {
        let r = check_conj_c(4, 3, 2, GroupKind::Sn).unwrap();
        assert!(r.witnesses_p_block.is_subset(&r.set_b_p));
        assert!(r.witnesses_q_block.is_subset(&r.set_b_q));
    }

    #[test]
    fn set_comparison() {
        let r = check_conj_b(9, 3, 2).unwrap();
        assert!(!r.sets_equal);
        assert!(r.condition_holds);
        assert!(!check_conj_b(12, 3, 2).unwrap().sets_equal);
        assert_eq!(
            check_conj_b(9, 3, 3),
            Err(OracleError::Params(ParamError::SamePrime(3)))
        );
    }

    #[test]
    fn an_mode_drops_self_conjugate() {
        for n in 9..=14 {
            let s = check_conj_c(n, 3, 2, GroupKind::Sn).unwrap();
            let a = check_conj_c(n, 3, 2, GroupKind::An).unwrap();
            assert!(a.witnesses_p_block.is_subset(&s.witnesses_p_block));
            assert!(a.witnesses_p_block.iter().all(|l| !l.is_self_conjugate()));
            let dropped: Vec<_> = s
                .witnesses_p_block
                .difference(&a.witnesses_p_block)
                .collect();
            assert!(dropped.iter().all(|l| l.is_self_conjugate()));
        }
    }

    #[test]
    fn cross_validation_examples() {
        let cv = cross_validate(9, 3, 2).unwrap();
        assert_eq!(cv.oracle_agrees, Some(true));
        assert_eq!(cv.case_id(), Some(CaseId::IA));

        let cv = cross_validate(11, 7, 5).unwrap();
        assert!(matches!(
            cv.constructor,
            Err(WitnessError::AbelianSylowDeferred { m: 1, .. })
        ));
        assert_eq!(cv.oracle_agrees, None);
        assert!(cv.oracle_condition_holds);

        let cv = cross_validate(10, 5, 2).unwrap();
        assert_eq!(cv.oracle_agrees, Some(true));
        assert_eq!(cv.case_id(), Some(CaseId::IIA));

        // primes in the other order: host sets swap, agreement must not change
        assert_eq!(cross_validate(10, 2, 5).unwrap().oracle_agrees, Some(true));
    }

    #[test]
    fn group_kind_parsing() {
        assert_eq!("an".parse::<GroupKind>().unwrap(), GroupKind::An);
        assert_eq!("SN".parse::<GroupKind>().unwrap(), GroupKind::Sn);
        assert!("gl".parse::<GroupKind>().is_err());
    }
}
