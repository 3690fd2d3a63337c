//! Block membership for symmetric groups via the Nakayama criterion: two
//! characters lie in the same p-block iff their partitions have the same
//! p-core. The principal block of `S_n` is the one whose core is the row
//! `(n mod p)`.

use std::collections::BTreeSet;

use crate::degree::degree_valuation;
use crate::factored::ArithError;
use crate::partition::{partitions_of, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockLabel {
    pub core: Partition,
    pub prime: u64,
}

pub fn block_label(lambda: &Partition, p: u64) -> BlockLabel {
    BlockLabel {
        core: lambda.p_core(p as usize),
        prime: p,
    }
}

/// Core of the principal p-block of `S_n`: the row `(n mod p)`. When `p > n`
/// this is `(n)` itself and the block holds only the trivial character.
pub fn principal_core(n: usize, p: u64) -> Partition {
    Partition::row(n % p as usize)
}

pub fn principal_block_contains(lambda: &Partition, p: u64) -> bool {
    block_label(lambda, p).core == principal_core(lambda.size(), p)
}

pub fn principal_block_members(n: usize, p: u64) -> BTreeSet<Partition> {
    partitions_of(n)
        .filter(|lam| principal_block_contains(lam, p))
        .collect()
}

/// `Irr_{p'}(B_p(S_n))` as partition labels.
pub fn irr_p_prime_principal(n: usize, p: u64) -> Result<BTreeSet<Partition>, ArithError> {
    let mut out = BTreeSet::new();
    for lam in partitions_of(n) {
        if principal_block_contains(&lam, p) && degree_valuation(&lam, p)? == 0 {
            out.insert(lam);
        }
    }
    Ok(out)
}
