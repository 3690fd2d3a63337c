//! Independent oracles shared by the integration tests. None of these go
//! through the abacus or the witness construction.

#![allow(dead_code)]

use blockwitness::Partition;
use num_bigint::BigUint;

/// Strips rim hooks of length `p` straight off the Young diagram until none
/// is left. Always removes the first one found in row-major order.
pub fn rim_hook_core(lambda: &Partition, p: usize) -> Partition {
    let mut cur = lambda.clone();
    'outer: loop {
        let conj = cur.conjugate();
        for (i, &row) in cur.parts().iter().enumerate() {
            for j in 0..row {
                let hook = (row - j - 1) + (conj.parts()[j] - i - 1) + 1;
                if hook == p {
                    cur = cur.remove_rim_hook(i, j).expect("cell inside diagram");
                    continue 'outer;
                }
            }
        }
        return cur;
    }
}

/// Same stripping, but always takes the last removable hook found.
pub fn rim_hook_core_reverse(lambda: &Partition, p: usize) -> Partition {
    let mut cur = lambda.clone();
    loop {
        let conj = cur.conjugate();
        let mut last = None;
        for (i, &row) in cur.parts().iter().enumerate() {
            for j in 0..row {
                if (row - j - 1) + (conj.parts()[j] - i - 1) + 1 == p {
                    last = Some((i, j));
                }
            }
        }
        match last {
            Some((i, j)) => cur = cur.remove_rim_hook(i, j).unwrap(),
            None => return cur,
        }
    }
}

/// p(0..=n) via Euler's pentagonal recurrence.
pub fn partition_counts(n: usize) -> Vec<u128> {
    let mut p = vec![0i128; n + 1];
    p[0] = 1;
    for i in 1..=n {
        let mut k: i64 = 1;
        let mut acc = 0i128;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > i {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += sign * p[i - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= i {
                acc += sign * p[i - g2];
            }
            k += 1;
        }
        p[i] = acc;
    }
    p.into_iter().map(|x| x as u128).collect()
}

/// Number of `k`-tuples of partitions of total size `m`: the coefficient of
/// x^m in P(x)^k.
pub fn multipartition_count(k: usize, m: usize) -> u128 {
    let p = partition_counts(m);
    let mut poly = vec![0u128; m + 1];
    poly[0] = 1;
    for _ in 0..k {
        let mut next = vec![0u128; m + 1];
        for (i, &a) in poly.iter().enumerate() {
            for (j, &b) in p.iter().enumerate().take(m + 1 - i) {
                next[i + j] += a * b;
            }
        }
        poly = next;
    }
    poly[m]
}

pub fn big_factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, k| acc * k)
}

pub fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n)
        .filter(|&k| (2..k).take_while(|d| d * d <= k).all(|d| k % d != 0))
        .collect()
}

/// Pairs `(p, q)` of primes with `q < p <= n`.
pub fn prime_pairs(n: u64) -> Vec<(u64, u64)> {
    let primes = primes_up_to(n);
    let mut out = Vec::new();
    for &p in &primes {
        for &q in primes.iter().filter(|&&q| q < p) {
            out.push((p, q));
        }
    }
    out
}

/// Counts standard Young tableaux by removing outer corners.
pub fn syt_count(parts: &[usize]) -> BigUint {
    fn go(
        parts: &mut Vec<usize>,
        memo: &mut std::collections::HashMap<Vec<usize>, BigUint>,
    ) -> BigUint {
        if parts.iter().all(|&x| x == 0) {
            return BigUint::from(1u32);
        }
        if let Some(v) = memo.get(parts) {
            return v.clone();
        }
        let mut total = BigUint::from(0u32);
        for i in 0..parts.len() {
            if parts[i] > 0 && (i + 1 == parts.len() || parts[i + 1] < parts[i]) {
                parts[i] -= 1;
                total += go(parts, memo);
                parts[i] += 1;
            }
        }
        memo.insert(parts.clone(), total.clone());
        total
    }
    go(&mut parts.to_vec(), &mut Default::default())
}

/// Fixed default seed for randomized suites, overridable through
/// `BLOCKWITNESS_SEED`.
pub fn seed() -> u64 {
    std::env::var("BLOCKWITNESS_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0x5eed_b10c)
}

pub fn proptest_config(cases: u32) -> proptest::test_runner::Config {
    proptest::test_runner::Config {
        cases,
        rng_seed: proptest::test_runner::RngSeed::Fixed(seed()),
        failure_persistence: None,
        ..proptest::test_runner::Config::default()
    }
}

/// Random partitions with up to `max_parts` parts, each at most `max_part`.
pub fn arb_partition(
    max_part: usize,
    max_parts: usize,
) -> impl proptest::strategy::Strategy<Value = Partition> {
    use proptest::prelude::*;
    proptest::collection::vec(1..=max_part, 0..=max_parts).prop_map(Partition::from_unsorted)
}
