//! Integer partitions, Young-diagram combinatorics and the p-abacus.
//!
//! Partitions are stored in descending order. The ascending block notation
//! used when writing case-by-case witnesses, `(1^k, a, b)`, only exists at
//! the [`AscendingSpec`] boundary.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be positive and weakly decreasing: {0:?}")]
    NotPartition(Vec<usize>),
    #[error("beta-set length {length} is smaller than the number of parts {parts}")]
    LengthTooSmall { length: usize, parts: usize },
    #[error("ascending spec is not weakly increasing or has an empty block: {0}")]
    NonMonotoneSpec(String),
    #[error("cannot parse partition literal {0:?}")]
    Parse(String),
}

/// A weakly decreasing sequence of positive parts. The empty sequence is the
/// unique partition of zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
    size: usize,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotPartition(parts));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(parts)
    }

    fn from_sorted(parts: Vec<usize>) -> Self {
        let size = parts.iter().sum();
        Self { parts, size }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The one-row partition `(n)`; `(0)` is the empty partition.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self::from_sorted(vec![n])
        }
    }

    pub fn column(n: usize) -> Self {
        Self::from_sorted(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Self {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|i| self.parts.iter().take_while(|&&x| x >= i).count())
            .collect();
        Self::from_sorted(parts)
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }

    /// Hook lengths of all cells, row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size);
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                hooks.push((row - j - 1) + (conj.parts[j] - i - 1) + 1);
            }
        }
        hooks
    }

    /// First-column hook lengths of `self` padded with zeros to `length` rows:
    /// `beta_i = lambda_i + length - i`, strictly decreasing.
    pub fn beta_set(&self, length: usize) -> Result<Vec<usize>, PartitionError> {
        if length < self.len() {
            return Err(PartitionError::LengthTooSmall {
                length,
                parts: self.len(),
            });
        }
        Ok((0..length)
            .map(|i| self.parts.get(i).copied().unwrap_or(0) + length - 1 - i)
            .collect())
    }

    /// Inverse of [`Partition::beta_set`]. Accepts the beads in any order;
    /// they must be distinct.
    pub fn from_beta_set(beta: &[usize]) -> Self {
        let mut sorted = beta.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        debug_assert!(sorted.windows(2).all(|w| w[0] > w[1]), "beads collide");
        let length = sorted.len();
        let parts = sorted
            .iter()
            .enumerate()
            .map(|(i, &b)| b - (length - 1 - i))
            .filter(|&x| x > 0)
            .collect();
        Self::from_sorted(parts)
    }

    /// The p-core, read off the abacus.
    pub fn p_core(&self, p: usize) -> Self {
        Abacus::new(self, p).core()
    }

    /// The p-quotient, one partition per runner.
    pub fn p_quotient(&self, p: usize) -> Vec<Self> {
        Abacus::new(self, p).quotient()
    }

    /// Removes the rim hook attached to cell `(row, col)` (0-based).
    /// Returns `None` if the cell is outside the diagram.
    pub fn remove_rim_hook(&self, row: usize, col: usize) -> Option<Self> {
        if row >= self.len() || col >= self.parts[row] {
            return None;
        }
        let leg = self.conjugate().parts[col] - row - 1;
        let mut parts = self.parts.clone();
        for (dst, &below) in parts[row..row + leg].iter_mut().zip(&self.parts[row + 1..]) {
            *dst = below - 1;
        }
        parts[row + leg] = col;
        Some(Self::from_unsorted(parts))
    }
}

impl fmt::Display for Partition {
    /// Descending literal `[a1,a2,...]`, with `[]` for the empty partition.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Accepts either the descending literal `[4,3,1,1]` or ascending block
    /// notation `(1^2,3,4)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.starts_with('(') {
            return t.parse::<AscendingSpec>()?.to_partition();
        }
        let inner = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(|| PartitionError::Parse(s.to_string()))?;
        if inner.trim().is_empty() {
            return Ok(Self::empty());
        }
        let parts = inner
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PartitionError::Parse(s.to_string()))?;
        Self::new(parts)
    }
}

/// A p-abacus for a partition: its beta-set laid out on `p` runners.
#[derive(Debug, Clone)]
pub struct Abacus {
    p: usize,
    length: usize,
    beads: Vec<Vec<usize>>,
}

impl Abacus {
    /// Uses the smallest multiple of `p` that is at least the number of parts.
    pub fn new(lambda: &Partition, p: usize) -> Self {
        assert!(p >= 2, "abacus needs at least two runners");
        let length = lambda.len().div_ceil(p) * p;
        Self::with_length(lambda, p, length).expect("length covers all parts")
    }

    /// Any `length >= lambda.len()` is accepted. The core does not depend on
    /// it; the quotient is only rotated.
    pub fn with_length(
        lambda: &Partition,
        p: usize,
        length: usize,
    ) -> Result<Self, PartitionError> {
        assert!(p >= 2, "abacus needs at least two runners");
        let beta = lambda.beta_set(length)?;
        let mut beads = vec![Vec::new(); p];
        for b in beta {
            beads[b % p].push(b / p);
        }
        for runner in &mut beads {
            runner.sort_unstable();
        }
        Ok(Self { p, length, beads })
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// Slide every bead as far up its runner as it goes.
    pub fn core(&self) -> Partition {
        let beta: Vec<usize> = self
            .beads
            .iter()
            .enumerate()
            .flat_map(|(i, runner)| (0..runner.len()).map(move |k| i + k * self.p))
            .collect();
        Partition::from_beta_set(&beta)
    }

    /// Runner `i` read as a beta-set gives the i-th quotient component.
    pub fn quotient(&self) -> Vec<Partition> {
        self.beads
            .iter()
            .map(|r| Partition::from_beta_set(r))
            .collect()
    }
}

/// Ascending block notation `(1^k, a, b, ...)`: (part value, multiplicity)
/// pairs with weakly increasing values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AscendingSpec {
    blocks: Vec<(usize, usize)>,
}

impl AscendingSpec {
    pub fn new(blocks: Vec<(usize, usize)>) -> Self {
        Self { blocks }
    }

    /// Starts a spec with `k` ones. `k = 0` is allowed here and only here.
    pub fn ones(k: usize) -> Self {
        Self {
            blocks: vec![(1, k)],
        }
    }

    /// Appends a single part.
    pub fn then(mut self, part: usize) -> Self {
        self.blocks.push((part, 1));
        self
    }

    pub fn blocks(&self) -> &[(usize, usize)] {
        &self.blocks
    }

    pub fn sum(&self) -> usize {
        self.blocks.iter().map(|&(v, m)| v * m).sum()
    }

    /// Canonical descending partition with the same multiset of parts.
    pub fn to_partition(&self) -> Result<Partition, PartitionError> {
        if self.blocks.is_empty() {
            return Err(PartitionError::NonMonotoneSpec(self.to_string()));
        }
        for (i, &(value, mult)) in self.blocks.iter().enumerate() {
            let leading_ones = i == 0 && value == 1;
            if value == 0 || (mult == 0 && !leading_ones) {
                return Err(PartitionError::NonMonotoneSpec(self.to_string()));
            }
        }
        if self.blocks.windows(2).any(|w| w[0].0 > w[1].0) {
            return Err(PartitionError::NonMonotoneSpec(self.to_string()));
        }
        let mut parts: Vec<usize> = self
            .blocks
            .iter()
            .flat_map(|&(v, m)| std::iter::repeat_n(v, m))
            .collect();
        parts.reverse();
        Ok(Partition::from_sorted(parts))
    }
}

impl fmt::Display for AscendingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, &(v, m)) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if m == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{m}")?;
            }
        }
        f.write_str(")")
    }
}

impl FromStr for AscendingSpec {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || PartitionError::Parse(s.to_string());
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(bad)?;
        let mut blocks = Vec::new();
        for tok in inner.split(',') {
            let tok = tok.trim();
            let (v, m) = match tok.split_once('^') {
                Some((v, m)) => (v.trim(), m.trim()),
                None => (tok, "1"),
            };
            blocks.push((v.parse().map_err(|_| bad())?, m.parse().map_err(|_| bad())?));
        }
        Ok(Self { blocks })
    }
}

/// All partitions of `n`, lexicographically decreasing: `(n)` first,
/// `(1^n)` last.
pub fn partitions_of(n: usize) -> Partitions {
    Partitions {
        current: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        // Successor: lower the rightmost part > 1 by one and refill greedily.
        if let Some(k) = cur.iter().rposition(|&x| x > 1) {
            let mut next = cur[..=k].to_vec();
            next[k] -= 1;
            let cap = next[k];
            let mut rest: usize = cur[k + 1..].iter().sum::<usize>() + 1;
            while rest > 0 {
                let take = rest.min(cap);
                next.push(take);
                rest -= take;
            }
            self.current = Some(next);
        }
        Some(Partition::from_sorted(cur))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn hook_shape_9() -> Partition {
        pt(&[2, 1, 1, 1, 1, 1, 1, 1])
    }

    #[test]
    fn rejects_malformed_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::new(vec![]).unwrap().size(), 0);
    }

    #[test]
    fn enumeration_small() {
        assert_eq!(
            partitions_of(0).collect::<Vec<_>>(),
            vec![Partition::empty()]
        );
        let four: Vec<_> = partitions_of(4).map(|p| p.parts().to_vec()).collect();
        assert_eq!(
            four,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
    }

    #[test]
    fn ascending_specs() {
        let s = AscendingSpec::ones(7).then(2);
        assert_eq!(s.to_partition().unwrap(), hook_shape_9());
        assert_eq!(
            AscendingSpec::ones(2)
                .then(3)
                .then(4)
                .to_partition()
                .unwrap(),
            pt(&[4, 3, 1, 1])
        );
        assert_eq!(
            AscendingSpec::ones(0).then(5).to_partition().unwrap(),
            pt(&[5])
        );
        assert!(matches!(
            AscendingSpec::ones(1).then(4).then(3).to_partition(),
            Err(PartitionError::NonMonotoneSpec(_))
        ));
        assert!(matches!(
            AscendingSpec::new(vec![(1, 2), (3, 0), (4, 1)]).to_partition(),
            Err(PartitionError::NonMonotoneSpec(_))
        ));
        assert!(AscendingSpec::new(vec![]).to_partition().is_err());
    }

    #[test]
    fn ascending_spec_text() {
        let s: AscendingSpec = "(1^7, 2)".parse().unwrap();
        assert_eq!(s, AscendingSpec::ones(7).then(2));
        assert_eq!(s.to_string(), "(1^7,2)");
        assert_eq!("(1^2,3,4)".parse::<Partition>().unwrap(), pt(&[4, 3, 1, 1]));
        assert_eq!("[2,1,1]".parse::<Partition>().unwrap(), pt(&[2, 1, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("2,1".parse::<Partition>().is_err());
    }

    #[test]
    fn conjugates() {
        assert_eq!(pt(&[3, 1]).conjugate(), pt(&[2, 1, 1]));
        assert_eq!(pt(&[2, 2]).conjugate(), pt(&[2, 2]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert!(pt(&[2, 2]).is_self_conjugate());
        assert!(!hook_shape_9().is_self_conjugate());
        assert_eq!(hook_shape_9().conjugate(), pt(&[8, 1]));
        assert!(pt(&[2, 1]).is_self_conjugate());
    }

    #[test]
    fn hooks() {
        let mut h = pt(&[2, 1]).hook_lengths();
        h.sort_unstable();
        assert_eq!(h, vec![1, 1, 3]);
        let mut h = pt(&[2, 2]).hook_lengths();
        h.sort_unstable();
        assert_eq!(h, vec![1, 2, 2, 3]);
        assert_eq!(Partition::row(6).hook_lengths(), vec![6, 5, 4, 3, 2, 1]);
    }

    #[test]
    fn beta_sets() {
        assert_eq!(pt(&[2, 1]).beta_set(2).unwrap(), vec![3, 1]);
        assert_eq!(pt(&[2, 1]).beta_set(3).unwrap(), vec![4, 2, 0]);
        assert_eq!(Partition::empty().beta_set(3).unwrap(), vec![2, 1, 0]);
        assert_eq!(
            pt(&[2, 1]).beta_set(1),
            Err(PartitionError::LengthTooSmall {
                length: 1,
                parts: 2
            })
        );
        assert_eq!(Partition::from_beta_set(&[4, 2, 0]), pt(&[2, 1]));
    }

    #[test]
    fn cores() {
        assert_eq!(Partition::row(4).p_core(3), pt(&[1]));
        assert_eq!(pt(&[2, 1]).p_core(3), Partition::empty());
        assert_eq!(hook_shape_9().p_core(3), Partition::empty());
        assert_eq!(Partition::column(4).p_core(3), pt(&[1]));
        assert_eq!(pt(&[3, 2, 1]).p_core(2), pt(&[3, 2, 1]));
        assert_eq!(pt(&[3, 1]).p_core(2), Partition::empty());
    }

    #[test]
    fn quotients() {
        let q = Partition::row(4).p_quotient(3);
        assert_eq!(q.len(), 3);
        assert_eq!(q.iter().map(Partition::size).sum::<usize>(), 1);
        let core = hook_shape_9().p_core(3);
        assert!(core.p_quotient(3).iter().all(Partition::is_empty));
        assert_eq!(
            pt(&[2, 1])
                .p_quotient(3)
                .iter()
                .map(Partition::size)
                .sum::<usize>(),
            1
        );
        assert_eq!(
            hook_shape_9()
                .p_quotient(3)
                .iter()
                .map(Partition::size)
                .sum::<usize>(),
            3
        );
    }

    #[test]
    fn abacus_length_does_not_move_core() {
        let lam = pt(&[5, 4, 4, 2, 1, 1]);
        let reference = lam.p_core(3);
        for length in lam.len()..lam.len() + 7 {
            let ab = Abacus::with_length(&lam, 3, length).unwrap();
            assert_eq!(ab.core(), reference, "length {length}");
            assert_eq!(ab.length(), length);
        }
    }

    #[test]
    fn rim_hook_removal() {
        assert_eq!(pt(&[2, 1]).remove_rim_hook(0, 0), Some(Partition::empty()));
        assert_eq!(Partition::row(4).remove_rim_hook(0, 1), Some(pt(&[1])));
        assert_eq!(pt(&[3, 3]).remove_rim_hook(0, 1), Some(pt(&[2, 1])));
        assert_eq!(pt(&[3, 3]).remove_rim_hook(2, 0), None);
    }
}
