//! Exhaustive enumeration of noncrossing partitions, noncrossing perfect
//! matchings and refinement pairs of them, with box counting.
//!
//! Elements are `1..=n`. Blocks are stored sorted, and the block list is
//! sorted by least element, so equal partitions have equal representations.
//!
//! A diagram's boxes are counted without drawing it: a box is a block of the
//! coarser partition whose span `[min, max]` is not nested inside the span of
//! another block. Anything under an arc or tie is enclosed by a bounded
//! region and merges with the block above it.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ArbInt;

pub const MAX_PARTITION_N: usize = 10;
pub const MAX_MATCHING_N: usize = 10;
pub const MAX_DOUBLE_N: usize = 9;
pub const MAX_MATCHING_DOUBLE_N: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NoncrossingPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl NoncrossingPartition {
    /// Validates that `blocks` partition `1..=n` without crossings.
    pub fn from_blocks(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut labels = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::Partition("empty block".into()));
            }
            for &e in block {
                if e == 0 || e > n {
                    return Err(Error::Partition(format!("element {e} outside 1..={n}")));
                }
                if labels[e - 1] != usize::MAX {
                    return Err(Error::Partition(format!("element {e} appears twice")));
                }
                labels[e - 1] = b;
            }
        }
        if labels.contains(&usize::MAX) {
            return Err(Error::Partition(
                "blocks do not cover the ground set".into(),
            ));
        }
        let blocks = blocks_from_labels(&labels);
        if !is_noncrossing(&blocks) {
            return Err(Error::Partition("partition has crossing arcs".into()));
        }
        Ok(Self { n, blocks })
    }

    /// All singletons.
    pub fn discrete(n: usize) -> Self {
        Self {
            n,
            blocks: (1..=n).map(|e| vec![e]).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Standard arcs: consecutive elements within each block.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        arcs_of(&self.blocks)
    }

    /// `[min, max]` of every block.
    pub fn spans(&self) -> Vec<(usize, usize)> {
        self.blocks.iter().map(|b| (b[0], b[b.len() - 1])).collect()
    }

    pub fn is_discrete(&self) -> bool {
        self.blocks.len() == self.n
    }

    /// Whether every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &NoncrossingPartition) -> bool {
        if self.n != other.n {
            return false;
        }
        let labels = labels_of(other);
        self.blocks
            .iter()
            .all(|block| block.iter().all(|&e| labels[e - 1] == labels[block[0] - 1]))
    }

    /// Every noncrossing partition that `self` refines, itself included.
    pub fn coarsenings(&self) -> Vec<NoncrossingPartition> {
        let mut out = Vec::new();
        for_each_rgs(self.blocks.len(), |groups| {
            let mut labels = vec![0; self.n];
            for (block, &g) in self.blocks.iter().zip(groups) {
                for &e in block {
                    labels[e - 1] = g;
                }
            }
            let blocks = blocks_from_labels(&labels);
            if is_noncrossing(&blocks) {
                out.push(NoncrossingPartition { n: self.n, blocks });
            }
        });
        out
    }
}

impl fmt::Display for NoncrossingPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return f.write_str("[]");
        }
        for block in &self.blocks {
            f.write_str("[")?;
            for (i, e) in block.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

/// A noncrossing partition of `1..=2n` into pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching(NoncrossingPartition);

impl Matching {
    pub fn new(partition: NoncrossingPartition) -> Result<Self> {
        if !partition.n.is_multiple_of(2) || partition.blocks.iter().any(|b| b.len() != 2) {
            return Err(Error::Partition(format!(
                "{partition} is not a perfect matching"
            )));
        }
        Ok(Matching(partition))
    }

    pub fn arc_count(&self) -> usize {
        self.0.blocks.len()
    }

    pub fn partition(&self) -> &NoncrossingPartition {
        &self.0
    }

    pub fn into_partition(self) -> NoncrossingPartition {
        self.0
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A pair `(p1, p2)` of noncrossing partitions with `p1` refining `p2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DoublePartition {
    p1: NoncrossingPartition,
    p2: NoncrossingPartition,
    box_count: usize,
}

impl DoublePartition {
    pub fn new(p1: NoncrossingPartition, p2: NoncrossingPartition) -> Result<Self> {
        if !p1.refines(&p2) {
            return Err(Error::Partition(format!("{p1} does not refine {p2}")));
        }
        Ok(Self::from_refinement(p1, p2))
    }

    /// The pair `(p, p)`: a plain diagram with no ties.
    pub fn reflexive(p: NoncrossingPartition) -> Self {
        Self::from_refinement(p.clone(), p)
    }

    fn from_refinement(p1: NoncrossingPartition, p2: NoncrossingPartition) -> Self {
        let box_count = outermost_blocks(&p2.blocks);
        Self { p1, p2, box_count }
    }

    pub fn p1(&self) -> &NoncrossingPartition {
        &self.p1
    }

    pub fn p2(&self) -> &NoncrossingPartition {
        &self.p2
    }

    pub fn n(&self) -> usize {
        self.p1.n
    }

    pub fn box_count(&self) -> usize {
        self.box_count
    }

    pub fn is_reflexive(&self) -> bool {
        self.p1 == self.p2
    }

    /// Ties for display only: within each `p2` block, one tie between each
    /// pair of consecutive `p1` sub-blocks (ordered by least element), joining
    /// their closest endpoints. Box counting never looks at these.
    pub fn display_ties(&self) -> Vec<(usize, usize)> {
        let mut ties = Vec::new();
        for outer in &self.p2.blocks {
            let inner: Vec<&Vec<usize>> = self
                .p1
                .blocks
                .iter()
                .filter(|b| outer.binary_search(&b[0]).is_ok())
                .collect();
            for pair in inner.windows(2) {
                let (a, b) = (pair[0], pair[1]);
                let candidates = [a[0], a[a.len() - 1]];
                let targets = [b[0], b[b.len() - 1]];
                let best = candidates
                    .iter()
                    .flat_map(|&x| targets.iter().map(move |&y| (x.min(y), x.max(y))))
                    .min_by_key(|&(x, y)| y - x)
                    .expect("blocks are non-empty");
                ties.push(best);
            }
        }
        ties
    }
}

impl fmt::Display for DoublePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p1, self.p2)
    }
}

/// Number of boxes in the arc-and-tie diagram of `d`.
pub fn box_count(d: &DoublePartition) -> usize {
    d.box_count
}

// Blocks whose span is not strictly inside another block's span.
fn outermost_blocks(blocks: &[Vec<usize>]) -> usize {
    let spans: Vec<(usize, usize)> = blocks.iter().map(|b| (b[0], b[b.len() - 1])).collect();
    spans
        .iter()
        .filter(|&&(lo, hi)| !spans.iter().any(|&(a, b)| a < lo && hi < b))
        .count()
}

fn arcs_of(blocks: &[Vec<usize>]) -> Vec<(usize, usize)> {
    blocks
        .iter()
        .flat_map(|b| b.windows(2).map(|w| (w[0], w[1])))
        .collect()
}

fn is_noncrossing(blocks: &[Vec<usize>]) -> bool {
    let arcs = arcs_of(blocks);
    !arcs
        .iter()
        .any(|&(a, b)| arcs.iter().any(|&(c, d)| a < c && c < b && b < d))
}

fn labels_of(p: &NoncrossingPartition) -> Vec<usize> {
    let mut labels = vec![0; p.n];
    for (i, block) in p.blocks.iter().enumerate() {
        for &e in block {
            labels[e - 1] = i;
        }
    }
    labels
}

// Canonical blocks from arbitrary labels: scanning elements in order yields
// sorted blocks listed by least element.
fn blocks_from_labels(labels: &[usize]) -> Vec<Vec<usize>> {
    let mut index: BTreeMap<usize, usize> = BTreeMap::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for (i, &label) in labels.iter().enumerate() {
        let slot = *index.entry(label).or_insert_with(|| {
            blocks.push(Vec::new());
            blocks.len() - 1
        });
        blocks[slot].push(i + 1);
    }
    blocks
}

/// Calls `f` on every restricted growth string of length `n`, in
/// lexicographic order. For `n = 0` that is the single empty string.
pub fn for_each_rgs<F: FnMut(&[usize])>(n: usize, mut f: F) {
    let mut a = vec![0usize; n];
    // prefix_max[i] = max(a[0..i]); a[i] may be at most prefix_max[i] + 1
    let mut prefix_max = vec![0usize; n];
    loop {
        f(&a);
        let Some(i) = (1..n).rev().find(|&i| a[i] <= prefix_max[i]) else {
            return;
        };
        a[i] += 1;
        for j in i + 1..n {
            a[j] = 0;
            prefix_max[j] = prefix_max[j - 1].max(a[j - 1]);
        }
    }
}

pub fn enumerate_noncrossing_partitions(n: usize) -> Result<Vec<NoncrossingPartition>> {
    check_limit(Family::Partitions, n)?;
    Ok(noncrossing_partitions(n))
}

fn noncrossing_partitions(n: usize) -> Vec<NoncrossingPartition> {
    let mut out = Vec::new();
    for_each_rgs(n, |rgs| {
        let blocks = blocks_from_labels(rgs);
        if is_noncrossing(&blocks) {
            out.push(NoncrossingPartition { n, blocks });
        }
    });
    out
}

/// Noncrossing perfect matchings of `1..=2n`, sorted by block list.
pub fn enumerate_noncrossing_matchings(n: usize) -> Result<Vec<Matching>> {
    check_limit(Family::Matchings, n)?;
    Ok(noncrossing_matchings(n))
}

fn noncrossing_matchings(n: usize) -> Vec<Matching> {
    let mut out: Vec<Matching> = pairings(1, 2 * n + 1)
        .into_iter()
        .map(|pairs| {
            let mut blocks: Vec<Vec<usize>> = pairs.into_iter().map(|(a, b)| vec![a, b]).collect();
            blocks.sort();
            Matching(NoncrossingPartition { n: 2 * n, blocks })
        })
        .collect();
    out.sort();
    out
}

// Noncrossing pairings of lo..hi: lo pairs with some m, leaving lo+1..m and
// m+1..hi to be paired independently.
fn pairings(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
    if lo >= hi {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for m in (lo + 1..hi).step_by(2) {
        let inside = pairings(lo + 1, m);
        let outside = pairings(m + 1, hi);
        for a in &inside {
            for b in &outside {
                let mut pairs = Vec::with_capacity(1 + a.len() + b.len());
                pairs.push((lo, m));
                pairs.extend_from_slice(a);
                pairs.extend_from_slice(b);
                out.push(pairs);
            }
        }
    }
    out
}

pub fn enumerate_double_partitions(n: usize) -> Result<Vec<DoublePartition>> {
    check_limit(Family::DoublePartitions, n)?;
    Ok(noncrossing_partitions(n)
        .into_iter()
        .flat_map(|p1| {
            p1.coarsenings()
                .into_iter()
                .map(move |p2| DoublePartition::from_refinement(p1.clone(), p2))
        })
        .collect())
}

pub fn enumerate_matching_double_partitions(n: usize) -> Result<Vec<DoublePartition>> {
    check_limit(Family::MatchingDoubles, n)?;
    Ok(noncrossing_matchings(n)
        .into_iter()
        .flat_map(|m| {
            let p1 = m.into_partition();
            p1.coarsenings()
                .into_iter()
                .map(move |p2| DoublePartition::from_refinement(p1.clone(), p2))
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Partitions,
    Matchings,
    DoublePartitions,
    MatchingDoubles,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Partitions,
        Family::Matchings,
        Family::DoublePartitions,
        Family::MatchingDoubles,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Family::Partitions => "partitions",
            Family::Matchings => "matchings",
            Family::DoublePartitions => "double-partitions",
            Family::MatchingDoubles => "matching-doubles",
        }
    }

    /// Largest `n` the enumerators accept.
    pub fn limit(&self) -> usize {
        match self {
            Family::Partitions => MAX_PARTITION_N,
            Family::Matchings => MAX_MATCHING_N,
            Family::DoublePartitions => MAX_DOUBLE_N,
            Family::MatchingDoubles => MAX_MATCHING_DOUBLE_N,
        }
    }

    /// Triangle order whose rows give this family's box histograms, if any.
    pub fn triangle_order(&self) -> Option<u32> {
        match self {
            Family::Partitions => None,
            Family::Matchings => Some(2),
            Family::DoublePartitions => Some(3),
            Family::MatchingDoubles => Some(4),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| Error::InvalidParams(format!("unknown family `{s}`")))
    }
}

fn check_limit(family: Family, n: usize) -> Result<()> {
    if n > family.limit() {
        return Err(Error::TooLarge {
            family: family.as_str(),
            n,
            limit: family.limit(),
        });
    }
    Ok(())
}

/// Enumerates a family as diagrams. Plain partitions and matchings come back
/// as reflexive pairs `(p, p)`.
pub fn enumerate_family(family: Family, n: usize) -> Result<Vec<DoublePartition>> {
    Ok(match family {
        Family::Partitions => enumerate_noncrossing_partitions(n)?
            .into_iter()
            .map(DoublePartition::reflexive)
            .collect(),
        Family::Matchings => enumerate_noncrossing_matchings(n)?
            .into_iter()
            .map(|m| DoublePartition::reflexive(m.into_partition()))
            .collect(),
        Family::DoublePartitions => enumerate_double_partitions(n)?,
        Family::MatchingDoubles => enumerate_matching_double_partitions(n)?,
    })
}

pub fn histogram<'a, I>(diagrams: I) -> BTreeMap<usize, ArbInt>
where
    I: IntoIterator<Item = &'a DoublePartition>,
{
    let mut hist: BTreeMap<usize, ArbInt> = BTreeMap::new();
    for d in diagrams {
        *hist.entry(d.box_count).or_insert_with(BigInt::zero) += 1;
    }
    hist
}

/// Box count histogram over an enumerated family.
pub fn box_distribution(n: usize, family: Family) -> Result<BTreeMap<usize, ArbInt>> {
    Ok(histogram(&enumerate_family(family, n)?))
}

/// Initial column of the box-count recurrence for `n > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroBoxReading {
    /// `F(n, 0) = 1` for every `n`, taken literally.
    AsPrinted,
    /// `F(n, 0) = 0` for `n > 0`: no nonempty diagram has zero boxes.
    NoEmptyDiagrams,
}

/// The reading that brute force confirms.
pub const VALIDATED_READING: ZeroBoxReading = ZeroBoxReading::NoEmptyDiagrams;

/// `F[n][k]` = diagrams with `n` points and `k` boxes, from
/// `F(n,k) = sum_{j=k-1}^{n-1} (j-k+2) F(n-1,j)` for `k > 0`.
pub fn f_table(n_max: usize, reading: ZeroBoxReading) -> Vec<Vec<ArbInt>> {
    let mut table: Vec<Vec<ArbInt>> = vec![vec![BigInt::one()]];
    for n in 1..=n_max {
        let prev = &table[n - 1];
        let mut row = Vec::with_capacity(n + 1);
        row.push(match reading {
            ZeroBoxReading::AsPrinted => BigInt::one(),
            ZeroBoxReading::NoEmptyDiagrams => BigInt::zero(),
        });
        for k in 1..=n {
            let cell = (k - 1..n).fold(BigInt::zero(), |acc, j| acc + (j + 2 - k) * &prev[j]);
            row.push(cell);
        }
        table.push(row);
    }
    table
}

/// Compares the recurrence table under `reading` with brute-force box
/// histograms of double partitions for `1 <= n <= n_max`.
pub fn f_recurrence_matches(n_max: usize, reading: ZeroBoxReading) -> Result<bool> {
    check_limit(Family::DoublePartitions, n_max)?;
    let table = f_table(n_max, reading);
    for (n, row) in table.iter().enumerate().skip(1) {
        let hist = box_distribution(n, Family::DoublePartitions)?;
        let matches = row
            .iter()
            .enumerate()
            .all(|(k, f)| hist.get(&k).cloned().unwrap_or_default() == *f);
        if !matches {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn verify_f_recurrence(n_max: usize) -> Result<bool> {
    if n_max == 0 {
        return Err(Error::InvalidParams("n_max must be at least 1".into()));
    }
    f_recurrence_matches(n_max, VALIDATED_READING)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn part(n: usize, blocks: &[&[usize]]) -> NoncrossingPartition {
        NoncrossingPartition::from_blocks(n, blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    fn hist(pairs: &[(usize, i64)]) -> BTreeMap<usize, ArbInt> {
        pairs.iter().map(|&(b, c)| (b, BigInt::from(c))).collect()
    }

    // Bell numbers via the Bell triangle, to check the RGS generator.
    fn bell(n: usize) -> u64 {
        let mut row = vec![1u64];
        for _ in 0..n {
            let mut next = vec![*row.last().unwrap()];
            for &x in &row {
                next.push(next.last().unwrap() + x);
            }
            row = next;
        }
        row[0]
    }

    #[test]
    fn rgs_counts_are_bell_numbers() {
        for n in 0..=8 {
            let mut count = 0u64;
            let mut prev: Option<Vec<usize>> = None;
            for_each_rgs(n, |a| {
                count += 1;
                if let Some(p) = &prev {
                    assert!(p.as_slice() < a);
                }
                prev = Some(a.to_vec());
            });
            assert_eq!(count, bell(n), "n={n}");
        }
    }

    #[test]
    fn from_blocks_validation() {
        assert!(NoncrossingPartition::from_blocks(4, vec![vec![1, 3], vec![2, 4]]).is_err());
        assert!(NoncrossingPartition::from_blocks(3, vec![vec![1, 2]]).is_err());
        assert!(NoncrossingPartition::from_blocks(3, vec![vec![1, 2], vec![2, 3]]).is_err());
        assert!(NoncrossingPartition::from_blocks(3, vec![vec![1, 2], vec![], vec![3]]).is_err());
        let p = part(4, &[&[2, 3], &[4, 1]]);
        assert_eq!(p.blocks(), &[vec![1, 4], vec![2, 3]]);
        assert_eq!(p.to_string(), "[1 4][2 3]");
        assert_eq!(p.arcs(), vec![(1, 4), (2, 3)]);
    }

    #[test]
    fn partitions_small() {
        let empty = enumerate_noncrossing_partitions(0).unwrap();
        assert_eq!(empty.len(), 1);
        assert_eq!(empty[0].to_string(), "[]");
        assert_eq!(enumerate_noncrossing_partitions(3).unwrap().len(), 5);
        let four = enumerate_noncrossing_partitions(4).unwrap();
        assert_eq!(four.len(), 14);
        let crossing = NoncrossingPartition {
            n: 4,
            blocks: vec![vec![1, 3], vec![2, 4]],
        };
        assert!(!four.contains(&crossing));
    }

    #[test]
    fn matchings_small() {
        let one = enumerate_noncrossing_matchings(1).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].to_string(), "[1 2]");
        let two: Vec<String> = enumerate_noncrossing_matchings(2)
            .unwrap()
            .iter()
            .map(|m| m.to_string())
            .collect();
        assert_eq!(two, ["[1 2][3 4]", "[1 4][2 3]"]);
        assert_eq!(enumerate_noncrossing_matchings(5).unwrap().len(), 42);
        assert_eq!(enumerate_noncrossing_matchings(0).unwrap().len(), 1);
    }

    #[test]
    fn matchings_agree_with_filtered_partitions() {
        for n in 0..=4 {
            let filtered: Vec<Matching> = noncrossing_partitions(2 * n)
                .into_iter()
                .filter_map(|p| Matching::new(p).ok())
                .collect();
            let mut filtered = filtered;
            filtered.sort();
            assert_eq!(filtered, noncrossing_matchings(n));
        }
    }

    #[test]
    fn double_partition_counts() {
        assert_eq!(enumerate_double_partitions(0).unwrap().len(), 1);
        assert_eq!(enumerate_double_partitions(1).unwrap().len(), 1);
        assert_eq!(enumerate_double_partitions(3).unwrap().len(), 12);
        assert_eq!(enumerate_double_partitions(4).unwrap().len(), 55);
    }

    #[test]
    fn matching_double_counts() {
        assert_eq!(enumerate_matching_double_partitions(1).unwrap().len(), 1);
        // brute force gives 4: each of the two matchings of [4] has itself and
        // the full block as coarsenings
        assert_eq!(enumerate_matching_double_partitions(2).unwrap().len(), 4);
        assert_eq!(enumerate_matching_double_partitions(3).unwrap().len(), 22);
    }

    #[test]
    fn enumerations_have_no_duplicates() {
        for n in 0..=5 {
            let doubles = enumerate_double_partitions(n).unwrap();
            let set: HashSet<_> = doubles.iter().collect();
            assert_eq!(set.len(), doubles.len());
            for d in &doubles {
                assert!(d.p1().refines(d.p2()));
            }
        }
    }

    #[test]
    fn reflexive_pairs_present() {
        let doubles = enumerate_double_partitions(4).unwrap();
        for p in noncrossing_partitions(4) {
            assert!(doubles.iter().any(|d| d.p1() == &p && d.p2() == &p));
        }
    }

    #[test]
    fn box_count_examples() {
        for n in 1..6 {
            let d = DoublePartition::reflexive(NoncrossingPartition::discrete(n));
            assert_eq!(box_count(&d), n);
        }
        let nested = DoublePartition::reflexive(part(4, &[&[1, 4], &[2, 3]]));
        assert_eq!(box_count(&nested), 1);
        let side_by_side = DoublePartition::reflexive(part(4, &[&[1, 2], &[3, 4]]));
        assert_eq!(box_count(&side_by_side), 2);
    }

    #[test]
    fn box_count_bounds() {
        for n in 1..=5 {
            for d in enumerate_double_partitions(n).unwrap() {
                let b = d.box_count();
                assert!((1..=n).contains(&b));
                assert_eq!(b == n, d.p1().is_discrete() && d.p2().is_discrete(), "{d}");
            }
        }
    }

    #[test]
    fn refinement_rejected() {
        let coarse = part(3, &[&[1, 2], &[3]]);
        let fine = NoncrossingPartition::discrete(3);
        assert!(DoublePartition::new(fine.clone(), coarse.clone()).is_ok());
        assert!(DoublePartition::new(coarse, fine).is_err());
    }

    #[test]
    fn distributions_small() {
        assert_eq!(
            box_distribution(2, Family::Matchings).unwrap(),
            hist(&[(1, 1), (2, 1)])
        );
        assert_eq!(
            box_distribution(2, Family::DoublePartitions).unwrap(),
            hist(&[(1, 2), (2, 1)])
        );
        assert_eq!(
            box_distribution(3, Family::DoublePartitions).unwrap(),
            hist(&[(1, 7), (2, 4), (3, 1)])
        );
    }

    #[test]
    fn limits_enforced() {
        assert!(matches!(
            enumerate_double_partitions(MAX_DOUBLE_N + 1),
            Err(Error::TooLarge { .. })
        ));
        assert!(enumerate_noncrossing_matchings(MAX_MATCHING_N + 1).is_err());
        assert!(enumerate_matching_double_partitions(MAX_MATCHING_DOUBLE_N + 1).is_err());
        assert!(enumerate_noncrossing_partitions(MAX_PARTITION_N + 1).is_err());
    }

    #[test]
    fn f_recurrence_readings() {
        assert!(verify_f_recurrence(1).unwrap());
        assert!(verify_f_recurrence(4).unwrap());
        assert!(!f_recurrence_matches(4, ZeroBoxReading::AsPrinted).unwrap());
        assert!(verify_f_recurrence(0).is_err());
    }

    #[test]
    fn display_ties_join_sub_blocks() {
        let p1 = part(4, &[&[1], &[2, 3], &[4]]);
        let p2 = part(4, &[&[1, 4], &[2, 3]]);
        let d = DoublePartition::new(p1, p2).unwrap();
        assert_eq!(d.display_ties(), vec![(1, 4)]);
        assert_eq!(d.to_string(), "[1][2 3][4]/[1 4][2 3]");
    }

    #[test]
    fn family_names() {
        for f in Family::ALL {
            assert_eq!(f.as_str().parse::<Family>().unwrap(), f);
        }
        assert!("trees".parse::<Family>().is_err());
    }
}
