//! Ordered set partitions of `{1..n}` and the poset they form under merging.
//!
//! A block is a `u64` bitmask with element `e` stored in bit `e - 1`, so the
//! ground set is limited to 63 elements. Block order is significant: `1/23`
//! and `23/1` are different partitions.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::limits::{check, Limits, BITMASK_MAX_N};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedPartition {
    n: usize,
    blocks: Vec<u64>,
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        u64::MAX >> (64 - n)
    }
}

/// Elements of a bitmask, ascending, 1-based.
pub fn mask_elements(mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut rest = mask;
    while rest != 0 {
        out.push(rest.trailing_zeros() as usize + 1);
        rest &= rest - 1;
    }
    out
}

fn element_mask(elements: &[usize], n: usize) -> Result<u64> {
    let mut mask = 0u64;
    for &e in elements {
        if e == 0 || e > n {
            return Err(Error::OutOfRange { element: e, n });
        }
        let bit = 1u64 << (e - 1);
        if mask & bit != 0 {
            return Err(Error::Argument(format!("element {e} repeated within a block")));
        }
        mask |= bit;
    }
    Ok(mask)
}

impl OrderedPartition {
    /// Validates that the masks are nonempty, disjoint, and cover `{1..n}`.
    pub fn from_masks(n: usize, blocks: Vec<u64>) -> Result<Self> {
        if n == 0 || n > BITMASK_MAX_N {
            return Err(Error::Argument(format!("ground set size must be in 1..={BITMASK_MAX_N}, got {n}")));
        }
        let full = full_mask(n);
        let mut seen = 0u64;
        for (k, &b) in blocks.iter().enumerate() {
            if b == 0 {
                return Err(Error::Argument(format!("block {} is empty", k + 1)));
            }
            if b & !full != 0 {
                let stray = (b & !full).trailing_zeros() as usize + 1;
                return Err(Error::OutOfRange { element: stray, n });
            }
            if b & seen != 0 {
                let dup = (b & seen).trailing_zeros() as usize + 1;
                return Err(Error::Argument(format!("element {dup} appears in more than one block")));
            }
            seen |= b;
        }
        if seen != full {
            let missing = (full & !seen).trailing_zeros() as usize + 1;
            return Err(Error::Argument(format!("element {missing} is not covered")));
        }
        Ok(OrderedPartition { n, blocks })
    }

    /// Builds from explicit element lists, e.g. `[[2], [1, 3], [4, 5]]`.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let masks = blocks
            .iter()
            .map(|b| element_mask(b, n.min(BITMASK_MAX_N)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_masks(n, masks)
    }

    /// The single-block partition `({1..n})`, bottom of the poset.
    pub fn one_block(n: usize) -> Self {
        assert!((1..=BITMASK_MAX_N).contains(&n));
        OrderedPartition { n, blocks: vec![full_mask(n)] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn masks(&self) -> &[u64] {
        &self.blocks
    }

    /// Elements of each block, ascending within a block.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        self.blocks.iter().map(|&b| mask_elements(b)).collect()
    }

    pub fn is_singleton(&self) -> bool {
        self.blocks.len() == self.n
    }

    /// `(b'_1, .., b'_r)` where `b'_k` is the union of the first `k` blocks.
    pub fn prefix_union_masks(&self) -> Vec<u64> {
        self.blocks
            .iter()
            .scan(0u64, |acc, &b| {
                *acc |= b;
                Some(*acc)
            })
            .collect()
    }

    pub fn prefix_unions(&self) -> Vec<Vec<usize>> {
        self.prefix_union_masks().into_iter().map(mask_elements).collect()
    }

    /// 1-based position of the block containing `i`.
    pub fn block_index(&self, i: usize) -> Result<usize> {
        self.check_element(i)?;
        let bit = 1u64 << (i - 1);
        Ok(self.blocks.iter().position(|&b| b & bit != 0).expect("partition covers ground set") + 1)
    }

    /// `out[e - 1]` is the block index of element `e`.
    pub fn block_indices(&self) -> Vec<usize> {
        let mut out = vec![0; self.n];
        for (k, &b) in self.blocks.iter().enumerate() {
            for e in mask_elements(b) {
                out[e - 1] = k + 1;
            }
        }
        out
    }

    /// `i` sits in an earlier block than `j`, or in the same one.
    pub fn precequals(&self, i: usize, j: usize) -> Result<bool> {
        Ok(self.block_index(i)? <= self.block_index(j)?)
    }

    /// Replaces blocks `k` and `k + 1` (1-based) by their union: one covering step down the poset.
    pub fn merge_adjacent(&self, k: usize) -> Result<Self> {
        if k == 0 || k >= self.blocks.len() {
            return Err(Error::Position { k, blocks: self.blocks.len() });
        }
        let mut blocks = Vec::with_capacity(self.blocks.len() - 1);
        blocks.extend_from_slice(&self.blocks[..k - 1]);
        blocks.push(self.blocks[k - 1] | self.blocks[k]);
        blocks.extend_from_slice(&self.blocks[k + 1..]);
        Ok(OrderedPartition { n: self.n, blocks })
    }

    /// Every partition covered by this one, in order of the merged position.
    pub fn lower_covers(&self) -> Vec<Self> {
        (1..self.blocks.len())
            .map(|k| self.merge_adjacent(k).expect("position in range"))
            .collect()
    }

    /// All partitions obtained by merging any subset of the `r - 1` block boundaries.
    pub fn coarsenings(&self) -> BTreeSet<Self> {
        let boundaries = self.blocks.len() - 1;
        let mut out = BTreeSet::new();
        for merged in 0u64..(1u64 << boundaries) {
            let mut blocks = Vec::with_capacity(self.blocks.len());
            let mut current = self.blocks[0];
            for (pos, &b) in self.blocks.iter().enumerate().skip(1) {
                if merged & (1 << (pos - 1)) != 0 {
                    current |= b;
                } else {
                    blocks.push(current);
                    current = b;
                }
            }
            blocks.push(current);
            out.insert(OrderedPartition { n: self.n, blocks });
        }
        out
    }

    fn check_element(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n {
            Err(Error::OutOfRange { element: i, n: self.n })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for OrderedPartition {
    /// Slash notation, `13/2/4`. Ground sets above 9 separate elements with commas.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n > 9 { "," } else { "" };
        for (k, &b) in self.blocks.iter().enumerate() {
            if k > 0 {
                f.write_str("/")?;
            }
            let elems: Vec<String> = mask_elements(b).iter().map(ToString::to_string).collect();
            f.write_str(&elems.join(sep))?;
        }
        Ok(())
    }
}

impl FromStr for OrderedPartition {
    type Err = Error;

    /// Parses slash notation; `n` is the total number of elements listed.
    ///
    /// Without commas each digit is one element (`13/2/4`). Strings that contain
    /// commas, or would list more than nine digits, are read as comma-separated
    /// numbers per block (`10,11/9/1`).
    fn from_str(s: &str) -> Result<Self> {
        let tokens: Vec<&str> = s.trim().split('/').map(str::trim).collect();
        let digit_count: usize = tokens.iter().map(|t| t.len()).sum();
        let numeric = s.contains(',') || digit_count > 9;
        let mut blocks = Vec::with_capacity(tokens.len());
        for raw in tokens {
            let elems: Vec<usize> = if numeric {
                raw.split(',')
                    .map(|t| t.trim().parse().map_err(|_| Error::Parse(format!("bad element {t:?} in {s:?}"))))
                    .collect::<Result<_>>()?
            } else {
                raw.chars()
                    .map(|c| {
                        c.to_digit(10)
                            .map(|d| d as usize)
                            .ok_or_else(|| Error::Parse(format!("bad element {c:?} in {s:?}")))
                    })
                    .collect::<Result<_>>()?
            };
            blocks.push(elems);
        }
        let n = blocks.iter().map(Vec::len).sum();
        Self::from_blocks(n, &blocks).map_err(|e| Error::Parse(format!("{s:?}: {e}")))
    }
}

/// An ordered partition with every block a singleton, i.e. a permutation word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SingletonPartition(OrderedPartition);

impl SingletonPartition {
    /// From the word `w_1 w_2 .. w_n`, a permutation of `1..=n`.
    pub fn from_word(word: &[usize]) -> Result<Self> {
        let blocks: Vec<Vec<usize>> = word.iter().map(|&w| vec![w]).collect();
        OrderedPartition::from_blocks(word.len(), &blocks).map(SingletonPartition)
    }

    pub fn word(&self) -> Vec<usize> {
        self.0.blocks.iter().map(|b| b.trailing_zeros() as usize + 1).collect()
    }

    pub fn as_partition(&self) -> &OrderedPartition {
        &self.0
    }

    pub fn into_partition(self) -> OrderedPartition {
        self.0
    }

    pub fn n(&self) -> usize {
        self.0.n
    }
}

impl TryFrom<OrderedPartition> for SingletonPartition {
    type Error = Error;

    fn try_from(p: OrderedPartition) -> Result<Self> {
        if p.is_singleton() {
            Ok(SingletonPartition(p))
        } else {
            Err(Error::Domain(format!("{p} is not a singleton partition")))
        }
    }
}

impl AsRef<OrderedPartition> for SingletonPartition {
    fn as_ref(&self) -> &OrderedPartition {
        &self.0
    }
}

impl fmt::Display for SingletonPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The `2^(n-1)` partitions lying below a singleton partition: an `(n-1)`-cube.
pub fn lower_set_cube(vertex: &SingletonPartition) -> BTreeSet<OrderedPartition> {
    vertex.0.coarsenings()
}

/// Every singleton partition of `{1..n}`, via every permutation word.
pub fn singleton_partitions(n: usize) -> impl Iterator<Item = SingletonPartition> {
    crate::permutations::SignedPermutations::new(n).map(move |(perm, _)| {
        SingletonPartition(OrderedPartition {
            n,
            blocks: perm.into_iter().map(|e| 1u64 << e).collect(),
        })
    })
}

/// Stream of all ordered partitions of `{1..n}`.
///
/// Partitions come out in lexicographic order of their block-mask sequence
/// `(mask(b_1), mask(b_2), ..)`, where element `e` is bit `e - 1`. The first
/// item is `1/2/../n` and the last is the one-block partition. The order
/// depends only on `n`.
#[derive(Debug, Clone)]
pub struct OrderedPartitions {
    n: usize,
    full: u64,
    blocks: Vec<u64>,
    // prefix[k] = union of blocks[..=k]
    prefix: Vec<u64>,
    started: bool,
    done: bool,
}

impl OrderedPartitions {
    /// Unchecked constructor; `n = 0` yields the empty partition once.
    pub fn new(n: usize) -> Self {
        assert!(n <= BITMASK_MAX_N, "ground set too large for bitmask blocks");
        OrderedPartitions {
            n,
            full: full_mask(n),
            blocks: Vec::with_capacity(n),
            prefix: Vec::with_capacity(n),
            started: false,
            done: false,
        }
    }

    fn covered(&self) -> u64 {
        self.prefix.last().copied().unwrap_or(0)
    }

    fn push(&mut self, b: u64) {
        let covered = self.covered() | b;
        self.blocks.push(b);
        self.prefix.push(covered);
    }

    // Completes the current prefix with the smallest possible tail: singletons in increasing order.
    fn fill(&mut self) {
        loop {
            let rest = self.full & !self.covered();
            if rest == 0 {
                break;
            }
            self.push(rest & rest.wrapping_neg());
        }
    }

    fn current(&self) -> OrderedPartition {
        OrderedPartition { n: self.n, blocks: self.blocks.clone() }
    }
}

impl Iterator for OrderedPartitions {
    type Item = OrderedPartition;

    fn next(&mut self) -> Option<OrderedPartition> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill();
            return Some(self.current());
        }
        while let Some(b) = self.blocks.pop() {
            self.prefix.pop();
            let available = self.full & !self.covered();
            // next larger submask of `available`
            let next = b.wrapping_sub(available) & available;
            if next != 0 {
                self.push(next);
                self.fill();
                return Some(self.current());
            }
        }
        self.done = true;
        None
    }
}

/// All ordered partitions of `{1..n}` in the documented order, subject to the enumeration cap.
pub fn enumerate_ordered_partitions(n: usize, limits: &Limits) -> Result<OrderedPartitions> {
    if n == 0 {
        return Err(Error::Argument("n must be at least 1".into()));
    }
    check("ordered partition enumeration", n, limits.ordered_partitions)?;
    Ok(OrderedPartitions::new(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> OrderedPartition {
        s.parse().unwrap()
    }

    #[test]
    fn enumerates_small_cases() {
        let one: Vec<_> = OrderedPartitions::new(1).map(|b| b.to_string()).collect();
        assert_eq!(one, ["1"]);
        let two: Vec<_> = OrderedPartitions::new(2).map(|b| b.to_string()).collect();
        assert_eq!(two, ["1/2", "2/1", "12"]);
        assert_eq!(OrderedPartitions::new(3).count(), 13);
        assert_eq!(OrderedPartitions::new(0).count(), 1);
    }

    #[test]
    fn enumeration_order_is_lexicographic_in_masks() {
        let all: Vec<_> = OrderedPartitions::new(4).collect();
        for pair in all.windows(2) {
            assert!(pair[0].masks() < pair[1].masks());
        }
        assert_eq!(all.first().unwrap().to_string(), "1/2/3/4");
        assert_eq!(all.last().unwrap().to_string(), "1234");
    }

    #[test]
    fn enumeration_cap() {
        assert!(matches!(
            enumerate_ordered_partitions(10, &Limits::default()),
            Err(Error::Size { n: 10, cap: 9, .. })
        ));
        assert!(enumerate_ordered_partitions(0, &Limits::default()).is_err());
    }

    #[test]
    fn prefix_unions_examples() {
        let b = OrderedPartition::from_blocks(5, &[vec![2], vec![1, 3], vec![4, 5]]).unwrap();
        assert_eq!(b.prefix_unions(), vec![vec![2], vec![1, 2, 3], vec![1, 2, 3, 4, 5]]);
        assert_eq!(p("12").prefix_unions(), vec![vec![1, 2]]);
        assert_eq!(p("3/2/1").prefix_unions(), vec![vec![3], vec![2, 3], vec![1, 2, 3]]);
    }

    #[test]
    fn block_index_and_precequals() {
        let b = p("2/13/45");
        assert_eq!(b.block_index(3).unwrap(), 2);
        assert_eq!(p("12").block_index(1).unwrap(), 1);
        assert_eq!(p("3/2/1").block_index(1).unwrap(), 3);
        assert!(b.precequals(2, 4).unwrap());
        assert!(b.precequals(5, 5).unwrap());
        assert!(!p("3/2/1").precequals(1, 3).unwrap());
        assert!(matches!(b.block_index(6), Err(Error::OutOfRange { element: 6, n: 5 })));
        assert!(b.precequals(0, 1).is_err());
    }

    #[test]
    fn merge_adjacent_examples() {
        let b = p("3/1/2/4");
        assert_eq!(b.merge_adjacent(1).unwrap(), p("13/2/4"));
        assert_eq!(b.merge_adjacent(2).unwrap(), p("3/12/4"));
        assert_eq!(b.merge_adjacent(3).unwrap(), p("3/1/24"));
        assert_eq!(p("1/2").merge_adjacent(1).unwrap(), p("12"));
        assert!(matches!(b.merge_adjacent(4), Err(Error::Position { k: 4, blocks: 4 })));
        assert!(b.merge_adjacent(0).is_err());
    }

    #[test]
    fn cube_under_1234_matches_figure() {
        let a = SingletonPartition::from_word(&[1, 2, 3, 4]).unwrap();
        let cube = lower_set_cube(&a);
        let expected: BTreeSet<_> = [
            "1234", "123/4", "12/34", "1/234", "12/3/4", "1/23/4", "1/2/34", "1/2/3/4",
        ]
        .into_iter()
        .map(p)
        .collect();
        assert_eq!(cube, expected);
        let small = lower_set_cube(&SingletonPartition::from_word(&[1, 2]).unwrap());
        assert_eq!(small, [p("1/2"), p("12")].into_iter().collect());
    }

    #[test]
    fn validation() {
        assert!(OrderedPartition::from_blocks(3, &[vec![1], vec![1, 2, 3]]).is_err());
        assert!(OrderedPartition::from_blocks(3, &[vec![1], vec![2]]).is_err());
        assert!(OrderedPartition::from_blocks(3, &[vec![1], vec![], vec![2, 3]]).is_err());
        assert!(OrderedPartition::from_blocks(2, &[vec![1, 3]]).is_err());
        assert!(SingletonPartition::from_word(&[1, 1]).is_err());
        assert!(SingletonPartition::try_from(p("12")).is_err());
        assert!("1/a".parse::<OrderedPartition>().is_err());
    }

    #[test]
    fn display_round_trip_large_n() {
        let word: Vec<usize> = (1..=11).rev().collect();
        let a = SingletonPartition::from_word(&word).unwrap();
        let text = a.to_string();
        assert!(text.starts_with("11/10/9"));
        assert_eq!(text.parse::<OrderedPartition>().unwrap(), *a.as_partition());
        let merged = a.as_partition().merge_adjacent(1).unwrap();
        assert_eq!(merged.to_string(), "10,11/9/8/7/6/5/4/3/2/1");
        assert_eq!(merged.to_string().parse::<OrderedPartition>().unwrap(), merged);
    }
}
