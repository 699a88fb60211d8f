//! Set partitions as restricted growth strings, and their enumeration.
//!
//! A partition of `n` points into `m` nonempty blocks is stored as the
//! assignment array `block_of`, canonicalized so that first occurrences of
//! block ids appear in increasing order (the restricted-growth property).
//! That canonical form identifies partitions that differ only by block
//! renaming, and gives the enumeration a well-defined lexicographic order.

use crate::error::{GhError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    block_of: Vec<usize>,
    m: usize,
}

impl Partition {
    /// Build a partition from a block assignment with `m` blocks. The
    /// assignment is canonicalized; every block index in `0..m` must occur.
    pub fn new(block_of: Vec<usize>, m: usize) -> Result<Partition> {
        let n = block_of.len();
        if m < 1 || m > n {
            return Err(GhError::PartitionBlocks { m, n });
        }
        let mut rename = vec![usize::MAX; m];
        let mut next = 0usize;
        let mut canonical = Vec::with_capacity(n);
        for &b in &block_of {
            if b >= m {
                return Err(GhError::PartitionBlocks { m, n });
            }
            if rename[b] == usize::MAX {
                rename[b] = next;
                next += 1;
            }
            canonical.push(rename[b]);
        }
        if next != m {
            let empty = rename.iter().position(|&r| r == usize::MAX).unwrap_or(0);
            return Err(GhError::EmptyBlock { block: empty });
        }
        Ok(Partition { block_of: canonical, m })
    }

    /// Build from explicit blocks over the points `0..n`.
    pub fn from_blocks(blocks: &[Vec<usize>], n: usize) -> Result<Partition> {
        let m = blocks.len();
        if m < 1 || m > n {
            return Err(GhError::PartitionBlocks { m, n });
        }
        let mut block_of = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(GhError::EmptyBlock { block: b });
            }
            for &i in block {
                if i >= n {
                    return Err(GhError::PointOutOfRange { index: i, points: n });
                }
                block_of[i] = b;
            }
        }
        if block_of.iter().any(|&b| b == usize::MAX) {
            return Err(GhError::PartitionSize { points: n, expected: n });
        }
        Partition::new(block_of, m)
    }

    pub(crate) fn from_canonical(block_of: Vec<usize>, m: usize) -> Partition {
        debug_assert!(Partition::new(block_of.clone(), m).map_or(false, |p| p.block_of == block_of));
        Partition { block_of, m }
    }

    pub fn points(&self) -> usize {
        self.block_of.len()
    }

    pub fn block_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn block_of(&self, i: usize) -> usize {
        self.block_of[i]
    }

    /// The canonical restricted-growth assignment.
    pub fn assignments(&self) -> &[usize] {
        &self.block_of
    }

    /// Materialize the blocks, each with point indices in increasing order.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.m];
        for (i, &b) in self.block_of.iter().enumerate() {
            out[b].push(i);
        }
        out
    }
}

/// Stream every partition of `n` points into exactly `m` nonempty blocks,
/// each exactly once, in lexicographic restricted-growth order. The total
/// count is the Stirling number of the second kind `S(n, m)`.
pub fn enumerate_partitions(n: usize, m: usize) -> Result<PartitionIter> {
    if n == 0 || m < 1 || m > n {
        return Err(GhError::PartitionBlocks { m, n });
    }
    Ok(PartitionIter { n, m, rgs: Vec::new(), started: false })
}

pub struct PartitionIter {
    n: usize,
    m: usize,
    rgs: Vec<usize>,
    started: bool,
}

impl PartitionIter {
    /// Smallest value admissible at position `j` given the running maximum:
    /// zero unless the remaining positions are all needed to open new blocks.
    fn fill_suffix(&mut self, from: usize, mut max: usize) {
        for j in from..self.n {
            let needed = (self.m - 1).saturating_sub(max);
            self.rgs[j] = if needed >= self.n - j { max + 1 } else { 0 };
            max = max.max(self.rgs[j]);
        }
    }

    fn advance(&mut self) -> bool {
        // Prefix maxima: maxes[i] = max(rgs[0..=i]).
        let mut maxes = vec![0usize; self.n];
        for i in 1..self.n {
            maxes[i] = maxes[i - 1].max(self.rgs[i]);
        }
        for i in (1..self.n).rev() {
            let prefix_max = maxes[i - 1];
            let cap = (prefix_max + 1).min(self.m - 1);
            // Smallest admissible bump at i: one more than current unless only
            // opening a new block keeps m blocks reachable in the suffix.
            let mut v = self.rgs[i] + 1;
            while v <= cap {
                let new_max = prefix_max.max(v);
                if (self.m - 1).saturating_sub(new_max) <= self.n - 1 - i {
                    self.rgs[i] = v;
                    self.fill_suffix(i + 1, new_max);
                    return true;
                }
                v = if v <= prefix_max { prefix_max + 1 } else { v + 1 };
            }
        }
        false
    }
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if !self.started {
            self.started = true;
            self.rgs = vec![0; self.n];
            self.fill_suffix(1, 0);
        } else if !self.advance() {
            return None;
        }
        Some(Partition::from_canonical(self.rgs.clone(), self.m))
    }
}

/// Stirling number of the second kind via the standard recurrence
/// `S(n, m) = m·S(n−1, m) + S(n−1, m−1)`. Independent of the enumerator,
/// which it cross-checks in tests.
pub fn stirling2(n: usize, m: usize) -> u128 {
    if m > n {
        return 0;
    }
    if n == 0 {
        return 1; // S(0, 0)
    }
    if m == 0 {
        return 0;
    }
    let mut prev = vec![0u128; m + 1];
    prev[0] = 1;
    for i in 1..=n {
        let mut curr = vec![0u128; m + 1];
        for j in 1..=m.min(i) {
            curr[j] = (j as u128) * prev[j] + prev[j - 1];
        }
        prev = curr;
    }
    prev[m]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonicalization_renames_blocks_by_first_occurrence() {
        let p = Partition::new(vec![2, 2, 0, 1], 3).unwrap();
        assert_eq!(p.assignments(), &[0, 0, 1, 2]);
        assert_eq!(p.blocks(), vec![vec![0, 1], vec![2], vec![3]]);
    }

    #[test]
    fn empty_block_rejected() {
        assert!(matches!(
            Partition::new(vec![0, 0, 0], 2),
            Err(GhError::EmptyBlock { .. })
        ));
        assert!(matches!(Partition::new(vec![0, 1], 3), Err(GhError::PartitionBlocks { .. })));
    }

    #[test]
    fn three_into_two_lists_exactly_the_three_partitions() {
        let got: Vec<Vec<usize>> = enumerate_partitions(3, 2)
            .unwrap()
            .map(|p| p.assignments().to_vec())
            .collect();
        assert_eq!(got, vec![vec![0, 0, 1], vec![0, 1, 0], vec![0, 1, 1]]);
    }

    #[test]
    fn degenerate_block_counts() {
        assert_eq!(enumerate_partitions(4, 4).unwrap().count(), 1);
        assert_eq!(enumerate_partitions(5, 1).unwrap().count(), 1);
        assert!(enumerate_partitions(3, 4).is_err());
        assert!(enumerate_partitions(3, 0).is_err());
    }

    #[test]
    fn counts_match_stirling_recurrence() {
        for n in 1..=9 {
            for m in 1..=n {
                let count = enumerate_partitions(n, m).unwrap().count() as u128;
                assert_eq!(count, stirling2(n, m), "S({n}, {m})");
            }
        }
        // Spot values: S(3,2) = 3, S(12,4) = 611501.
        assert_eq!(stirling2(3, 2), 3);
        assert_eq!(stirling2(12, 4), 611_501);
    }

    #[test]
    fn stream_is_strictly_increasing_and_canonical() {
        let mut prev: Option<Vec<usize>> = None;
        for p in enumerate_partitions(7, 3).unwrap() {
            let rgs = p.assignments().to_vec();
            let canon = Partition::new(rgs.clone(), 3).unwrap();
            assert_eq!(canon.assignments(), rgs.as_slice());
            if let Some(prev) = &prev {
                assert!(*prev < rgs, "enumeration must be lexicographically increasing");
            }
            prev = Some(rgs);
        }
    }
}
