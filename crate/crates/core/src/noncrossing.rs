//! Brute-force enumeration of noncrossing set partitions of types A and B,
//! with the block statistics that interpret local h- and gamma-vectors of
//! cluster subdivisions.
//!
//! Type A partitions come from restricted growth strings, filtered by the
//! crossing condition. Type B partitions are built directly as
//! negation-symmetric partitions of `{1..n, -1..-n}` and filtered by the arc
//! diagram on the line `1, 2, .., n, -1, -2, .., -n`.

use std::fmt;

use crate::error::{check_budget, Error, Result};

/// Largest `n` accepted by the type A enumerators (Bell(12) = 4213597).
pub const MAX_N_A: usize = 12;
/// Largest `n` accepted by the type B enumerators.
pub const MAX_N_B: usize = 7;

/// A set partition of `{1..n}`. Blocks are sorted and ordered by minimum.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetPartitionA {
    n: usize,
    blocks: Vec<Vec<u32>>,
}

impl SetPartitionA {
    /// Validates disjointness and coverage, then canonicalizes.
    pub fn new(n: usize, blocks: Vec<Vec<u32>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::Invalid("empty block".into()));
            }
            for &e in block {
                let e = e as usize;
                if e == 0 || e > n || std::mem::replace(&mut seen[e], true) {
                    return Err(Error::Invalid(format!(
                        "element {e} is out of range or repeated"
                    )));
                }
            }
        }
        if seen[1..].iter().any(|s| !s) {
            return Err(Error::Invalid(format!("blocks do not cover 1..{n}")));
        }
        Ok(Self::canonical(n, blocks))
    }

    fn canonical(n: usize, mut blocks: Vec<Vec<u32>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        SetPartitionA { n, blocks }
    }

    /// `rgs[i]` is the block index of element `i + 1`.
    fn from_rgs(rgs: &[u8]) -> Self {
        let count = rgs.iter().max().map_or(0, |&m| m as usize + 1);
        let mut blocks = vec![Vec::new(); count];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b as usize].push(i as u32 + 1);
        }
        SetPartitionA {
            n: rgs.len(),
            blocks,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    fn block_labels(&self) -> Vec<u8> {
        let mut labels = vec![0u8; self.n];
        for (k, b) in self.blocks.iter().enumerate() {
            for &e in b {
                labels[e as usize - 1] = k as u8;
            }
        }
        labels
    }

    pub fn singletons(&self) -> impl Iterator<Item = u32> + '_ {
        self.blocks.iter().filter(|b| b.len() == 1).map(|b| b[0])
    }
}

impl fmt::Display for SetPartitionA {
    /// `[[1,5,6],[2,4],[3],[7],[8,9]]`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_blocks(f, self.blocks.iter().map(|b| b.iter().map(|&e| e as i64)))
    }
}

fn write_blocks<I, B>(f: &mut fmt::Formatter<'_>, blocks: I) -> fmt::Result
where
    I: Iterator<Item = B>,
    B: Iterator<Item = i64>,
{
    f.write_str("[")?;
    for (k, b) in blocks.enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        f.write_str("[")?;
        for (j, e) in b.enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("]")?;
    }
    f.write_str("]")
}

/// Calls `visit` with every set partition of `{1..n}` as a restricted growth
/// string, in lexicographic order.
fn for_each_rgs(n: usize, mut visit: impl FnMut(&[u8])) {
    if n == 0 {
        visit(&[]);
        return;
    }
    let mut rgs = vec![0u8; n];
    // prefix_max[i] = max(rgs[..=i])
    let mut prefix_max = vec![0u8; n];
    loop {
        visit(&rgs);
        let mut i = n - 1;
        loop {
            if i == 0 {
                return;
            }
            if rgs[i] <= prefix_max[i - 1] {
                rgs[i] += 1;
                prefix_max[i] = prefix_max[i - 1].max(rgs[i]);
                for j in i + 1..n {
                    rgs[j] = 0;
                    prefix_max[j] = prefix_max[i];
                }
                break;
            }
            i -= 1;
        }
    }
}

/// Every set partition of `{1..n}` exactly once, in restricted growth string
/// order.
pub fn enumerate_partitions_a(n: usize) -> Result<Vec<SetPartitionA>> {
    check_budget("n", n, MAX_N_A)?;
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    let mut out = Vec::new();
    for_each_rgs(n, |rgs| out.push(SetPartitionA::from_rgs(rgs)));
    Ok(out)
}

/// Noncrossing partitions of `{1..n}` in restricted growth string order.
pub fn enumerate_nc_a(n: usize) -> Result<Vec<SetPartitionA>> {
    check_budget("n", n, MAX_N_A)?;
    let mut out = Vec::new();
    for_each_rgs(n, |rgs| {
        if labels_noncrossing(rgs) {
            out.push(SetPartitionA::from_rgs(rgs));
        }
    });
    Ok(out)
}

/// No `a < b < c < d` with `a, c` in one block and `b, d` in another.
pub fn is_noncrossing_a(p: &SetPartitionA) -> bool {
    labels_noncrossing(&p.block_labels())
}

// A crossing exists iff one exists with a and c consecutive in their block,
// so it suffices to scan each gap between consecutive block elements for an
// element whose block reaches beyond the gap.
fn labels_noncrossing(labels: &[u8]) -> bool {
    let n = labels.len();
    let blocks = labels.iter().max().map_or(0, |&m| m as usize + 1);
    let mut last = vec![0usize; blocks];
    for (i, &b) in labels.iter().enumerate() {
        last[b as usize] = i;
    }
    let mut prev = vec![usize::MAX; blocks];
    for c in 0..n {
        let block = labels[c] as usize;
        let a = prev[block];
        if a != usize::MAX
            && (a + 1..c).any(|b| labels[b] as usize != block && last[labels[b] as usize] > c)
        {
            return false;
        }
        prev[block] = c;
    }
    true
}

/// Whether the singleton `{b}` lies strictly between two elements of some
/// other block.
pub fn nested_singleton_a(p: &SetPartitionA, b: u32) -> Result<bool> {
    if !p.blocks.iter().any(|blk| blk.as_slice() == [b]) {
        return Err(Error::NotSingleton(b as i64));
    }
    Ok(p.blocks
        .iter()
        .any(|blk| blk.first().is_some_and(|&lo| lo < b) && blk.last().is_some_and(|&hi| hi > b)))
}

fn singletons_nested_labels(
    labels: &[u8],
    sizes: &[usize],
    first: &[usize],
    last: &[usize],
) -> bool {
    labels.iter().enumerate().all(|(pos, &blk)| {
        sizes[blk as usize] != 1
            || (0..sizes.len()).any(|k| sizes[k] > 1 && first[k] < pos && last[k] > pos)
    })
}

/// Counts of noncrossing partitions with a given number of blocks.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct NcACounts {
    pub all: u64,
    /// Every singleton block is nested.
    pub singletons_nested: u64,
    /// No singleton block at all.
    pub no_singleton: u64,
}

/// Exhaustive counts over `NC^A(n)`, indexed by number of blocks `0..=n`.
pub fn count_nc_a(n: usize) -> Result<Vec<NcACounts>> {
    check_budget("n", n, MAX_N_A)?;
    let mut table = vec![NcACounts::default(); n + 1];
    for_each_rgs(n, |labels| {
        if !labels_noncrossing(labels) {
            return;
        }
        let blocks = labels.iter().max().map_or(0, |&m| m as usize + 1);
        let mut sizes = vec![0usize; blocks];
        let mut first = vec![usize::MAX; blocks];
        let mut last = vec![0usize; blocks];
        for (i, &b) in labels.iter().enumerate() {
            let b = b as usize;
            sizes[b] += 1;
            first[b] = first[b].min(i);
            last[b] = i;
        }
        let row = &mut table[blocks];
        row.all += 1;
        if sizes.iter().all(|&s| s > 1) {
            row.no_singleton += 1;
        }
        if singletons_nested_labels(labels, &sizes, &first, &last) {
            row.singletons_nested += 1;
        }
    });
    Ok(table)
}

/// Number of noncrossing partitions of `{1..n}` in which `{b}` is a nonnested
/// singleton block.
pub fn count_nc_a_with_outer_singleton(n: usize, b: u32) -> Result<u64> {
    Ok(enumerate_nc_a(n)?
        .iter()
        .filter(|p| nested_singleton_a(p, b) == Ok(false))
        .count() as u64)
}

/// A negation-symmetric partition of `{1..n, -1..-n}` with at most one
/// self-negating block.
///
/// Blocks are listed in the linear order `1..n, -1..-n`: each block is sorted
/// by position, and blocks are ordered by their first position.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetPartitionB {
    n: usize,
    blocks: Vec<Vec<i32>>,
}

/// Position of `e` on the line `1, .., n, -1, .., -n`, starting at 0.
fn position(n: usize, e: i32) -> usize {
    if e > 0 {
        e as usize - 1
    } else {
        n + (-e) as usize - 1
    }
}

impl SetPartitionB {
    /// Validates the partition axioms, then canonicalizes.
    pub fn new(n: usize, blocks: Vec<Vec<i32>>) -> Result<Self> {
        let mut seen = vec![false; 2 * n];
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::Invalid("empty block".into()));
            }
            for &e in block {
                if e == 0 || e.unsigned_abs() as usize > n {
                    return Err(Error::Invalid(format!("element {e} out of range")));
                }
                if std::mem::replace(&mut seen[position(n, e)], true) {
                    return Err(Error::Invalid(format!("element {e} repeated")));
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Invalid(format!("blocks do not cover +-1..+-{n}")));
        }
        let p = Self::canonical(n, blocks);
        let mut zero = 0;
        for b in &p.blocks {
            let mut neg: Vec<i32> = b.iter().map(|e| -e).collect();
            neg.sort_unstable_by_key(|&e| position(n, e));
            if !p.blocks.contains(&neg) {
                return Err(Error::Invalid(format!(
                    "negation of block {b:?} is not a block"
                )));
            }
            if neg == *b {
                zero += 1;
            }
        }
        if zero > 1 {
            return Err(Error::Invalid("more than one zero block".into()));
        }
        Ok(p)
    }

    fn canonical(n: usize, mut blocks: Vec<Vec<i32>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable_by_key(|&e| position(n, e));
        }
        blocks.sort_unstable_by_key(|b| position(n, b[0]));
        SetPartitionB { n, blocks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<i32>] {
        &self.blocks
    }

    /// Arcs between consecutive elements of each block, as position pairs.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.blocks
            .iter()
            .flat_map(|b| {
                b.windows(2)
                    .map(|w| (position(self.n, w[0]), position(self.n, w[1])))
                    .collect::<Vec<_>>()
            })
            .collect()
    }
}

impl fmt::Display for SetPartitionB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_blocks(f, self.blocks.iter().map(|b| b.iter().map(|&e| e as i64)))
    }
}

/// Whether no two arcs of the diagram interleave.
pub fn is_noncrossing_b(p: &SetPartitionB) -> bool {
    let arcs = p.arcs();
    !arcs
        .iter()
        .any(|&(a, b)| arcs.iter().any(|&(c, d)| a < c && c < b && b < d))
}

/// The self-negating block, if present.
pub fn zero_block(p: &SetPartitionB) -> Option<&[i32]> {
    p.blocks
        .iter()
        .find(|b| b.iter().any(|&e| e > 0 && b.contains(&-e)))
        .map(Vec::as_slice)
}

/// Number of pairs `{B, -B}` of nonzero blocks.
pub fn pair_count(p: &SetPartitionB) -> usize {
    let nonzero = p.blocks.len() - usize::from(zero_block(p).is_some());
    nonzero / 2
}

/// Whether the positive singleton `{b}` has an element of some block before
/// it and one after it on the line.
pub fn nested_singleton_b(p: &SetPartitionB, b: i32) -> Result<bool> {
    if b <= 0 || !p.blocks.iter().any(|blk| blk.as_slice() == [b]) {
        return Err(Error::NotSingleton(b as i64));
    }
    let at = position(p.n, b);
    Ok(p.blocks.iter().any(|blk| {
        position(p.n, blk[0]) < at && position(p.n, *blk.last().expect("nonempty")) > at
    }))
}

/// Calls `visit` with every B_n-partition, as block labels per line
/// position. Built from a set partition of `{1..n}` by choosing at most one
/// zero block and, for every other block, a sign pattern with its least
/// element positive.
fn for_each_b_partition(n: usize, mut visit: impl FnMut(&[u8])) {
    let mut labels = vec![0u8; 2 * n];
    for_each_rgs(n, |rgs| {
        let blocks = rgs.iter().max().map_or(0, |&m| m as usize + 1);
        let mut members: Vec<Vec<usize>> = vec![Vec::new(); blocks];
        for (i, &b) in rgs.iter().enumerate() {
            members[b as usize].push(i);
        }
        // free sign bits: every member but the least of each nonzero block
        for zero in std::iter::once(None).chain((0..blocks).map(Some)) {
            let free: usize = members
                .iter()
                .enumerate()
                .filter(|(k, _)| Some(*k) != zero)
                .map(|(_, m)| m.len() - 1)
                .sum();
            for signs in 0u32..(1 << free) {
                let mut bit = 0;
                // labels: block k gets 2k (positive side) and 2k+1 (negative side)
                for (k, m) in members.iter().enumerate() {
                    if Some(k) == zero {
                        for &i in m {
                            labels[i] = 2 * k as u8;
                            labels[n + i] = 2 * k as u8;
                        }
                        continue;
                    }
                    for (j, &i) in m.iter().enumerate() {
                        let flip = j > 0 && signs & (1 << bit) != 0;
                        if j > 0 {
                            bit += 1;
                        }
                        let (pos_side, neg_side) = if flip {
                            (2 * k as u8 + 1, 2 * k as u8)
                        } else {
                            (2 * k as u8, 2 * k as u8 + 1)
                        };
                        labels[i] = pos_side;
                        labels[n + i] = neg_side;
                    }
                }
                visit(&labels);
            }
        }
    });
}

// Scanning positions in order yields blocks already in canonical order.
fn b_from_labels(n: usize, labels: &[u8]) -> SetPartitionB {
    let mut blocks: Vec<Vec<i32>> = Vec::new();
    let mut index = std::collections::HashMap::new();
    for (pos, &l) in labels.iter().enumerate() {
        let e = if pos < n {
            pos as i32 + 1
        } else {
            -((pos - n) as i32 + 1)
        };
        let k = *index.entry(l).or_insert_with(|| {
            blocks.push(Vec::new());
            blocks.len() - 1
        });
        blocks[k].push(e);
    }
    SetPartitionB { n, blocks }
}

// Arcs join consecutive same-label positions; a crossing is a strict
// interleaving of two arcs.
fn labels_arcs_noncrossing(labels: &[u8]) -> bool {
    let mut prev: [usize; 256] = [usize::MAX; 256];
    let mut arcs = Vec::with_capacity(labels.len());
    for (pos, &l) in labels.iter().enumerate() {
        let p = prev[l as usize];
        if p != usize::MAX {
            arcs.push((p, pos));
        }
        prev[l as usize] = pos;
    }
    !arcs
        .iter()
        .any(|&(a, b)| arcs.iter().any(|&(c, d)| a < c && c < b && b < d))
}

/// Every B_n-partition (noncrossing or not) exactly once.
pub fn enumerate_partitions_b(n: usize) -> Result<Vec<SetPartitionB>> {
    check_budget("n", n, MAX_N_B)?;
    let mut out = Vec::new();
    for_each_b_partition(n, |labels| out.push(b_from_labels(n, labels)));
    Ok(out)
}

/// All noncrossing B_n-partitions, each exactly once.
pub fn enumerate_nc_b(n: usize) -> Result<Vec<SetPartitionB>> {
    check_budget("n", n, MAX_N_B)?;
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    let mut out = Vec::new();
    for_each_b_partition(n, |labels| {
        if labels_arcs_noncrossing(labels) {
            out.push(b_from_labels(n, labels));
        }
    });
    Ok(out)
}

/// Counts of zero-block-free noncrossing B_n-partitions with a given number
/// of block pairs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct NcBCounts {
    pub no_zero_block: u64,
    /// No zero block, and every positive singleton is nested.
    pub positive_singletons_nested: u64,
    /// No zero block and no singleton block.
    pub no_singleton: u64,
}

/// Exhaustive counts over `NC^B(n)`, indexed by pair count `0..=n`.
pub fn count_nc_b(n: usize) -> Result<Vec<NcBCounts>> {
    let mut table = vec![NcBCounts::default(); n + 1];
    for p in enumerate_nc_b(n)? {
        if zero_block(&p).is_some() {
            continue;
        }
        let row = &mut table[pair_count(&p)];
        row.no_zero_block += 1;
        if p.blocks.iter().all(|b| b.len() > 1) {
            row.no_singleton += 1;
        }
        let nested = p
            .blocks
            .iter()
            .filter(|b| b.len() == 1 && b[0] > 0)
            .all(|b| nested_singleton_b(&p, b[0]) == Ok(true));
        if nested {
            row.positive_singletons_nested += 1;
        }
    }
    Ok(table)
}

/// Number of noncrossing B_n-partitions with a zero block.
pub fn count_nc_b_with_zero_block(n: usize) -> Result<u64> {
    Ok(enumerate_nc_b(n)?
        .iter()
        .filter(|p| zero_block(p).is_some())
        .count() as u64)
}
