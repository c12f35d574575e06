//! Set partitions of `{1, ..., n}` and the non-crossing ones among them.
//!
//! Partitions are kept in canonical form: every block sorted ascending and
//! blocks ordered by their minimum. Enumeration walks restricted growth
//! strings (the block index of each element) in lexicographic order, so
//! `enumerate_nc` is deterministic.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `n` accepted by [`enumerate_nc`]; `|NC(14)| = 2_674_440`.
pub const NC_CAP: usize = 14;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Validates and canonicalizes a list of 1-based blocks.
    pub fn from_blocks(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidPartition("no blocks".into()));
        }
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for &i in blocks.iter().flatten() {
            if i == 0 || i > n {
                return Err(Error::InvalidPartition(format!(
                    "element {i} outside 1..={n}"
                )));
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidPartition(format!("element {i} repeated")));
            }
        }
        Ok(Self { blocks })
    }

    /// Builds the partition whose element `i+1` lies in block `membership[i]`.
    /// Any labelling works; labels are renumbered canonically.
    pub fn from_membership(membership: &[usize]) -> Result<Self> {
        if membership.is_empty() {
            return Err(Error::InvalidPartition("empty ground set".into()));
        }
        let mut label_to_block: Vec<(usize, usize)> = Vec::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (i, &label) in membership.iter().enumerate() {
            match label_to_block.iter().find(|(l, _)| *l == label) {
                Some(&(_, b)) => blocks[b].push(i + 1),
                None => {
                    label_to_block.push((label, blocks.len()));
                    blocks.push(vec![i + 1]);
                }
            }
        }
        Ok(Self { blocks })
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Canonical restricted growth string: 0-based block index per element.
    pub fn membership(&self) -> Vec<usize> {
        let mut m = vec![0; self.n()];
        for (b, block) in self.blocks.iter().enumerate() {
            for &i in block {
                m[i - 1] = b;
            }
        }
        m
    }

    /// False iff two distinct blocks interleave as `i1 < j1 < i2 < j2`.
    pub fn is_noncrossing(&self) -> bool {
        for (r, br) in self.blocks.iter().enumerate() {
            for bs in self.blocks.iter().skip(r + 1) {
                if interleave(br, bs) || interleave(bs, br) {
                    return false;
                }
            }
        }
        true
    }
}

impl<'de> Deserialize<'de> for SetPartition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let blocks = Vec::<Vec<usize>>::deserialize(d)?;
        Self::from_blocks(blocks).map_err(serde::de::Error::custom)
    }
}

// Some i1 < i2 in `a` and j1 < j2 in `b` with i1 < j1 < i2 < j2.
fn interleave(a: &[usize], b: &[usize]) -> bool {
    a.iter().any(|&i1| {
        b.iter()
            .any(|&j1| j1 > i1 && a.iter().any(|&i2| i2 > j1 && b.iter().any(|&j2| j2 > i2)))
    })
}

fn check_cap(n: usize, max: usize) -> Result<()> {
    if n == 0 || n > max {
        return Err(Error::OutOfRange {
            what: "partition size n",
            value: n,
            min: 1,
            max,
        });
    }
    Ok(())
}

/// Calls `visit` with the membership vector of every non-crossing partition
/// of `{1..n}`, in lexicographic order. Never materializes the partitions.
pub fn for_each_nc<F: FnMut(&[usize])>(n: usize, visit: F) -> Result<()> {
    for_each_nc_where(n, |_, _| true, visit)
}

/// Like [`for_each_nc`], but element `i` (0-based) may join the block whose
/// smallest element is `first` only when `allow(first, i)` holds. Pruned
/// partitions are skipped together with all their completions; opening a new
/// block is always allowed.
pub fn for_each_nc_where<A, F>(n: usize, allow: A, mut visit: F) -> Result<()>
where
    A: Fn(usize, usize) -> bool,
    F: FnMut(&[usize]),
{
    check_cap(n, NC_CAP)?;
    let mut state = NcWalk {
        membership: Vec::with_capacity(n),
        block_min: Vec::new(),
        block_last: Vec::new(),
    };
    state.walk(n, &allow, &mut visit);
    Ok(())
}

pub fn enumerate_nc(n: usize) -> Result<Vec<SetPartition>> {
    let mut out = Vec::new();
    for_each_nc(n, |m| {
        out.push(SetPartition::from_membership(m).expect("walk yields valid partitions"))
    })?;
    Ok(out)
}

pub fn count_nc(n: usize) -> Result<u64> {
    let mut count = 0u64;
    for_each_nc(n, |_| count += 1)?;
    Ok(count)
}

struct NcWalk {
    membership: Vec<usize>,
    block_min: Vec<usize>,
    block_last: Vec<usize>,
}

impl NcWalk {
    // Element `i` may join block `q` iff every element strictly between
    // `last(q)` and `i` sits in a block that opened after `last(q)`.
    // Crossings among earlier elements were already excluded.
    fn can_join(&self, q: usize, i: usize) -> bool {
        let last = self.block_last[q];
        ((last + 1)..i).all(|c| self.block_min[self.membership[c]] > last)
    }

    fn walk<A, F>(&mut self, n: usize, allow: &A, visit: &mut F)
    where
        A: Fn(usize, usize) -> bool,
        F: FnMut(&[usize]),
    {
        let i = self.membership.len();
        if i == n {
            visit(&self.membership);
            return;
        }
        for q in 0..self.block_min.len() {
            if allow(self.block_min[q], i) && self.can_join(q, i) {
                let prev = std::mem::replace(&mut self.block_last[q], i);
                self.membership.push(q);
                self.walk(n, allow, visit);
                self.membership.pop();
                self.block_last[q] = prev;
            }
        }
        self.block_min.push(i);
        self.block_last.push(i);
        self.membership.push(self.block_min.len() - 1);
        self.walk(n, allow, visit);
        self.membership.pop();
        self.block_min.pop();
        self.block_last.pop();
    }
}
