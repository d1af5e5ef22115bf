//! Small bitset types for edge subsets and boundary subsets.

use std::fmt;

use crate::error::{Error, Result};

/// A set of edges of a fixed graph, by canonical edge index. Backed by a
/// `u128`, which bounds supported graphs at 128 edges; enumeration
/// entry points check the bound and fail cleanly beyond it. Ordered
/// lexicographically on the sorted index sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct EdgeSet(u128);

impl FromIterator<usize> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = EdgeSet::empty();
        for e in iter {
            s.insert(e);
        }
        s
    }
}

impl Ord for EdgeSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for EdgeSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

pub const MAX_EDGES: usize = 128;

impl EdgeSet {
    pub fn empty() -> Self {
        EdgeSet(0)
    }

    pub fn check_capacity(edge_count: usize) -> Result<()> {
        if edge_count > MAX_EDGES {
            return Err(Error::TooLarge(format!(
                "{edge_count} edges exceeds the {MAX_EDGES}-edge limit"
            )));
        }
        Ok(())
    }

    pub fn insert(&mut self, e: usize) {
        self.0 |= 1u128 << e;
    }

    pub fn remove(&mut self, e: usize) {
        self.0 &= !(1u128 << e);
    }

    pub fn contains(self, e: usize) -> bool {
        self.0 >> e & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 | other.0)
    }

    pub fn intersect(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 & other.0)
    }

    pub fn minus(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 & !other.0)
    }

    pub fn sym_diff(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 ^ other.0)
    }

    pub fn is_subset_of(self, other: EdgeSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let e = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(e)
            }
        })
    }

    /// Sorted index vector, the canonical external form.
    pub fn indices(self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// A subset of the boundary vertices `[n]`, 0-based internally. Displays as
/// 1-based sorted indices, e.g. `{1,3}`. Ordered lexicographically on the
/// sorted index sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct BoundarySet(u64);

impl FromIterator<usize> for BoundarySet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = BoundarySet::empty();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl Ord for BoundarySet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for BoundarySet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

pub const MAX_BOUNDARY: usize = 64;

impl BoundarySet {
    pub fn empty() -> Self {
        BoundarySet(0)
    }

    pub fn check_capacity(n: usize) -> Result<()> {
        if n > MAX_BOUNDARY {
            return Err(Error::TooLarge(format!(
                "{n} boundary vertices exceeds the {MAX_BOUNDARY} limit"
            )));
        }
        Ok(())
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: BoundarySet) -> BoundarySet {
        BoundarySet(self.0 | other.0)
    }

    pub fn minus(self, other: BoundarySet) -> BoundarySet {
        BoundarySet(self.0 & !other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// Parse a 1-based comma-separated list such as `1,3`.
    pub fn parse(text: &str, n: usize) -> Result<BoundarySet> {
        let mut s = BoundarySet::empty();
        let t = text.trim().trim_start_matches('{').trim_end_matches('}');
        if t.is_empty() {
            return Ok(s);
        }
        for part in t.split(',') {
            let i: usize = part.trim().parse().map_err(|_| Error::Parse {
                line: 0,
                msg: format!("bad boundary index `{part}`"),
            })?;
            if i < 1 || i > n {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("boundary index {i} outside 1..={n}"),
                });
            }
            s.insert(i - 1);
        }
        Ok(s)
    }
}

impl fmt::Display for BoundarySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (pos, i) in self.iter().enumerate() {
            if pos > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

/// All k-subsets of `[n]` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<BoundarySet> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<BoundarySet>) {
        if cur.len() == k {
            out.push(BoundarySet::from_iter(cur.iter().copied()));
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}
