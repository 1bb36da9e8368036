use std::fmt;

use serde::{Serialize, Serializer};

/// Hard cap on crossings/edges. Edge subsets are bitmasks and the
/// exhaustive enumerations are `2^n`.
pub const MAX_EDGES: usize = 20;

/// A subset of the edges `0..n` of a graph, stored as a bitmask.
/// Edge `i` here is the crossing/edge numbered `i + 1` in the one-based
/// notation used for display.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct EdgeSet(pub u32);

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet(0);

    pub fn full(n: usize) -> Self {
        if n >= 32 {
            EdgeSet(u32::MAX)
        } else {
            EdgeSet((1u32 << n) - 1)
        }
    }

    pub fn from_edges<I: IntoIterator<Item = usize>>(edges: I) -> Self {
        EdgeSet(edges.into_iter().fold(0, |m, e| m | (1 << e)))
    }

    #[inline]
    pub fn contains(self, e: usize) -> bool {
        self.0 >> e & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, e: usize) {
        self.0 |= 1 << e;
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 | other.0)
    }

    pub fn intersection(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 & other.0)
    }

    pub fn difference(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 ^ other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let e = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(e)
            }
        })
    }

    /// One-based edge numbers, the form used in reports.
    pub fn to_one_based(self) -> Vec<usize> {
        self.iter().map(|e| e + 1).collect()
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, e) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", e + 1)?;
        }
        write!(f, "}}")
    }
}

impl Serialize for EdgeSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_one_based().serialize(s)
    }
}

/// Union-find with path compression and union by size.
#[derive(Clone, Debug)]
pub struct DisjointSets {
    parent: Vec<u32>,
    size: Vec<u32>,
    sets: usize,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
            sets: n,
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.parent[root] as usize != root {
            root = self.parent[root] as usize;
        }
        while self.parent[x] as usize != root {
            let next = self.parent[x] as usize;
            self.parent[x] = root as u32;
            x = next;
        }
        root
    }

    /// Returns `true` when `a` and `b` were in different sets.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra as u32;
        self.size[ra] += self.size[rb];
        self.sets -= 1;
        true
    }

    pub fn set_count(&self) -> usize {
        self.sets
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_set_basics() {
        let s = EdgeSet::from_edges([0, 2]);
        assert_eq!(s.to_string(), "{1,3}");
        assert_eq!(s.len(), 2);
        assert!(s.contains(2) && !s.contains(1));
        assert_eq!(s.symmetric_difference(EdgeSet::full(3)), EdgeSet::from_edges([1]));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 2]);
    }

    #[test]
    fn union_find_counts_sets() {
        let mut d = DisjointSets::new(5);
        assert!(d.union(0, 1));
        assert!(d.union(3, 4));
        assert!(!d.union(1, 0));
        assert_eq!(d.set_count(), 3);
        assert_eq!(d.find(4), d.find(3));
    }
}
