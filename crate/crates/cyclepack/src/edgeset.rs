//! Bitset over the unordered pairs of a fixed vertex universe.

use crate::cycle::Edge;

/// Set of edges of the complete graph on `0..universe`, backed by a bitset
/// indexed triangularly.
#[derive(Clone, PartialEq, Eq)]
pub struct EdgeSet {
    n: usize,
    words: Vec<u64>,
    len: usize,
}

fn tri(e: Edge) -> usize {
    let (u, v) = e.endpoints();
    v * (v - 1) / 2 + u
}

impl EdgeSet {
    pub fn new(universe: usize) -> EdgeSet {
        let bits = universe * universe.saturating_sub(1) / 2;
        EdgeSet {
            n: universe,
            words: vec![0; bits.div_ceil(64)],
            len: 0,
        }
    }

    /// Every edge of the complete graph on `0..universe`.
    pub fn complete(universe: usize) -> EdgeSet {
        let mut s = EdgeSet::new(universe);
        for v in 1..universe {
            for u in 0..v {
                s.insert(Edge::new(u, v));
            }
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, e: Edge) -> bool {
        debug_assert!(e.v() < self.n, "edge {e} outside universe {}", self.n);
        let i = tri(e);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// Insert; returns false if the edge was already present.
    pub fn insert(&mut self, e: Edge) -> bool {
        assert!(e.v() < self.n, "edge {e} outside universe {}", self.n);
        let i = tri(e);
        let w = &mut self.words[i / 64];
        let mask = 1u64 << (i % 64);
        if *w & mask != 0 {
            return false;
        }
        *w |= mask;
        self.len += 1;
        true
    }

    /// Remove; returns false if the edge was absent.
    pub fn remove(&mut self, e: Edge) -> bool {
        assert!(e.v() < self.n, "edge {e} outside universe {}", self.n);
        let i = tri(e);
        let w = &mut self.words[i / 64];
        let mask = 1u64 << (i % 64);
        if *w & mask == 0 {
            return false;
        }
        *w &= !mask;
        self.len -= 1;
        true
    }

    /// Edges in ascending `(u, v)` order.
    pub fn to_sorted_vec(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.len);
        for v in 1..self.n {
            for u in 0..v {
                let e = Edge::new(u, v);
                if self.contains(e) {
                    out.push(e);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Edges of `self` absent from `other`. Both sets must share a universe.
    pub fn difference(&self, other: &EdgeSet) -> EdgeSet {
        assert_eq!(self.n, other.n, "universe mismatch");
        let words: Vec<u64> = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & !b)
            .collect();
        let len = words.iter().map(|w| w.count_ones() as usize).sum();
        EdgeSet {
            n: self.n,
            words,
            len,
        }
    }

    /// Up to `limit` edges of `self` absent from `other`, sorted ascending.
    pub fn difference_sample(&self, other: &EdgeSet, limit: usize) -> Vec<Edge> {
        debug_assert_eq!(self.n, other.n);
        let mut out = Vec::new();
        'scan: for v in 1..self.n {
            for u in 0..v {
                let e = Edge::new(u, v);
                if self.contains(e) && !other.contains(e) {
                    out.push(e);
                    if out.len() == limit {
                        break 'scan;
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }
}

impl std::fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.to_sorted_vec()).finish()
    }
}

impl FromIterator<Edge> for EdgeSet {
    /// Collect edges into a set sized to fit the largest endpoint.
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> EdgeSet {
        let edges: Vec<Edge> = iter.into_iter().collect();
        let n = edges.iter().map(|e| e.v() + 1).max().unwrap_or(0);
        let mut s = EdgeSet::new(n);
        for e in edges {
            s.insert(e);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_contains_remove() {
        let mut s = EdgeSet::new(10);
        let e = Edge::new(3, 7);
        assert!(!s.contains(e));
        assert!(s.insert(e));
        assert!(!s.insert(e));
        assert!(s.contains(e));
        assert_eq!(s.len(), 1);
        assert!(s.remove(e));
        assert!(!s.remove(e));
        assert!(s.is_empty());
    }

    #[test]
    fn complete_graph_size() {
        assert_eq!(EdgeSet::complete(17).len(), 136);
        assert_eq!(EdgeSet::complete(0).len(), 0);
        assert_eq!(EdgeSet::complete(1).len(), 0);
    }

    #[test]
    fn sorted_iteration() {
        let mut s = EdgeSet::new(6);
        s.insert(Edge::new(4, 5));
        s.insert(Edge::new(0, 3));
        s.insert(Edge::new(0, 1));
        assert_eq!(
            s.to_sorted_vec(),
            vec![Edge::new(0, 1), Edge::new(0, 3), Edge::new(4, 5)]
        );
    }

    #[test]
    fn difference_sampling() {
        let a = EdgeSet::complete(5);
        let mut b = EdgeSet::complete(5);
        b.remove(Edge::new(1, 2));
        b.remove(Edge::new(0, 4));
        assert_eq!(
            a.difference_sample(&b, 8),
            vec![Edge::new(0, 4), Edge::new(1, 2)]
        );
        assert_eq!(a.difference_sample(&b, 1).len(), 1);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;
        use std::collections::BTreeSet;

        /// A short script of inserts and removes over a small universe.
        fn script() -> impl Strategy<Value = (usize, Vec<(bool, usize, usize)>)> {
            (9..40usize).prop_flat_map(|n| {
                let step = (any::<bool>(), 0..n, 0..n - 1);
                (Just(n), proptest::collection::vec(step, 0..60))
            })
        }

        proptest! {
            #[test]
            fn behaves_like_a_set_of_pairs((n, steps) in script()) {
                let mut fast = EdgeSet::new(n);
                let mut model: BTreeSet<Edge> = BTreeSet::new();
                for (add, u, w) in steps {
                    let v = if w >= u { w + 1 } else { w }; // distinct endpoints
                    let e = Edge::new(u, v);
                    if add {
                        prop_assert_eq!(fast.insert(e), model.insert(e));
                    } else {
                        prop_assert_eq!(fast.remove(e), model.remove(&e));
                    }
                }
                prop_assert_eq!(fast.len(), model.len());
                prop_assert_eq!(fast.to_sorted_vec(), model.iter().copied().collect::<Vec<_>>());
                let missing = EdgeSet::complete(n).difference(&fast);
                prop_assert_eq!(missing.len(), n * (n - 1) / 2 - model.len());
                for e in model {
                    prop_assert!(!missing.contains(e));
                }
            }
        }
    }
}
