//! Cycle and edge primitives: unordered vertex pairs and 8-cycles kept in a
//! canonical form so that equal cycles compare equal structurally.

use std::fmt;

use thiserror::Error;

/// Dense vertex label inside a packing's universe `0..order`.
pub type Vertex = usize;

/// Every cycle handled by this crate has exactly eight vertices.
pub const CYCLE_LEN: usize = 8;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum CycleError {
    #[error("cycle has {0} vertices, expected {CYCLE_LEN}")]
    WrongLength(usize),
    #[error("duplicate vertex {0} in cycle")]
    DuplicateVertex(Vertex),
}

/// Unordered pair of distinct vertices, stored smaller endpoint first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: Vertex,
    v: Vertex,
}

impl Edge {
    /// Build an edge from two distinct endpoints in either order.
    ///
    /// Panics on a loop; parsing and verification reject loops before
    /// constructing an `Edge`.
    pub fn new(a: Vertex, b: Vertex) -> Edge {
        assert!(a != b, "loop edge at vertex {a}");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn u(&self) -> Vertex {
        self.u
    }

    pub fn v(&self) -> Vertex {
        self.v
    }

    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (self.u, self.v)
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.u, self.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// An 8-cycle on distinct vertices, held in canonical form: rotated so the
/// least vertex comes first and oriented so the second vertex is smaller
/// than the last. Each of the 16 rotations/reflections of a cycle
/// canonicalizes to the same value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OctCycle {
    vertices: [Vertex; CYCLE_LEN],
}

impl OctCycle {
    pub fn new(raw: [Vertex; CYCLE_LEN]) -> Result<OctCycle, CycleError> {
        for i in 0..CYCLE_LEN {
            for j in i + 1..CYCLE_LEN {
                if raw[i] == raw[j] {
                    return Err(CycleError::DuplicateVertex(raw[i]));
                }
            }
        }
        Ok(OctCycle {
            vertices: canonical(raw),
        })
    }

    pub fn from_slice(raw: &[Vertex]) -> Result<OctCycle, CycleError> {
        if raw.len() != CYCLE_LEN {
            return Err(CycleError::WrongLength(raw.len()));
        }
        let mut a = [0; CYCLE_LEN];
        a.copy_from_slice(raw);
        OctCycle::new(a)
    }

    /// Vertex sequence in canonical order.
    pub fn vertices(&self) -> &[Vertex; CYCLE_LEN] {
        &self.vertices
    }

    /// The eight edges of the cycle (consecutive pairs, wrapping around).
    pub fn edges(&self) -> [Edge; CYCLE_LEN] {
        let v = &self.vertices;
        std::array::from_fn(|i| Edge::new(v[i], v[(i + 1) % CYCLE_LEN]))
    }

    /// The vertex support, sorted ascending.
    pub fn vertex_set(&self) -> [Vertex; CYCLE_LEN] {
        let mut s = self.vertices;
        s.sort_unstable();
        s
    }

    pub fn max_vertex(&self) -> Vertex {
        *self.vertices.iter().max().unwrap()
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    /// Apply a vertex map and re-canonicalize. Fails if the map identifies
    /// two vertices of the cycle.
    pub fn relabel(&self, mut f: impl FnMut(Vertex) -> Vertex) -> Result<OctCycle, CycleError> {
        OctCycle::new(self.vertices.map(&mut f))
    }

    pub fn shares_edge_with(&self, other: &OctCycle) -> bool {
        let mine = self.edges();
        other.edges().iter().any(|e| mine.contains(e))
    }
}

impl fmt::Debug for OctCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

fn canonical(raw: [Vertex; CYCLE_LEN]) -> [Vertex; CYCLE_LEN] {
    let p = (0..CYCLE_LEN).min_by_key(|&i| raw[i]).unwrap();
    let fwd: [Vertex; CYCLE_LEN] = std::array::from_fn(|i| raw[(p + i) % CYCLE_LEN]);
    let bwd: [Vertex; CYCLE_LEN] = std::array::from_fn(|i| raw[(p + CYCLE_LEN - i) % CYCLE_LEN]);
    if fwd[1] < bwd[1] {
        fwd
    } else {
        bwd
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_examples() {
        let c = OctCycle::new([3, 2, 1, 0, 7, 6, 5, 4]).unwrap();
        assert_eq!(c.vertices(), &[0, 1, 2, 3, 4, 5, 6, 7]);
        let c = OctCycle::new([5, 9, 4, 8, 3, 7, 2, 6]).unwrap();
        assert_eq!(c.vertices(), &[2, 6, 5, 9, 4, 8, 3, 7]);
    }

    #[test]
    fn rejects_duplicates_and_wrong_length() {
        assert_eq!(
            OctCycle::new([0, 1, 2, 3, 4, 5, 6, 0]),
            Err(CycleError::DuplicateVertex(0))
        );
        assert_eq!(
            OctCycle::from_slice(&[0, 1, 2, 3, 4, 5, 6]),
            Err(CycleError::WrongLength(7))
        );
    }

    #[test]
    fn all_sixteen_symmetries_canonicalize_identically() {
        let raw = [11, 3, 7, 0, 9, 5, 2, 8];
        let base = OctCycle::new(raw).unwrap();
        for r in 0..CYCLE_LEN {
            let rot: [Vertex; CYCLE_LEN] = std::array::from_fn(|i| raw[(i + r) % CYCLE_LEN]);
            let mut rev = rot;
            rev.reverse();
            assert_eq!(OctCycle::new(rot).unwrap(), base);
            assert_eq!(OctCycle::new(rev).unwrap(), base);
        }
    }

    #[test]
    fn edges_wrap_around() {
        let c = OctCycle::new([0, 1, 2, 3, 4, 5, 6, 7]).unwrap();
        let es = c.edges();
        assert!(es.contains(&Edge::new(7, 0)));
        assert_eq!(es.len(), 8);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn raw_cycle() -> impl Strategy<Value = [Vertex; CYCLE_LEN]> {
            proptest::sample::subsequence((0..100).collect::<Vec<_>>(), CYCLE_LEN)
                .prop_shuffle()
                .prop_map(|v| v.try_into().expect("eight labels"))
        }

        proptest! {
            #[test]
            fn canonicalization_is_stable_under_symmetry(raw in raw_cycle(), r in 0..CYCLE_LEN, flip: bool) {
                let base = OctCycle::new(raw).unwrap();
                let mut turned: [Vertex; CYCLE_LEN] =
                    std::array::from_fn(|i| raw[(i + r) % CYCLE_LEN]);
                if flip {
                    turned.reverse();
                }
                let c = OctCycle::new(turned).unwrap();
                prop_assert_eq!(c, base);
                prop_assert_eq!(c.vertices()[0], *c.vertices().iter().min().unwrap());
                prop_assert!(c.vertices()[1] < c.vertices()[7]);
            }

            #[test]
            fn edges_are_preserved_by_canonicalization(raw in raw_cycle()) {
                let c = OctCycle::new(raw).unwrap();
                let mut from_raw: Vec<Edge> =
                    (0..CYCLE_LEN).map(|i| Edge::new(raw[i], raw[(i + 1) % CYCLE_LEN])).collect();
                let mut from_canonical = c.edges().to_vec();
                from_raw.sort_unstable();
                from_canonical.sort_unstable();
                prop_assert_eq!(from_raw, from_canonical);
            }
        }
    }
}
