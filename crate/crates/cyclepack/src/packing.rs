//! Packings of complete graphs by 8-cycles: the packing value itself, the
//! leave table giving the minimum-leave shape for every order, and
//! inside-cycle certificates.

use thiserror::Error;

use crate::cycle::{OctCycle, Vertex};
use crate::edgeset::EdgeSet;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum OrderError {
    #[error("order {0} is below 8, the smallest order with an 8-cycle")]
    OrderTooSmall(usize),
}

/// Isomorphism type of the leave of a maximum 8-cycle packing.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LeaveKind {
    Empty,
    C3,
    K5,
    C5,
    C4,
    C3PlusC4,
    Bowtie,
    C4PlusC5,
    OneFactor,
    K4PlusOneFactor,
}

impl LeaveKind {
    pub fn name(&self) -> &'static str {
        match self {
            LeaveKind::Empty => "empty",
            LeaveKind::C3 => "C3",
            LeaveKind::K5 => "K5",
            LeaveKind::C5 => "C5",
            LeaveKind::C4 => "C4",
            LeaveKind::C3PlusC4 => "C3+C4",
            LeaveKind::Bowtie => "bowtie",
            LeaveKind::C4PlusC5 => "C4+C5",
            LeaveKind::OneFactor => "1-factor",
            LeaveKind::K4PlusOneFactor => "K4+1-factor",
        }
    }
}

/// Minimum leave shape for maximum 8-cycle packings of a given order.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LeaveSpec {
    pub order: usize,
    pub residue: usize,
    pub kind: LeaveKind,
}

impl LeaveSpec {
    /// Number of edges in the leave at this order.
    pub fn edge_count(&self) -> usize {
        match self.kind {
            LeaveKind::Empty => 0,
            LeaveKind::C3 => 3,
            LeaveKind::C4 => 4,
            LeaveKind::C5 => 5,
            LeaveKind::Bowtie => 6,
            LeaveKind::C3PlusC4 => 7,
            LeaveKind::C4PlusC5 => 9,
            LeaveKind::K5 => 10,
            LeaveKind::OneFactor => self.order / 2,
            LeaveKind::K4PlusOneFactor => 6 + (self.order - 4) / 2,
        }
    }
}

/// Minimum leave of a maximum 8-cycle packing of the complete graph on `n`
/// vertices, determined by `n mod 16`.
pub fn leave_spec(n: usize) -> Result<LeaveSpec, OrderError> {
    if n < 8 {
        return Err(OrderError::OrderTooSmall(n));
    }
    let residue = n % 16;
    let kind = match residue {
        1 => LeaveKind::Empty,
        3 => LeaveKind::C3,
        5 => LeaveKind::K5,
        7 => LeaveKind::C5,
        9 => LeaveKind::C4,
        11 => LeaveKind::C3PlusC4,
        13 => LeaveKind::Bowtie,
        15 => LeaveKind::C4PlusC5,
        0 | 2 | 8 | 10 => LeaveKind::OneFactor,
        _ => LeaveKind::K4PlusOneFactor,
    };
    Ok(LeaveSpec {
        order: n,
        residue,
        kind,
    })
}

/// Whether the complete graph on `n` vertices decomposes into 8-cycles
/// (empty leave): `n >= 8` and `n == 1 (mod 16)`.
pub fn admissible_system_order(n: usize) -> bool {
    n >= 8 && n % 16 == 1
}

/// A collection of 8-cycles in a complete graph, together with the edges it
/// leaves uncovered and any holes (vertex subsets whose internal edges are
/// outside the graph being packed).
///
/// This is a plain data holder; semantic soundness is established by
/// [`crate::verify::verify_packing`]. Complete bipartite decompositions are
/// represented with two holes, one per part.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Packing {
    pub order: usize,
    pub cycles: Vec<OctCycle>,
    pub leave: EdgeSet,
    pub holes: Vec<Vec<Vertex>>,
}

impl Packing {
    /// Edges the packing is responsible for: the complete graph on
    /// `0..order` minus every hole-internal edge.
    ///
    /// Labels must be in range (checked by verification before use).
    pub fn required_edges(&self) -> EdgeSet {
        let mut req = EdgeSet::complete(self.order);
        for hole in &self.holes {
            for (i, &u) in hole.iter().enumerate() {
                for &v in &hole[i + 1..] {
                    req.remove(crate::cycle::Edge::new(u, v));
                }
            }
        }
        req
    }

    /// Union of the cycles' edges. Panics if labels are out of range or a
    /// cycle repeats an edge; verification uses its own counting pass.
    pub fn covered_edges(&self) -> EdgeSet {
        let mut covered = EdgeSet::new(self.order);
        for c in &self.cycles {
            for e in c.edges() {
                covered.insert(e);
            }
        }
        covered
    }
}

/// Whether a certificate claims to reproduce the leave exactly or only to
/// form some maximum packing of the same leave size.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CertMode {
    Strict,
    Relaxed,
}

impl CertMode {
    pub fn name(&self) -> &'static str {
        match self {
            CertMode::Strict => "strict",
            CertMode::Relaxed => "relaxed",
        }
    }
}

/// One inside cycle per packed cycle, aligned index-by-index with
/// `Packing::cycles`. An inside cycle reuses the vertex set of its source
/// cycle while avoiding all eight of its edges.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct A2PCertificate {
    pub insides: Vec<OctCycle>,
    pub mode: CertMode,
}

impl A2PCertificate {
    /// Edges of the packing's universe left uncovered by the inside cycles.
    pub fn induced_leave(&self, p: &Packing) -> EdgeSet {
        let mut leave = p.required_edges();
        for c in &self.insides {
            for e in c.edges() {
                leave.remove(e);
            }
        }
        leave
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leave_table_examples() {
        let cases = [
            (8, LeaveKind::OneFactor, 4),
            (9, LeaveKind::C4, 4),
            (10, LeaveKind::OneFactor, 5),
            (11, LeaveKind::C3PlusC4, 7),
            (12, LeaveKind::K4PlusOneFactor, 10),
            (13, LeaveKind::Bowtie, 6),
            (14, LeaveKind::K4PlusOneFactor, 11),
            (15, LeaveKind::C4PlusC5, 9),
            (16, LeaveKind::OneFactor, 8),
            (17, LeaveKind::Empty, 0),
            (19, LeaveKind::C3, 3),
            (21, LeaveKind::K5, 10),
            (23, LeaveKind::C5, 5),
            (33, LeaveKind::Empty, 0),
            (200, LeaveKind::OneFactor, 100),
        ];
        for (n, kind, count) in cases {
            let spec = leave_spec(n).unwrap();
            assert_eq!(spec.kind, kind, "order {n}");
            assert_eq!(spec.edge_count(), count, "order {n}");
        }
        assert_eq!(leave_spec(7), Err(OrderError::OrderTooSmall(7)));
    }

    #[test]
    fn leave_count_matches_edge_residue() {
        // The leave must absorb the edge count of K_n modulo 8.
        for n in 8..=10_000 {
            let spec = leave_spec(n).unwrap();
            assert_eq!(
                spec.edge_count() % 8,
                n * (n - 1) / 2 % 8,
                "order {n}: leave {} edges",
                spec.edge_count()
            );
        }
    }

    #[test]
    fn leave_count_below_sixteen() {
        // A leave of 16 or more edges could hide another 8-cycle only by
        // count; the table never allocates more than 8 + n/2 edges and the
        // sparse residues stay below 16 outright.
        for n in 8..=64 {
            let spec = leave_spec(n).unwrap();
            if !matches!(
                spec.kind,
                LeaveKind::OneFactor | LeaveKind::K4PlusOneFactor
            ) {
                assert!(spec.edge_count() < 16);
            }
        }
    }

    #[test]
    fn system_orders() {
        assert!(admissible_system_order(17));
        assert!(admissible_system_order(33));
        assert!(admissible_system_order(113));
        for n in [1, 8, 9, 15, 16, 18, 32] {
            assert!(!admissible_system_order(n), "order {n}");
        }
    }

    #[test]
    fn system_condition_equals_divisibility_conditions() {
        // n >= 8, odd (even degree), and 8 | n(n-1)/2 together pin n = 1 mod 16.
        for n in 0..=2000usize {
            let divisible = n >= 8 && n % 2 == 1 && (n * (n - 1) / 2) % 8 == 0;
            assert_eq!(divisible, admissible_system_order(n), "order {n}");
        }
    }
}
