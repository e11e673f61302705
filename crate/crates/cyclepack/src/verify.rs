//! Semantic verification of packings and inside-cycle certificates.
//!
//! Verification never aborts on bad input: each check lands in a
//! [`VerificationReport`] as a pass or a failure with a human-readable
//! detail, and callers gate on [`VerificationReport::pass`].

use std::collections::HashMap;
use std::fmt;

use crate::cycle::{Edge, Vertex};
use crate::edgeset::EdgeSet;
use crate::packing::{leave_spec, A2PCertificate, CertMode, LeaveKind, Packing};

/// One verifiable property of a packing or certificate.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Clause {
    /// Labels in range, holes disjoint, leave inside the universe.
    CycleValidity,
    /// No edge is used by two cycles (or twice by one).
    EdgeDisjointness,
    /// Cycle edges plus leave tile the required edge set exactly.
    Coverage,
    /// Leave size equals the minimum for this order (hole-free only).
    LeaveCount,
    /// Leave is isomorphic to the tabulated shape (hole-free only).
    LeaveStructure,
    /// Certificate has one inside cycle per packed cycle.
    PairAlignment,
    /// Each inside cycle reuses its source cycle's vertex set.
    PairVertexSets,
    /// Each inside cycle avoids all eight edges of its source.
    PairEdgeDisjoint,
    /// Inside cycles are pairwise edge-disjoint.
    InsideDisjoint,
    /// Inside cycles stay inside the packed graph (labels, holes).
    InsideUniverse,
    /// Inside cycles leave exactly as many edges uncovered as the packing.
    InducedLeaveCount,
    /// Strict mode: inside cycles reproduce the leave edge-for-edge.
    InducedLeaveExact,
}

impl Clause {
    pub fn name(&self) -> &'static str {
        match self {
            Clause::CycleValidity => "cycle-validity",
            Clause::EdgeDisjointness => "edge-disjointness",
            Clause::Coverage => "edge-coverage",
            Clause::LeaveCount => "leave-count",
            Clause::LeaveStructure => "leave-structure",
            Clause::PairAlignment => "pair-alignment",
            Clause::PairVertexSets => "pair-vertex-sets",
            Clause::PairEdgeDisjoint => "pair-edge-disjointness",
            Clause::InsideDisjoint => "inside-mutual-disjointness",
            Clause::InsideUniverse => "inside-universe",
            Clause::InducedLeaveCount => "induced-leave-count",
            Clause::InducedLeaveExact => "induced-leave-exact",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub clause: Clause,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of verifying a packing or certificate: every evaluated clause
/// with its result. Clauses that do not apply (for example leave structure
/// on a packing with holes) are omitted.
#[derive(Clone, Debug, Default)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn clause(&self, clause: Clause) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.clause == clause)
    }

    fn push(&mut self, clause: Clause, passed: bool, detail: impl Into<String>) {
        self.checks.push(CheckResult {
            clause,
            passed,
            detail: detail.into(),
        });
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "{} {}: {}",
                if c.passed { "ok  " } else { "FAIL" },
                c.clause.name(),
                c.detail
            )?;
        }
        Ok(())
    }
}

/// Check that a packing is well-formed: labels in range, cycles pairwise
/// edge-disjoint, cycle edges plus leave tiling the packed graph exactly,
/// and (for hole-free packings) the leave matching the minimum size.
/// `strict_leave` additionally matches the leave against the tabulated
/// isomorphism type.
pub fn verify_packing(p: &Packing, strict_leave: bool) -> VerificationReport {
    let mut report = VerificationReport::default();

    if !check_labels(p, &mut report) {
        return report;
    }

    // Edge-disjointness with duplicate reporting.
    let mut usage: HashMap<Edge, Vec<usize>> = HashMap::new();
    for (i, c) in p.cycles.iter().enumerate() {
        for e in c.edges() {
            usage.entry(e).or_default().push(i);
        }
    }
    let mut dups: Vec<(Edge, Vec<usize>)> = usage
        .iter()
        .filter(|(_, v)| v.len() > 1)
        .map(|(e, v)| (*e, v.clone()))
        .collect();
    dups.sort_unstable_by_key(|(e, _)| *e);
    if dups.is_empty() {
        report.push(
            Clause::EdgeDisjointness,
            true,
            format!("{} cycles pairwise edge-disjoint", p.cycles.len()),
        );
    } else {
        let (e, cycles) = &dups[0];
        report.push(
            Clause::EdgeDisjointness,
            false,
            format!(
                "{} edge(s) reused; first: edge {e} used by cycles {cycles:?}",
                dups.len()
            ),
        );
    }

    // Coverage: covered + leave must tile the required set exactly.
    let required = p.required_edges();
    let mut union = EdgeSet::new(p.order);
    for e in usage.keys() {
        union.insert(*e);
    }
    let mut overlap = Vec::new();
    for e in p.leave.to_sorted_vec() {
        if !union.insert(e) {
            overlap.push(e);
        }
    }
    let missing = required.difference_sample(&union, 4);
    let extra = union.difference_sample(&required, 4);
    if overlap.is_empty() && missing.is_empty() && extra.is_empty() {
        report.push(
            Clause::Coverage,
            true,
            format!(
                "cycles and leave tile all {} packed edges",
                required.len()
            ),
        );
    } else {
        let mut parts = Vec::new();
        if !overlap.is_empty() {
            parts.push(format!("leave overlaps cycles at {:?}", &overlap[..overlap.len().min(4)]));
        }
        if !missing.is_empty() {
            parts.push(format!("uncovered edges missing from leave: {missing:?}"));
        }
        if !extra.is_empty() {
            parts.push(format!("edges outside the packed graph: {extra:?}"));
        }
        report.push(Clause::Coverage, false, parts.join("; "));
    }

    if p.holes.iter().all(|h| h.is_empty()) || p.holes.is_empty() {
        match leave_spec(p.order) {
            Ok(spec) => {
                let want = spec.edge_count();
                report.push(
                    Clause::LeaveCount,
                    p.leave.len() == want,
                    format!(
                        "leave has {} edge(s), minimum for order {} is {}",
                        p.leave.len(),
                        p.order,
                        want
                    ),
                );
                if strict_leave {
                    match leave_structure_matches(&p.leave, p.order, spec.kind) {
                        Ok(()) => report.push(
                            Clause::LeaveStructure,
                            true,
                            format!("leave is a {}", spec.kind.name()),
                        ),
                        Err(why) => report.push(
                            Clause::LeaveStructure,
                            false,
                            format!("leave is not a {}: {why}", spec.kind.name()),
                        ),
                    }
                }
            }
            Err(e) => report.push(Clause::LeaveCount, false, e.to_string()),
        }
    }

    report
}

/// Check an inside-cycle certificate against its packing. The packing is
/// assumed label-valid (run [`verify_packing`] first); label problems in
/// either are still reported rather than panicking.
pub fn verify_certificate(p: &Packing, cert: &A2PCertificate) -> VerificationReport {
    let mut report = VerificationReport::default();

    if !check_labels(p, &mut report) {
        return report;
    }
    report.checks.clear();

    if let Some(bad) = cert.insides.iter().find(|c| c.max_vertex() >= p.order) {
        report.push(
            Clause::InsideUniverse,
            false,
            format!("inside cycle {bad:?} uses a label outside 0..{}", p.order),
        );
        return report;
    }

    if cert.insides.len() != p.cycles.len() {
        report.push(
            Clause::PairAlignment,
            false,
            format!(
                "{} inside cycle(s) for {} packed cycle(s)",
                cert.insides.len(),
                p.cycles.len()
            ),
        );
        return report;
    }
    report.push(
        Clause::PairAlignment,
        true,
        format!("one inside cycle per packed cycle ({})", p.cycles.len()),
    );

    let mut set_mismatch = Vec::new();
    let mut edge_clash = Vec::new();
    for (i, (c, ins)) in p.cycles.iter().zip(&cert.insides).enumerate() {
        if c.vertex_set() != ins.vertex_set() {
            set_mismatch.push(i);
        } else if c.shares_edge_with(ins) {
            edge_clash.push(i);
        }
    }
    report.push(
        Clause::PairVertexSets,
        set_mismatch.is_empty(),
        if set_mismatch.is_empty() {
            "every inside cycle reuses its source's vertex set".to_string()
        } else {
            format!("vertex set differs from source at pair(s) {set_mismatch:?}")
        },
    );
    report.push(
        Clause::PairEdgeDisjoint,
        edge_clash.is_empty(),
        if edge_clash.is_empty() {
            "every inside cycle avoids its source's edges".to_string()
        } else {
            format!("inside cycle shares an edge with its source at pair(s) {edge_clash:?}")
        },
    );

    let mut inside_union = EdgeSet::new(p.order);
    let mut clashes: Vec<Edge> = Vec::new();
    for ins in &cert.insides {
        for e in ins.edges() {
            if !inside_union.insert(e) {
                clashes.push(e);
            }
        }
    }
    report.push(
        Clause::InsideDisjoint,
        clashes.is_empty(),
        if clashes.is_empty() {
            "inside cycles pairwise edge-disjoint".to_string()
        } else {
            clashes.sort_unstable();
            clashes.dedup();
            format!("edge(s) reused across inside cycles: {:?}", &clashes[..clashes.len().min(4)])
        },
    );

    let required = p.required_edges();
    let outside = inside_union.difference_sample(&required, 4);
    report.push(
        Clause::InsideUniverse,
        outside.is_empty(),
        if outside.is_empty() {
            "inside cycles stay within the packed graph".to_string()
        } else {
            format!("inside edge(s) outside the packed graph: {outside:?}")
        },
    );

    let induced = cert.induced_leave(p);
    report.push(
        Clause::InducedLeaveCount,
        induced.len() == p.leave.len(),
        format!(
            "inside cycles leave {} edge(s) uncovered, packing leaves {}",
            induced.len(),
            p.leave.len()
        ),
    );

    if cert.mode == CertMode::Strict {
        let missing = p.leave.difference_sample(&induced, 4);
        let extra = induced.difference_sample(&p.leave, 4);
        let exact = missing.is_empty() && extra.is_empty();
        report.push(
            Clause::InducedLeaveExact,
            exact,
            if exact {
                "inside cycles reproduce the leave edge-for-edge".to_string()
            } else {
                format!(
                    "induced leave differs: gains {extra:?}, drops {missing:?}"
                )
            },
        );
    }

    report
}

/// Label-range and hole sanity. Returns false (after recording the failure)
/// if later clauses cannot be evaluated safely.
fn check_labels(p: &Packing, report: &mut VerificationReport) -> bool {
    let mut problems = Vec::new();
    if p.leave.universe() != p.order {
        problems.push(format!(
            "leave declared over universe {} but order is {}",
            p.leave.universe(),
            p.order
        ));
    }
    for (i, c) in p.cycles.iter().enumerate() {
        if c.max_vertex() >= p.order {
            problems.push(format!("cycle {i} uses label {}", c.max_vertex()));
            break;
        }
    }
    let mut seen: HashMap<Vertex, usize> = HashMap::new();
    for (h, hole) in p.holes.iter().enumerate() {
        for &v in hole {
            if v >= p.order {
                problems.push(format!("hole {h} contains label {v}"));
                break;
            }
            if let Some(prev) = seen.insert(v, h) {
                problems.push(format!(
                    "label {v} appears in holes {prev} and {h}"
                ));
                break;
            }
        }
    }
    if problems.is_empty() {
        report.push(
            Clause::CycleValidity,
            true,
            format!(
                "{} cycle(s) and {} hole(s) use labels within 0..{}",
                p.cycles.len(),
                p.holes.len(),
                p.order
            ),
        );
        true
    } else {
        report.push(Clause::CycleValidity, false, problems.join("; "));
        false
    }
}

/// Classify a leave graph against a tabulated shape.
pub fn leave_structure_matches(
    leave: &EdgeSet,
    order: usize,
    kind: LeaveKind,
) -> Result<(), String> {
    let edges = leave.to_sorted_vec();
    let components = connected_components(&edges);
    let describe = |comps: &[Component]| -> String {
        if comps.is_empty() {
            "no edges".to_string()
        } else {
            comps
                .iter()
                .map(Component::describe)
                .collect::<Vec<_>>()
                .join(" + ")
        }
    };

    let ok = match kind {
        LeaveKind::Empty => components.is_empty(),
        LeaveKind::C3 => components.len() == 1 && components[0].is_cycle(3),
        LeaveKind::C4 => components.len() == 1 && components[0].is_cycle(4),
        LeaveKind::C5 => components.len() == 1 && components[0].is_cycle(5),
        LeaveKind::K5 => components.len() == 1 && components[0].is_complete(5),
        LeaveKind::Bowtie => components.len() == 1 && components[0].is_bowtie(),
        LeaveKind::C3PlusC4 => {
            components.len() == 2
                && components.iter().any(|c| c.is_cycle(3))
                && components.iter().any(|c| c.is_cycle(4))
        }
        LeaveKind::C4PlusC5 => {
            components.len() == 2
                && components.iter().any(|c| c.is_cycle(4))
                && components.iter().any(|c| c.is_cycle(5))
        }
        LeaveKind::OneFactor => {
            components.iter().all(|c| c.is_single_edge()) && components.len() == order / 2
        }
        LeaveKind::K4PlusOneFactor => {
            components.iter().filter(|c| c.is_complete(4)).count() == 1
                && components.iter().filter(|c| c.is_single_edge()).count()
                    == components.len() - 1
                && components.len() - 1 == (order - 4) / 2
        }
    };
    if ok {
        Ok(())
    } else {
        Err(describe(&components))
    }
}

struct Component {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
}

impl Component {
    fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self
            .vertices
            .iter()
            .map(|&v| {
                self.edges
                    .iter()
                    .filter(|e| e.u() == v || e.v() == v)
                    .count()
            })
            .collect();
        d.sort_unstable();
        d
    }

    fn is_single_edge(&self) -> bool {
        self.edges.len() == 1
    }

    fn is_cycle(&self, len: usize) -> bool {
        self.vertices.len() == len
            && self.edges.len() == len
            && self.degrees().iter().all(|&d| d == 2)
    }

    fn is_complete(&self, k: usize) -> bool {
        self.vertices.len() == k && self.edges.len() == k * (k - 1) / 2
    }

    fn is_bowtie(&self) -> bool {
        // Two triangles sharing exactly one vertex: degrees 2,2,2,2,4 and
        // the center's neighbors pair off by the two remaining edges.
        if self.vertices.len() != 5 || self.edges.len() != 6 {
            return false;
        }
        if self.degrees() != vec![2, 2, 2, 2, 4] {
            return false;
        }
        let center = *self
            .vertices
            .iter()
            .find(|&&v| {
                self.edges
                    .iter()
                    .filter(|e| e.u() == v || e.v() == v)
                    .count()
                    == 4
            })
            .unwrap();
        let outer: Vec<Edge> = self
            .edges
            .iter()
            .copied()
            .filter(|e| e.u() != center && e.v() != center)
            .collect();
        outer.len() == 2 && {
            let (a, b) = (outer[0], outer[1]);
            a.u() != b.u() && a.u() != b.v() && a.v() != b.u() && a.v() != b.v()
        }
    }

    fn describe(&self) -> String {
        format!(
            "component with {} vertices and {} edges",
            self.vertices.len(),
            self.edges.len()
        )
    }
}

fn connected_components(edges: &[Edge]) -> Vec<Component> {
    let mut adj: HashMap<Vertex, Vec<Vertex>> = HashMap::new();
    for e in edges {
        adj.entry(e.u()).or_default().push(e.v());
        adj.entry(e.v()).or_default().push(e.u());
    }
    let mut vertices: Vec<Vertex> = adj.keys().copied().collect();
    vertices.sort_unstable();
    let mut seen: HashMap<Vertex, bool> = HashMap::new();
    let mut out = Vec::new();
    for &start in &vertices {
        if seen.get(&start).copied().unwrap_or(false) {
            continue;
        }
        let mut stack = vec![start];
        let mut comp = Vec::new();
        seen.insert(start, true);
        while let Some(v) = stack.pop() {
            comp.push(v);
            for &w in &adj[&v] {
                if !seen.get(&w).copied().unwrap_or(false) {
                    seen.insert(w, true);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        let comp_edges: Vec<Edge> = edges
            .iter()
            .copied()
            .filter(|e| comp.binary_search(&e.u()).is_ok())
            .collect();
        out.push(Component {
            vertices: comp,
            edges: comp_edges,
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle::OctCycle;

    fn edgeset(n: usize, pairs: &[(usize, usize)]) -> EdgeSet {
        let mut s = EdgeSet::new(n);
        for &(u, v) in pairs {
            s.insert(Edge::new(u, v));
        }
        s
    }

    #[test]
    fn structure_classifier() {
        let n = 16;
        let c3 = edgeset(n, &[(0, 1), (1, 2), (0, 2)]);
        assert!(leave_structure_matches(&c3, n, LeaveKind::C3).is_ok());
        assert!(leave_structure_matches(&c3, n, LeaveKind::C4).is_err());

        let bowtie = edgeset(n, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]);
        assert!(leave_structure_matches(&bowtie, n, LeaveKind::Bowtie).is_ok());

        // A 6-cycle has the bowtie's edge count but not its shape.
        let c6 = edgeset(n, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]);
        assert!(leave_structure_matches(&c6, n, LeaveKind::Bowtie).is_err());

        let k4_1f = edgeset(
            12,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (2, 3),
                (4, 5),
                (6, 7),
                (8, 9),
                (10, 11),
            ],
        );
        assert!(leave_structure_matches(&k4_1f, 12, LeaveKind::K4PlusOneFactor).is_ok());

        let one_factor = edgeset(8, &[(0, 4), (1, 5), (2, 6), (3, 7)]);
        assert!(leave_structure_matches(&one_factor, 8, LeaveKind::OneFactor).is_ok());
        // Missing an edge: not a perfect matching.
        let partial = edgeset(8, &[(0, 4), (1, 5), (2, 6)]);
        assert!(leave_structure_matches(&partial, 8, LeaveKind::OneFactor).is_err());
    }

    #[test]
    fn duplicate_cycle_fails_edge_disjointness() {
        let c = OctCycle::new([0, 1, 2, 3, 4, 5, 6, 7]).unwrap();
        let p = Packing {
            order: 9,
            cycles: vec![c, c],
            leave: EdgeSet::new(9),
            holes: vec![],
        };
        let report = verify_packing(&p, false);
        let dis = report.clause(Clause::EdgeDisjointness).unwrap();
        assert!(!dis.passed);
        assert!(dis.detail.contains("used by cycles [0, 1]"));
    }

    #[test]
    fn out_of_range_label_reported_not_panicking() {
        let c = OctCycle::new([0, 1, 2, 3, 4, 5, 6, 9]).unwrap();
        let p = Packing {
            order: 8,
            cycles: vec![c],
            leave: EdgeSet::new(8),
            holes: vec![],
        };
        let report = verify_packing(&p, false);
        assert!(!report.pass());
        assert!(!report.clause(Clause::CycleValidity).unwrap().passed);
    }
}
