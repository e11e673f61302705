//! Enumeration of the inside cycles of an 8-cycle: the Hamiltonian cycles
//! on the same eight vertices that avoid every edge of the source cycle.
//!
//! Every 8-cycle has the same number of inside cycles because any two
//! 8-cycles are related by a relabeling. The enumerator therefore solves
//! the template cycle (0 1 2 3 4 5 6 7) once, caches the result, and maps
//! it through the source cycle's vertex sequence.

use std::sync::OnceLock;

use crate::cycle::{OctCycle, CYCLE_LEN};

/// The inside cycles of one source cycle, in lexicographic canonical order.
#[derive(Clone, Debug)]
pub struct InsideCycleSet {
    pub source: OctCycle,
    pub members: Vec<OctCycle>,
}

/// Enumerate every inside cycle of `c`, deterministically ordered.
pub fn enumerate_inside(c: &OctCycle) -> InsideCycleSet {
    let map = c.vertices();
    let mut members: Vec<OctCycle> = template_insides()
        .iter()
        .map(|t| {
            t.relabel(|pos| map[pos])
                .expect("template relabeling through distinct vertices")
        })
        .collect();
    members.sort_unstable();
    InsideCycleSet {
        source: *c,
        members,
    }
}

/// Number of inside cycles of `c`.
pub fn count_inside(c: &OctCycle) -> usize {
    enumerate_inside(c).members.len()
}

/// Inside cycles of the template cycle (0 1 2 3 4 5 6 7), computed once.
fn template_insides() -> &'static [OctCycle] {
    static CACHE: OnceLock<Vec<OctCycle>> = OnceLock::new();
    CACHE.get_or_init(|| {
        let forbidden = |a: usize, b: usize| (a + 1) % CYCLE_LEN == b || (b + 1) % CYCLE_LEN == a;
        let mut out = Vec::new();
        let mut path = [0usize; CYCLE_LEN];
        let mut used = [false; CYCLE_LEN];
        used[0] = true;
        fn extend(
            depth: usize,
            path: &mut [usize; CYCLE_LEN],
            used: &mut [bool; CYCLE_LEN],
            forbidden: &impl Fn(usize, usize) -> bool,
            out: &mut Vec<OctCycle>,
        ) {
            if depth == CYCLE_LEN {
                if !forbidden(path[CYCLE_LEN - 1], 0) && path[1] < path[CYCLE_LEN - 1] {
                    out.push(OctCycle::new(*path).expect("distinct template vertices"));
                }
                return;
            }
            for v in 1..CYCLE_LEN {
                if used[v] || forbidden(path[depth - 1], v) {
                    continue;
                }
                path[depth] = v;
                used[v] = true;
                extend(depth + 1, path, used, forbidden, out);
                used[v] = false;
            }
        }
        extend(1, &mut path, &mut used, &forbidden, &mut out);
        out.sort_unstable();
        out
    })
}
