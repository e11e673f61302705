//! Constructions. Everything here assembles relabeled copies of the
//! catalog seeds into larger packings: complete-bipartite tilings, small
//! composite orders, hole fillers, and the general any-order recipe
//! (a base of order 8..=23 plus 16-vertex groups).
//!
//! Placement maps in this module were chosen so that wherever two blocks
//! share vertices, the leave of one is covered by the other exactly.

use std::ops::Range;

use thiserror::Error;

use crate::catalog::{self, CatalogKey};
use crate::cycle::{OctCycle, Vertex};
use crate::edgeset::EdgeSet;
use crate::packing::{leave_spec, A2PCertificate, CertMode, Packing};

/// What to build: a packing with an inside selection, or one provably
/// without any selection that preserves its leave.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Variant {
    A2p,
    NotA2p,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BuildError {
    #[error("order {order} is below {min}, the smallest this construction covers")]
    OrderTooSmall { order: usize, min: usize },
    #[error("order {0} is not a base order (8..=23)")]
    NotABaseOrder(usize),
    #[error("every maximum packing of order {0} admits a leave-preserving inside selection")]
    AlwaysA2p(usize),
    #[error("no complete-bipartite building block with part sizes {a} and {b}")]
    ShapeUnsupported { a: usize, b: usize },
    #[error("no hole filler with hub size {0} exists")]
    HubUnsupported(usize),
    #[error("hub size {0} exceeds 23; the general recipe never needs more")]
    HubTooLarge(usize),
    #[error("joining orders {a} and {b} does not give a minimum leave")]
    CompositionNotMaximum { a: usize, b: usize },
}

/// One block of a finished construction, for inspection and tests.
#[derive(Clone, Debug)]
pub struct PlacementStep {
    pub what: String,
    /// Indices into the built packing's cycle list.
    pub cycles: Range<usize>,
}

/// Locates a relabeled copy of a catalog packing inside a larger one:
/// vertex `v` of the catalog entry sits at `map[v]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BadWitness {
    pub key: CatalogKey,
    pub map: Vec<Vertex>,
}

impl BadWitness {
    /// Host vertices of the embedded copy, sorted.
    pub fn support(&self) -> Vec<Vertex> {
        let mut s = self.map.clone();
        s.sort_unstable();
        s
    }
}

/// A constructed packing together with everything the construction knows
/// about it: an inside selection when every block carried one, a witness
/// to an embedded sub-packing with no leave-preserving selection when one
/// was planted, and the block layout.
#[derive(Clone, Debug)]
pub struct Built {
    pub packing: Packing,
    pub certificate: Option<A2PCertificate>,
    pub witness: Option<BadWitness>,
    pub steps: Vec<PlacementStep>,
}

/// Accumulates relabeled blocks, refusing edge overlap.
struct Assembler {
    order: usize,
    cycles: Vec<OctCycle>,
    /// Inside cycles aligned with `cycles`; dropped once any block
    /// arrives without a certificate.
    insides: Option<Vec<OctCycle>>,
    used: EdgeSet,
    witness: Option<BadWitness>,
    steps: Vec<PlacementStep>,
}

impl Assembler {
    fn new(order: usize) -> Assembler {
        Assembler {
            order,
            cycles: Vec::new(),
            insides: Some(Vec::new()),
            used: EdgeSet::new(order),
            witness: None,
            steps: Vec::new(),
        }
    }

    fn place(&mut self, what: impl Into<String>, part: &Built, map: &[Vertex]) {
        assert_eq!(map.len(), part.packing.order, "map must cover the block");
        let start = self.cycles.len();
        for c in &part.packing.cycles {
            let placed = c.relabel(|v| map[v]).expect("placement map is injective");
            for e in placed.edges() {
                assert!(self.used.insert(e), "blocks overlap on edge {e}");
            }
            self.cycles.push(placed);
        }
        match (&mut self.insides, &part.certificate) {
            (Some(acc), Some(cert)) => {
                for ins in &cert.insides {
                    acc.push(ins.relabel(|v| map[v]).expect("placement map is injective"));
                }
            }
            _ => self.insides = None,
        }
        if self.witness.is_none() {
            if let Some(w) = &part.witness {
                self.witness = Some(BadWitness {
                    key: w.key,
                    map: w.map.iter().map(|&v| map[v]).collect(),
                });
            }
        }
        self.steps.push(PlacementStep {
            what: what.into(),
            cycles: start..self.cycles.len(),
        });
    }

    fn finish(self, holes: Vec<Vec<Vertex>>) -> Built {
        let mut packing = Packing {
            order: self.order,
            cycles: self.cycles,
            leave: EdgeSet::new(self.order),
            holes,
        };
        let required = packing.required_edges();
        let leave = required.difference(&self.used);
        assert_eq!(
            leave.len() + self.used.len(),
            required.len(),
            "a block covers an excluded pair"
        );
        packing.leave = leave;
        let certificate = self.insides.map(|insides| {
            let probe = A2PCertificate {
                insides,
                mode: CertMode::Relaxed,
            };
            let mode = if probe.induced_leave(&packing) == packing.leave {
                CertMode::Strict
            } else {
                CertMode::Relaxed
            };
            A2PCertificate { mode, ..probe }
        });
        Built {
            packing,
            certificate,
            witness: self.witness,
            steps: self.steps,
        }
    }
}

fn ident(n: usize) -> Vec<Vertex> {
    (0..n).collect()
}

/// Wrap a catalog entry as a block. Entries without an inside selection
/// become their own embedded witness.
fn seed(key: CatalogKey) -> Built {
    if key == CatalogKey::NotA2p(16) {
        return assemble_not_a2p_16().expect("order-16 assembly uses only valid blocks");
    }
    if key == CatalogKey::NotA2p(19) {
        return assemble_not_a2p_19().expect("order-19 assembly uses only valid blocks");
    }
    let e = catalog::get(key).expect("constructions use only in-catalog seeds");
    let witness = match key {
        CatalogKey::NotA2p(_) => Some(BadWitness {
            key,
            map: ident(e.packing.order),
        }),
        _ => None,
    };
    Built {
        packing: e.packing.clone(),
        certificate: e.certificate.clone(),
        witness,
        steps: vec![PlacementStep {
            what: key.to_string(),
            cycles: 0..e.packing.cycles.len(),
        }],
    }
}

/// Decompose the complete bipartite graph with parts `{0..a}` and
/// `{a..a+b}` into 8-cycles, by tiling with the 4x4 and 4x6 seeds.
/// Requires `a` a positive multiple of 4 and `b` even, both at least 4.
pub fn build_bipartite(a: usize, b: usize) -> Result<Built, BuildError> {
    if a < 4 || a % 4 != 0 || b < 4 || b % 2 != 0 {
        return Err(BuildError::ShapeUnsupported { a, b });
    }
    let tile44 = seed(CatalogKey::Bipartite(4, 4));
    let tile46 = seed(CatalogKey::Bipartite(4, 6));
    // Sizes 2 mod 4 peel off one 6-column block; the rest is quads.
    let quads_from = if b % 4 == 2 { 6 } else { 0 };
    let mut asm = Assembler::new(a + b);
    for xq in (0..a).step_by(4) {
        let xs = xq..xq + 4;
        if quads_from == 6 {
            let map: Vec<Vertex> = xs.clone().chain(a..a + 6).collect();
            asm.place(format!("rows {xq}+ x columns 0..6"), &tile46, &map);
        }
        for yq in (quads_from..b).step_by(4) {
            let map: Vec<Vertex> = xs.clone().chain(a + yq..a + yq + 4).collect();
            asm.place(format!("rows {xq}+ x columns {yq}+"), &tile44, &map);
        }
    }
    let built = asm.finish(vec![(0..a).collect(), (a..a + b).collect()]);
    debug_assert!(built.packing.leave.is_empty());
    Ok(built)
}

/// Join two packings on disjoint labels (`second` shifted past `first`)
/// with a complete-bipartite bridge. Valid only when the union of the two
/// leaves is still a minimum leave for the combined order.
pub fn compose(first: &Built, second: &Built) -> Result<Built, BuildError> {
    let (n1, n2) = (first.packing.order, second.packing.order);
    assert!(
        first.packing.holes.is_empty() && second.packing.holes.is_empty(),
        "compose expects hole-free blocks"
    );
    let bridge = build_bipartite(n1, n2)?;
    let mut asm = Assembler::new(n1 + n2);
    asm.place(format!("order-{n1} block"), first, &ident(n1));
    asm.place(format!("order-{n2} block"), second, &(n1..n1 + n2).collect::<Vec<_>>());
    asm.place("bridge", &bridge, &ident(n1 + n2));
    let built = asm.finish(vec![]);
    let want = leave_spec(n1 + n2)
        .map_err(|_| BuildError::OrderTooSmall {
            order: n1 + n2,
            min: 8,
        })?
        .edge_count();
    if built.packing.leave.len() != want {
        return Err(BuildError::CompositionNotMaximum { a: n1, b: n2 });
    }
    Ok(built)
}

/// Order-16 maximum packing admitting no leave-preserving inside
/// selection: the order-12 seed, an order-8 block covering its clique
/// leave, and a bipartite bridge. The leave is a perfect matching, like
/// the plain order-16 one.
pub(crate) fn assemble_not_a2p_16() -> Result<Built, BuildError> {
    let mut asm = Assembler::new(16);
    asm.place("order-12 block", &seed(CatalogKey::NotA2p(12)), &ident(12));
    asm.place(
        "order-8 block",
        &seed(CatalogKey::A2p(8)),
        &[15, 0, 2, 1, 3, 12, 14, 13],
    );
    let map: Vec<Vertex> = (4..16).collect();
    asm.place("bipartite 8x4", &build_bipartite(8, 4)?, &map);
    let mut built = asm.finish(vec![]);
    // The order-8 block covers the order-12 block's clique leave, so the
    // embedded copy is not closed off and cannot serve as the witness;
    // the assembly is a refutation seed in its own right.
    built.witness = Some(BadWitness {
        key: CatalogKey::NotA2p(16),
        map: ident(16),
    });
    Ok(built)
}

/// Order-19 maximum packing admitting no leave-preserving inside
/// selection: the order-19 recipe with its first order-11 block swapped
/// for the non-A2P one. The order-8 block covers that block's square
/// leave, so the embedded copy is not closed off; the assembly is a
/// refutation seed in its own right (any leave-preserving selection would
/// restrict, on the order-11 block, to a selection avoiding the shared
/// triangle, and none exists even with the square edges available).
pub(crate) fn assemble_not_a2p_19() -> Result<Built, BuildError> {
    let mut built = assemble_order_19(Variant::NotA2p)?;
    built.witness = Some(BadWitness {
        key: CatalogKey::NotA2p(19),
        map: ident(19),
    });
    Ok(built)
}

/// Two order-11 blocks share the triangle 0,1,2 (their common 3-cycle
/// leave); the order-8 block covers both 4-cycle leaves, and bridges
/// finish the cross pairs.
fn assemble_order_19(variant: Variant) -> Result<Built, BuildError> {
    let eleven = base_packing(11, variant)?;
    let mut asm = Assembler::new(19);
    asm.place("first order-11 block", &eleven, &ident(11));
    asm.place(
        "second order-11 block",
        &eleven,
        &[0, 1, 2, 11, 12, 13, 14, 15, 16, 17, 18],
    );
    asm.place(
        "order-8 block",
        &seed(CatalogKey::A2p(8)),
        &[14, 3, 11, 4, 12, 5, 13, 6],
    );
    let k44 = seed(CatalogKey::Bipartite(4, 4));
    asm.place("bipartite 4x4", &k44, &[3, 4, 5, 6, 15, 16, 17, 18]);
    asm.place("bipartite 4x4", &k44, &[7, 8, 9, 10, 11, 12, 13, 14]);
    asm.place("bipartite 4x4", &k44, &[7, 8, 9, 10, 15, 16, 17, 18]);
    Ok(asm.finish(vec![]))
}

/// A maximum packing of the complete graph on `{0..order}` for the base
/// orders 8..=23 that the general recipe starts from.
pub fn base_packing(order: usize, variant: Variant) -> Result<Built, BuildError> {
    if order < 8 {
        return Err(BuildError::OrderTooSmall { order, min: 8 });
    }
    if order > 23 {
        return Err(BuildError::NotABaseOrder(order));
    }
    if variant == Variant::NotA2p && order < 10 {
        return Err(BuildError::AlwaysA2p(order));
    }
    let bad = variant == Variant::NotA2p;
    let built = match order {
        8 | 9 | 10 | 11 | 15 | 17 => seed(if bad {
            CatalogKey::NotA2p(order)
        } else {
            CatalogKey::A2p(order)
        }),
        12 | 13 if bad => seed(CatalogKey::NotA2p(order)),
        16 if bad => assemble_not_a2p_16()?,
        19 if bad => assemble_not_a2p_19()?,
        12 => {
            let mut asm = Assembler::new(12);
            asm.place(
                "order-8 block",
                &seed(CatalogKey::A2p(8)),
                &(4..12).collect::<Vec<_>>(),
            );
            let map: Vec<Vertex> = (4..12).chain(0..4).collect();
            asm.place("bipartite 8x4", &build_bipartite(8, 4)?, &map);
            asm.finish(vec![])
        }
        13 => {
            // The order-8 block covers the order-9 block's 4-cycle leave
            // on 1,2,3,4 and vice versa; the bowtie leave meets at 0.
            let mut asm = Assembler::new(13);
            asm.place(
                "order-9 block",
                &seed(CatalogKey::A2p(9)),
                &[1, 2, 3, 4, 0, 5, 6, 7, 8],
            );
            asm.place(
                "order-8 block",
                &seed(CatalogKey::A2p(8)),
                &[12, 1, 9, 2, 10, 3, 11, 4],
            );
            asm.place(
                "bipartite 4x4",
                &seed(CatalogKey::Bipartite(4, 4)),
                &[5, 6, 7, 8, 9, 10, 11, 12],
            );
            asm.finish(vec![])
        }
        14 => {
            let ten = base_packing(10, variant)?;
            let mut asm = Assembler::new(14);
            asm.place("order-10 block", &ten, &(4..14).collect::<Vec<_>>());
            asm.place("bipartite 4x10", &build_bipartite(4, 10)?, &ident(14));
            asm.finish(vec![])
        }
        16 => compose(
            &base_packing(8, Variant::A2p)?,
            &base_packing(8, Variant::A2p)?,
        )?,
        18 => compose(&base_packing(8, Variant::A2p)?, &base_packing(10, variant)?)?,
        19 => assemble_order_19(variant)?,
        20 => {
            let sixteen = base_packing(16, variant)?;
            let mut asm = Assembler::new(20);
            asm.place("order-16 block", &sixteen, &(4..20).collect::<Vec<_>>());
            let map: Vec<Vertex> = (4..20).chain(0..4).collect();
            asm.place("bipartite 16x4", &build_bipartite(16, 4)?, &map);
            asm.finish(vec![])
        }
        21 => {
            // The order-17 block misses labels 1..=4 entirely, so the
            // uncovered pairs form a 5-clique on 0..=4.
            let key = if bad {
                CatalogKey::NotA2p(17)
            } else {
                CatalogKey::A2p(17)
            };
            let mut asm = Assembler::new(21);
            let map17: Vec<Vertex> = std::iter::once(0).chain(5..21).collect();
            asm.place("order-17 block", &seed(key), &map17);
            let map: Vec<Vertex> = (5..21).chain(1..5).collect();
            asm.place("bipartite 16x4", &build_bipartite(16, 4)?, &map);
            asm.finish(vec![])
        }
        22 => {
            let eighteen = base_packing(18, variant)?;
            let mut asm = Assembler::new(22);
            asm.place("order-18 block", &eighteen, &(4..22).collect::<Vec<_>>());
            asm.place("bipartite 4x18", &build_bipartite(4, 18)?, &ident(22));
            asm.finish(vec![])
        }
        23 => {
            // Order-9 and order-15 blocks meet only at 0; the order-8
            // block covers both their 4-cycle leaves; the 5-cycle leave
            // of the order-15 block survives as the final leave.
            let fifteen = seed(if bad {
                CatalogKey::NotA2p(15)
            } else {
                CatalogKey::A2p(15)
            });
            let mut asm = Assembler::new(23);
            asm.place(
                "order-9 block",
                &seed(CatalogKey::A2p(9)),
                &[1, 2, 3, 4, 0, 5, 6, 7, 8],
            );
            asm.place(
                "order-15 block",
                &fifteen,
                &[0, 13, 14, 15, 16, 22, 17, 9, 10, 11, 12, 18, 19, 20, 21],
            );
            asm.place(
                "order-8 block",
                &seed(CatalogKey::A2p(8)),
                &[12, 1, 9, 2, 10, 3, 11, 4],
            );
            let k44 = seed(CatalogKey::Bipartite(4, 4));
            let k46 = seed(CatalogKey::Bipartite(4, 6));
            asm.place("bipartite 4x4", &k44, &[1, 2, 3, 4, 13, 14, 15, 16]);
            asm.place("bipartite 4x4", &k44, &[5, 6, 7, 8, 9, 10, 11, 12]);
            asm.place("bipartite 4x4", &k44, &[5, 6, 7, 8, 13, 14, 15, 16]);
            asm.place(
                "bipartite 4x6",
                &k46,
                &[1, 2, 3, 4, 17, 18, 19, 20, 21, 22],
            );
            asm.place(
                "bipartite 4x6",
                &k46,
                &[5, 6, 7, 8, 17, 18, 19, 20, 21, 22],
            );
            asm.finish(vec![])
        }
        _ => unreachable!("orders 8..=23 are all matched"),
    };
    Ok(built)
}

/// Cover every pair of `{0..hub+16}` with an endpoint in the group
/// `{hub..hub+16}`. The hub `{0..hub}` is a hole. Odd hubs leave nothing
/// uncovered; even hubs leave a perfect matching on the group.
pub fn build_hole_filler(hub: usize, variant: Variant) -> Result<Built, BuildError> {
    if hub > 23 {
        return Err(BuildError::HubTooLarge(hub));
    }
    if hub == 2 || hub == 3 {
        // hub 2: the group degrees have the wrong parity for an empty or
        // matching leave; hub 3: no 16x2 bipartite block exists.
        return Err(BuildError::HubUnsupported(hub));
    }
    let order = hub + 16;
    let group: Vec<Vertex> = (hub..order).collect();
    let mut asm = Assembler::new(order);
    if hub % 2 == 1 {
        // One hub vertex joins the group to form an order-17 block; the
        // remaining hub vertices are bridged to the group.
        let key = if variant == Variant::NotA2p {
            CatalogKey::NotA2p(17)
        } else {
            CatalogKey::A2p(17)
        };
        let map: Vec<Vertex> = std::iter::once(0).chain(group.iter().copied()).collect();
        asm.place("order-17 block", &seed(key), &map);
        if hub > 1 {
            let map: Vec<Vertex> = group.iter().copied().chain(1..hub).collect();
            asm.place(
                "bipartite group x rest of hub",
                &build_bipartite(16, hub - 1)?,
                &map,
            );
        }
    } else {
        let sixteen = base_packing(16, variant)?;
        asm.place("order-16 block", &sixteen, &group);
        if hub > 0 {
            let map: Vec<Vertex> = group.iter().copied().chain(0..hub).collect();
            asm.place("bipartite group x hub", &build_bipartite(16, hub)?, &map);
        }
    }
    let holes = if hub == 0 {
        vec![]
    } else {
        vec![(0..hub).collect()]
    };
    Ok(asm.finish(holes))
}

/// Shape of the general recipe for order `n`: the base order
/// `8 + ((n - 8) mod 16)` and the number of 16-vertex groups.
pub fn recipe_shape(n: usize) -> Result<(usize, usize), BuildError> {
    if n < 8 {
        return Err(BuildError::OrderTooSmall { order: n, min: 8 });
    }
    let base = 8 + ((n - 8) % 16);
    Ok((base, (n - base) / 16))
}

/// Build a maximum 8-cycle packing of the complete graph on `{0..n}`.
///
/// `Variant::A2p` packings carry an inside selection reproducing the same
/// leave. `Variant::NotA2p` packings (orders 10 and up) carry a witness
/// locating an embedded sub-packing with no leave-preserving inside
/// selection, which rules one out for the whole packing.
pub fn build(n: usize, variant: Variant) -> Result<Built, BuildError> {
    let (base_order, groups) = recipe_shape(n)?;
    if variant == Variant::NotA2p && n < 10 {
        return Err(BuildError::AlwaysA2p(n));
    }
    if groups == 0 {
        return base_packing(base_order, variant);
    }
    // Bad builds corrupt the base when a bad base exists; for base orders
    // 8 and 9 (where every maximum packing has a leave-preserving inside
    // selection) they corrupt the first group's filler instead.
    let bad_base = variant == Variant::NotA2p && base_order >= 10;
    let bad_filler = variant == Variant::NotA2p && !bad_base;
    let mut asm = Assembler::new(n);
    let base = base_packing(
        base_order,
        if bad_base { Variant::NotA2p } else { Variant::A2p },
    )?;
    asm.place(format!("base order-{base_order}"), &base, &ident(base_order));
    let group_start = |i: usize| base_order + 16 * i;
    for i in 0..groups {
        let v = if bad_filler && i == 0 {
            Variant::NotA2p
        } else {
            Variant::A2p
        };
        let filler = build_hole_filler(base_order, v)?;
        let map: Vec<Vertex> = (0..base_order)
            .chain(group_start(i)..group_start(i) + 16)
            .collect();
        asm.place(format!("group {} filler", i + 1), &filler, &map);
    }
    for i in 0..groups {
        for j in i + 1..groups {
            let map: Vec<Vertex> = (group_start(i)..group_start(i) + 16)
                .chain(group_start(j)..group_start(j) + 16)
                .collect();
            asm.place(
                format!("bridge groups {}-{}", i + 1, j + 1),
                &build_bipartite(16, 16)?,
                &map,
            );
        }
    }
    Ok(asm.finish(vec![]))
}
