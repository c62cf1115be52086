//! Cycle-type classification for the standard K_{3,3,1,1} and the
//! distinguished 6-cycle subset entering its integral identity.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use serde::Serialize;

use crate::graph::{enumerate_cycles, standard_k3311, Cycle, CyclePair, Graph, Tag};
use crate::{Error, Result};

/// Resolved structure of a (possibly relabeled) K_{3,3,1,1}: the two
/// degree-7 vertices and the two color classes, read from vertex tags.
#[derive(Debug, Clone)]
pub struct K3311 {
    pub graph: Graph,
    pub x: u16,
    pub y: u16,
    pub black: u64,
    pub white: u64,
}

impl K3311 {
    pub fn from_graph(g: &Graph) -> Result<Self> {
        let mut x = None;
        let mut y = None;
        let mut black = 0u64;
        let mut white = 0u64;
        for v in 0..g.n() as u16 {
            match g.tag(v) {
                Some(Tag::X) => x = Some(v),
                Some(Tag::Y) => y = Some(v),
                Some(Tag::Black) => black |= 1 << v,
                Some(Tag::White) => white |= 1 << v,
                None => {
                    return Err(Error::Engine(format!(
                        "vertex {:?} is untagged; K3311 classification needs full tags",
                        g.label(v)
                    )))
                }
            }
        }
        let (Some(x), Some(y)) = (x, y) else {
            return Err(Error::Engine("missing x or y tag".into()));
        };
        if black.count_ones() != 3 || white.count_ones() != 3 || g.n() != 8 {
            return Err(Error::Engine("tags do not describe a K3311".into()));
        }
        if g.edge_count() != 22 || !g.has_edge(x, y) || g.degree(x) != 7 || g.degree(y) != 7 {
            return Err(Error::Engine("graph is not a complete K3311".into()));
        }
        Ok(K3311 {
            graph: g.clone(),
            x,
            y,
            black,
            white,
        })
    }

    pub fn standard() -> &'static K3311 {
        static CACHE: OnceLock<K3311> = OnceLock::new();
        CACHE.get_or_init(|| K3311::from_graph(&standard_k3311()).expect("standard graph tags"))
    }

    fn is_black(&self, v: u16) -> bool {
        self.black >> v & 1 == 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum CycleType {
    A,
    B,
    C,
    D,
}

/// Classify an 8-cycle, or a 6-cycle through both x and y:
/// C when the edge xy lies on the cycle; A when the cycle neighbors of x
/// mix both colors; B when x sees one color and y the other; D (6-cycles
/// only) when both see the same single color.
pub fn classify_cycle(ctx: &K3311, cycle: &Cycle) -> Result<CycleType> {
    let len = cycle.len();
    let through_xy = cycle.contains(ctx.x) && cycle.contains(ctx.y);
    if !(len == 8 || (len == 6 && through_xy)) {
        return Err(Error::Engine(format!(
            "cycle of length {len} is outside the classified families"
        )));
    }
    if cycle.contains_edge(ctx.x, ctx.y) {
        return Ok(CycleType::C);
    }
    let (xa, xb) = cycle.neighbors_of(ctx.x).expect("x on cycle");
    let (ya, yb) = cycle.neighbors_of(ctx.y).expect("y on cycle");
    let x_mixed = ctx.is_black(xa) != ctx.is_black(xb);
    let y_mixed = ctx.is_black(ya) != ctx.is_black(yb);
    debug_assert_eq!(x_mixed, y_mixed, "mixedness agrees at x and y");
    if x_mixed {
        return Ok(CycleType::A);
    }
    if ctx.is_black(xa) != ctx.is_black(ya) {
        Ok(CycleType::B)
    } else {
        debug_assert_eq!(len, 6, "same-color monochromatic needs a 6-cycle");
        Ok(CycleType::D)
    }
}

/// Classify a (4,4)-pair: C when the edge xy lies on it, B when x and y
/// fall in different components, A otherwise.
pub fn classify_pair44(ctx: &K3311, pair: &CyclePair) -> Result<CycleType> {
    if pair.shape() != (4, 4) {
        return Err(Error::Engine(format!(
            "pair of shape {:?} is not a (4,4)-pair",
            pair.shape()
        )));
    }
    if pair.contains_edge(ctx.x, ctx.y) {
        return Ok(CycleType::C);
    }
    let x_in_first = pair.first().contains(ctx.x);
    let y_in_first = pair.first().contains(ctx.y);
    if x_in_first == y_in_first {
        Ok(CycleType::A)
    } else {
        Ok(CycleType::B)
    }
}

/// The distinguished subset of 6-cycles: those through exactly one of
/// x, y, plus those through both of type A, B or C. Type-D 6-cycles and
/// the 6-cycles of the inner K_{3,3} are excluded.
pub fn gamma6_prime(ctx: &K3311) -> Result<BTreeSet<Cycle>> {
    let mut out = BTreeSet::new();
    for c in enumerate_cycles(&ctx.graph, Some(6)) {
        let hx = c.contains(ctx.x);
        let hy = c.contains(ctx.y);
        let keep = match (hx, hy) {
            (true, true) => classify_cycle(ctx, &c)? != CycleType::D,
            (false, false) => false,
            _ => true,
        };
        if keep {
            out.insert(c);
        }
    }
    Ok(out)
}

/// gamma6_prime for the standard labeling, computed once and cached.
pub fn gamma6_prime_standard() -> &'static BTreeSet<Cycle> {
    static CACHE: OnceLock<BTreeSet<Cycle>> = OnceLock::new();
    CACHE.get_or_init(|| gamma6_prime(K3311::standard()).expect("standard classification"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate_disjoint_pairs;

    fn cyc(ctx: &K3311, labels: &[&str]) -> Cycle {
        let verts: Vec<u16> = labels
            .iter()
            .map(|l| ctx.graph.vertex(l).unwrap())
            .collect();
        Cycle::in_graph(&ctx.graph, &verts).unwrap()
    }

    #[test]
    fn spec_examples() {
        let ctx = K3311::standard();
        // 8-cycle x-1-2-3-y-4-5-6-x: x sees 1 (black) and 6 (white)
        assert_eq!(
            classify_cycle(ctx, &cyc(ctx, &["x", "1", "2", "3", "y", "4", "5", "6"])).unwrap(),
            CycleType::A
        );
        // 6-cycle x-1-2-y-4-5-x: x sees {1,5} black, y sees {2,4} white
        assert_eq!(
            classify_cycle(ctx, &cyc(ctx, &["x", "1", "2", "y", "4", "5"])).unwrap(),
            CycleType::B
        );
        // 6-cycle x-1-y-3-2-5-x: x sees {1,5} black, y sees {1,3} black
        assert_eq!(
            classify_cycle(ctx, &cyc(ctx, &["x", "1", "y", "3", "2", "5"])).unwrap(),
            CycleType::D
        );
        // contains the edge xy
        assert_eq!(
            classify_cycle(ctx, &cyc(ctx, &["x", "y", "1", "2", "3", "4"])).unwrap(),
            CycleType::C
        );
    }

    #[test]
    fn eight_cycle_types_partition() {
        let ctx = K3311::standard();
        let mut counts = [0usize; 4];
        let cycles = enumerate_cycles(&ctx.graph, Some(8));
        for c in &cycles {
            let t = classify_cycle(ctx, c).unwrap();
            counts[t as usize] += 1;
            assert_ne!(t, CycleType::D, "8-cycles are never type D");
        }
        assert_eq!(counts.iter().sum::<usize>(), cycles.len());
        assert!(counts[0] > 0 && counts[1] > 0 && counts[2] > 0);
    }

    #[test]
    fn six_cycle_types_partition() {
        let ctx = K3311::standard();
        let mut counts = [0usize; 4];
        for c in enumerate_cycles(&ctx.graph, Some(6)) {
            if c.contains(ctx.x) && c.contains(ctx.y) {
                counts[classify_cycle(ctx, &c).unwrap() as usize] += 1;
            } else {
                assert!(classify_cycle(ctx, &c).is_err());
            }
        }
        assert!(counts.iter().all(|&c| c > 0), "all four types occur: {counts:?}");
    }

    #[test]
    fn pair44_types_partition() {
        let ctx = K3311::standard();
        let pairs = enumerate_disjoint_pairs(&ctx.graph, Some((4, 4)));
        assert_eq!(pairs.len(), 45);
        let mut counts = [0usize; 4];
        for p in &pairs {
            counts[classify_pair44(ctx, p).unwrap() as usize] += 1;
        }
        // 9 same-component, 18 split, 18 through the edge xy
        assert_eq!(counts, [9, 18, 18, 0]);
    }

    #[test]
    fn pair35_count() {
        let ctx = K3311::standard();
        assert_eq!(enumerate_disjoint_pairs(&ctx.graph, Some((3, 5))).len(), 72);
    }

    #[test]
    fn gamma6_prime_excludes_d_and_inner_cycles() {
        let ctx = K3311::standard();
        let g6 = gamma6_prime_standard();
        for c in g6 {
            let hx = c.contains(ctx.x);
            let hy = c.contains(ctx.y);
            assert!(hx || hy);
            if hx && hy {
                assert_ne!(classify_cycle(ctx, c).unwrap(), CycleType::D);
            }
        }
        // proper subset of all 6-cycles
        let all6 = enumerate_cycles(&ctx.graph, Some(6));
        assert!(g6.len() < all6.len());
        for c in &all6 {
            let hx = c.contains(ctx.x);
            let hy = c.contains(ctx.y);
            if !hx && !hy {
                assert!(!g6.contains(c), "inner 6-cycles excluded");
            }
            if hx && hy && classify_cycle(ctx, c).unwrap() == CycleType::D {
                assert!(!g6.contains(c), "type D excluded");
            }
        }
    }
}
