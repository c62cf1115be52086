//! Regular projections: deterministic generic-direction search, exact
//! whole-graph regularity predicates, and the pairwise crossing cache that
//! link diagrams are assembled from.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::embedding::{Corner, Segment, SpatialEmbedding};
use super::{Rat, V3};
use crate::{Error, Result};

/// A projection direction (the kernel of the projection). Always a nonzero
/// primitive integer vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Direction(pub [i64; 3]);

impl std::fmt::Display for Direction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

/// Deterministic candidate sequence: primitive integer vectors ordered by
/// max-norm radius, then lexicographically.
pub fn direction_candidates() -> impl Iterator<Item = Direction> {
    (1i64..).flat_map(|r| {
        let mut out = Vec::new();
        for x in -r..=r {
            for y in -r..=r {
                for z in -r..=r {
                    if x.abs().max(y.abs()).max(z.abs()) != r {
                        continue;
                    }
                    let g = x.abs().gcd(&y.abs()).gcd(&z.abs());
                    if g != 1 {
                        continue; // non-primitive: same direction seen at smaller radius
                    }
                    out.push(Direction([x, y, z]));
                }
            }
        }
        out
    })
}

/// One transverse double point between two segment images.
#[derive(Debug, Clone)]
pub struct SceneCrossing {
    pub seg_i: usize,
    pub seg_j: usize,
    /// Parameters of the crossing along each segment's reference direction.
    pub t_i: Rat,
    pub t_j: Rat,
    /// Whether segment i passes over segment j (larger depth along d).
    pub i_over: bool,
    /// Sign of det(dir_i, dir_j) of the projected reference directions.
    pub det_sign: i8,
}

/// A validated regular projection of a whole embedded graph.
pub struct Scene {
    pub direction: Direction,
    pub segments: Vec<Segment>,
    /// Scene segment indices per edge, in chain order from the smaller
    /// endpoint.
    pub by_edge: BTreeMap<(u16, u16), Vec<usize>>,
    pub crossings: Vec<SceneCrossing>,
    /// Crossing ids attached to each segment, sorted by parameter along
    /// the reference direction.
    pub on_segment: Vec<Vec<(Rat, usize)>>,
}

fn i64_v3(v: [i64; 3]) -> V3 {
    V3::from_ints(v[0], v[1], v[2])
}

/// Right-handed projection basis for d: e1 = d x u, e2 = d x e1 with u the
/// first standard basis vector not parallel to d. det(e1, e2, d) > 0 holds
/// automatically.
fn basis(d: Direction) -> (V3, V3) {
    let dv = i64_v3(d.0);
    let mut e1 = V3::zero();
    for u in [[1, 0, 0], [0, 1, 0], [0, 0, 1]] {
        let c = dv.cross(&i64_v3(u));
        if !c.is_zero() {
            e1 = c;
            break;
        }
    }
    let e2 = dv.cross(&e1);
    (e1, e2)
}

fn det2(a: &[Rat; 2], b: &[Rat; 2]) -> Rat {
    &a[0] * &b[1] - &a[1] * &b[0]
}

fn sub2(a: &[Rat; 2], b: &[Rat; 2]) -> [Rat; 2] {
    [&a[0] - &b[0], &a[1] - &b[1]]
}

/// Orientation of c relative to the directed line a -> b.
fn orient(a: &[Rat; 2], b: &[Rat; 2], c: &[Rat; 2]) -> i8 {
    let d = det2(&sub2(b, a), &sub2(c, a));
    if d.is_positive() {
        1
    } else if d.is_negative() {
        -1
    } else {
        0
    }
}

/// Is c strictly inside the open segment (a, b)? Assumes c is on the line.
fn strictly_between2(a: &[Rat; 2], b: &[Rat; 2], c: &[Rat; 2]) -> bool {
    let ab = sub2(b, a);
    let t = &ab[0] * &(&c[0] - &a[0]) + &ab[1] * &(&c[1] - &a[1]);
    t.is_positive() && t < &ab[0] * &ab[0] + &ab[1] * &ab[1]
}

/// Project the whole embedding along `d` and verify regularity exactly:
/// no segment parallel to d, corner images pairwise distinct, no corner
/// image on another strand, all segment-pair contacts transverse interior
/// double points, and all double points distinct.
pub fn project_scene(emb: &SpatialEmbedding, d: Direction) -> Result<Scene> {
    let (e1, e2) = basis(d);
    let dv = i64_v3(d.0);
    let segments = emb.segments();
    let fail = |msg: String| Err(Error::Geometry(format!("projection {d} not regular: {msg}")));

    let proj = |p: &V3| -> [Rat; 2] { [e1.dot(p), e2.dot(p)] };
    struct SegView {
        a: [Rat; 2],
        b: [Rat; 2],
    }
    let views: Vec<SegView> = segments
        .iter()
        .map(|s| SegView {
            a: proj(&s.a),
            b: proj(&s.b),
        })
        .collect();

    // 1. nondegenerate segment images
    for (s, v) in segments.iter().zip(&views) {
        if v.a == v.b {
            return fail(format!("segment of edge {:?} parallel to direction", s.edge));
        }
    }

    // 2. corner images pairwise distinct
    let mut corner_pts: Vec<(Corner, [Rat; 2])> = Vec::new();
    for s in &segments {
        for (c, p) in [(s.a_corner, &s.a), (s.b_corner, &s.b)] {
            if corner_pts.iter().all(|(c2, _)| *c2 != c) {
                corner_pts.push((c, proj(p)));
            }
        }
    }
    for i in 0..corner_pts.len() {
        for j in (i + 1)..corner_pts.len() {
            if corner_pts[i].1 == corner_pts[j].1 {
                return fail("two corners project together".into());
            }
        }
    }

    // 3. no corner image interior to a non-incident segment image
    for (c, p) in &corner_pts {
        for (s, v) in segments.iter().zip(&views) {
            if s.a_corner == *c || s.b_corner == *c {
                continue;
            }
            if orient(&v.a, &v.b, p) == 0 && strictly_between2(&v.a, &v.b, p) {
                return fail("corner projects onto a strand".into());
            }
        }
    }

    // 4. pairwise contacts
    let mut crossings: Vec<SceneCrossing> = Vec::new();
    for i in 0..segments.len() {
        for j in (i + 1)..segments.len() {
            let (si, sj) = (&segments[i], &segments[j]);
            let (vi, vj) = (&views[i], &views[j]);
            let shares_corner = si.a_corner == sj.a_corner
                || si.a_corner == sj.b_corner
                || si.b_corner == sj.a_corner
                || si.b_corner == sj.b_corner;
            let di = sub2(&vi.b, &vi.a);
            let dj = sub2(&vj.b, &vj.a);
            let parallel = det2(&di, &dj).is_zero();
            if shares_corner {
                if parallel && orient(&vi.a, &vi.b, &vj.a) == 0 {
                    // collinear images of adjacent segments: any point of one
                    // strictly inside the other is an overlap
                    let inside = strictly_between2(&vi.a, &vi.b, &vj.a)
                        || strictly_between2(&vi.a, &vi.b, &vj.b)
                        || strictly_between2(&vj.a, &vj.b, &vi.a)
                        || strictly_between2(&vj.a, &vj.b, &vi.b);
                    if inside {
                        return fail("adjacent segments overlap in projection".into());
                    }
                }
                continue; // only touch at the shared corner image
            }
            // after checks 2 and 3, touching contacts are impossible; only
            // strict proper crossings remain
            let o1 = orient(&vi.a, &vi.b, &vj.a);
            let o2 = orient(&vi.a, &vi.b, &vj.b);
            let o3 = orient(&vj.a, &vj.b, &vi.a);
            let o4 = orient(&vj.a, &vj.b, &vi.b);
            if parallel {
                if o1 == 0 && o2 == 0 {
                    // collinear non-adjacent images: overlap iff an endpoint
                    // is strictly inside (endpoint coincidence is excluded)
                    if strictly_between2(&vi.a, &vi.b, &vj.a)
                        || strictly_between2(&vi.a, &vi.b, &vj.b)
                        || strictly_between2(&vj.a, &vj.b, &vi.a)
                        || strictly_between2(&vj.a, &vj.b, &vi.b)
                    {
                        return fail("segments overlap in projection".into());
                    }
                }
                continue;
            }
            if o1 * o2 < 0 && o3 * o4 < 0 {
                // proper crossing: solve for parameters
                let r = sub2(&vj.a, &vi.a);
                let denom = det2(&di, &dj);
                let t_i = det2(&r, &dj) / denom.clone();
                let t_j = det2(&r, &di) / denom.clone();
                let p_i3 = si.a.lerp(&si.b, &t_i);
                let p_j3 = sj.a.lerp(&sj.b, &t_j);
                let depth_i = dv.dot(&p_i3);
                let depth_j = dv.dot(&p_j3);
                debug_assert_ne!(depth_i, depth_j, "3d intersection slipped through");
                crossings.push(SceneCrossing {
                    seg_i: i,
                    seg_j: j,
                    t_i,
                    t_j,
                    i_over: depth_i > depth_j,
                    det_sign: if denom.is_positive() { 1 } else { -1 },
                });
            }
        }
    }

    // 5. all double points distinct (no triple points)
    let mut pts: Vec<([Rat; 2], usize)> = crossings
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let v = &views[c.seg_i];
            let d2 = sub2(&v.b, &v.a);
            ([&v.a[0] + &(&d2[0] * &c.t_i), &v.a[1] + &(&d2[1] * &c.t_i)], k)
        })
        .collect();
    pts.sort();
    for w in pts.windows(2) {
        if w[0].0 == w[1].0 {
            return fail("two crossings coincide".into());
        }
    }

    let mut by_edge: BTreeMap<(u16, u16), Vec<usize>> = BTreeMap::new();
    for (k, s) in segments.iter().enumerate() {
        by_edge.entry(s.edge).or_default().push(k);
    }
    for list in by_edge.values_mut() {
        list.sort_by_key(|&k| segments[k].index);
    }
    let mut on_segment: Vec<Vec<(Rat, usize)>> = vec![Vec::new(); segments.len()];
    for (k, c) in crossings.iter().enumerate() {
        on_segment[c.seg_i].push((c.t_i.clone(), k));
        on_segment[c.seg_j].push((c.t_j.clone(), k));
    }
    for list in on_segment.iter_mut() {
        list.sort_by(|a, b| a.0.cmp(&b.0));
    }

    Ok(Scene {
        direction: d,
        segments,
        by_edge,
        crossings,
        on_segment,
    })
}

/// The first `count` directions (in candidate order) whose projections of
/// the whole embedding are regular, with their scenes.
pub fn generic_directions(emb: &SpatialEmbedding, count: usize) -> Result<Vec<Scene>> {
    let mut out = Vec::new();
    for d in direction_candidates().take(DIRECTION_BUDGET) {
        if let Ok(scene) = project_scene(emb, d) {
            out.push(scene);
            if out.len() == count {
                return Ok(out);
            }
        }
    }
    Err(Error::Geometry(format!(
        "found only {} regular directions within budget {DIRECTION_BUDGET}",
        out.len()
    )))
}

const DIRECTION_BUDGET: usize = 4096;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn candidates_start_small_and_are_primitive() {
        let first: Vec<Direction> = direction_candidates().take(30).collect();
        assert_eq!(first[0], Direction([-1, -1, -1]));
        assert!(first.iter().all(|d| {
            let g = d.0[0].abs().gcd(&d.0[1].abs()).gcd(&d.0[2].abs());
            g == 1
        }));
    }

    #[test]
    fn moment_curve_k6_has_generic_direction() {
        let k6 = Graph::complete(6).unwrap();
        let emb = SpatialEmbedding::moment_curve_default(k6).unwrap();
        let scenes = generic_directions(&emb, 2).unwrap();
        assert_eq!(scenes.len(), 2);
        assert_ne!(scenes[0].direction, scenes[1].direction);
    }

    #[test]
    fn parallel_direction_rejected() {
        // a segment along the z axis makes (0,0,1) non-regular; the search
        // must skip it and return some later candidate
        let g = Graph::new(
            vec!["a".into(), "b".into(), "c".into()],
            &[("a".into(), "b".into()), ("b".into(), "c".into())],
        )
        .unwrap();
        let emb = SpatialEmbedding::new(
            g,
            vec![
                V3::from_ints(0, 0, 0),
                V3::from_ints(0, 0, 7),
                V3::from_ints(3, 1, 2),
            ],
            Default::default(),
        )
        .unwrap();
        assert!(project_scene(&emb, Direction([0, 0, 1])).is_err());
        let scenes = generic_directions(&emb, 1).unwrap();
        assert_ne!(scenes[0].direction, Direction([0, 0, 1]));
    }

    #[test]
    fn depth_order_recorded() {
        // two skew segments stacked along z, projected along z
        let g = Graph::new(
            vec!["a".into(), "b".into(), "c".into(), "d".into()],
            &[("a".into(), "b".into()), ("c".into(), "d".into())],
        )
        .unwrap();
        let emb = SpatialEmbedding::new(
            g,
            vec![
                V3::from_ints(0, 0, 5),
                V3::from_ints(2, 2, 5),
                V3::from_ints(0, 2, 0),
                V3::from_ints(2, 0, 0),
            ],
            Default::default(),
        )
        .unwrap();
        let scene = project_scene(&emb, Direction([0, 0, 1])).unwrap();
        assert_eq!(scene.crossings.len(), 1);
        // segment 0 (edge a-b) sits at z=5, over segment 1
        assert!(scene.crossings[0].i_over);
    }
}
