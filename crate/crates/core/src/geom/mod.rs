//! Exact rational geometry: points, segment predicates, projections.
//! Every decision here is made in exact arithmetic; there are no
//! tolerances anywhere.

mod diagram;
mod embedding;
mod project;

pub use diagram::{build_diagram, parse_gauss_code, LinkDiagram, Passage};
pub use embedding::{Corner, EmbeddingJson, Segment, SpatialEmbedding, Violation};
pub use project::{
    direction_candidates, generic_directions, project_scene, Direction, Scene, SceneCrossing,
};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// A point or vector in Q^3.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct V3(pub [Rat; 3]);

impl V3 {
    pub fn new(x: Rat, y: Rat, z: Rat) -> Self {
        V3([x, y, z])
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        V3([rat(x), rat(y), rat(z)])
    }

    pub fn zero() -> Self {
        V3([Rat::zero(), Rat::zero(), Rat::zero()])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn add(&self, o: &V3) -> V3 {
        V3([&self.0[0] + &o.0[0], &self.0[1] + &o.0[1], &self.0[2] + &o.0[2]])
    }

    pub fn sub(&self, o: &V3) -> V3 {
        V3([&self.0[0] - &o.0[0], &self.0[1] - &o.0[1], &self.0[2] - &o.0[2]])
    }

    pub fn scale(&self, s: &Rat) -> V3 {
        V3([&self.0[0] * s, &self.0[1] * s, &self.0[2] * s])
    }

    pub fn dot(&self, o: &V3) -> Rat {
        &self.0[0] * &o.0[0] + &self.0[1] * &o.0[1] + &self.0[2] * &o.0[2]
    }

    pub fn cross(&self, o: &V3) -> V3 {
        V3([
            &self.0[1] * &o.0[2] - &self.0[2] * &o.0[1],
            &self.0[2] * &o.0[0] - &self.0[0] * &o.0[2],
            &self.0[0] * &o.0[1] - &self.0[1] * &o.0[0],
        ])
    }

    /// Interpolate self + t * (to - self).
    pub fn lerp(&self, to: &V3, t: &Rat) -> V3 {
        self.add(&to.sub(self).scale(t))
    }
}

pub fn collinear(a: &V3, b: &V3, c: &V3) -> bool {
    b.sub(a).cross(&c.sub(a)).is_zero()
}

/// How two closed 3-space segments meet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SegSeg {
    Disjoint,
    Point(V3),
    Overlap,
}

/// Exact intersection of closed segments [p1,q1] and [p2,q2].
pub fn seg_seg_3d(p1: &V3, q1: &V3, p2: &V3, q2: &V3) -> SegSeg {
    let d1 = q1.sub(p1);
    let d2 = q2.sub(p2);
    let r = p2.sub(p1);
    let n = d1.cross(&d2);
    if !n.is_zero() {
        // lines are skew or meet in a point; coplanarity iff det(d1,d2,r)=0
        if !r.dot(&n).is_zero() {
            return SegSeg::Disjoint;
        }
        // solve p1 + t d1 = p2 + s d2 using an axis where n is nonzero
        let k = (0..3).find(|&k| !n.0[k].is_zero()).unwrap();
        let (a, b) = ((k + 1) % 3, (k + 2) % 3);
        let det = |u: &V3, v: &V3| &u.0[a] * &v.0[b] - &u.0[b] * &v.0[a];
        let denom = det(&d1, &d2);
        debug_assert!(!denom.is_zero());
        let t = det(&r, &d2) / denom.clone();
        let s = det(&r, &d1) / denom;
        let unit = |v: &Rat| !v.is_negative() && v <= &rat(1);
        if unit(&t) && unit(&s) {
            SegSeg::Point(p1.lerp(q1, &t))
        } else {
            SegSeg::Disjoint
        }
    } else {
        // parallel
        if !r.cross(&d1).is_zero() {
            return SegSeg::Disjoint;
        }
        // collinear: compare parameters along the dominant axis of d1
        let k = (0..3).find(|&k| !d1.0[k].is_zero());
        let Some(k) = k else {
            // degenerate zero-length first segment
            return if between(p1, p2, q2) {
                SegSeg::Point(p1.clone())
            } else {
                SegSeg::Disjoint
            };
        };
        let t_of = |p: &V3| (&p.0[k] - &p1.0[k]) / &d1.0[k];
        let (mut t2a, mut t2b) = (t_of(p2), t_of(q2));
        if t2a > t2b {
            std::mem::swap(&mut t2a, &mut t2b);
        }
        let lo = if t2a > Rat::zero() { t2a } else { Rat::zero() };
        let hi = if t2b < rat(1) { t2b } else { rat(1) };
        match lo.cmp(&hi) {
            std::cmp::Ordering::Greater => SegSeg::Disjoint,
            std::cmp::Ordering::Equal => SegSeg::Point(p1.lerp(q1, &lo)),
            std::cmp::Ordering::Less => SegSeg::Overlap,
        }
    }
}

/// Is x on the closed segment [a, b]?
pub fn between(x: &V3, a: &V3, b: &V3) -> bool {
    if !collinear(a, b, x) {
        return false;
    }
    // dot-product range check avoids division
    let ab = b.sub(a);
    let t = x.sub(a).dot(&ab);
    !t.is_negative() && t <= ab.dot(&ab)
}

/// Does the closed segment [p, q] touch the closed triangle anywhere
/// outside the listed allowed points?
pub fn segment_hits_triangle(p: &V3, q: &V3, tri: [&V3; 3], allowed: &[&V3]) -> bool {
    let [a, b, c] = tri;
    let n = b.sub(a).cross(&c.sub(a));
    debug_assert!(!n.is_zero(), "degenerate triangle");
    let s0 = n.dot(&p.sub(a));
    let s1 = n.dot(&q.sub(a));
    let ok = |x: &V3| allowed.iter().any(|&al| al == x);
    if (s0.is_positive() && s1.is_positive()) || (s0.is_negative() && s1.is_negative()) {
        return false;
    }
    if s0.is_zero() && s1.is_zero() {
        // coplanar: any closed contact counts
        for (e0, e1) in [(a, b), (b, c), (c, a)] {
            match seg_seg_3d(p, q, e0, e1) {
                SegSeg::Disjoint => {}
                SegSeg::Point(x) => {
                    if !ok(&x) {
                        return true;
                    }
                }
                SegSeg::Overlap => return true,
            }
        }
        for x in [p, q] {
            if point_in_triangle(x, tri) && !ok(x) {
                return true;
            }
        }
        false
    } else {
        // the segment meets the plane at exactly one point
        let t = &s0 / (&s0 - &s1);
        let x = p.lerp(q, &t);
        point_in_triangle(&x, tri) && !ok(&x)
    }
}

/// Closed point-in-triangle test for a point on the triangle plane.
fn point_in_triangle(x: &V3, tri: [&V3; 3]) -> bool {
    let [a, b, c] = tri;
    let n = b.sub(a).cross(&c.sub(a));
    for (e0, e1) in [(a, b), (b, c), (c, a)] {
        let side = e1.sub(e0).cross(&x.sub(e0)).dot(&n);
        if side.is_negative() {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: i64, y: i64, z: i64) -> V3 {
        V3::from_ints(x, y, z)
    }

    #[test]
    fn skew_segments_miss() {
        assert_eq!(
            seg_seg_3d(&v(0, 0, 0), &v(1, 0, 0), &v(0, 1, 1), &v(1, 1, 1)),
            SegSeg::Disjoint
        );
    }

    #[test]
    fn crossing_segments_meet_at_point() {
        match seg_seg_3d(&v(0, 0, 0), &v(2, 2, 0), &v(0, 2, 0), &v(2, 0, 0)) {
            SegSeg::Point(p) => assert_eq!(p, v(1, 1, 0)),
            other => panic!("expected point, got {other:?}"),
        }
    }

    #[test]
    fn shared_endpoint_is_a_point_contact() {
        match seg_seg_3d(&v(0, 0, 0), &v(1, 0, 0), &v(1, 0, 0), &v(1, 5, 7)) {
            SegSeg::Point(p) => assert_eq!(p, v(1, 0, 0)),
            other => panic!("expected point, got {other:?}"),
        }
    }

    #[test]
    fn collinear_overlap_detected() {
        assert_eq!(
            seg_seg_3d(&v(0, 0, 0), &v(4, 0, 0), &v(2, 0, 0), &v(6, 0, 0)),
            SegSeg::Overlap
        );
        assert_eq!(
            seg_seg_3d(&v(0, 0, 0), &v(2, 0, 0), &v(2, 0, 0), &v(6, 0, 0)),
            SegSeg::Point(v(2, 0, 0))
        );
        assert_eq!(
            seg_seg_3d(&v(0, 0, 0), &v(1, 0, 0), &v(3, 0, 0), &v(6, 0, 0)),
            SegSeg::Disjoint
        );
    }

    #[test]
    fn triangle_contact() {
        let a = v(0, 0, 0);
        let b = v(4, 0, 0);
        let c = v(0, 4, 0);
        // pierces the interior
        assert!(segment_hits_triangle(&v(1, 1, -1), &v(1, 1, 1), [&a, &b, &c], &[]));
        // touches only at an allowed vertex
        assert!(!segment_hits_triangle(&v(0, 0, 0), &v(0, 0, 5), [&a, &b, &c], &[&a]));
        // same touch, not allowed
        assert!(segment_hits_triangle(&v(0, 0, 0), &v(0, 0, 5), [&a, &b, &c], &[]));
        // passes beside the triangle
        assert!(!segment_hits_triangle(&v(5, 5, -1), &v(5, 5, 1), [&a, &b, &c], &[]));
    }
}
