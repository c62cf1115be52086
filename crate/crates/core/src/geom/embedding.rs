//! Spatial embeddings: exact rational coordinates per vertex, optional
//! polyline interior points per edge, exact validation, and the seeded
//! samplers used by the verification suites.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{collinear, rat, seg_seg_3d, segment_hits_triangle, Rat, SegSeg, V3};
use crate::graph::Graph;
use crate::sampling::Sampler;
use crate::{Error, Result};

/// A corner of the embedded graph: a vertex image or a polyline joint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Corner {
    Vertex(u16),
    /// Joint `k` (0-based) of edge `(u, v)` with u < v.
    Joint(u16, u16, u16),
}

/// One straight segment of the embedded graph.
#[derive(Debug, Clone)]
pub struct Segment {
    pub edge: (u16, u16),
    /// Position within the edge polyline, 0-based from the smaller vertex.
    pub index: u16,
    pub a: V3,
    pub b: V3,
    pub a_corner: Corner,
    pub b_corner: Corner,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    CoincidentCorners(String, String),
    DegenerateSegment(String),
    CollinearJoint(String),
    IllegalContact { first: String, second: String, overlap: bool },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::CoincidentCorners(a, b) => write!(f, "coincident corners {a} and {b}"),
            Violation::DegenerateSegment(e) => write!(f, "zero-length segment on edge {e}"),
            Violation::CollinearJoint(e) => write!(f, "collinear polyline corner on edge {e}"),
            Violation::IllegalContact { first, second, overlap } => write!(
                f,
                "segments {first} and {second} {}",
                if *overlap { "overlap" } else { "intersect" }
            ),
        }
    }
}

/// An embedding of a graph into Q^3. Edges are straight segments unless a
/// polyline (list of interior points, ordered from the smaller vertex) is
/// attached. A rectilinear embedding has no polylines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpatialEmbedding {
    graph: Graph,
    coords: Vec<V3>,
    polylines: BTreeMap<(u16, u16), Vec<V3>>,
}

impl SpatialEmbedding {
    pub fn new(
        graph: Graph,
        coords: Vec<V3>,
        polylines: BTreeMap<(u16, u16), Vec<V3>>,
    ) -> Result<Self> {
        if coords.len() != graph.n() {
            return Err(Error::Geometry(format!(
                "need {} coordinates, got {}",
                graph.n(),
                coords.len()
            )));
        }
        for &(u, v) in polylines.keys() {
            if u >= v || !graph.has_edge(u, v) {
                return Err(Error::Geometry(format!(
                    "polyline key ({u},{v}) is not an ordered edge"
                )));
            }
        }
        Ok(SpatialEmbedding {
            graph,
            coords,
            polylines,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn coord(&self, v: u16) -> &V3 {
        &self.coords[v as usize]
    }

    pub fn is_rectilinear(&self) -> bool {
        self.polylines.is_empty()
    }

    /// The polyline chain of an edge, endpoints included, ordered from the
    /// smaller-indexed vertex.
    pub fn chain(&self, u: u16, v: u16) -> Vec<V3> {
        let (a, b) = (u.min(v), u.max(v));
        let mut pts = vec![self.coords[a as usize].clone()];
        if let Some(interior) = self.polylines.get(&(a, b)) {
            pts.extend(interior.iter().cloned());
        }
        pts.push(self.coords[b as usize].clone());
        pts
    }

    /// All straight segments of the embedded graph.
    pub fn segments(&self) -> Vec<Segment> {
        let mut out = Vec::new();
        for (u, v) in self.graph.edges() {
            let chain = self.chain(u, v);
            let last = chain.len() - 2;
            for (k, w) in chain.windows(2).enumerate() {
                let a_corner = if k == 0 {
                    Corner::Vertex(u)
                } else {
                    Corner::Joint(u, v, (k - 1) as u16)
                };
                let b_corner = if k == last {
                    Corner::Vertex(v)
                } else {
                    Corner::Joint(u, v, k as u16)
                };
                out.push(Segment {
                    edge: (u, v),
                    index: k as u16,
                    a: w[0].clone(),
                    b: w[1].clone(),
                    a_corner,
                    b_corner,
                });
            }
        }
        out
    }

    fn corner_name(&self, c: Corner) -> String {
        match c {
            Corner::Vertex(v) => self.graph.label(v).to_string(),
            Corner::Joint(u, v, k) => {
                format!("{}-{}#{}", self.graph.label(u), self.graph.label(v), k)
            }
        }
    }

    fn seg_name(&self, s: &Segment) -> String {
        format!(
            "{}-{}[{}]",
            self.graph.label(s.edge.0),
            self.graph.label(s.edge.1),
            s.index
        )
    }

    /// Exact embedding check: corners pairwise distinct, polyline corners
    /// nondegenerate, and segments meeting only at combinatorially shared
    /// corners. Returns all violations found.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        // corner points pairwise distinct
        let mut corners: Vec<(Corner, V3)> = (0..self.graph.n() as u16)
            .map(|v| (Corner::Vertex(v), self.coords[v as usize].clone()))
            .collect();
        for (&(u, v), pts) in &self.polylines {
            for (k, p) in pts.iter().enumerate() {
                corners.push((Corner::Joint(u, v, k as u16), p.clone()));
            }
        }
        for i in 0..corners.len() {
            for j in (i + 1)..corners.len() {
                if corners[i].1 == corners[j].1 {
                    out.push(Violation::CoincidentCorners(
                        self.corner_name(corners[i].0),
                        self.corner_name(corners[j].0),
                    ));
                }
            }
        }
        // per-edge chain nondegeneracy
        for (u, v) in self.graph.edges() {
            let chain = self.chain(u, v);
            let name = format!("{}-{}", self.graph.label(u), self.graph.label(v));
            for w in chain.windows(2) {
                if w[0] == w[1] {
                    out.push(Violation::DegenerateSegment(name.clone()));
                }
            }
            for w in chain.windows(3) {
                if collinear(&w[0], &w[1], &w[2]) {
                    out.push(Violation::CollinearJoint(name.clone()));
                }
            }
        }
        if !out.is_empty() {
            return out; // degenerate chains make pair checks unreliable
        }
        // pairwise segment contacts
        let segs = self.segments();
        for i in 0..segs.len() {
            for j in (i + 1)..segs.len() {
                let (s, t) = (&segs[i], &segs[j]);
                let shared: Vec<&V3> = [s.a_corner, s.b_corner]
                    .iter()
                    .filter(|c| **c == t.a_corner || **c == t.b_corner)
                    .map(|c| match *c {
                        Corner::Vertex(v) => &self.coords[v as usize],
                        Corner::Joint(u, v, k) => &self.polylines[&(u, v)][k as usize],
                    })
                    .collect();
                match seg_seg_3d(&s.a, &s.b, &t.a, &t.b) {
                    SegSeg::Disjoint => {}
                    SegSeg::Point(p) => {
                        if !shared.iter().any(|&sp| sp == &p) {
                            out.push(Violation::IllegalContact {
                                first: self.seg_name(s),
                                second: self.seg_name(t),
                                overlap: false,
                            });
                        }
                    }
                    SegSeg::Overlap => out.push(Violation::IllegalContact {
                        first: self.seg_name(s),
                        second: self.seg_name(t),
                        overlap: true,
                    }),
                }
            }
        }
        out
    }

    /// Rectilinear embedding with vertex v at (t_v, t_v^2, t_v^3). Moment
    /// curve points are in general position, so this is always a valid
    /// embedding for distinct parameters.
    pub fn moment_curve(graph: Graph, t_values: &[Rat]) -> Result<Self> {
        if t_values.len() != graph.n() {
            return Err(Error::Geometry("one t value per vertex required".into()));
        }
        for i in 0..t_values.len() {
            for j in (i + 1)..t_values.len() {
                if t_values[i] == t_values[j] {
                    return Err(Error::Geometry("moment curve t values must be distinct".into()));
                }
            }
        }
        let coords = t_values
            .iter()
            .map(|t| V3::new(t.clone(), t * t, t * t * t))
            .collect();
        SpatialEmbedding::new(graph, coords, BTreeMap::new())
    }

    /// Moment-curve embedding with t = 1..n in vertex declaration order.
    pub fn moment_curve_default(graph: Graph) -> Result<Self> {
        let ts: Vec<Rat> = (1..=graph.n() as i64).map(rat).collect();
        SpatialEmbedding::moment_curve(graph, &ts)
    }

    /// Seeded rectilinear embedding with integer coordinates in
    /// [-range, range], resampled until valid. Deterministic in
    /// (seed, stream, range).
    pub fn sample_rectilinear(graph: &Graph, seed: u64, stream: u64, range: i64) -> Result<Self> {
        if range <= 0 {
            return Err(Error::Sampling("range must be positive".into()));
        }
        let mut smp = Sampler::new(seed, stream);
        for _attempt in 0..RESAMPLE_BUDGET {
            let coords: Vec<V3> = (0..graph.n())
                .map(|_| {
                    V3::from_ints(smp.int_in(range), smp.int_in(range), smp.int_in(range))
                })
                .collect();
            let emb = SpatialEmbedding::new(graph.clone(), coords, BTreeMap::new())?;
            if emb.validate().is_empty() {
                return Ok(emb);
            }
        }
        Err(Error::Sampling(format!(
            "no valid rectilinear embedding after {RESAMPLE_BUDGET} attempts"
        )))
    }

    /// Seeded polyline embedding: a rectilinear sample whose first
    /// `bent_edges` edges (in a seeded random order) are replaced by
    /// two-segment polylines through a perturbed midpoint.
    pub fn sample_with_polylines(
        graph: &Graph,
        seed: u64,
        stream: u64,
        range: i64,
        bent_edges: usize,
    ) -> Result<Self> {
        if range <= 0 {
            return Err(Error::Sampling("range must be positive".into()));
        }
        let mut smp = Sampler::new(seed, stream);
        let edges = graph.edges();
        let bent = bent_edges.min(edges.len());
        for _attempt in 0..RESAMPLE_BUDGET {
            let coords: Vec<V3> = (0..graph.n())
                .map(|_| {
                    V3::from_ints(smp.int_in(range), smp.int_in(range), smp.int_in(range))
                })
                .collect();
            // Fisher-Yates from the sampler, then take a prefix
            let mut order: Vec<usize> = (0..edges.len()).collect();
            for i in (1..order.len()).rev() {
                order.swap(i, smp.index(i + 1));
            }
            let delta = (range / 4).max(1);
            let mut polylines = BTreeMap::new();
            for &ei in order.iter().take(bent) {
                let (u, v) = edges[ei];
                let mid = coords[u as usize]
                    .add(&coords[v as usize])
                    .scale(&(rat(1) / rat(2)));
                let off = V3::from_ints(smp.int_in(delta), smp.int_in(delta), smp.int_in(delta));
                polylines.insert((u, v), vec![mid.add(&off)]);
            }
            let emb = SpatialEmbedding::new(graph.clone(), coords, polylines)?;
            if emb.validate().is_empty() {
                return Ok(emb);
            }
        }
        Err(Error::Sampling(format!(
            "no valid polyline embedding after {RESAMPLE_BUDGET} attempts"
        )))
    }

    /// Seeded embedding of a wye graph in which the wye at `center` is
    /// flat: the center sits at the barycenter of its three neighbors and
    /// the closed triangle spanned by the neighbors meets the embedding in
    /// the wye alone. This realizes the disk condition needed to contract
    /// the wye into a triangle without changing any knot type.
    pub fn sample_flat_wye(graph: &Graph, center: u16, seed: u64, stream: u64, range: i64) -> Result<Self> {
        if graph.degree(center) != 3 {
            return Err(Error::Geometry("flat wye center must have degree 3".into()));
        }
        if range <= 0 {
            return Err(Error::Sampling("range must be positive".into()));
        }
        let nbrs: Vec<u16> = graph.neighbors(center).collect();
        let mut smp = Sampler::new(seed, stream);
        'attempt: for _ in 0..RESAMPLE_BUDGET {
            let mut coords: Vec<V3> = (0..graph.n())
                .map(|_| {
                    V3::from_ints(smp.int_in(range), smp.int_in(range), smp.int_in(range))
                })
                .collect();
            let bary = coords[nbrs[0] as usize]
                .add(&coords[nbrs[1] as usize])
                .add(&coords[nbrs[2] as usize])
                .scale(&(rat(1) / rat(3)));
            coords[center as usize] = bary;
            let emb = SpatialEmbedding::new(graph.clone(), coords, BTreeMap::new())?;
            if !emb.validate().is_empty() {
                continue;
            }
            // disk condition: nothing but the wye legs meets the closed
            // triangle of the three neighbors
            let tri = [
                emb.coord(nbrs[0]).clone(),
                emb.coord(nbrs[1]).clone(),
                emb.coord(nbrs[2]).clone(),
            ];
            for s in emb.segments() {
                if s.edge.0 == center || s.edge.1 == center {
                    continue; // a wye leg, inside the triangle by design
                }
                let mut allowed: Vec<&V3> = Vec::new();
                for &(corner, vtx) in [(s.a_corner, &s.a), (s.b_corner, &s.b)].iter() {
                    if let Corner::Vertex(v) = corner {
                        if nbrs.contains(&v) {
                            allowed.push(vtx);
                        }
                    }
                }
                if segment_hits_triangle(&s.a, &s.b, [&tri[0], &tri[1], &tri[2]], &allowed) {
                    continue 'attempt;
                }
            }
            return Ok(emb);
        }
        Err(Error::Sampling(format!(
            "no valid flat-wye embedding after {RESAMPLE_BUDGET} attempts"
        )))
    }

    /// Restriction to a subgraph whose labels form a subset of this
    /// embedding's labels (coordinates and polylines carried over).
    pub fn induced(&self, sub: &Graph) -> Result<SpatialEmbedding> {
        let mut coords = Vec::with_capacity(sub.n());
        for v in 0..sub.n() as u16 {
            let host_v = self.graph.vertex(sub.label(v))?;
            coords.push(self.coords[host_v as usize].clone());
        }
        let mut polylines = BTreeMap::new();
        for (u, v) in sub.edges() {
            let hu = self.graph.vertex(sub.label(u))?;
            let hv = self.graph.vertex(sub.label(v))?;
            if !self.graph.has_edge(hu, hv) {
                return Err(Error::Geometry(format!(
                    "edge {}-{} missing from host embedding",
                    sub.label(u),
                    sub.label(v)
                )));
            }
            let key = (hu.min(hv), hu.max(hv));
            if let Some(pts) = self.polylines.get(&key) {
                // reorient if the subgraph orders the endpoints differently
                let (a, b) = (u.min(v), u.max(v));
                let same_order = (self.graph.label(key.0), self.graph.label(key.1))
                    == (sub.label(a), sub.label(b));
                let mut pts = pts.clone();
                if !same_order {
                    pts.reverse();
                }
                polylines.insert((a, b), pts);
            }
        }
        SpatialEmbedding::new(sub.clone(), coords, polylines)
    }

    pub fn to_json(&self) -> EmbeddingJson {
        EmbeddingJson {
            graph: self.graph.to_json(),
            coordinates: (0..self.graph.n() as u16)
                .map(|v| {
                    (
                        self.graph.label(v).to_string(),
                        self.coords[v as usize].0.clone().map(|r| r.to_string()),
                    )
                })
                .collect(),
            polylines: self
                .polylines
                .iter()
                .map(|(&(u, v), pts)| {
                    (
                        format!("{}-{}", self.graph.label(u), self.graph.label(v)),
                        pts.iter()
                            .map(|p| p.0.clone().map(|r| r.to_string()))
                            .collect(),
                    )
                })
                .collect(),
        }
    }

    pub fn from_json(j: &EmbeddingJson) -> Result<Self> {
        let graph = Graph::from_json(&j.graph)?;
        let parse = |s: &str| -> Result<Rat> {
            Rat::from_str(s).map_err(|e| Error::Geometry(format!("bad rational {s:?}: {e}")))
        };
        let mut coords = vec![V3::zero(); graph.n()];
        let mut seen = vec![false; graph.n()];
        for (label, triple) in &j.coordinates {
            let v = graph.vertex(label)?;
            coords[v as usize] =
                V3::new(parse(&triple[0])?, parse(&triple[1])?, parse(&triple[2])?);
            seen[v as usize] = true;
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::Geometry(format!(
                "missing coordinates for vertex {:?}",
                graph.label(v as u16)
            )));
        }
        let mut polylines = BTreeMap::new();
        for (key, pts) in &j.polylines {
            let (a, b) = key
                .split_once('-')
                .ok_or_else(|| Error::Geometry(format!("bad polyline key {key:?}")))?;
            let (u, v) = (graph.vertex(a)?, graph.vertex(b)?);
            let mut chain: Vec<V3> = Vec::with_capacity(pts.len());
            for p in pts {
                chain.push(V3::new(parse(&p[0])?, parse(&p[1])?, parse(&p[2])?));
            }
            if u > v {
                chain.reverse();
            }
            polylines.insert((u.min(v), u.max(v)), chain);
        }
        SpatialEmbedding::new(graph, coords, polylines)
    }
}

const RESAMPLE_BUDGET: usize = 256;

/// Wire format: rationals as "p/q" or integer strings; polyline keys are
/// "label-label".
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EmbeddingJson {
    pub graph: crate::graph::GraphJson,
    pub coordinates: BTreeMap<String, [String; 3]>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub polylines: BTreeMap<String, Vec<[String; 3]>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn moment_curve_k6_is_valid() {
        let k6 = Graph::complete(6).unwrap();
        let emb = SpatialEmbedding::moment_curve_default(k6).unwrap();
        assert!(emb.validate().is_empty());
        assert!(emb.is_rectilinear());
    }

    #[test]
    fn moment_curve_rejects_duplicate_t() {
        let k4 = Graph::complete(4).unwrap();
        let ts = [rat(1), rat(2), rat(2), rat(4)];
        assert!(SpatialEmbedding::moment_curve(k4, &ts).is_err());
    }

    #[test]
    fn crossing_edges_flagged() {
        // two edges crossing at an interior point
        let g = Graph::new(
            vec!["a".into(), "b".into(), "c".into(), "d".into()],
            &[("a".into(), "b".into()), ("c".into(), "d".into())],
        )
        .unwrap();
        let coords = vec![
            V3::from_ints(0, 0, 0),
            V3::from_ints(2, 2, 0),
            V3::from_ints(0, 2, 0),
            V3::from_ints(2, 0, 0),
        ];
        let emb = SpatialEmbedding::new(g, coords, BTreeMap::new()).unwrap();
        let violations = emb.validate();
        assert_eq!(violations.len(), 1);
        assert!(matches!(
            violations[0],
            Violation::IllegalContact { overlap: false, .. }
        ));
    }

    #[test]
    fn coincident_vertices_flagged() {
        let g = Graph::new(
            vec!["a".into(), "b".into(), "c".into()],
            &[("a".into(), "b".into())],
        )
        .unwrap();
        let coords = vec![
            V3::from_ints(0, 0, 0),
            V3::from_ints(1, 0, 0),
            V3::from_ints(0, 0, 0),
        ];
        let emb = SpatialEmbedding::new(g, coords, BTreeMap::new()).unwrap();
        assert!(emb
            .validate()
            .iter()
            .any(|v| matches!(v, Violation::CoincidentCorners(..))));
    }

    #[test]
    fn sample_rectilinear_is_deterministic() {
        let g = Graph::complete_multipartite(&[3, 3, 1, 1]).unwrap();
        let a = SpatialEmbedding::sample_rectilinear(&g, 1, 0, 1_000_000).unwrap();
        let b = SpatialEmbedding::sample_rectilinear(&g, 1, 0, 1_000_000).unwrap();
        assert_eq!(a, b);
        assert!(a.validate().is_empty());
        assert!(SpatialEmbedding::sample_rectilinear(&g, 1, 0, 0).is_err());
    }

    #[test]
    fn polyline_sample_is_valid_and_bent() {
        let g = Graph::complete_multipartite(&[3, 3, 1, 1]).unwrap();
        let emb = SpatialEmbedding::sample_with_polylines(&g, 5, 1, 10_000, 4).unwrap();
        assert!(emb.validate().is_empty());
        assert!(!emb.is_rectilinear());
        assert_eq!(emb.polylines.len(), 4);
    }

    #[test]
    fn embedding_json_round_trip() {
        let g = Graph::complete_multipartite(&[3, 3, 1, 1]).unwrap();
        let emb = SpatialEmbedding::sample_with_polylines(&g, 5, 1, 10_000, 3).unwrap();
        let s = serde_json::to_string(&emb.to_json()).unwrap();
        let back = SpatialEmbedding::from_json(&serde_json::from_str(&s).unwrap()).unwrap();
        assert_eq!(emb, back);
        let s2 = serde_json::to_string(&back.to_json()).unwrap();
        assert_eq!(s, s2);
    }

    #[test]
    fn flat_wye_sample_puts_center_at_barycenter() {
        use crate::graph::enumerate_cycles;
        let k6 = Graph::complete(6).unwrap();
        let tri = enumerate_cycles(&k6, Some(3))[0].clone();
        let q7 = k6.delta_y(&tri).unwrap();
        let center = q7.vertex("n1").unwrap();
        let emb = SpatialEmbedding::sample_flat_wye(&q7, center, 11, 0, 1000).unwrap();
        assert!(emb.validate().is_empty());
        let nbrs: Vec<u16> = q7.neighbors(center).collect();
        let bary = emb
            .coord(nbrs[0])
            .add(emb.coord(nbrs[1]))
            .add(emb.coord(nbrs[2]))
            .scale(&(rat(1) / rat(3)));
        assert_eq!(emb.coord(center), &bary);
    }

    #[test]
    fn induced_subembedding_keeps_coordinates() {
        use crate::graph::SubgraphName;
        let g = crate::graph::standard_k3311();
        let emb = SpatialEmbedding::sample_rectilinear(&g, 2, 0, 1000).unwrap();
        let gx = SubgraphName::Gx.build().unwrap();
        let sub = emb.induced(&gx).unwrap();
        assert!(sub.validate().is_empty());
        for v in 0..gx.n() as u16 {
            let host_v = g.vertex(gx.label(v)).unwrap();
            assert_eq!(sub.coord(v), emb.coord(host_v));
        }
    }
}
