//! Labeled simple graphs, cycle enumeration, delta-wye exchanges and the
//! named subgraphs of the standard K_{3,3,1,1}.

mod canon;
mod cycle;
mod family;
mod named;

pub use canon::{canonical_label, degree_fingerprint, isomorphic};
pub use cycle::{enumerate_cycles, enumerate_disjoint_pairs, Cycle, CyclePair};
pub use family::{generate_family, FamilyMember, FamilyMove, FamilyReport, MoveKind};
pub use named::{standard_k3311, standard_p7, standard_q8, SubgraphName};

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Maximum supported vertex count. Adjacency rows are single 64-bit masks.
pub const MAX_VERTICES: usize = 64;

/// Vertex role in the standard multipartite labelings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tag {
    Black,
    White,
    X,
    Y,
}

/// A labeled simple graph. Vertices are referenced internally by dense
/// indices in declaration order; labels are preserved for I/O and for
/// identifying vertices across derived graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    index: BTreeMap<String, u16>,
    adj: Vec<u64>,
    tags: BTreeMap<u16, Tag>,
}

impl Graph {
    pub fn new(labels: Vec<String>, edges: &[(String, String)]) -> Result<Self> {
        if labels.len() > MAX_VERTICES {
            return Err(Error::Graph(format!(
                "too many vertices: {} (max {})",
                labels.len(),
                MAX_VERTICES
            )));
        }
        let mut index = BTreeMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i as u16).is_some() {
                return Err(Error::Graph(format!("duplicate vertex label {l:?}")));
            }
        }
        let mut g = Graph {
            adj: vec![0; labels.len()],
            labels,
            index,
            tags: BTreeMap::new(),
        };
        for (a, b) in edges {
            let u = g.vertex(a)?;
            let v = g.vertex(b)?;
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// The complete graph K_n on labels "1".."n".
    pub fn complete(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Graph("complete graph needs n >= 1".into()));
        }
        let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let mut g = Graph::new(labels, &[])?;
        for u in 0..n as u16 {
            for v in (u + 1)..n as u16 {
                g.insert_edge(u, v)?;
            }
        }
        Ok(g)
    }

    /// The complete multipartite graph on the given part sizes.
    ///
    /// The shapes `[3,3]`, `[3,3,1]` and `[3,3,1,1]` get the standard
    /// labeling used throughout this crate: black vertices 1,3,5, white
    /// vertices 2,4,6 and singleton vertices x (and y), so that K_{3,3}
    /// and K_{3,3,1} embed in the standard K_{3,3,1,1} label-for-label.
    /// Other shapes are labeled p1v1, p1v2, ... without tags.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::Graph("parts must be nonempty positive sizes".into()));
        }
        let standard = matches!(parts, [3, 3] | [3, 3, 1] | [3, 3, 1, 1]);
        let mut labels = Vec::new();
        let mut part_of = Vec::new();
        let mut tags = Vec::new();
        for (p, &size) in parts.iter().enumerate() {
            for k in 0..size {
                let (label, tag) = if standard {
                    match p {
                        0 => ((2 * k + 1).to_string(), Some(Tag::Black)),
                        1 => ((2 * k + 2).to_string(), Some(Tag::White)),
                        2 => ("x".to_string(), Some(Tag::X)),
                        _ => ("y".to_string(), Some(Tag::Y)),
                    }
                } else {
                    (format!("p{}v{}", p + 1, k + 1), None)
                };
                labels.push(label);
                part_of.push(p);
                tags.push(tag);
            }
        }
        let mut g = Graph::new(labels, &[])?;
        for u in 0..g.n() as u16 {
            for v in (u + 1)..g.n() as u16 {
                if part_of[u as usize] != part_of[v as usize] {
                    g.insert_edge(u, v)?;
                }
            }
        }
        for (i, tag) in tags.into_iter().enumerate() {
            if let Some(t) = tag {
                g.tags.insert(i as u16, t);
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn label(&self, v: u16) -> &str {
        &self.labels[v as usize]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex(&self, label: &str) -> Result<u16> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::Graph(format!("unknown vertex {label:?}")))
    }

    pub fn tag(&self, v: u16) -> Option<Tag> {
        self.tags.get(&v).copied()
    }

    pub fn tags(&self) -> &BTreeMap<u16, Tag> {
        &self.tags
    }

    pub fn set_tag(&mut self, v: u16, tag: Tag) {
        self.tags.insert(v, tag);
    }

    pub fn has_edge(&self, u: u16, v: u16) -> bool {
        u != v && self.adj[u as usize] >> v & 1 == 1
    }

    pub fn degree(&self, v: u16) -> usize {
        self.adj[v as usize].count_ones() as usize
    }

    pub fn neighbors(&self, v: u16) -> impl Iterator<Item = u16> + '_ {
        BitIter(self.adj[v as usize])
    }

    pub fn neighbor_mask(&self, v: u16) -> u64 {
        self.adj[v as usize]
    }

    /// Edges as index pairs (u, v) with u < v, in lexicographic order.
    pub fn edges(&self) -> Vec<(u16, u16)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() as u16 {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    fn insert_edge(&mut self, u: u16, v: u16) -> Result<()> {
        if u == v {
            return Err(Error::Graph(format!("loop at {:?}", self.label(u))));
        }
        if self.has_edge(u, v) {
            return Err(Error::Graph(format!(
                "repeated edge {:?}-{:?}",
                self.label(u),
                self.label(v)
            )));
        }
        self.adj[u as usize] |= 1 << v;
        self.adj[v as usize] |= 1 << u;
        Ok(())
    }

    fn remove_edge(&mut self, u: u16, v: u16) {
        self.adj[u as usize] &= !(1 << v);
        self.adj[v as usize] &= !(1 << u);
    }

    /// Delta-wye exchange: remove the edges of `triangle`, add a fresh
    /// vertex joined to its three corners. Vertex count +1, edge count
    /// unchanged.
    pub fn delta_y(&self, triangle: &Cycle) -> Result<Graph> {
        if triangle.len() != 3 {
            return Err(Error::Graph("delta_y needs a 3-cycle".into()));
        }
        let vs = triangle.vertices();
        for i in 0..3 {
            let (u, v) = (vs[i], vs[(i + 1) % 3]);
            if v as usize >= self.n() || u as usize >= self.n() || !self.has_edge(u, v) {
                return Err(Error::Graph("triangle is not a subgraph".into()));
            }
        }
        let mut g = self.clone();
        let fresh = g.fresh_label();
        g.labels.push(fresh.clone());
        g.index.insert(fresh, g.adj.len() as u16);
        g.adj.push(0);
        let w = (g.adj.len() - 1) as u16;
        for i in 0..3 {
            g.remove_edge(vs[i], vs[(i + 1) % 3]);
            g.insert_edge(vs[i], w)?;
        }
        Ok(g)
    }

    /// Wye-delta exchange: remove a degree-3 vertex and join its three
    /// neighbors pairwise. Where a neighbor pair is already adjacent the
    /// would-be parallel edge collapses to the existing simple edge; the
    /// second return value reports whether any collapse happened.
    pub fn y_delta(&self, center: u16) -> Result<(Graph, bool)> {
        if center as usize >= self.n() || self.degree(center) != 3 {
            return Err(Error::Graph(format!(
                "y_delta center must have degree 3, got degree {}",
                self.degree(center)
            )));
        }
        let nbrs: Vec<u16> = self.neighbors(center).collect();
        let mut collapsed = false;
        let mut g = self.delete_vertices(&[center]);
        let mapped: Vec<u16> = nbrs
            .iter()
            .map(|&v| g.vertex(self.label(v)).expect("neighbor survives deletion"))
            .collect();
        for i in 0..3 {
            for j in (i + 1)..3 {
                if g.has_edge(mapped[i], mapped[j]) {
                    collapsed = true;
                } else {
                    g.insert_edge(mapped[i], mapped[j])?;
                }
            }
        }
        Ok((g, collapsed))
    }

    /// Subgraph on the same vertex set keeping only edges accepted by `keep`.
    pub fn edge_subgraph(&self, keep: impl Fn(u16, u16) -> bool) -> Graph {
        let mut g = self.clone();
        for (u, v) in self.edges() {
            if !keep(u, v) {
                g.remove_edge(u, v);
            }
        }
        g
    }

    /// Induced subgraph after deleting the given vertices.
    pub fn delete_vertices(&self, del: &[u16]) -> Graph {
        let keep: Vec<u16> = (0..self.n() as u16).filter(|v| !del.contains(v)).collect();
        let labels: Vec<String> = keep.iter().map(|&v| self.labels[v as usize].clone()).collect();
        let mut g = Graph::new(labels, &[]).expect("labels stay unique");
        for (new_u, &old_u) in keep.iter().enumerate() {
            for (new_v, &old_v) in keep.iter().enumerate().skip(new_u + 1) {
                if self.has_edge(old_u, old_v) {
                    g.insert_edge(new_u as u16, new_v as u16).unwrap();
                }
            }
            if let Some(t) = self.tag(old_u) {
                g.tags.insert(new_u as u16, t);
            }
        }
        g
    }

    /// Smooth away all degree-2 vertices, joining their neighbor pairs.
    /// Fails if smoothing would create a loop or parallel edge.
    pub fn suppress_degree_two(&self) -> Result<Graph> {
        let mut g = self.clone();
        loop {
            let Some(v) = (0..g.n() as u16).find(|&v| g.degree(v) == 2) else {
                return Ok(g);
            };
            let nb: Vec<u16> = g.neighbors(v).collect();
            if nb[0] == nb[1] {
                return Err(Error::Graph("suppression would create a loop".into()));
            }
            if g.has_edge(nb[0], nb[1]) {
                return Err(Error::Graph("suppression would create a parallel edge".into()));
            }
            let (a, b) = (g.label(nb[0]).to_string(), g.label(nb[1]).to_string());
            g = g.delete_vertices(&[v]);
            let u = g.vertex(&a).unwrap();
            let w = g.vertex(&b).unwrap();
            g.insert_edge(u, w)?;
        }
    }

    /// Vertices of degree other than 2 (the branch vertices of the
    /// topological graph).
    pub fn branch_vertices(&self) -> Vec<u16> {
        (0..self.n() as u16).filter(|&v| self.degree(v) != 2).collect()
    }

    fn fresh_label(&self) -> String {
        for k in 1.. {
            let cand = format!("n{k}");
            if !self.index.contains_key(&cand) {
                return cand;
            }
        }
        unreachable!()
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            vertices: self.labels.clone(),
            edges: self
                .edges()
                .into_iter()
                .map(|(u, v)| [self.label(u).to_string(), self.label(v).to_string()])
                .collect(),
            tags: self
                .tags
                .iter()
                .map(|(&v, &t)| (self.label(v).to_string(), t))
                .collect(),
        }
    }

    pub fn from_json(j: &GraphJson) -> Result<Graph> {
        let edges: Vec<(String, String)> = j
            .edges
            .iter()
            .map(|[a, b]| (a.clone(), b.clone()))
            .collect();
        let mut g = Graph::new(j.vertices.clone(), &edges)?;
        for (label, tag) in &j.tags {
            let v = g.vertex(label)?;
            g.tags.insert(v, *tag);
        }
        Ok(g)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n(), self.edge_count())
    }
}

/// Wire format for graphs: `{"vertices":[...],"edges":[[a,b],...],"tags":{...}}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub tags: BTreeMap<String, Tag>,
}

pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = u16;
    fn next(&mut self) -> Option<u16> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as u16;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_sizes() {
        let k6 = Graph::complete(6).unwrap();
        assert_eq!((k6.n(), k6.edge_count()), (6, 15));
        let k7 = Graph::complete(7).unwrap();
        assert_eq!((k7.n(), k7.edge_count()), (7, 21));
        let k1 = Graph::complete(1).unwrap();
        assert_eq!((k1.n(), k1.edge_count()), (1, 0));
        assert!(Graph::complete(0).is_err());
    }

    #[test]
    fn multipartite_sizes() {
        let k33 = Graph::complete_multipartite(&[3, 3]).unwrap();
        assert_eq!((k33.n(), k33.edge_count()), (6, 9));
        let k331 = Graph::complete_multipartite(&[3, 3, 1]).unwrap();
        assert_eq!((k331.n(), k331.edge_count()), (7, 15));
        let k3311 = Graph::complete_multipartite(&[3, 3, 1, 1]).unwrap();
        assert_eq!((k3311.n(), k3311.edge_count()), (8, 22));
        assert!(Graph::complete_multipartite(&[]).is_err());
    }

    #[test]
    fn standard_k3311_tags() {
        let g = Graph::complete_multipartite(&[3, 3, 1, 1]).unwrap();
        for l in ["1", "3", "5"] {
            assert_eq!(g.tag(g.vertex(l).unwrap()), Some(Tag::Black));
        }
        for l in ["2", "4", "6"] {
            assert_eq!(g.tag(g.vertex(l).unwrap()), Some(Tag::White));
        }
        assert_eq!(g.tag(g.vertex("x").unwrap()), Some(Tag::X));
        assert_eq!(g.tag(g.vertex("y").unwrap()), Some(Tag::Y));
        // no edges inside a part
        assert!(!g.has_edge(g.vertex("1").unwrap(), g.vertex("3").unwrap()));
        assert!(g.has_edge(g.vertex("x").unwrap(), g.vertex("y").unwrap()));
    }

    #[test]
    fn delta_y_basics() {
        let k4 = Graph::complete(4).unwrap();
        let tri = enumerate_cycles(&k4, Some(3))[0].clone();
        let g = k4.delta_y(&tri).unwrap();
        assert_eq!((g.n(), g.edge_count()), (5, 6));
        // the fresh vertex is appended last and has degree 3
        let fresh = (g.n() - 1) as u16;
        assert_eq!(g.label(fresh), "n1");
        assert_eq!(g.degree(fresh), 3);
        for v in tri.vertices() {
            assert_eq!(g.degree(*v), 2);
        }
    }

    #[test]
    fn delta_y_rejects_missing_triangle() {
        let k33 = Graph::complete_multipartite(&[3, 3]).unwrap();
        let k6 = Graph::complete(6).unwrap();
        let tri = enumerate_cycles(&k6, Some(3))[0].clone();
        assert!(k33.delta_y(&tri).is_err());
    }

    #[test]
    fn y_delta_inverts_delta_y() {
        let k6 = Graph::complete(6).unwrap();
        let tri = enumerate_cycles(&k6, Some(3))[0].clone();
        let q7 = k6.delta_y(&tri).unwrap();
        assert_eq!((q7.n(), q7.edge_count()), (7, 15));
        let center = (0..q7.n() as u16).find(|&v| q7.degree(v) == 3).unwrap();
        let (back, collapsed) = q7.y_delta(center).unwrap();
        assert!(!collapsed);
        assert!(isomorphic(&back, &k6));
    }

    #[test]
    fn y_delta_rejects_wrong_degree() {
        let k6 = Graph::complete(6).unwrap();
        assert!(k6.y_delta(0).is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = Graph::complete_multipartite(&[3, 3, 1, 1]).unwrap();
        let j = serde_json::to_string(&g.to_json()).unwrap();
        let back = Graph::from_json(&serde_json::from_str(&j).unwrap()).unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn suppression_recovers_branch_structure() {
        // path a-b-c plus edges making b degree 2
        let g = Graph::new(
            vec!["a".into(), "b".into(), "c".into(), "d".into()],
            &[
                ("a".into(), "b".into()),
                ("b".into(), "c".into()),
                ("c".into(), "d".into()),
                ("d".into(), "a".into()),
                ("a".into(), "c".into()),
            ],
        )
        .unwrap();
        // b and d have degree 2; suppressing both would need a parallel a-c edge
        assert!(g.suppress_degree_two().is_err());
    }
}
