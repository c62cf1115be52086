//! Cycles and disjoint cycle pairs of a graph, with exhaustive enumeration.

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::{Error, Result};

/// A cycle of a host graph, stored as the canonical vertex sequence:
/// the lexicographically least sequence over all rotations and both
/// traversal directions. Canonicality makes cycles usable as set members
/// and map keys independent of how they were discovered.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cycle {
    verts: Vec<u16>,
}

impl Cycle {
    /// Canonicalize a vertex sequence (consecutive vertices must be host
    /// edges; this is checked by `enumerate_cycles` but not here).
    pub fn new(seq: &[u16]) -> Result<Self> {
        if seq.len() < 3 {
            return Err(Error::Graph("cycle needs at least 3 vertices".into()));
        }
        let mut seen = 0u64;
        for &v in seq {
            if seen >> v & 1 == 1 {
                return Err(Error::Graph("cycle vertices must be distinct".into()));
            }
            seen |= 1 << v;
        }
        Ok(Cycle {
            verts: canonical_rotation(seq),
        })
    }

    /// Checked construction: also verifies every consecutive pair is an
    /// edge of `g`.
    pub fn in_graph(g: &Graph, seq: &[u16]) -> Result<Self> {
        let c = Cycle::new(seq)?;
        for (u, v) in c.edges() {
            if !g.has_edge(u, v) {
                return Err(Error::Graph(format!(
                    "cycle edge {}-{} missing from host",
                    g.label(u),
                    g.label(v)
                )));
            }
        }
        Ok(c)
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> &[u16] {
        &self.verts
    }

    pub fn mask(&self) -> u64 {
        self.verts.iter().fold(0u64, |m, &v| m | 1 << v)
    }

    pub fn contains(&self, v: u16) -> bool {
        self.mask() >> v & 1 == 1
    }

    /// Cycle edges in traversal order, each as an ordered pair.
    pub fn edges(&self) -> impl Iterator<Item = (u16, u16)> + '_ {
        (0..self.verts.len())
            .map(move |i| (self.verts[i], self.verts[(i + 1) % self.verts.len()]))
    }

    pub fn contains_edge(&self, u: u16, v: u16) -> bool {
        self.edges().any(|(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    }

    /// The two cyclic neighbors of `v` on this cycle.
    pub fn neighbors_of(&self, v: u16) -> Option<(u16, u16)> {
        let i = self.verts.iter().position(|&u| u == v)?;
        let n = self.verts.len();
        Some((self.verts[(i + n - 1) % n], self.verts[(i + 1) % n]))
    }

    pub fn labels(&self, g: &Graph) -> Vec<String> {
        self.verts.iter().map(|&v| g.label(v).to_string()).collect()
    }
}

fn canonical_rotation(seq: &[u16]) -> Vec<u16> {
    let n = seq.len();
    let mut best: Option<Vec<u16>> = None;
    for dir in [false, true] {
        let s: Vec<u16> = if dir {
            let mut r = seq.to_vec();
            r.reverse();
            r
        } else {
            seq.to_vec()
        };
        for start in 0..n {
            let rot: Vec<u16> = (0..n).map(|i| s[(start + i) % n]).collect();
            if best.as_ref().map_or(true, |b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap()
}

/// An unordered pair of vertex-disjoint cycles.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CyclePair {
    first: Cycle,
    second: Cycle,
}

impl CyclePair {
    pub fn new(a: Cycle, b: Cycle) -> Result<Self> {
        if a.mask() & b.mask() != 0 {
            return Err(Error::Graph("cycles in a pair must be vertex-disjoint".into()));
        }
        let (first, second) = if a <= b { (a, b) } else { (b, a) };
        Ok(CyclePair { first, second })
    }

    pub fn first(&self) -> &Cycle {
        &self.first
    }

    pub fn second(&self) -> &Cycle {
        &self.second
    }

    pub fn components(&self) -> [&Cycle; 2] {
        [&self.first, &self.second]
    }

    /// Component lengths as (min, max).
    pub fn shape(&self) -> (usize, usize) {
        let (a, b) = (self.first.len(), self.second.len());
        (a.min(b), a.max(b))
    }

    pub fn mask(&self) -> u64 {
        self.first.mask() | self.second.mask()
    }

    pub fn contains_edge(&self, u: u16, v: u16) -> bool {
        self.first.contains_edge(u, v) || self.second.contains_edge(u, v)
    }
}

/// Exhaustively enumerate the cycles of `g`, optionally restricted to a
/// single length. Results are sorted and duplicate-free.
///
/// Each cycle is discovered exactly once: the DFS roots at the minimal
/// vertex of the cycle, explores only larger vertices, and breaks the
/// reflection symmetry by requiring the second vertex to be smaller than
/// the last.
pub fn enumerate_cycles(g: &Graph, length: Option<usize>) -> Vec<Cycle> {
    let n = g.n();
    let mut out = Vec::new();
    if n < 3 {
        return out;
    }
    let max_len = length.unwrap_or(n);
    if max_len < 3 || max_len > n {
        return out;
    }
    let mut path: Vec<u16> = Vec::with_capacity(max_len);
    for root in 0..n as u16 {
        path.push(root);
        extend(g, root, &mut path, 1 << root, length, max_len, &mut out);
        path.pop();
    }
    out.sort_unstable();
    out
}

fn extend(
    g: &Graph,
    root: u16,
    path: &mut Vec<u16>,
    visited: u64,
    length: Option<usize>,
    max_len: usize,
    out: &mut Vec<Cycle>,
) {
    let last = *path.last().unwrap();
    if path.len() >= 3
        && g.has_edge(last, root)
        && path[1] < last
        && length.map_or(true, |l| l == path.len())
    {
        out.push(Cycle {
            verts: canonical_rotation(path),
        });
    }
    if path.len() == max_len {
        return;
    }
    for v in g.neighbors(last) {
        if v > root && visited >> v & 1 == 0 {
            path.push(v);
            extend(g, root, path, visited | 1 << v, length, max_len, out);
            path.pop();
        }
    }
}

/// Exhaustively enumerate unordered pairs of vertex-disjoint cycles,
/// optionally restricted to a `(k, l)` length shape (orderless).
pub fn enumerate_disjoint_pairs(g: &Graph, shape: Option<(usize, usize)>) -> Vec<CyclePair> {
    let shape = shape.map(|(k, l)| (k.min(l), k.max(l)));
    let cycles = match shape {
        Some((k, l)) if k == l => enumerate_cycles(g, Some(k)),
        Some((k, l)) => {
            let mut c = enumerate_cycles(g, Some(k));
            c.extend(enumerate_cycles(g, Some(l)));
            c
        }
        None => enumerate_cycles(g, None),
    };
    let masks: Vec<u64> = cycles.iter().map(Cycle::mask).collect();
    let mut out = Vec::new();
    for i in 0..cycles.len() {
        for j in (i + 1)..cycles.len() {
            if masks[i] & masks[j] != 0 {
                continue;
            }
            if let Some(s) = shape {
                let (a, b) = (cycles[i].len(), cycles[j].len());
                if (a.min(b), a.max(b)) != s {
                    continue;
                }
            }
            out.push(CyclePair::new(cycles[i].clone(), cycles[j].clone()).unwrap());
        }
    }
    out.sort_unstable();
    out
}
