//! The standard labeled K_{3,3,1,1} and its named subgraphs.
//!
//! The standard labeling has black vertices 1,3,5, white vertices 2,4,6 and
//! the two degree-7 vertices x and y. All named subgraphs are defined
//! relative to this labeling and inherit it.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use super::{Graph, Tag};
use crate::{Error, Result};

/// The standard labeled K_{3,3,1,1}.
pub fn standard_k3311() -> Graph {
    static CACHE: OnceLock<Graph> = OnceLock::new();
    CACHE
        .get_or_init(|| Graph::complete_multipartite(&[3, 3, 1, 1]).expect("static shape"))
        .clone()
}

/// The standard labeled P7 (= K_{3,3,1}), whose degree-6 vertex is x.
pub fn standard_p7() -> Graph {
    Graph::complete_multipartite(&[3, 3, 1]).expect("static shape")
}

/// The standard labeled Q8: K_{3,3} plus x joined to the black vertices and
/// y joined to the white vertices. x and y are the two degree-3 vertices.
pub fn standard_q8() -> Graph {
    SubgraphName::Q8(1).build().expect("static shape")
}

/// Names of the distinguished subgraphs of the standard K_{3,3,1,1}.
///
/// `Fij` variants require i black and j white (the removed K_{3,3} edge).
/// `Fk` variants accept any k in 1..=6. `P8 { v, k, i, j }` requires k in
/// one color class and i < j in the other; v is "x" or "y".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubgraphName {
    /// K_{3,3,1,1} minus the vertex y; isomorphic to P7.
    Gx,
    /// K_{3,3,1,1} minus the vertex x; isomorphic to P7.
    Gy,
    /// The subgraph induced by the six colored vertices.
    K33,
    /// (Gx - ij) + iy + jy; homeomorphic to P7 (y has degree 2).
    Fxij { i: u8, j: u8 },
    /// (Gy - ij) + ix + jx; homeomorphic to P7 (x has degree 2).
    Fyij { i: u8, j: u8 },
    /// Q8(1): K33 + x{1,3,5} + y{2,4,6}; Q8(2): K33 + x{2,4,6} + y{1,3,5}.
    Q8(u8),
    /// (Gx - xk) + xy + ky; homeomorphic to P7.
    Fxk { k: u8 },
    /// (Gy - yk) + kx + yx; homeomorphic to P7.
    Fyk { k: u8 },
    /// Q8(i) plus the edge xy.
    H(u8),
    /// The spanning subgraph isomorphic to P8 in which v keeps exactly the
    /// neighbors k, i and j. There are 36 of them.
    P8 { v: Tag, k: u8, i: u8, j: u8 },
}

fn is_black(v: u8) -> bool {
    v % 2 == 1
}

fn color_ok(i: u8, j: u8) -> bool {
    (1..=6).contains(&i) && (1..=6).contains(&j) && is_black(i) != is_black(j)
}

impl SubgraphName {
    /// Build the named subgraph of the standard K_{3,3,1,1}, preserving
    /// labels and tags. Vertex-deleting names (Gx, Gy, K33) drop vertices;
    /// all others return spanning subgraphs on all 8 vertices.
    pub fn build(self) -> Result<Graph> {
        let host = standard_k3311();
        let v = |s: &str| host.vertex(s).unwrap();
        let lab = |d: u8| d.to_string();
        match self {
            SubgraphName::Gx => Ok(host.delete_vertices(&[v("y")])),
            SubgraphName::Gy => Ok(host.delete_vertices(&[v("x")])),
            SubgraphName::K33 => Ok(host.delete_vertices(&[v("x"), v("y")])),
            SubgraphName::Fxij { i, j } | SubgraphName::Fyij { i, j } => {
                if !color_ok(i, j) {
                    return Err(Error::Graph(format!(
                        "F^(ij) needs opposite colors, got ({i},{j})"
                    )));
                }
                let hub = if matches!(self, SubgraphName::Fxij { .. }) {
                    "x"
                } else {
                    "y"
                };
                let spoke = if hub == "x" { "y" } else { "x" };
                let (vi, vj, vh, vs) = (v(&lab(i)), v(&lab(j)), v(hub), v(spoke));
                Ok(host.edge_subgraph(|a, b| {
                    let pair = (a.min(b), a.max(b));
                    if pair == (vi.min(vj), vi.max(vj)) {
                        return false; // the removed K33 edge
                    }
                    if a == vs || b == vs {
                        // spoke keeps only the edges to i and j
                        let other = if a == vs { b } else { a };
                        return other == vi || other == vj;
                    }
                    let _ = vh;
                    true
                }))
            }
            SubgraphName::Q8(idx) | SubgraphName::H(idx) => {
                if !(1..=2).contains(&idx) {
                    return Err(Error::Graph(format!("Q8 index must be 1 or 2, got {idx}")));
                }
                let with_xy = matches!(self, SubgraphName::H(_));
                let (vx, vy) = (v("x"), v("y"));
                let black: Vec<bool> = (0..host.n() as u16)
                    .map(|u| host.tag(u) == Some(Tag::Black))
                    .collect();
                Ok(host.edge_subgraph(|a, b| {
                    let (a, b) = (a.min(b), a.max(b));
                    if (a, b) == (vx.min(vy), vx.max(vy)) {
                        return with_xy;
                    }
                    if b == vx || b == vy || a == vx || a == vy {
                        let (hubv, other) = if a == vx || a == vy { (a, b) } else { (b, a) };
                        let other_black = black[other as usize];
                        // Q8(1): x keeps blacks, y keeps whites; Q8(2) swaps
                        let x_keeps_black = idx == 1;
                        return if hubv == vx {
                            other_black == x_keeps_black
                        } else {
                            other_black != x_keeps_black
                        };
                    }
                    true
                }))
            }
            SubgraphName::Fxk { k } | SubgraphName::Fyk { k } => {
                if !(1..=6).contains(&k) {
                    return Err(Error::Graph(format!("F^(k) needs k in 1..=6, got {k}")));
                }
                let hub = if matches!(self, SubgraphName::Fxk { .. }) {
                    "x"
                } else {
                    "y"
                };
                let spoke = if hub == "x" { "y" } else { "x" };
                let (vk, vh, vs) = (v(&lab(k)), v(hub), v(spoke));
                Ok(host.edge_subgraph(|a, b| {
                    let pair = (a.min(b), a.max(b));
                    if pair == (vh.min(vk), vh.max(vk)) {
                        return false; // removed hub-k edge
                    }
                    if a == vs || b == vs {
                        // spoke keeps only the edges to hub and k
                        let other = if a == vs { b } else { a };
                        return other == vh || other == vk;
                    }
                    true
                }))
            }
            SubgraphName::P8 { v: vtag, k, i, j } => {
                if vtag != Tag::X && vtag != Tag::Y {
                    return Err(Error::Graph("P8 vertex parameter must be x or y".into()));
                }
                if !(1..=6).contains(&k)
                    || !(1..=6).contains(&i)
                    || !(1..=6).contains(&j)
                    || i >= j
                    || is_black(i) != is_black(j)
                    || is_black(k) == is_black(i)
                {
                    return Err(Error::Graph(format!(
                        "P8 needs k in one class and i<j in the other, got (k={k}, i={i}, j={j})"
                    )));
                }
                let (hub, spoke) = if vtag == Tag::X { ("x", "y") } else { ("y", "x") };
                // hub = v keeps exactly {k, i, j}; the other degree-7 vertex
                // keeps everything except q3; the K33 edges k-i and k-j and
                // the edge xy are removed.
                let q3 = [2u8, 4, 6, 1, 3, 5]
                    .into_iter()
                    .find(|&c| is_black(c) == is_black(i) && c != i && c != j)
                    .unwrap();
                let (vk, vi, vj, vq3, vv, vbar) = (
                    v(&lab(k)),
                    v(&lab(i)),
                    v(&lab(j)),
                    v(&lab(q3)),
                    v(hub),
                    v(spoke),
                );
                Ok(host.edge_subgraph(|a, b| {
                    let e = (a.min(b), a.max(b));
                    let pe = |p: u16, q: u16| (p.min(q), p.max(q));
                    if e == pe(vv, vbar) || e == pe(vk, vi) || e == pe(vk, vj) || e == pe(vbar, vq3)
                    {
                        return false;
                    }
                    if a == vv || b == vv {
                        let other = if a == vv { b } else { a };
                        return other == vk || other == vi || other == vj;
                    }
                    true
                }))
            }
        }
    }

    /// All 36 P8-shaped names.
    pub fn all_p8() -> Vec<SubgraphName> {
        let mut out = Vec::with_capacity(36);
        for v in [Tag::X, Tag::Y] {
            for k in 1..=6u8 {
                let others: Vec<u8> = (1..=6).filter(|&c| is_black(c) != is_black(k)).collect();
                for a in 0..others.len() {
                    for b in (a + 1)..others.len() {
                        out.push(SubgraphName::P8 {
                            v,
                            k,
                            i: others[a],
                            j: others[b],
                        });
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for SubgraphName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubgraphName::Gx => write!(f, "gx"),
            SubgraphName::Gy => write!(f, "gy"),
            SubgraphName::K33 => write!(f, "k33"),
            SubgraphName::Fxij { i, j } => write!(f, "fx({i}{j})"),
            SubgraphName::Fyij { i, j } => write!(f, "fy({i}{j})"),
            SubgraphName::Q8(i) => write!(f, "q8({i})"),
            SubgraphName::Fxk { k } => write!(f, "fx({k})"),
            SubgraphName::Fyk { k } => write!(f, "fy({k})"),
            SubgraphName::H(i) => write!(f, "h{i}"),
            SubgraphName::P8 { v, k, i, j } => {
                let vc = if *v == Tag::X { 'x' } else { 'y' };
                write!(f, "p8({vc},{k},{i}{j})")
            }
        }
    }
}

impl FromStr for SubgraphName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Graph(format!("unknown subgraph name {s:?}"));
        let digits = |t: &str| -> Result<Vec<u8>> {
            t.chars()
                .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(bad))
                .collect()
        };
        match s {
            "gx" => return Ok(SubgraphName::Gx),
            "gy" => return Ok(SubgraphName::Gy),
            "k33" => return Ok(SubgraphName::K33),
            "h1" => return Ok(SubgraphName::H(1)),
            "h2" => return Ok(SubgraphName::H(2)),
            _ => {}
        }
        let (head, rest) = s.split_once('(').ok_or_else(bad)?;
        let args = rest.strip_suffix(')').ok_or_else(bad)?;
        match head {
            "q8" => Ok(SubgraphName::Q8(digits(args)?[0])),
            "fx" | "fy" => {
                let d = digits(args)?;
                match (head, d.as_slice()) {
                    ("fx", [k]) => Ok(SubgraphName::Fxk { k: *k }),
                    ("fy", [k]) => Ok(SubgraphName::Fyk { k: *k }),
                    ("fx", [i, j]) => Ok(SubgraphName::Fxij { i: *i, j: *j }),
                    ("fy", [i, j]) => Ok(SubgraphName::Fyij { i: *i, j: *j }),
                    _ => Err(bad()),
                }
            }
            "p8" => {
                let parts: Vec<&str> = args.split(',').collect();
                if parts.len() != 3 {
                    return Err(bad());
                }
                let v = match parts[0] {
                    "x" => Tag::X,
                    "y" => Tag::Y,
                    _ => return Err(bad()),
                };
                let k = digits(parts[1])?[0];
                let ij = digits(parts[2])?;
                if ij.len() != 2 {
                    return Err(bad());
                }
                Ok(SubgraphName::P8 {
                    v,
                    k,
                    i: ij[0],
                    j: ij[1],
                })
            }
            _ => Err(bad()),
        }
    }
}
