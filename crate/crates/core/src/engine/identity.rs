//! Exact evaluation of the Conway-Gordon style identities: the classical
//! parity identities for K6 and K7, the integral K_{3,3,1,1} identity, the
//! P7 and Q8 identities, and the three (4,4)-pair lemmas.

use serde::Serialize;

use super::analysis::Analysis;
use super::classify::{classify_cycle, classify_pair44, gamma6_prime, CycleType, K3311};
use super::scene_iter;
use crate::geom::SpatialEmbedding;
use crate::graph::{enumerate_cycles, enumerate_disjoint_pairs, Cycle, CyclePair, Graph};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityId {
    CgK6,
    CgK7,
    K3311Main,
    P7,
    Q8,
    L1,
    L2,
    L3,
}

impl IdentityId {
    pub const ALL: [IdentityId; 8] = [
        IdentityId::CgK6,
        IdentityId::CgK7,
        IdentityId::K3311Main,
        IdentityId::P7,
        IdentityId::Q8,
        IdentityId::L1,
        IdentityId::L2,
        IdentityId::L3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::CgK6 => "cg-k6",
            IdentityId::CgK7 => "cg-k7",
            IdentityId::K3311Main => "main",
            IdentityId::P7 => "p7",
            IdentityId::Q8 => "q8",
            IdentityId::L1 => "l1",
            IdentityId::L2 => "l2",
            IdentityId::L3 => "l3",
        }
    }
}

impl std::str::FromStr for IdentityId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::Engine(format!("unknown identity {s:?}")))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Term {
    pub name: String,
    pub coefficient: i64,
    pub value: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub id: String,
    pub holds: bool,
    pub lhs: i64,
    pub rhs: i64,
    /// Some(2) for the parity identities; comparison is then on residues.
    pub modulus: Option<u8>,
    pub lhs_terms: Vec<Term>,
    pub rhs_terms: Vec<Term>,
    pub direction: [i64; 3],
    pub retries: u32,
}

fn total(terms: &[Term]) -> i64 {
    terms.iter().map(|t| t.coefficient * t.value).sum()
}

fn finish(
    id: IdentityId,
    modulus: Option<u8>,
    lhs_terms: Vec<Term>,
    rhs_terms: Vec<Term>,
    analysis: &Analysis,
) -> IdentityReport {
    let (mut lhs, mut rhs) = (total(&lhs_terms), total(&rhs_terms));
    if let Some(m) = modulus {
        lhs = lhs.rem_euclid(i64::from(m));
        rhs = rhs.rem_euclid(i64::from(m));
    }
    IdentityReport {
        id: id.name().into(),
        holds: lhs == rhs,
        lhs,
        rhs,
        modulus,
        lhs_terms,
        rhs_terms,
        direction: analysis.scene.direction.0,
        retries: 0,
    }
}

/// Evaluate an identity on an embedding, retrying with later generic
/// directions (up to 8 in total) if a projection-level failure occurs.
pub fn evaluate_identity(id: IdentityId, emb: &SpatialEmbedding) -> Result<IdentityReport> {
    let violations = emb.validate();
    if !violations.is_empty() {
        return Err(Error::Geometry(format!("embedding invalid: {}", violations[0])));
    }
    let mut last_err = None;
    for (retries, scene) in scene_iter(emb).take(8).enumerate() {
        let analysis = Analysis::with_scene(emb, scene);
        match evaluate_identity_with(id, &analysis) {
            Ok(mut report) => {
                report.retries = retries as u32;
                return Ok(report);
            }
            Err(e @ Error::Engine(_)) => return Err(e), // wrong graph: retrying cannot help
            Err(e) => last_err = Some(e),
        }
    }
    Err(last_err.unwrap_or_else(|| Error::Geometry("no regular direction found".into())))
}

/// Evaluate an identity against an existing analysis (fixed projection).
pub fn evaluate_identity_with(id: IdentityId, analysis: &Analysis) -> Result<IdentityReport> {
    let g = analysis.emb.graph();
    match id {
        IdentityId::CgK6 => {
            require_complete(g, 6)?;
            let pairs = enumerate_disjoint_pairs(g, Some((3, 3)));
            let sum = analysis.lk_sum(&pairs)?;
            let lhs = vec![term("lk over (3,3)-pairs", 1, sum)];
            let rhs = vec![term("constant", 1, 1)];
            Ok(finish(id, Some(2), lhs, rhs, analysis))
        }
        IdentityId::CgK7 => {
            require_complete(g, 7)?;
            let cycles = enumerate_cycles(g, Some(7));
            let sum = analysis.a2_sum(&cycles)?;
            let lhs = vec![term("a2 over hamiltonian 7-cycles", 1, sum)];
            let rhs = vec![term("constant", 1, 1)];
            Ok(finish(id, Some(2), lhs, rhs, analysis))
        }
        IdentityId::K3311Main => {
            let ctx = K3311::from_graph(g)?;
            let cls = K3311Classes::build(&ctx)?;
            let lhs = vec![
                term("a2 over 8-cycles", 4, analysis.a2_sum(&cls.g8)?),
                term("a2 over 7-cycles avoiding {x,y}", -4, analysis.a2_sum(&cls.g7_not_both)?),
                term("a2 over gamma6'", -4, analysis.a2_sum(&cls.g6_prime)?),
                term("a2 over 5-cycles avoiding {x,y}", -4, analysis.a2_sum(&cls.g5_not_both)?),
            ];
            let rhs = vec![
                term("lk^2 over (3,5)-pairs", 1, analysis.lk2_sum(&cls.p35)?),
                term("lk^2 over (4,4)-pairs", 2, analysis.lk2_sum(&cls.p44)?),
                term("constant", 1, -18),
            ];
            Ok(finish(id, None, lhs, rhs, analysis))
        }
        IdentityId::L1 => {
            let ctx = K3311::from_graph(g)?;
            let cls = K3311Classes::build(&ctx)?;
            let lhs = vec![
                term("lk^2 over (3,5)-pairs", 1, analysis.lk2_sum(&cls.p35)?),
                term("lk^2 over type-A (4,4)-pairs", 2, analysis.lk2_sum(&cls.p44_type(CycleType::A))?),
            ];
            let rhs = vec![
                term("a2 over type-A 8-cycles", 4, analysis.a2_sum(&cls.g8_type(CycleType::A))?),
                term("a2 over 7-cycles of Gx", -4, analysis.a2_sum(&cls.g7_gx)?),
                term("a2 over 7-cycles of Gy", -4, analysis.a2_sum(&cls.g7_gy)?),
                term("a2 over 6-cycles of K33", 8, analysis.a2_sum(&cls.g6_k33)?),
                term("a2 over type-A 6-cycles through x,y", -4, analysis.a2_sum(&cls.g6_xy_type(CycleType::A))?),
                term("a2 over 5-cycles of Gx", -4, analysis.a2_sum(&cls.g5_gx)?),
                term("a2 over 5-cycles of Gy", -4, analysis.a2_sum(&cls.g5_gy)?),
                term("constant", 1, 10),
            ];
            Ok(finish(id, None, lhs, rhs, analysis))
        }
        IdentityId::L2 => {
            let ctx = K3311::from_graph(g)?;
            let cls = K3311Classes::build(&ctx)?;
            let lhs = vec![term(
                "lk^2 over type-B (4,4)-pairs",
                1,
                analysis.lk2_sum(&cls.p44_type(CycleType::B))?,
            )];
            let rhs = vec![
                term("a2 over type-B 8-cycles", 2, analysis.a2_sum(&cls.g8_type(CycleType::B))?),
                term("a2 over 6-cycles of K33", 4, analysis.a2_sum(&cls.g6_k33)?),
                term("a2 over 6-cycles of Gx through x", -2, analysis.a2_sum(&cls.g6_gx_x)?),
                term("a2 over 6-cycles of Gy through y", -2, analysis.a2_sum(&cls.g6_gy_y)?),
                term("a2 over type-B 6-cycles through x,y", -2, analysis.a2_sum(&cls.g6_xy_type(CycleType::B))?),
                term("constant", 1, 2),
            ];
            Ok(finish(id, None, lhs, rhs, analysis))
        }
        IdentityId::L3 => {
            let ctx = K3311::from_graph(g)?;
            let cls = K3311Classes::build(&ctx)?;
            let lhs = vec![term(
                "lk^2 over type-C (4,4)-pairs",
                1,
                analysis.lk2_sum(&cls.p44_type(CycleType::C))?,
            )];
            let rhs = vec![
                term("a2 over type-C 8-cycles", 2, analysis.a2_sum(&cls.g8_type(CycleType::C))?),
                term("a2 over 6-cycles of K33", -8, analysis.a2_sum(&cls.g6_k33)?),
                term("a2 over type-C 6-cycles through x,y", -2, analysis.a2_sum(&cls.g6_xy_type(CycleType::C))?),
                term("constant", 1, 2),
            ];
            Ok(finish(id, None, lhs, rhs, analysis))
        }
        IdentityId::P7 => {
            let cls = P7Classes::build(g)?;
            let lhs = vec![
                term("a2 over 7-cycles", 2, analysis.a2_sum(&cls.g7)?),
                term("a2 over 6-cycles avoiding u", -4, analysis.a2_sum(&cls.g6_no_u)?),
                term("a2 over 5-cycles", -2, analysis.a2_sum(&cls.g5)?),
            ];
            let rhs = vec![
                term("lk^2 over (3,4)-pairs", 1, analysis.lk2_sum(&cls.p34)?),
                term("constant", 1, -1),
            ];
            Ok(finish(id, None, lhs, rhs, analysis))
        }
        IdentityId::Q8 => {
            let cls = Q8Classes::build(g)?;
            let lhs = vec![
                term("a2 over 8-cycles", 2, analysis.a2_sum(&cls.g8)?),
                term("a2 over 6-cycles avoiding v,v'", 2, analysis.a2_sum(&cls.g6_avoid)?),
                term("a2 over 6-cycles meeting {v,v'}", -2, analysis.a2_sum(&cls.g6_meet)?),
            ];
            let rhs = vec![
                term("lk^2 over (4,4)-pairs", 1, analysis.lk2_sum(&cls.p44)?),
                term("constant", 1, -1),
            ];
            Ok(finish(id, None, lhs, rhs, analysis))
        }
    }
}

fn term(name: &str, coefficient: i64, value: i64) -> Term {
    Term {
        name: name.into(),
        coefficient,
        value,
    }
}

fn require_complete(g: &Graph, n: usize) -> Result<()> {
    if g.n() != n || g.edge_count() != n * (n - 1) / 2 {
        return Err(Error::Engine(format!(
            "identity needs K{n}, got a graph with {} vertices and {} edges",
            g.n(),
            g.edge_count()
        )));
    }
    Ok(())
}

/// The cycle and pair classes of a tagged K_{3,3,1,1} embedding host.
pub struct K3311Classes {
    ctx: K3311,
    pub g8: Vec<Cycle>,
    pub g7_not_both: Vec<Cycle>,
    pub g6_prime: Vec<Cycle>,
    pub g5_not_both: Vec<Cycle>,
    pub g7_gx: Vec<Cycle>,
    pub g7_gy: Vec<Cycle>,
    pub g6_k33: Vec<Cycle>,
    pub g6_gx_x: Vec<Cycle>,
    pub g6_gy_y: Vec<Cycle>,
    pub g6_xy: Vec<(Cycle, CycleType)>,
    pub g5_gx: Vec<Cycle>,
    pub g5_gy: Vec<Cycle>,
    pub p35: Vec<CyclePair>,
    pub p44: Vec<CyclePair>,
    pub p44_types: Vec<CycleType>,
    pub g8_types: Vec<CycleType>,
}

impl K3311Classes {
    pub fn build(ctx: &K3311) -> Result<Self> {
        let g = &ctx.graph;
        let (x, y) = (ctx.x, ctx.y);
        let has = |c: &Cycle, v: u16| c.contains(v);
        let g8 = enumerate_cycles(g, Some(8));
        let g8_types = g8
            .iter()
            .map(|c| classify_cycle(ctx, c))
            .collect::<Result<Vec<_>>>()?;
        let g7 = enumerate_cycles(g, Some(7));
        let g6 = enumerate_cycles(g, Some(6));
        let g5 = enumerate_cycles(g, Some(5));
        let g6_prime_set = gamma6_prime(ctx)?;
        let mut g6_xy = Vec::new();
        for c in &g6 {
            if has(c, x) && has(c, y) {
                g6_xy.push((c.clone(), classify_cycle(ctx, c)?));
            }
        }
        let p35 = enumerate_disjoint_pairs(g, Some((3, 5)));
        let p44 = enumerate_disjoint_pairs(g, Some((4, 4)));
        let p44_types = p44
            .iter()
            .map(|p| classify_pair44(ctx, p))
            .collect::<Result<Vec<_>>>()?;
        Ok(K3311Classes {
            g7_not_both: g7.iter().filter(|c| !(has(c, x) && has(c, y))).cloned().collect(),
            g7_gx: g7.iter().filter(|c| !has(c, y)).cloned().collect(),
            g7_gy: g7.iter().filter(|c| !has(c, x)).cloned().collect(),
            g6_k33: g6.iter().filter(|c| !has(c, x) && !has(c, y)).cloned().collect(),
            g6_gx_x: g6.iter().filter(|c| has(c, x) && !has(c, y)).cloned().collect(),
            g6_gy_y: g6.iter().filter(|c| has(c, y) && !has(c, x)).cloned().collect(),
            g6_prime: g6_prime_set.iter().cloned().collect(),
            g5_not_both: g5.iter().filter(|c| !(has(c, x) && has(c, y))).cloned().collect(),
            g5_gx: g5.iter().filter(|c| !has(c, y)).cloned().collect(),
            g5_gy: g5.iter().filter(|c| !has(c, x)).cloned().collect(),
            g6_xy,
            g8,
            g8_types,
            p35,
            p44,
            p44_types,
            ctx: ctx.clone(),
        })
    }

    pub fn context(&self) -> &K3311 {
        &self.ctx
    }

    pub fn g8_type(&self, t: CycleType) -> Vec<Cycle> {
        self.g8
            .iter()
            .zip(&self.g8_types)
            .filter(|(_, ty)| **ty == t)
            .map(|(c, _)| c.clone())
            .collect()
    }

    pub fn p44_type(&self, t: CycleType) -> Vec<CyclePair> {
        self.p44
            .iter()
            .zip(&self.p44_types)
            .filter(|(_, ty)| **ty == t)
            .map(|(p, _)| p.clone())
            .collect()
    }

    pub fn g6_xy_type(&self, t: CycleType) -> Vec<Cycle> {
        self.g6_xy
            .iter()
            .filter(|(_, ty)| *ty == t)
            .map(|(c, _)| c.clone())
            .collect()
    }
}

/// Number of branch (degree != 2) vertices along a cycle: its length in
/// the underlying topological graph once degree-2 vertices are smoothed.
pub fn branch_len(g: &Graph, c: &Cycle) -> usize {
    c.vertices().iter().filter(|&&v| g.degree(v) != 2).count()
}

/// Cycle classes of a graph homeomorphic to P7, keyed by branch length.
pub struct P7Classes {
    pub u: u16,
    pub g7: Vec<Cycle>,
    pub g6_no_u: Vec<Cycle>,
    pub g5: Vec<Cycle>,
    pub p34: Vec<CyclePair>,
}

impl P7Classes {
    pub fn build(g: &Graph) -> Result<Self> {
        let branch = g.branch_vertices();
        let mut degs: Vec<usize> = branch.iter().map(|&v| g.degree(v)).collect();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        if degs != [6, 4, 4, 4, 4, 4, 4] {
            return Err(Error::Engine(format!(
                "graph is not homeomorphic to P7 (branch degrees {degs:?})"
            )));
        }
        let u = branch
            .iter()
            .copied()
            .find(|&v| g.degree(v) == 6)
            .expect("degree checked");
        let all = enumerate_cycles(g, None);
        let mut g7 = Vec::new();
        let mut g6_no_u = Vec::new();
        let mut g5 = Vec::new();
        for c in all {
            match branch_len(g, &c) {
                7 => g7.push(c),
                6 if !c.contains(u) => g6_no_u.push(c),
                5 => g5.push(c),
                _ => {}
            }
        }
        let p34 = enumerate_disjoint_pairs(g, None)
            .into_iter()
            .filter(|p| {
                let (a, b) = (branch_len(g, p.first()), branch_len(g, p.second()));
                (a.min(b), a.max(b)) == (3, 4)
            })
            .collect();
        Ok(P7Classes {
            u,
            g7,
            g6_no_u,
            g5,
            p34,
        })
    }
}

/// Cycle classes of a graph homeomorphic to Q8.
pub struct Q8Classes {
    pub v1: u16,
    pub v2: u16,
    pub g8: Vec<Cycle>,
    pub g6_avoid: Vec<Cycle>,
    pub g6_meet: Vec<Cycle>,
    pub p44: Vec<CyclePair>,
}

impl Q8Classes {
    pub fn build(g: &Graph) -> Result<Self> {
        let branch = g.branch_vertices();
        let mut degs: Vec<usize> = branch.iter().map(|&v| g.degree(v)).collect();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        if degs != [4, 4, 4, 4, 4, 4, 3, 3] {
            return Err(Error::Engine(format!(
                "graph is not homeomorphic to Q8 (branch degrees {degs:?})"
            )));
        }
        let low: Vec<u16> = branch.iter().copied().filter(|&v| g.degree(v) == 3).collect();
        let (v1, v2) = (low[0], low[1]);
        let all = enumerate_cycles(g, None);
        let mut g8 = Vec::new();
        let mut g6_avoid = Vec::new();
        let mut g6_meet = Vec::new();
        for c in all {
            match branch_len(g, &c) {
                8 => g8.push(c),
                6 => {
                    if c.contains(v1) || c.contains(v2) {
                        g6_meet.push(c);
                    } else {
                        g6_avoid.push(c);
                    }
                }
                _ => {}
            }
        }
        let p44 = enumerate_disjoint_pairs(g, None)
            .into_iter()
            .filter(|p| {
                branch_len(g, p.first()) == 4 && branch_len(g, p.second()) == 4
            })
            .collect();
        Ok(Q8Classes {
            v1,
            v2,
            g8,
            g6_avoid,
            g6_meet,
            p44,
        })
    }
}
