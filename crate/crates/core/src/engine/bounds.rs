//! Inequality and existence evaluators: the 22 lower bound, the integral
//! corollary bound, the odd-a2 existence statement, and the two
//! rectilinear bounds.

use serde::Serialize;

use super::analysis::Analysis;
use super::classify::K3311;
use super::identity::{K3311Classes, P7Classes, Term};
use super::scene_iter;
use crate::geom::SpatialEmbedding;
use crate::graph::enumerate_cycles;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundId {
    Link22,
    Cor1,
    Foisy,
    Recti8,
    RectiP7,
}

impl BoundId {
    pub const ALL: [BoundId; 5] = [
        BoundId::Link22,
        BoundId::Cor1,
        BoundId::Foisy,
        BoundId::Recti8,
        BoundId::RectiP7,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundId::Link22 => "link22",
            BoundId::Cor1 => "cor1",
            BoundId::Foisy => "foisy",
            BoundId::Recti8 => "recti8",
            BoundId::RectiP7 => "rectip7",
        }
    }
}

impl std::str::FromStr for BoundId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        BoundId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::Engine(format!("unknown bound {s:?}")))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub id: String,
    pub value: i64,
    pub bound: i64,
    pub satisfied: bool,
    pub terms: Vec<Term>,
    pub direction: [i64; 3],
    pub retries: u32,
}

pub fn evaluate_bound(id: BoundId, emb: &SpatialEmbedding) -> Result<BoundReport> {
    let violations = emb.validate();
    if !violations.is_empty() {
        return Err(Error::Geometry(format!("embedding invalid: {}", violations[0])));
    }
    if matches!(id, BoundId::Recti8 | BoundId::RectiP7) && !emb.is_rectilinear() {
        return Err(Error::Engine(format!(
            "bound {} applies to rectilinear embeddings only",
            id.name()
        )));
    }
    let mut last_err = None;
    for (retries, scene) in scene_iter(emb).take(8).enumerate() {
        let analysis = Analysis::with_scene(emb, scene);
        match evaluate_bound_with(id, &analysis) {
            Ok(mut report) => {
                report.retries = retries as u32;
                return Ok(report);
            }
            Err(e @ Error::Engine(_)) => return Err(e),
            Err(e) => last_err = Some(e),
        }
    }
    Err(last_err.unwrap_or_else(|| Error::Geometry("no regular direction found".into())))
}

pub fn evaluate_bound_with(id: BoundId, analysis: &Analysis) -> Result<BoundReport> {
    let g = analysis.emb.graph();
    let term = |name: &str, coefficient: i64, value: i64| Term {
        name: name.into(),
        coefficient,
        value,
    };
    let (value, bound, terms) = match id {
        BoundId::Link22 => {
            let ctx = K3311::from_graph(g)?;
            let cls = K3311Classes::build(&ctx)?;
            let s35 = analysis.lk2_sum(&cls.p35)?;
            let s44 = analysis.lk2_sum(&cls.p44)?;
            (
                s35 + 2 * s44,
                22,
                vec![
                    term("lk^2 over (3,5)-pairs", 1, s35),
                    term("lk^2 over (4,4)-pairs", 2, s44),
                ],
            )
        }
        BoundId::Cor1 => {
            let ctx = K3311::from_graph(g)?;
            let cls = K3311Classes::build(&ctx)?;
            let t8 = analysis.a2_sum(&cls.g8)?;
            let t7 = analysis.a2_sum(&cls.g7_not_both)?;
            let t6 = analysis.a2_sum(&cls.g6_prime)?;
            let t5 = analysis.a2_sum(&cls.g5_not_both)?;
            (
                t8 - t7 - t6 - t5,
                1,
                vec![
                    term("a2 over 8-cycles", 1, t8),
                    term("a2 over 7-cycles avoiding {x,y}", -1, t7),
                    term("a2 over gamma6'", -1, t6),
                    term("a2 over 5-cycles avoiding {x,y}", -1, t5),
                ],
            )
        }
        BoundId::Foisy => {
            K3311::from_graph(g)?;
            let mut odd = 0i64;
            let mut terms = Vec::new();
            for len in 4..=8usize {
                let cycles = enumerate_cycles(g, Some(len));
                let odd_here = analysis
                    .a2_values(&cycles)?
                    .into_iter()
                    .filter(|v| v % 2 != 0)
                    .count() as i64;
                terms.push(term(&format!("odd-a2 {len}-cycles"), 1, odd_here));
                odd += odd_here;
            }
            (odd, 1, terms)
        }
        BoundId::Recti8 => {
            let ctx = K3311::from_graph(g)?;
            let g8 = enumerate_cycles(&ctx.graph, Some(8));
            let sum = analysis.a2_sum(&g8)?;
            (sum, 1, vec![term("a2 over 8-cycles", 1, sum)])
        }
        BoundId::RectiP7 => {
            let cls = P7Classes::build(g)?;
            let sum = analysis.a2_sum(&cls.g7)?;
            (sum, 0, vec![term("a2 over 7-cycles", 1, sum)])
        }
    };
    Ok(BoundReport {
        id: id.name().into(),
        value,
        bound,
        satisfied: value >= bound,
        terms,
        direction: analysis.scene.direction.0,
        retries: 0,
    })
}
