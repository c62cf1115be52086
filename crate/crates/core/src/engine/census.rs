//! Per-shape link census of a K_{3,3,1,1} embedding: how many disjoint
//! cycle pairs of each shape carry a nonzero linking number, and the sums
//! of squared linking numbers.

use std::collections::BTreeMap;

use serde::Serialize;

use super::analysis::Analysis;
use super::classify::K3311;
use crate::graph::enumerate_disjoint_pairs;
use crate::Result;

#[derive(Debug, Clone, Serialize)]
pub struct ShapeTally {
    pub pairs: usize,
    pub nonzero: usize,
    pub lk2_sum: i64,
    pub max_abs_lk: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct LinkCensus {
    pub shapes: BTreeMap<String, ShapeTally>,
}

impl LinkCensus {
    pub fn tally(&self, shape: (usize, usize)) -> Option<&ShapeTally> {
        self.shapes.get(&format!("{},{}", shape.0, shape.1))
    }

    /// Total of the inequality-weighted linking sums:
    /// lk^2 over (3,5)-pairs plus twice lk^2 over (4,4)-pairs.
    pub fn weighted_total(&self) -> i64 {
        let s35 = self.tally((3, 5)).map_or(0, |t| t.lk2_sum);
        let s44 = self.tally((4, 4)).map_or(0, |t| t.lk2_sum);
        s35 + 2 * s44
    }
}

/// Census over all disjoint-pair shapes of a K_{3,3,1,1} embedding.
pub fn link_census(analysis: &Analysis) -> Result<LinkCensus> {
    K3311::from_graph(analysis.emb.graph())?;
    let mut shapes = BTreeMap::new();
    for shape in [(3usize, 3usize), (3, 4), (3, 5), (4, 4)] {
        let pairs = enumerate_disjoint_pairs(analysis.emb.graph(), Some(shape));
        let values = analysis.lk_values(&pairs)?;
        shapes.insert(
            format!("{},{}", shape.0, shape.1),
            ShapeTally {
                pairs: pairs.len(),
                nonzero: values.iter().filter(|&&v| v != 0).count(),
                lk2_sum: values.iter().map(|v| v * v).sum(),
                max_abs_lk: values.iter().map(|v| v.abs()).max().unwrap_or(0),
            },
        );
    }
    Ok(LinkCensus { shapes })
}
