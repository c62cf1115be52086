//! Integer weight maps on the cycle set of a graph and their transport
//! along delta-wye exchanges.
//!
//! A delta-wye exchange induces a surjection from the cycles of the delta
//! graph (minus the triangle itself) onto the cycles of the wye graph: a
//! cycle through the new center pulls back to the cycle using the replaced
//! triangle edge and, when the third triangle vertex is free, also to the
//! cycle detouring through it. Pushing a weight map forward sums weights
//! over these preimages; the triangle's own weight is discarded.

use std::collections::BTreeMap;

use crate::engine::analysis::Analysis;
use crate::engine::classify::gamma6_prime_standard;
use crate::geom::SpatialEmbedding;
use crate::graph::{enumerate_cycles, standard_k3311, Cycle, FamilyReport, Graph};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightSeed {
    /// The integral K_{3,3,1,1} coefficients: +1 on 8-cycles, -1 on
    /// 7-cycles avoiding {x,y}, -1 on gamma6', -1 on 5-cycles avoiding
    /// {x,y}; weighted a2 sums are at least 1 on every embedding.
    K3311,
    /// All-ones on the Hamiltonian cycles of K7; weighted a2 sums are odd
    /// on every embedding.
    K7,
}

impl WeightSeed {
    pub fn name(self) -> &'static str {
        match self {
            WeightSeed::K3311 => "k3311",
            WeightSeed::K7 => "k7",
        }
    }
}

/// An integer-valued map whose domain is the full cycle set of its host.
#[derive(Debug, Clone)]
pub struct WeightMap {
    host: Graph,
    weights: BTreeMap<Cycle, i64>,
}

impl WeightMap {
    pub fn zero(host: Graph) -> Self {
        let weights = enumerate_cycles(&host, None)
            .into_iter()
            .map(|c| (c, 0))
            .collect();
        WeightMap { host, weights }
    }

    pub fn seed(seed: WeightSeed) -> Self {
        match seed {
            WeightSeed::K3311 => {
                let host = standard_k3311();
                let x = host.vertex("x").unwrap();
                let y = host.vertex("y").unwrap();
                let g6p = gamma6_prime_standard();
                let mut wm = WeightMap::zero(host);
                let keys: Vec<Cycle> = wm.weights.keys().cloned().collect();
                for c in keys {
                    let both = c.contains(x) && c.contains(y);
                    let w = match c.len() {
                        8 => 1,
                        7 if !both => -1,
                        6 if g6p.contains(&c) => -1,
                        5 if !both => -1,
                        _ => 0,
                    };
                    wm.weights.insert(c, w);
                }
                wm
            }
            WeightSeed::K7 => {
                let host = Graph::complete(7).unwrap();
                let mut wm = WeightMap::zero(host);
                let keys: Vec<Cycle> = wm.weights.keys().cloned().collect();
                for c in keys {
                    let w = i64::from(c.len() == 7);
                    wm.weights.insert(c, w);
                }
                wm
            }
        }
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn weight(&self, c: &Cycle) -> Option<i64> {
        self.weights.get(c).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Cycle, i64)> {
        self.weights.iter().map(|(c, &w)| (c, w))
    }

    pub fn support(&self) -> impl Iterator<Item = (&Cycle, i64)> {
        self.iter().filter(|&(_, w)| w != 0)
    }

    pub fn domain_len(&self) -> usize {
        self.weights.len()
    }

    /// Push this map forward along the delta-wye exchange on `triangle`.
    /// Returns the map on delta_y(host, triangle); the new center vertex
    /// is the highest index of the new host.
    pub fn pushforward(&self, triangle: &Cycle) -> Result<WeightMap> {
        if self.weight(triangle).is_none() {
            return Err(Error::Engine("triangle is not a cycle of the host".into()));
        }
        let host_y = self.host.delta_y(triangle)?;
        let center = (host_y.n() - 1) as u16;
        let mut weights = BTreeMap::new();
        for c in enumerate_cycles(&host_y, None) {
            let w = if !c.contains(center) {
                // the same cycle, read in the delta graph
                *self
                    .weights
                    .get(&c)
                    .ok_or_else(|| Error::Engine("cycle missing from delta host".into()))?
            } else {
                let (a, b) = c.neighbors_of(center).expect("center on cycle");
                let seq: Vec<u16> = c.vertices().to_vec();
                let shortcut: Vec<u16> = seq.iter().copied().filter(|&v| v != center).collect();
                let via_edge = Cycle::new(&shortcut)?;
                let mut w = *self
                    .weights
                    .get(&via_edge)
                    .ok_or_else(|| Error::Engine("shortcut cycle missing".into()))?;
                let third = (0..3)
                    .map(|i| triangle.vertices()[i])
                    .find(|&v| v != a && v != b)
                    .expect("triangle has three corners");
                if !c.contains(third) {
                    let detour: Vec<u16> = seq
                        .iter()
                        .map(|&v| if v == center { third } else { v })
                        .collect();
                    let via_third = Cycle::new(&detour)?;
                    w += *self
                        .weights
                        .get(&via_third)
                        .ok_or_else(|| Error::Engine("detour cycle missing".into()))?;
                }
                w
            };
            weights.insert(c, w);
        }
        Ok(WeightMap {
            host: host_y,
            weights,
        })
    }
}

/// Derive the weight map of a delta-only family member by pushing the seed
/// coefficients along its recorded delta-wye path.
pub fn derive_weight_map(
    family: &FamilyReport,
    target: usize,
    seed: WeightSeed,
) -> Result<WeightMap> {
    if target >= family.members.len() {
        return Err(Error::Engine(format!("no family member {target}")));
    }
    let seed_map = WeightMap::seed(seed);
    if family.members[0].graph != *seed_map.host() {
        return Err(Error::Engine(format!(
            "family seed does not match weight seed {}",
            seed.name()
        )));
    }
    let path = family.delta_path(target).ok_or_else(|| {
        Error::Engine(format!(
            "member {target} is not reachable by delta-wye moves from the seed"
        ))
    })?;
    let mut wm = seed_map;
    for (host, tri) in &path {
        if host != wm.host() {
            return Err(Error::Engine("recorded path is inconsistent".into()));
        }
        wm = wm.pushforward(tri)?;
    }
    Ok(wm)
}

/// Exact weighted a2 sum of an embedding of the map's host.
pub fn weighted_a2_sum(analysis: &Analysis, wm: &WeightMap) -> Result<i64> {
    if analysis.emb.graph() != wm.host() {
        return Err(Error::Engine("embedding host differs from weight host".into()));
    }
    let support: Vec<(Cycle, i64)> = wm.support().map(|(c, w)| (c.clone(), w)).collect();
    let cycles: Vec<Cycle> = support.iter().map(|(c, _)| c.clone()).collect();
    let values = analysis.a2_values(&cycles)?;
    Ok(support
        .iter()
        .zip(values)
        .map(|((_, w), a2)| w * a2)
        .sum())
}

/// The contraction of a flat wye: drop the center vertex (the last vertex
/// of the wye host) and close its three legs into a straight triangle. For
/// embeddings produced by `sample_flat_wye` this inverts the delta-wye
/// exchange without changing the isotopy class of any cycle image.
pub fn contract_wye(emb: &SpatialEmbedding, g_delta: &Graph) -> Result<SpatialEmbedding> {
    let g_y = emb.graph();
    if !emb.is_rectilinear() {
        return Err(Error::Engine("wye contraction expects a rectilinear embedding".into()));
    }
    if g_delta.n() + 1 != g_y.n() {
        return Err(Error::Engine("delta host must have one vertex fewer".into()));
    }
    for v in 0..g_delta.n() as u16 {
        if g_delta.label(v) != g_y.label(v) {
            return Err(Error::Engine("delta host labels do not match".into()));
        }
    }
    let coords = (0..g_delta.n() as u16)
        .map(|v| emb.coord(v).clone())
        .collect();
    let contracted = SpatialEmbedding::new(g_delta.clone(), coords, BTreeMap::new())?;
    let violations = contracted.validate();
    if !violations.is_empty() {
        return Err(Error::Geometry(format!(
            "contracted embedding invalid: {}",
            violations[0]
        )));
    }
    Ok(contracted)
}
