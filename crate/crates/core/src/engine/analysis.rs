//! Per-embedding invariant cache: one validated regular projection plus
//! lazily computed, batch-parallel a2 and linking-number values for
//! cycles and disjoint cycle pairs.

use std::cell::RefCell;
use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::geom::{build_diagram, generic_directions, Scene, SpatialEmbedding};
use crate::graph::{Cycle, CyclePair};
use crate::knot::{a2, linking_number};
use crate::{Error, Result};

pub struct Analysis<'e> {
    pub emb: &'e SpatialEmbedding,
    pub scene: Scene,
    a2_cache: RefCell<BTreeMap<Cycle, i64>>,
    lk_cache: RefCell<BTreeMap<CyclePair, i64>>,
}

impl<'e> Analysis<'e> {
    /// Validate the embedding and fix the first generic projection.
    pub fn new(emb: &'e SpatialEmbedding) -> Result<Self> {
        let violations = emb.validate();
        if !violations.is_empty() {
            return Err(Error::Geometry(format!(
                "embedding invalid: {}",
                violations[0]
            )));
        }
        let scene = generic_directions(emb, 1)?.pop().unwrap();
        Ok(Analysis::with_scene(emb, scene))
    }

    pub fn with_scene(emb: &'e SpatialEmbedding, scene: Scene) -> Self {
        Analysis {
            emb,
            scene,
            a2_cache: RefCell::new(BTreeMap::new()),
            lk_cache: RefCell::new(BTreeMap::new()),
        }
    }

    /// a2 of the knot image of each cycle, computed in parallel on first
    /// use and cached.
    pub fn a2_values(&self, cycles: &[Cycle]) -> Result<Vec<i64>> {
        let missing: Vec<Cycle> = {
            let cache = self.a2_cache.borrow();
            cycles
                .iter()
                .filter(|c| !cache.contains_key(*c))
                .cloned()
                .collect()
        };
        if !missing.is_empty() {
            let scene = &self.scene;
            let computed: Vec<(Cycle, Result<i64>)> = missing
                .into_par_iter()
                .map(move |c| {
                    let value = build_diagram(scene, &[&c]).and_then(|d| a2(&d));
                    (c, value)
                })
                .collect();
            let mut cache = self.a2_cache.borrow_mut();
            for (c, value) in computed {
                cache.insert(c, value?);
            }
        }
        let cache = self.a2_cache.borrow();
        Ok(cycles.iter().map(|c| cache[c]).collect())
    }

    pub fn a2_sum(&self, cycles: &[Cycle]) -> Result<i64> {
        Ok(self.a2_values(cycles)?.into_iter().sum())
    }

    /// Linking numbers of pair images, parallel and cached.
    pub fn lk_values(&self, pairs: &[CyclePair]) -> Result<Vec<i64>> {
        let missing: Vec<CyclePair> = {
            let cache = self.lk_cache.borrow();
            pairs
                .iter()
                .filter(|p| !cache.contains_key(*p))
                .cloned()
                .collect()
        };
        if !missing.is_empty() {
            let scene = &self.scene;
            let computed: Vec<(CyclePair, Result<i64>)> = missing
                .into_par_iter()
                .map(move |p| {
                    let value = build_diagram(scene, &[p.first(), p.second()])
                        .and_then(|d| linking_number(&d));
                    (p, value)
                })
                .collect();
            let mut cache = self.lk_cache.borrow_mut();
            for (p, value) in computed {
                cache.insert(p, value?);
            }
        }
        let cache = self.lk_cache.borrow();
        Ok(pairs.iter().map(|p| cache[p]).collect())
    }

    pub fn lk_sum(&self, pairs: &[CyclePair]) -> Result<i64> {
        Ok(self.lk_values(pairs)?.into_iter().sum())
    }

    pub fn lk2_sum(&self, pairs: &[CyclePair]) -> Result<i64> {
        Ok(self.lk_values(pairs)?.into_iter().map(|v| v * v).sum())
    }
}
