//! Identity and bound evaluators, cycle-type classification, link
//! censuses, and delta-wye weight-map transport.

mod analysis;
mod bounds;
mod census;
mod classify;
mod identity;
mod weights;

pub use analysis::Analysis;
pub use bounds::{evaluate_bound, evaluate_bound_with, BoundId, BoundReport};
pub use census::{link_census, LinkCensus, ShapeTally};
pub use classify::{
    classify_cycle, classify_pair44, gamma6_prime, gamma6_prime_standard, CycleType, K3311,
};
pub use identity::{
    branch_len, evaluate_identity, evaluate_identity_with, IdentityId, IdentityReport,
    K3311Classes, P7Classes, Q8Classes, Term,
};
pub use weights::{contract_wye, derive_weight_map, weighted_a2_sum, WeightMap, WeightSeed};

use crate::geom::{direction_candidates, project_scene, Scene, SpatialEmbedding};

/// Lazily yields scenes for regular directions in candidate order.
pub(crate) fn scene_iter(emb: &SpatialEmbedding) -> impl Iterator<Item = Scene> + '_ {
    direction_candidates()
        .take(4096)
        .filter_map(move |d| project_scene(emb, d).ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::SpatialEmbedding;
    use crate::graph::{generate_family, standard_k3311, Graph};

    #[test]
    fn cg_k6_on_moment_curve() {
        let emb = SpatialEmbedding::moment_curve_default(Graph::complete(6).unwrap()).unwrap();
        let r = evaluate_identity(IdentityId::CgK6, &emb).unwrap();
        assert!(r.holds, "{r:?}");
        assert_eq!(r.modulus, Some(2));
        assert_eq!(r.lhs, 1);
    }

    #[test]
    fn cg_k6_on_random_samples() {
        let k6 = Graph::complete(6).unwrap();
        for stream in 0..10 {
            let emb = SpatialEmbedding::sample_rectilinear(&k6, 42, stream, 1000).unwrap();
            let r = evaluate_identity(IdentityId::CgK6, &emb).unwrap();
            assert!(r.holds, "stream {stream}: {r:?}");
        }
    }

    #[test]
    fn wrong_graph_is_a_config_error() {
        let emb = SpatialEmbedding::moment_curve_default(Graph::complete(6).unwrap()).unwrap();
        assert!(evaluate_identity(IdentityId::CgK7, &emb).is_err());
        assert!(evaluate_bound(BoundId::Recti8, &emb).is_err());
    }

    #[test]
    fn main_identity_on_one_sample() {
        let g = standard_k3311();
        let emb = SpatialEmbedding::sample_rectilinear(&g, 7, 0, 100_000).unwrap();
        let r = evaluate_identity(IdentityId::K3311Main, &emb).unwrap();
        assert!(
            r.holds,
            "lhs={} rhs={} terms={:?} / {:?}",
            r.lhs, r.rhs, r.lhs_terms, r.rhs_terms
        );
    }

    #[test]
    fn lemma_identities_on_one_sample() {
        let g = standard_k3311();
        let emb = SpatialEmbedding::sample_rectilinear(&g, 8, 0, 100_000).unwrap();
        for id in [IdentityId::L1, IdentityId::L2, IdentityId::L3] {
            let r = evaluate_identity(id, &emb).unwrap();
            assert!(r.holds, "{}: lhs={} rhs={}", r.id, r.lhs, r.rhs);
        }
    }

    #[test]
    fn bounds_on_one_sample() {
        let g = standard_k3311();
        let emb = SpatialEmbedding::sample_rectilinear(&g, 9, 0, 100_000).unwrap();
        let link22 = evaluate_bound(BoundId::Link22, &emb).unwrap();
        assert!(link22.satisfied && link22.value >= 22, "{link22:?}");
        let cor1 = evaluate_bound(BoundId::Cor1, &emb).unwrap();
        assert!(cor1.satisfied && cor1.value >= 1, "{cor1:?}");
        let foisy = evaluate_bound(BoundId::Foisy, &emb).unwrap();
        assert!(foisy.satisfied, "{foisy:?}");
        let recti8 = evaluate_bound(BoundId::Recti8, &emb).unwrap();
        assert!(recti8.satisfied, "{recti8:?}");
    }

    #[test]
    fn census_matches_link22() {
        let g = standard_k3311();
        let emb = SpatialEmbedding::sample_rectilinear(&g, 10, 0, 100_000).unwrap();
        let analysis = Analysis::new(&emb).unwrap();
        let census = link_census(&analysis).unwrap();
        assert_eq!(census.tally((3, 5)).unwrap().pairs, 72);
        assert_eq!(census.tally((4, 4)).unwrap().pairs, 45);
        let link22 = evaluate_bound_with(BoundId::Link22, &analysis).unwrap();
        assert_eq!(census.weighted_total(), link22.value);
        // parity consequence of the identity structure
        assert_eq!(census.tally((3, 5)).unwrap().lk2_sum % 2, 0);
    }

    #[test]
    fn p7_identity_direct_and_induced() {
        use crate::graph::{standard_p7, SubgraphName};
        let p7 = standard_p7();
        let emb = SpatialEmbedding::sample_rectilinear(&p7, 11, 0, 100_000).unwrap();
        let r = evaluate_identity(IdentityId::P7, &emb).unwrap();
        assert!(r.holds, "direct p7: lhs={} rhs={}", r.lhs, r.rhs);

        let host =
            SpatialEmbedding::sample_rectilinear(&standard_k3311(), 11, 1, 100_000).unwrap();
        for name in [SubgraphName::Gx, SubgraphName::Gy] {
            let sub = host.induced(&name.build().unwrap()).unwrap();
            let r = evaluate_identity(IdentityId::P7, &sub).unwrap();
            assert!(r.holds, "{name}: lhs={} rhs={}", r.lhs, r.rhs);
        }
    }

    #[test]
    fn q8_identity_direct_and_induced() {
        use crate::graph::{standard_q8, SubgraphName};
        let q8 = standard_q8();
        let emb = SpatialEmbedding::sample_rectilinear(&q8, 12, 0, 100_000).unwrap();
        let r = evaluate_identity(IdentityId::Q8, &emb).unwrap();
        assert!(r.holds, "direct q8: lhs={} rhs={}", r.lhs, r.rhs);

        let host =
            SpatialEmbedding::sample_rectilinear(&standard_k3311(), 12, 1, 100_000).unwrap();
        for name in [SubgraphName::Q8(1), SubgraphName::Q8(2)] {
            let sub = host.induced(&name.build().unwrap()).unwrap();
            let r = evaluate_identity(IdentityId::Q8, &sub).unwrap();
            assert!(r.holds, "{name}: lhs={} rhs={}", r.lhs, r.rhs);
        }
    }

    #[test]
    fn weight_seed_k3311_matches_cor1() {
        let g = standard_k3311();
        let emb = SpatialEmbedding::sample_rectilinear(&g, 13, 0, 100_000).unwrap();
        let analysis = Analysis::new(&emb).unwrap();
        let wm = WeightMap::seed(WeightSeed::K3311);
        let sum = weighted_a2_sum(&analysis, &wm).unwrap();
        let cor1 = evaluate_bound_with(BoundId::Cor1, &analysis).unwrap();
        assert_eq!(sum, cor1.value);
        assert!(sum >= 1);
    }

    #[test]
    fn pushforward_weights_bounded_by_preimage_counts() {
        let fam = generate_family(&standard_k3311(), true);
        let wm = WeightMap::seed(WeightSeed::K3311);
        // one delta-wye step: weights stay within [-2, 2]
        let first_child = (1..fam.members.len())
            .find(|&i| fam.delta_path(i).map_or(false, |p| p.len() == 1))
            .unwrap();
        let path = fam.delta_path(first_child).unwrap();
        let pushed = wm.pushforward(&path[0].1).unwrap();
        assert!(pushed.iter().all(|(_, w)| (-2..=2).contains(&w)));
        assert_eq!(pushed.host(), fam.delta_instance(first_child).unwrap());
        // seed k7: one step keeps weights in {0, 1, 2}
        let fam7 = generate_family(&Graph::complete(7).unwrap(), true);
        let wm7 = WeightMap::seed(WeightSeed::K7);
        let child7 = (1..fam7.members.len())
            .find(|&i| fam7.delta_path(i).map_or(false, |p| p.len() == 1))
            .unwrap();
        let pushed7 = wm7
            .pushforward(&fam7.delta_path(child7).unwrap()[0].1)
            .unwrap();
        assert!(pushed7.iter().all(|(_, w)| (0..=2).contains(&w)));
    }

    #[test]
    fn derived_weight_sum_positive_on_one_member() {
        let fam = generate_family(&standard_k3311(), true);
        let target = (1..fam.members.len())
            .find(|&i| fam.delta_path(i).map_or(false, |p| p.len() == 1))
            .unwrap();
        let wm = derive_weight_map(&fam, target, WeightSeed::K3311).unwrap();
        let host = fam.delta_instance(target).unwrap();
        let emb = SpatialEmbedding::sample_rectilinear(host, 14, 0, 100_000).unwrap();
        let analysis = Analysis::new(&emb).unwrap();
        let sum = weighted_a2_sum(&analysis, &wm).unwrap();
        assert!(sum >= 1, "weighted sum {sum}");
    }

    #[test]
    fn petersen_subgraph_linking_parity() {
        // every P7-, Q8- or P8-shaped subgraph of a sampled embedding has
        // an odd total linking number over its disjoint cycle pairs
        use crate::graph::{enumerate_disjoint_pairs, SubgraphName};
        let g = standard_k3311();
        let emb = SpatialEmbedding::sample_rectilinear(&g, 20, 0, 100_000).unwrap();
        let analysis = Analysis::new(&emb).unwrap();
        let mut names = vec![SubgraphName::Q8(1), SubgraphName::Q8(2)];
        names.extend(SubgraphName::all_p8());
        for name in names {
            let sub = name.build().unwrap();
            let pairs = enumerate_disjoint_pairs(&sub, None);
            let total = analysis.lk_sum(&pairs).unwrap();
            assert_eq!(total.rem_euclid(2), 1, "{name}");
        }
        // Gx and Gy drop a vertex; their pairs are the host (3,4)-pairs
        // avoiding y resp. x
        let ctx = K3311::standard();
        for avoid in [ctx.y, ctx.x] {
            let pairs: Vec<_> = enumerate_disjoint_pairs(&g, Some((3, 4)))
                .into_iter()
                .filter(|p| p.mask() >> avoid & 1 == 0)
                .collect();
            let total = analysis.lk_sum(&pairs).unwrap();
            assert_eq!(total.rem_euclid(2), 1);
        }
    }

    #[test]
    fn projection_invariance_two_directions() {
        use crate::geom::generic_directions;
        use crate::graph::{enumerate_cycles, enumerate_disjoint_pairs};
        let g = standard_k3311();
        let emb = SpatialEmbedding::sample_rectilinear(&g, 21, 0, 100_000).unwrap();
        let mut scenes = generic_directions(&emb, 2).unwrap();
        let second = Analysis::with_scene(&emb, scenes.pop().unwrap());
        let first = Analysis::with_scene(&emb, scenes.pop().unwrap());
        let cycles: Vec<_> = enumerate_cycles(&g, Some(8)).into_iter().take(60).collect();
        assert_eq!(
            first.a2_values(&cycles).unwrap(),
            second.a2_values(&cycles).unwrap()
        );
        let pairs: Vec<_> = enumerate_disjoint_pairs(&g, Some((4, 4)));
        assert_eq!(
            first.lk_values(&pairs).unwrap(),
            second.lk_values(&pairs).unwrap()
        );
    }

    #[test]
    fn stick_number_consequences() {
        // in rectilinear embeddings: cycles of up to 5 sticks are unknots,
        // 6-stick cycles are unknots or trefoils
        use crate::graph::enumerate_cycles;
        let g = standard_k3311();
        for stream in 0..3 {
            let emb = SpatialEmbedding::sample_rectilinear(&g, 22, stream, 100_000).unwrap();
            let analysis = Analysis::new(&emb).unwrap();
            for len in 3..=5usize {
                let cycles = enumerate_cycles(&g, Some(len));
                assert!(analysis
                    .a2_values(&cycles)
                    .unwrap()
                    .iter()
                    .all(|&v| v == 0));
            }
            let six = enumerate_cycles(&g, Some(6));
            assert!(analysis
                .a2_values(&six)
                .unwrap()
                .iter()
                .all(|&v| v == 0 || v == 1));
        }
    }

    #[test]
    fn wye_contraction_transfer() {
        // one delta-wye step from the seed; flat-wye embedding of the child
        let fam = generate_family(&standard_k3311(), true);
        let target = (1..fam.members.len())
            .find(|&i| fam.delta_path(i).map_or(false, |p| p.len() == 1))
            .unwrap();
        let (g_delta, tri) = fam.delta_path(target).unwrap()[0].clone();
        let g_y = g_delta.delta_y(&tri).unwrap();
        let center = (g_y.n() - 1) as u16;
        let emb_y = SpatialEmbedding::sample_flat_wye(&g_y, center, 15, 0, 2000).unwrap();
        let contracted = contract_wye(&emb_y, &g_delta).unwrap();

        let wm = WeightMap::seed(WeightSeed::K3311);
        let pushed = wm.pushforward(&tri).unwrap();
        let ay = Analysis::new(&emb_y).unwrap();
        let ad = Analysis::new(&contracted).unwrap();
        let lhs = weighted_a2_sum(&ay, &pushed).unwrap();
        let rhs = weighted_a2_sum(&ad, &wm).unwrap();
        assert_eq!(lhs, rhs, "weight transfer mismatch");
    }
}
