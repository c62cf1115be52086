//! Closure of a seed graph under delta-wye (and optionally wye-delta)
//! exchanges, deduplicated by canonical labeling.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use super::{canonical_label, enumerate_cycles, Cycle, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MoveKind {
    DeltaY,
    YDelta,
}

/// One recorded exchange between family members. `site` holds the triangle
/// labels (delta-wye) or the removed center label (wye-delta), relative to
/// the `from` member's stored graph.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyMove {
    pub from: usize,
    pub to: usize,
    pub kind: MoveKind,
    pub site: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyMember {
    #[serde(skip)]
    pub graph: Graph,
    pub canonical: String,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub degree_sequence: Vec<usize>,
    /// Member of the delta-only closure of the seed.
    pub delta_only: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyReport {
    pub members: Vec<FamilyMember>,
    pub moves: Vec<FamilyMove>,
    /// Wye-delta applications that would have collapsed a parallel edge,
    /// as (member index, center label). Such results are not family members.
    pub collapses: Vec<(usize, String)>,
    /// Delta-wye ancestry for every delta-only member, keyed by canonical
    /// form: (stored instance, parent canonical form, triangle labels in the
    /// parent instance). The seed maps to None. Stored instances chain
    /// label-exactly: child instance == delta_y(parent instance, triangle).
    #[serde(skip)]
    delta_tree: BTreeMap<String, (Graph, Option<(String, Vec<String>)>)>,
}

impl FamilyReport {
    pub fn delta_only_count(&self) -> usize {
        self.members.iter().filter(|m| m.delta_only).count()
    }

    /// The delta-wye path from the seed to a delta-only member as a list
    /// of (graph before the move, triangle to replace). Replaying the moves
    /// in order reproduces the member's stored graph exactly.
    pub fn delta_path(&self, target: usize) -> Option<Vec<(Graph, Cycle)>> {
        let mut key = &self.members[target].canonical;
        if !self.delta_tree.contains_key(key) {
            return None;
        }
        let mut chain = Vec::new();
        while let Some((_, Some((parent, tri_labels)))) = self.delta_tree.get(key) {
            let pg = &self.delta_tree[parent].0;
            let idx: Vec<u16> = tri_labels.iter().map(|l| pg.vertex(l).unwrap()).collect();
            chain.push((pg.clone(), Cycle::new(&idx).unwrap()));
            key = parent;
        }
        chain.reverse();
        Some(chain)
    }

    /// The stored, replay-consistent graph instance for a delta-only member.
    pub fn delta_instance(&self, target: usize) -> Option<&Graph> {
        self.delta_tree
            .get(&self.members[target].canonical)
            .map(|(g, _)| g)
    }
}

/// Generate the closure of `seed` under delta-wye exchanges, plus wye-delta
/// exchanges when `delta_only` is false. Members are explored breadth-first
/// in deterministic order; member 0 is the seed.
pub fn generate_family(seed: &Graph, delta_only: bool) -> FamilyReport {
    // Delta-only closure first; its instances chain label-exactly and are
    // reused by the full closure so recorded move sites stay meaningful.
    let mut delta_tree: BTreeMap<String, (Graph, Option<(String, Vec<String>)>)> = BTreeMap::new();
    let seed_canon = canonical_label(seed);
    delta_tree.insert(seed_canon.clone(), (seed.clone(), None));
    let mut dq: VecDeque<String> = VecDeque::from([seed_canon.clone()]);
    while let Some(canon) = dq.pop_front() {
        let g = delta_tree[&canon].0.clone();
        for tri in enumerate_cycles(&g, Some(3)) {
            let child = g.delta_y(&tri).expect("enumerated triangle exists");
            let child_canon = canonical_label(&child);
            if !delta_tree.contains_key(&child_canon) {
                delta_tree.insert(
                    child_canon.clone(),
                    (child, Some((canon.clone(), tri.labels(&g)))),
                );
                dq.push_back(child_canon);
            }
        }
    }

    let mut members: Vec<FamilyMember> = Vec::new();
    let mut moves: Vec<FamilyMove> = Vec::new();
    let mut collapses: Vec<(usize, String)> = Vec::new();
    let mut seen: BTreeMap<String, usize> = BTreeMap::new();

    fn push(
        g: Graph,
        canon: String,
        members: &mut Vec<FamilyMember>,
        seen: &mut BTreeMap<String, usize>,
        delta_tree: &BTreeMap<String, (Graph, Option<(String, Vec<String>)>)>,
    ) -> (usize, bool) {
        if let Some(&idx) = seen.get(&canon) {
            return (idx, false);
        }
        // prefer the delta-tree instance so move sites and weight-map
        // derivations refer to one consistent labeling per member
        let g = delta_tree.get(&canon).map(|(t, _)| t.clone()).unwrap_or(g);
        let mut degs: Vec<usize> = (0..g.n() as u16).map(|v| g.degree(v)).collect();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        let idx = members.len();
        members.push(FamilyMember {
            vertex_count: g.n(),
            edge_count: g.edge_count(),
            degree_sequence: degs,
            delta_only: delta_tree.contains_key(&canon),
            canonical: canon.clone(),
            graph: g,
        });
        seen.insert(canon, idx);
        (idx, true)
    }

    push(seed.clone(), seed_canon, &mut members, &mut seen, &delta_tree);
    let mut queue: VecDeque<usize> = VecDeque::from([0]);
    while let Some(at) = queue.pop_front() {
        let g = members[at].graph.clone();
        for tri in enumerate_cycles(&g, Some(3)) {
            let child = g.delta_y(&tri).expect("enumerated triangle exists");
            let child_canon = canonical_label(&child);
            let site = tri.labels(&g);
            let (idx, new) = push(child, child_canon, &mut members, &mut seen, &delta_tree);
            moves.push(FamilyMove {
                from: at,
                to: idx,
                kind: MoveKind::DeltaY,
                site,
            });
            if new {
                queue.push_back(idx);
            }
        }
        if !delta_only {
            for center in 0..g.n() as u16 {
                if g.degree(center) != 3 {
                    continue;
                }
                let (child, collapsed) = g.y_delta(center).expect("degree checked");
                if collapsed {
                    collapses.push((at, g.label(center).to_string()));
                    continue;
                }
                let child_canon = canonical_label(&child);
                let (idx, new) = push(child, child_canon, &mut members, &mut seen, &delta_tree);
                moves.push(FamilyMove {
                    from: at,
                    to: idx,
                    kind: MoveKind::YDelta,
                    site: vec![g.label(center).to_string()],
                });
                if new {
                    queue.push_back(idx);
                }
            }
        }
    }

    FamilyReport {
        members,
        moves,
        collapses,
        delta_tree,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_family_has_seven_members() {
        let k6 = Graph::complete(6).unwrap();
        let fam = generate_family(&k6, false);
        assert_eq!(fam.members.len(), 7);
        // delta-only closure excludes exactly P7, the member with a
        // degree-6 vertex
        let outside: Vec<&FamilyMember> =
            fam.members.iter().filter(|m| !m.delta_only).collect();
        assert_eq!(outside.len(), 1);
        assert_eq!(outside[0].degree_sequence, vec![6, 4, 4, 4, 4, 4, 4]);
    }

    #[test]
    fn petersen_family_fingerprints() {
        let k6 = Graph::complete(6).unwrap();
        let fam = generate_family(&k6, false);
        let mut prints: Vec<(usize, Vec<usize>)> = fam
            .members
            .iter()
            .map(|m| (m.vertex_count, m.degree_sequence.clone()))
            .collect();
        prints.sort();
        let mut expected: Vec<(usize, Vec<usize>)> = vec![
            (6, vec![5; 6]),                      // K6
            (7, vec![5, 5, 5, 4, 4, 4, 3]),       // Q7
            (7, vec![6, 4, 4, 4, 4, 4, 4]),       // P7
            (8, vec![4, 4, 4, 4, 4, 4, 3, 3]),    // Q8
            (8, vec![5, 4, 4, 4, 4, 3, 3, 3]),    // P8
            (9, vec![4, 4, 4, 3, 3, 3, 3, 3, 3]), // P9
            (10, vec![3; 10]),                    // P10 (Petersen)
        ];
        expected.sort();
        assert_eq!(prints, expected);
        for m in &fam.members {
            assert_eq!(m.edge_count, 15);
        }
    }

    #[test]
    fn p7_matches_k331() {
        let k6 = Graph::complete(6).unwrap();
        let fam = generate_family(&k6, false);
        let p7 = fam
            .members
            .iter()
            .find(|m| m.degree_sequence == vec![6, 4, 4, 4, 4, 4, 4])
            .unwrap();
        let k331 = Graph::complete_multipartite(&[3, 3, 1]).unwrap();
        assert_eq!(p7.canonical, canonical_label(&k331));
    }

    #[test]
    fn k7_family_has_twenty_members_six_outside_delta() {
        let k7 = Graph::complete(7).unwrap();
        let fam = generate_family(&k7, false);
        assert_eq!(fam.members.len(), 20);
        assert_eq!(fam.members.len() - fam.delta_only_count(), 6);
    }

    #[test]
    fn delta_paths_replay_exactly() {
        let k6 = Graph::complete(6).unwrap();
        let fam = generate_family(&k6, false);
        for (i, m) in fam.members.iter().enumerate() {
            if !m.delta_only {
                assert!(fam.delta_path(i).is_none());
                continue;
            }
            let path = fam.delta_path(i).unwrap();
            let mut g = fam.members[0].graph.clone();
            for (host, tri) in &path {
                assert_eq!(host, &g);
                g = g.delta_y(tri).unwrap();
            }
            assert_eq!(&g, fam.delta_instance(i).unwrap());
            assert_eq!(canonical_label(&g), m.canonical);
        }
    }

    #[test]
    fn delta_only_flag_matches_standalone_closure() {
        let k6 = Graph::complete(6).unwrap();
        let both = generate_family(&k6, false);
        let only = generate_family(&k6, true);
        assert_eq!(only.members.len(), both.delta_only_count());
        assert!(only.members.iter().all(|m| m.delta_only));
        assert!(only.collapses.is_empty());
    }
}
