//! Canonical labeling for small graphs: iterated degree refinement plus
//! backtracking over the first non-singleton cell, taking the minimum
//! encoding over all discrete leaves. Exact (equal encodings iff
//! isomorphic) and fast enough for graphs of a few dozen vertices.

use super::Graph;

/// Canonical encoding of `g` as a graph6 string of its canonical form.
/// Two graphs get equal strings iff they are isomorphic.
pub fn canonical_label(g: &Graph) -> String {
    let adj = adjacency(g);
    let best = canonical_adjacency(&adj);
    graph6(g.n(), &best)
}

/// Quick structural fingerprint: vertex count plus sorted degree sequence.
pub fn degree_fingerprint(g: &Graph) -> (usize, Vec<usize>) {
    let mut degs: Vec<usize> = (0..g.n() as u16).map(|v| g.degree(v)).collect();
    degs.sort_unstable_by(|a, b| b.cmp(a));
    (g.n(), degs)
}

pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n()
        && a.edge_count() == b.edge_count()
        && degree_fingerprint(a) == degree_fingerprint(b)
        && canonical_label(a) == canonical_label(b)
}

fn adjacency(g: &Graph) -> Vec<u64> {
    (0..g.n() as u16).map(|v| g.neighbor_mask(v)).collect()
}

fn canonical_adjacency(adj: &[u64]) -> Vec<u64> {
    let n = adj.len();
    if n == 0 {
        return Vec::new();
    }
    let mut partition = vec![(0..n).collect::<Vec<usize>>()];
    refine(adj, &mut partition);
    let mut best: Option<Vec<u64>> = None;
    search(adj, partition, &mut best);
    best.unwrap()
}

/// Stable 1-dimensional refinement: split every cell by the vector of
/// neighbor counts into each current cell, until stable.
fn refine(adj: &[u64], partition: &mut Vec<Vec<usize>>) {
    loop {
        let masks: Vec<u64> = partition
            .iter()
            .map(|cell| cell.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(partition.len());
        for cell in partition.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let key: Vec<u32> =
                        masks.iter().map(|&m| (adj[v] & m).count_ones()).collect();
                    (key, v)
                })
                .collect();
            keyed.sort();
            let mut i = 0;
            while i < keyed.len() {
                let mut j = i;
                while j < keyed.len() && keyed[j].0 == keyed[i].0 {
                    j += 1;
                }
                next.push(keyed[i..j].iter().map(|&(_, v)| v).collect());
                i = j;
            }
        }
        let split = next.len() != partition.len();
        *partition = next;
        if !split || partition.iter().all(|c| c.len() == 1) {
            return;
        }
    }
}

fn search(adj: &[u64], partition: Vec<Vec<usize>>, best: &mut Option<Vec<u64>>) {
    if let Some(pos) = partition.iter().position(|c| c.len() > 1) {
        for &v in &partition[pos] {
            let mut child: Vec<Vec<usize>> = Vec::with_capacity(partition.len() + 1);
            for (i, cell) in partition.iter().enumerate() {
                if i == pos {
                    child.push(vec![v]);
                    child.push(cell.iter().copied().filter(|&u| u != v).collect());
                } else {
                    child.push(cell.clone());
                }
            }
            refine(adj, &mut child);
            search(adj, child, best);
        }
        return;
    }
    // discrete partition: vertex at new index i is partition[i][0]
    let n = adj.len();
    let mut inv = vec![0usize; n];
    for (new, cell) in partition.iter().enumerate() {
        inv[cell[0]] = new;
    }
    let mut enc = vec![0u64; n];
    for (old, &new_u) in inv.iter().enumerate() {
        let mut m = adj[old];
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            enc[new_u] |= 1 << inv[v];
        }
    }
    if best.as_ref().map_or(true, |b| enc < *b) {
        *best = Some(enc);
    }
}

/// graph6 encoding of an adjacency given as bitmask rows (n <= 62).
fn graph6(n: usize, adj: &[u64]) -> String {
    assert!(n <= 62, "graph6 short form only");
    let mut bits: Vec<bool> = Vec::with_capacity(n * (n - 1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(adj[i] >> j & 1 == 1);
        }
    }
    let mut s = String::new();
    s.push((n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let mut val = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                val |= 1 << (5 - k);
            }
        }
        s.push((val + 63) as char);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate_cycles;
    use proptest::prelude::*;

    #[test]
    fn distinguishes_k6_from_k33() {
        let k6 = Graph::complete(6).unwrap();
        let k33 = Graph::complete_multipartite(&[3, 3]).unwrap();
        assert_ne!(canonical_label(&k6), canonical_label(&k33));
    }

    #[test]
    fn k331_is_p7_from_delta_y_moves() {
        // build P7 as a delta-wye descendant path K6 -> Q7 -> Q8 -> y-delta back up
        // is indirect; directly: K_{3,3,1} should be isomorphic to the member of
        // the K6 family with degree sequence (6,4,4,4,4,4,4). Here we settle for
        // relabeling invariance and the direct K_{3,3,1} transfer below.
        let k331 = Graph::complete_multipartite(&[3, 3, 1]).unwrap();
        let relabeled = {
            let j = k331.to_json();
            let mapped: Vec<String> = j.vertices.iter().map(|v| format!("z{v}")).collect();
            let edges: Vec<(String, String)> = j
                .edges
                .iter()
                .map(|[a, b]| (format!("z{b}"), format!("z{a}")))
                .collect();
            Graph::new(mapped, &edges).unwrap()
        };
        assert_eq!(canonical_label(&k331), canonical_label(&relabeled));
    }

    #[test]
    fn all_k6_delta_y_children_are_one_graph() {
        let k6 = Graph::complete(6).unwrap();
        let mut labels = std::collections::BTreeSet::new();
        for tri in enumerate_cycles(&k6, Some(3)) {
            labels.insert(canonical_label(&k6.delta_y(&tri).unwrap()));
        }
        assert_eq!(labels.len(), 1);
    }

    #[test]
    fn petersen_graph_is_distinguished_from_other_cubic_graphs() {
        // Petersen vs K_{3,3} subdivision-free 3-regular graph on 10 vertices
        // (the 5-prism): same degree sequence, different graphs.
        let petersen = Graph::new(
            (0..10).map(|i| i.to_string()).collect(),
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0), // outer C5
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5), // inner pentagram
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9), // spokes
            ]
            .map(|(a, b): (i32, i32)| (a.to_string(), b.to_string()))
            .to_vec()
            .as_slice(),
        )
        .unwrap();
        let prism = Graph::new(
            (0..10).map(|i| i.to_string()).collect(),
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (5, 6), (6, 7), (7, 8), (8, 9), (9, 5),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            ]
            .map(|(a, b): (i32, i32)| (a.to_string(), b.to_string()))
            .to_vec()
            .as_slice(),
        )
        .unwrap();
        assert_ne!(canonical_label(&petersen), canonical_label(&prism));
        assert_eq!(degree_fingerprint(&petersen), degree_fingerprint(&prism));
    }

    proptest! {
        #[test]
        fn relabeling_invariance(seed in 0u64..500) {
            // random graph on 8 vertices from the seed, random permutation
            let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(1);
            let mut next = || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                state
            };
            let n = 8u16;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u+1)..n {
                    if next() % 5 < 2 {
                        edges.push((u.to_string(), v.to_string()));
                    }
                }
            }
            let g = Graph::new((0..n).map(|i| i.to_string()).collect(), &edges).unwrap();
            let mut perm: Vec<u16> = (0..n).collect();
            for i in (1..n as usize).rev() {
                let j = (next() % (i as u64 + 1)) as usize;
                perm.swap(i, j);
            }
            let pedges: Vec<(String, String)> = edges
                .iter()
                .map(|(a, b)| {
                    let pa = perm[a.parse::<usize>().unwrap()];
                    let pb = perm[b.parse::<usize>().unwrap()];
                    (pa.to_string(), pb.to_string())
                })
                .collect();
            let h = Graph::new((0..n).map(|i| i.to_string()).collect(), &pedges).unwrap();
            prop_assert_eq!(canonical_label(&g), canonical_label(&h));
        }
    }
}
