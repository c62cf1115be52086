//! Link diagrams: oriented components as cyclic passage sequences over
//! shared crossings, assembled exactly from a projected scene, plus the
//! signed Gauss code text format.

use std::collections::BTreeMap;

use super::project::Scene;
use crate::graph::Cycle;
use crate::{Error, Result};

/// One passage of a component through a crossing. `sign` is the crossing
/// sign (shared by both passages): +1 when the over tangent followed by the
/// under tangent is a positively oriented plane frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Passage {
    pub crossing: u32,
    pub over: bool,
    pub sign: i8,
}

/// An oriented link diagram. Components are cyclic passage sequences;
/// every crossing id occurs exactly twice, once over and once under.
/// Components without passages are crossing-free circles and are kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkDiagram {
    pub components: Vec<Vec<Passage>>,
}

impl LinkDiagram {
    pub fn n_components(&self) -> usize {
        self.components.len()
    }

    pub fn n_crossings(&self) -> usize {
        self.components.iter().map(|c| c.len()).sum::<usize>() / 2
    }

    /// Structural sanity: every crossing appears exactly twice, once over,
    /// once under, with equal signs.
    pub fn check(&self) -> Result<()> {
        let mut seen: BTreeMap<u32, Vec<Passage>> = BTreeMap::new();
        for comp in &self.components {
            for p in comp {
                seen.entry(p.crossing).or_default().push(*p);
            }
        }
        for (id, ps) in seen {
            if ps.len() != 2 || ps[0].over == ps[1].over || ps[0].sign != ps[1].sign {
                return Err(Error::Diagram(format!("malformed crossing {id}")));
            }
            if ps[0].sign != 1 && ps[0].sign != -1 {
                return Err(Error::Diagram(format!("bad sign on crossing {id}")));
            }
        }
        Ok(())
    }

    /// Signed Gauss code with over/under marks, e.g.
    /// `O1+ U2+ O3+ U1+ O2+ U3+`, components separated by ` | `,
    /// crossing-free components written `()`.
    pub fn gauss_code(&self) -> String {
        self.components
            .iter()
            .map(|comp| {
                if comp.is_empty() {
                    "()".to_string()
                } else {
                    comp.iter()
                        .map(|p| {
                            format!(
                                "{}{}{}",
                                if p.over { 'O' } else { 'U' },
                                p.crossing + 1,
                                if p.sign > 0 { '+' } else { '-' }
                            )
                        })
                        .collect::<Vec<_>>()
                        .join(" ")
                }
            })
            .collect::<Vec<_>>()
            .join(" | ")
    }
}

/// Parse the Gauss code format produced by [`LinkDiagram::gauss_code`].
pub fn parse_gauss_code(s: &str) -> Result<LinkDiagram> {
    let mut components = Vec::new();
    for part in s.split('|') {
        let part = part.trim();
        if part.is_empty() || part == "()" {
            components.push(Vec::new());
            continue;
        }
        let mut comp = Vec::new();
        for tok in part.split_whitespace() {
            let bytes = tok.as_bytes();
            if bytes.len() < 3 {
                return Err(Error::Diagram(format!("bad gauss token {tok:?}")));
            }
            let over = match bytes[0] {
                b'O' | b'o' => true,
                b'U' | b'u' => false,
                _ => return Err(Error::Diagram(format!("bad gauss token {tok:?}"))),
            };
            let sign = match bytes[bytes.len() - 1] {
                b'+' => 1,
                b'-' => -1,
                _ => return Err(Error::Diagram(format!("bad gauss token {tok:?}"))),
            };
            let id: u32 = tok[1..tok.len() - 1]
                .parse()
                .map_err(|_| Error::Diagram(format!("bad gauss token {tok:?}")))?;
            if id == 0 {
                return Err(Error::Diagram("gauss crossing ids are 1-based".into()));
            }
            comp.push(Passage {
                crossing: id - 1,
                over,
                sign,
            });
        }
        components.push(comp);
    }
    let d = LinkDiagram { components };
    d.check()?;
    Ok(d)
}

/// Build the oriented diagram of the given vertex-disjoint cycles under an
/// already validated regular projection. Orientations follow each cycle's
/// canonical vertex order; crossings between a target segment and a
/// non-target segment are ignored.
pub fn build_diagram(scene: &Scene, cycles: &[&Cycle]) -> Result<LinkDiagram> {
    // directed segment runs per component
    let mut runs: Vec<Vec<(usize, bool)>> = Vec::with_capacity(cycles.len());
    let mut included: BTreeMap<usize, bool> = BTreeMap::new(); // seg -> flipped
    for cycle in cycles {
        let mut run = Vec::new();
        let verts = cycle.vertices();
        for i in 0..verts.len() {
            let (a, b) = (verts[i], verts[(i + 1) % verts.len()]);
            let key = (a.min(b), a.max(b));
            let segs = scene
                .by_edge
                .get(&key)
                .ok_or_else(|| Error::Diagram(format!("edge {a}-{b} missing from scene")))?;
            let flipped = a > b;
            if flipped {
                run.extend(segs.iter().rev().map(|&s| (s, true)));
            } else {
                run.extend(segs.iter().map(|&s| (s, false)));
            }
        }
        for &(s, f) in &run {
            if included.insert(s, f).is_some() {
                return Err(Error::Diagram("cycles reuse a segment".into()));
            }
        }
        runs.push(run);
    }

    // dense ids for crossings with both segments included
    let mut ids: BTreeMap<usize, u32> = BTreeMap::new();
    for (k, c) in scene.crossings.iter().enumerate() {
        if included.contains_key(&c.seg_i) && included.contains_key(&c.seg_j) {
            let id = ids.len() as u32;
            ids.insert(k, id);
        }
    }

    let mut components = Vec::with_capacity(runs.len());
    for run in runs {
        let mut comp = Vec::new();
        for (seg, flipped) in run {
            let mut along: Vec<(usize, u32)> = scene.on_segment[seg]
                .iter()
                .filter_map(|(_, k)| ids.get(k).map(|&id| (*k, id)))
                .collect();
            if flipped {
                along.reverse();
            }
            for (k, id) in along {
                let c = &scene.crossings[k];
                let this_is_i = c.seg_i == seg;
                let over = if this_is_i { c.i_over } else { !c.i_over };
                let f_i = if included[&c.seg_i] { -1i8 } else { 1 };
                let f_j = if included[&c.seg_j] { -1i8 } else { 1 };
                let mut sign = c.det_sign * f_i * f_j;
                if !c.i_over {
                    sign = -sign;
                }
                comp.push(Passage {
                    crossing: id,
                    over,
                    sign,
                });
            }
        }
        components.push(comp);
    }

    let d = LinkDiagram { components };
    d.check()?;
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{generic_directions, SpatialEmbedding, V3};
    use crate::graph::{enumerate_cycles, enumerate_disjoint_pairs, Graph};

    #[test]
    fn gauss_code_round_trip() {
        let trefoil = "O1+ U2+ O3+ U1+ O2+ U3+";
        let d = parse_gauss_code(trefoil).unwrap();
        assert_eq!(d.n_crossings(), 3);
        assert_eq!(d.gauss_code(), trefoil);
        let link = "O1+ U2- | U1+ O2- | ()";
        let d = parse_gauss_code(link).unwrap();
        assert_eq!(d.n_components(), 3);
        assert_eq!(d.gauss_code(), link);
    }

    #[test]
    fn malformed_codes_rejected() {
        assert!(parse_gauss_code("O1+ U1-").is_err()); // sign mismatch
        assert!(parse_gauss_code("O1+ O1+").is_err()); // two overs
        assert!(parse_gauss_code("O1+").is_err()); // single passage
    }

    #[test]
    fn planar_triangle_has_no_crossings() {
        let g = Graph::complete(3).unwrap();
        let emb = SpatialEmbedding::new(
            g.clone(),
            vec![
                V3::from_ints(0, 0, 0),
                V3::from_ints(4, 0, 1),
                V3::from_ints(0, 4, 2),
            ],
            Default::default(),
        )
        .unwrap();
        assert!(emb.validate().is_empty());
        let scene = &generic_directions(&emb, 1).unwrap()[0];
        let tri = &enumerate_cycles(&g, Some(3))[0];
        let d = build_diagram(scene, &[tri]).unwrap();
        assert_eq!(d.n_crossings(), 0);
        assert_eq!(d.n_components(), 1);
    }

    #[test]
    fn eight_stick_cycle_has_at_most_twenty_crossings() {
        // an 8-gon has 8*(8-3)/2 = 20 non-adjacent segment pairs
        let g = Graph::complete_multipartite(&[3, 3, 1, 1]).unwrap();
        for stream in 0..5 {
            let emb = SpatialEmbedding::sample_rectilinear(&g, 99, stream, 1000).unwrap();
            let scene = &generic_directions(&emb, 1).unwrap()[0];
            for cycle in enumerate_cycles(&g, Some(8)).iter().take(20) {
                let d = build_diagram(scene, &[cycle]).unwrap();
                assert!(d.n_crossings() <= 20);
            }
        }
    }

    #[test]
    fn pair_diagram_components_match_cycles() {
        let g = Graph::complete(6).unwrap();
        let emb = SpatialEmbedding::moment_curve_default(g.clone()).unwrap();
        let scene = &generic_directions(&emb, 1).unwrap()[0];
        let pairs = enumerate_disjoint_pairs(&g, Some((3, 3)));
        assert_eq!(pairs.len(), 10);
        for p in &pairs {
            let d = build_diagram(scene, &[p.first(), p.second()]).unwrap();
            assert_eq!(d.n_components(), 2);
        }
    }
}
