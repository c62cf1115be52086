//! Braid closures as link diagrams. Handy for generating reference knots
//! and links with known invariants.

use crate::geom::{LinkDiagram, Passage};
use crate::{Error, Result};

/// Close the braid given by `word` on `strands` strands. Generator `k`
/// (1-based, k < strands) crosses the strand at position k over the strand
/// at position k+1; `-k` crosses it under. All strands are oriented the
/// same way, so generator sign equals crossing sign.
pub fn braid_closure(strands: usize, word: &[i32]) -> Result<LinkDiagram> {
    if strands < 1 {
        return Err(Error::Diagram("braid needs at least one strand".into()));
    }
    // position -> strand currently there; strands named by start position
    let mut at: Vec<usize> = (0..strands).collect();
    let mut seq: Vec<Vec<Passage>> = vec![Vec::new(); strands];
    for (m, &g) in word.iter().enumerate() {
        let k = g.unsigned_abs() as usize;
        if k == 0 || k >= strands {
            return Err(Error::Diagram(format!(
                "generator {g} out of range for {strands} strands"
            )));
        }
        let (a, b) = (at[k - 1], at[k]);
        let positive = g > 0;
        let sign = if positive { 1 } else { -1 };
        seq[a].push(Passage {
            crossing: m as u32,
            over: positive,
            sign,
        });
        seq[b].push(Passage {
            crossing: m as u32,
            over: !positive,
            sign,
        });
        at.swap(k - 1, k);
    }
    // closure: the strand ending at top position p continues as the strand
    // that starts at bottom position p
    let mut top_pos = vec![0usize; strands];
    for (pos, &s) in at.iter().enumerate() {
        top_pos[s] = pos;
    }
    let mut used = vec![false; strands];
    let mut components = Vec::new();
    for start in 0..strands {
        if used[start] {
            continue;
        }
        let mut comp = Vec::new();
        let mut s = start;
        loop {
            used[s] = true;
            comp.extend_from_slice(&seq[s]);
            s = top_pos[s];
            if s == start {
                break;
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

    #[test]
    fn component_counts() {
        assert_eq!(braid_closure(2, &[1, 1, 1]).unwrap().n_components(), 1);
        assert_eq!(braid_closure(2, &[1, 1]).unwrap().n_components(), 2);
        assert_eq!(braid_closure(3, &[]).unwrap().n_components(), 3);
        assert_eq!(braid_closure(3, &[1, -2, 1, -2]).unwrap().n_components(), 1);
    }

    #[test]
    fn bad_generators_rejected() {
        assert!(braid_closure(2, &[2]).is_err());
        assert!(braid_closure(2, &[0]).is_err());
    }
}
