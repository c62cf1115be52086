//! The z^2 Conway coefficient of a knot by a Gauss-diagram count,
//! independent of the skein evaluation.
//!
//! Walking the knot from the basepoint, every crossing is met twice. For
//! an ordered pair of crossings (c, d) whose chords interleave (the order
//! along the knot is c, d, c, d), count sign(c) * sign(d) whenever c is
//! first met on its overstrand and d is first met on its understrand. The
//! total is the z^2 coefficient; it does not depend on the basepoint.

use crate::geom::LinkDiagram;
use crate::{Error, Result};

pub fn a2_gauss(d: &LinkDiagram) -> Result<i64> {
    if d.n_components() != 1 {
        return Err(Error::Invariant(format!(
            "a2_gauss needs a knot diagram, got {} components",
            d.n_components()
        )));
    }
    d.check()?;
    let walk = &d.components[0];
    // first and second position of each crossing along the walk
    let mut spans: Vec<(usize, usize, bool, i64)> = Vec::new(); // (first, second, first_is_over, sign)
    {
        use std::collections::BTreeMap;
        let mut first_at: BTreeMap<u32, (usize, bool, i64)> = BTreeMap::new();
        for (pos, p) in walk.iter().enumerate() {
            match first_at.get(&p.crossing) {
                None => {
                    first_at.insert(p.crossing, (pos, p.over, i64::from(p.sign)));
                }
                Some(&(fpos, fover, sign)) => {
                    spans.push((fpos, pos, fover, sign));
                }
            }
        }
    }
    let mut total = 0i64;
    for i in 0..spans.len() {
        for j in 0..spans.len() {
            if i == j {
                continue;
            }
            let (c1, c2, c_over, c_sign) = spans[i];
            let (d1, d2, d_over, d_sign) = spans[j];
            // interleaved with c first: c1 < d1 < c2 < d2
            if c1 < d1 && d1 < c2 && c2 < d2 && c_over && !d_over {
                total += c_sign * d_sign;
            }
        }
    }
    Ok(total)
}
