//! Linking number of a 2-component link diagram: half the signed sum of
//! the crossings between the two components.

use std::collections::BTreeMap;

use crate::geom::LinkDiagram;
use crate::{Error, Result};

pub fn linking_number(d: &LinkDiagram) -> Result<i64> {
    if d.n_components() != 2 {
        return Err(Error::Invariant(format!(
            "linking number needs exactly 2 components, got {}",
            d.n_components()
        )));
    }
    d.check()?;
    let mut comp_of: BTreeMap<u32, (usize, i64)> = BTreeMap::new();
    let mut total = 0i64;
    for (ci, comp) in d.components.iter().enumerate() {
        for p in comp {
            match comp_of.get(&p.crossing) {
                None => {
                    comp_of.insert(p.crossing, (ci, i64::from(p.sign)));
                }
                Some(&(cj, sign)) => {
                    if cj != ci {
                        total += sign;
                    }
                }
            }
        }
    }
    debug_assert_eq!(total % 2, 0, "inter-component crossings pair up");
    Ok(total / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::parse_gauss_code;
    use crate::knot::braid::braid_closure;
    use crate::knot::conway_polynomial;

    #[test]
    fn split_pair_links_zero() {
        let d = LinkDiagram {
            components: vec![vec![], vec![]],
        };
        assert_eq!(linking_number(&d).unwrap(), 0);
    }

    #[test]
    fn hopf_links_once() {
        let d = braid_closure(2, &[1, 1]).unwrap();
        assert_eq!(linking_number(&d).unwrap().abs(), 1);
        // standard all-positive inter-crossing diagram
        let d = parse_gauss_code("O1+ U2+ | U1+ O2+").unwrap();
        assert_eq!(linking_number(&d).unwrap(), 1);
    }

    #[test]
    fn torus_link_links_twice() {
        let d = braid_closure(2, &[1, 1, 1, 1]).unwrap();
        assert_eq!(linking_number(&d).unwrap().abs(), 2);
    }

    #[test]
    fn knot_rejected() {
        let d = braid_closure(2, &[1, 1, 1]).unwrap();
        assert!(linking_number(&d).is_err());
    }

    #[test]
    fn lowest_conway_coefficient_is_linking_number() {
        for word in [vec![1, 1], vec![1, 1, 1, 1], vec![-1, -1], vec![1, -1]] {
            let d = braid_closure(2, &word).unwrap();
            if d.n_components() != 2 {
                continue;
            }
            let lk = linking_number(&d).unwrap();
            let p = conway_polynomial(&d).unwrap();
            assert_eq!(p.coefficient(1), lk, "word {word:?}");
        }
    }
}
