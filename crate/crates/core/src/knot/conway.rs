//! Conway polynomial via the skein relation, with Reidemeister I/II
//! reduction and memoization.
//!
//! Strategy: repeatedly locate the first crossing (walking the components
//! from the basepoint) that is first met on its understrand. Switching it
//! moves the diagram strictly closer to descending; smoothing it removes a
//! crossing. Descending diagrams are unknots (one component) or split
//! unions (several), so the recursion terminates with certainty.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::geom::{LinkDiagram, Passage};
use crate::{Error, Result};

/// Polynomial in z with integer coefficients; index = power.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConwayPolynomial(Vec<i64>);

impl ConwayPolynomial {
    pub fn zero() -> Self {
        ConwayPolynomial(Vec::new())
    }

    pub fn one() -> Self {
        ConwayPolynomial(vec![1])
    }

    pub fn from_coeffs(c: &[i64]) -> Self {
        let mut p = ConwayPolynomial(c.to_vec());
        p.trim();
        p
    }

    pub fn coefficient(&self, power: usize) -> i64 {
        self.0.get(power).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        if self.0.is_empty() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.0
    }

    fn trim(&mut self) {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }

    fn add_assign(&mut self, other: &ConwayPolynomial, scale: i64) {
        if self.0.len() < other.0.len() {
            self.0.resize(other.0.len(), 0);
        }
        for (i, c) in other.0.iter().enumerate() {
            self.0[i] += scale * c;
        }
        self.trim();
    }

    /// Multiply by z and add into self with the given sign.
    fn add_z_times(&mut self, other: &ConwayPolynomial, scale: i64) {
        if other.0.is_empty() {
            return;
        }
        if self.0.len() < other.0.len() + 1 {
            self.0.resize(other.0.len() + 1, 0);
        }
        for (i, c) in other.0.iter().enumerate() {
            self.0[i + 1] += scale * c;
        }
        self.trim();
    }
}

impl fmt::Display for ConwayPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+ " };
            let mag = c.abs();
            if !first {
                write!(f, " ")?;
            }
            match i {
                0 => write!(f, "{sign}{mag}")?,
                1 if mag == 1 => write!(f, "{sign}z")?,
                1 => write!(f, "{sign}{mag}z")?,
                _ if mag == 1 => write!(f, "{sign}z^{i}")?,
                _ => write!(f, "{sign}{mag}z^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Reidemeister I and II reduction to a local fixpoint. Invariant-preserving
/// and crossing-count non-increasing; crossing-free components are kept.
pub fn simplify(d: &LinkDiagram) -> LinkDiagram {
    let mut d = d.clone();
    loop {
        if let Some(c) = find_r1(&d) {
            remove_crossings(&mut d, &[c]);
            continue;
        }
        if let Some((c, e)) = find_r2(&d) {
            remove_crossings(&mut d, &[c, e]);
            continue;
        }
        return d;
    }
}

fn find_r1(d: &LinkDiagram) -> Option<u32> {
    for comp in &d.components {
        let n = comp.len();
        for i in 0..n {
            if comp[i].crossing == comp[(i + 1) % n].crossing {
                return Some(comp[i].crossing);
            }
        }
    }
    None
}

fn find_r2(d: &LinkDiagram) -> Option<(u32, u32)> {
    // adjacent same-level pairs: {c,d} met consecutively both-over and,
    // elsewhere, both-under — an empty bigon, removable
    let mut overs: BTreeSet<(u32, u32)> = BTreeSet::new();
    let mut unders: BTreeSet<(u32, u32)> = BTreeSet::new();
    for comp in &d.components {
        let n = comp.len();
        for i in 0..n {
            let (p, q) = (&comp[i], &comp[(i + 1) % n]);
            if p.crossing == q.crossing {
                continue;
            }
            let key = (p.crossing.min(q.crossing), p.crossing.max(q.crossing));
            if p.over && q.over {
                overs.insert(key);
            } else if !p.over && !q.over {
                unders.insert(key);
            }
        }
    }
    overs.intersection(&unders).next().map(|&(a, b)| (a, b))
}

fn remove_crossings(d: &mut LinkDiagram, ids: &[u32]) {
    for comp in &mut d.components {
        comp.retain(|p| !ids.contains(&p.crossing));
    }
}

/// Locations of the two passages of a crossing.
fn passage_positions(d: &LinkDiagram, c: u32) -> [(usize, usize); 2] {
    let mut out = Vec::with_capacity(2);
    for (ci, comp) in d.components.iter().enumerate() {
        for (pi, p) in comp.iter().enumerate() {
            if p.crossing == c {
                out.push((ci, pi));
            }
        }
    }
    [out[0], out[1]]
}

fn switch(d: &LinkDiagram, c: u32) -> LinkDiagram {
    let mut d = d.clone();
    for comp in &mut d.components {
        for p in comp.iter_mut() {
            if p.crossing == c {
                p.over = !p.over;
                p.sign = -p.sign;
            }
        }
    }
    d
}

/// Oriented smoothing of crossing c: merges two components or splits one.
fn smooth(d: &LinkDiagram, c: u32) -> LinkDiagram {
    let [(ci, pi), (cj, pj)] = passage_positions(d, c);
    let mut components = d.components.clone();
    if ci != cj {
        // merge: enter component cj right after its passage, wrap it, return
        let absorbed = components[cj].clone();
        let host = &mut components[ci];
        let mut merged: Vec<Passage> = Vec::with_capacity(host.len() + absorbed.len() - 2);
        merged.extend_from_slice(&host[..pi]);
        merged.extend_from_slice(&absorbed[pj + 1..]);
        merged.extend_from_slice(&absorbed[..pj]);
        merged.extend_from_slice(&host[pi + 1..]);
        *host = merged;
        components.remove(cj);
    } else {
        let (a, b) = (pi.min(pj), pi.max(pj));
        let comp = components[ci].clone();
        let mut first: Vec<Passage> = Vec::new();
        first.extend_from_slice(&comp[..a]);
        first.extend_from_slice(&comp[b + 1..]);
        let second: Vec<Passage> = comp[a + 1..b].to_vec();
        components[ci] = first;
        components.insert(ci + 1, second);
    }
    LinkDiagram { components }
}

/// First crossing met on its understrand when walking components from the
/// basepoint; None when the diagram is descending.
fn first_bad(d: &LinkDiagram) -> Option<u32> {
    let mut seen = BTreeSet::new();
    for comp in &d.components {
        for p in comp {
            if seen.insert(p.crossing) && !p.over {
                return Some(p.crossing);
            }
        }
    }
    None
}

/// Split detection: components grouped by shared crossings. A diagram that
/// falls into two or more groups presents a split link.
fn is_split(d: &LinkDiagram) -> bool {
    let n = d.components.len();
    if n <= 1 {
        return false;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut Vec<usize>, i: usize) -> usize {
        if p[i] != i {
            let r = find(p, p[i]);
            p[i] = r;
        }
        p[i]
    }
    let mut owner: HashMap<u32, usize> = HashMap::new();
    for (ci, comp) in d.components.iter().enumerate() {
        for p in comp {
            if let Some(&cj) = owner.get(&p.crossing) {
                let (a, b) = (find(&mut parent, ci), find(&mut parent, cj));
                parent[a] = b;
            } else {
                owner.insert(p.crossing, ci);
            }
        }
    }
    let root0 = find(&mut parent, 0);
    (1..n).any(|i| find(&mut parent, i) != root0)
}

fn memo_key(d: &LinkDiagram) -> Vec<u8> {
    let mut relabel: HashMap<u32, u8> = HashMap::new();
    let mut key = Vec::with_capacity(d.n_crossings() * 4 + d.components.len());
    for comp in &d.components {
        for p in comp {
            let next = relabel.len() as u8;
            let id = *relabel.entry(p.crossing).or_insert(next);
            key.push(id);
            key.push(u8::from(p.over) | if p.sign > 0 { 2 } else { 0 });
        }
        key.push(0xff);
    }
    key
}

struct SkeinState {
    memo: HashMap<Vec<u8>, ConwayPolynomial>,
    nodes_left: u64,
}

/// Conway polynomial of a link diagram by the skein relation
/// nabla(L+) - nabla(L-) = z * nabla(L0), nabla(unknot) = 1,
/// nabla(split link) = 0.
pub fn conway_polynomial(d: &LinkDiagram) -> Result<ConwayPolynomial> {
    d.check()?;
    let mut state = SkeinState {
        memo: HashMap::new(),
        nodes_left: NODE_BUDGET,
    };
    conway_rec(d.clone(), &mut state)
}

const NODE_BUDGET: u64 = 4_000_000;

fn conway_rec(d: LinkDiagram, state: &mut SkeinState) -> Result<ConwayPolynomial> {
    if state.nodes_left == 0 {
        return Err(Error::Invariant(
            "skein resolution budget exceeded".into(),
        ));
    }
    state.nodes_left -= 1;
    let d = simplify(&d);
    if is_split(&d) {
        return Ok(ConwayPolynomial::zero());
    }
    let Some(c) = first_bad(&d) else {
        // descending: unknot or split union handled above
        return Ok(if d.n_components() == 1 {
            ConwayPolynomial::one()
        } else {
            ConwayPolynomial::zero()
        });
    };
    let key = memo_key(&d);
    if let Some(p) = state.memo.get(&key) {
        return Ok(p.clone());
    }
    let sign = d
        .components
        .iter()
        .flatten()
        .find(|p| p.crossing == c)
        .map(|p| p.sign)
        .unwrap();
    let switched = conway_rec(switch(&d, c), state)?;
    let smoothed = conway_rec(smooth(&d, c), state)?;
    // d is L+ when the crossing is positive: nabla(L+) = nabla(L-) + z nabla(L0)
    let mut out = ConwayPolynomial::zero();
    out.add_assign(&switched, 1);
    out.add_z_times(&smoothed, i64::from(sign));
    state.memo.insert(key, out.clone());
    Ok(out)
}

/// The z^2 coefficient of the Conway polynomial of a knot diagram.
pub fn a2(d: &LinkDiagram) -> Result<i64> {
    if d.n_components() != 1 {
        return Err(Error::Invariant(format!(
            "a2 needs a knot diagram, got {} components",
            d.n_components()
        )));
    }
    let p = conway_polynomial(d)?;
    debug_assert_eq!(p.coefficient(0), 1);
    debug_assert_eq!(p.coefficient(1), 0);
    Ok(p.coefficient(2))
}
