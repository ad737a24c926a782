//! The combinatorial model of the complex for genus one.
//!
//! A separating vertex `v_{I,J}` records the labelled boundaries of the
//! orientable piece split by orientation; a one-sided vertex `v_I` records the
//! orientation classes of all boundaries of the (orientable) cut surface.

use super::{ComplexError, Edge, QuotientComplex, Vertex};
use crate::diagram::{CutDiagram, GluingKind};
use crate::surface::Surface;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VertexG1 {
    Separating {
        #[serde(rename = "I")]
        i: Vec<u32>,
        #[serde(rename = "J")]
        j: Vec<u32>,
    },
    OneSided {
        #[serde(rename = "I")]
        i: Vec<u32>,
    },
}

fn mask(s: &[u32]) -> u32 {
    s.iter().fold(0, |m, &l| m | 1 << (l - 1))
}

fn labels(m: u32) -> Vec<u32> {
    (0..32).filter(|b| m >> b & 1 == 1).map(|b| b + 1).collect()
}

impl VertexG1 {
    /// `v_{I,J}` with `|I| <= |J|`, and `min I < min J` on ties.
    pub fn separating(a: u32, b: u32) -> Self {
        let key = |m: u32| (m.count_ones(), if m == 0 { 0 } else { m.trailing_zeros() });
        let (i, j) = if key(a) <= key(b) { (a, b) } else { (b, a) };
        VertexG1::Separating { i: labels(i), j: labels(j) }
    }

    /// `v_I` with `|I| <= n/2`, and `1 in I` when `|I| = n/2`.
    pub fn one_sided(a: u32, n: u32) -> Self {
        let all = if n == 32 { u32::MAX } else { (1 << n) - 1 };
        let c = all & !a;
        let pick = match (2 * a.count_ones()).cmp(&n) {
            std::cmp::Ordering::Less => a,
            std::cmp::Ordering::Greater => c,
            std::cmp::Ordering::Equal => {
                if a & 1 == 1 {
                    a
                } else {
                    c
                }
            }
        };
        VertexG1::OneSided { i: labels(pick) }
    }

    /// Read the label off a single-curve diagram of a genus-one surface.
    pub fn from_diagram(d: &CutDiagram) -> Result<Self, ComplexError> {
        let na = || ComplexError::NotApplicable("not a single curve on a genus-one surface".into());
        if d.target.orientable || d.target.genus != 1 || d.curves.len() != 1 {
            return Err(na());
        }
        let t = d.slot_table()?;
        let classes = |ci: usize| {
            let c = &d.components[ci];
            let mut by_sign = (0u32, 0u32);
            for (&l, &s) in &d.exterior {
                if t.owner[&s] == ci {
                    if c.sign(s) > 0 {
                        by_sign.0 |= 1 << (l - 1);
                    } else {
                        by_sign.1 |= 1 << (l - 1);
                    }
                }
            }
            by_sign
        };
        match (d.curves[0].kind, d.components.len()) {
            (GluingKind::OneSided { .. }, 1) if d.components[0].orientable => {
                Ok(Self::one_sided(classes(0).0, d.target.boundary))
            }
            (GluingKind::TwoSided { .. }, 2) => {
                let ci = d.components.iter().position(|c| c.orientable).ok_or_else(na)?;
                let (a, b) = classes(ci);
                Ok(Self::separating(a, b))
            }
            _ => Err(na()),
        }
    }

    fn masks(&self) -> (u32, Option<u32>) {
        match self {
            VertexG1::Separating { i, j } => (mask(i), Some(mask(j))),
            VertexG1::OneSided { i } => (mask(i), None),
        }
    }
}

/// Adjacency in the genus-one complex on `n` boundaries.
pub fn adjacent(v: &VertexG1, w: &VertexG1, n: u32) -> bool {
    let all = (1u32 << n) - 1;
    let sub = |a: u32, b: u32| a & !b == 0;
    match (v.masks(), w.masks()) {
        ((i, Some(j)), (k, Some(l))) => {
            let ((i, j), (k, l)) =
                if (i | j).count_ones() <= (k | l).count_ones() { ((i, j), (k, l)) } else { ((k, l), (i, j)) };
            let strict = (i | j).count_ones() < (k | l).count_ones();
            (sub(i, k) && sub(j, l) && strict) || (sub(i, l) && sub(j, k) && strict) || (i | j) & (k | l) == 0
        }
        ((i, None), (j, Some(k))) | ((j, Some(k)), (i, None)) => {
            let ic = all & !i;
            (sub(j, i) && sub(k, ic)) || (sub(k, i) && sub(j, ic))
        }
        _ => false,
    }
}

/// All normalized vertices: one-sided first, then separating.
pub fn g1_vertices(n: u32) -> Vec<VertexG1> {
    let mut one = BTreeSet::new();
    for m in 0u32..1 << n {
        one.insert(VertexG1::one_sided(m, n));
    }
    let mut sep = BTreeSet::new();
    for code in 0..3u32.pow(n) {
        let (mut a, mut b, mut c) = (0u32, 0u32, code);
        for l in 0..n {
            match c % 3 {
                1 => a |= 1 << l,
                2 => b |= 1 << l,
                _ => {}
            }
            c /= 3;
        }
        let s = (a | b).count_ones();
        if (2..n).contains(&s) {
            sep.insert(VertexG1::separating(a, b));
        }
    }
    let by_size = |v: &VertexG1| {
        let (a, b) = v.masks();
        ((a | b.unwrap_or(0)).count_ones(), v.clone())
    };
    let mut one: Vec<_> = one.into_iter().collect();
    one.sort_by_key(by_size);
    let mut sep: Vec<_> = sep.into_iter().collect();
    sep.sort_by_key(by_size);
    one.into_iter().chain(sep).collect()
}

pub fn g1_symbolic_complex(n: u32) -> Result<QuotientComplex, ComplexError> {
    if n < 5 {
        return Err(ComplexError::NotApplicable(format!("genus one needs at least 5 boundaries, got {n}")));
    }
    let vs = g1_vertices(n);
    let vertices: Vec<Vertex> =
        vs.iter().enumerate().map(|(id, v)| Vertex { id, rep: None, g1: Some(v.clone()) }).collect();
    let mut edges = Vec::new();
    let mut edge_of: HashMap<(usize, usize), usize> = HashMap::new();
    let mut nbrs: Vec<Vec<usize>> = vec![vec![]; vs.len()];
    for a in 0..vs.len() {
        for b in 0..vs.len() {
            if a != b && adjacent(&vs[a], &vs[b], n) {
                edge_of.insert((a, b), edges.len());
                edges.push(Edge { id: edges.len(), src: a, dst: b, rep: None, reverse: None });
                nbrs[a].push(b);
            }
        }
    }
    for e in &mut edges {
        e.reverse = edge_of.get(&(e.dst, e.src)).copied();
    }
    let mut triangles = Vec::new();
    for u in 0..vs.len() {
        for &v in &nbrs[u] {
            for &w in &nbrs[v] {
                if w != u {
                    if let Some(&c) = edge_of.get(&(u, w)) {
                        triangles.push([edge_of[&(u, v)], edge_of[&(v, w)], c]);
                    }
                }
            }
        }
    }
    let x = QuotientComplex { target: Surface::non_orientable(1, n)?, vertices, edges, triangles };
    x.check()?;
    Ok(x)
}
