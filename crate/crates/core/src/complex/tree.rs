//! Maximal trees in the 1-skeleton.
//!
//! For each vertex other than the base one edge is selected by a rule on the
//! representative diagrams: the auxiliary curve `a` (curve 1 of the edge) is
//! placed in a prescribed piece of the cut surface of `b` (curve 2). When a
//! rule admits several edge orbits the least canonical form wins.

use super::g1::VertexG1;
use super::{ComplexError, QuotientComplex};
use crate::diagram::{canonical_form, CutDiagram, SlotRef};
use crate::surface::is_sporadic;
use std::collections::HashMap;

/// One component of a cut surface, seen from the tree rules.
#[derive(Debug, Clone)]
struct PieceInfo {
    orientable: bool,
    genus: u32,
    /// exterior labels with signs (signs are meaningless on non-orientable pieces)
    ext: Vec<(u32, i8)>,
    /// curve index of every limit slot, with multiplicity
    curves: Vec<u32>,
}

impl PieceInfo {
    fn labels(&self) -> Vec<u32> {
        self.ext.iter().map(|e| e.0).collect()
    }

    fn same_sign(&self) -> bool {
        self.ext.windows(2).all(|w| w[0].1 == w[1].1)
    }

    fn count(&self, i: u32) -> usize {
        self.curves.iter().filter(|&&c| c == i).count()
    }

    fn matches(&self, other: &PieceInfo) -> bool {
        self.orientable == other.orientable && self.genus == other.genus && self.labels() == other.labels()
    }
}

fn pieces(d: &CutDiagram) -> Result<Vec<PieceInfo>, ComplexError> {
    let t = d.slot_table()?;
    Ok(d.components
        .iter()
        .map(|c| {
            let mut ext = Vec::new();
            let mut curves = Vec::new();
            for s in &c.slots {
                match t.attach[s] {
                    SlotRef::Ext(l) => ext.push((l, c.sign(*s))),
                    SlotRef::Side(i, _) | SlotRef::One(i) => curves.push(i),
                }
            }
            ext.sort_unstable();
            PieceInfo { orientable: c.orientable, genus: c.genus, ext, curves }
        })
        .collect())
}

fn one_sided(d: &CutDiagram, i: u32) -> bool {
    d.curve(i).is_some_and(|c| c.is_one_sided())
}

fn rep(x: &QuotientComplex, v: usize) -> Result<&CutDiagram, ComplexError> {
    x.vertices[v].rep.as_ref().ok_or_else(|| ComplexError::Malformed(format!("vertex {v} has no diagram")))
}

/// Split `vp` (two pieces) into the piece receiving `a` and the other one.
fn target_and_other(vp: &[PieceInfo], target_first: bool) -> (&PieceInfo, &PieceInfo) {
    if target_first {
        (&vp[0], &vp[1])
    } else {
        (&vp[1], &vp[0])
    }
}

/// The edge pieces `ep` put `a` (two-sided, both sides) or (one-sided) into a
/// piece `x` while the other piece matches `other`.
fn placed<'a>(ep: &'a [PieceInfo], other: &PieceInfo, a_slots: usize) -> Option<&'a PieceInfo> {
    if ep.len() != 2 {
        return None;
    }
    let xi = ep.iter().position(|p| p.count(1) == a_slots)?;
    let y = &ep[1 - xi];
    (y.count(1) == 0 && y.matches(other)).then_some(&ep[xi])
}

/// Rule for genus at least three, base `v1`.
fn rule_high(g: u32, vp: &[PieceInfo], e: &CutDiagram, ep: &[PieceInfo]) -> bool {
    if one_sided(e, 1) {
        return false;
    }
    match vp.len() {
        1 if !vp[0].orientable => {
            if g >= 4 {
                ep.len() == 1 && !ep[0].orientable
            } else {
                ep.len() == 1 && ep[0].orientable && ep[0].same_sign()
            }
        }
        1 => ep.len() == 1,
        2 => {
            if let Some(ni) = vp.iter().position(|p| p.orientable) {
                let n = &vp[ni];
                let (t, o) = target_and_other(vp, (ni == 0) == (n.genus >= 1));
                let Some(x) = placed(ep, o, 2) else { return false };
                x.orientable == t.orientable
            } else {
                let first = match vp[0].genus.cmp(&vp[1].genus) {
                    std::cmp::Ordering::Greater => true,
                    std::cmp::Ordering::Less => false,
                    std::cmp::Ordering::Equal => vp[1].labels().first() != Some(&1),
                };
                let (t, o) = target_and_other(vp, first);
                let Some(x) = placed(ep, o, 2) else { return false };
                if t.genus >= 3 {
                    !x.orientable
                } else {
                    x.orientable && x.same_sign()
                }
            }
        }
        _ => false,
    }
}

/// Rule for genus two and a separating vertex, base `v2`.
fn rule_two_separating(vp: &[PieceInfo], e: &CutDiagram, ep: &[PieceInfo]) -> bool {
    if !one_sided(e, 1) || vp.len() != 2 {
        return false;
    }
    if let Some(ni) = vp.iter().position(|p| p.orientable) {
        placed(ep, &vp[ni], 1).is_some()
    } else {
        let first = vp[0].labels().first() == Some(&1);
        let (_, o) = target_and_other(vp, first);
        placed(ep, o, 1).is_some_and(|x| x.orientable && x.same_sign())
    }
}

/// Rule for genus two and a two-sided non-separating vertex: `a` cuts off a
/// pair of pants holding `c1` and `c2`.
fn rule_two_pants(e: &CutDiagram, ep: &[PieceInfo]) -> bool {
    !one_sided(e, 1)
        && ep.len() == 2
        && ep.iter().any(|p| p.orientable && p.genus == 0 && p.labels() == [1, 2] && p.curves == [1])
}

pub fn build_maximal_tree(x: &QuotientComplex, g: u32, n: u32) -> Result<Vec<usize>, ComplexError> {
    if x.target.genus != g || x.target.boundary != n || x.target.orientable {
        return Err(ComplexError::NotApplicable(format!("complex is for {}, not F_{g}^{n}", x.target)));
    }
    if is_sporadic(g, n) {
        return Err(ComplexError::NotApplicable(format!("F_{g}^{n} is sporadic")));
    }
    let tree = if g == 1 { tree_g1(x)? } else { tree_by_rules(x, g)? };
    verify_tree(x, &tree)?;
    Ok(tree)
}

fn tree_g1(x: &QuotientComplex) -> Result<Vec<usize>, ComplexError> {
    let n = x.target.boundary;
    let mut id: HashMap<&VertexG1, usize> = HashMap::new();
    for v in &x.vertices {
        let l = v.g1.as_ref().ok_or_else(|| ComplexError::Malformed(format!("vertex {} has no label", v.id)))?;
        id.insert(l, v.id);
    }
    let mut edge: HashMap<(usize, usize), usize> = HashMap::new();
    for e in &x.edges {
        edge.entry((e.src, e.dst)).or_insert(e.id);
    }
    let find = |a: &VertexG1, b: &VertexG1| -> Result<usize, ComplexError> {
        let missing = || ComplexError::NotATree(format!("no edge from {a:?} to {b:?}"));
        let (s, d) = (id.get(a).ok_or_else(missing)?, id.get(b).ok_or_else(missing)?);
        edge.get(&(*s, *d)).copied().ok_or_else(missing)
    };
    let all = (1u32 << n) - 1;
    let mask = |s: &[u32]| s.iter().fold(0u32, |m, &l| m | 1 << (l - 1));
    let mut tree = Vec::new();
    for v in &x.vertices {
        match v.g1.as_ref().expect("checked") {
            VertexG1::Separating { i, .. } => {
                let vi = VertexG1::one_sided(mask(i), n);
                tree.push(find(&vi, v.g1.as_ref().unwrap())?);
            }
            VertexG1::OneSided { i } if !i.is_empty() => {
                let w = VertexG1::separating(0, all & !mask(i));
                tree.push(find(v.g1.as_ref().unwrap(), &w)?);
            }
            VertexG1::OneSided { .. } => {}
        }
    }
    tree.sort_unstable();
    Ok(tree)
}

fn tree_by_rules(x: &QuotientComplex, g: u32) -> Result<Vec<usize>, ComplexError> {
    let mut vinfo = Vec::with_capacity(x.vertices.len());
    for v in &x.vertices {
        let d = rep(x, v.id)?;
        vinfo.push((one_sided(d, 1), pieces(d)?));
    }
    let base = vinfo
        .iter()
        .position(|(os, p)| if g == 2 { *os } else { !*os && p.len() == 1 && !p[0].orientable })
        .ok_or_else(|| ComplexError::NotATree("no base vertex".into()))?;

    let mut candidates: Vec<Vec<usize>> = vec![vec![]; x.vertices.len()];
    for e in &x.edges {
        if e.dst == base {
            continue;
        }
        let d = e.rep.as_ref().ok_or_else(|| ComplexError::Malformed(format!("edge {} has no diagram", e.id)))?;
        let (v_one, vp) = &vinfo[e.dst];
        let ep = pieces(d)?;
        let ok = if g >= 3 {
            e.src == base && rule_high(g, vp, d, &ep)
        } else if vp.len() == 2 {
            e.src == base && rule_two_separating(vp, d, &ep)
        } else {
            !v_one && rule_two_pants(d, &ep)
        };
        if ok {
            candidates[e.dst].push(e.id);
        }
    }
    let mut tree = Vec::new();
    for (v, cands) in candidates.iter().enumerate() {
        if v == base {
            continue;
        }
        let mut best: Option<(Vec<u8>, usize)> = None;
        for &c in cands {
            let f = canonical_form(x.edges[c].rep.as_ref().expect("checked"))?;
            if best.as_ref().is_none_or(|b| f < b.0) {
                best = Some((f, c));
            }
        }
        let (_, e) = best.ok_or_else(|| ComplexError::NotATree(format!("no rule edge reaches vertex {v}")))?;
        tree.push(e);
    }
    tree.sort_unstable();
    Ok(tree)
}

/// Acyclic and spanning on the vertex set.
pub fn verify_tree(x: &QuotientComplex, tree: &[usize]) -> Result<(), ComplexError> {
    let nv = x.vertices.len();
    if tree.len() + 1 != nv {
        return Err(ComplexError::NotATree(format!("{} edges for {nv} vertices", tree.len())));
    }
    let mut parent: Vec<usize> = (0..nv).collect();
    fn root(p: &mut [usize], mut a: usize) -> usize {
        while p[a] != a {
            p[a] = p[p[a]];
            a = p[a];
        }
        a
    }
    for &e in tree {
        let edge = x.edges.get(e).ok_or_else(|| ComplexError::NotATree(format!("unknown edge {e}")))?;
        let (a, b) = (root(&mut parent, edge.src), root(&mut parent, edge.dst));
        if a == b {
            return Err(ComplexError::NotATree(format!("edge {e} closes a cycle")));
        }
        parent[a] = b;
    }
    Ok(())
}
