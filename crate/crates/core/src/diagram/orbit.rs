//! Orbit equivalence of curve families.
//!
//! Two ordered families lie in one orbit exactly when, for every subfamily,
//! the components of the cut surfaces match in type, exterior boundary
//! incidence, orientation classes of exterior boundaries, and the kind of
//! each limit curve. `orbit_key` collects that data for all subfamilies.

use super::glue::{clusters, Cluster};
use super::{CutDiagram, DiagramError, GluingKind, SlotRef, SlotTable};
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum LimitKind {
    Separating,
    NonSeparating,
    OneSided,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComponentSignature {
    pub orientable: bool,
    pub genus: u32,
    pub exterior: Vec<u32>,
    /// exterior labels oriented like the smallest one; empty if non-orientable
    pub same_as_first: Vec<u32>,
    /// limit curves `(index, kind)` with multiplicity
    pub limits: Vec<(u32, LimitKind)>,
}

/// Per subfamily (bitmask over curves in index order), the sorted component signatures.
pub type OrbitKey = Vec<Vec<ComponentSignature>>;

fn signature(d: &CutDiagram, t: &SlotTable, c: &Cluster) -> ComponentSignature {
    let mut exterior = Vec::new();
    let mut same_as_first = Vec::new();
    let mut limits = Vec::new();
    let mut first_sign = None;
    for s in &c.open {
        match t.attach[s] {
            SlotRef::Ext(l) => exterior.push((l, c.signs.get(s).copied().unwrap_or(1))),
            SlotRef::Side(i, side) => {
                let other = match d.curve(i).expect("curve exists").kind {
                    GluingKind::TwoSided { slot_a, slot_b } => {
                        if side == 0 {
                            slot_b
                        } else {
                            slot_a
                        }
                    }
                    GluingKind::OneSided { .. } => unreachable!(),
                };
                let kind =
                    if c.open.binary_search(&other).is_ok() { LimitKind::NonSeparating } else { LimitKind::Separating };
                limits.push((i, kind));
            }
            SlotRef::One(i) => limits.push((i, LimitKind::OneSided)),
        }
    }
    exterior.sort_unstable();
    if c.orientable {
        for &(l, s) in &exterior {
            let f = *first_sign.get_or_insert(s);
            if s == f {
                same_as_first.push(l);
            }
        }
    }
    limits.sort_unstable();
    let s = crate::surface::classify_from_chi(c.orientable, c.chi, c.open.len() as u32)
        .expect("cluster of a valid diagram is a surface");
    ComponentSignature {
        orientable: c.orientable,
        genus: s.genus,
        exterior: exterior.into_iter().map(|e| e.0).collect(),
        same_as_first,
        limits,
    }
}

pub fn orbit_key(d: &CutDiagram) -> Result<OrbitKey, DiagramError> {
    let t = d.slot_table()?;
    Ok(orbit_key_with(d, &t))
}

pub(crate) fn orbit_key_with(d: &CutDiagram, t: &SlotTable) -> OrbitKey {
    let idx = d.curve_indices();
    let r = idx.len();
    let mut key = Vec::with_capacity(1 << r);
    for mask in 0u32..(1 << r) {
        let keep = |i: u32| {
            let p = idx.binary_search(&i).expect("known curve");
            mask >> p & 1 == 1
        };
        let mut sigs: Vec<ComponentSignature> =
            clusters(d, t, &|i| !keep(i)).iter().map(|c| signature(d, t, c)).collect();
        sigs.sort();
        key.push(sigs);
    }
    key
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitMatch {
    pub equivalent: bool,
    /// `witness[k]` is the index in the second family matched with the
    /// `k`-th curve (by increasing index) of the first.
    pub witness: Option<Vec<u32>>,
}

pub fn orbit_equal(d1: &CutDiagram, d2: &CutDiagram, ordered: bool) -> Result<OrbitMatch, DiagramError> {
    if d1.target != d2.target || d1.curves.len() != d2.curves.len() {
        return Err(DiagramError::MismatchedTarget);
    }
    let a = d1.reindexed();
    let b = d2.reindexed();
    let ka = orbit_key(&a)?;
    let tb = b.slot_table()?;
    let idx2 = d2.curve_indices();
    let r = a.curves.len();
    let kinds_a = curve_kinds(&ka, r);
    let kinds_b = curve_kinds(&orbit_key_with(&b, &tb), r);
    for perm in permutations(r, ordered) {
        // curve perm[k] of b plays the role of curve k of a
        if (0..r).any(|k| kinds_a[k] != kinds_b[perm[k]]) {
            continue;
        }
        let inv: BTreeMap<u32, u32> = perm.iter().enumerate().map(|(k, &p)| (p as u32 + 1, k as u32 + 1)).collect();
        let bp = b.relabel_curves(&|i| inv[&i]);
        let tbp = bp.slot_table()?;
        if orbit_key_with(&bp, &tbp) == ka {
            let witness = perm.iter().map(|&p| idx2[p]).collect();
            return Ok(OrbitMatch { equivalent: true, witness: Some(witness) });
        }
    }
    Ok(OrbitMatch { equivalent: false, witness: None })
}

/// Limit kinds of each single curve cut alone; a cheap permutation filter.
fn curve_kinds(key: &OrbitKey, r: usize) -> Vec<Vec<LimitKind>> {
    (0..r)
        .map(|k| {
            let mut v: Vec<LimitKind> = key[1 << k].iter().flat_map(|s| s.limits.iter().map(|l| l.1)).collect();
            v.sort();
            v
        })
        .collect()
}

fn permutations(r: usize, identity_only: bool) -> Vec<Vec<usize>> {
    let id: Vec<usize> = (0..r).collect();
    if identity_only {
        return vec![id];
    }
    let mut out = vec![];
    let mut cur = id;
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (0..r.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..r).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
}

/// Encoding invariant under renaming slots and components, reordering, and
/// flipping the orientation of orientable components.
pub fn canonical_form(d: &CutDiagram) -> Result<Vec<u8>, DiagramError> {
    let t = d.slot_table()?;
    let two_sided: Vec<u32> = d.curves.iter().filter(|c| !c.is_one_sided()).map(|c| c.index).collect();
    let mut best: Option<String> = None;
    for swap in 0u32..(1 << two_sided.len()) {
        let swapped = |i: u32| {
            let p = two_sided.iter().position(|&x| x == i).unwrap();
            swap >> p & 1 == 1
        };
        let mut comps: Vec<String> = d
            .components
            .iter()
            .map(|c| {
                let enc = |flip: i8| {
                    let mut items: Vec<(SlotRef, i8)> = c
                        .slots
                        .iter()
                        .map(|s| {
                            let r = match t.attach[s] {
                                SlotRef::Side(i, side) if swapped(i) => SlotRef::Side(i, 1 - side),
                                r => r,
                            };
                            (r, if c.orientable { c.sign(*s) * flip } else { 0 })
                        })
                        .collect();
                    items.sort_unstable();
                    items
                };
                let items = if c.orientable { enc(1).min(enc(-1)) } else { enc(1) };
                let body: Vec<String> = items
                    .iter()
                    .map(|(r, s)| {
                        let r = match r {
                            SlotRef::Ext(l) => format!("c{l}"),
                            SlotRef::Side(i, side) => format!("a{i}.{side}"),
                            SlotRef::One(i) => format!("a{i}*"),
                        };
                        let s = match s {
                            1 => "+",
                            -1 => "-",
                            _ => "",
                        };
                        format!("{r}{s}")
                    })
                    .collect();
                format!("{}{}[{}]", if c.orientable { "S" } else { "N" }, c.genus, body.join(","))
            })
            .collect();
        comps.sort();
        let s = format!("{}|{}", d.target, comps.join("|"));
        if best.as_ref().is_none_or(|b| s < *b) {
            best = Some(s);
        }
    }
    Ok(best.unwrap_or_default().into_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{Component, CurveGluing};
    use crate::surface::Surface;

    fn comp(id: u32, orientable: bool, genus: u32, slots: &[(u32, i8)]) -> Component {
        Component {
            id,
            orientable,
            genus,
            slots: slots.iter().map(|s| s.0).collect(),
            orientation_class: orientable.then(|| slots.iter().copied().collect()),
        }
    }

    fn closed(g: u32) -> Surface {
        Surface::non_orientable(g, 0).unwrap()
    }

    fn d_l(g: u32, l: u32) -> CutDiagram {
        CutDiagram {
            target: closed(g),
            components: vec![comp(0, false, l, &[(0, 1)]), comp(1, false, g - l, &[(1, 1)])],
            exterior: BTreeMap::new(),
            curves: vec![CurveGluing::two_sided(1, 0, 1)],
        }
    }

    #[test]
    fn a1_versus_a2() {
        let a1 = CutDiagram {
            target: closed(4),
            components: vec![comp(0, false, 2, &[(0, 1), (1, 1)])],
            exterior: BTreeMap::new(),
            curves: vec![CurveGluing::two_sided(1, 0, 1)],
        };
        let a2 = CutDiagram {
            target: closed(4),
            components: vec![comp(0, false, 3, &[(0, 1)])],
            exterior: BTreeMap::new(),
            curves: vec![CurveGluing::one_sided(1, 0)],
        };
        assert!(!orbit_equal(&a1, &a2, false).unwrap().equivalent);
        let same = orbit_equal(&a1, &a1, true).unwrap();
        assert_eq!(same.witness, Some(vec![1]));
    }

    #[test]
    fn d2_versus_d3() {
        assert!(!orbit_equal(&d_l(6, 2), &d_l(6, 3), false).unwrap().equivalent);
        assert!(orbit_equal(&d_l(6, 2), &d_l(6, 4), false).unwrap().equivalent);
        assert!(orbit_equal(&d_l(6, 2), &d_l(5, 2), false).is_err());
    }

    fn two_curves(swap: bool) -> CutDiagram {
        // closed genus 5: one-sided curve inside the genus-3 side of a separating curve
        let (i, j) = if swap { (2, 1) } else { (1, 2) };
        CutDiagram {
            target: closed(5),
            components: vec![comp(0, false, 2, &[(0, 1)]), comp(1, false, 2, &[(1, 1), (2, 1)])],
            exterior: BTreeMap::new(),
            curves: vec![CurveGluing::two_sided(i, 0, 1), CurveGluing::one_sided(j, 2)],
        }
    }

    #[test]
    fn ordered_families() {
        let (a, b) = (two_curves(false), two_curves(true));
        let m = orbit_equal(&a, &b, false).unwrap();
        assert!(m.equivalent);
        assert_eq!(m.witness, Some(vec![2, 1]));
        assert!(!orbit_equal(&a, &b, true).unwrap().equivalent);
    }

    #[test]
    fn canonical_form_symmetries() {
        let a = two_curves(false);
        let mut rev = a.clone();
        rev.components.reverse();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&rev).unwrap());

        let b = CutDiagram {
            target: Surface::non_orientable(1, 3).unwrap(),
            components: vec![comp(0, true, 0, &[(0, 1), (1, 1), (2, -1), (3, 1)])],
            exterior: [(1, 1), (2, 2), (3, 3)].into(),
            curves: vec![CurveGluing::one_sided(1, 0)],
        };
        let mut flipped = b.clone();
        for v in flipped.components[0].orientation_class.as_mut().unwrap().values_mut() {
            *v = -*v;
        }
        assert_eq!(canonical_form(&b).unwrap(), canonical_form(&flipped).unwrap());
        let mut swapped = b.clone();
        swapped.exterior = [(1, 1), (2, 3), (3, 2)].into();
        assert_ne!(canonical_form(&b).unwrap(), canonical_form(&swapped).unwrap());
    }
}
