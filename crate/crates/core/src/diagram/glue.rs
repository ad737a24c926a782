//! Regluing components along curves.

use super::{malformed, Component, CutDiagram, DiagramError, GluingKind, SlotId, SlotTable};
use crate::surface::classify_from_chi;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet, VecDeque};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurfaceInvariants {
    pub connected: bool,
    pub orientable: bool,
    /// Genus of the glued surface; 0 when disconnected.
    pub genus: u32,
    pub euler: i64,
    pub boundary_labels: BTreeSet<u32>,
}

/// A connected piece of the partially reglued surface.
#[derive(Debug, Clone)]
pub(crate) struct Cluster {
    pub chi: i64,
    pub orientable: bool,
    /// slots left open, ascending
    pub open: Vec<SlotId>,
    /// propagated signs of the open slots; meaningful only when orientable
    pub signs: BTreeMap<SlotId, i8>,
}

/// Glue along every curve for which `glued` holds.
pub(crate) fn clusters(d: &CutDiagram, t: &SlotTable, glued: &dyn Fn(u32) -> bool) -> Vec<Cluster> {
    let m = d.components.len();
    // (neighbour, sign product) per component
    let mut adj: Vec<Vec<(usize, i8)>> = vec![vec![]; m];
    let mut twisted = vec![false; m];
    let mut closed: BTreeSet<SlotId> = BTreeSet::new();
    for c in &d.curves {
        if !glued(c.index) {
            continue;
        }
        match c.kind {
            GluingKind::TwoSided { slot_a, slot_b } => {
                let (ca, cb) = (t.owner[&slot_a], t.owner[&slot_b]);
                let prod = d.components[ca].sign(slot_a) * d.components[cb].sign(slot_b);
                adj[ca].push((cb, prod));
                adj[cb].push((ca, prod));
                closed.insert(slot_a);
                closed.insert(slot_b);
            }
            GluingKind::OneSided { slot } => {
                twisted[t.owner[&slot]] = true;
                closed.insert(slot);
            }
        }
    }

    let mut flip: Vec<i8> = vec![0; m];
    let mut out = Vec::new();
    for start in 0..m {
        if flip[start] != 0 {
            continue;
        }
        flip[start] = 1;
        let mut comps = vec![];
        let mut orientable = true;
        let mut queue = VecDeque::from([start]);
        while let Some(a) = queue.pop_front() {
            comps.push(a);
            orientable &= d.components[a].orientable && !twisted[a];
            for &(b, prod) in &adj[a] {
                // compatible iff flip_a * sign_a == -flip_b * sign_b
                let want = -flip[a] * prod;
                if flip[b] == 0 {
                    flip[b] = want;
                    queue.push_back(b);
                } else if flip[b] != want {
                    orientable = false;
                }
            }
        }
        comps.sort_unstable();
        let chi = comps.iter().map(|&c| d.components[c].euler()).sum();
        let mut open = Vec::new();
        let mut signs = BTreeMap::new();
        for &c in &comps {
            let comp = &d.components[c];
            for &s in &comp.slots {
                if !closed.contains(&s) {
                    open.push(s);
                    signs.insert(s, flip[c] * comp.sign(s));
                }
            }
        }
        open.sort_unstable();
        if !orientable {
            signs.clear();
        }
        out.push(Cluster { chi, orientable, open, signs });
    }
    out
}

pub fn glue_invariants(d: &CutDiagram) -> Result<SurfaceInvariants, DiagramError> {
    let t = d.slot_table()?;
    let cl = clusters(d, &t, &|_| true);
    let connected = cl.len() == 1;
    let orientable = cl.iter().all(|c| c.orientable);
    let euler = cl.iter().map(|c| c.chi).sum();
    let genus = if connected { classify_from_chi(orientable, euler, d.exterior.len() as u32)?.genus } else { 0 };
    Ok(SurfaceInvariants { connected, orientable, genus, euler, boundary_labels: d.exterior.keys().copied().collect() })
}

/// The diagram of the subfamily `keep`: components joined along the other
/// curves are merged. Curve indices are kept as they are.
pub fn cut_subfamily(d: &CutDiagram, keep: &BTreeSet<u32>) -> Result<CutDiagram, DiagramError> {
    let t = d.slot_table()?;
    for i in keep {
        if d.curve(*i).is_none() {
            return malformed(format!("no curve {i} to keep"));
        }
    }
    cut_with_table(d, &t, keep)
}

pub(crate) fn cut_with_table(d: &CutDiagram, t: &SlotTable, keep: &BTreeSet<u32>) -> Result<CutDiagram, DiagramError> {
    let mut components = Vec::new();
    for (k, c) in clusters(d, t, &|i| !keep.contains(&i)).into_iter().enumerate() {
        let s = classify_from_chi(c.orientable, c.chi, c.open.len() as u32)?;
        let orientation_class = c.orientable.then(|| normalize_signs(&c.signs));
        components.push(Component {
            id: k as u32,
            orientable: s.orientable,
            genus: s.genus,
            slots: c.open,
            orientation_class,
        });
    }
    let mut curves: Vec<_> = d.curves.iter().filter(|c| keep.contains(&c.index)).copied().collect();
    curves.sort_by_key(|c| c.index);
    Ok(CutDiagram { target: d.target, components, exterior: d.exterior.clone(), curves })
}

/// Flip so that the smallest slot is positive.
pub(crate) fn normalize_signs(s: &BTreeMap<SlotId, i8>) -> BTreeMap<SlotId, i8> {
    let f = s.values().next().copied().unwrap_or(1);
    s.iter().map(|(&k, &v)| (k, v * f)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::CurveGluing;
    use crate::surface::Surface;

    fn comp(id: u32, orientable: bool, genus: u32, slots: &[(SlotId, i8)]) -> Component {
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

    #[test]
    fn pants() {
        let d = CutDiagram::uncut(Surface::orientable(0, 3));
        let inv = glue_invariants(&d).unwrap();
        assert!(inv.connected && inv.orientable);
        assert_eq!(inv.genus, 0);
        assert_eq!(inv.boundary_labels, [1, 2, 3].into());
    }

    #[test]
    fn separating_non_orientable_pieces() {
        let d = CutDiagram {
            target: closed(5),
            components: vec![comp(0, false, 2, &[(0, 1)]), comp(1, false, 3, &[(1, 1)])],
            exterior: BTreeMap::new(),
            curves: vec![CurveGluing::two_sided(1, 0, 1)],
        };
        let inv = glue_invariants(&d).unwrap();
        assert!(inv.connected && !inv.orientable);
        assert_eq!(inv.genus, 5);
    }

    #[test]
    fn annulus_self_gluing() {
        let mk = |sb: i8| CutDiagram {
            target: closed(2),
            components: vec![comp(0, true, 0, &[(0, 1), (1, sb)])],
            exterior: BTreeMap::new(),
            curves: vec![CurveGluing::two_sided(1, 0, 1)],
        };
        let klein = glue_invariants(&mk(1)).unwrap();
        assert!(!klein.orientable);
        assert_eq!(klein.genus, 2);
        let torus = glue_invariants(&mk(-1)).unwrap();
        assert!(torus.orientable);
        assert_eq!(torus.genus, 1);
    }

    #[test]
    fn disk_with_antipodal_gluing() {
        let d = CutDiagram {
            target: closed(1),
            components: vec![comp(0, true, 0, &[(0, 1)])],
            exterior: BTreeMap::new(),
            curves: vec![CurveGluing::one_sided(1, 0)],
        };
        let inv = glue_invariants(&d).unwrap();
        assert!(!inv.orientable);
        assert_eq!(inv.genus, 1);
    }

    #[test]
    fn subfamilies() {
        // two pants glued along two curves give a torus with two holes
        let d = CutDiagram {
            target: Surface::orientable(1, 2),
            components: vec![
                comp(0, true, 0, &[(0, 1), (1, 1), (2, 1)]),
                comp(1, true, 0, &[(3, -1), (4, -1), (5, 1)]),
            ],
            exterior: [(1, 2), (2, 5)].into(),
            curves: vec![CurveGluing::two_sided(1, 0, 3), CurveGluing::two_sided(2, 1, 4)],
        };
        let one = cut_subfamily(&d, &[1].into()).unwrap();
        assert_eq!(one.components.len(), 1);
        let c = &one.components[0];
        assert!(c.orientable);
        assert_eq!(c.genus, 0);
        assert_eq!(c.slots, vec![0, 2, 3, 5]);
        let none = cut_subfamily(&d, &BTreeSet::new()).unwrap();
        assert_eq!(none.components[0].surface(), Surface::orientable(1, 2));
        let all = cut_subfamily(&d, &[1, 2].into()).unwrap();
        assert_eq!(all.components.len(), 2);
        assert_eq!(glue_invariants(&all).unwrap(), glue_invariants(&d).unwrap());
    }
}
