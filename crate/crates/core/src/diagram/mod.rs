//! Cut diagrams: a surface cut open along a family of disjoint curves,
//! recorded as components with boundary slots and the gluing data needed to
//! rebuild the surface.
//!
//! Slots on orientable components carry a sign (the induced boundary
//! orientation, defined up to a global flip per component). A two-sided
//! gluing whose endpoint signs are opposite preserves orientation.

mod glue;
pub(crate) mod orbit;
mod validate;

pub use glue::{cut_subfamily, glue_invariants, SurfaceInvariants};
pub use orbit::{canonical_form, orbit_equal, orbit_key, LimitKind, OrbitKey, OrbitMatch};
pub use validate::{validate_generic, Validation, Violation};

use crate::surface::{Surface, SurfaceError};
use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

pub type SlotId = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("malformed diagram: {0}")]
    Malformed(String),
    #[error("diagrams have different targets or curve counts")]
    MismatchedTarget,
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error("invalid diagram json: {0}")]
    Json(String),
}

fn malformed<T>(msg: impl Into<String>) -> Result<T, DiagramError> {
    Err(DiagramError::Malformed(msg.into()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub id: u32,
    pub orientable: bool,
    pub genus: u32,
    pub slots: Vec<SlotId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orientation_class: Option<BTreeMap<SlotId, i8>>,
}

impl Component {
    pub fn surface(&self) -> Surface {
        Surface { orientable: self.orientable, genus: self.genus, boundary: self.slots.len() as u32 }
    }

    pub fn euler(&self) -> i64 {
        self.surface().euler()
    }

    pub fn sign(&self, s: SlotId) -> i8 {
        self.orientation_class.as_ref().and_then(|c| c.get(&s).copied()).unwrap_or(1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GluingKind {
    TwoSided {
        slot_a: SlotId,
        slot_b: SlotId,
    },
    /// The slot circle is the double of the curve; it is glued to itself antipodally.
    OneSided {
        slot: SlotId,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurveGluing {
    pub index: u32,
    pub kind: GluingKind,
}

impl CurveGluing {
    pub fn two_sided(index: u32, slot_a: SlotId, slot_b: SlotId) -> Self {
        CurveGluing { index, kind: GluingKind::TwoSided { slot_a, slot_b } }
    }

    pub fn one_sided(index: u32, slot: SlotId) -> Self {
        CurveGluing { index, kind: GluingKind::OneSided { slot } }
    }

    pub fn is_one_sided(&self) -> bool {
        matches!(self.kind, GluingKind::OneSided { .. })
    }

    pub fn slots(&self) -> Vec<SlotId> {
        match self.kind {
            GluingKind::TwoSided { slot_a, slot_b } => vec![slot_a, slot_b],
            GluingKind::OneSided { slot } => vec![slot],
        }
    }
}

impl Serialize for CurveGluing {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(3))?;
        m.serialize_entry("index", &self.index)?;
        match self.kind {
            GluingKind::TwoSided { slot_a, slot_b } => {
                m.serialize_entry("kind", "two_sided")?;
                m.serialize_entry("slots", &[slot_a, slot_b])?;
            }
            GluingKind::OneSided { slot } => {
                m.serialize_entry("kind", "one_sided")?;
                m.serialize_entry("slot", &slot)?;
            }
        }
        m.end()
    }
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum CurveRepr {
    TwoSided { index: u32, slots: [SlotId; 2] },
    OneSided { index: u32, slot: SlotId },
}

impl<'de> Deserialize<'de> for CurveGluing {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(match CurveRepr::deserialize(d)? {
            CurveRepr::TwoSided { index, slots } => CurveGluing::two_sided(index, slots[0], slots[1]),
            CurveRepr::OneSided { index, slot } => CurveGluing::one_sided(index, slot),
        })
    }
}

mod exterior_labels {
    use super::*;

    pub fn serialize<S: Serializer>(m: &BTreeMap<u32, SlotId>, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(m.len()))?;
        for (k, v) in m {
            map.serialize_entry(&format!("c{k}"), v)?;
        }
        map.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<u32, SlotId>, D::Error> {
        let raw: BTreeMap<String, SlotId> = BTreeMap::deserialize(d)?;
        raw.into_iter()
            .map(|(k, v)| {
                let label = k
                    .strip_prefix('c')
                    .and_then(|x| x.parse::<u32>().ok())
                    .filter(|&x| x >= 1)
                    .ok_or_else(|| D::Error::custom(format!("bad boundary label `{k}`")))?;
                Ok((label, v))
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutDiagram {
    pub target: Surface,
    pub components: Vec<Component>,
    /// boundary label `i` (written `ci`) to slot
    #[serde(with = "exterior_labels")]
    pub exterior: BTreeMap<u32, SlotId>,
    pub curves: Vec<CurveGluing>,
}

/// What is attached to a slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SlotRef {
    Ext(u32),
    Side(u32, u8),
    One(u32),
}

/// Slot ownership and attachment, checked for consistency.
#[derive(Debug, Clone)]
pub struct SlotTable {
    pub owner: BTreeMap<SlotId, usize>,
    pub attach: BTreeMap<SlotId, SlotRef>,
}

impl CutDiagram {
    /// The target itself with no curves: one component carrying every boundary.
    pub fn uncut(target: Surface) -> Self {
        let slots: Vec<SlotId> = (0..target.boundary).collect();
        CutDiagram {
            target,
            components: vec![Component {
                id: 0,
                orientable: target.orientable,
                genus: target.genus,
                orientation_class: target.orientable.then(|| slots.iter().map(|&s| (s, 1)).collect()),
                slots: slots.clone(),
            }],
            exterior: slots.iter().map(|&s| (s + 1, s)).collect(),
            curves: vec![],
        }
    }

    pub fn from_json_str(s: &str) -> Result<Self, DiagramError> {
        let d: CutDiagram = serde_json::from_str(s).map_err(|e| DiagramError::Json(e.to_string()))?;
        d.slot_table()?;
        Ok(d)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("diagram serialises")
    }

    pub fn curve(&self, index: u32) -> Option<&CurveGluing> {
        self.curves.iter().find(|c| c.index == index)
    }

    pub fn curve_indices(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.curves.iter().map(|c| c.index).collect();
        v.sort_unstable();
        v
    }

    pub fn next_slot(&self) -> SlotId {
        self.components.iter().flat_map(|c| c.slots.iter()).max().map_or(0, |m| m + 1)
    }

    pub fn slot_table(&self) -> Result<SlotTable, DiagramError> {
        let mut owner = BTreeMap::new();
        for (i, c) in self.components.iter().enumerate() {
            for &s in &c.slots {
                if owner.insert(s, i).is_some() {
                    return malformed(format!("slot {s} appears twice"));
                }
            }
            match (&c.orientation_class, c.orientable) {
                (Some(_), false) => {
                    return malformed(format!("non-orientable component {} has orientation data", c.id))
                }
                (Some(cls), true) => {
                    let keys: BTreeSet<SlotId> = cls.keys().copied().collect();
                    let slots: BTreeSet<SlotId> = c.slots.iter().copied().collect();
                    if keys != slots {
                        return malformed(format!("orientation data of component {} does not match its slots", c.id));
                    }
                    if cls.values().any(|&x| x != 1 && x != -1) {
                        return malformed(format!("component {} has a sign other than ±1", c.id));
                    }
                }
                _ => {}
            }
            if !c.orientable && c.genus == 0 {
                return malformed(format!("non-orientable component {} has genus 0", c.id));
            }
        }
        let mut attach = BTreeMap::new();
        let mut put = |s: SlotId, r: SlotRef| -> Result<(), DiagramError> {
            if !owner.contains_key(&s) {
                return malformed(format!("slot {s} is not on any component"));
            }
            if attach.insert(s, r).is_some() {
                return malformed(format!("slot {s} is used twice"));
            }
            Ok(())
        };
        for (&l, &s) in &self.exterior {
            put(s, SlotRef::Ext(l))?;
        }
        let mut seen = BTreeSet::new();
        for c in &self.curves {
            if !seen.insert(c.index) {
                return malformed(format!("curve index {} repeats", c.index));
            }
            match c.kind {
                GluingKind::TwoSided { slot_a, slot_b } => {
                    if slot_a == slot_b {
                        return malformed(format!("two-sided curve {} uses one slot twice", c.index));
                    }
                    put(slot_a, SlotRef::Side(c.index, 0))?;
                    put(slot_b, SlotRef::Side(c.index, 1))?;
                }
                GluingKind::OneSided { slot } => put(slot, SlotRef::One(c.index))?,
            }
        }
        if let Some(s) = owner.keys().find(|s| !attach.contains_key(s)) {
            return malformed(format!("slot {s} is unused"));
        }
        Ok(SlotTable { owner, attach })
    }

    /// Renumber curves `1..=r` in increasing index order.
    pub fn reindexed(&self) -> CutDiagram {
        let order = self.curve_indices();
        self.relabel_curves(&|i| order.iter().position(|&x| x == i).unwrap() as u32 + 1)
    }

    pub fn relabel_curves(&self, f: &dyn Fn(u32) -> u32) -> CutDiagram {
        let mut d = self.clone();
        for c in &mut d.curves {
            c.index = f(c.index);
        }
        d.curves.sort_by_key(|c| c.index);
        d
    }

    /// Components, curves and exterior slot ids renumbered in a canonical order.
    pub fn normalized(&self) -> CutDiagram {
        let mut d = self.clone();
        d.curves.sort_by_key(|c| c.index);
        for (i, c) in d.components.iter_mut().enumerate() {
            c.id = i as u32;
        }
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_roundtrip_and_format() {
        let d = CutDiagram {
            target: Surface::non_orientable(4, 0).unwrap(),
            components: vec![
                Component {
                    id: 0,
                    orientable: true,
                    genus: 1,
                    slots: vec![0],
                    orientation_class: Some([(0, 1)].into()),
                },
                Component { id: 1, orientable: false, genus: 2, slots: vec![1], orientation_class: None },
            ],
            exterior: BTreeMap::new(),
            curves: vec![CurveGluing::two_sided(1, 0, 1)],
        };
        let s = d.to_json_string();
        assert_eq!(
            s,
            r#"{"target":{"orientable":false,"genus":4,"boundary":0},"components":[{"id":0,"orientable":true,"genus":1,"slots":[0],"orientation_class":{"0":1}},{"id":1,"orientable":false,"genus":2,"slots":[1]}],"exterior":{},"curves":[{"index":1,"kind":"two_sided","slots":[0,1]}]}"#
        );
        assert_eq!(CutDiagram::from_json_str(&s).unwrap(), d);
    }

    #[test]
    fn slot_usage_checked() {
        let mut d = CutDiagram::uncut(Surface::non_orientable(1, 3).unwrap());
        assert!(d.slot_table().is_ok());
        d.exterior.remove(&2);
        assert!(matches!(d.slot_table(), Err(DiagramError::Malformed(_))));
        let mut e = CutDiagram::uncut(Surface::non_orientable(1, 3).unwrap());
        e.curves.push(CurveGluing::one_sided(1, 0));
        assert!(e.slot_table().is_err());
    }

    #[test]
    fn exterior_labels_parse() {
        let s = r#"{"target":{"orientable":false,"genus":1,"boundary":2},"components":[{"id":0,"orientable":false,"genus":1,"slots":[5,7]}],"exterior":{"c1":7,"c2":5},"curves":[]}"#;
        let d = CutDiagram::from_json_str(s).unwrap();
        assert_eq!(d.exterior[&1], 7);
        assert!(CutDiagram::from_json_str(&s.replace("c2", "x2")).is_err());
    }
}
