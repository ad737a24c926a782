//! Genericity rules for cut diagrams.

use super::glue::glue_invariants;
use super::{CutDiagram, DiagramError, SlotRef};
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Violation {
    /// a curve bounds a disk
    Disk {
        component: u32,
    },
    /// a two-sided curve bounds a Moebius band, or a boundary curve cuts one off
    Mobius {
        component: u32,
        reason: String,
    },
    /// two curves are parallel, a curve is boundary parallel, or a two-sided
    /// curve bounds a Moebius band formed with a one-sided curve
    Annulus {
        component: u32,
        reason: String,
    },
    Disconnected {
        pieces: usize,
    },
    Target {
        reason: String,
    },
}

impl Violation {
    pub fn rule(&self) -> &'static str {
        match self {
            Violation::Disk { .. } => "R1",
            Violation::Mobius { .. } => "R2",
            Violation::Annulus { .. } => "R3",
            Violation::Disconnected { .. } => "R4",
            Violation::Target { .. } => "R5",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.rule();
        match self {
            Violation::Disk { component } => write!(f, "{r}: component {component} is a disk"),
            Violation::Mobius { component, reason } => {
                write!(f, "{r}: component {component} is a Moebius band ({reason})")
            }
            Violation::Annulus { component, reason } => {
                write!(f, "{r}: component {component} is an annulus ({reason})")
            }
            Violation::Disconnected { pieces } => write!(f, "{r}: glued surface has {pieces} pieces"),
            Violation::Target { reason } => write!(f, "{r}: {reason}"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Validation {
    pub violations: Vec<Violation>,
    pub warnings: Vec<String>,
}

impl Validation {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn validate_generic(d: &CutDiagram) -> Result<Validation, DiagramError> {
    let t = d.slot_table()?;
    let mut v = Validation::default();
    let multi = d.components.len() > 1;
    for c in &d.components {
        let refs: Vec<SlotRef> = c.slots.iter().map(|s| t.attach[s]).collect();
        match (c.orientable, c.genus, refs.as_slice()) {
            (true, 0, [_]) => v.violations.push(Violation::Disk { component: c.id }),
            (false, 1, [r]) => match r {
                SlotRef::Side(..) => v.violations.push(Violation::Mobius {
                    component: c.id,
                    reason: "two-sided curve bounds a Moebius band".into(),
                }),
                SlotRef::Ext(_) if multi => v
                    .violations
                    .push(Violation::Mobius { component: c.id, reason: "boundary curve on a separate piece".into() }),
                SlotRef::One(i) => {
                    v.warnings.push(format!("component {} is a Moebius band attached to one-sided curve {i}", c.id))
                }
                SlotRef::Ext(_) => {}
            },
            (true, 0, [a, b]) => {
                let reason = match (a, b) {
                    (SlotRef::Side(i, _), SlotRef::Side(j, _)) if i != j => Some("parallel curves"),
                    (SlotRef::Side(..), SlotRef::Ext(_)) | (SlotRef::Ext(_), SlotRef::Side(..)) => {
                        Some("boundary parallel curve")
                    }
                    (SlotRef::Side(..), SlotRef::One(_)) | (SlotRef::One(_), SlotRef::Side(..)) => {
                        Some("two-sided curve bounds a Moebius band")
                    }
                    _ => None,
                };
                if let Some(r) = reason {
                    v.violations.push(Violation::Annulus { component: c.id, reason: r.into() });
                }
            }
            _ => {}
        }
    }

    let inv = glue_invariants(d)?;
    if !inv.connected {
        let pieces = super::glue::clusters(d, &t, &|_| true).len();
        v.violations.push(Violation::Disconnected { pieces });
    }
    let target = d.target;
    if target.orientable || target.euler() >= 0 {
        v.violations.push(Violation::Target {
            reason: format!("target {target} must be non-orientable with negative euler characteristic"),
        });
    }
    let labels: Vec<u32> = (1..=target.boundary).collect();
    if inv.boundary_labels.iter().copied().collect::<Vec<_>>() != labels {
        v.violations.push(Violation::Target { reason: format!("boundary labels must be c1..c{}", target.boundary) });
    }
    if inv.connected && (inv.orientable != target.orientable || inv.genus != target.genus) {
        let kind = if inv.orientable { "orientable" } else { "non-orientable" };
        v.violations.push(Violation::Target {
            reason: format!("glued surface is {kind} of genus {}, not {target}", inv.genus),
        });
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{Component, CurveGluing};
    use crate::surface::Surface;
    use std::collections::BTreeMap;

    fn comp(id: u32, orientable: bool, genus: u32, slots: &[u32]) -> Component {
        Component {
            id,
            orientable,
            genus,
            slots: slots.to_vec(),
            orientation_class: orientable.then(|| slots.iter().map(|&s| (s, 1)).collect()),
        }
    }

    fn rules(d: &CutDiagram) -> Vec<&'static str> {
        validate_generic(d).unwrap().violations.iter().map(Violation::rule).collect()
    }

    #[test]
    fn orientable_target_rejected() {
        let d = CutDiagram::uncut(Surface::orientable(0, 3));
        assert_eq!(rules(&d), vec!["R5"]);
    }

    #[test]
    fn b1_curve_on_closed_genus_four() {
        let d = CutDiagram {
            target: Surface::non_orientable(4, 0).unwrap(),
            components: vec![comp(0, true, 1, &[0]), comp(1, false, 2, &[1])],
            exterior: BTreeMap::new(),
            curves: vec![CurveGluing::two_sided(1, 0, 1)],
        };
        assert!(validate_generic(&d).unwrap().is_ok());
    }

    #[test]
    fn mobius_on_pants() {
        let d = CutDiagram {
            target: Surface::non_orientable(1, 2).unwrap(),
            components: vec![comp(0, false, 1, &[0]), comp(1, true, 0, &[1, 2, 3])],
            exterior: [(1, 2), (2, 3)].into(),
            curves: vec![CurveGluing::two_sided(1, 0, 1)],
        };
        assert_eq!(rules(&d), vec!["R2"]);
    }

    #[test]
    fn annuli() {
        // boundary parallel curve on F_1^2
        let d = CutDiagram {
            target: Surface::non_orientable(1, 2).unwrap(),
            components: vec![comp(0, true, 0, &[0, 1]), comp(1, false, 1, &[2, 3])],
            exterior: [(1, 0), (2, 3)].into(),
            curves: vec![CurveGluing::two_sided(1, 1, 2)],
        };
        assert_eq!(rules(&d), vec!["R3"]);
        // a two-sided curve next to a one-sided one bounds a Moebius band
        let e = CutDiagram {
            target: Surface::non_orientable(1, 2).unwrap(),
            components: vec![comp(0, true, 0, &[0, 1]), comp(1, true, 0, &[2, 3, 4])],
            exterior: [(1, 3), (2, 4)].into(),
            curves: vec![CurveGluing::one_sided(1, 0), CurveGluing::two_sided(2, 1, 2)],
        };
        assert_eq!(rules(&e), vec!["R3"]);
    }

    #[test]
    fn disk_and_disconnection() {
        let d = CutDiagram {
            target: Surface::non_orientable(3, 0).unwrap(),
            components: vec![comp(0, true, 0, &[0]), comp(1, false, 3, &[1])],
            exterior: BTreeMap::new(),
            curves: vec![CurveGluing::two_sided(1, 0, 1)],
        };
        assert_eq!(rules(&d), vec!["R1"]);
        let e = CutDiagram {
            target: Surface::non_orientable(3, 0).unwrap(),
            components: vec![comp(0, false, 1, &[0]), comp(1, false, 2, &[1])],
            exterior: BTreeMap::new(),
            curves: vec![CurveGluing::one_sided(1, 0), CurveGluing::one_sided(2, 1)],
        };
        let v = validate_generic(&e).unwrap();
        assert_eq!(v.violations[0].rule(), "R4");
        assert_eq!(v.warnings.len(), 1);
    }
}
