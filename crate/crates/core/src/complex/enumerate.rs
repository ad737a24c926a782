//! Orbits of ordered curve families, built one curve at a time.
//!
//! Level `r` is obtained from the representatives of level `r - 1` by cutting
//! one component of the cut surface along a new curve in every possible way.
//! Candidates are filtered by the genericity rules and merged by orbit key.

use super::ComplexError;
use crate::diagram::orbit::orbit_key_with;
use crate::diagram::{canonical_form, validate_generic, Component, CurveGluing, CutDiagram, OrbitKey, SlotId};
use crate::surface::{classify_from_chi, Surface};
use std::collections::{BTreeMap, HashMap};

pub const DEFAULT_MAX_CANDIDATES: u64 = 1_000_000;

/// Representatives of one level, with their orbit keys.
#[derive(Debug, Clone, Default)]
pub struct Level {
    pub reps: Vec<CutDiagram>,
    pub index: HashMap<OrbitKey, usize>,
}

impl Level {
    pub fn lookup(&self, key: &OrbitKey) -> Option<usize> {
        self.index.get(key).copied()
    }
}

#[derive(Debug, Clone)]
pub struct Enumerator {
    pub target: Surface,
    pub max_candidates: u64,
    pub candidates: u64,
}

/// A piece produced by a split: type, old slots with signs, new slot.
struct Piece {
    orientable: bool,
    genus: u32,
    slots: Vec<(SlotId, i8)>,
}

fn sign_patterns(slots: &[SlotId]) -> Vec<Vec<(SlotId, i8)>> {
    (0u32..1 << slots.len())
        .map(|m| slots.iter().enumerate().map(|(i, &s)| (s, if m >> i & 1 == 1 { -1 } else { 1 })).collect())
        .collect()
}

fn piece_type(orientable: bool, chi: i64, boundary: usize) -> Option<u32> {
    classify_from_chi(orientable, chi, boundary as u32).ok().map(|s| s.genus)
}

impl Enumerator {
    pub fn new(target: Surface, max_candidates: u64) -> Result<Self, ComplexError> {
        if target.orientable || target.euler() >= 0 {
            return Err(ComplexError::NotApplicable(format!(
                "{target} is not non-orientable with negative euler characteristic"
            )));
        }
        Ok(Enumerator { target, max_candidates, candidates: 0 })
    }

    /// Levels `1..=r`; `levels[k]` holds the families of `k + 1` curves.
    pub fn levels(&mut self, r: usize) -> Result<Vec<Level>, ComplexError> {
        let mut out: Vec<Level> = Vec::new();
        let mut prev = vec![CutDiagram::uncut(self.target)];
        for _ in 0..r {
            let level = self.extend(&prev)?;
            prev = level.reps.clone();
            out.push(level);
        }
        Ok(out)
    }

    fn extend(&mut self, prev: &[CutDiagram]) -> Result<Level, ComplexError> {
        let mut found: Vec<(Vec<u8>, CutDiagram, OrbitKey)> = Vec::new();
        let mut seen: HashMap<OrbitKey, ()> = HashMap::new();
        for d in prev {
            let index = d.curves.len() as u32 + 1;
            for ci in 0..d.components.len() {
                for cand in self.splits(d, ci, index)? {
                    if !validate_generic(&cand)?.is_ok() {
                        continue;
                    }
                    let t = cand.slot_table()?;
                    let key = orbit_key_with(&cand, &t);
                    if seen.insert(key.clone(), ()).is_none() {
                        let cand = cand.normalized();
                        found.push((canonical_form(&cand)?, cand, key));
                    }
                }
            }
        }
        found.sort_by(|a, b| a.0.cmp(&b.0));
        let mut level = Level::default();
        for (i, (_, d, key)) in found.into_iter().enumerate() {
            level.index.insert(key, i);
            level.reps.push(d);
        }
        Ok(level)
    }

    fn count(&mut self, k: usize) -> Result<(), ComplexError> {
        self.candidates += k as u64;
        if self.candidates > self.max_candidates {
            return Err(ComplexError::ResourceLimit { cap: self.max_candidates });
        }
        Ok(())
    }

    /// Every way of cutting component `ci` of `d` along a new curve `index`.
    fn splits(&mut self, d: &CutDiagram, ci: usize, index: u32) -> Result<Vec<CutDiagram>, ComplexError> {
        let n = &d.components[ci];
        let chi = n.euler();
        let old = n.slots.clone();
        let inherited: Vec<(SlotId, i8)> = old.iter().map(|&s| (s, n.sign(s))).collect();
        let s1 = d.next_slot();
        let s2 = s1 + 1;
        let mut out = Vec::new();

        // two-sided, non-separating
        let b = old.len() + 2;
        if n.orientable {
            if n.genus >= 1 {
                let mut slots = inherited.clone();
                slots.extend([(s1, 1), (s2, -1)]);
                let p = Piece { orientable: true, genus: n.genus - 1, slots };
                out.push(replace(d, ci, vec![p], CurveGluing::two_sided(index, s1, s2)));
            }
        } else {
            if let Some(h) = piece_type(true, chi, b) {
                for mut slots in sign_patterns(&old) {
                    slots.extend([(s1, 1), (s2, 1)]);
                    let p = Piece { orientable: true, genus: h, slots };
                    out.push(replace(d, ci, vec![p], CurveGluing::two_sided(index, s1, s2)));
                }
            }
            if let Some(h) = piece_type(false, chi, b) {
                let slots = old.iter().map(|&s| (s, 1)).chain([(s1, 1), (s2, 1)]).collect();
                let p = Piece { orientable: false, genus: h, slots };
                out.push(replace(d, ci, vec![p], CurveGluing::two_sided(index, s1, s2)));
            }
        }

        // one-sided
        if !n.orientable {
            let b = old.len() + 1;
            if let Some(h) = piece_type(true, chi, b) {
                for mut slots in sign_patterns(&old) {
                    slots.push((s1, 1));
                    let p = Piece { orientable: true, genus: h, slots };
                    out.push(replace(d, ci, vec![p], CurveGluing::one_sided(index, s1)));
                }
            }
            if let Some(h) = piece_type(false, chi, b) {
                let slots = old.iter().map(|&s| (s, 1)).chain([(s1, 1)]).collect();
                let p = Piece { orientable: false, genus: h, slots };
                out.push(replace(d, ci, vec![p], CurveGluing::one_sided(index, s1)));
            }
        }

        // separating: the first part always holds the smallest old slot
        let free = old.len().saturating_sub(1);
        for mask in 0u32..1 << free {
            let mut part = [Vec::new(), Vec::new()];
            if let Some(&first) = old.first() {
                part[0].push(first);
            }
            for (i, &s) in old.iter().skip(1).enumerate() {
                part[(mask >> i & 1) as usize].push(s);
            }
            for chi1 in (chi + 1)..=-1 {
                let chi2 = chi - chi1;
                let (b1, b2) = (part[0].len() + 1, part[1].len() + 1);
                let kinds: &[(bool, bool)] =
                    if n.orientable { &[(true, true)] } else { &[(true, false), (false, true), (false, false)] };
                for &(o1, o2) in kinds {
                    let (Some(h1), Some(h2)) = (piece_type(o1, chi1, b1), piece_type(o2, chi2, b2)) else {
                        continue;
                    };
                    let sides = |o: bool, slots: &[SlotId], new: SlotId, new_sign: i8| -> Vec<Vec<(SlotId, i8)>> {
                        let mut v = if !o {
                            vec![slots.iter().map(|&s| (s, 1)).collect::<Vec<_>>()]
                        } else if n.orientable {
                            vec![slots.iter().map(|&s| (s, n.sign(s))).collect()]
                        } else {
                            sign_patterns(slots)
                        };
                        for p in &mut v {
                            p.push((new, new_sign));
                        }
                        v
                    };
                    let new2 = if n.orientable { -1 } else { 1 };
                    for p1 in sides(o1, &part[0], s1, 1) {
                        for p2 in sides(o2, &part[1], s2, new2) {
                            let pieces = vec![
                                Piece { orientable: o1, genus: h1, slots: p1.clone() },
                                Piece { orientable: o2, genus: h2, slots: p2 },
                            ];
                            out.push(replace(d, ci, pieces, CurveGluing::two_sided(index, s1, s2)));
                        }
                    }
                }
            }
        }
        self.count(out.len())?;
        Ok(out)
    }
}

fn replace(d: &CutDiagram, ci: usize, pieces: Vec<Piece>, curve: CurveGluing) -> CutDiagram {
    let mut components: Vec<Component> = d.components.clone();
    components.remove(ci);
    for p in pieces {
        let orientation_class: Option<BTreeMap<SlotId, i8>> = p.orientable.then(|| p.slots.iter().copied().collect());
        let mut slots: Vec<SlotId> = p.slots.iter().map(|s| s.0).collect();
        slots.sort_unstable();
        components.push(Component { id: 0, orientable: p.orientable, genus: p.genus, slots, orientation_class });
    }
    for (i, c) in components.iter_mut().enumerate() {
        c.id = i as u32;
    }
    let mut curves = d.curves.clone();
    curves.push(curve);
    CutDiagram { target: d.target, components, exterior: d.exterior.clone(), curves }
}

/// One representative per orbit of ordered families of `r` curves.
pub fn enumerate_orbit_simplices(
    g: u32,
    n: u32,
    r: usize,
    max_candidates: u64,
) -> Result<Vec<CutDiagram>, ComplexError> {
    let target = Surface::non_orientable(g, n)?;
    let mut e = Enumerator::new(target, max_candidates)?;
    Ok(e.levels(r)?.pop().map(|l| l.reps).unwrap_or_default())
}
