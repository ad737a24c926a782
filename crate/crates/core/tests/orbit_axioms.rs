//! Equivalence-relation axioms for `orbit_equal` on randomly relabelled diagrams.

use mcg_core::complex::{enumerate_orbit_simplices, DEFAULT_MAX_CANDIDATES};
use mcg_core::diagram::{canonical_form, orbit_equal, CutDiagram, GluingKind};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

/// Same diagram up to slot names, component order, orientation flips and side swaps.
fn scramble(d: &CutDiagram, rng: &mut ChaCha8Rng) -> CutDiagram {
    let top = d.next_slot() + 10;
    let mut names: Vec<u32> = (0..top).collect();
    names.shuffle(rng);
    let rn = |s: u32| names[s as usize];
    let mut out = d.clone();
    for c in &mut out.components {
        c.slots = c.slots.iter().map(|&s| rn(s)).collect();
        c.slots.sort_unstable();
        let flip: i8 = if rng.gen_bool(0.5) { -1 } else { 1 };
        c.orientation_class = c
            .orientation_class
            .as_ref()
            .map(|m| m.iter().map(|(&s, &v)| (rn(s), v * flip)).collect::<BTreeMap<_, _>>());
    }
    out.components.shuffle(rng);
    for (i, c) in out.components.iter_mut().enumerate() {
        c.id = i as u32;
    }
    out.exterior = out.exterior.iter().map(|(&l, &s)| (l, rn(s))).collect();
    for c in &mut out.curves {
        c.kind = match c.kind {
            GluingKind::TwoSided { slot_a, slot_b } if rng.gen_bool(0.5) => {
                GluingKind::TwoSided { slot_a: rn(slot_b), slot_b: rn(slot_a) }
            }
            GluingKind::TwoSided { slot_a, slot_b } => GluingKind::TwoSided { slot_a: rn(slot_a), slot_b: rn(slot_b) },
            GluingKind::OneSided { slot } => GluingKind::OneSided { slot: rn(slot) },
        };
    }
    out
}

#[test]
fn equivalence_axioms_on_random_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut reps = enumerate_orbit_simplices(2, 3, 2, DEFAULT_MAX_CANDIDATES).unwrap();
    reps.extend(enumerate_orbit_simplices(3, 1, 2, DEFAULT_MAX_CANDIDATES).unwrap());
    reps.truncate(12);
    let pick = |rng: &mut ChaCha8Rng| {
        let k = rng.gen_range(0..reps.len());
        (k, scramble(&reps[k], rng))
    };
    let eq = |a: &CutDiagram, b: &CutDiagram| orbit_equal(a, b, true).unwrap().equivalent;
    for _ in 0..200 {
        let (ka, a) = pick(&mut rng);
        let (kb, b) = pick(&mut rng);
        let (kc, c) = pick(&mut rng);
        assert!(eq(&a, &a));
        assert_eq!(eq(&a, &b), eq(&b, &a));
        if eq(&a, &b) && eq(&b, &c) {
            assert!(eq(&a, &c));
        }
        // the relabellings never leave an orbit, and distinct representatives never meet
        assert_eq!(eq(&a, &b), ka == kb);
        assert_eq!(eq(&b, &c), kb == kc);
        if ka == kb {
            assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        }
    }
}

#[test]
fn unordered_witness_maps_curves() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for d in enumerate_orbit_simplices(3, 2, 2, DEFAULT_MAX_CANDIDATES).unwrap().iter().take(40) {
        let e = scramble(&d.relabel_curves(&|i| 3 - i), &mut rng);
        let m = orbit_equal(d, &e, false).unwrap();
        assert!(m.equivalent);
        let w = m.witness.unwrap();
        let moved = d.relabel_curves(&|i| w[i as usize - 1]);
        assert!(orbit_equal(&moved, &e, true).unwrap().equivalent);
    }
}
