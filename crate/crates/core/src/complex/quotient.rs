//! Assemble vertices, edges and triangles from enumerated families.

use super::enumerate::{Enumerator, Level};
use super::g1::VertexG1;
use super::{ComplexError, Edge, QuotientComplex, Vertex};
use crate::diagram::{cut_subfamily, orbit_key, CutDiagram};
use crate::surface::Surface;
use std::collections::BTreeSet;

/// Orbit id of the subfamily `keep` of `d`, renumbered in order.
pub fn face(d: &CutDiagram, keep: &[u32], level: &Level) -> Result<usize, ComplexError> {
    let sub = cut_subfamily(d, &keep.iter().copied().collect::<BTreeSet<_>>())?.reindexed();
    level
        .lookup(&orbit_key(&sub)?)
        .ok_or_else(|| ComplexError::Malformed(format!("face {keep:?} matches no enumerated orbit")))
}

pub fn build_quotient_complex(g: u32, n: u32, max_candidates: u64) -> Result<QuotientComplex, ComplexError> {
    let target = Surface::non_orientable(g, n)?;
    let mut e = Enumerator::new(target, max_candidates)?;
    let levels = e.levels(3)?;
    from_levels(target, &levels)
}

pub fn from_levels(target: Surface, levels: &[Level]) -> Result<QuotientComplex, ComplexError> {
    let [l1, l2, l3] = levels else {
        return Err(ComplexError::Malformed("three levels are needed".into()));
    };
    let vertices = l1
        .reps
        .iter()
        .enumerate()
        .map(|(id, d)| Vertex {
            id,
            g1: if target.genus == 1 { VertexG1::from_diagram(d).ok() } else { None },
            rep: Some(d.clone()),
        })
        .collect();
    let mut edges = Vec::with_capacity(l2.reps.len());
    for (id, d) in l2.reps.iter().enumerate() {
        let src = face(d, &[1], l1)?;
        let dst = face(d, &[2], l1)?;
        let swapped = d.relabel_curves(&|i| 3 - i);
        let reverse = l2.lookup(&orbit_key(&swapped)?);
        edges.push(Edge { id, src, dst, rep: Some(d.clone()), reverse });
    }
    let mut triangles = Vec::with_capacity(l3.reps.len());
    for d in &l3.reps {
        triangles.push([face(d, &[1, 2], l2)?, face(d, &[2, 3], l2)?, face(d, &[1, 3], l2)?]);
    }
    let x = QuotientComplex { target, vertices, edges, triangles };
    x.check()?;
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::DEFAULT_MAX_CANDIDATES;
    use crate::diagram::orbit_equal;

    #[test]
    fn genus_two_one_hole() {
        let x = build_quotient_complex(2, 1, DEFAULT_MAX_CANDIDATES).unwrap();
        assert_eq!(x.vertices.len(), 2);
        for e in &x.edges {
            assert!(e.src < 2 && e.dst < 2);
            assert!(e.reverse.is_some());
        }
    }

    #[test]
    fn genus_one_no_one_sided_pairs() {
        let x = build_quotient_complex(1, 3, DEFAULT_MAX_CANDIDATES).unwrap();
        assert_eq!(x.vertices.len(), 10);
        let one_sided = |v: usize| matches!(x.vertices[v].g1, Some(VertexG1::OneSided { .. }));
        assert!(x.edges.iter().all(|e| !(one_sided(e.src) && one_sided(e.dst))));
    }

    #[test]
    fn face_maps_are_sound() {
        let x = build_quotient_complex(1, 4, DEFAULT_MAX_CANDIDATES).unwrap();
        for e in &x.edges {
            let d = e.rep.as_ref().unwrap();
            for (keep, v) in [(1u32, e.src), (2, e.dst)] {
                let sub = cut_subfamily(d, &[keep].into()).unwrap().reindexed();
                let rep = x.vertices[v].rep.as_ref().unwrap();
                assert!(orbit_equal(&sub, rep, true).unwrap().equivalent);
            }
        }
        assert!(!x.triangles.is_empty());
    }
}
