use mcg_core::complex::*;
use mcg_core::diagram::{cut_subfamily, orbit_equal};
use std::collections::BTreeSet;

#[test]
fn census_formula_agrees_with_enumeration() {
    for g in 1..=6u32 {
        for n in 0..=(6 - g) {
            let Ok(c) = vertex_orbit_census(g, n) else { continue };
            let e = enumerate_orbit_simplices(g, n, 1, DEFAULT_MAX_CANDIDATES).unwrap();
            assert_eq!(e.len() as u64, c.total, "F_{g}^{n}");
        }
    }
    for (g, n, total) in [(4, 0, 5), (5, 0, 5), (6, 0, 7), (1, 3, 10), (2, 1, 2), (1, 5, 116)] {
        assert_eq!(vertex_orbit_census(g, n).unwrap().total, total);
    }
}

#[test]
fn genus_one_models_agree() {
    let x = build_quotient_complex(1, 5, DEFAULT_MAX_CANDIDATES).unwrap();
    let s = g1_symbolic_complex(5).unwrap();
    let label = |c: &QuotientComplex, v: usize| c.vertices[v].g1.clone().unwrap();
    let vx: BTreeSet<_> = (0..x.vertices.len()).map(|v| label(&x, v)).collect();
    let vs: BTreeSet<_> = (0..s.vertices.len()).map(|v| label(&s, v)).collect();
    assert_eq!(vx.len(), 116);
    assert_eq!(vx, vs);
    let ex: BTreeSet<_> = x.edges.iter().map(|e| (label(&x, e.src), label(&x, e.dst))).collect();
    let es: BTreeSet<_> = s.edges.iter().map(|e| (label(&s, e.src), label(&s, e.dst))).collect();
    assert_eq!(ex.len(), x.edges.len(), "one edge per ordered pair");
    assert_eq!(ex, es);
    assert_eq!(x.triangles.len(), s.triangles.len());
}

#[test]
fn closure_covers_non_sporadic_complexes() {
    for (g, n) in [(1, 5), (2, 4), (3, 3)] {
        let x = build_quotient_complex(g, n, DEFAULT_MAX_CANDIDATES).unwrap();
        let t = build_maximal_tree(&x, g, n).unwrap();
        assert_eq!(t.len() + 1, x.vertices.len());
        let c = determinability_closure(&x, &t);
        assert_eq!(c.len(), x.edges.len(), "F_{g}^{n}");
        assert!(asymmetric_loops(&x).is_empty());
    }
}

#[test]
fn face_maps_of_triangles() {
    let x = build_quotient_complex(3, 3, DEFAULT_MAX_CANDIDATES).unwrap();
    let mut en = Enumerator::new(x.target, DEFAULT_MAX_CANDIDATES).unwrap();
    let tri = en.levels(3).unwrap().pop().unwrap();
    for (d, t) in tri.reps.iter().zip(&x.triangles).step_by(37) {
        for (keep, e) in [([1u32, 2], t[0]), ([2, 3], t[1]), ([1, 3], t[2])] {
            let sub = cut_subfamily(d, &keep.into_iter().collect()).unwrap().reindexed();
            let rep = x.edges[e].rep.as_ref().unwrap();
            assert!(orbit_equal(&sub, rep, true).unwrap().equivalent);
        }
    }
}

#[test]
fn complex_json_roundtrip() {
    let x = build_quotient_complex(2, 2, DEFAULT_MAX_CANDIDATES).unwrap();
    let doc = ComplexDocument::new(x.clone(), vec![], vec![]);
    assert_eq!(doc.complex(), x);
    let s = serde_json::to_string(&doc).unwrap();
    let back: ComplexDocument = serde_json::from_str(&s).map_err(|e| e.to_string()).unwrap();
    assert_eq!(back, doc);
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    for k in ["vertices", "edges", "triangles", "tree", "determinable"] {
        assert!(v.get(k).is_some(), "{k}");
    }
    let e0 = &v["edges"][0];
    for k in ["id", "src", "dst", "rep"] {
        assert!(e0.get(k).is_some(), "{k}");
    }
}
