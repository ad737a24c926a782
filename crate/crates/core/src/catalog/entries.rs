//! The catalog data.

use super::{Claim, DerivedSet, EntrySurface, Relation, Source, SporadicEntry};

fn gens(s: &str) -> Vec<String> {
    s.split_whitespace().map(String::from).collect()
}

fn rels(list: &[(&str, &str)]) -> Vec<Relation> {
    list.iter().map(|(l, t)| Relation::new(l, t)).collect()
}

/// `x y = y x` for every `x` in `xs` and `y` in `ys`.
fn commute(label: &str, xs: &[&str], ys: &[&str]) -> Vec<Relation> {
    let mut out = Vec::new();
    for x in xs {
        for y in ys {
            out.push(Relation::new(label, &format!("{x} {y} = {y} {x}")));
        }
    }
    out
}

/// `x y = y x` for every unordered pair from `xs`.
fn commute_pairs(label: &str, xs: &[&str]) -> Vec<Relation> {
    let mut out = Vec::new();
    for (i, x) in xs.iter().enumerate() {
        for y in &xs[i + 1..] {
            out.push(Relation::new(label, &format!("{x} {y} = {y} {x}")));
        }
    }
    out
}

fn surface(g: u32, n: u32) -> EntrySurface {
    EntrySurface::Surface { g, n }
}

fn aux(tag: &str, gn: Option<(u32, u32)>) -> EntrySurface {
    EntrySurface::Auxiliary { tag: tag.into(), g: gn.map(|p| p.0), n: gn.map(|p| p.1) }
}

fn relations(generators: &str, relations: Vec<Relation>) -> Source {
    Source::Relations { generators: gens(generators), relations }
}

fn extension(kernel: &str, base: &str, corrections: &[(&str, &str)]) -> Source {
    Source::CentralExtension {
        kernel: kernel.into(),
        base: base.into(),
        corrections: corrections.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
    }
}

fn derived(context: &str, substitutions: &[(&str, &str)], list: &[(&str, &str)]) -> DerivedSet {
    DerivedSet {
        context: context.into(),
        substitutions: substitutions.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
        relations: rels(list),
    }
}

struct E {
    id: &'static str,
    surface: EntrySurface,
    theorem: &'static str,
    quote: &'static str,
    source: Source,
    claims: Vec<Claim>,
    derived: Vec<DerivedSet>,
}

impl From<E> for SporadicEntry {
    fn from(e: E) -> Self {
        SporadicEntry {
            id: e.id.into(),
            surface: e.surface,
            theorem: e.theorem.into(),
            quote: e.quote.into(),
            source: e.source,
            claims: e.claims,
            derived: e.derived,
        }
    }
}

fn index(subgroup: &[&str], index: usize) -> Claim {
    Claim::FiniteIndexEquals { subgroup: subgroup.iter().map(|s| s.to_string()).collect(), index, max_cosets: 1000 }
}

fn matches(other: &str) -> Claim {
    Claim::AbelianizationMatches { other: other.into() }
}

fn product(left: &str, right: &str) -> Claim {
    Claim::IsomorphicToProductAb { left: left.into(), right: right.into() }
}

// Relation lists reused by several entries.

fn pm_f2_3_relations() -> Vec<Relation> {
    let mut v = commute_pairs("(1)", &["A1", "A2", "A3"]);
    v.extend(rels(&[
        ("(2)", "U A1 U^-1 = A1^-1"),
        ("(3)", "A2 U D2 = D2^-1 A2 U"),
        ("(4)", "(A2 U)^2 = (D2 U)^2 = (U D2)^2"),
        ("(5)", "(U D3)^2 = (D3 U)^2"),
        ("(6)", "D3 U D2 U^-1 = U D2 U^-1 D3"),
        ("(7)", "A3 U D2 D3 = U D2 D3 A3^-1"),
        ("(8)", "(U A3)^2 = (U D2 D3)^-2"),
        ("(9)", "A2 (A3 U D2)^2 = (A3 U D2)^2 A2"),
        ("(10)", "A2 A1^-1 D3 A1 A2^-1 = A3 U D2 D3^-1 (A3 U D2)^-1"),
        ("(11)", "A1 (A3 U D2)^2 A1^-1 = (U D2)^-1 (A3 U D2)^2 U D2"),
    ]));
    v
}

fn pm_f3_1_relations() -> Vec<Relation> {
    rels(&[
        ("(1)", "A1 A2 = A2 A1"),
        ("(2)", "A1 B A1 = B A1 B"),
        ("(2)", "A2 B A2 = B A2 B"),
        ("(3)", "U A1 U^-1 = A1^-1"),
        ("(4)", "U B U^-1 = A2^-1 B^-1 A2"),
        ("(5)", "(U A2)^2 = 1"),
        ("(6)", "(A1 A2^2 B)^3 = 1"),
    ])
}

fn pm_f3_2_relations() -> Vec<Relation> {
    let mut v = commute_pairs("(1)", &["A1", "A2", "A3"]);
    v.extend(rels(&[
        ("(2)", "A1 B A1 = B A1 B"),
        ("(2)", "A2 B A2 = B A2 B"),
        ("(2)", "A3 B A3 = B A3 B"),
        ("(3)", "U A1 U^-1 = A1^-1"),
        ("(4)", "U B U^-1 = A3^-1 B^-1 A3"),
        ("(5)", "U D1 = D1 U"),
        ("(6)", "U D3 = D3 U"),
        ("(7)", "B D2 = D2 B"),
        ("(8)", "(U A2)^2 = D1"),
        ("(9)", "(A1^2 A3 B)^3 = (U A3)^2 = D3"),
        ("(10)", "A2^-1 U D2 U^-1 A2 = U B^-1 D1^-1 B U^-1"),
        ("(11)", "(U D2)^2 D1 D3 = U^2"),
        ("(12)", "(A1 A2 A3 B)^3 = 1"),
    ]));
    v
}

fn torus_t3_relations() -> Vec<Relation> {
    let mut v = commute_pairs("(C)", &["C1", "C2", "C3"]);
    v.extend(commute("(C)", &["C1", "C2", "C3"], &["A1", "A2", "A3", "B"]));
    v.extend(commute_pairs("(B)", &["A1", "A2", "A3"]));
    for a in ["A1", "A2", "A3"] {
        v.push(Relation::new("(B)", &format!("{a} B {a} = B {a} B")));
    }
    v.push(Relation::new("(S)", "(A1 A2 A3 B)^3 = C1 C2 C3"));
    v
}

fn keep(list: Vec<Relation>, drop: &[&str]) -> Vec<Relation> {
    list.into_iter().filter(|r| !drop.contains(&r.label.as_str())).collect()
}

pub fn catalog_entries() -> Vec<SporadicEntry> {
    let p23_subs: &[(&str, &str)] =
        &[("d23", "(U A3)^2"), ("d12", "(U D2)^-2 (U A3)^-2"), ("e", "(A3 U D2)^2"), ("a3", "A3 A2^-1"), ("d3", "D3")];
    let p31_subs: &[(&str, &str)] = &[
        ("g", "U^2"),
        ("a1", "A2 A1^-1"),
        ("b1", "A1 A2^-1 B A2 A1^-1 B^-1"),
        ("d", "U^-1 B A2 A1^-1 B^-1 U B A1 A2^-1 B^-1 A2 A1^-1"),
    ];
    let p32_subs: &[(&str, &str)] =
        &[("a2", "A3 A2^-1"), ("b2", "A3^-1 A2 B A2^-1 A3 B^-1"), ("d1", "D1"), ("d2", "D2"), ("d3", "D3")];

    let list = vec![
        // base facts
        E {
            id: "f1-0",
            surface: surface(1, 0),
            theorem: "M(F_1^0) is trivial",
            quote: "M(F_1^0) and M(F_1^1) are well known to be trivial",
            source: relations("", vec![]),
            claims: vec![Claim::abelian(0, &[]), index(&[], 1)],
            derived: vec![],
        },
        E {
            id: "f1-1",
            surface: surface(1, 1),
            theorem: "M(F_1^1) is trivial",
            quote: "M(F_1^0) and M(F_1^1) are well known to be trivial",
            source: relations("", vec![]),
            claims: vec![Claim::abelian(0, &[]), index(&[], 1)],
            derived: vec![],
        },
        E {
            id: "f1-2",
            surface: surface(1, 2),
            theorem: "M(F_1^2) is free abelian on the two boundary twists",
            quote: "generated by Dehn twists along the boundary curves and is isomorphic to Z^2",
            source: relations("C1 C2", commute_pairs("[1]", &["C1", "C2"])),
            claims: vec![Claim::abelian(2, &[])],
            derived: vec![],
        },
        E {
            id: "f2-0",
            surface: surface(2, 0),
            theorem: "M(F_2^0) is the Klein four-group",
            quote: "M(F_2^0)=Z_2 x Z_2",
            source: relations("a b", rels(&[("[1]", "a^2 = 1"), ("[2]", "b^2 = 1"), ("[3]", "a b a b = 1")])),
            claims: vec![Claim::abelian(0, &[2, 2]), index(&[], 4)],
            derived: vec![],
        },
        E {
            id: "f2-1",
            surface: surface(2, 1),
            theorem: "presentation of M(F_2^1), the one-holed Klein bottle",
            quote: "<A_1,U | UA_1U^{-1}=A_1^{-1}>",
            source: relations("A1 U", rels(&[("[1]", "U A1 U^-1 = A1^-1")])),
            claims: vec![Claim::abelian(1, &[2]), index(&["A1", "U^2"], 2), index(&["A1", "U"], 1)],
            derived: vec![],
        },
        E {
            id: "f3-0",
            surface: surface(3, 0),
            theorem: "presentation of M(F_3^0) on A_1, B, U",
            quote: "A_1BA_1=BA_1B, UA_1U^{-1}=A_1^{-1}, UBU^{-1}=A_1^{-1}B^{-1}A_1, U^2=1, (A_1^3B)^3=1",
            source: relations(
                "A1 B U",
                rels(&[
                    ("[1]", "A1 B A1 = B A1 B"),
                    ("[2]", "U A1 U^-1 = A1^-1"),
                    ("[3]", "U B U^-1 = A1^-1 B^-1 A1"),
                    ("[4]", "U^2 = 1"),
                    ("[5]", "(A1^3 B)^3 = 1"),
                ]),
            ),
            claims: vec![Claim::abelian(0, &[2, 2])],
            derived: vec![],
        },
        E {
            id: "pm-f2-1",
            surface: aux("PM+(N2, 1 point)", Some((2, 1))),
            theorem: "pure mapping class group of the Klein bottle with one puncture",
            quote: "<A_1,U | UA_1U^{-1}=A_1^{-1}, U^2=1>",
            source: relations("A1 U", rels(&[("[1]", "U A1 U^-1 = A1^-1"), ("[2]", "U^2 = 1")])),
            claims: vec![Claim::abelian(0, &[2, 2])],
            derived: vec![],
        },
        // boundary-twist kernels
        E {
            id: "z1",
            surface: aux("Z", None),
            theorem: "infinite cyclic group on C1",
            quote: "the kernel of i_* is central",
            source: relations("C1", vec![]),
            claims: vec![Claim::abelian(1, &[])],
            derived: vec![],
        },
        E {
            id: "z2",
            surface: aux("Z^2", None),
            theorem: "free abelian group on C1, C2",
            quote: "the kernel of i_* is central",
            source: relations("C1 C2", commute_pairs("[1]", &["C1", "C2"])),
            claims: vec![Claim::abelian(2, &[])],
            derived: vec![],
        },
        E {
            id: "z3",
            surface: aux("Z^3", None),
            theorem: "free abelian group on C1, C2, C3",
            quote: "the kernel of i_* is central",
            source: relations("C1 C2 C3", commute_pairs("[1]", &["C1", "C2", "C3"])),
            claims: vec![Claim::abelian(3, &[])],
            derived: vec![],
        },
        E {
            id: "z4",
            surface: aux("Z^4", None),
            theorem: "free abelian group on C1, C2, C3, C4",
            quote: "the kernel of i_* is central",
            source: relations("C1 C2 C3 C4", commute_pairs("[1]", &["C1", "C2", "C3", "C4"])),
            claims: vec![Claim::abelian(4, &[])],
            derived: vec![],
        },
        // genus one
        E {
            id: "pm-f1-3",
            surface: aux("PM+(N1, 3 points)", Some((1, 3))),
            theorem: "PM+ of the projective plane with three punctures is free on A3, A23, B23",
            quote: "is free, generated by A_3, A_{23}, B_{23}",
            source: relations("A3 A23 B23", vec![]),
            claims: vec![Claim::FreeOfRank { rank: 3 }, Claim::abelian(3, &[])],
            derived: vec![],
        },
        E {
            id: "f1-3",
            surface: surface(1, 3),
            theorem: "M(F_1^3) is Z^3 times PM+ of the three-punctured projective plane",
            quote: "isomorphic to Z^3 x PM^+(F,{p_1,p_2,p_3})",
            source: extension("z3", "pm-f1-3", &[]),
            claims: vec![Claim::abelian(6, &[]), product("z3", "pm-f1-3")],
            derived: vec![],
        },
        E {
            id: "pm-f1-4",
            surface: aux("PM+(N1, 4 points)", Some((1, 4))),
            theorem: "presentation of PM+ of the projective plane with four punctures",
            quote: "generators {A_3, A_4, A_{23}, A_{24}, A_{34}, B_{23}, B_{24}, B_{34}, D}",
            source: relations(
                "A3 A4 A23 A24 A34 B23 B24 B34 D",
                rels(&[
                    ("(1)", "A23 A4 = A4 A23"),
                    ("(1)", "A24 A3 = A3 A24"),
                    ("(2)", "A3^-1 A4 A34 B34 = B34 A3^-1 A4 A34"),
                    ("(3)", "A4 A34 A24 B23 = B23 A4 A34 A24"),
                    ("(4)", "A34 A3^-1 A23 B24 = B24 A34 A3^-1 A23"),
                    ("(5)", "A34 A24 A23 = A24 A23 A34 = A23 A34 A24"),
                    ("(6)", "B34 A23 B24 = A23 B24 B34 = B24 B34 A23"),
                    ("(7)", "A4 A34 A3^-1 = A34 A3^-1 A4 = A3^-1 A4 A34"),
                    ("(8)", "A34^-1 B24 B23 = B24 B23 A34^-1 = B23 A34^-1 B24"),
                    ("(9)", "A24 B23 D^-1 = B23 D^-1 A24 = D^-1 A24 B23"),
                    ("(10)", "D = A34^-1 A4^-1 B34 A4 A34"),
                ]),
            ),
            claims: vec![Claim::abelian(8, &[])],
            derived: vec![derived(
                "proof",
                &[],
                &[
                    ("[5a]", "A23 A34 A23^-1 = A24^-1 A34 A24"),
                    ("[5b]", "A23 A34 A24 A23^-1 = A34 A24"),
                    ("[4a]", "A3 A34^-1 B24 A34 A3^-1 = A23 B24 A23^-1"),
                ],
            )],
        },
        E {
            id: "f1-4",
            surface: surface(1, 4),
            theorem: "M(F_1^4) is Z^4 times PM+ of the four-punctured projective plane",
            quote: "isomorphic to Z^4 x PM^+(F,{p_1,p_2,p_3,p_4})",
            source: extension("z4", "pm-f1-4", &[]),
            claims: vec![Claim::abelian(12, &[]), product("z4", "pm-f1-4")],
            derived: vec![],
        },
        // genus two
        E {
            id: "pm-f2-2",
            surface: aux("PM+(N2, 2 points)", Some((2, 2))),
            theorem: "presentation of PM+ of the Klein bottle with two punctures",
            quote: "A_1A_2=A_2A_1, UA_1U^{-1}=A_1^{-1}, A_2UD_2=D_2^{-1}A_2U, (A_2U)^2=(D_2U)^2=1",
            source: relations(
                "A1 A2 D2 U",
                rels(&[
                    ("[1]", "A1 A2 = A2 A1"),
                    ("[2]", "U A1 U^-1 = A1^-1"),
                    ("[3]", "A2 U D2 = D2^-1 A2 U"),
                    ("[4]", "(A2 U)^2 = (D2 U)^2 = 1"),
                ]),
            ),
            claims: vec![Claim::abelian(0, &[2, 2, 2, 2])],
            derived: vec![derived(
                "proof",
                &[("g", "U^-2"), ("a2", "A2 A1^-1"), ("d2", "D2")],
                &[
                    ("[p1]", "U A1 U^-1 = A1^-1"),
                    ("[p2]", "U^2 = g^-1"),
                    ("[p3]", "U g U^-1 = g"),
                    ("[p4]", "U a2 U^-1 = a2^-1 g"),
                    ("[p5]", "U d2 U^-1 = d2^-1 g"),
                    ("[p6]", "A1 g A1^-1 = g"),
                    ("[p7]", "A1 a2 A1^-1 = a2"),
                    ("[p8]", "A1 d2 A1^-1 = g a2^-1 d2 a2"),
                ],
            )],
        },
        E {
            id: "f2-2",
            surface: surface(2, 2),
            theorem: "presentation of M(F_2^2)",
            quote: "(A_2U)^2=(D_2U)^2",
            source: relations(
                "C1 A1 A2 D2 U",
                [
                    commute("[1]", &["C1"], &["A1", "A2"]),
                    commute("[2]", &["C1"], &["D2"]),
                    commute("[3]", &["C1"], &["U"]),
                    rels(&[
                        ("[4]", "A1 A2 = A2 A1"),
                        ("[5]", "U A1 U^-1 = A1^-1"),
                        ("[6]", "A2 U D2 = D2^-1 A2 U"),
                        ("[7]", "(A2 U)^2 = (D2 U)^2"),
                    ]),
                ]
                .concat(),
            ),
            claims: vec![Claim::abelian(2, &[2, 2, 2]), matches("f2-2-ext")],
            derived: vec![derived(
                "proof",
                &[],
                &[
                    ("[c1]", "D2 (A2 U)^2 = (A2 U)^2 D2"),
                    ("[c2]", "U (A2 U)^2 = (A2 U)^2 U"),
                    ("[c3]", "A1 (A2 U)^2 = (A2 U)^2 A1"),
                    ("[c4]", "A2 (A2 U)^2 = (A2 U)^2 A2"),
                ],
            )],
        },
        E {
            id: "f2-2-ext",
            surface: aux("M(F_2^2) before eliminating C2", Some((2, 2))),
            theorem: "central extension of PM+(N2, 2 points) by the boundary twists C1, C2",
            quote: "(A_2U)^2=C_1C_2",
            source: extension("z2", "pm-f2-2", &[("[4]", "C1 C2")]),
            claims: vec![Claim::abelian(2, &[2, 2, 2])],
            derived: vec![],
        },
        E {
            id: "pm-f2-3",
            surface: aux("PM+(N2, 3 points)", Some((2, 3))),
            theorem: "presentation of PM+ of the Klein bottle with three punctures",
            quote: "(8) (UA_3)^2=(UD_2D_3)^{-2}",
            source: relations("A1 A2 A3 D2 D3 U", pm_f2_3_relations()),
            claims: vec![Claim::abelian(0, &[2, 2, 2, 2, 2, 4])],
            derived: vec![derived(
                "proof",
                p23_subs,
                &[
                    ("[base]", "(A2 U)^2 = (D2 U)^2 = d23^-1 d12^-1"),
                    ("(i)", "U a3 U^-1 = d23 a3^-1 d12 d23"),
                    ("(ii)", "U d3 U^-1 = d3^-1 d12"),
                    ("(iii)", "U d23 U^-1 = d23"),
                    ("(iv)", "U d12 U^-1 = d12"),
                    ("(v)", "U e U^-1 = d3^-1 d12 d23 a3^-1 e a3 d23^-1 d12^-1 d3"),
                    ("(vi)", "D2 a3 D2^-1 = d23^-1 d3^-1 e d3 a3"),
                    ("(vii)", "D2 d3 D2^-1 = d23^-1 d3 d23"),
                    ("(viii)", "D2 d23 D2^-1 = D2 d3^-1 D2^-1 d3 d23"),
                    ("(ix)", "D2 d12 D2^-1 = d12 d23 D2 d23^-1 D2^-1"),
                    ("(x)", "D2 e D2^-1 = D2 a3 D2^-1 a3^-1 d23"),
                    ("(xi)", "A2 a3 A2^-1 = a3"),
                    ("(xii)", "A2 d3 A2^-1 = d12 d23 a3^-1 e d3 a3"),
                    ("(xiii)", "A2 d23 A2^-1 = a3^-1 d23 a3"),
                    ("(xiv)", "A2 d12 A2^-1 = d12 d23 A2 d23^-1 A2^-1"),
                    ("(xv)", "A2 e A2^-1 = e"),
                    ("(xvi)", "A1 a3 A1^-1 = a3"),
                    ("(xvii)", "A1 d3 A1^-1 = d12 d23 a3^-1 d3 a3 d23^-1"),
                    ("(xviii)", "A1 d23 A1^-1 = d23"),
                    ("(xix)", "A1 d12 A1^-1 = d12"),
                    ("(xx)", "A1 e A1^-1 = (U D2)^-1 e U D2"),
                ],
            )],
        },
        E {
            id: "f2-3",
            surface: surface(2, 3),
            theorem: "presentation of M(F_2^3)",
            quote: "(8') (UA_3)^2(UD_2D_3)^2=(C_1C_2C_3)^2",
            source: relations(
                "A1 A2 A3 D2 D3 U C1 C2 C3",
                [
                    keep(pm_f2_3_relations(), &["(8)"]),
                    rels(&[("(8')", "(U A3)^2 (U D2 D3)^2 = (C1 C2 C3)^2")]),
                    commute_pairs("[C]", &["C1", "C2", "C3"]),
                    commute("[C]", &["C1", "C2", "C3"], &["A1", "A2", "A3", "D2", "D3", "U"]),
                ]
                .concat(),
            ),
            claims: vec![Claim::abelian(3, &[2, 2, 2, 2, 2, 2]), matches("f2-3-ext")],
            derived: vec![],
        },
        E {
            id: "f2-3-ext",
            surface: aux("M(F_2^3) as a central extension", Some((2, 3))),
            theorem: "central extension of PM+(N2, 3 points) by the boundary twists C1, C2, C3",
            quote: "(8') (UA_3)^2(UD_2D_3)^2=(C_1C_2C_3)^2",
            source: extension("z3", "pm-f2-3", &[("(8)", "(C1 C2 C3)^2")]),
            claims: vec![],
            derived: vec![],
        },
        // genus three
        E {
            id: "t3",
            surface: aux("T_3", None),
            theorem: "presentation of the mapping class group of the three-holed torus",
            quote: "(A_1A_2A_3B)^3=C_1C_2C_3",
            source: relations("C1 C2 C3 A1 A2 A3 B", torus_t3_relations()),
            claims: vec![Claim::abelian(3, &[])],
            derived: vec![],
        },
        E {
            id: "t2",
            surface: aux("T_2", None),
            theorem: "presentation of the mapping class group of the two-holed torus",
            quote: "adding to the above presentation relations C_2=1 and A_2=A_3",
            source: relations(
                "C1 C2 C3 A1 A2 A3 B",
                [torus_t3_relations(), rels(&[("[T2]", "C2 = 1"), ("[T2]", "A2 = A3")])].concat(),
            ),
            claims: vec![Claim::abelian(2, &[])],
            derived: vec![derived(
                "remark",
                &[],
                &[("[s1]", "(A1 A2^2 B)^3 = C1 C3"), ("[s2]", "(A1 A2^2 B)^3 = (A1^2 A2 B)^3")],
            )],
        },
        E {
            id: "pm-f3-1",
            surface: aux("PM+(N3, 1 point)", Some((3, 1))),
            theorem: "presentation of PM+ of the closed genus-3 surface with one puncture",
            quote: "(6) (A_1A_2^2B)^3=1",
            source: relations("A1 A2 B U", pm_f3_1_relations()),
            claims: vec![Claim::abelian(0, &[2, 2])],
            derived: vec![derived(
                "proof",
                p31_subs,
                &[
                    ("(i)", "A1 B A1 = B A1 B"),
                    ("(ii)", "U A1 U^-1 = A1^-1"),
                    ("(iii)", "U B U^-1 A1^-1 B A1 = b1^-1 a1^-1"),
                    ("(iv)", "U^2 = g"),
                    ("(v)", "(A1^3 B)^3 = b1^-1 a1 b1 a1^-1"),
                    ("(vi)", "b1^-1 d^-1 g^-1 a1^-1 d a1 b1 g = 1"),
                    ("(vii)", "A1 a1 A1^-1 = a1"),
                    ("(viii)", "A1 b1 A1^-1 = a1^-1 b1"),
                    ("(ix)", "A1 g A1^-1 = g"),
                    ("(x)", "A1 d A1^-1 = g^-1 a1^-1 d a1"),
                    ("(xi)", "B a1 B^-1 = a1 b1"),
                    ("(xii)", "B b1 B^-1 = b1"),
                    ("(xiii)", "B g B^-1 = b1^-1 g d b1"),
                    ("(xiv)", "B d B^-1 = d"),
                    ("(xv)", "U a1 U^-1 = a1^-1 g^-1"),
                    ("(xvi)", "U b1 U^-1 = g d a1 b1"),
                    ("(xvii)", "U g U^-1 = g"),
                    ("(xviii)", "U d U^-1 = d^-1 g^-1"),
                    ("[X]", "A2^-1 B^-1 A1^-2 B^-1 A2^-1 = A1 B A1^2 B A1"),
                ],
            )],
        },
        E {
            id: "f3-1",
            surface: surface(3, 1),
            theorem: "presentation of M(F_3^1)",
            quote: "(A_2U)^2=(UA_2)^2=(A_1^2A_2B)^3",
            source: relations(
                "A1 A2 B U",
                [keep(pm_f3_1_relations(), &["(5)", "(6)"]), rels(&[("[5]", "(A2 U)^2 = (U A2)^2 = (A1^2 A2 B)^3")])]
                    .concat(),
            ),
            claims: vec![Claim::abelian(0, &[2, 2]), matches("f3-1-ext")],
            derived: vec![],
        },
        E {
            id: "f3-1-ext",
            surface: aux("M(F_3^1) as a central extension", Some((3, 1))),
            theorem: "central extension of PM+(N3, 1 point) by the boundary twist C1",
            quote: "(A_1^2A_2B)^3=C_1 (star) and (A_2U)^2=C_1",
            source: extension("z1", "pm-f3-1", &[("(5)", "C1"), ("(6)", "C1")]),
            claims: vec![],
            derived: vec![],
        },
        E {
            id: "pm-f3-2",
            surface: aux("PM+(N3, 2 points)", Some((3, 2))),
            theorem: "presentation of PM+ of the closed genus-3 surface with two punctures",
            quote: "(12) (A_1A_2A_3B)^3=1",
            source: relations("A1 A2 A3 B D1 D2 D3 U", pm_f3_2_relations()),
            claims: vec![Claim::abelian(0, &[2, 2])],
            derived: vec![derived(
                "proof",
                p32_subs,
                &[
                    ("(i)", "U B U^-1 A2^-1 B A2 = b2^-1 a2^-1"),
                    ("(ii)", "(U A2)^2 = d1"),
                    ("(iii)", "(A1 A2^2 B)^3 = b2^-1 d3^-1 a2 b2 a2^-1"),
                    ("(iv)", "A1 a2 A1^-1 = A2 a2 A2^-1 = a2"),
                    ("(v)", "A1 b2 A1^-1 = a2^-1 d3 b2"),
                    ("(vi)", "A1 d1 A1^-1 = A2 d1 A2^-1 = U d1 U^-1 = d1"),
                    ("(vii)", "A1 d3 A1^-1 = B d3 B^-1 = U d3 U^-1 = d3"),
                    ("(viii)", "A1 d2 A1^-1 = d3^-1 d1^-1 a2^-1 d3 d2 d3^-1 a2"),
                    ("(ix)", "A2 b2 A2^-1 = a2^-1 b2"),
                    ("(x)", "A2 d3 A2^-1 = a2^-1 d3 a2"),
                    ("(xi)", "A2 d2 A2^-1 = a2^-1 d3^-1 a2 d3 d2 b2 d1^-1 b2^-1 a2^-1 d3 a2"),
                    ("(xii)", "B a2 B^-1 = a2 b2"),
                    ("(xiii)", "B b2 B^-1 = b2"),
                    ("(xiv)", "B d1 B^-1 = b2^-1 d1 d3 d2 b2"),
                    ("(xv)", "B d2 B^-1 = d2"),
                    ("(xvi)", "U a2 U^-1 = d3 a2^-1 d1^-1"),
                    ("(xvii)", "U b2 U^-1 = d1 d3 d2 d3^-1 a2 b2"),
                    ("(xviii)", "U d2 U^-1 = d2^-1 d3^-1 d1^-1"),
                ],
            )],
        },
        E {
            id: "f3-2",
            surface: surface(3, 2),
            theorem: "presentation of M(F_3^2)",
            quote: "generators {A_1, A_2, A_3, B, D_1, D_2, D_3, U, C_1, C_2}",
            source: relations(
                "A1 A2 A3 B D1 D2 D3 U C1 C2",
                [
                    keep(pm_f3_2_relations(), &["(8)", "(11)", "(12)"]),
                    rels(&[
                        ("(8')", "(U A2)^2 = D1 C1"),
                        ("(11')", "(U D2)^2 D1 D3 = U^2 C1 C2^2"),
                        ("(12')", "(A1 A2 A3 B)^3 = C1 C2 = C2 C1"),
                    ]),
                    commute("[C]", &["C1", "C2"], &["A1", "A2", "A3", "D1", "D2", "D3", "B", "U"]),
                ]
                .concat(),
            ),
            claims: vec![Claim::abelian(0, &[2, 2, 2]), matches("f3-2-ext")],
            derived: vec![],
        },
        E {
            id: "f3-2-ext",
            surface: aux("M(F_3^2) as a central extension", Some((3, 2))),
            theorem: "central extension of PM+(N3, 2 points) by the boundary twists C1, C2",
            quote: "C_1C_2U^2=((UD_2)^2C_2^{-1})D_1D_3",
            source: extension("z2", "pm-f3-2", &[("(8)", "C1"), ("(11)", "C1 C2^2"), ("(12)", "C1 C2")]),
            claims: vec![],
            derived: vec![],
        },
    ];
    list.into_iter().map(SporadicEntry::from).collect()
}
