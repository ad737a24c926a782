//! Presentations of a group acting on a simply connected 2-complex, assembled
//! from stabilizer presentations and the combinatorics of the quotient.
//!
//! Each edge `e` contributes a generator `g_<id>`. Relators:
//! tree edges give `g_e`; each stabilizer generator `s` of `e` gives
//! `g_e^-1 i_e(s) g_e = c_e(s)`; each triangle gives
//! `h_a g_a h_b g_b h_c g_c^-1 = h`.

use super::{free_reduce, parse_word, Presentation, Word};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BrownError {
    #[error("incomplete or inconsistent cell data: {0}")]
    IncompleteData(String),
    #[error("edges {stuck:?} are not determinable")]
    NotDeterminable { partial: Presentation, stuck: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrownVertex {
    pub id: usize,
    pub generators: Vec<String>,
    #[serde(default)]
    pub relators: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilizerGen {
    /// the generator as a word over the source vertex group
    pub inclusion: String,
    /// its conjugate by `g_e`, as a word over the target vertex group
    pub conjugate: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrownEdge {
    pub id: usize,
    pub src: usize,
    pub dst: usize,
    #[serde(default)]
    pub tree: bool,
    #[serde(default)]
    pub stabilizer: Vec<StabilizerGen>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrownTriangle {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    #[serde(default)]
    pub h_a: String,
    #[serde(default)]
    pub h_b: String,
    #[serde(default)]
    pub h_c: String,
    #[serde(default)]
    pub h: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrownData {
    pub vertices: Vec<BrownVertex>,
    #[serde(default)]
    pub edges: Vec<BrownEdge>,
    #[serde(default)]
    pub triangles: Vec<BrownTriangle>,
}

pub fn edge_generator(id: usize) -> String {
    format!("g_{id}")
}

struct Parsed {
    generators: Vec<String>,
    vertex_relators: Vec<Word>,
    /// per edge: (inclusion, conjugate)
    stabilizers: Vec<Vec<(Word, Word)>>,
    /// per triangle: h_a, h_b, h_c, h
    triangle_words: Vec<[Word; 4]>,
}

fn parse(d: &BrownData) -> Result<Parsed, BrownError> {
    let err = |m: String| BrownError::IncompleteData(m);
    let mut gens: BTreeMap<String, usize> = BTreeMap::new();
    let mut generators = Vec::new();
    for (i, v) in d.vertices.iter().enumerate() {
        if v.id != i {
            return Err(err(format!("vertex ids must be 0..{}", d.vertices.len())));
        }
        for g in &v.generators {
            if gens.insert(g.clone(), i).is_some() {
                return Err(err(format!("generator {g} belongs to two vertices")));
            }
            generators.push(g.clone());
        }
    }
    let word = |s: &str, allowed: &dyn Fn(usize) -> bool| -> Result<Word, BrownError> {
        let w = parse_word(s).map_err(|e| err(format!("`{s}`: {e}")))?;
        for l in &w.letters {
            match gens.get(&l.gen) {
                Some(&v) if allowed(v) => {}
                Some(_) => return Err(err(format!("`{s}` uses {} from the wrong vertex", l.gen))),
                None => return Err(err(format!("`{s}` uses unknown generator {}", l.gen))),
            }
        }
        Ok(free_reduce(&w))
    };
    let mut vertex_relators = Vec::new();
    for v in &d.vertices {
        for r in &v.relators {
            vertex_relators.push(word(r, &|u| u == v.id)?);
        }
    }
    let nv = d.vertices.len();
    let mut stabilizers = Vec::new();
    for (i, e) in d.edges.iter().enumerate() {
        if e.id != i {
            return Err(err(format!("edge ids must be 0..{}", d.edges.len())));
        }
        if e.src >= nv || e.dst >= nv {
            return Err(err(format!("edge {i} has a missing endpoint")));
        }
        let mut s = Vec::new();
        for g in &e.stabilizer {
            s.push((word(&g.inclusion, &|u| u == e.src)?, word(&g.conjugate, &|u| u == e.dst)?));
        }
        stabilizers.push(s);
    }
    let mut triangle_words = Vec::new();
    for (i, t) in d.triangles.iter().enumerate() {
        let ne = d.edges.len();
        if t.a >= ne || t.b >= ne || t.c >= ne {
            return Err(err(format!("triangle {i} has a missing edge")));
        }
        let (a, b, c) = (&d.edges[t.a], &d.edges[t.b], &d.edges[t.c]);
        if a.src != c.src || a.dst != b.src || b.dst != c.dst {
            return Err(err(format!("triangle {i} edges do not bound a triangle")));
        }
        let any = |_: usize| true;
        triangle_words.push([word(&t.h_a, &any)?, word(&t.h_b, &any)?, word(&t.h_c, &any)?, word(&t.h, &any)?]);
    }
    Ok(Parsed { generators, vertex_relators, stabilizers, triangle_words })
}

/// Assemble the presentation; with `reduce`, eliminate every determinable `g_e`.
pub fn brown_assembly(d: &BrownData, reduce: bool) -> Result<Presentation, BrownError> {
    let parsed = parse(d)?;
    let g = |e: usize| Word::gen(edge_generator(e));

    if !reduce {
        let mut generators = parsed.generators.clone();
        generators.extend(d.edges.iter().map(|e| edge_generator(e.id)));
        let mut relators = parsed.vertex_relators.clone();
        relators.extend(d.edges.iter().filter(|e| e.tree).map(|e| g(e.id)));
        relators.extend(edge_relators(&parsed, &|e| g(e)));
        relators.extend(triangle_relators(d, &parsed, &|e| g(e)));
        return Ok(Presentation { generators, relators, extended: false });
    }

    let values = determine(d, &parsed);
    let value = |e: usize| values.get(&e).cloned().unwrap_or_else(|| g(e));
    let stuck: Vec<usize> = d.edges.iter().map(|e| e.id).filter(|e| !values.contains_key(e)).collect();
    let mut generators = parsed.generators.clone();
    generators.extend(stuck.iter().map(|&e| edge_generator(e)));
    let mut relators = parsed.vertex_relators.clone();
    relators.extend(edge_relators(&parsed, &value));
    relators.extend(triangle_relators(d, &parsed, &value));
    relators.retain(|r| !r.is_empty());
    let p = Presentation { generators, relators, extended: false };
    if stuck.is_empty() {
        Ok(p)
    } else {
        Err(BrownError::NotDeterminable { partial: p, stuck })
    }
}

fn edge_relators(parsed: &Parsed, g: &dyn Fn(usize) -> Word) -> Vec<Word> {
    let mut out = Vec::new();
    for (e, stab) in parsed.stabilizers.iter().enumerate() {
        for (inc, conj) in stab {
            let ge = g(e);
            out.push(free_reduce(&ge.inverse().concat(inc).concat(&ge).concat(&conj.inverse())));
        }
    }
    out
}

fn triangle_relators(d: &BrownData, parsed: &Parsed, g: &dyn Fn(usize) -> Word) -> Vec<Word> {
    d.triangles
        .iter()
        .zip(&parsed.triangle_words)
        .map(|(t, [ha, hb, hc, h])| {
            let w = ha.concat(&g(t.a)).concat(hb).concat(&g(t.b)).concat(hc);
            free_reduce(&w.concat(&g(t.c).inverse()).concat(&h.inverse()))
        })
        .collect()
}

/// Values of the determinable edge generators over the vertex generators.
fn determine(d: &BrownData, parsed: &Parsed) -> BTreeMap<usize, Word> {
    let mut vals: BTreeMap<usize, Word> = d.edges.iter().filter(|e| e.tree).map(|e| (e.id, Word::identity())).collect();
    loop {
        let mut progress = false;
        for (t, [ha, hb, hc, h]) in d.triangles.iter().zip(&parsed.triangle_words) {
            let slots = [t.a, t.b, t.c];
            let open: BTreeSet<usize> = slots.iter().copied().filter(|e| !vals.contains_key(e)).collect();
            if open.len() != 1 {
                continue;
            }
            let e = *open.iter().next().unwrap();
            if slots.iter().filter(|&&s| s == e).count() != 1 {
                continue;
            }
            let v = |x: usize| vals[&x].clone();
            let w = if e == t.c {
                h.inverse().concat(ha).concat(&v(t.a)).concat(hb).concat(&v(t.b)).concat(hc)
            } else if e == t.b {
                ha.concat(&v(t.a)).concat(hb).inverse().concat(h).concat(&v(t.c)).concat(&hc.inverse())
            } else {
                ha.inverse()
                    .concat(h)
                    .concat(&v(t.c))
                    .concat(&hc.inverse())
                    .concat(&v(t.b).inverse())
                    .concat(&hb.inverse())
            };
            vals.insert(e, free_reduce(&w));
            progress = true;
        }
        if !progress {
            return vals;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vertex(id: usize, gens: &[&str], rels: &[&str]) -> BrownVertex {
        BrownVertex {
            id,
            generators: gens.iter().map(|s| s.to_string()).collect(),
            relators: rels.iter().map(|s| s.to_string()).collect(),
        }
    }

    #[test]
    fn triangle_solving() {
        // three vertices, a tree of two edges and a third edge fixed by a triangle
        let d = BrownData {
            vertices: vec![vertex(0, &["x"], &[]), vertex(1, &["y"], &[]), vertex(2, &["z"], &[])],
            edges: vec![
                BrownEdge { id: 0, src: 0, dst: 1, tree: true, stabilizer: vec![] },
                BrownEdge { id: 1, src: 1, dst: 2, tree: true, stabilizer: vec![] },
                BrownEdge { id: 2, src: 0, dst: 2, tree: false, stabilizer: vec![] },
            ],
            triangles: vec![BrownTriangle {
                a: 0,
                b: 1,
                c: 2,
                h_a: "x".into(),
                h_b: String::new(),
                h_c: "z".into(),
                h: "x z".into(),
            }],
        };
        let full = brown_assembly(&d, false).unwrap();
        assert_eq!(full.generators, vec!["x", "y", "z", "g_0", "g_1", "g_2"]);
        assert_eq!(full.relators.last().unwrap().to_string(), "x g_0 g_1 z g_2^-1 z^-1 x^-1");
        let red = brown_assembly(&d, true).unwrap();
        assert_eq!(red.generators, vec!["x", "y", "z"]);
        assert!(red.relators.is_empty());
    }

    #[test]
    fn rejects_bad_cells() {
        let d = BrownData { vertices: vec![vertex(0, &["x"], &["y"])], ..Default::default() };
        assert!(matches!(brown_assembly(&d, false), Err(BrownError::IncompleteData(_))));
    }
}
