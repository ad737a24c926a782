//! Presentations of the mapping class groups of sporadic surfaces, with
//! machine-checkable claims about them.
//!
//! Relations are kept in the `=`-sugar form in which they were printed,
//! each under its original label. Labels in brackets (`[1]`, `[T2]`, ...) mark
//! relations that were printed without a number.

mod bank;
mod entries;
mod verify;

pub use bank::{lantern_star_relator_bank, BankRelator};
pub use entries::catalog_entries;
pub use verify::{verify_catalog, verify_entry, CatalogReport, ClaimResult, ClaimStatus, EntryReport};

use crate::pres::abelian::AbelianGroup;
use crate::pres::extension::{extension_presentation, ExtensionData, ExtensionError};
use crate::pres::{parse_relation, Presentation, PresentationError, Word};
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("no catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("entry {id}, relation {label}: {msg}")]
    Relation { id: String, label: String, msg: String },
    #[error("entry {id}: {source}")]
    Presentation { id: String, source: PresentationError },
    #[error("entry {id}: {source}")]
    Extension { id: String, source: ExtensionError },
}

/// Where an entry lives: a surface `F_g^n`, or an auxiliary group attached to
/// one (pure mapping class groups of punctured surfaces, tori, kernels).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EntrySurface {
    Surface { g: u32, n: u32 },
    Auxiliary { tag: String, g: Option<u32>, n: Option<u32> },
}

impl EntrySurface {
    pub fn gn(&self) -> (Option<u32>, Option<u32>) {
        match self {
            EntrySurface::Surface { g, n } => (Some(*g), Some(*n)),
            EntrySurface::Auxiliary { g, n, .. } => (*g, *n),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub label: String,
    pub text: String,
}

impl Relation {
    pub fn new(label: &str, text: &str) -> Self {
        Relation { label: label.into(), text: text.into() }
    }

    pub fn relators(&self) -> Result<Vec<Word>, String> {
        parse_relation(&self.text)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Source {
    Relations {
        generators: Vec<String>,
        relations: Vec<Relation>,
    },
    /// `kernel` central in the group, `base` the quotient; each correction
    /// names a relation of `base` whose last relator lifts to the given word.
    CentralExtension {
        kernel: String,
        base: String,
        corrections: Vec<(String, String)>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Claim {
    AbelianizationEquals {
        free_rank: usize,
        torsion: Vec<u64>,
    },
    /// The abelianization is the direct sum of those of `left` and `right`.
    IsomorphicToProductAb {
        left: String,
        right: String,
    },
    /// The abelianization equals that of another entry.
    AbelianizationMatches {
        other: String,
    },
    /// Every relator of `relation` is trivial in the abelianization, after
    /// replacing each symbol in `substitutions` by its word.
    RelationHoldsAb {
        label: String,
        relation: String,
        substitutions: Vec<(String, String)>,
    },
    FiniteIndexEquals {
        subgroup: Vec<String>,
        index: usize,
        max_cosets: usize,
    },
    FreeOfRank {
        rank: usize,
    },
}

impl Claim {
    pub fn abelian(free_rank: usize, torsion: &[u64]) -> Self {
        Claim::AbelianizationEquals { free_rank, torsion: torsion.to_vec() }
    }

    pub fn expected_group(&self) -> Option<AbelianGroup> {
        match self {
            Claim::AbelianizationEquals { free_rank, torsion } => Some(AbelianGroup::new(*free_rank, torsion)),
            _ => None,
        }
    }

    pub fn entry_refs(&self) -> Vec<&str> {
        match self {
            Claim::IsomorphicToProductAb { left, right } => vec![left, right],
            Claim::AbelianizationMatches { other } => vec![other],
            _ => vec![],
        }
    }
}

/// Relations stated in a proof, over the entry's generators and a few
/// auxiliary symbols that get substituted before checking.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DerivedSet {
    pub context: String,
    pub substitutions: Vec<(String, String)>,
    pub relations: Vec<Relation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SporadicEntry {
    pub id: String,
    pub surface: EntrySurface,
    pub theorem: String,
    pub quote: String,
    pub source: Source,
    pub claims: Vec<Claim>,
    pub derived: Vec<DerivedSet>,
}

impl SporadicEntry {
    /// Stated claims followed by one relation claim per derived relation.
    pub fn all_claims(&self) -> Vec<Claim> {
        let mut out = self.claims.clone();
        for set in &self.derived {
            for r in &set.relations {
                out.push(Claim::RelationHoldsAb {
                    label: format!("{} {}", set.context, r.label),
                    relation: r.text.clone(),
                    substitutions: set.substitutions.clone(),
                });
            }
        }
        out
    }
}

/// Owned catalog with presentation lookup.
#[derive(Debug, Clone)]
pub struct Catalog {
    pub entries: Vec<SporadicEntry>,
}

impl Default for Catalog {
    fn default() -> Self {
        Catalog { entries: catalog_entries() }
    }
}

impl Catalog {
    pub fn get(&self, id: &str) -> Result<&SporadicEntry, CatalogError> {
        self.entries.iter().find(|e| e.id == id).ok_or_else(|| CatalogError::UnknownEntry(id.into()))
    }

    /// The entry presenting `M(F_g^n)` itself.
    pub fn for_surface(&self, g: u32, n: u32) -> Option<&SporadicEntry> {
        self.entries.iter().find(|e| e.surface == EntrySurface::Surface { g, n })
    }

    pub fn presentation(&self, id: &str) -> Result<Presentation, CatalogError> {
        let e = self.get(id)?;
        match &e.source {
            Source::Relations { generators, relations } => {
                let mut relators = Vec::new();
                for r in relations {
                    relators.extend(r.relators().map_err(|msg| CatalogError::Relation {
                        id: id.into(),
                        label: r.label.clone(),
                        msg,
                    })?);
                }
                Presentation::new(generators.clone(), relators)
                    .map_err(|source| CatalogError::Presentation { id: id.into(), source })
            }
            Source::CentralExtension { kernel, base, corrections } => {
                let k = self.presentation(kernel)?;
                let q = self.presentation(base)?;
                let mut x = ExtensionData::central(k, q);
                let ends = self.relation_ends(base)?;
                for (label, word) in corrections {
                    let at = ends.get(label.as_str()).copied().ok_or_else(|| CatalogError::Relation {
                        id: id.into(),
                        label: label.clone(),
                        msg: format!("`{base}` has no relation {label}"),
                    })?;
                    let w = crate::pres::parse_word(word).map_err(|msg| CatalogError::Relation {
                        id: id.into(),
                        label: label.clone(),
                        msg,
                    })?;
                    x.correction.insert(at, w);
                }
                extension_presentation(&x).map_err(|source| CatalogError::Extension { id: id.into(), source })
            }
        }
    }

    /// Index of the last relator produced by each label of a relation list.
    fn relation_ends(&self, id: &str) -> Result<BTreeMap<&str, usize>, CatalogError> {
        let Source::Relations { relations, .. } = &self.get(id)?.source else {
            return Ok(BTreeMap::new());
        };
        let mut out = BTreeMap::new();
        let mut at = 0;
        for r in relations {
            let k = r.relators().map(|v| v.len()).unwrap_or(0);
            at += k;
            if k > 0 {
                out.insert(r.label.as_str(), at - 1);
            }
        }
        Ok(out)
    }

    /// Text export: a header comment, the generator line, and one `rel:` line
    /// per relator with the printed relation as a comment above it.
    pub fn export_text(&self, id: &str) -> Result<String, CatalogError> {
        let e = self.get(id)?;
        let p = self.presentation(id)?;
        let mut s = format!("# {}: {}\n", e.id, e.theorem);
        s.push_str(&format!("gens: {}\n", p.generators.join(" ")));
        match &e.source {
            Source::Relations { relations, .. } => {
                let mut i = 0;
                for r in relations {
                    s.push_str(&format!("# {} {}\n", r.label, r.text));
                    let k = r.relators().map(|v| v.len()).unwrap_or(0);
                    for w in &p.relators[i..i + k] {
                        s.push_str(&format!("rel: {w}\n"));
                    }
                    i += k;
                }
            }
            Source::CentralExtension { kernel, base, .. } => {
                s.push_str(&format!("# central extension of {base} by {kernel}\n"));
                for w in &p.relators {
                    s.push_str(&format!("rel: {w}\n"));
                }
            }
        }
        Ok(s)
    }

    /// `catalog.json`: one record per entry.
    pub fn index_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|e| {
                let (g, n) = e.surface.gn();
                serde_json::json!({
                    "entry-id": e.id,
                    "g": g,
                    "n": n,
                    "theorem": e.theorem,
                    "quote": e.quote,
                })
            })
            .collect();
        serde_json::Value::Array(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_parses() {
        let c = Catalog::default();
        for e in &c.entries {
            let p = c.presentation(&e.id).unwrap_or_else(|err| panic!("{err}"));
            assert!(p.check().is_ok());
            assert_eq!(Presentation::parse_text(&c.export_text(&e.id).unwrap()).unwrap(), p, "{}", e.id);
        }
    }

    #[test]
    fn ids_unique_and_refs_resolve() {
        let c = Catalog::default();
        let mut ids: Vec<&str> = c.entries.iter().map(|e| e.id.as_str()).collect();
        ids.sort_unstable();
        let n = ids.len();
        ids.dedup();
        assert_eq!(ids.len(), n);
        for e in &c.entries {
            for cl in &e.claims {
                for r in cl.entry_refs() {
                    assert!(c.get(r).is_ok(), "{} refers to {r}", e.id);
                }
            }
            if let Source::CentralExtension { kernel, base, .. } = &e.source {
                assert!(c.get(kernel).is_ok() && c.get(base).is_ok());
            }
        }
    }

    #[test]
    fn generator_counts() {
        let c = Catalog::default();
        let gens = |id: &str| c.presentation(id).unwrap().generators.len();
        let p21 = c.presentation(&c.for_surface(2, 1).unwrap().id).unwrap();
        assert_eq!((p21.generators.len(), p21.relators.len()), (2, 1));
        assert_eq!(gens("pm-f1-4"), 9);
        assert_eq!(gens("f1-4"), 13);
        assert_eq!(gens(&c.for_surface(3, 2).unwrap().id), 10);
        assert_eq!(gens("f1-3"), 6);
        assert_eq!(gens("f2-3"), 9);
    }

    #[test]
    fn deterministic() {
        assert_eq!(catalog_entries(), catalog_entries());
        assert_eq!(Catalog::default().index_json(), Catalog::default().index_json());
    }

    #[test]
    fn index_shape() {
        let v = Catalog::default().index_json();
        let rows = v.as_array().unwrap();
        let f22 = rows.iter().find(|r| r["entry-id"] == "f2-2").unwrap();
        assert_eq!((f22["g"].as_u64(), f22["n"].as_u64()), (Some(2), Some(2)));
        for r in rows {
            let keys: Vec<&String> = r.as_object().unwrap().keys().collect();
            assert_eq!(keys.len(), 5);
        }
    }

    #[test]
    fn derived_symbols_are_substituted() {
        // every derived relation must be over the entry's generators once the
        // auxiliary symbols are replaced
        let c = Catalog::default();
        for e in &c.entries {
            let p = c.presentation(&e.id).unwrap();
            for set in &e.derived {
                let subs: BTreeMap<&str, Word> =
                    set.substitutions.iter().map(|(k, v)| (k.as_str(), crate::pres::parse_word(v).unwrap())).collect();
                for r in &set.relations {
                    for w in r.relators().unwrap() {
                        let w = w.substitute(&|g| subs.get(g).cloned());
                        for g in w.generators() {
                            assert!(p.has_generator(g), "{} {}: {g}", e.id, r.label);
                        }
                    }
                }
            }
        }
    }
}
