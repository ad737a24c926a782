//! Running every claim of the catalog.

use super::{lantern_star_relator_bank, Catalog, Claim};
use crate::pres::abelian::{abelian_consequence_check, abelianize, AbelianGroup};
use crate::pres::tietze::simplify;
use crate::pres::todd_coxeter::{todd_coxeter, TcError};
use crate::pres::{parse_relation, parse_word, Presentation, Word};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimStatus {
    Pass,
    Fail,
    Unknown,
}

impl fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClaimStatus::Pass => "pass",
            ClaimStatus::Fail => "fail",
            ClaimStatus::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimResult {
    pub claim: String,
    pub status: ClaimStatus,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EntryReport {
    pub id: String,
    pub claims: Vec<ClaimResult>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogReport {
    pub entries: Vec<EntryReport>,
}

impl CatalogReport {
    pub fn count(&self, s: ClaimStatus) -> usize {
        self.entries.iter().flat_map(|e| &e.claims).filter(|c| c.status == s).count()
    }

    pub fn all_ok(&self) -> bool {
        self.count(ClaimStatus::Fail) == 0
    }
}

fn result(claim: String, ok: bool, detail: String) -> ClaimResult {
    ClaimResult { claim, status: if ok { ClaimStatus::Pass } else { ClaimStatus::Fail }, detail }
}

fn fail(claim: String, detail: String) -> ClaimResult {
    ClaimResult { claim, status: ClaimStatus::Fail, detail }
}

fn substituted(relation: &str, subs: &[(String, String)]) -> Result<Vec<Word>, String> {
    let table: BTreeMap<&str, Word> =
        subs.iter().map(|(k, v)| parse_word(v).map(|w| (k.as_str(), w))).collect::<Result<_, _>>()?;
    Ok(parse_relation(relation)?.iter().map(|w| w.substitute(&|g| table.get(g).cloned())).collect())
}

struct Checker<'a> {
    cat: &'a Catalog,
    ab: BTreeMap<String, Result<AbelianGroup, String>>,
}

impl Checker<'_> {
    fn ab(&mut self, id: &str) -> Result<AbelianGroup, String> {
        if let Some(r) = self.ab.get(id) {
            return r.clone();
        }
        let r = self.cat.presentation(id).map(|p| abelianize(&p)).map_err(|e| e.to_string());
        self.ab.insert(id.into(), r.clone());
        r
    }

    fn check(&mut self, id: &str, p: &Presentation, claim: &Claim) -> ClaimResult {
        match claim {
            Claim::AbelianizationEquals { .. } => {
                let want = claim.expected_group().expect("abelian claim");
                let name = format!("abelianization = {want}");
                match self.ab(id) {
                    Ok(got) => result(name, got == want, format!("computed {got}")),
                    Err(e) => fail(name, e),
                }
            }
            Claim::IsomorphicToProductAb { left, right } => {
                let name = format!("ab = ab({left}) + ab({right})");
                match (self.ab(id), self.ab(left), self.ab(right)) {
                    (Ok(g), Ok(a), Ok(b)) => {
                        let s = a.direct_sum(&b);
                        result(name, g == s, format!("{g} vs {s}"))
                    }
                    (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => fail(name, e),
                }
            }
            Claim::AbelianizationMatches { other } => {
                let name = format!("ab = ab({other})");
                match (self.ab(id), self.ab(other)) {
                    (Ok(g), Ok(h)) => result(name, g == h, format!("{g} vs {h}")),
                    (Err(e), _) | (_, Err(e)) => fail(name, e),
                }
            }
            Claim::RelationHoldsAb { label, relation, substitutions } => {
                let name = format!("{label} holds in ab");
                match substituted(relation, substitutions) {
                    Ok(words) => {
                        if let Some(g) = words.iter().flat_map(|w| w.generators()).find(|g| !p.has_generator(g)) {
                            return fail(name, format!("`{g}` is not a generator"));
                        }
                        let ok = abelian_consequence_check(p, &words).iter().all(|&b| b);
                        result(name, ok, relation.clone())
                    }
                    Err(e) => fail(name, e),
                }
            }
            Claim::FiniteIndexEquals { subgroup, index, max_cosets } => {
                let name = format!("index of <{}> = {index}", subgroup.join(", "));
                let words: Result<Vec<Word>, String> = subgroup.iter().map(|s| parse_word(s)).collect();
                match words {
                    Err(e) => fail(name, e),
                    Ok(ws) => match todd_coxeter(p, &ws, *max_cosets) {
                        Ok(k) => result(name, k == *index, format!("computed {k}")),
                        Err(TcError::OutOfBounds(m)) => ClaimResult {
                            claim: name,
                            status: ClaimStatus::Unknown,
                            detail: format!("more than {m} cosets"),
                        },
                        Err(e) => fail(name, e.to_string()),
                    },
                }
            }
            Claim::FreeOfRank { rank } => {
                let name = format!("free of rank {rank}");
                let s = simplify(p);
                let ok = s.relators.is_empty() && s.generators.len() == *rank;
                result(name, ok, format!("{} generators, {} relators", s.generators.len(), s.relators.len()))
            }
        }
    }
}

fn entry_report(cat: &Catalog, checker: &mut Checker, id: &str) -> EntryReport {
    let Ok(e) = cat.get(id) else {
        return EntryReport { id: id.into(), claims: vec![fail("entry exists".into(), "unknown entry".into())] };
    };
    let p = match cat.presentation(id) {
        Ok(p) => p,
        Err(err) => {
            return EntryReport { id: id.into(), claims: vec![fail("presentation parses".into(), err.to_string())] };
        }
    };
    let mut claims: Vec<ClaimResult> = e.all_claims().iter().map(|c| checker.check(id, &p, c)).collect();
    for b in lantern_star_relator_bank() {
        if b.checked_in.iter().any(|x| x == id) {
            let c = Claim::RelationHoldsAb {
                label: format!("bank {}", b.name),
                relation: b.relation.clone(),
                substitutions: vec![],
            };
            claims.push(checker.check(id, &p, &c));
        }
    }
    EntryReport { id: id.into(), claims }
}

/// Check every claim of every entry.
pub fn verify_catalog() -> CatalogReport {
    let cat = Catalog::default();
    let mut checker = Checker { cat: &cat, ab: BTreeMap::new() };
    let ids: Vec<String> = cat.entries.iter().map(|e| e.id.clone()).collect();
    CatalogReport { entries: ids.iter().map(|id| entry_report(&cat, &mut checker, id)).collect() }
}

pub fn verify_entry(id: &str) -> EntryReport {
    let cat = Catalog::default();
    let mut checker = Checker { cat: &cat, ab: BTreeMap::new() };
    entry_report(&cat, &mut checker, id)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_verifies() {
        let r = verify_catalog();
        for e in &r.entries {
            for c in &e.claims {
                assert_ne!(c.status, ClaimStatus::Fail, "{}: {} ({})", e.id, c.claim, c.detail);
            }
        }
        assert_eq!(r.count(ClaimStatus::Unknown), 0);
    }

    #[test]
    fn report_is_deterministic() {
        assert_eq!(verify_entry("f2-2"), verify_entry("f2-2"));
    }

    #[test]
    fn wrong_claims_fail() {
        let mut cat = Catalog::default();
        let e = cat.entries.iter_mut().find(|e| e.id == "f2-1").unwrap();
        e.claims = vec![
            Claim::abelian(1, &[]),
            Claim::RelationHoldsAb { label: "x".into(), relation: "U = 1".into(), substitutions: vec![] },
            Claim::RelationHoldsAb { label: "y".into(), relation: "U^2 = q".into(), substitutions: vec![] },
            Claim::FiniteIndexEquals { subgroup: vec!["A1".into()], index: 2, max_cosets: 50 },
        ];
        let mut checker = Checker { cat: &cat, ab: BTreeMap::new() };
        let r = entry_report(&cat, &mut checker, "f2-1");
        let s: Vec<ClaimStatus> = r.claims.iter().map(|c| c.status).collect();
        assert_eq!(s, vec![ClaimStatus::Fail, ClaimStatus::Fail, ClaimStatus::Fail, ClaimStatus::Unknown]);
    }

    #[test]
    fn unknown_entry_fails() {
        assert_eq!(verify_entry("nope").claims[0].status, ClaimStatus::Fail);
    }
}
