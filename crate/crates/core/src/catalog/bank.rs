//! Lantern, star and Klein-bottle relations, in the alphabets where they apply.

use super::Catalog;
use crate::pres::{parse_relation, Word};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BankRelator {
    pub name: String,
    pub relation: String,
    #[serde(skip)]
    pub words: Vec<Word>,
    /// Entries whose generators cover every letter of the relation.
    pub expressible_in: Vec<String>,
    /// Entries in whose abelianization the relation is asserted to hold.
    pub checked_in: Vec<String>,
}

const BANK: &[(&str, &str, &[&str])] = &[
    ("lantern", "A0 A1 A2 A3 = A12 A13 A23", &[]),
    ("lantern-cyclic", "A12 A13 A23 = A13 A23 A12", &[]),
    ("star", "(A1 A2 A3 B)^3 = C1 C2 C3", &["t3"]),
    ("star-two-holes", "(A1 A2^2 B)^3 = C1 C3", &["t2"]),
    ("star-remark", "(A1 A2^2 B)^3 = (A1^2 A2 B)^3", &["t2", "pm-f3-1", "f3-1"]),
    ("star-punctured", "(A1 A2 A3 B)^3 = 1", &["pm-f3-2"]),
    ("star-one-point", "(A1 A2^2 B)^3 = 1", &["pm-f3-1"]),
    ("star-closed", "(A1^3 B)^3 = 1", &["f3-0"]),
    ("star-m32", "(A1 A2 A3 B)^3 = C1 C2", &["f3-2", "f3-2-ext"]),
    ("lantern-cyclic-1-4", "A4 A34 A3^-1 = A34 A3^-1 A4 = A3^-1 A4 A34", &["pm-f1-4", "f1-4"]),
    ("k2rel", "(A2 U)^2 = (D2 U)^2 = C1 C2", &["f2-2-ext"]),
    ("k2rel-quotient", "(A2 U)^2 = (D2 U)^2", &["pm-f2-2", "f2-2", "pm-f2-3", "f2-3"]),
];

/// Each relation tagged with the entries able to express it and the entries
/// where it is checked.
pub fn lantern_star_relator_bank() -> Vec<BankRelator> {
    let cat = Catalog::default();
    let alphabets: Vec<(String, Vec<String>)> =
        cat.entries.iter().filter_map(|e| cat.presentation(&e.id).ok().map(|p| (e.id.clone(), p.generators))).collect();
    BANK.iter()
        .map(|(name, rel, checked)| {
            let words = parse_relation(rel).expect("bank relations parse");
            let expressible_in = alphabets
                .iter()
                .filter(|(_, gens)| words.iter().all(|w| w.generators().iter().all(|g| gens.iter().any(|h| h == g))))
                .map(|(id, _)| id.clone())
                .collect();
            BankRelator {
                name: name.to_string(),
                relation: rel.to_string(),
                words,
                expressible_in,
                checked_in: checked.iter().map(|s| s.to_string()).collect(),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pres::abelian::abelian_consequence_check;
    use crate::pres::Presentation;

    #[test]
    fn checked_entries_can_express() {
        for b in lantern_star_relator_bank() {
            for id in &b.checked_in {
                assert!(b.expressible_in.contains(id), "{} in {id}", b.name);
            }
        }
    }

    #[test]
    fn star_tags() {
        let bank = lantern_star_relator_bank();
        let star = bank.iter().find(|b| b.name == "star").unwrap();
        assert!(star.expressible_in.contains(&"t3".to_string()));
        assert!(!star.expressible_in.contains(&"pm-f3-2".to_string()));
        let p = bank.iter().find(|b| b.name == "star-punctured").unwrap();
        assert!(p.expressible_in.contains(&"pm-f3-2".to_string()));
    }

    #[test]
    fn cyclic_lantern_is_abelian_trivial() {
        let p = Presentation::parse_text("gens: A0 A1 A2 A3 A12 A13 A23\n").unwrap();
        let b = lantern_star_relator_bank();
        let cyc = b.iter().find(|b| b.name == "lantern-cyclic").unwrap();
        assert_eq!(abelian_consequence_check(&p, &cyc.words), vec![true]);
        let l = b.iter().find(|b| b.name == "lantern").unwrap();
        assert_eq!(abelian_consequence_check(&p, &l.words), vec![false]);
    }
}
