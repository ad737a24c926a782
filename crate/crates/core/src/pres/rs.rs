//! Reidemeister–Schreier rewriting for the kernel of a sign map `G -> Z/2`.
//!
//! Transversal `{1, t}` with `t` the first generator of sign -1. Schreier
//! generators are named `x_0` and `x_1` after the generator and the coset
//! they start from; `t_0` is trivial and removed.

use super::{free_reduce, Letter, Presentation, Word};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RsError {
    #[error("no sign given for generator `{0}`")]
    MissingSign(String),
    #[error("sign of `{0}` must be 1 or -1")]
    BadSign(String),
    #[error("relator {0} has sign -1, so it is not in the subgroup")]
    RelatorNotInSubgroup(usize),
    #[error("every sign is +1, the subgroup has index 1")]
    Index1,
}

#[derive(Debug, Clone)]
pub struct RsResult {
    pub presentation: Presentation,
    /// Schreier generator name and its value as a word in the original generators.
    pub definitions: Vec<(String, Word)>,
}

pub fn reidemeister_schreier_index2(p: &Presentation, sign: &BTreeMap<String, i8>) -> Result<RsResult, RsError> {
    let mut flip = Vec::with_capacity(p.generators.len());
    for g in &p.generators {
        match sign.get(g) {
            None => return Err(RsError::MissingSign(g.clone())),
            Some(1) => flip.push(false),
            Some(-1) => flip.push(true),
            Some(_) => return Err(RsError::BadSign(g.clone())),
        }
    }
    let t = flip.iter().position(|&f| f).ok_or(RsError::Index1)?;
    let flips = |name: &str| flip[p.gen_index(name).expect("checked presentation")];
    for (i, r) in p.relators.iter().enumerate() {
        if r.letters.iter().filter(|l| flips(&l.gen)).count() % 2 == 1 {
            return Err(RsError::RelatorNotInSubgroup(i));
        }
    }

    let tname = &p.generators[t];
    let name = |x: &str, c: usize| format!("{x}_{c}");
    let rep = |c: usize| if c == 0 { Word::identity() } else { Word::gen(tname.clone()) };

    let mut generators = Vec::new();
    let mut definitions = Vec::new();
    for c in 0..2 {
        for (i, x) in p.generators.iter().enumerate() {
            if c == 0 && i == t {
                continue;
            }
            let target = c ^ flip[i] as usize;
            let def = free_reduce(&rep(c).concat(&Word::gen(x.clone())).concat(&rep(target).inverse()));
            generators.push(name(x, c));
            definitions.push((name(x, c), def));
        }
    }

    let rewrite = |w: &Word, start: usize| -> Word {
        let mut c = start;
        let mut out = Vec::new();
        for l in &w.letters {
            let f = flips(&l.gen) as usize;
            if l.exp == 1 {
                if !(c == 0 && l.gen == *tname) {
                    out.push(Letter::new(name(&l.gen, c), 1));
                }
                c ^= f;
            } else {
                c ^= f;
                if !(c == 0 && l.gen == *tname) {
                    out.push(Letter::new(name(&l.gen, c), -1));
                }
            }
        }
        debug_assert_eq!(c, start);
        free_reduce(&Word::from_letters(out))
    };

    let mut relators = Vec::new();
    for c in 0..2 {
        for r in &p.relators {
            relators.push(rewrite(r, c));
        }
    }
    let presentation = Presentation { generators, relators, extended: p.extended };
    Ok(RsResult { presentation, definitions })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pres::abelian::abelianize;
    use proptest::prelude::*;

    fn signs(p: &Presentation, s: &[i8]) -> BTreeMap<String, i8> {
        p.generators.iter().cloned().zip(s.iter().copied()).collect()
    }

    #[test]
    fn free_group_rank_two() {
        let p = Presentation::parse_text("gens: a x\n").unwrap();
        let r = reidemeister_schreier_index2(&p, &signs(&p, &[1, -1])).unwrap();
        assert_eq!(r.presentation.generators, vec!["a_0", "a_1", "x_1"]);
        assert!(r.presentation.relators.is_empty());
        assert_eq!(r.definitions[1].1.to_string(), "x a x^-1");
        assert_eq!(r.definitions[2].1.to_string(), "x x");
    }

    #[test]
    fn closed_surface_group() {
        // kernel of the orientation character of the Klein bottle group is Z^2
        let p = Presentation::parse_text("gens: x y\nrel: x x y y\n").unwrap();
        let r = reidemeister_schreier_index2(&p, &signs(&p, &[-1, -1])).unwrap();
        assert_eq!(r.presentation.generators.len(), 3);
        assert_eq!(r.presentation.relators.len(), 2);
        assert_eq!(abelianize(&r.presentation).to_string(), "Z^2");
    }

    #[test]
    fn rejects_bad_signs() {
        let p = Presentation::parse_text("gens: x y\nrel: x y\n").unwrap();
        assert_eq!(
            reidemeister_schreier_index2(&p, &signs(&p, &[-1, 1])).unwrap_err(),
            RsError::RelatorNotInSubgroup(0)
        );
        assert_eq!(reidemeister_schreier_index2(&p, &signs(&p, &[1, 1])).unwrap_err(), RsError::Index1);
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 256, rng_seed: proptest::test_runner::RngSeed::Fixed(0x5eed), ..ProptestConfig::default() })]
        #[test]
        fn nielsen_schreier(n in 1usize..=8, mask in 1u32..256) {
            let mask = mask & ((1 << n) - 1);
            prop_assume!(mask != 0);
            let gens: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
            let p = Presentation::new(gens, vec![]).unwrap();
            let s: Vec<i8> = (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
            let r = reidemeister_schreier_index2(&p, &signs(&p, &s)).unwrap();
            prop_assert_eq!(r.presentation.generators.len(), 2 * n - 1);
            prop_assert!(r.presentation.relators.is_empty());
        }

        #[test]
        fn euler_characteristic_law(nrel in 0usize..4, lens in prop::collection::vec(1usize..4, 4)) {
            // relators x_i^(2k) always lie in the kernel when every sign is -1
            let gens: Vec<String> = (0..3).map(|i| format!("x{i}")).collect();
            let rels: Vec<Word> = (0..nrel).map(|i| Word::gen(gens[i % 3].clone()).pow(2 * lens[i] as i64)).collect();
            let p = Presentation::new(gens, rels).unwrap();
            let r = reidemeister_schreier_index2(&p, &signs(&p, &[-1, -1, -1])).unwrap();
            let before = p.generators.len() as i64 - p.relators.len() as i64;
            let after = r.presentation.generators.len() as i64 - r.presentation.relators.len() as i64;
            prop_assert_eq!(after, 2 * before - 1);
        }
    }
}
