//! Tietze transformations.
//!
//! A derivation witnesses that a word lies in the normal closure of the
//! relators: it is a list of `c r^e c^-1` factors whose product freely reduces
//! to the word.

use super::{cyclic_normal_form, cyclic_reduce, free_reduce, valid_name, Presentation, Word};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TietzeError {
    #[error("invalid move: {0}")]
    InvalidMove(String),
}

fn invalid<T>(msg: impl Into<String>) -> Result<T, TietzeError> {
    Err(TietzeError::InvalidMove(msg.into()))
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Derivation {
    /// `(conjugator, relator index, ±1)`
    pub factors: Vec<(Word, usize, i8)>,
}

impl Derivation {
    pub fn evaluate(&self, p: &Presentation) -> Result<Word, TietzeError> {
        let mut acc = Word::identity();
        for (c, idx, e) in &self.factors {
            let Some(r) = p.relators.get(*idx) else {
                return invalid(format!("derivation uses missing relator {idx}"));
            };
            let r = if *e < 0 { r.inverse() } else { r.clone() };
            acc = acc.concat(&r.conjugate_by(c));
        }
        Ok(free_reduce(&acc))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TietzeMove {
    AddGen { name: String, defining: Word },
    RemoveGen { name: String, relator: usize },
    AddRelator { word: Word, witness: Option<Derivation> },
    RemoveRedundantRelator { id: usize, witness: Option<Derivation> },
    Simplify,
}

pub fn tietze(p: &Presentation, mv: &TietzeMove) -> Result<Presentation, TietzeError> {
    match mv {
        TietzeMove::AddGen { name, defining } => add_gen(p, name, defining),
        TietzeMove::RemoveGen { name, relator } => remove_gen(p, name, *relator),
        TietzeMove::AddRelator { word, witness } => {
            check_letters(p, word)?;
            let mut out = p.clone();
            match witness {
                Some(d) => {
                    if d.evaluate(p)? != free_reduce(word) {
                        return invalid("witness does not derive the relator");
                    }
                }
                None => out.extended = true,
            }
            out.relators.push(free_reduce(word));
            Ok(out)
        }
        TietzeMove::RemoveRedundantRelator { id, witness } => {
            if *id >= p.relators.len() {
                return invalid(format!("no relator {id}"));
            }
            let mut out = p.clone();
            match witness {
                Some(d) => {
                    if d.factors.iter().any(|f| f.1 == *id) {
                        return invalid("witness uses the relator being removed");
                    }
                    if d.evaluate(p)? != free_reduce(&p.relators[*id]) {
                        return invalid("witness does not derive the relator");
                    }
                }
                None => out.extended = true,
            }
            out.relators.remove(*id);
            Ok(out)
        }
        TietzeMove::Simplify => Ok(simplify(p)),
    }
}

fn check_letters(p: &Presentation, w: &Word) -> Result<(), TietzeError> {
    for l in &w.letters {
        if !p.has_generator(&l.gen) {
            return invalid(format!("unknown generator `{}`", l.gen));
        }
    }
    Ok(())
}

fn add_gen(p: &Presentation, name: &str, defining: &Word) -> Result<Presentation, TietzeError> {
    if !valid_name(name) || p.has_generator(name) {
        return invalid(format!("cannot add generator `{name}`"));
    }
    check_letters(p, defining)?;
    let mut out = p.clone();
    out.generators.push(name.to_string());
    out.relators.push(free_reduce(&Word::gen(name).concat(&defining.inverse())));
    Ok(out)
}

/// Solve relator `idx` for `name`, which must occur in it exactly once.
fn solve_for(p: &Presentation, name: &str, idx: usize) -> Option<Word> {
    let r = cyclic_reduce(p.relators.get(idx)?);
    if r.occurrences(name) != 1 {
        return None;
    }
    let pos = r.letters.iter().position(|l| l.gen == name)?;
    let rot = r.rotate(pos);
    let rest = Word::from_letters(rot.letters[1..].to_vec());
    // name^e rest = 1
    Some(if rot.letters[0].exp == 1 { rest.inverse() } else { rest })
}

fn remove_gen(p: &Presentation, name: &str, idx: usize) -> Result<Presentation, TietzeError> {
    if !p.has_generator(name) {
        return invalid(format!("unknown generator `{name}`"));
    }
    let Some(value) = solve_for(p, name, idx) else {
        return invalid(format!("relator {idx} does not define `{name}`"));
    };
    Ok(eliminate(p, name, idx, &value))
}

fn eliminate(p: &Presentation, name: &str, idx: usize, value: &Word) -> Presentation {
    let subst = |g: &str| (g == name).then(|| value.clone());
    let relators = p
        .relators
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != idx)
        .map(|(_, r)| free_reduce(&r.substitute(&subst)))
        .collect();
    let generators = p.generators.iter().filter(|g| *g != name).cloned().collect();
    Presentation { generators, relators, extended: p.extended }
}

/// Reduce relators, drop trivial and repeated ones, and eliminate generators
/// occurring exactly once in some relator.
pub fn simplify(p: &Presentation) -> Presentation {
    let mut cur = tidy(p);
    let budget = 10 * total_len(&cur) + 1000;
    loop {
        let mut step = None;
        'search: for g in &cur.generators {
            let mut best: Option<(usize, usize)> = None;
            for (i, r) in cur.relators.iter().enumerate() {
                if r.occurrences(g) == 1 && best.is_none_or(|(_, len)| r.len() < len) {
                    best = Some((i, r.len()));
                }
            }
            if let Some((i, _)) = best {
                let value = solve_for(&cur, g, i).expect("single occurrence");
                let next = tidy(&eliminate(&cur, g, i, &value));
                if total_len(&next) <= budget {
                    step = Some(next);
                    break 'search;
                }
            }
        }
        match step {
            Some(next) => cur = next,
            None => return cur,
        }
    }
}

fn total_len(p: &Presentation) -> usize {
    p.relators.iter().map(Word::len).sum()
}

fn tidy(p: &Presentation) -> Presentation {
    let mut seen = BTreeSet::new();
    let mut relators = Vec::new();
    for r in &p.relators {
        let c = cyclic_reduce(r);
        if c.is_empty() {
            continue;
        }
        if seen.insert(cyclic_normal_form(&c)) {
            relators.push(c);
        }
    }
    Presentation { generators: p.generators.clone(), relators, extended: p.extended }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pres::abelian::abelianize;
    use crate::pres::{parse_word, Letter};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn pres(s: &str) -> Presentation {
        Presentation::parse_text(s).unwrap()
    }

    #[test]
    fn remove_gen_example() {
        let p = pres("gens: a b\nrel: b a^-2\n");
        let q = tietze(&p, &TietzeMove::RemoveGen { name: "b".into(), relator: 0 }).unwrap();
        assert_eq!(q, pres("gens: a\n"));
        assert!(
            tietze(&pres("gens: a b\nrel: b b a\n"), &TietzeMove::RemoveGen { name: "b".into(), relator: 0 }).is_err()
        );
    }

    #[test]
    fn add_gen_defines() {
        let p = pres("gens: A34 A4 B34\n");
        let d = parse_word("A34^-1 A4^-1 B34 A4 A34").unwrap();
        let q = tietze(&p, &TietzeMove::AddGen { name: "D".into(), defining: d }).unwrap();
        assert_eq!(q.relators[0].to_string(), "D A34^-1 A4^-1 B34^-1 A4 A34");
        assert!(!q.extended);
    }

    #[test]
    fn witnesses_are_checked() {
        let p = pres("gens: a b\nrel: a a\n");
        let w = parse_word("b a a b^-1").unwrap();
        let good = Derivation { factors: vec![(Word::gen("b"), 0, 1)] };
        let q = tietze(&p, &TietzeMove::AddRelator { word: w.clone(), witness: Some(good) }).unwrap();
        assert!(!q.extended);
        let bad = Derivation { factors: vec![(Word::gen("a"), 0, 1)] };
        assert!(tietze(&p, &TietzeMove::AddRelator { word: w.clone(), witness: Some(bad) }).is_err());
        let q = tietze(&p, &TietzeMove::AddRelator { word: w, witness: None }).unwrap();
        assert!(q.extended);
    }

    #[test]
    fn simplify_dedupes() {
        let p = pres("gens: a b\nrel: a b a^-1 b^-1\nrel: b a b^-1 a^-1\nrel: a a^-1\nrel: a^2\nrel: a^2\n");
        let q = simplify(&p);
        assert_eq!(q.relators.len(), 2);
        assert_eq!(abelianize(&p), abelianize(&q));
        let r = simplify(&pres("gens: a b c\nrel: c = a b\nrel: a b a b\n"));
        assert_eq!(r.generators, vec!["b", "c"]);
        assert_eq!(abelianize(&r).to_string(), "Z x Z/2");
    }

    fn random_word(rng: &mut ChaCha8Rng, gens: &[String], max: usize) -> Word {
        if gens.is_empty() {
            return Word::identity();
        }
        let len = rng.gen_range(0..=max);
        Word::from_letters(
            (0..len)
                .map(|_| {
                    let g = &gens[rng.gen_range(0..gens.len())];
                    Letter::new(g.clone(), if rng.gen_bool(0.5) { 1 } else { -1 })
                })
                .collect(),
        )
    }

    fn random_move(rng: &mut ChaCha8Rng, p: &Presentation, fresh: &mut usize) -> Option<TietzeMove> {
        match rng.gen_range(0..5) {
            0 => {
                *fresh += 1;
                let defining = random_word(rng, &p.generators, 4);
                Some(TietzeMove::AddGen { name: format!("n{fresh}"), defining })
            }
            1 => {
                let opts: Vec<(String, usize)> = p
                    .generators
                    .iter()
                    .flat_map(|g| (0..p.relators.len()).map(move |i| (g.clone(), i)))
                    .filter(|(g, i)| cyclic_reduce(&p.relators[*i]).occurrences(g) == 1)
                    .collect();
                let (name, relator) = opts.get(rng.gen_range(0..opts.len().max(1)))?.clone();
                Some(TietzeMove::RemoveGen { name, relator })
            }
            2 => {
                if p.relators.is_empty() {
                    return None;
                }
                let factors: Vec<(Word, usize, i8)> = (0..rng.gen_range(1..=3))
                    .map(|_| {
                        let c = random_word(rng, &p.generators, 3);
                        (c, rng.gen_range(0..p.relators.len()), if rng.gen_bool(0.5) { 1 } else { -1 })
                    })
                    .collect();
                let d = Derivation { factors };
                let word = d.evaluate(p).ok()?;
                Some(TietzeMove::AddRelator { word, witness: Some(d) })
            }
            3 => {
                // a relator that is an exact repeat of another is redundant
                let n = p.relators.len();
                let (i, j) = (0..n)
                    .flat_map(|i| (0..n).map(move |j| (i, j)))
                    .find(|&(i, j)| i != j && free_reduce(&p.relators[i]) == free_reduce(&p.relators[j]))?;
                let witness = Derivation { factors: vec![(Word::identity(), j, 1)] };
                Some(TietzeMove::RemoveRedundantRelator { id: i, witness: Some(witness) })
            }
            _ => Some(TietzeMove::Simplify),
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 100, rng_seed: proptest::test_runner::RngSeed::Fixed(0x5eed), ..ProptestConfig::default() })]
        #[test]
        fn moves_preserve_abelianization(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let gens: Vec<String> = (0..3).map(|i| format!("g{i}")).collect();
            let rels = (0..rng.gen_range(0..4)).map(|_| random_word(&mut rng, &gens, 6)).collect();
            let mut p = Presentation::new(gens, rels).unwrap();
            let ab = abelianize(&p);
            let mut fresh = 0;
            for _ in 0..8 {
                if let Some(mv) = random_move(&mut rng, &p, &mut fresh) {
                    p = tietze(&p, &mv).unwrap();
                    prop_assert!(!p.extended);
                    prop_assert_eq!(abelianize(&p), ab.clone());
                }
            }
        }
    }
}
