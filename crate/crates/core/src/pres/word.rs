//! Words in a free group over named generators.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub gen: String,
    pub exp: i8,
}

impl Letter {
    pub fn new(gen: impl Into<String>, exp: i8) -> Self {
        debug_assert!(exp == 1 || exp == -1);
        Letter { gen: gen.into(), exp }
    }

    pub fn inverse(&self) -> Letter {
        Letter { gen: self.gen.clone(), exp: -self.exp }
    }

    fn cancels(&self, other: &Letter) -> bool {
        self.gen == other.gen && self.exp == -other.exp
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    pub letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn gen(name: impl Into<String>) -> Self {
        Word { letters: vec![Letter::new(name, 1)] }
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    /// Build from `(name, ±1)` pairs.
    pub fn from_pairs<S: AsRef<str>>(pairs: &[(S, i8)]) -> Self {
        Word { letters: pairs.iter().map(|(g, e)| Letter::new(g.as_ref(), *e)).collect() }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(Letter::inverse).collect() }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        Word { letters }
    }

    pub fn mul(&self, other: &Word) -> Word {
        free_reduce(&self.concat(other))
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend(base.letters.iter().cloned());
        }
        Word { letters }
    }

    /// `x w x^-1`
    pub fn conjugate_by(&self, x: &Word) -> Word {
        x.concat(self).concat(&x.inverse())
    }

    pub fn exponent_sum(&self, gen: &str) -> i64 {
        self.letters.iter().filter(|l| l.gen == gen).map(|l| l.exp as i64).sum()
    }

    pub fn occurrences(&self, gen: &str) -> usize {
        self.letters.iter().filter(|l| l.gen == gen).count()
    }

    pub fn generators(&self) -> BTreeSet<&str> {
        self.letters.iter().map(|l| l.gen.as_str()).collect()
    }

    /// Replace every occurrence of each generator by a word.
    pub fn substitute(&self, f: &dyn Fn(&str) -> Option<Word>) -> Word {
        let mut out = Vec::new();
        for l in &self.letters {
            match f(&l.gen) {
                Some(w) if l.exp == 1 => out.extend(w.letters),
                Some(w) => out.extend(w.inverse().letters),
                None => out.push(l.clone()),
            }
        }
        Word { letters: out }
    }

    pub fn rotate(&self, k: usize) -> Word {
        if self.is_empty() {
            return self.clone();
        }
        let k = k % self.len();
        let mut letters = self.letters[k..].to_vec();
        letters.extend_from_slice(&self.letters[..k]);
        Word { letters }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if l.exp == 1 {
                write!(f, "{}", l.gen)?;
            } else {
                write!(f, "{}^-1", l.gen)?;
            }
        }
        Ok(())
    }
}

/// Cancel adjacent inverse pairs.
pub fn free_reduce(w: &Word) -> Word {
    let mut out: Vec<Letter> = Vec::with_capacity(w.len());
    for l in &w.letters {
        if out.last().is_some_and(|last| last.cancels(l)) {
            out.pop();
        } else {
            out.push(l.clone());
        }
    }
    Word { letters: out }
}

/// Free reduction followed by removal of cancelling first/last letter pairs.
pub fn cyclic_reduce(w: &Word) -> Word {
    let r = free_reduce(w);
    let n = r.len();
    let mut i = 0;
    while i < n / 2 && r.letters[i].cancels(&r.letters[n - 1 - i]) {
        i += 1;
    }
    Word { letters: r.letters[i..n - i].to_vec() }
}

/// Lexicographically least rotation of `w` or its inverse, after cyclic reduction.
pub fn cyclic_normal_form(w: &Word) -> Word {
    let r = cyclic_reduce(w);
    let inv = r.inverse();
    (0..r.len().max(1)).flat_map(|k| [r.rotate(k), inv.rotate(k)]).min().unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(pairs: &[(&str, i8)]) -> Word {
        Word::from_pairs(pairs)
    }

    #[test]
    fn reduce_examples() {
        let x = w(&[("a", 1), ("b", 1), ("b", -1), ("a", -1), ("c", 1)]);
        assert_eq!(free_reduce(&x), w(&[("c", 1)]));
        let y = w(&[("a", 1), ("b", 1), ("c", 1), ("a", -1)]);
        assert_eq!(cyclic_reduce(&y), w(&[("b", 1), ("c", 1)]));
        assert_eq!(format!("{}", w(&[("U", 1), ("A1", -1)])), "U A1^-1");
    }

    #[test]
    fn normal_form_identifies_rotations_and_inverses() {
        let x = w(&[("a", 1), ("b", 1), ("a", -1), ("b", -1)]);
        let y = x.rotate(1).inverse();
        assert_eq!(cyclic_normal_form(&x), cyclic_normal_form(&y));
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        prop::collection::vec((0..4u8, any::<bool>()), 0..40).prop_map(|v| {
            Word::from_letters(
                v.into_iter().map(|(g, s)| Letter::new(format!("x{g}"), if s { 1 } else { -1 })).collect(),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 1000, rng_seed: proptest::test_runner::RngSeed::Fixed(0x5eed), ..ProptestConfig::default() })]
        #[test]
        fn free_reduce_idempotent(x in arb_word()) {
            let r = free_reduce(&x);
            prop_assert_eq!(free_reduce(&r), r.clone());
            let c = cyclic_reduce(&x);
            prop_assert_eq!(cyclic_reduce(&c), c);
        }

        #[test]
        fn inverse_cancels(x in arb_word()) {
            prop_assert!(free_reduce(&x.concat(&x.inverse())).is_empty());
        }
    }
}
