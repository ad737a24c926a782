//! Abelianization of finitely presented groups.

use super::snf::{smith_normal_form, IntMatrix, Snf};
use super::{Presentation, Word};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::fmt;

/// `Z^free_rank ⊕ Z/t1 ⊕ ... ⊕ Z/tk`, with `t1 | t2 | ...` and every `ti > 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn free(rank: usize) -> Self {
        AbelianGroup { free_rank: rank, torsion: vec![] }
    }

    pub fn new(free_rank: usize, torsion: &[u64]) -> Self {
        let mut g = AbelianGroup { free_rank, torsion: vec![] };
        g.torsion = invariant_factors(torsion.iter().map(|&t| BigInt::from(t)).collect());
        g
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        let mut t = self.torsion.clone();
        t.extend(other.torsion.iter().cloned());
        AbelianGroup { free_rank: self.free_rank + other.free_rank, torsion: invariant_factors(t) }
    }
}

/// Normalise arbitrary cyclic orders into invariant factors.
fn invariant_factors(orders: Vec<BigInt>) -> Vec<BigInt> {
    let n = orders.len();
    let mut m = IntMatrix::zeros(n, n);
    for (i, o) in orders.into_iter().enumerate() {
        m.set(i, i, o);
    }
    smith_normal_form(&m).diagonal.into_iter().filter(|x| *x > BigInt::one()).collect()
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            k => parts.push(format!("Z^{k}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" x "))
        }
    }
}

pub fn exponent_vector(p: &Presentation, w: &Word) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); p.generators.len()];
    for l in &w.letters {
        if let Some(i) = p.gen_index(&l.gen) {
            v[i] += l.exp as i64;
        }
    }
    v
}

pub fn relation_matrix(p: &Presentation) -> IntMatrix {
    let n = p.generators.len();
    let mut m = IntMatrix::zeros(p.relators.len(), n);
    for (i, r) in p.relators.iter().enumerate() {
        for (j, x) in exponent_vector(p, r).into_iter().enumerate() {
            m.set(i, j, x);
        }
    }
    m
}

/// Abelianized presentation with its Smith form, reusable for membership tests.
pub struct AbelianData {
    pub group: AbelianGroup,
    snf: Snf,
}

impl AbelianData {
    pub fn new(p: &Presentation) -> Self {
        let snf = smith_normal_form(&relation_matrix(p));
        let torsion = snf.diagonal.iter().filter(|x| **x > BigInt::one()).cloned().collect();
        let group = AbelianGroup { free_rank: p.generators.len() - snf.rank, torsion };
        AbelianData { group, snf }
    }

    /// Whether an exponent vector lies in the row lattice of the relation matrix.
    pub fn in_relation_lattice(&self, v: &[BigInt]) -> bool {
        let w = self.snf.v.vec_mul(v);
        w.iter().enumerate().all(
            |(j, x)| {
                if j < self.snf.rank {
                    x.is_multiple_of(&self.snf.diagonal[j])
                } else {
                    x.is_zero()
                }
            },
        )
    }
}

pub fn abelianize(p: &Presentation) -> AbelianGroup {
    AbelianData::new(p).group
}

/// For each word, whether it is trivial in the abelianization of `p`.
pub fn abelian_consequence_check(p: &Presentation, claimed: &[Word]) -> Vec<bool> {
    let data = AbelianData::new(p);
    claimed.iter().map(|w| data.in_relation_lattice(&exponent_vector(p, w))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(s: &str) -> Presentation {
        Presentation::parse_text(s).unwrap()
    }

    #[test]
    fn small_groups() {
        let g = abelianize(&pres("gens: A1 U\nrel: U A1 U^-1 = A1^-1\n"));
        assert_eq!(g, AbelianGroup::new(1, &[2]));
        assert_eq!(g.to_string(), "Z x Z/2");
        let k = abelianize(&pres("gens: a b\nrel: a a\nrel: b b\nrel: a b a b\n"));
        assert_eq!(k.to_string(), "Z/2 x Z/2");
        assert_eq!(abelianize(&pres("gens:\n")).to_string(), "0");
        assert_eq!(abelianize(&pres("gens: a b c\n")).to_string(), "Z^3");
    }

    #[test]
    fn direct_sum_normalises() {
        let a = AbelianGroup::new(0, &[2, 3]);
        assert_eq!(a.torsion, vec![BigInt::from(6)]);
        assert_eq!(a.direct_sum(&AbelianGroup::new(1, &[4])).to_string(), "Z x Z/2 x Z/12");
    }

    #[test]
    fn consequences() {
        let p = pres("gens: a b\nrel: a a\nrel: a b a^-1 b^-1\n");
        let ws = ["a^-1 a^-1 a^-1 a^-1", "a", "b a b^-1 a", "b"].map(|s| super::super::parse_word(s).unwrap());
        assert_eq!(abelian_consequence_check(&p, &ws), vec![true, false, true, false]);
    }
}
