//! Coset enumeration, HLT strategy with coincidence processing.

use super::{Presentation, Word};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TcError {
    #[error("coset enumeration exceeded {0} cosets")]
    OutOfBounds(usize),
    #[error("subgroup word uses unknown generator `{0}`")]
    UnknownGenerator(String),
}

const NONE: usize = usize::MAX;

struct Table {
    /// columns: generator i at 2i, its inverse at 2i+1
    rows: Vec<Vec<usize>>,
    parent: Vec<usize>,
    ncols: usize,
    live: usize,
    max: usize,
    queue: Vec<usize>,
}

impl Table {
    fn new(ngens: usize, max: usize) -> Self {
        let ncols = 2 * ngens;
        Table { rows: vec![vec![NONE; ncols]], parent: vec![0], ncols, live: 1, max, queue: vec![] }
    }

    fn is_live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn find(&mut self, mut c: usize) -> usize {
        let mut root = c;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[c] != root {
            let next = self.parent[c];
            self.parent[c] = root;
            c = next;
        }
        root
    }

    fn define(&mut self, c: usize, x: usize) -> Result<(), TcError> {
        if self.live >= self.max {
            return Err(TcError::OutOfBounds(self.max));
        }
        let d = self.rows.len();
        self.rows.push(vec![NONE; self.ncols]);
        self.parent.push(d);
        self.live += 1;
        self.rows[c][x] = d;
        self.rows[d][x ^ 1] = c;
        Ok(())
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.parent[hi] = lo;
            self.live -= 1;
            self.queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let g = self.queue[i];
            i += 1;
            for x in 0..self.ncols {
                let d = self.rows[g][x];
                if d == NONE {
                    continue;
                }
                self.rows[d][x ^ 1] = NONE;
                let mu = self.find(g);
                let nu = self.find(d);
                if self.rows[mu][x] != NONE {
                    let t = self.rows[mu][x];
                    self.merge(nu, t);
                } else if self.rows[nu][x ^ 1] != NONE {
                    let t = self.rows[nu][x ^ 1];
                    self.merge(mu, t);
                } else {
                    self.rows[mu][x] = nu;
                    self.rows[nu][x ^ 1] = mu;
                }
            }
        }
    }

    fn scan_and_fill(&mut self, a: usize, w: &[usize]) -> Result<(), TcError> {
        if w.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (a, a);
        let (mut i, mut j) = (0usize, w.len() as isize - 1);
        loop {
            while (i as isize) <= j && self.rows[f][w[i]] != NONE {
                f = self.rows[f][w[i]];
                i += 1;
            }
            if (i as isize) > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i as isize && self.rows[b][w[j as usize] ^ 1] != NONE {
                b = self.rows[b][w[j as usize] ^ 1];
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            } else if j == i as isize {
                self.rows[f][w[i]] = b;
                self.rows[b][w[i] ^ 1] = f;
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }
}

fn encode(p: &Presentation, w: &Word) -> Result<Vec<usize>, TcError> {
    w.letters
        .iter()
        .map(|l| {
            let i = p.gen_index(&l.gen).ok_or_else(|| TcError::UnknownGenerator(l.gen.clone()))?;
            Ok(2 * i + (l.exp == -1) as usize)
        })
        .collect()
}

/// Index of the subgroup generated by `subgroup` in the group presented by `p`.
pub fn todd_coxeter(p: &Presentation, subgroup: &[Word], max_cosets: usize) -> Result<usize, TcError> {
    let rels: Vec<Vec<usize>> = p.relators.iter().map(|r| encode(p, r)).collect::<Result<_, _>>()?;
    let subs: Vec<Vec<usize>> = subgroup.iter().map(|w| encode(p, w)).collect::<Result<_, _>>()?;
    let mut t = Table::new(p.generators.len(), max_cosets.max(1));
    for w in &subs {
        t.scan_and_fill(0, w)?;
    }
    let mut a = 0;
    while a < t.rows.len() {
        if t.is_live(a) {
            for r in &rels {
                if !t.is_live(a) {
                    break;
                }
                t.scan_and_fill(a, r)?;
            }
            if t.is_live(a) {
                for x in 0..t.ncols {
                    if t.rows[a][x] == NONE {
                        t.define(a, x)?;
                    }
                }
            }
        }
        a += 1;
    }
    Ok(t.live)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pres::parse_word;

    fn tc(src: &str, sub: &[&str], max: usize) -> Result<usize, TcError> {
        let p = Presentation::parse_text(src).unwrap();
        let sub: Vec<Word> = sub.iter().map(|s| parse_word(s).unwrap()).collect();
        todd_coxeter(&p, &sub, max)
    }

    #[test]
    fn finite_groups() {
        let klein = "gens: a b\nrel: a a\nrel: b b\nrel: a b a b\n";
        assert_eq!(tc(klein, &[], 100), Ok(4));
        assert_eq!(tc(klein, &["a"], 100), Ok(2));
        let s3 = "gens: s t\nrel: s s\nrel: t t\nrel: s t s t s t\n";
        assert_eq!(tc(s3, &[], 100), Ok(6));
        assert_eq!(tc(s3, &["s"], 100), Ok(3));
        // A5 as the (2,3,5) triangle group
        let a5 = "gens: a b\nrel: a a\nrel: b b b\nrel: (a b)^5\n";
        assert_eq!(tc(a5, &[], 1000), Ok(60));
        assert_eq!(tc("gens:\n", &[], 10), Ok(1));
    }

    #[test]
    fn infinite_index_hits_bound() {
        let p = "gens: A1 U\nrel: U A1 U^-1 = A1^-1\n";
        assert_eq!(tc(p, &["A1"], 10_000), Err(TcError::OutOfBounds(10_000)));
    }
}
