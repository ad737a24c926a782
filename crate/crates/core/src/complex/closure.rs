//! Propagation of determinability through triangles.
//!
//! An edge and its reverse are treated as one class: once one of them is
//! determinable, so is the other.

use super::QuotientComplex;
use std::collections::BTreeSet;

fn classes(x: &QuotientComplex, pair_reverse: bool) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..x.edges.len()).collect();
    fn root(p: &mut [usize], mut a: usize) -> usize {
        while p[a] != a {
            p[a] = p[p[a]];
            a = p[a];
        }
        a
    }
    if pair_reverse {
        for e in &x.edges {
            if let Some(r) = e.reverse {
                let (a, b) = (root(&mut parent, e.id), root(&mut parent, r));
                parent[a] = b;
            }
        }
    }
    (0..x.edges.len()).map(|e| root(&mut parent, e)).collect()
}

fn propagate(x: &QuotientComplex, tree: &[usize], pair_reverse: bool) -> BTreeSet<usize> {
    let class = classes(x, pair_reverse);
    let mut marked = vec![false; x.edges.len()];
    for &e in tree {
        marked[class[e]] = true;
    }
    loop {
        let mut changed = false;
        for t in &x.triangles {
            let c = t.map(|e| class[e]);
            let known = c.iter().filter(|&&k| marked[k]).count();
            if known == 2 {
                for k in c {
                    marked[k] = true;
                }
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    (0..x.edges.len()).filter(|&e| marked[class[e]]).collect()
}

/// Least fixpoint from `tree`: a triangle with two determinable edges makes
/// its third edge determinable.
pub fn determinability_closure(x: &QuotientComplex, tree: &[usize]) -> BTreeSet<usize> {
    propagate(x, tree, true)
}

/// The same fixpoint with an edge and its reverse kept apart.
pub fn determinability_closure_ordered(x: &QuotientComplex, tree: &[usize]) -> BTreeSet<usize> {
    propagate(x, tree, false)
}

/// Loops whose swapped ordering is a different orbit, or was not found.
pub fn asymmetric_loops(x: &QuotientComplex) -> Vec<usize> {
    x.edges.iter().filter(|e| e.src == e.dst && e.reverse != Some(e.id)).map(|e| e.id).collect()
}
