//! The quotient of the ordered curve complex by the mapping class group, up to
//! dimension two, with maximal trees and determinability marks.

pub mod census;
pub mod closure;
pub mod enumerate;
pub mod g1;
pub mod quotient;
pub mod tree;

pub use census::{vertex_orbit_census, Census};
pub use closure::{asymmetric_loops, determinability_closure, determinability_closure_ordered};
pub use enumerate::{enumerate_orbit_simplices, Enumerator, Level, DEFAULT_MAX_CANDIDATES};
pub use g1::{g1_symbolic_complex, VertexG1};
pub use quotient::build_quotient_complex;
pub use tree::build_maximal_tree;

use crate::diagram::{CutDiagram, DiagramError};
use crate::surface::{Surface, SurfaceError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ComplexError {
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("more than {cap} candidate diagrams; raise the cap")]
    ResourceLimit { cap: u64 },
    #[error("not a maximal tree: {0}")]
    NotATree(String),
    #[error("malformed complex: {0}")]
    Malformed(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Vertex {
    pub id: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rep: Option<CutDiagram>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g1: Option<VertexG1>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Edge {
    pub id: usize,
    pub src: usize,
    pub dst: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rep: Option<CutDiagram>,
    /// the edge with the two curves swapped
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reverse: Option<usize>,
}

/// Triangle `[a, b, c]` on vertices `u, v, w`: `a = <u,v>`, `b = <v,w>`, `c = <u,w>`.
pub type Triangle = [usize; 3];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuotientComplex {
    pub target: Surface,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    pub triangles: Vec<Triangle>,
}

impl QuotientComplex {
    /// Check ids and that every triangle composes head to tail.
    pub fn check(&self) -> Result<(), ComplexError> {
        let bad = |m: String| Err(ComplexError::Malformed(m));
        for (i, v) in self.vertices.iter().enumerate() {
            if v.id != i {
                return bad(format!("vertex {i} has id {}", v.id));
            }
        }
        let nv = self.vertices.len();
        for (i, e) in self.edges.iter().enumerate() {
            if e.id != i || e.src >= nv || e.dst >= nv {
                return bad(format!("edge {i} is inconsistent"));
            }
            if let Some(r) = e.reverse {
                match self.edges.get(r) {
                    Some(f) if f.src == e.dst && f.dst == e.src => {}
                    _ => return bad(format!("edge {i} has a bad reverse")),
                }
            }
        }
        for t in &self.triangles {
            let [a, b, c] = match t.map(|e| self.edges.get(e)) {
                [Some(a), Some(b), Some(c)] => [a, b, c],
                _ => return bad(format!("triangle {t:?} uses an unknown edge")),
            };
            if !(c.src == a.src && a.dst == b.src && b.dst == c.dst) {
                return bad(format!("triangle {t:?} does not compose"));
            }
        }
        Ok(())
    }

    pub fn is_g1_symbolic(&self) -> bool {
        !self.vertices.is_empty() && self.vertices.iter().all(|v| v.rep.is_none() && v.g1.is_some())
    }
}

/// The complex together with a tree and the determinable edges, as written to disk.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComplexDocument {
    pub target: Surface,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    pub triangles: Vec<Triangle>,
    #[serde(default)]
    pub tree: Vec<usize>,
    #[serde(default)]
    pub determinable: Vec<usize>,
}

impl ComplexDocument {
    pub fn new(x: QuotientComplex, tree: Vec<usize>, determinable: Vec<usize>) -> Self {
        let QuotientComplex { target, vertices, edges, triangles } = x;
        ComplexDocument { target, vertices, edges, triangles, tree, determinable }
    }

    pub fn complex(&self) -> QuotientComplex {
        QuotientComplex {
            target: self.target,
            vertices: self.vertices.clone(),
            edges: self.edges.clone(),
            triangles: self.triangles.clone(),
        }
    }
}
