//! The graph Γ(n,k)_q: non-degenerate `[n,k]_q` codes, adjacent when they
//! meet in a `(k-1)`-dimensional subspace.

mod bits;
mod cliques;
mod verify;

use std::collections::{HashMap, VecDeque};

use rayon::prelude::*;
use thiserror::Error;

use crate::codespace::{enumerate_codes, CodeError, Subspace};
use crate::gf::{Field, GfError};

pub use bits::{BitRelation, BitSet};
pub use cliques::{
    bron_kerbosch, classify_maximal_cliques, hyperplane_sections, is_maximal_clique, line_set,
    section_by_functional, star_members, star_restricted, star_size_formula, top_members,
    top_restricted, CliqueKind, CliqueRecord, HyperplaneSections,
};
pub(crate) use verify::check_sections;
pub use verify::{
    verify_cliques, verify_connectivity, verify_separation, verify_star_propositions,
    separation_checks, verify_star_sizes, verify_top_bounds, verify_top_sections, SeparationCheck,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("need 1 < k < n-1, got n = {n}, k = {k}")]
    ParameterOutOfRange { n: usize, k: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("subspace {0} is not contained in {1}")]
    NotIncident(String, String),
    #[error("c(S) = {c} is outside 1..={max}")]
    InvalidProfile { c: usize, max: usize },
    #[error("the functional is zero")]
    ZeroFunctional,
    #[error("{0} is contained in a coordinate hyperplane")]
    DegenerateInput(String),
    #[error("vertices {0} and {1} are not adjacent")]
    NotAClique(usize, usize),
    #[error(transparent)]
    Field(#[from] GfError),
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// Whether two `k`-dimensional subspaces meet in dimension `k - 1`.
pub fn adjacent(field: &Field, x: &Subspace, y: &Subspace) -> Result<bool, GraphError> {
    if x.ambient_dim() != y.ambient_dim() || x.dim() != y.dim() {
        return Err(GraphError::DimensionMismatch(format!(
            "[{},{}] vs [{},{}]",
            x.ambient_dim(),
            x.dim(),
            y.ambient_dim(),
            y.dim()
        )));
    }
    Ok(x.sum_dim(field, y) == x.dim() + 1)
}

/// Γ(n,k)_q with its vertex index and packed adjacency.
#[derive(Debug, Clone)]
pub struct CodeGraph {
    n: usize,
    k: usize,
    field: Field,
    vertices: Vec<Subspace>,
    index: HashMap<Subspace, usize>,
    adjacency: BitRelation,
}

/// Builds Γ(n,k)_q for `1 < k < n - 1`.
pub fn build_graph(n: usize, k: usize, q: u32) -> Result<CodeGraph, GraphError> {
    if !(k > 1 && k + 1 < n) {
        return Err(GraphError::ParameterOutOfRange { n, k });
    }
    let field = Field::new(q)?;
    let vertices = enumerate_codes(n, k, q).collect();
    Ok(CodeGraph::from_vertices(field, n, k, vertices))
}

impl CodeGraph {
    /// Graph on an arbitrary list of distinct `k`-dimensional subspaces,
    /// with Grassmann adjacency. No range checks on `(n, k)`.
    pub fn from_vertices(field: Field, n: usize, k: usize, vertices: Vec<Subspace>) -> CodeGraph {
        assert!(
            vertices.iter().all(|v| v.ambient_dim() == n && v.dim() == k),
            "every vertex must be a {k}-dimensional subspace of GF(q)^{n}"
        );
        let index: HashMap<Subspace, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i))
            .collect();
        assert_eq!(index.len(), vertices.len(), "vertices must be distinct");
        let rows: Vec<BitSet> = (0..vertices.len())
            .into_par_iter()
            .map(|i| {
                let mut row = BitSet::new(vertices.len());
                for (j, y) in vertices.iter().enumerate() {
                    if j != i && vertices[i].sum_dim(&field, y) == k + 1 {
                        row.insert(j);
                    }
                }
                row
            })
            .collect();
        CodeGraph {
            n,
            k,
            field,
            vertices,
            index,
            adjacency: BitRelation::from_rows(rows),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn q(&self) -> u32 {
        self.field.order()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn vertices(&self) -> &[Subspace] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &Subspace {
        &self.vertices[i]
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, s: &Subspace) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn adjacency(&self) -> &BitRelation {
        &self.adjacency
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency.contains(i, j)
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency.row(i).iter()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency.row(i).len()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.len()).map(|i| self.degree(i)).sum::<usize>() / 2
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.len()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for w in self.neighbors(v) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct Connectivity {
    pub connected: bool,
    /// Largest finite distance between two vertices.
    pub diameter: usize,
}

pub fn connectivity(g: &CodeGraph) -> Connectivity {
    if g.is_empty() {
        return Connectivity {
            connected: true,
            diameter: 0,
        };
    }
    let connected = g.distances_from(0).iter().all(Option::is_some);
    let diameter = (0..g.len())
        .into_par_iter()
        .map(|s| g.distances_from(s).into_iter().flatten().max().unwrap_or(0))
        .max()
        .unwrap_or(0);
    Connectivity {
        connected,
        diameter,
    }
}
