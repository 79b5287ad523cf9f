//! Stars, tops, lines and the maximal cliques of Γ(n,k)_q.
//!
//! A star is the set of `k`-subspaces through a `(k-1)`-subspace `S`; a top
//! is the set of `k`-subspaces inside a `(k+1)`-subspace `U`. Every maximal
//! clique of the Grassmann graph is one of these, so every maximal clique of
//! the restricted graph is the restriction of one. The classifier builds
//! those restrictions directly; [`bron_kerbosch`] is an unrelated generic
//! enumerator kept for cross-checking.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use super::{BitRelation, BitSet, CodeGraph, GraphError};
use crate::codespace::{enumerate_codes, enumerate_grassmannian, Subspace};
use crate::gf::{Elem, Field};
use crate::linalg::{self, Matrix};

fn span_with(field: &Field, base: &Subspace, v: Vec<Elem>) -> Subspace {
    let mut rows: Vec<Vec<Elem>> = base.rows().map(<[Elem]>::to_vec).collect();
    rows.push(v);
    Subspace::span(field, base.ambient_dim(), rows).expect("nonzero span")
}

/// Every subspace of dimension `dim S + 1` containing `S`, unrestricted.
///
/// These correspond to the points of a complement of `S`; the vectors
/// vanishing on the pivot columns of `S` form one.
pub fn star_members(field: &Field, s: &Subspace) -> Vec<Subspace> {
    let n = s.ambient_dim();
    let pivots = s.pivots();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    enumerate_grassmannian(free.len(), 1, field.order())
        .map(|point| {
            let mut v = vec![0; n];
            for (&c, &x) in free.iter().zip(point.row(0)) {
                v[c] = x;
            }
            span_with(field, s, v)
        })
        .collect()
}

fn check_dims(g: &CodeGraph, s: &Subspace, dim: usize, what: &str) -> Result<(), GraphError> {
    if s.ambient_dim() != g.n() || s.dim() != dim || s.field_order() != g.q() {
        return Err(GraphError::DimensionMismatch(format!(
            "{what} must be a {dim}-dimensional subspace of GF({})^{}, got dimension {} in GF({})^{}",
            g.q(),
            g.n(),
            s.dim(),
            s.field_order(),
            s.ambient_dim()
        )));
    }
    Ok(())
}

/// Vertices of `g` containing the `(k-1)`-dimensional subspace `s`, sorted.
pub fn star_restricted(s: &Subspace, g: &CodeGraph) -> Result<Vec<usize>, GraphError> {
    check_dims(g, s, g.k() - 1, "star center")?;
    let mut members: Vec<usize> = star_members(g.field(), s)
        .iter()
        .filter_map(|x| g.index_of(x))
        .collect();
    members.sort_unstable();
    Ok(members)
}

/// Size of the star restriction of a `(k-1)`-subspace lying in exactly `c`
/// coordinate hyperplanes, `c >= 1`: `(q-1)^(c-1) q^(n-k-c+1)`.
pub fn star_size_formula(c: usize, n: usize, k: usize, q: u32) -> Result<u128, GraphError> {
    let max = n + 1 - k;
    if c == 0 || c > max {
        return Err(GraphError::InvalidProfile { c, max });
    }
    let q = u128::from(q);
    Ok((q - 1).pow(c as u32 - 1) * q.pow((n + 1 - k - c) as u32))
}

/// The hyperplane `{ Σ a_i v_i : Σ a_i w_i = 0 }` of `U`, where `v_i` are
/// the canonical basis rows of `U`.
pub fn section_by_functional(field: &Field, u: &Subspace, w: &[Elem]) -> Result<Subspace, GraphError> {
    let d = u.dim();
    if w.len() != d {
        return Err(GraphError::DimensionMismatch(format!(
            "functional has length {}, subspace has dimension {d}",
            w.len()
        )));
    }
    if w.iter().all(|&x| x == 0) {
        return Err(GraphError::ZeroFunctional);
    }
    let coeffs = linalg::nullspace(field, &Matrix::new(d, vec![w.to_vec()]));
    let n = u.ambient_dim();
    let rows = coeffs
        .rows()
        .iter()
        .map(|a| {
            let mut v = vec![0; n];
            for (&ai, row) in a.iter().zip(u.rows()) {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = field.add(*x, field.mul(ai, r));
                }
            }
            v
        })
        .collect();
    Ok(Subspace::span(field, n, rows)?)
}

/// Every hyperplane of `u`, one per projective functional.
pub fn top_members(field: &Field, u: &Subspace) -> Vec<Subspace> {
    enumerate_grassmannian(u.dim(), 1, field.order())
        .map(|w| section_by_functional(field, u, w.row(0)).expect("normalized functional"))
        .collect()
}

/// Vertices of `g` inside the `(k+1)`-dimensional subspace `u`, sorted.
/// Empty when `u` itself is degenerate.
pub fn top_restricted(u: &Subspace, g: &CodeGraph) -> Result<Vec<usize>, GraphError> {
    check_dims(g, u, g.k() + 1, "top center")?;
    if !u.is_nondegenerate() {
        return Ok(Vec::new());
    }
    let mut members: Vec<usize> = top_members(g.field(), u)
        .iter()
        .filter_map(|x| g.index_of(x))
        .collect();
    members.sort_unstable();
    Ok(members)
}

/// The `q + 1` subspaces strictly between incident `s ⊂ u` with `dim u = dim s + 2`.
pub fn line_set(field: &Field, s: &Subspace, u: &Subspace) -> Result<Vec<Subspace>, GraphError> {
    if s.ambient_dim() != u.ambient_dim() || s.dim() + 2 != u.dim() {
        return Err(GraphError::DimensionMismatch(format!(
            "line needs dim U = dim S + 2, got {} and {}",
            s.dim(),
            u.dim()
        )));
    }
    if !u.contains(field, s) {
        return Err(GraphError::NotIncident(s.to_string(), u.to_string()));
    }
    let pivots = s.pivots();
    let mut residual: Vec<Vec<Elem>> = u
        .rows()
        .map(|r| {
            let mut w = r.to_vec();
            for (row, &p) in s.rows().zip(&pivots) {
                let c = w[p];
                linalg::axpy_neg(field, &mut w, c, row);
            }
            w
        })
        .collect();
    let rank = linalg::eliminate(field, &mut residual, u.ambient_dim()).len();
    debug_assert_eq!(rank, 2);
    let (a, b) = (&residual[0], &residual[1]);
    let mut out = vec![span_with(field, s, a.clone())];
    for lambda in field.elements() {
        let v = a
            .iter()
            .zip(b)
            .map(|(&x, &y)| field.add(y, field.mul(lambda, x)))
            .collect();
        out.push(span_with(field, s, v));
    }
    Ok(out)
}

/// The sections `U ∩ C_i` of a non-degenerate subspace, grouped two ways.
#[derive(Debug, Clone, Serialize)]
pub struct HyperplaneSections {
    /// `sections[i] = U ∩ C_i` (0-based coordinate).
    pub sections: Vec<Subspace>,
    /// Partition of the coordinates by equality of sections.
    pub section_classes: Vec<Vec<usize>>,
    /// Partition of the coordinates by proportionality of generator-matrix columns.
    pub column_classes: Vec<Vec<usize>>,
}

impl HyperplaneSections {
    pub fn distinct(&self) -> usize {
        self.section_classes.len()
    }

    pub fn partitions_agree(&self) -> bool {
        self.section_classes == self.column_classes
    }
}

fn partition_by_key<K: PartialEq>(keys: &[K]) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, key) in keys.iter().enumerate() {
        match classes.iter_mut().find(|c| keys[c[0]] == *key) {
            Some(c) => c.push(i),
            None => classes.push(vec![i]),
        }
    }
    classes
}

/// Intersections of `u` with every coordinate hyperplane.
pub fn hyperplane_sections(field: &Field, u: &Subspace) -> Result<HyperplaneSections, GraphError> {
    if !u.is_nondegenerate() {
        return Err(GraphError::DegenerateInput(u.to_string()));
    }
    let n = u.ambient_dim();
    let umat = u.to_matrix();
    let sections: Vec<Subspace> = (0..n)
        .map(|i| {
            let hyperplane = Matrix::new(
                n,
                (0..n).filter(|&j| j != i).map(|j| linalg::unit_vector(n, j)).collect(),
            );
            let (cap, _) = linalg::intersect_and_sum(field, &umat, &hyperplane);
            Subspace::from_matrix(field, &cap)
        })
        .collect::<Result<_, _>>()?;
    let columns: Vec<Vec<Elem>> = (0..n)
        .map(|j| {
            let mut c = u.column(j);
            linalg::normalize(field, &mut c);
            c
        })
        .collect();
    Ok(HyperplaneSections {
        section_classes: partition_by_key(&sections),
        column_classes: partition_by_key(&columns),
        sections,
    })
}

/// Whether the clique `members` has no common neighbour outside itself.
pub fn is_maximal_clique(g: &CodeGraph, members: &[usize]) -> Result<bool, GraphError> {
    for (a, &i) in members.iter().enumerate() {
        for &j in &members[a + 1..] {
            if !g.is_adjacent(i, j) {
                return Err(GraphError::NotAClique(i, j));
            }
        }
    }
    let mut common = BitSet::full(g.len());
    for &i in members {
        common.intersect_with(g.adjacency().row(i));
    }
    Ok(common.is_empty())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum CliqueKind {
    Star,
    Top,
}

/// A star or top restriction: its center, members and maximality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueRecord {
    pub kind: CliqueKind,
    pub center: Subspace,
    /// Sorted vertex indices.
    pub members: Vec<usize>,
    pub maximal: bool,
}

/// Star restrictions for every `(k-1)`-subspace, in enumeration order.
pub(crate) fn star_records(g: &CodeGraph) -> Vec<CliqueRecord> {
    let centers: Vec<Subspace> = enumerate_grassmannian(g.n(), g.k() - 1, g.q()).collect();
    centers
        .into_par_iter()
        .map(|s| {
            let members = star_restricted(&s, g).expect("dimensions match");
            let maximal = !members.is_empty() && is_maximal_clique(g, &members).expect("stars are cliques");
            CliqueRecord {
                kind: CliqueKind::Star,
                center: s,
                members,
                maximal,
            }
        })
        .collect()
}

/// Top restrictions for every non-degenerate `(k+1)`-subspace.
pub(crate) fn top_records(g: &CodeGraph) -> Vec<CliqueRecord> {
    let centers: Vec<Subspace> = enumerate_codes(g.n(), g.k() + 1, g.q()).collect();
    centers
        .into_par_iter()
        .map(|u| {
            let members = top_restricted(&u, g).expect("dimensions match");
            let maximal = !members.is_empty() && is_maximal_clique(g, &members).expect("tops are cliques");
            CliqueRecord {
                kind: CliqueKind::Top,
                center: u,
                members,
                maximal,
            }
        })
        .collect()
}

/// All maximal cliques of `g`, each as a star or top restriction, sorted by
/// `(kind, center)`. A member set reachable both ways is reported once, as
/// its first record in that order.
pub fn classify_maximal_cliques(g: &CodeGraph) -> Vec<CliqueRecord> {
    let mut records: Vec<CliqueRecord> = star_records(g)
        .into_iter()
        .chain(top_records(g))
        .filter(|r| r.maximal)
        .collect();
    records.sort_by(|a, b| (a.kind, &a.center).cmp(&(b.kind, &b.center)));
    let mut seen = HashSet::new();
    records.retain(|r| seen.insert(r.members.clone()));
    records
}

/// Maximal cliques of an arbitrary graph by Bron–Kerbosch with Tomita
/// pivoting. Each clique is sorted; the list is sorted.
pub fn bron_kerbosch(adj: &BitRelation) -> Vec<Vec<usize>> {
    fn expand(adj: &BitRelation, r: &mut Vec<usize>, mut p: BitSet, mut x: BitSet, out: &mut Vec<Vec<usize>>) {
        if p.is_empty() {
            if x.is_empty() {
                let mut c = r.clone();
                c.sort_unstable();
                out.push(c);
            }
            return;
        }
        let pivot = p
            .iter()
            .chain(x.iter())
            .max_by_key(|&u| p.intersection_len(adj.row(u)))
            .unwrap();
        let mut todo = p.clone();
        todo.difference_with(adj.row(pivot));
        for v in todo.iter().collect::<Vec<_>>() {
            r.push(v);
            expand(adj, r, p.intersection(adj.row(v)), x.intersection(adj.row(v)), out);
            r.pop();
            p.remove(v);
            x.insert(v);
        }
    }

    let mut out = Vec::new();
    let n = adj.len();
    if n == 0 {
        return out;
    }
    expand(adj, &mut Vec::new(), BitSet::full(n), BitSet::new(n), &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codegraph::build_graph;
    use crate::linalg::unit_vector;

    fn gf(q: u32) -> Field {
        Field::new(q).unwrap()
    }

    #[test]
    fn lines_have_q_plus_one_points() {
        for q in [2, 3, 4] {
            let f = gf(q);
            let s = Subspace::span(&f, 4, vec![unit_vector(4, 0)]).unwrap();
            let u = Subspace::span(&f, 4, vec![unit_vector(4, 0), unit_vector(4, 1), vec![0, 0, 1, 1]]).unwrap();
            let line = line_set(&f, &s, &u).unwrap();
            assert_eq!(line.len(), q as usize + 1);
            let distinct: HashSet<_> = line.iter().collect();
            assert_eq!(distinct.len(), line.len());
            for x in &line {
                assert_eq!(x.dim(), 2);
                assert!(x.contains(&f, &s));
                assert!(u.contains(&f, x));
            }
        }
    }

    #[test]
    fn line_requires_incidence() {
        let f = gf(2);
        let s = Subspace::span(&f, 4, vec![unit_vector(4, 3)]).unwrap();
        let u = Subspace::span(&f, 4, vec![unit_vector(4, 0), unit_vector(4, 1), unit_vector(4, 2)]).unwrap();
        assert!(matches!(line_set(&f, &s, &u), Err(GraphError::NotIncident(..))));
    }

    #[test]
    fn star_formula_edges() {
        assert_eq!(star_size_formula(1, 5, 2, 2).unwrap(), 8);
        assert_eq!(star_size_formula(2, 4, 2, 3).unwrap(), 6);
        assert_eq!(star_size_formula(4, 5, 2, 2).unwrap(), 1);
        assert_eq!(
            star_size_formula(0, 5, 2, 2).unwrap_err(),
            GraphError::InvalidProfile { c: 0, max: 4 }
        );
        assert!(star_size_formula(5, 5, 2, 2).is_err());
    }

    #[test]
    fn functional_errors() {
        let f = gf(2);
        let u = Subspace::full(&f, 3);
        assert_eq!(section_by_functional(&f, &u, &[0, 0, 0]).unwrap_err(), GraphError::ZeroFunctional);
        assert!(matches!(
            section_by_functional(&f, &u, &[1, 0]),
            Err(GraphError::DimensionMismatch(_))
        ));
    }

    #[test]
    fn degenerate_sections_rejected() {
        let f = gf(2);
        let u = Subspace::span(&f, 4, vec![unit_vector(4, 0), unit_vector(4, 1), unit_vector(4, 2)]).unwrap();
        assert!(matches!(hyperplane_sections(&f, &u), Err(GraphError::DegenerateInput(_))));
    }

    #[test]
    fn maximality_rejects_non_cliques() {
        let g = build_graph(4, 2, 2).unwrap();
        let (i, j) = (0..g.len())
            .flat_map(|i| (0..g.len()).map(move |j| (i, j)))
            .find(|&(i, j)| i < j && !g.is_adjacent(i, j))
            .unwrap();
        assert_eq!(is_maximal_clique(&g, &[i, j]).unwrap_err(), GraphError::NotAClique(i, j));
    }

    #[test]
    fn bron_kerbosch_on_a_path() {
        let rows = vec![
            BitSet::from_indices(4, [1]),
            BitSet::from_indices(4, [0, 2]),
            BitSet::from_indices(4, [1, 3]),
            BitSet::from_indices(4, [2]),
        ];
        let cliques = bron_kerbosch(&BitRelation::from_rows(rows));
        assert_eq!(cliques, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
    }
}
