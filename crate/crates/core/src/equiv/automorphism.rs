//! Order of the full automorphism group of a small graph, by backtracking
//! over colour-refined vertex classes and a stabilizer chain.
//!
//! Only graph-intrinsic invariants prune the search: degree, the sizes of
//! the maximal cliques through a vertex, and iterated neighbour-colour
//! refinement. Nothing here knows about subspaces.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::Serialize;

use super::{distinct_images, group_elements, monomial_group_order, preserves_adjacency, EquivError, Mode};
use crate::codegraph::{bron_kerbosch, BitRelation, CodeGraph};

/// Default cap on the vertex count for [`automorphism_group_order`].
pub const DEFAULT_VERTEX_GUARD: usize = 64;

/// Re-labels colours by `(colour, sorted neighbour colours)` until stable.
fn refine(adj: &BitRelation, mut colors: Vec<usize>) -> Vec<usize> {
    let n = colors.len();
    let mut classes = colors.iter().collect::<std::collections::BTreeSet<_>>().len();
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = adj.row(v).iter().map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut ranks = BTreeMap::new();
        for s in &signatures {
            ranks.entry(s.clone()).or_insert(0);
        }
        for (i, r) in ranks.values_mut().enumerate() {
            *r = i;
        }
        colors = signatures.iter().map(|s| ranks[s]).collect();
        if ranks.len() == classes {
            return colors;
        }
        classes = ranks.len();
    }
}

/// Initial invariant: degree and the multiset of sizes of maximal cliques
/// containing the vertex.
fn initial_colors(adj: &BitRelation) -> Vec<usize> {
    let n = adj.len();
    let mut profile: Vec<(usize, Vec<usize>)> = (0..n).map(|v| (adj.row(v).len(), Vec::new())).collect();
    for clique in bron_kerbosch(adj) {
        for &v in &clique {
            profile[v].1.push(clique.len());
        }
    }
    for p in &mut profile {
        p.1.sort_unstable();
    }
    let mut ranks = BTreeMap::new();
    for p in &profile {
        ranks.entry(p.clone()).or_insert(0);
    }
    for (i, r) in ranks.values_mut().enumerate() {
        *r = i;
    }
    profile.iter().map(|p| ranks[p]).collect()
}

/// Colours with the given vertices individualized (each gets a fresh colour, in order).
fn individualize(adj: &BitRelation, base: &[usize], fixed: &[usize]) -> Vec<usize> {
    let offset = base.iter().max().map_or(0, |m| m + 1);
    let mut colors = base.to_vec();
    for (i, &v) in fixed.iter().enumerate() {
        colors[v] = offset + i;
    }
    refine(adj, colors)
}

struct Search<'a> {
    adj: &'a BitRelation,
    /// Invariant colours on the source side and target side.
    src: Vec<usize>,
    dst: Vec<usize>,
    order: Vec<usize>,
    image: Vec<Option<usize>>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn consistent(&self, v: usize, w: usize) -> bool {
        self.src[v] == self.dst[w]
            && !self.used[w]
            && self.order.iter().all(|&u| match self.image[u] {
                Some(fu) => self.adj.contains(u, v) == self.adj.contains(fu, w),
                None => true,
            })
    }

    fn extend(&mut self, depth: usize) -> bool {
        let Some(&v) = self.order.get(depth) else {
            return true;
        };
        if self.image[v].is_some() {
            return self.extend(depth + 1);
        }
        for w in 0..self.adj.len() {
            if self.consistent(v, w) {
                self.image[v] = Some(w);
                self.used[w] = true;
                if self.extend(depth + 1) {
                    return true;
                }
                self.image[v] = None;
                self.used[w] = false;
            }
        }
        false
    }
}

/// Vertices in an order where each has as many earlier neighbours as possible.
fn search_order(adj: &BitRelation, first: &[usize]) -> Vec<usize> {
    let n = adj.len();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for &v in first {
        placed[v] = true;
        order.push(v);
    }
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (order.iter().filter(|&&u| adj.contains(u, v)).count(), std::cmp::Reverse(v)))
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    order
}

/// Whether some automorphism fixes `fixed` pointwise and sends `v` to `w`.
fn extends(adj: &BitRelation, base: &[usize], fixed: &[usize], v: usize, w: usize) -> bool {
    let mut src_fixed = fixed.to_vec();
    src_fixed.push(v);
    let mut dst_fixed = fixed.to_vec();
    dst_fixed.push(w);
    let src = individualize(adj, base, &src_fixed);
    let dst = individualize(adj, base, &dst_fixed);
    // refinement is canonical, so equal colour multisets are necessary
    let mut a = src.clone();
    let mut b = dst.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return false;
    }
    let n = adj.len();
    let mut image = vec![None; n];
    let mut used = vec![false; n];
    for (&s, &t) in src_fixed.iter().zip(&dst_fixed) {
        image[s] = Some(t);
        used[t] = true;
    }
    let order = search_order(adj, &src_fixed);
    // pinned pairs must themselves be consistent
    for (i, &s) in src_fixed.iter().enumerate() {
        for &s2 in &src_fixed[..i] {
            if adj.contains(s, s2) != adj.contains(image[s].unwrap(), image[s2].unwrap()) {
                return false;
            }
        }
    }
    let mut search = Search {
        adj,
        src,
        dst,
        order,
        image,
        used,
    };
    search.extend(0)
}

/// Exact order of the automorphism group of `g` via a stabilizer chain:
/// `|Aut| = Π |orbit of b_i under the stabilizer of b_1..b_{i-1}|`.
pub fn automorphism_group_order(g: &CodeGraph, guard: usize) -> Result<BigUint, EquivError> {
    if g.len() > guard {
        return Err(EquivError::SearchSpaceTooLarge {
            what: "graph vertices".into(),
            size: g.len().to_string(),
            limit: guard.to_string(),
        });
    }
    Ok(relation_automorphism_order(g.adjacency()))
}

pub(crate) fn relation_automorphism_order(adj: &BitRelation) -> BigUint {
    let base = refine(adj, initial_colors(adj));
    let mut order = BigUint::from(1u32);
    let mut fixed: Vec<usize> = Vec::new();
    loop {
        let colors = individualize(adj, &base, &fixed);
        let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (v, &c) in colors.iter().enumerate() {
            classes.entry(c).or_default().push(v);
        }
        // discrete partition: only the identity fixes everything chosen so far
        let Some(cell) = classes.values().filter(|c| c.len() > 1).min_by_key(|c| c.len()) else {
            return order;
        };
        let v = cell[0];
        let orbit = 1 + cell[1..].iter().filter(|&&w| extends(adj, &base, &fixed, v, w)).count();
        order *= orbit;
        fixed.push(v);
    }
}

/// Number of distinct vertex permutations induced by the monomial group.
pub fn monomial_image(g: &CodeGraph, mode: Mode) -> Result<usize, EquivError> {
    let maps = group_elements(g.field(), g.n(), mode)?;
    Ok(distinct_images(g, &maps).len())
}

/// Full automorphism group versus the image of the monomial group.
#[derive(Debug, Clone, Serialize)]
pub struct AutComparison {
    pub mode: Mode,
    pub vertices: usize,
    #[serde(serialize_with = "decimal")]
    pub automorphism_order: BigUint,
    #[serde(serialize_with = "decimal")]
    pub monomial_group_order: BigUint,
    /// Distinct permutations of the vertices induced by the monomial group.
    pub monomial_image_order: usize,
    /// Every induced permutation preserves adjacency.
    pub image_are_automorphisms: bool,
    pub matches: bool,
}

fn decimal<S: serde::Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(x)
}

pub fn compare_with_monomial_group(g: &CodeGraph, mode: Mode, guard: usize) -> Result<AutComparison, EquivError> {
    let automorphism_order = automorphism_group_order(g, guard)?;
    let maps = group_elements(g.field(), g.n(), mode)?;
    let images = distinct_images(g, &maps);
    let image_are_automorphisms = images.iter().all(|p| preserves_adjacency(g, p));
    let monomial_image_order = images.len();
    Ok(AutComparison {
        mode,
        vertices: g.len(),
        matches: image_are_automorphisms && automorphism_order == BigUint::from(monomial_image_order),
        automorphism_order,
        monomial_group_order: monomial_group_order(g.n(), g.field(), mode),
        monomial_image_order,
        image_are_automorphisms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codegraph::BitSet;

    fn relation(n: usize, edges: &[(usize, usize)]) -> BitRelation {
        let mut rows = vec![BitSet::new(n); n];
        for &(a, b) in edges {
            rows[a].insert(b);
            rows[b].insert(a);
        }
        BitRelation::from_rows(rows)
    }

    #[test]
    fn small_known_groups() {
        let k3 = relation(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(relation_automorphism_order(&k3), BigUint::from(6u32));
        let p4 = relation(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(relation_automorphism_order(&p4), BigUint::from(2u32));
        let c5 = relation(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(relation_automorphism_order(&c5), BigUint::from(10u32));
        let empty = relation(4, &[]);
        assert_eq!(relation_automorphism_order(&empty), BigUint::from(24u32));
        // Petersen graph: 120
        let petersen = relation(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        );
        assert_eq!(relation_automorphism_order(&petersen), BigUint::from(120u32));
    }

    #[test]
    fn asymmetric_tree() {
        // smallest asymmetric tree: 7 vertices
        let t = relation(7, &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)]);
        assert_eq!(relation_automorphism_order(&t), BigUint::from(1u32));
    }
}
