//! Monomial semilinear maps of GF(q)^n and their action on codes.
//!
//! A map sends `x` to `y` with `y[perm[i]] = diag[i] * σ^e(x[i])`, where σ is
//! the Frobenius automorphism. Strict maps have `diag ≡ 1`; generalized maps
//! allow any nonzero diagonal.

mod automorphism;

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::codegraph::CodeGraph;
use crate::codespace::{count_nondegenerate, enumerate_codes, Subspace};
use crate::gf::{Elem, Field, GfError};
use crate::linalg::{self, Matrix};

pub use automorphism::{
    automorphism_group_order, compare_with_monomial_group, monomial_image, AutComparison,
    DEFAULT_VERTEX_GUARD,
};

/// Largest ambient dimension accepted by the exhaustive equivalence search.
pub const MAX_EQUIV_N: usize = 8;
/// Largest number of codes [`orbits`] will enumerate.
pub const MAX_ORBIT_CODES: u64 = 2_000_000;
/// Largest group [`monomial_image`] will enumerate element by element.
pub const MAX_GROUP_ELEMENTS: u64 = 5_000_000;
const MAX_DIAGONAL_CANDIDATES: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EquivError {
    #[error("search space too large: {what} ({size} > {limit})")]
    SearchSpaceTooLarge { what: String, size: String, limit: String },
    #[error("incompatible inputs: {0}")]
    Incompatible(String),
    #[error("invalid monomial map: {0}")]
    InvalidMap(String),
    #[error(transparent)]
    Field(#[from] GfError),
}

fn too_large(what: &str, size: impl fmt::Display, limit: impl fmt::Display) -> EquivError {
    EquivError::SearchSpaceTooLarge {
        what: what.to_string(),
        size: size.to_string(),
        limit: limit.to_string(),
    }
}

/// Which monomial group acts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Coordinate permutations and field automorphisms.
    #[default]
    Strict,
    /// Additionally, nonzero scaling of each coordinate.
    Generalized,
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Mode, String> {
        match s {
            "strict" => Ok(Mode::Strict),
            "generalized" => Ok(Mode::Generalized),
            other => Err(format!("unknown mode `{other}` (expected strict or generalized)")),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Strict => "strict",
            Mode::Generalized => "generalized",
        })
    }
}

/// A monomial semilinear automorphism of GF(q)^n.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "MapRepr", try_from = "MapRepr")]
pub struct MonomialMap {
    sigma_exp: u32,
    /// 0-based: coordinate `i` goes to `perm[i]`.
    perm: Vec<usize>,
    diag: Vec<Elem>,
}

/// Wire form: `perm` holds 1-based images.
#[derive(Serialize, Deserialize)]
struct MapRepr {
    sigma_exp: u32,
    perm: Vec<usize>,
    diag: Vec<Elem>,
}

impl From<MonomialMap> for MapRepr {
    fn from(m: MonomialMap) -> MapRepr {
        MapRepr {
            sigma_exp: m.sigma_exp,
            perm: m.perm.iter().map(|&p| p + 1).collect(),
            diag: m.diag,
        }
    }
}

impl TryFrom<MapRepr> for MonomialMap {
    type Error = EquivError;

    fn try_from(r: MapRepr) -> Result<MonomialMap, EquivError> {
        if r.perm.contains(&0) {
            return Err(EquivError::InvalidMap("permutation images are 1-based".into()));
        }
        MonomialMap::new(r.sigma_exp, r.perm.iter().map(|&p| p - 1).collect(), r.diag)
    }
}

fn is_permutation(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    perm.iter()
        .all(|&p| p < perm.len() && !std::mem::replace(&mut seen[p], true))
}

impl MonomialMap {
    /// `perm` is 0-based.
    pub fn new(sigma_exp: u32, perm: Vec<usize>, diag: Vec<Elem>) -> Result<MonomialMap, EquivError> {
        if !is_permutation(&perm) {
            return Err(EquivError::InvalidMap(format!("{perm:?} is not a permutation")));
        }
        if diag.len() != perm.len() {
            return Err(EquivError::InvalidMap("diagonal length differs from n".into()));
        }
        if diag.contains(&0) {
            return Err(EquivError::InvalidMap("diagonal entries must be nonzero".into()));
        }
        Ok(MonomialMap { sigma_exp, perm, diag })
    }

    pub fn identity(n: usize) -> MonomialMap {
        MonomialMap::permutation((0..n).collect())
    }

    /// Pure coordinate permutation (0-based).
    pub fn permutation(perm: Vec<usize>) -> MonomialMap {
        let n = perm.len();
        MonomialMap::new(0, perm, vec![1; n]).expect("valid permutation")
    }

    pub fn frobenius(n: usize, e: u32) -> MonomialMap {
        MonomialMap {
            sigma_exp: e,
            ..MonomialMap::identity(n)
        }
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn sigma_exp(&self) -> u32 {
        self.sigma_exp
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn diag(&self) -> &[Elem] {
        &self.diag
    }

    pub fn is_strict(&self) -> bool {
        self.diag.iter().all(|&d| d == 1)
    }

    fn reduced(mut self, field: &Field) -> MonomialMap {
        self.sigma_exp %= field.degree();
        self
    }

    pub fn apply_vector(&self, field: &Field, x: &[Elem]) -> Vec<Elem> {
        let mut y = vec![0; x.len()];
        for (i, &xi) in x.iter().enumerate() {
            y[self.perm[i]] = field.mul(self.diag[i], field.frobenius(xi, self.sigma_exp));
        }
        y
    }

    pub fn apply(&self, field: &Field, s: &Subspace) -> Subspace {
        assert_eq!(s.ambient_dim(), self.n(), "map and subspace live in different spaces");
        let rows = s.rows().map(|r| self.apply_vector(field, r)).collect();
        Subspace::span(field, self.n(), rows).expect("semilinear bijections preserve rank")
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, field: &Field, other: &MonomialMap) -> MonomialMap {
        let n = self.n();
        let perm = (0..n).map(|i| self.perm[other.perm[i]]).collect();
        let diag = (0..n)
            .map(|i| {
                field.mul(
                    self.diag[other.perm[i]],
                    field.frobenius(other.diag[i], self.sigma_exp),
                )
            })
            .collect();
        MonomialMap {
            sigma_exp: self.sigma_exp + other.sigma_exp,
            perm,
            diag,
        }
        .reduced(field)
    }

    pub fn inverse(&self, field: &Field) -> MonomialMap {
        let n = self.n();
        let m = field.degree();
        let back = (m - self.sigma_exp % m) % m;
        let mut perm = vec![0; n];
        for (i, &p) in self.perm.iter().enumerate() {
            perm[p] = i;
        }
        let diag = (0..n)
            .map(|j| field.frobenius(field.inv(self.diag[perm[j]]).unwrap(), back))
            .collect();
        MonomialMap {
            sigma_exp: back,
            perm,
            diag,
        }
    }

    /// Equality as maps of GF(q)^n.
    pub fn same_map(&self, field: &Field, other: &MonomialMap) -> bool {
        self.perm == other.perm
            && self.diag == other.diag
            && self.sigma_exp % field.degree() == other.sigma_exp % field.degree()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("maps serialize")
    }
}

/// Image of `s` under `map`.
pub fn apply(field: &Field, map: &MonomialMap, s: &Subspace) -> Subspace {
    map.apply(field, s)
}

/// Vertex permutation induced by `map`; `None` if some image is not a vertex.
pub fn induced_permutation(map: &MonomialMap, g: &CodeGraph) -> Option<Vec<usize>> {
    g.vertices()
        .iter()
        .map(|v| g.index_of(&map.apply(g.field(), v)))
        .collect()
}

/// Whether `map` permutes the vertices of `g` and preserves adjacency and
/// non-adjacency.
pub fn induces_automorphism(map: &MonomialMap, g: &CodeGraph) -> bool {
    if map.n() != g.n() {
        return false;
    }
    match induced_permutation(map, g) {
        Some(p) => is_permutation(&p) && preserves_adjacency(g, &p),
        None => false,
    }
}

pub(crate) fn preserves_adjacency(g: &CodeGraph, p: &[usize]) -> bool {
    (0..g.len()).all(|i| (i + 1..g.len()).all(|j| g.is_adjacent(i, j) == g.is_adjacent(p[i], p[j])))
}

/// Advances `a` to the next permutation in lexicographic order; `false` after the last.
pub(crate) fn next_permutation(a: &mut [usize]) -> bool {
    let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
        return false;
    };
    let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).unwrap();
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

pub(crate) fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, i| acc * i)
}

/// Order of the abstract monomial group: `m · n!`, times `(q-1)^n` when generalized.
pub fn monomial_group_order(n: usize, field: &Field, mode: Mode) -> BigUint {
    let base = factorial(n) * field.degree();
    match mode {
        Mode::Strict => base,
        Mode::Generalized => base * BigUint::from(field.order() - 1).pow(n as u32),
    }
}

fn check_compatible(c1: &Subspace, c2: &Subspace, field: &Field) -> Result<(), EquivError> {
    if c1.ambient_dim() != c2.ambient_dim() || c1.dim() != c2.dim() {
        return Err(EquivError::Incompatible(format!(
            "[{},{}] vs [{},{}]",
            c1.ambient_dim(),
            c1.dim(),
            c2.ambient_dim(),
            c2.dim()
        )));
    }
    if c1.field_order() != field.order() || c2.field_order() != field.order() {
        return Err(EquivError::Incompatible("codes over different fields".into()));
    }
    Ok(())
}

/// A diagonal `d` (indexed by target coordinate) with `D·c1 = c2`, if any.
///
/// The conditions `h · (d ∘ r) = 0` for every row `r` of `c1` and every
/// parity check `h` of `c2` are linear in `d`; a solution must also have
/// no zero entry.
fn find_diagonal(field: &Field, c1: &Subspace, c2: &Subspace) -> Result<Option<Vec<Elem>>, EquivError> {
    let n = c1.ambient_dim();
    let checks = linalg::nullspace(field, &c2.to_matrix());
    let mut eqs = Vec::new();
    for r in c1.rows() {
        for h in checks.rows() {
            eqs.push((0..n).map(|j| field.mul(h[j], r[j])).collect());
        }
    }
    let solutions = if eqs.is_empty() {
        Matrix::identity(n)
    } else {
        linalg::nullspace(field, &Matrix::new(n, eqs))
    };
    let dim = solutions.nrows();
    if dim == 0 {
        return Ok(None);
    }
    // In rref the pivot entries of a combination are its coefficients, so
    // they must all be nonzero; the first is fixed to 1 up to global scaling.
    let choices = u64::from(field.order() - 1).checked_pow(dim as u32 - 1);
    match choices {
        Some(c) if c <= MAX_DIAGONAL_CANDIDATES => {}
        _ => {
            return Err(too_large(
                "diagonal candidates",
                format!("{}^{}", field.order() - 1, dim - 1),
                MAX_DIAGONAL_CANDIDATES,
            ))
        }
    }
    let mut coeffs = vec![1 as Elem; dim];
    loop {
        let mut d = vec![0; n];
        for (&c, row) in coeffs.iter().zip(solutions.rows()) {
            for (x, &r) in d.iter_mut().zip(row) {
                *x = field.add(*x, field.mul(c, r));
            }
        }
        if d.iter().all(|&x| x != 0) {
            return Ok(Some(d));
        }
        // odometer over nonzero labels, position 0 fixed
        let top = (field.order() - 1) as Elem;
        match (1..dim).rev().find(|&i| coeffs[i] != top) {
            Some(i) => {
                coeffs[i] += 1;
                for c in &mut coeffs[i + 1..] {
                    *c = 1;
                }
            }
            None => return Ok(None),
        }
    }
}

/// A monomial map carrying `c1` onto `c2`, found by exhaustive search over
/// permutations and Frobenius powers (and diagonals when generalized).
pub fn are_equivalent(
    field: &Field,
    c1: &Subspace,
    c2: &Subspace,
    mode: Mode,
) -> Result<Option<MonomialMap>, EquivError> {
    check_compatible(c1, c2, field)?;
    let n = c1.ambient_dim();
    if n > MAX_EQUIV_N {
        return Err(too_large("ambient dimension", n, MAX_EQUIV_N));
    }
    if c1 == c2 {
        return Ok(Some(MonomialMap::identity(n)));
    }
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        for e in 0..field.degree() {
            let strict = MonomialMap::new(e, perm.clone(), vec![1; n]).unwrap();
            let image = strict.apply(field, c1);
            match mode {
                Mode::Strict => {
                    if &image == c2 {
                        return Ok(Some(strict));
                    }
                }
                Mode::Generalized => {
                    if let Some(d) = find_diagonal(field, &image, c2)? {
                        let diag = perm.iter().map(|&p| d[p]).collect();
                        return Ok(Some(MonomialMap::new(e, perm, diag).unwrap()));
                    }
                }
            }
        }
        if !next_permutation(&mut perm) {
            return Ok(None);
        }
    }
}

/// A generating set of the monomial group.
pub fn generators(field: &Field, n: usize, mode: Mode) -> Vec<MonomialMap> {
    let mut gens = Vec::new();
    if n >= 2 {
        let mut swap: Vec<usize> = (0..n).collect();
        swap.swap(0, 1);
        gens.push(MonomialMap::permutation(swap));
        gens.push(MonomialMap::permutation((0..n).map(|i| (i + 1) % n).collect()));
    }
    if field.degree() > 1 {
        gens.push(MonomialMap::frobenius(n, 1));
    }
    if mode == Mode::Generalized && field.order() > 2 {
        let mut diag = vec![1; n];
        diag[0] = field.primitive_element();
        gens.push(MonomialMap::new(0, (0..n).collect(), diag).unwrap());
    }
    gens
}

/// Orbits of the monomial group on the non-degenerate `[n,k]_q` codes.
/// Each orbit is sorted and the orbits are sorted by their least member,
/// which serves as the canonical representative.
pub fn orbits(n: usize, k: usize, q: u32, mode: Mode) -> Result<Vec<Vec<Subspace>>, EquivError> {
    let field = Field::new(q)?;
    let total = count_nondegenerate(n, k, q);
    if total > BigUint::from(MAX_ORBIT_CODES) {
        return Err(too_large("number of codes", total, MAX_ORBIT_CODES));
    }
    let codes: Vec<Subspace> = enumerate_codes(n, k, q).collect();
    let index: HashMap<&Subspace, usize> = codes.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let gens = generators(&field, n, mode);
    let mut orbit_of = vec![usize::MAX; codes.len()];
    let mut out = Vec::new();
    for start in 0..codes.len() {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        orbit_of[start] = id;
        let mut members = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for g in &gens {
                let j = index[&g.apply(&field, &codes[i])];
                if orbit_of[j] == usize::MAX {
                    orbit_of[j] = id;
                    members.push(j);
                    queue.push_back(j);
                }
            }
        }
        let mut orbit: Vec<Subspace> = members.into_iter().map(|i| codes[i].clone()).collect();
        orbit.sort();
        out.push(orbit);
    }
    out.sort();
    Ok(out)
}

/// Every element of the monomial group, for groups below [`MAX_GROUP_ELEMENTS`].
pub fn group_elements(field: &Field, n: usize, mode: Mode) -> Result<Vec<MonomialMap>, EquivError> {
    let order = monomial_group_order(n, field, mode);
    if order > BigUint::from(MAX_GROUP_ELEMENTS) {
        return Err(too_large("monomial group", order, MAX_GROUP_ELEMENTS));
    }
    let diagonals: Vec<Vec<Elem>> = match mode {
        Mode::Strict => vec![vec![1; n]],
        Mode::Generalized => {
            let base = u64::from(field.order() - 1);
            let count = base.pow(n as u32);
            (0..count)
                .map(|mut c| {
                    (0..n)
                        .map(|_| {
                            let d = (c % base) as Elem + 1;
                            c /= base;
                            d
                        })
                        .collect()
                })
                .collect()
        }
    };
    let mut out = Vec::with_capacity(order.to_usize().unwrap_or(0));
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        for e in 0..field.degree() {
            for d in &diagonals {
                out.push(MonomialMap::new(e, perm.clone(), d.clone()).unwrap());
            }
        }
        if !next_permutation(&mut perm) {
            return Ok(out);
        }
    }
}

/// Distinct induced permutations collected into a set; used for faithfulness counts.
pub(crate) fn distinct_images(g: &CodeGraph, maps: &[MonomialMap]) -> HashSet<Vec<usize>> {
    maps.iter()
        .map(|m| induced_permutation(m, g).expect("monomial maps preserve non-degeneracy"))
        .collect()
}
