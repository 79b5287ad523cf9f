//! Subspaces of GF(q)^n in canonical form, coordinate hyperplanes and
//! enumeration of Grassmannians and non-degenerate codes.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf::{Elem, Field};
use crate::linalg::{self, Matrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("the matrix has rank zero")]
    ZeroSpace,
    #[error("ambient dimensions differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("matrix file contains no rows")]
    EmptyMatrix,
}

/// A nonzero subspace of GF(q)^n, stored as its reduced row echelon basis.
///
/// Equal subspaces have byte-identical representations, so `Eq`, `Hash`
/// and `Ord` compare subspaces exactly.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Subspace {
    q: u32,
    n: usize,
    k: usize,
    gen: Box<[Elem]>,
}

impl Subspace {
    /// Trusted constructor: `gen` must already be a reduced echelon basis.
    pub(crate) fn from_rref_rows(q: u32, n: usize, gen: Vec<Elem>) -> Subspace {
        debug_assert!(n > 0 && gen.len().is_multiple_of(n));
        Subspace {
            q,
            n,
            k: gen.len() / n,
            gen: gen.into_boxed_slice(),
        }
    }

    /// The row space of `m`.
    pub fn from_matrix(field: &Field, m: &Matrix) -> Result<Subspace, CodeError> {
        let r = linalg::rref(field, m);
        if r.rank() == 0 {
            return Err(CodeError::ZeroSpace);
        }
        let gen = r.matrix.into_rows().concat();
        Ok(Subspace::from_rref_rows(field.order(), m.ncols(), gen))
    }

    /// Span of the given vectors.
    pub fn span(field: &Field, n: usize, vectors: Vec<Vec<Elem>>) -> Result<Subspace, CodeError> {
        Subspace::from_matrix(field, &Matrix::new(n, vectors))
    }

    /// The whole space GF(q)^n.
    pub fn full(field: &Field, n: usize) -> Subspace {
        Subspace::from_matrix(field, &Matrix::identity(n)).unwrap()
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn field_order(&self) -> u32 {
        self.q
    }

    /// Canonical key bytes.
    pub fn key(&self) -> &[Elem] {
        &self.gen
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Elem]> {
        self.gen.chunks(self.n)
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.gen[i * self.n..(i + 1) * self.n]
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows()
            .map(|r| r.iter().position(|&x| x != 0).unwrap())
            .collect()
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::new(self.n, self.rows().map(<[Elem]>::to_vec).collect())
    }

    /// Column `j` of the canonical generator matrix.
    pub fn column(&self, j: usize) -> Vec<Elem> {
        self.rows().map(|r| r[j]).collect()
    }

    pub fn contains_vector(&self, field: &Field, v: &[Elem]) -> bool {
        let mut w = v.to_vec();
        let pivots = self.pivots();
        for (row, &p) in self.rows().zip(&pivots) {
            let c = w[p];
            linalg::axpy_neg(field, &mut w, c, row);
        }
        w.iter().all(|&x| x == 0)
    }

    /// Whether `other ⊆ self`.
    pub fn contains(&self, field: &Field, other: &Subspace) -> bool {
        other.rows().all(|r| self.contains_vector(field, r))
    }

    /// Dimension of `self + other`, computed by reducing `other` against `self`.
    pub fn sum_dim(&self, field: &Field, other: &Subspace) -> usize {
        let pivots = self.pivots();
        let mut residual: Vec<Vec<Elem>> = other
            .rows()
            .map(|r| {
                let mut w = r.to_vec();
                for (row, &p) in self.rows().zip(&pivots) {
                    let c = w[p];
                    linalg::axpy_neg(field, &mut w, c, row);
                }
                w
            })
            .collect();
        self.k + linalg::eliminate(field, &mut residual, self.n).len()
    }

    pub fn intersection_dim(&self, field: &Field, other: &Subspace) -> usize {
        self.k + other.k - self.sum_dim(field, other)
    }

    pub fn sum(&self, field: &Field, other: &Subspace) -> Subspace {
        let (_, plus) = linalg::intersect_and_sum(field, &self.to_matrix(), &other.to_matrix());
        Subspace::from_matrix(field, &plus).unwrap()
    }

    /// `None` when the intersection is the zero space.
    pub fn intersection(&self, field: &Field, other: &Subspace) -> Option<Subspace> {
        let (cap, _) = linalg::intersect_and_sum(field, &self.to_matrix(), &other.to_matrix());
        Subspace::from_matrix(field, &cap).ok()
    }

    /// Coordinates `i` (0-based) with `self ⊆ C_i`, i.e. zero columns of the generator matrix.
    pub fn zero_columns(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&j| self.rows().all(|r| r[j] == 0))
            .collect()
    }

    pub fn coordinate_profile(&self) -> CoordinateProfile {
        let zero_columns = self.zero_columns();
        CoordinateProfile {
            c: zero_columns.len(),
            zero_columns,
        }
    }

    /// Not contained in any coordinate hyperplane.
    pub fn is_nondegenerate(&self) -> bool {
        (0..self.n).all(|j| self.rows().any(|r| r[j] != 0))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace[{},{}]_{}{}", self.n, self.k, self.q, self)
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
        }
        f.write_str(">")
    }
}

/// Which coordinate hyperplanes contain a subspace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoordinateProfile {
    /// 0-based column indices.
    pub zero_columns: Vec<usize>,
    pub c: usize,
}

/// Row space of `m` as a canonical subspace.
pub fn canonicalize(field: &Field, m: &Matrix) -> Result<Subspace, CodeError> {
    Subspace::from_matrix(field, m)
}

/// `[n]_q = (q^n - 1)/(q - 1)`, the number of points of PG(n-1, q).
pub fn q_number(n: usize, q: u32) -> BigUint {
    gaussian(n, 1, q)
}

/// Gaussian binomial coefficient: number of `k`-dimensional subspaces of GF(q)^n.
pub fn gaussian(n: usize, k: usize, q: u32) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let q = BigUint::from(q);
    let one = BigUint::one();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= q.pow((n - i) as u32) - &one;
        den *= q.pow((i + 1) as u32) - &one;
    }
    num / den
}

fn binomial(n: usize, k: usize) -> BigUint {
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Number of non-degenerate `[n,k]_q` codes by inclusion–exclusion over
/// the coordinate hyperplanes.
pub fn count_nondegenerate(n: usize, k: usize, q: u32) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let total = (0..=n - k).fold(BigInt::zero(), |acc, i| {
        let term = BigInt::from(binomial(n, i) * gaussian(n - i, k, q));
        if i % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    });
    total.to_biguint().expect("inclusion-exclusion count is non-negative")
}

/// Pivot sets of size `k` in `0..n`, in lexicographic order.
pub fn pivot_sets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        out.push(c.clone());
        let Some(i) = (0..k).rev().find(|&i| c[i] != i + n - k) else {
            return out;
        };
        c[i] += 1;
        for j in i + 1..k {
            c[j] = c[j - 1] + 1;
        }
    }
}

/// All subspaces with a fixed pivot set (a Schubert cell), free entries
/// varying in lexicographic order.
#[derive(Debug, Clone)]
pub struct SchubertCell {
    q: u32,
    n: usize,
    template: Vec<Elem>,
    free: Vec<usize>,
    counter: Vec<Elem>,
    done: bool,
}

impl SchubertCell {
    pub fn new(q: u32, n: usize, pivots: &[usize]) -> SchubertCell {
        let k = pivots.len();
        let mut template = vec![0; k * n];
        let mut free = Vec::new();
        for (i, &p) in pivots.iter().enumerate() {
            template[i * n + p] = 1;
            for j in p + 1..n {
                if !pivots.contains(&j) {
                    free.push(i * n + j);
                }
            }
        }
        SchubertCell {
            q,
            n,
            template,
            counter: vec![0; free.len()],
            free,
            done: k == 0 || k > n,
        }
    }

    /// Number of subspaces in this cell, `q^(free entries)`.
    pub fn len(&self) -> BigUint {
        BigUint::from(self.q).pow(self.free.len() as u32)
    }

    pub fn is_empty(&self) -> bool {
        self.done
    }
}

impl Iterator for SchubertCell {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        if self.done {
            return None;
        }
        let mut gen = self.template.clone();
        for (&pos, &v) in self.free.iter().zip(&self.counter) {
            gen[pos] = v;
        }
        let top = (self.q - 1) as Elem;
        match self.counter.iter().rposition(|&d| d != top) {
            Some(i) => {
                self.counter[i] += 1;
                for d in &mut self.counter[i + 1..] {
                    *d = 0;
                }
            }
            None => self.done = true,
        }
        Some(Subspace::from_rref_rows(self.q, self.n, gen))
    }
}

/// Every `k`-dimensional subspace of GF(q)^n exactly once, ordered by pivot
/// set and then by free entries.
pub fn enumerate_grassmannian(n: usize, k: usize, q: u32) -> impl Iterator<Item = Subspace> {
    pivot_sets(n, k)
        .into_iter()
        .flat_map(move |p| SchubertCell::new(q, n, &p))
}

/// The non-degenerate members of [`enumerate_grassmannian`], same order.
pub fn enumerate_codes(n: usize, k: usize, q: u32) -> impl Iterator<Item = Subspace> {
    enumerate_grassmannian(n, k, q).filter(Subspace::is_nondegenerate)
}

/// Counts non-degenerate codes by enumeration, one Schubert cell per task.
pub fn count_by_enumeration(n: usize, k: usize, q: u32) -> u64 {
    use rayon::prelude::*;
    pivot_sets(n, k)
        .into_par_iter()
        .map(|p| {
            SchubertCell::new(q, n, &p)
                .filter(Subspace::is_nondegenerate)
                .count() as u64
        })
        .sum()
}

/// Parses the generator-matrix text format: one row per line,
/// whitespace-separated element labels, `#` comments, blank lines ignored.
pub fn parse_matrix(text: &str, field: &Field) -> Result<Matrix, CodeError> {
    let mut rows: Vec<Vec<Elem>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let row = content
            .split_whitespace()
            .map(|tok| {
                let v: u32 = tok.parse().map_err(|_| CodeError::Parse {
                    line,
                    msg: format!("`{tok}` is not a non-negative integer"),
                })?;
                if v >= field.order() {
                    return Err(CodeError::Parse {
                        line,
                        msg: format!("entry {v} is not an element of GF({})", field.order()),
                    });
                }
                Ok(v as Elem)
            })
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(CodeError::Parse {
                    line,
                    msg: format!("row has {} entries, expected {}", row.len(), first.len()),
                });
            }
        }
        rows.push(row);
    }
    let ncols = rows.first().map(Vec::len).ok_or(CodeError::EmptyMatrix)?;
    Ok(Matrix::new(ncols, rows))
}

/// Renders a matrix in the text format accepted by [`parse_matrix`].
pub fn format_matrix(m: &Matrix) -> String {
    let mut out = String::new();
    for row in m.rows() {
        let line: Vec<String> = row.iter().map(u8::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::unit_vector;

    fn gf(q: u32) -> Field {
        Field::new(q).unwrap()
    }

    #[test]
    fn row_order_and_scaling_do_not_matter() {
        let f = gf(3);
        let a = Subspace::span(&f, 4, vec![vec![1, 2, 0, 1], vec![0, 1, 1, 2]]).unwrap();
        let b = Subspace::span(&f, 4, vec![vec![0, 2, 2, 1], vec![2, 1, 0, 2]]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.key(), b.key());
    }

    #[test]
    fn zero_matrix_is_rejected() {
        let f = gf(2);
        let z = Matrix::new(3, vec![vec![0; 3]]);
        assert_eq!(canonicalize(&f, &z).unwrap_err(), CodeError::ZeroSpace);
    }

    #[test]
    fn profiles() {
        let f = gf(2);
        let e1 = Subspace::span(&f, 4, vec![unit_vector(4, 0)]).unwrap();
        assert_eq!(e1.coordinate_profile().c, 3);
        let ones = Subspace::span(&f, 4, vec![vec![1; 4]]).unwrap();
        assert_eq!(ones.coordinate_profile().c, 0);
        let s = Subspace::span(&f, 5, vec![vec![1, 1, 0, 0, 0], unit_vector(5, 2)]).unwrap();
        assert_eq!(s.coordinate_profile().zero_columns, vec![3, 4]);
    }

    #[test]
    fn nondegeneracy() {
        let f = gf(2);
        assert!(Subspace::full(&f, 4).is_nondegenerate());
        let s = Subspace::span(&f, 4, vec![unit_vector(4, 0), unit_vector(4, 1)]).unwrap();
        assert!(!s.is_nondegenerate());
    }

    #[test]
    fn gaussian_small_values() {
        assert_eq!(gaussian(5, 5, 3), BigUint::from(1u32));
        assert_eq!(gaussian(4, 1, 2), BigUint::from(15u32));
        assert_eq!(gaussian(4, 2, 2), BigUint::from(35u32));
        assert_eq!(gaussian(3, 4, 2), BigUint::zero());
        assert_eq!(q_number(3, 2), BigUint::from(7u32));
        assert_eq!(q_number(0, 2), BigUint::zero());
    }

    #[test]
    fn nondegenerate_counts() {
        assert_eq!(count_nondegenerate(4, 4, 2), BigUint::from(1u32));
        assert_eq!(count_nondegenerate(4, 2, 2), BigUint::from(13u32));
        // hyperplanes of GF(2)^4 other than the four coordinate hyperplanes
        assert_eq!(count_nondegenerate(4, 3, 2), BigUint::from(11u32));
        assert_eq!(enumerate_codes(4, 3, 2).count(), 11);
    }

    #[test]
    fn small_grassmannians() {
        let all: Vec<Subspace> = enumerate_grassmannian(2, 1, 2).collect();
        let keys: Vec<&[u8]> = all.iter().map(Subspace::key).collect();
        assert_eq!(keys, vec![&[1u8, 0][..], &[1, 1], &[0, 1]]);
        assert_eq!(enumerate_grassmannian(3, 1, 3).count(), 13);
    }

    #[test]
    fn pivot_sets_are_lexicographic() {
        assert_eq!(
            pivot_sets(4, 2),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(pivot_sets(3, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn parses_matrix_text() {
        let f = gf(3);
        let m = parse_matrix("# comment\n1 0 2\n\n0 1 1  # trailing\n", &f).unwrap();
        assert_eq!(m.rows(), &[vec![1, 0, 2], vec![0, 1, 1]]);
        assert_eq!(parse_matrix(&format_matrix(&m), &f).unwrap(), m);
        assert!(matches!(
            parse_matrix("1 0 3\n", &f),
            Err(CodeError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_matrix("1 0\n1 0 1\n", &f),
            Err(CodeError::Parse { line: 2, .. })
        ));
        assert_eq!(parse_matrix("# nothing\n", &f), Err(CodeError::EmptyMatrix));
    }
}
