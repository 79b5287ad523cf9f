//! Dense exact linear algebra over GF(q).

use crate::gf::{Elem, Field};

/// A dense matrix over GF(q); rows are vectors of length `ncols`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    ncols: usize,
    rows: Vec<Vec<Elem>>,
}

impl Matrix {
    /// Panics if some row has a length other than `ncols`.
    pub fn new(ncols: usize, rows: Vec<Vec<Elem>>) -> Matrix {
        assert!(
            rows.iter().all(|r| r.len() == ncols),
            "all rows must have length {ncols}"
        );
        Matrix { ncols, rows }
    }

    pub fn empty(ncols: usize) -> Matrix {
        Matrix { ncols, rows: Vec::new() }
    }

    pub fn identity(n: usize) -> Matrix {
        Matrix::new(n, (0..n).map(|i| unit_vector(n, i)).collect())
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Elem>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<Elem>> {
        self.rows
    }

    pub fn column(&self, j: usize) -> Vec<Elem> {
        self.rows.iter().map(|r| r[j]).collect()
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.ncols, other.ncols);
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Matrix { ncols: self.ncols, rows }
    }

    /// Checks every entry is a valid label for `field`.
    pub fn entries_valid(&self, field: &Field) -> bool {
        self.rows.iter().flatten().all(|&x| u32::from(x) < field.order())
    }
}

pub fn unit_vector(n: usize, i: usize) -> Vec<Elem> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// Reduced row echelon form of a row space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    /// Nonzero rows only.
    pub matrix: Matrix,
    /// Pivot column of each row (0-based).
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// `dst -= c * src`
#[inline]
pub(crate) fn axpy_neg(field: &Field, dst: &mut [Elem], c: Elem, src: &[Elem]) {
    if c == 0 {
        return;
    }
    for (d, &s) in dst.iter_mut().zip(src) {
        *d = field.sub(*d, field.mul(c, s));
    }
}

#[inline]
pub(crate) fn scale(field: &Field, v: &mut [Elem], c: Elem) {
    for x in v.iter_mut() {
        *x = field.mul(*x, c);
    }
}

/// In-place Gauss–Jordan elimination. Returns the pivot columns; on return
/// the first `pivots.len()` rows are the reduced basis and the rest are zero.
pub(crate) fn eliminate(field: &Field, rows: &mut [Vec<Elem>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(sel) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = field.inv(rows[r][col]).unwrap();
        scale(field, &mut rows[r], inv);
        let (head, tail) = rows.split_at_mut(r);
        let (pivot_row, rest) = tail.split_first_mut().unwrap();
        for other in head.iter_mut().chain(rest.iter_mut()) {
            let c = other[col];
            axpy_neg(field, other, c, pivot_row);
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

pub fn rref(field: &Field, m: &Matrix) -> Rref {
    let mut rows = m.rows.clone();
    let pivots = eliminate(field, &mut rows, m.ncols);
    rows.truncate(pivots.len());
    Rref {
        matrix: Matrix { ncols: m.ncols, rows },
        pivots,
    }
}

pub fn rank(field: &Field, m: &Matrix) -> usize {
    let mut rows = m.rows.clone();
    eliminate(field, &mut rows, m.ncols).len()
}

/// Reduces `v` against a matrix already in reduced row echelon form.
pub(crate) fn reduce_against(field: &Field, basis: &[Vec<Elem>], pivots: &[usize], v: &mut [Elem]) {
    for (row, &p) in basis.iter().zip(pivots) {
        let c = v[p];
        axpy_neg(field, v, c, row);
    }
}

/// Whether `v` lies in the row space of `m`.
pub fn contains_vector(field: &Field, m: &Matrix, v: &[Elem]) -> bool {
    assert_eq!(v.len(), m.ncols, "vector length must match the ambient dimension");
    let r = rref(field, m);
    let mut w = v.to_vec();
    reduce_against(field, r.matrix.rows(), &r.pivots, &mut w);
    w.iter().all(|&x| x == 0)
}

/// Bases (in rref) of `rowspace(a) ∩ rowspace(b)` and `rowspace(a) + rowspace(b)`.
///
/// Zassenhaus: eliminate `[a | a ; b | 0]`. Rows whose left half vanishes
/// carry the intersection in their right half; the remaining left halves
/// span the sum.
pub fn intersect_and_sum(field: &Field, a: &Matrix, b: &Matrix) -> (Matrix, Matrix) {
    assert_eq!(a.ncols, b.ncols, "ambient dimensions differ");
    let n = a.ncols;
    let mut rows: Vec<Vec<Elem>> = a
        .rows
        .iter()
        .map(|r| r.iter().chain(r.iter()).copied().collect())
        .chain(
            b.rows
                .iter()
                .map(|r| r.iter().copied().chain(std::iter::repeat_n(0, n)).collect()),
        )
        .collect();
    let pivots = eliminate(field, &mut rows, 2 * n);
    let mut sum = Vec::new();
    let mut cap = Vec::new();
    for (row, &p) in rows.iter().zip(&pivots) {
        if p < n {
            sum.push(row[..n].to_vec());
        } else {
            cap.push(row[n..].to_vec());
        }
    }
    let cap = rref(field, &Matrix::new(n, cap)).matrix;
    (cap, Matrix::new(n, sum))
}

/// Basis (in rref) of `{ x : row · x = 0 for every row of m }`.
pub fn nullspace(field: &Field, m: &Matrix) -> Matrix {
    let n = m.ncols;
    let r = rref(field, m);
    let free: Vec<usize> = (0..n).filter(|c| !r.pivots.contains(c)).collect();
    let basis = free
        .iter()
        .map(|&f| {
            let mut x = vec![0; n];
            x[f] = 1;
            for (row, &p) in r.matrix.rows.iter().zip(&r.pivots) {
                x[p] = field.neg(row[f]);
            }
            x
        })
        .collect();
    rref(field, &Matrix::new(n, basis)).matrix
}

/// Scales `v` so that its first nonzero entry is 1. Returns `false` for the zero vector.
pub fn normalize(field: &Field, v: &mut [Elem]) -> bool {
    match v.iter().find(|&&x| x != 0) {
        Some(&lead) => {
            let inv = field.inv(lead).unwrap();
            scale(field, v, inv);
            true
        }
        None => false,
    }
}

/// Whether `u` and `v` span the same 1-dimensional space (both nonzero).
pub fn proportional(field: &Field, u: &[Elem], v: &[Elem]) -> bool {
    let mut a = u.to_vec();
    let mut b = v.to_vec();
    normalize(field, &mut a) && normalize(field, &mut b) && a == b
}
