//! Brute-force helpers shared by the integration tests. Everything here works
//! by listing vectors, never by elimination.
#![allow(dead_code)]

use std::collections::HashSet;

use grasscode::gf::Elem;
use grasscode::{Field, Subspace};

/// Every vector of GF(q)^n.
pub fn all_vectors(q: u32, n: usize) -> Vec<Vec<Elem>> {
    let total = (q as usize).pow(n as u32);
    (0..total)
        .map(|mut x| {
            (0..n)
                .map(|_| {
                    let d = (x % q as usize) as Elem;
                    x /= q as usize;
                    d
                })
                .collect()
        })
        .collect()
}

/// All linear combinations of `rows`.
pub fn span_of(field: &Field, n: usize, rows: &[Vec<Elem>]) -> HashSet<Vec<Elem>> {
    let mut out = HashSet::new();
    for coeffs in all_vectors(field.order(), rows.len()) {
        let mut v = vec![0; n];
        for (c, row) in coeffs.iter().zip(rows) {
            for (x, &r) in v.iter_mut().zip(row) {
                *x = field.add(*x, field.mul(*c, r));
            }
        }
        out.insert(v);
    }
    if rows.is_empty() {
        out.insert(vec![0; n]);
    }
    out
}

pub fn points(field: &Field, s: &Subspace) -> HashSet<Vec<Elem>> {
    let rows: Vec<Vec<Elem>> = s.rows().map(<[Elem]>::to_vec).collect();
    span_of(field, s.ambient_dim(), &rows)
}

/// Dimension of a subspace from its size.
pub fn dim_of(q: u32, set: &HashSet<Vec<Elem>>) -> usize {
    let mut d = 0;
    let mut size = 1;
    while size < set.len() {
        size *= q as usize;
        d += 1;
    }
    assert_eq!(size, set.len(), "not a subspace");
    d
}

/// Small deterministic xorshift generator for sampling inside plain tests.
pub struct Lcg(pub u64);

impl Lcg {
    pub fn next(&mut self) -> u64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        self.0
    }

    pub fn below(&mut self, m: usize) -> usize {
        (self.next() % m as u64) as usize
    }
}
