mod common;

use std::collections::{BTreeSet, HashSet};

use common::{all_vectors, dim_of, points, span_of};
use grasscode::codespace::{
    canonicalize, count_by_enumeration, count_nondegenerate, enumerate_codes, enumerate_grassmannian,
    format_matrix, gaussian, parse_matrix, q_number, CodeError,
};
use grasscode::gf::Elem;
use grasscode::linalg::unit_vector;
use grasscode::{Field, Matrix, Subspace};
use num_bigint::BigUint;
use proptest::prelude::*;

fn fixture(name: &str) -> String {
    std::fs::read_to_string(format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

/// q-Pascal recursion, independent of the product formula.
fn pascal(n: usize, k: usize, q: u32) -> BigUint {
    let mut row = vec![BigUint::from(1u32)];
    for m in 1..=n {
        let mut next = vec![BigUint::from(0u32); m + 1];
        for j in 0..=m {
            let left = if j >= 1 { row[j - 1].clone() } else { BigUint::from(0u32) };
            let right = if j < m { row[j].clone() * BigUint::from(q).pow(j as u32) } else { BigUint::from(0u32) };
            next[j] = left + right;
        }
        row = next;
    }
    row.get(k).cloned().unwrap_or_default()
}

/// All k-dimensional subspaces, as point sets, by spanning every k-tuple of vectors.
fn brute_grassmannian(field: &Field, n: usize, k: usize) -> HashSet<BTreeSet<Vec<Elem>>> {
    let vecs = all_vectors(field.order(), n);
    let mut out = HashSet::new();
    let mut idx = vec![0usize; k];
    loop {
        let rows: Vec<Vec<Elem>> = idx.iter().map(|&i| vecs[i].clone()).collect();
        let span = span_of(field, n, &rows);
        if dim_of(field.order(), &span) == k {
            out.insert(span.into_iter().collect());
        }
        let Some(pos) = (0..k).rev().find(|&i| idx[i] + 1 < vecs.len()) else {
            return out;
        };
        idx[pos] += 1;
        for j in pos + 1..k {
            idx[j] = 0;
        }
    }
}

fn in_coordinate_hyperplane(pts: &HashSet<Vec<Elem>>, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| pts.iter().all(|v| v[i] == 0)).collect()
}

#[test]
fn gaussian_matches_q_pascal() {
    for q in [2u32, 3, 4, 5, 7, 9] {
        for n in 0..=10 {
            for k in 0..=n {
                assert_eq!(gaussian(n, k, q), pascal(n, k, q), "[{n} {k}]_{q}");
                assert_eq!(gaussian(n, k, q), gaussian(n, n - k, q));
            }
        }
    }
    assert_eq!(gaussian(4, 1, 2), BigUint::from(15u32));
    assert_eq!(q_number(4, 2), BigUint::from(15u32));
    assert_eq!(gaussian(4, 2, 2), BigUint::from(35u32));
    assert_eq!(gaussian(7, 7, 3), BigUint::from(1u32));
}

#[test]
fn grassmannian_matches_brute_force() {
    for (n, q) in [(3usize, 2u32), (4, 2), (3, 3), (2, 4)] {
        let f = Field::new(q).unwrap();
        for k in 1..=n {
            let listed: Vec<BTreeSet<Vec<Elem>>> = enumerate_grassmannian(n, k, q)
                .map(|s| points(&f, &s).into_iter().collect())
                .collect();
            let unique: HashSet<_> = listed.iter().cloned().collect();
            assert_eq!(unique.len(), listed.len(), "duplicates in ({n},{k},{q})");
            assert_eq!(unique, brute_grassmannian(&f, n, k), "({n},{k},{q})");
            assert_eq!(BigUint::from(listed.len()), gaussian(n, k, q));
        }
    }
}

#[test]
fn enumeration_examples() {
    let f = Field::new(2).unwrap();
    let lines: Vec<Subspace> = enumerate_grassmannian(2, 1, 2).collect();
    let expected: Vec<Subspace> = [vec![1, 0], vec![0, 1], vec![1, 1]]
        .into_iter()
        .map(|v| Subspace::span(&f, 2, vec![v]).unwrap())
        .collect();
    assert_eq!(lines.len(), 3);
    for e in &expected {
        assert!(lines.contains(e));
    }
    let planes: HashSet<Subspace> = enumerate_grassmannian(4, 2, 2).collect();
    assert_eq!(planes.len(), 35);
    assert_eq!(enumerate_grassmannian(3, 1, 3).count(), 13);
}

#[test]
fn enumeration_order_is_by_pivot_set() {
    let pivots: Vec<Vec<usize>> = enumerate_grassmannian(5, 2, 3).map(|s| s.pivots()).collect();
    assert!(pivots.windows(2).all(|w| w[0] <= w[1]));
    let first: Vec<Subspace> = enumerate_grassmannian(5, 2, 3).collect();
    let again: Vec<Subspace> = enumerate_grassmannian(5, 2, 3).collect();
    assert_eq!(first, again);
}

#[test]
fn codes_match_the_definition() {
    for (n, q) in [(4usize, 2u32), (5, 2), (3, 3), (4, 3), (3, 4)] {
        let f = Field::new(q).unwrap();
        for k in 1..=n {
            let all: Vec<Subspace> = enumerate_grassmannian(n, k, q).collect();
            let by_definition: Vec<&Subspace> = all
                .iter()
                .filter(|s| in_coordinate_hyperplane(&points(&f, s), n).is_empty())
                .collect();
            let codes: Vec<Subspace> = enumerate_codes(n, k, q).collect();
            assert_eq!(codes.iter().collect::<Vec<_>>(), by_definition, "({n},{k},{q})");
            assert_eq!(BigUint::from(codes.len()), count_nondegenerate(n, k, q));
            assert_eq!(codes.len() as u64, count_by_enumeration(n, k, q));
        }
    }
}

#[test]
fn counting_examples() {
    assert_eq!(count_nondegenerate(4, 2, 2), BigUint::from(13u32));
    assert_eq!(count_nondegenerate(5, 2, 2), BigUint::from(40u32));
    assert_eq!(count_nondegenerate(4, 3, 2), BigUint::from(11u32));
    assert_eq!(count_by_enumeration(4, 3, 2), 11);
    for q in [2u32, 3, 4, 5] {
        for n in 1..=6 {
            assert_eq!(count_nondegenerate(n, n, q), BigUint::from(1u32));
            let full_support = u64::from(q - 1).pow(n as u32 - 1);
            assert_eq!(count_by_enumeration(n, 1, q), full_support, "(n,1,q) = ({n},1,{q})");
        }
    }
}

#[test]
fn coordinate_profile_matches_containment() {
    for (n, q) in [(4usize, 2u32), (5, 2), (4, 3)] {
        let f = Field::new(q).unwrap();
        for k in 1..=n {
            for s in enumerate_grassmannian(n, k, q) {
                let zero = in_coordinate_hyperplane(&points(&f, &s), n);
                let profile = s.coordinate_profile();
                assert_eq!(profile.zero_columns, zero);
                assert_eq!(profile.c, zero.len());
                assert!(profile.c <= n - k, "a k-space lies in at most n-k coordinate hyperplanes");
                assert_eq!(s.is_nondegenerate(), zero.is_empty());
            }
        }
    }
}

#[test]
fn coordinate_profile_examples() {
    let f = Field::new(2).unwrap();
    let e1 = Subspace::span(&f, 4, vec![unit_vector(4, 0)]).unwrap();
    assert_eq!(e1.coordinate_profile().c, 3);
    let ones = Subspace::span(&f, 4, vec![vec![1; 4]]).unwrap();
    assert_eq!(ones.coordinate_profile().c, 0);
    let s = Subspace::span(&f, 5, vec![vec![1, 1, 0, 0, 0], unit_vector(5, 2)]).unwrap();
    let p = s.coordinate_profile();
    assert_eq!((p.c, p.zero_columns), (2, vec![3, 4]));
    assert!(Subspace::full(&f, 4).is_nondegenerate());
    let plane = Subspace::span(&f, 4, vec![unit_vector(4, 0), unit_vector(4, 1)]).unwrap();
    assert!(!plane.is_nondegenerate());
}

#[test]
fn canonicalization_examples() {
    let f2 = Field::new(2).unwrap();
    let a = Matrix::new(4, vec![vec![1, 1, 0, 0], vec![0, 1, 1, 1]]);
    let b = Matrix::new(4, vec![vec![0, 1, 1, 1], vec![1, 1, 0, 0]]);
    assert_eq!(canonicalize(&f2, &a).unwrap(), canonicalize(&f2, &b).unwrap());
    let f3 = Field::new(3).unwrap();
    let a = Matrix::new(3, vec![vec![1, 2, 0], vec![0, 1, 1]]);
    let b = Matrix::new(3, vec![vec![2, 1, 0], vec![0, 2, 2]]);
    assert_eq!(canonicalize(&f3, &a).unwrap(), canonicalize(&f3, &b).unwrap());
    let zero = Matrix::new(3, vec![vec![0, 0, 0]]);
    assert_eq!(canonicalize(&f3, &zero).unwrap_err(), CodeError::ZeroSpace);

    let m = parse_matrix(&fixture("code_12_4_2.txt"), &f2).unwrap();
    let c = canonicalize(&f2, &m).unwrap();
    assert_eq!((c.ambient_dim(), c.dim()), (12, 4));
    assert!(c.is_nondegenerate());
    let m = parse_matrix(&fixture("code_7_3_2.txt"), &f2).unwrap();
    let c = canonicalize(&f2, &m).unwrap();
    assert_eq!((c.ambient_dim(), c.dim()), (7, 3));
    assert!(c.is_nondegenerate());
}

#[test]
fn matrix_text_format() {
    let f = Field::new(3).unwrap();
    let m = parse_matrix("# header\n1 2 0\n\n  0 1 1   # trailing\n", &f).unwrap();
    assert_eq!(m.rows(), &[vec![1, 2, 0], vec![0, 1, 1]]);
    assert_eq!(parse_matrix(&format_matrix(&m), &f).unwrap(), m);
    assert!(matches!(parse_matrix("1 3 0\n", &f), Err(CodeError::Parse { line: 1, .. })));
    assert!(matches!(parse_matrix("1 0\n1 0 0\n", &f), Err(CodeError::Parse { line: 2, .. })));
    assert!(matches!(parse_matrix("1 x\n", &f), Err(CodeError::Parse { .. })));
    assert_eq!(parse_matrix("# nothing\n\n", &f).unwrap_err(), CodeError::EmptyMatrix);
}

fn random_basis() -> impl Strategy<Value = (u32, usize, Vec<Vec<Elem>>, Vec<(usize, usize, Elem)>)> {
    prop::sample::select(vec![2u32, 3, 4, 5]).prop_flat_map(|q| {
        (2usize..=6).prop_flat_map(move |n| {
            (
                Just(q),
                Just(n),
                prop::collection::vec(prop::collection::vec(0..q as Elem, n), 1..=3),
                prop::collection::vec((0usize..3, 0usize..3, 1..q as Elem), 0..6),
            )
        })
    })
}

proptest! {
    // row operations never change the canonical form
    #[test]
    fn canonical_form_is_basis_independent((q, n, rows, ops) in random_basis()) {
        let f = Field::new(q).unwrap();
        prop_assume!(rows.iter().any(|r| r.iter().any(|&x| x != 0)));
        let s = Subspace::span(&f, n, rows.clone()).unwrap();
        let mut mixed = rows.clone();
        for (i, j, c) in ops {
            let (i, j) = (i % mixed.len(), j % mixed.len());
            if i == j {
                for x in &mut mixed[i] { *x = f.mul(*x, c); }
            } else {
                let src = mixed[j].clone();
                for (x, y) in mixed[i].iter_mut().zip(src) { *x = f.add(*x, f.mul(c, y)); }
            }
        }
        mixed.reverse();
        let t = Subspace::span(&f, n, mixed).unwrap();
        prop_assert_eq!(&s, &t);
        prop_assert_eq!(s.key(), t.key());
        prop_assert_eq!(points(&f, &s), span_of(&f, n, &rows));
    }
}
