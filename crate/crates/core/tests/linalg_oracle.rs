mod common;

use common::{all_vectors, dim_of, span_of};
use grasscode::gf::Elem;
use grasscode::linalg::{contains_vector, intersect_and_sum, nullspace, rank, rref, unit_vector};
use grasscode::{Field, Matrix};
use proptest::prelude::*;

fn matrix_strategy(q: u32, max_rows: usize, n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(prop::collection::vec(0..q as Elem, n), 0..=max_rows)
        .prop_map(move |rows| Matrix::new(n, rows))
}

fn field_and_matrix() -> impl Strategy<Value = (u32, Matrix)> {
    prop::sample::select(vec![2u32, 3, 4, 5]).prop_flat_map(|q| (Just(q), (1usize..=5).prop_flat_map(move |n| matrix_strategy(q, 4, n))))
}

fn field_and_pair() -> impl Strategy<Value = (u32, Matrix, Matrix)> {
    prop::sample::select(vec![2u32, 3]).prop_flat_map(|q| {
        (1usize..=4).prop_flat_map(move |n| (Just(q), matrix_strategy(q, 3, n), matrix_strategy(q, 3, n)))
    })
}

#[test]
fn seven_three_example_has_rank_three() {
    let f = Field::new(2).unwrap();
    let m = Matrix::new(
        7,
        vec![
            vec![0, 0, 1, 0, 1, 1, 1],
            vec![0, 1, 0, 1, 0, 1, 1],
            vec![1, 0, 0, 1, 1, 0, 1],
        ],
    );
    // elimination oracle: the row space has 2^3 distinct vectors
    assert_eq!(dim_of(2, &span_of(&f, 7, m.rows())), 3);
    assert_eq!(rank(&f, &m), 3);
    let r = rref(&f, &m);
    assert_eq!(r.pivots, vec![0, 1, 2]);
}

#[test]
fn degenerate_shapes() {
    let f = Field::new(2).unwrap();
    let zero = Matrix::new(4, vec![vec![0; 4]; 2]);
    let r = rref(&f, &zero);
    assert_eq!(r.rank(), 0);
    assert_eq!(r.matrix.nrows(), 0);
    let id = Matrix::identity(3);
    let r = rref(&f, &id);
    assert_eq!(r.matrix, id);
    assert_eq!(r.pivots, vec![0, 1, 2]);
}

#[test]
fn standard_basis_intersection() {
    let f = Field::new(2).unwrap();
    let a = Matrix::new(4, vec![unit_vector(4, 0), unit_vector(4, 1)]);
    let b = Matrix::new(4, vec![unit_vector(4, 1), unit_vector(4, 2)]);
    let (cap, plus) = intersect_and_sum(&f, &a, &b);
    assert_eq!(rref(&f, &cap).matrix.rows(), &[unit_vector(4, 1)]);
    assert_eq!(rank(&f, &plus), 3);
    let (cap, plus) = intersect_and_sum(&f, &a, &a);
    assert_eq!(rref(&f, &cap).matrix, rref(&f, &a).matrix);
    assert_eq!(rref(&f, &plus).matrix, rref(&f, &a).matrix);
}

#[test]
fn membership_examples() {
    let f = Field::new(2).unwrap();
    let m = Matrix::new(4, vec![unit_vector(4, 1), unit_vector(4, 2)]);
    assert!(contains_vector(&f, &m, &[0, 0, 0, 0]));
    assert!(contains_vector(&f, &m, &unit_vector(4, 2)));
    assert!(!contains_vector(&f, &m, &unit_vector(4, 0)));
}

/// Exhaustive over all pairs of 2-row matrices in GF(2)^3: intersection and
/// sum agree with set intersection and the span of the union.
#[test]
fn intersect_and_sum_exhaustive_small() {
    let f = Field::new(2).unwrap();
    let vecs = all_vectors(2, 3);
    let mats: Vec<Matrix> = vecs
        .iter()
        .flat_map(|a| vecs.iter().map(move |b| Matrix::new(3, vec![a.clone(), b.clone()])))
        .collect();
    for a in &mats {
        let sa = span_of(&f, 3, a.rows());
        for b in &mats {
            let sb = span_of(&f, 3, b.rows());
            let (cap, plus) = intersect_and_sum(&f, a, b);
            let want_cap: std::collections::HashSet<_> = sa.intersection(&sb).cloned().collect();
            assert_eq!(span_of(&f, 3, cap.rows()), want_cap);
            let union: Vec<Vec<Elem>> = a.rows().iter().chain(b.rows()).cloned().collect();
            assert_eq!(span_of(&f, 3, plus.rows()), span_of(&f, 3, &union));
        }
    }
}

proptest! {
    #[test]
    fn rref_is_idempotent((q, m) in field_and_matrix()) {
        let f = Field::new(q).unwrap();
        let once = rref(&f, &m);
        let twice = rref(&f, &once.matrix);
        prop_assert_eq!(&once.matrix, &twice.matrix);
        prop_assert_eq!(once.pivots, twice.pivots);
    }

    #[test]
    fn rref_preserves_row_space((q, m) in field_and_matrix()) {
        let f = Field::new(q).unwrap();
        let r = rref(&f, &m);
        let n = m.ncols();
        prop_assert_eq!(span_of(&f, n, r.matrix.rows()), span_of(&f, n, m.rows()));
        prop_assert_eq!(dim_of(q, &span_of(&f, n, m.rows())), r.rank());
    }

    #[test]
    fn equal_rref_iff_equal_row_space((q, a, b) in field_and_pair()) {
        let f = Field::new(q).unwrap();
        let n = a.ncols();
        let same_space = span_of(&f, n, a.rows()) == span_of(&f, n, b.rows());
        prop_assert_eq!(rref(&f, &a).matrix == rref(&f, &b).matrix, same_space);
    }

    #[test]
    fn intersect_and_sum_match_membership((q, a, b) in field_and_pair()) {
        let f = Field::new(q).unwrap();
        let n = a.ncols();
        let (sa, sb) = (span_of(&f, n, a.rows()), span_of(&f, n, b.rows()));
        let (cap, plus) = intersect_and_sum(&f, &a, &b);
        let want: std::collections::HashSet<_> = sa.intersection(&sb).cloned().collect();
        prop_assert_eq!(&span_of(&f, n, cap.rows()), &want);
        prop_assert_eq!(rank(&f, &cap) + rank(&f, &plus), rank(&f, &a) + rank(&f, &b));
        let (cap2, plus2) = intersect_and_sum(&f, &b, &a);
        prop_assert_eq!(rref(&f, &cap).matrix, rref(&f, &cap2).matrix);
        prop_assert_eq!(rref(&f, &plus).matrix, rref(&f, &plus2).matrix);
    }

    #[test]
    fn contains_vector_matches_span((q, m) in field_and_matrix(), seed in any::<u64>()) {
        let f = Field::new(q).unwrap();
        let n = m.ncols();
        let span = span_of(&f, n, m.rows());
        let all = all_vectors(q, n);
        let v = &all[(seed % all.len() as u64) as usize];
        prop_assert_eq!(contains_vector(&f, &m, v), span.contains(v));
    }

    #[test]
    fn nullspace_is_the_orthogonal_complement((q, m) in field_and_matrix()) {
        let f = Field::new(q).unwrap();
        let n = m.ncols();
        let k = nullspace(&f, &m);
        prop_assert_eq!(rank(&f, &k) + rank(&f, &m), n);
        for x in k.rows() {
            for row in m.rows() {
                let dot = x.iter().zip(row).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)));
                prop_assert_eq!(dot, 0);
            }
        }
    }
}
