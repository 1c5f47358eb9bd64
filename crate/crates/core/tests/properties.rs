use cobweb_core::counting::{compositions, multinomial, surjection_count, CompositionType};
use cobweb_core::ferrers::{forbidden_pattern_witness, has_nested_row_supports, is_ferrers_dim1};
use cobweb_core::{complete_chain, BoolMatrix, CobwebChain, LevelSequence, RealMatrix, VertexId};
use proptest::prelude::*;

fn bool_matrix(rows: usize, cols: usize) -> impl Strategy<Value = BoolMatrix> {
    prop::collection::vec(prop::collection::vec(0u8..2, cols), rows)
        .prop_map(|data| BoolMatrix::from_rows(&data).unwrap())
}

fn square(max: usize) -> impl Strategy<Value = BoolMatrix> {
    (1..=max).prop_flat_map(|n| bool_matrix(n, n))
}

fn chain_with(sizes: Vec<usize>) -> impl Strategy<Value = CobwebChain> {
    let blocks: Vec<_> = sizes.windows(2).map(|w| bool_matrix(w[0], w[1])).collect();
    blocks
        .prop_map(move |b| CobwebChain::new(LevelSequence::new(sizes.clone()).unwrap(), b).unwrap())
}

fn chain(min_levels: usize) -> impl Strategy<Value = CobwebChain> {
    prop::collection::vec(1usize..=4, min_levels..=5).prop_flat_map(chain_with)
}

/// Chain whose first level has `first` vertices.
fn chain_from(first: usize) -> impl Strategy<Value = CobwebChain> {
    prop::collection::vec(1usize..=4, 1..=4).prop_flat_map(move |rest| {
        let mut sizes = vec![first];
        sizes.extend(rest);
        chain_with(sizes)
    })
}

fn real_square(n: usize) -> impl Strategy<Value = RealMatrix> {
    prop::collection::vec(prop::collection::vec(-1.0f64..1.0, n), n)
        .prop_map(|rows| RealMatrix::from_rows(&rows).unwrap())
}

proptest! {
    #[test]
    fn geometric_series_matches_warshall(a in square(12)) {
        prop_assert_eq!(a.boolean_geometric_series().unwrap(), a.warshall_closure().unwrap());
    }

    #[test]
    fn direct_sum_is_associative(a in square(4), b in square(4), c in square(4)) {
        let left = BoolMatrix::direct_sum(&[BoolMatrix::direct_sum(&[a.clone(), b.clone()]).unwrap(), c.clone()]).unwrap();
        let right = BoolMatrix::direct_sum(&[a.clone(), BoolMatrix::direct_sum(&[b.clone(), c.clone()]).unwrap()]).unwrap();
        let flat = BoolMatrix::direct_sum(&[a, b, c]).unwrap();
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(&left, &flat);
    }

    #[test]
    fn bool_product_is_associative(
        (a, b, c) in (1usize..6, 1usize..6, 1usize..6, 1usize..6)
            .prop_flat_map(|(p, q, r, s)| (bool_matrix(p, q), bool_matrix(q, r), bool_matrix(r, s)))
    ) {
        let left = a.bool_product(&b).unwrap().bool_product(&c).unwrap();
        let right = a.bool_product(&b.bool_product(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn series_of_direct_sum_is_direct_sum_of_series(a in square(6), b in square(6)) {
        let lhs = BoolMatrix::direct_sum(&[a.clone(), b.clone()]).unwrap().boolean_geometric_series().unwrap();
        let rhs = BoolMatrix::direct_sum(&[
            a.boolean_geometric_series().unwrap(),
            b.boolean_geometric_series().unwrap(),
        ]).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn exp_of_kronecker_sum_factorizes(
        (a, b) in (1usize..=3, 1usize..=3).prop_flat_map(|(p, q)| (real_square(p), real_square(q)))
    ) {
        let lhs = a.kronecker_sum(&b).unwrap().exp(1e-12).unwrap();
        let rhs = a.exp(1e-12).unwrap().kronecker_product(&b.exp(1e-12).unwrap());
        prop_assert!(lhs.max_abs_diff(&rhs).unwrap() < 1e-9);
    }

    #[test]
    fn adjacency_is_nilpotent(c in chain(1)) {
        let a = c.adjacency_matrix();
        prop_assert!(a.bool_power(c.levels().len()).unwrap().is_zero());
    }

    #[test]
    fn zeta_respects_grading(c in chain(1)) {
        let z = c.zeta_matrix();
        for (u, v) in z.ones_iter() {
            let (lu, lv) = (c.level_of(VertexId(u)).unwrap(), c.level_of(VertexId(v)).unwrap());
            prop_assert!(lu <= lv);
            if lu == lv {
                prop_assert_eq!(u, v);
            }
        }
    }

    #[test]
    fn natural_join_is_associative(
        (a, b, c) in chain(2).prop_flat_map(|a| {
            let last = *a.levels().sizes().last().unwrap();
            (Just(a), chain_from(last))
        }).prop_flat_map(|(a, b)| {
            let last = *b.levels().sizes().last().unwrap();
            (Just(a), Just(b), chain_from(last))
        })
    ) {
        let left = a.natural_join(&b).unwrap().natural_join(&c).unwrap();
        let right = a.natural_join(&b.natural_join(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn join_biadjacency_is_direct_sum(
        (a, b) in chain(2).prop_flat_map(|a| {
            let last = *a.levels().sizes().last().unwrap();
            (Just(a), chain_from(last).prop_filter("two levels", |b| b.levels().len() >= 2))
        })
    ) {
        let joined = a.natural_join(&b).unwrap().biadjacency_diag().unwrap();
        let parts = BoolMatrix::direct_sum(&[a.biadjacency_diag().unwrap(), b.biadjacency_diag().unwrap()]).unwrap();
        prop_assert_eq!(joined, parts);
    }

    #[test]
    fn complete_strict_order_is_ferrers(sizes in prop::collection::vec(1usize..=5, 2..=5)) {
        let c = complete_chain(&LevelSequence::new(sizes).unwrap()).unwrap();
        prop_assert!(is_ferrers_dim1(&c.strict_order_matrix()).is_dim1);
        prop_assert!(c.is_complete() && c.is_cobweb());
    }

    #[test]
    fn ferrers_characterizations_agree(m in (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| bool_matrix(r, c))) {
        prop_assert_eq!(forbidden_pattern_witness(&m).is_none(), has_nested_row_supports(&m));
        prop_assert_eq!(forbidden_pattern_witness(&m.transpose()).is_none(), has_nested_row_supports(&m));
    }

    #[test]
    fn text_round_trip(m in (1usize..=8, 1usize..=70).prop_flat_map(|(r, c)| bool_matrix(r, c))) {
        prop_assert_eq!(BoolMatrix::parse_text(&m.to_text()).unwrap(), m);
    }

    #[test]
    fn chain_text_round_trip(c in chain(1)) {
        prop_assert_eq!(CobwebChain::parse_text(&c.to_text()).unwrap(), c);
    }

    #[test]
    fn multinomials_sum_to_surjections(n in 1usize..=9, k in 1usize..=9) {
        prop_assume!(k <= n);
        let sum: cobweb_core::BigCount = compositions(n, Some(k)).unwrap()
            .map(|t: CompositionType| multinomial(n, &t).unwrap())
            .sum();
        prop_assert_eq!(sum, surjection_count(n, k));
    }
}
