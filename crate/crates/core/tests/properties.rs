use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use fuss_catalan::partition::{enumerate_double_partitions, NoncrossingPartition};
use fuss_catalan::render::{parse_triangle_csv, parse_triangle_json, triangle_csv, triangle_json};
use fuss_catalan::triangle::build;
use fuss_catalan::{
    binomial, fuss_catalan, triangle_alternating, triangle_closed_form_cell, triangle_convolution,
    Method, TriangleParams,
};

proptest! {
    #[test]
    fn recurrences_agree(p in 1u32..=12, n_max in 0usize..=25) {
        let params = TriangleParams::new(p, n_max).unwrap();
        let conv = triangle_convolution(params);
        prop_assert!(conv.same_cells(&triangle_alternating(params)));
        for (n, row) in conv.rows().iter().enumerate() {
            for (k, cell) in row.iter().enumerate() {
                prop_assert_eq!(cell, &triangle_closed_form_cell(p, n, k).unwrap());
                prop_assert!(!cell.is_negative());
            }
        }
    }

    #[test]
    fn rows_sum_to_fuss_catalan(p in 1u32..=12, n in 0usize..=40) {
        let t = triangle_convolution(TriangleParams::new(p, n).unwrap());
        prop_assert_eq!(t.row_sum(n).unwrap(), fuss_catalan(p, n).unwrap());
    }

    #[test]
    fn boundary_cells(p in 1u32..=12, n in 1usize..=30) {
        let t = triangle_alternating(TriangleParams::new(p, n).unwrap());
        prop_assert_eq!(t.get(n, 0).unwrap(), &BigInt::from(1));
        prop_assert!(t.get(n, n).unwrap().is_zero());
    }

    #[test]
    fn pascal_rule(n in 1i64..=60, k in 1i64..=60) {
        prop_assume!(k <= n);
        prop_assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
    }

    #[test]
    fn serialization_round_trip(p in 1u32..=10, n_max in 0usize..=20, m in 0usize..3) {
        let method = Method::ALL[m];
        let t = build(TriangleParams::new(p, n_max).unwrap(), method).unwrap();
        prop_assert_eq!(&parse_triangle_json(&triangle_json(&t)).unwrap(), &t);
        prop_assert_eq!(&parse_triangle_csv(&triangle_csv(&t), p, method).unwrap(), &t);
    }

    #[test]
    fn refinement_is_a_partial_order(n in 1usize..=5, seed in any::<u64>()) {
        let doubles = enumerate_double_partitions(n).unwrap();
        let d = &doubles[(seed % doubles.len() as u64) as usize];
        prop_assert!(d.p1().refines(d.p1()));
        prop_assert!(d.p1().refines(d.p2()));
        if d.p2().refines(d.p1()) {
            prop_assert_eq!(d.p1(), d.p2());
        }
        let all = NoncrossingPartition::from_blocks(n, vec![(1..=n).collect()]).unwrap();
        prop_assert!(d.p2().refines(&all));
    }
}
