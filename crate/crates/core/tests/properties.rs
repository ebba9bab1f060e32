mod common;

use idcode::generators::{
    all_connected_graphs, corona, random_bipartite_no_deg2_twins, random_tree, Family,
};
use idcode::{
    gamma_id, generate, is_2corona, parity_shift_code, support_complement_code, verify_identifying,
    verify_td_identifying, GraphProfile, VertexSet,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn parity_shift_valid_on_random_bipartite(n in 3usize..=24, extra in 0usize..8, seed in any::<u64>()) {
        let g = random_bipartite_no_deg2_twins(n, extra, seed);
        let p = GraphProfile::of(&g);
        let r = parity_shift_code(&g).unwrap();
        prop_assert!(verify_identifying(&g, &r.code).is_valid());
        prop_assert!(r.code.len() <= (n + p.leaf_count) / 2);
        prop_assert!(r.code.len() == r.even.final_code.len().min(r.odd.final_code.len()));
    }

    #[test]
    fn support_complement_on_random_trees(n in 5usize..=40, seed in any::<u64>()) {
        let t = random_tree(n, seed);
        let code = support_complement_code(&t).unwrap();
        prop_assert!(verify_td_identifying(&t, &code).is_valid());
        prop_assert_eq!(code.len(), n - t.supports().len());
    }

    #[test]
    fn certificates_are_self_consistent(n in 2usize..=12, seed in any::<u64>(), mask in any::<u64>()) {
        let t = random_tree(n, seed);
        let code = VertexSet::from_mask(mask & ((1u64 << n) - 1));
        for cert in [verify_identifying(&t, &code), verify_td_identifying(&t, &code)] {
            prop_assert!(cert.witness_consistent(&t));
        }
        let total = verify_td_identifying(&t, &code).is_valid();
        prop_assert_eq!(total, common::naive_is_code(&t, code.to_mask(), true));
        let plain = verify_identifying(&t, &code).is_valid();
        prop_assert_eq!(plain, common::naive_is_code(&t, code.to_mask(), false));
    }

    #[test]
    fn edge_list_round_trip(n in 1usize..=30, seed in any::<u64>()) {
        let t = random_tree(n, seed);
        let back: idcode::Graph = t.to_edge_list_string().parse().unwrap();
        prop_assert_eq!(back, t);
    }
}

#[test]
fn corona2_round_trip_and_twin_free() {
    for h_order in 2..=5 {
        for h in all_connected_graphs(h_order) {
            let g = corona(&h, 2);
            assert_eq!(is_2corona(&g).as_ref(), Some(&h));
            assert!(GraphProfile::of(&g).is_twin_free());
            for k in [1, 3] {
                assert!(is_2corona(&corona(&h, k)).is_none());
            }
        }
    }
}

#[test]
fn odd_spiders_meet_the_shift_bound() {
    // a centre with legs of odd length: (n + ℓ)/2 is attained
    let legs_list: [&[usize]; 6] = [&[1, 1], &[1, 1, 1], &[3, 1], &[3, 3], &[3, 3, 1], &[5, 3, 3]];
    for legs in legs_list {
        let g = generate(&Family::Spider(legs.to_vec())).unwrap();
        let n = g.n();
        assert!(n <= 13);
        let bound = (n + legs.len()) / 2;
        assert_eq!(gamma_id(&g, None).unwrap().value, bound, "legs {legs:?}");
        assert!(parity_shift_code(&g).unwrap().code.len() <= bound);
    }
}
