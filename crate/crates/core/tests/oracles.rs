mod common;

use common::*;
use idcode::generators::{all_connected_graphs, all_trees, cycle, path};
use idcode::{gamma_id, gamma_tid};

#[test]
fn solver_matches_naive_on_small_graphs() {
    for n in 1..=7 {
        for g in all_connected_graphs(n) {
            let naive = naive_gamma(&g, false);
            let fast = gamma_id(&g, None).ok().map(|r| r.value);
            assert_eq!(fast, naive, "{}", g.to_edge_list_string());
            if n >= 2 {
                let naive = naive_gamma(&g, true);
                let fast = gamma_tid(&g, None).ok().map(|r| r.value);
                assert_eq!(fast, naive, "total: {}", g.to_edge_list_string());
            }
        }
    }
}

#[test]
fn connected_graph_counts() {
    let expected = [1, 1, 2, 6, 21, 112, 853];
    for n in 1..=7 {
        assert_eq!(all_connected_graphs(n).len(), expected[n - 1], "n={n}");
    }
    for n in 1..=5 {
        assert_eq!(naive_connected_graph_count(n), expected[n - 1], "n={n}");
    }
}

#[test]
fn identifiable_iff_no_closed_twins() {
    for n in 1..=6 {
        for g in all_connected_graphs(n) {
            assert_eq!(naive_identifiable(&g), g.closed_twins().is_empty());
            assert_eq!(naive_identifiable(&g), g.is_identifiable());
        }
    }
}

#[test]
fn tree_counts_match_prufer() {
    for n in 1..=10 {
        let oracle = prufer_tree_count(n, true);
        let trees: Vec<_> = all_trees(n).unwrap().collect();
        assert_eq!(trees.len(), oracle, "n={n}");
        let keys: std::collections::BTreeSet<_> =
            trees.iter().map(|t| tree_key(n, &t.edges().collect::<Vec<_>>())).collect();
        assert_eq!(keys.len(), trees.len(), "duplicate trees at n={n}");
    }
}

#[test]
fn sorted_prufer_restriction_loses_nothing() {
    for n in 1..=8 {
        assert_eq!(prufer_tree_count(n, true), prufer_tree_count(n, false), "n={n}");
    }
}

#[test]
fn closed_forms_against_naive() {
    for n in 3..=12 {
        assert_eq!(naive_gamma(&path(n), false), Some(path_formula(n)), "P_{n}");
    }
    for n in 4..=12 {
        assert_eq!(naive_gamma(&cycle(n), false), Some(cycle_formula(n)), "C_{n}");
    }
}
