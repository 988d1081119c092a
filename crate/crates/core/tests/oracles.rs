mod common;

use common::*;
use ordered_ramsey::board::ColoredBoard;
use ordered_ramsey::graph::{
    find_embedding, interval_chromatic_number, interval_partition, longest_monotone_path, Host,
    OrderedGraph,
};
use ordered_ramsey::solver::canonicalize;
use ordered_ramsey::Color;
use proptest::prelude::*;
use proptest::test_runner::Config;

fn graph() -> impl Strategy<Value = OrderedGraph> {
    (0usize..=8, any::<u64>(), 0u32..4).prop_map(|(n, mask, sparsity)| {
        // thin out by and-ing with shifted copies
        let mut m = mask;
        for s in 0..sparsity {
            m &= mask.rotate_left(7 * (s + 1));
        }
        graph_from_mask(n, m)
    })
}

fn board(max: usize) -> impl Strategy<Value = ColoredBoard> {
    prop::collection::vec((any::<u16>(), any::<u16>(), any::<bool>()), 0..12)
        .prop_map(move |steps| board_from_steps(&steps, max))
}

proptest! {
    #![proptest_config(Config::with_cases(1000))]

    #[test]
    fn interval_chromatic_matches_brute_force(g in graph()) {
        prop_assert_eq!(interval_chromatic_number(&g), brute_interval_chromatic(&g));
        let parts = interval_partition(&g);
        prop_assert_eq!(parts.len(), interval_chromatic_number(&g));
        for (s, e) in parts {
            prop_assert!(g.edges().all(|(i, j)| !(s <= i && j < e)));
        }
    }

    #[test]
    fn longest_path_matches_brute_force(b in board(8)) {
        for color in [Color::Red, Color::Blue] {
            let (len, witness) = longest_monotone_path(&b, color);
            prop_assert_eq!(len, brute_longest(&b, color));
            prop_assert_eq!(witness.len(), len);
            prop_assert!(witness.windows(2).all(|w| b.has_edge(w[0], w[1], Some(color))));
        }
    }

    #[test]
    fn embedding_matches_brute_force(host in graph(), pattern in graph()) {
        let pattern = if pattern.n() > 4 { pattern.initial_subgraph(4) } else { pattern };
        let found = find_embedding(&host, &pattern, None);
        prop_assert_eq!(found.is_some(), brute_embeds(&host, &pattern));
        if let Some(e) = found {
            prop_assert!(e.is_valid(&host, &pattern, None));
        }
    }
}

proptest! {
    #![proptest_config(Config::with_cases(10_000))]

    #[test]
    fn canonical_keys_respect_isomorphism(a in board(8), b in board(8), seed in any::<u64>(), extra in any::<usize>()) {
        let copy = shuffled_copy(&a, seed, extra);
        prop_assert_eq!(canonicalize(&copy), canonicalize(&a));
        prop_assert_eq!(canonicalize(&a) == canonicalize(&b), explicit_form(&a) == explicit_form(&b));
    }
}
