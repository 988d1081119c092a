mod common;

use common::RandomBuilder;
use ordered_ramsey::board::ColoredBoard;
use ordered_ramsey::family::build_family;
use ordered_ramsey::graph::find_embedding;
use ordered_ramsey::painters::*;
use ordered_ramsey::{play_game, replay, BlueTarget, Color, Transcript};
use proptest::prelude::*;
use proptest::test_runner::Config;

const REDS: [&str; 5] = ["P:3", "Kp:1,2", "X", "M:2", "N:2"];

proptest! {
    #![proptest_config(Config::with_cases(64))]

    #[test]
    fn greedy_red_never_completes_its_graph(seed in any::<u64>(), which in 0usize..5, n in 3usize..7) {
        let g = build_family(REDS[which]).unwrap();
        let mut b = RandomBuilder::new(seed);
        let t = play_game(&mut b, &mut greedy_red_unless(&g), &g, BlueTarget::Path { n }, 30).unwrap();
        let board = replay(&t).unwrap();
        let (red, _) = board.color_subgraph(Color::Red);
        prop_assert!(find_embedding(&red, &g, None).is_none());
    }

    #[test]
    fn greedy_blue_reds_only_completing_pairs(seed in any::<u64>(), which in 0usize..5, n in 3usize..7) {
        let g = build_family(REDS[which]).unwrap();
        let target = BlueTarget::Path { n };
        let mut b = RandomBuilder::new(seed);
        let t = play_game(&mut b, &mut greedy_blue_unless(n), &g, target, 30).unwrap();
        let mut board = ColoredBoard::new();
        for m in &t.moves {
            let (pre, u, v) = board.preview(&m.query).unwrap();
            prop_assert_eq!(m.color == Color::Red, completes_blue(&pre, u, v, target));
            board.apply_move(&m.query, m.color).unwrap();
        }
        prop_assert!(board.longest_path(Color::Blue).0 < n);
    }

    #[test]
    fn transcripts_round_trip(seed in any::<u64>(), which in 0usize..5, cycle in any::<bool>()) {
        let g = build_family(REDS[which]).unwrap();
        let blue = if cycle { BlueTarget::Cycle { n: 4 } } else { BlueTarget::Path { n: 4 } };
        let mut b = RandomBuilder::new(seed);
        let t = play_game(&mut b, &mut random_painter(seed), &g, blue, 25).unwrap();
        let back = Transcript::from_json_str(&t.to_json_line()).unwrap();
        prop_assert_eq!(&back, &t);
        let board = replay(&back).unwrap();
        prop_assert_eq!(board.order(), t.order.as_slice());
    }
}

#[test]
fn random_painter_transcripts_are_reproducible() {
    let g = build_family("P:3").unwrap();
    let play = || {
        let mut b = RandomBuilder::new(3);
        play_game(
            &mut b,
            &mut random_painter(7),
            &g,
            BlueTarget::Path { n: 5 },
            40,
        )
        .unwrap()
    };
    assert_eq!(play(), play());
}
