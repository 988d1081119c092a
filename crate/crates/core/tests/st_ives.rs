mod common;

use common::{letters, states, to_stitch_round};
use ordered_ramsey::builders::*;
use ordered_ramsey::family::build_family;
use ordered_ramsey::painters::*;
use ordered_ramsey::{play_game, replay, BlueTarget, Outcome, PainterStrategy};

#[test]
fn blue_tip_edge_extends_path() {
    let s = states(1, &mut letters(&[("B", 8)]), 8);
    assert_eq!(s, vec![vec![8, 0], vec![9, 0]]);
}

#[test]
fn red_tip_edge_then_red_link_nests() {
    // tip edge red, 8-vertex chain blue, z z' red
    let s = states(
        1,
        &mut letters(&[("B", 7), ("R", 1), ("B", 7), ("R", 1), ("B", 1)]),
        16,
    );
    assert_eq!(s, vec![vec![8, 0], vec![8, 1]]);
    // z z' blue: the path continues through the chain
    let s = states(1, &mut letters(&[("B", 7), ("R", 1), ("B", 9)]), 16);
    assert_eq!(s, vec![vec![8, 0], vec![9, 1]]);
}

#[test]
fn red_stitches_complete_inner_matching() {
    let mut parts = to_stitch_round();
    parts.extend([("B", 28), ("R", 2)]);
    let s = states(2, &mut letters(&parts), 26 + 3 * 28 + 30);
    assert_eq!(
        s,
        vec![
            vec![27, 0],
            vec![27, 1],
            vec![27, 2],
            vec![27, 3],
            vec![25, 4]
        ]
    );
}

#[test]
fn blue_stitch_reroutes_path() {
    let mut parts = to_stitch_round();
    parts.extend([("B", 28), ("R", 1), ("B", 1)]);
    let s = states(2, &mut letters(&parts), 26 + 3 * 28 + 30);
    // second stitch blue: 27 path vertices, then the whole 29-vertex chain
    assert_eq!(s.last().unwrap(), &vec![27 + 29, 2]);
}

fn finish(width: usize, painter: &mut dyn PainterStrategy, n: usize) -> (Outcome, usize, u64) {
    let mut b = partial_st_ives_builder_with(1, n, CliqueOracle::with_width(width)).unwrap();
    let bound = partial_st_ives_bound(1, n, &CliqueOracle::with_width(width));
    let g = build_family("Sp:1").unwrap();
    let t = play_game(
        &mut b,
        painter,
        &g,
        BlueTarget::Path { n },
        bound as usize + 1,
    )
    .unwrap();
    replay(&t).unwrap();
    (t.result, t.moves.len(), bound)
}

#[test]
fn k1_mock_oracle_against_painters() {
    let sp1 = build_family("Sp:1").unwrap();
    for n in [9, 12, 20] {
        let (r, m, bound) = finish(8, &mut all_red(), n);
        assert_eq!(r, Outcome::RedWin);
        assert!(m as u64 <= bound);
        let (r, m, bound) = finish(8, &mut greedy_blue_unless(n), n);
        assert_ne!(r, Outcome::Capped, "greedy-blue n={n}");
        assert!(m as u64 <= bound);
        let (r, m, bound) = finish(10, &mut greedy_red_unless(&sp1), n);
        assert_ne!(r, Outcome::Capped, "greedy-red n={n}");
        assert!(m as u64 <= bound);
    }
    for n in [2, 4, 8, 12] {
        assert_eq!(finish(8, &mut all_blue(), n).0, Outcome::BlueWin);
        assert_eq!(finish(8, &mut all_red(), n).0, Outcome::RedWin);
    }
}
