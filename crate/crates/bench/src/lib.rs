//! Fixed inputs shared by the benchmarks.

use weylcalc_core::{LWeight, Multisegment, Segment};

/// `(label, tuple, rank)` closure workloads of increasing size.
pub fn closure_cases() -> Vec<(&'static str, Multisegment, u32)> {
    let ms = |p: &[(i64, i64)]| Multisegment::from_pairs(p).unwrap();
    vec![
        ("three_parts_rank7", ms(&[(0, 6), (2, 7), (1, 8)]), 7),
        ("chain4_rank8", ms(&[(3, 8), (2, 7), (1, 6), (0, 5)]), 8),
        (
            "chain5_rank9",
            ms(&[(4, 9), (3, 8), (2, 7), (1, 6), (0, 5)]),
            9,
        ),
        (
            "chain6_rank10",
            ms(&[(5, 10), (4, 9), (3, 8), (2, 7), (1, 6), (0, 5)]),
            10,
        ),
    ]
}

/// The product of a fundamental character's top and bottom weights, which
/// spans every l-root below the top.
pub fn decompose_case(rank: u32) -> LWeight {
    let n1 = i64::from(rank) + 1;
    let half = n1 / 2;
    let top = LWeight::of_segment(Segment::new(0, half).unwrap(), rank).unwrap();
    let bottom = LWeight::of_segment(Segment::new(half, n1).unwrap(), rank).unwrap();
    &top * &bottom
}
