#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use weylcalc_core::{Multisegment, RootVector, Segment};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ms(p: &[(i64, i64)]) -> Multisegment {
    Multisegment::from_pairs(p).unwrap()
}

pub fn seg(i: i64, j: i64) -> Segment {
    Segment::new(i, j).unwrap()
}

/// A segment of length in `lens` with both endpoints in `lo..=hi`.
pub fn random_segment(rng: &mut impl Rng, lo: i64, hi: i64, max_len: i64) -> Segment {
    let len = rng.gen_range(0..=max_len.min(hi - lo));
    let i = rng.gen_range(lo..=hi - len);
    seg(i, i + len)
}

pub fn random_ms(rng: &mut impl Rng, r: usize, lo: i64, hi: i64, max_len: i64) -> Multisegment {
    let parts = (0..r)
        .map(|_| random_segment(rng, lo, hi, max_len))
        .collect();
    Multisegment::new(parts).unwrap()
}

/// The instance family of the oracle-equivalence check: rank 1..=4, 1..=3
/// parts, lengths 0..=rank+1, endpoints in [-3,6].
pub fn oracle_instances(seed: u64, count: usize) -> Vec<(u32, Multisegment)> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| {
            let rank = rng.gen_range(1..=4u32);
            let r = rng.gen_range(1..=3usize);
            (rank, random_ms(&mut rng, r, -3, 6, i64::from(rank) + 1))
        })
        .collect()
}

/// Random plus-ordered tuple with `rank > span`.
pub fn random_wide_rank(rng: &mut impl Rng, max_r: usize, max_rank: u32) -> (u32, Multisegment) {
    loop {
        let r = rng.gen_range(1..=max_r);
        let s = random_ms(rng, r, 0, i64::from(max_rank) - 1, i64::from(max_rank)).sort_plus();
        if s.span() < i64::from(max_rank) {
            let lo = (s.span() + 1).max(1) as u32;
            let rank = rng.gen_range(lo..=max_rank);
            return (rank, s);
        }
    }
}

/// Random plus-ordered tuple with left endpoints weakly decreasing too.
pub fn random_doubly_sorted(
    rng: &mut impl Rng,
    max_r: usize,
    max_rank: u32,
) -> (u32, Multisegment) {
    loop {
        let (rank, s) = random_wide_rank(rng, max_r, max_rank);
        if s.is_doubly_sorted() {
            return (rank, s);
        }
    }
}

pub fn random_root_vector(rng: &mut impl Rng, rank: u32) -> RootVector {
    let k = rng.gen_range(0..=6);
    let pairs: Vec<_> = (0..k)
        .map(|_| {
            let i = rng.gen_range(-5..=5);
            let len = rng.gen_range(1..=i64::from(rank));
            (seg(i, i + len), rng.gen_range(-3..=3))
        })
        .collect();
    RootVector::from_coefficients(pairs, rank).unwrap()
}

/// Every permutation of `0..r`, in lexicographic order.
pub fn permutations(r: usize) -> Vec<Vec<usize>> {
    if r == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(r - 1) {
        for k in 0..=p.len() {
            let mut q = p.clone();
            q.insert(k, r - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, t| acc * (n - t) / (t + 1))
}
