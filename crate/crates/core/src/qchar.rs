//! Snake paths for fundamental modules and the q-character multisets built
//! from them. This is the brute-force oracle the closure-based decision
//! procedures are checked against.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::lweight::LWeight;
use crate::multisegment::{connected, Multisegment};
use crate::segment::Segment;

/// A `±1`-step lattice path `g(0), .., g(rank+1)` from `2j` to `rank+1+2i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    values: Vec<i64>,
}

/// Local minima (`plus`) and local maxima (`minus`) of a path, each recorded
/// as the segment `[(g(r)-r)/2, (g(r)+r)/2]`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CornerData {
    pub plus: Vec<Segment>,
    pub minus: Vec<Segment>,
}

impl Path {
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// Checks the path conditions for the generating segment `seg` at `rank`.
    pub fn from_values(values: Vec<i64>, seg: Segment, rank: u32) -> Result<Self> {
        let n1 = i64::from(rank) + 1;
        let ok = values.len() == rank as usize + 2
            && values[0] == 2 * seg.j
            && values[values.len() - 1] == n1 + 2 * seg.i
            && values.windows(2).all(|w| (w[1] - w[0]).abs() == 1);
        if !ok {
            return Err(Error::PreconditionViolated(format!(
                "{values:?} is not a path for {seg} at rank {rank}"
            )));
        }
        Ok(Path { values })
    }

    pub fn corners(&self) -> CornerData {
        let g = &self.values;
        let mut c = CornerData::default();
        for r in 1..g.len() - 1 {
            let rr = r as i64;
            let s = Segment {
                i: (g[r] - rr) / 2,
                j: (g[r] + rr) / 2,
            };
            if g[r - 1] == g[r] + 1 && g[r + 1] == g[r] + 1 {
                c.plus.push(s);
            } else if g[r - 1] == g[r] - 1 && g[r + 1] == g[r] - 1 {
                c.minus.push(s);
            }
        }
        c
    }

    /// Product over minima of `w[m,l]` times product over maxima of `w[m,l]^-1`.
    pub fn weight(&self, rank: u32) -> Result<LWeight> {
        let c = self.corners();
        let mut w = LWeight::identity();
        for s in c.plus {
            w = w.checked_mul(&LWeight::of_segment(s, rank)?)?;
        }
        for s in c.minus {
            w = w.checked_mul(&LWeight::of_segment(s, rank)?.checked_inv()?)?;
        }
        Ok(w)
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.values.iter().join(","))
    }
}

/// All paths for `seg` at `rank`, ordered by the lexicographic order of
/// their down-step positions. There are `C(rank+1, j-i)` of them.
pub fn enumerate_paths(seg: Segment, rank: u32) -> Result<Vec<Path>> {
    seg.check(rank)?;
    let steps = rank as usize + 1;
    let downs = seg.len() as usize;
    Ok((0..steps)
        .combinations(downs)
        .map(|pos| {
            let mut values = Vec::with_capacity(steps + 1);
            let mut g = 2 * seg.j;
            values.push(g);
            let mut it = pos.iter().peekable();
            for k in 0..steps {
                if it.peek() == Some(&&k) {
                    it.next();
                    g -= 1;
                } else {
                    g += 1;
                }
                values.push(g);
            }
            Path { values }
        })
        .collect())
}

/// A finite multiset of l-weights with positive multiplicities.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct QChar {
    terms: BTreeMap<LWeight, u64>,
}

impl QChar {
    /// The character of the trivial module.
    pub fn one() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(LWeight::identity(), 1);
        QChar { terms }
    }

    pub fn empty() -> Self {
        QChar::default()
    }

    pub fn add_term(&mut self, w: LWeight, mult: u64) -> Result<()> {
        if mult == 0 {
            return Ok(());
        }
        let e = self.terms.entry(w).or_insert(0);
        *e = e.checked_add(mult).ok_or(Error::Overflow)?;
        Ok(())
    }

    pub fn multiplicity(&self, w: &LWeight) -> u64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&LWeight, u64)> + '_ {
        self.terms.iter().map(|(w, m)| (w, *m))
    }

    /// Number of distinct l-weights.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of multiplicities, i.e. the dimension.
    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }

    /// Multiset product: weights multiply, multiplicities multiply and add.
    pub fn convolve(&self, other: &QChar) -> Result<QChar> {
        let mut out = QChar::empty();
        for (a, ma) in &self.terms {
            for (b, mb) in &other.terms {
                out.add_term(
                    a.checked_mul(b)?,
                    ma.checked_mul(*mb).ok_or(Error::Overflow)?,
                )?;
            }
        }
        Ok(out)
    }

    /// Terms whose weight is dominant.
    pub fn dominant_part(&self) -> QChar {
        QChar {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.is_dominant())
                .map(|(w, m)| (w.clone(), *m))
                .collect(),
        }
    }

    /// Every term of `self` occurs in `other` with at least its multiplicity.
    pub fn is_submultiset_of(&self, other: &QChar) -> bool {
        self.terms.iter().all(|(w, m)| other.multiplicity(w) >= *m)
    }
}

/// One `mult * weight` line per term, in canonical weight order.
impl fmt::Display for QChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (w, m) in &self.terms {
            writeln!(f, "{m} * {w}")?;
        }
        Ok(())
    }
}

/// l-weights of the fundamental module of a non-degenerate segment, one per
/// path.
pub fn fundamental_qchar(seg: Segment, rank: u32) -> Result<QChar> {
    seg.check(rank)?;
    if seg.is_degenerate(rank) {
        return Err(Error::InvalidSegment { segment: seg, rank });
    }
    let mut q = QChar::empty();
    for g in enumerate_paths(seg, rank)? {
        q.add_term(g.weight(rank)?, 1)?;
    }
    Ok(q)
}

/// Product of the fundamental characters of the non-degenerate parts.
/// Parts are multiplied in `sort_plus` order; the result does not depend on
/// the order.
pub fn weyl_qchar(ms: &Multisegment, rank: u32) -> Result<QChar> {
    ms.check(rank)?;
    let mut q = QChar::one();
    for s in ms.sort_plus().parts() {
        if !s.is_degenerate(rank) {
            q = q.convolve(&fundamental_qchar(*s, rank)?)?;
        }
    }
    Ok(q)
}

/// The l-weights of the simple module of a connected plus-ordered pair,
/// from pairs of paths with the first strictly above the second everywhere.
pub fn pair_simple_qchar(ms: &Multisegment, rank: u32) -> Result<QChar> {
    ms.check(rank)?;
    let p = ms.parts();
    if p.len() != 2 || !ms.is_plus_ordered() || !connected(p[0], p[1], rank) {
        return Err(Error::PreconditionViolated(format!(
            "{ms} is not a connected plus-ordered pair at rank {rank}"
        )));
    }
    let upper = enumerate_paths(p[0], rank)?;
    let lower = enumerate_paths(p[1], rank)?;
    let upper_w = upper
        .iter()
        .map(|g| g.weight(rank))
        .collect::<Result<Vec<_>>>()?;
    let lower_w = lower
        .iter()
        .map(|g| g.weight(rank))
        .collect::<Result<Vec<_>>>()?;
    let mut q = QChar::empty();
    for (g1, w1) in upper.iter().zip(&upper_w) {
        for (g2, w2) in lower.iter().zip(&lower_w) {
            if g1.values.iter().zip(&g2.values).all(|(a, b)| a > b) {
                q.add_term(w1.checked_mul(w2)?, 1)?;
            }
        }
    }
    Ok(q)
}

/// `prod_s w[i_s, j_1+1] w[j_s, j_1+1]^-1` for a doubly sorted tuple; the
/// weight whose space is one-dimensional in every Weyl module of the closure.
pub fn soclehom_weight(ms: &Multisegment, rank: u32) -> Result<LWeight> {
    ms.check(rank)?;
    if !ms.is_doubly_sorted() {
        return Err(Error::PreconditionViolated(format!(
            "{ms} is not doubly sorted"
        )));
    }
    let top = ms.parts()[0].j + 1;
    let mut w = LWeight::identity();
    for s in ms.parts() {
        let num = LWeight::of_segment(Segment { i: s.i, j: top }, rank)?;
        let den = LWeight::of_segment(Segment { i: s.j, j: top }, rank)?;
        w = w.checked_mul(&num)?.checked_mul(&den.checked_inv()?)?;
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seg(i: i64, j: i64) -> Segment {
        Segment::new(i, j).unwrap()
    }

    fn w(pairs: &[(i64, i64, i64)], rank: u32) -> LWeight {
        LWeight::from_exponents(pairs.iter().map(|&(i, j, e)| (seg(i, j), e)), rank).unwrap()
    }

    fn binomial(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, t| acc * (n - t) / (t + 1))
    }

    #[test]
    fn paths_for_01_rank_2() {
        let ps = enumerate_paths(seg(0, 1), 2).unwrap();
        let vals: Vec<Vec<i64>> = ps.iter().map(|p| p.values().to_vec()).collect();
        assert_eq!(
            vals,
            vec![vec![2, 1, 2, 3], vec![2, 3, 2, 3], vec![2, 3, 4, 3]]
        );
        assert_eq!(ps[0].weight(2).unwrap(), w(&[(0, 1, 1)], 2));
        assert_eq!(ps[1].weight(2).unwrap(), w(&[(0, 2, 1), (1, 2, -1)], 2));
        assert_eq!(ps[2].weight(2).unwrap(), w(&[(1, 3, -1)], 2));
    }

    #[test]
    fn monotone_paths() {
        assert_eq!(
            enumerate_paths(seg(0, 0), 2).unwrap()[0].values(),
            &[0, 1, 2, 3]
        );
        let down = enumerate_paths(seg(0, 3), 2).unwrap();
        assert_eq!(down.len(), 1);
        assert_eq!(down[0].values(), &[6, 5, 4, 3]);
        assert!(enumerate_paths(seg(0, 4), 2).is_err());
    }

    #[test]
    fn path_validation() {
        assert!(Path::from_values(vec![2, 1, 2, 3], seg(0, 1), 2).is_ok());
        assert!(Path::from_values(vec![2, 1, 2, 1], seg(0, 1), 2).is_err());
        assert!(Path::from_values(vec![2, 2, 2, 3], seg(0, 1), 2).is_err());
    }

    #[test]
    fn corner_minus_heights_exceed_generator() {
        for rank in 1..=6u32 {
            for len in 1..=i64::from(rank) {
                let s = seg(0, len);
                for g in enumerate_paths(s, rank).unwrap() {
                    for m in g.corners().minus {
                        assert!(m.height() > s.height());
                    }
                }
            }
        }
    }

    #[test]
    fn fundamental_01_rank_2() {
        let q = fundamental_qchar(seg(0, 1), 2).unwrap();
        assert_eq!(q.len(), 3);
        assert_eq!(q.total(), 3);
        assert_eq!(q.multiplicity(&w(&[(0, 1, 1)], 2)), 1);
        assert_eq!(q.multiplicity(&w(&[(0, 2, 1), (1, 2, -1)], 2)), 1);
        assert_eq!(q.multiplicity(&w(&[(1, 3, -1)], 2)), 1);
        let d = q.dominant_part();
        assert_eq!(d.len(), 1);
        assert_eq!(d.multiplicity(&w(&[(0, 1, 1)], 2)), 1);
    }

    #[test]
    fn fundamental_sizes_are_binomial() {
        for rank in 1..=8u32 {
            for len in 1..=i64::from(rank) {
                let q = fundamental_qchar(seg(-1, len - 1), rank).unwrap();
                assert_eq!(q.total(), binomial(u64::from(rank) + 1, len as u64));
            }
        }
    }

    #[test]
    fn fundamental_rejects_degenerate() {
        assert!(fundamental_qchar(seg(0, 0), 2).is_err());
        assert!(fundamental_qchar(seg(0, 3), 2).is_err());
    }

    #[test]
    fn weyl_square_has_mass_nine() {
        let ms = Multisegment::from_pairs(&[(0, 1), (0, 1)]).unwrap();
        let q = weyl_qchar(&ms, 2).unwrap();
        assert_eq!(q.total(), 9);
        // hand convolution of the three fundamental terms
        assert_eq!(q.multiplicity(&w(&[(0, 1, 2)], 2)), 1);
        assert_eq!(
            q.multiplicity(&w(&[(0, 1, 1), (0, 2, 1), (1, 2, -1)], 2)),
            2
        );
        assert_eq!(q.multiplicity(&w(&[(0, 1, 1), (1, 3, -1)], 2)), 2);
        assert_eq!(q.multiplicity(&w(&[(0, 2, 2), (1, 2, -2)], 2)), 1);
        assert_eq!(
            q.multiplicity(&w(&[(0, 2, 1), (1, 2, -1), (1, 3, -1)], 2)),
            2
        );
        assert_eq!(q.multiplicity(&w(&[(1, 3, -2)], 2)), 1);
        assert_eq!(q.len(), 6);
    }

    #[test]
    fn weyl_ignores_degenerate_parts() {
        let with = Multisegment::from_pairs(&[(0, 1), (4, 4), (2, 5)]).unwrap();
        let without = Multisegment::from_pairs(&[(0, 1)]).unwrap();
        assert_eq!(
            weyl_qchar(&with, 2).unwrap(),
            weyl_qchar(&without, 2).unwrap()
        );
        assert_eq!(
            weyl_qchar(&without, 2).unwrap(),
            fundamental_qchar(seg(0, 1), 2).unwrap()
        );
        let trivial = Multisegment::from_pairs(&[(3, 3)]).unwrap();
        assert_eq!(weyl_qchar(&trivial, 2).unwrap(), QChar::one());
    }

    #[test]
    fn empty_dominant_part() {
        assert!(QChar::empty().dominant_part().is_empty());
    }

    #[test]
    fn pair_simple_preconditions() {
        let nested = Multisegment::from_pairs(&[(0, 5), (1, 4)]).unwrap();
        assert!(pair_simple_qchar(&nested, 6).is_err());
        let minus_ordered = Multisegment::from_pairs(&[(1, 3), (0, 4)]).unwrap();
        assert!(pair_simple_qchar(&minus_ordered, 6).is_err());
    }

    #[test]
    fn pair_simple_is_strictly_smaller() {
        let p = Multisegment::from_pairs(&[(1, 3), (0, 2)]).unwrap();
        let simple = pair_simple_qchar(&p, 3).unwrap();
        let weyl = weyl_qchar(&p, 3).unwrap();
        assert!(simple.is_submultiset_of(&weyl));
        assert!(simple.total() < weyl.total());
        let dom = simple.dominant_part();
        assert_eq!(dom.len(), 1);
        assert_eq!(dom.multiplicity(&p.weight(3).unwrap()), 1);
    }

    #[test]
    fn soclehom_single_segment() {
        let ms = Multisegment::from_pairs(&[(1, 3)]).unwrap();
        assert_eq!(
            soclehom_weight(&ms, 4).unwrap(),
            w(&[(1, 4, 1), (3, 4, -1)], 4)
        );
        // degenerate part contributes nothing
        let deg = Multisegment::from_pairs(&[(1, 3), (1, 1)]).unwrap();
        assert_eq!(
            soclehom_weight(&deg, 4).unwrap(),
            soclehom_weight(&ms, 4).unwrap()
        );
        assert!(soclehom_weight(&Multisegment::from_pairs(&[(0, 1), (2, 3)]).unwrap(), 4).is_err());
    }
}
