//! Ordered tuples of segments and the operators acting on them.
//!
//! Positions in the public operators are 1-based: `tau(m, l)` with
//! `1 <= m < l <= r` and `iota_at(p)` with `1 <= p <= r - 1`.

use std::fmt;

use crate::error::{Error, Result};
use crate::lweight::LWeight;
use crate::segment::Segment;

/// Which of the two orbit-representative families a normal form targets:
/// right endpoints weakly decreasing (`Plus`) or weakly increasing (`Minus`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// An ordered, nonempty tuple of segments. Order is significant.
///
/// The derived order is lexicographic on the part sequence; closures list
/// their members in this order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multisegment {
    parts: Vec<Segment>,
}

/// Whether the pair `(a, b)` is connected at `rank`: the intervals overlap
/// properly (neither is nested in the other) and their union has length at
/// most `rank + 1`.
pub fn connected(a: Segment, b: Segment, rank: u32) -> bool {
    let cap = i64::from(rank) + 1;
    let crossing = |x: Segment, y: Segment| {
        y.i < x.i && x.i <= y.j && y.j < x.j && (0..=cap).contains(&(x.j - y.i))
    };
    crossing(a, b) || crossing(b, a)
}

/// The two-segment normal-form map. `Plus` returns a pair with
/// `j1 >= j2`, crossing endpoints when the pair is connected and merely
/// swapping otherwise; `Minus` is its conjugate by the swap.
pub fn iota(a: Segment, b: Segment, sign: Sign, rank: u32) -> (Segment, Segment) {
    match sign {
        Sign::Plus => {
            if a.j >= b.j {
                (a, b)
            } else if connected(a, b, rank) {
                (Segment { i: a.i, j: b.j }, Segment { i: b.i, j: a.j })
            } else {
                (b, a)
            }
        }
        Sign::Minus => {
            if b.j >= a.j {
                (a, b)
            } else if connected(a, b, rank) {
                (Segment { i: a.i, j: b.j }, Segment { i: b.i, j: a.j })
            } else {
                (b, a)
            }
        }
    }
}

impl Multisegment {
    pub fn new(parts: Vec<Segment>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::PreconditionViolated(
                "a multisegment needs at least one part".into(),
            ));
        }
        Ok(Multisegment { parts })
    }

    /// Convenience constructor from endpoint pairs.
    pub fn from_pairs(pairs: &[(i64, i64)]) -> Result<Self> {
        let parts = pairs
            .iter()
            .map(|&(i, j)| Segment::new(i, j))
            .collect::<Result<Vec<_>>>()?;
        Multisegment::new(parts)
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<Segment>) -> Self {
        debug_assert!(!parts.is_empty());
        Multisegment { parts }
    }

    pub fn parts(&self) -> &[Segment] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn check(&self, rank: u32) -> Result<()> {
        self.parts.iter().try_for_each(|s| s.check(rank))
    }

    /// Product of the generators of all parts; degenerate parts vanish.
    pub fn weight(&self, rank: u32) -> Result<LWeight> {
        let mut w = LWeight::identity();
        for s in &self.parts {
            w = w.checked_mul(&LWeight::of_segment(*s, rank)?)?;
        }
        Ok(w)
    }

    /// `max j - min i - 1`.
    pub fn span(&self) -> i64 {
        let jmax = self.parts.iter().map(|s| s.j).max().unwrap_or(0);
        let imin = self.parts.iter().map(|s| s.i).min().unwrap_or(0);
        jmax - imin - 1
    }

    /// Smallest interval containing every part.
    pub fn bounding_box(&self) -> (i64, i64) {
        let imin = self.parts.iter().map(|s| s.i).min().unwrap_or(0);
        let jmax = self.parts.iter().map(|s| s.j).max().unwrap_or(0);
        (imin, jmax)
    }

    fn index(&self, p: usize) -> Result<usize> {
        if p == 0 || p > self.parts.len() {
            Err(Error::IndexOutOfRange {
                index: p,
                len: self.parts.len(),
            })
        } else {
            Ok(p - 1)
        }
    }

    /// `tau_{m,l}`: crosses the endpoints of parts `m` and `l` when they are
    /// connected (part `m` becomes `[i_l, j_m]`, part `l` becomes `[i_m, j_l]`),
    /// and returns `None` (the zero vector) otherwise.
    pub fn tau(&self, m: usize, l: usize, rank: u32) -> Result<Option<Multisegment>> {
        let (a, b) = (self.index(m)?, self.index(l)?);
        if a >= b {
            return Err(Error::PreconditionViolated(format!(
                "tau needs m < l, got {m}, {l}"
            )));
        }
        Ok(self.tau0(a, b, rank))
    }

    /// 0-based `tau` without range checks.
    pub(crate) fn tau0(&self, a: usize, b: usize, rank: u32) -> Option<Multisegment> {
        let (x, y) = (self.parts[a], self.parts[b]);
        if !connected(x, y, rank) {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[a] = Segment { i: y.i, j: x.j };
        parts[b] = Segment { i: x.i, j: y.j };
        Some(Multisegment { parts })
    }

    /// `tau_p = tau_{p,p+1}` applied to an optional vector (zero stays zero).
    pub fn tau_adjacent(
        v: Option<Multisegment>,
        p: usize,
        rank: u32,
    ) -> Result<Option<Multisegment>> {
        match v {
            None => Ok(None),
            Some(ms) => ms.tau(p, p + 1, rank),
        }
    }

    /// Transposes parts `m` and `l`.
    pub fn swap(&self, m: usize, l: usize) -> Result<Multisegment> {
        let (a, b) = (self.index(m)?, self.index(l)?);
        let mut parts = self.parts.clone();
        parts.swap(a, b);
        Ok(Multisegment { parts })
    }

    /// Applies `perm` as `(sigma s)_k = s_{perm[k]}` (0-based).
    pub fn permute(&self, perm: &[usize]) -> Result<Multisegment> {
        let r = self.parts.len();
        let mut seen = vec![false; r];
        if perm.len() != r
            || perm
                .iter()
                .any(|&k| k >= r || std::mem::replace(&mut seen[k], true))
        {
            return Err(Error::PreconditionViolated("not a permutation".into()));
        }
        Ok(Multisegment {
            parts: perm.iter().map(|&k| self.parts[k]).collect(),
        })
    }

    /// Permutation with `j` weakly decreasing, ties by `i` weakly decreasing.
    /// This is the canonical representative of the permutation orbit.
    pub fn sort_plus(&self) -> Multisegment {
        let mut parts = self.parts.clone();
        parts.sort_by_key(|x| std::cmp::Reverse((x.j, x.i)));
        Multisegment { parts }
    }

    /// Permutation with `j` weakly increasing, ties by `i` weakly increasing.
    pub fn sort_minus(&self) -> Multisegment {
        let mut parts = self.parts.clone();
        parts.sort_by_key(|x| (x.j, x.i));
        Multisegment { parts }
    }

    pub fn orbit_canonical(&self) -> Multisegment {
        self.sort_plus()
    }

    /// Right endpoints weakly decreasing.
    pub fn is_plus_ordered(&self) -> bool {
        self.parts.windows(2).all(|w| w[0].j >= w[1].j)
    }

    /// Right endpoints weakly increasing.
    pub fn is_minus_ordered(&self) -> bool {
        self.parts.windows(2).all(|w| w[0].j <= w[1].j)
    }

    pub fn is_ordered(&self, sign: Sign) -> bool {
        match sign {
            Sign::Plus => self.is_plus_ordered(),
            Sign::Minus => self.is_minus_ordered(),
        }
    }

    /// Both endpoint sequences weakly decreasing.
    pub fn is_doubly_sorted(&self) -> bool {
        self.parts
            .windows(2)
            .all(|w| w[0].i >= w[1].i && w[0].j >= w[1].j)
    }

    /// Right dual: `[i,j] -> [j, rank+1+i]` partwise.
    pub fn dual_right(&self, rank: u32) -> Multisegment {
        let n1 = i64::from(rank) + 1;
        Multisegment {
            parts: self
                .parts
                .iter()
                .map(|s| Segment {
                    i: s.j,
                    j: n1 + s.i,
                })
                .collect(),
        }
    }

    /// Left dual: `[i,j] -> [j - rank - 1, i]` partwise.
    pub fn dual_left(&self, rank: u32) -> Multisegment {
        let n1 = i64::from(rank) + 1;
        Multisegment {
            parts: self
                .parts
                .iter()
                .map(|s| Segment {
                    i: s.j - n1,
                    j: s.i,
                })
                .collect(),
        }
    }

    /// Applies [`iota`] to the window of parts `p, p+1`.
    pub fn iota_at(&self, p: usize, sign: Sign, rank: u32) -> Result<Multisegment> {
        let a = self.index(p)?;
        if a + 1 >= self.parts.len() {
            return Err(Error::IndexOutOfRange {
                index: p,
                len: self.parts.len(),
            });
        }
        Ok(self.iota0(a, sign, rank))
    }

    fn iota0(&self, a: usize, sign: Sign, rank: u32) -> Multisegment {
        let mut parts = self.parts.clone();
        let (x, y) = iota(parts[a], parts[a + 1], sign, rank);
        parts[a] = x;
        parts[a + 1] = y;
        Multisegment { parts }
    }

    /// The normal form `(iota_{r-1} .. iota_1)(iota_{r-1} .. iota_2) .. (iota_{r-1}) s`:
    /// for `k = r-1` down to `1`, apply `iota_k, iota_{k+1}, .., iota_{r-1}`
    /// in that order. The result is `Plus`- (resp. `Minus`-) ordered.
    pub fn normal_form(&self, sign: Sign, rank: u32) -> Multisegment {
        let r = self.parts.len();
        let mut cur = self.clone();
        for k in (0..r.saturating_sub(1)).rev() {
            for p in k..r - 1 {
                cur = cur.iota0(p, sign, rank);
            }
        }
        cur
    }

    /// Parts `p1+1 ..= p2` as a new tuple.
    pub fn slice(&self, p1: usize, p2: usize) -> Result<Multisegment> {
        if p1 >= p2 || p2 > self.parts.len() {
            return Err(Error::IndexOutOfRange {
                index: p2,
                len: self.parts.len(),
            });
        }
        Ok(Multisegment {
            parts: self.parts[p1..p2].to_vec(),
        })
    }

    pub fn concat(&self, other: &Multisegment) -> Multisegment {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Multisegment { parts }
    }
}

/// `[0,6][2,7][1,8]`
impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.parts {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}
