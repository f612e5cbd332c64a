//! l-roots, the root monoid they generate, and the dominance order.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::lweight::LWeight;
use crate::segment::Segment;

/// Exponents of the l-roots `alpha[i,j]`, keyed by `[i,j]` with
/// `1 <= j - i <= rank`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootVector {
    coeffs: BTreeMap<Segment, i64>,
}

impl RootVector {
    pub fn zero() -> Self {
        RootVector::default()
    }

    pub fn from_coefficients<I>(pairs: I, rank: u32) -> Result<Self>
    where
        I: IntoIterator<Item = (Segment, i64)>,
    {
        let mut v = RootVector::zero();
        for (s, c) in pairs {
            if s.len() < 1 || s.len() > i64::from(rank) {
                return Err(Error::InvalidRoot {
                    i: s.i,
                    j: s.j,
                    rank,
                });
            }
            v.add(s, c)?;
        }
        Ok(v)
    }

    fn add(&mut self, s: Segment, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        let next = self
            .coeffs
            .get(&s)
            .copied()
            .unwrap_or(0)
            .checked_add(c)
            .ok_or(Error::Overflow)?;
        if next == 0 {
            self.coeffs.remove(&s);
        } else {
            self.coeffs.insert(s, next);
        }
        Ok(())
    }

    pub fn coefficient(&self, s: &Segment) -> i64 {
        self.coeffs.get(s).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Segment, i64)> + '_ {
        self.coeffs.iter().map(|(s, c)| (*s, *c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Member of the positive root monoid.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|&c| c >= 0)
    }

    /// `prod alpha[i,j]^c[i,j]` as an l-weight.
    pub fn compose(&self, rank: u32) -> Result<LWeight> {
        let mut out = LWeight::identity();
        for (s, c) in self.iter() {
            let a = alpha(s.i, s.j, rank)?.checked_pow(c)?;
            out = out.checked_mul(&a)?;
        }
        Ok(out)
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("1");
        }
        for (k, (s, c)) in self.coeffs.iter().enumerate() {
            if k > 0 {
                f.write_str(" * ")?;
            }
            write!(f, "a{s}^{c}")?;
        }
        Ok(())
    }
}

/// The l-root `w[i,j] w[i+1,j+1] (w[i+1,j] w[i,j+1])^-1`, with degenerate
/// factors dropped.
pub fn alpha(i: i64, j: i64, rank: u32) -> Result<LWeight> {
    let len = j - i;
    if len < 1 || len > i64::from(rank) {
        return Err(Error::InvalidRoot { i, j, rank });
    }
    let mut w = LWeight::identity();
    for (a, b, e) in [(i, j, 1), (i + 1, j + 1, 1), (i + 1, j, -1), (i, j + 1, -1)] {
        let s = Segment { i: a, j: b };
        if !s.is_degenerate(rank) {
            w.add_exp(s, e)?;
        }
    }
    Ok(w)
}

/// Writes `w` as a product of l-roots, if it is one.
///
/// Solves `e[a,b] = c[a,b] + c[a-1,b-1] - c[a-1,b] - c[a,b-1]` for `c` by
/// sweeping rows of ascending left endpoint; every dependency of a cell lies
/// in an earlier row or earlier in the same row. The sweep covers the support
/// rows widened by `rank + 2` on each side and the candidate is accepted only
/// if it recomposes to `w` exactly.
pub fn decompose_into_roots(w: &LWeight, rank: u32) -> Result<RootVector> {
    let n = i64::from(rank);
    for s in w.support() {
        if s.len() < 1 || s.len() > n {
            return Err(Error::InvalidSegment { segment: s, rank });
        }
    }
    let Some(amin) = w.support().map(|s| s.i).min() else {
        return Ok(RootVector::zero());
    };
    let amax = w.support().map(|s| s.i).max().unwrap_or(amin);
    let (lo, hi) = (amin - (n + 2), amax + (n + 2));

    let in_band = |a: i64, b: i64| (1..=n).contains(&(b - a));
    let mut c: BTreeMap<(i64, i64), i64> = BTreeMap::new();
    let get = |c: &BTreeMap<(i64, i64), i64>, a: i64, b: i64| -> i64 {
        if a < lo || !in_band(a, b) {
            0
        } else {
            c.get(&(a, b)).copied().unwrap_or(0)
        }
    };
    for a in lo..=hi {
        for b in a + 1..=a + n {
            let e = w.exponent(&Segment { i: a, j: b });
            let v = e
                .checked_sub(get(&c, a - 1, b - 1))
                .and_then(|v| v.checked_add(get(&c, a - 1, b)))
                .and_then(|v| v.checked_add(get(&c, a, b - 1)))
                .ok_or(Error::Overflow)?;
            if v != 0 {
                c.insert((a, b), v);
            }
        }
    }
    if c.keys().any(|&(a, _)| a == hi || a == lo) {
        return Err(Error::NotInRootLattice);
    }
    let v = RootVector::from_coefficients(
        c.into_iter().map(|((a, b), x)| (Segment { i: a, j: b }, x)),
        rank,
    )?;
    match v.compose(rank) {
        Ok(back) if back == *w => Ok(v),
        Ok(_) | Err(Error::Overflow) => Err(Error::NotInRootLattice),
        Err(e) => Err(e),
    }
}

/// `w1 <= w2` in the dominance order: `w2 * w1^-1` is a nonnegative product
/// of l-roots.
pub fn dominance_leq(w1: &LWeight, w2: &LWeight, rank: u32) -> bool {
    let Ok(ratio) = w2.ratio(w1) else {
        return false;
    };
    match decompose_into_roots(&ratio, rank) {
        Ok(v) => v.is_nonnegative(),
        Err(_) => false,
    }
}
