//! The free abelian group on the generators `w[i,j]`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::segment::Segment;

/// A Laurent monomial in the generators `w[i,j]`, stored as a sparse map
/// with no zero exponents. Keys are non-degenerate at the rank used to
/// build the value.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LWeight {
    exps: BTreeMap<Segment, i64>,
}

impl LWeight {
    pub fn identity() -> Self {
        LWeight::default()
    }

    /// `w[i,j]`, collapsing to the identity when the segment is degenerate.
    pub fn of_segment(s: Segment, rank: u32) -> Result<Self> {
        s.check(rank)?;
        let mut w = LWeight::identity();
        if !s.is_degenerate(rank) {
            w.exps.insert(s, 1);
        }
        Ok(w)
    }

    /// Builds a weight from raw `(segment, exponent)` pairs, checking every
    /// key is a genuine generator at `rank`. Repeated keys accumulate.
    pub fn from_exponents<I>(pairs: I, rank: u32) -> Result<Self>
    where
        I: IntoIterator<Item = (Segment, i64)>,
    {
        let mut w = LWeight::identity();
        for (s, e) in pairs {
            s.check(rank)?;
            if s.is_degenerate(rank) {
                return Err(Error::InvalidSegment { segment: s, rank });
            }
            w.add_exp(s, e)?;
        }
        Ok(w)
    }

    pub(crate) fn add_exp(&mut self, s: Segment, e: i64) -> Result<()> {
        if e == 0 {
            return Ok(());
        }
        let cur = self.exps.get(&s).copied().unwrap_or(0);
        let next = cur.checked_add(e).ok_or(Error::Overflow)?;
        if next == 0 {
            self.exps.remove(&s);
        } else {
            self.exps.insert(s, next);
        }
        Ok(())
    }

    pub fn is_identity(&self) -> bool {
        self.exps.is_empty()
    }

    /// Member of the monoid: every exponent nonnegative.
    pub fn is_dominant(&self) -> bool {
        self.exps.values().all(|&e| e > 0)
    }

    pub fn exponent(&self, s: &Segment) -> i64 {
        self.exps.get(s).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Segment, i64)> + '_ {
        self.exps.iter().map(|(s, e)| (*s, *e))
    }

    pub fn support(&self) -> impl Iterator<Item = Segment> + '_ {
        self.exps.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    /// Sum of all exponents.
    pub fn degree(&self) -> i64 {
        self.exps.values().sum()
    }

    pub fn checked_mul(&self, other: &LWeight) -> Result<LWeight> {
        let mut out = self.clone();
        for (s, e) in other.iter() {
            out.add_exp(s, e)?;
        }
        Ok(out)
    }

    pub fn checked_inv(&self) -> Result<LWeight> {
        self.checked_pow(-1)
    }

    pub fn checked_pow(&self, k: i64) -> Result<LWeight> {
        if k == 0 {
            return Ok(LWeight::identity());
        }
        let mut exps = BTreeMap::new();
        for (s, e) in self.iter() {
            exps.insert(s, e.checked_mul(k).ok_or(Error::Overflow)?);
        }
        Ok(LWeight { exps })
    }

    /// Group inverse. Panics on exponent overflow.
    pub fn inv(&self) -> LWeight {
        self.checked_inv().expect("l-weight exponent overflow")
    }

    /// Panics on exponent overflow.
    pub fn pow(&self, k: i64) -> LWeight {
        self.checked_pow(k).expect("l-weight exponent overflow")
    }

    /// `self * other^-1`
    pub fn ratio(&self, other: &LWeight) -> Result<LWeight> {
        self.checked_mul(&other.checked_inv()?)
    }
}

impl Mul for &LWeight {
    type Output = LWeight;

    /// Panics on exponent overflow; use [`LWeight::checked_mul`] to recover.
    fn mul(self, rhs: &LWeight) -> LWeight {
        self.checked_mul(rhs).expect("l-weight exponent overflow")
    }
}

impl Mul for LWeight {
    type Output = LWeight;

    fn mul(self, rhs: LWeight) -> LWeight {
        &self * &rhs
    }
}

impl std::iter::Product for LWeight {
    fn product<I: Iterator<Item = LWeight>>(iter: I) -> LWeight {
        iter.fold(LWeight::identity(), |acc, w| &acc * &w)
    }
}

/// `w[0,2]^1 * w[1,2]^-1`; the identity renders as `1`.
impl fmt::Display for LWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        for (k, (s, e)) in self.exps.iter().enumerate() {
            if k > 0 {
                f.write_str(" * ")?;
            }
            write!(f, "w{s}^{e}")?;
        }
        Ok(())
    }
}
