//! Integer intervals `[i,j]`, the atoms of the multisegment calculus.

use std::fmt;

use crate::error::{Error, Result};

/// An interval `[i,j]` of integers with `i <= j`.
///
/// Validity depends on the rank `n` of the ambient algebra, which is passed
/// to each operation rather than stored: `[i,j]` is valid at rank `n` when
/// `j - i <= n + 1`, and degenerate there when `j - i` is `0` or `n + 1`.
///
/// The derived order is lexicographic on `(i, j)` and is the canonical order
/// used for every rendering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Segment {
    pub(crate) i: i64,
    pub(crate) j: i64,
}

impl Segment {
    pub fn new(i: i64, j: i64) -> Result<Self> {
        if j < i {
            return Err(Error::Range { i, j });
        }
        Ok(Segment { i, j })
    }

    /// Builds a segment and checks it against `rank` in one step.
    pub fn at_rank(i: i64, j: i64, rank: u32) -> Result<Self> {
        let s = Segment::new(i, j)?;
        s.check(rank)?;
        Ok(s)
    }

    #[inline]
    pub fn left(&self) -> i64 {
        self.i
    }

    #[inline]
    pub fn right(&self) -> i64 {
        self.j
    }

    #[inline]
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> i64 {
        self.j - self.i
    }

    /// `i + j`, the quantity ordering segments in the tensor-product criteria.
    #[inline]
    pub fn height(&self) -> i64 {
        self.i + self.j
    }

    pub fn is_valid(&self, rank: u32) -> bool {
        self.len() <= i64::from(rank) + 1
    }

    pub fn check(&self, rank: u32) -> Result<()> {
        if self.is_valid(rank) {
            Ok(())
        } else {
            Err(Error::InvalidSegment {
                segment: *self,
                rank,
            })
        }
    }

    pub fn is_degenerate(&self, rank: u32) -> bool {
        let l = self.len();
        l == 0 || l == i64::from(rank) + 1
    }

    pub fn translate(&self, by: i64) -> Segment {
        Segment {
            i: self.i + by,
            j: self.j + by,
        }
    }

    /// The segment attached to a fundamental parameter `(m, q^a)` with
    /// `a - m` even: `[(a-m)/2, (a+m)/2]`.
    pub fn from_fundamental(m: i64, a: i64) -> Result<Self> {
        if (a - m).rem_euclid(2) != 0 || m < 0 {
            return Err(Error::PreconditionViolated(format!(
                "({m}, q^{a}) needs m >= 0 and a - m even"
            )));
        }
        Segment::new((a - m) / 2, (a + m) / 2)
    }

    /// Inverse of [`Segment::from_fundamental`]: returns `(m, a)`.
    pub fn to_fundamental(&self) -> (i64, i64) {
        (self.j - self.i, self.i + self.j)
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.i, self.j)
    }
}
