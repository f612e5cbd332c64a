//! Text literals: `[0,6][2,7][1,8]` for tuples and `w[0,2]^1 * w[1,2]^-1`
//! for l-weights. Both are the exact inverses of the `Display` impls.

use crate::error::{Error, Result};
use crate::lweight::LWeight;
use crate::multisegment::Multisegment;
use crate::segment::Segment;

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected '{}'", b as char))
        }
    }

    fn int(&mut self) -> Result<i64> {
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits {
            self.pos = start;
            return self.err("expected an integer");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        s.parse().or_else(|_| {
            self.pos = start;
            self.err("integer out of range")
        })
    }

    /// `[i,j]`, with `j < i` reported as a range error.
    fn segment(&mut self) -> Result<Segment> {
        self.expect(b'[')?;
        let i = self.int()?;
        self.expect(b',')?;
        let j = self.int()?;
        self.expect(b']')?;
        Segment::new(i, j)
    }
}

/// Parses `[i,j]` blocks in order; whitespace between blocks is allowed.
pub fn parse_multisegment(text: &str) -> Result<Multisegment> {
    let mut c = Cursor::new(text);
    let mut parts = Vec::new();
    c.skip_ws();
    while !c.at_end() {
        parts.push(c.segment()?);
        c.skip_ws();
    }
    if parts.is_empty() {
        return c.err("expected at least one segment");
    }
    Multisegment::new(parts)
}

/// Parses `1` or `w[i,j]^e` factors joined by `*`. Every generator must be
/// non-degenerate at `rank`; repeated generators accumulate.
pub fn parse_lweight(text: &str, rank: u32) -> Result<LWeight> {
    let mut c = Cursor::new(text);
    c.skip_ws();
    if c.peek() == Some(b'1') {
        c.pos += 1;
        c.skip_ws();
        if !c.at_end() {
            return c.err("unexpected input after identity");
        }
        return Ok(LWeight::identity());
    }
    let mut pairs = Vec::new();
    loop {
        c.expect(b'w')?;
        let s = c.segment()?;
        c.expect(b'^')?;
        let e = c.int()?;
        pairs.push((s, e));
        c.skip_ws();
        if c.at_end() {
            break;
        }
        c.expect(b'*')?;
        c.skip_ws();
    }
    LWeight::from_exponents(pairs, rank)
}
