//! Byte cursor shared by the textual grammars (series, trees, positive words).

use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::scalar::{parse_rational, Rational};

pub(crate) struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(src: &'a str) -> Self {
        Self {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    pub fn pos(&self) -> usize {
        self.pos
    }

    pub fn reset(&mut self, pos: usize) {
        self.pos = pos;
    }

    pub fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    pub fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    pub fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    pub fn take_while(&mut self, f: impl Fn(u8) -> bool) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(&f) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).expect("ascii slice")
    }

    pub fn positive_integer(&mut self) -> Result<u32> {
        let start = self.pos;
        let digits = self.take_while(|c| c.is_ascii_digit());
        match digits.parse::<u32>() {
            Ok(n) if n >= 1 => Ok(n),
            Ok(_) => Err(Error::parse(start, "expected a positive integer")),
            Err(_) => Err(Error::parse(start, "expected a positive integer")),
        }
    }

    pub fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.error(format!("unexpected '{}'", c as char))),
        }
    }

    pub fn error(&self, message: impl Into<String>) -> Error {
        Error::parse(self.pos, message)
    }
}

/// Parses `[-] [c*] basis (('+'|'-') [c*] basis)*` where `c` is `p` or `p/q`.
/// A leading number is a coefficient only when followed by `*`, so bases that
/// start with digits need no quoting. When `bare_zero` is set the whole text
/// `0` denotes the zero combination (word grammars use `0*e` instead, since
/// `0` is the word x0 there).
pub(crate) fn parse_lincomb<B: Ord + Clone>(
    src: &str,
    bare_zero: bool,
    mut basis: impl FnMut(&mut Cursor<'_>) -> Result<B>,
) -> Result<LinComb<B>> {
    let mut cur = Cursor::new(src);
    let mut out = LinComb::zero();
    cur.skip_ws();
    if cur.peek().is_none() {
        return Err(cur.error("empty expression"));
    }
    if bare_zero && src.trim() == "0" {
        return Ok(out);
    }
    let mut first = true;
    loop {
        cur.skip_ws();
        let mut sign = Rational::from_integer(1.into());
        if cur.eat(b'-') {
            sign = -sign;
        } else if !first && !cur.eat(b'+') {
            return Err(cur.error("expected '+' or '-'"));
        }
        cur.skip_ws();
        let start = cur.pos();
        let number = cur.take_while(|c| c.is_ascii_digit() || c == b'/');
        let mut coeff = Rational::from_integer(1.into());
        cur.skip_ws();
        if !number.is_empty() && cur.eat(b'*') {
            coeff = parse_rational(number).ok_or_else(|| Error::parse(start, "bad coefficient"))?;
            cur.skip_ws();
        } else {
            cur.reset(start);
        }
        let b = basis(&mut cur)?;
        out.add_term(b, sign * coeff);
        first = false;
        cur.skip_ws();
        if cur.peek().is_none() {
            return Ok(out);
        }
    }
}
