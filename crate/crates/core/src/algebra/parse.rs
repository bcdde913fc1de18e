//! Text grammar for Laurent scalars: a signed sum of terms `c`, `c*t^k`,
//! `t^k` and `t`, where `c` is an integer or a fraction `a/b` and `k` any
//! integer. Whitespace is ignored.

use num_bigint::BigInt;

use super::{Field, LaurentPoly, Scalar};
use crate::error::{Error, Result};

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        let chars = src
            .chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        Cursor { chars, pos: 0, src }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn column(&self) -> usize {
        self.chars
            .get(self.pos)
            .map_or(self.src.chars().count(), |&(i, _)| i)
            + 1
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: 1,
            column: self.column(),
            message: message.into(),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let digits: String = self.chars[start..self.pos]
            .iter()
            .map(|&(_, c)| c)
            .collect();
        Ok(digits.parse().expect("ascii digits"))
    }

    fn exponent(&mut self) -> Result<i64> {
        let negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let col = self.column();
        let v: i64 = self.integer()?.try_into().map_err(|_| Error::Parse {
            line: 1,
            column: col,
            message: "exponent out of range".into(),
        })?;
        Ok(if negative { -v } else { v })
    }

    /// `t` or `t^k`, positioned on the `t`.
    fn variable(&mut self) -> Result<i64> {
        if !self.eat('t') {
            return Err(self.error("expected `t`"));
        }
        if self.eat('^') {
            self.exponent()
        } else {
            Ok(1)
        }
    }
}

impl LaurentPoly {
    /// Parses the Laurent-scalar grammar, e.g. `2*t^-1 + 3 - t^2`, over `field`.
    pub fn parse(field: Field, src: &str) -> Result<LaurentPoly> {
        let mut cur = Cursor::new(src);
        if cur.peek().is_none() {
            return Err(cur.error("empty expression"));
        }
        let mut terms: Vec<(i64, Scalar)> = Vec::new();
        let mut first = true;
        while cur.peek().is_some() {
            let negative = match cur.peek() {
                Some('-') => {
                    cur.bump();
                    true
                }
                Some('+') => {
                    cur.bump();
                    false
                }
                _ if first => false,
                Some(c) => return Err(cur.error(format!("expected `+` or `-`, found `{c}`"))),
                None => unreachable!(),
            };
            first = false;
            let (coeff, exp) = match cur.peek() {
                Some('t') => (field.one(), cur.variable()?),
                Some(c) if c.is_ascii_digit() => {
                    let num = cur.integer()?;
                    let col = cur.column();
                    let den = if cur.eat('/') {
                        cur.integer()?
                    } else {
                        BigInt::from(1)
                    };
                    let c = field.from_ratio(&num, &den).ok_or(Error::Parse {
                        line: 1,
                        column: col,
                        message: format!("denominator {den} vanishes in {field}"),
                    })?;
                    let exp = if cur.eat('*') { cur.variable()? } else { 0 };
                    (c, exp)
                }
                Some(c) => return Err(cur.error(format!("unexpected `{c}`"))),
                None => return Err(cur.error("dangling sign")),
            };
            terms.push((exp, if negative { -coeff } else { coeff }));
        }
        Ok(LaurentPoly::from_terms(field, terms))
    }
}
