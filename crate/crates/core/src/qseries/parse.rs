//! Tiny recursive-descent parser for polynomial literals used in tests and fixtures.

use num_bigint::BigInt;

use super::{MSeries, Rat};
use crate::error::{Error, Result};

const NAMES: [&str; 3] = ["tb", "tw", "tg"];

pub(super) fn parse_poly(nvars: usize, order: u32, src: &str) -> Result<MSeries> {
    let mut p = Parser {
        s: src.as_bytes(),
        pos: 0,
        nvars,
        order,
    };
    let v = p.expr()?;
    p.ws();
    if p.pos != p.s.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    nvars: usize,
    order: u32,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at byte {}", self.pos))
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<MSeries> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MSeries> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.integer()?;
                    if d == BigInt::from(0) {
                        return Err(self.err("division by zero"));
                    }
                    acc = acc.scale(&Rat::new(BigInt::from(1), d));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<MSeries> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MSeries> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(MSeries::constant(
                    self.nvars,
                    self.order,
                    Rat::from_integer(n),
                ))
            }
            Some(_) => {
                for (k, name) in NAMES.iter().enumerate().take(self.nvars) {
                    if self.s[self.pos..].starts_with(name.as_bytes()) {
                        self.pos += name.len();
                        return Ok(MSeries::var(self.nvars, self.order, k));
                    }
                }
                Err(self.err("unexpected token"))
            }
            None => Err(self.err("unexpected end")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii");
        txt.parse().map_err(|_| self.err("bad integer"))
    }
}
