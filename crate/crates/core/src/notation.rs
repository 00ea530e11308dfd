//! Bracket notation.
//!
//! ```text
//! params   := "{" int ";" "(" eps "," nat "," "(" nat "," nat ")" ")" ";"
//!             "(" natlist "|" natlist ")" ";" pairlist? "}"
//! eps      := "o" | "o1" | "o2" | "n" | "n1" | "n2" | "n3" | "n4"
//! natlist  := ε | nat ("," nat)*
//! pairlist := "(" pair ("," pair)* ")"
//! pair     := "(" int "," int ")"
//! ```
//!
//! Whitespace is allowed between tokens. [`print`] emits the canonical form
//! with no whitespace at all.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::params::{Epsilon, FibreType, SeifertParams};

pub fn print(params: &SeifertParams) -> String {
    let mut s = String::with_capacity(32 + 8 * params.pairs.len());
    let join = |xs: &[u32]| xs.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
    write!(
        s,
        "{{{};({},{},({},{}));({}|{});",
        params.b,
        params.epsilon,
        params.g,
        params.t,
        params.k,
        join(&params.hplus),
        join(&params.kminus)
    )
    .unwrap();
    if !params.pairs.is_empty() {
        s.push('(');
        for (i, pair) in params.pairs.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            write!(s, "{pair}").unwrap();
        }
        s.push(')');
    }
    s.push('}');
    s
}

pub fn parse(text: &str) -> Result<SeifertParams> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let params = p.params()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("trailing input after '}'"));
    }
    Ok(params)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += 1;
                Ok(())
            }
            Some(x) => Err(self.error(format!("expected '{}', found '{}'", c as char, x as char))),
            None => Err(self.error(format!("expected '{}', found end of input", c as char))),
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<&str> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a decimal integer"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn nat(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        let d = self.digits()?;
        d.parse().map_err(|_| Error::Syntax { pos: start, msg: format!("integer overflow: {d}") })
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        let neg = self.src.get(self.pos) == Some(&b'-');
        if neg {
            self.pos += 1;
        }
        let d = self.digits()?;
        let text = if neg { format!("-{d}") } else { d.to_owned() };
        text.parse().map_err(|_| Error::Syntax { pos: start, msg: format!("integer overflow: {text}") })
    }

    fn epsilon(&mut self) -> Result<Epsilon> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_alphanumeric) {
            self.pos += 1;
        }
        let word = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        word.parse().map_err(|msg| Error::Syntax { pos: start, msg })
    }

    fn natlist(&mut self, terminator: u8) -> Result<Vec<u32>> {
        let mut out = Vec::new();
        if self.peek() == Some(terminator) {
            return Ok(out);
        }
        loop {
            out.push(self.nat()?);
            if !self.eat(b',') {
                return Ok(out);
            }
        }
    }

    fn pair(&mut self) -> Result<FibreType> {
        self.expect(b'(')?;
        let p = self.int()?;
        self.expect(b',')?;
        let q = self.int()?;
        self.expect(b')')?;
        Ok(FibreType { p, q })
    }

    fn params(&mut self) -> Result<SeifertParams> {
        self.expect(b'{')?;
        let b = self.int()?;
        self.expect(b';')?;

        self.expect(b'(')?;
        let epsilon = self.epsilon()?;
        self.expect(b',')?;
        let g = self.nat()?;
        self.expect(b',')?;
        self.expect(b'(')?;
        let t = self.nat()?;
        self.expect(b',')?;
        let k = self.nat()?;
        self.expect(b')')?;
        self.expect(b')')?;
        self.expect(b';')?;

        self.expect(b'(')?;
        let hplus = self.natlist(b'|')?;
        self.expect(b'|')?;
        let kminus = self.natlist(b')')?;
        self.expect(b')')?;
        self.expect(b';')?;

        let mut pairs = Vec::new();
        if self.eat(b'(') {
            loop {
                pairs.push(self.pair()?);
                if !self.eat(b',') {
                    break;
                }
            }
            self.expect(b')')?;
        }
        self.expect(b'}')?;
        Ok(SeifertParams { b, epsilon, g, t, k, hplus, kminus, pairs })
    }
}
