//! Parser for the class description mini-language.
//!
//! Grammar (whitespace allowed between tokens):
//!
//! ```text
//! expr  := leaf | node
//! leaf  := "av(" perm ("," perm)* ")"
//! node  := "union(" expr "," expr ")"
//!        | "sum(" expr "," expr ")"
//!        | "juxt(" expr "," expr ")"
//!        | "merge(" expr "," expr ")"
//!        | "rot(" expr ")"
//! perm  := digit string such as "231" (basis patterns of length <= 9)
//! ```

use crate::error::{Error, Result};
use crate::perm::Permutation;

use super::PatternClass;

/// Parses a basis pattern written as a digit string, e.g. `"231"`.
pub(crate) fn perm_from_digits(s: &str) -> Result<Permutation> {
    if s.is_empty() {
        return Err(Error::invalid("empty basis pattern"));
    }
    let mut values = Vec::with_capacity(s.len());
    for c in s.chars() {
        match c.to_digit(10) {
            Some(0) | None => {
                return Err(Error::invalid(format!(
                    "basis pattern {s:?} must use digits 1-9 only"
                )))
            }
            Some(d) => values.push(d),
        }
    }
    Permutation::new(values)
        .map_err(|e| Error::invalid(format!("basis pattern {s:?} is not a permutation: {e}")))
}

pub(crate) fn parse_class(input: &str) -> Result<PatternClass> {
    let mut p = Parser {
        src: input,
        pos: 0,
    };
    let class = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing input after class expression"));
    }
    Ok(class)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::invalid(format!("{msg} at byte {} of {:?}", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src.as_bytes()[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn expect(&mut self, ch: u8) -> Result<()> {
        self.skip_ws();
        if self.pos < self.src.len() && self.src.as_bytes()[self.pos] == ch {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected {:?}", ch as char)))
        }
    }

    fn ident(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src.as_bytes()[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a class constructor name"));
        }
        Ok(&self.src[start..self.pos])
    }

    fn expr(&mut self) -> Result<PatternClass> {
        let name = self.ident()?;
        match name {
            "av" => {
                self.expect(b'(')?;
                let mut basis = Vec::new();
                loop {
                    basis.push(self.digits()?);
                    self.skip_ws();
                    if self.pos < self.src.len() && self.src.as_bytes()[self.pos] == b',' {
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                self.expect(b')')?;
                PatternClass::leaf(basis)
            }
            "union" | "sum" | "juxt" | "merge" => {
                self.expect(b'(')?;
                let a = self.expr()?;
                self.expect(b',')?;
                let b = self.expr()?;
                self.expect(b')')?;
                Ok(match name {
                    "union" => PatternClass::union(a, b),
                    "sum" => PatternClass::direct_sum(a, b),
                    "juxt" => PatternClass::juxtaposition(a, b),
                    _ => PatternClass::merge(a, b),
                })
            }
            "rot" => {
                self.expect(b'(')?;
                let a = self.expr()?;
                self.expect(b')')?;
                Ok(PatternClass::rotation(a))
            }
            other => Err(self.err(&format!("unknown class constructor {other:?}"))),
        }
    }

    fn digits(&mut self) -> Result<Permutation> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src.as_bytes()[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a basis pattern (digit string)"));
        }
        perm_from_digits(&self.src[start..self.pos])
    }
}
