//! Weight expressions: `(3,2,1,0)`, `(1, -1/2)`, `1/2*(31,1,1,1,1,1,1,-1)`.
//!
//! ```text
//! weight   := [rational '*'] '(' rational (',' rational)* ')'
//! rational := ['+' | '-'] digits ['/' digits]
//! ```
//!
//! Whitespace is ignored between tokens. Columns in errors are 1-based
//! character positions.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::weight::{Rational, Weight};

/// Source text together with its parsed value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightExpr {
    pub source: String,
    pub value: Weight,
}

impl std::str::FromStr for WeightExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(WeightExpr {
            source: s.to_string(),
            value: parse_weight(s)?,
        })
    }
}

struct Cursor {
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl Cursor {
    fn new(src: &str) -> Self {
        Cursor {
            chars: src.chars().enumerate().map(|(i, c)| (i + 1, c)).collect(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].1.is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn column(&self) -> usize {
        self.chars
            .get(self.pos)
            .map_or(self.chars.len() + 1, |&(col, _)| col)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            column: self.column(),
            message: message.into(),
        })
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(got) if got == c => {
                self.pos += 1;
                Ok(())
            }
            Some(got) => self.err(format!("expected '{c}', found '{got}'")),
            None => self.err(format!("expected '{c}', found end of input")),
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].1.is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return match self.chars.get(self.pos) {
                Some(&(_, c)) => self.err(format!("expected digits, found '{c}'")),
                None => self.err("expected digits, found end of input"),
            };
        }
        let s: String = self.chars[start..self.pos]
            .iter()
            .map(|&(_, c)| c)
            .collect();
        Ok(s.parse().expect("ascii digits parse"))
    }

    fn rational(&mut self) -> Result<Rational> {
        let negative = match self.peek() {
            Some('-') => {
                self.pos += 1;
                true
            }
            Some('+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let numer = self.digits()?;
        let denom = if self.peek() == Some('/') {
            self.pos += 1;
            let col = self.column();
            let d = self.digits()?;
            if d.is_zero() {
                return Err(Error::Parse {
                    column: col,
                    message: "zero denominator".into(),
                });
            }
            d
        } else {
            BigInt::from(1)
        };
        let r = Rational::new(numer, denom);
        Ok(if negative { -r } else { r })
    }

    fn tuple(&mut self) -> Result<Vec<Rational>> {
        self.expect('(')?;
        let mut out = vec![self.rational()?];
        loop {
            match self.peek() {
                Some(',') => {
                    self.pos += 1;
                    out.push(self.rational()?);
                }
                Some(')') => {
                    self.pos += 1;
                    return Ok(out);
                }
                Some(c) => return self.err(format!("expected ',' or ')', found '{c}'")),
                None => return self.err("unbalanced parentheses: missing ')'"),
            }
        }
    }
}

pub fn parse_weight(text: &str) -> Result<Weight> {
    let mut cur = Cursor::new(text);
    let scale = if cur.peek() == Some('(') {
        None
    } else {
        let s = cur.rational()?;
        cur.expect('*')?;
        Some(s)
    };
    let coords = cur.tuple()?;
    if let Some(c) = cur.peek() {
        return cur.err(format!("unexpected trailing '{c}'"));
    }
    let w = Weight::new(coords);
    Ok(match scale {
        Some(s) => w.scale(&s),
        None => w,
    })
}

/// Parses and checks the number of coordinates.
pub fn parse_weight_for(text: &str, arity: usize) -> Result<Weight> {
    let w = parse_weight(text)?;
    if w.len() != arity {
        return Err(Error::Parse {
            column: 1,
            message: format!("expected {arity} coordinates, found {}", w.len()),
        });
    }
    Ok(w)
}
