//! Recursive-descent parser for integer polynomials in one variable.
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := power (['*'] power)*
//! power  := atom ['^' digits]
//! atom   := digits | letter | '(' expr ')'
//! ```
//!
//! Juxtaposition multiplies, so `3x^2` and `2(x+1)` are accepted. Whitespace
//! is ignored.

use monoquartic::IntPoly;
use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("unexpected {found} at position {pos}")]
    Unexpected { found: String, pos: usize },
    #[error("more than one variable: {0} and {1}")]
    MixedVariables(char, char),
    #[error("exponent {0} is too large")]
    ExponentTooLarge(String),
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    var: Option<char>,
}

/// Parses `input`, returning the polynomial and the variable it uses.
pub fn parse_poly(input: &str) -> Result<(IntPoly, Option<char>), ParseError> {
    let chars = input.chars().filter(|c| !c.is_whitespace()).collect();
    let mut p = Parser { chars, pos: 0, var: None };
    let poly = p.expr()?;
    match p.peek() {
        None => Ok((poly, p.var)),
        Some(_) => Err(p.unexpected()),
    }
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn unexpected(&self) -> ParseError {
        let found = match self.peek() {
            Some(c) => format!("{c:?}"),
            None => "end of input".into(),
        };
        ParseError::Unexpected { found, pos: self.pos }
    }

    fn eat(&mut self, c: char) -> bool {
        let hit = self.peek() == Some(c);
        self.pos += hit as usize;
        hit
    }

    fn expr(&mut self) -> Result<IntPoly, ParseError> {
        let negate = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let first = self.term()?;
        let mut acc = if negate { -&first } else { first };
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<IntPoly, ParseError> {
        let mut acc = self.power()?;
        loop {
            let implicit = |c: char| c.is_ascii_alphanumeric() || c == '(';
            if self.eat('*') || self.peek().is_some_and(implicit) {
                acc = &acc * &self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<IntPoly, ParseError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let digits = self.digits().ok_or_else(|| self.unexpected())?;
        let e: u32 = digits.parse().map_err(|_| ParseError::ExponentTooLarge(digits.clone()))?;
        if e > 10_000 {
            return Err(ParseError::ExponentTooLarge(digits));
        }
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> Result<IntPoly, ParseError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.unexpected());
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits().expect("at a digit");
                let n: BigInt = digits.parse().expect("ascii digits");
                Ok(IntPoly::new(vec![n]))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                match self.var {
                    Some(v) if v != c => return Err(ParseError::MixedVariables(v, c)),
                    _ => self.var = Some(c),
                }
                self.pos += 1;
                Ok(IntPoly::x())
            }
            _ => Err(self.unexpected()),
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }
}
