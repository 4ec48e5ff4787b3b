//! Parsing and printing of polynomial expressions in one variable x.
//!
//! The accepted grammar, with insignificant whitespace between tokens:
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' uint)?
//! base     := rational | 'x' | '(' expr ')'
//! rational := '-'? uint ('/' uint)?
//! ```
//!
//! There is no implicit multiplication: `2x` is a syntax error, `2*x` is
//! not. A leading minus is part of a rational literal only, so `-x` does not
//! parse while `-1*x` does; the printer below respects that, which makes
//! parse -> print -> parse a fixed point on polynomials.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::poly::Poly;
use crate::{PolyQ, Rational};

/// Failure to parse an expression, with the byte offset where the input
/// stopped making sense.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: expected {}", list_expected(expected))]
    Syntax {
        offset: usize,
        expected: Vec<&'static str>,
    },
    #[error("division by zero at byte {offset}: rational literals need a nonzero denominator")]
    DivideByZero { offset: usize },
}

impl ParseError {
    /// Byte offset into the original input where the error was detected.
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. } => *offset,
            ParseError::DivideByZero { offset } => *offset,
        }
    }
}

fn list_expected(expected: &[&'static str]) -> String {
    match expected {
        [] => "nothing".to_string(),
        [only] => (*only).to_string(),
        _ => format!("one of {}", expected.join(", ")),
    }
}

/// Abstract syntax of the expression grammar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyExpr {
    Lit(Rational),
    Var,
    Add(Box<PolyExpr>, Box<PolyExpr>),
    Sub(Box<PolyExpr>, Box<PolyExpr>),
    Mul(Box<PolyExpr>, Box<PolyExpr>),
    Pow(Box<PolyExpr>, u32),
}

impl PolyExpr {
    /// Parses the grammar above into an expression tree.
    pub fn parse(text: &str) -> Result<PolyExpr, ParseError> {
        let mut p = Parser {
            bytes: text.as_bytes(),
            pos: 0,
        };
        let expr = p.expr()?;
        p.skip_ws();
        if p.pos < p.bytes.len() {
            return Err(ParseError::Syntax {
                offset: p.pos,
                expected: vec!["'+'", "'-'", "'*'", "end of input"],
            });
        }
        Ok(expr)
    }

    /// Lowers the tree to a dense polynomial with exact coefficients.
    pub fn to_poly(&self) -> PolyQ {
        match self {
            PolyExpr::Lit(q) => PolyQ::constant(q.clone()),
            PolyExpr::Var => PolyQ::x(),
            PolyExpr::Add(a, b) => &a.to_poly() + &b.to_poly(),
            PolyExpr::Sub(a, b) => &a.to_poly() - &b.to_poly(),
            PolyExpr::Mul(a, b) => &a.to_poly() * &b.to_poly(),
            PolyExpr::Pow(a, e) => a.to_poly().pow(*e),
        }
    }
}

/// Parses an expression and lowers it to a polynomial in one step.
pub fn parse_poly(text: &str) -> Result<PolyQ, ParseError> {
    Ok(PolyExpr::parse(text)?.to_poly())
}

const EXPECTED_BASE: &[&str] = &["a rational literal", "'x'", "'('"];

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<PolyExpr, ParseError> {
        let mut node = self.term()?;
        loop {
            if self.eat(b'+') {
                node = PolyExpr::Add(Box::new(node), Box::new(self.term()?));
            } else if self.eat(b'-') {
                node = PolyExpr::Sub(Box::new(node), Box::new(self.term()?));
            } else {
                return Ok(node);
            }
        }
    }

    fn term(&mut self) -> Result<PolyExpr, ParseError> {
        let mut node = self.factor()?;
        while self.eat(b'*') {
            node = PolyExpr::Mul(Box::new(node), Box::new(self.factor()?));
        }
        Ok(node)
    }

    fn factor(&mut self) -> Result<PolyExpr, ParseError> {
        let base = self.base()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let (digits, offset) = self.uint("an integer exponent")?;
        let exponent: u32 = digits.to_string().parse().map_err(|_| ParseError::Syntax {
            offset,
            expected: vec!["an exponent below 2^32"],
        })?;
        Ok(PolyExpr::Pow(Box::new(base), exponent))
    }

    fn base(&mut self) -> Result<PolyExpr, ParseError> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok(PolyExpr::Var)
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                if self.bytes.get(self.pos) != Some(&b')') {
                    return Err(ParseError::Syntax {
                        offset: self.pos,
                        expected: vec!["'+'", "'-'", "'*'", "')'"],
                    });
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b) if b == b'-' || b.is_ascii_digit() => self.rational(),
            _ => Err(ParseError::Syntax {
                offset: self.pos,
                expected: EXPECTED_BASE.to_vec(),
            }),
        }
    }

    fn rational(&mut self) -> Result<PolyExpr, ParseError> {
        let negative = self.eat(b'-');
        let (numer, _) = self.uint("an integer")?;
        let mut numer = BigInt::from(numer);
        if negative {
            numer = -numer;
        }
        if !self.eat(b'/') {
            return Ok(PolyExpr::Lit(Rational::from_integer(numer)));
        }
        let (denom, offset) = self.uint("an integer")?;
        if denom.is_zero() {
            return Err(ParseError::DivideByZero { offset });
        }
        Ok(PolyExpr::Lit(Rational::new(numer, BigInt::from(denom))))
    }

    /// A run of decimal digits; `what` names the expectation for errors.
    fn uint(&mut self, what: &'static str) -> Result<(BigUint, usize), ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(ParseError::Syntax {
                offset: start,
                expected: vec![what],
            });
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("digits are valid utf-8")
            .parse()
            .expect("digits parse as an integer");
        Ok((digits, start))
    }
}

/// Prints in descending degree so the output re-parses to the same
/// polynomial: coefficients attach with an explicit `*`, a leading negative
/// term is folded into its rational literal, and later signs become binary
/// operators.
impl fmt::Display for Poly<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(degree) = self.degree() else {
            return write!(f, "0");
        };
        let mut first = true;
        for d in (0..=degree).rev() {
            let c = self.coeff(d);
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                // A bare leading "-x^d" would not re-parse, so a negative
                // leading term always spells out its coefficient.
                write_term(f, &magnitude, d, c.is_negative())?;
                first = false;
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
                write_term(f, &magnitude, d, false)?;
            }
        }
        Ok(())
    }
}

fn write_term(
    f: &mut fmt::Formatter<'_>,
    magnitude: &Rational,
    degree: usize,
    force_coefficient: bool,
) -> fmt::Result {
    if degree == 0 {
        return write!(f, "{magnitude}");
    }
    if !magnitude.is_one() || force_coefficient {
        write!(f, "{magnitude}*")?;
    }
    if degree == 1 {
        write!(f, "x")
    } else {
        write!(f, "x^{degree}")
    }
}
