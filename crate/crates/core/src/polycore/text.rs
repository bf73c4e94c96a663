//! Canonical text form of polynomials and a small exact parser.
//!
//! Output: terms in descending graded-lex order, `*` between factors and
//! `^` for powers, e.g. `54*C3^3 + 8/9*C21^3 - C111`. The parser accepts
//! that form plus parentheses, so printed results can be read back.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::{Monomial, MultiPoly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("floating-point literal '{0}' is not allowed; use an exact fraction")]
    FloatLiteral(String),
    #[error("unexpected token '{token}' at position {pos}")]
    UnexpectedToken { token: String, pos: usize },
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unknown variable '{0}'")]
    UnknownVariable(String),
    #[error("zero denominator in '{0}'")]
    ZeroDenominator(String),
    #[error("division by a non-constant expression")]
    NonConstantDivisor,
    #[error("exponent '{0}' is not a small non-negative integer")]
    BadExponent(String),
    #[error("malformed partition key '{0}'")]
    BadPartition(String),
}

impl ParseError {
    pub fn name(&self) -> &'static str {
        match self {
            ParseError::FloatLiteral(_) => "FloatLiteral",
            ParseError::UnexpectedToken { .. } => "UnexpectedToken",
            ParseError::UnexpectedEnd => "UnexpectedEnd",
            ParseError::UnknownVariable(_) => "UnknownVariable",
            ParseError::ZeroDenominator(_) => "ZeroDenominator",
            ParseError::NonConstantDivisor => "NonConstantDivisor",
            ParseError::BadExponent(_) => "BadExponent",
            ParseError::BadPartition(_) => "BadPartition",
        }
    }
}

fn format_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn format_monomial(m: &Monomial, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(names[i].clone()),
            _ => parts.push(format!("{}^{}", names[i], e)),
        }
    }
    parts.join("*")
}

/// Canonical text of `p` using `names[i]` for variable `i`.
///
/// Panics if `names` is shorter than the variable count.
pub fn format_poly(p: &MultiPoly, names: &[String]) -> String {
    assert!(names.len() >= p.nvars(), "not enough variable names");
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().rev().enumerate() {
        let negative = c.is_negative();
        let abs = c.abs();
        if k == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mono = format_monomial(m, names);
        if mono.is_empty() {
            out.push_str(&format_rational(&abs));
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format_rational(&abs));
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}

/// Parses an exact rational: an integer or `a/b`, optionally signed.
/// Decimal points and exponents are rejected.
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let t = text.trim();
    if t.contains('.') || t.contains('e') || t.contains('E') {
        return Err(ParseError::FloatLiteral(t.to_string()));
    }
    let parse_int = |s: &str| -> Result<BigInt, ParseError> {
        let s = s.trim();
        let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseError::UnexpectedToken {
                token: text.to_string(),
                pos: 0,
            });
        }
        s.parse::<BigInt>().map_err(|_| ParseError::UnexpectedToken {
            token: text.to_string(),
            pos: 0,
        })
    };
    match t.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(t)?)),
        Some((a, b)) => {
            let num = parse_int(a)?;
            let den = parse_int(b)?;
            if den.is_zero() {
                return Err(ParseError::ZeroDenominator(t.to_string()));
            }
            Ok(Rational::new(num, den))
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if i < bytes.len() && (bytes[i] == b'.' || bytes[i] == b'e' || bytes[i] == b'E') {
                let mut end = i + 1;
                while end < bytes.len() && (bytes[end].is_ascii_alphanumeric() || bytes[end] == b'.') {
                    end += 1;
                }
                return Err(ParseError::FloatLiteral(s[start..end].to_string()));
            }
            out.push((Tok::Int(s[start..i].parse().unwrap()), start));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(s[start..i].to_string()), start));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Sym(c), i));
            i += 1;
        } else if c == '.' {
            return Err(ParseError::FloatLiteral(s[i..].split_whitespace().next().unwrap_or(".").to_string()));
        } else {
            return Err(ParseError::UnexpectedToken {
                token: c.to_string(),
                pos: i,
            });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    names: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn unexpected(&self) -> ParseError {
        match self.toks.get(self.pos) {
            None => ParseError::UnexpectedEnd,
            Some((t, p)) => ParseError::UnexpectedToken {
                token: match t {
                    Tok::Int(v) => v.to_string(),
                    Tok::Ident(s) => s.clone(),
                    Tok::Sym(c) => c.to_string(),
                },
                pos: *p,
            },
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn nvars(&self) -> usize {
        self.names.len()
    }

    fn expr(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = if self.eat('-') {
            -self.term()?
        } else {
            self.eat('+');
            self.term()?
        };
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

    fn term(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.power()?;
            } else if self.eat('/') {
                let d = self.power()?;
                let c = d.constant_value().ok_or(ParseError::NonConstantDivisor)?;
                if c.is_zero() {
                    return Err(ParseError::ZeroDenominator("/0".to_string()));
                }
                acc = acc.scale(&c.recip());
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<MultiPoly, ParseError> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.toks.get(self.pos) {
                Some((Tok::Int(e), _)) => {
                    let e32 = u32::try_from(e).map_err(|_| ParseError::BadExponent(e.to_string()))?;
                    self.pos += 1;
                    Ok(base.pow(e32))
                }
                Some((Tok::Sym('-'), _)) => Err(ParseError::BadExponent("-".to_string())),
                _ => Err(self.unexpected()),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MultiPoly, ParseError> {
        match self.toks.get(self.pos).cloned() {
            Some((Tok::Int(v), _)) => {
                self.pos += 1;
                Ok(MultiPoly::constant(Rational::from_integer(v), self.nvars()))
            }
            Some((Tok::Ident(name), _)) => {
                self.pos += 1;
                match self.names.iter().position(|n| *n == name) {
                    Some(i) => Ok(MultiPoly::var(i, self.nvars())),
                    None => Err(ParseError::UnknownVariable(name)),
                }
            }
            Some((Tok::Sym('('), _)) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.unexpected());
                }
                Ok(e)
            }
            Some((Tok::Sym('-'), _)) => {
                self.pos += 1;
                Ok(-self.power()?)
            }
            _ => Err(self.unexpected()),
        }
    }
}

/// Parses a polynomial over the variables `names` (variable `i` is
/// `names[i]`).
pub fn parse_poly(text: &str, names: &[String]) -> Result<MultiPoly, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        names,
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.unexpected());
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{int, rat};

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("8/9").unwrap(), rat(8, 9));
        assert_eq!(parse_rational("-12").unwrap(), int(-12));
        assert_eq!(parse_rational(" 4/-6 ").unwrap(), rat(-2, 3));
        assert!(matches!(parse_rational("0.5"), Err(ParseError::FloatLiteral(_))));
        assert!(matches!(parse_rational("1e3"), Err(ParseError::FloatLiteral(_))));
        assert!(matches!(parse_rational("1/0"), Err(ParseError::ZeroDenominator(_))));
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn round_trip() {
        let n = names(&["C3", "C21", "C111"]);
        let text = "54*C3^3 + 8/9*C21^3 - C111 + 7";
        let p = parse_poly(text, &n).unwrap();
        let printed = format_poly(&p, &n);
        assert_eq!(parse_poly(&printed, &n).unwrap(), p);
        // descending graded lex: degree 3 terms first, C3 before C21
        assert!(printed.starts_with("54*C3^3 + 8/9*C21^3"));
        assert!(printed.ends_with("- C111 + 7"));
    }

    #[test]
    fn parser_forms() {
        let n = names(&["x", "y"]);
        let p = parse_poly("(x + y)^2 - 2*x*y", &n).unwrap();
        assert_eq!(p, parse_poly("x^2 + y^2", &n).unwrap());
        assert_eq!(parse_poly("-x/2", &n).unwrap(), MultiPoly::var(0, 2).scale(&rat(-1, 2)));
        assert_eq!(format_poly(&MultiPoly::zero(2), &n), "0");
        assert_eq!(format_poly(&-MultiPoly::var(1, 2), &n), "-y");
    }

    #[test]
    fn parser_errors() {
        let n = names(&["x"]);
        assert!(matches!(parse_poly("x + 0.5", &n), Err(ParseError::FloatLiteral(_))));
        assert!(matches!(parse_poly("z", &n), Err(ParseError::UnknownVariable(_))));
        assert!(matches!(parse_poly("x +", &n), Err(ParseError::UnexpectedEnd)));
        assert!(matches!(parse_poly("1/x", &n), Err(ParseError::NonConstantDivisor)));
        assert!(matches!(parse_poly("x ) ", &n), Err(ParseError::UnexpectedToken { .. })));
    }
}
