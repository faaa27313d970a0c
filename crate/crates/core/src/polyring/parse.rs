//! Expression parser for polynomial text.
//!
//! Grammar: `+`, `-`, `*`, `^`, integer or rational literals (`3`, `3/2`),
//! declared variable names, and parentheses. Multiplication is always
//! explicit via `*`.

use std::sync::Arc;

use num::bigint::BigInt;
use num::rational::BigRational;

use super::poly::Polynomial;
use super::ring::RingSpec;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(BigRational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let mut toks = Vec::new();
    let chars: Vec<char> = text.chars().map(|c| if c == '\u{2212}' { '-' } else { c }).collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                toks.push(Token::Plus);
                i += 1;
            }
            '-' => {
                toks.push(Token::Minus);
                i += 1;
            }
            '*' => {
                toks.push(Token::Star);
                i += 1;
            }
            '^' => {
                toks.push(Token::Caret);
                i += 1;
            }
            '(' => {
                toks.push(Token::LParen);
                i += 1;
            }
            ')' => {
                toks.push(Token::RParen);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let numer: BigInt = chars[start..i].iter().collect::<String>().parse().unwrap();
                let mut denom = BigInt::from(1);
                if i < chars.len() && chars[i] == '/' {
                    i += 1;
                    let dstart = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    if dstart == i {
                        return Err(Error::Parse("expected digits after `/`".into()));
                    }
                    denom = chars[dstart..i].iter().collect::<String>().parse().unwrap();
                    if denom == BigInt::from(0) {
                        return Err(Error::Parse("zero denominator in literal".into()));
                    }
                }
                toks.push(Token::Num(BigRational::new(numer, denom)));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                toks.push(Token::Ident(chars[start..i].iter().collect()));
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    ring: &'a Arc<RingSpec>,
    toks: Vec<Token>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = &acc + &rhs;
                }
                Some(Token::Minus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = &acc - &rhs;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Token::Star) {
            self.bump();
            let rhs = self.factor()?;
            acc = &acc * &rhs;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        if self.peek() == Some(&Token::Caret) {
            self.bump();
            let exp = self.exponent()?;
            let mut acc = Polynomial::one(self.ring);
            for _ in 0..exp {
                acc = &acc * &base;
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<u16> {
        match self.bump() {
            Some(Token::Minus) => Err(Error::Parse("negative exponent".into())),
            Some(Token::Num(r)) => {
                if !num::Integer::is_multiple_of(r.numer(), r.denom()) {
                    return Err(Error::Parse(format!("exponent {r} is not an integer")));
                }
                let v = r.to_integer();
                u16::try_from(&v).map_err(|_| Error::Parse(format!("exponent {v} out of range")))
            }
            other => Err(Error::Parse(format!("expected exponent, found {other:?}"))),
        }
    }

    fn base(&mut self) -> Result<Polynomial> {
        match self.bump() {
            Some(Token::Num(r)) => {
                let c = self.ring.c_from_ratio(&r)?;
                Ok(Polynomial::constant(self.ring, c))
            }
            Some(Token::Ident(name)) => match self.ring.slot_of(&name) {
                Some(slot) => Ok(Polynomial::variable(self.ring, slot)),
                None => Err(Error::Parse(format!("unknown variable `{name}`"))),
            },
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(Error::Parse("expected `)`".into())),
                }
            }
            Some(Token::Minus) => Ok(-&self.factor()?),
            Some(Token::Plus) => self.factor(),
            other => Err(Error::Parse(format!("expected a value, found {other:?}"))),
        }
    }
}

/// Parse an expression string into a canonical polynomial over `ring`.
pub fn parse_polynomial(text: &str, ring: &Arc<RingSpec>) -> Result<Polynomial> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { ring, toks, pos: 0 };
    let poly = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input at token {:?}", p.toks[p.pos])));
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::monomial::MonomialOrder;

    fn q_t() -> Arc<RingSpec> {
        RingSpec::rationals(&["t"]).unwrap()
    }

    #[test]
    fn parses_reference_examples() {
        let r = q_t();
        let f = parse_polynomial("t^2 - t*y", &r).unwrap();
        assert_eq!(f.num_terms(), 2);
        assert!(parse_polynomial("0", &r).unwrap().is_zero());
        let err = parse_polynomial("t + s", &r).unwrap_err();
        assert!(err.to_string().contains("unknown variable `s`"));
    }

    #[test]
    fn rejects_bad_syntax() {
        let r = q_t();
        assert!(parse_polynomial("t^-2", &r).unwrap_err().to_string().contains("negative exponent"));
        assert!(parse_polynomial("2t", &r).is_err());
        assert!(parse_polynomial("t +", &r).is_err());
        assert!(parse_polynomial("(t", &r).is_err());
        assert!(parse_polynomial("", &r).is_err());
    }

    #[test]
    fn rational_literals_and_unary_minus() {
        let r = q_t();
        let f = parse_polynomial("-3/2*t + 1/2*t", &r).unwrap();
        assert_eq!(f, parse_polynomial("-t", &r).unwrap());
        let g = parse_polynomial("-(t - y)^2", &r).unwrap();
        assert_eq!(g, parse_polynomial("-t^2 + 2*t*y - y^2", &r).unwrap());
    }

    #[test]
    fn render_parse_fixed_point() {
        let r = RingSpec::rationals(&["t", "w"]).unwrap();
        for s in ["t^2*w - 7/3*y^2 + 1", "-t*w*y", "42", "0", "w^4 - t^5"] {
            let f = parse_polynomial(s, &r).unwrap();
            let rendered = f.render(MonomialOrder::Grevlex);
            let g = parse_polynomial(&rendered, &r).unwrap();
            assert_eq!(f, g);
            assert_eq!(rendered, g.render(MonomialOrder::Grevlex));
        }
    }
}
