//! Parser for the two-line system format:
//!
//! ```text
//! dx = x^3
//! dy = y + x*y + x^2*y
//! ```
//!
//! Polynomials in `x`, `y` over the rationals: integer and `p/q` literals,
//! `^` powers, `*` optional, parentheses allowed. Lines may also be
//! separated by `;`. Anything non-polynomial (decimals, unknown symbols,
//! constant terms, degrees beyond the truncation) is rejected with a
//! position.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{Axis, HomVF, JetSeries, Rational, VecMonomial};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        position,
        message: message.into(),
    })
}

/// Scalar polynomial in two variables: exponent pair to coefficient.
type Poly = BTreeMap<(u32, u32), Rational>;

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Number(BigInt),
    Var(Axis),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Equals,
    Ident(String),
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn tokens(src: &'a str) -> Result<Vec<(usize, Token)>, ParseError> {
        let mut lx = Lexer {
            src: src.as_bytes(),
            pos: 0,
        };
        let mut out = Vec::new();
        while lx.pos < lx.src.len() {
            let start = lx.pos;
            let c = lx.src[lx.pos];
            match c {
                b' ' | b'\t' => {
                    lx.pos += 1;
                }
                b'0'..=b'9' => {
                    let mut end = lx.pos;
                    while end < lx.src.len() && lx.src[end].is_ascii_digit() {
                        end += 1;
                    }
                    if end < lx.src.len() && lx.src[end] == b'.' {
                        return err(start, "decimal literals are not exact; use a fraction p/q");
                    }
                    let text = std::str::from_utf8(&lx.src[lx.pos..end]).unwrap();
                    out.push((start, Token::Number(text.parse().unwrap())));
                    lx.pos = end;
                }
                b'x' => {
                    out.push((start, Token::Var(Axis::X)));
                    lx.pos += 1;
                }
                b'y' => {
                    out.push((start, Token::Var(Axis::Y)));
                    lx.pos += 1;
                }
                b'+' => {
                    out.push((start, Token::Plus));
                    lx.pos += 1;
                }
                b'-' => {
                    out.push((start, Token::Minus));
                    lx.pos += 1;
                }
                b'*' => {
                    out.push((start, Token::Star));
                    lx.pos += 1;
                }
                b'/' => {
                    out.push((start, Token::Slash));
                    lx.pos += 1;
                }
                b'^' => {
                    out.push((start, Token::Caret));
                    lx.pos += 1;
                }
                b'(' => {
                    out.push((start, Token::LParen));
                    lx.pos += 1;
                }
                b')' => {
                    out.push((start, Token::RParen));
                    lx.pos += 1;
                }
                b'=' => {
                    out.push((start, Token::Equals));
                    lx.pos += 1;
                }
                _ => {
                    // unicode minus is accepted; anything else is an identifier error
                    let rest = &src[lx.pos..];
                    if let Some(stripped) = rest.strip_prefix('\u{2212}') {
                        let _ = stripped;
                        out.push((start, Token::Minus));
                        lx.pos += '\u{2212}'.len_utf8();
                    } else if c.is_ascii_alphabetic() {
                        let mut end = lx.pos;
                        while end < lx.src.len() && lx.src[end].is_ascii_alphanumeric() {
                            end += 1;
                        }
                        let name = std::str::from_utf8(&lx.src[lx.pos..end])
                            .unwrap()
                            .to_string();
                        out.push((start, Token::Ident(name)));
                        lx.pos = end;
                    } else {
                        return err(
                            start,
                            format!(
                                "unexpected character {:?}",
                                src[lx.pos..].chars().next().unwrap()
                            ),
                        );
                    }
                }
            }
        }
        Ok(out)
    }
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    idx: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.idx).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.tokens
            .get(self.idx)
            .map(|(p, _)| *p)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.idx).map(|(_, t)| t.clone());
        self.idx += 1;
        t
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut sign = Rational::from_integer(1.into());
        // leading sign
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                }
                Some(Token::Minus) => {
                    sign = -sign;
                    self.bump();
                }
                _ => break,
            }
        }
        let mut acc = poly_scale(&self.term()?, &sign);
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    let t = self.term()?;
                    poly_add(&mut acc, &t, &Rational::from_integer(1.into()));
                }
                Some(Token::Minus) => {
                    self.bump();
                    let t = self.term()?;
                    poly_add(&mut acc, &t, &Rational::from_integer((-1).into()));
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.bump();
                    let f = self.factor()?;
                    acc = poly_mul(&acc, &f);
                }
                // implicit multiplication
                Some(Token::Var(_)) | Some(Token::Number(_)) | Some(Token::LParen) => {
                    let f = self.factor()?;
                    acc = poly_mul(&acc, &f);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly, ParseError> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Token::Caret)) {
            self.bump();
            let pos = self.pos();
            match self.bump() {
                Some(Token::Number(n)) => {
                    let e = u32::try_from(n).map_err(|_| ParseError {
                        position: pos,
                        message: "exponent out of range".into(),
                    })?;
                    return Ok(poly_pow(&base, e));
                }
                _ => return err(pos, "expected a non-negative integer exponent after ^"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Some(Token::Number(n)) => {
                // fraction literal p/q binds tighter than multiplication
                if matches!(self.peek(), Some(Token::Slash)) {
                    self.bump();
                    let dpos = self.pos();
                    match self.bump() {
                        Some(Token::Number(d)) if !d.is_zero() => {
                            Ok(poly_const(Rational::new(n, d)))
                        }
                        Some(Token::Number(_)) => err(dpos, "zero denominator"),
                        _ => err(dpos, "expected an integer denominator after /"),
                    }
                } else {
                    Ok(poly_const(Rational::from_integer(n)))
                }
            }
            Some(Token::Var(axis)) => {
                let mut p = Poly::new();
                let key = match axis {
                    Axis::X => (1, 0),
                    Axis::Y => (0, 1),
                };
                p.insert(key, Rational::from_integer(1.into()));
                Ok(p)
            }
            Some(Token::LParen) => {
                let inner = self.expr()?;
                let pos = self.pos();
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    _ => err(pos, "expected )"),
                }
            }
            Some(Token::Minus) => {
                let inner = self.factor()?;
                Ok(poly_scale(&inner, &Rational::from_integer((-1).into())))
            }
            Some(Token::Slash) => err(pos, "/ is only valid inside a fraction literal p/q"),
            Some(Token::Ident(name)) => err(pos, format!("unknown symbol `{name}`")),
            Some(t) => err(pos, format!("unexpected token {t:?}")),
            None => err(pos, "unexpected end of input"),
        }
    }
}

fn poly_const(c: Rational) -> Poly {
    let mut p = Poly::new();
    if !c.is_zero() {
        p.insert((0, 0), c);
    }
    p
}

fn poly_add(acc: &mut Poly, other: &Poly, scale: &Rational) {
    for (k, v) in other {
        let entry = acc.entry(*k).or_insert_with(Rational::zero);
        *entry += v.clone() * scale;
        if entry.is_zero() {
            acc.remove(k);
        }
    }
}

fn poly_scale(p: &Poly, s: &Rational) -> Poly {
    if s.is_zero() {
        return Poly::new();
    }
    p.iter().map(|(k, v)| (*k, v.clone() * s)).collect()
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for ((ax, ay), ac) in a {
        for ((bx, by), bc) in b {
            let key = (ax + bx, ay + by);
            let entry = out.entry(key).or_insert_with(Rational::zero);
            *entry += ac.clone() * bc;
            if entry.is_zero() {
                out.remove(&key);
            }
        }
    }
    out
}

fn poly_pow(p: &Poly, e: u32) -> Poly {
    let mut acc = poly_const(Rational::from_integer(1.into()));
    for _ in 0..e {
        acc = poly_mul(&acc, p);
    }
    acc
}

/// Parse a two-line system into a jet truncated at `order` (maximum grade,
/// so maximum polynomial degree `order + 1`).
pub fn parse_system(text: &str, order: i64) -> Result<JetSeries, ParseError> {
    let mut defs: [Option<Poly>; 2] = [None, None];
    let mut offset = 0usize;
    for raw_line in text.split(['\n', ';']) {
        let line = raw_line.trim();
        let line_offset = offset + (raw_line.len() - raw_line.trim_start().len());
        offset += raw_line.len() + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens = Lexer::tokens(line).map_err(|e| ParseError {
            position: line_offset + e.position,
            message: e.message,
        })?;
        // expect: Ident("dx"|"dy") '=' expr
        let which = match tokens.first() {
            Some((_, Token::Ident(name))) if name == "dx" => 0usize,
            Some((_, Token::Ident(name))) if name == "dy" => 1usize,
            _ => {
                return err(line_offset, "each line must start with `dx =` or `dy =`");
            }
        };
        if !matches!(tokens.get(1), Some((_, Token::Equals))) {
            return err(line_offset, "expected `=` after the component name");
        }
        let end = line.len();
        let mut parser = Parser {
            tokens: tokens[2..].to_vec(),
            idx: 0,
            end,
        };
        let poly = parser.expr().map_err(|e| ParseError {
            position: line_offset + e.position,
            message: e.message,
        })?;
        if parser.idx < parser.tokens.len() {
            return err(
                line_offset + parser.pos(),
                "trailing input after the polynomial",
            );
        }
        if defs[which].is_some() {
            return err(line_offset, "duplicate definition");
        }
        defs[which] = Some(poly);
    }
    let [Some(px), Some(py)] = defs else {
        return err(text.len(), "system needs both a `dx =` and a `dy =` line");
    };
    let mut jet = JetSeries::new(order);
    for (poly, comp) in [(px, Axis::X), (py, Axis::Y)] {
        for ((ex, ey), c) in poly {
            let degree = ex + ey;
            if degree == 0 {
                return err(
                    0,
                    "constant terms are not allowed: the singular point must sit at the origin",
                );
            }
            if degree as i64 > order + 1 {
                return err(
                    0,
                    format!(
                        "degree {degree} exceeds the truncation (maximum degree {})",
                        order + 1
                    ),
                );
            }
            let m = VecMonomial::new(ex, ey, comp);
            jet.add_field(&HomVF::monomial(m, c));
        }
    }
    Ok(jet)
}

/// Canonical printout of a jet in the input format.
pub fn print_system(jet: &JetSeries) -> String {
    let mut lines = [String::from("dx ="), String::from("dy =")];
    let mut any = [false, false];
    for g in jet.grades() {
        let part = jet.part(g);
        for (m, c) in part.terms() {
            let idx = match m.component {
                Axis::X => 0,
                Axis::Y => 1,
            };
            let mut term = String::new();
            if any[idx] {
                term.push_str(" + ");
            } else {
                term.push(' ');
            }
            term.push_str(&format!("{c}"));
            for (sym, e) in [("x", m.exp_x), ("y", m.exp_y)] {
                match e {
                    0 => {}
                    1 => term.push_str(&format!("*{sym}")),
                    _ => term.push_str(&format!("*{sym}^{e}")),
                }
            }
            lines[idx].push_str(&term);
            any[idx] = true;
        }
    }
    for (line, used) in lines.iter_mut().zip(any) {
        if !used {
            line.push_str(" 0");
        }
    }
    format!("{}\n{}\n", lines[0], lines[1])
}
