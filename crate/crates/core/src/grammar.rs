//! Text formats for braid words and symmetric-function expressions.
//!
//! Braid words are whitespace-separated nonzero integers, `i` for `σ_i` and
//! `-i` for its inverse. Expressions are sums of products of `h<k>`, `e<k>`,
//! `p<k>`, `s(λ1,λ2,...)` and integers, e.g. `2*h2*h1 - s(2,1) + p3`.

use crate::coeff::Scalar;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::symfun::{elementary, power_sum, schur, SymFunc};

fn parse_error(token: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        token: token.into(),
        message: message.into(),
    }
}

pub fn parse_braid_word(text: &str) -> Result<Vec<i32>> {
    text.split_whitespace()
        .map(|tok| {
            let g: i32 = tok
                .parse()
                .map_err(|_| parse_error(tok, "expected a nonzero integer"))?;
            if g == 0 {
                return Err(parse_error(tok, "generator index 0 does not exist"));
            }
            Ok(g)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(i64),
    Plus,
    Minus,
    Star,
    Func(SymFunc),
}

fn lex(text: &str) -> Result<Vec<(Tok, String)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let digits = |i: &mut usize| -> String {
        let start = *i;
        while *i < chars.len() && chars[*i].is_ascii_digit() {
            *i += 1;
        }
        chars[start..*i].iter().collect()
    };
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        match c {
            _ if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '+' => {
                i += 1;
                out.push((Tok::Plus, "+".into()));
            }
            '-' => {
                i += 1;
                out.push((Tok::Minus, "-".into()));
            }
            '*' => {
                i += 1;
                out.push((Tok::Star, "*".into()));
            }
            _ if c.is_ascii_digit() => {
                let d = digits(&mut i);
                let v = d
                    .parse()
                    .map_err(|_| parse_error(d.clone(), "integer too large"))?;
                out.push((Tok::Int(v), d));
            }
            'h' | 'e' | 'p' => {
                i += 1;
                let d = digits(&mut i);
                let tok: String = chars[start..i].iter().collect();
                let k: usize = d
                    .parse()
                    .map_err(|_| parse_error(tok.clone(), "expected a degree after the letter"))?;
                let f = match c {
                    'h' => SymFunc::h(k),
                    'e' => elementary(k),
                    _ if k == 0 => return Err(parse_error(tok, "power sums start at p1")),
                    _ => power_sum(k)?,
                };
                out.push((Tok::Func(f), tok));
            }
            's' => {
                i += 1;
                if chars.get(i) != Some(&'(') {
                    let tok: String = chars[start..(i + 1).min(chars.len())].iter().collect();
                    return Err(parse_error(tok, "expected `(` after s"));
                }
                let close = chars[i..]
                    .iter()
                    .position(|&x| x == ')')
                    .map(|p| p + i)
                    .ok_or_else(|| parse_error(chars[start..].iter().collect::<String>(), "unclosed `(`"))?;
                let tok: String = chars[start..=close].iter().collect();
                let inner: String = chars[i + 1..close].iter().collect();
                let parts = if inner.trim().is_empty() {
                    Vec::new()
                } else {
                    inner
                        .split(',')
                        .map(|x| x.trim().parse::<usize>())
                        .collect::<std::result::Result<Vec<_>, _>>()
                        .map_err(|_| parse_error(tok.clone(), "partition parts must be positive integers"))?
                };
                let lambda = Partition::new(parts).map_err(|e| parse_error(tok.clone(), e.to_string()))?;
                i = close + 1;
                out.push((Tok::Func(schur(&lambda)), tok));
            }
            _ => {
                return Err(parse_error(c.to_string(), "unexpected character"));
            }
        }
    }
    Ok(out)
}

/// Parses an expression into a symmetric function.
pub fn parse_elem(text: &str) -> Result<SymFunc> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(parse_error("", "empty expression"));
    }
    let mut pos = 0;
    let mut total = SymFunc::zero();
    let mut first = true;
    while pos < toks.len() {
        let mut sign = 1;
        match &toks[pos].0 {
            Tok::Plus | Tok::Minus => {
                if toks[pos].0 == Tok::Minus {
                    sign = -1;
                }
                pos += 1;
            }
            _ if !first => return Err(parse_error(&toks[pos].1, "expected `+` or `-`")),
            _ => {}
        }
        first = false;
        // product of factors
        let mut term = SymFunc::constant(Scalar::from_int(sign));
        loop {
            let Some((tok, text)) = toks.get(pos) else {
                let last = &toks[toks.len() - 1].1;
                return Err(parse_error(last, "expression ends where a factor was expected"));
            };
            term = match tok {
                Tok::Int(k) => term.scale(&Scalar::from_int(*k)),
                Tok::Func(f) => &term * f,
                _ => return Err(parse_error(text, "expected a factor")),
            };
            pos += 1;
            if toks.get(pos).map(|t| &t.0) == Some(&Tok::Star) {
                pos += 1;
            } else {
                break;
            }
        }
        total = &total + &term;
    }
    Ok(total)
}
