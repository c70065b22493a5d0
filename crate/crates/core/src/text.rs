//! Plain-text forms of rationals, polynomials and matrices.
//!
//! * rational literal: `['-'] digits ['/' digits]`, denominator nonzero;
//! * polynomial: comma-separated literals, lowest degree first, optionally
//!   wrapped in brackets (`0` for the zero polynomial);
//! * matrix: bracketed array of bracketed rows, e.g. `[[1, -2/3], [0, 4]]`;
//! * polynomial matrix: the matrix layout with each entry written as an
//!   expression in `t`, e.g. `1 + 2*t - 1/2*t^2`.
//!
//! Whitespace between tokens is insignificant on input. Output is canonical,
//! so equal values always print to identical bytes.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::apps::PolyMatrix;
use crate::error::{Error, Result};
use crate::{Polynomial, Rational, SquareMatrix};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |part: &str| -> Result<BigInt> {
        if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(parse_err(format!("invalid rational literal `{s}`")));
        }
        Ok(part.parse().expect("validated digits"))
    };
    let mut numer = digits(num)?;
    if negative {
        numer = -numer;
    }
    let denom = match den {
        Some(d) => digits(d)?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(parse_err(format!("zero denominator in `{s}`")));
    }
    Ok(Rational::new(numer, denom))
}

pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token<'a> {
    Open,
    Close,
    Comma,
    Literal(&'a str),
}

fn tokenize(s: &str) -> Vec<Token<'_>> {
    let mut tokens = Vec::new();
    let mut start = None;
    for (i, c) in s.char_indices() {
        let delim = matches!(c, '[' | ']' | ',') || c.is_whitespace();
        if delim {
            if let Some(b) = start.take() {
                tokens.push(Token::Literal(&s[b..i]));
            }
            match c {
                '[' => tokens.push(Token::Open),
                ']' => tokens.push(Token::Close),
                ',' => tokens.push(Token::Comma),
                _ => {}
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(b) = start {
        tokens.push(Token::Literal(&s[b..]));
    }
    tokens
}

/// Parses `lit (',' lit)*` from `tokens`, which must hold nothing else.
fn literal_list(tokens: &[Token<'_>]) -> Result<Vec<Rational>> {
    if tokens.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for (k, tok) in tokens.iter().enumerate() {
        match (k % 2, tok) {
            (0, Token::Literal(l)) => out.push(parse_rational(l)?),
            (1, Token::Comma) => {}
            _ => return Err(parse_err("malformed comma-separated list")),
        }
    }
    if tokens.len() % 2 == 0 {
        return Err(parse_err("trailing comma"));
    }
    Ok(out)
}

pub fn parse_polynomial(s: &str) -> Result<Polynomial> {
    let tokens = tokenize(s);
    let inner = match (tokens.first(), tokens.last()) {
        (Some(Token::Open), Some(Token::Close)) if tokens.len() >= 2 => &tokens[1..tokens.len() - 1],
        _ => &tokens[..],
    };
    Ok(Polynomial::new(literal_list(inner)?))
}

pub fn format_polynomial(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    p.coefficients()
        .iter()
        .map(format_rational)
        .collect::<Vec<_>>()
        .join(", ")
}

fn parse_nested(s: &str) -> Result<Vec<Vec<Token<'_>>>> {
    let tokens = tokenize(s);
    let Some((Token::Open, rest)) = tokens.split_first() else {
        return Err(parse_err("matrix must start with `[`"));
    };
    let Some((Token::Close, body)) = rest.split_last() else {
        return Err(parse_err("matrix must end with `]`"));
    };
    let mut rows = Vec::new();
    let mut i = 0;
    while i < body.len() {
        if body[i] != Token::Open {
            return Err(parse_err("expected `[` at start of row"));
        }
        let end = body[i..]
            .iter()
            .position(|t| *t == Token::Close)
            .map(|p| p + i)
            .ok_or_else(|| parse_err("unterminated row"))?;
        if body[i + 1..end].contains(&Token::Open) {
            return Err(parse_err("nested brackets inside a row"));
        }
        rows.push(body[i + 1..end].to_vec());
        i = end + 1;
        if i < body.len() {
            if body[i] != Token::Comma || i + 1 == body.len() {
                return Err(parse_err("rows must be separated by `,`"));
            }
            i += 1;
        }
    }
    Ok(rows)
}

pub fn parse_matrix(s: &str) -> Result<SquareMatrix> {
    let rows = parse_nested(s)?
        .iter()
        .map(|r| literal_list(r))
        .collect::<Result<Vec<_>>>()?;
    SquareMatrix::from_rows(rows).map_err(|e| parse_err(e.to_string()))
}

fn write_rows<'a, R: 'a>(
    rows: impl Iterator<Item = &'a [R]>,
    entry: impl Fn(&R) -> String,
) -> String {
    let rendered: Vec<String> = rows
        .map(|r| {
            let cells: Vec<String> = r.iter().map(&entry).collect();
            format!("  [{}]", cells.join(", "))
        })
        .collect();
    format!("[\n{}\n]", rendered.join(",\n"))
}

pub fn format_matrix(m: &SquareMatrix) -> String {
    write_rows(m.rows(), format_rational)
}

/// Renders `p` as an expression in `var`, lowest degree first.
pub fn format_poly_expr(p: &Polynomial, var: &str) -> String {
    let mut out = String::new();
    for (k, c) in p.coefficients().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let coef = format_rational(&mag);
        match (k, mag.is_one()) {
            (0, _) => out.push_str(&coef),
            (_, true) => {}
            (_, false) => {
                let _ = write!(out, "{coef}*");
            }
        }
        match k {
            0 => {}
            1 => out.push_str(var),
            _ => {
                let _ = write!(out, "{var}^{k}");
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Inverse of [`format_poly_expr`].
pub fn parse_poly_expr(s: &str, var: &str) -> Result<Polynomial> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(parse_err("empty polynomial expression"));
    }
    let mut coeffs: Vec<Rational> = Vec::new();
    let mut rest = compact.as_str();
    let mut first = true;
    while !rest.is_empty() {
        let negative = if let Some(r) = rest.strip_prefix('-') {
            rest = r;
            true
        } else if let Some(r) = rest.strip_prefix('+') {
            if first {
                return Err(parse_err("leading `+`"));
            }
            rest = r;
            false
        } else if first {
            false
        } else {
            return Err(parse_err(format!("expected `+` or `-` in `{s}`")));
        };
        first = false;
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let term = &rest[..end];
        rest = &rest[end..];

        let (coef_str, power) = match term.find(var) {
            None => (term, 0usize),
            Some(pos) => {
                let coef = &term[..pos];
                let coef = if coef.is_empty() {
                    ""
                } else {
                    coef.strip_suffix('*')
                        .ok_or_else(|| parse_err(format!("missing `*` in term `{term}`")))?
                };
                let exp = &term[pos + var.len()..];
                let power = if exp.is_empty() {
                    1
                } else {
                    exp.strip_prefix('^')
                        .and_then(|e| e.parse::<usize>().ok())
                        .ok_or_else(|| parse_err(format!("bad exponent in `{term}`")))?
                };
                (coef, power)
            }
        };
        let mut c = if coef_str.is_empty() {
            if power == 0 {
                return Err(parse_err("empty term"));
            }
            Rational::one()
        } else {
            parse_rational(coef_str)?
        };
        if negative {
            c = -c;
        }
        if coeffs.len() <= power {
            coeffs.resize(power + 1, Rational::zero());
        }
        coeffs[power] += c;
    }
    Ok(Polynomial::new(coeffs))
}

/// Formal parameter used for polynomial-matrix entries.
pub const POLY_MATRIX_VAR: &str = "t";

pub fn format_poly_matrix(m: &PolyMatrix<Rational>) -> String {
    write_rows(m.rows(), |p| format_poly_expr(p, POLY_MATRIX_VAR))
}

pub fn parse_poly_matrix(s: &str) -> Result<PolyMatrix<Rational>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = compact
        .strip_prefix("[[")
        .and_then(|c| c.strip_suffix("]]"))
        .ok_or_else(|| parse_err("polynomial matrix must look like `[[...], ...]`"))?;
    let rows: Vec<Vec<Polynomial>> = inner
        .split("],[")
        .map(|row| {
            row.split(',')
                .map(|cell| parse_poly_expr(cell, POLY_MATRIX_VAR))
                .collect()
        })
        .collect::<Result<_>>()?;
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(parse_err("polynomial matrix is not square"));
    }
    let mut it = rows.into_iter().flatten();
    Ok(PolyMatrix::from_fn(n, |_, _| it.next().expect("n*n entries")))
}
