//! The Gauss-code text format.
//!
//! ```text
//! # positive Hopf link
//! O1+ U2+ / O2+ U1+
//! ```
//!
//! Components are separated by a `/` token or by line breaks. Each component is
//! a whitespace-separated run of tokens `[OU][1-9][0-9]*[+-]`, or the lone token
//! `_` for a component without crossings. `#` starts a comment.

use std::fmt;
use std::str::FromStr;

use crate::diagram::{GaussDiagram, Role, Sign, Token};
use crate::error::{Error, Result};

fn syntax(line: usize, token: &str, reason: &str) -> Error {
    Error::Syntax {
        line,
        token: token.to_string(),
        reason: reason.to_string(),
    }
}

fn parse_token(line: usize, raw: &str) -> Result<Token> {
    let bytes = raw.as_bytes();
    if bytes.len() < 3 {
        return Err(syntax(line, raw, "token too short"));
    }
    let role = match bytes[0] {
        b'O' => Role::Over,
        b'U' => Role::Under,
        _ => return Err(syntax(line, raw, "token must start with O or U")),
    };
    let sign = match bytes[bytes.len() - 1] {
        b'+' => Sign::Positive,
        b'-' => Sign::Negative,
        _ => return Err(syntax(line, raw, "token must end with + or -")),
    };
    let digits = &raw[1..raw.len() - 1];
    if !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0') {
        return Err(syntax(
            line,
            raw,
            "label must be a positive integer without leading zeros",
        ));
    }
    let label = digits
        .parse::<u32>()
        .map_err(|_| syntax(line, raw, "label does not fit in 32 bits"))?;
    Ok(Token::new(label, role, sign))
}

fn parse_component(line: usize, raw: &[&str]) -> Result<Vec<Token>> {
    match raw {
        [] => Err(syntax(line, "/", "empty component (use `_` for a crossing-free one)")),
        ["_"] => Ok(Vec::new()),
        _ => raw
            .iter()
            .map(|tok| {
                if *tok == "_" {
                    Err(syntax(line, tok, "`_` must stand alone"))
                } else {
                    parse_token(line, tok)
                }
            })
            .collect(),
    }
}

/// Parses one link from Gauss-code text.
pub fn parse(text: &str) -> Result<GaussDiagram> {
    let mut words = Vec::new();
    for (n, raw_line) in text.lines().enumerate() {
        let line = n + 1;
        let body = raw_line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        for chunk in tokens.split(|t| *t == "/") {
            words.push(parse_component(line, chunk)?);
        }
    }
    if words.is_empty() {
        return Err(syntax(0, "", "no components"));
    }
    GaussDiagram::from_words(&words)
}

/// Writes the diagram with labels canonicalized to 1..k in first-appearance order.
pub fn serialize(d: &GaussDiagram) -> String {
    serialize_raw(&d.canonical())
}

/// Writes the diagram keeping its labels.
pub fn serialize_raw(d: &GaussDiagram) -> String {
    d.words()
        .iter()
        .map(|w| {
            if w.is_empty() {
                "_".to_string()
            } else {
                w.iter().map(Token::to_string).collect::<Vec<_>>().join(" ")
            }
        })
        .collect::<Vec<_>>()
        .join(" / ")
}

impl FromStr for GaussDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

impl fmt::Display for GaussDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize(self))
    }
}
