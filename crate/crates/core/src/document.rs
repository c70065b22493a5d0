//! Key/value result documents.
//!
//! A document is a sequence of `key = value` fields. A value may span
//! several lines; continuation lines start with whitespace or `]`, which is
//! what the matrix layout from [`crate::text`] produces. Blank lines and
//! lines starting with `#` are ignored.

use std::fmt;

use crate::decomp::{Decomposition, VerificationReport};
use crate::error::{Error, Result};
use crate::text::{format_matrix, format_polynomial, parse_matrix, parse_polynomial};
use crate::{Polynomial, Rational};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Document {
    fields: Vec<(String, String)>,
}

fn is_key(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_ascii_lowercase())
        && chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
}

impl Document {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl Into<String>) {
        let key = key.into();
        debug_assert!(is_key(&key), "invalid document key {key:?}");
        self.fields.push((key, value.into()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn require(&self, key: &str) -> Result<&str> {
        self.get(key)
            .ok_or_else(|| Error::Parse(format!("missing field `{key}`")))
    }

    pub fn fields(&self) -> &[(String, String)] {
        &self.fields
    }

    pub fn parse(s: &str) -> Result<Self> {
        let mut doc = Document::new();
        for (lineno, line) in s.lines().enumerate() {
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            if line.starts_with(char::is_whitespace) || line.starts_with(']') {
                let Some((_, value)) = doc.fields.last_mut() else {
                    return Err(Error::Parse(format!("line {}: value without a key", lineno + 1)));
                };
                value.push('\n');
                value.push_str(line);
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .filter(|(k, _)| is_key(k))
                .ok_or_else(|| Error::Parse(format!("line {}: expected `key = value`", lineno + 1)))?;
            if doc.get(key).is_some() {
                return Err(Error::Parse(format!("duplicate field `{key}`")));
            }
            doc.fields.push((key.to_string(), value.to_string()));
        }
        Ok(doc)
    }
}

impl fmt::Display for Document {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.fields {
            writeln!(f, "{k} = {v}")?;
        }
        Ok(())
    }
}

/// One-line rendering of a report, e.g. `overall=pass, sum=pass, ...`.
pub fn format_report(report: &VerificationReport) -> String {
    let mut parts: Vec<String> = report
        .entries()
        .into_iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect();
    if let Some(k) = report.nilpotency_index {
        parts.push(format!("nilpotency_index={k}"));
    }
    parts.join(", ")
}

/// Fields in output order: `iterations`, `annihilator`, `p_tilde`, `p_bar`,
/// `h`, `d`, `n`, `verification`. `h` is omitted when there is no certificate.
pub fn decomposition_document(dec: &Decomposition<Rational>, report: &VerificationReport) -> Document {
    let mut doc = Document::new();
    doc.push("iterations", dec.iterations.to_string());
    doc.push("annihilator", format_polynomial(&dec.annihilator));
    doc.push("p_tilde", format_polynomial(&dec.p_tilde));
    doc.push("p_bar", format_polynomial(&dec.p_bar));
    if let Some(h) = &dec.h {
        doc.push("h", format_polynomial(h));
    }
    doc.push("d", format_matrix(&dec.d));
    doc.push("n", format_matrix(&dec.n));
    doc.push("verification", format_report(report));
    doc
}

/// Reads back a decomposition. The multiplicity is not stored; it is
/// recovered as the least `m` with `annihilator | p_tilde^m`, falling back
/// to the annihilator's degree when no such `m` exists.
pub fn decomposition_from_document(doc: &Document) -> Result<Decomposition<Rational>> {
    let iterations = doc
        .require("iterations")?
        .parse::<u32>()
        .map_err(|e| Error::Parse(format!("iterations: {e}")))?;
    let annihilator = parse_polynomial(doc.require("annihilator")?)?;
    let p_tilde = parse_polynomial(doc.require("p_tilde")?)?;
    let p_bar = parse_polynomial(doc.require("p_bar")?)?;
    let h = doc.get("h").map(parse_polynomial).transpose()?;
    let d = parse_matrix(doc.require("d")?)?;
    let n = parse_matrix(doc.require("n")?)?;
    let multiplicity = recover_multiplicity(&annihilator, &p_tilde);
    Ok(Decomposition {
        d,
        n,
        h,
        iterations,
        annihilator,
        p_tilde,
        p_bar,
        multiplicity,
    })
}

fn recover_multiplicity(annihilator: &Polynomial, p_tilde: &Polynomial) -> u32 {
    let max = annihilator.degree().finite().unwrap_or(0).max(1) as u32;
    if annihilator.is_constant() || p_tilde.is_zero() {
        return max;
    }
    let mut power = Polynomial::one();
    for m in 1..=max {
        power = &power * p_tilde;
        if annihilator.divides(&power).unwrap_or(false) {
            return m;
        }
    }
    max
}
