//! Line-oriented instance files.
//!
//! ```text
//! # comment
//! query 0 1 0
//! line 1 -1 1
//! line 2 -1 1/2
//! ```

use std::fmt::Write;

use thiserror::Error;
use zone_core::{Line, Scalar, ZoneError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceFile<T> {
    pub query: Line<T>,
    /// `source_id` of each line is its position in this list.
    pub lines: Vec<Line<T>>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("no `query` record")]
    MissingQuery,
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, message: message.into() }
}

pub fn parse_instance<T: Scalar>(text: &str) -> Result<InstanceFile<T>, ParseError> {
    let mut query = None;
    let mut lines = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let lineno = k + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let (kind, coeffs) = fields.split_first().expect("content is not empty");
        if *kind != "query" && *kind != "line" {
            return Err(syntax(lineno, format!("unknown record `{kind}`, expected `query` or `line`")));
        }
        if coeffs.len() != 3 {
            return Err(syntax(lineno, format!("`{kind}` takes 3 coefficients, found {}", coeffs.len())));
        }
        let mut abc = Vec::with_capacity(3);
        for c in coeffs {
            abc.push(T::parse_fraction(c).ok_or_else(|| syntax(lineno, format!("malformed rational `{c}`")))?);
        }
        let [a, b, c]: [T; 3] = abc.try_into().expect("three coefficients");
        let id = if *kind == "query" { usize::MAX } else { lines.len() };
        let parsed = Line::new(a, b, c, id).map_err(|e| match e {
            ZoneError::DegenerateLine { .. } => syntax(lineno, "a and b are both zero"),
            other => syntax(lineno, other.to_string()),
        })?;
        if *kind == "query" {
            if query.is_some() {
                return Err(syntax(lineno, "second `query` record"));
            }
            query = Some(parsed);
        } else {
            lines.push(parsed);
        }
    }
    Ok(InstanceFile {
        query: query.ok_or(ParseError::MissingQuery)?,
        lines,
    })
}

fn coefficient<T: Scalar>(v: &T) -> String {
    let s = v.to_fraction_string();
    match s.strip_suffix("/1") {
        Some(int) => int.to_string(),
        None => s,
    }
}

fn record<T: Scalar>(out: &mut String, kind: &str, l: &Line<T>) {
    let (a, b, c) = l.coefficients();
    writeln!(out, "{kind} {} {} {}", coefficient(a), coefficient(b), coefficient(c)).unwrap();
}

/// Canonical text of a (normalized) instance; `parse_instance` inverts it.
pub fn emit_instance<T: Scalar>(inst: &InstanceFile<T>) -> String {
    let mut out = String::new();
    record(&mut out, "query", &inst.query);
    for l in &inst.lines {
        record(&mut out, "line", l);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use zone_core::Rational;

    #[test]
    fn examples() {
        let inst: InstanceFile<Rational> = parse_instance("query 0 1 0\nline 1 -1 1\n").unwrap();
        assert_eq!(inst.query, Line::x_axis().with_source(usize::MAX));
        assert_eq!(inst.lines, vec![Line::from_slope(Rational::from_i64(1), Rational::from_i64(1), 0)]);

        let inst: InstanceFile<Rational> = parse_instance("query 0 1 0\nline 2 -1 0\nline 1 1 -2\n").unwrap();
        assert_eq!(inst.lines[0], Line::from_slope(Rational::from_i64(2), Rational::from_i64(0), 0));
        assert_eq!(inst.lines[1], Line::from_slope(Rational::from_i64(-1), Rational::from_i64(2), 1));

        assert_eq!(parse_instance::<Rational>("line 1 0 0"), Err(ParseError::MissingQuery));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_instance::<Rational>("# header\nquery 0 1 0\nline 1 x 0\n").unwrap_err();
        assert_eq!(err.to_string(), "line 3: malformed rational `x`");
        let err = parse_instance::<Rational>("query 0 0 1\n").unwrap_err();
        assert_eq!(err.to_string(), "line 1: a and b are both zero");
        let err = parse_instance::<Rational>("query 0 1 0\nline 1 1/0 0\n").unwrap_err();
        assert!(err.to_string().starts_with("line 2"));
        let err = parse_instance::<Rational>("query 0 1 0\nplane 1 1 1\n").unwrap_err();
        assert!(err.to_string().contains("unknown record"));
    }

    #[test]
    fn comments_and_normalization() {
        let text = "query 0 2 0 # the x-axis\n\n  line 2 4 -6\n";
        let inst: InstanceFile<Rational> = parse_instance(text).unwrap();
        assert_eq!(emit_instance(&inst), "query 0 1 0\nline 1 2 -3\n");
        let inst: InstanceFile<Rational> = parse_instance("query 3 1 0\nline 3 1 1\n").unwrap();
        assert_eq!(emit_instance(&inst), "query 1 1/3 0\nline 1 1/3 1/3\n");
        assert_eq!(parse_instance::<Rational>(&emit_instance(&inst)).unwrap(), inst);
    }
}
