//! Plain-text Cayley table format.
//!
//! ```text
//! 3
//! 0 0 0
//! 0 1 2
//! 0 2 1
//! # label 0 z
//! ```
//!
//! The first non-comment line is the order `n`, followed by `n` rows of `n`
//! whitespace separated 0-based indices. Lines starting with `#` are comments,
//! except `# label i name`, which names element `i`.

use qkit_core::FiniteSemigroup;
use std::fmt::Write as _;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("unexpected end of input: expected {expected} table rows, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("{0}")]
    Invalid(#[from] qkit_core::Error),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, message: message.into() }
}

pub fn parse(text: &str) -> Result<FiniteSemigroup, ParseError> {
    let mut order: Option<usize> = None;
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut labels: Vec<(usize, usize, String)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let mut parts = comment.split_whitespace();
            if parts.next() == Some("label") {
                let idx = parts.next().ok_or_else(|| syntax(line_no, "label needs an index"))?;
                let idx: usize = idx.parse().map_err(|_| syntax(line_no, format!("bad label index `{idx}`")))?;
                let name: Vec<&str> = parts.collect();
                if name.is_empty() {
                    return Err(syntax(line_no, "label needs a name"));
                }
                labels.push((line_no, idx, name.join(" ")));
            }
            continue;
        }
        match order {
            None => {
                let n: usize = line.parse().map_err(|_| syntax(line_no, format!("expected the order, found `{line}`")))?;
                if n == 0 {
                    return Err(syntax(line_no, "order must be positive"));
                }
                order = Some(n);
            }
            Some(n) => {
                if rows.len() == n {
                    return Err(syntax(line_no, "extra row after the table"));
                }
                let row = line
                    .split_whitespace()
                    .map(|tok| {
                        let v: usize = tok.parse().map_err(|_| syntax(line_no, format!("bad entry `{tok}`")))?;
                        if v >= n {
                            return Err(syntax(line_no, format!("entry {v} out of range for order {n}")));
                        }
                        Ok(v)
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                if row.len() != n {
                    return Err(syntax(line_no, format!("row has {} entries, expected {n}", row.len())));
                }
                rows.push(row);
            }
        }
    }
    let n = order.ok_or(ParseError::Truncated { expected: 1, found: 0 })?;
    if rows.len() != n {
        return Err(ParseError::Truncated { expected: n, found: rows.len() });
    }
    let mut s = FiniteSemigroup::new(rows)?;
    if !labels.is_empty() {
        let mut names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        for (line_no, idx, name) in labels {
            if idx >= n {
                return Err(syntax(line_no, format!("label index {idx} out of range")));
            }
            names[idx] = name;
        }
        s = s.with_labels(names)?;
    }
    Ok(s)
}

pub fn render(s: &FiniteSemigroup) -> String {
    let mut out = String::new();
    writeln!(out, "{}", s.order()).unwrap();
    for row in s.rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        writeln!(out, "{}", cells.join(" ")).unwrap();
    }
    if let Some(labels) = s.labels() {
        for (i, l) in labels.iter().enumerate() {
            writeln!(out, "# label {i} {l}").unwrap();
        }
    }
    out
}

/// Resolves a comma separated element list given by index or label.
pub fn parse_elements(s: &FiniteSemigroup, spec: &str) -> Result<Vec<usize>, String> {
    spec.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|tok| {
            if let Some(labels) = s.labels() {
                if let Some(i) = labels.iter().position(|l| l == tok) {
                    return Ok(i);
                }
            }
            match tok.parse::<usize>() {
                Ok(i) if i < s.order() => Ok(i),
                _ => Err(format!("unknown element `{tok}`")),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use qkit_core::fixtures;

    #[test]
    fn round_trip_with_labels() {
        let b2 = fixtures::brandt_b2();
        assert_eq!(parse(&render(&b2)).unwrap(), b2);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse("2\n0 0\n# note\n0 x\n").unwrap_err();
        assert_eq!(err, ParseError::Syntax { line: 4, message: "bad entry `x`".into() });
        assert!(matches!(parse("2\n0 0\n0 5\n"), Err(ParseError::Syntax { line: 3, .. })));
        assert!(matches!(parse("2\n0 0\n"), Err(ParseError::Truncated { expected: 2, found: 1 })));
    }

    #[test]
    fn non_associative_is_rejected() {
        // x*y = y+1 mod 2 is not associative
        assert!(matches!(parse("2\n1 0\n1 0\n"), Err(ParseError::Invalid(qkit_core::Error::NotAssociative { .. }))));
    }
}
