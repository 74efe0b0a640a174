//! Shared helpers for the line-oriented text formats.
//!
//! Blank lines and lines starting with `#` are ignored by every parser.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError { line, column, message: message.into() }
    }
}

/// Whitespace-separated tokens with their 1-based column.
pub(crate) fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = line;
    let mut offset = 0;
    std::iter::from_fn(move || {
        let skip = rest.len() - rest.trim_start().len();
        rest = &rest[skip..];
        offset += skip;
        if rest.is_empty() {
            return None;
        }
        let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
        let tok = &rest[..end];
        let col = offset + 1;
        rest = &rest[end..];
        offset += end;
        Some((col, tok))
    })
}

pub(crate) fn parse_num<T: FromStr>(line: usize, col: usize, tok: &str) -> Result<T, ParseError> {
    tok.parse()
        .map_err(|_| ParseError::new(line, col, format!("expected a number, found `{tok}`")))
}

pub(crate) struct LineCursor<'a> {
    lines: std::iter::Peekable<Box<dyn Iterator<Item = (usize, &'a str)> + 'a>>,
    last_line: usize,
}

impl<'a> LineCursor<'a> {
    pub fn new(text: &'a str) -> Self {
        let it: Box<dyn Iterator<Item = (usize, &'a str)> + 'a> = Box::new(
            text.lines()
                .enumerate()
                .map(|(i, l)| (i + 1, l))
                .filter(|(_, l)| {
                    let t = l.trim();
                    !t.is_empty() && !t.starts_with('#')
                }),
        );
        LineCursor { lines: it.peekable(), last_line: 0 }
    }

    pub fn next_line(&mut self) -> Option<(usize, &'a str)> {
        let next = self.lines.next();
        if let Some((n, _)) = next {
            self.last_line = n;
        }
        next
    }

    /// Next line, which must start with `keyword`.
    pub fn expect_line(&mut self, keyword: &str) -> Result<(usize, &'a str), ParseError> {
        match self.next_line() {
            Some((n, l)) => {
                if l.split_whitespace().next() == Some(keyword) {
                    Ok((n, l))
                } else {
                    let col = l.len() - l.trim_start().len() + 1;
                    Err(ParseError::new(n, col, format!("expected `{keyword}`")))
                }
            }
            None => Err(ParseError::new(self.last_line + 1, 1, format!("expected `{keyword}`, found end of input"))),
        }
    }

    pub fn expect_end(&mut self) -> Result<(), ParseError> {
        match self.next_line() {
            None => Ok(()),
            Some((n, l)) => {
                let col = l.len() - l.trim_start().len() + 1;
                Err(ParseError::new(n, col, "unexpected trailing content"))
            }
        }
    }
}

/// `keyword n1 n2 ...` with exactly `count` numbers when `count` is given.
pub(crate) fn numbers_after<T: FromStr>(
    ln: usize,
    line: &str,
    count: Option<usize>,
) -> Result<Vec<T>, ParseError> {
    let mut toks = tokens(line);
    let (_, kw) = toks.next().ok_or_else(|| ParseError::new(ln, 1, "empty line"))?;
    let mut out = Vec::new();
    let mut last_col = kw.len() + 1;
    for (col, tok) in toks {
        out.push(parse_num(ln, col, tok)?);
        last_col = col + tok.len();
    }
    if let Some(c) = count {
        if out.len() != c {
            return Err(ParseError::new(
                ln,
                last_col,
                format!("`{kw}` needs {c} entries, found {}", out.len()),
            ));
        }
    }
    Ok(out)
}

pub(crate) fn join<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn token_columns() {
        let t: Vec<_> = tokens("  ab  c d").collect();
        assert_eq!(t, vec![(3, "ab"), (7, "c"), (9, "d")]);
    }

    #[test]
    fn cursor_skips_comments() {
        let mut c = LineCursor::new("# hi\n\nsize 2\n  # x\nop 1");
        assert_eq!(c.expect_line("size").unwrap().0, 3);
        assert!(c.expect_line("u").is_err());
    }
}
