//! Tokenizing helpers shared by the text formats.
//!
//! Tableaux: rows joined by `/`, entries by `,` (`1,2,4,6/3,5/7/8`).
//! Permutations: a comma-separated one-line word (`5,3,6,9,1,2,4,7,8`).
//! Strip sequences: blocks joined by `|`, each `a-b` or `a` (`1-2|3-4|5`).
//! The empty string denotes the empty object in every format.
//! Error positions are byte offsets into the parsed string.

use crate::error::{Error, Result};

pub(crate) fn parse_error(kind: &'static str, pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        kind,
        pos,
        msg: msg.into(),
    }
}

/// Parses a positive integer token that starts at byte offset `pos`.
pub(crate) fn parse_positive(tok: &str, pos: usize, kind: &'static str) -> Result<usize> {
    if tok.is_empty() {
        return Err(parse_error(kind, pos, "empty entry"));
    }
    if let Some(i) = tok.find(|c: char| !c.is_ascii_digit()) {
        return Err(parse_error(
            kind,
            pos + i,
            format!("unexpected character {:?}", tok[i..].chars().next().unwrap()),
        ));
    }
    match tok.parse::<usize>() {
        Ok(0) => Err(parse_error(kind, pos, "entries must be positive")),
        Ok(v) => Ok(v),
        Err(_) => Err(parse_error(kind, pos, "number too large")),
    }
}

/// Splits `s` on `sep` and parses each piece, returning values with the raw
/// token and its starting offset.
pub(crate) fn split_with_offsets(s: &str, sep: char) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for piece in s.split(sep) {
        out.push((start, piece));
        start += piece.len() + sep.len_utf8();
    }
    out
}

pub(crate) fn parse_list_at(
    s: &str,
    base: usize,
    sep: char,
    kind: &'static str,
) -> Result<Vec<(usize, usize)>> {
    if s.is_empty() {
        return Err(parse_error(kind, base, "empty list"));
    }
    split_with_offsets(s, sep)
        .into_iter()
        .map(|(off, tok)| Ok((parse_positive(tok, base + off, kind)?, base + off)))
        .collect()
}

/// Parses a separator-delimited list of positive integers; `""` is empty.
pub(crate) fn parse_list<'a>(
    s: &'a str,
    sep: char,
    kind: &'static str,
) -> Result<Vec<(usize, &'a str)>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    split_with_offsets(s, sep)
        .into_iter()
        .map(|(off, tok)| Ok((parse_positive(tok, off, kind)?, tok)))
        .collect()
}

pub(crate) fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}
