//! Text formats for algebras, subsets, partitions and set-valued maps.
//!
//! Algebra files look like
//!
//! ```text
//! # comment
//! algebra table3
//! order 4
//! zero 0
//! 0 1 0 0
//! 1 0 0 0
//! 2 2 0 3
//! 3 3 3 0
//! ```
//!
//! The `algebra` line is optional. Row `x` lists `x*0 .. x*(n-1)`. A `#`
//! starts a comment that runs to the end of the line.
//!
//! Subsets are comma separated (`0,1`), partitions join classes with `|`
//! (`0,1|2|3`), and set-valued maps are `x:image` entries joined with `;`
//! (`0:0;1:0,1;2:`), an empty image being an empty string.

use std::fmt::Write as _;

use itertools::Itertools;
use thiserror::Error;

use crate::{Error, FiniteAlgebra, Partition, SetValuedMap, Subset};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("`{0}` is not a non-negative integer")]
    BadInteger(String),
    #[error("expected {expected} entries in the row, found {found}")]
    RowLength { expected: usize, found: usize },
    #[error("expected {expected} rows, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error("{value} is outside a carrier of size {n}")]
    OutOfRange { value: usize, n: usize },
    #[error("missing `{0}` line")]
    MissingHeader(&'static str),
    #[error("unexpected `{0}`")]
    Unexpected(String),
    #[error("element {0} appears more than once")]
    Duplicate(usize),
    #[error("malformed separator")]
    Separator,
    #[error("no image given for element {0}")]
    MissingImage(usize),
    #[error("{0}")]
    Invalid(Error),
}

fn err(line: usize, column: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, column, kind }
}

/// An algebra together with the optional name from its file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraFile {
    pub name: Option<String>,
    pub algebra: FiniteAlgebra,
}

/// Whitespace-separated tokens with their 1-based column.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.split_whitespace()
        .map(move |t| (t.as_ptr() as usize - line.as_ptr() as usize + 1, t))
}

fn number(line: usize, column: usize, tok: &str) -> Result<usize, ParseError> {
    tok.parse()
        .map_err(|_| err(line, column, ParseErrorKind::BadInteger(tok.to_string())))
}

/// Line number and `(column, token)` pairs of one header line.
type HeaderLine<'a> = (usize, Vec<(usize, &'a str)>);

pub fn parse_algebra(text: &str) -> Result<FiniteAlgebra, ParseError> {
    parse_algebra_file(text).map(|f| f.algebra)
}

pub fn parse_algebra_file(text: &str) -> Result<AlgebraFile, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("")))
        .filter(|(_, l)| !l.trim().is_empty())
        .peekable();
    let last_line = text.lines().count() + 1;

    let mut header = |key: &'static str, optional: bool| -> Result<Option<HeaderLine<'_>>, ParseError> {
        match lines.peek() {
            Some(&(no, l)) => {
                let toks: Vec<_> = tokens(l).collect();
                if toks[0].1 == key {
                    lines.next();
                    Ok(Some((no, toks)))
                } else if optional {
                    Ok(None)
                } else {
                    Err(err(no, toks[0].0, ParseErrorKind::MissingHeader(key)))
                }
            }
            None if optional => Ok(None),
            None => Err(err(last_line, 1, ParseErrorKind::MissingHeader(key))),
        }
    };

    let name = header("algebra", true)?.map(|(no, toks)| match toks.len() {
        1 => Err(err(no, toks[0].0 + 7, ParseErrorKind::MissingHeader("algebra name"))),
        _ => Ok(toks[1..].iter().map(|t| t.1).join(" ")),
    });
    let name = name.transpose()?;

    let single = |(no, toks): (usize, Vec<(usize, &str)>)| -> Result<(usize, usize, usize), ParseError> {
        match toks.as_slice() {
            [_, (col, v)] => Ok((no, *col, number(no, *col, v)?)),
            [(col, _)] => Err(err(no, *col, ParseErrorKind::Separator)),
            [_, _, (col, extra), ..] => Err(err(no, *col, ParseErrorKind::Unexpected(extra.to_string()))),
            [] => unreachable!("blank lines are skipped"),
        }
    };
    let (order_line, order_col, n) = single(header("order", false)?.expect("required"))?;
    let (zero_line, zero_col, zero) = single(header("zero", false)?.expect("required"))?;
    if n == 0 || n > crate::MAX_ORDER {
        return Err(err(
            order_line,
            order_col,
            ParseErrorKind::Invalid(Error::InvalidOrder {
                n,
                max: crate::MAX_ORDER,
            }),
        ));
    }
    if zero >= n {
        return Err(err(zero_line, zero_col, ParseErrorKind::OutOfRange { value: zero, n }));
    }

    let mut table = Vec::with_capacity(n * n);
    let mut rows = 0;
    for (no, l) in lines {
        if rows == n {
            let (col, tok) = tokens(l).next().expect("nonblank");
            return Err(err(no, col, ParseErrorKind::Unexpected(tok.to_string())));
        }
        let toks: Vec<_> = tokens(l).collect();
        if toks.len() != n {
            let column = toks.get(n).map_or(l.trim_end().len() + 1, |t| t.0);
            return Err(err(
                no,
                column,
                ParseErrorKind::RowLength {
                    expected: n,
                    found: toks.len(),
                },
            ));
        }
        for (col, tok) in toks {
            let v = number(no, col, tok)?;
            if v >= n {
                return Err(err(no, col, ParseErrorKind::OutOfRange { value: v, n }));
            }
            table.push(v);
        }
        rows += 1;
    }
    if rows != n {
        return Err(err(
            last_line,
            1,
            ParseErrorKind::RowCount {
                expected: n,
                found: rows,
            },
        ));
    }
    let algebra = FiniteAlgebra::from_flat(n, table, zero).map_err(|e| err(1, 1, ParseErrorKind::Invalid(e)))?;
    Ok(AlgebraFile { name, algebra })
}

/// Inverse of [`parse_algebra_file`], up to comments and spacing.
pub fn render_algebra(alg: &FiniteAlgebra, name: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(name) = name {
        writeln!(out, "algebra {name}").unwrap();
    }
    writeln!(out, "order {}", alg.order()).unwrap();
    writeln!(out, "zero {}", alg.zero()).unwrap();
    for row in alg.rows() {
        writeln!(out, "{}", row.iter().join(" ")).unwrap();
    }
    out
}

fn subset_at(text: &str, n: usize, offset: usize) -> Result<Subset, ParseError> {
    let mut s = Subset::empty(n);
    if text.trim().is_empty() {
        return Ok(s);
    }
    let mut col = offset;
    for part in text.split(',') {
        let tok = part.trim();
        let tok_col = col + part.find(|c: char| !c.is_whitespace()).unwrap_or(0);
        if tok.is_empty() {
            return Err(err(1, tok_col, ParseErrorKind::Separator));
        }
        let v = number(1, tok_col, tok)?;
        if v >= n {
            return Err(err(1, tok_col, ParseErrorKind::OutOfRange { value: v, n }));
        }
        if s.contains(v) {
            return Err(err(1, tok_col, ParseErrorKind::Duplicate(v)));
        }
        s.insert(v);
        col += part.len() + 1;
    }
    Ok(s)
}

/// `"0,1"`; the empty string is the empty set.
pub fn parse_subset(text: &str, n: usize) -> Result<Subset, ParseError> {
    subset_at(text, n, 1)
}

pub fn render_subset(s: &Subset) -> String {
    s.iter().join(",")
}

/// `"0,1|2|3|4"`
pub fn parse_partition(text: &str, n: usize) -> Result<Partition, ParseError> {
    let mut col = 1;
    let mut classes = Vec::new();
    for part in text.split('|') {
        if part.trim().is_empty() {
            return Err(err(1, col, ParseErrorKind::Separator));
        }
        classes.push(subset_at(part, n, col)?);
        col += part.len() + 1;
    }
    Partition::from_classes(n, classes).map_err(|e| {
        let kind = match e {
            Error::PartitionOverlap { element } => ParseErrorKind::Duplicate(element),
            other => ParseErrorKind::Invalid(other),
        };
        err(1, 1, kind)
    })
}

pub fn render_partition(p: &Partition) -> String {
    p.to_string()
}

/// `"0:0;1:0,1;2:"`. Every source element must appear exactly once.
pub fn parse_svmap(text: &str, source: usize, target: usize) -> Result<SetValuedMap, ParseError> {
    let mut images: Vec<Option<Subset>> = vec![None; source];
    let mut col = 1;
    if !text.trim().is_empty() {
        for entry in text.split(';') {
            let Some((x, img)) = entry.split_once(':') else {
                return Err(err(1, col, ParseErrorKind::Separator));
            };
            let x_col = col + x.find(|c: char| !c.is_whitespace()).unwrap_or(0);
            let x_val = number(1, x_col, x.trim())?;
            if x_val >= source {
                return Err(err(1, x_col, ParseErrorKind::OutOfRange { value: x_val, n: source }));
            }
            if images[x_val].is_some() {
                return Err(err(1, x_col, ParseErrorKind::Duplicate(x_val)));
            }
            images[x_val] = Some(subset_at(img, target, col + x.len() + 1)?);
            col += entry.len() + 1;
        }
    }
    let images = images
        .into_iter()
        .enumerate()
        .map(|(x, img)| img.ok_or_else(|| err(1, col, ParseErrorKind::MissingImage(x))))
        .collect::<Result<Vec<_>, _>>()?;
    SetValuedMap::new(target, images).map_err(|e| err(1, 1, ParseErrorKind::Invalid(e)))
}

pub fn render_svmap(map: &SetValuedMap) -> String {
    map.images()
        .iter()
        .enumerate()
        .map(|(x, img)| format!("{x}:{}", render_subset(img)))
        .join(";")
}
