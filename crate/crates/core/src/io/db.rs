//! The plain-text code database.
//!
//! ```text
//! # comment
//! code 4 2 i2^2
//! 1100
//! 0011
//! ```
//!
//! A record is a header `code <n> <k> [name]` followed by exactly `k` rows
//! of `n` characters from `{0, 1}`. Blank lines and lines starting with `#`
//! are ignored anywhere. The rows must have rank `k`.

use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::codes::LinearCode;
use crate::gf2::{BitMatrix, BitVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DbError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// One database entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DbRecord {
    pub name: Option<String>,
    pub code: LinearCode,
}

fn parse_err(line: usize, message: impl Into<String>) -> DbError {
    DbError::Parse {
        line,
        message: message.into(),
    }
}

struct Pending {
    line: usize,
    n: usize,
    k: usize,
    name: Option<String>,
    rows: Vec<BitVector>,
}

impl Pending {
    fn finish(self) -> Result<DbRecord, DbError> {
        if self.rows.len() != self.k {
            return Err(parse_err(
                self.line,
                format!("record declares k = {} but has {} rows", self.k, self.rows.len()),
            ));
        }
        let m = BitMatrix::from_rows(self.n, self.rows);
        let rank = m.rank();
        if rank != self.k {
            return Err(parse_err(self.line, format!("rows have rank {rank}, declared k = {}", self.k)));
        }
        Ok(DbRecord {
            name: self.name,
            code: LinearCode::new(&m),
        })
    }
}

fn parse_header(line: usize, text: &str) -> Result<Pending, DbError> {
    let mut parts = text.split_whitespace();
    if parts.next() != Some("code") {
        return Err(parse_err(line, format!("expected `code <n> <k> [name]`, found `{text}`")));
    }
    let mut number = |what: &str| -> Result<usize, DbError> {
        let tok = parts
            .next()
            .ok_or_else(|| parse_err(line, format!("header is missing {what}")))?;
        tok.parse()
            .map_err(|_| parse_err(line, format!("{what} `{tok}` is not a non-negative integer")))
    };
    let n = number("n")?;
    let k = number("k")?;
    if k > n {
        return Err(parse_err(line, format!("k = {k} exceeds n = {n}")));
    }
    let rest: Vec<&str> = parts.collect();
    Ok(Pending {
        line,
        n,
        k,
        name: (!rest.is_empty()).then(|| rest.join(" ")),
        rows: Vec::with_capacity(k),
    })
}

/// Parses database text.
pub fn parse_db_str(text: &str) -> Result<Vec<DbRecord>, DbError> {
    let mut out = Vec::new();
    let mut pending: Option<Pending> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        if t.starts_with("code") {
            if let Some(p) = pending.take() {
                out.push(p.finish()?);
            }
            pending = Some(parse_header(line, t)?);
            continue;
        }
        let p = pending
            .as_mut()
            .ok_or_else(|| parse_err(line, "matrix row before any `code` header"))?;
        if let Some(bad) = t.chars().find(|&c| c != '0' && c != '1') {
            return Err(parse_err(line, format!("non-binary character `{bad}`")));
        }
        if t.len() != p.n {
            return Err(parse_err(line, format!("row has length {}, expected {}", t.len(), p.n)));
        }
        if p.rows.len() == p.k {
            return Err(parse_err(line, format!("more than k = {} rows", p.k)));
        }
        p.rows.push(t.parse().expect("validated binary row"));
    }
    if let Some(p) = pending {
        out.push(p.finish()?);
    }
    Ok(out)
}

/// Reads a database file.
pub fn read_db(path: impl AsRef<Path>) -> Result<Vec<DbRecord>, DbError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| DbError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_db_str(&text)
}

/// Reads a database file, dropping the names.
pub fn parse_db(path: impl AsRef<Path>) -> Result<Vec<LinearCode>, DbError> {
    Ok(read_db(path)?.into_iter().map(|r| r.code).collect())
}

/// Renders records; codes are written by their reduced generator rows.
pub fn format_db(records: &[DbRecord]) -> String {
    let mut s = String::new();
    for r in records {
        let c = &r.code;
        match &r.name {
            Some(name) => writeln!(s, "code {} {} {name}", c.len(), c.dim()),
            None => writeln!(s, "code {} {}", c.len(), c.dim()),
        }
        .expect("writing to a string");
        for row in c.generator().rows() {
            writeln!(s, "{row}").expect("writing to a string");
        }
    }
    s
}

/// Writes unnamed records for `codes`.
pub fn write_db(codes: &[LinearCode], path: impl AsRef<Path>) -> Result<(), DbError> {
    let records: Vec<DbRecord> = codes
        .iter()
        .map(|c| DbRecord {
            name: None,
            code: c.clone(),
        })
        .collect();
    write_records(&records, path)
}

pub fn write_records(records: &[DbRecord], path: impl AsRef<Path>) -> Result<(), DbError> {
    let path = path.as_ref();
    std::fs::write(path, format_db(records)).map_err(|e| DbError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}
