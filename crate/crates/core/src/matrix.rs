//! Square matrices over arbitrary-precision integers.
//!
//! Entry `(i, j)` is `a_ij`: row `i`, column `j`. Every public accessor and
//! both file formats are 1-based. The ordered-partition expansion selects the
//! *row* index from a prefix union and the *column* index from a block, so a
//! transposed reading of the input changes individual terms (though not the
//! determinant itself).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::Value;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    n: usize,
    // row-major, 0-based internally
    entries: Vec<BigInt>,
}

impl ExactMatrix {
    /// Builds a matrix from rows. Fails unless there are `n >= 1` rows of exactly `n` entries.
    pub fn from_rows<T: Into<BigInt>>(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Parse("matrix must have at least one row".into()));
        }
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::Parse(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            entries.extend(row.into_iter().map(Into::into));
        }
        Ok(ExactMatrix { n, entries })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "matrix dimension must be positive");
        Self::from_fn(n, |i, j| if i == j { 1 } else { 0 })
    }

    /// Builds an `n x n` matrix from a 1-based generator `(row, col) -> value`.
    pub fn from_fn<T: Into<BigInt>>(n: usize, mut entry: impl FnMut(usize, usize) -> T) -> Self {
        assert!(n >= 1, "matrix dimension must be positive");
        let mut entries = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                entries.push(entry(i, j).into());
            }
        }
        ExactMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `a_ij` with 1-based row `i` and column `j`.
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        assert!((1..=self.n).contains(&i) && (1..=self.n).contains(&j), "index ({i}, {j}) out of range");
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub(crate) fn at(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row * self.n + col]
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    /// Swaps two rows (1-based).
    pub fn swap_rows(&mut self, a: usize, b: usize) {
        assert!((1..=self.n).contains(&a) && (1..=self.n).contains(&b));
        if a == b {
            return;
        }
        for j in 0..self.n {
            self.entries.swap((a - 1) * self.n + j, (b - 1) * self.n + j);
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    /// Parses the canonical text form: a line with `n`, then `n` lines of `n` integers.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty matrix file".into()))?;
        let n: usize = header
            .parse()
            .map_err(|_| Error::Parse(format!("expected dimension on first line, got {header:?}")))?;
        if n == 0 {
            return Err(Error::Parse("dimension must be at least 1".into()));
        }
        let mut rows = Vec::with_capacity(n);
        for line in lines {
            if rows.len() == n {
                return Err(Error::Parse(format!("more than {n} rows")));
            }
            let row = line
                .split_whitespace()
                .map(|tok| {
                    BigInt::from_str(tok).map_err(|_| Error::Parse(format!("not an integer: {tok:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        if rows.len() != n {
            return Err(Error::Parse(format!("expected {n} rows, found {}", rows.len())));
        }
        Self::from_rows(rows)
    }

    /// Parses `{"n": .., "entries": [[..], ..]}`. Entries may be JSON integers or decimal strings.
    pub fn parse_json(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let n = value
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("missing or invalid field `n`".into()))? as usize;
        let rows = value
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing or invalid field `entries`".into()))?;
        if rows.len() != n {
            return Err(Error::Parse(format!("`n` is {n} but `entries` has {} rows", rows.len())));
        }
        let rows = rows
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| Error::Parse("each row must be an array".into()))?
                    .iter()
                    .map(json_integer)
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }

    /// Picks the JSON parser when the input starts with `{`, the text parser otherwise.
    pub fn parse_any(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Self::parse_json(text)
        } else {
            Self::parse_text(text)
        }
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Vec<Value>> = self
            .entries
            .chunks(self.n)
            .map(|row| row.iter().map(|x| Value::String(x.to_string())).collect())
            .collect();
        serde_json::json!({ "n": self.n, "entries": entries })
    }
}

fn json_integer(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(num) => {
            if let Some(i) = num.as_i64() {
                Ok(BigInt::from(i))
            } else if let Some(u) = num.as_u64() {
                Ok(BigInt::from(u))
            } else {
                Err(Error::Parse(format!("not an integer: {num}")))
            }
        }
        Value::String(s) => {
            BigInt::from_str(s.trim()).map_err(|_| Error::Parse(format!("not a decimal integer: {s:?}")))
        }
        other => Err(Error::Parse(format!("unexpected matrix entry {other}"))),
    }
}

impl fmt::Display for ExactMatrix {
    /// Canonical text form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for row in self.entries.chunks(self.n) {
            let line: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for ExactMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_any(s)
    }
}
