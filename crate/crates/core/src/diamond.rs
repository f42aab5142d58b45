//! Hodge diamonds and their line-based file format.
//!
//! A diamond document is UTF-8 text. Lines whose first non-blank character is
//! `#` are comments; blank lines are ignored. The first significant line is
//! `n <integer>` giving the half dimension (complex dimension `2n`), followed
//! by exactly `4n + 1` significant lines. Line `r` (counting from zero) holds
//! the Hodge numbers of total degree `r`: the values `h^{p, r-p}` for `p`
//! running from `min(r, 2n)` down to `max(0, r - 2n)`.
//!
//! The canonical serialization has no comments, single spaces between
//! entries, and a trailing newline; parsing then serializing a canonical
//! document reproduces it byte for byte.

use std::fmt;

use thiserror::Error;

use crate::betti::BettiVector;
use crate::scalar::Scalar;
use crate::Int;

/// The full table of Hodge numbers `h^{p,q}`, `0 <= p, q <= 2n`, of a compact
/// manifold of complex dimension `2n`.
///
/// Construction does not enforce any symmetry; see [`crate::validate`] for
/// the structural and strict invariant checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeDiamond<T = Int> {
    half_dim: usize,
    entries: Vec<T>,
}

impl<T: Scalar> HodgeDiamond<T> {
    /// Builds a diamond by evaluating `f(p, q)` on every bidegree.
    pub fn from_fn(half_dim: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        assert!(half_dim >= 1, "half_dim must be at least 1");
        let side = 2 * half_dim + 1;
        let mut entries = Vec::with_capacity(side * side);
        for p in 0..side {
            for q in 0..side {
                entries.push(f(p, q));
            }
        }
        HodgeDiamond { half_dim, entries }
    }

    pub fn half_dim(&self) -> usize {
        self.half_dim
    }

    fn index(&self, p: usize, q: usize) -> usize {
        let side = 2 * self.half_dim + 1;
        assert!(p < side && q < side, "bidegree ({p},{q}) out of range");
        p * side + q
    }

    /// The Hodge number `h^{p,q}`.
    pub fn h(&self, p: usize, q: usize) -> &T {
        &self.entries[self.index(p, q)]
    }

    /// A copy with the single entry `h^{p,q}` replaced. Handy for building
    /// perturbed diamonds in tests; no symmetry is restored for you.
    pub fn with_entry(&self, p: usize, q: usize, value: T) -> Self {
        let mut copy = self.clone();
        let i = copy.index(p, q);
        copy.entries[i] = value;
        copy
    }

    /// Betti numbers `b_k = sum_{p+q=k} h^{p,q}` for `0 <= k <= 4n`.
    pub fn betti_vector(&self) -> BettiVector<T> {
        let side = 2 * self.half_dim + 1;
        let mut b = vec![T::zero(); 4 * self.half_dim + 1];
        for p in 0..side {
            for q in 0..side {
                b[p + q] = b[p + q].clone() + self.h(p, q).clone();
            }
        }
        BettiVector::new(self.half_dim, b).expect("length is 4n+1 by construction")
    }

    /// Second Betti number, `h^{2,0} + h^{1,1} + h^{0,2}`.
    pub fn b2(&self) -> T {
        self.h(2, 0).clone() + self.h(1, 1).clone() + self.h(0, 2).clone()
    }

    /// The degree-`r` row as stored in the file format: `h^{p, r-p}` for `p`
    /// from `min(r, 2n)` down to `max(0, r - 2n)`.
    pub fn row(&self, r: usize) -> Vec<T> {
        assert!(r <= 4 * self.half_dim, "degree {r} out of range");
        let p_hi = r.min(2 * self.half_dim);
        let p_lo = r - p_hi;
        (p_lo..=p_hi)
            .rev()
            .map(|p| self.h(p, r - p).clone())
            .collect()
    }
}

impl<T: Scalar> fmt::Display for HodgeDiamond<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_diamond(self))
    }
}

/// Failure to read a diamond document; positions are 1-based line numbers of
/// the input text, counting comment and blank lines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiamondParseError {
    #[error("line {line}: expected header `n <integer>`, found {found:?}")]
    MalformedHeader { line: usize, found: String },
    #[error("header gives no half dimension, or it is zero")]
    BadHalfDim,
    #[error("expected {expected} diamond rows, found {found}")]
    WrongRowCount { expected: usize, found: usize },
    #[error("line {line}: degree-{degree} row has {found} entries, expected {expected}")]
    WrongRowLength {
        line: usize,
        degree: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: {token:?} is not an integer")]
    InvalidInteger { line: usize, token: String },
    #[error("line {line}: negative entry {token}")]
    NegativeEntry { line: usize, token: String },
}

fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

/// Reads a diamond document. See the module docs for the format.
pub fn parse_diamond<T: Scalar>(text: &str) -> Result<HodgeDiamond<T>, DiamondParseError> {
    let mut lines = significant_lines(text);

    let (header_line, header) = lines.next().ok_or(DiamondParseError::MalformedHeader {
        line: text.lines().count().max(1),
        found: String::new(),
    })?;
    let mut parts = header.split_whitespace();
    let tag = parts.next().unwrap_or("");
    let value = parts.next();
    if tag != "n" || value.is_none() || parts.next().is_some() {
        return Err(DiamondParseError::MalformedHeader {
            line: header_line,
            found: header.to_string(),
        });
    }
    let half_dim: usize = value
        .unwrap()
        .parse()
        .map_err(|_| DiamondParseError::MalformedHeader {
            line: header_line,
            found: header.to_string(),
        })?;
    if half_dim == 0 {
        return Err(DiamondParseError::BadHalfDim);
    }

    let side = 2 * half_dim + 1;
    let mut entries = vec![T::zero(); side * side];
    let expected_rows = 4 * half_dim + 1;
    let mut rows_seen = 0usize;

    for (line_no, line) in lines {
        if rows_seen == expected_rows {
            return Err(DiamondParseError::WrongRowCount {
                expected: expected_rows,
                found: expected_rows + 1,
            });
        }
        let r = rows_seen;
        let p_hi = r.min(2 * half_dim);
        let p_lo = r - p_hi;
        let expected_len = p_hi - p_lo + 1;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != expected_len {
            return Err(DiamondParseError::WrongRowLength {
                line: line_no,
                degree: r,
                expected: expected_len,
                found: tokens.len(),
            });
        }
        for (offset, token) in tokens.iter().enumerate() {
            let value: T = token.parse().map_err(|_| DiamondParseError::InvalidInteger {
                line: line_no,
                token: token.to_string(),
            })?;
            if value < T::zero() {
                return Err(DiamondParseError::NegativeEntry {
                    line: line_no,
                    token: token.to_string(),
                });
            }
            let p = p_hi - offset;
            let q = r - p;
            entries[p * side + q] = value;
        }
        rows_seen += 1;
    }

    if rows_seen != expected_rows {
        return Err(DiamondParseError::WrongRowCount {
            expected: expected_rows,
            found: rows_seen,
        });
    }

    Ok(HodgeDiamond { half_dim, entries })
}

/// Writes the canonical document for a diamond: header, one row per degree,
/// single spaces, trailing newline, no comments.
pub fn serialize_diamond<T: Scalar>(diamond: &HodgeDiamond<T>) -> String {
    let mut out = format!("n {}\n", diamond.half_dim());
    for r in 0..=4 * diamond.half_dim() {
        let row = diamond.row(r);
        let mut first = true;
        for v in row {
            if !first {
                out.push(' ');
            }
            out.push_str(&v.to_string());
            first = false;
        }
        out.push('\n');
    }
    out
}
