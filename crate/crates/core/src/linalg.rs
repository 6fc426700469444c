//! Exact rank over F2, F_p and Q.
//!
//! Matrices carry integer entries; the rank is taken after mapping each
//! entry into the chosen field. Boundary matrices only ever hold 0 and ±1,
//! so this covers every matrix the homology engine builds.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Coefficient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum FieldSpec {
    #[default]
    F2,
    /// `F_p` for an odd prime `p < 2^31`.
    Fp(u32),
    Rationals,
}

impl FieldSpec {
    /// `F_p`, with `p = 2` mapped to [`FieldSpec::F2`].
    pub fn prime(p: u64) -> Result<FieldSpec> {
        if p == 2 {
            return Ok(FieldSpec::F2);
        }
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::Range(format!("{p} is not a prime below 2^31")));
        }
        Ok(FieldSpec::Fp(p as u32))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::F2 => 2,
            FieldSpec::Fp(p) => p as u64,
            FieldSpec::Rationals => 0,
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::F2 => f.write_str("f2"),
            FieldSpec::Fp(p) => write!(f, "f{p}"),
            FieldSpec::Rationals => f.write_str("q"),
        }
    }
}

/// Accepts `f2`, `f3`, `f5`, ... and `q`.
impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<FieldSpec> {
        let lower = s.trim().to_ascii_lowercase();
        if lower == "q" {
            return Ok(FieldSpec::Rationals);
        }
        let digits = lower
            .strip_prefix('f')
            .ok_or_else(|| Error::Parse(format!("unknown field `{s}`")))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("unknown field `{s}`")))?;
        FieldSpec::prime(p)
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, i64)>,
}

impl SparseMatrix {
    /// Validates that indices are in range and appear at most once.
    pub fn new(rows: usize, cols: usize, entries: Vec<(usize, usize, i64)>) -> Result<Self> {
        let mut seen: Vec<(usize, usize)> = Vec::with_capacity(entries.len());
        for &(r, c, _) in &entries {
            if r >= rows || c >= cols {
                return Err(Error::Range(format!(
                    "entry ({r}, {c}) outside {rows}×{cols}"
                )));
            }
            seen.push((r, c));
        }
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Range("duplicate matrix entry".into()));
        }
        Ok(SparseMatrix { rows, cols, entries })
    }

    pub(crate) fn new_unchecked(rows: usize, cols: usize, entries: Vec<(usize, usize, i64)>) -> Self {
        SparseMatrix { rows, cols, entries }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Range("ragged dense matrix".into()));
        }
        let entries = rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .filter(|(_, v)| **v != 0)
                    .map(move |(j, v)| (i, j, *v))
            })
            .collect();
        Ok(SparseMatrix { rows: rows.len(), cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[(usize, usize, i64)] {
        &self.entries
    }

    pub fn transpose(&self) -> SparseMatrix {
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            entries: self.entries.iter().map(|&(r, c, v)| (c, r, v)).collect(),
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.cols]; self.rows];
        for &(r, c, v) in &self.entries {
            out[r][c] = v;
        }
        out
    }

    fn row_lists(&self) -> Vec<Vec<(usize, i64)>> {
        let mut rows = vec![Vec::new(); self.rows];
        for &(r, c, v) in &self.entries {
            rows[r].push((c, v));
        }
        rows
    }
}

/// Exact rank of `m` over `field`.
pub fn rank(m: &SparseMatrix, field: FieldSpec) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    match field {
        FieldSpec::F2 => rank_f2(m),
        FieldSpec::Fp(p) => rank_fp(m, p as u64),
        FieldSpec::Rationals => rank_q(m),
    }
}

/// Bit-packed elimination: each row is inserted into an XOR basis keyed by
/// its lowest set column.
fn rank_f2(m: &SparseMatrix) -> usize {
    let words = m.cols.div_ceil(64);
    let mut basis: Vec<Option<Vec<u64>>> = vec![None; m.cols];
    let mut rank = 0;
    for list in m.row_lists() {
        let mut row = vec![0u64; words];
        for (c, v) in list {
            if v.rem_euclid(2) == 1 {
                row[c / 64] ^= 1 << (c % 64);
            }
        }
        while let Some(pivot) = lowest_bit(&row) {
            match &basis[pivot] {
                Some(b) => {
                    for (x, y) in row.iter_mut().zip(b) {
                        *x ^= y;
                    }
                }
                None => {
                    basis[pivot] = Some(row);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn lowest_bit(row: &[u64]) -> Option<usize> {
    row.iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and a ≠ 0 mod p
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// Modular elimination; basis rows are normalized to a leading 1.
fn rank_fp(m: &SparseMatrix, p: u64) -> usize {
    let mut basis: Vec<Option<Vec<u64>>> = vec![None; m.cols];
    let mut rank = 0;
    for list in m.row_lists() {
        let mut row = vec![0u64; m.cols];
        for (c, v) in list {
            row[c] = v.rem_euclid(p as i64) as u64;
        }
        let mut start = 0;
        while let Some(pivot) = (start..m.cols).find(|&c| row[c] != 0) {
            match &basis[pivot] {
                Some(b) => {
                    let factor = row[pivot];
                    for c in pivot..m.cols {
                        row[c] = (row[c] + (p - factor) * b[c]) % p;
                    }
                    start = pivot + 1;
                }
                None => {
                    let inv = inverse_mod(row[pivot], p);
                    for x in row.iter_mut().skip(pivot) {
                        *x = *x * inv % p;
                    }
                    basis[pivot] = Some(row);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// Fraction-free elimination over the integers. Each reduction step is
/// `row ← lead(b)·row − row[pivot]·b`, followed by removal of the row
/// content so intermediate entries stay small.
fn rank_q(m: &SparseMatrix) -> usize {
    let mut basis: Vec<Option<Vec<BigInt>>> = vec![None; m.cols];
    let mut rank = 0;
    for list in m.row_lists() {
        let mut row = vec![BigInt::zero(); m.cols];
        for (c, v) in list {
            row[c] = BigInt::from(v);
        }
        let mut start = 0;
        while let Some(pivot) = (start..m.cols).find(|&c| !row[c].is_zero()) {
            match &basis[pivot] {
                Some(b) => {
                    let lead = b[pivot].clone();
                    let factor = row[pivot].clone();
                    for c in pivot..m.cols {
                        row[c] = &lead * &row[c] - &factor * &b[c];
                    }
                    remove_content(&mut row[pivot..]);
                    start = pivot + 1;
                }
                None => {
                    remove_content(&mut row[pivot..]);
                    basis[pivot] = Some(row);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn remove_content(row: &mut [BigInt]) {
    let g = row
        .iter()
        .filter(|x| !x.is_zero())
        .fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && g.abs() != BigInt::from(1) {
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}
