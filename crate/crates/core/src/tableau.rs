//! Standard and partial Young tableaux.
//!
//! Rows are stored top to bottom ("English" convention); cell `(r, c)` is
//! row `r`, column `c`, both zero based.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::partition::Partition;
use crate::permutation::Permutation;
use crate::text;

fn check_filling(rows: &[Vec<usize>]) -> Result<()> {
    for (r, row) in rows.iter().enumerate() {
        if row.is_empty() {
            return Err(invalid(format!("row {} is empty", r + 1)));
        }
        if r > 0 && row.len() > rows[r - 1].len() {
            return Err(invalid(format!(
                "row {} is longer than the row above it",
                r + 1
            )));
        }
        for c in 0..row.len() {
            if c > 0 && row[c - 1] >= row[c] {
                return Err(invalid(format!(
                    "row {} does not increase at column {}",
                    r + 1,
                    c + 1
                )));
            }
            if r > 0 && rows[r - 1][c] >= row[c] {
                return Err(invalid(format!(
                    "column {} does not increase at row {}",
                    c + 1,
                    r + 1
                )));
            }
        }
    }
    Ok(())
}

fn shape_of(rows: &[Vec<usize>]) -> Partition {
    Partition::from_parts_unchecked(rows.iter().map(Vec::len).collect())
}

fn display_rows(rows: &[Vec<usize>], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let rs: Vec<String> = rows.iter().map(|r| text::join(r, ",")).collect();
    f.write_str(&rs.join("/"))
}

fn parse_rows(s: &str, kind: &'static str) -> Result<Vec<Vec<usize>>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    text::split_with_offsets(s, '/')
        .into_iter()
        .map(|(off, row)| {
            Ok(text::parse_list_at(row, off, ',', kind)?
                .into_iter()
                .map(|(v, _)| v)
                .collect())
        })
        .collect()
}

/// Locates the first invariant violation in parsed rows, returning the byte
/// offset of the offending entry.
fn locate_violation(s: &str, rows: &[Vec<usize>]) -> usize {
    let mut offsets: Vec<Vec<usize>> = Vec::new();
    for (off, row) in text::split_with_offsets(s, '/') {
        offsets.push(
            text::split_with_offsets(row, ',')
                .into_iter()
                .map(|(o, _)| off + o)
                .collect(),
        );
    }
    let mut seen = HashSet::new();
    for (r, row) in rows.iter().enumerate() {
        if r > 0 && row.len() > rows[r - 1].len() {
            return offsets[r][rows[r - 1].len()];
        }
        for c in 0..row.len() {
            let bad = !seen.insert(row[c])
                || (c > 0 && row[c - 1] >= row[c])
                || (r > 0 && rows[r - 1][c] >= row[c]);
            if bad {
                return offsets[r][c];
            }
        }
    }
    0
}

/// A Young diagram of `n` boxes filled bijectively with `1..=n`, strictly
/// increasing along rows and down columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        check_filling(&rows)?;
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for &v in rows.iter().flatten() {
            if v == 0 || v > n {
                return Err(invalid(format!("entry {v} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(invalid(format!("entry {v} appears twice")));
            }
        }
        Ok(StandardTableau { rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>) -> Self {
        debug_assert!(StandardTableau::new(rows.clone()).is_ok(), "{rows:?}");
        StandardTableau { rows }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The one-row tableau `1 2 ... n`.
    pub fn single_row(n: usize) -> Self {
        if n == 0 {
            return Self::empty();
        }
        StandardTableau {
            rows: vec![(1..=n).collect()],
        }
    }

    /// The one-column tableau with `1..=n` top to bottom.
    pub fn single_column(n: usize) -> Self {
        StandardTableau {
            rows: (1..=n).map(|v| vec![v]).collect(),
        }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Partition {
        shape_of(&self.rows)
    }

    pub fn entry(&self, r: usize, c: usize) -> Option<usize> {
        self.rows.get(r).and_then(|row| row.get(c)).copied()
    }

    /// `positions()[v]` is the cell holding `v` (index 0 unused).
    pub fn positions(&self) -> Vec<(usize, usize)> {
        let mut pos = vec![(usize::MAX, usize::MAX); self.n() + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                pos[v] = (r, c);
            }
        }
        pos
    }

    /// Bottom row first, each row left to right.
    pub fn row_word(&self) -> Permutation {
        Permutation::from_word_unchecked(self.rows.iter().rev().flatten().copied().collect())
    }

    pub fn to_partial(&self) -> PartialTableau {
        PartialTableau {
            rows: self.rows.clone(),
        }
    }

    /// Row-concatenated entries; the secondary key of the canonical order.
    pub fn reading_key(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }
}

impl Ord for StandardTableau {
    /// Canonical order: shapes in decreasing lexicographic order, then
    /// row-concatenated entries lexicographically.
    fn cmp(&self, other: &Self) -> Ordering {
        self.shape()
            .canonical_cmp(&other.shape())
            .then_with(|| self.reading_key().cmp(&other.reading_key()))
    }
}

impl PartialOrd for StandardTableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        display_rows(&self.rows, f)
    }
}

impl FromStr for StandardTableau {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let rows = parse_rows(s, "tableau")?;
        StandardTableau::new(rows.clone()).map_err(|e| {
            let pos = locate_violation(s, &rows);
            let msg = match e {
                Error::InvalidInput(m) => m,
                other => other.to_string(),
            };
            text::parse_error("tableau", pos, msg)
        })
    }
}

/// A Young diagram filled with distinct positive integers, strictly
/// increasing along rows and down columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PartialTableau {
    rows: Vec<Vec<usize>>,
}

impl PartialTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        check_filling(&rows)?;
        let mut seen = HashSet::new();
        for &v in rows.iter().flatten() {
            if v == 0 {
                return Err(invalid("entries must be positive"));
            }
            if !seen.insert(v) {
                return Err(invalid(format!("entry {v} appears twice")));
            }
        }
        Ok(PartialTableau { rows })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        shape_of(&self.rows)
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.rows.iter().flatten().any(|&v| v == a)
    }

    /// Adds `k` to every entry.
    pub fn shifted(&self, k: usize) -> PartialTableau {
        PartialTableau {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|v| v + k).collect())
                .collect(),
        }
    }

    fn check_absent(&self, a: usize) -> Result<()> {
        if a == 0 {
            return Err(invalid("cannot insert 0"));
        }
        if self.contains(a) {
            return Err(invalid(format!("{a} is already an entry of {self}")));
        }
        Ok(())
    }

    /// Schensted row insertion `r_a(T)`. Returns the tableau and the new cell.
    pub fn row_insert(&self, a: usize) -> Result<(PartialTableau, (usize, usize))> {
        self.check_absent(a)?;
        let mut rows = self.rows.clone();
        let cell = row_insert_in_place(&mut rows, a);
        Ok((PartialTableau { rows }, cell))
    }

    /// Schensted column insertion `c_a(T)`: bump along columns instead of rows.
    pub fn column_insert(&self, a: usize) -> Result<(PartialTableau, (usize, usize))> {
        self.check_absent(a)?;
        let mut rows = self.rows.clone();
        let mut x = a;
        let mut c = 0;
        loop {
            let height = rows.iter().take_while(|row| row.len() > c).count();
            match (0..height).find(|&r| rows[r][c] > x) {
                Some(r) => {
                    x = std::mem::replace(&mut rows[r][c], x);
                    c += 1;
                }
                None => {
                    if height == rows.len() {
                        rows.push(vec![x]);
                    } else {
                        rows[height].push(x);
                    }
                    return Ok((PartialTableau { rows }, (height, c)));
                }
            }
        }
    }

    /// Succeeds when the entries are exactly `1..=n`.
    pub fn into_standard(self) -> Result<StandardTableau> {
        StandardTableau::new(self.rows)
    }
}

/// Row insertion on raw rows; the caller guarantees `a` is absent.
pub(crate) fn row_insert_in_place(rows: &mut Vec<Vec<usize>>, a: usize) -> (usize, usize) {
    let mut x = a;
    for r in 0.. {
        if r == rows.len() {
            rows.push(vec![x]);
            return (r, 0);
        }
        let row = &mut rows[r];
        match row.iter().position(|&v| v > x) {
            Some(c) => x = std::mem::replace(&mut row[c], x),
            None => {
                row.push(x);
                return (r, row.len() - 1);
            }
        }
    }
    unreachable!()
}

impl From<StandardTableau> for PartialTableau {
    fn from(t: StandardTableau) -> Self {
        PartialTableau { rows: t.rows }
    }
}

impl fmt::Display for PartialTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        display_rows(&self.rows, f)
    }
}

impl FromStr for PartialTableau {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let rows = parse_rows(s, "partial tableau")?;
        PartialTableau::new(rows.clone()).map_err(|e| {
            let pos = locate_violation(s, &rows);
            text::parse_error("partial tableau", pos, e.to_string())
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> StandardTableau {
        s.parse().unwrap()
    }

    #[test]
    fn row_word_examples() {
        assert_eq!(
            t("1,2,4,7,8/3,6,9/5").row_word().to_string(),
            "5,3,6,9,1,2,4,7,8"
        );
        assert_eq!(t("1,2,3").row_word().to_string(), "1,2,3");
        assert_eq!(t("1/2/3").row_word().to_string(), "3,2,1");
    }

    #[test]
    fn rejects_bad_fillings() {
        assert!(StandardTableau::new(vec![vec![2, 1]]).is_err());
        assert!(StandardTableau::new(vec![vec![1, 3], vec![2, 4], vec![]]).is_err());
        assert!(StandardTableau::new(vec![vec![1, 2], vec![3, 4, 5]]).is_err());
        assert!(StandardTableau::new(vec![vec![1, 3], vec![2, 5]]).is_err());
        assert!(StandardTableau::new(vec![vec![1, 2], vec![2]]).is_err());
    }

    #[test]
    fn parse_errors_carry_positions() {
        match "1,2/3,1".parse::<StandardTableau>() {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("unexpected {other:?}"),
        }
        match "1,2/3,a".parse::<StandardTableau>() {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("unexpected {other:?}"),
        }
        match "1,3/2,4,5".parse::<StandardTableau>() {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 8),
            other => panic!("unexpected {other:?}"),
        }
        match "1,3//2".parse::<StandardTableau>() {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn column_insertion_examples() {
        let tb: PartialTableau = "1,2,7/3,6/4,8".parse().unwrap();
        let (out, cell) = tb.column_insert(5).unwrap();
        assert_eq!(out.to_string(), "1,2,7/3,6/4,8/5");
        assert_eq!(cell, (3, 0));

        let sb: PartialTableau = "1,2,7/3,8/4/6".parse().unwrap();
        let (out, cell) = sb.column_insert(5).unwrap();
        assert_eq!(out.to_string(), "1,2,7/3,6,8/4/5");
        assert_eq!(cell, (1, 2));
    }

    #[test]
    fn row_insertion_bumps() {
        let p: PartialTableau = "2,5/4".parse().unwrap();
        let (out, cell) = p.row_insert(3).unwrap();
        assert_eq!(out.to_string(), "2,3/4,5");
        assert_eq!(cell, (1, 1));
        assert!(p.row_insert(5).is_err());
    }

    #[test]
    fn canonical_order() {
        let mut v = vec![t("1/2"), t("1,2")];
        v.sort();
        assert_eq!(v, vec![t("1,2"), t("1/2")]);
        assert!(t("1,2/3") < t("1,3/2"));
    }
}
