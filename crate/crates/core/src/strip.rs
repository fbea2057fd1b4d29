//! Sequences of horizontal strips: ordered blocks of consecutive integers
//! whose concatenation is `1, 2, ..., n`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::descent::DescentSet;
use crate::error::{invalid, Error, Result};
use crate::text;

/// An ordered list of nonempty intervals `[a, b]` tiling `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StripSequence {
    n: usize,
    blocks: Vec<(usize, usize)>,
}

impl StripSequence {
    /// Builds from inclusive `(first, last)` intervals.
    pub fn new(blocks: Vec<(usize, usize)>) -> Result<Self> {
        let mut next = 1;
        for (i, &(a, b)) in blocks.iter().enumerate() {
            if a != next {
                return Err(invalid(format!(
                    "block {} starts at {a}, expected {next}",
                    i + 1
                )));
            }
            if b < a {
                return Err(invalid(format!("block {} is empty", i + 1)));
            }
            next = b + 1;
        }
        Ok(StripSequence {
            n: next - 1,
            blocks,
        })
    }

    /// Builds the sequence over `1..=n` that is cut after every `i` in
    /// `breaks` and nowhere else.
    pub fn from_breaks(n: usize, breaks: impl IntoIterator<Item = usize>) -> Result<Self> {
        let breaks: BTreeSet<usize> = breaks.into_iter().collect();
        if let Some(&b) = breaks.iter().find(|&&b| b == 0 || b >= n) {
            return Err(invalid(format!("break {b} outside 1..{n}")));
        }
        Ok(Self::from_breaks_unchecked(n, breaks))
    }

    pub(crate) fn from_breaks_unchecked(n: usize, breaks: impl IntoIterator<Item = usize>) -> Self {
        let mut blocks = Vec::new();
        let mut start = 1;
        for b in breaks {
            debug_assert!(b >= start && b < n);
            blocks.push((start, b));
            start = b + 1;
        }
        if n > 0 {
            blocks.push((start, n));
        }
        StripSequence { n, blocks }
    }

    /// The single block `1..=n`.
    pub fn whole(n: usize) -> Self {
        Self::from_breaks_unchecked(n, std::iter::empty())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[(usize, usize)] {
        &self.blocks
    }

    /// Number of blocks.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Last element of every block except the final one.
    pub fn breaks(&self) -> BTreeSet<usize> {
        self.blocks
            .iter()
            .take(self.blocks.len().saturating_sub(1))
            .map(|&(_, b)| b)
            .collect()
    }

    pub fn same_block(&self, i: usize, j: usize) -> bool {
        self.blocks
            .iter()
            .any(|&(a, b)| (a..=b).contains(&i) && (a..=b).contains(&j))
    }

    /// The underlying set partition of `[n]`, forgetting block order.
    pub fn set_partition(&self) -> Vec<BTreeSet<usize>> {
        let mut sp: Vec<BTreeSet<usize>> =
            self.blocks.iter().map(|&(a, b)| (a..=b).collect()).collect();
        sp.sort();
        sp
    }

    fn same_n(&self, other: &StripSequence) -> Result<()> {
        if self.n != other.n {
            return Err(invalid(format!(
                "strip sequences over different ground sets: n = {} and n = {}",
                self.n, other.n
            )));
        }
        Ok(())
    }

    /// Whether every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &StripSequence) -> Result<bool> {
        self.same_n(coarser)?;
        Ok(coarser.breaks().is_subset(&self.breaks()))
    }

    /// `Some(|self| - |coarser|)` when `self` refines `coarser`, `None` when
    /// the two are incomparable or `coarser` is the finer one.
    pub fn refinement_steps(&self, coarser: &StripSequence) -> Result<Option<usize>> {
        Ok(self
            .refines(coarser)?
            .then(|| self.len() - coarser.len()))
    }

    /// `s^r`: `i` and `i + 1` share a block exactly when they do not in `s`.
    pub fn reversed(&self) -> StripSequence {
        let n = self.n;
        StripSequence::from_breaks_unchecked(
            n,
            (1..n).filter(|&i| self.same_block(i, i + 1)),
        )
    }

    /// `s^{evac}`: relabel `i ↦ n + 1 - i`, sort inside blocks, and order the
    /// blocks so they concatenate to `1..=n`.
    pub fn evacuated(&self) -> StripSequence {
        let n = self.n;
        let mut blocks: Vec<(usize, usize)> = self
            .blocks
            .iter()
            .map(|&(a, b)| (n + 1 - b, n + 1 - a))
            .collect();
        blocks.sort_unstable();
        StripSequence { n, blocks }
    }

    /// `Φ_n`: the maxima of all blocks but the last.
    pub fn phi(&self) -> DescentSet {
        DescentSet::from_members_unchecked(self.n, self.breaks())
    }
}

impl fmt::Display for StripSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|&(a, b)| {
                if a == b {
                    a.to_string()
                } else {
                    format!("{a}-{b}")
                }
            })
            .collect();
        f.write_str(&parts.join("|"))
    }
}

impl FromStr for StripSequence {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        const KIND: &str = "strip sequence";
        if s.is_empty() {
            return Ok(StripSequence::whole(0));
        }
        let mut blocks = Vec::new();
        let mut next = 1;
        for (off, tok) in text::split_with_offsets(s, '|') {
            let (a, b) = match tok.split_once('-') {
                Some((x, y)) => (
                    text::parse_positive(x, off, KIND)?,
                    text::parse_positive(y, off + x.len() + 1, KIND)?,
                ),
                None => {
                    let v = text::parse_positive(tok, off, KIND)?;
                    (v, v)
                }
            };
            if a != next {
                return Err(text::parse_error(
                    KIND,
                    off,
                    format!("block starts at {a}, expected {next}"),
                ));
            }
            if b < a {
                return Err(text::parse_error(KIND, off, format!("block {a}-{b} is empty")));
            }
            blocks.push((a, b));
            next = b + 1;
        }
        Ok(StripSequence {
            n: next - 1,
            blocks,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> StripSequence {
        x.parse().unwrap()
    }

    #[test]
    fn refinement_examples() {
        assert!(s("1|2-4|5-6").refines(&s("1-4|5-6")).unwrap());
        assert_eq!(s("1|2-4|5-6").refinement_steps(&s("1-4|5-6")).unwrap(), Some(1));
        assert_eq!(s("1-4|5-6").refinement_steps(&s("1-4|5-6")).unwrap(), Some(0));
        assert_eq!(s("1-2|3").refinement_steps(&s("1|2-3")).unwrap(), None);
        assert_eq!(s("1-2|3").refinement_steps(&s("1|2-3")).unwrap(), None);
        assert!(s("1-2").refines(&s("1-3")).is_err());
    }

    #[test]
    fn reverse_and_evacuate() {
        let x = s("1|2|3-6|7");
        assert_eq!(x.reversed(), s("1-3|4|5|6-7"));
        assert_eq!(x.evacuated(), s("1|2-5|6|7"));
        assert_eq!(x.reversed().reversed(), x);
        assert_eq!(x.evacuated().evacuated(), x);
    }

    #[test]
    fn set_partition_forgets_order() {
        let sp = s("1-2|3|4-6").set_partition();
        assert_eq!(sp.len(), 3);
        assert!(sp.contains(&[4, 5, 6].into_iter().collect()));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            "1-2|4".parse::<StripSequence>(),
            Err(Error::Parse { pos: 4, .. })
        ));
        assert!(matches!(
            "1-2|3-2".parse::<StripSequence>(),
            Err(Error::Parse { pos: 4, .. })
        ));
        assert!(matches!(
            "1-2||3".parse::<StripSequence>(),
            Err(Error::Parse { pos: 4, .. })
        ));
        assert!(StripSequence::new(vec![(1, 2), (4, 4)]).is_err());
        assert!(StripSequence::from_breaks(3, [3]).is_err());
    }

    #[test]
    fn phi_reads_block_maxima() {
        assert_eq!(s("1|2-4|5-6|7").phi().to_string(), "{1,4,6}");
        assert_eq!(s("1-5").phi().to_string(), "{}");
    }
}
