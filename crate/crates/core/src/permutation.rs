//! Permutations in one-line notation.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::descent::DescentSet;
use crate::error::{invalid, Error, Result};
use crate::strip::StripSequence;
use crate::text;

/// A bijection of `1..=n`, stored as its one-line word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for (i, &v) in word.iter().enumerate() {
            if v == 0 || v > n {
                return Err(invalid(format!(
                    "value {v} at position {} is outside 1..={n}",
                    i + 1
                )));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(invalid(format!("value {v} repeats at position {}", i + 1)));
            }
        }
        Ok(Permutation { word })
    }

    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation { word }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    /// The longest element `n, n-1, ..., 1`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            word: (1..=n).rev().collect(),
        }
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n)
            .permutations(n)
            .map(|word| Permutation { word })
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    /// `π(i)` for 1-based `i`.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { word: inv }
    }

    /// `positions()[v]` is the 0-based position of value `v` (index 0 unused).
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![usize::MAX; self.n() + 1];
        for (i, &v) in self.word.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    /// Composition `(self · other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(invalid("composing permutations of different sizes"));
        }
        Ok(Permutation {
            word: other.word.iter().map(|&i| self.word[i - 1]).collect(),
        })
    }

    /// Right multiplication by the adjacent transposition `s_i`: swaps the
    /// letters in positions `i` and `i + 1` (1-based).
    pub fn times_adjacent(&self, i: usize) -> Result<Permutation> {
        if i == 0 || i >= self.n() {
            return Err(invalid(format!("s_{i} is not defined in S_{}", self.n())));
        }
        let mut word = self.word.clone();
        word.swap(i - 1, i);
        Ok(Permutation { word })
    }

    /// Number of inversions, which is the Coxeter length.
    pub fn length(&self) -> usize {
        let w = &self.word;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&x| x < w[i]).count())
            .sum()
    }

    /// Left inversions: value pairs `i < j` with `j` appearing before `i`.
    pub fn left_inversions(&self) -> InversionSet {
        let pos = self.positions();
        let n = self.n();
        let pairs = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .filter(|&(i, j)| pos[i] > pos[j])
            .collect();
        InversionSet { pairs }
    }

    /// The left descent set `{ i : π⁻¹(i) > π⁻¹(i+1) }`.
    pub fn descent_set_left(&self) -> DescentSet {
        let pos = self.positions();
        let n = self.n();
        DescentSet::from_members_unchecked(n, (1..n).filter(|&i| pos[i] > pos[i + 1]))
    }

    /// Sequence of maximal intervals `i, i+1, ...` occurring left to right.
    pub fn si(&self) -> StripSequence {
        let pos = self.positions();
        let n = self.n();
        StripSequence::from_breaks_unchecked(n, (1..n).filter(|&i| pos[i] > pos[i + 1]))
    }

    /// Reversal of positions `π^{rp}`.
    pub fn rp(&self) -> Permutation {
        Permutation {
            word: self.word.iter().rev().copied().collect(),
        }
    }

    /// Reversal of values `π^{rv}`.
    pub fn rv(&self) -> Permutation {
        let n = self.n();
        Permutation {
            word: self.word.iter().map(|&x| n + 1 - x).collect(),
        }
    }

    /// `π^{evac} = (π^{rv})^{rp}`.
    pub fn evac(&self) -> Permutation {
        let n = self.n();
        Permutation {
            word: self.word.iter().rev().map(|&x| n + 1 - x).collect(),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::join(&self.word, ","))
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let toks = text::parse_list(s, ',', "permutation")?;
        let n = toks.len();
        let mut seen = vec![false; n + 1];
        for (off, tok) in text::split_with_offsets(s, ',').into_iter().take(n) {
            let v: usize = tok.parse().unwrap_or(0);
            if v > n {
                return Err(text::parse_error(
                    "permutation",
                    off,
                    format!("value {v} exceeds length {n}"),
                ));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(text::parse_error(
                    "permutation",
                    off,
                    format!("value {v} repeats"),
                ));
            }
        }
        Ok(Permutation {
            word: toks.into_iter().map(|(v, _)| v).collect(),
        })
    }
}

/// A set of value pairs `(i, j)` with `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct InversionSet {
    pairs: BTreeSet<(usize, usize)>,
}

impl InversionSet {
    pub fn new(pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let pairs: BTreeSet<_> = pairs.into_iter().collect();
        if let Some(&(i, j)) = pairs.iter().find(|&&(i, j)| i >= j) {
            return Err(invalid(format!("inversion pair ({i}, {j}) is not ordered")));
        }
        Ok(InversionSet { pairs })
    }

    pub fn pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn is_subset(&self, other: &InversionSet) -> bool {
        self.pairs.is_subset(&other.pairs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn reversal_and_evacuation() {
        let pi = p("7,3,4,2,5,1,6");
        assert_eq!(pi.rp(), p("6,1,5,2,4,3,7"));
        assert_eq!(pi.evac(), p("2,7,3,6,4,5,1"));
        assert_eq!(pi.evac(), pi.rv().rp());
        assert_eq!(pi.evac(), pi.rp().rv());
        assert_eq!(Permutation::identity(4).rv(), Permutation::longest(4));
    }

    #[test]
    fn evac_is_conjugation_by_longest_element() {
        let w0 = Permutation::longest(5);
        for pi in Permutation::all(5) {
            let conj = w0.compose(&pi).unwrap().compose(&w0).unwrap();
            assert_eq!(pi.evac(), conj);
            assert_eq!(pi.evac().evac(), pi);
        }
    }

    #[test]
    fn left_descents_and_intervals() {
        let pi = p("2,5,3,7,4,1,6");
        assert_eq!(pi.descent_set_left().to_string(), "{1,4,6}");
        assert_eq!(pi.si().to_string(), "1|2-4|5-6|7");
        assert_eq!(p("1,2,6,3,5,7,4").si().to_string(), "1-4|5|6-7");
        assert_eq!(Permutation::identity(5).si().to_string(), "1-5");
    }

    #[test]
    fn inversion_sets() {
        let a = p("1,3,2").left_inversions();
        let b = p("3,1,2").left_inversions();
        assert_eq!(a.pairs().iter().copied().collect::<Vec<_>>(), vec![(2, 3)]);
        assert_eq!(
            b.pairs().iter().copied().collect::<Vec<_>>(),
            vec![(1, 3), (2, 3)]
        );
        assert!(a.is_subset(&b));
        assert!(InversionSet::new([(3, 2)]).is_err());
        for pi in Permutation::all(4) {
            assert_eq!(pi.left_inversions().len(), pi.length());
        }
    }

    #[test]
    fn parse_rejects_non_bijections() {
        match "1,3,3".parse::<Permutation>() {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("unexpected {other:?}"),
        }
        match "1,4,2".parse::<Permutation>() {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!("".parse::<Permutation>().unwrap().n(), 0);
    }
}
