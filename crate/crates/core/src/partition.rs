//! Integer partitions and the opposite dominance order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// A weakly decreasing sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(p) = parts.iter().position(|&x| x == 0) {
            return Err(invalid(format!("part {} of {:?} is zero", p + 1, parts)));
        }
        if let Some(w) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(invalid(format!(
                "parts {:?} increase at index {}",
                parts,
                w + 1
            )));
        }
        Ok(Partition(parts))
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(Partition::new(parts.clone()).is_ok());
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of boxes.
    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Row `r` length, zero past the last row.
    pub fn part(&self, r: usize) -> usize {
        self.0.get(r).copied().unwrap_or(0)
    }

    /// Column lengths of the diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition(
            (0..width)
                .map(|c| self.0.iter().take_while(|&&p| p > c).count())
                .collect(),
        )
    }

    /// Componentwise containment of diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Cells whose removal leaves a partition, as `(row, col)`.
    pub fn corners(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .filter(|&r| self.part(r + 1) < self.part(r))
            .map(|r| (r, self.part(r) - 1))
            .collect()
    }

    /// All partitions of `n`, in decreasing lexicographic order: `(n)` first,
    /// `(1, ..., 1)` last.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// `λ ≤ μ` in opposite dominance: every prefix sum of `self` is at least
    /// the matching prefix sum of `other`. Both must have the same weight.
    pub fn opp_dominance_leq(&self, other: &Partition) -> Result<bool> {
        if self.weight() != other.weight() {
            return Err(invalid(format!(
                "opposite dominance compares partitions of equal weight, got {} and {}",
                self.weight(),
                other.weight()
            )));
        }
        Ok(self.opp_leq_unchecked(other))
    }

    /// Strict variant of [`Partition::opp_dominance_leq`].
    pub fn opp_dominance_lt(&self, other: &Partition) -> Result<bool> {
        Ok(self.opp_dominance_leq(other)? && self != other)
    }

    // Equal weights: zero padding is equivalent to stopping at min(k, l).
    pub(crate) fn opp_leq_unchecked(&self, other: &Partition) -> bool {
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Canonical ordering used for enumeration: decreasing lexicographic.
    pub fn canonical_cmp(&self, other: &Partition) -> Ordering {
        other.0.cmp(&self.0)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts = crate::text::parse_list(s, ',', "partition")?;
        let mut offset = 0;
        for (i, w) in parts.windows(2).enumerate() {
            offset += w[0].1.len() + 1;
            if w[0].0 < w[1].0 {
                return Err(Error::Parse {
                    kind: "partition",
                    pos: offset,
                    msg: format!("part {} exceeds the previous part", i + 2),
                });
            }
        }
        Ok(Partition(parts.into_iter().map(|(v, _)| v).collect()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn opp_dominance_examples() {
        assert!(p(&[3, 1, 1]).opp_dominance_leq(&p(&[2, 2, 1])).unwrap());
        assert!(!p(&[2, 2]).opp_dominance_leq(&p(&[3, 1])).unwrap());
        let l = p(&[3, 2, 1]);
        assert!(l.opp_dominance_leq(&l).unwrap());
        assert!(!l.opp_dominance_lt(&l).unwrap());
        assert!(p(&[3]).opp_dominance_lt(&p(&[1, 1, 1])).unwrap());
    }

    #[test]
    fn unequal_weights_rejected() {
        assert!(matches!(
            p(&[2]).opp_dominance_leq(&p(&[2, 1])),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn invalid_parts_rejected() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::new(vec![]).is_ok());
        assert!("2,3".parse::<Partition>().is_err());
    }

    #[test]
    fn partitions_of_small_n() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        let four: Vec<String> = Partition::all(4).iter().map(|p| p.to_string()).collect();
        assert_eq!(four, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
    }

    #[test]
    fn conjugate_and_corners() {
        let l = p(&[4, 2, 1, 1]);
        assert_eq!(l.conjugate(), p(&[4, 2, 1, 1]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(l.corners(), vec![(0, 3), (1, 1), (3, 0)]);
    }
}
