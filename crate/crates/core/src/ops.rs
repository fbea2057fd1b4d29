//! Per-tableau constructions: growth chains, descents, transposition,
//! evacuation, concatenations, shifted insertion, dual Knuth moves and inner
//! tableau replacement.

use crate::descent::DescentSet;
use crate::error::{invalid, Result};
use crate::permutation::Permutation;
use crate::rsk::insertion_tableau;
use crate::strip::StripSequence;
use crate::tableau::{PartialTableau, StandardTableau};

impl StandardTableau {
    /// Sequence of horizontal strips of the growth chain.
    ///
    /// Cells are added in the order `1, 2, ..., n`. Each strip is a horizontal
    /// strip filled increasingly from left to right, so `v` joins the strip
    /// of `v - 1` exactly when its column lies strictly right of the column
    /// of `v - 1`. Greedy extension yields the coarsest such chain.
    pub fn shs(&self) -> StripSequence {
        let pos = self.positions();
        let n = self.n();
        StripSequence::from_breaks_unchecked(n, (1..n).filter(|&v| pos[v + 1].1 <= pos[v].1))
    }

    /// `{ i : i + 1 lies in a row strictly below i }`.
    pub fn descent_set(&self) -> DescentSet {
        let pos = self.positions();
        let n = self.n();
        DescentSet::from_members_unchecked(n, (1..n).filter(|&i| pos[i + 1].0 > pos[i].0))
    }

    /// Reflection along the main diagonal.
    pub fn transpose(&self) -> StandardTableau {
        let shape = self.shape().conjugate();
        let rows = shape
            .parts()
            .iter()
            .enumerate()
            .map(|(c, &len)| (0..len).map(|r| self.rows()[r][c]).collect())
            .collect();
        StandardTableau::from_rows_unchecked(rows)
    }

    /// Schützenberger evacuation, computed as `P(π^{evac})` for the row word.
    pub fn evacuate(&self) -> StandardTableau {
        insertion_tableau(&self.row_word().evac())
    }

    /// `Ω₁`: append `n + 1` to the end of the first row.
    pub fn omega1(&self) -> StandardTableau {
        let n = self.n();
        let mut rows = self.rows().to_vec();
        match rows.first_mut() {
            Some(row) => row.push(n + 1),
            None => rows.push(vec![1]),
        }
        StandardTableau::from_rows_unchecked(rows)
    }

    /// `Ω₂`: append `n + 1` to the bottom of the first column.
    pub fn omega2(&self) -> StandardTableau {
        let mut rows = self.rows().to_vec();
        rows.push(vec![self.n() + 1]);
        StandardTableau::from_rows_unchecked(rows)
    }

    /// `T̄_a`: add one to every entry `>= a`, for `1 <= a <= n + 1`.
    pub fn bar_shift(&self, a: usize) -> Result<PartialTableau> {
        let n = self.n();
        if a == 0 || a > n + 1 {
            return Err(invalid(format!("shift point {a} outside 1..={}", n + 1)));
        }
        let rows = self
            .rows()
            .iter()
            .map(|row| row.iter().map(|&v| if v >= a { v + 1 } else { v }).collect())
            .collect();
        PartialTableau::new(rows)
    }

    /// `r_a(T̄_a)`.
    pub fn insert_shifted_row(&self, a: usize) -> Result<StandardTableau> {
        self.bar_shift(a)?.row_insert(a)?.0.into_standard()
    }

    /// `c_a(T̄_a)`.
    pub fn insert_shifted_col(&self, a: usize) -> Result<StandardTableau> {
        self.bar_shift(a)?.column_insert(a)?.0.into_standard()
    }

    /// Applies the dual Knuth relation on the values `i - 1, i, i + 1`.
    ///
    /// Looks at the order in which the three values occur in the row word.
    /// If `i + 1` occurs between the other two, the letters `i - 1` and `i`
    /// are exchanged; if `i - 1` occurs between, `i` and `i + 1` are
    /// exchanged; otherwise no relation applies and `self` is returned.
    pub fn dual_knuth_move(&self, i: usize) -> Result<StandardTableau> {
        let n = self.n();
        if i < 2 || i + 1 > n {
            return Err(invalid(format!(
                "dual Knuth triple centre {i} needs 2 <= i <= {}",
                n.saturating_sub(1)
            )));
        }
        Ok(insertion_tableau(&dual_knuth_word(&self.row_word(), i)))
    }

    /// Replaces the inner tableau on `1..=k` by `replacement`, where `k` is
    /// the size of `replacement`. The cells of `1..=k` in `self` must form
    /// exactly the shape of `replacement`.
    pub fn inner_translate(&self, replacement: &StandardTableau) -> Result<StandardTableau> {
        let k = replacement.n();
        if k >= self.n() {
            return Err(invalid(format!(
                "inner tableau of size {k} must be smaller than {}",
                self.n()
            )));
        }
        let inner: Vec<usize> = self
            .rows()
            .iter()
            .map(|row| row.iter().take_while(|&&v| v <= k).count())
            .take_while(|&c| c > 0)
            .collect();
        if inner != replacement.shape().parts() {
            return Err(invalid(format!(
                "inner cells of 1..={k} have shape {:?}, replacement has shape {}",
                inner,
                replacement.shape()
            )));
        }
        let mut rows = self.rows().to_vec();
        for (r, row) in replacement.rows().iter().enumerate() {
            rows[r][..row.len()].copy_from_slice(row);
        }
        StandardTableau::new(rows)
    }
}

/// The dual Knuth relation on values `i - 1, i, i + 1` applied to a word;
/// the word is returned unchanged when `i` sits between its neighbours.
pub fn dual_knuth_word(pi: &Permutation, i: usize) -> Permutation {
    let pos = pi.positions();
    let (a, b, c) = (pos[i - 1], pos[i], pos[i + 1]);
    let between = |x: usize, lo: usize, hi: usize| lo.min(hi) < x && x < lo.max(hi);
    let swap = if between(c, a, b) {
        Some((i - 1, i))
    } else if between(a, b, c) {
        Some((i, i + 1))
    } else {
        None
    };
    match swap {
        Some((x, y)) => {
            let mut w = pi.word().to_vec();
            w.swap(pos[x], pos[y]);
            Permutation::from_word_unchecked(w)
        }
        None => pi.clone(),
    }
}

/// `S / T`: columns of `T^{+k}` stacked under the columns of `S`.
pub fn slash_concat(s: &StandardTableau, t: &StandardTableau) -> StandardTableau {
    let k = s.n();
    let sc = s.transpose();
    let tc = t.transpose();
    let width = sc.rows().len().max(tc.rows().len());
    let cols: Vec<Vec<usize>> = (0..width)
        .map(|c| {
            let mut col = sc.rows().get(c).cloned().unwrap_or_default();
            col.extend(tc.rows().get(c).into_iter().flatten().map(|v| v + k));
            col
        })
        .collect();
    StandardTableau::from_rows_unchecked(cols).transpose()
}

/// `S \ T`: rows of `T^{+k}` appended to the right of the rows of `S`.
pub fn backslash_concat(s: &StandardTableau, t: &StandardTableau) -> StandardTableau {
    let k = s.n();
    let height = s.rows().len().max(t.rows().len());
    let rows = (0..height)
        .map(|r| {
            let mut row = s.rows().get(r).cloned().unwrap_or_default();
            row.extend(t.rows().get(r).into_iter().flatten().map(|v| v + k));
            row
        })
        .collect();
    StandardTableau::from_rows_unchecked(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> StandardTableau {
        s.parse().unwrap()
    }

    #[test]
    fn shs_examples() {
        assert_eq!(t("1,2,4,6/3,5/7/8").shs().to_string(), "1-2|3-4|5-6|7|8");
        assert_eq!(t("1,2,4/3,6/5").shs().to_string(), "1-2|3-4|5-6");
        assert_eq!(t("1,2,6/3,4/5").shs().to_string(), "1-2|3-4|5-6");
        assert_eq!(t("1,2,4,7,8/3,6,9/5").shs().to_string(), "1-2|3-4|5-8|9");
        assert_eq!(StandardTableau::single_row(5).shs().to_string(), "1-5");
        // 5 could join {4} as a horizontal strip only with a decreasing filling
        assert_eq!(t("1,3/2,4/5").shs().to_string(), "1|2-3|4|5");
    }

    #[test]
    fn descent_examples() {
        let tab = t("1,2,4,6/3,5/7/8");
        assert_eq!(tab.descent_set().to_string(), "{2,4,6,7}");
        assert_eq!(tab.descent_set(), tab.shs().phi());
        assert!(StandardTableau::single_row(4).descent_set().is_empty());
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(t("1,2").transpose(), t("1/2"));
        assert_eq!(t("1,2,4,6/3,5/7/8").transpose(), t("1,3,7,8/2,5/4/6"));
    }

    #[test]
    fn evacuation_examples() {
        assert_eq!(t("1,2,5/3,4,6").evacuate(), t("1,3,4/2,5,6"));
        assert_eq!(t("1,4,5/2,6/3").evacuate(), t("1,3,4/2,5/6"));
    }

    #[test]
    fn omegas() {
        assert_eq!(t("1").omega1(), t("1,2"));
        assert_eq!(t("1").omega2(), t("1/2"));
        assert_eq!(StandardTableau::empty().omega1(), t("1"));
    }

    #[test]
    fn concatenations() {
        let one = t("1");
        assert_eq!(slash_concat(&one, &one), t("1/2"));
        assert_eq!(backslash_concat(&one, &one), t("1,2"));
        assert_eq!(slash_concat(&t("1,2/3"), &t("1,2")), t("1,2/3,5/4"));
        assert_eq!(backslash_concat(&t("1,2/3"), &t("1/2")), t("1,2,4/3,5"));
    }

    #[test]
    fn shifted_insertion_examples() {
        assert_eq!(
            t("1,2,6/3,5/4,7").insert_shifted_col(5).unwrap(),
            t("1,2,7/3,6/4,8/5")
        );
        assert_eq!(
            t("1,2,6/3,7/4/5").insert_shifted_col(5).unwrap(),
            t("1,2,7/3,6,8/4/5")
        );
        let tab = t("1,3/2");
        assert_eq!(tab.insert_shifted_row(4).unwrap(), tab.omega1());
        assert!(tab.bar_shift(0).is_err());
        assert!(tab.bar_shift(5).is_err());
    }

    #[test]
    fn dual_knuth_examples() {
        assert_eq!(t("1,2,4/3,5,6").dual_knuth_move(4).unwrap(), t("1,2,3/4,5,6"));
        assert_eq!(t("1,2,4/3,6/5").dual_knuth_move(4).unwrap(), t("1,2,5/3,6/4"));
        assert_eq!(t("1,2/3/4").dual_knuth_move(2).unwrap(), t("1,3/2/4"));
        // 1 sits between 3 and 2 in the row word 3,1,2
        assert_eq!(t("1,2/3").dual_knuth_move(2).unwrap(), t("1,3/2"));
        // 2 sits between 1 and 3: no relation applies
        assert_eq!(t("1,2,3").dual_knuth_move(2).unwrap(), t("1,2,3"));
        assert!(t("1,2/3").dual_knuth_move(1).is_err());
        assert!(t("1,2/3").dual_knuth_move(3).is_err());
    }

    #[test]
    fn inner_translation_examples() {
        let r_tilde = t("1,3/2/4");
        assert_eq!(
            t("1,2,6/3,5/4,7").inner_translate(&r_tilde).unwrap(),
            t("1,3,6/2,5/4,7")
        );
        assert_eq!(
            t("1,2,6/3,7/4/5").inner_translate(&r_tilde).unwrap(),
            t("1,3,6/2,7/4/5")
        );
        assert!(t("1,2,6/3,5/4,7").inner_translate(&t("1,2,3/4")).is_err());
        assert!(t("1,2/3").inner_translate(&t("1,2/3")).is_err());
    }
}
