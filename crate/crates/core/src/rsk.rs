//! Robinson-Schensted correspondence and Knuth classes.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{check_capacity, invalid, Result};
use crate::permutation::Permutation;
use crate::tableau::{row_insert_in_place, StandardTableau};

/// Largest `n` for which whole Knuth classes are materialized.
pub const MAX_KNUTH_CLASS_N: usize = 8;

/// Insertion and recording tableaux of a permutation.
pub fn rsk(pi: &Permutation) -> (StandardTableau, StandardTableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, &x) in pi.word().iter().enumerate() {
        let (r, _) = row_insert_in_place(&mut p, x);
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push(step + 1);
    }
    (
        StandardTableau::from_rows_unchecked(p),
        StandardTableau::from_rows_unchecked(q),
    )
}

/// The insertion tableau `P(π)` alone.
pub fn insertion_tableau(pi: &Permutation) -> StandardTableau {
    StandardTableau::from_rows_unchecked(insert_word(pi.word()))
}

/// Row-inserts a word of distinct positive integers into the empty tableau.
pub(crate) fn insert_word(word: &[usize]) -> Vec<Vec<usize>> {
    let mut p = Vec::new();
    for &x in word {
        row_insert_in_place(&mut p, x);
    }
    p
}

/// Recovers `π` from its pair `(P, Q)` by reverse bumping.
pub fn inverse_rsk(p: &StandardTableau, q: &StandardTableau) -> Result<Permutation> {
    if p.shape() != q.shape() {
        return Err(invalid(format!(
            "insertion tableau shape {} differs from recording shape {}",
            p.shape(),
            q.shape()
        )));
    }
    let n = p.n();
    let mut rows: Vec<Vec<usize>> = p.rows().to_vec();
    let qpos = q.positions();
    let mut word = vec![0; n];
    for step in (1..=n).rev() {
        let (mut r, c) = qpos[step];
        let mut x = rows[r].remove(c);
        if rows[r].is_empty() {
            rows.pop();
        }
        while r > 0 {
            r -= 1;
            let row = &mut rows[r];
            // largest entry smaller than x
            let j = row.iter().rposition(|&v| v < x).expect("reverse bump");
            x = std::mem::replace(&mut row[j], x);
        }
        word[step - 1] = x;
    }
    Permutation::new(word)
}

/// All permutations whose insertion tableau is `t`, in lexicographic order.
///
/// Explores elementary Knuth relations outward from the row word.
pub fn knuth_class(t: &StandardTableau) -> Result<Vec<Permutation>> {
    check_capacity("knuth_class", t.n(), MAX_KNUTH_CLASS_N)?;
    let start = t.row_word();
    let mut seen: BTreeSet<Permutation> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(w) = queue.pop_front() {
        for next in knuth_neighbours(&w) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Words reachable by one Knuth relation: swap adjacent `x_i, x_{i+1}` when
/// `x_{i-1}` or `x_{i+2}` lies strictly between them.
pub fn knuth_neighbours(pi: &Permutation) -> Vec<Permutation> {
    let w = pi.word();
    let n = w.len();
    let mut out = Vec::new();
    for i in 0..n.saturating_sub(1) {
        let (lo, hi) = (w[i].min(w[i + 1]), w[i].max(w[i + 1]));
        let between = |v: usize| lo < v && v < hi;
        let left = i > 0 && between(w[i - 1]);
        let right = i + 2 < n && between(w[i + 2]);
        if left || right {
            let mut v = w.to_vec();
            v.swap(i, i + 1);
            out.push(Permutation::from_word_unchecked(v));
        }
    }
    out
}
