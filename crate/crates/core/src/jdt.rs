//! Skew tableaux, jeu de taquin rectification, and restriction to intervals.

use std::fmt;

use crate::error::{invalid, Result};
use crate::partition::Partition;
use crate::tableau::{PartialTableau, StandardTableau};

/// A filling of the skew diagram `outer / inner` with distinct positive
/// integers, strictly increasing along rows and down columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewTableau {
    outer: Partition,
    inner: Partition,
    // cells[r][c] is None exactly on the inner diagram
    cells: Vec<Vec<Option<usize>>>,
}

impl SkewTableau {
    pub fn new(outer: Partition, inner: Partition, cells: Vec<Vec<Option<usize>>>) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(invalid(format!("inner shape {inner} is not inside {outer}")));
        }
        if cells.len() != outer.len() || cells.iter().zip(outer.parts()).any(|(row, &p)| row.len() != p) {
            return Err(invalid(format!("cell rows do not match outer shape {outer}")));
        }
        for (r, row) in cells.iter().enumerate() {
            for (c, cell) in row.iter().enumerate() {
                let is_inner = c < inner.part(r);
                if is_inner != cell.is_none() {
                    return Err(invalid(format!("cell ({r}, {c}) disagrees with inner shape {inner}")));
                }
                let Some(v) = *cell else { continue };
                let left = c.checked_sub(1).and_then(|cc| row[cc]);
                let up = r.checked_sub(1).and_then(|rr| cells[rr][c]);
                if left.is_some_and(|x| x >= v) || up.is_some_and(|x| x >= v) {
                    return Err(invalid(format!("cell ({r}, {c}) breaks strict increase")));
                }
            }
        }
        let mut seen: Vec<usize> = cells.iter().flatten().flatten().copied().collect();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(invalid("repeated entry in skew tableau"));
        }
        Ok(SkewTableau { outer, inner, cells })
    }

    /// Cells of `t` holding entries in `[i, j]`; smaller entries become the
    /// inner diagram and larger entries are dropped.
    pub fn from_interval(t: &StandardTableau, i: usize, j: usize) -> SkewTableau {
        let cells: Vec<Vec<Option<usize>>> = t
            .rows()
            .iter()
            .map(|row| {
                row.iter()
                    .take_while(|&&v| v <= j)
                    .map(|&v| (v >= i).then_some(v))
                    .collect::<Vec<_>>()
            })
            .filter(|row| !row.is_empty())
            .collect();
        let outer = Partition::from_parts_unchecked(cells.iter().map(Vec::len).collect());
        let inner = Partition::from_parts_unchecked(
            cells
                .iter()
                .map(|row| row.iter().take_while(|c| c.is_none()).count())
                .take_while(|&k| k > 0)
                .collect(),
        );
        SkewTableau { outer, inner, cells }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn cells(&self) -> &[Vec<Option<usize>>] {
        &self.cells
    }

    /// Inner corners available for the next backward slide.
    pub fn inner_corners(&self) -> Vec<(usize, usize)> {
        self.inner.corners()
    }

    /// One backward jeu de taquin slide into the inner corner `(r, c)`.
    pub fn slide_into(&mut self, corner: (usize, usize)) -> Result<()> {
        if !self.inner_corners().contains(&corner) {
            return Err(invalid(format!("{corner:?} is not an inner corner of {}", self.inner)));
        }
        let (mut r, mut c) = corner;
        loop {
            let right = self.cells[r].get(c + 1).copied().flatten();
            let below = self.cells.get(r + 1).and_then(|row| row.get(c)).copied().flatten();
            let next = match (right, below) {
                (None, None) => break,
                (Some(_), None) => (r, c + 1),
                (None, Some(_)) => (r + 1, c),
                (Some(x), Some(y)) => {
                    if x < y {
                        (r, c + 1)
                    } else {
                        (r + 1, c)
                    }
                }
            };
            self.cells[r][c] = self.cells[next.0][next.1].take();
            (r, c) = next;
        }
        // the hole has reached an outer corner
        self.cells[r].pop();
        if self.cells[r].is_empty() {
            self.cells.pop();
        }
        let mut outer = self.outer.parts().to_vec();
        outer[r] -= 1;
        outer.retain(|&p| p > 0);
        self.outer = Partition::from_parts_unchecked(outer);
        let mut inner = self.inner.parts().to_vec();
        inner[corner.0] -= 1;
        inner.retain(|&p| p > 0);
        self.inner = Partition::from_parts_unchecked(inner);
        Ok(())
    }

    /// Rectifies with `choose` picking which inner corner to slide into next.
    pub fn rectify_with(mut self, mut choose: impl FnMut(&[(usize, usize)]) -> usize) -> PartialTableau {
        loop {
            let corners = self.inner_corners();
            if corners.is_empty() {
                break;
            }
            let k = choose(&corners).min(corners.len() - 1);
            self.slide_into(corners[k]).expect("corner from inner_corners");
        }
        let rows = self
            .cells
            .into_iter()
            .map(|row| row.into_iter().map(|c| c.expect("straight shape")).collect())
            .collect();
        PartialTableau::new(rows).expect("jeu de taquin preserves tableau conditions")
    }

    /// Rectifies by always sliding into the bottom-most inner corner.
    pub fn rectify(self) -> PartialTableau {
        self.rectify_with(|corners| corners.len() - 1)
    }
}

impl fmt::Display for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .cells
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| c.map_or(".".to_string(), |v| v.to_string()))
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        f.write_str(&rows.join("/"))
    }
}

fn check_interval(t: &StandardTableau, i: usize, j: usize) -> Result<()> {
    let n = t.n();
    if i == 0 || i >= j || j > n {
        return Err(invalid(format!("interval [{i}, {j}] needs 1 <= i < j <= {n}")));
    }
    Ok(())
}

/// `T_{[i,j]}`: keep the entries of `[i, j]`, rectify by backward slides, and
/// relabel to `1..=j-i+1`.
pub fn restrict(t: &StandardTableau, i: usize, j: usize) -> Result<StandardTableau> {
    check_interval(t, i, j)?;
    Ok(restrict_unchecked(t, i, j))
}

/// Same as [`restrict`] with an explicit slide-order policy.
pub fn restrict_with(
    t: &StandardTableau,
    i: usize,
    j: usize,
    choose: impl FnMut(&[(usize, usize)]) -> usize,
) -> Result<StandardTableau> {
    check_interval(t, i, j)?;
    Ok(standardize(SkewTableau::from_interval(t, i, j).rectify_with(choose), i))
}

pub(crate) fn restrict_unchecked(t: &StandardTableau, i: usize, j: usize) -> StandardTableau {
    standardize(SkewTableau::from_interval(t, i, j).rectify(), i)
}

fn standardize(p: PartialTableau, i: usize) -> StandardTableau {
    StandardTableau::from_rows_unchecked(
        p.rows()
            .iter()
            .map(|row| row.iter().map(|v| v - (i - 1)).collect())
            .collect(),
    )
}
