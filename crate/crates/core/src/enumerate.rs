//! Exhaustive enumeration of standard Young tableaux in canonical order.

use crate::error::{check_capacity, Result};
use crate::partition::Partition;
use crate::tableau::StandardTableau;

pub const MAX_ENUMERATION_N: usize = 10;

/// Every tableau in `SYT_n`: shapes in decreasing lexicographic order, and
/// within a shape, lexicographic by row-concatenated entries.
pub fn enumerate_syt(n: usize) -> Result<Vec<StandardTableau>> {
    check_capacity("enumerate_syt", n, MAX_ENUMERATION_N)?;
    let mut out = Vec::new();
    for shape in Partition::all(n) {
        out.extend(of_shape(&shape));
    }
    Ok(out)
}

/// Every standard tableau of the given shape, lexicographic by entries.
pub fn enumerate_syt_shape(shape: &Partition) -> Result<Vec<StandardTableau>> {
    check_capacity("enumerate_syt_shape", shape.weight(), MAX_ENUMERATION_N)?;
    Ok(of_shape(shape))
}

fn of_shape(shape: &Partition) -> Vec<StandardTableau> {
    let n = shape.weight();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.len()];
    let mut out = Vec::new();
    fill(shape, 1, n, &mut rows, &mut out);
    out.sort_by_key(StandardTableau::reading_key);
    out
}

// Places `v` in each addable cell that stays inside `shape`.
fn fill(
    shape: &Partition,
    v: usize,
    n: usize,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<StandardTableau>,
) {
    if v > n {
        out.push(StandardTableau::from_rows_unchecked(rows.clone()));
        return;
    }
    for r in 0..shape.len() {
        let len = rows[r].len();
        let fits = len < shape.part(r) && (r == 0 || rows[r - 1].len() > len);
        if fits {
            rows[r].push(v);
            fill(shape, v + 1, n, rows, out);
            rows[r].pop();
        }
    }
}
