//! Independent ground truths for the combinatorial primitives.

use std::collections::BTreeSet;

use chainstrip::orders::{chain_strip_poset, weak_bruhat_poset, weak_order_syt};
use chainstrip::{
    enumerate_syt, enumerate_syt_shape, insertion_tableau, restrict, Partition, Permutation,
    StandardTableau, StripSequence,
};

fn hook_length_count(shape: &Partition) -> usize {
    let conj = shape.conjugate();
    let n = shape.weight();
    let mut hooks = 1usize;
    for (r, &len) in shape.parts().iter().enumerate() {
        for c in 0..len {
            hooks *= (len - c - 1) + (conj.part(c) - r - 1) + 1;
        }
    }
    (1..=n).product::<usize>() / hooks
}

#[test]
fn shape_counts_match_hook_length_formula() {
    for n in 1..=9 {
        for shape in Partition::all(n) {
            assert_eq!(enumerate_syt_shape(&shape).unwrap().len(), hook_length_count(&shape), "{shape}");
        }
    }
}

#[test]
fn totals_match_involution_recurrence() {
    let mut a = vec![1usize, 1];
    for n in 2..=9 {
        a.push(a[n - 1] + (n - 1) * a[n - 2]);
    }
    for (n, &count) in a.iter().enumerate().skip(1) {
        assert_eq!(enumerate_syt(n).unwrap().len(), count);
    }
    assert_eq!(&a[1..9], &[1, 2, 4, 10, 26, 76, 232, 764]);
}

/// Schützenberger's procedure: delete the smallest entry, slide the hole out
/// to an outer corner, and label that corner with the largest unused value.
fn evacuate_by_deletion(t: &StandardTableau) -> StandardTableau {
    let n = t.n();
    let mut cells: Vec<Vec<Option<usize>>> = t.rows().iter().map(|r| r.iter().map(|&v| Some(v)).collect()).collect();
    let mut out: Vec<Vec<usize>> = t.rows().iter().map(|r| vec![0; r.len()]).collect();
    for label in (1..=n).rev() {
        let (mut r, mut c) = (0, 0);
        cells[0][0] = None;
        loop {
            let right = cells[r].get(c + 1).copied().flatten();
            let below = cells.get(r + 1).and_then(|row| row.get(c)).copied().flatten();
            let next = match (right, below) {
                (None, None) => break,
                (Some(_), None) => (r, c + 1),
                (None, Some(_)) => (r + 1, c),
                (Some(x), Some(y)) => if x < y { (r, c + 1) } else { (r + 1, c) },
            };
            cells[r][c] = cells[next.0][next.1].take();
            (r, c) = next;
        }
        cells[r].pop();
        out[r][c] = label;
    }
    StandardTableau::new(out).unwrap()
}

#[test]
fn evacuation_matches_deletion_procedure() {
    for n in 1..=8 {
        for t in enumerate_syt(n).unwrap() {
            assert_eq!(t.evacuate(), evacuate_by_deletion(&t), "{t}");
        }
    }
    let t: StandardTableau = "1,2,5/3,4,6".parse().unwrap();
    assert_eq!(evacuate_by_deletion(&t).to_string(), "1,3,4/2,5,6");
}

/// `T_{[i,j]}` via insertion of the reading word restricted to `[i, j]`.
fn restrict_by_insertion(t: &StandardTableau, i: usize, j: usize) -> StandardTableau {
    let word: Vec<usize> = t.row_word().word().iter().copied().filter(|v| (i..=j).contains(v)).map(|v| v - i + 1).collect();
    insertion_tableau(&Permutation::new(word).unwrap())
}

#[test]
fn restriction_matches_insertion_of_subword() {
    for n in 2..=7 {
        for t in enumerate_syt(n).unwrap() {
            for i in 1..n {
                for j in i + 1..=n {
                    assert_eq!(restrict(&t, i, j).unwrap(), restrict_by_insertion(&t, i, j), "{t} [{i},{j}]");
                }
            }
        }
    }
}

/// Break sets whose blocks each add cells in strictly increasing columns.
fn valid_strip_decompositions(t: &StandardTableau) -> Vec<StripSequence> {
    let n = t.n();
    let pos = t.positions();
    (0u32..1 << (n - 1))
        .map(|mask| StripSequence::from_breaks(n, (1..n).filter(|&b| mask >> (b - 1) & 1 == 1)).unwrap())
        .filter(|s| s.blocks().iter().all(|&(a, b)| (a..b).all(|v| pos[v + 1].1 > pos[v].1)))
        .collect()
}

#[test]
fn shs_is_the_unique_coarsest_strip_decomposition() {
    for n in 1..=7 {
        for t in enumerate_syt(n).unwrap() {
            let valid = valid_strip_decompositions(&t);
            let fewest = valid.iter().map(StripSequence::len).min().unwrap();
            let coarsest: Vec<_> = valid.iter().filter(|s| s.len() == fewest).collect();
            assert_eq!(coarsest, vec![&t.shs()], "{t}");
            assert!(valid.iter().all(|s| s.refines(&t.shs()).unwrap()));
        }
    }
}

#[test]
fn each_shs_block_is_a_horizontal_strip() {
    for t in enumerate_syt(7).unwrap() {
        let pos = t.positions();
        for &(a, b) in t.shs().blocks() {
            let cols: BTreeSet<usize> = (a..=b).map(|v| pos[v].1).collect();
            assert_eq!(cols.len(), b - a + 1, "{t}");
        }
    }
}

#[test]
fn weak_bruhat_matches_inversion_sets() {
    for n in 1..=5 {
        let poset = weak_bruhat_poset(n).unwrap();
        let perms: Vec<Permutation> = Permutation::all(n).collect();
        for (a, s) in perms.iter().enumerate() {
            for (b, t) in perms.iter().enumerate() {
                assert_eq!(poset.leq(a, b), s.left_inversions().is_subset(&t.left_inversions()), "{s} {t}");
            }
        }
    }
    // identity, two rank-one, two rank-two and the top element
    assert_eq!(weak_bruhat_poset(3).unwrap().strict_pairs().len(), 11);
}

#[test]
fn weak_order_on_syt_matches_knuth_class_definition() {
    // S ≤ T iff some σ ∈ κ_S lies below some τ ∈ κ_T in weak Bruhat, closed
    for n in 2..=5 {
        let tabs = enumerate_syt(n).unwrap();
        let perms: Vec<Permutation> = Permutation::all(n).collect();
        let cls: Vec<usize> = perms.iter().map(|p| tabs.iter().position(|t| *t == insertion_tableau(p)).unwrap()).collect();
        let mut edges = Vec::new();
        for (i, s) in perms.iter().enumerate() {
            for (j, t) in perms.iter().enumerate() {
                if cls[i] != cls[j] && s.left_inversions().is_subset(&t.left_inversions()) {
                    edges.push((cls[i], cls[j]));
                }
            }
        }
        let labels = tabs.iter().map(|t| t.to_string()).collect();
        let oracle = chainstrip::poset_from_edges(labels, &edges).unwrap();
        assert_eq!(weak_order_syt(n).unwrap(), oracle, "n={n}");
    }
}

#[test]
fn weak_equals_chain_strip_up_to_five() {
    for n in 1..=5 {
        assert_eq!(weak_order_syt(n).unwrap(), chain_strip_poset(n, 1).unwrap());
    }
}
