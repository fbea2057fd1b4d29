//! The generic poset engine on its own: closure, covers, intervals and an
//! anti-automorphism check.

use chainstrip::{poset_from_edges, MapMode};

fn main() -> chainstrip::Result<()> {
    let labels: Vec<String> = ["0", "a", "b", "1"].iter().map(|s| s.to_string()).collect();
    let diamond = poset_from_edges(labels, &[(0, 1), (0, 2), (1, 3), (2, 3)])?;
    println!("strict pairs: {:?}", diamond.strict_pairs());
    println!("covers:       {:?}", diamond.covers());
    println!("[a, 1]:       {:?}", diamond.interval(1, 3));
    let flip = diamond.check_map(&diamond, &[3, 1, 2, 0], MapMode::AntiAutomorphism)?;
    println!("0 <-> 1 is an anti-automorphism: {}", flip.holds());

    let cycle = poset_from_edges(vec!["x".into(), "y".into()], &[(0, 1), (1, 0)]);
    println!("cycle rejected: {}", cycle.unwrap_err());
    Ok(())
}
