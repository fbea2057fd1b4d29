//! Builds the weak, chain-strip and chain orders on SYT_n and compares
//! their comparability sets. Defaults to n = 7.

use chainstrip::orders::{build_order, OrderKind};

fn main() -> chainstrip::Result<()> {
    let n = std::env::args().nth(1).map_or(Ok(7), |s| s.parse()).unwrap_or(7);
    let kinds = OrderKind::ALL;
    let built = kinds.iter().map(|&k| build_order(k, n)).collect::<chainstrip::Result<Vec<_>>>()?;
    println!("SYT_{n}: {} tableaux", built[0].catalog.len());
    for (k, o) in kinds.iter().zip(&built) {
        println!("  {k:<14} {} strict pairs, {} covers", o.poset.strict_pairs().len(), o.poset.covers().len());
    }

    let (weak, cs) = (&built[0], &built[2]);
    let (only_weak, only_cs) = weak.poset.diff(&cs.poset)?;
    println!("\nweak only: {}", only_weak.len());
    println!("chain-strip only: {}", only_cs.len());
    for (a, b) in only_cs {
        println!("  {} < {}", cs.tableau(a), cs.tableau(b));
    }
    Ok(())
}
