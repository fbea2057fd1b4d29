//! Robinson-Schensted insertion, its inverse, and Knuth classes.

use chainstrip::{insertion_tableau, inverse_rsk, knuth_class, rsk, Permutation};

fn main() -> chainstrip::Result<()> {
    let pi: Permutation = "5,3,6,9,1,2,4,7,8".parse()?;
    let (p, q) = rsk(&pi);
    println!("π = {pi}");
    println!("P = {p}");
    println!("Q = {q}");
    assert_eq!(inverse_rsk(&p, &q)?, pi);

    let t = insertion_tableau(&"2,1,3".parse()?);
    println!("\nKnuth class of {t}:");
    for w in knuth_class(&t)? {
        println!("  {w}");
    }
    Ok(())
}
