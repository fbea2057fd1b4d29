//! Transposition and evacuation, on tableaux and on permutations.

use chainstrip::{insertion_tableau, Permutation, StandardTableau};

fn main() -> chainstrip::Result<()> {
    for s in ["1,2,5/3,4,6", "1,4,5/2,6/3", "1,3,4,5/2,7/6"] {
        let t: StandardTableau = s.parse()?;
        println!("{t:<16} transpose {:<16} evac {}", t.transpose().to_string(), t.evacuate());
    }

    let pi: Permutation = "7,3,4,2,5,1,6".parse()?;
    let p = insertion_tableau(&pi);
    println!("\nπ = {pi}, π^evac = {}", pi.evac());
    println!("P(π^evac) = {}", insertion_tableau(&pi.evac()));
    println!("P(π)^evac = {}", p.evacuate());
    println!("P(π^rp)   = {}  P(π)^t = {}", insertion_tableau(&pi.rp()), p.transpose());
    Ok(())
}
