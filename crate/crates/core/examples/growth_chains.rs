//! Sequences of horizontal strips, interval sequences and descent sets.

use chainstrip::{insertion_tableau, Permutation, StandardTableau};

fn main() -> chainstrip::Result<()> {
    let t: StandardTableau = "1,2,4,6/3,5/7/8".parse()?;
    println!("T        = {t}");
    println!("SHS(T)   = {}", t.shs());
    println!("Des(T)   = {}", t.descent_set());
    println!("Φ(SHS)   = {}", t.shs().phi());

    let pi: Permutation = "2,5,3,7,4,1,6".parse()?;
    let p = insertion_tableau(&pi);
    println!("\nπ        = {pi}");
    println!("SI(π)    = {}", pi.si());
    println!("SHS(P(π))= {}", p.shs());
    println!("Des_L(π) = {}", pi.descent_set_left());
    println!("SHS(π^rp) = {}, reversed SHS = {}", insertion_tableau(&pi.rp()).shs(), p.shs().reversed());
    Ok(())
}
