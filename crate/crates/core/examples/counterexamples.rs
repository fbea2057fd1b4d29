//! Pairs where column insertion or a dual Knuth move destroys a
//! chain-strip comparability.

use chainstrip::orders::{chain_leq, chain_strip_order};
use chainstrip::{restrict, StandardTableau};

fn main() -> chainstrip::Result<()> {
    let t: StandardTableau = "1,2,6/3,5/4,7".parse()?;
    let s: StandardTableau = "1,2,6/3,7/4/5".parse()?;
    let cs7 = chain_strip_order(7, 1)?;
    println!("{t} ≤ {s}: {:?}", cs7.leq(&t, &s));

    let (ct, cs) = (t.insert_shifted_col(5)?, s.insert_shifted_col(5)?);
    println!("c_5: {ct} (SHS {}) and {cs} (SHS {})", ct.shs(), cs.shs());
    println!("chain order after insertion: {}", chain_leq(&ct, &cs)?);

    let r_tilde = restrict(&t, 1, 4)?.dual_knuth_move(2)?;
    let (t2, s2) = (t.inner_translate(&r_tilde)?, s.inner_translate(&r_tilde)?);
    println!("\ninner tableau replaced by {r_tilde}: {t2} and {s2}");
    println!("restrictions to [2,7]: {} and {}", restrict(&t2, 2, 7)?, restrict(&s2, 2, 7)?);
    println!("still comparable: {:?}", cs7.leq(&t2, &s2));
    Ok(())
}
