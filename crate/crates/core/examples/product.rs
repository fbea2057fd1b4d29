//! The Poirier-Reutenauer product, as an interval of the chain-strip order
//! and as the support of a shuffle product.

use chainstrip::orders::{pr_product, pr_product_oracle};
use chainstrip::{backslash_concat, slash_concat, StandardTableau};

fn main() -> chainstrip::Result<()> {
    let s: StandardTableau = "1,2/3".parse()?;
    let t: StandardTableau = "1,2".parse()?;
    println!("S = {s}, T = {t}");
    println!("S/T = {}", slash_concat(&s, &t));
    println!("S\\T = {}", backslash_concat(&s, &t));
    let by_interval = pr_product(&s, &t)?;
    println!("S * T:");
    for r in &by_interval {
        println!("  {r}");
    }
    assert_eq!(by_interval, pr_product_oracle(&s, &t)?);
    println!("shuffle oracle agrees");
    Ok(())
}
