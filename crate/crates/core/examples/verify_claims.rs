//! Runs every registered claim and prints the text report.
//!
//! Pass claim ids as arguments to run a subset:
//! `cargo run --release --example verify_claims -- four-pairs-n7 pr-product`

use chainstrip::verification::{report_text, run_claims};

fn main() -> chainstrip::Result<()> {
    let ids: Vec<String> = std::env::args().skip(1).collect();
    let results = run_claims((!ids.is_empty()).then_some(ids.as_slice()))?;
    print!("{}", report_text(&results));
    for r in results.iter().filter(|r| !r.passed()) {
        println!("\n{}: {}", r.claim_id, r.detail);
        for w in &r.witnesses {
            println!("  {w}");
        }
    }
    Ok(())
}
