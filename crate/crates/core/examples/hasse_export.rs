//! Writes the chain-strip order on SYT_4 as a JSON poset file and as
//! Graphviz DOT, then reads the JSON back.

use chainstrip::orders::{build_order, OrderKind};
use chainstrip::PosetFile;

fn main() -> chainstrip::Result<()> {
    let order = build_order(OrderKind::ChainStrip, 4)?;
    let file = order.poset.to_file(4, "chain-strip", false);
    let json = file.to_json();
    print!("{json}");
    print!("{}", order.poset.to_dot("chain-strip-4"));

    let back = PosetFile::from_json(&json)?.to_poset()?;
    assert_eq!(back, order.poset);
    Ok(())
}
