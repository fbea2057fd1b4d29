//! Jeu de taquin rectification of an interval and the restriction T_[i,j].

use chainstrip::{restrict, SkewTableau, StandardTableau};

fn main() -> chainstrip::Result<()> {
    let t: StandardTableau = "1,2,4,6/3,5/7/8".parse()?;
    let mut skew = SkewTableau::from_interval(&t, 3, 6);
    println!("entries 3..=6 of {t}: {skew}");
    while let Some(&corner) = skew.inner_corners().last() {
        skew.slide_into(corner)?;
        println!("  slide into {corner:?}: {skew}");
    }
    println!("T_[3,6] = {}", restrict(&t, 3, 6)?);

    println!("\nall restrictions of {t} to 6-element intervals:");
    for i in 1..=3 {
        println!("  [{i},{}] -> {}", i + 5, restrict(&t, i, i + 5)?);
    }
    Ok(())
}
