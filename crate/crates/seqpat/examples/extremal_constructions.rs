//! How far apart can k patterns possibly be, and which sets get there.
//!
//! ```bash
//! cargo run --example extremal_constructions
//! ```

use seqpat::extremal::{construct_m, construct_mn, link, max_distance};
use seqpat::metric::{pattern_distance, Algorithm};
use seqpat::{CrossSection, Pattern};

fn main() -> seqpat::Result<()> {
    println!("maximal distance n - ceil(n / l^(k-1)):\n");
    println!("{:>3} {:>3} {:>3} {:>9}", "n", "l", "k", "max dist");
    for (n, level, k) in [(5, 3, 2), (5, 2, 2), (9, 1, 4), (12, 2, 3), (64, 4, 3)] {
        println!("{n:>3} {level:>3} {k:>3} {:>9}", max_distance(n, level, k)?);
    }

    println!("\nthe canonical block M for l = 2, k = 3 (rows are cross sections):");
    let block = construct_m(2, 3)?;
    for c in block.cross_sections() {
        println!("  {c}");
    }

    println!("\nstacked construction for n = 5, l = 2, k = 2:");
    let set = construct_mn(5, 2, 2)?;
    for q in set.sequences() {
        println!("  {q}");
    }
    let patterns: Vec<Pattern> = set.sequences().iter().map(Pattern::of).collect();
    let achieved = pattern_distance(&patterns, Algorithm::Clique)?.distance;
    println!(
        "achieved distance {achieved}, formula gives {}",
        max_distance(5, 2, 2)?
    );

    println!("\nthe link of [1,2,3,1,1] under the cyclic symbol shift (l = 3):");
    let c = CrossSection::new(vec![1, 2, 3, 1, 1])?;
    for section in link(&c, 3)? {
        println!("  {section}");
    }
    println!("links partition all cross sections into incompatible families.");
    Ok(())
}
