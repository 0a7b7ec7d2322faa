//! The text input format, used programmatically.
//!
//! ```bash
//! cargo run --example document_io
//! ```

use seqpat::cli::InputDocument;
use seqpat::metric::{pattern_distance, Algorithm};
use seqpat::Pattern;

const INPUT: &str = "\
# rhyme schemes of two quatrains
level: 4
1 2 1 2       # alternating
1 1, 2 2      # couplets (commas work too)
";

fn main() -> seqpat::Result<()> {
    let doc = InputDocument::parse(INPUT)?;
    println!("parsed level {} with {} rows", doc.level, doc.rows.len());

    let set = doc.to_sequence_set()?;
    let patterns: Vec<Pattern> = set.sequences().iter().map(Pattern::of).collect();
    let distance = pattern_distance(&patterns, Algorithm::Auto)?.distance;
    println!("pattern distance between the rows: {distance}");

    println!("\nrendered back out:\n{}", doc.render());
    Ok(())
}
