//! Standard order: the canonical representative of each pattern.
//!
//! ```bash
//! cargo run --example canonical_forms
//! ```

use seqpat::enumeration::enumerate_standard;
use seqpat::{Pattern, Permutation, Sequence};

fn main() -> seqpat::Result<()> {
    let q1 = Sequence::new(vec![1, 1, 3, 2, 1], 3)?;
    let q2 = Sequence::new(vec![2, 2, 1, 3, 2], 3)?;
    let q3 = Sequence::new(vec![1, 1, 2, 2, 1], 3)?;

    println!("q1 = {q1}, q2 = {q2}, q3 = {q3}\n");

    let phi = Permutation::from_cycles(3, &[vec![1, 2, 3]])?;
    println!("applying {phi} to q1 gives {}", q1.apply(&phi)?);
    println!("q1 equivalent to q2? {}", q1.equivalent(&q2)?);
    println!("q1 equivalent to q3? {}\n", q1.equivalent(&q3)?);

    for q in [&q1, &q2, &q3] {
        println!(
            "standardize({q}) = {} (standard already? {})",
            q.standardize(),
            q.is_standard()
        );
    }

    println!("\nequivalent sequences share a pattern:");
    println!("  pattern of q1: {}", Pattern::of(&q1));
    println!("  pattern of q2: {}", Pattern::of(&q2));
    println!("  pattern of q3: {}", Pattern::of(&q3));

    println!("\nall standard sequences of length 4, level 3:");
    for q in enumerate_standard(4, 3)? {
        println!("  {q}");
    }
    Ok(())
}
