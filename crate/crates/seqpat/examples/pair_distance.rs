//! Exact distance between two patterns via the assignment reduction.
//!
//! The confusion matrix tallies symbol co-occurrences; a maximum-trace
//! assignment picks the relabeling that aligns as many positions as
//! possible, and the distance is what remains.
//!
//! ```bash
//! cargo run --example pair_distance
//! ```

use seqpat::assignment::{solve_max_trace, ConfusionMatrix};
use seqpat::metric::pattern_distance_pair;
use seqpat::{Pattern, Sequence, SequenceSet};

fn main() -> seqpat::Result<()> {
    let q1 = Sequence::new(vec![1, 1, 3, 2, 1], 3)?;
    let q2 = Sequence::new(vec![1, 1, 2, 2, 1], 3)?;
    println!("q1 = {q1}");
    println!("q2 = {q2}\n");

    let set = SequenceSet::new(vec![q1.clone(), q2.clone()])?;
    let matrix = ConfusionMatrix::from_pair(&set)?;
    println!("confusion matrix (rows: q1 symbols, columns: q2 symbols):");
    for row in matrix.counts() {
        println!("  {row:?}");
    }

    let (aligned, sigma) = solve_max_trace(&matrix);
    println!("\nbest alignment matches {aligned} of {} positions", set.len());
    println!("optimal column permutation: {sigma}");

    let result = pattern_distance_pair(&Pattern::of(&q1), &Pattern::of(&q2))?;
    println!("\npattern distance = {}", result.distance);
    let witness = result.witness.unwrap();
    println!(
        "witness: relabel q1 by {} and q2 by {}",
        witness[0], witness[1]
    );
    let image = set.apply(&witness)?;
    println!(
        "relabeled rows: {} and {}",
        image.sequences()[0],
        image.sequences()[1]
    );
    Ok(())
}
