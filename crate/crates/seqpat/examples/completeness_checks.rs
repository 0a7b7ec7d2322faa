//! Complete and semi-complete sets: how many constant cross sections can a
//! relabeling leave behind.
//!
//! A set is semi-complete if no relabeling yields more than one constant
//! cross section, and complete if every relabeling yields exactly one. The
//! canonical block is complete; its truncations are only semi-complete.
//!
//! ```bash
//! cargo run --example completeness_checks
//! ```

use seqpat::extremal::{construct_m, construct_mn, is_complete, is_semi_complete};
use seqpat::{Sequence, SequenceSet};

fn report(name: &str, q: &SequenceSet) -> seqpat::Result<()> {
    println!(
        "{name}: complete = {}, semi-complete = {}",
        is_complete(q)?,
        is_semi_complete(q)?
    );
    Ok(())
}

fn main() -> seqpat::Result<()> {
    for (level, k) in [(2usize, 2usize), (2, 3), (3, 2)] {
        let m = construct_m(level, k)?;
        report(&format!("M (l={level}, k={k})"), &m)?;
    }

    println!();
    for r in 1..4usize {
        let truncated = construct_mn(r, 2, 3)?;
        report(&format!("M_{r} (l=2, k=3)"), &truncated)?;
    }

    println!();
    let repeated = SequenceSet::new(vec![
        Sequence::new(vec![1, 1, 2], 2)?,
        Sequence::new(vec![2, 2, 1], 2)?,
    ])?;
    report("a set with a repeated cross section", &repeated)?;
    println!("(two identical cross sections can always be made constant together)");
    Ok(())
}
