//! Exact distance of three patterns via the connectivity graph.
//!
//! Cross sections that are identical or differ everywhere ("connected") are
//! exactly the ones a permutation tuple can make constant together, so the
//! best relabeling corresponds to a maximum-weight clique among the distinct
//! cross sections.
//!
//! ```bash
//! cargo run --example kway_distance
//! ```

use seqpat::metric::{
    build_connectivity_graph, pattern_distance, sequence_distance, Algorithm,
};
use seqpat::{Pattern, Sequence, SequenceSet};

fn main() -> seqpat::Result<()> {
    let set = SequenceSet::new(vec![
        Sequence::new(vec![1, 1, 3, 2, 1], 3)?,
        Sequence::new(vec![3, 3, 1, 2, 3], 3)?,
        Sequence::new(vec![1, 1, 2, 2, 1], 3)?,
    ])?;

    println!("cross sections (rows of the set):");
    for c in set.cross_sections() {
        println!("  {c}{}", if c.is_constant() { "  <- constant" } else { "" });
    }
    println!("\nplain sequence distance = {}", sequence_distance(&set));

    let graph = build_connectivity_graph(&set);
    println!("\nconnectivity graph vertices (section x multiplicity):");
    for (section, weight) in graph.vertices() {
        println!("  {section} x{weight}");
    }
    let (weight, clique) = graph.max_weight_clique();
    println!("maximum-weight clique covers {weight} cross sections: {clique:?}");

    let patterns: Vec<Pattern> = set.sequences().iter().map(Pattern::of).collect();
    for algorithm in [Algorithm::Clique, Algorithm::Brute] {
        let result = pattern_distance(&patterns, algorithm)?;
        println!("\n{algorithm:?}: pattern distance = {}", result.distance);

        // witnesses act on the canonical representatives; compose each with
        // the row's standardizing permutation to act on the rows as written
        let witness: Vec<_> = result
            .witness
            .unwrap()
            .iter()
            .zip(set.sequences())
            .map(|(phi, row)| phi.compose(&row.standardizing_permutation()))
            .collect();
        let cycles: Vec<String> = witness.iter().map(|p| p.to_string()).collect();
        println!("  witness tuple for the original rows: [{}]", cycles.join(", "));
        let image = set.apply(&witness)?;
        for q in image.sequences() {
            println!("    {q}");
        }
        println!("  which leaves distance {}", sequence_distance(&image));
    }
    Ok(())
}
