//! Count patterns by three independent routes and watch them agree.
//!
//! ```bash
//! cargo run --example count_patterns
//! ```

use seqpat::enumeration::{
    bell, count_patterns_burnside, count_standard_stirling, enumerate_standard,
};

fn main() -> seqpat::Result<()> {
    println!("patterns of length n over l symbols\n");
    println!("{:>3} {:>3} {:>12} {:>12} {:>12}", "n", "l", "orbit count", "stirling", "enumerated");
    for n in 1..=8usize {
        for level in [2usize, 3, 5] {
            let burnside = count_patterns_burnside(n, level)?;
            let stirling = count_standard_stirling(n, level)?;
            let enumerated = enumerate_standard(n, level)?.count();
            println!(
                "{n:>3} {level:>3} {:>12} {:>12} {enumerated:>12}",
                burnside.to_string(),
                stirling.to_string()
            );
            assert_eq!(burnside, stirling);
        }
    }

    println!("\nwith at least as many symbols as positions, the count is a Bell number:");
    for n in 1..=8usize {
        let count = count_patterns_burnside(n, n)?;
        println!("  n = {n}: {count} = B_{n} = {}", bell(n));
        assert_eq!(count, bell(n));
    }

    println!("\nlevel 2 counts halve the binary sequences: count(n, 2) = 2^(n-1):");
    for n in [4usize, 10, 16] {
        println!("  n = {n:>2}: {}", count_patterns_burnside(n, 2)?);
    }
    Ok(())
}
