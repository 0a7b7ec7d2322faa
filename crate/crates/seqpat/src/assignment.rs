//! Exact maximum-trace solver for square nonnegative integer matrices.
//!
//! The distance between two patterns reduces to choosing a relabeling of one
//! sequence that maximizes the number of agreeing positions. Tallying symbol
//! co-occurrences into a confusion matrix turns that into a linear assignment
//! problem: pick one entry per row and column maximizing the total.

use crate::core::{Permutation, SequenceSet};
use crate::error::{Error, Result};

/// Symbol co-occurrence counts for a pair of sequences.
///
/// Entry `(a, b)` counts the positions where the first sequence holds `a` and
/// the second holds `b`. The entries sum to the sequence length, and the
/// diagonal sums to the number of constant cross sections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfusionMatrix {
    counts: Vec<Vec<u64>>,
}

impl ConfusionMatrix {
    /// Wraps an arbitrary square count matrix.
    pub fn from_counts(counts: Vec<Vec<u64>>) -> Result<Self> {
        let size = counts.len();
        if size == 0 {
            return Err(Error::InvalidParameter("matrix must be nonempty".into()));
        }
        if counts.iter().any(|row| row.len() != size) {
            return Err(Error::InvalidParameter("matrix must be square".into()));
        }
        Ok(ConfusionMatrix { counts })
    }

    /// Tallies the cross sections of a two-sequence set.
    pub fn from_pair(q: &SequenceSet) -> Result<Self> {
        if q.k() != 2 {
            return Err(Error::ArityError { k: q.k() });
        }
        let level = q.level();
        let mut counts = vec![vec![0u64; level]; level];
        let [first, second] = [&q.sequences()[0], &q.sequences()[1]];
        for (&a, &b) in first.elements().iter().zip(second.elements()) {
            counts[a - 1][b - 1] += 1;
        }
        Ok(ConfusionMatrix { counts })
    }

    /// Side length of the matrix (the level when built from a pair).
    pub fn size(&self) -> usize {
        self.counts.len()
    }

    /// Count at row symbol `a`, column symbol `b` (both 1-based).
    pub fn count(&self, a: usize, b: usize) -> u64 {
        self.counts[a - 1][b - 1]
    }

    pub fn counts(&self) -> &[Vec<u64>] {
        &self.counts
    }

    /// Sum of all entries; the sequence length when built from a pair.
    pub fn total(&self) -> u64 {
        self.counts.iter().flatten().sum()
    }
}

/// Maximum over all permutations `sigma` of the permuted trace
/// `sum_a A[a][sigma(a)]`, with one optimal `sigma` as witness.
///
/// The maximization is converted to minimization against the matrix maximum
/// and solved by the Kuhn-Munkres method in O(size^3). Ties are broken by the
/// solver's fixed ascending scan order, so the witness is deterministic;
/// callers should compare values, not witnesses.
pub fn solve_max_trace(a: &ConfusionMatrix) -> (u64, Permutation) {
    let size = a.size();
    let top = a.counts.iter().flatten().copied().max().unwrap_or(0);
    let cost: Vec<Vec<i64>> = a
        .counts
        .iter()
        .map(|row| row.iter().map(|&v| (top - v) as i64).collect())
        .collect();
    let (min_cost, row_to_col) = hungarian_min(&cost);
    let value = (size as i64) * (top as i64) - min_cost;
    let images = row_to_col.iter().map(|&c| c + 1).collect();
    let sigma = Permutation::from_images(images).expect("assignment is a bijection");
    (value as u64, sigma)
}

/// Minimum-cost perfect assignment on a square matrix; returns the cost and
/// the row-to-column assignment.
///
/// Potential-based shortest augmenting paths: one Dijkstra-like phase per row
/// over the columns, keeping the reduced costs nonnegative via dual
/// potentials. The virtual column at index `n` roots each phase.
fn hungarian_min(cost: &[Vec<i64>]) -> (i64, Vec<usize>) {
    let n = cost.len();
    const NONE: usize = usize::MAX;
    let mut row_potential = vec![0i64; n];
    let mut col_potential = vec![0i64; n + 1];
    let mut matched_row = vec![NONE; n + 1];
    for row in 0..n {
        matched_row[n] = row;
        let mut j0 = n;
        let mut min_slack = vec![i64::MAX; n + 1];
        let mut slack_from = vec![n; n + 1];
        let mut visited = vec![false; n + 1];
        loop {
            visited[j0] = true;
            let r = matched_row[j0];
            let mut delta = i64::MAX;
            let mut j1 = n;
            for j in 0..n {
                if visited[j] {
                    continue;
                }
                let reduced = cost[r][j] - row_potential[r] - col_potential[j];
                if reduced < min_slack[j] {
                    min_slack[j] = reduced;
                    slack_from[j] = j0;
                }
                if min_slack[j] < delta {
                    delta = min_slack[j];
                    j1 = j;
                }
            }
            for j in 0..=n {
                if visited[j] {
                    row_potential[matched_row[j]] += delta;
                    col_potential[j] -= delta;
                } else if min_slack[j] < i64::MAX {
                    min_slack[j] -= delta;
                }
            }
            j0 = j1;
            if matched_row[j0] == NONE {
                break;
            }
        }
        // walk the alternating path back to the virtual column
        while j0 != n {
            let j1 = slack_from[j0];
            matched_row[j0] = matched_row[j1];
            j0 = j1;
        }
    }
    let mut row_to_col = vec![NONE; n];
    for j in 0..n {
        if matched_row[j] != NONE {
            row_to_col[matched_row[j]] = j;
        }
    }
    let total = (0..n).map(|i| cost[i][row_to_col[i]]).sum();
    (total, row_to_col)
}
