//! Hamming distance of sequence sets and its exact minimum over independent
//! relabelings of each pattern.
//!
//! The distance of `k` sequences is the number of indices whose cross section
//! is not constant. For patterns, each sequence may be relabeled by its own
//! permutation before counting; the pattern distance is the minimum over all
//! such permutation tuples. Two routes compute it exactly:
//!
//! - pairs reduce to a linear assignment on the confusion matrix
//!   ([`pattern_distance_pair`]);
//! - any `k` reduces to a maximum-weight clique on the connectivity graph of
//!   distinct cross sections ([`pattern_distance`] with [`Algorithm::Clique`]),
//!   because a set of cross sections can be made simultaneously constant
//!   exactly when it is pairwise connected.
//!
//! A brute-force minimization over permutation tuples is kept as a
//! first-class algorithm for cross-checking the clever routes.

use std::collections::BTreeMap;

use crate::assignment::{solve_max_trace, ConfusionMatrix};
use crate::core::{CrossSection, Pattern, Permutation, SequenceSet};
use crate::enumeration::checked_factorial_u128;
use crate::error::{Error, Result};

/// Search-space size up to which [`Algorithm::Auto`] picks brute force.
const AUTO_BRUTE_LIMIT: u128 = 10_000;

/// Strategy for [`pattern_distance`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    /// Maximum-weight clique on the connectivity graph.
    Clique,
    /// Minimize over `{identity} x S_l^(k-1)` permutation tuples.
    Brute,
    /// Brute force while the tuple space has at most 10^4 elements, clique
    /// beyond that.
    Auto,
}

/// Outcome of a distance computation.
///
/// `distance + constant_count` equals the sequence length. When present, the
/// witness lists one permutation per pattern; applying it to the canonical
/// representatives yields exactly `constant_count` constant cross sections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceResult {
    pub distance: usize,
    pub constant_count: usize,
    pub witness: Option<Vec<Permutation>>,
}

/// Number of indices whose images across the set are not all identical.
pub fn sequence_distance(q: &SequenceSet) -> usize {
    q.len() - constant_sections(q)
}

/// Number of constant cross sections, `s(Q)`.
pub(crate) fn constant_sections(q: &SequenceSet) -> usize {
    let rows = q.sequences();
    (0..q.len())
        .filter(|&i| {
            let first = rows[0].elements()[i];
            rows[1..].iter().all(|r| r.elements()[i] == first)
        })
        .count()
}

/// True iff two cross sections are identical or incompatible, which are exactly the
/// pairs that some permutation tuple can make simultaneously constant.
pub fn connected(a: &CrossSection, b: &CrossSection) -> Result<bool> {
    if a.k() != b.k() {
        return Err(Error::ShapeMismatch(format!(
            "cross sections of arity {} and {}",
            a.k(),
            b.k()
        )));
    }
    let mut any_eq = false;
    let mut any_ne = false;
    for (x, y) in a.elements().iter().zip(b.elements()) {
        if x == y {
            any_eq = true;
        } else {
            any_ne = true;
        }
    }
    Ok(!(any_eq && any_ne))
}

/// Weighted graph on the distinct cross sections of a sequence set.
///
/// Identical cross sections collapse into one vertex whose weight is their
/// multiplicity, so an edge joins two vertices exactly when the sections are
/// incompatible. The maximum total weight of a clique equals the maximum
/// number of constant cross sections over all permutation tuples.
#[derive(Debug, Clone)]
pub struct ConnectivityGraph {
    vertices: Vec<(CrossSection, usize)>,
    adjacency: Vec<Vec<bool>>,
}

impl ConnectivityGraph {
    pub fn build(q: &SequenceSet) -> ConnectivityGraph {
        let mut multiplicity: BTreeMap<CrossSection, usize> = BTreeMap::new();
        for section in q.cross_sections() {
            *multiplicity.entry(section).or_insert(0) += 1;
        }
        let vertices: Vec<(CrossSection, usize)> = multiplicity.into_iter().collect();
        let n = vertices.len();
        let mut adjacency = vec![vec![false; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                // distinct vertices are never identical, so connected means
                // incompatible here
                if vertices[i].0.is_incompatible_with(&vertices[j].0) {
                    adjacency[i][j] = true;
                    adjacency[j][i] = true;
                }
            }
        }
        ConnectivityGraph {
            vertices,
            adjacency,
        }
    }

    /// Distinct cross sections with their multiplicities, in sorted order.
    pub fn vertices(&self) -> &[(CrossSection, usize)] {
        &self.vertices
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adjacency[i][j]
    }

    /// Maximum total multiplicity of a clique, with the chosen vertex indices.
    ///
    /// Branch and bound over vertices in descending weight order; the bound
    /// is the total weight of the remaining candidates.
    pub fn max_weight_clique(&self) -> (usize, Vec<usize>) {
        let n = self.vertices.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| {
            self.vertices[b]
                .1
                .cmp(&self.vertices[a].1)
                .then(a.cmp(&b))
        });
        let mut best_weight = 0usize;
        let mut best = Vec::new();
        let mut current = Vec::new();
        self.expand(&order, &mut current, 0, &mut best_weight, &mut best);
        best.sort_unstable();
        (best_weight, best)
    }

    fn expand(
        &self,
        candidates: &[usize],
        current: &mut Vec<usize>,
        current_weight: usize,
        best_weight: &mut usize,
        best: &mut Vec<usize>,
    ) {
        if current_weight > *best_weight {
            *best_weight = current_weight;
            *best = current.clone();
        }
        let mut remaining: usize = candidates.iter().map(|&v| self.vertices[v].1).sum();
        for (pos, &v) in candidates.iter().enumerate() {
            if current_weight + remaining <= *best_weight {
                return;
            }
            let narrowed: Vec<usize> = candidates[pos + 1..]
                .iter()
                .copied()
                .filter(|&u| self.adjacency[v][u])
                .collect();
            current.push(v);
            self.expand(
                &narrowed,
                current,
                current_weight + self.vertices[v].1,
                best_weight,
                best,
            );
            current.pop();
            remaining -= self.vertices[v].1;
        }
    }
}

/// Graph construction from the canonical representatives of a pattern list.
pub fn build_connectivity_graph(q: &SequenceSet) -> ConnectivityGraph {
    ConnectivityGraph::build(q)
}

fn require_same_shape(patterns: &[&Pattern]) -> Result<()> {
    let (n, level) = (patterns[0].len(), patterns[0].level());
    for t in &patterns[1..] {
        if t.len() != n || t.level() != level {
            return Err(Error::ShapeMismatch(format!(
                "expected patterns of shape ({n}, {level}), found ({}, {})",
                t.len(),
                t.level()
            )));
        }
    }
    Ok(())
}

/// Exact distance between two patterns via the assignment reduction.
///
/// Builds the confusion matrix of the canonical representatives and
/// maximizes the permuted trace; the distance is the length minus that
/// maximum. The witness relabels the second representative onto the first.
pub fn pattern_distance_pair(t1: &Pattern, t2: &Pattern) -> Result<DistanceResult> {
    require_same_shape(&[t1, t2])?;
    let q = SequenceSet::new(vec![t1.canonical().clone(), t2.canonical().clone()])?;
    let matrix = ConfusionMatrix::from_pair(&q)?;
    let (value, sigma) = solve_max_trace(&matrix);
    let constant_count = value as usize;
    Ok(DistanceResult {
        distance: q.len() - constant_count,
        constant_count,
        witness: Some(vec![Permutation::identity(q.level()), sigma.inverse()]),
    })
}

/// Exact distance of `k >= 2` patterns.
///
/// Operates on the canonical representatives; by relabel-invariance the
/// choice of representatives does not matter. All algorithms return the same
/// distance, and for `k = 2` they agree with [`pattern_distance_pair`].
pub fn pattern_distance(patterns: &[Pattern], algorithm: Algorithm) -> Result<DistanceResult> {
    if patterns.len() < 2 {
        return Err(Error::ArityError {
            k: patterns.len(),
        });
    }
    let refs: Vec<&Pattern> = patterns.iter().collect();
    require_same_shape(&refs)?;
    let q = SequenceSet::new(
        patterns
            .iter()
            .map(|t| t.canonical().clone())
            .collect(),
    )?;
    let algorithm = match algorithm {
        Algorithm::Auto => {
            if tuple_space(q.level(), q.k()).is_some_and(|s| s <= AUTO_BRUTE_LIMIT) {
                Algorithm::Brute
            } else {
                Algorithm::Clique
            }
        }
        fixed => fixed,
    };
    match algorithm {
        Algorithm::Brute => Ok(brute_distance(&q)),
        Algorithm::Clique => clique_distance(&q),
        Algorithm::Auto => unreachable!("resolved above"),
    }
}

/// `(level!)^(k-1)`, the size of the reduced permutation-tuple space.
pub(crate) fn tuple_space(level: usize, k: usize) -> Option<u128> {
    let fact = checked_factorial_u128(level)?;
    fact.checked_pow(u32::try_from(k - 1).ok()?)
}

/// Minimum distance over `{identity} x S_l^(k-1)`.
///
/// Fixing the first permutation loses nothing: composing every permutation in
/// a tuple with a common left factor preserves which cross sections are
/// constant, so any tuple can be normalized to one with the identity first.
fn brute_distance(q: &SequenceSet) -> DistanceResult {
    let level = q.level();
    let k = q.k();
    let n = q.len();
    let rows = q.sequences();
    let perms: Vec<Permutation> = Permutation::all(level).collect();
    let mut indices = vec![0usize; k - 1];
    let mut best_count = 0usize;
    let mut best_indices = indices.clone();
    let mut first_pass = true;
    loop {
        let mut count = 0usize;
        'position: for i in 0..n {
            let target = rows[0].elements()[i];
            for (j, &p) in indices.iter().enumerate() {
                if perms[p].apply(rows[j + 1].elements()[i]) != target {
                    continue 'position;
                }
            }
            count += 1;
        }
        if first_pass || count > best_count {
            best_count = count;
            best_indices = indices.clone();
            first_pass = false;
        }
        if !advance(&mut indices, perms.len()) {
            break;
        }
    }
    let mut witness = Vec::with_capacity(k);
    witness.push(Permutation::identity(level));
    witness.extend(best_indices.iter().map(|&p| perms[p].clone()));
    DistanceResult {
        distance: n - best_count,
        constant_count: best_count,
        witness: Some(witness),
    }
}

fn advance(indices: &mut [usize], base: usize) -> bool {
    for digit in indices.iter_mut().rev() {
        *digit += 1;
        if *digit < base {
            return true;
        }
        *digit = 0;
    }
    false
}

fn clique_distance(q: &SequenceSet) -> Result<DistanceResult> {
    let graph = ConnectivityGraph::build(q);
    let (weight, clique) = graph.max_weight_clique();
    let sections: Vec<CrossSection> = clique
        .iter()
        .map(|&v| graph.vertices()[v].0.clone())
        .collect();
    let witness = constantize_witness(&sections, q.level())?;
    Ok(DistanceResult {
        distance: q.len() - weight,
        constant_count: weight,
        witness: Some(witness),
    })
}

/// Builds a permutation tuple under which every listed cross section becomes
/// constant.
///
/// The sections must be pairwise connected. Writing the distinct sections as
/// rows, the `j`-th permutation maps each section's `j`-th element to that
/// section's first element; pairwise incompatibility makes those partial maps
/// injective. Unassigned symbols are completed in ascending order.
pub fn constantize_witness(
    sections: &[CrossSection],
    level: usize,
) -> Result<Vec<Permutation>> {
    let Some(first) = sections.first() else {
        return Err(Error::InvalidParameter(
            "at least one cross section required".into(),
        ));
    };
    let k = first.k();
    for c in sections {
        if c.k() != k {
            return Err(Error::ShapeMismatch(format!(
                "cross sections of arity {} and {}",
                k,
                c.k()
            )));
        }
        if let Some(&bad) = c.elements().iter().find(|&&e| e > level) {
            return Err(Error::SymbolOutOfRange { symbol: bad, level });
        }
    }
    for (i, a) in sections.iter().enumerate() {
        for b in &sections[i + 1..] {
            if !connected(a, b)? {
                return Err(Error::NotConnected);
            }
        }
    }
    let mut distinct: Vec<&CrossSection> = Vec::new();
    for c in sections {
        if !distinct.iter().any(|u| u.is_identical_to(c)) {
            distinct.push(c);
        }
    }
    if distinct.len() > level {
        return Err(Error::TooManySections {
            sections: distinct.len(),
            level,
        });
    }
    let mut witness = Vec::with_capacity(k);
    for j in 0..k {
        let mut images = vec![0usize; level];
        let mut used = vec![false; level];
        for c in &distinct {
            let from = c.elements()[j];
            let to = c.elements()[0];
            images[from - 1] = to;
            used[to - 1] = true;
        }
        let mut free = (1..=level).filter(|&t| !used[t - 1]);
        for slot in images.iter_mut() {
            if *slot == 0 {
                *slot = free.next().expect("free symbols match free slots");
            }
        }
        witness.push(Permutation::from_images(images).expect("two-line map is a bijection"));
    }
    Ok(witness)
}

/// Triangle inequality `d(t1, t3) + d(t2, t3) >= d(t1, t2)` on pairwise
/// distances.
pub fn check_triangle(t1: &Pattern, t2: &Pattern, t3: &Pattern) -> Result<bool> {
    require_same_shape(&[t1, t2, t3])?;
    let d13 = pattern_distance_pair(t1, t3)?.distance;
    let d23 = pattern_distance_pair(t2, t3)?.distance;
    let d12 = pattern_distance_pair(t1, t2)?.distance;
    Ok(d13 + d23 >= d12)
}
