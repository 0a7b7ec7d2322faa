//! Core domain types: sequences over a bounded symbol set, permutations
//! acting on symbols, standard-order canonical forms, patterns, and sequence
//! sets with their cross sections.
//!
//! A length-`n` level-`l` sequence assigns a symbol from `1..=l` to each of
//! `n` positions. Relabeling the symbols by a permutation of `1..=l` changes
//! the sequence but not its *pattern*: which positions share a symbol. A
//! [`Pattern`] is the equivalence class of a sequence under all such
//! relabelings, represented by the unique member in standard order: symbols
//! numbered 1, 2, 3, … in order of first occurrence. For `n <= l`, patterns
//! correspond one-to-one with partitions of an `n`-element set (grouping
//! positions by shared symbol); in general they are the partitions with at
//! most `l` blocks.

use std::fmt;

use crate::error::{Error, Result};

/// A length-`n` sequence over the symbol set `1..=level`.
///
/// The level records the symbols *available*, not the symbols that actually
/// occur, so two sequences with equal elements but different levels are
/// distinct values.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sequence {
    elements: Vec<usize>,
    level: usize,
}

impl Sequence {
    /// Validates and wraps a symbol list. Symbols are 1-based.
    pub fn new(elements: Vec<usize>, level: usize) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::EmptySequence);
        }
        if let Some(&bad) = elements.iter().find(|&&e| e < 1 || e > level) {
            return Err(Error::SymbolOutOfRange { symbol: bad, level });
        }
        Ok(Sequence { elements, level })
    }

    /// Constructor for values already known to be valid.
    pub(crate) fn new_unchecked(elements: Vec<usize>, level: usize) -> Self {
        debug_assert!(!elements.is_empty());
        debug_assert!(elements.iter().all(|&e| (1..=level).contains(&e)));
        Sequence { elements, level }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// Always false; sequences have at least one element.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    /// True if all elements are identical.
    pub fn is_constant(&self) -> bool {
        self.elements.iter().all(|&e| e == self.elements[0])
    }

    /// Applies a symbol relabeling element-wise.
    ///
    /// The permutation's degree must equal the sequence level.
    pub fn apply(&self, phi: &Permutation) -> Result<Sequence> {
        if phi.degree() != self.level {
            return Err(Error::LevelMismatch {
                level: self.level,
                degree: phi.degree(),
            });
        }
        let elements = self.elements.iter().map(|&x| phi.apply(x)).collect();
        Ok(Sequence {
            elements,
            level: self.level,
        })
    }

    /// The unique equivalent sequence in standard order.
    ///
    /// Symbols are renamed by order of first occurrence: the first distinct
    /// symbol becomes 1, the second 2, and so on. Single left-to-right pass.
    pub fn standardize(&self) -> Sequence {
        let mut relabel = vec![0usize; self.level + 1];
        let mut next = 0usize;
        let elements = self
            .elements
            .iter()
            .map(|&x| {
                if relabel[x] == 0 {
                    next += 1;
                    relabel[x] = next;
                }
                relabel[x]
            })
            .collect();
        Sequence {
            elements,
            level: self.level,
        }
    }

    /// A permutation carrying this sequence onto its standard form:
    /// `q.apply(&q.standardizing_permutation()) == q.standardize()`.
    ///
    /// Symbols that occur are mapped to their first-occurrence labels;
    /// unused symbols fill the remaining labels in ascending order.
    pub fn standardizing_permutation(&self) -> Permutation {
        let mut images = vec![0usize; self.level];
        let mut next = 0usize;
        for &x in &self.elements {
            if images[x - 1] == 0 {
                next += 1;
                images[x - 1] = next;
            }
        }
        let mut free = next + 1..=self.level;
        for slot in images.iter_mut() {
            if *slot == 0 {
                *slot = free.next().expect("unused symbols match unused labels");
            }
        }
        Permutation { images }
    }

    /// True iff the sequence is in standard order: every symbol `v > 1` is
    /// preceded by an occurrence of `v - 1`.
    ///
    /// Equivalently, the sequence is a restricted growth string: each element
    /// is at most one more than the maximum of the prefix before it.
    pub fn is_standard(&self) -> bool {
        let mut max_seen = 0usize;
        self.elements.iter().all(|&x| {
            if x <= max_seen {
                true
            } else if x == max_seen + 1 {
                max_seen = x;
                true
            } else {
                false
            }
        })
    }

    /// True iff some permutation of symbols maps `self` onto `other`.
    pub fn equivalent(&self, other: &Sequence) -> Result<bool> {
        if self.len() != other.len() || self.level != other.level {
            return Err(Error::ShapeMismatch(format!(
                "sequences of shape ({}, {}) and ({}, {})",
                self.len(),
                self.level,
                other.len(),
                other.level
            )));
        }
        Ok(self.standardize() == other.standardize())
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

/// A permutation of the symbols `1..=degree`, stored as an image table.
///
/// `images[s - 1]` is the image of symbol `s`. Cycle notation is supported
/// for construction and display, but application is always a table lookup.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (1..=degree).collect(),
        }
    }

    /// Validates that `images` is a bijection on `1..=images.len()`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &im in &images {
            if im < 1 || im > degree {
                return Err(Error::InvalidPermutation(format!(
                    "image {im} outside 1..={degree}"
                )));
            }
            if seen[im - 1] {
                return Err(Error::InvalidPermutation(format!("image {im} repeated")));
            }
            seen[im - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of `1..=degree` from disjoint cycles; symbols not
    /// mentioned are fixed. `from_cycles(3, &[vec![1, 2, 3]])` is the cycle
    /// (123) mapping 1 to 2, 2 to 3 and 3 to 1.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=degree).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            for (i, &s) in cycle.iter().enumerate() {
                if s < 1 || s > degree {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle element {s} outside 1..={degree}"
                    )));
                }
                if moved[s - 1] {
                    return Err(Error::InvalidPermutation(format!(
                        "symbol {s} appears in two cycles"
                    )));
                }
                moved[s - 1] = true;
                images[s - 1] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a symbol. Panics if `symbol` is not in `1..=degree`.
    pub fn apply(&self, symbol: usize) -> usize {
        self.images[symbol - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0usize; self.images.len()];
        for (i, &im) in self.images.iter().enumerate() {
            images[im - 1] = i + 1;
        }
        Permutation { images }
    }

    /// Composition `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        let images = (1..=self.degree())
            .map(|s| self.apply(other.apply(s)))
            .collect();
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| im == i + 1)
    }

    /// All permutations of `1..=degree` in lexicographic image-table order.
    pub fn all(degree: usize) -> Permutations {
        Permutations {
            next: Some((1..=degree).collect()),
        }
    }

    /// Cycle notation with fixed points omitted; the identity prints as `(1)`.
    pub fn cycle_notation(&self) -> String {
        let degree = self.degree();
        let mut seen = vec![false; degree];
        let mut out = String::new();
        for start in 1..=degree {
            if seen[start - 1] || self.apply(start) == start {
                seen[start - 1] = true;
                continue;
            }
            out.push('(');
            let mut s = start;
            loop {
                if s != start {
                    out.push(' ');
                }
                out.push_str(&s.to_string());
                seen[s - 1] = true;
                s = self.apply(s);
                if s == start {
                    break;
                }
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("(1)");
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_notation())
    }
}

/// Iterator over all permutations of a fixed degree in lexicographic order.
pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { images: current })
    }
}

/// Rearranges `a` into its lexicographic successor; false if `a` was last.
fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let Some(i) = (0..a.len() - 1).rev().find(|&i| a[i] < a[i + 1]) else {
        return false;
    };
    let j = a.iter().rposition(|&x| x > a[i]).unwrap();
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}

/// An equivalence class of sequences under symbol relabeling, keyed by its
/// unique standard-order representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern {
    canonical: Sequence,
}

impl Pattern {
    /// The pattern generated by a sequence. Two sequences produce equal
    /// patterns exactly when they are equivalent.
    pub fn of(q: &Sequence) -> Pattern {
        Pattern {
            canonical: q.standardize(),
        }
    }

    pub fn canonical(&self) -> &Sequence {
        &self.canonical
    }

    pub fn len(&self) -> usize {
        self.canonical.len()
    }

    /// Always false; see [`Sequence::is_empty`].
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn level(&self) -> usize {
        self.canonical.level()
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical)
    }
}

/// An ordered set of `k >= 2` sequences sharing one length and level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceSet {
    sequences: Vec<Sequence>,
}

impl SequenceSet {
    pub fn new(sequences: Vec<Sequence>) -> Result<Self> {
        if sequences.len() < 2 {
            return Err(Error::ArityError {
                k: sequences.len(),
            });
        }
        let n = sequences[0].len();
        let level = sequences[0].level();
        for q in &sequences[1..] {
            if q.len() != n || q.level() != level {
                return Err(Error::ShapeMismatch(format!(
                    "expected shape ({n}, {level}), found ({}, {})",
                    q.len(),
                    q.level()
                )));
            }
        }
        Ok(SequenceSet { sequences })
    }

    /// Number of sequences in the set.
    pub fn k(&self) -> usize {
        self.sequences.len()
    }

    /// Common sequence length `n`.
    pub fn len(&self) -> usize {
        self.sequences[0].len()
    }

    /// Always false; the set holds at least two nonempty sequences.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn level(&self) -> usize {
        self.sequences[0].level()
    }

    pub fn sequences(&self) -> &[Sequence] {
        &self.sequences
    }

    /// The `i`-th cross section: the row of `i`-th elements (0-based index).
    pub fn cross_section(&self, i: usize) -> CrossSection {
        CrossSection {
            elements: self.sequences.iter().map(|q| q.elements()[i]).collect(),
        }
    }

    /// All `n` cross sections in index order.
    pub fn cross_sections(&self) -> Vec<CrossSection> {
        (0..self.len()).map(|i| self.cross_section(i)).collect()
    }

    /// Applies one permutation per sequence: `perms[j]` relabels sequence `j`.
    pub fn apply(&self, perms: &[Permutation]) -> Result<SequenceSet> {
        if perms.len() != self.k() {
            return Err(Error::InvalidParameter(format!(
                "expected {} permutations, got {}",
                self.k(),
                perms.len()
            )));
        }
        let sequences = self
            .sequences
            .iter()
            .zip(perms)
            .map(|(q, phi)| q.apply(phi))
            .collect::<Result<Vec<_>>>()?;
        Ok(SequenceSet { sequences })
    }
}

/// A row of `k >= 2` symbols: the elements of a sequence set at one index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CrossSection {
    elements: Vec<usize>,
}

impl CrossSection {
    pub fn new(elements: Vec<usize>) -> Result<Self> {
        if elements.len() < 2 {
            return Err(Error::ArityError {
                k: elements.len(),
            });
        }
        if let Some(&bad) = elements.iter().find(|&&e| e < 1) {
            return Err(Error::InvalidParameter(format!(
                "cross section symbol {bad} must be positive"
            )));
        }
        Ok(CrossSection { elements })
    }

    pub fn k(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn first(&self) -> usize {
        self.elements[0]
    }

    /// True iff all elements are identical.
    pub fn is_constant(&self) -> bool {
        self.elements.iter().all(|&e| e == self.elements[0])
    }

    /// True iff the sections agree at every coordinate.
    pub fn is_identical_to(&self, other: &CrossSection) -> bool {
        self.elements == other.elements
    }

    /// True iff the sections differ at every coordinate.
    pub fn is_incompatible_with(&self, other: &CrossSection) -> bool {
        self.elements.len() == other.elements.len()
            && self
                .elements
                .iter()
                .zip(&other.elements)
                .all(|(a, b)| a != b)
    }
}

impl fmt::Display for CrossSection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}
