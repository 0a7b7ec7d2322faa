//! The maximal pattern distance in closed form and constructions attaining
//! it.
//!
//! Among all sets of `k` patterns of length `n` and level `l`, the largest
//! possible distance is `n - ceil(n / l^(k-1))`. The lower bound comes from
//! links: the `l^(k-1)` orbits of cross sections under the cyclic symbol
//! shift partition all cross sections into pairwise incompatible families,
//! so by pigeonhole some `ceil(n / l^(k-1))` cross sections of any set can be
//! made constant together. The bound is attained by stacking copies of the
//! canonical block [`construct_m`], whose rows list every cross section with
//! first element 1 in lexicographic order.

use crate::core::{CrossSection, Permutation, Sequence, SequenceSet};
use crate::enumeration::checked_factorial_u128;
use crate::error::{Error, Result};

/// Default ceiling on `(level!)^(k-1)` for the brute-force completeness
/// quantifiers.
pub const DEFAULT_SEARCH_BUDGET: u128 = 1_000_000;

/// Parameters of an extremal instance, with the Euclidean decomposition
/// `n = m * level^(k-1) + r`, `0 <= r < level^(k-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtremalParams {
    n: usize,
    level: usize,
    k: usize,
    m: usize,
    r: usize,
}

impl ExtremalParams {
    pub fn new(n: usize, level: usize, k: usize) -> Result<Self> {
        validate(n, level, k)?;
        let (m, r) = match block_size(level, k) {
            Some(block) => {
                let m = (n as u128 / block) as usize;
                let r = (n as u128 % block) as usize;
                (m, r)
            }
            // block size exceeds u128, hence exceeds n
            None => (0, n),
        };
        Ok(ExtremalParams { n, level, k, m, r })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `(m, r)` with `n = m * level^(k-1) + r`.
    pub fn decomposition(&self) -> (usize, usize) {
        (self.m, self.r)
    }

    /// `level^(k-1)`, if it fits a u128.
    pub fn block_size(&self) -> Option<u128> {
        block_size(self.level, self.k)
    }
}

fn validate(n: usize, level: usize, k: usize) -> Result<()> {
    if n < 1 {
        return Err(Error::InvalidParameter("length must be at least 1".into()));
    }
    if level < 1 {
        return Err(Error::InvalidParameter("level must be at least 1".into()));
    }
    if k < 2 {
        return Err(Error::InvalidParameter(
            "set size k must be at least 2".into(),
        ));
    }
    Ok(())
}

fn block_size(level: usize, k: usize) -> Option<u128> {
    (level as u128).checked_pow(u32::try_from(k - 1).ok()?)
}

/// The maximal distance of `k` patterns of length `n` and level `level`:
/// `n - ceil(n / level^(k-1))`.
pub fn max_distance(n: usize, level: usize, k: usize) -> Result<usize> {
    validate(n, level, k)?;
    let ceil = match block_size(level, k) {
        Some(block) if block < n as u128 => (n as u128).div_ceil(block) as usize,
        _ => 1,
    };
    Ok(n - ceil)
}

/// The orbit of a first-class cross section under the cyclic symbol shift.
///
/// The shift sends every symbol `s` to `s + 1`, wrapping `level` to 1.
/// Starting from a cross section whose first element is 1, iterating it
/// `level` times yields `level` pairwise incompatible cross sections, one per
/// first-element class.
pub fn link(c: &CrossSection, level: usize) -> Result<Vec<CrossSection>> {
    if let Some(&bad) = c.elements().iter().find(|&&e| e > level) {
        return Err(Error::SymbolOutOfRange { symbol: bad, level });
    }
    if c.first() != 1 {
        return Err(Error::NotInFirstClass { first: c.first() });
    }
    let mut orbit = Vec::with_capacity(level);
    let mut current = c.clone();
    for _ in 0..level {
        let next: Vec<usize> = current
            .elements()
            .iter()
            .map(|&s| s % level + 1)
            .collect();
        orbit.push(current);
        current = CrossSection::new(next).expect("shift preserves validity");
    }
    Ok(orbit)
}

/// Row `t` of the canonical block: the `t`-th cross section with first
/// element 1, in lexicographic order.
fn block_row(level: usize, k: usize, mut t: u128) -> Vec<usize> {
    let mut row = vec![1usize; k];
    for slot in row.iter_mut().skip(1).rev() {
        *slot = (t % level as u128) as usize + 1;
        t /= level as u128;
    }
    row
}

fn columns_to_set(rows: &[Vec<usize>], level: usize, k: usize) -> Result<SequenceSet> {
    let sequences: Vec<Sequence> = (0..k)
        .map(|j| {
            Sequence::new(rows.iter().map(|row| row[j]).collect(), level)
                .expect("rows hold valid symbols")
        })
        .collect();
    SequenceSet::new(sequences)
}

/// The canonical block `M`: `k` sequences of length `level^(k-1)` whose
/// cross sections are exactly the first-class cross sections in
/// lexicographic order. The first sequence is constant, and no two cross
/// sections are connected, so the block's patterns sit at distance
/// `level^(k-1) - 1`.
pub fn construct_m(level: usize, k: usize) -> Result<SequenceSet> {
    validate(1, level, k)?;
    let block = block_size(level, k)
        .and_then(|b| usize::try_from(b).ok())
        .ok_or_else(|| {
            Error::InvalidParameter(format!("level^(k-1) too large for level {level}, k {k}"))
        })?;
    let rows: Vec<Vec<usize>> = (0..block)
        .map(|t| block_row(level, k, t as u128))
        .collect();
    columns_to_set(&rows, level, k)
}

/// The length-`n` extremal construction: `m` copies of the canonical block
/// stacked over its first `r` rows, where `n = m * level^(k-1) + r`. Its
/// patterns attain the maximal distance `n - ceil(n / level^(k-1))`.
pub fn construct_mn(n: usize, level: usize, k: usize) -> Result<SequenceSet> {
    validate(n, level, k)?;
    let block = block_size(level, k);
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            let t = match block {
                Some(b) => i as u128 % b,
                None => i as u128,
            };
            block_row(level, k, t)
        })
        .collect();
    columns_to_set(&rows, level, k)
}

/// True iff every permutation tuple leaves at most one constant cross
/// section. Brute force over `{identity} x S_l^(k-1)` with the default
/// budget.
pub fn is_semi_complete(q: &SequenceSet) -> Result<bool> {
    is_semi_complete_with_budget(q, DEFAULT_SEARCH_BUDGET)
}

/// See [`is_semi_complete`].
pub fn is_semi_complete_with_budget(q: &SequenceSet, budget: u128) -> Result<bool> {
    quantify(q, budget, |constants| constants <= 1)
}

/// True iff every permutation tuple leaves exactly one constant cross
/// section. Brute force over `{identity} x S_l^(k-1)` with the default
/// budget.
pub fn is_complete(q: &SequenceSet) -> Result<bool> {
    is_complete_with_budget(q, DEFAULT_SEARCH_BUDGET)
}

/// See [`is_complete`].
pub fn is_complete_with_budget(q: &SequenceSet, budget: u128) -> Result<bool> {
    quantify(q, budget, |constants| constants == 1)
}

/// Checks a predicate on the constant-section count of `Phi(Q)` for every
/// tuple `Phi` with identity first; composing a tuple with a common left
/// factor preserves constant sections, so this covers all of `S_l^k`.
fn quantify(
    q: &SequenceSet,
    budget: u128,
    predicate: impl Fn(usize) -> bool,
) -> Result<bool> {
    let level = q.level();
    let k = q.k();
    let space = checked_factorial_u128(level)
        .and_then(|f| f.checked_pow(u32::try_from(k - 1).ok()?))
        .unwrap_or(u128::MAX);
    if space > budget {
        return Err(Error::SearchSpaceTooLarge {
            size: space,
            budget,
        });
    }
    let rows = q.sequences();
    let n = q.len();
    let perms: Vec<Permutation> = Permutation::all(level).collect();
    let mut indices = vec![0usize; k - 1];
    loop {
        let mut constants = 0usize;
        'position: for i in 0..n {
            let target = rows[0].elements()[i];
            for (j, &p) in indices.iter().enumerate() {
                if perms[p].apply(rows[j + 1].elements()[i]) != target {
                    continue 'position;
                }
            }
            constants += 1;
        }
        if !predicate(constants) {
            return Ok(false);
        }
        let mut advanced = false;
        for digit in indices.iter_mut().rev() {
            *digit += 1;
            if *digit < perms.len() {
                advanced = true;
                break;
            }
            *digit = 0;
        }
        if !advanced {
            return Ok(true);
        }
    }
}
