//! Exact counting of patterns by three independent routes: an orbit count
//! over the symbol group, a Stirling-number sum over standard sequences, and
//! direct enumeration of standard sequences. Bell numbers cover the `n <= l`
//! case, where patterns are in bijection with set partitions.
//!
//! All arithmetic is exact big-integer arithmetic. The closed formulas involve
//! alternating sums with factorial denominators; evaluated naively in floating
//! point they lose integrality, so the derangement and Stirling recurrences
//! are used instead.

use std::fmt;

use num_bigint::BigUint;

use crate::core::Sequence;
use crate::error::{Error, Result};

/// An exact nonnegative pattern count.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PatternCount(BigUint);

impl PatternCount {
    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }
}

impl From<BigUint> for PatternCount {
    fn from(v: BigUint) -> Self {
        PatternCount(v)
    }
}

impl From<u64> for PatternCount {
    fn from(v: u64) -> Self {
        PatternCount(BigUint::from(v))
    }
}

impl From<u32> for PatternCount {
    fn from(v: u32) -> Self {
        PatternCount(BigUint::from(v))
    }
}

impl fmt::Display for PatternCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

fn validate(n: usize, level: usize) -> Result<()> {
    if n < 1 {
        return Err(Error::InvalidParameter("length must be at least 1".into()));
    }
    if level < 1 {
        return Err(Error::InvalidParameter("level must be at least 1".into()));
    }
    Ok(())
}

fn factorial(m: usize) -> BigUint {
    let mut f = BigUint::from(1u32);
    for i in 2..=m {
        f *= BigUint::from(i);
    }
    f
}

/// `m!` as a machine integer, `None` on overflow. Shared by the modules that
/// size brute-force search spaces before entering them.
pub(crate) fn checked_factorial_u128(m: usize) -> Option<u128> {
    let mut f: u128 = 1;
    for i in 2..=m as u128 {
        f = f.checked_mul(i)?;
    }
    Some(f)
}

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Derangement numbers `D_0..=D_max` by the recurrence
/// `D_m = (m - 1)(D_{m-1} + D_{m-2})`.
fn derangements(max: usize) -> Vec<BigUint> {
    let mut d = Vec::with_capacity(max + 1);
    d.push(BigUint::from(1u32));
    if max >= 1 {
        d.push(BigUint::from(0u32));
    }
    for m in 2..=max {
        let next = BigUint::from(m - 1) * (&d[m - 1] + &d[m - 2]);
        d.push(next);
    }
    d
}

/// Number of length-`n` level-`level` patterns via the orbit count.
///
/// A permutation deranging exactly `m` symbols fixes the `(level - m)^n`
/// sequences avoiding those symbols, and there are `C(level, m) * D_m` such
/// permutations. Averaging the fixed-sequence counts over the whole group
/// gives the number of orbits; the division by `level!` is exact.
pub fn count_patterns_burnside(n: usize, level: usize) -> Result<PatternCount> {
    validate(n, level)?;
    let exp = u32::try_from(n)
        .map_err(|_| Error::InvalidParameter("length too large".into()))?;
    let mut total = BigUint::from(level).pow(exp);
    let der = derangements(level);
    for (m, der_m) in der.iter().enumerate().skip(2) {
        let fixed = BigUint::from(level - m).pow(exp);
        total += binomial(level, m) * der_m * fixed;
    }
    let group_order = factorial(level);
    let quotient = &total / &group_order;
    debug_assert_eq!(&quotient * &group_order, total, "orbit count must divide");
    Ok(PatternCount(quotient))
}

/// Number of standard sequences of length `n` and level `level`: the sum of
/// Stirling numbers of the second kind `S(n, m)` for `m` up to `level`.
///
/// `S(n, m)` counts the partitions of the `n` positions into exactly `m`
/// symbol classes; a standard sequence is such a partition with classes
/// numbered by first occurrence. Computed by the integer recurrence
/// `S(n, m) = m * S(n-1, m) + S(n-1, m-1)`.
pub fn count_standard_stirling(n: usize, level: usize) -> Result<PatternCount> {
    validate(n, level)?;
    let top = level.min(n);
    // rows of the Stirling table, kept one at a time
    let mut row = vec![BigUint::from(0u32); top + 1];
    row[0] = BigUint::from(1u32);
    for _ in 1..=n {
        for m in (1..=top).rev() {
            let carried = BigUint::from(m) * &row[m] + &row[m - 1];
            row[m] = carried;
        }
        row[0] = BigUint::from(0u32);
    }
    let mut sum = BigUint::from(0u32);
    for value in &row[1..] {
        sum += value;
    }
    Ok(PatternCount(sum))
}

/// The `n`-th Bell number via the Bell triangle.
///
/// Equals the pattern count whenever `n <= level`.
pub fn bell(n: usize) -> PatternCount {
    let mut row = vec![BigUint::from(1u32)];
    for _ in 1..=n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().unwrap().clone());
        for value in &row {
            let last = next.last().unwrap().clone();
            next.push(last + value);
        }
        row = next;
    }
    PatternCount(row[0].clone())
}

/// Iterator over every standard sequence of length `n` and level `level`, in
/// lexicographic order.
///
/// Standard sequences are generated directly in restricted-growth form (each
/// element at most one more than the maximum before it, capped at `level`)
/// rather than by filtering all `level^n` sequences, so the enumeration
/// scales to the sizes the counting cross-checks need.
pub fn enumerate_standard(n: usize, level: usize) -> Result<StandardSequences> {
    validate(n, level)?;
    Ok(StandardSequences {
        level,
        state: Some(State {
            current: vec![1; n],
            prefix_max: vec![1; n],
        }),
    })
}

struct State {
    current: Vec<usize>,
    /// `prefix_max[i]` is the maximum of `current[..=i]`.
    prefix_max: Vec<usize>,
}

/// See [`enumerate_standard`].
pub struct StandardSequences {
    level: usize,
    state: Option<State>,
}

impl Iterator for StandardSequences {
    type Item = Sequence;

    fn next(&mut self) -> Option<Sequence> {
        let state = self.state.as_mut()?;
        let item = Sequence::new_unchecked(state.current.clone(), self.level);
        // Advance to the lexicographic successor: bump the rightmost element
        // that can still grow, reset everything after it to 1.
        let n = state.current.len();
        let mut pos = None;
        for j in (1..n).rev() {
            let cap = (state.prefix_max[j - 1] + 1).min(self.level);
            if state.current[j] < cap {
                pos = Some(j);
                break;
            }
        }
        match pos {
            Some(j) => {
                state.current[j] += 1;
                state.prefix_max[j] = state.prefix_max[j - 1].max(state.current[j]);
                for i in j + 1..n {
                    state.current[i] = 1;
                    state.prefix_max[i] = state.prefix_max[j];
                }
            }
            None => self.state = None,
        }
        Some(item)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(elements: &[usize], level: usize) -> Sequence {
        Sequence::new(elements.to_vec(), level).unwrap()
    }

    #[test]
    fn burnside_known_values() {
        assert_eq!(count_patterns_burnside(4, 2).unwrap(), PatternCount::from(8u32));
        for level in 1..=6 {
            assert_eq!(
                count_patterns_burnside(1, level).unwrap(),
                PatternCount::from(1u32)
            );
        }
        // frozen from the enumeration oracle below
        assert_eq!(count_patterns_burnside(5, 3).unwrap(), PatternCount::from(41u32));
        assert_eq!(
            enumerate_standard(5, 3).unwrap().count(),
            41,
            "oracle backing the frozen value"
        );
    }

    #[test]
    fn stirling_known_values() {
        assert_eq!(count_standard_stirling(3, 3).unwrap(), PatternCount::from(5u32));
        for n in 1..=9 {
            assert_eq!(
                count_standard_stirling(n, 1).unwrap(),
                PatternCount::from(1u32)
            );
        }
        assert_eq!(
            count_standard_stirling(5, 3).unwrap(),
            count_patterns_burnside(5, 3).unwrap()
        );
    }

    #[test]
    fn bell_known_values() {
        let expect = [1u32, 1, 2, 5, 15, 52, 203, 877, 4140];
        for (n, &b) in expect.iter().enumerate() {
            assert_eq!(bell(n), PatternCount::from(b), "B_{n}");
        }
        assert_eq!(bell(3), count_standard_stirling(3, 3).unwrap());
        assert_eq!(bell(5), count_patterns_burnside(5, 5).unwrap());
        assert_eq!(enumerate_standard(5, 5).unwrap().count(), 52);
    }

    #[test]
    fn enumerate_small_cases() {
        let two: Vec<Sequence> = enumerate_standard(2, 2).unwrap().collect();
        assert_eq!(two, vec![seq(&[1, 1], 2), seq(&[1, 2], 2)]);

        let five: Vec<Sequence> = enumerate_standard(3, 3).unwrap().collect();
        assert_eq!(
            five,
            vec![
                seq(&[1, 1, 1], 3),
                seq(&[1, 1, 2], 3),
                seq(&[1, 2, 1], 3),
                seq(&[1, 2, 2], 3),
                seq(&[1, 2, 3], 3),
            ]
        );

        assert_eq!(enumerate_standard(4, 2).unwrap().count(), 8);
    }

    #[test]
    fn enumerate_is_lexicographic_standard_and_distinct() {
        let all: Vec<Sequence> = enumerate_standard(6, 3).unwrap().collect();
        assert!(all.iter().all(|q| q.is_standard()));
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn triple_agreement_smoke() {
        for n in 1..=5 {
            for level in 1..=3 {
                let burnside = count_patterns_burnside(n, level).unwrap();
                let stirling = count_standard_stirling(n, level).unwrap();
                let enumerated = enumerate_standard(n, level).unwrap().count();
                assert_eq!(burnside, stirling, "n={n} level={level}");
                assert_eq!(burnside, PatternCount::from(enumerated as u64));
            }
        }
    }

    #[test]
    fn count_matches_bell_when_level_is_large() {
        for n in 1..=6 {
            for level in n..=6 {
                assert_eq!(count_patterns_burnside(n, level).unwrap(), bell(n));
            }
        }
    }

    #[test]
    fn counts_are_monotone() {
        for n in 1..=7usize {
            for level in 1..=4usize {
                let here = count_patterns_burnside(n, level).unwrap();
                let wider = count_patterns_burnside(n, level + 1).unwrap();
                assert!(here <= wider);
                if level >= 2 {
                    let longer = count_patterns_burnside(n + 1, level).unwrap();
                    assert!(here < longer);
                }
            }
        }
    }

    #[test]
    fn invalid_parameters_rejected() {
        assert!(matches!(
            count_patterns_burnside(0, 3),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            count_standard_stirling(3, 0),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            enumerate_standard(0, 1),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn factorial_u128_overflow_is_caught() {
        assert_eq!(checked_factorial_u128(0), Some(1));
        assert_eq!(checked_factorial_u128(5), Some(120));
        assert!(checked_factorial_u128(40).is_none());
    }
}
