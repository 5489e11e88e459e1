//! Permutations in one-line notation and the pattern order on them.
//!
//! A [`Permutation`] stores a rearrangement of `1..=n`. Arbitrary sequences
//! of distinct values from a linearly ordered carrier are reduced to their
//! [`pattern`](Permutation::pattern_of), the unique permutation with the same
//! relative order, so every algorithm downstream works on one canonical
//! representation.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `{1, 2, ..., n}` written in one-line notation.
///
/// The empty permutation (`n = 0`) is a valid value; it is involved in every
/// permutation and acts as the identity for [`direct_sum`](Self::direct_sum)
/// and [`skew_sum`](Self::skew_sum).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    values: Vec<u32>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({})", self)
    }
}

impl fmt::Display for Permutation {
    /// One-line notation with spaces, e.g. `2 5 3 1 4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.values {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{}", v)?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses the one-line text format: space-separated positive integers,
    /// one permutation per line. Rejects anything that is not a bijection on
    /// `{1..n}`.
    fn from_str(s: &str) -> Result<Self> {
        let mut values = Vec::new();
        for tok in s.split_whitespace() {
            let v: u32 = tok
                .parse()
                .map_err(|_| Error::invalid(format!("not a positive integer: {tok:?}")))?;
            values.push(v);
        }
        Permutation::new(values)
    }
}

impl Permutation {
    /// Builds a permutation from explicit one-line values, checking that they
    /// form a bijection on `{1..n}`.
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n];
        for &v in &values {
            if v == 0 || v as usize > n {
                return Err(Error::invalid(format!(
                    "value {v} out of range for a permutation of length {n}"
                )));
            }
            if seen[v as usize - 1] {
                return Err(Error::invalid(format!("value {v} appears twice")));
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation { values })
    }

    /// The empty permutation.
    pub fn empty() -> Self {
        Permutation { values: Vec::new() }
    }

    /// The identity `1 2 ... n`.
    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n as u32).collect(),
        }
    }

    /// The decreasing permutation `n ... 2 1`.
    pub fn decreasing(n: usize) -> Self {
        Permutation {
            values: (1..=n as u32).rev().collect(),
        }
    }

    /// Builds a permutation from values already known to be valid.
    pub(crate) fn from_trusted(values: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The one-line values, each in `1..=n`.
    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// The pattern of a sequence of distinct values: the permutation whose
    /// entries are in the same relative order as the input.
    ///
    /// Fails on duplicate entries and on values that do not compare (NaN).
    /// `pattern_of(p.values()) == p` for any permutation `p`.
    pub fn pattern_of<T: PartialOrd>(seq: &[T]) -> Result<Self> {
        let n = seq.len();
        let mut idx: Vec<usize> = (0..n).collect();
        let mut bad = false;
        idx.sort_by(|&a, &b| match seq[a].partial_cmp(&seq[b]) {
            Some(ord) => ord,
            None => {
                bad = true;
                Ordering::Equal
            }
        });
        if bad {
            return Err(Error::invalid("sequence contains incomparable values"));
        }
        for w in idx.windows(2) {
            if seq[w[0]].partial_cmp(&seq[w[1]]) != Some(Ordering::Less) {
                return Err(Error::invalid("sequence contains duplicate values"));
            }
        }
        let mut values = vec![0u32; n];
        for (rank, &i) in idx.iter().enumerate() {
            values[i] = rank as u32 + 1;
        }
        Ok(Permutation { values })
    }

    /// Pattern of the entries of `self` selected by `positions` (0-based,
    /// strictly increasing).
    pub(crate) fn pattern_at(&self, positions: &[usize]) -> Permutation {
        pattern_of_distinct(positions.iter().map(|&i| self.values[i]))
    }

    /// Whether some subsequence of `self` has the same relative order as `q`.
    ///
    /// The empty pattern is involved in everything. Backtracking over
    /// candidate embeddings with interval pruning on the admissible values;
    /// exponential in `|q|` in the worst case, which is fine for the short
    /// patterns used as avoidance bases.
    pub fn involves(&self, q: &Permutation) -> bool {
        let k = q.len();
        if k == 0 {
            return true;
        }
        if k > self.len() {
            return false;
        }
        let mut chosen = vec![0u32; k];
        self.involves_from(q, 0, 0, &mut chosen)
    }

    fn involves_from(&self, q: &Permutation, depth: usize, start: usize, chosen: &mut [u32]) -> bool {
        let k = q.len();
        let n = self.len();
        // Admissible value window for q's next entry, from entries already placed.
        let mut lo = 0u32;
        let mut hi = u32::MAX;
        for i in 0..depth {
            if q.values[i] < q.values[depth] {
                lo = lo.max(chosen[i]);
            } else {
                hi = hi.min(chosen[i]);
            }
        }
        for pos in start..=(n - (k - depth)) {
            let v = self.values[pos];
            if v <= lo || v >= hi {
                continue;
            }
            chosen[depth] = v;
            if depth + 1 == k || self.involves_from(q, depth + 1, pos + 1, chosen) {
                return true;
            }
        }
        false
    }

    /// Whether a subsequence ending exactly at the last entry of `self`
    /// matches `q`. Used by incremental avoidance pruning.
    pub(crate) fn involves_ending_at_last(&self, q: &Permutation) -> bool {
        involves_ending_at_last(&self.values, q)
    }

    /// Direct sum: `self` followed by `b` shifted above it.
    pub fn direct_sum(&self, b: &Permutation) -> Permutation {
        let shift = self.len() as u32;
        let mut values = self.values.clone();
        values.extend(b.values.iter().map(|&v| v + shift));
        Permutation { values }
    }

    /// Skew sum: `self` shifted above `b`, followed by `b`.
    pub fn skew_sum(&self, b: &Permutation) -> Permutation {
        let shift = b.len() as u32;
        let mut values: Vec<u32> = self.values.iter().map(|&v| v + shift).collect();
        values.extend_from_slice(&b.values);
        Permutation { values }
    }

    /// All cyclic rotations by position. Entry `k` is
    /// `p[k+1..n] p[1..k]`; entry 0 is `self`. Errors on the empty
    /// permutation, which has no rotations.
    pub fn cyclic_rotations(&self) -> Result<Vec<Permutation>> {
        let n = self.len();
        if n == 0 {
            return Err(Error::invalid("the empty permutation has no cyclic rotations"));
        }
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let mut values = Vec::with_capacity(n);
            values.extend_from_slice(&self.values[k..]);
            values.extend_from_slice(&self.values[..k]);
            out.push(Permutation { values });
        }
        Ok(out)
    }

    /// Positions reversed.
    pub fn reverse(&self) -> Permutation {
        let mut values = self.values.clone();
        values.reverse();
        Permutation { values }
    }

    /// Values flipped: `v` becomes `n + 1 - v`.
    pub fn complement(&self) -> Permutation {
        let n = self.len() as u32;
        Permutation {
            values: self.values.iter().map(|&v| n + 1 - v).collect(),
        }
    }

    /// Functional inverse: entry `v` of the result is the position of `v` in
    /// `self`.
    pub fn inverse(&self) -> Permutation {
        let mut values = vec![0u32; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            values[v as usize - 1] = i as u32 + 1;
        }
        Permutation { values }
    }

    /// The three generating symmetries of the pattern order.
    pub fn symmetries(&self) -> Symmetries {
        Symmetries {
            reverse: self.reverse(),
            complement: self.complement(),
            inverse: self.inverse(),
        }
    }
}

/// The images of a permutation under the reverse, complement and inverse
/// symmetries. Each is an involution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Symmetries {
    pub reverse: Permutation,
    pub complement: Permutation,
    pub inverse: Permutation,
}

/// A finite sequence of mutually distinct values from a linearly ordered
/// carrier, together with its pattern.
#[derive(Debug, Clone)]
pub struct DistinctSequence<T> {
    values: Vec<T>,
    pattern: Permutation,
}

impl<T: PartialOrd> DistinctSequence<T> {
    /// Validates distinctness (and comparability) of the entries.
    pub fn new(values: Vec<T>) -> Result<Self> {
        let pattern = Permutation::pattern_of(&values)?;
        Ok(DistinctSequence { values, pattern })
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The permutation with the same relative order as this sequence.
    pub fn pattern(&self) -> &Permutation {
        &self.pattern
    }
}

/// Pattern of an iterator of distinct `u32` values (internal fast path; the
/// caller guarantees distinctness).
pub(crate) fn pattern_of_distinct(values: impl Iterator<Item = u32>) -> Permutation {
    let vals: Vec<u32> = values.collect();
    let n = vals.len();
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_unstable_by_key(|&i| vals[i]);
    let mut out = vec![0u32; n];
    for (rank, &i) in idx.iter().enumerate() {
        out[i] = rank as u32 + 1;
    }
    Permutation::from_trusted(out)
}

/// Whether `seq` (distinct values) has a subsequence matching `q` that uses
/// the final entry of `seq` as the final entry of the occurrence.
pub(crate) fn involves_ending_at_last(seq: &[u32], q: &Permutation) -> bool {
    let k = q.len();
    if k == 0 {
        return true;
    }
    if k > seq.len() {
        return false;
    }
    let last = seq[seq.len() - 1];
    let mut chosen = vec![0u32; k];
    chosen[k - 1] = last;
    fn rec(seq: &[u32], q: &[u32], depth: usize, start: usize, chosen: &mut [u32]) -> bool {
        let k = q.len();
        if depth == k - 1 {
            return true;
        }
        let mut lo = 0u32;
        let mut hi = u32::MAX;
        for i in 0..depth {
            if q[i] < q[depth] {
                lo = lo.max(chosen[i]);
            } else {
                hi = hi.min(chosen[i]);
            }
        }
        // The final entry is pre-committed; respect its order constraint too.
        if q[k - 1] < q[depth] {
            lo = lo.max(chosen[k - 1]);
        } else {
            hi = hi.min(chosen[k - 1]);
        }
        for pos in start..=(seq.len() - 1 - (k - 1 - depth)) {
            let v = seq[pos];
            if v <= lo || v >= hi {
                continue;
            }
            chosen[depth] = v;
            if rec(seq, q, depth + 1, pos + 1, chosen) {
                return true;
            }
        }
        false
    }
    rec(seq, &q.values, 0, 0, &mut chosen)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    /// Shorthand for digit-string literals like "2413".
    fn pd(s: &str) -> Permutation {
        let values: Vec<u32> = s.chars().map(|c| c.to_digit(10).unwrap()).collect();
        Permutation::new(values).unwrap()
    }

    #[test]
    fn parse_one_line() {
        assert_eq!(p("2 5 3 1 4").values(), &[2, 5, 3, 1, 4]);
        assert_eq!(p("").len(), 0);
        assert!("1 1".parse::<Permutation>().is_err());
        assert!("0 1".parse::<Permutation>().is_err());
        assert!("2 3".parse::<Permutation>().is_err());
        assert!("1 x".parse::<Permutation>().is_err());
    }

    #[test]
    fn display_round_trips() {
        let q = p("2 5 3 1 4");
        assert_eq!(q.to_string(), "2 5 3 1 4");
        assert_eq!(q.to_string().parse::<Permutation>().unwrap(), q);
    }

    #[test]
    fn pattern_of_examples() {
        assert_eq!(Permutation::pattern_of(&[3.1, 0.5, 2.2]).unwrap(), pd("312"));
        assert_eq!(Permutation::pattern_of(&[1, 2, 3]).unwrap(), pd("123"));
        assert_eq!(Permutation::pattern_of(&[10, 40, 20, 30]).unwrap(), pd("1423"));
        assert!(Permutation::pattern_of(&[1, 1]).is_err());
        assert!(Permutation::pattern_of(&[f64::NAN, 1.0]).is_err());
        assert_eq!(Permutation::pattern_of::<u32>(&[]).unwrap(), Permutation::empty());
    }

    #[test]
    fn pattern_of_fixes_permutations() {
        let q = p("2 5 3 1 4");
        assert_eq!(Permutation::pattern_of(q.values()).unwrap(), q);
    }

    #[test]
    fn distinct_sequence_rejects_duplicates() {
        assert!(DistinctSequence::new(vec![1.0, 2.0, 1.0]).is_err());
        let s = DistinctSequence::new(vec![10, 40, 20, 30]).unwrap();
        assert_eq!(s.pattern(), &pd("1423"));
    }

    #[test]
    fn involvement_examples() {
        assert!(pd("25314").involves(&pd("231")));
        let q = pd("25314");
        assert!(q.involves(&q));
        assert!(!pd("123").involves(&pd("21")));
        assert!(pd("123").involves(&Permutation::empty()));
        assert!(Permutation::empty().involves(&Permutation::empty()));
        assert!(!pd("12").involves(&pd("123")));
    }

    #[test]
    fn involvement_ending_at_last() {
        assert!(involves_ending_at_last(&[2, 5, 1], &pd("231")));
        assert!(!involves_ending_at_last(&[2, 5, 1, 4], &pd("231")));
        assert!(involves_ending_at_last(&[5, 1], &pd("21")));
        assert!(!involves_ending_at_last(&[1, 5], &pd("21")));
    }

    #[test]
    fn sums() {
        assert_eq!(pd("21").direct_sum(&pd("1")), pd("213"));
        assert_eq!(Permutation::empty().direct_sum(&pd("21")), pd("21"));
        assert_eq!(pd("12").direct_sum(&pd("21")), pd("1243"));
        assert_eq!(pd("1").skew_sum(&pd("21")), pd("321"));
        assert_eq!(Permutation::empty().skew_sum(&pd("12")), pd("12"));
        assert_eq!(pd("12").skew_sum(&pd("12")), pd("3412"));
    }

    #[test]
    fn rotations() {
        let r = pd("123").cyclic_rotations().unwrap();
        assert_eq!(r, vec![pd("123"), pd("231"), pd("312")]);
        assert_eq!(pd("1").cyclic_rotations().unwrap(), vec![pd("1")]);
        let r = pd("2413").cyclic_rotations().unwrap();
        assert_eq!(r, vec![pd("2413"), pd("4132"), pd("1324"), pd("3241")]);
        assert!(Permutation::empty().cyclic_rotations().is_err());
    }

    #[test]
    fn symmetry_examples() {
        assert_eq!(pd("123").reverse(), pd("321"));
        assert_eq!(pd("231").complement(), pd("213"));
        assert_eq!(pd("312").inverse(), pd("231"));
    }

    #[test]
    fn symmetries_are_involutions() {
        for s in ["2 5 3 1 4", "1", "", "4 2 1 3"] {
            let q = p(s);
            assert_eq!(q.reverse().reverse(), q);
            assert_eq!(q.complement().complement(), q);
            assert_eq!(q.inverse().inverse(), q);
        }
    }

    #[test]
    fn reverse_swaps_sum_kinds() {
        let a = pd("21");
        let b = pd("132");
        assert_eq!(
            a.direct_sum(&b).reverse(),
            b.reverse().skew_sum(&a.reverse())
        );
    }
}
