//! Longest increasing subsequence by patience sorting.

use crate::perm::Permutation;

use super::SolverResult;

/// Longest increasing subsequence with a witness, `O(n log L)`.
///
/// Pile tops are kept sorted; each element lands on the leftmost pile whose
/// top exceeds it (binary search) and remembers the top of the pile to its
/// left, which threads the witness.
pub fn lis(p: &Permutation) -> SolverResult {
    let values = p.values();
    if values.is_empty() {
        return SolverResult::empty();
    }
    // tops[j] = index of the current top of pile j.
    let mut tops: Vec<usize> = Vec::new();
    let mut prev: Vec<usize> = vec![usize::MAX; values.len()];
    for (i, &v) in values.iter().enumerate() {
        let j = tops.partition_point(|&t| values[t] < v);
        if j == tops.len() {
            tops.push(i);
        } else {
            tops[j] = i;
        }
        if j > 0 {
            prev[i] = tops[j - 1];
        }
    }
    let mut witness = Vec::with_capacity(tops.len());
    let mut at = *tops.last().unwrap();
    loop {
        witness.push(at);
        if prev[at] == usize::MAX {
            break;
        }
        at = prev[at];
    }
    SolverResult::from_positions0(witness)
}

/// Length-only patience pass over raw values.
pub fn lis_len(values: &[u32]) -> usize {
    let mut tops: Vec<u32> = Vec::new();
    for &v in values {
        let j = tops.partition_point(|&t| t < v);
        if j == tops.len() {
            tops.push(v);
        } else {
            tops[j] = v;
        }
    }
    tops.len()
}
