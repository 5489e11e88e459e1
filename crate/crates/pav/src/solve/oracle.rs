//! Brute-force ground truth: subset search in decreasing size order.

use crate::class::{Limits, PatternClass};
use crate::error::{Error, Result};
use crate::perm::Permutation;

use super::SolverResult;

/// Examines position subsets in decreasing size order (lexicographic within a
/// size) and returns the first whose pattern belongs to the class, so the
/// witness is the lexicographically least among maximum-size witnesses.
///
/// Exponential; refuses inputs longer than `limits.oracle_n`.
pub fn lps_oracle(p: &Permutation, class: &PatternClass, limits: &Limits) -> Result<SolverResult> {
    let n = p.len();
    if n > limits.oracle_n {
        return Err(Error::limit(format!(
            "oracle limited to length {} (got {n})",
            limits.oracle_n
        )));
    }
    for m in (1..=n).rev() {
        let mut comb: Vec<usize> = (0..m).collect();
        loop {
            let pat = p.pattern_at(&comb);
            if class.contains(&pat, limits)? {
                return Ok(SolverResult {
                    length: m,
                    witness: comb.iter().map(|&i| i + 1).collect(),
                });
            }
            if !next_combination(&mut comb, n) {
                break;
            }
        }
    }
    // Every class here contains the empty permutation.
    Ok(SolverResult::empty())
}

/// Advances `comb` to the next size-`m` combination of `0..n` in
/// lexicographic order; returns false after the last one.
fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let m = comb.len();
    let mut i = m;
    while i > 0 {
        i -= 1;
        if comb[i] < n - m + i {
            comb[i] += 1;
            for j in i + 1..m {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solve::assert_valid_witness;

    fn pd(s: &str) -> Permutation {
        let values: Vec<u32> = s.chars().map(|c| c.to_digit(10).unwrap()).collect();
        Permutation::new(values).unwrap()
    }

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn oracle_examples() {
        let inc = PatternClass::av(&["21"]).unwrap();
        let r = lps_oracle(&pd("2314"), &inc, &lim()).unwrap();
        assert_eq!(r.length, 3);
        assert_eq!(r.witness, vec![1, 2, 4]);

        let r = lps_oracle(&pd("321"), &inc, &lim()).unwrap();
        assert_eq!(r.length, 1);
        assert_eq!(r.witness, vec![1]);
    }

    #[test]
    fn member_input_is_its_own_witness() {
        let layered = PatternClass::av(&["231", "312"]).unwrap();
        let p = pd("21435");
        let r = lps_oracle(&p, &layered, &lim()).unwrap();
        assert_eq!(r.length, p.len());
        assert_eq!(r.witness, vec![1, 2, 3, 4, 5]);
        assert_valid_witness(&r, &p, &layered, &lim());
    }

    #[test]
    fn empty_input() {
        let inc = PatternClass::av(&["21"]).unwrap();
        let r = lps_oracle(&Permutation::empty(), &inc, &lim()).unwrap();
        assert_eq!(r.length, 0);
    }

    #[test]
    fn oracle_respects_limit() {
        let inc = PatternClass::av(&["21"]).unwrap();
        let p = Permutation::identity(17);
        let err = lps_oracle(&p, &inc, &lim()).unwrap_err();
        assert!(err.to_string().contains("16"));
    }

    #[test]
    fn combinations_are_lexicographic_and_complete() {
        let mut comb = vec![0, 1];
        let mut seen = vec![comb.clone()];
        while next_combination(&mut comb, 4) {
            seen.push(comb.clone());
        }
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }
}
