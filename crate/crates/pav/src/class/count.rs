//! Exact enumeration of avoidance classes by length.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{involves_ending_at_last, pattern_of_distinct, Permutation};

use super::{Limits, PatternClass};

/// Counts `|C intersect S_n|` for `n = 1..=N`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CountSequence {
    /// Mini-language expression of the class counted.
    pub class_expr: String,
    /// `counts[i]` is the number of members of length `i + 1`.
    pub counts: Vec<u64>,
    /// All counting here is exhaustive.
    pub exact: bool,
}

impl CountSequence {
    pub fn count_for(&self, n: usize) -> Option<u64> {
        self.counts.get(n.checked_sub(1)?).copied()
    }
}

/// Counts the members of `class` of each length `1..=max_n` exactly.
///
/// Leaf classes walk the prefix-pattern tree: a permutation is built by
/// repeatedly appending a new rightmost value given by its rank, and a branch
/// dies as soon as a basis pattern occurs (valid because avoidance classes
/// are closed under pattern containment). Composite classes walk the same
/// tree pruned by full membership, which the constructions also permit since
/// each is downward closed.
pub fn count_avoiders(
    class: &PatternClass,
    max_n: usize,
    limits: &Limits,
) -> Result<CountSequence> {
    let leaf = matches!(class, PatternClass::Leaf { .. });
    let cap = if leaf {
        limits.leaf_count_n
    } else {
        limits.composite_count_n
    };
    if max_n > cap {
        return Err(Error::limit(format!(
            "exhaustive counting for this class is limited to n <= {cap} (requested {max_n})"
        )));
    }
    let mut counts = vec![0u64; max_n];
    if max_n == 0 {
        return Ok(CountSequence {
            class_expr: class.expr(),
            counts,
            exact: true,
        });
    }

    // Work items: surviving prefixes at the split depth, extended in parallel.
    let split = max_n.min(6);
    let mut tasks: Vec<Vec<u32>> = Vec::new();
    let mut stack: Vec<Vec<u32>> = vec![Vec::new()];
    while let Some(prefix) = stack.pop() {
        let depth = prefix.len();
        if depth > 0 {
            counts[depth - 1] += 1;
        }
        if depth == max_n {
            continue;
        }
        if depth == split {
            tasks.push(prefix);
            continue;
        }
        for child in extensions(class, &prefix, limits)? {
            stack.push(child);
        }
    }

    let tails: Vec<Result<Vec<u64>>> = tasks
        .par_iter()
        .map(|prefix| {
            let mut local = vec![0u64; max_n];
            let mut stack = vec![prefix.clone()];
            while let Some(pfx) = stack.pop() {
                if pfx.len() > prefix.len() {
                    local[pfx.len() - 1] += 1;
                }
                if pfx.len() == max_n {
                    continue;
                }
                for child in extensions(class, &pfx, limits)? {
                    stack.push(child);
                }
            }
            Ok(local)
        })
        .collect();
    for tail in tails {
        let tail = tail?;
        for (c, t) in counts.iter_mut().zip(tail) {
            *c += t;
        }
    }

    Ok(CountSequence {
        class_expr: class.expr(),
        counts,
        exact: true,
    })
}

/// All one-step extensions of a member prefix that remain members.
fn extensions(class: &PatternClass, prefix: &[u32], limits: &Limits) -> Result<Vec<Vec<u32>>> {
    let k = prefix.len();
    let mut out = Vec::with_capacity(k + 1);
    for rank in 1..=(k + 1) as u32 {
        let mut child: Vec<u32> = prefix
            .iter()
            .map(|&v| if v >= rank { v + 1 } else { v })
            .collect();
        child.push(rank);
        let keep = match class {
            PatternClass::Leaf { basis } => !basis
                .iter()
                .any(|b| involves_ending_at_last(&child, b)),
            other => {
                let pat = pattern_of_distinct(child.iter().copied());
                other.contains(&pat, limits)?
            }
        };
        if keep {
            out.push(child);
        }
    }
    Ok(out)
}

/// Brute-force reference used in tests: full `S_n` scan with plain membership.
#[cfg(test)]
pub(crate) fn count_by_scan(class: &PatternClass, max_n: usize, limits: &Limits) -> Vec<u64> {
    fn perms(n: usize) -> Vec<Vec<u32>> {
        if n == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for slot in 0..=p.len() {
                let mut q: Vec<u32> = p.iter().map(|&v| if v >= n as u32 { v + 1 } else { v }).collect();
                q.insert(slot, n as u32);
                out.push(q);
            }
        }
        out
    }
    (1..=max_n)
        .map(|n| {
            perms(n)
                .into_iter()
                .filter(|v| {
                    let p = Permutation::new(v.clone()).unwrap();
                    class.contains(&p, limits).unwrap()
                })
                .count() as u64
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn catalan_class() {
        let c = PatternClass::av(&["231"]).unwrap();
        let cs = count_avoiders(&c, 8, &lim()).unwrap();
        assert_eq!(cs.counts, vec![1, 2, 5, 14, 42, 132, 429, 1430]);
        assert!(cs.exact);
    }

    #[test]
    fn layered_class_counts_are_powers_of_two() {
        let c = PatternClass::av(&["231", "312"]).unwrap();
        let cs = count_avoiders(&c, 10, &lim()).unwrap();
        let expect: Vec<u64> = (0..10).map(|k| 1u64 << k).collect();
        assert_eq!(cs.counts, expect);
    }

    #[test]
    fn layered_two_class_counts_are_fibonacci_like() {
        let c = PatternClass::av(&["231", "312", "321"]).unwrap();
        let cs = count_avoiders(&c, 8, &lim()).unwrap();
        assert_eq!(cs.counts, vec![1, 2, 3, 5, 8, 13, 21, 34]);
    }

    #[test]
    fn all_single_three_patterns_agree() {
        // Every class avoiding one length-3 pattern has the same counts.
        let reference = count_avoiders(&PatternClass::av(&["231"]).unwrap(), 9, &lim())
            .unwrap()
            .counts;
        for b in ["123", "132", "213", "312", "321"] {
            let cs = count_avoiders(&PatternClass::av(&[b]).unwrap(), 9, &lim()).unwrap();
            assert_eq!(cs.counts, reference, "basis {b}");
        }
    }

    #[test]
    fn pruned_walk_matches_full_scan() {
        let classes = [
            PatternClass::av(&["231"]).unwrap(),
            PatternClass::av(&["231", "312"]).unwrap(),
            PatternClass::union(
                PatternClass::av(&["21"]).unwrap(),
                PatternClass::av(&["12"]).unwrap(),
            ),
            PatternClass::juxtaposition(
                PatternClass::av(&["21"]).unwrap(),
                PatternClass::av(&["12"]).unwrap(),
            ),
            PatternClass::merge(
                PatternClass::av(&["21"]).unwrap(),
                PatternClass::av(&["12"]).unwrap(),
            ),
            PatternClass::rotation(PatternClass::av(&["21"]).unwrap()),
            PatternClass::direct_sum(
                PatternClass::av(&["12"]).unwrap(),
                PatternClass::av(&["12"]).unwrap(),
            ),
        ];
        for c in &classes {
            let fast = count_avoiders(c, 6, &lim()).unwrap().counts;
            let slow = count_by_scan(c, 6, &lim());
            assert_eq!(fast, slow, "class {c}");
        }
    }

    #[test]
    fn count_limit_is_enforced_and_named() {
        let c = PatternClass::av(&["231"]).unwrap();
        let err = count_avoiders(&c, 12, &lim()).unwrap_err();
        assert!(err.to_string().contains("11"), "{err}");
        let u = PatternClass::union(c.clone(), c);
        let err = count_avoiders(&u, 10, &lim()).unwrap_err();
        assert!(err.to_string().contains("9"), "{err}");
    }

    #[test]
    fn counts_never_exceed_factorials() {
        let c = PatternClass::av(&["4321"]).unwrap();
        let cs = count_avoiders(&c, 7, &lim()).unwrap();
        let mut fact = 1u64;
        for (i, &cnt) in cs.counts.iter().enumerate() {
            fact *= (i + 1) as u64;
            assert!(cnt <= fact);
        }
    }
}
