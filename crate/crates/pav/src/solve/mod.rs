//! Exact longest-subsequence solvers.
//!
//! For a pattern class `A` and a permutation `p`, these compute the length of
//! a longest subsequence of `p` whose pattern belongs to `A`, together with
//! one witness index set. Specialized solvers cover the increasing class,
//! single monotone bases, the layered classes, and the class constructions;
//! everything else (and every cross-check) goes through the subset
//! [`oracle`](lps_oracle).

mod compose;
mod greene;
mod layered;
mod layered2;
mod lis;
mod oracle;

pub use compose::{lps_juxt, lps_merge_bounds, lps_rot, lps_sum_class, lps_union, MergeBounds};
pub use greene::{greene, greene_len, lps_monotone_inc};
pub use layered::{lps_layered, lps_layered_len};
pub use layered2::{lps_layered2, lps_layered2_len};
pub use lis::{lis, lis_len};
pub use oracle::lps_oracle;

use serde::{Deserialize, Serialize};

use crate::class::{Limits, PatternClass};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Length of a longest subsequence in the solved class, plus one witness.
///
/// The witness lists 1-based positions into the input permutation in
/// increasing order; its length always equals `length`, and the subsequence
/// it selects has its pattern in the class the solver targets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverResult {
    pub length: usize,
    pub witness: Vec<usize>,
}

impl SolverResult {
    pub(crate) fn empty() -> Self {
        SolverResult {
            length: 0,
            witness: Vec::new(),
        }
    }

    /// Builds a result from 0-based positions (any order).
    pub(crate) fn from_positions0(mut positions: Vec<usize>) -> Self {
        positions.sort_unstable();
        for p in &mut positions {
            *p += 1;
        }
        SolverResult {
            length: positions.len(),
            witness: positions,
        }
    }

    /// 0-based witness positions.
    pub fn positions0(&self) -> Vec<usize> {
        self.witness.iter().map(|&w| w - 1).collect()
    }
}

/// A solver instance bound to one pattern class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solver {
    /// Brute-force subset search over any class (small inputs only).
    Oracle(PatternClass),
    /// Longest increasing subsequence, `av(21)`.
    Lis,
    /// Longest subsequence avoiding `k (k-1) ... 2 1`.
    Greene { k: usize },
    /// Longest subsequence avoiding `1 2 ... k`.
    MonotoneInc { k: usize },
    /// Longest layered subsequence, `av(231,312)`.
    Layered,
    /// Longest layered subsequence with layer size at most two,
    /// `av(231,312,321)`.
    Layered2,
    Union(Box<Solver>, Box<Solver>),
    Juxt(Box<Solver>, Box<Solver>),
    Sum(Box<Solver>, Box<Solver>),
    Rot(Box<Solver>),
}

impl Solver {
    /// Picks the fastest exact solver for a class: a specialized solver when
    /// the class is recognized, recursing through the constructions, and the
    /// subset oracle otherwise (merge classes have no exact solver, only
    /// bounds, so they also fall back to the oracle).
    pub fn auto(class: &PatternClass) -> Solver {
        match class {
            PatternClass::Leaf { basis } => {
                if basis.len() == 1 {
                    let b = &basis[0];
                    if *b == Permutation::decreasing(b.len()) {
                        return if b.len() == 2 {
                            Solver::Lis
                        } else {
                            Solver::Greene { k: b.len() }
                        };
                    }
                    if *b == Permutation::identity(b.len()) {
                        return Solver::MonotoneInc { k: b.len() };
                    }
                }
                if *class == PatternClass::av(&["231", "312"]).unwrap() {
                    return Solver::Layered;
                }
                if *class == PatternClass::av(&["231", "312", "321"]).unwrap() {
                    return Solver::Layered2;
                }
                Solver::Oracle(class.clone())
            }
            PatternClass::Union(a, b) => {
                Solver::Union(Box::new(Solver::auto(a)), Box::new(Solver::auto(b)))
            }
            PatternClass::DirectSum(a, b) => {
                Solver::Sum(Box::new(Solver::auto(a)), Box::new(Solver::auto(b)))
            }
            PatternClass::Juxtaposition(a, b) => {
                Solver::Juxt(Box::new(Solver::auto(a)), Box::new(Solver::auto(b)))
            }
            PatternClass::Merge(_, _) => Solver::Oracle(class.clone()),
            PatternClass::Rotation(a) => Solver::Rot(Box::new(Solver::auto(a))),
        }
    }

    /// The class this solver computes longest subsequences for.
    pub fn class(&self) -> PatternClass {
        match self {
            Solver::Oracle(c) => c.clone(),
            Solver::Lis => PatternClass::av(&["21"]).unwrap(),
            Solver::Greene { k } => {
                PatternClass::leaf(vec![Permutation::decreasing(*k)]).unwrap()
            }
            Solver::MonotoneInc { k } => {
                PatternClass::leaf(vec![Permutation::identity(*k)]).unwrap()
            }
            Solver::Layered => PatternClass::av(&["231", "312"]).unwrap(),
            Solver::Layered2 => PatternClass::av(&["231", "312", "321"]).unwrap(),
            Solver::Union(a, b) => PatternClass::union(a.class(), b.class()),
            Solver::Juxt(a, b) => PatternClass::juxtaposition(a.class(), b.class()),
            Solver::Sum(a, b) => PatternClass::direct_sum(a.class(), b.class()),
            Solver::Rot(a) => PatternClass::rotation(a.class()),
        }
    }

    /// Short name for logs and CLI output.
    pub fn name(&self) -> String {
        match self {
            Solver::Oracle(_) => "oracle".into(),
            Solver::Lis => "lis".into(),
            Solver::Greene { k } => format!("greene:{k}"),
            Solver::MonotoneInc { k } => format!("monotone:{k}"),
            Solver::Layered => "layered".into(),
            Solver::Layered2 => "layered2".into(),
            Solver::Union(a, b) => format!("union({},{})", a.name(), b.name()),
            Solver::Juxt(a, b) => format!("juxt({},{})", a.name(), b.name()),
            Solver::Sum(a, b) => format!("sum({},{})", a.name(), b.name()),
            Solver::Rot(a) => format!("rot({})", a.name()),
        }
    }

    /// Solves for length and witness.
    pub fn solve(&self, p: &Permutation, limits: &Limits) -> Result<SolverResult> {
        match self {
            Solver::Oracle(class) => lps_oracle(p, class, limits),
            Solver::Lis => Ok(lis(p)),
            Solver::Greene { k } => greene(p, *k),
            Solver::MonotoneInc { k } => lps_monotone_inc(p, *k),
            Solver::Layered => Ok(lps_layered(p)),
            Solver::Layered2 => Ok(lps_layered2(p)),
            Solver::Union(a, b) => lps_union(p, a, b, limits),
            Solver::Juxt(a, b) => lps_juxt(p, a, b, limits),
            Solver::Sum(a, b) => lps_sum_class(p, a, b, limits),
            Solver::Rot(a) => lps_rot(p, a, limits),
        }
    }

    /// Length only; skips witness bookkeeping where that is cheaper.
    pub fn solve_len(&self, p: &Permutation, limits: &Limits) -> Result<usize> {
        match self {
            Solver::Lis => Ok(lis_len(p.values())),
            Solver::Greene { k } => greene_len(p, *k),
            Solver::MonotoneInc { k } => {
                let rev = p.reverse();
                greene_len(&rev, *k)
            }
            Solver::Layered => Ok(lps_layered_len(p)),
            Solver::Layered2 => Ok(lps_layered2_len(p)),
            other => Ok(other.solve(p, limits)?.length),
        }
    }
}

/// Parses a solver selector: `auto` and `oracle` need the class; the named
/// forms are `lis`, `greene:<k>`, `monotone:<k>`, `layered`, `layered2`.
pub fn solver_for(selector: &str, class: &PatternClass) -> Result<Solver> {
    let named = match selector {
        "auto" => return Ok(Solver::auto(class)),
        "oracle" => return Ok(Solver::Oracle(class.clone())),
        "lis" => Solver::Lis,
        "layered" => Solver::Layered,
        "layered2" => Solver::Layered2,
        s => {
            if let Some(k) = s.strip_prefix("greene:") {
                let k: usize = k
                    .parse()
                    .map_err(|_| Error::invalid(format!("bad solver selector {s:?}")))?;
                Solver::Greene { k }
            } else if let Some(k) = s.strip_prefix("monotone:") {
                let k: usize = k
                    .parse()
                    .map_err(|_| Error::invalid(format!("bad solver selector {s:?}")))?;
                Solver::MonotoneInc { k }
            } else {
                return Err(Error::invalid(format!(
                    "unknown solver {selector:?} (expected auto, oracle, lis, greene:<k>, monotone:<k>, layered, layered2)"
                )));
            }
        }
    };
    // A named solver must actually solve the requested class.
    if named.class() != *class {
        return Err(Error::invalid(format!(
            "solver {:?} solves {} but the requested class is {}",
            selector,
            named.class(),
            class
        )));
    }
    Ok(named)
}

#[cfg(test)]
pub(crate) fn assert_valid_witness(
    result: &SolverResult,
    p: &Permutation,
    class: &PatternClass,
    limits: &Limits,
) {
    assert_eq!(result.witness.len(), result.length);
    assert!(result.witness.windows(2).all(|w| w[0] < w[1]));
    assert!(result.witness.iter().all(|&w| w >= 1 && w <= p.len()));
    let pat = p.pattern_at(&result.positions0());
    assert!(
        class.contains(&pat, limits).unwrap(),
        "witness pattern {pat:?} not in {class} for input {p:?}"
    );
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn auto_recognizes_specialized_classes() {
        assert_eq!(Solver::auto(&PatternClass::av(&["21"]).unwrap()), Solver::Lis);
        assert_eq!(
            Solver::auto(&PatternClass::av(&["4321"]).unwrap()),
            Solver::Greene { k: 4 }
        );
        assert_eq!(
            Solver::auto(&PatternClass::av(&["123"]).unwrap()),
            Solver::MonotoneInc { k: 3 }
        );
        assert_eq!(
            Solver::auto(&PatternClass::av(&["231", "312"]).unwrap()),
            Solver::Layered
        );
        assert_eq!(
            Solver::auto(&PatternClass::av(&["312", "231", "321"]).unwrap()),
            Solver::Layered2
        );
        match Solver::auto(&PatternClass::av(&["312"]).unwrap()) {
            Solver::Oracle(_) => {}
            other => panic!("expected oracle fallback, got {other:?}"),
        }
        match Solver::auto(&PatternClass::parse("union(av(21),av(12))").unwrap()) {
            Solver::Union(a, b) => {
                assert_eq!(*a, Solver::Lis);
                assert_eq!(*b, Solver::MonotoneInc { k: 2 });
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn named_solver_must_match_class() {
        let layered = PatternClass::av(&["231", "312"]).unwrap();
        assert!(solver_for("layered", &layered).is_ok());
        assert!(solver_for("layered2", &layered).is_err());
        assert!(solver_for("frobnicate", &layered).is_err());
        assert!(solver_for("oracle", &layered).is_ok());
        let inc = PatternClass::av(&["21"]).unwrap();
        assert!(solver_for("lis", &inc).is_ok());
        assert!(solver_for("greene:2", &inc).is_ok());
        assert!(solver_for("greene:3", &inc).is_err());
    }
}
