//! Pattern avoidance classes: finite bases plus the class constructions
//! (union, direct sum, juxtaposition, merge, rotation closure).

mod count;
mod parse;
mod sw;

pub use count::{count_avoiders, CountSequence};
pub use sw::{sw_estimate, KnownLimit, SwEstimate};

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Enumeration and membership limits. These are configuration with desk-scale
/// defaults; the CLI exposes overrides.
#[derive(Debug, Clone)]
pub struct Limits {
    /// Largest `n` for exact leaf-class counting.
    pub leaf_count_n: usize,
    /// Largest `n` for exact composite-class counting (full `S_n` scan).
    pub composite_count_n: usize,
    /// Largest length for merge membership (exponential colorings).
    pub merge_member_n: usize,
    /// Largest length for split-based membership (direct sum, juxtaposition).
    pub split_member_n: usize,
    /// Largest length accepted by the brute-force subsequence oracle.
    pub oracle_n: usize,
    /// Largest length accepted by the corner-cut direct-sum solver.
    pub sum_solver_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            leaf_count_n: 11,
            composite_count_n: 9,
            merge_member_n: 14,
            split_member_n: 100,
            oracle_n: 16,
            sum_solver_n: 500,
        }
    }
}

/// A pattern avoidance class: either a finite basis of forbidden patterns or
/// one of the five constructions over child classes.
///
/// Every variant is closed under taking patterns of subsequences, so
/// membership of a permutation implies membership of all its patterns.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PatternClass {
    /// All permutations avoiding every basis element.
    Leaf { basis: Vec<Permutation> },
    /// Members of either child.
    Union(Box<PatternClass>, Box<PatternClass>),
    /// Permutations splitting as a direct sum with the lower-left part in the
    /// first child and the upper-right part in the second.
    DirectSum(Box<PatternClass>, Box<PatternClass>),
    /// Permutations splitting by position into a first-child pattern followed
    /// by a second-child pattern.
    Juxtaposition(Box<PatternClass>, Box<PatternClass>),
    /// Permutations whose positions 2-color into a first-child pattern and a
    /// second-child pattern.
    Merge(Box<PatternClass>, Box<PatternClass>),
    /// All cyclic rotations of members of the child.
    Rotation(Box<PatternClass>),
}

impl PatternClass {
    /// A leaf class `Av(basis)`. The basis must be nonempty and contain no
    /// permutation of length below two (those would empty the class or make
    /// it trivial). Duplicates are dropped and the basis is stored sorted so
    /// that equal classes compare equal.
    pub fn leaf(basis: Vec<Permutation>) -> Result<Self> {
        if basis.is_empty() {
            return Err(Error::invalid("avoidance basis must be nonempty"));
        }
        let mut basis = basis;
        for b in &basis {
            if b.len() < 2 {
                return Err(Error::invalid(format!(
                    "basis element {:?} is shorter than two",
                    b.to_string()
                )));
            }
        }
        basis.sort();
        basis.dedup();
        Ok(PatternClass::Leaf { basis })
    }

    /// Leaf class from digit strings, e.g. `PatternClass::av(&["231", "312"])`.
    pub fn av(patterns: &[&str]) -> Result<Self> {
        let basis = patterns
            .iter()
            .map(|s| parse::perm_from_digits(s))
            .collect::<Result<Vec<_>>>()?;
        PatternClass::leaf(basis)
    }

    /// Parses the class mini-language, e.g. `merge(av(21), rot(av(12)))`.
    pub fn parse(expr: &str) -> Result<Self> {
        parse::parse_class(expr)
    }

    pub fn union(a: PatternClass, b: PatternClass) -> Self {
        PatternClass::Union(Box::new(a), Box::new(b))
    }

    pub fn direct_sum(a: PatternClass, b: PatternClass) -> Self {
        PatternClass::DirectSum(Box::new(a), Box::new(b))
    }

    pub fn juxtaposition(a: PatternClass, b: PatternClass) -> Self {
        PatternClass::Juxtaposition(Box::new(a), Box::new(b))
    }

    pub fn merge(a: PatternClass, b: PatternClass) -> Self {
        PatternClass::Merge(Box::new(a), Box::new(b))
    }

    pub fn rotation(a: PatternClass) -> Self {
        PatternClass::Rotation(Box::new(a))
    }

    /// Membership test. Merge nodes are exponential in `|p|` and refuse
    /// inputs beyond `limits.merge_member_n`; split-based nodes refuse inputs
    /// beyond `limits.split_member_n`.
    pub fn contains(&self, p: &Permutation, limits: &Limits) -> Result<bool> {
        match self {
            PatternClass::Leaf { basis } => Ok(!basis.iter().any(|b| p.involves(b))),
            PatternClass::Union(a, b) => Ok(a.contains(p, limits)? || b.contains(p, limits)?),
            PatternClass::DirectSum(a, b) => {
                let n = p.len();
                if n > limits.split_member_n {
                    return Err(Error::limit(format!(
                        "direct-sum membership limited to length {} (got {})",
                        limits.split_member_n, n
                    )));
                }
                // p = alpha (+) beta exactly when some prefix of positions is
                // occupied by the values 1..t; scan prefix maxima to find the
                // corner cuts.
                let mut max_so_far = 0u32;
                // t = 0: empty alpha.
                if a.contains(&Permutation::empty(), limits)? && b.contains(p, limits)? {
                    return Ok(true);
                }
                for t in 1..=n {
                    max_so_far = max_so_far.max(p.values()[t - 1]);
                    if max_so_far as usize != t {
                        continue;
                    }
                    let alpha = Permutation::from_trusted(p.values()[..t].to_vec());
                    let beta = Permutation::from_trusted(
                        p.values()[t..].iter().map(|&v| v - t as u32).collect(),
                    );
                    if a.contains(&alpha, limits)? && b.contains(&beta, limits)? {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
            PatternClass::Juxtaposition(a, b) => {
                let n = p.len();
                if n > limits.split_member_n {
                    return Err(Error::limit(format!(
                        "juxtaposition membership limited to length {} (got {})",
                        limits.split_member_n, n
                    )));
                }
                for t in 0..=n {
                    let alpha = p.pattern_at(&(0..t).collect::<Vec<_>>());
                    let beta = p.pattern_at(&(t..n).collect::<Vec<_>>());
                    if a.contains(&alpha, limits)? && b.contains(&beta, limits)? {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
            PatternClass::Merge(a, b) => {
                let n = p.len();
                if n > limits.merge_member_n {
                    return Err(Error::limit(format!(
                        "merge membership limited to length {} (got {})",
                        limits.merge_member_n, n
                    )));
                }
                merge_member(a, b, p, limits)
            }
            PatternClass::Rotation(a) => {
                if p.is_empty() {
                    return a.contains(p, limits);
                }
                for r in p.cyclic_rotations()? {
                    if a.contains(&r, limits)? {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
        }
    }

    /// Canonical mini-language form, parseable by [`PatternClass::parse`].
    pub fn expr(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for PatternClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternClass::Leaf { basis } => {
                write!(f, "av(")?;
                for (i, b) in basis.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    for v in b.values() {
                        write!(f, "{}", v)?;
                    }
                }
                write!(f, ")")
            }
            PatternClass::Union(a, b) => write!(f, "union({},{})", a, b),
            PatternClass::DirectSum(a, b) => write!(f, "sum({},{})", a, b),
            PatternClass::Juxtaposition(a, b) => write!(f, "juxt({},{})", a, b),
            PatternClass::Merge(a, b) => write!(f, "merge({},{})", a, b),
            PatternClass::Rotation(a) => write!(f, "rot({})", a),
        }
    }
}

/// Merge membership: recursive 2-coloring of positions with prefix pruning.
///
/// Both color classes are downward closed, so a prefix whose pattern already
/// fails its side can be abandoned. When the sides are equal classes the
/// first position is pinned to side one, halving the search.
fn merge_member(
    a: &PatternClass,
    b: &PatternClass,
    p: &Permutation,
    limits: &Limits,
) -> Result<bool> {
    struct State<'s> {
        a: &'s PatternClass,
        b: &'s PatternClass,
        values: &'s [u32],
        limits: &'s Limits,
        a_part: Vec<u32>,
        b_part: Vec<u32>,
    }

    // Appending `v` to an avoider prefix keeps it avoiding iff no basis
    // occurrence ends at `v`; composite sides fall back to a full membership
    // test of the extended prefix.
    fn still_member(
        class: &PatternClass,
        part: &mut Vec<u32>,
        v: u32,
        limits: &Limits,
    ) -> Result<bool> {
        part.push(v);
        let ok = match class {
            PatternClass::Leaf { basis } => !basis
                .iter()
                .any(|q| crate::perm::involves_ending_at_last(part, q)),
            other => {
                let pat = crate::perm::pattern_of_distinct(part.iter().copied());
                other.contains(&pat, limits)?
            }
        };
        if !ok {
            part.pop();
        }
        Ok(ok)
    }

    fn rec(st: &mut State, idx: usize, pin_first: bool) -> Result<bool> {
        if idx == st.values.len() {
            return Ok(true);
        }
        let v = st.values[idx];
        if still_member(st.a, &mut st.a_part, v, st.limits)? {
            if rec(st, idx + 1, false)? {
                return Ok(true);
            }
            st.a_part.pop();
        }
        if !pin_first && still_member(st.b, &mut st.b_part, v, st.limits)? {
            if rec(st, idx + 1, false)? {
                return Ok(true);
            }
            st.b_part.pop();
        }
        Ok(false)
    }

    let pin_first = a == b && !p.is_empty();
    let mut st = State {
        a,
        b,
        values: p.values(),
        limits,
        a_part: Vec::with_capacity(p.len()),
        b_part: Vec::with_capacity(p.len()),
    };
    rec(&mut st, 0, pin_first)
}
