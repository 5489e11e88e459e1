//! Stanley-Wilf growth estimates from exact counts.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

use super::{CountSequence, PatternClass};

/// A growth-rate limit known in closed form, attached for comparison next to
/// finite-`n` estimates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KnownLimit {
    pub value: f64,
    /// Where the value comes from (a named closed form, not a computation).
    pub note: String,
}

/// Finite-`n` estimates of the growth rate of a class: `n`-th roots and
/// successive ratios of the counts, plus the known limit when the class is in
/// the built-in table.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SwEstimate {
    pub class_expr: String,
    /// `roots[i] = counts[i]^(1/(i+1))`.
    pub roots: Vec<f64>,
    /// `ratios[i] = counts[i+1] / counts[i]`; `None` where the denominator is
    /// zero.
    pub ratios: Vec<Option<f64>>,
    pub known_limit: Option<KnownLimit>,
}

/// Computes root and ratio estimates for a count sequence.
pub fn sw_estimate(class: &PatternClass, counts: &CountSequence) -> Result<SwEstimate> {
    if counts.counts.is_empty() {
        return Err(Error::invalid("sw_estimate needs a nonempty count sequence"));
    }
    let roots = counts
        .counts
        .iter()
        .enumerate()
        .map(|(i, &c)| (c as f64).powf(1.0 / (i + 1) as f64))
        .collect();
    let ratios = counts
        .counts
        .windows(2)
        .map(|w| {
            if w[0] == 0 {
                None
            } else {
                Some(w[1] as f64 / w[0] as f64)
            }
        })
        .collect();
    Ok(SwEstimate {
        class_expr: counts.class_expr.clone(),
        roots,
        ratios,
        known_limit: known_limit(class),
    })
}

/// The built-in table of closed-form growth limits. Data, not computation:
/// entries carry a note naming the closed form.
pub fn known_limit(class: &PatternClass) -> Option<KnownLimit> {
    let basis = match class {
        PatternClass::Leaf { basis } => basis,
        _ => return None,
    };
    let layered = [digits("231"), digits("312")];
    let layered2 = [digits("231"), digits("312"), digits("321")];
    if basis.len() == 2 && layered.iter().all(|b| basis.contains(b)) {
        return Some(KnownLimit {
            value: 2.0,
            note: "layered class, 2^(n-1) members per length".into(),
        });
    }
    if basis.len() == 3 && layered2.iter().all(|b| basis.contains(b)) {
        return Some(KnownLimit {
            value: (1.0 + 5.0f64.sqrt()) / 2.0,
            note: "layer size <= 2, Fibonacci growth, golden ratio".into(),
        });
    }
    if basis.len() == 1 {
        let b = &basis[0];
        let k = b.len();
        if *b == Permutation::decreasing(k) || *b == Permutation::identity(k) {
            return Some(KnownLimit {
                value: ((k - 1) * (k - 1)) as f64,
                note: format!("single monotone pattern of length {k}, limit (k-1)^2"),
            });
        }
        if k == 3 {
            return Some(KnownLimit {
                value: 4.0,
                note: "single length-3 pattern, Catalan growth".into(),
            });
        }
    }
    None
}

fn digits(s: &str) -> Permutation {
    super::parse::perm_from_digits(s).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::class::{count_avoiders, Limits};

    #[test]
    fn layered_ratios_are_two() {
        let c = PatternClass::av(&["231", "312"]).unwrap();
        let counts = count_avoiders(&c, 5, &Limits::default()).unwrap();
        let est = sw_estimate(&c, &counts).unwrap();
        for r in &est.ratios {
            assert_eq!(r.unwrap(), 2.0);
        }
        assert_eq!(est.known_limit.unwrap().value, 2.0);
    }

    #[test]
    fn increasing_class_roots_are_one() {
        let c = PatternClass::av(&["21"]).unwrap();
        let counts = count_avoiders(&c, 6, &Limits::default()).unwrap();
        assert!(counts.counts.iter().all(|&x| x == 1));
        let est = sw_estimate(&c, &counts).unwrap();
        for r in &est.roots {
            assert_eq!(*r, 1.0);
        }
        assert_eq!(est.known_limit.unwrap().value, 1.0);
    }

    #[test]
    fn fibonacci_ratios_trend_to_golden_ratio() {
        let c = PatternClass::av(&["231", "312", "321"]).unwrap();
        let counts = count_avoiders(&c, 5, &Limits::default()).unwrap();
        assert_eq!(counts.counts, vec![1, 2, 3, 5, 8]);
        let est = sw_estimate(&c, &counts).unwrap();
        let ratios: Vec<f64> = est.ratios.iter().map(|r| r.unwrap()).collect();
        assert_eq!(ratios[0], 2.0);
        assert_eq!(ratios[1], 1.5);
        assert!((ratios[2] - 5.0 / 3.0).abs() < 1e-12);
        assert!((ratios[3] - 1.6).abs() < 1e-12);
        let phi = (1.0 + 5.0f64.sqrt()) / 2.0;
        assert_eq!(est.known_limit.unwrap().value, phi);
        // The ratio ladder closes in on the limit.
        assert!((ratios[3] - phi).abs() < (ratios[0] - phi).abs());
    }

    #[test]
    fn known_limits_cover_monotone_and_catalan_classes() {
        let single3 = PatternClass::av(&["312"]).unwrap();
        assert_eq!(known_limit(&single3).unwrap().value, 4.0);
        let dec4 = PatternClass::av(&["4321"]).unwrap();
        assert_eq!(known_limit(&dec4).unwrap().value, 9.0);
        let inc4 = PatternClass::av(&["1234"]).unwrap();
        assert_eq!(known_limit(&inc4).unwrap().value, 9.0);
        let none = PatternClass::av(&["2413"]).unwrap();
        assert!(known_limit(&none).is_none());
        let composite = PatternClass::union(single3.clone(), single3);
        assert!(known_limit(&composite).is_none());
    }

    #[test]
    fn zero_counts_flag_ratio_entries() {
        let cs = CountSequence {
            class_expr: "test".into(),
            counts: vec![1, 0, 3],
            exact: true,
        };
        let c = PatternClass::av(&["2413"]).unwrap();
        let est = sw_estimate(&c, &cs).unwrap();
        assert!(est.ratios[0].is_some());
        assert!(est.ratios[1].is_none());
    }
}
