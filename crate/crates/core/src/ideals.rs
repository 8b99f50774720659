//! Ideals and strong ideals of a finite algebra.
//!
//! A subset `I` is an ideal when
//! 1. `0 ∈ I`, and
//! 2. `x*y ∈ I` and `y ∈ I` imply `x ∈ I`.
//!
//! It is strong when additionally
//! 3. `(x*y)*z ∈ I` and `y ∈ I` imply `x*z ∈ I`.
//!
//! The same predicate is used whatever label (BO, BH, Z) the algebra
//! carries; nothing here requires any axiom to hold.

use serde::Serialize;

use crate::{Error, FiniteAlgebra, Result, Subset};

/// Default largest order for which [`enumerate_ideals`] scans `2^(n-1)` subsets.
pub const DEFAULT_MAX_ORDER: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealReport {
    pub subset: Subset,
    /// Condition 1.
    pub contains_zero: bool,
    /// Condition 2 violations as `(x, y)`, lexicographic.
    pub absorption_witnesses: Vec<(usize, usize)>,
    /// Condition 3 violations as `(x, y, z)`; `None` when condition 3 was
    /// not evaluated.
    pub strong_witnesses: Option<Vec<(usize, usize, usize)>>,
}

impl IdealReport {
    pub fn is_ideal(&self) -> bool {
        self.contains_zero && self.absorption_witnesses.is_empty()
    }

    pub fn is_strong(&self) -> bool {
        self.is_ideal() && self.strong_witnesses.as_ref().is_some_and(Vec::is_empty)
    }
}

fn absorption_witnesses(alg: &FiniteAlgebra, ideal: &Subset) -> Vec<(usize, usize)> {
    let outside = ideal.complement();
    let mut out = Vec::new();
    for x in &outside {
        for y in ideal {
            if ideal.contains(alg.op(x, y)) {
                out.push((x, y));
            }
        }
    }
    out
}

fn strong_witnesses(alg: &FiniteAlgebra, ideal: &Subset) -> Vec<(usize, usize, usize)> {
    let n = alg.order();
    let mut out = Vec::new();
    for x in 0..n {
        for y in ideal {
            let xy = alg.op(x, y);
            for z in 0..n {
                if ideal.contains(alg.op(xy, z)) && !ideal.contains(alg.op(x, z)) {
                    out.push((x, y, z));
                }
            }
        }
    }
    out
}

fn check_carrier(alg: &FiniteAlgebra, ideal: &Subset) {
    assert_eq!(
        ideal.universe(),
        alg.order(),
        "subset carrier does not match algebra"
    );
}

/// Conditions 1 and 2.
pub fn is_ideal(alg: &FiniteAlgebra, ideal: &Subset) -> IdealReport {
    check_carrier(alg, ideal);
    IdealReport {
        subset: *ideal,
        contains_zero: ideal.contains(alg.zero()),
        absorption_witnesses: absorption_witnesses(alg, ideal),
        strong_witnesses: None,
    }
}

/// Conditions 1, 2 and 3.
pub fn is_strong_ideal(alg: &FiniteAlgebra, ideal: &Subset) -> IdealReport {
    let mut report = is_ideal(alg, ideal);
    report.strong_witnesses = Some(strong_witnesses(alg, ideal));
    report
}

pub fn enumerate_ideals(alg: &FiniteAlgebra, strong: bool) -> Result<Vec<Subset>> {
    enumerate_ideals_with(alg, strong, DEFAULT_MAX_ORDER)
}

/// All (strong) ideals, sorted by cardinality then lexicographically.
pub fn enumerate_ideals_with(
    alg: &FiniteAlgebra,
    strong: bool,
    max_order: usize,
) -> Result<Vec<Subset>> {
    let n = alg.order();
    if n > max_order {
        return Err(Error::TooLarge {
            n,
            limit: max_order,
        });
    }
    let mut out = zero_containing(alg)
        .filter(|s| {
            absorption_witnesses(alg, s).is_empty()
                && (!strong || strong_witnesses(alg, s).is_empty())
        })
        .collect::<Vec<_>>();
    out.sort();
    Ok(out)
}

fn zero_containing(alg: &FiniteAlgebra) -> impl Iterator<Item = Subset> + '_ {
    let n = alg.order();
    let zero = alg.zero();
    let others = Subset::singleton(n, zero).complement();
    // scatter each mask over the non-zero elements
    (0u64..1 << others.len()).map(move |m| {
        let mut s = Subset::singleton(n, zero);
        for (bit, x) in others.iter().enumerate() {
            if m & (1 << bit) != 0 {
                s.insert(x);
            }
        }
        s
    })
}

/// Ideals, strong ideals, and subsets satisfying conditions 1 and 3 but
/// not necessarily 2, each enumerated independently.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealSurvey {
    pub ideals: Vec<Subset>,
    pub strong_ideals: Vec<Subset>,
    pub condition_three: Vec<Subset>,
    /// Members of `condition_three` that are not ideals.
    pub condition_three_not_ideal: Vec<Subset>,
}

pub fn survey_ideals(alg: &FiniteAlgebra) -> Result<IdealSurvey> {
    let ideals = enumerate_ideals(alg, false)?;
    let strong_ideals = enumerate_ideals(alg, true)?;
    let mut condition_three: Vec<Subset> = zero_containing(alg)
        .filter(|s| strong_witnesses(alg, s).is_empty())
        .collect();
    condition_three.sort();
    let condition_three_not_ideal = condition_three
        .iter()
        .filter(|s| !ideals.contains(s))
        .copied()
        .collect();
    Ok(IdealSurvey {
        ideals,
        strong_ideals,
        condition_three,
        condition_three_not_ideal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(n: usize, xs: &[usize]) -> Subset {
        Subset::from_elements(n, xs.iter().copied()).unwrap()
    }

    #[test]
    fn table3_ideals() {
        let t3 = fixtures::table3();
        assert!(is_ideal(&t3, &set(4, &[0, 1])).is_ideal());
        let got = enumerate_ideals(&t3, false).unwrap();
        let want = vec![
            set(4, &[0]),
            set(4, &[0, 1]),
            set(4, &[0, 1, 2]),
            set(4, &[0, 1, 2, 3]),
        ];
        assert_eq!(got, want);
    }

    #[test]
    fn table3_strong_ideals() {
        let t3 = fixtures::table3();
        assert!(is_strong_ideal(&t3, &set(4, &[0])).is_strong());
        assert!(is_strong_ideal(&t3, &set(4, &[0, 1])).is_strong());
        let r = is_strong_ideal(&t3, &set(4, &[0, 1, 2]));
        assert!(r.is_ideal() && !r.is_strong());
    }

    #[test]
    fn table4_claimed_ideal_fails() {
        let t4 = fixtures::table4();
        let r = is_ideal(&t4, &set(4, &[0, 1, 2]));
        assert!(!r.is_ideal());
        assert_eq!(r.absorption_witnesses, vec![(3, 0), (3, 1), (3, 2)]);
    }

    #[test]
    fn table2_example_subset_fails() {
        let t2 = fixtures::table2();
        let r = is_ideal(&t2, &set(5, &[0, 1]));
        assert_eq!(r.absorption_witnesses, vec![(3, 1)]);
        assert!(!enumerate_ideals(&t2, false).unwrap().contains(&set(5, &[0, 1])));
    }

    #[test]
    fn full_carrier_is_always_strong() {
        for alg in fixtures::all() {
            assert!(is_strong_ideal(&alg, &alg.carrier()).is_strong());
        }
        let one = FiniteAlgebra::new(1, vec![vec![0]], 0).unwrap();
        assert_eq!(enumerate_ideals(&one, false).unwrap(), vec![set(1, &[0])]);
    }

    #[test]
    fn size_limit() {
        let t2 = fixtures::table2();
        assert_eq!(
            enumerate_ideals_with(&t2, false, 4),
            Err(Error::TooLarge { n: 5, limit: 4 })
        );
    }

    #[test]
    fn survey_table4() {
        let s = survey_ideals(&fixtures::table4()).unwrap();
        assert_eq!(s.ideals, vec![Subset::full(4)]);
        assert_eq!(s.condition_three_not_ideal, vec![set(4, &[0])]);
    }
}
