//! Lower and upper approximations over a partition, and evaluators for
//! the classical approximation laws.
//!
//! Throughout, `lower(A) = { x | [x] ⊆ A }` and
//! `upper(A) = { x | [x] ∩ A ≠ ∅ }`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::product_set;
use crate::relations::{is_complete_congruence, is_congruence, relation_from_ideal, to_partition};
use crate::{Error, FiniteAlgebra, Partition, Result, Subset};

/// A carrier with a partition, and optionally the algebra needed for the
/// product laws.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproximationSpace {
    partition: Partition,
    algebra: Option<FiniteAlgebra>,
}

impl ApproximationSpace {
    pub fn new(partition: Partition) -> Self {
        Self {
            partition,
            algebra: None,
        }
    }

    pub fn with_algebra(algebra: FiniteAlgebra, partition: Partition) -> Result<Self> {
        if algebra.order() != partition.order() {
            return Err(Error::SizeMismatch {
                expected: algebra.order(),
                found: partition.order(),
            });
        }
        Ok(Self {
            partition,
            algebra: Some(algebra),
        })
    }

    /// Space induced by `x ~ y  iff  x*y ∈ I and y*x ∈ I`. Fails when that
    /// relation is not an equivalence.
    pub fn from_ideal(algebra: FiniteAlgebra, ideal: &Subset) -> Result<Self> {
        let partition = to_partition(&relation_from_ideal(&algebra, ideal))?;
        Self::with_algebra(algebra, partition)
    }

    pub fn order(&self) -> usize {
        self.partition.order()
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn algebra(&self) -> Option<&FiniteAlgebra> {
        self.algebra.as_ref()
    }

    fn check(&self, a: &Subset) {
        assert_eq!(
            a.universe(),
            self.order(),
            "subset carrier does not match approximation space"
        );
    }

    pub fn lower(&self, a: &Subset) -> Subset {
        self.check(a);
        self.partition
            .classes()
            .iter()
            .filter(|c| c.is_subset(a))
            .fold(Subset::empty(self.order()), |acc, c| acc | *c)
    }

    pub fn upper(&self, a: &Subset) -> Subset {
        self.check(a);
        self.partition
            .classes()
            .iter()
            .filter(|c| c.intersects(a))
            .fold(Subset::empty(self.order()), |acc, c| acc | *c)
    }

    pub fn boundary(&self, a: &Subset) -> Subset {
        self.upper(a) - self.lower(a)
    }

    pub fn is_rough(&self, a: &Subset) -> bool {
        !self.boundary(a).is_empty()
    }

    pub fn is_definable(&self, a: &Subset) -> bool {
        !self.is_rough(a)
    }

    pub fn rough_pair(&self, a: &Subset) -> RoughPair {
        RoughPair {
            lower: self.lower(a),
            upper: self.upper(a),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct RoughPair {
    pub lower: Subset,
    pub upper: Subset,
}

/// Individual approximation laws over a pair of subsets `A`, `B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Law {
    /// `lower(A) ⊆ A ⊆ upper(A)`
    LowerInsideUpper,
    /// `lower(∅) = upper(∅) = ∅` and `lower(U) = upper(U) = U`
    Extremes,
    /// `lower(A) ∪ lower(B) ⊆ lower(A ∪ B)`
    LowerUnion,
    /// `lower(A ∩ B) = lower(A) ∩ lower(B)`
    LowerIntersection,
    /// `upper(A ∪ B) = upper(A) ∪ upper(B)`
    UpperUnion,
    /// `upper(A ∩ B) ⊆ upper(A) ∩ upper(B)`
    UpperIntersection,
    /// `upper(Aᶜ) = lower(A)ᶜ`
    UpperComplement,
    /// `lower(Aᶜ) = upper(A)ᶜ`
    LowerComplement,
    /// `lower(lower A) = upper(lower A) = lower A`
    LowerIdempotent,
    /// `upper(upper A) = lower(upper A) = upper A`
    UpperIdempotent,
    /// `upper(A) * upper(B) ⊆ upper(A * B)`
    UpperProduct,
    /// `upper(A * B) ⊆ upper(A) * upper(B)`
    UpperProductReverse,
    /// `lower(A) * lower(B) ⊆ lower(A * B)`
    LowerProduct,
    /// `A ⊆ B` implies `lower(A) ⊆ lower(B)` and `upper(A) ⊆ upper(B)`
    Monotone,
    /// `lower(A * B) ≠ ∅` implies `lower(A) * lower(B) ⊆ lower(A * B)`
    GuardedLowerProduct,
}

impl Law {
    pub fn needs_algebra(self) -> bool {
        matches!(
            self,
            Law::UpperProduct | Law::UpperProductReverse | Law::LowerProduct | Law::GuardedLowerProduct
        )
    }
}

/// A family of laws addressed together on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum LawGroup {
    /// Laws of an approximation space, plus the two product laws.
    Pawlak,
    /// Laws stated for an arbitrary equivalence on an algebra.
    Equivalence,
    /// Product laws stated for a congruence.
    Congruence,
}

impl LawGroup {
    pub const ALL: [LawGroup; 3] = [LawGroup::Pawlak, LawGroup::Equivalence, LawGroup::Congruence];

    /// External code prefix.
    pub fn code(self) -> &'static str {
        match self {
            LawGroup::Pawlak => "2-1",
            LawGroup::Equivalence => "3-1",
            LawGroup::Congruence => "3-2",
        }
    }

    /// `(item code, law)` in report order.
    pub fn items(self) -> &'static [(&'static str, Law)] {
        use Law::*;
        match self {
            LawGroup::Pawlak => &[
                ("1", LowerInsideUpper),
                ("2", Extremes),
                ("3", LowerUnion),
                ("4", LowerIntersection),
                ("5", UpperUnion),
                ("6", UpperIntersection),
                ("7", UpperComplement),
                ("8", LowerComplement),
                ("9", LowerIdempotent),
                ("10", UpperIdempotent),
                ("11-sub", UpperProduct),
                ("11-sup", UpperProductReverse),
                ("12", LowerProduct),
            ],
            LawGroup::Equivalence => &[
                ("1", LowerInsideUpper),
                ("2", UpperUnion),
                ("3", LowerIntersection),
                ("4", Monotone),
                ("5", LowerUnion),
                ("6", UpperIntersection),
            ],
            LawGroup::Congruence => &[("1", UpperProduct), ("2", GuardedLowerProduct)],
        }
    }

    pub fn properties(self) -> impl Iterator<Item = PropertyId> {
        self.items().iter().map(move |&(item, law)| PropertyId {
            group: self,
            item,
            law,
        })
    }
}

impl FromStr for LawGroup {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        LawGroup::ALL
            .into_iter()
            .find(|g| g.code() == s.trim())
            .ok_or_else(|| format!("unknown law group `{s}` (expected 2-1, 3-1 or 3-2)"))
    }
}

/// A law under its external identifier, e.g. `2-1.11-sup`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PropertyId {
    pub group: LawGroup,
    pub item: &'static str,
    pub law: Law,
}

impl PropertyId {
    pub fn all() -> impl Iterator<Item = PropertyId> {
        LawGroup::ALL.into_iter().flat_map(LawGroup::properties)
    }
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.group.code(), self.item)
    }
}

impl FromStr for PropertyId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim();
        PropertyId::all()
            .find(|p| p.to_string() == s)
            .ok_or_else(|| format!("unknown property `{s}`"))
    }
}

impl Serialize for PropertyId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Result of evaluating one law at one `(A, B)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum LawStatus {
    Holds,
    /// The law's hypothesis is false at this input.
    Vacuous,
    /// `element` lies in the difference that breaks the law.
    Fails { element: usize },
    /// A product law evaluated without an algebra.
    NotApplicable,
}

impl LawStatus {
    pub fn is_failure(self) -> bool {
        matches!(self, LawStatus::Fails { .. })
    }

    fn and(self, other: impl FnOnce() -> LawStatus) -> LawStatus {
        match self {
            LawStatus::Holds => other(),
            s => s,
        }
    }
}

fn subset_of(lhs: Subset, rhs: Subset) -> LawStatus {
    match (lhs - rhs).first() {
        None => LawStatus::Holds,
        Some(element) => LawStatus::Fails { element },
    }
}

fn equal(lhs: Subset, rhs: Subset) -> LawStatus {
    match lhs.symmetric_difference(&rhs).first() {
        None => LawStatus::Holds,
        Some(element) => LawStatus::Fails { element },
    }
}

/// Evaluates one law in `space` at `(a, b)`.
pub fn evaluate_law(space: &ApproximationSpace, law: Law, a: &Subset, b: &Subset) -> LawStatus {
    let n = space.order();
    let lo = |s: &Subset| space.lower(s);
    let up = |s: &Subset| space.upper(s);
    let (a, b) = (*a, *b);
    let alg = match (law.needs_algebra(), space.algebra()) {
        (true, None) => return LawStatus::NotApplicable,
        (_, alg) => alg,
    };
    let prod = |x: Subset, y: Subset| product_set(alg.expect("checked above"), &x, &y);
    match law {
        Law::LowerInsideUpper => subset_of(lo(&a), a).and(|| subset_of(a, up(&a))),
        Law::Extremes => {
            let (e, u) = (Subset::empty(n), Subset::full(n));
            equal(lo(&e), e)
                .and(|| equal(up(&e), e))
                .and(|| equal(lo(&u), u))
                .and(|| equal(up(&u), u))
        }
        Law::LowerUnion => subset_of(lo(&a) | lo(&b), lo(&(a | b))),
        Law::LowerIntersection => equal(lo(&(a & b)), lo(&a) & lo(&b)),
        Law::UpperUnion => equal(up(&(a | b)), up(&a) | up(&b)),
        Law::UpperIntersection => subset_of(up(&(a & b)), up(&a) & up(&b)),
        Law::UpperComplement => equal(up(&!a), !lo(&a)),
        Law::LowerComplement => equal(lo(&!a), !up(&a)),
        Law::LowerIdempotent => {
            let l = lo(&a);
            equal(lo(&l), l).and(|| equal(up(&l), l))
        }
        Law::UpperIdempotent => {
            let u = up(&a);
            equal(up(&u), u).and(|| equal(lo(&u), u))
        }
        Law::UpperProduct => subset_of(prod(up(&a), up(&b)), up(&prod(a, b))),
        Law::UpperProductReverse => subset_of(up(&prod(a, b)), prod(up(&a), up(&b))),
        Law::LowerProduct => subset_of(prod(lo(&a), lo(&b)), lo(&prod(a, b))),
        Law::Monotone => {
            if !a.is_subset(&b) {
                LawStatus::Vacuous
            } else {
                subset_of(lo(&a), lo(&b)).and(|| subset_of(up(&a), up(&b)))
            }
        }
        Law::GuardedLowerProduct => {
            let target = lo(&prod(a, b));
            if target.is_empty() {
                LawStatus::Vacuous
            } else {
                subset_of(prod(lo(&a), lo(&b)), target)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LawOutcome {
    pub id: PropertyId,
    pub law: Law,
    #[serde(flatten)]
    pub status: LawStatus,
}

/// Whether the partition is compatible with the algebra. Product-law
/// verdicts only carry theorem weight when it is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CongruenceInfo {
    pub congruence: bool,
    pub complete: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub group: LawGroup,
    pub outcomes: Vec<LawOutcome>,
    pub congruence: Option<CongruenceInfo>,
}

impl LawReport {
    pub fn failures(&self) -> impl Iterator<Item = &LawOutcome> {
        self.outcomes.iter().filter(|o| o.status.is_failure())
    }

    pub fn all_hold(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn status(&self, item: &str) -> Option<LawStatus> {
        self.outcomes
            .iter()
            .find(|o| o.id.item == item)
            .map(|o| o.status)
    }
}

pub fn congruence_info(alg: &FiniteAlgebra, p: &Partition) -> Result<CongruenceInfo> {
    let congruence = is_congruence(alg, p)?.holds();
    let complete = congruence && is_complete_congruence(alg, p)?.holds();
    Ok(CongruenceInfo {
        congruence,
        complete,
    })
}

fn run_group(space: &ApproximationSpace, group: LawGroup, a: &Subset, b: &Subset) -> LawReport {
    let congruence = space.algebra().map(|alg| {
        congruence_info(alg, space.partition()).expect("space orders agree")
    });
    LawReport {
        group,
        outcomes: group
            .properties()
            .map(|id| LawOutcome {
                id,
                law: id.law,
                status: evaluate_law(space, id.law, a, b),
            })
            .collect(),
        congruence,
    }
}

/// The thirteen approximation-space laws. The three product laws report
/// `NotApplicable` when the space has no algebra.
pub fn check_pawlak_laws(space: &ApproximationSpace, a: &Subset, b: &Subset) -> LawReport {
    run_group(space, LawGroup::Pawlak, a, b)
}

/// The six laws for an arbitrary equivalence relation.
pub fn check_equivalence_laws(space: &ApproximationSpace, a: &Subset, b: &Subset) -> LawReport {
    run_group(space, LawGroup::Equivalence, a, b)
}

/// Product laws under a congruence. Rejects partitions that are not
/// congruences; the report records whether the congruence is complete.
pub fn check_congruence_laws(
    alg: &FiniteAlgebra,
    p: &Partition,
    a: &Subset,
    b: &Subset,
) -> Result<LawReport> {
    if let Some(w) = is_congruence(alg, p)?.witness {
        return Err(Error::NotCongruence(w));
    }
    let space = ApproximationSpace::with_algebra(alg.clone(), p.clone())?;
    Ok(run_group(&space, LawGroup::Congruence, a, b))
}
