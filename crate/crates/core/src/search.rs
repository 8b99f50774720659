//! Exhaustive search: model enumeration under axiom constraints,
//! congruence enumeration, and counterexample hunting for the
//! approximation laws.
//!
//! Every search is deterministic. Algebras are produced in lexicographic
//! order of their row-major tables, partitions in restricted-growth order,
//! and subsets by cardinality then lexicographically, so the first finding
//! is well defined.

use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::algebra::AxiomId;
use crate::relations::{is_complete_congruence, is_congruence};
use crate::rough::{evaluate_law, ApproximationSpace, LawGroup, LawStatus, PropertyId};
use crate::{Error, FiniteAlgebra, Partition, Result, Subset};

/// Default largest order accepted for full model enumeration.
pub const DEFAULT_MAX_MODEL_ORDER: usize = 5;
/// Default largest order for congruence enumeration (Bell(6) = 203).
pub const DEFAULT_MAX_CONGRUENCE_ORDER: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Stop with [`Error::BudgetExceeded`] once more models than this exist.
    pub max_models: Option<u64>,
    /// Wall-clock budget for the whole search.
    pub time_budget: Option<Duration>,
    pub max_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_models: None,
            time_budget: None,
            max_order: DEFAULT_MAX_MODEL_ORDER,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    CountModels,
    Property(PropertyId),
}

/// Which partitions of each algebra a counterexample hunt visits.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PartitionScope {
    #[default]
    All,
    Congruences,
    CompleteCongruences,
    NonCompleteCongruences,
}

impl PartitionScope {
    pub fn admits(self, alg: &FiniteAlgebra, p: &Partition) -> bool {
        if self == PartitionScope::All {
            return true;
        }
        if !is_congruence(alg, p).expect("orders agree").holds() {
            return false;
        }
        match self {
            PartitionScope::Congruences => true,
            complete => {
                let c = is_complete_congruence(alg, p).expect("is a congruence").holds();
                c == (complete == PartitionScope::CompleteCongruences)
            }
        }
    }
}

impl std::str::FromStr for PartitionScope {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "all" => Ok(Self::All),
            "congruences" => Ok(Self::Congruences),
            "complete" => Ok(Self::CompleteCongruences),
            "non-complete" => Ok(Self::NonCompleteCongruences),
            _ => Err(format!(
                "unknown scope `{s}` (expected all, congruences, complete or non-complete)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchSpec {
    pub order: usize,
    pub axioms: Vec<AxiomId>,
    pub target: Target,
    pub scope: PartitionScope,
    pub limits: Limits,
}

impl SearchSpec {
    pub fn count(order: usize, axioms: &[AxiomId]) -> Self {
        Self {
            order,
            axioms: axioms.to_vec(),
            target: Target::CountModels,
            scope: PartitionScope::All,
            limits: Limits::default(),
        }
    }

    pub fn find(order: usize, axioms: &[AxiomId], property: PropertyId, scope: PartitionScope) -> Self {
        Self {
            target: Target::Property(property),
            scope,
            ..Self::count(order, axioms)
        }
    }
}

struct Clock {
    deadline: Option<Instant>,
    ticks: u32,
}

impl Clock {
    fn new(budget: Option<Duration>) -> Self {
        Self {
            deadline: budget.map(|b| Instant::now() + b),
            ticks: 0,
        }
    }

    fn expired(&mut self) -> bool {
        self.ticks = self.ticks.wrapping_add(1);
        self.ticks.is_multiple_of(1024) && self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}

const UNSET: usize = usize::MAX;

struct ModelSearch<F> {
    n: usize,
    cells: Vec<usize>,
    free: Vec<usize>,
    sink: F,
    count: u64,
    max_models: Option<u64>,
    clock: Clock,
}

enum Stop {
    Sink,
    Budget(&'static str),
}

impl<F: FnMut(&FiniteAlgebra) -> ControlFlow<()>> ModelSearch<F> {
    fn lookup(&self, x: usize, y: usize) -> Option<usize> {
        let v = self.cells[x * self.n + y];
        (v != UNSET).then_some(v)
    }

    /// Drops satisfied instances from `pending`; `false` on a violation.
    fn settle(&self, pending: &[(AxiomId, [usize; 3])], keep: &mut Vec<(AxiomId, [usize; 3])>) -> bool {
        keep.clear();
        for &(axiom, t) in pending {
            match axiom.eval(|x, y| self.lookup(x, y), 0, &t[..axiom.arity()]) {
                None => keep.push((axiom, t)),
                Some(true) => {}
                Some(false) => return false,
            }
        }
        true
    }

    fn descend(&mut self, depth: usize, pending: &[(AxiomId, [usize; 3])]) -> std::result::Result<(), Stop> {
        if self.clock.expired() {
            return Err(Stop::Budget("time budget"));
        }
        if depth == self.free.len() {
            debug_assert!(pending.is_empty());
            if self.max_models.is_some_and(|m| self.count >= m) {
                return Err(Stop::Budget("model cap"));
            }
            self.count += 1;
            let alg = FiniteAlgebra::from_flat(self.n, self.cells.clone(), 0).expect("closed by construction");
            return match (self.sink)(&alg) {
                ControlFlow::Continue(()) => Ok(()),
                ControlFlow::Break(()) => Err(Stop::Sink),
            };
        }
        let cell = self.free[depth];
        let mut keep = Vec::with_capacity(pending.len());
        for v in 0..self.n {
            self.cells[cell] = v;
            if self.settle(pending, &mut keep) {
                self.descend(depth + 1, &keep)?;
            }
        }
        self.cells[cell] = UNSET;
        Ok(())
    }
}

/// Enumerates every table on `{0..n-1}` with zero `0` satisfying all of
/// `spec.axioms`, feeding each to `sink` in lexicographic order. Returns
/// the number of models emitted. Tables are raw: isomorphic copies are all
/// counted.
///
/// Cells forced by C1, C2 and C6 are fixed up front; the remaining cells
/// are assigned depth first and each axiom instance is checked as soon as
/// every cell it reads is known.
pub fn enumerate_algebras<F>(spec: &SearchSpec, sink: F) -> Result<u64>
where
    F: FnMut(&FiniteAlgebra) -> ControlFlow<()>,
{
    let n = spec.order;
    if n == 0 {
        return Err(Error::InvalidOrder {
            n,
            max: spec.limits.max_order,
        });
    }
    if n > spec.limits.max_order {
        return Err(Error::TooLarge {
            n,
            limit: spec.limits.max_order,
        });
    }
    if spec.axioms.is_empty() {
        return Err(Error::EmptyAxiomSet);
    }
    let mut axioms = spec.axioms.clone();
    axioms.sort();
    axioms.dedup();

    let mut cells = vec![UNSET; n * n];
    let mut force = |cell: usize, v: usize| -> bool {
        if cells[cell] == UNSET || cells[cell] == v {
            cells[cell] = v;
            true
        } else {
            false
        }
    };
    let mut consistent = true;
    for x in 0..n {
        for &a in &axioms {
            consistent &= match a {
                AxiomId::C1 => force(x * n + x, 0),
                AxiomId::C2 => force(x * n, x),
                AxiomId::C6 => force(x * n + x, x),
                _ => true,
            };
        }
    }
    if !consistent {
        return Ok(0);
    }
    let free = (0..n * n).filter(|&c| cells[c] == UNSET).collect();

    let mut pending = Vec::new();
    for &a in &axioms {
        let k = a.arity();
        for idx in 0..n.pow(k as u32) {
            let mut t = [0; 3];
            let mut rest = idx;
            for slot in t[..k].iter_mut().rev() {
                *slot = rest % n;
                rest /= n;
            }
            pending.push((a, t));
        }
    }

    let mut search = ModelSearch {
        n,
        cells,
        free,
        sink,
        count: 0,
        max_models: spec.limits.max_models,
        clock: Clock::new(spec.limits.time_budget),
    };
    let mut root = Vec::new();
    if !search.settle(&pending, &mut root) {
        return Ok(0);
    }
    match search.descend(0, &root) {
        Ok(()) | Err(Stop::Sink) => Ok(search.count),
        Err(Stop::Budget(reason)) => Err(Error::BudgetExceeded {
            count: search.count,
            reason,
        }),
    }
}

/// Number of models of `spec.axioms` at `spec.order`.
pub fn count_models(spec: &SearchSpec) -> Result<u64> {
    enumerate_algebras(spec, |_| ControlFlow::Continue(()))
}

pub fn enumerate_congruences(alg: &FiniteAlgebra) -> Result<Vec<Partition>> {
    enumerate_congruences_with(alg, DEFAULT_MAX_CONGRUENCE_ORDER)
}

/// All congruences of `alg`, in restricted-growth order.
pub fn enumerate_congruences_with(alg: &FiniteAlgebra, max_order: usize) -> Result<Vec<Partition>> {
    let n = alg.order();
    if n > max_order {
        return Err(Error::TooLarge {
            n,
            limit: max_order,
        });
    }
    Ok(Partition::enumerate(n)
        .filter(|p| is_congruence(alg, p).expect("orders agree").holds())
        .collect())
}

/// A concrete input at which a law fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub partition: Partition,
    pub a: Subset,
    pub b: Subset,
    /// Element witnessing the failed inclusion or equality.
    pub element: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub property: PropertyId,
    pub algebra: FiniteAlgebra,
    #[serde(flatten)]
    pub counterexample: Counterexample,
}

fn hunt_algebra(
    alg: &FiniteAlgebra,
    property: PropertyId,
    scope: PartitionScope,
    clock: &mut Clock,
) -> std::result::Result<Option<Counterexample>, ()> {
    let n = alg.order();
    let subsets: Vec<Subset> = Subset::all(n).collect();
    for p in Partition::enumerate(n).filter(|p| scope.admits(alg, p)) {
        let space = ApproximationSpace::with_algebra(alg.clone(), p).expect("orders agree");
        for a in &subsets {
            if clock.expired() {
                return Err(());
            }
            for b in &subsets {
                if let LawStatus::Fails { element } = evaluate_law(&space, property.law, a, b) {
                    return Ok(Some(Counterexample {
                        partition: space.partition().clone(),
                        a: *a,
                        b: *b,
                        element,
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// Hunts for the first violation of the target property over every model
/// of `spec.axioms` at `spec.order`.
pub fn find_counterexample(spec: &SearchSpec) -> Result<Option<Finding>> {
    let Target::Property(property) = spec.target else {
        return Ok(None);
    };
    let mut clock = Clock::new(spec.limits.time_budget);
    let mut found = None;
    let mut timed_out = false;
    let res = enumerate_algebras(
        &SearchSpec {
            limits: Limits {
                time_budget: None,
                ..spec.limits
            },
            ..spec.clone()
        },
        |alg| match hunt_algebra(alg, property, spec.scope, &mut clock) {
            Ok(None) => ControlFlow::Continue(()),
            Ok(Some(counterexample)) => {
                found = Some(Finding {
                    property,
                    algebra: alg.clone(),
                    counterexample,
                });
                ControlFlow::Break(())
            }
            Err(()) => {
                timed_out = true;
                ControlFlow::Break(())
            }
        },
    );
    let count = res?;
    if timed_out {
        return Err(Error::BudgetExceeded {
            count,
            reason: "time budget",
        });
    }
    Ok(found)
}

/// Same hunt over a fixed list of algebras, visited in the given order.
pub fn find_counterexample_in(
    algebras: &[FiniteAlgebra],
    property: PropertyId,
    scope: PartitionScope,
    limits: &Limits,
) -> Result<Option<Finding>> {
    let mut clock = Clock::new(limits.time_budget);
    for (i, alg) in algebras.iter().enumerate() {
        match hunt_algebra(alg, property, scope, &mut clock) {
            Ok(None) => {}
            Ok(Some(counterexample)) => {
                return Ok(Some(Finding {
                    property,
                    algebra: alg.clone(),
                    counterexample,
                }))
            }
            Err(()) => {
                return Err(Error::BudgetExceeded {
                    count: i as u64,
                    reason: "time budget",
                })
            }
        }
    }
    Ok(None)
}

/// Aggregate verdicts for one law across a sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawTally {
    pub id: PropertyId,
    pub evaluated: u64,
    pub vacuous: u64,
    pub not_applicable: u64,
    pub violations: u64,
    pub first_violation: Option<Counterexample>,
}

impl LawTally {
    pub fn holds(&self) -> bool {
        self.violations == 0
    }
}

/// Evaluates every law of `group` at every `(partition, A, B)` with
/// `partition` drawn from `partitions`.
pub fn sweep(alg: &FiniteAlgebra, group: LawGroup, partitions: &[Partition]) -> Result<Vec<LawTally>> {
    let n = alg.order();
    let mut tallies: Vec<LawTally> = group
        .properties()
        .map(|id| LawTally {
            id,
            evaluated: 0,
            vacuous: 0,
            not_applicable: 0,
            violations: 0,
            first_violation: None,
        })
        .collect();
    let subsets: Vec<Subset> = Subset::all(n).collect();
    for p in partitions {
        let space = ApproximationSpace::with_algebra(alg.clone(), p.clone())?;
        for a in &subsets {
            for b in &subsets {
                for t in tallies.iter_mut() {
                    t.evaluated += 1;
                    match evaluate_law(&space, t.id.law, a, b) {
                        LawStatus::Holds => {}
                        LawStatus::Vacuous => t.vacuous += 1,
                        LawStatus::NotApplicable => t.not_applicable += 1,
                        LawStatus::Fails { element } => {
                            t.violations += 1;
                            t.first_violation.get_or_insert_with(|| Counterexample {
                                partition: p.clone(),
                                a: *a,
                                b: *b,
                                element,
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(tallies)
}
