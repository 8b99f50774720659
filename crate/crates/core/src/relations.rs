//! Equivalence relations, partitions, congruences, and the relation a
//! subset induces through `x*y in I and y*x in I`.

use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::algebra::product_set;
use crate::{Error, FiniteAlgebra, Result, Subset, Verdict, MAX_ORDER};

/// A partition of `{0..n-1}` into nonempty, pairwise disjoint classes.
///
/// Classes are kept sorted by their smallest element, so two partitions
/// with the same blocks compare equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    n: usize,
    classes: Vec<Subset>,
    class_index: Vec<usize>,
}

impl Partition {
    pub fn from_classes(n: usize, classes: Vec<Subset>) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::InvalidOrder { n, max: MAX_ORDER });
        }
        let mut seen = Subset::empty(n);
        for (index, class) in classes.iter().enumerate() {
            if class.universe() != n {
                return Err(Error::SizeMismatch {
                    expected: n,
                    found: class.universe(),
                });
            }
            if class.is_empty() {
                return Err(Error::EmptyClass { index });
            }
            if let Some(element) = (seen & *class).first() {
                return Err(Error::PartitionOverlap { element });
            }
            seen = seen | *class;
        }
        if let Some(element) = seen.complement().first() {
            return Err(Error::PartitionCoverage { element });
        }
        Ok(Self::build(n, classes))
    }

    /// Partition whose classes are the fibres of `labels`. Any labelling
    /// works; class ids are renumbered canonically.
    pub fn from_labels(labels: &[usize]) -> Result<Self> {
        let n = labels.len();
        if n == 0 || n > MAX_ORDER {
            return Err(Error::InvalidOrder { n, max: MAX_ORDER });
        }
        let classes = labels
            .iter()
            .copied()
            .unique()
            .map(|l| {
                Subset::from_bits(
                    n,
                    labels
                        .iter()
                        .enumerate()
                        .filter(|&(_, &m)| m == l)
                        .fold(0u64, |b, (i, _)| b | 1 << i),
                )
            })
            .collect();
        Ok(Self::build(n, classes))
    }

    fn build(n: usize, mut classes: Vec<Subset>) -> Self {
        classes.sort_by_key(|c| c.first());
        let mut class_index = vec![0; n];
        for (i, c) in classes.iter().enumerate() {
            for x in c {
                class_index[x] = i;
            }
        }
        Self {
            n,
            classes,
            class_index,
        }
    }

    /// Every element in its own class.
    pub fn discrete(n: usize) -> Self {
        Self::build(n, (0..n).map(|x| Subset::singleton(n, x)).collect())
    }

    /// One class holding the whole carrier.
    pub fn single(n: usize) -> Self {
        Self::build(n, vec![Subset::full(n)])
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &[Subset] {
        &self.classes
    }

    pub fn class_id(&self, x: usize) -> usize {
        self.class_index[x]
    }

    /// `[x]`, the class containing `x`.
    pub fn class_of(&self, x: usize) -> Subset {
        self.classes[self.class_index[x]]
    }

    pub fn same_class(&self, x: usize, y: usize) -> bool {
        self.class_index[x] == self.class_index[y]
    }

    pub fn is_discrete(&self) -> bool {
        self.classes.len() == self.n
    }

    pub fn to_relation(&self) -> RelationPairs {
        RelationPairs {
            left: self.n,
            right: self.n,
            succ: (0..self.n).map(|x| self.class_of(x)).collect(),
        }
    }

    /// All partitions of `{0..n-1}`, in lexicographic order of their
    /// restricted growth strings. The single-class partition comes first
    /// and the discrete partition last.
    pub fn enumerate(n: usize) -> impl Iterator<Item = Partition> {
        RestrictedGrowth::new(n).map(|labels| Partition::from_labels(&labels).expect("n >= 1"))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            self.classes.iter().map(|c| c.iter().join(",")).join("|")
        )
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.classes.iter())
    }
}

struct RestrictedGrowth {
    labels: Vec<usize>,
    done: bool,
}

impl RestrictedGrowth {
    fn new(n: usize) -> Self {
        Self {
            labels: vec![0; n],
            done: n == 0,
        }
    }
}

impl Iterator for RestrictedGrowth {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.labels.clone();
        // increment the rightmost position that may grow, reset the tail
        let n = self.labels.len();
        self.done = true;
        for i in (1..n).rev() {
            let max_prefix = self.labels[..i].iter().copied().max().unwrap_or(0);
            if self.labels[i] <= max_prefix {
                self.labels[i] += 1;
                self.labels[i + 1..].iter_mut().for_each(|l| *l = 0);
                self.done = false;
                break;
            }
        }
        Some(out)
    }
}

/// A binary relation as a set of ordered pairs, stored as one successor
/// set per left element. Square for relations on a single carrier;
/// rectangular for graphs of set-valued maps.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RelationPairs {
    left: usize,
    right: usize,
    succ: Vec<Subset>,
}

impl RelationPairs {
    pub fn new(n: usize) -> Self {
        Self::rectangular(n, n)
    }

    pub fn rectangular(left: usize, right: usize) -> Self {
        Self {
            left,
            right,
            succ: vec![Subset::empty(right); left],
        }
    }

    pub fn from_pairs<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut rel = Self::new(n);
        for (x, y) in pairs {
            for e in [x, y] {
                if e >= n {
                    return Err(Error::ElementOutOfRange { element: e, n });
                }
            }
            rel.insert(x, y);
        }
        Ok(rel)
    }

    pub(crate) fn from_successors(right: usize, succ: Vec<Subset>) -> Self {
        Self {
            left: succ.len(),
            right,
            succ,
        }
    }

    pub fn identity(n: usize) -> Self {
        Partition::discrete(n).to_relation()
    }

    pub fn full(n: usize) -> Self {
        Self {
            left: n,
            right: n,
            succ: vec![Subset::full(n); n],
        }
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.left, self.right)
    }

    pub fn is_square(&self) -> bool {
        self.left == self.right
    }

    pub fn insert(&mut self, x: usize, y: usize) {
        self.succ[x].insert(y);
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        x < self.left && self.succ[x].contains(y)
    }

    /// `{ y | (x, y) in R }`
    pub fn successors(&self, x: usize) -> Subset {
        self.succ[x]
    }

    pub fn len(&self) -> usize {
        self.succ.iter().map(Subset::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.succ.iter().all(Subset::is_empty)
    }

    /// Pairs in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(x, s)| s.iter().map(move |y| (x, y)))
    }
}

impl fmt::Debug for RelationPairs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.pairs()).finish()
    }
}

impl Serialize for RelationPairs {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.pairs().map(|(x, y)| [x, y]))
    }
}

/// First failure of each equivalence property, if any.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct EquivalenceCheck {
    /// `x` with `(x, x)` missing.
    pub reflexive: Option<usize>,
    /// `(x, y)` present with `(y, x)` missing.
    pub symmetric: Option<(usize, usize)>,
    /// `(x, y, z)` with `(x, y)`, `(y, z)` present and `(x, z)` missing.
    pub transitive: Option<(usize, usize, usize)>,
}

impl EquivalenceCheck {
    pub fn holds(&self) -> bool {
        self.reflexive.is_none() && self.symmetric.is_none() && self.transitive.is_none()
    }
}

impl fmt::Display for EquivalenceCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(x) = self.reflexive {
            parts.push(format!("not reflexive at {x}"));
        }
        if let Some((x, y)) = self.symmetric {
            parts.push(format!("not symmetric at ({x},{y})"));
        }
        if let Some((x, y, z)) = self.transitive {
            parts.push(format!("not transitive at ({x},{y},{z})"));
        }
        if parts.is_empty() {
            parts.push("equivalence".into());
        }
        write!(f, "{}", parts.join("; "))
    }
}

pub fn is_equivalence(rel: &RelationPairs) -> Result<EquivalenceCheck> {
    if !rel.is_square() {
        return Err(Error::SizeMismatch {
            expected: rel.left,
            found: rel.right,
        });
    }
    let n = rel.left;
    let reflexive = (0..n).find(|&x| !rel.contains(x, x));
    let symmetric = rel.pairs().find(|&(x, y)| !rel.contains(y, x));
    let transitive = rel.pairs().find_map(|(x, y)| {
        rel.successors(y)
            .iter()
            .find(|&z| !rel.contains(x, z))
            .map(|z| (x, y, z))
    });
    Ok(EquivalenceCheck {
        reflexive,
        symmetric,
        transitive,
    })
}

pub fn to_partition(rel: &RelationPairs) -> Result<Partition> {
    let check = is_equivalence(rel)?;
    if !check.holds() {
        return Err(Error::NotEquivalence(check));
    }
    let n = rel.left;
    let classes = (0..n)
        .map(|x| rel.successors(x))
        .unique()
        .collect::<Vec<_>>();
    Partition::from_classes(n, classes)
}

/// Which multiplication side broke compatibility.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Side {
    /// `x*z` and `y*z` land in different classes.
    Right,
    /// `z*x` and `z*y` land in different classes.
    Left,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CongruenceWitness {
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub side: Side,
}

impl fmt::Display for CongruenceWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let CongruenceWitness { x, y, z, side } = *self;
        match side {
            Side::Right => write!(f, "{x}~{y} but {x}*{z} !~ {y}*{z}"),
            Side::Left => write!(f, "{x}~{y} but {z}*{x} !~ {z}*{y}"),
        }
    }
}

fn same_order(alg: &FiniteAlgebra, p: &Partition) -> Result<()> {
    if alg.order() != p.order() {
        return Err(Error::SizeMismatch {
            expected: alg.order(),
            found: p.order(),
        });
    }
    Ok(())
}

/// Two-sided compatibility: `x ~ y` implies `x*z ~ y*z` and `z*x ~ z*y`.
pub fn is_congruence(alg: &FiniteAlgebra, p: &Partition) -> Result<Verdict<CongruenceWitness>> {
    same_order(alg, p)?;
    let n = alg.order();
    for x in 0..n {
        for y in p.class_of(x).iter() {
            for z in 0..n {
                let side = if !p.same_class(alg.op(x, z), alg.op(y, z)) {
                    Side::Right
                } else if !p.same_class(alg.op(z, x), alg.op(z, y)) {
                    Side::Left
                } else {
                    continue;
                };
                return Ok(Verdict::fail(CongruenceWitness { x, y, z, side }));
            }
        }
    }
    Ok(Verdict::pass())
}

/// A pair of classes whose product and target class disagree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassProductWitness {
    pub x: usize,
    pub y: usize,
    /// Element in the symmetric difference of `[x]*[y]` and `[x*y]`.
    pub element: usize,
}

/// `[x]*[y] = [x*y]` for all `x, y`. The partition must be a congruence.
pub fn is_complete_congruence(
    alg: &FiniteAlgebra,
    p: &Partition,
) -> Result<Verdict<ClassProductWitness>> {
    if let Some(w) = is_congruence(alg, p)?.witness {
        return Err(Error::NotCongruence(w));
    }
    Ok(first_class_pair(alg, p, |prod, target| {
        prod.symmetric_difference(&target).first()
    }))
}

/// `[x]*[y] ⊆ [x*y]` for all `x, y`, checked directly from the classes.
pub fn class_product_inclusion(
    alg: &FiniteAlgebra,
    p: &Partition,
) -> Result<Verdict<ClassProductWitness>> {
    same_order(alg, p)?;
    Ok(first_class_pair(alg, p, |prod, target| {
        prod.difference(&target).first()
    }))
}

fn first_class_pair<F>(alg: &FiniteAlgebra, p: &Partition, offending: F) -> Verdict<ClassProductWitness>
where
    F: Fn(Subset, Subset) -> Option<usize>,
{
    let n = alg.order();
    (0..n)
        .cartesian_product(0..n)
        .find_map(|(x, y)| {
            let prod = product_set(alg, &p.class_of(x), &p.class_of(y));
            offending(prod, p.class_of(alg.op(x, y))).map(|element| ClassProductWitness {
                x,
                y,
                element,
            })
        })
        .into()
}

/// `{ (x, y) | x*y in I and y*x in I }`. Not necessarily an equivalence.
pub fn relation_from_ideal(alg: &FiniteAlgebra, ideal: &Subset) -> RelationPairs {
    let n = alg.order();
    assert_eq!(ideal.universe(), n, "subset carrier does not match algebra");
    let mut rel = RelationPairs::new(n);
    for x in 0..n {
        for y in 0..n {
            if ideal.contains(alg.op(x, y)) && ideal.contains(alg.op(y, x)) {
                rel.insert(x, y);
            }
        }
    }
    rel
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(n: usize, xs: &[usize]) -> Subset {
        Subset::from_elements(n, xs.iter().copied()).unwrap()
    }

    fn example31() -> Partition {
        Partition::from_classes(
            5,
            vec![set(5, &[0, 1]), set(5, &[2]), set(5, &[3]), set(5, &[4])],
        )
        .unwrap()
    }

    #[test]
    fn partition_validation() {
        assert_eq!(example31().classes().len(), 4);
        assert_eq!(
            Partition::from_classes(3, vec![set(3, &[0, 1]), set(3, &[1, 2])]),
            Err(Error::PartitionOverlap { element: 1 })
        );
        assert_eq!(
            Partition::from_classes(3, vec![set(3, &[0, 1])]),
            Err(Error::PartitionCoverage { element: 2 })
        );
        assert_eq!(
            Partition::from_classes(2, vec![set(2, &[0, 1]), set(2, &[])]),
            Err(Error::EmptyClass { index: 1 })
        );
        let d = Partition::from_classes(2, vec![set(2, &[1]), set(2, &[0])]).unwrap();
        assert_eq!(d, Partition::discrete(2));
    }

    #[test]
    fn bell_numbers() {
        let counts: Vec<usize> = (1..=6).map(|n| Partition::enumerate(n).count()).collect();
        assert_eq!(counts, [1, 2, 5, 15, 52, 203]);
        let first = Partition::enumerate(4).next().unwrap();
        let last = Partition::enumerate(4).last().unwrap();
        assert_eq!(first, Partition::single(4));
        assert_eq!(last, Partition::discrete(4));
    }

    #[test]
    fn equivalence_checks() {
        assert!(is_equivalence(&RelationPairs::identity(4)).unwrap().holds());
        let rel = RelationPairs::from_pairs(2, [(0, 0), (1, 1), (0, 1)]).unwrap();
        let check = is_equivalence(&rel).unwrap();
        assert_eq!(check.symmetric, Some((0, 1)));
        assert_eq!(check.reflexive, None);
        let t2 = fixtures::table2();
        let rel = relation_from_ideal(&t2, &set(5, &[0]));
        assert_eq!(rel, RelationPairs::identity(5));
        assert!(is_equivalence(&rel).unwrap().holds());
        assert!(is_equivalence(&RelationPairs::rectangular(2, 3)).is_err());
    }

    #[test]
    fn partition_from_relation() {
        assert_eq!(
            to_partition(&RelationPairs::identity(3)).unwrap(),
            Partition::discrete(3)
        );
        assert_eq!(
            to_partition(&RelationPairs::full(3)).unwrap(),
            Partition::single(3)
        );
        let mut rel = RelationPairs::identity(5);
        rel.insert(0, 1);
        rel.insert(1, 0);
        assert_eq!(to_partition(&rel).unwrap(), example31());
        rel = RelationPairs::from_pairs(2, [(0, 1)]).unwrap();
        assert!(matches!(
            to_partition(&rel),
            Err(Error::NotEquivalence(EquivalenceCheck {
                reflexive: Some(0),
                ..
            }))
        ));
    }

    #[test]
    fn congruence_checks() {
        let t2 = fixtures::table2();
        for alg in fixtures::all() {
            let n = alg.order();
            assert!(is_congruence(&alg, &Partition::discrete(n)).unwrap().holds());
            assert!(is_congruence(&alg, &Partition::single(n)).unwrap().holds());
        }
        let v = is_congruence(&t2, &example31()).unwrap();
        // 0~1 but 0*0=0 and 0*1=2 fall in different classes
        assert_eq!(
            v.witness,
            Some(CongruenceWitness {
                x: 0,
                y: 1,
                z: 0,
                side: Side::Left
            })
        );
        assert!(matches!(
            is_congruence(&t2, &Partition::discrete(4)),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn completeness() {
        let t3 = fixtures::table3();
        assert!(is_complete_congruence(&t3, &Partition::single(4)).unwrap().holds());
        assert!(is_complete_congruence(&t3, &Partition::discrete(4)).unwrap().holds());
        let p = Partition::from_labels(&[0, 0, 1, 2]).unwrap();
        assert!(is_congruence(&t3, &p).unwrap().holds());
        assert!(!is_complete_congruence(&t3, &p).unwrap().holds());
        let t2 = fixtures::table2();
        assert!(matches!(
            is_complete_congruence(&t2, &example31()),
            Err(Error::NotCongruence(_))
        ));
    }

    #[test]
    fn class_products() {
        let t2 = fixtures::table2();
        let v = class_product_inclusion(&t2, &example31()).unwrap();
        assert!(!v.holds());
        for alg in fixtures::all() {
            assert!(class_product_inclusion(&alg, &Partition::single(alg.order()))
                .unwrap()
                .holds());
        }
    }

    #[test]
    fn ideal_relation() {
        let t2 = fixtures::table2();
        let rel = relation_from_ideal(&t2, &set(5, &[0, 1]));
        // 0*1 = 2 is outside {0,1}
        assert!(!rel.contains(0, 1));
        for alg in fixtures::all() {
            let n = alg.order();
            let rel = relation_from_ideal(&alg, &set(n, &[0]));
            for (x, y) in rel.pairs() {
                assert!(rel.contains(y, x));
            }
        }
    }
}
