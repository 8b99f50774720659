//! Finite algebras given by their operation table, and the axiom systems
//! B, BH, BO and Z over them.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::{Error, Result, Subset, MAX_ORDER};

/// A finite magma `({0..n-1}, *, zero)` stored as a row-major table.
///
/// Construction validates closure only. No axiom is required to hold.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteAlgebra {
    n: usize,
    table: Vec<usize>,
    zero: usize,
}

impl FiniteAlgebra {
    /// `rows[x][y]` is `x * y`.
    pub fn new(n: usize, rows: Vec<Vec<usize>>, zero: usize) -> Result<Self> {
        if rows.len() != n {
            return Err(Error::TableShape {
                expected: n * n,
                found: rows.iter().map(Vec::len).sum(),
            });
        }
        if let Some(row) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::TableShape {
                expected: n,
                found: row.len(),
            });
        }
        Self::from_flat(n, rows.into_iter().flatten().collect(), zero)
    }

    pub fn from_flat(n: usize, table: Vec<usize>, zero: usize) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::InvalidOrder { n, max: MAX_ORDER });
        }
        if table.len() != n * n {
            return Err(Error::TableShape {
                expected: n * n,
                found: table.len(),
            });
        }
        if let Some(i) = table.iter().position(|&v| v >= n) {
            return Err(Error::Closure {
                row: i / n,
                col: i % n,
                value: table[i],
                n,
            });
        }
        if zero >= n {
            return Err(Error::ZeroOutOfRange { zero, n });
        }
        Ok(Self { n, table, zero })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y]
    }

    pub fn row(&self, x: usize) -> &[usize] {
        &self.table[x * self.n..(x + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.table.chunks(self.n)
    }

    pub fn carrier(&self) -> Subset {
        Subset::full(self.n)
    }
}

impl fmt::Debug for FiniteAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteAlgebra")
            .field("n", &self.n)
            .field("zero", &self.zero)
            .field("rows", &self.rows().collect::<Vec<_>>())
            .finish()
    }
}

impl Serialize for FiniteAlgebra {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("FiniteAlgebra", 3)?;
        st.serialize_field("order", &self.n)?;
        st.serialize_field("zero", &self.zero)?;
        st.serialize_field("rows", &self.rows().collect::<Vec<_>>())?;
        st.end()
    }
}

/// The seven axioms appearing in the B/BH/BO/Z definitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum AxiomId {
    /// `x*x = 0`
    C1,
    /// `x*0 = x`
    C2,
    /// `(x*y)*z = x*(z*(0*y))`
    C3,
    /// `x*y = y*x = 0  =>  x = y`
    C4,
    /// `x*(y*z) = (x*y)*(0*z)`
    C5,
    /// `x*x = x`
    C6,
    /// `x*y = y*x` for nonzero `x`, `y`
    C7,
}

impl AxiomId {
    pub const ALL: [AxiomId; 7] = [
        AxiomId::C1,
        AxiomId::C2,
        AxiomId::C3,
        AxiomId::C4,
        AxiomId::C5,
        AxiomId::C6,
        AxiomId::C7,
    ];

    /// Number of universally quantified variables.
    pub fn arity(self) -> usize {
        match self {
            AxiomId::C1 | AxiomId::C2 | AxiomId::C6 => 1,
            AxiomId::C4 | AxiomId::C7 => 2,
            AxiomId::C3 | AxiomId::C5 => 3,
        }
    }

    pub fn formula(self) -> &'static str {
        match self {
            AxiomId::C1 => "x*x = 0",
            AxiomId::C2 => "x*0 = x",
            AxiomId::C3 => "(x*y)*z = x*(z*(0*y))",
            AxiomId::C4 => "x*y = y*x = 0 => x = y",
            AxiomId::C5 => "x*(y*z) = (x*y)*(0*z)",
            AxiomId::C6 => "x*x = x",
            AxiomId::C7 => "x*y = y*x for x,y != 0",
        }
    }

    /// Evaluates the axiom at one tuple. `tuple.len()` must equal the arity.
    pub fn holds_at(self, alg: &FiniteAlgebra, tuple: &[usize]) -> bool {
        assert_eq!(tuple.len(), self.arity(), "wrong tuple arity for {self}");
        self.eval(|x, y| Some(alg.op(x, y)), alg.zero(), tuple)
            .unwrap_or(true)
    }

    /// Evaluates against a possibly partial table. `None` means some
    /// needed cell is not yet known.
    pub(crate) fn eval<F>(self, op: F, zero: usize, t: &[usize]) -> Option<bool>
    where
        F: Fn(usize, usize) -> Option<usize>,
    {
        Some(match self {
            AxiomId::C1 => op(t[0], t[0])? == zero,
            AxiomId::C2 => op(t[0], zero)? == t[0],
            AxiomId::C3 => {
                let (x, y, z) = (t[0], t[1], t[2]);
                let lhs = op(op(x, y)?, z)?;
                let rhs = op(x, op(z, op(zero, y)?)?)?;
                lhs == rhs
            }
            AxiomId::C4 => {
                let (x, y) = (t[0], t[1]);
                x == y || op(x, y)? != zero || op(y, x)? != zero
            }
            AxiomId::C5 => {
                let (x, y, z) = (t[0], t[1], t[2]);
                let lhs = op(x, op(y, z)?)?;
                let rhs = op(op(x, y)?, op(zero, z)?)?;
                lhs == rhs
            }
            AxiomId::C6 => op(t[0], t[0])? == t[0],
            AxiomId::C7 => {
                let (x, y) = (t[0], t[1]);
                x == zero || y == zero || op(x, y)? == op(y, x)?
            }
        })
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for AxiomId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        AxiomId::ALL
            .into_iter()
            .find(|a| a.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| format!("unknown axiom `{s}` (expected C1..C7)"))
    }
}

/// Caps how many witnesses a report keeps. The verdict and the violation
/// count always reflect the full exhaustive check.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct WitnessLimit(pub Option<usize>);

impl WitnessLimit {
    pub const ALL: WitnessLimit = WitnessLimit(None);

    fn admits(self, kept: usize) -> bool {
        self.0.is_none_or(|cap| kept < cap.max(1))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub axiom: AxiomId,
    pub holds: bool,
    /// Violating tuples in lexicographic order, possibly truncated.
    pub witnesses: Vec<Vec<usize>>,
    /// Total number of violating tuples.
    pub violations: usize,
}

pub fn check_axiom(alg: &FiniteAlgebra, axiom: AxiomId) -> AxiomReport {
    check_axiom_with(alg, axiom, WitnessLimit::ALL)
}

pub fn check_axiom_with(alg: &FiniteAlgebra, axiom: AxiomId, limit: WitnessLimit) -> AxiomReport {
    let n = alg.order();
    let arity = axiom.arity();
    let mut witnesses = Vec::new();
    let mut violations = 0;
    let mut tuple = vec![0; arity];
    for idx in 0..n.pow(arity as u32) {
        let mut rest = idx;
        for slot in tuple.iter_mut().rev() {
            *slot = rest % n;
            rest /= n;
        }
        if !axiom.holds_at(alg, &tuple) {
            violations += 1;
            if limit.admits(witnesses.len()) {
                witnesses.push(tuple.clone());
            }
        }
    }
    AxiomReport {
        axiom,
        holds: violations == 0,
        witnesses,
        violations,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Label {
    B,
    BH,
    BO,
    Z,
}

impl Label {
    pub const ALL: [Label; 4] = [Label::B, Label::BH, Label::BO, Label::Z];
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for Label {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Label::ALL
            .into_iter()
            .find(|l| l.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| format!("unknown label `{s}` (expected b, bh, bo or z)"))
    }
}

/// Which axioms make up a Z-algebra.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub enum ZProfile {
    /// C1, C2, C6, C7 exactly as defined. Only the one-element algebra
    /// satisfies both C1 and C6.
    #[default]
    Literal,
    /// C2, C6, C7: the literal set with C1 dropped, since C1 and C6
    /// contradict each other on the diagonal.
    Relaxed,
}

/// Axiom conjunction for each label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomSets {
    pub b: Vec<AxiomId>,
    pub bh: Vec<AxiomId>,
    pub bo: Vec<AxiomId>,
    pub z: Vec<AxiomId>,
}

impl AxiomSets {
    pub fn new(z: ZProfile) -> Self {
        use AxiomId::*;
        Self {
            b: vec![C1, C2, C3],
            bh: vec![C1, C2, C4],
            bo: vec![C1, C2, C5],
            z: match z {
                ZProfile::Literal => vec![C1, C2, C6, C7],
                ZProfile::Relaxed => vec![C2, C6, C7],
            },
        }
    }

    pub fn axioms(&self, label: Label) -> &[AxiomId] {
        match label {
            Label::B => &self.b,
            Label::BH => &self.bh,
            Label::BO => &self.bo,
            Label::Z => &self.z,
        }
    }
}

impl Default for AxiomSets {
    fn default() -> Self {
        Self::new(ZProfile::Literal)
    }
}

pub fn classify(alg: &FiniteAlgebra) -> BTreeSet<Label> {
    classify_with(alg, &AxiomSets::default())
}

pub fn classify_with(alg: &FiniteAlgebra, sets: &AxiomSets) -> BTreeSet<Label> {
    let holds: Vec<bool> = AxiomId::ALL
        .iter()
        .map(|&a| check_axiom_with(alg, a, WitnessLimit(Some(1))).holds)
        .collect();
    Label::ALL
        .into_iter()
        .filter(|&l| sets.axioms(l).iter().all(|&a| holds[a as usize]))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Identities {
    pub left: Subset,
    pub right: Subset,
    pub two_sided: Subset,
}

/// Which `x` an identity candidate `e` must fix.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum IdentityScope {
    /// Every `x` in the carrier, `e` included.
    #[default]
    AllElements,
    /// Every `x != e`.
    ExcludingSelf,
}

pub fn find_identities(alg: &FiniteAlgebra) -> Identities {
    find_identities_with(alg, IdentityScope::AllElements)
}

pub fn find_identities_with(alg: &FiniteAlgebra, scope: IdentityScope) -> Identities {
    let n = alg.order();
    let mut left = Subset::empty(n);
    let mut right = Subset::empty(n);
    for e in 0..n {
        let others = (0..n).filter(|&x| scope == IdentityScope::AllElements || x != e);
        if others.clone().all(|x| alg.op(x, e) == x) {
            right.insert(e);
        }
        if others.clone().all(|x| alg.op(e, x) == x) {
            left.insert(e);
        }
    }
    Identities {
        left,
        right,
        two_sided: left & right,
    }
}

/// `A * B = { a*b | a in A, b in B }`.
pub fn product_set(alg: &FiniteAlgebra, a: &Subset, b: &Subset) -> Subset {
    let n = alg.order();
    assert!(
        a.universe() == n && b.universe() == n,
        "product_set: subsets must live in a carrier of size {n}"
    );
    let mut out = Subset::empty(n);
    for x in a {
        let row = alg.row(x);
        for y in b {
            out.insert(row[y]);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(n: usize, xs: &[usize]) -> Subset {
        Subset::from_elements(n, xs.iter().copied()).unwrap()
    }

    #[test]
    fn construction_validates_closure() {
        assert!(FiniteAlgebra::new(1, vec![vec![0]], 0).is_ok());
        assert_eq!(
            FiniteAlgebra::new(2, vec![vec![0, 2], vec![1, 0]], 0),
            Err(Error::Closure {
                row: 0,
                col: 1,
                value: 2,
                n: 2
            })
        );
        assert_eq!(
            FiniteAlgebra::new(2, vec![vec![0, 1], vec![1, 0]], 5),
            Err(Error::ZeroOutOfRange { zero: 5, n: 2 })
        );
        assert!(matches!(
            FiniteAlgebra::new(2, vec![vec![0, 1], vec![1]], 0),
            Err(Error::TableShape { .. })
        ));
        assert!(matches!(
            FiniteAlgebra::from_flat(0, vec![], 0),
            Err(Error::InvalidOrder { .. })
        ));
    }

    #[test]
    fn table4_diagonal_failures() {
        let t4 = fixtures::table4();
        let c6 = check_axiom(&t4, AxiomId::C6);
        assert!(!c6.holds);
        assert_eq!(c6.witnesses[0], vec![1]);
        let c1 = check_axiom(&t4, AxiomId::C1);
        assert_eq!(c1.witnesses, vec![vec![2], vec![3]]);
        let c2 = check_axiom(&t4, AxiomId::C2);
        assert_eq!(c2.witnesses, vec![vec![2], vec![3]]);
        assert!(!classify(&t4).contains(&Label::Z));
        assert!(!classify_with(&t4, &AxiomSets::new(ZProfile::Relaxed)).contains(&Label::Z));
    }

    #[test]
    fn witness_cap_keeps_full_verdict() {
        let t4 = fixtures::table4();
        let capped = check_axiom_with(&t4, AxiomId::C1, WitnessLimit(Some(1)));
        assert_eq!(capped.witnesses.len(), 1);
        assert_eq!(capped.violations, 2);
        assert!(!capped.holds);
        let zero_cap = check_axiom_with(&t4, AxiomId::C1, WitnessLimit(Some(0)));
        assert_eq!(zero_cap.witnesses.len(), 1);
    }

    #[test]
    fn c1_reads_only_the_diagonal() {
        let alg = FiniteAlgebra::new(3, vec![vec![0, 2, 2], vec![2, 0, 1], vec![1, 1, 0]], 0)
            .unwrap();
        assert!(check_axiom(&alg, AxiomId::C1).holds);
    }

    #[test]
    fn c7_skips_pairs_with_zero() {
        // 0*1 != 1*0, but that pair is guarded out
        let alg = FiniteAlgebra::new(2, vec![vec![0, 0], vec![1, 1]], 0).unwrap();
        assert!(check_axiom(&alg, AxiomId::C7).holds);
    }

    #[test]
    fn bundled_tables_classify() {
        assert!(classify(&fixtures::table1()).contains(&Label::B));
        assert!(classify(&fixtures::table2()).contains(&Label::BO));
        assert!(classify(&fixtures::table3()).contains(&Label::BH));
        assert!(check_axiom(&fixtures::table2(), AxiomId::C5).holds);
    }

    #[test]
    fn identities() {
        let ids = find_identities(&fixtures::table1());
        assert_eq!(ids.two_sided, set(4, &[0]));
        let t3 = find_identities(&fixtures::table3());
        assert_eq!(t3.right, set(4, &[0]));
        // row 0 of Table 3 is (0,1,0,0), so 0 is not a left identity
        assert_eq!(t3.left, set(4, &[]));
        let one = FiniteAlgebra::new(1, vec![vec![0]], 0).unwrap();
        assert_eq!(find_identities(&one).two_sided, set(1, &[0]));
    }

    #[test]
    fn excluding_self_scope_is_weaker() {
        let t1 = fixtures::table1();
        let strict = find_identities(&t1);
        let loose = find_identities_with(&t1, IdentityScope::ExcludingSelf);
        assert!(strict.left.is_subset(&loose.left));
        assert!(strict.right.is_subset(&loose.right));
    }

    #[test]
    fn products() {
        let t2 = fixtures::table2();
        let a = set(5, &[0, 1]);
        assert_eq!(product_set(&t2, &a, &a), set(5, &[0, 1, 2]));
        assert!(product_set(&t2, &Subset::empty(5), &Subset::full(5)).is_empty());
        let zero = set(5, &[0]);
        assert_eq!(product_set(&t2, &Subset::full(5), &zero), Subset::full(5));
    }
}
