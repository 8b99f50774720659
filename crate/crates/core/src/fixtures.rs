//! The four operation tables from the source examples, shipped as
//! algebra files under `tables/`.
//!
//! Table 1's element `e` is encoded as `3`. Table 4 is stored exactly as
//! printed even though it does not satisfy the axioms it is labelled with.

use crate::format::parse_algebra;
use crate::FiniteAlgebra;

pub const TABLE1: &str = include_str!("../tables/t1.alg");
pub const TABLE2: &str = include_str!("../tables/t2.alg");
pub const TABLE3: &str = include_str!("../tables/t3.alg");
pub const TABLE4: &str = include_str!("../tables/t4.alg");

fn load(text: &str) -> FiniteAlgebra {
    parse_algebra(text).expect("bundled table parses")
}

/// B-algebra with identity, order 4.
pub fn table1() -> FiniteAlgebra {
    load(TABLE1)
}

/// BO-algebra, order 5.
pub fn table2() -> FiniteAlgebra {
    load(TABLE2)
}

/// BH-algebra, order 4.
pub fn table3() -> FiniteAlgebra {
    load(TABLE3)
}

/// Labelled a Z-algebra at the source; see the module docs.
pub fn table4() -> FiniteAlgebra {
    load(TABLE4)
}

pub fn all() -> [FiniteAlgebra; 4] {
    [table1(), table2(), table3(), table4()]
}
