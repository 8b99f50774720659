//! Lower and upper approximations over a five-element partition, plus the
//! space induced by an ideal.

use roughalg::{fixtures, ApproximationSpace, Partition, Subset};

fn main() {
    let p = Partition::from_labels(&[0, 0, 1, 2, 1]).unwrap();
    let space = ApproximationSpace::new(p);
    println!("partition {}", space.partition());
    for elements in [vec![0], vec![0, 1], vec![2, 3], vec![1, 2, 4]] {
        let a = Subset::from_elements(5, elements).unwrap();
        let pair = space.rough_pair(&a);
        println!(
            "A = {:<9} lower {:<9} upper {:<11} {}",
            a.to_string(),
            pair.lower.to_string(),
            pair.upper.to_string(),
            if space.is_rough(&a) { "rough" } else { "definable" }
        );
    }

    let t1 = fixtures::table1();
    let ideal = Subset::from_elements(4, [0, 1]).unwrap();
    let space = ApproximationSpace::from_ideal(t1, &ideal).unwrap();
    println!("classes induced by {ideal} on table 1: {}", space.partition());
}
