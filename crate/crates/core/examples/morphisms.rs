use roughalg::format::render_svmap;
use roughalg::gas::{is_strong_sv_morphism, is_sv_morphism, SetValuedMap};
use roughalg::{fixtures, FiniteAlgebra, Subset};

fn main() {
    let xor = FiniteAlgebra::new(2, vec![vec![0, 1], vec![1, 0]], 0).unwrap();
    let mut weak = 0;
    let mut strong = 0;
    let mut first_failure = None;
    for f in SetValuedMap::enumerate(2, 2) {
        let r = is_sv_morphism(&f, &xor, &xor).unwrap();
        if r.holds() {
            weak += 1;
            strong += usize::from(is_strong_sv_morphism(&f, &xor, &xor).unwrap().holds());
        } else if first_failure.is_none() {
            first_failure = Some((f, r.verdict.witness.unwrap()));
        }
    }
    println!("maps on XOR: 16, morphisms {weak}, strong {strong}");
    if let Some((f, w)) = first_failure {
        println!(
            "first non-morphism {}: fails at ({}, {}) on element {}",
            render_svmap(&f),
            w.x,
            w.y,
            w.element
        );
    }

    let t1 = fixtures::table1();
    let everything = SetValuedMap::constant(4, Subset::full(4));
    let r = is_strong_sv_morphism(&everything, &t1, &t1).unwrap();
    println!("constant full map on table 1 is strong: {}", r.holds());

    let a = Subset::from_elements(4, [0, 1]).unwrap();
    let images = vec![a, Subset::singleton(4, 1), Subset::empty(4), Subset::full(4)];
    let f = SetValuedMap::new(4, images).unwrap();
    println!("F-({a}) = {}, F+({a}) = {}", f.lower(&a), f.upper(&a));
}
