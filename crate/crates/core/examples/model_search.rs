use std::ops::ControlFlow;

use roughalg::format::render_algebra;
use roughalg::search::{count_models, enumerate_algebras};
use roughalg::{AxiomSets, Label, SearchSpec, ZProfile};

fn main() {
    let sets = AxiomSets::new(ZProfile::Literal);
    let relaxed = AxiomSets::new(ZProfile::Relaxed);
    for n in 1..=4 {
        let mut line = format!("order {n}:");
        for label in Label::ALL {
            if n == 4 && label != Label::B && label != Label::BO {
                continue;
            }
            let count = count_models(&SearchSpec::count(n, sets.axioms(label))).unwrap();
            line += &format!(" {label}={count}");
        }
        if n <= 3 {
            let z = count_models(&SearchSpec::count(n, relaxed.axioms(Label::Z))).unwrap();
            line += &format!(" Z(relaxed)={z}");
        }
        println!("{line}");
    }

    println!("\nBO-algebras of order 4:");
    enumerate_algebras(&SearchSpec::count(4, sets.axioms(Label::BO)), |alg| {
        println!("{}", render_algebra(alg, None));
        ControlFlow::Continue(())
    })
    .unwrap();
}
