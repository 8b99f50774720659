//! Looks for the smallest algebra and partition breaking a product law,
//! first over the bundled tables, then over freshly enumerated models.

use std::time::Duration;

use roughalg::search::{find_counterexample, find_counterexample_in, Limits, PartitionScope};
use roughalg::{fixtures, AxiomId, PropertyId, SearchSpec};

fn report(what: &str, finding: Option<roughalg::search::Finding>) {
    match finding {
        None => println!("{what}: no counterexample"),
        Some(f) => {
            let c = f.counterexample;
            println!(
                "{what}: partition {} A={} B={} element {}",
                c.partition, c.a, c.b, c.element
            );
        }
    }
}

fn main() {
    let tables = [fixtures::table1(), fixtures::table2(), fixtures::table3()];
    let limits = Limits {
        time_budget: Some(Duration::from_secs(10)),
        ..Limits::default()
    };
    for (property, scope) in [
        ("2-1.11-sup", PartitionScope::Congruences),
        ("2-1.11-sup", PartitionScope::CompleteCongruences),
        ("3-2.2", PartitionScope::NonCompleteCongruences),
        ("3-2.2", PartitionScope::CompleteCongruences),
    ] {
        let id: PropertyId = property.parse().unwrap();
        let found = find_counterexample_in(&tables, id, scope, &limits).unwrap();
        report(&format!("{id} over tables 1-3, {scope:?}"), found);
    }

    let bh = [AxiomId::C1, AxiomId::C2, AxiomId::C4];
    for n in 2..=3 {
        let spec = SearchSpec {
            limits,
            ..SearchSpec::find(n, &bh, "2-1.12".parse().unwrap(), PartitionScope::Congruences)
        };
        report(&format!("2-1.12 over BH-algebras of order {n}"), find_counterexample(&spec).unwrap());
    }
}
