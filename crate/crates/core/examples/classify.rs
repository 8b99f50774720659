//! Classify the bundled tables and show the first failing tuple of every
//! broken axiom.

use roughalg::{check_axiom_with, classify, find_identities, fixtures, AxiomId, WitnessLimit};

fn main() {
    for (i, alg) in fixtures::all().iter().enumerate() {
        let labels: Vec<String> = classify(alg).iter().map(|l| l.to_string()).collect();
        let ids = find_identities(alg);
        println!(
            "table {}: labels [{}], two-sided identities {}",
            i + 1,
            labels.join(", "),
            ids.two_sided
        );
        for axiom in AxiomId::ALL {
            let r = check_axiom_with(alg, axiom, WitnessLimit(Some(1)));
            if !r.holds {
                println!(
                    "  {axiom} ({}) fails at {:?}, {} violation(s)",
                    axiom.formula(),
                    r.witnesses[0],
                    r.violations
                );
            }
        }
    }
}
