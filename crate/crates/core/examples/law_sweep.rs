//! Sweeps each law group over every admissible partition and subset pair
//! of the bundled tables and tallies violations.

use roughalg::fixtures;
use roughalg::rough::LawGroup;
use roughalg::search::{enumerate_congruences, sweep};
use roughalg::Partition;

fn main() {
    for (i, alg) in fixtures::all().iter().take(3).enumerate() {
        for group in LawGroup::ALL {
            let partitions: Vec<Partition> = match group {
                LawGroup::Congruence => enumerate_congruences(alg).unwrap(),
                _ => Partition::enumerate(alg.order()).collect(),
            };
            let tallies = sweep(alg, group, &partitions).unwrap();
            let broken: Vec<String> = tallies
                .iter()
                .filter(|t| !t.holds())
                .map(|t| format!("{} ({})", t.id, t.violations))
                .collect();
            println!(
                "table {} group {}: {} partitions, violated: {}",
                i + 1,
                group.code(),
                partitions.len(),
                if broken.is_empty() { "none".into() } else { broken.join(", ") }
            );
        }
    }
}
