use roughalg::fixtures;
use roughalg::relations::{is_complete_congruence, is_congruence};
use roughalg::search::enumerate_congruences;
use roughalg::Partition;

fn main() {
    for (i, alg) in fixtures::all().iter().enumerate() {
        println!("table {}", i + 1);
        for p in enumerate_congruences(alg).unwrap() {
            let complete = is_complete_congruence(alg, &p).unwrap();
            match complete.witness {
                None => println!("  {p}  complete"),
                Some(w) => println!(
                    "  {p}  not complete: [{}]*[{}] misses element {}",
                    w.x, w.y, w.element
                ),
            }
        }
    }

    let t3 = fixtures::table3();
    let p = Partition::from_labels(&[0, 0, 0, 1]).unwrap();
    if let Some(w) = is_congruence(&t3, &p).unwrap().witness {
        println!("{p} is not a congruence of table 3: {w}");
    }
}
