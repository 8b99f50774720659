use roughalg::fixtures;
use roughalg::ideals::{enumerate_ideals, is_ideal, survey_ideals};
use roughalg::Subset;

fn main() {
    let t3 = fixtures::table3();
    println!("ideals of table 3:");
    for i in enumerate_ideals(&t3, false).unwrap() {
        println!("  {i}");
    }
    println!("strong ideals of table 3:");
    for i in enumerate_ideals(&t3, true).unwrap() {
        println!("  {i}");
    }

    let t4 = fixtures::table4();
    let candidate = Subset::from_elements(4, [0, 1, 2]).unwrap();
    let report = is_ideal(&t4, &candidate);
    println!("{candidate} on table 4 is an ideal: {}", report.is_ideal());
    for (x, y) in &report.absorption_witnesses {
        println!("  x*y = {} and y = {y} lie in I, x = {x} does not", t4.op(*x, *y));
    }

    let survey = survey_ideals(&t4).unwrap();
    let loose: Vec<String> = survey.condition_three_not_ideal.iter().map(|s| s.to_string()).collect();
    println!("table 4 subsets meeting only conditions 1 and 3: {}", loose.join(" "));
}
