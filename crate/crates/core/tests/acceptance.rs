//! Acceptance suite. Prints one `PASS`/`FAIL` line per criterion and exits
//! non-zero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use roughalg::fixtures;
use roughalg::gas::SetValuedMap;
use roughalg::ideals::{enumerate_ideals, is_ideal};
use roughalg::relations::is_complete_congruence;
use roughalg::rough::{evaluate_law, LawGroup};
use roughalg::search::{enumerate_algebras, enumerate_congruences, sweep};
use roughalg::{
    check_axiom, classify, find_identities, ApproximationSpace, AxiomId, FiniteAlgebra, Label,
    Partition, SearchSpec, Subset,
};

struct Check {
    name: &'static str,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn expect(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn note(&mut self, what: impl Into<String>) {
        self.notes.push(what.into());
    }
}

fn set(n: usize, xs: &[usize]) -> Subset {
    Subset::from_elements(n, xs.iter().copied()).unwrap()
}

fn first_witness(alg: &FiniteAlgebra, axiom: AxiomId) -> Option<Vec<usize>> {
    check_axiom(alg, axiom).witnesses.into_iter().next()
}

fn fixture_classification() -> Check {
    let mut c = Check::new("fixture classification");
    let t1 = fixtures::table1();
    c.expect(classify(&t1).contains(&Label::B), "Table 1 is not a B-algebra");
    let two_sided = find_identities(&t1).two_sided;
    c.expect(
        two_sided == set(4, &[0]),
        format!("Table 1 two-sided identities are {two_sided}, expected {{0}}"),
    );
    c.expect(
        classify(&fixtures::table2()).contains(&Label::BO),
        "Table 2 is not a BO-algebra",
    );
    c.expect(
        classify(&fixtures::table3()).contains(&Label::BH),
        "Table 3 is not a BH-algebra",
    );
    c
}

fn inconsistency_regressions() -> Check {
    let mut c = Check::new("inconsistency regressions");
    let t4 = fixtures::table4();
    let c1 = first_witness(&t4, AxiomId::C1);
    c.expect(c1 == Some(vec![2]), format!("Table 4 first C1 witness {c1:?}, expected x=2"));
    let c6 = first_witness(&t4, AxiomId::C6);
    c.expect(c6 == Some(vec![1]), format!("Table 4 first C6 witness {c6:?}, expected x=1"));

    let r = is_ideal(&t4, &set(4, &[0, 1, 2]));
    let first = r.absorption_witnesses.first().copied();
    c.expect(
        first == Some((3, 1)),
        format!(
            "Table 4 with I={{0,1,2}}: first absorption witness {first:?}, expected (3,1); all witnesses {:?}",
            r.absorption_witnesses
        ),
    );
    c.expect(
        r.absorption_witnesses.contains(&(3, 1)),
        "Table 4 with I={0,1,2}: (3,1) missing from the witness list",
    );

    let r = is_ideal(&fixtures::table2(), &set(5, &[0, 1]));
    let first = r.absorption_witnesses.first().copied();
    c.expect(
        first == Some((3, 1)),
        format!("Table 2 with Y={{0,1}}: first absorption witness {first:?}, expected (3,1)"),
    );
    c
}

fn pawlak_suite() -> Check {
    let mut c = Check::new("Pawlak law suite");
    let start = Instant::now();
    let laws: Vec<_> = LawGroup::Pawlak.items()[..10].iter().map(|&(_, l)| l).collect();
    let subsets: Vec<Subset> = Subset::all(4).collect();
    let mut partitions = 0;
    let mut violations = 0u64;
    for p in Partition::enumerate(4) {
        partitions += 1;
        let space = ApproximationSpace::new(p);
        for a in &subsets {
            for b in &subsets {
                for &law in &laws {
                    if evaluate_law(&space, law, a, b).is_failure() {
                        violations += 1;
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    c.expect(partitions == 15, format!("{partitions} partitions, expected 15"));
    c.expect(violations == 0, format!("{violations} violations"));
    c.expect(
        elapsed < Duration::from_secs(5),
        format!("took {elapsed:?}, limit 5s"),
    );
    c.note(format!("{partitions} partitions x {} pairs in {elapsed:.2?}", subsets.len().pow(2)));
    c
}

fn congruence_product_law() -> Check {
    let mut c = Check::new("congruence product law");
    for (i, alg) in [fixtures::table1(), fixtures::table2(), fixtures::table3()]
        .into_iter()
        .enumerate()
    {
        let congruences = enumerate_congruences(&alg).unwrap();
        let complete: Vec<Partition> = congruences
            .iter()
            .filter(|p| is_complete_congruence(&alg, p).unwrap().holds())
            .cloned()
            .collect();
        let all = sweep(&alg, LawGroup::Congruence, &congruences).unwrap();
        let upper = all.iter().find(|t| t.id.item == "1").unwrap();
        c.expect(
            upper.holds(),
            format!("Table {}: upper product law has {} violations", i + 1, upper.violations),
        );
        let on_complete = sweep(&alg, LawGroup::Congruence, &complete).unwrap();
        let guarded = on_complete.iter().find(|t| t.id.item == "2").unwrap();
        c.expect(
            guarded.holds(),
            format!(
                "Table {}: guarded lower product law has {} violations on complete congruences",
                i + 1,
                guarded.violations
            ),
        );
        c.note(format!(
            "Table {}: {} congruences, {} complete",
            i + 1,
            congruences.len(),
            complete.len()
        ));
    }
    c
}

fn ideal_enumeration() -> Check {
    let mut c = Check::new("ideal enumeration");
    let ideals = enumerate_ideals(&fixtures::table3(), false).unwrap();
    let expected = vec![
        set(4, &[0]),
        set(4, &[0, 1]),
        set(4, &[0, 1, 2]),
        set(4, &[0, 1, 2, 3]),
    ];
    c.expect(ideals == expected, format!("Table 3 ideals {ideals:?}"));
    c
}

fn model_search() -> Check {
    let mut c = Check::new("model search");
    let b = [AxiomId::C1, AxiomId::C2, AxiomId::C3];
    let bo = [AxiomId::C1, AxiomId::C2, AxiomId::C5];
    let mut models = Vec::new();
    enumerate_algebras(&SearchSpec::count(2, &b), |alg| {
        models.push(alg.clone());
        std::ops::ControlFlow::Continue(())
    })
    .unwrap();
    let xor = FiniteAlgebra::new(2, vec![vec![0, 1], vec![1, 0]], 0).unwrap();
    c.expect(
        models == vec![xor],
        format!("order-2 B-algebras: {} found, expected only XOR", models.len()),
    );

    let t2 = fixtures::table2();
    let contains = |order: usize| {
        let mut found = false;
        let count = enumerate_algebras(&SearchSpec::count(order, &bo), |alg| {
            found |= *alg == t2;
            std::ops::ControlFlow::Continue(())
        })
        .unwrap();
        (count, found)
    };
    let (count4, found4) = contains(4);
    c.expect(
        found4,
        format!(
            "order-4 BO enumeration ({count4} models) cannot contain Table 2, which has order {}",
            t2.order()
        ),
    );
    let (count5, found5) = contains(5);
    c.expect(found5, format!("order-5 BO enumeration ({count5} models) misses Table 2"));
    c.note(format!("BO models: {count4} of order 4, {count5} of order 5"));
    c
}

fn generalized_reduction() -> Check {
    let mut c = Check::new("generalized-approximation reduction");
    let mut cases = 0u64;
    for n in 1..=4 {
        for p in Partition::enumerate(n) {
            let f = SetValuedMap::from_partition(&p);
            let space = ApproximationSpace::new(p.clone());
            for a in Subset::all(n) {
                cases += 1;
                if f.lower(&a) != space.lower(&a) || f.upper(&a) != space.upper(&a) {
                    c.failures.push(format!("partition {p}, A={a}"));
                }
            }
        }
    }
    c.note(format!("{cases} cases"));
    c
}

fn duality_idempotence() -> Check {
    let mut c = Check::new("duality and idempotence");
    let mut cases = 0u64;
    for n in 1..=4 {
        for p in Partition::enumerate(n) {
            let space = ApproximationSpace::new(p.clone());
            for a in Subset::all(n) {
                cases += 1;
                let (lo, up) = (space.lower(&a), space.upper(&a));
                let ok = space.upper(&!a) == !lo && space.lower(&lo) == lo && space.upper(&up) == up;
                if !ok {
                    c.failures.push(format!("partition {p}, A={a}"));
                }
            }
        }
    }
    c.note(format!("{cases} cases"));
    c
}

fn determinism() -> Check {
    let mut c = Check::new("determinism");
    let tables = concat!(env!("CARGO_MANIFEST_DIR"), "/tables");
    let t3 = format!("{tables}/t3.alg");
    let t1 = format!("{tables}/t1.alg");
    let commands: Vec<Vec<&str>> = vec![
        vec!["verify", &t3, "--prop", "3-2", "--exhaustive"],
        vec!["verify", &t1, "--prop", "2-1", "--exhaustive"],
        vec!["search", "--order", "4", "--axioms", "bo", "--count", "--list"],
        vec!["search", "--order", "4", "--axioms", "b", "--find", "2-1.12"],
    ];
    for args in &commands {
        let run = || {
            Command::new(env!("CARGO_BIN_EXE_roughalg"))
                .arg("--format")
                .arg("json")
                .args(args)
                .output()
                .expect("binary runs")
        };
        let (first, second) = (run(), run());
        let line = args.join(" ");
        c.expect(first.status.code() != Some(2), format!("`{line}` reported an input error"));
        c.expect(!first.stdout.is_empty(), format!("`{line}` printed nothing"));
        c.expect(first.stdout == second.stdout, format!("`{line}` differs between runs"));
    }
    c.note(format!("{} commands run twice", commands.len()));
    c
}

fn main() -> ExitCode {
    let checks = [
        fixture_classification(),
        inconsistency_regressions(),
        pawlak_suite(),
        congruence_product_law(),
        ideal_enumeration(),
        model_search(),
        generalized_reduction(),
        duality_idempotence(),
        determinism(),
    ];
    let mut failed = 0;
    for (i, c) in checks.iter().enumerate() {
        let verdict = if c.failures.is_empty() { "PASS" } else { "FAIL" };
        let mut line = format!("criterion {}: {verdict}  {}", i + 1, c.name);
        if !c.notes.is_empty() {
            line += &format!(" ({})", c.notes.join("; "));
        }
        println!("{line}");
        for f in &c.failures {
            println!("    {f}");
        }
        failed += usize::from(!c.failures.is_empty());
    }
    println!("{} of {} criteria passed", checks.len() - failed, checks.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
