use roughalg::cli::{run, Outcome};

fn table(name: &str) -> String {
    format!("{}/tables/{name}.alg", env!("CARGO_MANIFEST_DIR"))
}

fn roughalg(args: &[&str]) -> Outcome {
    run(std::iter::once("roughalg").chain(args.iter().copied()))
}

#[test]
fn check_reports_labels_with_marks() {
    let out = roughalg(&["check", &table("t2"), "--axioms", "bo"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("BO: C1 ✓ C2 ✓ C5 ✓"), "{}", out.stdout);
}

#[test]
fn check_exit_codes_follow_requested_labels() {
    assert_eq!(roughalg(&["check", &table("t4")]).code, 0);
    let out = roughalg(&["check", &table("t4"), "--axioms", "z"]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("C1 (x*x = 0) fails at (2) (3)"), "{}", out.stdout);
    let relaxed = roughalg(&["check", &table("t4"), "--axioms", "C7"]);
    assert_eq!(relaxed.code, 0);
}

#[test]
fn witness_limit_truncates() {
    let out = roughalg(&[
        "--format", "json", "check", &table("t4"), "--axioms", "C1", "--witness-limit", "1",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let report = &v["checks"][0]["axioms"][0];
    assert_eq!(report["witnesses"], serde_json::json!([[2]]));
    assert_eq!(report["violations"], 2);
}

#[test]
fn z_ideal_claim_names_witness() {
    let out = roughalg(&["verify", &table("t4"), "--claim", "z-ideal", "--set", "0,1,2"]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("(x=3, y=1)"), "{}", out.stdout);
}

#[test]
fn claim_exit_codes() {
    let t3 = table("t3");
    let cases: [(&[&str], u8); 4] = [
        (&["--claim", "bh-algebra"], 0),
        (&["--claim", "ideal", "--set", "0,1"], 0),
        (&["--claim", "congruence", "--partition", "0,1|2|3"], 0),
        (&["--claim", "complete-congruence", "--partition", "0,1|2|3"], 1),
    ];
    for (args, code) in cases {
        let mut full = vec!["verify", t3.as_str()];
        full.extend_from_slice(args);
        let out = roughalg(&full);
        assert_eq!(out.code, code, "{args:?}: {}", out.stdout);
    }
}

#[test]
fn ideals_and_congruences() {
    let out = roughalg(&["ideals", &table("t3")]);
    assert!(out.stdout.contains("4 ideals:\n  {0}\n  {0,1}\n  {0,1,2}\n  {0,1,2,3}\n"), "{}", out.stdout);
    let out = roughalg(&["congruences", &table("t3")]);
    assert!(out.stdout.contains("0,1|2|3\n"), "{}", out.stdout);
    assert!(out.stdout.contains("0|1|2|3  (complete)"));
}

#[test]
fn approx_selects_outputs() {
    let out = roughalg(&["approx", &table("t3"), "--partition", "0,1|2|3", "--set", "0,2", "--lower"]);
    assert_eq!(out.stdout, "partition 0,1|2|3\nset {0,2}\nlower: {2}\n");
    let out = roughalg(&["approx", &table("t1"), "--ideal", "0,1", "--set", "0", "--pair"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("upper: {0,1}"), "{}", out.stdout);
}

#[test]
fn exhaustive_verify_and_bad_congruence() {
    let out = roughalg(&["verify", &table("t3"), "--prop", "3-2", "--exhaustive"]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("first: partition 0,1|2|3 A={2} B={0,2} element 0"), "{}", out.stdout);
    let out = roughalg(&["verify", &table("t1"), "--prop", "2-1", "--partition", "0,1|2,3", "--exhaustive"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    let out = roughalg(&["verify", &table("t3"), "--prop", "3-2", "--partition", "0,1,2|3", "--set", "0"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("not a congruence"));
}

#[test]
fn search_count_and_find() {
    let out = roughalg(&["search", "--order", "3", "--axioms", "bh", "--count"]);
    assert_eq!(out.stdout, "order 3, axioms C1,C2,C4: 72 model(s)\n");
    let out = roughalg(&["search", "--order", "4", "--axioms", "bo", "--find", "3-2.2"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.contains("no counterexample"));
    let out = roughalg(&["search", "--order", "3", "--axioms", "bh", "--count", "--max-models", "5"]);
    assert_eq!(out.code, 2);
    assert!(out.stdout.contains("stopped early"), "{}", out.stdout);
}

#[test]
fn morphism_witness() {
    let xor = table("xor");
    let out = roughalg(&["morphism", &xor, "--map", "0:1;1:0"]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("FALSE at (x=0, y=0): element 0"), "{}", out.stdout);
    let out = roughalg(&["morphism", &xor, "--map", "0:0;1:1", "--strong"]);
    assert_eq!(out.code, 0);
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(roughalg(&["check", "/nonexistent.alg"]).code, 2);
    assert_eq!(roughalg(&["frobnicate"]).code, 2);
    assert_eq!(roughalg(&["check", &table("t1"), "--axioms", "C9"]).code, 2);
    assert_eq!(roughalg(&["approx", &table("t1"), "--partition", "0|1", "--set", "0"]).code, 2);
    let help = roughalg(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("Usage"));
}

#[test]
fn json_flag_and_output_shape() {
    let out = roughalg(&["--format", "json", "ideals", &table("t1"), "--strong"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["ideals"], serde_json::json!([[0], [0, 1], [0, 2], [0, 3], [0, 1, 2, 3]]));
    let out = roughalg(&["congruences", &table("t2"), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["congruences"].as_array().unwrap().len(), 2);
}

#[test]
fn environment_selects_format_and_flag_wins() {
    let bin = env!("CARGO_BIN_EXE_roughalg");
    let out = std::process::Command::new(bin)
        .env("ROUGHALG_FORMAT", "json")
        .args(["identities", &table("t1")])
        .output()
        .unwrap();
    assert!(String::from_utf8_lossy(&out.stdout).starts_with('{'));
    let out = std::process::Command::new(bin)
        .env("ROUGHALG_FORMAT", "json")
        .args(["--format", "text", "identities", &table("t1")])
        .output()
        .unwrap();
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("algebra table1"));
}
