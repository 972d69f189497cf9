use std::process::Command;

use ptorus_cli::run_from;

fn run(args: &[&str]) -> ptorus_cli::Outcome {
    run_from(std::iter::once("ptorus").chain(args.iter().copied()))
}

#[test]
fn intersect_half_twisted_b1() {
    let out = run(&["intersect", "--n", "3", "apply(H1, B1)", "B1"]);
    assert_eq!((out.stdout.as_str(), out.code), ("2\n", 0));
}

#[test]
fn equal_reproduces_the_twist_relation() {
    let out = run(&["equal", "--n", "3", "H1 T1 H1 T1^-1", "T3 T1^-2 T2"]);
    assert_eq!(out.stdout, "true\n");
    let out = run(&["equal", "--n", "3", "H1 H2", "H2 H1"]);
    assert_eq!((out.stdout.as_str(), out.code), ("false\n", 0));
}

#[test]
fn act_prints_word_and_profile() {
    let out = run(&["act", "--n", "3", "H1", "B1"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("profile: A=1 B1=2 B2=0 B3=0 G1[-1]=1 G2[-1]=1 G3[-1]=1"), "{}", out.stdout);
    let json: serde_json::Value = serde_json::from_str(&run(&["act", "--n", "3", "H1", "B1", "--json"]).stdout).unwrap();
    assert_eq!(json["profile"][1]["curve"], "B1");
    assert_eq!(json["profile"][1]["intersection"], 2);
}

#[test]
fn hom_and_lattice_and_kernel() {
    assert_eq!(run(&["hom", "--n", "4", "PsiOx(1)", "OG(1,0)"]).stdout, "3\n");
    assert_eq!(run(&["lattice", "--n", "3"]).stdout, "(1, 1, 1)\n");
    assert_eq!(run(&["lattice", "1,0,0"]).stdout, "false\n");
    assert_eq!(run(&["lattice", "1,-2,1,0"]).stdout, "true\n");
    assert_eq!(run(&["kernel", "--fibers", "3,2", "Y1 Y2"]).stdout, "true\n");
    assert_eq!(run(&["kernel", "--fibers", "3,2", "G1.1[-1] G1.1[0]"]).stdout, "false\n");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["equal", "--n", "3", "T1 X", "T1"],
        vec!["intersect", "A", "B1"],
        vec!["verify", "--suite", "nonsense"],
        vec!["frobnicate"],
        vec!["kernel", "--fibers", "3,1", "Y1"],
        vec!["lattice", "1,x"],
    ] {
        let out = run(&args);
        assert_eq!(out.code, 2, "{args:?}: {}", out.stderr);
    }
    assert!(run(&["equal", "--n", "3", "T1 X", "T1"]).stderr.contains("position 2"));
}

#[test]
fn untabulated_hom_fails_with_a_report() {
    let out = run(&["hom", "--n", "3", "OG(1,-1)", "OG(2,-1)", "--json"]);
    assert_eq!(out.code, 1);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["summary"]["fail"], 1);
}

#[test]
fn verify_json_schema_and_exit_code() {
    let out = run(&["verify", "--n", "4", "--suite", "all", "--json"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["suite"], "all");
    assert_eq!(v["summary"]["fail"], 0);
    let entries = v["entries"].as_array().unwrap();
    assert!(!entries.is_empty());
    for e in entries {
        for key in ["name", "status", "expected", "actual", "paper_anchor"] {
            assert!(e.get(key).is_some(), "missing {key}");
        }
    }
    let names: Vec<&str> = entries.iter().map(|e| e["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
}

#[test]
fn binary_is_deterministic_and_sets_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_ptorus");
    let go = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let a = go(&["verify", "--n", "3", "--suite", "dictionary", "--json"]);
    let b = go(&["verify", "--n", "3", "--suite", "dictionary", "--json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(go(&["equal", "--n", "3", "T9", "T1"]).status.code(), Some(2));
    assert_eq!(go(&["hom", "--n", "3", "OY", "OY"]).status.code(), Some(1));
}
