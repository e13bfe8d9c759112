use std::process::{Command, Output};

fn fg4(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fg4")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn sphere_value_is_one() {
    let o = fg4(&["compute", "--complex", "s4", "--structure", "br-iota1:2,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("1"));
    assert!(stdout(&o).contains("method linear"));
}

#[test]
fn trivial_structure_verifies() {
    let o = fg4(&["verify-structure", "--structure", "trivial:2,2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("all identities pass"));
}

#[test]
fn pachner_three_three_passes() {
    let o = fg4(&["pachner-check", "--structure", "br-tau:3,1", "--move", "3-3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("3-3 pass"));
}

#[test]
fn exit_codes() {
    // usage errors
    assert_eq!(fg4(&["compute", "--complex", "s4"]).status.code(), Some(2));
    assert_eq!(fg4(&["compute", "--complex", "nowhere", "--structure", "br-tau:2,1"]).status.code(), Some(2));
    assert_eq!(fg4(&["verify-structure", "--structure", "br-nothing:2,1"]).status.code(), Some(2));
    // budget refusal
    let o = fg4(&["compute", "--complex", "cp2", "--structure", "br-tau:2,1", "--method", "brute", "--budget", "100"]);
    assert_eq!(o.status.code(), Some(3));
    // mathematical failure: distinct braidings are not equivalent with identity automorphisms
    let o = fg4(&["equivalence-check", "--source", "br-tau:3,1", "--target", "br-tau:3,2"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn widened_search_finds_galois_witness() {
    let o = fg4(&["equivalence-check", "--source", "br-tau:3,1", "--target", "br-tau:3,2", "--widen"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("aut_r 2"));
}

#[test]
fn equivalence_data_file_is_checked() {
    let dir = std::env::temp_dir().join(format!("fg4-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("phi.txt");
    // Phi(1,1) = 1 on Z/3 is not a cocycle, so condition 1 fails
    std::fs::write(&path, "Phi\n1 1 -> 1\n").unwrap();
    let p = path.to_str().unwrap();
    let o = fg4(&["equivalence-check", "--source", "br-iota1:3,1", "--target", "br-iota1:3,1", "--data", p]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("condition 1 FAIL"));
    std::fs::write(&path, "# identity\n").unwrap();
    let o = fg4(&["equivalence-check", "--source", "br-iota1:3,1", "--target", "br-iota1:3,1", "--data", p]);
    assert_eq!(o.status.code(), Some(0));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn reversal_and_relabelling() {
    let a = fg4(&["compute", "--complex", "cp2", "--structure", "br-tau:3,1"]);
    let b = fg4(&["compute", "--complex", "cp2", "--structure", "br-tau:3,1", "--reversed"]);
    let c = fg4(&["compute", "--complex", "cp2+reversed", "--structure", "br-tau:3,1"]);
    assert_eq!(stdout(&a).lines().next(), Some("-3 - 6*z3"));
    assert_eq!(stdout(&b).lines().next(), Some("3 + 6*z3"));
    assert_eq!(stdout(&b), stdout(&c));
    let d = fg4(&["compute", "--complex", "s4", "--structure", "br-tau:2,1", "--relabel", "7"]);
    let e = fg4(&["compute", "--complex", "s4+relabel:7", "--structure", "br-tau:2,1"]);
    assert_eq!(stdout(&d), stdout(&e));
    assert_eq!(stdout(&d).lines().next(), Some("2"));
}

#[test]
fn reports_are_deterministic_and_thread_independent() {
    let args = ["compute", "--complex", "s4", "--structure", "br-tau:3,1", "--method", "gray", "--json"];
    let a = fg4(&[&args[..], &["--threads", "1"]].concat());
    let b = fg4(&[&args[..], &["--threads", "4"]].concat());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    // G trivial: the sphere gives |H|
    assert_eq!(v["value"], "3");
    assert_eq!(v["method"], "gray");
}

#[test]
fn counts_and_homology() {
    let o = fg4(&["count-labellings", "--complex", "s4", "--structure", "trivial:2,1"]);
    assert_eq!(stdout(&o).trim(), "32");
    let o = fg4(&["homology", "--complex", "cp2"]);
    let out = stdout(&o);
    assert!(out.contains("euler characteristic 3"));
    assert!(out.contains("H_2(; Z) = Z"));
    let o = fg4(&["list-builtins", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["structures"].as_array().unwrap().len() >= 4);
}
