use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidfloer")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn hfk_of_the_figure_eight_lift() {
    let out = stdout(&["hfk", "b=3: s1 s2^-1 s1 s2^-1"]);
    let rows: Vec<&str> = out.lines().skip(1).take(5).collect();
    assert_eq!(rows.iter().filter(|r| r.ends_with("1    3    1")).count(), 1);
    assert_eq!(rows.iter().filter(|r| r.ends_with(".    1    .")).count(), 4);
}

#[test]
fn alex_of_the_five_strand_braid() {
    let out = stdout(&["alex", "b=5: s1^-2 s3^-1 s2^2 s4 s3^-1"]);
    assert_eq!(out, "T^-2 - 14T^-1 + 34 - 14T + T^2\n");
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["alex", "--json", "b=5: s1^-2 s3^-1 s2^2 s4 s3^-1"])).unwrap();
    assert_eq!(json["alexander"], serde_json::json!([[-2, 1], [-1, -14], [0, 34], [1, -14], [2, 1]]));
}

#[test]
fn staircase_totals() {
    let out = stdout(&["staircase", "b=7: s1 s2 s3 s4 s5 s6^2"]);
    assert!(out.contains("HF+ total 2\n"), "{out}");
    assert!(out.contains("agree"));

    let out = stdout(&["staircase", "b=7: s1 s2 s3 s4 s5 s4 s6"]);
    assert!(out.contains("H* of its curve system 3"), "{out}");
    assert!(out.contains("mismatch"));
}

#[test]
fn h1_and_torsion() {
    assert!(stdout(&["h1", "b=5: s1^-2 s3^-1 s2^2 s4 s3^-1"]).starts_with("Z/2 + Z/2 + Z/2\n"));
    let out = stdout(&["torsion", "b=3: s1^2 s2^-3"]);
    assert!(out.starts_with("H1 = Z/6\n"), "{out}");
    assert!(out.contains("sum          -T^-1 + 8 - T"), "{out}");
}

#[test]
fn tree_outputs() {
    let out = stdout(&["tree", "b=3: s1 s2^-1 s1 s2^-1"]);
    assert!(out.starts_with("nodes 9\nleaves 5\n"), "{out}");
    let dot = stdout(&["tree", "--dot", "b=3: s1 s2^-1 s1 s2^-1"]);
    assert!(dot.starts_with("digraph resolution_tree {") && dot.trim_end().ends_with('}'));
    let bare = stdout(&["tree", "--no-leaf-invariants", "b=3: s1 s2^-1 s1 s2^-1"]);
    assert_eq!(bare, "nodes 9\nleaves 5\n");
    assert!(stdout(&["qprime", "b=3: s1 s2^-1 s1 s2^-1"]).contains("yes (5 leaves)"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["alex", "b=3: q1"]).status.code(), Some(1));
    let even = run(&["alex", "b=4: s1 s2 s3"]);
    assert_eq!(even.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&even.stderr).contains("odd"));
    assert_eq!(run(&["torsion", "b=3: s1"]).status.code(), Some(2));
    assert_eq!(run(&["tree", "--max-crossings", "3", "b=3: s1 s2^-1 s1 s2^-1"]).status.code(), Some(3));
    assert_eq!(run(&["qprime", "--max-crossings", "3", "b=3: s1 s2^-1 s1 s2^-1"]).status.code(), Some(3));
}

#[test]
fn report_is_deterministic_and_round_trips() {
    let w = "b=5: s1^-2 s3^-1 s2^2 s4 s3^-1";
    let a = stdout(&["report", "--json", w]);
    let b = stdout(&["report", "--json", w]);
    assert_eq!(a, b);
    let rep: braidfloer_cli::Report = serde_json::from_str(&a).unwrap();
    assert_eq!(serde_json::to_string_pretty(&rep).unwrap() + "\n", a);
    assert_eq!(rep.tree.unwrap().leaves, 8);
    assert_eq!(stdout(&["report", w]), stdout(&["report", w]));

    let timed: serde_json::Value = serde_json::from_str(&stdout(&["report", "--json", "--timing", w])).unwrap();
    assert_eq!(timed["timing_ms"].as_array().unwrap().len(), 4);
}
