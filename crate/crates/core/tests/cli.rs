use std::process::{Command, Output};

use chainstrip::PosetFile;

fn syt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_syt")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = syt(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn tableau_subcommands() {
    assert_eq!(stdout(&["shs", "1,2,4,6/3,5/7/8"]), "1-2|3-4|5-6|7|8\n");
    assert_eq!(stdout(&["restrict", "1,2,4,6/3,5/7/8", "3", "6"]), "1,2,4/3\n");
    assert_eq!(stdout(&["word", "1,2,4,6/3,5/7/8"]), "8,7,3,5,1,2,4,6\n");
    assert_eq!(stdout(&["transpose", "1,2,4,6/3,5/7/8"]), "1,3,7,8/2,5/4/6\n");
    assert_eq!(stdout(&["evac", "1,2,5/3,4,6"]), "1,3,4/2,5,6\n");
    assert_eq!(stdout(&["rsk", "5,3,6,9,1,2,4,7,8"]), "P: 1,2,4,7,8/3,6,9/5\nQ: 1,3,4,8,9/2,6,7/5\n");
    assert_eq!(stdout(&["enum", "4"]).lines().count(), 10);
    assert_eq!(stdout(&["product", "1", "1"]), "1,2\n1/2\n");
}

#[test]
fn printed_values_reparse() {
    for t in stdout(&["enum", "6"]).lines() {
        assert_eq!(stdout(&["transpose", stdout(&["transpose", t]).trim()]).trim(), t);
        let shs = stdout(&["shs", t]);
        assert_eq!(shs.trim().parse::<chainstrip::StripSequence>().unwrap().to_string(), shs.trim());
    }
}

#[test]
fn malformed_input_is_reported_with_position() {
    let out = syt(&["shs", "1,2/3,q"]);
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("position 6"), "{err}");
    assert!(out.stdout.is_empty());

    let out = syt(&["order-build", "weak", "8"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("8"));

    assert!(!syt(&["order-build", "kl", "4"]).status.success());
    assert!(!syt(&["verify", "--only", "no-such-claim"]).status.success());
}

#[test]
fn order_diff_lists_the_four_pairs() {
    let dir = tempfile::tempdir().unwrap();
    let weak = dir.path().join("weak7.json");
    let cs = dir.path().join("cs7.json");
    stdout(&["order-build", "weak", "7", "--out", weak.to_str().unwrap()]);
    stdout(&["order-build", "chain-strip", "7", "--out", cs.to_str().unwrap()]);
    let diff = stdout(&["order-diff", weak.to_str().unwrap(), cs.to_str().unwrap()]);
    let lines: Vec<&str> = diff.lines().collect();
    assert_eq!(lines.len(), 4, "{diff}");
    assert!(lines.iter().all(|l| l.starts_with("+ ")));
    assert!(lines.contains(&"+ 1,3,4,5/2,7/6 < 1,3,4/2,5,7/6"));
    let reverse = stdout(&["order-diff", cs.to_str().unwrap(), weak.to_str().unwrap()]);
    assert!(reverse.lines().all(|l| l.starts_with("- ")));
}

#[test]
fn covers_close_to_the_full_file() {
    for order in ["weak", "chain", "chain-strip", "chain-strip-2"] {
        let covers = stdout(&["order-build", order, "6", "--covers"]);
        let full = stdout(&["order-build", order, "6", "--full"]);
        assert_eq!(stdout(&["order-build", order, "6"]), covers);
        let file = PosetFile::from_json(&covers).unwrap();
        let reclosed = file.to_poset().unwrap().to_file(file.n, &file.order, true).to_json();
        assert_eq!(reclosed, full, "{order}");
    }
    assert!(!syt(&["order-build", "weak", "3", "--covers", "--full"]).status.success());
}

#[test]
fn hasse_output() {
    assert_eq!(stdout(&["hasse", "chain-strip", "2"]), "1,2 < 1/2\n");
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("h.dot");
    assert_eq!(stdout(&["hasse", "weak", "3", "--dot", dot.to_str().unwrap()]), "");
    let text = std::fs::read_to_string(dot).unwrap();
    assert!(text.starts_with("digraph \"weak-3\" {"));
    assert_eq!(text.matches(" -> ").count(), 4);
}

#[test]
fn verify_reports() {
    let text = stdout(&["verify", "--only", "counts,coincide-n6"]);
    assert!(text.starts_with("counts"));
    assert!(text.ends_with("2/2 claims passed\n"));
    let json = stdout(&["verify", "--only", "four-pairs-n7", "--json"]);
    let parsed: Vec<chainstrip::verification::ClaimResult> = serde_json::from_str(&json).unwrap();
    assert_eq!(parsed.len(), 1);
    assert_eq!(parsed[0].witnesses.len(), 4);
}
