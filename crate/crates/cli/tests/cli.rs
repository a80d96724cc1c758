use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use rankdual::doc::{parse, rank_table_json, Document};
use rankdual_core::fixtures::{bundled_tree, three_edge_greedoid};
use rankdual_core::{pruning_antimatroid, uniform_matroid};

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn rankdual(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rankdual"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn rankdual_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_rankdual"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn tutte_prints_canonical_form() {
    let o = rankdual(&["tutte", "--in", &fixture("three-edge.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "t^3*z + t^3 + t^2*z + 2*t^2 + 2*t + 1");
    for pivot in ["lowest", "highest"] {
        let r = rankdual(&[
            "tutte",
            "--in",
            &fixture("three-edge.json"),
            "--method",
            "recursive",
            "--pivot",
            pivot,
        ]);
        assert_eq!(stdout(&r), stdout(&o));
    }
}

#[test]
fn unnormalized_table_has_laurent_terms() {
    let o = rankdual(&["tutte", "--in", &fixture("unnormalized-pair.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "t^3*z^2 + 1 + t^-1*z^-3 + t^-5*z^-6");
    let r = rankdual(&[
        "tutte",
        "--in",
        &fixture("unnormalized-pair.json"),
        "--method",
        "recursive",
    ]);
    assert_eq!(r.status.code(), Some(2));
    assert!(stderr(&r).contains("rank of the empty set is 3"));
}

#[test]
fn dual_matches_stored_document_and_round_trips() {
    let o = rankdual(&["dual", "--in", &fixture("three-edge.json")]);
    assert_eq!(o.status.code(), Some(0));
    let stored = std::fs::read_to_string(fixture("three-edge-dual.json")).unwrap();
    assert_eq!(stdout(&o), stored);

    let back = rankdual_stdin(&["dual", "--in", "-"], &stored);
    let original = std::fs::read_to_string(fixture("three-edge.json")).unwrap();
    assert_eq!(stdout(&back), original);
}

#[test]
fn written_documents_parse_back() {
    for t in [
        three_edge_greedoid(),
        pruning_antimatroid(&bundled_tree()),
        uniform_matroid(["p", "q", "r"], 2).unwrap(),
    ] {
        match parse(&rank_table_json(&t)).unwrap() {
            Document::RankTable(back) => assert_eq!(back, t),
            other => panic!("parsed as {}", other.kind()),
        }
    }
}

#[test]
fn built_tree_matches_library() {
    let o = rankdual(&["build", "pruning", "--in", &fixture("bundled-tree.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        rank_table_json(&pruning_antimatroid(&bundled_tree()))
    );
    let b = rankdual(&[
        "build",
        "branching",
        "--in",
        &fixture("three-edge-tree.json"),
    ]);
    assert_eq!(
        stdout(&b),
        std::fs::read_to_string(fixture("three-edge.json")).unwrap()
    );
}

#[test]
fn failed_check_exits_one_with_witness() {
    let o = rankdual(&["check", "matroid", "--in", &fixture("three-edge.json")]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("R1: FAIL A={b}, p=a"), "{out}");
    assert!(out.ends_with("result: FAIL\n"));

    let g = rankdual(&["check", "greedoid", "--in", &fixture("three-edge.json")]);
    assert_eq!(g.status.code(), Some(0));
    let u = rankdual(&["check", "matroid", "--in", &fixture("u24.json")]);
    assert_eq!(u.status.code(), Some(0));
    let d = rankdual(&["check", "demimatroid", "--in", &fixture("three-edge.json")]);
    assert_eq!(d.status.code(), Some(1));
    assert!(stdout(&d).contains("(c) unit-increase: FAIL A={b}, p=a"));
}

#[test]
fn closures_on_bundled_tree() {
    for (set, closed) in [("b,e,h", "{b,c,d,e,h}"), ("a,d,f", "{a,b,c,d,f,g}")] {
        let o = rankdual(&[
            "closure",
            "--in",
            &fixture("bundled-tree.json"),
            "--set",
            set,
        ]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o).trim(), closed);
    }
    let o = rankdual(&["closure", "--in", &fixture("u24.json"), "--set", "p"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn enumerate_counts() {
    for (c, n, count) in [("matroid", "4", "68"), ("full-antimatroid", "4", "485")] {
        let o = rankdual(&["enumerate", "--n", n, "--constraint", c, "--count"]);
        assert_eq!(stdout(&o).trim(), format!("count: {count}"));
    }
    let o = rankdual(&["enumerate", "--n", "5", "--constraint", "matroid"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_is_deterministic_per_seed() {
    let args = [
        "verify",
        "--suite",
        "duality_swap",
        "--seed",
        "11",
        "--params",
        "count=200",
    ];
    let a = rankdual(&args);
    let b = rankdual(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).ends_with("result: pass\n"));

    let missing = rankdual(&["verify", "--suite", "duality_swap"]);
    assert_eq!(missing.status.code(), Some(2));
    let unknown = rankdual(&["verify", "--suite", "no_such_suite"]);
    assert_eq!(unknown.status.code(), Some(2));
    let list = rankdual(&["verify", "--list"]);
    assert!(stdout(&list).contains("thm_4_4"));
}

#[test]
fn input_errors_exit_two_with_line() {
    let doc = "{\"kind\": \"rank-table\", \"ground\": [\"a\"],\n \"ranks\": [{\"set\": [], \"rank\": 0},\n  {\"set\": [\"a\"], \"rank\": \"x\"}]}";
    let o = rankdual_stdin(&["dual", "--in", "-"], doc);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));

    let missing = rankdual(&["dual", "--in", "/nonexistent/table.json"]);
    assert_eq!(missing.status.code(), Some(2));
    assert_eq!(rankdual(&["bogus"]).status.code(), Some(2));
    let bad_elem = rankdual(&["delete", "--in", &fixture("three-edge.json"), "-p", "z"]);
    assert_eq!(bad_elem.status.code(), Some(2));
}

#[test]
fn in_process_runner_matches_binary() {
    let args = ["rankdual", "tutte", "--in", &fixture("u24.json")];
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = rankdual::cli::run(args.iter(), &mut out, &mut err);
    assert_eq!(code, 0);
    assert_eq!(out, rankdual(&args[1..]).stdout);
}
