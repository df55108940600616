use std::path::PathBuf;
use std::process::{Command, Output};

use ramsey_books::arrowing::{dpll, export_cnf, ArrowInstance};
use ramsey_books::{Budget, EdgeColoring, PatternSpec};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ramsey-books"))
        .args(args)
        .env_remove("RAMSEY_BOOKS_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ramsey-books-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn gen_burr_writes_the_k4_colouring() {
    let o = run(&["gen-burr", "--n", "3", "--t", "1", "--k", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "4\nRBBBBR\n");
}

#[test]
fn ramsey_prints_the_value() {
    let o = run(&["ramsey", "--red", "star:3", "--blue", "book:2,1", "--max-n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().last(), Some("5"));
}

#[test]
fn arrow_exit_codes_partition_answers() {
    let yes = run(&["arrow", "--red", "star:3", "--blue", "book:2,1", "--n", "5"]);
    assert_eq!(yes.status.code(), Some(0));
    assert!(stdout(&yes).contains("answer=arrows"));

    let no = run(&["arrow", "--red", "star:3", "--blue", "book:2,1", "--n", "4"]);
    assert_eq!(no.status.code(), Some(2));
    let text = stdout(&no);
    let body: Vec<&str> = text.lines().rev().take(2).collect();
    let c = EdgeColoring::from_text(&format!("{}\n{}\n", body[1], body[0])).unwrap();
    assert_eq!(c.order(), 4);

    let starved = Command::new(env!("CARGO_BIN_EXE_ramsey-books"))
        .args(["arrow", "--red", "complete:3", "--blue", "complete:3", "--n", "6"])
        .env("RAMSEY_BOOKS_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(starved.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["--bogus"]).status.code(), Some(1));
    assert_eq!(run(&["bounds", "--theorem", "nope"]).status.code(), Some(1));
    assert_eq!(run(&["gen-graph", "--pattern", "wheel:5"]).status.code(), Some(1));
}

#[test]
fn extract_reports_witness_or_miss() {
    let coloring = scratch("random14.txt");
    let gen = run(&["gen-coloring", "--n", "14", "--seed", "9", "-o", coloring.to_str().unwrap()]);
    assert_eq!(gen.status.code(), Some(0));
    assert!(stdout(&gen).starts_with("seed=9\n"));
    let o = run(&["extract", "--coloring", coloring.to_str().unwrap(), "--mode", "star", "--n", "7", "--t", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verified=true"));

    let burr = scratch("burr13.txt");
    run(&["gen-burr", "--n", "7", "--t", "2", "-o", burr.to_str().unwrap()]);
    let miss = run(&["extract", "--coloring", burr.to_str().unwrap(), "--mode", "star", "--n", "7", "--t", "2"]);
    assert_eq!(miss.status.code(), Some(2));
    assert!(stdout(&miss).contains("outcome=no_witness"));

    let apex = scratch("apex.txt");
    run(&["gen-burr", "--n", "8", "--apex", "-o", apex.to_str().unwrap()]);
    let sparse = run(&["extract", "--coloring", apex.to_str().unwrap(), "--mode", "sparse", "--graph", "path:8"]);
    assert_eq!(sparse.status.code(), Some(0), "{}", stdout(&sparse));
}

#[test]
fn same_seed_gives_identical_bytes() {
    for args in [
        vec!["gen-graph", "--sparse", "30", "--excess", "1", "--seed", "4"],
        vec!["gen-coloring", "--n", "9", "--seed", "4", "--json"],
        vec!["analyze", "--graph", "copies:2,(path:5)", "--format", "kv"],
        vec!["bounds", "n=40", "m=40", "k=1", "t=2", "--format", "kv"],
    ] {
        let (a, b) = (run(&args), run(&args));
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
    let other = run(&["gen-graph", "--sparse", "30", "--excess", "1", "--seed", "5"]);
    assert_ne!(other.stdout, run(&["gen-graph", "--sparse", "30", "--excess", "1", "--seed", "4"]).stdout);
}

#[test]
fn cnf_export_and_model_decoding_round_trip() {
    let o = run(&["export-cnf", "--red", "star:3", "--blue", "book:2,1", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("p cnf 6 ")));

    let red = PatternSpec::parse("star:3").unwrap().build().unwrap();
    let blue = PatternSpec::book(1).build().unwrap();
    let cnf = export_cnf(&ArrowInstance::new(4, red, blue)).unwrap();
    assert_eq!(cnf.to_dimacs(), text);
    let model = dpll(&cnf, &mut Budget::unlimited()).unwrap().expect("K_4 does not arrow");
    let lits: Vec<String> = model
        .iter()
        .enumerate()
        .map(|(i, &b)| if b { format!("{}", i + 1) } else { format!("-{}", i + 1) })
        .collect();
    let path = scratch("model.txt");
    std::fs::write(&path, format!("s SATISFIABLE\nv {} 0\n", lits.join(" "))).unwrap();
    let d = run(&[
        "decode-model", "--n", "4", "--model", path.to_str().unwrap(), "--red", "star:3", "--blue", "book:2,1",
    ]);
    assert_eq!(d.status.code(), Some(0));
    assert!(stdout(&d).starts_with("avoids=true\n"));
}

#[test]
fn analyze_reports_every_section() {
    let o = run(&["analyze", "--graph", "star:9", "--q", "4", "--s", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for key in ["suspended.longest.order=", "end_edges.count=1", "degree1.pass=true", "trichotomy.case=3"] {
        assert!(text.contains(key), "{key} missing from\n{text}");
    }
}

#[test]
fn verify_suite_runs_a_single_row() {
    let o = run(&["verify-suite", "--only", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("seed=0\n"));
    assert!(text.contains("[PASS]  4 chromatic_surplus"));
    assert!(text.ends_with("failed=0\n"));
}
