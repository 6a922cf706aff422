use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use exclusivity::graph::{make_cycle, parse_graph};
use exclusivity_cli::report::{ReportDocument, SearchStatus};
use tempfile::TempDir;

fn excl(args: &[&str]) -> Output {
    excl_env(args, &[])
}

fn excl_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_excl"));
    cmd.args(args).env_remove("EXCL_MAX_CLIQUES");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("run excl")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

/// Parses a JSON report and checks that it survives a second round trip.
fn report(out: &Output) -> ReportDocument {
    let doc = ReportDocument::from_json(&stdout(out)).expect("valid report json");
    assert_eq!(ReportDocument::from_json(&doc.to_json()).unwrap(), doc);
    doc
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn scenario_file(dir: &TempDir, name: &str) -> PathBuf {
    let out = excl(&["scenario", name]);
    assert_eq!(code(&out), 0);
    write(dir, &format!("{name}.scn"), &stdout(&out))
}

fn graph_file(dir: &TempDir, name: &str, args: &[&str]) -> PathBuf {
    let path = dir.path().join(name);
    let mut all = vec!["gen"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["--out", s(&path)]);
    assert_eq!(code(&excl(&all)), 0, "gen {args:?}");
    path
}

#[test]
fn gen_writes_graph_files() {
    let out = excl(&["gen", "cycle", "5"]);
    assert_eq!(code(&out), 0);
    assert_eq!(parse_graph(&stdout(&out)).unwrap(), make_cycle(5).unwrap());

    let out = excl(&["gen", "shrikhande-complement"]);
    let g = parse_graph(&stdout(&out)).unwrap();
    assert_eq!((g.order(), g.edge_count()), (16, 72));

    let dir = TempDir::new().unwrap();
    let a = graph_file(&dir, "a.graph", &["cycle", "5"]);
    let b = graph_file(&dir, "b.graph", &["prism"]);
    let out = excl(&["gen", "or-product", s(&a), s(&b)]);
    let p = parse_graph(&stdout(&out)).unwrap();
    let (ga, gb) = (make_cycle(5).unwrap(), exclusivity::graph::make_prism());
    assert_eq!(p, ga.or_product(&gb));
    // row-major: (0, 0) ~ (1, 5) because 0 ~ 1 in C5
    assert!(p.adjacent(0, 6 + 5));

    let out = excl(&["gen", "complement-of", s(&a)]);
    assert_eq!(parse_graph(&stdout(&out)).unwrap(), ga.complement());
}

#[test]
fn gen_rejects_bad_parameters() {
    assert_eq!(code(&excl(&["gen", "cycle", "2"])), 2);
    assert_eq!(code(&excl(&["gen", "circulant", "8", "5"])), 2);
    assert_eq!(code(&excl(&["gen", "cycle", "five"])), 2);
    assert_eq!(code(&excl(&["gen", "petersen"])), 2);
    assert_eq!(
        code(&excl(&["gen", "complement-of", "/no/such/file.graph"])),
        2
    );
}

#[test]
fn bounds_on_scenarios() {
    let dir = TempDir::new().unwrap();
    let three_box = scenario_file(&dir, "three-box");
    let out = excl(&["bounds", s(&three_box), "--gamma", "contexts", "--json"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let b = report(&out).bounds.unwrap();
    assert_eq!(b.alpha, 2);
    assert_eq!(b.alpha_star.unwrap().value.exact, "2/1");
    assert_eq!(b.alpha_star_contexts.unwrap().value.exact, "3/1");

    let mermin = scenario_file(&dir, "mermin");
    let out = excl(&["bounds", s(&mermin), "--json"]);
    assert_eq!(code(&out), 0);
    let doc = report(&out);
    assert_eq!(doc.graph_stats.unwrap().n, 16);
    let b = doc.bounds.unwrap();
    assert_eq!(b.alpha, 3);
    let [lo, hi] = b.theta.unwrap().bracket;
    assert!((lo - 4.0).abs() < 1e-5 && (hi - 4.0).abs() < 1e-5);
    assert_eq!(b.alpha_star.unwrap().value.exact, "4/1");
    assert_eq!(b.quantum_classical_separation, Some(true));

    let text = stdout(&excl(&["bounds", s(&mermin)]));
    assert!(text.contains("alpha* (cliques)      4/1"), "{text}");
}

#[test]
fn bounds_on_two_copy_chsh() {
    let dir = TempDir::new().unwrap();
    let ci8 = graph_file(&dir, "ci8.graph", &["circulant", "8", "1", "4"]);
    let two = graph_file(&dir, "chsh2.graph", &["or-product", s(&ci8), s(&ci8)]);
    let out = excl(&["bounds", s(&two), "--json"]);
    assert_eq!(code(&out), 0);
    let b = report(&out).bounds.unwrap();
    let star = b.alpha_star.unwrap().value;
    assert_eq!(
        (star.exact.as_str(), star.decimal.as_str()),
        ("64/5", "12.80000000")
    );
    let [lo, hi] = b.theta.unwrap().bracket;
    let mid = 0.5 * (lo + hi);
    assert!((11.6568..=11.6570).contains(&mid), "[{lo}, {hi}]");
    assert!(hi - lo <= 1e-4);
}

#[test]
fn bounds_usage_and_parse_errors() {
    let dir = TempDir::new().unwrap();
    let c5 = graph_file(&dir, "c5.graph", &["cycle", "5"]);
    let out = excl(&["bounds", s(&c5), "--gamma", "contexts"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains(".scn"));

    let bad = write(&dir, "bad.graph", "n 3\n0 1\n0 5\n");
    let out = excl(&["bounds", s(&bad)]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));

    let bad = write(&dir, "bad.scn", "setting a\nevent 0 | a\nevent 0 | a\n");
    let out = excl(&["bounds", s(&bad)]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));

    assert_eq!(code(&excl(&["bounds", s(&c5), "--tol", "-1"])), 2);
    assert_eq!(code(&excl(&["bounds", "/no/such.graph"])), 2);
    assert_eq!(code(&excl(&["bounds"])), 2);
    assert_eq!(
        code(&excl_env(
            &["bounds", s(&c5)],
            &[("EXCL_MAX_CLIQUES", "lots")]
        )),
        2
    );
}

#[test]
fn bounds_solver_failure_keeps_partial_report() {
    let dir = TempDir::new().unwrap();
    let mermin = scenario_file(&dir, "mermin");
    let out = excl(&["bounds", s(&mermin), "--max-iter", "2", "--json"]);
    assert_eq!(code(&out), 3);
    let b = report(&out).bounds.unwrap();
    let theta = b.theta.unwrap();
    assert!(theta.failure.is_some());
    assert!(theta.bracket[0] <= 4.0 + 1e-9 && 4.0 - 1e-9 <= theta.bracket[1]);
    assert_eq!(b.alpha, 3);
    assert_eq!(b.alpha_star.unwrap().value.exact, "4/1");
}

#[test]
fn clique_cap_comes_from_the_environment() {
    let dir = TempDir::new().unwrap();
    let mermin = scenario_file(&dir, "mermin");
    let out = excl_env(
        &["bounds", s(&mermin), "--json"],
        &[("EXCL_MAX_CLIQUES", "3")],
    );
    assert_eq!(code(&out), 4);
    let b = report(&out).bounds.unwrap();
    assert!(b.alpha_star.is_none());
    assert!(b.errors["alpha_star"].contains("limit 3"));
    assert!(b.theta.is_some());

    let out = excl_env(&["bounds", s(&mermin)], &[("EXCL_MAX_CLIQUES", "48")]);
    assert_eq!(code(&out), 0);
}

#[test]
fn find_patterns() {
    let dir = TempDir::new().unwrap();
    let chsh = scenario_file(&dir, "chsh");
    let out = excl(&["find", s(&chsh), "c5", "--json"]);
    assert_eq!(code(&out), 0);
    let w = report(&out).witnesses.unwrap();
    assert_eq!(w.status, SearchStatus::Found);
    assert_eq!(w.witnesses[0].vertices.len(), 5);

    let prism = graph_file(&dir, "prism.graph", &["prism"]);
    let out = excl(&["find", s(&prism), "c5", "--json"]);
    assert_eq!(code(&out), 0);
    let w = report(&out).witnesses.unwrap();
    assert_eq!(w.status, SearchStatus::NoneFound);
    assert!(w.witnesses.is_empty());
    assert!(stdout(&excl(&["find", s(&prism), "c5"])).contains("none found"));

    // general pattern mode: a triangle inside the prism
    let tri = write(&dir, "tri.graph", "n 3\n0 1\n1 2\n0 2\n");
    let out = excl(&["find", s(&prism), s(&tri), "--json"]);
    assert_eq!(report(&out).witnesses.unwrap().status, SearchStatus::Found);
}

#[test]
fn find_budget_exhaustion() {
    let dir = TempDir::new().unwrap();
    let ci8 = graph_file(&dir, "ci8.graph", &["circulant", "8", "1", "4"]);
    let two = graph_file(&dir, "chsh2.graph", &["or-product", s(&ci8), s(&ci8)]);
    let out = excl(&["find", s(&two), "anti-c7", "--budget", "10", "--json"]);
    assert_eq!(code(&out), 4);
    assert_eq!(
        report(&out).witnesses.unwrap().status,
        SearchStatus::BudgetExhausted
    );
}

#[test]
fn paper_suite_full_run() {
    let out = excl(&["paper-suite", "--json"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let suite = report(&out).suite.unwrap();
    assert!(suite.passed());
    let criteria: std::collections::BTreeSet<u32> =
        suite.claims.iter().map(|c| c.criterion).collect();
    assert_eq!(criteria, (1..=10).collect());
    let spots: Vec<&str> = suite.spot_data.iter().map(|e| e.graph.as_str()).collect();
    assert_eq!(spots, ["anti-C5^1", "anti-C5^2", "anti-C7^1", "anti-C7^2"]);
}

#[test]
fn paper_suite_loose_tolerance_passes() {
    let out = excl(&["paper-suite", "--tol", "1e-2", "--no-spot"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).contains("32 of 32 claims passed"));
}

#[test]
fn paper_suite_negative_control() {
    let out = excl(&[
        "paper-suite",
        "--no-spot",
        "--corrupt-builtin",
        "mermin",
        "--json",
    ]);
    assert_eq!(code(&out), 1);
    let suite = report(&out).suite.unwrap();
    assert!(suite.failures().all(|c| c.criterion == 4));
    assert!(suite.failures().count() >= 1);
    assert!(stderr(&out).contains("failed: criterion 4"));
}
