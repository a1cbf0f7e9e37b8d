use std::fs;
use std::path::{Path, PathBuf};

use tempfile::TempDir;
use twindom::{cli, trn};
use twindom_core::burnside::count_burnside;
use twindom_core::generators::{random_tournament, transitive_tournament};
use twindom_core::Tournament;

struct Run {
    code: u8,
    out: String,
    err: String,
}

fn run(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("twindom").chain(args.iter().copied());
    let code = cli::run(argv, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn write_t(dir: &TempDir, name: &str, t: &Tournament) -> PathBuf {
    write(dir, name, &(trn::encode(t) + "\n"))
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gamma_outputs() {
    let dir = TempDir::new().unwrap();
    let c3 = write(&dir, "c3.trn", "3\n101\n");
    let r = run(&["gamma", s(&c3)]);
    assert_eq!((r.code, r.out.as_str()), (0, "gamma_star=2 set=0,1\n"));

    let one = write(&dir, "one.trn", "1\n");
    assert_eq!(run(&["gamma", s(&one)]).out, "gamma_star=1 set=0\n");

    let bad = write(&dir, "bad.trn", "3\n11\n");
    let r = run(&["gamma", s(&bad)]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("expected 3"), "{}", r.err);

    let big = write_t(&dir, "big.trn", &random_tournament(30, 1).unwrap());
    assert_eq!(run(&["gamma", s(&big)]).code, 3);
    assert_eq!(run(&["gamma", s(&dir.path().join("missing.trn"))]).code, 2);
}

#[test]
fn check_exit_codes() {
    let dir = TempDir::new().unwrap();
    let c3 = write(&dir, "c3.trn", "3\n101");
    let r = run(&["check", s(&c3), "0,1"]);
    assert_eq!((r.code, r.out.as_str()), (0, "true\n"));
    let r = run(&["check", s(&c3), "0"]);
    assert_eq!((r.code, r.out.as_str()), (1, "false\n"));
    assert_eq!(run(&["check", s(&c3), "0,9"]).code, 2);
    assert_eq!(run(&["check", s(&c3), "0,x"]).code, 2);
}

#[test]
fn witness_methods() {
    let dir = TempDir::new().unwrap();
    let tt8 = write_t(&dir, "tt8.trn", &transitive_tournament(8).unwrap());
    let r = run(&["witness", s(&tt8), "--method", "order8"]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.starts_with("method=order8_case branch="), "{}", r.out);
    assert!(r.out.contains("verified=true"));

    let r10 = write_t(&dir, "r10.trn", &random_tournament(10, 42).unwrap());
    let r = run(&["witness", s(&r10), "--method", "half"]);
    assert_eq!(r.code, 0, "{}", r.err);
    let size: usize = r
        .out
        .split_whitespace()
        .find_map(|f| f.strip_prefix("size="))
        .unwrap()
        .parse()
        .unwrap();
    assert!(size <= 5);
    assert!(run(&["witness", s(&r10)])
        .out
        .starts_with("method=half_witness"));

    let c3 = write(&dir, "c3.trn", "3\n101");
    assert_eq!(run(&["witness", s(&c3), "--method", "sinksource"]).code, 3);
    assert_eq!(run(&["witness", s(&c3), "--method", "order8"]).code, 3);
    assert_eq!(run(&["witness", s(&c3), "--method", "half"]).code, 3);
    assert!(run(&["witness", s(&c3)]).out.starts_with("method=exact"));
}

#[test]
fn domstar_small_and_out_of_range() {
    let r = run(&["domstar", "3", "--jobs", "2"]);
    assert_eq!(r.code, 0);
    let mut lines = r.out.splitn(2, '\n');
    assert_eq!(lines.next().unwrap(), "DOM*(K_3)=2 classes=2");
    let json: serde_json::Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert_eq!(json["n"], 3);
    assert_eq!(json["gamma_histogram"]["2"], 2);
    assert_eq!(run(&["domstar", "9"]).code, 3);
}

#[test]
fn domstar_eight_summary() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("k8.json");
    let r = run(&["domstar", "8", "--out", s(&out)]);
    assert_eq!(
        r.out,
        format!("DOM*(K_8)=4 classes={}\n", count_burnside(8).unwrap())
    );
    assert!(fs::read_to_string(out).unwrap().contains("\"dom_star\": 4"));
}

#[test]
fn random_is_reproducible() {
    let a = run(&["random", "8", "--seed", "42"]);
    let b = run(&["random", "8", "--seed", "42"]);
    assert_eq!(a.code, 0);
    assert_eq!(a.out, b.out);
    assert_eq!(
        trn::decode(&a.out).unwrap(),
        random_tournament(8, 42).unwrap()
    );
    assert_ne!(
        run(&["random", "8", "--seed", "1"]).out,
        run(&["random", "8", "--seed", "2"]).out
    );
    assert_eq!(run(&["random", "65"]).code, 3);
    assert_eq!(
        run(&["random", "8"]).out,
        run(&["random", "8", "--seed", "0"]).out
    );
}

#[test]
fn enumerate_streams_trn() {
    let r = run(&["enumerate", "4"]);
    assert_eq!(r.code, 0);
    let lines: Vec<&str> = r.out.lines().collect();
    assert_eq!(lines.len(), 8);
    for doc in lines.chunks(2) {
        trn::decode(&doc.join("\n")).unwrap();
    }
    let r = run(&["enumerate", "3", "--labeled"]);
    assert_eq!(r.out.lines().count(), 16);
    assert_eq!(run(&["enumerate", "7", "--labeled"]).code, 3);
}

#[test]
fn convert_round_trip() {
    let dir = TempDir::new().unwrap();
    let c3 = write(&dir, "c3.trn", "3\n101\n");
    let r = run(&["convert", s(&c3), "--to", "matrix"]);
    assert_eq!(r.out, "010\n001\n100\n");
    let m = write(&dir, "c3.mat", &r.out);
    assert_eq!(run(&["convert", s(&m), "--to", "trn"]).out, "3\n101\n");
    let garbage = write(&dir, "g.txt", "hello\n");
    assert_eq!(run(&["convert", s(&garbage), "--to", "trn"]).code, 2);
}

#[test]
fn search_subcommand() {
    let r = run(&["search", "6", "4", "--seed", "1"]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.starts_with("gamma_star=4 "));
    let r = run(&["search", "3", "3", "--budget", "50"]);
    assert_eq!(r.code, 1);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&[]).code, 2);
    assert_eq!(run(&["frobnicate"]).code, 2);
    assert_eq!(run(&["witness", "x", "--method", "bogus"]).code, 2);
    assert_eq!(run(&["--help"]).code, 0);
}
