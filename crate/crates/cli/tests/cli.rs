use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn epg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_epg")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn kmn_then_verify() {
    let dir = TempDir::new().unwrap();
    let rep = dir.path().join("k36.json");
    let graph = dir.path().join("k36.txt");
    let out = epg(&["kmn", "--m", "3", "--n", "6", "--strategy", "comb", "-o", s(&rep), "--graph-out", s(&graph)]);
    assert_eq!(code(&out), 0, "{out:?}");
    assert_eq!(code(&epg(&["verify", "--graph", s(&graph), "--rep", s(&rep), "--max-bends", "4"])), 0);
    assert_eq!(code(&epg(&["verify", "--graph", s(&graph), "--rep", s(&rep), "--max-bends", "1"])), 1);
}

#[test]
fn m4_restricted_to_fewer_b_paths() {
    let dir = TempDir::new().unwrap();
    let rep = dir.path().join("k320.json");
    let graph = dir.path().join("k320.txt");
    let out = epg(&["kmn", "--m", "3", "--n", "20", "--strategy", "m4", "-o", s(&rep), "--graph-out", s(&graph)]);
    assert_eq!(code(&out), 0, "{out:?}");
    assert_eq!(code(&epg(&["verify", "--graph", s(&graph), "--rep", s(&rep), "--max-bends", "3"])), 0);
    assert_eq!(code(&epg(&["kmn", "--m", "3", "--n", "40", "--strategy", "m4"])), 2);
}

#[test]
fn bounds_output() {
    let out = epg(&["bounds", "--m", "3", "--n", "40"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().next(), Some("lower 3 upper 4"));
    let out = epg(&["bounds", "--m", "2", "--n", "5", "--verbose"]);
    assert!(stdout(&out).starts_with("lower 2 upper 2\n"));
    assert!(stdout(&out).contains("K2-ladder"));
    assert_eq!(code(&epg(&["bounds", "--m", "0", "--n", "5"])), 2);
}

#[test]
fn pretzel_and_crossings() {
    let dir = TempDir::new().unwrap();
    let rep = dir.path().join("pretzel.json");
    let out = epg(&["pretzel", "--j", "3", "-o", s(&rep)]);
    assert_eq!(stdout(&out), "crossings 12\n");
    let out = epg(&["crossings", "--rep", s(&rep), "--u", "P1", "--v", "P2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().next(), Some("12"));
    assert_eq!(code(&epg(&["crossings", "--rep", s(&rep), "--u", "P1", "--v", "nope"])), 2);
}

#[test]
fn construct_strategies() {
    let dir = TempDir::new().unwrap();
    let graph = file(&dir, "g.txt", "a b\nb c\nc a\nc d\nd e\ne c\n# comment\nv lonely\n");
    for strategy in ["global-cover", "local-cover", "degeneracy", "treewidth", "edge-coloring"] {
        let rep = dir.path().join(format!("{strategy}.json"));
        let out = epg(&["construct", "--graph", s(&graph), "--strategy", strategy, "-o", s(&rep)]);
        assert_eq!(code(&out), 0, "{strategy}: {out:?}");
        assert_eq!(code(&epg(&["verify", "--graph", s(&graph), "--rep", s(&rep)])), 0, "{strategy}");
    }
}

#[test]
fn exact_search() {
    let dir = TempDir::new().unwrap();
    let c4 = file(&dir, "c4.txt", "a b\nb c\nc d\nd a\n");
    let rep = dir.path().join("c4.json");
    let out = epg(&["exact", "--graph", s(&c4), "--max-k", "1", "-o", s(&rep)]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "bend number 1\n");
    assert_eq!(code(&epg(&["verify", "--graph", s(&c4), "--rep", s(&rep), "--max-bends", "1"])), 0);
    let out = epg(&["exact", "--graph", s(&c4), "--max-k", "0"]);
    assert_eq!(stdout(&out), "bend number at least 1\n");
    let out = epg(&["exact", "--graph", s(&c4), "--max-k", "1", "--node-limit", "1"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn reduce_auto_and_from_file() {
    let dir = TempDir::new().unwrap();
    let formula = file(&dir, "f.txt", "x1 x2 x3\nx1 x3 x4\nx2 x3 x4\n");
    let graph = dir.path().join("gf.txt");
    let rep = dir.path().join("gf.json");
    let out = epg(&["reduce", "--formula", s(&formula), "--assign", "auto", "-o", s(&graph), "--rep", s(&rep)]);
    assert_eq!(code(&out), 0, "{out:?}");
    assert!(stdout(&out).starts_with("3 clauses, 4 variables, 74 vertices"));
    assert_eq!(code(&epg(&["verify", "--graph", s(&graph), "--rep", s(&rep), "--max-bends", "1"])), 0);

    let good = file(&dir, "good.txt", "x1 false\nx2 false\nx3 true\nx4 false\n");
    assert_eq!(code(&epg(&["reduce", "--formula", s(&formula), "--assign", s(&good)])), 0);
    let bad = file(&dir, "bad.txt", "x1 true\nx2 true\nx3 false\nx4 false\n");
    assert_eq!(code(&epg(&["reduce", "--formula", s(&formula), "--assign", s(&bad)])), 2);

    let unsat = file(&dir, "unsat.txt", "a b c\na b d\na c d\nb c d\n");
    assert_eq!(code(&epg(&["reduce", "--formula", s(&unsat), "--assign", "auto"])), 1);
}

#[test]
fn render_writes_svg() {
    let dir = TempDir::new().unwrap();
    let rep = dir.path().join("p.json");
    let svg = dir.path().join("p.svg");
    assert_eq!(code(&epg(&["pretzel", "--j", "2", "-o", s(&rep)])), 0);
    assert_eq!(code(&epg(&["render", "--rep", s(&rep), "-o", s(&svg), "--crossings"])), 0);
    let text = fs::read_to_string(&svg).unwrap();
    assert_eq!(text.matches("<polyline").count(), 2);
    assert_eq!(text.matches(r#"class="crossing""#).count(), 6);
    assert_eq!(code(&epg(&["render", "--rep", s(&rep), "-o", s(&svg), "--cell-size", "0"])), 2);
}

#[test]
fn usage_errors() {
    assert_eq!(code(&epg(&["verify", "--graph", "/nonexistent/g.txt", "--rep", "/nonexistent/r.json"])), 2);
    assert_eq!(code(&epg(&["frobnicate"])), 2);
    let dir = TempDir::new().unwrap();
    let broken = file(&dir, "broken.txt", "a b c\n");
    assert_eq!(code(&epg(&["exact", "--graph", s(&broken), "--max-k", "0"])), 2);
}
