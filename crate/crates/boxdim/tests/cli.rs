use std::path::{Path, PathBuf};
use std::process::Command;

use boxdim::formats::write_graph;
use boxdim_core::graph::named::{cycle, path};
use boxdim_core::Graph;
use tempfile::TempDir;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn boxdim(args: &[&str]) -> Run {
    let o = Command::new(env!("CARGO_BIN_EXE_boxdim")).args(args).output().unwrap();
    Run {
        code: o.status.code().unwrap(),
        stdout: String::from_utf8(o.stdout).unwrap(),
        stderr: String::from_utf8(o.stderr).unwrap(),
    }
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn oracle_box_c4() {
    let d = TempDir::new().unwrap();
    let g = file(&d, "c4.graph", &write_graph(&cycle(4)));
    let r = boxdim(&["oracle-box", "--input", s(&g)]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "boxicity 2\n"));
    let r = boxdim(&["oracle-cube", "--input", s(&g)]);
    assert_eq!(r.stdout, "cubicity 2\n");
}

#[test]
fn validate_reports_witness() {
    let d = TempDir::new().unwrap();
    let g = file(&d, "c4.graph", "p box 4 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\n");
    let bad = file(&d, "bad.boxrep", "boxrep 4 1\ndim 0\n0 0 1\n1 1 2\n2 2 3\n3 3 4\n");
    let r = boxdim(&["validate-box", "--graph", s(&g), "--rep", s(&bad)]);
    assert_eq!(r.code, 1);
    assert_eq!(r.stdout, "verdict invalid\nwitness missing-edge 0 3 dim 0\n");
    let good = file(&d, "good.boxrep", "boxrep 4 2\ndim 0\n0 0 1\n1 1 2\n2 2 3\n3 0 3\ndim 1\n0 1 2\n1 0 1\n2 0 3\n3 2 3\n");
    let r = boxdim(&["validate-box", "--graph", s(&g), "--rep", s(&good)]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "verdict valid\n"));
}

#[test]
fn approx_box_writes_valid_file() {
    let d = TempDir::new().unwrap();
    let g = file(&d, "g.graph", &write_graph(&cycle(7)));
    let out = d.path().join("g.boxrep");
    let r = boxdim(&["approx-box", "--input", s(&g), "--k", "2", "--output", s(&out)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let words: Vec<&str> = r.stdout.split_whitespace().collect();
    assert_eq!((words[0], words[2], words[3]), ("dimension", "bound-factor", "8"));
    let v = boxdim(&["validate-box", "--graph", s(&g), "--rep", s(&out)]);
    assert_eq!((v.code, v.stdout.as_str()), (0, "verdict valid\n"));
}

#[test]
fn output_independent_of_threads() {
    let d = TempDir::new().unwrap();
    let g = file(&d, "g.graph", &write_graph(&cycle(12)));
    let mut files = Vec::new();
    for (cmd, t) in [("approx-box", "1"), ("approx-box", "8"), ("approx-cube", "1"), ("approx-cube", "8")] {
        let out = d.path().join(format!("{cmd}-{t}"));
        let r = boxdim(&[cmd, "--input", s(&g), "--k", "3", "--threads", t, "--output", s(&out)]);
        assert_eq!(r.code, 0, "{}", r.stderr);
        files.push(std::fs::read(out).unwrap());
    }
    assert_eq!(files[0], files[1]);
    assert_eq!(files[2], files[3]);
}

#[test]
fn exact_and_capability_exit() {
    let d = TempDir::new().unwrap();
    let mut k = Graph::complete(8);
    k.remove_edge(0, 1);
    k.remove_edge(2, 3);
    let g = file(&d, "g.graph", &write_graph(&k));
    let out = d.path().join("g.boxrep");
    let r = boxdim(&["exact", "--input", s(&g), "--output", s(&out)]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "boxicity 2\n"));
    assert_eq!(boxdim(&["validate-box", "--graph", s(&g), "--rep", s(&out)]).code, 0);

    let p = file(&d, "p.graph", &write_graph(&path(8)));
    let r = boxdim(&["exact", "--input", s(&p), "--k-max", "2"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("error"));
}

#[test]
fn input_errors_exit_one() {
    let d = TempDir::new().unwrap();
    let g = file(&d, "g.graph", "p box 3 1\ne 1 4\n");
    let r = boxdim(&["oracle-box", "--input", s(&g)]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("vertex index out of range"), "{}", r.stderr);
    assert_eq!(boxdim(&["oracle-box", "--input", "/nonexistent/file"]).code, 1);
    assert_eq!(boxdim(&["no-such-command"]).code, 1);
}

#[test]
fn disconnected_cube() {
    let d = TempDir::new().unwrap();
    let g = file(&d, "g.graph", "p box 5 3\ne 1 2\ne 3 4\ne 4 5\n");
    let r = boxdim(&["approx-cube", "--input", s(&g)]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("--per-component"), "{}", r.stderr);
    let out = d.path().join("g.cuberep");
    let r = boxdim(&["approx-cube", "--input", s(&g), "--per-component", "--output", s(&out)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(boxdim(&["validate-cube", "--graph", s(&g), "--rep", s(&out)]).code, 0);
}

#[test]
fn chain_cover_and_posets() {
    let d = TempDir::new().unwrap();
    let c6 = file(&d, "c6.graph", &write_graph(&cycle(6)));
    assert_eq!(boxdim(&["oracle-ch", "--input", s(&c6)]).stdout, "chain-cover 2\n");
    let out = d.path().join("c6.chains");
    let r = boxdim(&["chain-cover", "--input", s(&c6), "--output", s(&out)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(std::fs::read_to_string(&out).unwrap().starts_with("chaincover 6 "));
    assert_eq!(boxdim(&["oracle-ch", "--input", s(&file(&d, "c5", &write_graph(&cycle(5))))]).code, 1);

    let s3 = file(&d, "s3.poset", "p poset 6 6\nr 1 5\nr 1 6\nr 2 4\nr 2 6\nr 3 4\nr 3 5\n");
    assert_eq!(boxdim(&["oracle-posetdim", "--input", s(&s3)]).stdout, "dimension 3\n");
    let r = boxdim(&["poset-dim", "--input", s(&s3)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let dim: usize = r.stdout.split_whitespace().nth(1).unwrap().parse().unwrap();
    assert!(dim >= 3);
}

#[test]
fn dump_nice_lists_candidates() {
    let d = TempDir::new().unwrap();
    let g = file(&d, "p3.graph", &write_graph(&path(3)));
    let out = d.path().join("nice.boxrep");
    let r = boxdim(&["dump-nice", "--input", s(&g), "--output", s(&out)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let count: usize = r.stdout.split_whitespace().nth(1).unwrap().parse().unwrap();
    assert!(std::fs::read_to_string(&out).unwrap().starts_with(&format!("boxrep 3 {count}\n")));
}
