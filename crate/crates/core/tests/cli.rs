use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tropigon::samples::{THIN_RECTANGLE, TRIPLE_POINT};

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tropigon"))
        .args(args)
        .env("TROPIGON_NO_COLOR", "1")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn tropicalize_example() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "g.txt", TRIPLE_POINT);
    let out = run(&["tropicalize", s(&f)]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["degenerate"], false);
    let mut verts: Vec<Value> = v["curve"]["vertices"].as_array().unwrap().iter().map(|x| x["point"].clone()).collect();
    verts.sort_by_key(|x| x.to_string());
    let want: Vec<Value> = [["-2", "0"], ["1", "0"], ["4", "0"]].iter().map(|p| serde_json::json!(p)).collect();
    assert_eq!(verts.len(), 3);
    for w in &want {
        assert!(verts.contains(w), "{w} missing from {verts:?}");
    }
    let mut weights: Vec<i64> = v["curve"]["edges"].as_array().unwrap().iter().map(|e| e["weight"].as_i64().unwrap()).collect();
    weights.sort();
    assert_eq!(weights, vec![2, 3]);
}

#[test]
fn tropicalize_line_and_degenerate() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "l.txt", "x + y + 1");
    let v = json(&run(&["tropicalize", s(&f)]));
    let rays = v["curve"]["rays"].as_array().unwrap();
    assert_eq!(rays.len(), 3);
    assert!(rays.iter().all(|r| r["weight"] == 1 && r["from"] == 0));
    assert_eq!(v["curve"]["vertices"][0]["point"], serde_json::json!(["0", "0"]));

    let f = write(dir.path(), "d.txt", "x + x^2");
    let out = run(&["tropicalize", s(&f)]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["degenerate"], true);
    assert!(v["curve"].is_null());
    let text = stdout(&run(&["tropicalize", s(&f), "--format", "text"]));
    assert!(text.starts_with("degenerate"));
}

#[test]
fn analyze_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.txt", TRIPLE_POINT);
    let out = run(&["analyze", s(&g), "--point", "0,0", "--m", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verdict"], "consistent");
    let infl = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "infl").unwrap();
    assert_eq!(infl["value"], "11/2");
    assert_eq!(v["tropical_lines"]["pass"], true);

    // raising m beyond the width makes the curve inadmissible
    let out = run(&["analyze", s(&g), "--point", "0,0", "--m", "4", "--format", "json"]);
    assert_eq!(out.status.code(), Some(3));
    let v = json(&out);
    let e = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "edge_length").unwrap();
    assert_eq!(e["witness"], "d(E) length 3 < 4");
    assert_eq!(v["tropical_lines"]["pass"], false);

    // admissible, but the point is off the curve
    let out = run(&["analyze", s(&g), "--point", "10,10", "--m", "3"]);
    assert_eq!(out.status.code(), Some(1), "{}", stdout(&out));

    let r = write(dir.path(), "r.txt", "(x - 1)^2 (y - 1)");
    for p in ["0,0", "5,-7", "1/3,2"] {
        let out = run(&["analyze", s(&r), "--point", p, "--m", "3"]);
        assert_eq!(out.status.code(), Some(3), "point {p}");
    }
    let r = write(dir.path(), "r2.txt", THIN_RECTANGLE);
    assert_eq!(run(&["analyze", s(&r), "--point", "0,0", "--m", "3"]).status.code(), Some(3));
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "x + + y");
    assert_eq!(run(&["analyze", s(&bad), "--point", "0,0", "--m", "3"]).status.code(), Some(2));
    assert_eq!(run(&["tropicalize", s(&bad)]).status.code(), Some(2));
    let g = write(dir.path(), "g.txt", TRIPLE_POINT);
    assert_eq!(run(&["analyze", s(&g), "--point", "0,a", "--m", "3"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", s(&g), "--point", "0,0"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", s(&g), "--point", "0,0", "--m", "0"]).status.code(), Some(2));
    assert_eq!(run(&["width", s(&dir.path().join("missing.json"))]).status.code(), Some(2));
    let empty = write(dir.path(), "e.json", "{\"points\": []}");
    assert_eq!(run(&["width", s(&empty)]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn width_thick_stable() {
    let dir = tempfile::tempdir().unwrap();
    let t = write(dir.path(), "t.json", "{\"points\": [[0,0],[2,4],[4,2]]}");
    assert_eq!(stdout(&run(&["width", s(&t)])), "4 in direction (1,0)\n");
    let r = write(dir.path(), "r.json", "{\"points\": [[0,0],[1,0],[0,2],[1,2]]}");
    assert_eq!(stdout(&run(&["thick", s(&r), "--m", "3"])), "m-thick: true\n");
    assert!(stdout(&run(&["thick", s(&r), "--m", "4"])).starts_with("m-thick: false"));

    let a = write(dir.path(), "a.txt", "x + y + 1");
    let b = write(dir.path(), "b.txt", "t^-1 x + t^3 y + 1");
    let v = json(&run(&["stable", s(&a), s(&b)]));
    let pts = v.as_array().unwrap();
    assert_eq!(pts.len(), 1);
    assert_eq!(pts[0]["mult"], 1);
    assert_eq!(pts[0]["component"], 0);
}

#[test]
fn mult_command() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.txt", TRIPLE_POINT);
    assert_eq!(stdout(&run(&["mult", s(&g)])), "multiplicity at (1, 1): 3\n");
    let n = write(dir.path(), "n.txt", "(x - t)^2 - (y - 1)^2");
    let v = json(&run(&["mult", s(&n), "--at", "t,1", "--format", "json"]));
    assert_eq!(v["multiplicity"], 2);
}

#[test]
fn deterministic_and_seeded() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.txt", TRIPLE_POINT);
    let l = write(dir.path(), "l.txt", "x + t y + t^-2");
    for args in [
        vec!["tropicalize", s(&g)],
        vec!["analyze", s(&g), "--point", "0,0", "--m", "3", "--format", "json"],
        vec!["render", s(&g)],
        vec!["stable", s(&g), s(&l), "--seed", "11"],
    ] {
        let (a, b) = (run(&args), run(&args));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
    let plain = run(&["stable", s(&g), s(&l)]).stdout;
    let seeded = run(&["stable", s(&g), s(&l), "--seed", "5"]).stdout;
    assert_eq!(plain, seeded);
}

#[test]
fn out_and_batch() {
    let dir = tempfile::tempdir().unwrap();
    let batch = dir.path().join("batch");
    std::fs::create_dir(&batch).unwrap();
    write(&batch, "a.txt", TRIPLE_POINT);
    write(&batch, "b.txt", "(x - 1)^2 (y - 1)");
    let out_path = dir.path().join("report.json");
    let out = run(&["analyze", "--batch", s(&batch), "--point", "0,0", "--m", "3", "--format", "json", "--out", s(&out_path)]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(v["a.txt"]["verdict"], "consistent");
    assert_eq!(v["b.txt"]["verdict"], "inconclusive: inadmissible");

    write(&batch, "c.txt", "((");
    let out = run(&["analyze", "--batch", s(&batch), "--point", "0,0", "--m", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let text = stdout(&out);
    assert!(text.contains("a.txt") && text.contains("error"));
}

#[test]
fn no_color_in_pipes() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.txt", TRIPLE_POINT);
    let text = stdout(&run(&["analyze", s(&g), "--point", "0,0", "--m", "3"]));
    assert!(!text.contains('\u{1b}'));
    assert!(text.contains("consistent"));
}
