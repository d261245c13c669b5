use std::path::PathBuf;

use assert_cmd::Command;
use serde_json::Value;
use tempfile::TempDir;

fn coxfactor() -> Command {
    let mut cmd = Command::cargo_bin("coxfactor").unwrap();
    cmd.env_remove("COXFACTOR_MAX_RANK");
    cmd
}

fn stdout_of(cmd: &mut Command) -> String {
    let out = cmd.assert().success().get_output().stdout.clone();
    String::from_utf8(out).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn det_count_of_a3() {
    let out =
        stdout_of(coxfactor().args(["count", "--type", "A", "--rank", "3", "--method", "det"]));
    assert_eq!(out, "16\n");
}

#[test]
fn counts_agree_across_methods() {
    let out = stdout_of(coxfactor().args([
        "count", "-t", "A", "-n", "4", "--method", "all", "--format", "json",
    ]));
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["agree"], true);
    assert_eq!(v["counts"]["det"], "125");
    assert_eq!(v["counts"]["weighted-det"], "1008");
    for (family, rank, want) in [("B", "3", "27"), ("D", "4", "162")] {
        let out =
            stdout_of(coxfactor().args(["count", "-t", family, "-n", rank, "--method", "formula"]));
        assert_eq!(out.trim(), want);
    }
}

#[test]
fn det_is_type_a_only() {
    coxfactor()
        .args(["count", "-t", "B", "-n", "3", "--method", "det"])
        .assert()
        .code(2);
}

#[test]
fn type_b_code_of_example_tree() {
    let dir = TempDir::new().unwrap();
    let input = write(
        &dir,
        "bt.json",
        r#"{"root":3,"edges":[[1,3],[4,3],[2,4]],"loop":4}"#,
    );
    let out = stdout_of(
        coxfactor()
            .args(["prufer", "encode", "--variant", "b", "--input"])
            .arg(&input),
    );
    assert_eq!(out, "[3,3,4,4]\n");
}

#[test]
fn prufer_decode_then_encode() {
    let dir = TempDir::new().unwrap();
    for (variant, code, extra) in [
        ("classic", "4,3", None),
        ("rooted", "3,3,1", None),
        ("b", "3,3,4,4", None),
        ("d", "3,2,3,3", Some("raw")),
        ("d", "2,2,3,3", Some("normalized")),
    ] {
        let mut dec = coxfactor();
        dec.args([
            "prufer",
            "decode",
            "--json",
            "--variant",
            variant,
            "--code",
            code,
        ]);
        if let Some(enc) = extra {
            dec.args(["--root-encoding", enc]);
        }
        let decoded = stdout_of(&mut dec);
        let path = write(&dir, "obj.json", &decoded);
        let mut enc = coxfactor();
        enc.args(["prufer", "encode", "--variant", variant, "--input"])
            .arg(&path);
        if let Some(e) = extra {
            enc.args(["--root-encoding", e]);
        }
        let want = format!("[{code}]\n");
        assert_eq!(stdout_of(&mut enc), want, "{variant} {code}");
    }
}

#[test]
fn verify_all_small_ranks() {
    let out = stdout_of(coxfactor().args(["verify", "all", "--max-rank", "3"]));
    let report: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["passed"], true);
    assert_eq!(report["failures"].as_array().unwrap().len(), 0);
    assert!(report["checks"].as_u64().unwrap() > 20);
}

#[test]
fn gy_round_trip_through_files() {
    let dir = TempDir::new().unwrap();
    let f = write(
        &dir,
        "f.json",
        "[[1,1,0,0],[0,1,-1,0],[1,0,-1,0],[0,0,1,-1]]",
    );
    let g = stdout_of(
        coxfactor()
            .args(["gy", "encode", "-t", "D", "-n", "4", "-i"])
            .arg(&f),
    );
    let v: Value = serde_json::from_str(&g).unwrap();
    assert_eq!(v["object"]["root"], 3);
    let g_path = write(&dir, "g.json", &g);
    let back = stdout_of(
        coxfactor()
            .args(["gy", "decode", "-t", "D", "-n", "4", "-i"])
            .arg(&g_path),
    );
    let v: Value = serde_json::from_str(&back).unwrap();
    let roots: Vec<Value> = v["factorizations"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["factors"].clone())
        .collect();
    assert_eq!(roots.len(), 2);
    // Roots come back normalized to be positive.
    let original: Value =
        serde_json::from_str("[[1,1,0,0],[0,-1,1,0],[-1,0,1,0],[0,0,-1,1]]").unwrap();
    assert!(roots.contains(&original));
}

#[test]
fn enumerate_json_is_deterministic() {
    let a = stdout_of(coxfactor().args(["enumerate", "-t", "B", "-n", "3", "--json"]));
    let b = stdout_of(coxfactor().args([
        "--threads",
        "3",
        "enumerate",
        "-t",
        "B",
        "-n",
        "3",
        "--json",
    ]));
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["count"], 27);
    assert_eq!(v["factorizations"].as_array().unwrap().len(), 27);
    let count = stdout_of(coxfactor().args(["enumerate", "-t", "D", "-n", "3", "--count"]));
    assert_eq!(count, "16\n");
}

#[test]
fn rank_caps() {
    coxfactor()
        .args(["enumerate", "-t", "A", "-n", "8", "--count"])
        .assert()
        .code(2);
    coxfactor()
        .env("COXFACTOR_MAX_RANK", "2")
        .args(["enumerate", "-t", "A", "-n", "3", "--count"])
        .assert()
        .code(2);
    let out = stdout_of(coxfactor().env("COXFACTOR_MAX_RANK", "2").args([
        "enumerate",
        "-t",
        "A",
        "-n",
        "3",
        "--count",
        "--allow-large",
    ]));
    assert_eq!(out, "16\n");
}

#[test]
fn exit_codes_for_bad_input() {
    let dir = TempDir::new().unwrap();
    let garbage = write(&dir, "bad.json", "{ not json");
    coxfactor()
        .args(["dual", "-t", "A", "-n", "3", "-i"])
        .arg(&garbage)
        .assert()
        .code(3);
    let not_a_factorization = write(&dir, "f.json", "[[-1,1,0,0],[-1,1,0,0],[0,-1,1,0]]");
    coxfactor()
        .args(["dual", "-t", "A", "-n", "3", "-i"])
        .arg(&not_a_factorization)
        .assert()
        .code(3);
    coxfactor()
        .args(["prufer", "decode", "--variant", "b", "--code", "9,1"])
        .assert()
        .code(3);
    coxfactor().args(["frobnicate"]).assert().code(2);
    coxfactor().args(["count", "-t", "A"]).assert().code(2);
}

#[test]
fn render_formats() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "f.json", "[[-1,1,0,0],[0,-1,0,1],[0,-1,1,0]]");
    let dot = stdout_of(
        coxfactor()
            .args([
                "render",
                "-t",
                "A",
                "-n",
                "3",
                "--diagram",
                "dual",
                "--colored",
                "-i",
            ])
            .arg(&f),
    );
    assert!(dot.starts_with("graph dual {"));
    assert!(dot.contains("colorscheme=set13"));
    let out = dir.path().join("chords.tex");
    coxfactor()
        .args(["render", "-t", "A", "-n", "3", "--format", "tikz", "-i"])
        .arg(&f)
        .arg("--out")
        .arg(&out)
        .assert()
        .success();
    assert!(std::fs::read_to_string(&out)
        .unwrap()
        .contains("tikzpicture"));
    coxfactor()
        .args(["render", "-t", "A", "-n", "3", "--diagram", "folded", "-i"])
        .arg(&f)
        .assert()
        .code(2);
}

#[test]
fn dual_plain_listing() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "f.json", "[[-1,1,0,0],[0,-1,0,1],[0,-1,1,0]]");
    let out = stdout_of(
        coxfactor()
            .args(["dual", "-t", "A", "-n", "3", "-i"])
            .arg(&f),
    );
    assert_eq!(out.lines().count(), 3);
    assert!(out.lines().all(|l| l.contains(": ")));
}
