//! CLI surface: exit codes, corpus validation, cache behavior, and the
//! show/verify-cache subcommands, driven on small corpora.

use std::process::Command;

fn binary() -> &'static str {
    env!("CARGO_BIN_EXE_grouplab")
}

fn run(args: &[&str]) -> std::process::Output {
    Command::new(binary()).args(args).output().expect("binary runs")
}

fn write_corpus(dir: &std::path::Path, lines: &str) -> std::path::PathBuf {
    let path = dir.join("corpus.jsonl");
    std::fs::write(&path, lines).unwrap();
    path
}

const SMALL: &str = r#"{"name":"S4","source":"sym(4)","expected_order":24}
{"name":"S3","source":"sym(3)"}
{"name":"Q8","source":"quaternion(8)"}
"#;

#[test]
fn run_small_corpus_exits_zero() {
    let tmp = tempfile::tempdir().unwrap();
    let corpus = write_corpus(tmp.path(), SMALL);
    let out_path = tmp.path().join("report.json");
    let out = run(&[
        "run",
        "--corpus",
        corpus.to_str().unwrap(),
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(report["summary"]["groups"], 3);
}

#[test]
fn ingestion_errors_exit_two() {
    let tmp = tempfile::tempdir().unwrap();
    // Invalid constructor arity.
    let corpus = write_corpus(tmp.path(), "{\"name\":\"bad\",\"source\":\"sym(0)\"}\n");
    let out = run(&["run", "--corpus", corpus.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("line 1"), "{stderr}");

    // Order mismatch.
    let corpus = write_corpus(
        tmp.path(),
        "{\"name\":\"S4\",\"source\":\"sym(4)\",\"expected_order\":25}\n",
    );
    assert_eq!(run(&["run", "--corpus", corpus.to_str().unwrap()]).status.code(), Some(2));

    // Unknown theorem id.
    let corpus = write_corpus(tmp.path(), SMALL);
    let out = run(&[
        "run",
        "--corpus",
        corpus.to_str().unwrap(),
        "--theorems",
        "Z",
    ]);
    assert_eq!(out.status.code(), Some(2));

    // Lattice bound above the hard cap.
    let out = run(&[
        "run",
        "--corpus",
        corpus.to_str().unwrap(),
        "--lattice-bound",
        "5000",
    ]);
    assert_eq!(out.status.code(), Some(2));

    // Missing corpus file.
    let out = run(&["run", "--corpus", "/nonexistent/corpus.jsonl"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cache_reuse_and_tamper_recovery() {
    let tmp = tempfile::tempdir().unwrap();
    let corpus = write_corpus(tmp.path(), SMALL);
    let cache = tmp.path().join("cache");
    let out1 = tmp.path().join("r1.json");
    let out2 = tmp.path().join("r2.json");
    let base_args = |out: &std::path::Path| {
        vec![
            "run".to_string(),
            "--corpus".to_string(),
            corpus.to_str().unwrap().to_string(),
            "--cache".to_string(),
            cache.to_str().unwrap().to_string(),
            "--out".to_string(),
            out.to_str().unwrap().to_string(),
        ]
    };
    let o = Command::new(binary()).args(base_args(&out1)).output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(cache.read_dir().unwrap().count() >= 3);

    // Second run hits the cache and produces identical bytes.
    let o = Command::new(binary()).args(base_args(&out2)).output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read(&out1).unwrap(), std::fs::read(&out2).unwrap());

    // Tamper with one entry: it is discarded with a warning and recomputed.
    let entry = cache
        .read_dir()
        .unwrap()
        .next()
        .unwrap()
        .unwrap()
        .path();
    let mut content = std::fs::read_to_string(&entry).unwrap();
    content = content.replacen("pass", "fail", 1);
    std::fs::write(&entry, content).unwrap();
    let out3 = tmp.path().join("r3.json");
    let o = Command::new(binary()).args(base_args(&out3)).output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    let stderr = String::from_utf8_lossy(&o.stderr);
    assert!(stderr.contains("warning"), "{stderr}");
    assert_eq!(std::fs::read(&out1).unwrap(), std::fs::read(&out3).unwrap());
}

#[test]
fn verify_cache_detects_agreement() {
    let tmp = tempfile::tempdir().unwrap();
    let corpus = write_corpus(tmp.path(), SMALL);
    let cache = tmp.path().join("cache");
    let o = run(&[
        "run",
        "--corpus",
        corpus.to_str().unwrap(),
        "--cache",
        cache.to_str().unwrap(),
        "--out",
        tmp.path().join("r.json").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&[
        "verify-cache",
        "--cache",
        cache.to_str().unwrap(),
        "--corpus",
        corpus.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let stdout = String::from_utf8_lossy(&o.stdout);
    assert!(stdout.contains("0 mismatch"), "{stdout}");
}

#[test]
fn empty_corpus_is_a_valid_run() {
    let tmp = tempfile::tempdir().unwrap();
    let corpus = write_corpus(tmp.path(), "");
    let out_path = tmp.path().join("report.json");
    let o = run(&[
        "run",
        "--corpus",
        corpus.to_str().unwrap(),
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(report["summary"]["groups"], 0);
}

#[test]
fn show_prints_group_data() {
    let o = run(&["show", "sym(4)", "--table"]);
    assert_eq!(o.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&o.stdout);
    assert!(stdout.contains("order    24"), "{stdout}");
    assert!(stdout.contains("30 subgroups"), "{stdout}");
    assert!(stdout.contains("character table (5 classes)"), "{stdout}");

    let o = run(&["show", "agl1(9)"]);
    let stdout = String::from_utf8_lossy(&o.stdout);
    assert!(stdout.contains("order    72"), "{stdout}");
    assert!(stdout.contains("wsm-group     true"), "{stdout}");
    assert!(stdout.contains("supersolvable false"), "{stdout}");
}

#[test]
fn explicit_generator_corpus_entries() {
    let tmp = tempfile::tempdir().unwrap();
    let corpus = write_corpus(
        tmp.path(),
        "{\"name\":\"V4\",\"source\":[\"(1,2)(3,4)\",\"(1,3)(2,4)\"],\"expected_order\":4}\n",
    );
    let out_path = tmp.path().join("report.json");
    let o = run(&[
        "run",
        "--corpus",
        corpus.to_str().unwrap(),
        "--theorems",
        "B,C",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    let g = &report["groups"][0];
    assert_eq!(g["order"], 4);
    assert_eq!(g["verdicts"][0]["verdict"], "pass");
}

#[test]
fn timings_flag_adds_timing_fields() {
    let tmp = tempfile::tempdir().unwrap();
    let corpus = write_corpus(tmp.path(), "{\"name\":\"S3\",\"source\":\"sym(3)\"}\n");
    let out_path = tmp.path().join("report.json");
    let o = run(&[
        "run",
        "--corpus",
        corpus.to_str().unwrap(),
        "--timings",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert!(report["groups"][0]["timings"]["total_ms"].is_u64());
}
