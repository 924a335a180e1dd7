use std::io::{BufRead, BufReader};
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lmprobe"))
}

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn small_run(out: &Path, backend: &str, token: &str) -> std::process::Output {
    bin()
        .env("PROBE_BACKEND_TOKEN", token)
        .args(["run", "--probe", "age-comparison", "--backend", backend, "--sizes", "40,80", "--seeds", "1", "--epochs", "3"])
        .args(["--head-mode", "mlp", "--no-baselines", "--out"])
        .arg(out)
        .arg("--fixtures")
        .arg(fixtures())
        .output()
        .unwrap()
}

#[test]
fn unknown_probe_lists_registry() {
    let out = bin().args(["generate", "--probe", "nope", "--out", "/nonexistent"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("age-comparison") && err.contains("encyclopedic-long-tail"), "{err}");
}

#[test]
fn unknown_variant_rejected() {
    let out = bin().args(["generate", "--probe", "always-never", "--variant", "single-hop", "--out", "/nonexistent"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn generate_writes_controls() {
    let tmp = tempfile::tempdir().unwrap();
    let out = bin()
        .args(["generate", "--probe", "multi-choice-lm,age-comparison", "--variant", "birth-year", "--out"])
        .arg(tmp.path())
        .arg("--fixtures")
        .arg(fixtures())
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let mut names: Vec<String> = std::fs::read_dir(tmp.path()).unwrap().map(|e| e.unwrap().file_name().into_string().unwrap()).collect();
    names.sort();
    assert_eq!(
        names,
        [
            "age-comparison.birth-year.jsonl",
            "age-comparison.no-language.jsonl",
            "age-comparison.perturbed-language.jsonl",
            "age-comparison.standard.jsonl",
            "multi-choice-lm.perturbed-language.jsonl",
            "multi-choice-lm.standard.jsonl",
        ]
    );
}

#[test]
fn run_report_and_plotdata() {
    let tmp = tempfile::tempdir().unwrap();
    let runs = tmp.path().join("runs");
    let out = small_run(&runs, "stub", "");
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("age-comparison") && stdout.contains("S-MLP"), "{stdout}");

    let rep = tmp.path().join("rep");
    let out = bin().args(["report", "--runs"]).arg(&runs).arg("--out").arg(&rep).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let run_dir = &runs;
    for f in ["metrics.txt", "metrics.keyed", "medals.txt"] {
        assert_eq!(std::fs::read(rep.join(f)).unwrap(), std::fs::read(run_dir.join("metrics").join(f)).unwrap(), "{f}");
    }

    let plot = tmp.path().join("plot");
    let out = bin().args(["plotdata", "--runs"]).arg(run_dir).arg("--out").arg(&plot).output().unwrap();
    assert!(out.status.success());
    let tsv = std::fs::read_to_string(plot.join("plotdata.tsv")).unwrap();
    assert!(tsv.lines().any(|l| l.starts_with("stub-hash-v1\tage-comparison\tstandard\tmlp\t80\t")), "{tsv}");
}

#[test]
fn http_backend_matches_in_process_stub() {
    let tmp = tempfile::tempdir().unwrap();
    let mut server = bin()
        .args(["serve-stub", "--addr", "127.0.0.1:0", "--fixtures"])
        .arg(fixtures())
        .env("PROBE_BACKEND_TOKEN", "t0ken")
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .unwrap();
    let mut line = String::new();
    BufReader::new(server.stdout.take().unwrap()).read_line(&mut line).unwrap();
    let url = line.trim().strip_prefix("serving ").expect("serving line").to_string();

    let bad = {
        let mut c = bin();
        c.env("PROBE_BACKEND_TOKEN", "wrong");
        c.args(["run", "--probe", "age-comparison", "--backend", &url, "--sizes", "40", "--seeds", "1", "--out"]).arg(tmp.path().join("bad"));
        c.arg("--fixtures").arg(fixtures());
        c.output().unwrap()
    };
    assert!(!bad.status.success());

    let remote = small_run(&tmp.path().join("remote"), &url, "t0ken");
    server.kill().unwrap();
    server.wait().unwrap();
    assert!(remote.status.success(), "{}", String::from_utf8_lossy(&remote.stderr));
    let local = small_run(&tmp.path().join("local"), "stub", "");
    assert!(local.status.success());

    let (r, l) = (tmp.path().join("remote"), tmp.path().join("local"));
    let curve = "curves/age-comparison.standard.mlp.json";
    let read = |p: PathBuf| -> serde_json::Value { serde_json::from_slice(&std::fs::read(p).unwrap()).unwrap() };
    let (rv, lv) = (read(r.join(curve)), read(l.join(curve)));
    assert_eq!(rv["model_id"], lv["model_id"]);
    assert_eq!(rv["points"], lv["points"]);
}
