use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use lmprobe_core::backends::{Backend, CountingBackend, StubBackend};
use lmprobe_core::controls::HeadMode;
use lmprobe_core::kb::{load_fixtures, KbStore};
use lmprobe_core::probes::ProbeId;
use lmprobe_core::run::{pipeline, BackendSpec, CurveRecord, RunConfig, RunDir, RunError, Tagged};
use lmprobe_core::train::Hyper;

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn small(kb: &KbStore, probes: Vec<ProbeId>) -> RunConfig {
    let mut c = RunConfig::new(probes, BackendSpec::Stub { seed: 0, head_export: true }, kb.file_hashes.clone());
    c.sizes = vec![40, 80];
    c.seeds = vec![1, 2];
    c.hyper = Hyper { epochs: 4, ..c.hyper };
    c.pre_finetune_hyper = Hyper { epochs: 5, ..c.pre_finetune_hyper };
    c
}

fn files(root: &Path) -> BTreeMap<String, Vec<u8>> {
    let mut out = BTreeMap::new();
    let mut stack = vec![root.to_path_buf()];
    while let Some(d) = stack.pop() {
        for e in std::fs::read_dir(&d).unwrap() {
            let p = e.unwrap().path();
            if p.is_dir() {
                stack.push(p);
            } else {
                out.insert(p.strip_prefix(root).unwrap().display().to_string(), std::fs::read(&p).unwrap());
            }
        }
    }
    out
}

#[test]
fn fresh_runs_are_byte_identical() {
    let kb = load_fixtures(&fixtures()).unwrap();
    let probes = vec![ProbeId::AgeComparison, ProbeId::EncyclopedicComposition, ProbeId::MultiChoiceLm];
    let tmp = tempfile::tempdir().unwrap();
    let (a, b) = (tmp.path().join("a"), tmp.path().join("b"));
    pipeline::execute(small(&kb, probes.clone()), &fixtures(), &a, None).unwrap();
    pipeline::execute(small(&kb, probes), &fixtures(), &b, None).unwrap();
    let (fa, fb) = (files(&a), files(&b));
    assert_eq!(fa.keys().collect::<Vec<_>>(), fb.keys().collect::<Vec<_>>());
    for (k, v) in &fa {
        assert!(v == &fb[k], "{k} differs");
    }
    for want in [
        "datasets/age-comparison.standard.jsonl",
        "curves/age-comparison.standard.linear.json",
        "curves/age-comparison.standard.baseline.json",
        "curves/encyclopedic-composition.standard.mlp-pre.json",
        "zero-shot/multi-choice-lm.perturbed-language.json",
        "metrics/metrics.txt",
        "metrics/medals.txt",
    ] {
        assert!(fa.contains_key(want), "missing {want}");
    }
    assert!(!fa.contains_key("datasets/multi-choice-lm.no-language.jsonl"));
}

#[test]
fn finished_run_makes_no_backend_calls() {
    let kb = load_fixtures(&fixtures()).unwrap();
    let tmp = tempfile::tempdir().unwrap();
    let cfg = small(&kb, vec![ProbeId::AlwaysNever]);
    pipeline::execute(cfg.clone(), &fixtures(), tmp.path(), None).unwrap();
    let before = files(tmp.path());

    let counting = Arc::new(CountingBackend::new(StubBackend::from_kb(&kb, 0)));
    pipeline::execute(cfg, &fixtures(), tmp.path(), Some(counting.clone() as Arc<dyn Backend>)).unwrap();
    assert_eq!(counting.calls(), 0);
    assert_eq!(before, files(tmp.path()));
}

#[test]
fn interrupted_stage_resumes_to_same_bytes() {
    let kb = load_fixtures(&fixtures()).unwrap();
    let tmp = tempfile::tempdir().unwrap();
    let cfg = small(&kb, vec![ProbeId::AgeComparison]);
    cfg.validate().unwrap();
    pipeline::execute(cfg.clone(), &fixtures(), tmp.path(), None).unwrap();
    let before = files(tmp.path());
    std::fs::remove_file(tmp.path().join("curves/age-comparison.standard.mlp.json")).unwrap();
    std::fs::remove_file(tmp.path().join("stages/curve.age-comparison.standard.mlp.done")).unwrap();
    std::fs::remove_file(tmp.path().join("metrics/metrics.txt")).unwrap();
    pipeline::execute(cfg, &fixtures(), tmp.path(), None).unwrap();
    assert_eq!(before, files(tmp.path()));
}

#[test]
fn other_config_is_rejected_and_foreign_artifacts_detected() {
    let kb = load_fixtures(&fixtures()).unwrap();
    let tmp = tempfile::tempdir().unwrap();
    let cfg = small(&kb, vec![ProbeId::AlwaysNever]);
    let dir = pipeline::execute(cfg.clone(), &fixtures(), tmp.path(), None).unwrap();

    let mut other = cfg;
    other.seeds = vec![1];
    assert!(matches!(pipeline::execute(other, &fixtures(), tmp.path(), None), Err(RunError::OtherRun { .. })));

    let rel = "curves/always-never.standard.mlp.json";
    let mut rec: Tagged<CurveRecord> = serde_json::from_slice(&std::fs::read(dir.path(rel)).unwrap()).unwrap();
    rec.manifest_hash = "0".repeat(64);
    std::fs::write(dir.path(rel), serde_json::to_vec(&rec).unwrap()).unwrap();
    let reopened = RunDir::open(tmp.path()).unwrap();
    assert!(matches!(reopened.verify(), Err(RunError::MixedRun { .. })));
    assert!(matches!(reopened.read_tagged::<CurveRecord>(rel), Err(RunError::MixedRun { .. })));
}

#[test]
fn backend_without_head_export_falls_back_to_random_head() {
    let kb = load_fixtures(&fixtures()).unwrap();
    let tmp = tempfile::tempdir().unwrap();
    let mut cfg = small(&kb, vec![ProbeId::AgeComparison]);
    cfg.backend = BackendSpec::Stub { seed: 0, head_export: false };
    cfg.head_modes = vec![HeadMode::Mlp];
    cfg.baselines = false;
    let dir = pipeline::execute(cfg, &fixtures(), tmp.path(), None).unwrap();
    let curve: CurveRecord = dir.read_tagged("curves/age-comparison.standard.mlp.json").unwrap();
    assert!(curve.init.contains("random"), "{}", curve.init);
    assert_eq!(curve.means.len(), 2);
    let zs: serde_json::Value = serde_json::from_slice(&std::fs::read(dir.path("zero-shot/age-comparison.standard.json")).unwrap()).unwrap();
    assert!(zs["accuracy"].is_null());
    let metrics = std::fs::read_to_string(dir.path("metrics/metrics.txt")).unwrap();
    assert!(metrics.contains("age-comparison"));
}

#[test]
fn changed_backend_is_detected() {
    let kb = load_fixtures(&fixtures()).unwrap();
    let tmp = tempfile::tempdir().unwrap();
    let cfg = small(&kb, vec![ProbeId::AlwaysNever]);
    pipeline::execute(cfg.clone(), &fixtures(), tmp.path(), None).unwrap();
    std::fs::remove_file(tmp.path().join("stages/curve.always-never.standard.mlp.done")).unwrap();
    let other: Arc<dyn Backend> = Arc::new(StubBackend::from_kb(&kb, 7));
    assert!(matches!(pipeline::execute(cfg, &fixtures(), tmp.path(), Some(other)), Err(RunError::BackendChanged(_))));
}
