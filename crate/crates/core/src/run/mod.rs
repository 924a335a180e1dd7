//! Run directories: the manifest, stage markers and the artifacts a run leaves on disk.
//!
//! ```text
//! <out>/manifest.json            config + its hash
//! <out>/backend.json             /info of the backend that produced the vectors
//! <out>/datasets/<probe>.<variant>.jsonl
//! <out>/cache/                   encoding cache
//! <out>/encoded/<probe>.json     dropped examples per variant
//! <out>/curves/<probe>.<variant>.<arm>.json
//! <out>/zero-shot/<probe>.<variant>.json
//! <out>/stages/<stage>.done | <stage>.failed
//! <out>/metrics/                 report files
//! ```
//!
//! Every artifact carries the manifest hash; a directory holding artifacts of another run is
//! rejected.

pub mod pipeline;

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::backends::protocol::InfoResponse;
use crate::backends::BackendError;
use crate::controls::{ControlError, HeadMode};
use crate::kb::KbError;
use crate::metrics::{MedalThresholds, MetricError};
use crate::probes::{GenConfig, ProbeDataset, ProbeError, ProbeId, NO_LANGUAGE, PERTURBED_LANGUAGE, STANDARD};
use crate::train::{CurvePoint, Hyper, TrainError, DEFAULT_SIZES};
use crate::util;

#[derive(Debug, Error)]
pub enum RunError {
    #[error(transparent)]
    Kb(#[from] KbError),
    #[error(transparent)]
    Probe(#[from] ProbeError),
    #[error(transparent)]
    Control(#[from] ControlError),
    #[error(transparent)]
    Backend(#[from] BackendError),
    #[error(transparent)]
    Train(#[from] TrainError),
    #[error(transparent)]
    Metric(#[from] MetricError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {msg}")]
    Format { path: String, msg: String },
    #[error("{path} belongs to run {found}, not {expected}")]
    MixedRun { path: String, expected: String, found: String },
    #[error("{dir} already holds run {found}; this config hashes to {expected}. Use a fresh --out directory")]
    OtherRun { dir: String, expected: String, found: String },
    #[error("backend changed since this run started: {0}")]
    BackendChanged(String),
    #[error("stage {stage} failed: {msg}")]
    Stage { stage: String, msg: String },
    #[error("invalid run config: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, RunError>;

pub(crate) fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> RunError + '_ {
    move |source| RunError::Io { path: path.display().to_string(), source }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum BackendSpec {
    /// In-process hash stub.
    Stub {
        seed: u64,
        #[serde(default = "yes")]
        head_export: bool,
    },
    /// Remote backend speaking the wire protocol; the auth token comes from the environment.
    Http { url: String },
}

fn yes() -> bool {
    true
}

/// Everything that determines a run's results. Its hash identifies the run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub probes: Vec<ProbeId>,
    /// Task-specific variants to run besides `standard` and the language controls.
    #[serde(default)]
    pub extra_variants: Vec<String>,
    pub backend: BackendSpec,
    pub sizes: Vec<usize>,
    pub seeds: Vec<u64>,
    pub head_modes: Vec<HeadMode>,
    pub hyper: Hyper,
    pub data_seed: u64,
    #[serde(default)]
    pub generation: GenConfig,
    /// sha256 per fixture file.
    pub fixture_hashes: BTreeMap<String, String>,
    pub baselines: bool,
    pub pre_finetune: bool,
    /// Fitting the single-hop facts is memorization, so it runs longer and without early stop.
    pub pre_finetune_hyper: Hyper,
    pub qa_hidden: usize,
    pub concat_hidden: usize,
    pub esim_width: usize,
    #[serde(default)]
    pub medal_thresholds: MedalThresholds,
}

impl RunConfig {
    pub fn new(probes: Vec<ProbeId>, backend: BackendSpec, fixture_hashes: BTreeMap<String, String>) -> Self {
        RunConfig {
            probes,
            extra_variants: Vec::new(),
            backend,
            sizes: DEFAULT_SIZES.to_vec(),
            seeds: (1..=crate::train::DEFAULT_SEEDS as u64).collect(),
            head_modes: vec![HeadMode::Mlp, HeadMode::Linear],
            hyper: Hyper::default(),
            data_seed: 0,
            generation: GenConfig::default(),
            fixture_hashes,
            baselines: true,
            pre_finetune: true,
            pre_finetune_hyper: Hyper { lr: 1e-2, batch: 32, epochs: 100, patience: 0 },
            qa_hidden: 64,
            concat_hidden: crate::baselines::concat::DEFAULT_HIDDEN,
            esim_width: crate::baselines::esim::DEFAULT_WIDTH,
            medal_thresholds: MedalThresholds::default(),
        }
    }

    pub fn hash(&self) -> String {
        util::sha256_hex(&serde_json::to_vec(self).expect("config serializes"))
    }

    pub fn validate(&self) -> Result<()> {
        if self.probes.is_empty() {
            return Err(RunError::Config("no probes".into()));
        }
        crate::train::Schedule::new(self.sizes.clone(), self.seeds.clone(), HeadMode::Mlp)?;
        if self.head_modes.is_empty() {
            return Err(RunError::Config("no head modes".into()));
        }
        for v in &self.extra_variants {
            if !self.probes.iter().any(|p| p.extra_variants().contains(&v.as_str())) {
                let all: Vec<String> = self.probes.iter().map(|p| format!("{p}: {}", p.variants().join(", "))).collect();
                return Err(RunError::Config(format!("variant {v:?} matches none of the selected probes ({})", all.join("; "))));
            }
        }
        Ok(())
    }

    /// Variants run for `probe`, in order: standard, the language controls, then extras.
    pub fn variants(&self, probe: ProbeId) -> Vec<String> {
        let mut v = vec![STANDARD.to_string()];
        if probe != ProbeId::MultiChoiceLm {
            v.push(NO_LANGUAGE.into());
        }
        v.push(PERTURBED_LANGUAGE.into());
        for e in probe.extra_variants() {
            let needed = self.extra_variants.iter().any(|x| x == e)
                || (self.pre_finetune && probe == ProbeId::EncyclopedicComposition && *e == "single-hop");
            if needed {
                v.push(e.to_string());
            }
        }
        v
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub manifest_hash: String,
    pub config: RunConfig,
    /// Where the fixtures were read from; not part of the hash (their content hashes are).
    pub fixtures_dir: String,
}

impl Manifest {
    pub fn new(config: RunConfig, fixtures_dir: &Path) -> Self {
        Manifest { manifest_hash: config.hash(), config, fixtures_dir: fixtures_dir.display().to_string() }
    }
}

/// A JSON artifact tagged with its run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Tagged<T> {
    pub manifest_hash: String,
    #[serde(flatten)]
    pub body: T,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BackendRecord {
    pub info: InfoResponse,
}

/// Examples dropped from a probe because the backend rejected them in some variant.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EncodeRecord {
    pub probe: ProbeId,
    pub model_id: String,
    /// variant → (dropped train indices, dropped eval indices)
    pub dropped: BTreeMap<String, (Vec<usize>, Vec<usize>)>,
    /// Rejection counts by error kind.
    pub reasons: BTreeMap<String, usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroShotRecord {
    pub probe: ProbeId,
    pub variant: String,
    pub model_id: String,
    pub accuracy: Option<f64>,
    /// Expected accuracy of uniform guessing over the eval split.
    pub random: f64,
    pub n_eval: usize,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveRecord {
    pub probe: ProbeId,
    pub variant: String,
    /// `mlp`, `linear`, `mlp-pre` (initialized by pre-fine-tuning) or `baseline`.
    pub arm: String,
    pub model_id: String,
    pub mode: HeadMode,
    pub sizes: Vec<usize>,
    pub seeds: Vec<u64>,
    pub points: Vec<CurvePoint>,
    pub means: Vec<f64>,
    pub hyper: Hyper,
    pub n_train: usize,
    pub n_eval: usize,
    pub init: String,
    #[serde(default)]
    pub pre_finetune_accuracy: Option<f64>,
    #[serde(default)]
    pub notes: Vec<String>,
}

pub struct RunDir {
    pub root: PathBuf,
    pub manifest: Manifest,
}

pub fn dataset_name(probe: ProbeId, variant: &str) -> String {
    format!("{probe}.{variant}")
}

impl RunDir {
    /// Creates the directory and its manifest, or reopens it when the manifest matches.
    pub fn create(root: &Path, manifest: Manifest) -> Result<Self> {
        let path = root.join("manifest.json");
        if path.exists() {
            let existing = Self::open(root)?;
            if existing.manifest.manifest_hash != manifest.manifest_hash {
                return Err(RunError::OtherRun {
                    dir: root.display().to_string(),
                    expected: manifest.manifest_hash,
                    found: existing.manifest.manifest_hash,
                });
            }
            existing.verify()?;
            return Ok(existing);
        }
        if root.exists() && fs::read_dir(root).map_err(io_err(root))?.next().is_some() {
            let d = RunDir { root: root.to_path_buf(), manifest: manifest.clone() };
            d.verify()?;
        }
        let dir = RunDir { root: root.to_path_buf(), manifest };
        dir.write_json_raw(&path, &dir.manifest)?;
        Ok(dir)
    }

    pub fn open(root: &Path) -> Result<Self> {
        let path = root.join("manifest.json");
        let text = fs::read_to_string(&path).map_err(io_err(&path))?;
        let manifest: Manifest =
            serde_json::from_str(&text).map_err(|e| RunError::Format { path: path.display().to_string(), msg: e.to_string() })?;
        if manifest.config.hash() != manifest.manifest_hash {
            return Err(RunError::Format { path: path.display().to_string(), msg: "manifest hash does not match its config".into() });
        }
        Ok(RunDir { root: root.to_path_buf(), manifest })
    }

    pub fn hash(&self) -> &str {
        &self.manifest.manifest_hash
    }

    pub fn path(&self, rel: &str) -> PathBuf {
        self.root.join(rel)
    }

    fn write_json_raw<T: Serialize>(&self, path: &Path, value: &T) -> Result<()> {
        let mut s = serde_json::to_string_pretty(value).expect("serializes");
        s.push('\n');
        util::write_atomic(path, s.as_bytes()).map_err(io_err(path))
    }

    pub fn write_tagged<T: Serialize>(&self, rel: &str, body: &T) -> Result<()> {
        self.write_json_raw(&self.path(rel), &Tagged { manifest_hash: self.hash().to_string(), body })
    }

    pub fn read_tagged<T: DeserializeOwned>(&self, rel: &str) -> Result<T> {
        let path = self.path(rel);
        let text = fs::read_to_string(&path).map_err(io_err(&path))?;
        let t: Tagged<T> =
            serde_json::from_str(&text).map_err(|e| RunError::Format { path: path.display().to_string(), msg: e.to_string() })?;
        self.check_hash(&path, &t.manifest_hash)?;
        Ok(t.body)
    }

    fn check_hash(&self, path: &Path, found: &str) -> Result<()> {
        if found != self.hash() {
            return Err(RunError::MixedRun { path: path.display().to_string(), expected: self.hash().into(), found: found.into() });
        }
        Ok(())
    }

    pub fn write_dataset(&self, ds: &ProbeDataset) -> Result<()> {
        let path = self.path(&format!("datasets/{}.jsonl", dataset_name(ds.probe, &ds.variant)));
        util::write_atomic(&path, ds.to_jsonl(Some(self.hash())).as_bytes()).map_err(io_err(&path))
    }

    pub fn read_dataset(&self, probe: ProbeId, variant: &str) -> Result<ProbeDataset> {
        let path = self.path(&format!("datasets/{}.jsonl", dataset_name(probe, variant)));
        let text = fs::read_to_string(&path).map_err(io_err(&path))?;
        let (ds, h) = ProbeDataset::from_jsonl(&text)?;
        self.check_hash(&path, h.as_deref().unwrap_or("<none>"))?;
        Ok(ds)
    }

    pub fn write_text(&self, rel: &str, text: &str) -> Result<()> {
        let path = self.path(rel);
        util::write_atomic(&path, text.as_bytes()).map_err(io_err(&path))
    }

    pub fn stage_done(&self, stage: &str) -> bool {
        let path = self.path(&format!("stages/{stage}.done"));
        fs::read_to_string(path).is_ok_and(|s| s.trim() == self.hash())
    }

    pub fn mark_done(&self, stage: &str) -> Result<()> {
        let failed = self.path(&format!("stages/{stage}.failed"));
        if failed.exists() {
            fs::remove_file(&failed).map_err(io_err(&failed))?;
        }
        self.write_text(&format!("stages/{stage}.done"), &format!("{}\n", self.hash()))
    }

    pub fn mark_failed(&self, stage: &str, msg: &str) -> Result<()> {
        self.write_text(&format!("stages/{stage}.failed"), &format!("{}\n{msg}\n", self.hash()))
    }

    /// Every artifact in the directory must carry this run's hash.
    pub fn verify(&self) -> Result<()> {
        for sub in ["datasets", "curves", "zero-shot", "encoded", "stages", "metrics", ""] {
            let dir = self.root.join(sub);
            let Ok(entries) = fs::read_dir(&dir) else { continue };
            let mut paths: Vec<PathBuf> = entries.filter_map(|e| e.ok().map(|e| e.path())).filter(|p| p.is_file()).collect();
            paths.sort();
            for p in paths {
                let name = p.file_name().and_then(|n| n.to_str()).unwrap_or("");
                if name.starts_with('.') || name == "manifest.json" {
                    continue;
                }
                let text = fs::read_to_string(&p).map_err(io_err(&p))?;
                let found = artifact_hash(name, &text).ok_or_else(|| RunError::Format {
                    path: p.display().to_string(),
                    msg: "artifact carries no manifest hash".into(),
                })?;
                self.check_hash(&p, &found)?;
            }
        }
        Ok(())
    }
}

/// Manifest hash embedded in an artifact, by file kind.
fn artifact_hash(name: &str, text: &str) -> Option<String> {
    let first = text.lines().next()?;
    if name.ends_with(".jsonl") {
        let v: serde_json::Value = serde_json::from_str(first).ok()?;
        return v.get("manifest_hash")?.as_str().map(str::to_string);
    }
    if name.ends_with(".json") {
        let v: serde_json::Value = serde_json::from_str(text).ok()?;
        return v.get("manifest_hash")?.as_str().map(str::to_string);
    }
    if name.ends_with(".done") || name.ends_with(".failed") {
        return Some(first.trim().to_string());
    }
    // report files start with "# manifest <hash>..."
    let rest = first.strip_prefix("# manifest ")?;
    rest.split_whitespace().next().map(str::to_string)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config() -> RunConfig {
        RunConfig::new(vec![ProbeId::AgeComparison], BackendSpec::Stub { seed: 0, head_export: true }, BTreeMap::new())
    }

    #[test]
    fn hash_tracks_config_only() {
        let a = Manifest::new(config(), Path::new("/a"));
        let b = Manifest::new(config(), Path::new("/b"));
        assert_eq!(a.manifest_hash, b.manifest_hash);
        let mut c = config();
        c.seeds = vec![1];
        assert_ne!(Manifest::new(c, Path::new("/a")).manifest_hash, a.manifest_hash);
    }

    #[test]
    fn variants_skip_no_language_for_mc_lm() {
        let c = config();
        assert_eq!(c.variants(ProbeId::MultiChoiceLm), vec!["standard", "perturbed-language"]);
        assert_eq!(c.variants(ProbeId::EncyclopedicComposition), vec!["standard", "no-language", "perturbed-language", "single-hop"]);
        let mut c = config();
        c.extra_variants = vec!["nope".into()];
        assert!(c.validate().is_err());
    }

    #[test]
    fn foreign_artifacts_are_rejected() {
        let tmp = tempfile::tempdir().unwrap();
        let d = RunDir::create(tmp.path(), Manifest::new(config(), Path::new("f"))).unwrap();
        d.write_tagged("curves/x.json", &serde_json::json!({"a": 1})).unwrap();
        d.mark_done("s").unwrap();
        d.verify().unwrap();
        fs::write(tmp.path().join("curves/y.json"), r#"{"manifest_hash": "other", "a": 2}"#).unwrap();
        assert!(matches!(d.verify(), Err(RunError::MixedRun { .. })));
        let mut c = config();
        c.seeds = vec![9];
        assert!(matches!(RunDir::create(tmp.path(), Manifest::new(c, Path::new("f"))), Err(RunError::OtherRun { .. })));
    }

    #[test]
    fn stage_markers_round_trip() {
        let tmp = tempfile::tempdir().unwrap();
        let d = RunDir::create(tmp.path(), Manifest::new(config(), Path::new("f"))).unwrap();
        assert!(!d.stage_done("a"));
        d.mark_failed("a", "boom").unwrap();
        assert!(!d.stage_done("a"));
        d.mark_done("a").unwrap();
        assert!(d.stage_done("a"));
        assert!(!tmp.path().join("stages/a.failed").exists());
    }
}
