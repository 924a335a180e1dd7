//! generate → encode → zero-shot → curves → report, one probe at a time, with stage markers so
//! a rerun of a finished directory touches neither the backend nor the trainer.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::path::Path;
use std::sync::Arc;

use log::{info, warn};
use serde::de::DeserializeOwned;
use serde::Serialize;

use super::*;
use crate::backends::cache::EncodingCache;
use crate::backends::http::HttpBackend;
use crate::backends::protocol::ErrorKind;
use crate::backends::{Backend, EncodedExample, Session, StubBackend};
use crate::baselines::{concat_data, concat_model, AnswerVocab, EsimData, EsimModel};
use crate::controls::{self, Targets};
use crate::heads::Activation;
use crate::kb::KbStore;
use crate::probes::{self, Example, Setup};
use crate::train::{accuracy, all, curve_means, pre_finetune, run_curve, MlmData, MlmModel, QaData, QaModel, Schedule};

pub const QA_ACTIVATION: Activation = Activation::GeluTanh;

/// Backend described by `spec`. The HTTP token is read from the environment.
pub fn backend_for(spec: &BackendSpec, kb: &KbStore) -> Result<Arc<dyn Backend>> {
    Ok(match spec {
        BackendSpec::Stub { seed, head_export } => {
            let s = StubBackend::from_kb(kb, *seed);
            Arc::new(if *head_export { s } else { s.without_head_export() })
        }
        BackendSpec::Http { url } => Arc::new(HttpBackend::new(url)?),
    })
}

fn keep(exs: &[Example], dropped: &[usize]) -> Vec<Example> {
    let d: BTreeSet<usize> = dropped.iter().copied().collect();
    exs.iter().enumerate().filter(|(i, _)| !d.contains(i)).map(|(_, e)| e.clone()).collect()
}

/// Expected accuracy (percent) of a uniform guess.
pub fn random_accuracy(exs: &[Example]) -> f64 {
    util::mean(&exs.iter().map(|e| 100.0 / e.candidates.len() as f64).collect::<Vec<_>>())
}

enum Vectors {
    Mlm { train: MlmData, eval: MlmData, init: Option<MlmModel>, n_rows: usize, d: usize, note: Option<String> },
    Qa { train: QaData, eval: QaData, d: usize },
}

pub struct Pipeline {
    dir: RunDir,
    kb: KbStore,
    backend: Arc<dyn Backend>,
    session: Option<Arc<Session>>,
    cache: Arc<EncodingCache>,
}

impl Pipeline {
    pub fn new(dir: RunDir, kb: KbStore, backend: Arc<dyn Backend>) -> Result<Self> {
        if kb.file_hashes != dir.manifest.config.fixture_hashes {
            return Err(RunError::Config("fixture files differ from the ones recorded in the manifest".into()));
        }
        dir.manifest.config.validate()?;
        let cache_dir = dir.path("cache");
        let cache = Arc::new(EncodingCache::open(&cache_dir).map_err(io_err(&cache_dir))?);
        Ok(Pipeline { dir, kb, backend, session: None, cache })
    }

    pub fn dir(&self) -> &RunDir {
        &self.dir
    }

    fn config(&self) -> &RunConfig {
        &self.dir.manifest.config
    }

    /// Opens the backend session on first use and pins its /info to the run.
    fn session(&mut self) -> Result<Arc<Session>> {
        if let Some(s) = &self.session {
            return Ok(s.clone());
        }
        let s = Session::open(self.backend.clone(), Some(self.cache.clone()))?;
        let path = self.dir.path("backend.json");
        if path.exists() {
            let rec: BackendRecord = self.dir.read_tagged("backend.json")?;
            if rec.info != *s.info() {
                return Err(RunError::BackendChanged(format!(
                    "recorded {} (vocab {}), now {} (vocab {})",
                    rec.info.model_id,
                    rec.info.vocab_hash,
                    s.info().model_id,
                    s.info().vocab_hash
                )));
            }
        } else {
            self.dir.write_tagged("backend.json", &BackendRecord { info: s.info().clone() })?;
        }
        let s = Arc::new(s);
        self.session = Some(s.clone());
        Ok(s)
    }

    /// Runs every probe, then writes the report into `metrics/`.
    pub fn run(&mut self) -> Result<()> {
        for probe in self.config().probes.clone() {
            self.run_probe(probe)?;
        }
        let files = crate::metrics::report::render(std::slice::from_ref(&self.dir), &crate::metrics::report::Options::default())?;
        for (name, text) in files {
            self.dir.write_text(&format!("metrics/{name}"), &text)?;
        }
        Ok(())
    }

    fn staged<T: Serialize + DeserializeOwned>(&mut self, stage: &str, rel: &str, f: impl FnOnce(&mut Self) -> Result<T>) -> Result<T> {
        if self.dir.stage_done(stage) {
            return self.dir.read_tagged(rel);
        }
        info!("stage {stage}");
        match f(self) {
            Ok(v) => {
                self.dir.write_tagged(rel, &v)?;
                self.dir.mark_done(stage)?;
                Ok(v)
            }
            Err(e) => {
                self.dir.mark_failed(stage, &e.to_string())?;
                Err(RunError::Stage { stage: stage.into(), msg: e.to_string() })
            }
        }
    }

    fn datasets(&mut self, probe: ProbeId) -> Result<BTreeMap<String, ProbeDataset>> {
        let variants = self.config().variants(probe);
        let stage = format!("generate.{probe}");
        if self.dir.stage_done(&stage) {
            return variants.iter().map(|v| Ok((v.clone(), self.dir.read_dataset(probe, v)?))).collect();
        }
        info!("stage {stage}");
        let out = self.generate(probe, &variants);
        match out {
            Ok(map) => {
                for ds in map.values() {
                    self.dir.write_dataset(ds)?;
                }
                self.dir.mark_done(&stage)?;
                Ok(map)
            }
            Err(e) => {
                self.dir.mark_failed(&stage, &e.to_string())?;
                Err(RunError::Stage { stage, msg: e.to_string() })
            }
        }
    }

    fn generate(&self, probe: ProbeId, variants: &[String]) -> Result<BTreeMap<String, ProbeDataset>> {
        let cfg = self.config();
        let seed = cfg.data_seed;
        let standard = probes::generate(probe, &self.kb, &cfg.generation, seed)?;
        let mut out = BTreeMap::new();
        for v in variants {
            let ds = match v.as_str() {
                STANDARD => standard.clone(),
                NO_LANGUAGE => controls::no_language(&standard, seed)?,
                PERTURBED_LANGUAGE => controls::perturbed_language(&standard, &Targets::defaults(probe, &self.kb), seed)?,
                other => probes::generate_variant(probe, other, &self.kb, &cfg.generation, seed)?,
            };
            out.insert(v.clone(), ds);
        }
        Ok(out)
    }

    /// Examples the backend rejects in any aligned variant (standard and the language controls)
    /// are dropped from all of them; other variants drop only their own rejections.
    fn encode_stage(&mut self, probe: ProbeId, data: &BTreeMap<String, ProbeDataset>) -> Result<EncodeRecord> {
        let session = self.session()?;
        let mut rejected: BTreeMap<String, (BTreeSet<usize>, BTreeSet<usize>)> = BTreeMap::new();
        let mut reasons: BTreeMap<String, usize> = BTreeMap::new();
        for (v, ds) in data {
            let mut sets = (BTreeSet::new(), BTreeSet::new());
            for (exs, set) in [(&ds.train, &mut sets.0), (&ds.eval, &mut sets.1)] {
                for (i, r) in session.encode_examples(exs)?.into_iter().enumerate() {
                    if let Err(d) = r {
                        set.insert(i);
                        let kind = serde_json::to_value(d.kind).ok().and_then(|k| k.as_str().map(str::to_string)).unwrap_or_default();
                        *reasons.entry(kind).or_default() += 1;
                    }
                }
            }
            rejected.insert(v.clone(), sets);
        }
        let aligned = [STANDARD, NO_LANGUAGE, PERTURBED_LANGUAGE];
        let mut union = (BTreeSet::new(), BTreeSet::new());
        for (v, (t, e)) in &rejected {
            if aligned.contains(&v.as_str()) {
                union.0.extend(t);
                union.1.extend(e);
            }
        }
        let dropped = rejected
            .into_iter()
            .map(|(v, (t, e))| {
                let pair = if aligned.contains(&v.as_str()) { union.clone() } else { (t, e) };
                (v, (pair.0.into_iter().collect(), pair.1.into_iter().collect()))
            })
            .collect();
        Ok(EncodeRecord { probe, model_id: session.info().model_id.clone(), dropped, reasons })
    }

    fn vectors(&mut self, train: &[Example], eval: &[Example]) -> Result<Vectors> {
        let session = self.session()?;
        let d = session.info().d_h;
        let enc = |exs: &[Example]| -> Result<Vec<EncodedExample>> {
            session
                .encode_examples(exs)?
                .into_iter()
                .map(|r| r.map_err(|e| RunError::Stage { stage: "encode".into(), msg: format!("unexpected rejection: {}", e.message) }))
                .collect()
        };
        let (etr, eev) = (enc(train)?, enc(eval)?);
        match train.first().map(|e| e.setup).unwrap_or(Setup::McMlm) {
            Setup::McQa => {
                let rows = |v: &[EncodedExample]| -> Vec<Vec<Vec<f64>>> {
                    v.iter().map(|e| if let EncodedExample::Qa { rows } = e { rows.clone() } else { unreachable!("QA encoding") }).collect()
                };
                Ok(Vectors::Qa {
                    train: QaData::from_rows(&rows(&etr), train.iter().map(|e| e.gold).collect(), d),
                    eval: QaData::from_rows(&rows(&eev), eval.iter().map(|e| e.gold).collect(), d),
                    d,
                })
            }
            Setup::McMlm => {
                let strings: BTreeSet<String> = train.iter().chain(eval).flat_map(|e| e.candidates.iter().cloned()).collect();
                let strings: Vec<String> = strings.into_iter().collect();
                let (init, ids, note) = match session.mlm_head(&strings) {
                    Ok(h) => {
                        let rows = h.rows.clone();
                        (Some(MlmModel::from_head(&h)), rows, None)
                    }
                    Err(BackendError::Rejected(e)) if e.kind == ErrorKind::NoHeadExport => {
                        warn!("backend exports no MLM head; zero-shot is unavailable and curves start from a random head");
                        let ids: BTreeSet<usize> = etr
                            .iter()
                            .chain(&eev)
                            .flat_map(|e| if let EncodedExample::Mlm { candidate_ids, .. } = e { candidate_ids.clone() } else { vec![] })
                            .collect();
                        (None, ids.into_iter().collect(), Some("no head export: random-init head".to_string()))
                    }
                    Err(e) => return Err(e.into()),
                };
                let row_of: HashMap<usize, usize> = ids.iter().enumerate().map(|(r, &id)| (id, r)).collect();
                let data = |v: &[EncodedExample], exs: &[Example]| -> Result<MlmData> {
                    let mut flat = Vec::with_capacity(v.len() * d);
                    let mut cands = Vec::with_capacity(v.len());
                    for e in v {
                        let EncodedExample::Mlm { row, candidate_ids } = e else { unreachable!("MLM encoding") };
                        flat.extend_from_slice(row);
                        let c = candidate_ids
                            .iter()
                            .map(|id| row_of.get(id).copied())
                            .collect::<Option<Vec<usize>>>()
                            .ok_or_else(|| RunError::Config("candidate id missing from the exported head".into()))?;
                        cands.push(c);
                    }
                    Ok(MlmData {
                        x: ndarray::Array2::from_shape_vec((v.len(), d), flat).expect("rows"),
                        candidates: cands,
                        gold: exs.iter().map(|e| e.gold).collect(),
                    })
                };
                Ok(Vectors::Mlm { train: data(&etr, train)?, eval: data(&eev, eval)?, init, n_rows: ids.len(), d, note })
            }
        }
    }

    fn run_probe(&mut self, probe: ProbeId) -> Result<()> {
        let cfg = self.config().clone();
        let variants = cfg.variants(probe);
        let data = self.datasets(probe)?;
        let modes = |v: &str| -> Vec<HeadMode> {
            if v == STANDARD {
                cfg.head_modes.clone()
            } else {
                vec![if cfg.head_modes.contains(&HeadMode::Mlp) { HeadMode::Mlp } else { cfg.head_modes[0] }]
            }
        };
        let composition_pre = cfg.pre_finetune && probe == ProbeId::EncyclopedicComposition;
        // stage names and whether they still need backend vectors
        let mut pending_lm = false;
        for v in &variants {
            if composition_pre && v == "single-hop" {
                continue;
            }
            pending_lm |= !self.dir.stage_done(&format!("zero-shot.{probe}.{v}"));
            for m in modes(v) {
                pending_lm |= !self.dir.stage_done(&format!("curve.{probe}.{v}.{}", m.as_str()));
            }
        }
        if composition_pre {
            pending_lm |= !self.dir.stage_done(&format!("curve.{probe}.{STANDARD}.mlp-pre"));
        }
        let pending_baseline = cfg.baselines && !self.dir.stage_done(&format!("curve.{probe}.{STANDARD}.baseline"));
        if !pending_lm && !pending_baseline {
            return Ok(());
        }
        let data_ref = data.clone();
        let enc: EncodeRecord = self.staged(&format!("encode.{probe}"), &format!("encoded/{probe}.json"), |p| p.encode_stage(probe, &data_ref))?;
        let kept = |v: &str| -> (Vec<Example>, Vec<Example>) {
            let ds = &data[v];
            let (dt, de) = &enc.dropped[v];
            (keep(&ds.train, dt), keep(&ds.eval, de))
        };

        if pending_lm {
            let mut facts: Option<QaData> = None;
            if composition_pre {
                let (tr, ev) = kept("single-hop");
                if let Vectors::Qa { train, .. } = self.vectors(&tr, &ev)? {
                    facts = Some(train);
                }
            }
            for v in &variants {
                if composition_pre && v == "single-hop" {
                    continue;
                }
                let (tr, ev) = kept(v);
                let vectors = self.vectors(&tr, &ev)?;
                let model_id = self.session()?.info().model_id.clone();
                let random = random_accuracy(&ev);
                self.staged(&format!("zero-shot.{probe}.{v}"), &format!("zero-shot/{}.json", dataset_name(probe, v)), |_| {
                    let (accuracy, note) = match &vectors {
                        Vectors::Qa { .. } => (None, Some("MC-QA: the QA head has no pretrained weights".to_string())),
                        Vectors::Mlm { init: None, note, .. } => (None, note.clone()),
                        Vectors::Mlm { init: Some(m), eval, .. } => (Some(accuracy(m, eval, &all(eval.gold.len()))), None),
                    };
                    Ok(ZeroShotRecord { probe, variant: v.clone(), model_id: model_id.clone(), accuracy, random, n_eval: ev.len(), note })
                })?;
                let mut arms: Vec<(String, HeadMode)> = modes(v).into_iter().map(|m| (m.as_str().to_string(), m)).collect();
                if composition_pre && v == STANDARD {
                    arms.push(("mlp-pre".into(), HeadMode::Mlp));
                }
                for (arm, mode) in arms {
                    let stage = format!("curve.{probe}.{v}.{arm}");
                    let rel = format!("curves/{}.{arm}.json", dataset_name(probe, v));
                    let facts = facts.as_ref();
                    let (vectors, model_id) = (&vectors, &model_id);
                    self.staged(&stage, &rel, |p| p.lm_curve(probe, v, &arm, mode, vectors, model_id, (tr.len(), ev.len()), facts))?;
                }
            }
        }
        if cfg.baselines {
            let (tr, ev) = kept(STANDARD);
            let stage = format!("curve.{probe}.{STANDARD}.baseline");
            let rel = format!("curves/{}.baseline.json", dataset_name(probe, STANDARD));
            self.staged(&stage, &rel, |p| p.baseline_curve(probe, &tr, &ev))?;
        }
        Ok(())
    }

    #[allow(clippy::too_many_arguments)]
    fn lm_curve(
        &self,
        probe: ProbeId,
        variant: &str,
        arm: &str,
        mode: HeadMode,
        vectors: &Vectors,
        model_id: &str,
        (n_train, n_eval): (usize, usize),
        facts: Option<&QaData>,
    ) -> Result<CurveRecord> {
        let cfg = self.config();
        let schedule = Schedule::new(cfg.sizes.clone(), cfg.seeds.clone(), mode)?.fit_to(n_train)?;
        let hp = &cfg.hyper;
        let mut notes = Vec::new();
        let mut pre_acc = None;
        let (points, init) = match vectors {
            Vectors::Mlm { train, eval, init, n_rows, d, note } => {
                notes.extend(note.clone());
                match init {
                    Some(m) => (run_curve(train, eval, &schedule, hp, |_| m.clone())?, "pretrained MLM head".to_string()),
                    None => (
                        run_curve(train, eval, &schedule, hp, |s| MlmModel::random(*d, *d, *n_rows, Activation::GeluTanh, true, s))?,
                        "random MLM head".to_string(),
                    ),
                }
            }
            Vectors::Qa { train, eval, d } => {
                notes.push("MC-QA: only the QA head is trained; the encoder stays frozen".into());
                let fresh = |s: u64| QaModel::random(*d, cfg.qa_hidden, QA_ACTIVATION, s);
                if arm == "mlp-pre" {
                    let facts = facts.ok_or_else(|| RunError::Config("pre-fine-tuning needs the single-hop dataset".into()))?;
                    let mut inits = BTreeMap::new();
                    let mut accs = Vec::new();
                    for &s in &schedule.seeds {
                        let (m, a) = pre_finetune(fresh(s), facts, &cfg.pre_finetune_hyper, s)?;
                        accs.push(a);
                        inits.insert(s, m);
                    }
                    pre_acc = Some(util::mean(&accs));
                    (run_curve(train, eval, &schedule, hp, |s| inits[&s].clone())?, "QA head pre-fine-tuned on single-hop facts".to_string())
                } else {
                    (run_curve(train, eval, &schedule, hp, fresh)?, "random QA head".to_string())
                }
            }
        };
        Ok(CurveRecord {
            probe,
            variant: variant.into(),
            arm: arm.into(),
            model_id: model_id.into(),
            mode,
            means: curve_means(&points, &schedule.sizes),
            sizes: schedule.sizes,
            seeds: schedule.seeds,
            points,
            hyper: hp.clone(),
            n_train,
            n_eval,
            init,
            pre_finetune_accuracy: pre_acc,
            notes,
        })
    }

    fn baseline_curve(&self, probe: ProbeId, train: &[Example], eval: &[Example]) -> Result<CurveRecord> {
        let cfg = self.config();
        let schedule = Schedule::new(cfg.sizes.clone(), cfg.seeds.clone(), HeadMode::Mlp)?.fit_to(train.len())?;
        let hp = &cfg.hyper;
        let table = &self.kb.embeddings;
        let (points, model_id, init) = match probe.setup() {
            Setup::McMlm => {
                let vocab = AnswerVocab::build(train.iter().chain(eval));
                let (tr, ev) = (concat_data(train, table, &vocab), concat_data(eval, table, &vocab));
                let pts = run_curve(&tr, &ev, &schedule, hp, |s| concat_model(table, &vocab, cfg.concat_hidden, s))?;
                (pts, "baseline-concat", format!("random head over {} concatenated embeddings", crate::baselines::concat::CONCAT_TOKENS))
            }
            Setup::McQa => {
                let build = |e: &[Example]| EsimData::build(e, table).map_err(|e| RunError::Config(e.to_string()));
                let (tr, ev) = (build(train)?, build(eval)?);
                let pts = run_curve(&tr, &ev, &schedule, hp, |s| EsimModel::random(table.dim(), cfg.esim_width, s))?;
                (pts, "baseline-esim", format!("ESIM width {}", cfg.esim_width))
            }
        };
        Ok(CurveRecord {
            probe,
            variant: STANDARD.into(),
            arm: "baseline".into(),
            model_id: model_id.into(),
            mode: HeadMode::Mlp,
            means: curve_means(&points, &schedule.sizes),
            sizes: schedule.sizes,
            seeds: schedule.seeds,
            points,
            hyper: hp.clone(),
            n_train: train.len(),
            n_eval: eval.len(),
            init,
            pre_finetune_accuracy: None,
            notes: vec![],
        })
    }
}

/// Loads fixtures, prepares the run directory and runs everything.
pub fn execute(config: RunConfig, fixtures: &Path, out: &Path, backend: Option<Arc<dyn Backend>>) -> Result<RunDir> {
    let kb = crate::kb::load_fixtures(fixtures)?;
    let dir = RunDir::create(out, Manifest::new(config, fixtures))?;
    let backend = match backend {
        Some(b) => b,
        None => backend_for(&dir.manifest.config.backend, &kb)?,
    };
    let mut p = Pipeline::new(dir, kb, backend)?;
    p.run()?;
    let Pipeline { dir, .. } = p;
    Ok(dir)
}
