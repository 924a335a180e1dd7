//! Text renderings of finished runs: aligned tables, keyed lines, the medals grid, plot series
//! and the optional unigram-correlation analysis. Output is a pure function of the run
//! directories, so regenerating a report gives identical bytes.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use super::*;
use crate::probes::{ProbeId, NO_LANGUAGE, PERTURBED_LANGUAGE, STANDARD};
use crate::run::{BackendRecord, CurveRecord, RunDir, RunError, ZeroShotRecord};

#[derive(Debug, Clone, Default)]
pub struct Options {
    /// (model id, unigram corpus id) pairs; with two of them the correlation analysis runs.
    pub corpora: Vec<(String, String)>,
    /// Fixture directory for the unigram table; defaults to the one in the first manifest.
    pub fixtures: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VariantSummary {
    pub variant: String,
    pub arm: String,
    pub zero_shot: Option<f64>,
    pub s: Option<f64>,
    pub max: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProbeSummary {
    pub probe: ProbeId,
    pub model_id: String,
    pub random: Option<f64>,
    pub row: MetricsRow,
    pub baseline_s: Option<f64>,
    pub baseline_max: Option<f64>,
    pub pre_finetune_accuracy: Option<f64>,
    pub variants: Vec<VariantSummary>,
    pub medal: Option<Medal>,
    pub curves: Vec<CurveRecord>,
}

fn load_opt<T: serde::de::DeserializeOwned>(dir: &RunDir, rel: &str) -> std::result::Result<Option<T>, RunError> {
    if !dir.path(rel).exists() {
        return Ok(None);
    }
    dir.read_tagged(rel).map(Some)
}

fn s_and_max(c: &CurveRecord) -> Result<(f64, f64)> {
    let w = MetricWeights::for_len(c.means.len())?;
    Ok((s_metric(&c.means, &w)?, max_metric(&c.means)?))
}

pub fn model_id(dir: &RunDir) -> std::result::Result<String, RunError> {
    Ok(match load_opt::<BackendRecord>(dir, "backend.json")? {
        Some(b) => b.info.model_id,
        None => "unknown".into(),
    })
}

/// Metrics for every probe of a run. Missing artifacts leave cells empty.
pub fn summarize(dir: &RunDir) -> std::result::Result<Vec<ProbeSummary>, RunError> {
    let cfg = &dir.manifest.config;
    let model = model_id(dir)?;
    let mut out = Vec::new();
    for &probe in &cfg.probes {
        let name = |v: &str| crate::run::dataset_name(probe, v);
        let curve = |v: &str, arm: &str| load_opt::<CurveRecord>(dir, &format!("curves/{}.{arm}.json", name(v)));
        let zs = |v: &str| load_opt::<ZeroShotRecord>(dir, &format!("zero-shot/{}.json", name(v)));
        let std_zs = zs(STANDARD)?;
        let std_mlp = curve(STANDARD, "mlp")?;
        let std_lin = curve(STANDARD, "linear")?;
        let mut row = MetricsRow { zero_shot: std_zs.as_ref().and_then(|z| z.accuracy), ..MetricsRow::default() };
        if let Some(c) = &std_mlp {
            let (s, m) = s_and_max(c)?;
            row.s_mlp = Some(s);
            row.max_mlp = Some(m);
        }
        if let Some(c) = &std_lin {
            let (s, m) = s_and_max(c)?;
            row.s_linear = Some(s);
            row.max_linear = Some(m);
        }
        let sensitivity = |ctrl: Option<CurveRecord>| -> Result<Option<f64>> {
            match (&std_mlp, ctrl) {
                (Some(s), Some(c)) => {
                    let w = MetricWeights::for_len(s.means.len())?;
                    Ok(Some(language_sensitivity(&s.means, &c.means, &w)?))
                }
                _ => Ok(None),
            }
        };
        row.perturbed_sensitivity = sensitivity(curve(PERTURBED_LANGUAGE, "mlp")?)?;
        row.no_language_sensitivity = sensitivity(curve(NO_LANGUAGE, "mlp")?)?;
        let baseline = curve(STANDARD, "baseline")?;
        let (baseline_s, baseline_max) = match &baseline {
            Some(c) => {
                let (s, m) = s_and_max(c)?;
                (Some(s), Some(m))
            }
            None => (None, None),
        };
        let mut variants = Vec::new();
        let mut curves = Vec::new();
        let mut pre = None;
        for v in cfg.variants(probe) {
            let z = zs(&v)?.and_then(|z| z.accuracy);
            for arm in ["mlp", "linear", "mlp-pre", "baseline"] {
                if let Some(c) = curve(&v, arm)? {
                    let (s, m) = s_and_max(&c)?;
                    if arm == "mlp-pre" {
                        pre = c.pre_finetune_accuracy;
                    }
                    variants.push(VariantSummary { variant: v.clone(), arm: arm.into(), zero_shot: if arm == "baseline" { None } else { z }, s: Some(s), max: Some(m) });
                    curves.push(c);
                }
            }
        }
        let random = std_zs.as_ref().map(|z| z.random);
        let medal = random.map(|r| medal(&MedalInput { row: row.clone(), random: r, baseline_s }, &cfg.medal_thresholds));
        out.push(ProbeSummary {
            probe,
            model_id: model.clone(),
            random,
            row,
            baseline_s,
            baseline_max,
            pre_finetune_accuracy: pre,
            variants,
            medal,
            curves,
        });
    }
    Ok(out)
}

fn cell(v: Option<f64>) -> String {
    v.map_or_else(|| "-".to_string(), |x| format!("{x:.1}"))
}

fn keyed(v: Option<f64>) -> String {
    v.map_or_else(|| "none".to_string(), |x| format!("{x:.6}"))
}

fn header(dirs: &[RunDir]) -> String {
    let hashes: Vec<&str> = dirs.iter().map(|d| d.hash()).collect();
    format!("# manifest {}\n", hashes.join(" "))
}

/// Metrics table, keyed lines, medals grid and plot series for `dirs`, as (file name, contents).
pub fn render(dirs: &[RunDir], opts: &Options) -> std::result::Result<Vec<(String, String)>, RunError> {
    let mut runs = Vec::new();
    for d in dirs {
        d.verify()?;
        runs.push(summarize(d)?);
    }
    let head = header(dirs);
    let mut table = head.clone();
    let mut keys = head.clone();
    let cols = [
        "zero-shot", "S-MLP", "Max-MLP", "S-Lin", "Max-Lin", "pert-sens", "nolang-sens", "base-S", "base-Max", "random", "medal",
    ];
    for (d, run) in dirs.iter().zip(&runs) {
        let model = model_id(d)?;
        let hp = &d.manifest.config.hyper;
        let _ = writeln!(table, "\nmodel {model}  (lr {} batch {} epochs {} patience {}; seeds {:?})", hp.lr, hp.batch, hp.epochs, hp.patience, d.manifest.config.seeds);
        let _ = write!(table, "{:<26}", "probe");
        for c in cols {
            let _ = write!(table, " {c:>11}");
        }
        table.push('\n');
        for p in run {
            let r = &p.row;
            let vals = [
                r.zero_shot,
                r.s_mlp,
                r.max_mlp,
                r.s_linear,
                r.max_linear,
                r.perturbed_sensitivity,
                r.no_language_sensitivity,
                p.baseline_s,
                p.baseline_max,
                p.random,
            ];
            let _ = write!(table, "{:<26}", p.probe.as_str());
            for v in vals {
                let _ = write!(table, " {:>11}", cell(v));
            }
            let _ = writeln!(table, " {:>11}", p.medal.map_or("", Medal::symbol));
            let names = [
                "zero_shot", "s_mlp", "max_mlp", "s_linear", "max_linear", "perturbed_sensitivity", "no_language_sensitivity", "baseline_s",
                "baseline_max", "random",
            ];
            for (k, v) in names.iter().zip(vals) {
                let _ = writeln!(keys, "model={model} probe={} key={k} value={}", p.probe, keyed(v));
            }
            if let Some(a) = p.pre_finetune_accuracy {
                let _ = writeln!(keys, "model={model} probe={} key=pre_finetune_train_accuracy value={}", p.probe, keyed(Some(a)));
            }
            let _ = writeln!(keys, "model={model} probe={} key=medal value={}", p.probe, p.medal.map_or("none", Medal::symbol));
        }
        let _ = writeln!(table, "\n{:<26} {:<20} {:<9} {:>11} {:>11} {:>11}", "probe", "variant", "arm", "zero-shot", "S", "Max");
        for p in run {
            for v in &p.variants {
                let _ = writeln!(
                    table,
                    "{:<26} {:<20} {:<9} {:>11} {:>11} {:>11}",
                    p.probe.as_str(),
                    v.variant,
                    v.arm,
                    cell(v.zero_shot),
                    cell(v.s),
                    cell(v.max)
                );
                let _ = writeln!(keys, "model={model} probe={} variant={} arm={} key=s value={}", p.probe, v.variant, v.arm, keyed(v.s));
                let _ = writeln!(keys, "model={model} probe={} variant={} arm={} key=max value={}", p.probe, v.variant, v.arm, keyed(v.max));
            }
        }
    }

    // medals grid: probes × models, blank where a run lacks the probe
    let models: Vec<String> = dirs.iter().map(model_id).collect::<std::result::Result<_, _>>()?;
    let mut grid = head.clone();
    let _ = write!(grid, "{:<26}", "probe");
    for m in &models {
        let _ = write!(grid, " {m:>14}");
    }
    grid.push('\n');
    for probe in ProbeId::ALL {
        if !runs.iter().flatten().any(|p| p.probe == probe) {
            continue;
        }
        let _ = write!(grid, "{:<26}", probe.as_str());
        for run in &runs {
            let m = run.iter().find(|p| p.probe == probe).and_then(|p| p.medal);
            let _ = write!(grid, " {:>14}", m.map_or("", Medal::symbol));
        }
        grid.push('\n');
    }

    let mut files = vec![("metrics.txt".to_string(), table), ("metrics.keyed".to_string(), keys), ("medals.txt".to_string(), grid)];
    files.push(("plotdata.tsv".to_string(), plotdata(dirs, &runs)));
    if opts.corpora.len() >= 2 {
        files.push(("correlation.txt".to_string(), correlation(dirs, &runs, opts)?));
    }
    Ok(files)
}

fn plotdata(dirs: &[RunDir], runs: &[Vec<ProbeSummary>]) -> String {
    let mut out = header(dirs);
    out.push_str("model\tprobe\tvariant\tarm\tsize\tmean\tper_seed\n");
    for run in runs {
        for p in run {
            for c in &p.curves {
                for (i, &size) in c.sizes.iter().enumerate() {
                    let per: Vec<String> = c.points.iter().filter(|q| q.size == size).map(|q| format!("{}:{:.4}", q.seed, q.accuracy)).collect();
                    let _ = writeln!(out, "{}\t{}\t{}\t{}\t{size}\t{:.4}\t{}", c.model_id, c.probe, c.variant, c.arm, c.means[i], per.join(","));
                }
            }
        }
    }
    out
}

/// Plot series only.
pub fn render_plotdata(dirs: &[RunDir]) -> std::result::Result<String, RunError> {
    let mut runs = Vec::new();
    for d in dirs {
        d.verify()?;
        runs.push(summarize(d)?);
    }
    Ok(plotdata(dirs, &runs))
}

fn correlation(dirs: &[RunDir], runs: &[Vec<ProbeSummary>], opts: &Options) -> std::result::Result<String, RunError> {
    let (ma, ca) = &opts.corpora[0];
    let (mb, cb) = &opts.corpora[1];
    let find = |m: &str| -> std::result::Result<usize, RunError> {
        dirs.iter()
            .map(model_id)
            .collect::<std::result::Result<Vec<_>, _>>()?
            .iter()
            .position(|x| x == m)
            .ok_or_else(|| RunError::Config(format!("no run for model {m:?}")))
    };
    let (ia, ib) = (find(ma)?, find(mb)?);
    let fixtures = opts.fixtures.clone().unwrap_or_else(|| PathBuf::from(&dirs[ia].manifest.fixtures_dir));
    let kb = crate::kb::load_fixtures(&fixtures)?;
    let mut dev = BTreeMap::new();
    let mut winners = BTreeMap::new();
    for pa in &runs[ia] {
        let Some(pb) = runs[ib].iter().find(|p| p.probe == pa.probe) else { continue };
        let (Some(sa), Some(sb)) = (pa.row.s_mlp, pb.row.s_mlp) else { continue };
        if sa == sb {
            continue;
        }
        winners.insert(pa.probe.to_string(), sa > sb);
        dev.insert(pa.probe.to_string(), dirs[ia].read_dataset(pa.probe, STANDARD)?.eval);
    }
    let r = unigram_correlation(&dev, &kb.unigram, ca, cb, &winners)?;
    let mut out = header(dirs);
    let _ = writeln!(out, "model A {ma} (corpus {ca}), model B {mb} (corpus {cb})");
    let _ = writeln!(out, "{:<26} {:>12} {:>12} {:>8}", "probe", "logp A", "logp B", "A wins");
    for (p, (a, b, w)) in &r.probes {
        let _ = writeln!(out, "{p:<26} {a:>12.4} {b:>12.4} {w:>8}");
    }
    let _ = writeln!(out, "spearman {}", r.spearman.map_or_else(|| "undefined".to_string(), |s| format!("{s:.4}")));
    Ok(out)
}
