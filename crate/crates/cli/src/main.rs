use std::net::SocketAddr;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use log::info;

use lmprobe_core::backends::protocol::TOKEN_ENV;
use lmprobe_core::backends::server;
use lmprobe_core::backends::StubBackend;
use lmprobe_core::controls::{self, HeadMode, Targets};
use lmprobe_core::kb::load_fixtures;
use lmprobe_core::metrics::report::{self, Options};
use lmprobe_core::probes::{self, registry_listing, GenConfig, ProbeId, NO_LANGUAGE, PERTURBED_LANGUAGE, STANDARD};
use lmprobe_core::run::{pipeline, BackendSpec, RunConfig, RunDir};
use lmprobe_core::util::write_atomic;

#[derive(Parser)]
#[command(name = "lmprobe", version, about = "Symbolic-reasoning probes for masked language models")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write probe datasets as JSON lines.
    Generate(GenerateArgs),
    /// Generate, encode, zero-shot, learning curves and report, resumable.
    Run(RunArgs),
    /// Metric tables, keyed lines and medals for finished runs.
    Report(ReportArgs),
    /// Plot series (size, mean, per-seed accuracy) for finished runs.
    Plotdata(PlotArgs),
    /// Serve the hash stub over the wire protocol.
    ServeStub(ServeArgs),
    /// List registered probes and their variants.
    Probes,
}

#[derive(Args)]
struct ProbeSel {
    /// Probe id, repeatable or comma separated; `all` selects every probe.
    #[arg(long = "probe", required = true, value_delimiter = ',')]
    probes: Vec<String>,
    /// Task-specific variant, repeatable (standard and the language controls always run).
    #[arg(long = "variant", value_delimiter = ',')]
    variants: Vec<String>,
    #[arg(long, default_value = "fixtures")]
    fixtures: PathBuf,
    #[arg(long)]
    out: PathBuf,
    /// Generation seed.
    #[arg(long, default_value_t = 0)]
    data_seed: u64,
}

#[derive(Args)]
struct GenerateArgs {
    #[command(flatten)]
    sel: ProbeSel,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Mlp,
    Linear,
    Both,
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    sel: ProbeSel,
    /// `stub` or the base URL of a wire-protocol server.
    #[arg(long, default_value = "stub")]
    backend: String,
    /// Shorthand for `--backend stub`.
    #[arg(long)]
    stub: bool,
    #[arg(long, default_value_t = 0)]
    stub_seed: u64,
    /// Stub only: behave like a backend without head export.
    #[arg(long)]
    stub_no_head: bool,
    /// Training sizes, comma separated and strictly increasing.
    #[arg(long, value_delimiter = ',')]
    sizes: Option<Vec<usize>>,
    /// Number of seeds (1..=N).
    #[arg(long, default_value_t = 5)]
    seeds: u64,
    #[arg(long, value_enum, default_value = "both")]
    head_mode: ModeArg,
    #[arg(long)]
    no_baselines: bool,
    #[arg(long)]
    no_pre_finetune: bool,
    #[arg(long)]
    epochs: Option<usize>,
}

#[derive(Args)]
struct ReportArgs {
    /// Run directories, or directories containing run directories.
    #[arg(long = "runs", required = true, num_args = 1..)]
    runs: Vec<PathBuf>,
    #[arg(long)]
    out: PathBuf,
    /// MODEL=CORPUS; two of these enable the unigram-correlation analysis.
    #[arg(long = "corpus")]
    corpora: Vec<String>,
    /// Fixture directory for the unigram table (defaults to the one in the first manifest).
    #[arg(long)]
    fixtures: Option<PathBuf>,
}

#[derive(Args)]
struct PlotArgs {
    #[arg(long = "runs", required = true, num_args = 1..)]
    runs: Vec<PathBuf>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct ServeArgs {
    #[arg(long, default_value = "fixtures")]
    fixtures: PathBuf,
    #[arg(long, default_value = "127.0.0.1:8765")]
    addr: SocketAddr,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    no_head_export: bool,
}

/// Exit status for an unknown probe or variant.
const USAGE: u8 = 2;

#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn parse_probes(names: &[String]) -> Result<Vec<ProbeId>> {
    if names.iter().any(|n| n == "all") {
        return Ok(ProbeId::ALL.to_vec());
    }
    let mut out = Vec::new();
    for n in names {
        match n.parse::<ProbeId>() {
            Ok(p) if !out.contains(&p) => out.push(p),
            Ok(_) => {}
            Err(_) => return Err(Usage(format!("unknown probe {n:?}\nregistered probes: {}", registry_listing())).into()),
        }
    }
    Ok(out)
}

fn check_variants(probes: &[ProbeId], variants: &[String]) -> Result<()> {
    for v in variants {
        if [STANDARD, NO_LANGUAGE, PERTURBED_LANGUAGE].contains(&v.as_str()) {
            continue;
        }
        if !probes.iter().any(|p| p.extra_variants().contains(&v.as_str())) {
            let listing: Vec<String> = probes.iter().map(|p| format!("  {p}: {}", p.variants().join(", "))).collect();
            return Err(Usage(format!("unknown variant {v:?} for the selected probes\n{}", listing.join("\n"))).into());
        }
    }
    Ok(())
}

fn generate(a: GenerateArgs) -> Result<()> {
    let probes = parse_probes(&a.sel.probes)?;
    check_variants(&probes, &a.sel.variants)?;
    let kb = load_fixtures(&a.sel.fixtures)?;
    let cfg = GenConfig::default();
    for p in probes {
        let standard = probes::generate(p, &kb, &cfg, a.sel.data_seed)?;
        let mut sets = vec![standard.clone()];
        if p != ProbeId::MultiChoiceLm {
            sets.push(controls::no_language(&standard, a.sel.data_seed)?);
        }
        sets.push(controls::perturbed_language(&standard, &Targets::defaults(p, &kb), a.sel.data_seed)?);
        for v in &a.sel.variants {
            if p.extra_variants().contains(&v.as_str()) {
                sets.push(probes::generate_variant(p, v, &kb, &cfg, a.sel.data_seed)?);
            }
        }
        for ds in sets {
            let path = a.sel.out.join(format!("{p}.{}.jsonl", ds.variant));
            write_atomic(&path, ds.to_jsonl(None).as_bytes()).with_context(|| path.display().to_string())?;
            println!("{} train {} eval {}", path.display(), ds.train.len(), ds.eval.len());
        }
    }
    Ok(())
}

fn run(a: RunArgs) -> Result<()> {
    let probes = parse_probes(&a.sel.probes)?;
    check_variants(&probes, &a.sel.variants)?;
    let kb = load_fixtures(&a.sel.fixtures)?;
    let backend = if a.stub || a.backend == "stub" {
        BackendSpec::Stub { seed: a.stub_seed, head_export: !a.stub_no_head }
    } else {
        BackendSpec::Http { url: a.backend.clone() }
    };
    let mut cfg = RunConfig::new(probes, backend, kb.file_hashes.clone());
    cfg.extra_variants = a.sel.variants.iter().filter(|v| ![STANDARD, NO_LANGUAGE, PERTURBED_LANGUAGE].contains(&v.as_str())).cloned().collect();
    if let Some(s) = a.sizes {
        cfg.sizes = s;
    }
    if a.seeds == 0 {
        bail!("--seeds must be at least 1");
    }
    cfg.seeds = (1..=a.seeds).collect();
    cfg.head_modes = match a.head_mode {
        ModeArg::Mlp => vec![HeadMode::Mlp],
        ModeArg::Linear => vec![HeadMode::Linear],
        ModeArg::Both => vec![HeadMode::Mlp, HeadMode::Linear],
    };
    cfg.baselines = !a.no_baselines;
    cfg.pre_finetune = !a.no_pre_finetune;
    cfg.data_seed = a.sel.data_seed;
    if let Some(e) = a.epochs {
        cfg.hyper.epochs = e;
    }
    let dir = pipeline::execute(cfg, &a.sel.fixtures, &a.sel.out, None)?;
    info!("run {} complete", dir.hash());
    print!("{}", std::fs::read_to_string(dir.path("metrics/metrics.txt"))?);
    Ok(())
}

/// Expands each argument into run directories, sorted within a parent.
fn run_dirs(args: &[PathBuf]) -> Result<Vec<RunDir>> {
    let mut out = Vec::new();
    for a in args {
        if a.join("manifest.json").exists() {
            out.push(RunDir::open(a)?);
            continue;
        }
        let mut subs: Vec<PathBuf> = std::fs::read_dir(a)
            .with_context(|| a.display().to_string())?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.join("manifest.json").exists())
            .collect();
        subs.sort();
        if subs.is_empty() {
            bail!("{} holds no run directories", a.display());
        }
        for s in subs {
            out.push(RunDir::open(&s)?);
        }
    }
    Ok(out)
}

fn write_files(out: &Path, files: &[(String, String)]) -> Result<()> {
    for (name, text) in files {
        let path = out.join(name);
        write_atomic(&path, text.as_bytes()).with_context(|| path.display().to_string())?;
    }
    Ok(())
}

fn report(a: ReportArgs) -> Result<()> {
    let dirs = run_dirs(&a.runs)?;
    let mut corpora = Vec::new();
    for c in &a.corpora {
        let (m, k) = c.split_once('=').with_context(|| format!("--corpus expects MODEL=CORPUS, got {c:?}"))?;
        corpora.push((m.to_string(), k.to_string()));
    }
    let files = report::render(&dirs, &Options { corpora, fixtures: a.fixtures })?;
    write_files(&a.out, &files)?;
    print!("{}", files[0].1);
    Ok(())
}

fn plotdata(a: PlotArgs) -> Result<()> {
    let dirs = run_dirs(&a.runs)?;
    write_files(&a.out, &[("plotdata.tsv".to_string(), report::render_plotdata(&dirs)?)])
}

fn serve_stub(a: ServeArgs) -> Result<()> {
    let kb = load_fixtures(&a.fixtures)?;
    let stub = StubBackend::from_kb(&kb, a.seed);
    let stub = if a.no_head_export { stub.without_head_export() } else { stub };
    let token = std::env::var(TOKEN_ENV).ok().filter(|t| !t.is_empty());
    let handle = server::spawn(Arc::new(stub), token, a.addr)?;
    println!("serving {}", handle.url());
    handle.wait();
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate(a) => generate(a),
        Command::Run(a) => run(a),
        Command::Report(a) => report(a),
        Command::Plotdata(a) => plotdata(a),
        Command::ServeStub(a) => serve_stub(a),
        Command::Probes => {
            for p in ProbeId::ALL {
                println!("{p}: {}", p.variants().join(", "));
            }
            Ok(())
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<Usage>().is_some() {
                ExitCode::from(USAGE)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}
