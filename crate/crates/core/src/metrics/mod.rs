//! Learning-curve summaries (S, Max, language sensitivity), medals and the unigram-correlation
//! analysis.

pub mod report;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::kb::UnigramTable;
use crate::probes::Example;
use crate::text::MASK;

/// Weights for the default seven-size schedule, smallest size first.
pub const STANDARD_WEIGHTS: [f64; 7] = [0.23, 0.20, 0.17, 0.14, 0.11, 0.08, 0.07];

pub const UNIGRAM_FLOOR: f64 = 1e-9;

#[derive(Debug, Error, PartialEq)]
pub enum MetricError {
    #[error("length mismatch: expected {expected} points, got {found}")]
    Length { expected: usize, found: usize },
    #[error("invalid weights: {0}")]
    Weights(String),
    #[error("empty curve")]
    Empty,
    #[error("unigram analysis: {0}")]
    Unigram(String),
}

pub type Result<T> = std::result::Result<T, MetricError>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricWeights(Vec<f64>);

impl MetricWeights {
    pub fn new(w: Vec<f64>) -> Result<Self> {
        if w.is_empty() {
            return Err(MetricError::Weights("no weights".into()));
        }
        if w.iter().any(|x| !x.is_finite() || *x <= 0.0) {
            return Err(MetricError::Weights(format!("weights must be positive: {w:?}")));
        }
        if w.windows(2).any(|p| p[0] <= p[1]) {
            return Err(MetricError::Weights(format!("weights must be strictly decreasing: {w:?}")));
        }
        let sum: f64 = w.iter().sum();
        if (sum - 1.0).abs() > 1e-9 {
            return Err(MetricError::Weights(format!("weights sum to {sum}, not 1")));
        }
        Ok(MetricWeights(w))
    }

    pub fn standard() -> Self {
        MetricWeights(STANDARD_WEIGHTS.to_vec())
    }

    /// Weights for a schedule of `n` sizes. Schedules shorter than seven (small datasets) use the
    /// first `n` standard weights renormalized to sum to 1.
    pub fn for_len(n: usize) -> Result<Self> {
        if n == 0 || n > STANDARD_WEIGHTS.len() {
            return Err(MetricError::Weights(format!("no standard weights for {n} sizes")));
        }
        let head = &STANDARD_WEIGHTS[..n];
        let total: f64 = head.iter().sum();
        Ok(MetricWeights(head.iter().map(|w| w / total).collect()))
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn check(&self, n: usize) -> Result<()> {
        if n != self.0.len() {
            return Err(MetricError::Length { expected: self.0.len(), found: n });
        }
        Ok(())
    }
}

/// Σ wᵢ·accᵢ over the mean accuracy per size.
pub fn s_metric(curve: &[f64], w: &MetricWeights) -> Result<f64> {
    w.check(curve.len())?;
    Ok(curve.iter().zip(w.as_slice()).map(|(a, w)| a * w).sum())
}

pub fn max_metric(curve: &[f64]) -> Result<f64> {
    curve.iter().copied().reduce(f64::max).ok_or(MetricError::Empty)
}

/// Σ wᵢ·max(0, stdᵢ − ctrlᵢ).
pub fn language_sensitivity(std: &[f64], ctrl: &[f64], w: &MetricWeights) -> Result<f64> {
    w.check(std.len())?;
    w.check(ctrl.len())?;
    Ok(std.iter().zip(ctrl).zip(w.as_slice()).map(|((s, c), w)| w * (s - c).max(0.0)).sum())
}

/// One (probe, model) line of the results tables. Absent cells are `None`: zero-shot for MC-QA
/// probes or backends without a head export, no-language for probes without that control.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
pub struct MetricsRow {
    pub zero_shot: Option<f64>,
    pub s_mlp: Option<f64>,
    pub max_mlp: Option<f64>,
    pub s_linear: Option<f64>,
    pub max_linear: Option<f64>,
    pub perturbed_sensitivity: Option<f64>,
    pub no_language_sensitivity: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Medal {
    None,
    Partial,
    Full,
}

impl Medal {
    pub fn symbol(self) -> &'static str {
        match self {
            Medal::None => "-",
            Medal::Partial => "partial",
            Medal::Full => "full",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MedalThresholds {
    /// Full mark: zero-shot at least this many points above random...
    pub zero_shot_margin: f64,
    /// ...and no-language sensitivity at least this high.
    pub sensitivity_floor: f64,
    /// Partial mark: S (MLP) at least this many points above the baseline's S.
    pub s_margin: f64,
}

impl Default for MedalThresholds {
    fn default() -> Self {
        MedalThresholds { zero_shot_margin: 25.0, sensitivity_floor: 15.0, s_margin: 10.0 }
    }
}

/// Inputs to one medal decision.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MedalInput {
    pub row: MetricsRow,
    /// Expected accuracy of uniform guessing on the eval split.
    pub random: f64,
    pub baseline_s: Option<f64>,
}

pub fn medal(input: &MedalInput, th: &MedalThresholds) -> Medal {
    let r = &input.row;
    let full = r.zero_shot.is_some_and(|z| z >= input.random + th.zero_shot_margin)
        && r.no_language_sensitivity.is_some_and(|s| s >= th.sensitivity_floor);
    if full {
        return Medal::Full;
    }
    match (r.s_mlp, input.baseline_s) {
        (Some(s), Some(b)) if s >= b + th.s_margin => Medal::Partial,
        _ => Medal::None,
    }
}

/// Medal grid keyed by (probe, model). A missing input yields a blank cell (`None`).
pub fn medals(
    inputs: &BTreeMap<(String, String), MedalInput>,
    probes: &[String],
    models: &[String],
    th: &MedalThresholds,
) -> BTreeMap<(String, String), Option<Medal>> {
    let mut out = BTreeMap::new();
    for p in probes {
        for m in models {
            let key = (p.clone(), m.clone());
            out.insert(key.clone(), inputs.get(&key).map(|i| medal(i, th)));
        }
    }
    out
}

/// Average ranks (1-based), ties sharing their mean rank.
pub fn average_ranks(x: &[f64]) -> Vec<f64> {
    let mut idx: Vec<usize> = (0..x.len()).collect();
    idx.sort_by(|&a, &b| x[a].total_cmp(&x[b]));
    let mut ranks = vec![0.0; x.len()];
    let mut i = 0;
    while i < idx.len() {
        let mut j = i;
        while j + 1 < idx.len() && x[idx[j + 1]] == x[idx[i]] {
            j += 1;
        }
        let r = (i + j) as f64 / 2.0 + 1.0;
        for &k in &idx[i..=j] {
            ranks[k] = r;
        }
        i = j + 1;
    }
    ranks
}

/// Spearman correlation (Pearson on average ranks). `None` when either side is constant or the
/// lengths differ or are below 2.
pub fn spearman(x: &[f64], y: &[f64]) -> Option<f64> {
    if x.len() != y.len() || x.len() < 2 {
        return None;
    }
    let (rx, ry) = (average_ranks(x), average_ranks(y));
    let n = x.len() as f64;
    let (mx, my) = (rx.iter().sum::<f64>() / n, ry.iter().sum::<f64>() / n);
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in rx.iter().zip(&ry) {
        sxy += (a - mx) * (b - my);
        sxx += (a - mx) * (a - mx);
        syy += (b - my) * (b - my);
    }
    if sxx == 0.0 || syy == 0.0 {
        return None;
    }
    Some(sxy / (sxx * syy).sqrt())
}

/// Mean natural-log probability of the content words of `examples` (sentence tokens other than
/// the mask, plus candidate words) under each corpus. Words missing from a corpus get
/// [`UNIGRAM_FLOOR`]; words unknown to every corpus are treated as content words.
pub fn corpus_log_probs(examples: &[Example], unigram: &UnigramTable) -> Result<BTreeMap<String, f64>> {
    if unigram.corpora.len() < 2 {
        return Err(MetricError::Unigram(format!("need two corpora, found {}", unigram.corpora.len())));
    }
    let mut words = Vec::new();
    for e in examples {
        words.extend(e.tokens.iter().filter(|t| t.as_str() != MASK).map(|t| t.to_lowercase()));
        for c in &e.candidates {
            words.extend(crate::text::words(c).into_iter().map(|w| w.to_lowercase()));
        }
    }
    words.retain(|w| unigram.is_content(w).unwrap_or(true));
    if words.is_empty() {
        return Err(MetricError::Unigram("no content words".into()));
    }
    let mut floored = 0usize;
    let mut out = BTreeMap::new();
    for (id, table) in &unigram.corpora {
        let total: f64 = words
            .iter()
            .map(|w| {
                let p = table.get(w).map(|e| e.prob).filter(|&p| p > 0.0).unwrap_or_else(|| {
                    floored += 1;
                    UNIGRAM_FLOOR
                });
                p.max(UNIGRAM_FLOOR).ln()
            })
            .sum();
        out.insert(id.clone(), total / words.len() as f64);
    }
    if floored > 0 {
        log::info!("unigram analysis: {floored} word lookups floored at {UNIGRAM_FLOOR}");
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorrelationReport {
    pub corpus_a: String,
    pub corpus_b: String,
    /// Per probe: mean log probability under (a, b) and whether model A won.
    pub probes: BTreeMap<String, (f64, f64, bool)>,
    pub spearman: Option<f64>,
}

/// Correlates "corpus A gives the dev set higher mean log probability" with "model A wins" across
/// probes. `winners` maps probe → true when the model trained on corpus A scored higher.
pub fn unigram_correlation(
    dev_sets: &BTreeMap<String, Vec<Example>>,
    unigram: &UnigramTable,
    corpus_a: &str,
    corpus_b: &str,
    winners: &BTreeMap<String, bool>,
) -> Result<CorrelationReport> {
    for c in [corpus_a, corpus_b] {
        if !unigram.corpora.contains_key(c) {
            return Err(MetricError::Unigram(format!("unknown corpus {c:?}")));
        }
    }
    let mut probes = BTreeMap::new();
    let (mut pref, mut win) = (Vec::new(), Vec::new());
    for (probe, exs) in dev_sets {
        let Some(&w) = winners.get(probe) else { continue };
        let lp = corpus_log_probs(exs, unigram)?;
        let (a, b) = (lp[corpus_a], lp[corpus_b]);
        pref.push(f64::from(u8::from(a > b)));
        win.push(f64::from(u8::from(w)));
        probes.insert(probe.clone(), (a, b, w));
    }
    Ok(CorrelationReport { corpus_a: corpus_a.into(), corpus_b: corpus_b.into(), probes, spearman: spearman(&pref, &win) })
}

#[cfg(test)]
mod tests;
