//! Probe dataset synthesis: template rendering, gold labelling, distractor sampling and
//! disjoint train/eval splits.

mod concepts;
mod encyc;
mod numeric;
pub mod templates;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::kb::{KbError, KbStore};
use crate::text::{self, MASK};

pub use concepts::{property_phrase, taxonomy_roles};
pub use templates::TemplateSpec;

#[derive(Debug, Error)]
pub enum ProbeError {
    #[error("unknown probe {0:?}; registered probes: {list}", list = registry_listing())]
    UnknownProbe(String),
    #[error("probe {probe} has no variant {variant:?}; available: {available}")]
    UnknownVariant { probe: ProbeId, variant: String, available: String },
    #[error("{probe}: not enough fixture records for the {split} split: requested {requested}, available {available}")]
    Shortfall { probe: ProbeId, split: &'static str, requested: usize, available: usize },
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("invalid example: {0}")]
    Example(String),
    #[error("malformed dataset file: {0}")]
    Format(String),
    #[error(transparent)]
    Kb(#[from] KbError),
}

pub type Result<T> = std::result::Result<T, ProbeError>;

pub fn registry_listing() -> String {
    ProbeId::ALL.iter().map(|p| p.as_str()).collect::<Vec<_>>().join(", ")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Setup {
    #[serde(rename = "mc-mlm")]
    McMlm,
    #[serde(rename = "mc-qa")]
    McQa,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProbeId {
    AgeComparison,
    ObjectsComparison,
    AlwaysNever,
    AntonymNegation,
    PropertyConjunction,
    TaxonomyConjunction,
    EncyclopedicComposition,
    MultihopComparison,
    MultiChoiceLm,
    LexicalSemantic,
    SetNegation,
    EncyclopedicLongTail,
}

impl ProbeId {
    pub const ALL: [ProbeId; 12] = [
        ProbeId::AgeComparison,
        ProbeId::ObjectsComparison,
        ProbeId::AlwaysNever,
        ProbeId::AntonymNegation,
        ProbeId::PropertyConjunction,
        ProbeId::TaxonomyConjunction,
        ProbeId::EncyclopedicComposition,
        ProbeId::MultihopComparison,
        ProbeId::MultiChoiceLm,
        ProbeId::LexicalSemantic,
        ProbeId::SetNegation,
        ProbeId::EncyclopedicLongTail,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ProbeId::AgeComparison => "age-comparison",
            ProbeId::ObjectsComparison => "objects-comparison",
            ProbeId::AlwaysNever => "always-never",
            ProbeId::AntonymNegation => "antonym-negation",
            ProbeId::PropertyConjunction => "property-conjunction",
            ProbeId::TaxonomyConjunction => "taxonomy-conjunction",
            ProbeId::EncyclopedicComposition => "encyclopedic-composition",
            ProbeId::MultihopComparison => "multihop-comparison",
            ProbeId::MultiChoiceLm => "multi-choice-lm",
            ProbeId::LexicalSemantic => "lexical-semantic",
            ProbeId::SetNegation => "set-negation",
            ProbeId::EncyclopedicLongTail => "encyclopedic-long-tail",
        }
    }

    pub fn setup(self) -> Setup {
        match self {
            ProbeId::PropertyConjunction | ProbeId::EncyclopedicComposition => Setup::McQa,
            _ => Setup::McMlm,
        }
    }

    /// Task-specific variants beyond `standard` and the two language controls.
    pub fn extra_variants(self) -> &'static [&'static str] {
        match self {
            ProbeId::AgeComparison => &["birth-year", "ages-in-year-template", "years-in-age-template", "out-of-range"],
            ProbeId::PropertyConjunction => &["but-not"],
            ProbeId::EncyclopedicComposition => &["single-hop"],
            _ => &[],
        }
    }

    pub fn variants(self) -> Vec<&'static str> {
        let mut v = vec![STANDARD, NO_LANGUAGE, PERTURBED_LANGUAGE];
        v.extend_from_slice(self.extra_variants());
        v
    }
}

impl fmt::Display for ProbeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ProbeId {
    type Err = ProbeError;
    fn from_str(s: &str) -> Result<Self> {
        ProbeId::ALL.iter().copied().find(|p| p.as_str() == s).ok_or_else(|| ProbeError::UnknownProbe(s.to_string()))
    }
}

pub const STANDARD: &str = "standard";
pub const NO_LANGUAGE: &str = "no-language";
pub const PERTURBED_LANGUAGE: &str = "perturbed-language";

/// A named slot value and the half-open token span it occupies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Argument {
    pub name: String,
    pub value: String,
    pub span: [usize; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Example {
    pub setup: Setup,
    /// Statement tokens with one `[MASK]` (MC-MLM) or question tokens (MC-QA).
    pub tokens: Vec<String>,
    pub candidates: Vec<String>,
    pub gold: usize,
    pub arguments: Vec<Argument>,
    pub template_id: String,
}

impl Example {
    pub fn argument(&self, name: &str) -> Option<&str> {
        self.arguments.iter().find(|a| a.name == name).map(|a| a.value.as_str())
    }

    pub fn mask_count(&self) -> usize {
        self.tokens.iter().filter(|t| *t == MASK).count()
    }

    pub fn validate(&self) -> Result<()> {
        let k = self.candidates.len();
        let fail = |m: String| Err(ProbeError::Example(format!("{m} in {:?}", text::join(&self.tokens))));
        if !(2..=5).contains(&k) {
            return fail(format!("K = {k} outside 2..=5"));
        }
        if self.gold >= k {
            return fail(format!("gold {} >= K", self.gold));
        }
        let distinct: BTreeSet<_> = self.candidates.iter().collect();
        if distinct.len() != k {
            return fail(format!("duplicate candidates {:?}", self.candidates));
        }
        match self.setup {
            Setup::McMlm if self.mask_count() != 1 => fail(format!("{} mask slots", self.mask_count())),
            Setup::McQa if self.mask_count() != 0 => fail("mask slot in a question".into()),
            _ => {
                for a in &self.arguments {
                    if a.span[0] > a.span[1] || a.span[1] > self.tokens.len() {
                        return fail(format!("argument {} span out of range", a.name));
                    }
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeDataset {
    pub probe: ProbeId,
    pub variant: String,
    pub seed: u64,
    pub train: Vec<Example>,
    pub eval: Vec<Example>,
}

#[derive(Serialize, Deserialize)]
struct Header {
    kind: String,
    probe: ProbeId,
    variant: String,
    seed: u64,
    train: usize,
    eval: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    manifest_hash: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct Line {
    split: String,
    variant: String,
    #[serde(flatten)]
    example: Example,
}

impl ProbeDataset {
    pub fn len(&self) -> usize {
        self.train.len() + self.eval.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn setup(&self) -> Setup {
        self.probe.setup()
    }

    /// One JSON object per line: a header followed by the train then eval examples.
    pub fn to_jsonl(&self, manifest_hash: Option<&str>) -> String {
        let header = Header {
            kind: "probe-dataset".into(),
            probe: self.probe,
            variant: self.variant.clone(),
            seed: self.seed,
            train: self.train.len(),
            eval: self.eval.len(),
            manifest_hash: manifest_hash.map(str::to_string),
        };
        let mut out = serde_json::to_string(&header).unwrap();
        out.push('\n');
        for (split, exs) in [("train", &self.train), ("eval", &self.eval)] {
            for ex in exs {
                let line = Line { split: split.into(), variant: self.variant.clone(), example: ex.clone() };
                out.push_str(&serde_json::to_string(&line).unwrap());
                out.push('\n');
            }
        }
        out
    }

    /// Parses the output of [`ProbeDataset::to_jsonl`], returning the embedded manifest hash.
    pub fn from_jsonl(s: &str) -> Result<(ProbeDataset, Option<String>)> {
        let mut lines = s.lines().filter(|l| !l.trim().is_empty());
        let first = lines.next().ok_or_else(|| ProbeError::Format("empty file".into()))?;
        let h: Header = serde_json::from_str(first).map_err(|e| ProbeError::Format(format!("header: {e}")))?;
        let mut ds = ProbeDataset { probe: h.probe, variant: h.variant, seed: h.seed, train: vec![], eval: vec![] };
        for (i, l) in lines.enumerate() {
            let line: Line = serde_json::from_str(l).map_err(|e| ProbeError::Format(format!("line {}: {e}", i + 2)))?;
            match line.split.as_str() {
                "train" => ds.train.push(line.example),
                "eval" => ds.eval.push(line.example),
                other => return Err(ProbeError::Format(format!("unknown split {other:?}"))),
            }
        }
        if ds.train.len() != h.train || ds.eval.len() != h.eval {
            return Err(ProbeError::Format("example counts disagree with header".into()));
        }
        Ok((ds, h.manifest_hash))
    }
}

/// Requested split size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Count {
    /// Every example the fixtures support.
    All,
    /// Exactly this many; fewer available is a shortfall error.
    Exactly(usize),
    /// Up to this many.
    AtMost(usize),
}

impl Count {
    pub(crate) fn take<T>(self, probe: ProbeId, split: &'static str, mut items: Vec<T>) -> Result<Vec<T>> {
        match self {
            Count::All => Ok(items),
            Count::Exactly(n) if items.len() < n => {
                Err(ProbeError::Shortfall { probe, split, requested: n, available: items.len() })
            }
            Count::Exactly(n) | Count::AtMost(n) => {
                items.truncate(n);
                Ok(items)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitCounts {
    pub train: Count,
    pub eval: Count,
}

pub fn default_counts(probe: ProbeId) -> SplitCounts {
    use Count::*;
    let (train, eval) = match probe {
        ProbeId::AgeComparison | ProbeId::MultihopComparison | ProbeId::ObjectsComparison => (Exactly(4000), Exactly(500)),
        ProbeId::AntonymNegation => (Exactly(4000), Exactly(500)),
        ProbeId::AlwaysNever => (Exactly(1000), Exactly(300)),
        _ => (AtMost(4000), AtMost(500)),
    };
    SplitCounts { train, eval }
}

/// Generation settings. Everything has a default; the whole struct is recorded in run manifests.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct GenConfig {
    #[serde(default)]
    pub counts: BTreeMap<ProbeId, SplitCounts>,
    /// Minimum unigram probability (in any corpus) for every word of a lexical pair or property
    /// object. `None` keeps everything.
    #[serde(default)]
    pub min_word_frequency: Option<f64>,
    /// Alternate phrasings keyed by template id. Must keep the slots and the single `[MASK]`.
    #[serde(default)]
    pub templates: BTreeMap<String, String>,
}

impl GenConfig {
    pub fn counts(&self, probe: ProbeId) -> SplitCounts {
        self.counts.get(&probe).copied().unwrap_or_else(|| default_counts(probe))
    }

    pub(crate) fn template<'a>(&'a self, id: &str, default: &'a str) -> &'a str {
        self.templates.get(id).map(String::as_str).unwrap_or(default)
    }

    pub(crate) fn frequent(&self, kb: &KbStore, phrase: &str) -> bool {
        let Some(min) = self.min_word_frequency else { return true };
        text::words(phrase).iter().all(|w| {
            kb.unigram.corpora.values().any(|c| c.get(&w.to_lowercase()).is_some_and(|e| e.prob >= min))
        })
    }
}

/// Tokens and argument spans of a template whose slots are filled in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rendered {
    pub tokens: Vec<String>,
    pub arguments: Vec<Argument>,
}

/// Fills slot names occurring verbatim in `template`. Longer names win at a shared position,
/// so `SUBJ` is not read as `S` + `UBJ` or `OBJ`.
pub fn render(template: &str, slots: &[(&str, &str)]) -> Rendered {
    let mut order: Vec<&(&str, &str)> = slots.iter().collect();
    order.sort_by_key(|(n, _)| std::cmp::Reverse(n.len()));
    let mut tokens = Vec::new();
    let mut arguments = Vec::new();
    let mut literal = String::new();
    let mut rest = template;
    while !rest.is_empty() {
        if let Some((name, value)) = order.iter().find(|(n, _)| rest.starts_with(*n)) {
            tokens.extend(text::words(&literal));
            literal.clear();
            let start = tokens.len();
            tokens.extend(text::words(value));
            arguments.push(Argument { name: name.to_string(), value: value.to_string(), span: [start, tokens.len()] });
            rest = &rest[name.len()..];
        } else {
            let c = rest.chars().next().unwrap();
            literal.push(c);
            rest = &rest[c.len_utf8()..];
        }
    }
    tokens.extend(text::words(&literal));
    Rendered { tokens, arguments }
}

pub(crate) fn mlm_example(template_id: &str, r: Rendered, candidates: Vec<String>, gold: usize) -> Example {
    Example { setup: Setup::McMlm, tokens: r.tokens, candidates, gold, arguments: r.arguments, template_id: template_id.into() }
}

pub(crate) fn qa_example(template_id: &str, r: Rendered, candidates: Vec<String>, gold: usize) -> Example {
    Example { setup: Setup::McQa, tokens: r.tokens, candidates, gold, arguments: r.arguments, template_id: template_id.into() }
}

/// Puts `gold` among `distractors` at a random position.
pub(crate) fn shuffle_in<R: rand::Rng>(rng: &mut R, gold: String, distractors: Vec<String>) -> (Vec<String>, usize) {
    let mut c = distractors;
    let pos = rng.gen_range(0..=c.len());
    c.insert(pos, gold);
    (c, pos)
}

/// Groups `records` by key and assigns whole groups to train or eval. The first
/// `round(ratio * #keys)` keys of a seeded shuffle go to train.
pub fn split_disjoint<T, K: Ord + Clone>(
    records: Vec<T>,
    key_fn: impl Fn(&T) -> K,
    ratio: f64,
    seed: u64,
) -> Result<(Vec<T>, Vec<T>)> {
    if !(ratio > 0.0 && ratio < 1.0) {
        return Err(ProbeError::Argument(format!("split ratio {ratio} outside (0, 1)")));
    }
    if records.is_empty() {
        return Err(ProbeError::Argument("cannot split an empty record list".into()));
    }
    let mut groups: BTreeMap<K, Vec<T>> = BTreeMap::new();
    for r in records {
        groups.entry(key_fn(&r)).or_default().push(r);
    }
    let mut keys: Vec<K> = groups.keys().cloned().collect();
    keys.shuffle(&mut crate::util::rng(seed, "split"));
    let n_train = ((keys.len() as f64) * ratio).round() as usize;
    let train_keys: BTreeSet<K> = keys[..n_train].iter().cloned().collect();
    let (mut train, mut eval) = (Vec::new(), Vec::new());
    for (k, v) in groups {
        if train_keys.contains(&k) {
            train.extend(v);
        } else {
            eval.extend(v);
        }
    }
    Ok((train, eval))
}

/// Builds the standard dataset of `probe`.
pub fn generate(probe: ProbeId, kb: &KbStore, config: &GenConfig, seed: u64) -> Result<ProbeDataset> {
    generate_variant(probe, STANDARD, kb, config, seed)
}

/// Builds `standard` or a task-specific variant. Language controls live in [`crate::controls`].
pub fn generate_variant(probe: ProbeId, variant: &str, kb: &KbStore, config: &GenConfig, seed: u64) -> Result<ProbeDataset> {
    if variant != STANDARD && !probe.extra_variants().contains(&variant) {
        return Err(ProbeError::UnknownVariant { probe, variant: variant.into(), available: probe.variants().join(", ") });
    }
    let counts = config.counts(probe);
    let (train, eval) = match probe {
        ProbeId::AgeComparison => numeric::age_comparison(variant, config, counts, seed)?,
        ProbeId::MultihopComparison => numeric::multihop(config, counts, seed)?,
        ProbeId::ObjectsComparison => numeric::objects(kb, config, counts, seed)?,
        ProbeId::AlwaysNever => concepts::always_never(kb, config, counts, seed)?,
        ProbeId::AntonymNegation => concepts::antonym_negation(kb, config, counts, seed)?,
        ProbeId::PropertyConjunction => concepts::property_conjunction(kb, config, counts, seed, variant == "but-not")?,
        ProbeId::TaxonomyConjunction => concepts::taxonomy_conjunction(kb, config, counts, seed)?,
        ProbeId::LexicalSemantic => concepts::lexical(kb, config, counts, seed, false)?,
        ProbeId::SetNegation => concepts::lexical(kb, config, counts, seed, true)?,
        ProbeId::MultiChoiceLm => concepts::multi_choice_lm(kb, config, counts, seed)?,
        ProbeId::EncyclopedicComposition if variant == "single-hop" => encyc::single_hop(kb, config, seed)?,
        ProbeId::EncyclopedicComposition => encyc::composition(kb, config, counts, seed)?,
        ProbeId::EncyclopedicLongTail => encyc::long_tail(kb, config, counts, seed)?,
    };
    for ex in train.iter().chain(&eval) {
        ex.validate()?;
    }
    Ok(ProbeDataset { probe, variant: variant.into(), seed, train, eval })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_records_argument_spans() {
        let r = render(templates::AGE, &[("AGE-1", "21"), ("AGE-2", "35")]);
        assert_eq!(r.tokens[1], "21");
        assert_eq!(r.arguments[0].span, [1, 2]);
        let a2 = &r.arguments[1];
        assert_eq!(&r.tokens[a2.span[0]..a2.span[1]], &["35".to_string()]);
        assert_eq!(r.tokens.iter().filter(|t| *t == MASK).count(), 1);
    }

    #[test]
    fn render_prefers_longer_slot_names() {
        let r = render("OBJ is [MASK] part of a SUBJ 's diet .", &[("SUBJ", "giant panda"), ("OBJ", "bamboo")]);
        assert_eq!(text::join(&r.tokens), "bamboo is [MASK] part of a giant panda 's diet .");
        assert_eq!(r.arguments[1].span, [6, 8]);
    }

    #[test]
    fn split_ten_distinct_keys() {
        let (tr, ev) = split_disjoint((0..10).collect(), |x: &i32| *x, 0.8, 3).unwrap();
        assert_eq!((tr.len(), ev.len()), (8, 2));
        assert!(tr.iter().all(|x| !ev.contains(x)));
    }

    #[test]
    fn split_keeps_key_groups_together() {
        let recs: Vec<(u8, u32)> = (0..40).map(|i| ((i % 5) as u8, i)).collect();
        for seed in 0..20 {
            let (tr, ev) = split_disjoint(recs.clone(), |r| r.0, 0.6, seed).unwrap();
            let ktr: BTreeSet<u8> = tr.iter().map(|r| r.0).collect();
            let kev: BTreeSet<u8> = ev.iter().map(|r| r.0).collect();
            assert!(ktr.is_disjoint(&kev));
            assert_eq!(tr.len() + ev.len(), 40);
        }
    }

    #[test]
    fn split_rejects_bad_ratio_and_empty_input() {
        assert!(split_disjoint(vec![1], |x: &i32| *x, 1.0, 0).is_err());
        assert!(split_disjoint(vec![1], |x: &i32| *x, 0.0, 0).is_err());
        assert!(split_disjoint(Vec::<i32>::new(), |x| *x, 0.5, 0).is_err());
    }

    #[test]
    fn unknown_probe_lists_registry() {
        let e = "foo".parse::<ProbeId>().unwrap_err().to_string();
        assert!(e.contains("age-comparison") && e.contains("set-negation"), "{e}");
    }

    #[test]
    fn validate_catches_bad_examples() {
        let r = render(templates::AGE, &[("AGE-1", "21"), ("AGE-2", "35")]);
        let mut ex = mlm_example("age", r, vec!["older".into(), "younger".into()], 1);
        assert!(ex.validate().is_ok());
        ex.gold = 2;
        assert!(ex.validate().is_err());
        ex.gold = 0;
        ex.candidates[1] = "older".into();
        assert!(ex.validate().is_err());
    }
}
