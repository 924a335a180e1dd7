//! Language controls: No Language (arguments and mask only, nonsense answers) and Perturbed
//! Language (targeted template words replaced by nonsense words).

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::probes::{Argument, Example, ProbeDataset, ProbeId, Setup, NO_LANGUAGE, PERTURBED_LANGUAGE};
use crate::text::MASK;
use crate::util;

pub const NONSENSE: [&str; 10] = ["blah", "ya", "foo", "snap", "woo", "boo", "da", "wee", "foe", "fee"];

#[derive(Debug, Error, PartialEq)]
pub enum ControlError {
    #[error("example {index} of the {split} split declares no arguments; cannot reduce it to arguments only")]
    NoArguments { split: &'static str, index: usize },
    #[error("targeted word {word:?} does not occur in template {template_id:?}")]
    TargetNotInTemplate { word: String, template_id: String },
    #[error("example has {0} candidates but the nonsense lexicon has only ten words")]
    TooManyCandidates(usize),
}

fn reduce(ex: &Example, split: &'static str, index: usize) -> Result<Example, ControlError> {
    if ex.arguments.is_empty() {
        return Err(ControlError::NoArguments { split, index });
    }
    let mut keep: Vec<(usize, Option<usize>)> = Vec::new();
    for (i, t) in ex.tokens.iter().enumerate() {
        let owner = ex.arguments.iter().position(|a| a.span[0] <= i && i < a.span[1]);
        if owner.is_some() || (ex.setup == Setup::McMlm && t == MASK) {
            keep.push((i, owner));
        }
    }
    let tokens: Vec<String> = keep.iter().map(|(i, _)| ex.tokens[*i].clone()).collect();
    let arguments = ex
        .arguments
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let pos: Vec<usize> = keep.iter().enumerate().filter(|(_, (_, o))| *o == Some(ai)).map(|(j, _)| j).collect();
            let span = match (pos.first(), pos.last()) {
                (Some(s), Some(e)) => [*s, e + 1],
                _ => [0, 0],
            };
            Argument { name: a.name.clone(), value: a.value.clone(), span }
        })
        .collect();
    let candidates = match ex.setup {
        Setup::McMlm => {
            if ex.candidates.len() > NONSENSE.len() {
                return Err(ControlError::TooManyCandidates(ex.candidates.len()));
            }
            NONSENSE[..ex.candidates.len()].iter().map(|s| s.to_string()).collect()
        }
        Setup::McQa => ex.candidates.clone(),
    };
    Ok(Example { setup: ex.setup, tokens, candidates, gold: ex.gold, arguments, template_id: ex.template_id.clone() })
}

/// Reduces every example to its argument tokens (plus the mask for MC-MLM). MC-MLM answers map
/// to nonsense words by position: first to `blah`, second to `ya`, third to `foo`, and so on.
/// Applying it to its own output changes nothing.
pub fn no_language(ds: &ProbeDataset, _seed: u64) -> Result<ProbeDataset, ControlError> {
    let map = |exs: &[Example], split: &'static str| -> Result<Vec<Example>, ControlError> {
        exs.iter().enumerate().map(|(i, e)| reduce(e, split, i)).collect()
    };
    Ok(ProbeDataset {
        probe: ds.probe,
        variant: NO_LANGUAGE.into(),
        seed: ds.seed,
        train: map(&ds.train, "train")?,
        eval: map(&ds.eval, "eval")?,
    })
}

/// Words to replace, by template id with a fallback list.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Targets {
    #[serde(default)]
    pub default: Vec<String>,
    #[serde(default)]
    pub per_template: BTreeMap<String, Vec<String>>,
}

impl Targets {
    pub fn uniform(words: &[&str]) -> Self {
        Targets { default: words.iter().map(|s| s.to_string()).collect(), per_template: BTreeMap::new() }
    }

    pub fn for_template(&self, id: &str) -> &[String] {
        self.per_template.get(id).unwrap_or(&self.default)
    }

    /// Defaults taken from the probe's template specs.
    pub fn defaults(probe: ProbeId, kb: &crate::kb::KbStore) -> Self {
        let mut t = Targets::default();
        for s in crate::probes::templates::template_specs(probe, kb) {
            t.per_template.insert(s.id, s.targeted_words);
        }
        t
    }
}

fn literal_positions(ex: &Example) -> impl Iterator<Item = usize> + '_ {
    (0..ex.tokens.len()).filter(|i| !ex.arguments.iter().any(|a| a.span[0] <= *i && *i < a.span[1]))
}

/// Replaces each occurrence of a targeted word outside argument spans by a nonsense word drawn
/// uniformly per occurrence from a per-example seeded stream. Candidates and gold are untouched.
pub fn perturbed_language(ds: &ProbeDataset, targets: &Targets, seed: u64) -> Result<ProbeDataset, ControlError> {
    // every template in the dataset must contain each of its targets
    let mut literal: BTreeMap<&str, BTreeSet<&str>> = BTreeMap::new();
    for ex in ds.train.iter().chain(&ds.eval) {
        let set = literal.entry(ex.template_id.as_str()).or_default();
        for i in literal_positions(ex) {
            set.insert(ex.tokens[i].as_str());
        }
    }
    for (id, words) in &literal {
        for w in targets.for_template(id) {
            if !words.contains(w.as_str()) {
                return Err(ControlError::TargetNotInTemplate { word: w.clone(), template_id: id.to_string() });
            }
        }
    }
    let map = |exs: &[Example], split: &str| -> Vec<Example> {
        exs.iter()
            .enumerate()
            .map(|(i, ex)| {
                let t = targets.for_template(&ex.template_id);
                if t.is_empty() {
                    return ex.clone();
                }
                let mut rng = util::rng(seed, &format!("perturb/{}/{split}/{i}", ds.probe));
                let mut out = ex.clone();
                for p in literal_positions(ex) {
                    if t.iter().any(|w| *w == ex.tokens[p]) {
                        out.tokens[p] = NONSENSE.choose(&mut rng).unwrap().to_string();
                    }
                }
                out
            })
            .collect()
    };
    Ok(ProbeDataset {
        probe: ds.probe,
        variant: PERTURBED_LANGUAGE.into(),
        seed: ds.seed,
        train: map(&ds.train, "train"),
        eval: map(&ds.eval, "eval"),
    })
}

/// Linear-head control: only the output projection is trained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HeadMode {
    Mlp,
    Linear,
}

impl HeadMode {
    pub fn as_str(self) -> &'static str {
        match self {
            HeadMode::Mlp => "mlp",
            HeadMode::Linear => "linear",
        }
    }
}

impl std::str::FromStr for HeadMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "mlp" => Ok(HeadMode::Mlp),
            "linear" => Ok(HeadMode::Linear),
            _ => Err(format!("unknown head mode {s:?} (expected mlp or linear)")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::probes::{render, templates::AGE, STANDARD};

    fn age_ds(pairs: &[(i64, i64)]) -> ProbeDataset {
        let exs = pairs
            .iter()
            .map(|(a, b)| {
                let r = render(AGE, &[("AGE-1", &a.to_string()), ("AGE-2", &b.to_string())]);
                Example {
                    setup: Setup::McMlm,
                    tokens: r.tokens,
                    candidates: vec!["older".into(), "younger".into()],
                    gold: if a > b { 0 } else { 1 },
                    arguments: r.arguments,
                    template_id: "age".into(),
                }
            })
            .collect();
        ProbeDataset { probe: ProbeId::AgeComparison, variant: STANDARD.into(), seed: 0, train: exs, eval: vec![] }
    }

    #[test]
    fn no_language_published_example() {
        let ds = no_language(&age_ds(&[(24, 55)]), 0).unwrap();
        let ex = &ds.train[0];
        assert_eq!(ex.tokens.join(" "), "24 [MASK] 55");
        assert_eq!(ex.candidates, vec!["blah", "ya"]);
        assert_eq!(ex.candidates[ex.gold], "ya");
    }

    #[test]
    fn no_language_is_idempotent() {
        let once = no_language(&age_ds(&[(24, 55), (90, 43)]), 0).unwrap();
        let twice = no_language(&once, 0).unwrap();
        assert_eq!(once, twice);
    }

    #[test]
    fn no_language_requires_arguments() {
        let mut ds = age_ds(&[(24, 55)]);
        ds.train[0].arguments.clear();
        assert_eq!(no_language(&ds, 0).unwrap_err(), ControlError::NoArguments { split: "train", index: 0 });
    }

    #[test]
    fn perturbed_age_template() {
        let ds = perturbed_language(&age_ds(&[(24, 55)]), &Targets::uniform(&["age", "than"]), 3).unwrap();
        let before = &age_ds(&[(24, 55)]).train[0].tokens;
        let after = &ds.train[0].tokens;
        let than = before.iter().position(|t| t == "than").unwrap();
        let age = before.iter().position(|t| t == "age").unwrap();
        assert!(NONSENSE.contains(&after[than].as_str()));
        assert!(NONSENSE.contains(&after[age].as_str()));
        for i in 0..before.len() {
            if i != than && i != age {
                assert_eq!(before[i], after[i]);
            }
        }
    }

    #[test]
    fn empty_targets_are_identity() {
        let ds = age_ds(&[(24, 55), (70, 60)]);
        let out = perturbed_language(&ds, &Targets::default(), 1).unwrap();
        assert_eq!(out.train, ds.train);
    }

    #[test]
    fn absent_target_is_a_configuration_error() {
        let err = perturbed_language(&age_ds(&[(24, 55)]), &Targets::uniform(&["banana"]), 1).unwrap_err();
        assert!(matches!(err, ControlError::TargetNotInTemplate { .. }));
    }
}
