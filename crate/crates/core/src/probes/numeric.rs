//! Comparison probes: age comparison and its perturbations, multi-hop age comparison, object sizes.

use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::Rng;

use super::templates::*;
use super::*;
use crate::util;

pub const AGE_TRAIN: RangeInclusive<i64> = 43..=120;
pub const AGE_EVAL: RangeInclusive<i64> = 15..=38;
pub const YEARS: RangeInclusive<i64> = 1920..=2000;
pub const OUT_OF_RANGE_TRAIN: RangeInclusive<i64> = 121..=214;
pub const OUT_OF_RANGE_EVAL: RangeInclusive<i64> = 215..=260;

/// Gold for the age template: the first person is older when their age is larger.
pub fn age_gold(a1: i64, a2: i64) -> usize {
    if a1 > a2 {
        0
    } else {
        1
    }
}

/// Gold for the birth-year template: born earlier means older.
pub fn birth_year_gold(y1: i64, y2: i64) -> usize {
    if y1 < y2 {
        0
    } else {
        1
    }
}

/// Distinct ordered pairs from `range`, shuffled.
fn ordered_pairs(range: RangeInclusive<i64>, rng: &mut impl Rng) -> Vec<(i64, i64)> {
    let mut v: Vec<(i64, i64)> = range.clone().flat_map(|a| range.clone().filter(move |&b| b != a).map(move |b| (a, b))).collect();
    v.shuffle(rng);
    v
}

fn strs(a: &[&str]) -> Vec<String> {
    a.iter().map(|s| s.to_string()).collect()
}

pub(super) fn age_comparison(variant: &str, cfg: &GenConfig, counts: SplitCounts, seed: u64) -> Result<(Vec<Example>, Vec<Example>)> {
    let p = ProbeId::AgeComparison;
    let (template_id, template, slots, gold_fn): (&str, &str, [&str; 2], fn(i64, i64) -> usize) = match variant {
        "birth-year" | "ages-in-year-template" => ("birth-year", BIRTH_YEAR, ["YEAR-1", "YEAR-2"], birth_year_gold),
        _ => ("age", AGE, ["AGE-1", "AGE-2"], age_gold),
    };
    let template = cfg.template(template_id, template);
    let mut rng = util::rng(seed, &format!("{p}/{variant}"));
    let (train_pairs, eval_pairs) = match variant {
        // years share one range; train and eval are disjoint by pair
        "birth-year" | "years-in-age-template" => {
            let all = ordered_pairs(YEARS, &mut rng);
            let n_eval = match counts.eval {
                Count::Exactly(n) | Count::AtMost(n) => n.min(all.len() / 2),
                Count::All => all.len() / 10,
            };
            (all[n_eval..].to_vec(), all[..n_eval].to_vec())
        }
        "out-of-range" => (ordered_pairs(OUT_OF_RANGE_TRAIN, &mut rng), ordered_pairs(OUT_OF_RANGE_EVAL, &mut rng)),
        _ => (ordered_pairs(AGE_TRAIN, &mut rng), ordered_pairs(AGE_EVAL, &mut rng)),
    };
    let build = |pairs: Vec<(i64, i64)>| -> Vec<Example> {
        pairs
            .into_iter()
            .map(|(a, b)| {
                let (sa, sb) = (a.to_string(), b.to_string());
                let r = render(template, &[(slots[0], &sa), (slots[1], &sb)]);
                mlm_example(template_id, r, strs(&AGE_ANSWERS), gold_fn(a, b))
            })
            .collect()
    };
    let train = counts.train.take(p, "train", train_pairs)?;
    let eval = counts.eval.take(p, "eval", eval_pairs)?;
    Ok((build(train), build(eval)))
}

/// Ordinal position of the oldest of three distinct ages.
pub fn multihop_gold(ages: [i64; 3]) -> usize {
    let mut best = 0;
    for i in 1..3 {
        if ages[i] > ages[best] {
            best = i;
        }
    }
    best
}

fn distinct_triples(range: RangeInclusive<i64>, n: usize, rng: &mut impl Rng) -> Vec<[i64; 3]> {
    let lo = *range.start();
    let width = (range.end() - lo + 1) as usize;
    let total = width * (width - 1) * (width - 2);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    while out.len() < n.min(total) {
        let t = [rng.gen_range(range.clone()), rng.gen_range(range.clone()), rng.gen_range(range.clone())];
        if t[0] != t[1] && t[1] != t[2] && t[0] != t[2] && seen.insert(t) {
            out.push(t);
        }
    }
    out
}

pub(super) fn multihop(cfg: &GenConfig, counts: SplitCounts, seed: u64) -> Result<(Vec<Example>, Vec<Example>)> {
    let p = ProbeId::MultihopComparison;
    let template = cfg.template("multihop", MULTIHOP);
    let mut rng = util::rng(seed, p.as_str());
    let want = |c: Count| match c {
        Count::Exactly(n) | Count::AtMost(n) => n,
        Count::All => usize::MAX,
    };
    let train = distinct_triples(AGE_TRAIN, want(counts.train), &mut rng);
    let eval = distinct_triples(AGE_EVAL, want(counts.eval), &mut rng);
    let build = |ts: Vec<[i64; 3]>| -> Vec<Example> {
        ts.into_iter()
            .map(|t| {
                let s: Vec<String> = t.iter().map(|a| a.to_string()).collect();
                let r = render(template, &[("A1", &s[0]), ("A2", &s[1]), ("A3", &s[2])]);
                mlm_example("multihop", r, strs(&MULTIHOP_ANSWERS), multihop_gold(t))
            })
            .collect()
    };
    let train = counts.train.take(p, "train", train)?;
    let eval = counts.eval.take(p, "eval", eval)?;
    Ok((build(train), build(eval)))
}

/// Concepts of `tree` with a size attribute, in name order.
pub fn sized_concepts<'a>(kb: &'a KbStore, tree: &str) -> Vec<&'a crate::kb::NumericAttribute> {
    kb.numeric.iter().filter(|n| n.attribute == "size" && kb.tree_of(&n.concept) == Some(tree)).collect()
}

pub(super) fn objects(kb: &KbStore, cfg: &GenConfig, counts: SplitCounts, seed: u64) -> Result<(Vec<Example>, Vec<Example>)> {
    let p = ProbeId::ObjectsComparison;
    let template = cfg.template("objects", OBJECTS);
    let mut rng = util::rng(seed, p.as_str());
    let mut pairs = |tree: &str| {
        let items = sized_concepts(kb, tree);
        let mut v = Vec::new();
        for a in &items {
            for b in &items {
                if a.bucket != b.bucket {
                    v.push((*a, *b));
                }
            }
        }
        v.shuffle(&mut rng);
        v
    };
    let train = counts.train.take(p, "train", pairs("animal"))?;
    let eval = counts.eval.take(p, "eval", pairs("object"))?;
    let build = |ps: Vec<(&crate::kb::NumericAttribute, &crate::kb::NumericAttribute)>| -> Vec<Example> {
        ps.into_iter()
            .map(|(a, b)| {
                let r = render(template, &[("OBJ-1", &a.concept), ("OBJ-2", &b.concept)]);
                let gold = if a.bucket > b.bucket { 0 } else { 1 };
                mlm_example("objects", r, strs(&OBJECTS_ANSWERS), gold)
            })
            .collect()
    };
    Ok((build(train), build(eval)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn published_age_example_is_younger() {
        assert_eq!(AGE_ANSWERS[age_gold(21, 35)], "younger");
        assert_eq!(AGE_ANSWERS[birth_year_gold(1980, 2000)], "older");
    }

    #[test]
    fn published_multihop_example_is_first() {
        assert_eq!(MULTIHOP_ANSWERS[multihop_gold([83, 63, 56])], "first");
        assert_eq!(multihop_gold([1, 3, 2]), 1);
        assert_eq!(multihop_gold([1, 2, 3]), 2);
    }

    #[test]
    fn age_dataset_respects_ranges_and_excludes_ties() {
        let (tr, ev) = age_comparison("standard", &GenConfig::default(), default_counts(ProbeId::AgeComparison), 1).unwrap();
        assert_eq!((tr.len(), ev.len()), (4000, 500));
        for (exs, range) in [(&tr, AGE_TRAIN), (&ev, AGE_EVAL)] {
            for e in exs.iter() {
                let a: i64 = e.argument("AGE-1").unwrap().parse().unwrap();
                let b: i64 = e.argument("AGE-2").unwrap().parse().unwrap();
                assert_ne!(a, b);
                assert!(range.contains(&a) && range.contains(&b));
            }
        }
    }

    #[test]
    fn birth_year_variant_splits_by_pair() {
        let (tr, ev) = age_comparison("birth-year", &GenConfig::default(), default_counts(ProbeId::AgeComparison), 1).unwrap();
        assert_eq!((tr.len(), ev.len()), (4000, 500));
        let key = |e: &Example| (e.argument("YEAR-1").unwrap().to_string(), e.argument("YEAR-2").unwrap().to_string());
        let t: BTreeSet<_> = tr.iter().map(key).collect();
        assert!(ev.iter().all(|e| !t.contains(&key(e))));
    }
}
