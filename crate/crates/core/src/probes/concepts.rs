//! Probes built from concept triples and taxonomies, plus the fixture-driven Always-Never and
//! multi-choice cloze sets.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::{IteratorRandom, SliceRandom};
use rand::Rng;

use super::templates::*;
use super::*;
use crate::kb::Predicate;
use crate::util;

type Splits = (Vec<Example>, Vec<Example>);

fn strs(a: &[&str]) -> Vec<String> {
    a.iter().map(|s| s.to_string()).collect()
}

fn train_ratio(counts: SplitCounts, default: f64) -> f64 {
    match (counts.train, counts.eval) {
        (Count::Exactly(a), Count::Exactly(b)) if a + b > 0 => a as f64 / (a + b) as f64,
        _ => default,
    }
}

fn single_word(s: &str) -> bool {
    !s.contains(char::is_whitespace)
}

pub(super) fn always_never(kb: &KbStore, cfg: &GenConfig, counts: SplitCounts, seed: u64) -> Result<Splits> {
    let p = ProbeId::AlwaysNever;
    if kb.always_never.is_empty() {
        return Err(ProbeError::Shortfall { probe: p, split: "train", requested: 1, available: 0 });
    }
    let templates: BTreeMap<&str, &str> =
        kb.always_never_templates.iter().map(|t| (t.id.as_str(), cfg.template(&t.id, &t.text))).collect();
    let indexed: Vec<(usize, &crate::kb::AlwaysNeverRecord)> = kb.always_never.iter().enumerate().collect();
    let (tr, ev) = split_disjoint(indexed, |r| r.0, train_ratio(counts, 1000.0 / 1300.0), util::derive_seed(seed, p.as_str()))?;
    let build = |rs: Vec<(usize, &crate::kb::AlwaysNeverRecord)>, split: &'static str| -> Result<Vec<Example>> {
        let mut out: Vec<Example> = rs
            .into_iter()
            .map(|(_, r)| {
                let rendered = render(templates[r.template_id.as_str()], &[("SUBJ", &r.subject), ("OBJ", &r.object)]);
                let gold = FREQUENCY_ANSWERS.iter().position(|a| *a == r.label).expect("label validated on load");
                mlm_example(&r.template_id, rendered, strs(&FREQUENCY_ANSWERS), gold)
            })
            .collect();
        out.shuffle(&mut util::rng(seed, &format!("{p}/{split}")));
        let c = if split == "train" { counts.train } else { counts.eval };
        c.take(p, split, out)
    };
    Ok((build(tr, "train")?, build(ev, "eval")?))
}

pub(super) fn antonym_negation(kb: &KbStore, cfg: &GenConfig, counts: SplitCounts, seed: u64) -> Result<Splits> {
    let p = ProbeId::AntonymNegation;
    let mut rng = util::rng(seed, p.as_str());
    let mut per_class: Vec<Splits> = Vec::new();
    for (class, gold) in [(Predicate::Antonym, 0usize), (Predicate::Synonym, 1usize)] {
        let pairs: Vec<(String, String)> = kb
            .triples_with(class)
            .filter(|t| cfg.frequent(kb, &t.subject) && cfg.frequent(kb, &t.object))
            .map(|t| (t.subject.clone(), t.object.clone()))
            .collect();
        if pairs.is_empty() {
            return Err(ProbeError::Shortfall { probe: p, split: "train", requested: 1, available: 0 });
        }
        let (tr, ev) = split_disjoint(pairs, |pr| pr.clone(), 0.85, util::derive_seed(seed, class.as_str()))?;
        let expand = |prs: Vec<(String, String)>, rng: &mut rand_chacha::ChaCha8Rng| -> Vec<Example> {
            let mut v = Vec::new();
            for (a, b) in prs {
                for (w1, w2) in [(&a, &b), (&b, &a)] {
                    for (id, subj, verb) in NEGATION_FRAMES {
                        let t = negation_template(subj, verb);
                        let r = render(cfg.template(id, &t), &[("W-1", w1), ("W-2", w2)]);
                        v.push(mlm_example(id, r, strs(&NEGATION_ANSWERS), gold));
                    }
                }
            }
            v.shuffle(rng);
            v
        };
        let tr = expand(tr, &mut rng);
        let ev = expand(ev, &mut rng);
        per_class.push((tr, ev));
    }
    let halves = |c: Count, split: &'static str, a: Vec<Example>, b: Vec<Example>, rng: &mut rand_chacha::ChaCha8Rng| {
        let (na, nb) = match c {
            Count::Exactly(n) => (Count::Exactly(n / 2), Count::Exactly(n - n / 2)),
            Count::AtMost(n) => (Count::AtMost(n / 2), Count::AtMost(n - n / 2)),
            Count::All => (Count::All, Count::All),
        };
        let mut v = na.take(p, split, a)?;
        v.extend(nb.take(p, split, b)?);
        v.shuffle(rng);
        Ok::<_, ProbeError>(v)
    };
    let (ant_tr, ant_ev) = per_class.remove(0);
    let (syn_tr, syn_ev) = per_class.remove(0);
    let train = halves(counts.train, "train", ant_tr, syn_tr, &mut rng)?;
    let eval = halves(counts.eval, "eval", ant_ev, syn_ev, &mut rng)?;
    Ok((train, eval))
}

/// (predicate, object) properties of each concept, restricted to phrased predicates.
fn properties(kb: &KbStore, cfg: &GenConfig) -> BTreeMap<String, BTreeSet<(Predicate, String)>> {
    let mut m: BTreeMap<String, BTreeSet<(Predicate, String)>> = BTreeMap::new();
    for t in &kb.triples {
        if t.predicate.is_phrased() && cfg.frequent(kb, &t.object) {
            m.entry(t.subject.clone()).or_default().insert((t.predicate, t.object.clone()));
        }
    }
    m
}

pub fn property_phrase(p: Predicate, object: &str) -> String {
    let phrase = question_phrase(p).expect("phrased predicate");
    if phrase.is_empty() {
        object.to_string()
    } else {
        format!("{phrase} {object}")
    }
}

pub(super) fn property_conjunction(kb: &KbStore, cfg: &GenConfig, counts: SplitCounts, seed: u64, but_not: bool) -> Result<Splits> {
    let p = ProbeId::PropertyConjunction;
    let props = properties(kb, cfg);
    let concepts: Vec<String> = props.keys().cloned().collect();
    if concepts.is_empty() {
        return Err(ProbeError::Shortfall { probe: p, split: "train", requested: 1, available: 0 });
    }
    let (tr, ev) = split_disjoint(concepts, |c| c.clone(), 0.8, util::derive_seed(seed, p.as_str()))?;
    let (template_id, default) = if but_not { ("property-but-not", PROPERTY_BUT_NOT) } else { ("property-and", PROPERTY_AND) };
    let template = cfg.template(template_id, default);
    let build = |side: Vec<String>, split: &'static str| -> Result<Vec<Example>> {
        let mut rng = util::rng(seed, &format!("{p}/{split}"));
        let pool: BTreeSet<&String> = side.iter().collect();
        let mut out = Vec::new();
        for c in &side {
            let cp: Vec<&(Predicate, String)> = props[c].iter().collect();
            for i in 0..cp.len() {
                for j in i + 1..cp.len() {
                    let (a, b) = if rng.gen_bool(0.5) { (cp[i], cp[j]) } else { (cp[j], cp[i]) };
                    let only = |x: &(Predicate, String), y: &(Predicate, String)| -> Vec<&String> {
                        pool.iter().copied().filter(|d| *d != c && props[*d].contains(x) && !props[*d].contains(y)).collect()
                    };
                    let (da, db) = (only(a, b), only(b, a));
                    if da.is_empty() || db.is_empty() {
                        continue;
                    }
                    let d1 = da[rng.gen_range(0..da.len())].clone();
                    let d2 = db[rng.gen_range(0..db.len())].clone();
                    let (pa, pb) = (property_phrase(a.0, &a.1), property_phrase(b.0, &b.1));
                    let r = render(template, &[("P-1", &pa), ("P-2", &pb)]);
                    let mut cands = vec![c.clone(), d1.clone(), d2];
                    cands.shuffle(&mut rng);
                    let target = if but_not { &d1 } else { c };
                    let gold = cands.iter().position(|x| x == target).unwrap();
                    out.push(qa_example(template_id, r, cands, gold));
                }
            }
        }
        out.shuffle(&mut rng);
        let cnt = if split == "train" { counts.train } else { counts.eval };
        cnt.take(p, split, out)
    };
    Ok((build(tr, "train")?, build(ev, "eval")?))
}

pub const TAXONOMY_TRAIN_TREES: [&str; 3] = ["object", "plant", "person"];
pub const TAXONOMY_EVAL_TREES: [&str; 2] = ["food", "animal"];

/// Lowest common strict hypernym of two concepts and the hypernyms exclusive to each.
pub fn taxonomy_roles(kb: &KbStore, e1: &str, e2: &str) -> crate::kb::Result<Option<(String, Vec<String>, Vec<String>)>> {
    let mut a1 = kb.ancestors(e1)?;
    let mut a2 = kb.ancestors(e2)?;
    if a1.contains_key(e2) || a2.contains_key(e1) {
        return Ok(None);
    }
    a1.remove(e1);
    a2.remove(e2);
    let lca = a1
        .iter()
        .filter_map(|(c, d1)| a2.get(c).map(|d2| (d1 + d2, *d1.max(d2), c.clone())))
        .min()
        .map(|t| t.2);
    let Some(lca) = lca else { return Ok(None) };
    let x1 = a1.keys().filter(|c| !a2.contains_key(*c)).cloned().collect();
    let x2 = a2.keys().filter(|c| !a1.contains_key(*c)).cloned().collect();
    Ok(Some((lca, x1, x2)))
}

pub(super) fn taxonomy_conjunction(kb: &KbStore, cfg: &GenConfig, counts: SplitCounts, seed: u64) -> Result<Splits> {
    let p = ProbeId::TaxonomyConjunction;
    let template = cfg.template("taxonomy", TAXONOMY);
    let build = |trees: &[&str], split: &'static str| -> Result<Vec<Example>> {
        let mut rng = util::rng(seed, &format!("{p}/{split}"));
        let mut out = Vec::new();
        let ents: Vec<&String> = kb
            .taxonomy
            .values()
            .filter(|n| trees.contains(&n.tree.as_str()) && !n.parents.is_empty())
            .map(|n| &n.concept)
            .collect();
        for (i, a) in ents.iter().enumerate() {
            for b in &ents[i + 1..] {
                if kb.tree_of(a) != kb.tree_of(b) {
                    continue;
                }
                let Some((lca, x1, x2)) = taxonomy_roles(kb, a, b)? else { continue };
                let keep = |v: Vec<String>| -> Vec<String> { v.into_iter().filter(|c| single_word(c)).collect() };
                let (x1, x2) = (keep(x1), keep(x2));
                if !single_word(&lca) || x1.len() + x2.len() < 2 {
                    continue;
                }
                let mut distractors = Vec::new();
                if !x1.is_empty() && !x2.is_empty() {
                    distractors.push(x1.choose(&mut rng).unwrap().clone());
                    distractors.push(x2.choose(&mut rng).unwrap().clone());
                } else {
                    let pool = if x1.is_empty() { &x2 } else { &x1 };
                    distractors.extend(pool.iter().choose_multiple(&mut rng, 2).into_iter().cloned());
                }
                let (e1, e2) = if rng.gen_bool(0.5) { (*a, *b) } else { (*b, *a) };
                let r = render(template, &[("ENT-1", e1), ("ENT-2", e2)]);
                let (cands, gold) = shuffle_in(&mut rng, lca, distractors);
                out.push(mlm_example("taxonomy", r, cands, gold));
            }
        }
        out.shuffle(&mut rng);
        let cnt = if split == "train" { counts.train } else { counts.eval };
        cnt.take(p, split, out)
    };
    Ok((build(&TAXONOMY_TRAIN_TREES, "train")?, build(&TAXONOMY_EVAL_TREES, "eval")?))
}

/// Lexical-semantic statements with the object masked; with `negation`, the set-negation probe.
pub(super) fn lexical(kb: &KbStore, cfg: &GenConfig, counts: SplitCounts, seed: u64, negation: bool) -> Result<Splits> {
    let p = if negation { ProbeId::SetNegation } else { ProbeId::LexicalSemantic };
    let triples: Vec<&crate::kb::Triple> = kb
        .triples
        .iter()
        .filter(|t| t.predicate.is_phrased() && single_word(&t.object) && cfg.frequent(kb, &t.object))
        .collect();
    if triples.is_empty() {
        return Err(ProbeError::Shortfall { probe: p, split: "train", requested: 1, available: 0 });
    }
    let mut pools: BTreeMap<Predicate, BTreeSet<&str>> = BTreeMap::new();
    let mut holding: BTreeMap<(&str, Predicate), BTreeSet<&str>> = BTreeMap::new();
    for t in &triples {
        pools.entry(t.predicate).or_default().insert(&t.object);
        holding.entry((&t.subject, t.predicate)).or_default().insert(&t.object);
    }
    let (tr, ev) = split_disjoint(triples, |t| t.subject.clone(), 0.8, util::derive_seed(seed, p.as_str()))?;
    let build = |side: Vec<&crate::kb::Triple>, split: &'static str| -> Result<Vec<Example>> {
        let mut rng = util::rng(seed, &format!("{p}/{split}"));
        let mut side: Vec<&crate::kb::Triple> = side
            .into_iter()
            .filter(|t| !negation || holding[&(t.subject.as_str(), t.predicate)].len() >= 2)
            .collect();
        side.shuffle(&mut rng);
        let cnt = if split == "train" { counts.train } else { counts.eval };
        let n = match cnt {
            Count::All => side.len(),
            Count::Exactly(n) | Count::AtMost(n) => n.min(side.len()),
        };
        let mut out = Vec::new();
        for t in side {
            if out.len() == n {
                break;
            }
            let holds = &holding[&(t.subject.as_str(), t.predicate)];
            let others: Vec<&str> = pools[&t.predicate].iter().copied().filter(|o| !holds.contains(o)).collect();
            let negated = negation && out.len() % 2 == 0;
            let (gold, distractors): (String, Vec<String>) = if negated {
                let Some(g) = others.choose(&mut rng) else { continue };
                let mut hs: Vec<String> = vec![t.object.clone()];
                hs.extend(holds.iter().filter(|o| **o != t.object).choose(&mut rng).map(|s| s.to_string()));
                (g.to_string(), hs)
            } else {
                if others.len() < 2 {
                    continue;
                }
                (t.object.clone(), others.choose_multiple(&mut rng, 2).map(|s| s.to_string()).collect())
            };
            let (pos, neg) = statement(t.predicate).unwrap();
            let id = if negated { format!("lex-not-{}", t.predicate) } else { format!("lex-{}", t.predicate) };
            let template = cfg.template(&id, if negated { neg } else { pos });
            let mut r = render(template, &[("S", &t.subject), ("O", crate::text::MASK)]);
            r.arguments.retain(|a| a.name != "O");
            let (cands, g) = shuffle_in(&mut rng, gold, distractors);
            out.push(mlm_example(&id, r, cands, g));
        }
        cnt.take(p, split, out)
    };
    Ok((build(tr, "train")?, build(ev, "eval")?))
}

pub(super) fn multi_choice_lm(kb: &KbStore, _cfg: &GenConfig, counts: SplitCounts, seed: u64) -> Result<Splits> {
    let p = ProbeId::MultiChoiceLm;
    if kb.mc_lm.is_empty() {
        return Err(ProbeError::Shortfall { probe: p, split: "train", requested: 1, available: 0 });
    }
    let (tr, ev) = split_disjoint(kb.mc_lm.iter().collect(), |r| r.sentence.clone(), 0.8, util::derive_seed(seed, p.as_str()))?;
    let build = |rs: Vec<&crate::kb::ClozeRecord>, split: &'static str| -> Result<Vec<Example>> {
        let mut rng = util::rng(seed, &format!("{p}/{split}"));
        let mut out: Vec<Example> = rs
            .into_iter()
            .map(|r| {
                let rendered = render(&r.sentence, &[]);
                let (cands, gold) = shuffle_in(&mut rng, r.gold.clone(), r.distractors.clone());
                mlm_example("mc-lm", rendered, cands, gold)
            })
            .collect();
        out.shuffle(&mut rng);
        let cnt = if split == "train" { counts.train } else { counts.eval };
        cnt.take(p, split, out)
    };
    Ok((build(tr, "train")?, build(ev, "eval")?))
}
