//! Encyclopedic probes: two-hop composition questions, their single-hop facts, and long-tail
//! cloze statements.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::{IteratorRandom, SliceRandom};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::templates::*;
use super::*;
use crate::kb::{EncycFact, Relation};
use crate::util;

type Splits = (Vec<Example>, Vec<Example>);

pub const YEAR_WINDOW: i64 = 2;
pub const CITY_WINDOW: usize = 2;
pub const SPOUSE_WINDOW: usize = 3;

/// Two distinct years from `{year-2, …, year+2} \ {year}`.
pub fn year_distractors(year: i64, rng: &mut impl Rng) -> Vec<String> {
    let pool: Vec<i64> = (year - YEAR_WINDOW..=year + YEAR_WINDOW).filter(|y| *y != year).collect();
    pool.choose_multiple(rng, 2).map(|y| y.to_string()).collect()
}

/// Picks `need` items within `radius` positions of `idx`, widening the window when too few pass `keep`.
fn window_pick(list: &[String], idx: usize, radius: usize, need: usize, keep: impl Fn(&str) -> bool, rng: &mut impl Rng) -> Option<Vec<String>> {
    let mut r = radius;
    loop {
        let lo = idx.saturating_sub(r);
        let hi = (idx + r).min(list.len().saturating_sub(1));
        let pool: Vec<&String> = (lo..=hi).filter(|&i| i != idx).map(|i| &list[i]).filter(|c| keep(c)).collect();
        if pool.len() >= need {
            return Some(pool.choose_multiple(rng, need).map(|s| s.to_string()).collect());
        }
        if lo == 0 && hi + 1 >= list.len() {
            return None;
        }
        r += 1;
    }
}

/// Gazetteer cities of each country, by descending population.
fn cities_by_country(kb: &KbStore) -> BTreeMap<&str, Vec<String>> {
    let mut m: BTreeMap<&str, Vec<&crate::kb::City>> = BTreeMap::new();
    for c in &kb.cities {
        m.entry(c.country.as_str()).or_default().push(c);
    }
    m.into_iter()
        .map(|(k, mut v)| {
            v.sort_by(|a, b| b.population.cmp(&a.population).then(a.name.cmp(&b.name)));
            (k, v.into_iter().map(|c| c.name.clone()).collect())
        })
        .collect()
}

/// Same-country cities within the population-rank window of `city`.
pub fn city_distractors(kb: &KbStore, city: &str, country: &str, keep: impl Fn(&str) -> bool, rng: &mut impl Rng) -> Option<Vec<String>> {
    let by_country = cities_by_country(kb);
    let list = by_country.get(country)?;
    let idx = list.iter().position(|c| c == city)?;
    window_pick(list, idx, CITY_WINDOW, 2, keep, rng)
}

/// Mean log-probability of a name's words, taking the best corpus per word.
fn name_frequency(kb: &KbStore, name: &str) -> f64 {
    let ws = crate::text::words(name);
    let lp: f64 = ws
        .iter()
        .map(|w| kb.unigram.corpora.values().filter_map(|c| c.get(w.as_str())).map(|e| e.prob).fold(1e-9, f64::max).ln())
        .sum();
    lp / ws.len().max(1) as f64
}

/// Spouse answers in descending frequency order.
fn spouse_order(kb: &KbStore) -> Vec<String> {
    let names: BTreeSet<&str> = kb.encyc.iter().filter(|f| f.relation == Relation::ActorSpouse).map(|f| f.answer.as_str()).collect();
    let mut v: Vec<(f64, &str)> = names.into_iter().map(|n| (name_frequency(kb, n), n)).collect();
    v.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(b.1)));
    v.into_iter().map(|(_, n)| n.to_string()).collect()
}

struct Distractors<'a> {
    kb: &'a KbStore,
    spouses: Vec<String>,
}

impl<'a> Distractors<'a> {
    fn new(kb: &'a KbStore) -> Self {
        Distractors { kb, spouses: spouse_order(kb) }
    }

    fn for_fact(&self, f: &EncycFact, rng: &mut ChaCha8Rng) -> Option<Vec<String>> {
        match f.relation {
            Relation::BandFormedYear | Relation::BirthDate => Some(year_distractors(f.year()?, rng)),
            Relation::CompanyHqCity | Relation::BirthPlace | Relation::DeathPlace => {
                city_distractors(self.kb, &f.answer, f.country.as_deref()?, |_| true, rng)
            }
            Relation::ActorSpouse => {
                let idx = self.spouses.iter().position(|s| *s == f.answer)?;
                window_pick(&self.spouses, idx, SPOUSE_WINDOW, 2, |_| true, rng)
            }
        }
    }
}

fn composition_template(r: Relation) -> Option<(&'static str, &'static str)> {
    match r {
        Relation::BandFormedYear => Some(("encyc-band", ENCYC_BAND)),
        Relation::ActorSpouse => Some(("encyc-spouse", ENCYC_SPOUSE)),
        Relation::CompanyHqCity => Some(("encyc-company", ENCYC_COMPANY)),
        _ => None,
    }
}

fn composition_facts(kb: &KbStore) -> Vec<&EncycFact> {
    kb.encyc.iter().filter(|f| composition_template(f.relation).is_some() && f.bridge.is_some()).collect()
}

fn composition_split(kb: &KbStore, seed: u64) -> Result<(Vec<&EncycFact>, Vec<&EncycFact>)> {
    let facts = composition_facts(kb);
    if facts.is_empty() {
        return Err(ProbeError::Shortfall { probe: ProbeId::EncyclopedicComposition, split: "train", requested: 1, available: 0 });
    }
    split_disjoint(facts, |f| (f.relation, f.bridge.clone()), 0.8, util::derive_seed(seed, "encyclopedic-composition"))
}

pub(super) fn composition(kb: &KbStore, cfg: &GenConfig, counts: SplitCounts, seed: u64) -> Result<Splits> {
    let p = ProbeId::EncyclopedicComposition;
    let (tr, ev) = composition_split(kb, seed)?;
    let d = Distractors::new(kb);
    let build = |facts: Vec<&EncycFact>, split: &'static str| -> Result<Vec<Example>> {
        let mut rng = util::rng(seed, &format!("{p}/{split}"));
        let mut out = Vec::new();
        for f in facts {
            let (id, t) = composition_template(f.relation).unwrap();
            let Some(ds) = d.for_fact(f, &mut rng) else {
                log::debug!("{p}: no distractors for {:?}", f.answer);
                continue;
            };
            let r = render(cfg.template(id, t), &[("ENT", &f.entity)]);
            let (cands, gold) = shuffle_in(&mut rng, f.answer.clone(), ds);
            out.push(qa_example(id, r, cands, gold));
        }
        out.shuffle(&mut rng);
        let cnt = if split == "train" { counts.train } else { counts.eval };
        cnt.take(p, split, out)
    };
    Ok((build(tr, "train")?, build(ev, "eval")?))
}

/// Every single-hop fact behind the composition questions. Train holds all of them; eval
/// holds those whose bridge entity sits in the composition eval split.
pub(super) fn single_hop(kb: &KbStore, cfg: &GenConfig, seed: u64) -> Result<Splits> {
    let p = ProbeId::EncyclopedicComposition;
    let (_, ev) = composition_split(kb, seed)?;
    let eval_bridges: BTreeSet<(Relation, &str)> = ev.iter().map(|f| (f.relation, f.bridge.as_deref().unwrap())).collect();
    let d = Distractors::new(kb);
    let mut rng = util::rng(seed, &format!("{p}/single-hop"));
    let facts = composition_facts(kb);
    let mut bridges: BTreeMap<Relation, Vec<&str>> = BTreeMap::new();
    for f in &facts {
        bridges.entry(f.relation).or_default().push(f.bridge.as_deref().unwrap());
    }
    for v in bridges.values_mut() {
        v.sort();
        v.dedup();
    }
    let mut seen = BTreeSet::new();
    let (mut train, mut eval) = (Vec::new(), Vec::new());
    for f in facts {
        let bridge = f.bridge.as_deref().unwrap();
        let (first, second) = match f.relation {
            Relation::BandFormedYear => (("hop-band", HOP_BAND), ("hop-band-year", HOP_BAND_YEAR)),
            Relation::ActorSpouse => (("hop-actor", HOP_ACTOR), ("hop-spouse", HOP_SPOUSE)),
            _ => (("hop-company", HOP_COMPANY), ("hop-hq", HOP_HQ)),
        };
        let in_eval = eval_bridges.contains(&(f.relation, bridge));
        // entity -> bridge
        if seen.insert((first.0, f.entity.clone())) {
            let others = bridges[&f.relation].iter().filter(|b| **b != bridge).choose_multiple(&mut rng, 2);
            if others.len() == 2 {
                let r = render(cfg.template(first.0, first.1), &[("ENT", &f.entity)]);
                let (cands, gold) = shuffle_in(&mut rng, bridge.to_string(), others.into_iter().map(|s| s.to_string()).collect());
                let ex = qa_example(first.0, r, cands, gold);
                if in_eval {
                    eval.push(ex.clone());
                }
                train.push(ex);
            }
        }
        // bridge -> answer
        if seen.insert((second.0, bridge.to_string())) {
            if let Some(ds) = d.for_fact(f, &mut rng) {
                let r = render(cfg.template(second.0, second.1), &[("BRIDGE", bridge)]);
                let (cands, gold) = shuffle_in(&mut rng, f.answer.clone(), ds);
                let ex = qa_example(second.0, r, cands, gold);
                if in_eval {
                    eval.push(ex.clone());
                }
                train.push(ex);
            }
        }
    }
    train.shuffle(&mut rng);
    eval.shuffle(&mut rng);
    Ok((train, eval))
}

/// Cities of small countries (fewer than eight gazetteer cities) train; elsewhere the smaller
/// half of each country's cities evaluates and the larger half trains.
pub fn long_tail_eval_cities(kb: &KbStore) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    for list in cities_by_country(kb).values() {
        if list.len() >= 8 {
            out.extend(list[list.len() / 2..].iter().cloned());
        }
    }
    out
}

pub(super) fn long_tail(kb: &KbStore, cfg: &GenConfig, counts: SplitCounts, seed: u64) -> Result<Splits> {
    let p = ProbeId::EncyclopedicLongTail;
    let eval_cities = long_tail_eval_cities(kb);
    let birth_city: BTreeMap<&str, &str> = kb
        .encyc
        .iter()
        .filter(|f| f.relation == Relation::BirthPlace)
        .map(|f| (f.entity.as_str(), f.answer.as_str()))
        .collect();
    let mut rng = util::rng(seed, p.as_str());
    let (mut train, mut eval) = (Vec::new(), Vec::new());
    for f in &kb.encyc {
        let (id, t) = match f.relation {
            Relation::BirthPlace => ("long-tail-birth-place", LONG_TAIL_BIRTH_PLACE),
            Relation::BirthDate => ("long-tail-birth-date", LONG_TAIL_BIRTH_DATE),
            Relation::DeathPlace => ("long-tail-death-place", LONG_TAIL_DEATH_PLACE),
            _ => continue,
        };
        let is_eval = match f.relation {
            Relation::BirthDate => birth_city.get(f.entity.as_str()).is_some_and(|c| eval_cities.contains(*c)),
            _ => eval_cities.contains(&f.answer),
        };
        let single = |s: &str| !s.contains(char::is_whitespace);
        if !single(&f.answer) {
            continue;
        }
        let ds = match f.relation {
            Relation::BirthDate => f.year().map(|y| year_distractors(y, &mut rng)),
            _ => f.country.as_deref().and_then(|c| city_distractors(kb, &f.answer, c, single, &mut rng)),
        };
        let Some(ds) = ds else { continue };
        let r = render(cfg.template(id, t), &[("ENT", &f.entity)]);
        let (cands, gold) = shuffle_in(&mut rng, f.answer.clone(), ds);
        let ex = mlm_example(id, r, cands, gold);
        if is_eval {
            eval.push(ex);
        } else {
            train.push(ex);
        }
    }
    train.shuffle(&mut rng);
    eval.shuffle(&mut rng);
    Ok((counts.train.take(p, "train", train)?, counts.eval.take(p, "eval", eval)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn year_window_enumerated() {
        let allowed: BTreeSet<String> = [1976, 1977, 1979, 1980].iter().map(|y| y.to_string()).collect();
        for s in 0..200 {
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            let d = year_distractors(1978, &mut rng);
            assert_eq!(d.len(), 2);
            assert_ne!(d[0], d[1]);
            assert!(d.iter().all(|y| allowed.contains(y)));
        }
    }

    #[test]
    fn window_widens_only_when_needed() {
        let list: Vec<String> = (0..10).map(|i| format!("c{i}")).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for _ in 0..50 {
            let got = window_pick(&list, 5, 2, 2, |_| true, &mut rng).unwrap();
            assert!(got.iter().all(|c| ["c3", "c4", "c6", "c7"].contains(&c.as_str())));
        }
        let got = window_pick(&list, 0, 1, 2, |c| c != "c1", &mut rng).unwrap();
        assert!(!got.contains(&"c0".to_string()));
        assert!(window_pick(&list[..2], 0, 2, 2, |_| true, &mut rng).is_none());
    }
}
