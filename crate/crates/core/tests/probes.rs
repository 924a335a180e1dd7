use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use lmprobe_core::kb::{load_fixtures, KbStore, Predicate, Relation};
use lmprobe_core::probes::templates::*;
use lmprobe_core::probes::{generate, generate_variant, Example, GenConfig, ProbeDataset, ProbeId};

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn kb() -> KbStore {
    load_fixtures(&fixtures()).expect("fixtures load")
}

fn int_arg(e: &Example, name: &str) -> i64 {
    e.argument(name).unwrap().parse().unwrap()
}

fn all(ds: &ProbeDataset) -> impl Iterator<Item = &Example> {
    ds.train.iter().chain(&ds.eval)
}

#[test]
fn fixture_store_contains_published_triple_and_loads_deterministically() {
    let a = kb();
    let b = kb();
    assert!(a.holds("stop sign", Predicate::AtLocation, "street"));
    assert_eq!(serde_json::to_vec(&a).unwrap(), serde_json::to_vec(&b).unwrap());
    assert_eq!(a.digest(), b.digest());
}

#[test]
fn fixture_buckets_agree_with_values_exhaustively() {
    let kb = kb();
    for x in &kb.numeric {
        for y in &kb.numeric {
            if x.attribute == y.attribute && x.bucket < y.bucket {
                assert!(x.value < y.value, "{} vs {}", x.concept, y.concept);
            }
        }
    }
}

/// Shortest upward path by exhaustive depth-first enumeration.
fn brute_distance(kb: &KbStore, a: &str, b: &str, depth: usize) -> Option<usize> {
    if a == b {
        return Some(depth);
    }
    kb.taxonomy[a].parents.iter().filter_map(|p| brute_distance(kb, p, b, depth + 1)).min()
}

#[test]
fn hypernym_distance_matches_path_enumeration_on_every_fixture_pair() {
    let kb = kb();
    let concepts: Vec<&String> = kb.taxonomy.keys().collect();
    for a in &concepts {
        for b in &concepts {
            assert_eq!(kb.hypernym_distance(a, b).unwrap(), brute_distance(&kb, a, b, 0), "{a} -> {b}");
        }
    }
    assert_eq!(kb.hypernym_distance("beer", "food").unwrap(), Some(2));
}

#[test]
fn objects_fixture_sizes() {
    let kb = kb();
    let count = |tree: &str| kb.numeric.iter().filter(|n| n.attribute == "size" && kb.tree_of(&n.concept) == Some(tree)).count();
    assert_eq!(count("animal"), 127);
    assert_eq!(count("object"), 35);
}

#[test]
fn every_probe_and_variant_generates_valid_examples() {
    let kb = kb();
    let cfg = GenConfig::default();
    for p in ProbeId::ALL {
        let mut variants = vec!["standard"];
        variants.extend_from_slice(p.extra_variants());
        for v in variants {
            let ds = generate_variant(p, v, &kb, &cfg, 11).unwrap_or_else(|e| panic!("{p}/{v}: {e}"));
            assert!(ds.train.len() >= 62, "{p}/{v}: {} train", ds.train.len());
            assert!(!ds.eval.is_empty(), "{p}/{v}: empty eval");
            for e in all(&ds) {
                e.validate().unwrap();
                assert_eq!(e.setup, p.setup());
            }
        }
    }
}

#[test]
fn generation_is_byte_identical_per_seed() {
    let kb = kb();
    let cfg = GenConfig::default();
    for p in ProbeId::ALL {
        let a = generate(p, &kb, &cfg, 5).unwrap().to_jsonl(None);
        let b = generate(p, &kb, &cfg, 5).unwrap().to_jsonl(None);
        assert_eq!(a, b, "{p}");
        let c = generate(p, &kb, &cfg, 6).unwrap().to_jsonl(None);
        assert_ne!(a, c, "{p}: seed ignored");
        let (parsed, _) = ProbeDataset::from_jsonl(&a).unwrap();
        assert_eq!(parsed.to_jsonl(None), a);
    }
}

#[test]
fn task_variants_keep_example_counts() {
    let kb = kb();
    let cfg = GenConfig::default();
    let base = generate(ProbeId::AgeComparison, &kb, &cfg, 2).unwrap();
    for v in ["birth-year", "ages-in-year-template", "years-in-age-template", "out-of-range"] {
        let ds = generate_variant(ProbeId::AgeComparison, v, &kb, &cfg, 2).unwrap();
        assert_eq!((ds.train.len(), ds.eval.len()), (base.train.len(), base.eval.len()), "{v}");
    }
    let a = generate(ProbeId::PropertyConjunction, &kb, &cfg, 2).unwrap();
    let b = generate_variant(ProbeId::PropertyConjunction, "but-not", &kb, &cfg, 2).unwrap();
    assert_eq!((a.train.len(), a.eval.len()), (b.train.len(), b.eval.len()));
}

#[test]
fn comparison_gold_matches_integer_oracle() {
    let kb = kb();
    let cfg = GenConfig::default();
    for v in ["standard", "years-in-age-template", "out-of-range"] {
        let ds = generate_variant(ProbeId::AgeComparison, v, &kb, &cfg, 3).unwrap();
        for e in all(&ds) {
            let (a, b) = (int_arg(e, "AGE-1"), int_arg(e, "AGE-2"));
            assert_ne!(a, b);
            assert_eq!(e.candidates[e.gold], if a > b { "older" } else { "younger" });
        }
    }
    for v in ["birth-year", "ages-in-year-template"] {
        let ds = generate_variant(ProbeId::AgeComparison, v, &kb, &cfg, 3).unwrap();
        for e in all(&ds) {
            let (a, b) = (int_arg(e, "YEAR-1"), int_arg(e, "YEAR-2"));
            assert_eq!(e.candidates[e.gold], if a < b { "older" } else { "younger" });
        }
    }
    let ds = generate(ProbeId::MultihopComparison, &kb, &cfg, 3).unwrap();
    for e in all(&ds) {
        let ages = [int_arg(e, "A1"), int_arg(e, "A2"), int_arg(e, "A3")];
        let distinct: BTreeSet<i64> = ages.iter().copied().collect();
        assert_eq!(distinct.len(), 3);
        let max = *ages.iter().max().unwrap();
        assert_eq!(ages[e.gold], max);
        assert_eq!(e.candidates, MULTIHOP_ANSWERS);
    }
    let ds = generate(ProbeId::ObjectsComparison, &kb, &cfg, 3).unwrap();
    let bucket: BTreeMap<&str, i64> = kb.numeric.iter().map(|n| (n.concept.as_str(), n.bucket)).collect();
    for (exs, tree) in [(&ds.train, "animal"), (&ds.eval, "object")] {
        for e in exs.iter() {
            let (a, b) = (e.argument("OBJ-1").unwrap(), e.argument("OBJ-2").unwrap());
            assert_eq!(kb.tree_of(a), Some(tree));
            assert_ne!(bucket[a], bucket[b]);
            assert_eq!(e.candidates[e.gold], if bucket[a] > bucket[b] { "larger" } else { "smaller" });
        }
    }
}

fn disjoint<T: Ord>(a: BTreeSet<T>, b: BTreeSet<T>) -> bool {
    a.is_disjoint(&b)
}

#[test]
fn property_conjunction_roles_hold_in_the_store() {
    let kb = kb();
    let cfg = GenConfig::default();
    let holds_phrase = |c: &str, phrase: &str| -> bool {
        kb.triples.iter().any(|t| t.subject == c && t.predicate.is_phrased() && lmprobe_core::probes::property_phrase(t.predicate, &t.object) == phrase)
    };
    for but_not in [false, true] {
        let v = if but_not { "but-not" } else { "standard" };
        let ds = generate_variant(ProbeId::PropertyConjunction, v, &kb, &cfg, 4).unwrap();
        for e in all(&ds) {
            let (p1, p2) = (e.argument("P-1").unwrap(), e.argument("P-2").unwrap());
            let both: Vec<&String> = e.candidates.iter().filter(|c| holds_phrase(c, p1) && holds_phrase(c, p2)).collect();
            let only1: Vec<&String> = e.candidates.iter().filter(|c| holds_phrase(c, p1) && !holds_phrase(c, p2)).collect();
            let only2: Vec<&String> = e.candidates.iter().filter(|c| !holds_phrase(c, p1) && holds_phrase(c, p2)).collect();
            assert_eq!((both.len(), only1.len(), only2.len()), (1, 1, 1), "{:?}", e);
            let gold = &e.candidates[e.gold];
            assert_eq!(gold, if but_not { only1[0] } else { both[0] });
        }
        let side = |exs: &[Example]| exs.iter().flat_map(|e| e.candidates.clone()).collect::<BTreeSet<_>>();
        assert!(disjoint(side(&ds.train), side(&ds.eval)));
    }
}

#[test]
fn taxonomy_conjunction_roles_hold_in_the_store() {
    let kb = kb();
    let ds = generate(ProbeId::TaxonomyConjunction, &kb, &GenConfig::default(), 4).unwrap();
    let anc = |c: &str, h: &str| kb.hypernym_distance(c, h).unwrap().is_some_and(|d| d >= 1);
    for e in all(&ds) {
        let (a, b) = (e.argument("ENT-1").unwrap(), e.argument("ENT-2").unwrap());
        for (i, c) in e.candidates.iter().enumerate() {
            if i == e.gold {
                assert!(anc(a, c) && anc(b, c), "{c} not common to {a}, {b}");
            } else {
                assert!(anc(a, c) ^ anc(b, c), "{c} not exclusive to one of {a}, {b}");
            }
        }
    }
    for e in &ds.eval {
        let t = kb.tree_of(e.argument("ENT-1").unwrap()).unwrap();
        assert!(t == "food" || t == "animal");
    }
    for e in &ds.train {
        let t = kb.tree_of(e.argument("ENT-1").unwrap()).unwrap();
        assert!(t != "food" && t != "animal");
    }
    // the published pair
    let (lca, x1, x2) = lmprobe_core::probes::taxonomy_roles(&kb, "beer", "ricotta").unwrap().unwrap();
    assert_eq!(lca, "food");
    let ex: BTreeSet<String> = x1.into_iter().chain(x2).collect();
    assert_eq!(ex, ["alcohol", "cheese"].iter().map(|s| s.to_string()).collect());
}

#[test]
fn encyclopedic_distractors_follow_their_windows() {
    let kb = kb();
    let ds = generate(ProbeId::EncyclopedicComposition, &kb, &GenConfig::default(), 4).unwrap();
    let answer: BTreeMap<(&str, Relation), &lmprobe_core::kb::EncycFact> =
        kb.encyc.iter().map(|f| ((f.entity.as_str(), f.relation), f)).collect();
    let relation = |id: &str| match id {
        "encyc-band" => Relation::BandFormedYear,
        "encyc-spouse" => Relation::ActorSpouse,
        _ => Relation::CompanyHqCity,
    };
    let mut years = 0;
    for e in all(&ds) {
        let f = answer[&(e.argument("ENT").unwrap(), relation(&e.template_id))];
        assert_eq!(e.candidates[e.gold], f.answer);
        if let Some(y) = f.year() {
            years += 1;
            for (i, c) in e.candidates.iter().enumerate() {
                if i != e.gold {
                    let d: i64 = c.parse().unwrap();
                    assert!(d != y && (d - y).abs() <= 2, "{d} vs {y}");
                }
            }
        }
        if let Some(country) = &f.country {
            for c in &e.candidates {
                assert_eq!(&kb.city(c).unwrap().country, country);
            }
        }
    }
    assert!(years > 0);
}

#[test]
fn splits_are_disjoint_by_their_keys() {
    let kb = kb();
    let cfg = GenConfig::default();
    let keys = |exs: &[Example], f: &dyn Fn(&Example) -> String| exs.iter().map(f).collect::<BTreeSet<_>>();

    let ds = generate(ProbeId::AntonymNegation, &kb, &cfg, 8).unwrap();
    let pair = |e: &Example| {
        let mut v = [e.argument("W-1").unwrap().to_string(), e.argument("W-2").unwrap().to_string()];
        v.sort();
        v.join("|")
    };
    assert!(disjoint(keys(&ds.train, &pair), keys(&ds.eval, &pair)));
    let nots = ds.train.iter().filter(|e| e.candidates[e.gold] == "not").count();
    assert_eq!(nots, ds.train.len() / 2);

    let ds = generate(ProbeId::EncyclopedicComposition, &kb, &cfg, 8).unwrap();
    let bridge: BTreeMap<(&str, &str), &str> = kb
        .encyc
        .iter()
        .filter_map(|f| Some(((f.entity.as_str(), f.relation.as_str()), f.bridge.as_deref()?)))
        .collect();
    let rel = |id: &str| match id {
        "encyc-band" => "band-formed-year",
        "encyc-spouse" => "actor-spouse",
        _ => "company-hq-city",
    };
    let b = |e: &Example| bridge[&(e.argument("ENT").unwrap(), rel(&e.template_id))].to_string();
    assert!(disjoint(keys(&ds.train, &b), keys(&ds.eval, &b)));

    for p in [ProbeId::LexicalSemantic, ProbeId::SetNegation] {
        let ds = generate(p, &kb, &cfg, 8).unwrap();
        let s = |e: &Example| e.argument("S").unwrap().to_string();
        assert!(disjoint(keys(&ds.train, &s), keys(&ds.eval, &s)), "{p}");
    }

    let ds = generate(ProbeId::AlwaysNever, &kb, &cfg, 8).unwrap();
    assert_eq!((ds.train.len(), ds.eval.len()), (1000, 300));
}

#[test]
fn set_negation_inverts_roles_on_half_the_examples() {
    let kb = kb();
    let ds = generate(ProbeId::SetNegation, &kb, &GenConfig::default(), 9).unwrap();
    for exs in [&ds.train, &ds.eval] {
        let negated = exs.iter().filter(|e| e.tokens.iter().any(|t| t == "not")).count();
        assert_eq!(negated, exs.len().div_ceil(2));
        for e in exs.iter() {
            let s = e.argument("S").unwrap();
            let pred: Predicate = e.template_id.rsplit('-').next().unwrap().parse().unwrap();
            let holding: Vec<bool> = e.candidates.iter().map(|c| kb.holds(s, pred, c)).collect();
            let neg = e.tokens.iter().any(|t| t == "not");
            for (i, h) in holding.iter().enumerate() {
                assert_eq!(*h, (i == e.gold) != neg, "{:?}", e);
            }
        }
    }
}

#[test]
fn always_never_label_distribution() {
    let kb = kb();
    let n = kb.always_never.len() as f64;
    let share = |l: &str| kb.always_never.iter().filter(|r| r.label == l).count() as f64 / n;
    assert_eq!(kb.always_never.len(), 1300);
    // within four points of the published shares for never and rarely
    assert!((share("never") - 0.24).abs() < 0.04);
    assert!((share("rarely") - 0.10).abs() < 0.04);
    let published: Vec<_> = kb.always_never_templates.iter().filter(|t| t.published).collect();
    assert!(published.len() >= 6);
}
