use proptest::prelude::*;

use super::*;
use crate::kb::UnigramEntry;
use crate::probes::Setup;

#[test]
fn standard_weights_sum_to_one() {
    let w = MetricWeights::standard();
    assert!((w.as_slice().iter().sum::<f64>() - 1.0).abs() <= 1e-12);
    assert!(MetricWeights::new(STANDARD_WEIGHTS.to_vec()).is_ok());
}

#[test]
fn s_metric_matches_hand_dot_product() {
    // 11.5 + 12 + 11.9 + 11.2 + 9.9 + 7.6 + 7
    let s = s_metric(&[50.0, 60.0, 70.0, 80.0, 90.0, 95.0, 100.0], &MetricWeights::standard()).unwrap();
    assert!((s - 71.1).abs() <= 1e-9, "{s}");
    let c = s_metric(&[80.0; 7], &MetricWeights::standard()).unwrap();
    assert!((c - 80.0).abs() <= 1e-9);
}

#[test]
fn bad_weights_and_lengths_are_rejected() {
    let mut rev = STANDARD_WEIGHTS.to_vec();
    rev.reverse();
    assert!(MetricWeights::new(rev).is_err());
    assert!(MetricWeights::new(vec![0.5, 0.4]).is_err());
    assert!(MetricWeights::new(vec![]).is_err());
    let err = s_metric(&[1.0, 2.0], &MetricWeights::standard()).unwrap_err();
    assert_eq!(err, MetricError::Length { expected: 7, found: 2 });
    assert!(language_sensitivity(&[1.0; 7], &[1.0; 6], &MetricWeights::standard()).is_err());
}

#[test]
fn truncated_schedules_renormalize_the_prefix() {
    let w = MetricWeights::for_len(3).unwrap();
    let t = 0.23 + 0.20 + 0.17;
    assert_eq!(w.as_slice().len(), 3);
    assert!((w.as_slice()[0] - 0.23 / t).abs() < 1e-15);
    assert!((w.as_slice().iter().sum::<f64>() - 1.0).abs() < 1e-12);
    assert_eq!(MetricWeights::for_len(7).unwrap().as_slice(), &STANDARD_WEIGHTS);
    assert!(MetricWeights::for_len(8).is_err());
    assert!(MetricWeights::for_len(0).is_err());
}

#[test]
fn max_metric_examples() {
    assert_eq!(max_metric(&[50.0, 98.0, 97.0]).unwrap(), 98.0);
    assert_eq!(max_metric(&[42.0]).unwrap(), 42.0);
    assert_eq!(max_metric(&[]).unwrap_err(), MetricError::Empty);
}

#[test]
fn sensitivity_examples() {
    let w = MetricWeights::standard();
    let s = language_sensitivity(&[100.0; 7], &[50.0; 7], &w).unwrap();
    assert!((s - 50.0).abs() <= 1e-9);
    assert_eq!(language_sensitivity(&[70.0; 7], &[70.0; 7], &w).unwrap(), 0.0);
    assert_eq!(language_sensitivity(&[60.0; 7], &[80.0; 7], &w).unwrap(), 0.0);
    // mixed: only the positive gaps count
    let s = language_sensitivity(&[60.0, 80.0, 60.0, 80.0, 60.0, 80.0, 60.0], &[70.0; 7], &w).unwrap();
    assert!((s - 10.0 * (0.20 + 0.14 + 0.08)).abs() < 1e-12);
}

fn row(zs: f64, s: f64, nolang: f64) -> MetricsRow {
    MetricsRow {
        zero_shot: Some(zs),
        s_mlp: Some(s),
        max_mlp: Some(s),
        s_linear: Some(s),
        max_linear: Some(s),
        perturbed_sensitivity: Some(nolang),
        no_language_sensitivity: Some(nolang),
    }
}

#[test]
fn strong_age_row_gets_a_full_mark() {
    let mut r = row(98.0, 90.0, 51.0);
    r.perturbed_sensitivity = Some(31.0);
    let input = MedalInput { row: r, random: 50.0, baseline_s: Some(65.0) };
    assert_eq!(medal(&input, &MedalThresholds::default()), Medal::Full);
}

#[test]
fn random_rows_get_no_marks() {
    let input = MedalInput { row: row(50.0, 50.0, 0.0), random: 50.0, baseline_s: Some(50.0) };
    assert_eq!(medal(&input, &MedalThresholds::default()), Medal::None);
    let qa = MedalInput { row: MetricsRow { s_mlp: Some(70.0), ..MetricsRow::default() }, random: 33.3, baseline_s: Some(55.0) };
    assert_eq!(medal(&qa, &MedalThresholds::default()), Medal::Partial);
}

#[test]
fn missing_rows_are_blank() {
    let mut inputs = BTreeMap::new();
    inputs.insert(("p".to_string(), "m1".to_string()), MedalInput { row: row(90.0, 90.0, 40.0), random: 50.0, baseline_s: None });
    let grid = medals(&inputs, &["p".into()], &["m1".into(), "m2".into()], &MedalThresholds::default());
    assert_eq!(grid[&("p".into(), "m1".into())], Some(Medal::Full));
    assert_eq!(grid[&("p".into(), "m2".into())], None);
}

#[test]
fn raising_thresholds_never_adds_marks() {
    // exhaustive sweep over a small grid of rows and threshold triples
    let vals = [0.0, 10.0, 20.0, 30.0];
    let rows: Vec<MedalInput> = [40.0, 60.0, 80.0, 100.0]
        .iter()
        .flat_map(|&zs| {
            [45.0, 60.0, 75.0].iter().flat_map(move |&s| {
                [0.0, 10.0, 20.0].iter().map(move |&nl| MedalInput { row: row(zs, s, nl), random: 50.0, baseline_s: Some(50.0) })
            })
        })
        .collect();
    let mut ths = Vec::new();
    for &a in &vals {
        for &b in &vals {
            for &c in &vals {
                ths.push(MedalThresholds { zero_shot_margin: a, sensitivity_floor: b, s_margin: c });
            }
        }
    }
    for lo in &ths {
        for hi in &ths {
            if hi.zero_shot_margin < lo.zero_shot_margin || hi.sensitivity_floor < lo.sensitivity_floor || hi.s_margin < lo.s_margin {
                continue;
            }
            for r in &rows {
                assert!(medal(r, hi) <= medal(r, lo), "{lo:?} -> {hi:?} on {r:?}");
            }
        }
    }
}

fn brute_spearman(x: &[f64], y: &[f64]) -> Option<f64> {
    let rank = |v: &[f64]| -> Vec<f64> {
        v.iter()
            .map(|a| {
                let less = v.iter().filter(|b| *b < a).count() as f64;
                let eq = v.iter().filter(|b| *b == a).count() as f64;
                1.0 + less + (eq - 1.0) / 2.0
            })
            .collect()
    };
    let (rx, ry) = (rank(x), rank(y));
    let n = x.len() as f64;
    let mx = rx.iter().sum::<f64>() / n;
    let my = ry.iter().sum::<f64>() / n;
    let cov: f64 = rx.iter().zip(&ry).map(|(a, b)| (a - mx) * (b - my)).sum();
    let vx: f64 = rx.iter().map(|a| (a - mx).powi(2)).sum();
    let vy: f64 = ry.iter().map(|b| (b - my).powi(2)).sum();
    if vx == 0.0 || vy == 0.0 {
        None
    } else {
        Some(cov / (vx * vy).sqrt())
    }
}

#[test]
fn spearman_known_values() {
    assert_eq!(spearman(&[1.0, 2.0, 3.0], &[10.0, 20.0, 30.0]), Some(1.0));
    assert_eq!(spearman(&[1.0, 2.0, 3.0], &[3.0, 2.0, 1.0]), Some(-1.0));
    assert_eq!(spearman(&[1.0, 1.0, 1.0], &[1.0, 2.0, 3.0]), None);
    // no ties: 1 - 6Σd²/(n(n²-1)) with d = (0, -2, 1, 1, 0)
    let r = spearman(&[1.0, 2.0, 3.0, 4.0, 5.0], &[1.0, 4.0, 2.0, 3.0, 5.0]).unwrap();
    assert!((r - (1.0 - 6.0 * 6.0 / 120.0)).abs() < 1e-12);
}

fn ex(tokens: &[&str], cands: &[&str]) -> Example {
    Example {
        setup: Setup::McMlm,
        tokens: tokens.iter().map(|s| s.to_string()).collect(),
        candidates: cands.iter().map(|s| s.to_string()).collect(),
        gold: 0,
        arguments: vec![],
        template_id: "t".into(),
    }
}

fn unigram(a: &[(&str, f64, bool)], b: &[(&str, f64, bool)]) -> UnigramTable {
    let mut t = UnigramTable::default();
    for (id, rows) in [("a", a), ("b", b)] {
        t.corpora.insert(id.into(), rows.iter().map(|(w, p, c)| (w.to_string(), UnigramEntry { prob: *p, content: *c })).collect());
    }
    t
}

#[test]
fn identical_corpora_give_an_absent_correlation() {
    let rows = [("cat", 0.5, true), ("the", 0.5, false)];
    let u = unigram(&rows, &rows);
    let dev: BTreeMap<String, Vec<Example>> =
        [("p1".to_string(), vec![ex(&["the", "cat", MASK], &["cat"])]), ("p2".to_string(), vec![ex(&["cat"], &["cat"])])].into();
    let winners: BTreeMap<String, bool> = [("p1".to_string(), true), ("p2".to_string(), false)].into();
    let r = unigram_correlation(&dev, &u, "a", "b", &winners).unwrap();
    assert_eq!(r.spearman, None);
}

#[test]
fn winner_tracking_the_corpus_gives_one() {
    let u = unigram(&[("cat", 0.6, true), ("dog", 0.1, true), ("the", 0.3, false)], &[("cat", 0.1, true), ("dog", 0.6, true), ("the", 0.3, false)]);
    let dev: BTreeMap<String, Vec<Example>> = [
        ("p1".to_string(), vec![ex(&["the", "cat"], &["cat"])]),
        ("p2".to_string(), vec![ex(&["the", "dog"], &["dog"])]),
        ("p3".to_string(), vec![ex(&["cat", "cat"], &["dog"])]),
    ]
    .into();
    let winners: BTreeMap<String, bool> = [("p1".to_string(), true), ("p2".to_string(), false), ("p3".to_string(), true)].into();
    let r = unigram_correlation(&dev, &u, "a", "b", &winners).unwrap();
    assert_eq!(r.spearman, Some(1.0));
    let (a, b, _) = r.probes["p1"];
    // "the" is a function word and ignored
    assert!((a - 0.6f64.ln()).abs() < 1e-12 && (b - 0.1f64.ln()).abs() < 1e-12);
}

#[test]
fn missing_words_are_floored() {
    let u = unigram(&[("cat", 1.0, true)], &[("dog", 1.0, true)]);
    let lp = corpus_log_probs(&[ex(&["cat"], &[])], &u).unwrap();
    assert!((lp["a"] - 0.0).abs() < 1e-12);
    assert!((lp["b"] - UNIGRAM_FLOOR.ln()).abs() < 1e-12);
}

#[test]
fn five_probe_fixture_matches_brute_force() {
    let u = unigram(
        &[("w1", 0.3, true), ("w2", 0.3, true), ("w3", 0.2, true), ("w4", 0.1, true), ("w5", 0.1, true)],
        &[("w1", 0.1, true), ("w2", 0.4, true), ("w3", 0.1, true), ("w4", 0.2, true), ("w5", 0.2, true)],
    );
    let dev: BTreeMap<String, Vec<Example>> = (1..=5).map(|i| (format!("p{i}"), vec![ex(&[&format!("w{i}")], &[])])).collect();
    let winners: BTreeMap<String, bool> = [("p1", true), ("p2", true), ("p3", false), ("p4", false), ("p5", true)].iter().map(|(p, w)| (p.to_string(), *w)).collect();
    let r = unigram_correlation(&dev, &u, "a", "b", &winners).unwrap();
    let pref: Vec<f64> = [1.0, 0.0, 1.0, 0.0, 0.0].to_vec();
    let win: Vec<f64> = [1.0, 1.0, 0.0, 0.0, 1.0].to_vec();
    let expected = brute_spearman(&pref, &win);
    assert_eq!(r.spearman.is_some(), expected.is_some());
    assert!((r.spearman.unwrap() - expected.unwrap()).abs() < 1e-12);
}

#[test]
fn one_corpus_is_an_error() {
    let mut u = unigram(&[("cat", 1.0, true)], &[]);
    u.corpora.remove("b");
    assert!(corpus_log_probs(&[ex(&["cat"], &[])], &u).is_err());
}

proptest! {
    #[test]
    fn s_is_monotone(curve in prop::collection::vec(0.0f64..100.0, 7), i in 0usize..7, bump in 0.0f64..50.0) {
        let w = MetricWeights::standard();
        let base = s_metric(&curve, &w).unwrap();
        let mut up = curve.clone();
        up[i] += bump;
        prop_assert!(s_metric(&up, &w).unwrap() >= base);
    }

    #[test]
    fn sensitivity_is_between_zero_and_s(std in prop::collection::vec(0.0f64..100.0, 7), ctrl in prop::collection::vec(0.0f64..100.0, 7)) {
        let w = MetricWeights::standard();
        let sens = language_sensitivity(&std, &ctrl, &w).unwrap();
        prop_assert!(sens >= 0.0);
        prop_assert!(sens <= s_metric(&std, &w).unwrap() + 1e-9);
    }

    #[test]
    fn max_matches_a_scan(curve in prop::collection::vec(0.0f64..100.0, 1..10)) {
        let mut best = curve[0];
        for &c in &curve {
            if c > best {
                best = c;
            }
        }
        prop_assert_eq!(max_metric(&curve).unwrap(), best);
    }

    #[test]
    fn spearman_matches_brute_force(pairs in prop::collection::vec((0u8..5, 0u8..5), 2..12)) {
        let x: Vec<f64> = pairs.iter().map(|p| p.0 as f64).collect();
        let y: Vec<f64> = pairs.iter().map(|p| p.1 as f64).collect();
        match (spearman(&x, &y), brute_spearman(&x, &y)) {
            (Some(a), Some(b)) => prop_assert!((a - b).abs() < 1e-9),
            (a, b) => prop_assert_eq!(a, b),
        }
    }
}
