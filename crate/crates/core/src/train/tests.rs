use ndarray::Array2;
use rand::Rng;

use super::*;
use crate::heads::Activation;

fn random_mlm_data(n: usize, d: usize, rows: usize, k: usize, seed: u64) -> MlmData {
    let mut rng = util::rng(seed, "test/mlm");
    let x = Array2::from_shape_fn((n, d), |_| rng.gen_range(-1.5..1.5));
    let candidates = (0..n)
        .map(|i| {
            let mut c: Vec<usize> = (0..rows).collect();
            c.shuffle(&mut util::rng(seed, &format!("c{i}")));
            c.truncate(k);
            c
        })
        .collect();
    let gold = (0..n).map(|_| rng.gen_range(0..k)).collect();
    MlmData { x, candidates, gold }
}

fn random_qa_data(n: usize, d: usize, k: usize, seed: u64) -> QaData {
    let mut rng = util::rng(seed, "test/qa");
    let rows: Vec<Vec<Vec<f64>>> = (0..n).map(|_| (0..k).map(|_| (0..d).map(|_| rng.gen_range(-1.5..1.5)).collect()).collect()).collect();
    let gold = (0..n).map(|_| rng.gen_range(0..k)).collect();
    QaData::from_rows(&rows, gold, d)
}

/// Largest componentwise relative error between analytic and central-difference gradients.
pub(crate) fn grad_check<M: Model>(model: &M, data: &M::Data, batch: &[usize]) -> f64 {
    let n = model.params().len();
    let mut analytic = vec![0.0; n];
    model.loss_grad(data, batch, &mut analytic, true);
    let mut scratch = vec![0.0; n];
    let mut worst: f64 = 0.0;
    let h = 1e-5;
    for i in 0..n {
        let mut plus = model.clone();
        plus.params_mut().data[i] += h;
        let mut minus = model.clone();
        minus.params_mut().data[i] -= h;
        let numeric = (plus.loss_grad(data, batch, &mut scratch, false) - minus.loss_grad(data, batch, &mut scratch, false)) / (2.0 * h);
        let denom = analytic[i].abs().max(numeric.abs()).max(1e-6);
        worst = worst.max((analytic[i] - numeric).abs() / denom);
    }
    worst
}

#[test]
fn mlm_gradients_match_finite_differences() {
    for (ln, act) in [(true, Activation::GeluTanh), (false, Activation::Tanh), (true, Activation::Identity)] {
        let data = random_mlm_data(9, 5, 6, 3, 4);
        let mut m = MlmModel::random(5, 4, 6, act, ln, 9);
        if ln {
            let g = m.params.get_mut("ln.gamma");
            g.copy_from_slice(&[0.7, 1.3, 0.9, 1.1]);
            m.params.get_mut("b1").copy_from_slice(&[0.1, -0.2, 0.3, 0.05]);
        }
        let err = grad_check(&m, &data, &[0, 3, 4, 8, 2]);
        assert!(err <= 1e-4, "layer_norm={ln} {act:?}: {err}");
    }
}

#[test]
fn qa_gradients_match_finite_differences() {
    let data = random_qa_data(6, 4, 3, 2);
    let m = QaModel::random(4, 5, Activation::Tanh, 1);
    let err = grad_check(&m, &data, &[5, 0, 2]);
    assert!(err <= 1e-4, "{err}");
}

#[test]
fn linear_mode_leaves_hidden_group_bit_identical() {
    let mut data = random_mlm_data(64, 6, 4, 2, 1);
    for i in 0..64 {
        data.gold[i] = usize::from(data.x[(i, 0)] > 0.0);
    }
    let m = MlmModel::random(6, 6, 4, Activation::GeluTanh, true, 3);
    let before = m.params.group_hash(Group::Hidden);
    let out_before = m.params.group_hash(Group::Output);
    let hp = Hyper { lr: 1e-2, epochs: 20, patience: 0, ..Hyper::default() };
    let f = fit(m, &data, &all(64), &data, HeadMode::Linear, &hp, 7).unwrap();
    assert_eq!(f.model.params.group_hash(Group::Hidden), before);
    assert_ne!(f.model.params.group_hash(Group::Output), out_before);
}

#[test]
fn zero_epochs_returns_the_init_bit_for_bit() {
    let data = random_mlm_data(10, 3, 3, 2, 5);
    let m = MlmModel::random(3, 3, 3, Activation::GeluTanh, false, 1);
    let hp = Hyper { epochs: 0, ..Hyper::default() };
    let f = fit(m.clone(), &data, &all(10), &data, HeadMode::Mlp, &hp, 1).unwrap();
    assert_eq!(f.model.params.hash(), m.params.hash());
}

#[test]
fn separable_toy_task_is_learned() {
    // two candidates, 2-d vectors, label = sign of the first coordinate
    let mut rng = util::rng(0, "toy");
    let n = 200;
    let x = Array2::from_shape_fn((n, 2), |_| rng.gen_range(-1.0..1.0));
    let gold: Vec<usize> = (0..n).map(|i| usize::from(x[(i, 0)] > 0.0)).collect();
    let data = MlmData { x, candidates: vec![vec![0, 1]; n], gold };
    let m = MlmModel::random(2, 8, 2, Activation::GeluTanh, false, 2);
    let hp = Hyper { lr: 1e-2, batch: 16, epochs: 200, patience: 0 };
    let f = fit(m, &data, &all(n), &data, HeadMode::Mlp, &hp, 3).unwrap();
    assert!(accuracy(&f.model, &data, &all(n)) >= 97.0);
}

#[test]
fn non_finite_loss_aborts() {
    let mut data = random_mlm_data(8, 3, 3, 2, 5);
    data.x[(2, 1)] = f64::NAN;
    let m = MlmModel::random(3, 3, 3, Activation::GeluTanh, false, 1);
    let err = fit(m, &data, &all(8), &data, HeadMode::Mlp, &Hyper::default(), 1).unwrap_err();
    assert!(matches!(err, TrainError::NonFinite { epoch: 1, .. }));
}

#[test]
fn subsets_are_nested_per_seed() {
    for seed in 1..4 {
        let small = subset(500, 62, seed);
        let big = subset(500, 250, seed);
        assert_eq!(&big[..62], &small[..]);
    }
    assert_ne!(subset(500, 62, 1), subset(500, 62, 2));
}

#[test]
fn schedule_validation() {
    assert!(Schedule::new(vec![62, 62], vec![1], HeadMode::Mlp).is_err());
    assert!(Schedule::new(vec![125, 62], vec![1], HeadMode::Mlp).is_err());
    let s = Schedule::standard(2, HeadMode::Mlp).fit_to(337).unwrap();
    assert_eq!(s.sizes, vec![62, 125, 250]);
    assert!(Schedule::standard(2, HeadMode::Mlp).fit_to(40).is_err());
}

#[test]
fn curve_points_are_ordered_and_means_are_arithmetic() {
    let train = random_mlm_data(62, 4, 3, 2, 1);
    let eval = random_mlm_data(30, 4, 3, 2, 2);
    let sched = Schedule::new(vec![62], vec![3, 1, 2], HeadMode::Mlp).unwrap();
    let hp = Hyper { epochs: 2, ..Hyper::default() };
    let pts = run_curve(&train, &eval, &sched, &hp, |s| MlmModel::random(4, 4, 3, Activation::GeluTanh, false, s)).unwrap();
    assert_eq!(pts.iter().map(|p| p.seed).collect::<Vec<_>>(), vec![3, 1, 2]);
    let mean = pts.iter().map(|p| p.accuracy).sum::<f64>() / 3.0;
    assert!((curve_means(&pts, &[62])[0] - mean).abs() < 1e-12);
    let again = run_curve(&train, &eval, &sched, &hp, |s| MlmModel::random(4, 4, 3, Activation::GeluTanh, false, s)).unwrap();
    assert_eq!(pts, again);
}

#[test]
fn coin_flip_head_scores_near_half() {
    // random vectors with labels independent of them, scored by an untrained random head
    let n = 2000;
    let data = random_mlm_data(n, 8, 2, 2, 77);
    let m = MlmModel::random(8, 8, 2, Activation::GeluTanh, true, 5);
    let acc = accuracy(&m, &data, &all(n));
    // binomial sd at n=2000 is 1.1 points; 5 points is beyond 4 sd
    assert!((acc - 50.0).abs() <= 5.0, "{acc}");
}

#[test]
fn pre_finetune_fits_the_facts() {
    let data = random_qa_data(40, 6, 3, 9);
    let hp = Hyper { lr: 1e-2, epochs: 300, patience: 0, ..Hyper::default() };
    let (m1, acc) = pre_finetune(QaModel::random(6, 32, Activation::Tanh, 1), &data, &hp, 4).unwrap();
    assert!(acc >= 90.0, "{acc}");
    let (m2, _) = pre_finetune(QaModel::random(6, 32, Activation::Tanh, 1), &data, &hp, 4).unwrap();
    assert_eq!(m1.params.hash(), m2.params.hash());
}
