//! Head fine-tuning on frozen vectors and the learning-curve protocol.

pub mod adam;
pub mod models;
pub mod params;

use rand::seq::SliceRandom;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::controls::HeadMode;
use crate::heads::predict;
use crate::util;
use adam::Adam;
pub use models::{MlmData, MlmModel, Model, QaData, QaModel, TaskData};
pub use params::{Group, ParamSet};

pub const DEFAULT_SIZES: [usize; 7] = [62, 125, 250, 500, 1000, 2000, 4000];
pub const DEFAULT_SEEDS: usize = 5;

#[derive(Debug, Error, PartialEq)]
pub enum TrainError {
    #[error("non-finite loss {loss} at epoch {epoch}, batch {batch} (seed {seed}, {n} training examples)")]
    NonFinite { loss: f64, epoch: usize, batch: usize, seed: u64, n: usize },
    #[error("invalid schedule: {0}")]
    Schedule(String),
    #[error("empty {0} set")]
    Empty(&'static str),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Hyper {
    pub lr: f64,
    pub batch: usize,
    pub epochs: usize,
    /// Stop after this many epochs without a better eval accuracy; 0 disables early stopping.
    pub patience: usize,
}

impl Default for Hyper {
    fn default() -> Self {
        Hyper { lr: 1e-3, batch: 32, epochs: 30, patience: 5 }
    }
}

#[derive(Debug, Clone)]
pub struct Fit<M> {
    pub model: M,
    pub eval_accuracy: f64,
    pub best_epoch: usize,
    pub epochs_run: usize,
}

/// Percentage of `idx` whose argmax equals the gold index.
pub fn accuracy<M: Model>(model: &M, data: &M::Data, idx: &[usize]) -> f64 {
    if idx.is_empty() {
        return 0.0;
    }
    let p = model.probs(data, idx);
    let hits = idx.iter().zip(&p).filter(|(&i, p)| predict(p) == data.gold(i)).count();
    100.0 * hits as f64 / idx.len() as f64
}

pub fn all(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// Mini-batch Adam on mean cross-entropy. After every epoch the eval split is scored; the best
/// state is kept and training stops after `patience` epochs without improvement.
pub fn fit<M: Model>(
    init: M,
    train: &M::Data,
    train_idx: &[usize],
    eval: &M::Data,
    mode: HeadMode,
    hp: &Hyper,
    seed: u64,
) -> Result<Fit<M>, TrainError> {
    if train_idx.is_empty() {
        return Err(TrainError::Empty("training"));
    }
    let eval_idx = all(eval.len());
    let mut model = init;
    let ranges = model.params().trainable(mode);
    let mut opt = Adam::new(model.params().len(), hp.lr);
    let mut best = model.clone();
    let mut best_acc = accuracy(&model, eval, &eval_idx);
    let mut best_epoch = 0;
    let mut stale = 0;
    let mut order = train_idx.to_vec();
    let mut grad = vec![0.0; model.params().len()];
    let mut epochs_run = 0;
    for epoch in 1..=hp.epochs {
        let mut rng = util::rng(seed, &format!("fit/epoch/{epoch}"));
        order.shuffle(&mut rng);
        for (b, batch) in order.chunks(hp.batch.max(1)).enumerate() {
            grad.iter_mut().for_each(|g| *g = 0.0);
            let loss = model.loss_grad(train, batch, &mut grad, mode == HeadMode::Mlp);
            if !loss.is_finite() || grad.iter().any(|g| !g.is_finite()) {
                return Err(TrainError::NonFinite { loss, epoch, batch: b, seed, n: train_idx.len() });
            }
            let p = model.params_mut();
            opt.step(&mut p.data, &grad, &ranges);
        }
        epochs_run = epoch;
        let acc = accuracy(&model, eval, &eval_idx);
        if acc > best_acc {
            best_acc = acc;
            best = model.clone();
            best_epoch = epoch;
            stale = 0;
        } else {
            stale += 1;
            if hp.patience > 0 && stale >= hp.patience {
                break;
            }
        }
    }
    Ok(Fit { model: best, eval_accuracy: best_acc, best_epoch, epochs_run })
}

/// Sizes, seeds and head mode of a learning curve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Schedule {
    pub sizes: Vec<usize>,
    pub seeds: Vec<u64>,
    pub mode: HeadMode,
}

impl Schedule {
    pub fn new(sizes: Vec<usize>, seeds: Vec<u64>, mode: HeadMode) -> Result<Self, TrainError> {
        if sizes.is_empty() || seeds.is_empty() {
            return Err(TrainError::Schedule("sizes and seeds must be non-empty".into()));
        }
        if sizes.windows(2).any(|w| w[0] >= w[1]) || sizes[0] == 0 {
            return Err(TrainError::Schedule(format!("sizes must be positive and strictly increasing: {sizes:?}")));
        }
        Ok(Schedule { sizes, seeds, mode })
    }

    pub fn standard(n_seeds: usize, mode: HeadMode) -> Self {
        Schedule { sizes: DEFAULT_SIZES.to_vec(), seeds: (1..=n_seeds as u64).collect(), mode }
    }

    /// Drops sizes above `available`.
    pub fn fit_to(&self, available: usize) -> Result<Self, TrainError> {
        let sizes: Vec<usize> = self.sizes.iter().copied().filter(|&s| s <= available).collect();
        if sizes.is_empty() {
            return Err(TrainError::Schedule(format!("no size fits {available} training examples (smallest is {})", self.sizes[0])));
        }
        Ok(Schedule { sizes, ..self.clone() })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurvePoint {
    pub size: usize,
    pub seed: u64,
    pub accuracy: f64,
    pub best_epoch: usize,
    pub epochs_run: usize,
}

/// Per-seed nested subsets: the size-N subset is the first N of a seed-shuffled permutation.
pub fn subset(n_train: usize, size: usize, seed: u64) -> Vec<usize> {
    let mut perm = all(n_train);
    perm.shuffle(&mut util::rng(seed, "curve/subset"));
    perm.truncate(size);
    perm
}

/// Fits one head per (size, seed) and scores it on the full eval split. Jobs run on the rayon
/// pool; results come back ordered by (size, seed).
pub fn run_curve<M, F>(train: &M::Data, eval: &M::Data, schedule: &Schedule, hp: &Hyper, init: F) -> Result<Vec<CurvePoint>, TrainError>
where
    M: Model,
    F: Fn(u64) -> M + Sync,
{
    if schedule.sizes.last().is_some_and(|&s| s > train.len()) {
        return Err(TrainError::Schedule(format!("size {} exceeds {} training examples", schedule.sizes.last().unwrap(), train.len())));
    }
    if eval.is_empty() {
        return Err(TrainError::Empty("eval"));
    }
    let jobs: Vec<(usize, u64)> = schedule.sizes.iter().flat_map(|&n| schedule.seeds.iter().map(move |&s| (n, s))).collect();
    jobs.par_iter()
        .map(|&(size, seed)| {
            let idx = subset(train.len(), size, seed);
            let f = fit(init(seed), train, &idx, eval, schedule.mode, hp, seed)?;
            Ok(CurvePoint { size, seed, accuracy: f.eval_accuracy, best_epoch: f.best_epoch, epochs_run: f.epochs_run })
        })
        .collect()
}

/// Mean accuracy per size, in schedule order.
pub fn curve_means(points: &[CurvePoint], sizes: &[usize]) -> Vec<f64> {
    sizes
        .iter()
        .map(|&n| util::mean(&points.iter().filter(|p| p.size == n).map(|p| p.accuracy).collect::<Vec<_>>()))
        .collect()
}

/// Fits on every fact and reports training accuracy; the result initializes a later curve.
pub fn pre_finetune<M: Model>(init: M, facts: &M::Data, hp: &Hyper, seed: u64) -> Result<(M, f64), TrainError> {
    let idx = all(facts.len());
    let f = fit(init, facts, &idx, facts, HeadMode::Mlp, hp, seed)?;
    let acc = accuracy(&f.model, facts, &idx);
    Ok((f.model, acc))
}

#[cfg(test)]
pub(crate) mod tests;
