//! Scoring heads: the MC-MLM head with a candidate-masked softmax, the MC-QA head, and
//! prediction extraction.

use ndarray::{Array1, Array2, ArrayView1};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Stand-in for −∞ in the candidate mask. Finite, so `(-inf) - (-inf)` never shows up.
pub const MASKED: f64 = f64::MIN;

#[derive(Debug, Error, PartialEq)]
pub enum HeadError {
    #[error("candidate index {index} is outside the vocabulary of size {vocab_size}")]
    IndexOutOfVocab { index: usize, vocab_size: usize },
    #[error("candidate index {0} appears twice in the mask support")]
    DuplicateCandidate(usize),
    #[error("candidate index {0} has no exported output row")]
    MissingRow(usize),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("at least two candidates are required, got {0}")]
    TooFewCandidates(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Activation {
    /// `0.5 x (1 + tanh(√(2/π) (x + 0.044715 x³)))`
    GeluTanh,
    Relu,
    Tanh,
    Identity,
}

const GELU_C: f64 = 0.797_884_560_802_865_4; // sqrt(2/pi)
const GELU_A: f64 = 0.044_715;

impl Activation {
    pub fn apply(self, x: f64) -> f64 {
        match self {
            Activation::GeluTanh => 0.5 * x * (1.0 + (GELU_C * (x + GELU_A * x * x * x)).tanh()),
            Activation::Relu => x.max(0.0),
            Activation::Tanh => x.tanh(),
            Activation::Identity => x,
        }
    }

    pub fn derivative(self, x: f64) -> f64 {
        match self {
            Activation::GeluTanh => {
                let u = GELU_C * (x + GELU_A * x * x * x);
                let t = u.tanh();
                let du = GELU_C * (1.0 + 3.0 * GELU_A * x * x);
                0.5 * (1.0 + t) + 0.5 * x * (1.0 - t * t) * du
            }
            Activation::Relu => {
                if x > 0.0 {
                    1.0
                } else {
                    0.0
                }
            }
            Activation::Tanh => 1.0 - x.tanh().powi(2),
            Activation::Identity => 1.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LayerNorm {
    pub gamma: Vec<f64>,
    pub beta: Vec<f64>,
    pub eps: f64,
}

/// Normalizes `a` in place; returns `(x̂, 1/σ)` needed for the backward pass.
pub fn layer_norm_forward(a: &[f64], gamma: &[f64], beta: &[f64], eps: f64, out: &mut [f64]) -> (Vec<f64>, f64) {
    let n = a.len() as f64;
    let mu = a.iter().sum::<f64>() / n;
    let var = a.iter().map(|x| (x - mu) * (x - mu)).sum::<f64>() / n;
    let inv = 1.0 / (var + eps).sqrt();
    let xhat: Vec<f64> = a.iter().map(|x| (x - mu) * inv).collect();
    for i in 0..a.len() {
        out[i] = gamma[i] * xhat[i] + beta[i];
    }
    (xhat, inv)
}

/// Given `dL/dout`, accumulates `dgamma`, `dbeta` and writes `dL/da`.
pub fn layer_norm_backward(
    dout: &[f64],
    xhat: &[f64],
    inv: f64,
    gamma: &[f64],
    dgamma: Option<&mut [f64]>,
    dbeta: Option<&mut [f64]>,
    da: &mut [f64],
) {
    let n = dout.len();
    if let Some(dg) = dgamma {
        for i in 0..n {
            dg[i] += dout[i] * xhat[i];
        }
    }
    if let Some(db) = dbeta {
        for i in 0..n {
            db[i] += dout[i];
        }
    }
    let dx: Vec<f64> = (0..n).map(|i| dout[i] * gamma[i]).collect();
    let m1 = dx.iter().sum::<f64>() / n as f64;
    let m2 = dx.iter().zip(xhat).map(|(d, x)| d * x).sum::<f64>() / n as f64;
    for i in 0..n {
        da[i] = inv * (dx[i] - m1 - xhat[i] * m2);
    }
}

/// Numerically stable softmax.
pub fn softmax(logits: &[f64]) -> Vec<f64> {
    let max = logits.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let exps: Vec<f64> = logits.iter().map(|l| (l - max).exp()).collect();
    let z: f64 = exps.iter().sum();
    exps.into_iter().map(|e| e / z).collect()
}

/// Restricts a vocabulary-wide distribution to K candidate indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateMask {
    pub vocab_size: usize,
    pub support: Vec<usize>,
}

impl CandidateMask {
    pub fn new(vocab_size: usize, support: Vec<usize>) -> Result<Self, HeadError> {
        for (i, &s) in support.iter().enumerate() {
            if s >= vocab_size {
                return Err(HeadError::IndexOutOfVocab { index: s, vocab_size });
            }
            if support[..i].contains(&s) {
                return Err(HeadError::DuplicateCandidate(s));
            }
        }
        if support.len() < 2 {
            return Err(HeadError::TooFewCandidates(support.len()));
        }
        Ok(CandidateMask { vocab_size, support })
    }

    pub fn k(&self) -> usize {
        self.support.len()
    }

    /// The additive mask `m`: zero on the support, [`MASKED`] elsewhere.
    pub fn dense(&self) -> Vec<f64> {
        let mut m = vec![MASKED; self.vocab_size];
        for &s in &self.support {
            m[s] = 0.0;
        }
        m
    }
}

/// `softmax(m ⊕ l)` over the full vocabulary. Entries outside the support are exactly 0.
pub fn masked_softmax(logits: &[f64], mask: &CandidateMask) -> Result<Vec<f64>, HeadError> {
    if logits.len() != mask.vocab_size {
        return Err(HeadError::Dimension(format!("{} logits for a vocabulary of {}", logits.len(), mask.vocab_size)));
    }
    let m = mask.dense();
    // m ⊕ l saturates at MASKED for non-candidates, whose exp then underflows to 0.
    let shifted: Vec<f64> = logits.iter().zip(&m).map(|(l, m)| if *m == 0.0 { *l } else { MASKED }).collect();
    Ok(softmax(&shifted))
}

/// Probabilities of the support entries, in support order.
pub fn restrict(p: &[f64], mask: &CandidateMask) -> Vec<f64> {
    mask.support.iter().map(|&s| p[s]).collect()
}

/// FF_MLM: `W2 · LN(act(W1 h + b1)) + b2`, with only some output rows materialized.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MlmHead {
    pub w1: Array2<f64>,
    pub b1: Array1<f64>,
    pub activation: Activation,
    pub layer_norm: Option<LayerNorm>,
    /// Vocabulary index of each row in `w2`/`b2`.
    pub rows: Vec<usize>,
    pub w2: Array2<f64>,
    pub b2: Array1<f64>,
    pub vocab_size: usize,
    pub tied: bool,
}

impl MlmHead {
    pub fn validate(&self) -> Result<(), HeadError> {
        let h = self.w1.nrows();
        let dim = |m: String| Err(HeadError::Dimension(m));
        if self.b1.len() != h {
            return dim(format!("b1 has {} entries, W1 has {h} rows", self.b1.len()));
        }
        if let Some(ln) = &self.layer_norm {
            if ln.gamma.len() != h || ln.beta.len() != h {
                return dim("layer norm size differs from hidden size".into());
            }
        }
        if self.w2.dim() != (self.rows.len(), h) || self.b2.len() != self.rows.len() {
            return dim(format!("W2 is {:?} for {} rows of width {h}", self.w2.dim(), self.rows.len()));
        }
        if let Some(&r) = self.rows.iter().find(|&&r| r >= self.vocab_size) {
            return Err(HeadError::IndexOutOfVocab { index: r, vocab_size: self.vocab_size });
        }
        Ok(())
    }

    pub fn input_dim(&self) -> usize {
        self.w1.ncols()
    }

    /// Hidden transform `u = LN(act(W1 h + b1))`.
    pub fn transform(&self, h: ArrayView1<f64>) -> Array1<f64> {
        let z = self.w1.dot(&h) + &self.b1;
        let a: Vec<f64> = z.iter().map(|&x| self.activation.apply(x)).collect();
        match &self.layer_norm {
            Some(ln) => {
                let mut out = vec![0.0; a.len()];
                layer_norm_forward(&a, &ln.gamma, &ln.beta, ln.eps, &mut out);
                Array1::from(out)
            }
            None => Array1::from(a),
        }
    }

    fn row_of(&self, index: usize) -> Result<usize, HeadError> {
        if index >= self.vocab_size {
            return Err(HeadError::IndexOutOfVocab { index, vocab_size: self.vocab_size });
        }
        self.rows.iter().position(|&r| r == index).ok_or(HeadError::MissingRow(index))
    }

    /// Logits of the given vocabulary indices.
    pub fn candidate_logits(&self, h: ArrayView1<f64>, support: &[usize]) -> Result<Vec<f64>, HeadError> {
        if h.len() != self.input_dim() {
            return Err(HeadError::Dimension(format!("h has {} entries, head expects {}", h.len(), self.input_dim())));
        }
        let rows = support.iter().map(|&s| self.row_of(s)).collect::<Result<Vec<_>, _>>()?;
        let u = self.transform(h);
        Ok(rows.iter().map(|&r| self.w2.row(r).dot(&u) + self.b2[r]).collect())
    }
}

/// Distribution over the K candidates of `mask`, in support order.
///
/// Only candidate rows are evaluated: entries outside the support would receive exactly zero
/// mass after masking, so the result equals `restrict(masked_softmax(l, m))`.
pub fn mlm_distribution(h: ArrayView1<f64>, head: &MlmHead, mask: &CandidateMask) -> Result<Vec<f64>, HeadError> {
    if mask.vocab_size != head.vocab_size {
        return Err(HeadError::Dimension(format!("mask over {} tokens, head over {}", mask.vocab_size, head.vocab_size)));
    }
    Ok(softmax(&head.candidate_logits(h, &mask.support)?))
}

/// FF_QA: one hidden layer, one logit per candidate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QaHead {
    pub w1: Array2<f64>,
    pub b1: Array1<f64>,
    pub activation: Activation,
    pub w2: Array1<f64>,
    pub b2: f64,
}

impl QaHead {
    pub fn logit(&self, cls: ArrayView1<f64>) -> f64 {
        let z = self.w1.dot(&cls) + &self.b1;
        z.iter().zip(&self.w2).map(|(&x, w)| self.activation.apply(x) * w).sum::<f64>() + self.b2
    }
}

pub fn qa_scores(cls: &[ArrayView1<f64>], head: &QaHead) -> Result<Vec<f64>, HeadError> {
    if cls.len() < 2 {
        return Err(HeadError::TooFewCandidates(cls.len()));
    }
    if let Some(c) = cls.iter().find(|c| c.len() != head.w1.ncols()) {
        return Err(HeadError::Dimension(format!("[CLS] vector has {} entries, head expects {}", c.len(), head.w1.ncols())));
    }
    Ok(softmax(&cls.iter().map(|c| head.logit(*c)).collect::<Vec<_>>()))
}

/// Argmax, lowest index on ties.
pub fn predict(p: &[f64]) -> usize {
    let mut best = 0;
    for i in 1..p.len() {
        if p[i] > p[best] {
            best = i;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;
    use proptest::prelude::*;

    fn head(vocab: usize, rows: Vec<usize>, w2: Array2<f64>, b2: Array1<f64>) -> MlmHead {
        MlmHead {
            w1: Array2::eye(2),
            b1: Array1::zeros(2),
            activation: Activation::Identity,
            layer_norm: None,
            rows,
            w2,
            b2,
            vocab_size: vocab,
            tied: false,
        }
    }

    #[test]
    fn two_candidate_logits() {
        let h = head(10, vec![3, 7], array![[2.0, 0.0], [1.0, 0.0]], Array1::zeros(2));
        let mask = CandidateMask::new(10, vec![3, 7]).unwrap();
        let p = mlm_distribution(array![1.0, 0.0].view(), &h, &mask).unwrap();
        let e = 1.0f64.exp();
        assert!((p[0] - e / (e + 1.0)).abs() < 1e-12);
        assert!((p[0] - 0.7311).abs() < 1e-4 && (p[1] - 0.2689).abs() < 1e-4);
    }

    #[test]
    fn equal_logits_are_uniform() {
        let mask = CandidateMask::new(8, vec![0, 2, 4, 6, 7]).unwrap();
        let p = masked_softmax(&[1.5; 8], &mask).unwrap();
        for &s in &mask.support {
            assert!((p[s] - 0.2).abs() < 1e-15);
        }
    }

    #[test]
    fn huge_non_candidate_logit_is_masked_out() {
        let mask = CandidateMask::new(4, vec![0, 1]).unwrap();
        let mut l = vec![0.3, -0.2, 0.0, 0.0];
        let before = masked_softmax(&l, &mask).unwrap();
        l[3] = 1e6;
        let after = masked_softmax(&l, &mask).unwrap();
        assert_eq!(before, after);
        assert_eq!(after[3], 0.0);
    }

    #[test]
    fn out_of_vocab_candidate() {
        assert_eq!(CandidateMask::new(5, vec![1, 5]).unwrap_err(), HeadError::IndexOutOfVocab { index: 5, vocab_size: 5 });
        let h = head(10, vec![3, 7], Array2::zeros((2, 2)), Array1::zeros(2));
        let bad = CandidateMask { vocab_size: 10, support: vec![3, 12] };
        assert!(matches!(mlm_distribution(array![0.0, 0.0].view(), &h, &bad), Err(HeadError::IndexOutOfVocab { .. })));
    }

    fn qa() -> QaHead {
        QaHead { w1: Array2::eye(2), b1: Array1::zeros(2), activation: Activation::Identity, w2: array![1.0, 0.0], b2: 0.0 }
    }

    #[test]
    fn qa_closed_form() {
        let a = array![0.0, 0.0];
        let b = array![3.0f64.ln(), 0.0];
        let p = qa_scores(&[a.view(), b.view()], &qa()).unwrap();
        assert!((p[0] - 0.25).abs() < 1e-12 && (p[1] - 0.75).abs() < 1e-12);
        let same = qa_scores(&[b.view(), b.view(), b.view()], &qa()).unwrap();
        assert!(same.iter().all(|x| (x - 1.0 / 3.0).abs() < 1e-15));
        assert_eq!(qa_scores(&[a.view()], &qa()).unwrap_err(), HeadError::TooFewCandidates(1));
    }

    #[test]
    fn qa_is_permutation_equivariant() {
        let vs = [array![0.1, 2.0], array![-1.0, 0.5], array![0.7, 0.0]];
        let p = qa_scores(&[vs[0].view(), vs[1].view(), vs[2].view()], &qa()).unwrap();
        let q = qa_scores(&[vs[2].view(), vs[0].view(), vs[1].view()], &qa()).unwrap();
        for (a, b) in [p[2], p[0], p[1]].iter().zip(&q) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn predict_ties_and_order() {
        assert_eq!(predict(&[0.1, 0.9]), 1);
        assert_eq!(predict(&[0.5, 0.5]), 0);
    }

    #[test]
    fn gelu_derivative_matches_finite_differences() {
        for act in [Activation::GeluTanh, Activation::Tanh, Activation::Identity] {
            for i in -40..40 {
                let x = i as f64 * 0.1 + 0.013;
                let fd = (act.apply(x + 1e-6) - act.apply(x - 1e-6)) / 2e-6;
                assert!((fd - act.derivative(x)).abs() < 1e-7, "{act:?} at {x}");
            }
        }
    }

    #[test]
    fn layer_norm_backward_matches_finite_differences() {
        let a = [0.3, -1.2, 0.8, 2.0, -0.1];
        let gamma = [1.1, 0.9, 1.0, 1.2, 0.8];
        let beta = [0.0, 0.1, -0.1, 0.2, 0.0];
        let w = [0.5, -0.3, 0.9, 0.1, -0.7];
        let loss = |a: &[f64]| {
            let mut o = [0.0; 5];
            layer_norm_forward(a, &gamma, &beta, 1e-5, &mut o);
            o.iter().zip(&w).map(|(x, w)| x * w).sum::<f64>()
        };
        let mut o = [0.0; 5];
        let (xhat, inv) = layer_norm_forward(&a, &gamma, &beta, 1e-5, &mut o);
        let mut da = [0.0; 5];
        layer_norm_backward(&w, &xhat, inv, &gamma, None, None, &mut da);
        for i in 0..5 {
            let mut p = a;
            let mut m = a;
            p[i] += 1e-6;
            m[i] -= 1e-6;
            let fd = (loss(&p) - loss(&m)) / 2e-6;
            assert!((fd - da[i]).abs() < 1e-7);
        }
    }

    fn scan_argmax(p: &[f64]) -> usize {
        let max = p.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        p.iter().position(|&x| x == max).unwrap()
    }

    proptest! {
        #[test]
        fn predict_matches_scan(p in prop::collection::vec(0.0f64..1.0, 1..12)) {
            prop_assert_eq!(predict(&p), scan_argmax(&p));
        }

        #[test]
        fn masked_softmax_is_a_distribution_on_the_support(
            logits in prop::collection::vec(-50.0f64..50.0, 6..40),
            k in 2usize..6,
            c in -1e3f64..1e3,
        ) {
            let v = logits.len();
            let support: Vec<usize> = (0..k).map(|i| (i * 7 + 1) % v).collect();
            prop_assume!(support.iter().enumerate().all(|(i, s)| !support[..i].contains(s)));
            let mask = CandidateMask::new(v, support.clone()).unwrap();
            let p = masked_softmax(&logits, &mask).unwrap();
            prop_assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-9);
            for i in 0..v {
                if !support.contains(&i) {
                    prop_assert_eq!(p[i], 0.0);
                }
            }
            let shifted: Vec<f64> = logits.iter().map(|l| l + c).collect();
            let q = masked_softmax(&shifted, &mask).unwrap();
            prop_assert_eq!(predict(&restrict(&p, &mask)), predict(&restrict(&q, &mask)));
        }
    }
}
