//! Trainable heads over frozen vectors: the MC-MLM head (also used by the concat baseline) and
//! the MC-QA head. Both compute mean cross-entropy and its exact gradient.

use ndarray::{Array1, Array2, ArrayView1, ArrayView2, Axis};
use rand::Rng;

use super::params::{Group, ParamSet};
use crate::heads::{layer_norm_backward, layer_norm_forward, softmax, Activation, LayerNorm, MlmHead};
use crate::util;

pub trait TaskData: Sync {
    fn len(&self) -> usize;
    fn gold(&self, i: usize) -> usize;
    fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub trait Model: Clone + Send + Sync {
    type Data: TaskData;

    fn params(&self) -> &ParamSet;
    fn params_mut(&mut self) -> &mut ParamSet;

    /// Mean cross-entropy over `batch`; adds the gradient into `grad`. With `hidden == false`
    /// the Hidden-group gradient may be skipped.
    fn loss_grad(&self, data: &Self::Data, batch: &[usize], grad: &mut [f64], hidden: bool) -> f64;

    /// Candidate distributions of the examples in `idx`.
    fn probs(&self, data: &Self::Data, idx: &[usize]) -> Vec<Vec<f64>>;
}

/// Cross-entropy of `logits` against `gold` and `softmax(logits)`.
fn xent(logits: &[f64], gold: usize) -> (f64, Vec<f64>) {
    let max = logits.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let lse = max + logits.iter().map(|l| (l - max).exp()).sum::<f64>().ln();
    (lse - logits[gold], softmax(logits))
}

pub fn uniform_init(seed: u64, label: &str, n: usize, bound: f64) -> Vec<f64> {
    let mut rng = util::rng(seed, label);
    (0..n).map(|_| rng.gen_range(-bound..bound)).collect()
}

fn glorot(fan_in: usize, fan_out: usize) -> f64 {
    (6.0 / (fan_in + fan_out) as f64).sqrt()
}

/// Frozen mask-position vectors with per-example candidate rows into the head's output rows.
#[derive(Debug, Clone, PartialEq)]
pub struct MlmData {
    pub x: Array2<f64>,
    pub candidates: Vec<Vec<usize>>,
    pub gold: Vec<usize>,
}

impl TaskData for MlmData {
    fn len(&self) -> usize {
        self.gold.len()
    }
    fn gold(&self, i: usize) -> usize {
        self.gold[i]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MlmModel {
    pub params: ParamSet,
    pub d_in: usize,
    pub hidden: usize,
    pub n_rows: usize,
    pub activation: Activation,
    pub layer_norm: bool,
    pub eps: f64,
}

struct MlmForward {
    z: Array2<f64>,
    u: Array2<f64>,
    xhat: Vec<Vec<f64>>,
    inv: Vec<f64>,
}

impl MlmModel {
    /// Starts from exported (pretrained) weights; output rows keep the head's row order.
    pub fn from_head(h: &MlmHead) -> Self {
        let (hid, d) = h.w1.dim();
        let r = h.rows.len();
        let mut p = ParamSet::default();
        p.push("w1", &[hid, d], Group::Hidden, h.w1.iter().copied().collect());
        p.push("b1", &[hid], Group::Hidden, h.b1.to_vec());
        if let Some(ln) = &h.layer_norm {
            p.push("ln.gamma", &[hid], Group::Hidden, ln.gamma.clone());
            p.push("ln.beta", &[hid], Group::Hidden, ln.beta.clone());
        }
        p.push("w2", &[r, hid], Group::Output, h.w2.iter().copied().collect());
        p.push("b2", &[r], Group::Output, h.b2.to_vec());
        MlmModel {
            params: p,
            d_in: d,
            hidden: hid,
            n_rows: r,
            activation: h.activation,
            layer_norm: h.layer_norm.is_some(),
            eps: h.layer_norm.as_ref().map_or(1e-5, |l| l.eps),
        }
    }

    /// Glorot-uniform weights, zero biases, unit layer-norm gain.
    pub fn random(d_in: usize, hidden: usize, n_rows: usize, activation: Activation, layer_norm: bool, seed: u64) -> Self {
        let mut p = ParamSet::default();
        p.push("w1", &[hidden, d_in], Group::Hidden, uniform_init(seed, "init/w1", hidden * d_in, glorot(d_in, hidden)));
        p.push("b1", &[hidden], Group::Hidden, vec![0.0; hidden]);
        if layer_norm {
            p.push("ln.gamma", &[hidden], Group::Hidden, vec![1.0; hidden]);
            p.push("ln.beta", &[hidden], Group::Hidden, vec![0.0; hidden]);
        }
        p.push("w2", &[n_rows, hidden], Group::Output, uniform_init(seed, "init/w2", n_rows * hidden, glorot(hidden, n_rows)));
        p.push("b2", &[n_rows], Group::Output, vec![0.0; n_rows]);
        MlmModel { params: p, d_in, hidden, n_rows, activation, layer_norm, eps: 1e-5 }
    }

    pub fn to_head(&self, rows: Vec<usize>, vocab_size: usize) -> MlmHead {
        let p = &self.params;
        MlmHead {
            w1: self.w1().to_owned(),
            b1: Array1::from(p.get("b1").to_vec()),
            activation: self.activation,
            layer_norm: self.layer_norm.then(|| LayerNorm {
                gamma: p.get("ln.gamma").to_vec(),
                beta: p.get("ln.beta").to_vec(),
                eps: self.eps,
            }),
            rows,
            w2: self.w2().to_owned(),
            b2: Array1::from(p.get("b2").to_vec()),
            vocab_size,
            tied: false,
        }
    }

    fn w1(&self) -> ArrayView2<'_, f64> {
        ArrayView2::from_shape((self.hidden, self.d_in), self.params.get("w1")).expect("w1 shape")
    }

    fn w2(&self) -> ArrayView2<'_, f64> {
        ArrayView2::from_shape((self.n_rows, self.hidden), self.params.get("w2")).expect("w2 shape")
    }

    fn forward(&self, xb: ArrayView2<f64>) -> MlmForward {
        let mut z = xb.dot(&self.w1().t());
        z += &ArrayView1::from(self.params.get("b1"));
        let mut u = z.mapv(|v| self.activation.apply(v));
        let mut xhat = Vec::new();
        let mut inv = Vec::new();
        if self.layer_norm {
            let (g, b) = (self.params.get("ln.gamma"), self.params.get("ln.beta"));
            for mut row in u.rows_mut() {
                let a = row.to_vec();
                let mut out = vec![0.0; a.len()];
                let (xh, iv) = layer_norm_forward(&a, g, b, self.eps, &mut out);
                row.assign(&ArrayView1::from(&out));
                xhat.push(xh);
                inv.push(iv);
            }
        }
        MlmForward { z, u, xhat, inv }
    }

    fn logits(&self, u: ArrayView1<f64>, cands: &[usize]) -> Vec<f64> {
        let w2 = self.w2();
        let b2 = self.params.get("b2");
        cands.iter().map(|&r| w2.row(r).dot(&u) + b2[r]).collect()
    }
}

impl Model for MlmModel {
    type Data = MlmData;

    fn params(&self) -> &ParamSet {
        &self.params
    }

    fn params_mut(&mut self) -> &mut ParamSet {
        &mut self.params
    }

    fn loss_grad(&self, data: &MlmData, batch: &[usize], grad: &mut [f64], hidden: bool) -> f64 {
        let xb = data.x.select(Axis(0), batch);
        let f = self.forward(xb.view());
        let bsz = batch.len() as f64;
        let h = self.hidden;
        let w2 = self.w2();
        let (w2r, b2r) = (self.params.range("w2"), self.params.range("b2"));
        let mut du = Array2::<f64>::zeros((batch.len(), h));
        let mut loss = 0.0;
        for (bi, &i) in batch.iter().enumerate() {
            let cands = &data.candidates[i];
            let u = f.u.row(bi);
            let (l, p) = xent(&self.logits(u, cands), data.gold[i]);
            loss += l;
            for (k, &r) in cands.iter().enumerate() {
                let d = (p[k] - if k == data.gold[i] { 1.0 } else { 0.0 }) / bsz;
                let g = &mut grad[w2r.start + r * h..w2r.start + (r + 1) * h];
                for j in 0..h {
                    g[j] += d * u[j];
                }
                grad[b2r.start + r] += d;
                du.row_mut(bi).scaled_add(d, &w2.row(r));
            }
        }
        if !hidden {
            return loss / bsz;
        }
        let mut dz = du;
        if self.layer_norm {
            let gamma = self.params.get("ln.gamma");
            let (gr, br) = (self.params.range("ln.gamma"), self.params.range("ln.beta"));
            let mut dg = vec![0.0; h];
            let mut db = vec![0.0; h];
            for bi in 0..batch.len() {
                let dout = dz.row(bi).to_vec();
                let mut da = vec![0.0; h];
                layer_norm_backward(&dout, &f.xhat[bi], f.inv[bi], gamma, Some(&mut dg), Some(&mut db), &mut da);
                dz.row_mut(bi).assign(&ArrayView1::from(&da));
            }
            for j in 0..h {
                grad[gr.start + j] += dg[j];
                grad[br.start + j] += db[j];
            }
        }
        ndarray::Zip::from(&mut dz).and(&f.z).for_each(|d, &z| *d *= self.activation.derivative(z));
        let gw1 = dz.t().dot(&xb);
        let w1r = self.params.range("w1");
        for (g, v) in grad[w1r].iter_mut().zip(gw1.iter()) {
            *g += v;
        }
        let b1r = self.params.range("b1");
        for (g, v) in grad[b1r].iter_mut().zip(dz.sum_axis(Axis(0)).iter()) {
            *g += v;
        }
        loss / bsz
    }

    fn probs(&self, data: &MlmData, idx: &[usize]) -> Vec<Vec<f64>> {
        let mut out = Vec::with_capacity(idx.len());
        for chunk in idx.chunks(256) {
            let xb = data.x.select(Axis(0), chunk);
            let f = self.forward(xb.view());
            for (bi, &i) in chunk.iter().enumerate() {
                out.push(softmax(&self.logits(f.u.row(bi), &data.candidates[i])));
            }
        }
        out
    }
}

/// Frozen `[CLS]` vectors; example `i` owns rows `offsets[i]..offsets[i + 1]`, one per candidate.
#[derive(Debug, Clone, PartialEq)]
pub struct QaData {
    pub x: Array2<f64>,
    pub offsets: Vec<usize>,
    pub gold: Vec<usize>,
}

impl QaData {
    pub fn from_rows(rows: &[Vec<Vec<f64>>], gold: Vec<usize>, dim: usize) -> Self {
        let mut offsets = vec![0];
        let mut flat = Vec::new();
        for r in rows {
            for v in r {
                assert_eq!(v.len(), dim);
                flat.extend_from_slice(v);
            }
            offsets.push(offsets.last().unwrap() + r.len());
        }
        let n = *offsets.last().unwrap();
        QaData { x: Array2::from_shape_vec((n, dim), flat).expect("rows"), offsets, gold }
    }
}

impl TaskData for QaData {
    fn len(&self) -> usize {
        self.gold.len()
    }
    fn gold(&self, i: usize) -> usize {
        self.gold[i]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct QaModel {
    pub params: ParamSet,
    pub d_in: usize,
    pub hidden: usize,
    pub activation: Activation,
}

impl QaModel {
    pub fn random(d_in: usize, hidden: usize, activation: Activation, seed: u64) -> Self {
        let mut p = ParamSet::default();
        p.push("w1", &[hidden, d_in], Group::Hidden, uniform_init(seed, "init/qa.w1", hidden * d_in, glorot(d_in, hidden)));
        p.push("b1", &[hidden], Group::Hidden, vec![0.0; hidden]);
        p.push("w2", &[hidden], Group::Output, uniform_init(seed, "init/qa.w2", hidden, glorot(hidden, 1)));
        p.push("b2", &[1], Group::Output, vec![0.0]);
        QaModel { params: p, d_in, hidden, activation }
    }

    fn w1(&self) -> ArrayView2<'_, f64> {
        ArrayView2::from_shape((self.hidden, self.d_in), self.params.get("w1")).expect("w1 shape")
    }

    fn rows(data: &QaData, batch: &[usize]) -> Vec<usize> {
        batch.iter().flat_map(|&i| data.offsets[i]..data.offsets[i + 1]).collect()
    }

    /// Pre-activations and per-row logits.
    fn forward(&self, x: ArrayView2<f64>) -> (Array2<f64>, Array2<f64>, Vec<f64>) {
        let mut z = x.dot(&self.w1().t());
        z += &ArrayView1::from(self.params.get("b1"));
        let a = z.mapv(|v| self.activation.apply(v));
        let w2 = ArrayView1::from(self.params.get("w2"));
        let b2 = self.params.get("b2")[0];
        let logits = a.rows().into_iter().map(|r| r.dot(&w2) + b2).collect();
        (z, a, logits)
    }
}

impl Model for QaModel {
    type Data = QaData;

    fn params(&self) -> &ParamSet {
        &self.params
    }

    fn params_mut(&mut self) -> &mut ParamSet {
        &mut self.params
    }

    fn loss_grad(&self, data: &QaData, batch: &[usize], grad: &mut [f64], hidden: bool) -> f64 {
        let rows = Self::rows(data, batch);
        let xb = data.x.select(Axis(0), &rows);
        let (z, a, logits) = self.forward(xb.view());
        let bsz = batch.len() as f64;
        let mut dlogit = vec![0.0; rows.len()];
        let mut loss = 0.0;
        let mut at = 0;
        for &i in batch {
            let k = data.offsets[i + 1] - data.offsets[i];
            let (l, p) = xent(&logits[at..at + k], data.gold[i]);
            loss += l;
            for j in 0..k {
                dlogit[at + j] = (p[j] - if j == data.gold[i] { 1.0 } else { 0.0 }) / bsz;
            }
            at += k;
        }
        let (w2r, b2r) = (self.params.range("w2"), self.params.range("b2"));
        let w2 = ArrayView1::from(self.params.get("w2")).to_owned();
        for (ri, d) in dlogit.iter().enumerate() {
            for (g, v) in grad[w2r.clone()].iter_mut().zip(a.row(ri)) {
                *g += d * v;
            }
            grad[b2r.start] += d;
        }
        if !hidden {
            return loss / bsz;
        }
        let mut dz = Array2::<f64>::zeros(z.dim());
        for (ri, d) in dlogit.iter().enumerate() {
            let mut row = dz.row_mut(ri);
            for j in 0..self.hidden {
                row[j] = d * w2[j] * self.activation.derivative(z[(ri, j)]);
            }
        }
        let gw1 = dz.t().dot(&xb);
        let w1r = self.params.range("w1");
        for (g, v) in grad[w1r].iter_mut().zip(gw1.iter()) {
            *g += v;
        }
        let b1r = self.params.range("b1");
        for (g, v) in grad[b1r].iter_mut().zip(dz.sum_axis(Axis(0)).iter()) {
            *g += v;
        }
        loss / bsz
    }

    fn probs(&self, data: &QaData, idx: &[usize]) -> Vec<Vec<f64>> {
        let mut out = Vec::with_capacity(idx.len());
        for chunk in idx.chunks(256) {
            let rows = Self::rows(data, chunk);
            let xb = data.x.select(Axis(0), &rows);
            let (_, _, logits) = self.forward(xb.view());
            let mut at = 0;
            for &i in chunk {
                let k = data.offsets[i + 1] - data.offsets[i];
                out.push(softmax(&logits[at..at + k]));
                at += k;
            }
        }
        out
    }
}

/// Checks that `data` fits `model`.
pub fn check_mlm_data(data: &MlmData, model: &MlmModel) -> Result<(), String> {
    if data.x.ncols() != model.d_in {
        return Err(format!("vectors have {} entries, head expects {}", data.x.ncols(), model.d_in));
    }
    for (i, c) in data.candidates.iter().enumerate() {
        if c.iter().any(|&r| r >= model.n_rows) || data.gold[i] >= c.len() {
            return Err(format!("example {i} references rows outside the head"));
        }
    }
    Ok(())
}
