//! ESIM-style MC-QA baseline over static embeddings.
//!
//! For a question `q` and each candidate answer `a_k`:
//!
//! ```text
//! ā = BiLSTM₁(E q)          b̄ = BiLSTM₁(E a_k)
//! e = ā b̄ᵀ                  ã = rowsoftmax(e) b̄      b̃ = colsoftmax(e)ᵀ ā
//! m_a = [ā; ã; ā − ã; ā ⊙ ã]  (same for b)
//! v_a = BiLSTM₂(relu(m_a W_p + b_p))                   (same for b)
//! z = [avg v_a; max v_a; avg v_b; max v_b]
//! logit_k = w_o · tanh(W_f z + b_f) + b_o
//! ```
//!
//! followed by a softmax over the K logits. Embeddings stay fixed. LSTM gates are ordered
//! input, forget, output, cell.

use ndarray::{concatenate, s, Array1, Array2, ArrayView1, ArrayView2, Axis};
use thiserror::Error;

use crate::heads::softmax;
use crate::kb::EmbeddingTable;
use crate::probes::Example;
use crate::text::baseline_tokens;
use crate::train::models::uniform_init;
use crate::train::{Group, Model, ParamSet, TaskData};

pub const DEFAULT_WIDTH: usize = 64;

#[derive(Debug, Error, PartialEq)]
pub enum EsimError {
    #[error("example {example}: candidate {candidate} is empty after tokenization")]
    EmptyCandidate { example: usize, candidate: usize },
    #[error("example {0}: question is empty after tokenization")]
    EmptyQuestion(usize),
}

fn embed(tokens: &[String], table: &EmbeddingTable) -> Array2<f64> {
    let toks = baseline_tokens(tokens);
    let d = table.dim();
    let mut m = Array2::zeros((toks.len(), d));
    for (i, t) in toks.iter().enumerate() {
        if let Some(v) = table.get(t) {
            m.row_mut(i).assign(&ArrayView1::from(v));
        }
    }
    m
}

#[derive(Debug, Clone, PartialEq)]
pub struct EsimData {
    pub questions: Vec<Array2<f64>>,
    pub answers: Vec<Vec<Array2<f64>>>,
    pub gold: Vec<usize>,
}

impl EsimData {
    pub fn build(exs: &[Example], table: &EmbeddingTable) -> Result<Self, EsimError> {
        let mut questions = Vec::new();
        let mut answers = Vec::new();
        for (i, e) in exs.iter().enumerate() {
            let q = embed(&e.tokens, table);
            if q.nrows() == 0 {
                return Err(EsimError::EmptyQuestion(i));
            }
            let mut a = Vec::new();
            for (k, c) in e.candidates.iter().enumerate() {
                let m = embed(&crate::text::words(c), table);
                if m.nrows() == 0 {
                    return Err(EsimError::EmptyCandidate { example: i, candidate: k });
                }
                a.push(m);
            }
            questions.push(q);
            answers.push(a);
        }
        Ok(EsimData { questions, answers, gold: exs.iter().map(|e| e.gold).collect() })
    }
}

impl TaskData for EsimData {
    fn len(&self) -> usize {
        self.gold.len()
    }
    fn gold(&self, i: usize) -> usize {
        self.gold[i]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EsimModel {
    pub params: ParamSet,
    pub d_e: usize,
    pub width: usize,
}

fn sigmoid(x: f64) -> f64 {
    1.0 / (1.0 + (-x).exp())
}

struct LstmCache {
    x: Array2<f64>,
    /// Activated gates per time step, `[L, 4h]` in (i, f, o, g) order.
    gates: Array2<f64>,
    c: Array2<f64>,
    h_prev: Array2<f64>,
    c_prev: Array2<f64>,
    reverse: bool,
}

struct BiCache {
    fwd: LstmCache,
    bwd: LstmCache,
}

struct SideCache {
    m: Array2<f64>,
    proj_pre: Array2<f64>,
    lstm: BiCache,
    v: Array2<f64>,
    argmax: Vec<usize>,
}

struct PairCache {
    b: Array2<f64>,
    b_lstm: BiCache,
    att_row: Array2<f64>,
    att_col: Array2<f64>,
    a_tilde: Array2<f64>,
    b_tilde: Array2<f64>,
    side_a: SideCache,
    side_b: SideCache,
    pool: Array1<f64>,
    t: Array1<f64>,
}

struct ExampleCache {
    a: Array2<f64>,
    a_lstm: BiCache,
    pairs: Vec<PairCache>,
}

impl EsimModel {
    pub fn random(d_e: usize, width: usize, seed: u64) -> Self {
        let h = width;
        let mut p = ParamSet::default();
        let lstm = |p: &mut ParamSet, name: &str, input: usize| {
            let bound = 1.0 / (h as f64).sqrt();
            p.push(&format!("{name}.wx"), &[4 * h, input], Group::Hidden, uniform_init(seed, &format!("esim/{name}.wx"), 4 * h * input, bound));
            p.push(&format!("{name}.wh"), &[4 * h, h], Group::Hidden, uniform_init(seed, &format!("esim/{name}.wh"), 4 * h * h, bound));
            let mut b = vec![0.0; 4 * h];
            b[h..2 * h].iter_mut().for_each(|x| *x = 1.0);
            p.push(&format!("{name}.b"), &[4 * h], Group::Hidden, b);
        };
        lstm(&mut p, "enc.f", d_e);
        lstm(&mut p, "enc.b", d_e);
        let g = |a: usize, b: usize| (6.0 / (a + b) as f64).sqrt();
        p.push("proj.w", &[h, 8 * h], Group::Hidden, uniform_init(seed, "esim/proj.w", 8 * h * h, g(8 * h, h)));
        p.push("proj.b", &[h], Group::Hidden, vec![0.0; h]);
        lstm(&mut p, "comp.f", h);
        lstm(&mut p, "comp.b", h);
        p.push("mlp.w", &[h, 8 * h], Group::Hidden, uniform_init(seed, "esim/mlp.w", 8 * h * h, g(8 * h, h)));
        p.push("mlp.b", &[h], Group::Hidden, vec![0.0; h]);
        p.push("out.w", &[h], Group::Output, uniform_init(seed, "esim/out.w", h, g(h, 1)));
        p.push("out.b", &[1], Group::Output, vec![0.0]);
        EsimModel { params: p, d_e, width }
    }

    fn mat(&self, name: &str, rows: usize, cols: usize) -> ArrayView2<'_, f64> {
        ArrayView2::from_shape((rows, cols), self.params.get(name)).expect("block shape")
    }

    fn vec(&self, name: &str) -> ArrayView1<'_, f64> {
        ArrayView1::from(self.params.get(name))
    }

    fn lstm_forward(&self, name: &str, x: ArrayView2<f64>, reverse: bool) -> (Array2<f64>, LstmCache) {
        let h = self.width;
        let l = x.nrows();
        let wx = self.mat(&format!("{name}.wx"), 4 * h, x.ncols());
        let wh = self.mat(&format!("{name}.wh"), 4 * h, h);
        let mut pre = x.dot(&wx.t());
        pre += &self.vec(&format!("{name}.b"));
        let mut out = Array2::zeros((l, h));
        let mut gates = Array2::zeros((l, 4 * h));
        let mut cs = Array2::zeros((l, h));
        let mut h_prev_all = Array2::zeros((l, h));
        let mut c_prev_all = Array2::zeros((l, h));
        let mut hp = Array1::<f64>::zeros(h);
        let mut cp = Array1::<f64>::zeros(h);
        let order: Vec<usize> = if reverse { (0..l).rev().collect() } else { (0..l).collect() };
        for &t in &order {
            let z = &pre.row(t) + &wh.dot(&hp);
            let mut g = gates.row_mut(t);
            for j in 0..h {
                g[j] = sigmoid(z[j]);
                g[h + j] = sigmoid(z[h + j]);
                g[2 * h + j] = sigmoid(z[2 * h + j]);
                g[3 * h + j] = z[3 * h + j].tanh();
            }
            h_prev_all.row_mut(t).assign(&hp);
            c_prev_all.row_mut(t).assign(&cp);
            for j in 0..h {
                let c = g[h + j] * cp[j] + g[j] * g[3 * h + j];
                cs[(t, j)] = c;
                out[(t, j)] = g[2 * h + j] * c.tanh();
            }
            hp = out.row(t).to_owned();
            cp = cs.row(t).to_owned();
        }
        (out, LstmCache { x: x.to_owned(), gates, c: cs, h_prev: h_prev_all, c_prev: c_prev_all, reverse })
    }

    /// Returns dL/dx.
    fn lstm_backward(&self, name: &str, cache: &LstmCache, dout: ArrayView2<f64>, grad: &mut [f64]) -> Array2<f64> {
        let h = self.width;
        let l = cache.x.nrows();
        let wx = self.mat(&format!("{name}.wx"), 4 * h, cache.x.ncols());
        let wh = self.mat(&format!("{name}.wh"), 4 * h, h);
        let mut dz = Array2::<f64>::zeros((l, 4 * h));
        let mut dh_next = Array1::<f64>::zeros(h);
        let mut dc_next = Array1::<f64>::zeros(h);
        let order: Vec<usize> = if cache.reverse { (0..l).collect() } else { (0..l).rev().collect() };
        for &t in &order {
            let g = cache.gates.row(t);
            let mut d = dz.row_mut(t);
            for j in 0..h {
                let (i, f, o, gg) = (g[j], g[h + j], g[2 * h + j], g[3 * h + j]);
                let tc = cache.c[(t, j)].tanh();
                let dh = dout[(t, j)] + dh_next[j];
                let dc = dh * o * (1.0 - tc * tc) + dc_next[j];
                d[j] = dc * gg * i * (1.0 - i);
                d[h + j] = dc * cache.c_prev[(t, j)] * f * (1.0 - f);
                d[2 * h + j] = dh * tc * o * (1.0 - o);
                d[3 * h + j] = dc * i * (1.0 - gg * gg);
                dc_next[j] = dc * f;
            }
            dh_next = wh.t().dot(&d);
        }
        add(grad, self.params.range(&format!("{name}.wx")), &dz.t().dot(&cache.x));
        add(grad, self.params.range(&format!("{name}.wh")), &dz.t().dot(&cache.h_prev));
        add(grad, self.params.range(&format!("{name}.b")), &dz.sum_axis(Axis(0)));
        dz.dot(&wx)
    }

    fn bilstm_forward(&self, name: &str, x: ArrayView2<f64>) -> (Array2<f64>, BiCache) {
        let (of, cf) = self.lstm_forward(&format!("{name}.f"), x, false);
        let (ob, cb) = self.lstm_forward(&format!("{name}.b"), x, true);
        (concatenate![Axis(1), of, ob], BiCache { fwd: cf, bwd: cb })
    }

    fn bilstm_backward(&self, name: &str, cache: &BiCache, dout: ArrayView2<f64>, grad: &mut [f64]) -> Array2<f64> {
        let h = self.width;
        let dxf = self.lstm_backward(&format!("{name}.f"), &cache.fwd, dout.slice(s![.., ..h]), grad);
        let dxb = self.lstm_backward(&format!("{name}.b"), &cache.bwd, dout.slice(s![.., h..]), grad);
        dxf + dxb
    }

    fn side_forward(&self, x: &Array2<f64>, x_tilde: &Array2<f64>) -> (Array1<f64>, Array1<f64>, SideCache) {
        let h = self.width;
        let m = concatenate![Axis(1), x.view(), x_tilde.view(), (x - x_tilde).view(), (x * x_tilde).view()];
        let mut pre = m.dot(&self.mat("proj.w", h, 8 * h).t());
        pre += &self.vec("proj.b");
        let p = pre.mapv(|v| v.max(0.0));
        let (v, lstm) = self.bilstm_forward("comp", p.view());
        let avg = v.mean_axis(Axis(0)).expect("non-empty");
        let mut argmax = vec![0; 2 * h];
        let mut max = Array1::from_elem(2 * h, f64::NEG_INFINITY);
        for (t, row) in v.rows().into_iter().enumerate() {
            for j in 0..2 * h {
                if row[j] > max[j] {
                    max[j] = row[j];
                    argmax[j] = t;
                }
            }
        }
        (avg, max, SideCache { m, proj_pre: pre, lstm, v, argmax })
    }

    /// Given gradients for (avg, max), returns (dx, dx_tilde).
    fn side_backward(&self, c: &SideCache, x: &Array2<f64>, x_tilde: &Array2<f64>, davg: ArrayView1<f64>, dmax: ArrayView1<f64>, grad: &mut [f64]) -> (Array2<f64>, Array2<f64>) {
        let h = self.width;
        let l = c.v.nrows();
        let mut dv = Array2::<f64>::zeros((l, 2 * h));
        for t in 0..l {
            dv.row_mut(t).scaled_add(1.0 / l as f64, &davg);
        }
        for j in 0..2 * h {
            dv[(c.argmax[j], j)] += dmax[j];
        }
        let dp = self.bilstm_backward("comp", &c.lstm, dv.view(), grad);
        let mut dpre = dp;
        ndarray::Zip::from(&mut dpre).and(&c.proj_pre).for_each(|d, &z| {
            if z <= 0.0 {
                *d = 0.0
            }
        });
        add(grad, self.params.range("proj.w"), &dpre.t().dot(&c.m));
        add(grad, self.params.range("proj.b"), &dpre.sum_axis(Axis(0)));
        let dm = dpre.dot(&self.mat("proj.w", h, 8 * h));
        let w = 2 * h;
        let (d1, d2, d3, d4) = (dm.slice(s![.., ..w]), dm.slice(s![.., w..2 * w]), dm.slice(s![.., 2 * w..3 * w]), dm.slice(s![.., 3 * w..]));
        let dx = &d1 + &d3 + &(&d4 * x_tilde);
        let dxt = &d2 - &d3 + &(&d4 * x);
        (dx, dxt)
    }

    fn pair_forward(&self, a: &Array2<f64>, answer: &Array2<f64>) -> (f64, PairCache) {
        let h = self.width;
        let (b, b_lstm) = self.bilstm_forward("enc", answer.view());
        let e = a.dot(&b.t());
        let mut att_row = e.clone();
        for mut r in att_row.rows_mut() {
            let p = softmax(&r.to_vec());
            r.assign(&ArrayView1::from(&p));
        }
        let mut att_col = e;
        for mut c in att_col.columns_mut() {
            let p = softmax(&c.to_vec());
            c.assign(&ArrayView1::from(&p));
        }
        let a_tilde = att_row.dot(&b);
        let b_tilde = att_col.t().dot(a);
        let (avg_a, max_a, side_a) = self.side_forward(a, &a_tilde);
        let (avg_b, max_b, side_b) = self.side_forward(&b, &b_tilde);
        let pool = concatenate![Axis(0), avg_a, max_a, avg_b, max_b];
        let mut t = self.mat("mlp.w", h, 8 * h).dot(&pool);
        t += &self.vec("mlp.b");
        t.mapv_inplace(f64::tanh);
        let logit = t.dot(&self.vec("out.w")) + self.params.get("out.b")[0];
        (logit, PairCache { b, b_lstm, att_row, att_col, a_tilde, b_tilde, side_a, side_b, pool, t })
    }

    /// Accumulates parameter gradients; returns dL/dā.
    fn pair_backward(&self, a: &Array2<f64>, c: &PairCache, dlogit: f64, grad: &mut [f64]) -> Array2<f64> {
        let h = self.width;
        add(grad, self.params.range("out.w"), &(&c.t * dlogit));
        grad[self.params.range("out.b").start] += dlogit;
        let dt = &self.vec("out.w") * dlogit;
        let dpre = &dt * &c.t.mapv(|v| 1.0 - v * v);
        let outer = dpre.view().insert_axis(Axis(1)).dot(&c.pool.view().insert_axis(Axis(0)));
        add(grad, self.params.range("mlp.w"), &outer);
        add(grad, self.params.range("mlp.b"), &dpre);
        let dpool = self.mat("mlp.w", h, 8 * h).t().dot(&dpre);
        let w = 2 * h;
        let (da, dat) = self.side_backward(&c.side_a, a, &c.a_tilde, dpool.slice(s![..w]), dpool.slice(s![w..2 * w]), grad);
        let (db, dbt) = self.side_backward(&c.side_b, &c.b, &c.b_tilde, dpool.slice(s![2 * w..3 * w]), dpool.slice(s![3 * w..]), grad);
        let mut da = da;
        let mut db = db;
        // ã = A b̄
        let d_att_row = dat.dot(&c.b.t());
        db += &c.att_row.t().dot(&dat);
        let mut de = Array2::<f64>::zeros(c.att_row.dim());
        for i in 0..de.nrows() {
            let r = c.att_row.row(i);
            let dr = d_att_row.row(i);
            let dot = r.dot(&dr);
            for j in 0..de.ncols() {
                de[(i, j)] += r[j] * (dr[j] - dot);
            }
        }
        // b̃ = Bᵀ ā
        let d_att_col = a.dot(&dbt.t());
        da += &c.att_col.dot(&dbt);
        for j in 0..de.ncols() {
            let col = c.att_col.column(j);
            let dcol = d_att_col.column(j);
            let dot = col.dot(&dcol);
            for i in 0..de.nrows() {
                de[(i, j)] += col[i] * (dcol[i] - dot);
            }
        }
        // e = ā b̄ᵀ
        da += &de.dot(&c.b);
        db += &de.t().dot(a);
        self.bilstm_backward("enc", &c.b_lstm, db.view(), grad);
        da
    }

    fn example_forward(&self, q: &Array2<f64>, answers: &[Array2<f64>]) -> (Vec<f64>, ExampleCache) {
        let (a, a_lstm) = self.bilstm_forward("enc", q.view());
        let mut logits = Vec::with_capacity(answers.len());
        let mut pairs = Vec::with_capacity(answers.len());
        for ans in answers {
            let (l, c) = self.pair_forward(&a, ans);
            logits.push(l);
            pairs.push(c);
        }
        (logits, ExampleCache { a, a_lstm, pairs })
    }

    /// Candidate distribution for one question and its candidate answers.
    pub fn distribution(&self, q: &Array2<f64>, answers: &[Array2<f64>]) -> Vec<f64> {
        softmax(&self.example_forward(q, answers).0)
    }
}

fn add<D: ndarray::Dimension>(grad: &mut [f64], range: std::ops::Range<usize>, g: &ndarray::Array<f64, D>) {
    for (a, b) in grad[range].iter_mut().zip(g.iter()) {
        *a += b;
    }
}

impl Model for EsimModel {
    type Data = EsimData;

    fn params(&self) -> &ParamSet {
        &self.params
    }

    fn params_mut(&mut self) -> &mut ParamSet {
        &mut self.params
    }

    fn loss_grad(&self, data: &EsimData, batch: &[usize], grad: &mut [f64], hidden: bool) -> f64 {
        let bsz = batch.len() as f64;
        let mut loss = 0.0;
        for &i in batch {
            let (logits, cache) = self.example_forward(&data.questions[i], &data.answers[i]);
            let p = softmax(&logits);
            let gold = data.gold[i];
            loss -= p[gold].max(f64::MIN_POSITIVE).ln();
            let mut da = Array2::<f64>::zeros(cache.a.dim());
            for (k, pc) in cache.pairs.iter().enumerate() {
                let dl = (p[k] - if k == gold { 1.0 } else { 0.0 }) / bsz;
                if hidden {
                    da += &self.pair_backward(&cache.a, pc, dl, grad);
                } else {
                    add(grad, self.params.range("out.w"), &(&pc.t * dl));
                    grad[self.params.range("out.b").start] += dl;
                }
            }
            if hidden {
                self.bilstm_backward("enc", &cache.a_lstm, da.view(), grad);
            }
        }
        loss / bsz
    }

    fn probs(&self, data: &EsimData, idx: &[usize]) -> Vec<Vec<f64>> {
        idx.iter().map(|&i| self.distribution(&data.questions[i], &data.answers[i])).collect()
    }
}

/// ESIM forward for one example.
pub fn baseline_qa_forward(ex: &Example, table: &EmbeddingTable, model: &EsimModel) -> Result<Vec<f64>, EsimError> {
    let d = EsimData::build(std::slice::from_ref(ex), table)?;
    Ok(model.distribution(&d.questions[0], &d.answers[0]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::probes::Setup;
    use crate::train::tests::grad_check;
    use rand::Rng;

    fn rand_mat(rows: usize, cols: usize, seed: u64) -> Array2<f64> {
        let mut r = crate::util::rng(seed, "esim-test");
        Array2::from_shape_fn((rows, cols), |_| r.gen_range(-1.0..1.0))
    }

    #[test]
    fn gradients_match_finite_differences() {
        let data = EsimData {
            questions: vec![rand_mat(4, 3, 1), rand_mat(3, 3, 2)],
            answers: vec![vec![rand_mat(2, 3, 3), rand_mat(1, 3, 4), rand_mat(3, 3, 5)], vec![rand_mat(2, 3, 6), rand_mat(2, 3, 7)]],
            gold: vec![2, 0],
        };
        let mut m = EsimModel::random(3, 3, 11);
        // keep relu inputs away from the kink so central differences are well defined
        m.params.get_mut("proj.b").iter_mut().for_each(|b| *b = 0.05);
        let err = grad_check(&m, &data, &[0, 1]);
        assert!(err <= 1e-4, "{err}");
    }

    #[test]
    fn identical_candidates_are_uniform() {
        let table = EmbeddingTable::new(2, vec!["red".into(), "apple".into(), "what".into()], vec![1.0, 0.0, 0.5, 0.5, 0.0, 1.0]);
        let ex = Example {
            setup: Setup::McQa,
            tokens: vec!["what".into(), "red".into()],
            candidates: vec!["apple".into(), "apple".into(), "apple".into()],
            gold: 0,
            arguments: vec![],
            template_id: "t".into(),
        };
        let p = baseline_qa_forward(&ex, &table, &EsimModel::random(2, 4, 1)).unwrap();
        assert!(p.iter().all(|x| (x - 1.0 / 3.0).abs() < 1e-12));
    }

    #[test]
    fn empty_candidate_is_an_argument_error() {
        let table = EmbeddingTable::new(1, vec!["a".into()], vec![1.0]);
        let ex = Example {
            setup: Setup::McQa,
            tokens: vec!["a".into()],
            candidates: vec!["a".into(), "".into()],
            gold: 0,
            arguments: vec![],
            template_id: "t".into(),
        };
        assert_eq!(baseline_qa_forward(&ex, &table, &EsimModel::random(1, 2, 1)).unwrap_err(), EsimError::EmptyCandidate { example: 0, candidate: 1 });
    }
}
