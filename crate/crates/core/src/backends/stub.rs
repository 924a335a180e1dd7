//! Deterministic hash-seeded encoder.
//!
//! Every number is a function of `(seed, label, j)`:
//!
//! ```text
//! unit(label, j) = splitmix64(seed ^ fnv1a64(label) ^ (j + 1) * 0x9E3779B97F4A7C15) → [-1, 1)
//! e(piece)_j     = unit("tok:" + piece, j)
//! p(i)_j         = 0.5 * unit("pos:" + i, j)
//! c              = mean over pieces i of tanh(e(piece_i) + p(i))
//! h_i            = e(piece_i) + p(i) + c          (rounded to f32)
//! ```
//!
//! The exported MLM head uses `W1[r][j] = unit("w1:" + r, j) / √D`, `b1_j = 0.1 unit("b1", j)`,
//! GELU (tanh form), layer norm with `γ_j = 1 + 0.1 unit("ln.gamma", j)`,
//! `β_j = 0.1 unit("ln.beta", j)`, `eps = 1e-5`, a decoder tied to `e` and decoder bias
//! `0.1 unit("bias:" + piece, 0)`.
//!
//! Tokenization lowercases, keeps `[CLS]`-style markers whole and splits unknown words greedily
//! into the longest known prefix followed by `##`-continuations.

use std::collections::HashMap;

use super::protocol::{
    EncodeRequest, EncodeResponse, ErrorDetail, ErrorKind, HeadResponse, InfoResponse, LayerNormExport, Tensor,
    TraceEntry,
};
use super::{Backend, BackendError};
use crate::controls::NONSENSE;
use crate::heads::Activation;
use crate::kb::KbStore;
use crate::probes::templates;
use crate::text::{CLS, MASK, SEP};
use crate::util;

pub const STUB_MODEL_ID: &str = "stub-hash-v1";
pub const STUB_DIM: usize = 64;
pub const STUB_MAX_LEN: usize = 128;
pub const PAD: &str = "[PAD]";
pub const UNK: &str = "[UNK]";
pub const SPECIALS: [&str; 5] = [PAD, UNK, CLS, SEP, MASK];
const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

pub fn fnv1a64(s: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in s.as_bytes() {
        h ^= u64::from(*b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(GOLDEN);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn unit(seed: u64, label: &str, j: usize) -> f64 {
    let x = splitmix64(seed ^ fnv1a64(label) ^ (j as u64 + 1).wrapping_mul(GOLDEN));
    (x >> 11) as f64 / (1u64 << 53) as f64 * 2.0 - 1.0
}

pub struct StubBackend {
    seed: u64,
    dim: usize,
    max_len: usize,
    head_export: bool,
    vocab: Vec<String>,
    index: HashMap<String, usize>,
    vocab_hash: String,
    emb: Vec<f64>,
    pos: Vec<f64>,
}

impl StubBackend {
    /// Vocabulary: the special markers, then the sorted lowercased words, single letters,
    /// `##`-letters and digits.
    pub fn new<I: IntoIterator<Item = String>>(words: I, seed: u64) -> Self {
        let mut rest: Vec<String> = words.into_iter().map(|w| w.to_lowercase()).filter(|w| !w.is_empty()).collect();
        for c in 'a'..='z' {
            rest.push(c.to_string());
            rest.push(format!("##{c}"));
        }
        for c in '0'..='9' {
            rest.push(c.to_string());
            rest.push(format!("##{c}"));
        }
        rest.sort();
        rest.dedup();
        rest.retain(|w| !SPECIALS.contains(&w.as_str()));
        let vocab: Vec<String> = SPECIALS.iter().map(|s| s.to_string()).chain(rest).collect();
        let index = vocab.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let vocab_hash = util::sha256_hex(vocab.join("\n").as_bytes());
        let dim = STUB_DIM;
        let emb = vocab.iter().flat_map(|w| (0..dim).map(move |j| (w, j))).map(|(w, j)| unit(seed, &format!("tok:{w}"), j)).collect();
        let mut stub = StubBackend { seed, dim, max_len: STUB_MAX_LEN, head_export: true, vocab, index, vocab_hash, emb, pos: vec![] };
        stub.pos = stub.positions(STUB_MAX_LEN);
        stub
    }

    /// Vocabulary drawn from the fixture embedding table plus every fixed answer word and the
    /// nonsense lexicon, so the standard candidate sets are single pieces.
    pub fn from_kb(kb: &KbStore, seed: u64) -> Self {
        let mut words: Vec<String> = kb.embeddings.vocab().to_vec();
        let fixed = templates::AGE_ANSWERS
            .iter()
            .chain(&templates::OBJECTS_ANSWERS)
            .chain(&templates::MULTIHOP_ANSWERS)
            .chain(&templates::FREQUENCY_ANSWERS)
            .chain(&templates::NEGATION_ANSWERS)
            .chain(&NONSENSE);
        words.extend(fixed.map(|s| s.to_string()));
        Self::new(words, seed)
    }

    pub fn without_head_export(mut self) -> Self {
        self.head_export = false;
        self
    }

    pub fn with_max_len(mut self, max_len: usize) -> Self {
        self.max_len = max_len;
        self.pos = self.positions(max_len);
        self
    }

    fn positions(&self, n: usize) -> Vec<f64> {
        (0..n).flat_map(|i| (0..self.dim).map(move |j| (i, j))).map(|(i, j)| 0.5 * unit(self.seed, &format!("pos:{i}"), j)).collect()
    }

    pub fn model_id(&self) -> String {
        if self.seed == 0 {
            STUB_MODEL_ID.to_string()
        } else {
            format!("{STUB_MODEL_ID}-s{}", self.seed)
        }
    }

    pub fn vocab(&self) -> &[String] {
        &self.vocab
    }

    pub fn token_id(&self, piece: &str) -> Option<usize> {
        self.index.get(piece).copied()
    }

    pub fn token_vector(&self, id: usize) -> &[f64] {
        &self.emb[id * self.dim..(id + 1) * self.dim]
    }

    pub fn tokenize(&self, token: &str) -> Vec<String> {
        if SPECIALS.contains(&token) {
            return vec![token.to_string()];
        }
        let lower = token.to_lowercase();
        if self.index.contains_key(&lower) {
            return vec![lower];
        }
        let chars: Vec<char> = lower.chars().collect();
        let mut pieces = Vec::new();
        let mut start = 0;
        while start < chars.len() {
            let mut found = None;
            for end in (start + 1..=chars.len()).rev() {
                let s: String = chars[start..end].iter().collect();
                let cand = if start == 0 { s } else { format!("##{s}") };
                if self.index.contains_key(&cand) {
                    found = Some((cand, end));
                    break;
                }
            }
            match found {
                Some((p, end)) => {
                    pieces.push(p);
                    start = end;
                }
                None => return vec![UNK.to_string()],
            }
        }
        pieces
    }

    fn trace(&self, tokens: &[String]) -> Vec<TraceEntry> {
        tokens.iter().map(|t| TraceEntry { token: t.clone(), pieces: self.tokenize(t) }).collect()
    }

    /// Vectors for a piece sequence, row-major `[n, D]`, computed in f64 then rounded.
    pub fn encode_pieces(&self, ids: &[usize]) -> Vec<f32> {
        let d = self.dim;
        let mut c = vec![0.0; d];
        let mut base = vec![0.0; ids.len() * d];
        for (i, &id) in ids.iter().enumerate() {
            let e = self.token_vector(id);
            for j in 0..d {
                let v = e[j] + self.pos[i * d + j];
                base[i * d + j] = v;
                c[j] += v.tanh();
            }
        }
        let n = ids.len().max(1) as f64;
        (0..ids.len() * d).map(|k| (base[k] + c[k % d] / n) as f32).collect()
    }

    fn single_piece(&self, cands: &[String]) -> Result<Vec<usize>, BackendError> {
        let trace = self.trace(cands);
        let mut ids = Vec::new();
        for t in &trace {
            if t.pieces.len() != 1 || t.pieces[0] == UNK {
                return Err(BackendError::Rejected(ErrorDetail {
                    kind: ErrorKind::MultiPiece,
                    message: format!("candidate {:?} tokenizes to {:?}", t.token, t.pieces),
                    trace: trace.clone(),
                }));
            }
            ids.push(self.index[&t.pieces[0]]);
        }
        Ok(ids)
    }

    fn head_vec(&self, label: &str, scale: f64, offset: f64) -> Vec<f64> {
        (0..self.dim).map(|j| offset + scale * unit(self.seed, label, j)).collect()
    }
}

impl Backend for StubBackend {
    fn info(&self) -> Result<InfoResponse, BackendError> {
        Ok(InfoResponse {
            model_id: self.model_id(),
            d_h: self.dim,
            vocab_hash: self.vocab_hash.clone(),
            vocab_size: self.vocab.len(),
            max_len: self.max_len,
            head_export: self.head_export,
        })
    }

    fn encode(&self, req: &EncodeRequest) -> Result<EncodeResponse, BackendError> {
        if req.tokens.is_empty() {
            return Err(BackendError::rejected(ErrorKind::BadRequest, "empty token list"));
        }
        let trace = self.trace(&req.tokens);
        let pieces: Vec<&String> = trace.iter().flat_map(|t| &t.pieces).collect();
        if pieces.len() > self.max_len {
            return Err(BackendError::Rejected(ErrorDetail {
                kind: ErrorKind::TooLong,
                message: format!("{} pieces exceed the maximum length {}", pieces.len(), self.max_len),
                trace,
            }));
        }
        let candidate_ids = match &req.candidates {
            Some(c) => Some(self.single_piece(c)?),
            None => None,
        };
        let ids: Vec<usize> = pieces.iter().map(|p| self.index[p.as_str()]).collect();
        let mask_index = pieces.iter().position(|p| *p == MASK);
        Ok(EncodeResponse {
            request_id: req.request_id.clone(),
            vectors: Tensor::from_f32(vec![ids.len(), self.dim], &self.encode_pieces(&ids)),
            mask_index,
            trace,
            candidate_ids,
        })
    }

    fn mlm_head(&self, candidates: &[String]) -> Result<HeadResponse, BackendError> {
        if !self.head_export {
            return Err(BackendError::rejected(ErrorKind::NoHeadExport, format!("{} exports no MLM head", self.model_id())));
        }
        let ids = self.single_piece(candidates)?;
        let d = self.dim;
        let scale = 1.0 / (d as f64).sqrt();
        let w1: Vec<f64> = (0..d).flat_map(|r| self.head_vec(&format!("w1:{r}"), scale, 0.0)).collect();
        let dec: Vec<f64> = ids.iter().flat_map(|&i| self.token_vector(i).to_vec()).collect();
        let bias: Vec<f64> = ids.iter().map(|&i| 0.1 * unit(self.seed, &format!("bias:{}", self.vocab[i]), 0)).collect();
        Ok(HeadResponse {
            activation: Activation::GeluTanh,
            tied: true,
            dense_weight: Tensor::from_f64(vec![d, d], &w1),
            dense_bias: Tensor::from_f64(vec![d], &self.head_vec("b1", 0.1, 0.0)),
            layer_norm: Some(LayerNormExport {
                gamma: Tensor::from_f64(vec![d], &self.head_vec("ln.gamma", 0.1, 1.0)),
                beta: Tensor::from_f64(vec![d], &self.head_vec("ln.beta", 0.1, 0.0)),
                eps: 1e-5,
            }),
            decoder_weight: Tensor::from_f64(vec![ids.len(), d], &dec),
            decoder_bias: Tensor::from_f64(vec![ids.len()], &bias),
            candidate_ids: ids,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn stub() -> StubBackend {
        StubBackend::new(["older", "younger", "year", "old", "person", "un"].map(String::from), 7)
    }

    fn req(tokens: &[&str], cands: Option<&[&str]>) -> EncodeRequest {
        EncodeRequest {
            request_id: "q".into(),
            tokens: tokens.iter().map(|s| s.to_string()).collect(),
            candidates: cands.map(|c| c.iter().map(|s| s.to_string()).collect()),
        }
    }

    #[test]
    fn splitmix_reference_values() {
        // first outputs of the reference splitmix64 generator seeded with 0
        assert_eq!(splitmix64(0), 0xE220_A839_7B1D_CDAF);
        assert_eq!(fnv1a64(""), 0xcbf2_9ce4_8422_2325);
        assert_eq!(fnv1a64("a"), 0xaf63_dc4c_8601_ec8c);
    }

    #[test]
    fn unit_range() {
        for j in 0..1000 {
            let u = unit(3, "x", j);
            assert!((-1.0..1.0).contains(&u));
        }
    }

    #[test]
    fn greedy_word_pieces() {
        let s = stub();
        assert_eq!(s.tokenize("Older"), vec!["older"]);
        assert_eq!(s.tokenize("unold"), vec!["un", "##o", "##l", "##d"]);
        assert_eq!(s.tokenize("42"), vec!["4", "##2"]);
        assert_eq!(s.tokenize("é"), vec![UNK]);
        assert_eq!(s.tokenize(MASK), vec![MASK]);
    }

    #[test]
    fn same_request_same_vectors() {
        let s = stub();
        let r = req(&[CLS, "a", "person", MASK, SEP], Some(&["older", "younger"]));
        let a = s.encode(&r).unwrap();
        assert_eq!(a, s.encode(&r).unwrap());
        assert_eq!(a.mask_index, Some(3));
        assert_eq!(a.vectors.shape, vec![5, STUB_DIM]);
        assert_eq!(a.candidate_ids.unwrap().len(), 2);
    }

    #[test]
    fn multi_piece_candidate_is_rejected_with_trace() {
        let err = stub().encode(&req(&[CLS, MASK, SEP], Some(&["older", "unold"]))).unwrap_err();
        match err {
            BackendError::Rejected(d) => {
                assert_eq!(d.kind, ErrorKind::MultiPiece);
                assert_eq!(d.trace[1].pieces, vec!["un", "##o", "##l", "##d"]);
            }
            e => panic!("{e}"),
        }
    }

    #[test]
    fn too_long_is_explicit() {
        let s = stub().with_max_len(4);
        let err = s.encode(&req(&[CLS, "a", "b", MASK, SEP], None)).unwrap_err();
        assert_eq!(err.kind(), Some(ErrorKind::TooLong));
    }

    #[test]
    fn no_head_export() {
        let err = stub().without_head_export().mlm_head(&["older".into(), "younger".into()]).unwrap_err();
        assert_eq!(err.kind(), Some(ErrorKind::NoHeadExport));
    }

    #[test]
    fn head_has_candidate_rows_and_is_stable() {
        let s = stub();
        let c = vec!["younger".to_string(), "older".to_string()];
        let h = s.mlm_head(&c).unwrap();
        assert_eq!(h.decoder_weight.shape, vec![2, STUB_DIM]);
        assert_eq!(h, s.mlm_head(&c).unwrap());
    }
}
