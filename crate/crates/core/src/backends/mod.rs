//! Encoder backends: the wire protocol, a deterministic stub, an HTTP client and server, the
//! encoding cache and the session that ties them to probe examples.

pub mod cache;
pub mod http;
pub mod protocol;
pub mod server;
pub mod session;
pub mod stub;

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use ndarray::{Array1, Array2};
use thiserror::Error;

use crate::heads::{LayerNorm, MlmHead};
use protocol::{BatchItem, EncodeRequest, EncodeResponse, ErrorDetail, ErrorKind, HeadResponse, InfoResponse};

pub use session::{EncodedExample, Session};
pub use stub::StubBackend;

#[derive(Debug, Error)]
pub enum BackendError {
    #[error("transport failure after {attempts} attempt(s): {message}")]
    Transport { attempts: usize, message: String },
    #[error("backend rejected the request ({:?}): {}", .0.kind, .0.message)]
    Rejected(ErrorDetail),
    #[error("protocol violation: {0}")]
    Protocol(String),
    #[error("vocabulary hash changed from {expected} to {found}")]
    VocabMismatch { expected: String, found: String },
    #[error("encoding cache: {0}")]
    Cache(#[from] std::io::Error),
}

impl BackendError {
    pub fn rejected(kind: ErrorKind, message: impl Into<String>) -> Self {
        BackendError::Rejected(ErrorDetail { kind, message: message.into(), trace: Vec::new() })
    }

    pub fn kind(&self) -> Option<ErrorKind> {
        match self {
            BackendError::Rejected(d) => Some(d.kind),
            _ => None,
        }
    }
}

pub trait Backend: Send + Sync {
    fn info(&self) -> Result<InfoResponse, BackendError>;

    fn encode(&self, req: &EncodeRequest) -> Result<EncodeResponse, BackendError>;

    /// Per-item results; a rejection of one item does not fail the batch.
    fn encode_batch(&self, reqs: &[EncodeRequest]) -> Result<Vec<BatchItem>, BackendError> {
        reqs.iter()
            .map(|r| match self.encode(r) {
                Ok(resp) => Ok(BatchItem { response: Some(resp), error: None }),
                Err(BackendError::Rejected(d)) => Ok(BatchItem { response: None, error: Some(d) }),
                Err(e) => Err(e),
            })
            .collect()
    }

    fn mlm_head(&self, candidates: &[String]) -> Result<HeadResponse, BackendError>;
}

impl<B: Backend + ?Sized> Backend for Arc<B> {
    fn info(&self) -> Result<InfoResponse, BackendError> {
        (**self).info()
    }
    fn encode(&self, req: &EncodeRequest) -> Result<EncodeResponse, BackendError> {
        (**self).encode(req)
    }
    fn encode_batch(&self, reqs: &[EncodeRequest]) -> Result<Vec<BatchItem>, BackendError> {
        (**self).encode_batch(reqs)
    }
    fn mlm_head(&self, candidates: &[String]) -> Result<HeadResponse, BackendError> {
        (**self).mlm_head(candidates)
    }
}

/// Wraps a backend and counts every call that reaches it.
pub struct CountingBackend<B> {
    pub inner: B,
    calls: AtomicUsize,
}

impl<B> CountingBackend<B> {
    pub fn new(inner: B) -> Self {
        CountingBackend { inner, calls: AtomicUsize::new(0) }
    }

    pub fn calls(&self) -> usize {
        self.calls.load(Ordering::SeqCst)
    }

    fn tick(&self) {
        self.calls.fetch_add(1, Ordering::SeqCst);
    }
}

impl<B: Backend> Backend for CountingBackend<B> {
    fn info(&self) -> Result<InfoResponse, BackendError> {
        self.tick();
        self.inner.info()
    }
    fn encode(&self, req: &EncodeRequest) -> Result<EncodeResponse, BackendError> {
        self.tick();
        self.inner.encode(req)
    }
    fn encode_batch(&self, reqs: &[EncodeRequest]) -> Result<Vec<BatchItem>, BackendError> {
        self.tick();
        self.inner.encode_batch(reqs)
    }
    fn mlm_head(&self, candidates: &[String]) -> Result<HeadResponse, BackendError> {
        self.tick();
        self.inner.mlm_head(candidates)
    }
}

fn tensor(t: &protocol::Tensor, shape: &[usize], what: &str) -> Result<Vec<f64>, BackendError> {
    if t.shape != shape {
        return Err(BackendError::Protocol(format!("{what} has shape {:?}, expected {shape:?}", t.shape)));
    }
    t.to_f64().map_err(BackendError::Protocol)
}

/// Builds an [`MlmHead`] whose output rows are the exported candidate rows.
pub fn head_from_export(h: &HeadResponse, info: &InfoResponse) -> Result<MlmHead, BackendError> {
    let d = info.d_h;
    let k = h.candidate_ids.len();
    let w1 = tensor(&h.dense_weight, &[d, d], "dense_weight")?;
    let b1 = tensor(&h.dense_bias, &[d], "dense_bias")?;
    let w2 = tensor(&h.decoder_weight, &[k, d], "decoder_weight")?;
    let b2 = tensor(&h.decoder_bias, &[k], "decoder_bias")?;
    let layer_norm = match &h.layer_norm {
        Some(ln) => Some(LayerNorm {
            gamma: tensor(&ln.gamma, &[d], "layer_norm.gamma")?,
            beta: tensor(&ln.beta, &[d], "layer_norm.beta")?,
            eps: ln.eps,
        }),
        None => None,
    };
    let head = MlmHead {
        w1: Array2::from_shape_vec((d, d), w1).expect("shape checked"),
        b1: Array1::from(b1),
        activation: h.activation,
        layer_norm,
        rows: h.candidate_ids.clone(),
        w2: Array2::from_shape_vec((k, d), w2).expect("shape checked"),
        b2: Array1::from(b2),
        vocab_size: info.vocab_size,
        tied: h.tied,
    };
    head.validate().map_err(|e| BackendError::Protocol(e.to_string()))?;
    Ok(head)
}
