//! Wire messages. JSON bodies with snake_case keys; float blocks travel as base64 of
//! little-endian f32 with an explicit shape.

use base64::engine::general_purpose::STANDARD as B64;
use base64::Engine;
use serde::{Deserialize, Serialize};

use crate::heads::Activation;

pub const TOKEN_ENV: &str = "PROBE_BACKEND_TOKEN";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfoResponse {
    pub model_id: String,
    pub d_h: usize,
    pub vocab_hash: String,
    pub vocab_size: usize,
    pub max_len: usize,
    pub head_export: bool,
}

/// A dense f32 block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tensor {
    pub shape: Vec<usize>,
    pub data: String,
}

impl Tensor {
    pub fn from_f32(shape: Vec<usize>, values: &[f32]) -> Self {
        assert_eq!(shape.iter().product::<usize>(), values.len());
        let mut bytes = Vec::with_capacity(values.len() * 4);
        for v in values {
            bytes.extend_from_slice(&v.to_le_bytes());
        }
        Tensor { shape, data: B64.encode(bytes) }
    }

    pub fn from_f64(shape: Vec<usize>, values: &[f64]) -> Self {
        Self::from_f32(shape, &values.iter().map(|&v| v as f32).collect::<Vec<_>>())
    }

    pub fn to_f32(&self) -> Result<Vec<f32>, String> {
        let bytes = B64.decode(&self.data).map_err(|e| format!("bad base64 tensor: {e}"))?;
        let n: usize = self.shape.iter().product();
        if bytes.len() != n * 4 {
            return Err(format!("tensor of shape {:?} carries {} bytes", self.shape, bytes.len()));
        }
        Ok(bytes.chunks_exact(4).map(|c| f32::from_le_bytes([c[0], c[1], c[2], c[3]])).collect())
    }

    pub fn to_f64(&self) -> Result<Vec<f64>, String> {
        Ok(self.to_f32()?.into_iter().map(f64::from).collect())
    }
}

/// Surface token and the backend pieces it became.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub token: String,
    pub pieces: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EncodeRequest {
    pub request_id: String,
    /// Fully rendered sequence, special tokens included.
    pub tokens: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub candidates: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EncodeResponse {
    pub request_id: String,
    /// `[n_pieces, d_h]`
    pub vectors: Tensor,
    pub mask_index: Option<usize>,
    pub trace: Vec<TraceEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub candidate_ids: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatchRequest {
    pub requests: Vec<EncodeRequest>,
}

/// One slot of a batch reply: either a response or the error the single endpoint would give.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatchItem {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub response: Option<EncodeResponse>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorDetail>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatchResponse {
    pub responses: Vec<BatchItem>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeadRequest {
    pub candidates: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LayerNormExport {
    pub gamma: Tensor,
    pub beta: Tensor,
    pub eps: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HeadResponse {
    pub activation: Activation,
    pub tied: bool,
    /// `[d_h, d_h]`
    pub dense_weight: Tensor,
    pub dense_bias: Tensor,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub layer_norm: Option<LayerNormExport>,
    /// `[K, d_h]`, rows in candidate order.
    pub decoder_weight: Tensor,
    pub decoder_bias: Tensor,
    pub candidate_ids: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorKind {
    MultiPiece,
    TooLong,
    NoHeadExport,
    BadRequest,
    Unauthorized,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorDetail {
    pub kind: ErrorKind,
    pub message: String,
    #[serde(default)]
    pub trace: Vec<TraceEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorBody {
    pub error: ErrorDetail,
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn roundtrip<T: Serialize + for<'de> Deserialize<'de> + PartialEq + std::fmt::Debug>(v: &T) {
        let s = serde_json::to_string(v).unwrap();
        let back: T = serde_json::from_str(&s).unwrap();
        assert_eq!(&back, v);
    }

    #[test]
    fn tensor_is_little_endian_f32() {
        let t = Tensor::from_f32(vec![2], &[1.0, -2.5]);
        let raw = B64.decode(&t.data).unwrap();
        assert_eq!(raw, [0, 0, 128, 63, 0, 0, 32, 192]);
        assert_eq!(t.to_f32().unwrap(), vec![1.0, -2.5]);
    }

    #[test]
    fn tensor_shape_mismatch_is_reported() {
        let mut t = Tensor::from_f32(vec![2], &[1.0, 2.0]);
        t.shape = vec![3];
        assert!(t.to_f32().is_err());
    }

    #[test]
    fn error_body_layout() {
        let e = ErrorBody { error: ErrorDetail { kind: ErrorKind::MultiPiece, message: "m".into(), trace: vec![] } };
        assert_eq!(serde_json::to_string(&e).unwrap(), r#"{"error":{"kind":"multi_piece","message":"m","trace":[]}}"#);
    }

    fn word() -> impl Strategy<Value = String> {
        "[a-z#\\[\\]]{1,8}"
    }

    proptest! {
        #[test]
        fn messages_roundtrip(
            tokens in prop::collection::vec(word(), 1..10),
            cands in prop::option::of(prop::collection::vec(word(), 2..5)),
            vals in prop::collection::vec(-1e3f32..1e3, 1..40),
            mask in prop::option::of(0usize..10),
        ) {
            roundtrip(&EncodeRequest { request_id: "r-1".into(), tokens: tokens.clone(), candidates: cands.clone() });
            let resp = EncodeResponse {
                request_id: "r-1".into(),
                vectors: Tensor::from_f32(vec![vals.len(), 1], &vals),
                mask_index: mask,
                trace: tokens.iter().map(|t| TraceEntry { token: t.clone(), pieces: vec![t.clone()] }).collect(),
                candidate_ids: cands.as_ref().map(|c| (0..c.len()).collect()),
            };
            roundtrip(&resp);
            prop_assert_eq!(resp.vectors.to_f32().unwrap(), vals.clone());
            roundtrip(&BatchResponse { responses: vec![
                BatchItem { response: Some(resp), error: None },
                BatchItem { response: None, error: Some(ErrorDetail { kind: ErrorKind::TooLong, message: "x".into(), trace: vec![] }) },
            ]});
            let t = Tensor::from_f32(vec![vals.len()], &vals);
            roundtrip(&HeadResponse {
                activation: Activation::GeluTanh,
                tied: true,
                dense_weight: t.clone(),
                dense_bias: t.clone(),
                layer_norm: Some(LayerNormExport { gamma: t.clone(), beta: t.clone(), eps: 1e-5 }),
                decoder_weight: t.clone(),
                decoder_bias: t,
                candidate_ids: vec![1, 2],
            });
            roundtrip(&InfoResponse { model_id: "m".into(), d_h: 4, vocab_hash: "h".into(), vocab_size: 9, max_len: 3, head_export: mask.is_some() });
        }
    }
}
