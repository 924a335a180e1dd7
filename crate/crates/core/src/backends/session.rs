//! Renders examples into backend sequences, encodes them through the cache and imports heads.

use std::collections::HashMap;
use std::sync::Arc;

use log::debug;

use super::cache::{self, EncodingCache, Entry, Key};
use super::protocol::{EncodeRequest, EncodeResponse, ErrorDetail, ErrorKind, InfoResponse};
use super::{head_from_export, Backend, BackendError};
use crate::heads::MlmHead;
use crate::probes::{Example, Setup};
use crate::text::{CLS, SEP};

pub const DEFAULT_BATCH: usize = 64;

/// What the heads consume for one example.
#[derive(Debug, Clone, PartialEq)]
pub enum EncodedExample {
    /// Mask-position vector and the vocabulary ids of the candidates, in candidate order.
    Mlm { row: Vec<f64>, candidate_ids: Vec<usize> },
    /// One `[CLS]` vector per candidate.
    Qa { rows: Vec<Vec<f64>> },
}

/// `[CLS] tokens [SEP]`
pub fn render_mlm(ex: &Example) -> Vec<String> {
    std::iter::once(CLS.to_string()).chain(ex.tokens.iter().cloned()).chain(std::iter::once(SEP.to_string())).collect()
}

/// `[CLS] q [SEP] a_k [SEP]` for each candidate.
pub fn render_qa(ex: &Example) -> Vec<Vec<String>> {
    ex.candidates
        .iter()
        .map(|a| {
            let mut v = vec![CLS.to_string()];
            v.extend(ex.tokens.iter().cloned());
            v.push(SEP.to_string());
            v.extend(crate::text::words(a));
            v.push(SEP.to_string());
            v
        })
        .collect()
}

struct Unit {
    key: Key,
    role: &'static str,
    tokens: Vec<String>,
    candidates: Option<Vec<String>>,
}

pub struct Session {
    backend: Arc<dyn Backend>,
    info: InfoResponse,
    cache: Option<Arc<EncodingCache>>,
    pub batch_size: usize,
}

impl Session {
    pub fn open(backend: Arc<dyn Backend>, cache: Option<Arc<EncodingCache>>) -> Result<Self, BackendError> {
        let info = backend.info()?;
        Ok(Session { backend, info, cache, batch_size: DEFAULT_BATCH })
    }

    pub fn info(&self) -> &InfoResponse {
        &self.info
    }

    pub fn check_vocab(&self, expected: &str) -> Result<(), BackendError> {
        if self.info.vocab_hash != expected {
            return Err(BackendError::VocabMismatch { expected: expected.into(), found: self.info.vocab_hash.clone() });
        }
        Ok(())
    }

    fn unit(&self, role: &'static str, tokens: Vec<String>, candidates: Option<Vec<String>>) -> Unit {
        let key = cache::key(&self.info.model_id, &self.info.vocab_hash, role, &tokens, candidates.as_deref());
        Unit { key, role, tokens, candidates }
    }

    fn units(&self, ex: &Example) -> Vec<Unit> {
        match ex.setup {
            Setup::McMlm => vec![self.unit("mask", render_mlm(ex), Some(ex.candidates.clone()))],
            Setup::McQa => render_qa(ex).into_iter().map(|t| self.unit("cls", t, None)).collect(),
        }
    }

    fn to_entry(&self, unit: &Unit, resp: EncodeResponse) -> Result<Entry, BackendError> {
        let v = resp.vectors.to_f32().map_err(BackendError::Protocol)?;
        let d = self.info.d_h;
        if resp.vectors.shape.len() != 2 || resp.vectors.shape[1] != d {
            return Err(BackendError::Protocol(format!("vectors of shape {:?} from a backend with d_h {d}", resp.vectors.shape)));
        }
        let index = match unit.role {
            "mask" => resp.mask_index.ok_or_else(|| BackendError::Protocol("no mask index for a masked sequence".into()))?,
            _ => 0,
        };
        if index >= resp.vectors.shape[0] {
            return Err(BackendError::Protocol(format!("row {index} outside {} returned vectors", resp.vectors.shape[0])));
        }
        let candidate_ids = match (&unit.candidates, resp.candidate_ids) {
            (Some(c), Some(ids)) if ids.len() == c.len() => ids,
            (Some(_), _) => return Err(BackendError::Protocol("candidate ids missing or misaligned".into())),
            (None, _) => Vec::new(),
        };
        Ok(Entry::Row { candidate_ids, row: v[index * d..(index + 1) * d].to_vec() })
    }

    /// Encodes every example. Per-example backend rejections (multi-piece candidates, overlong
    /// sequences) come back as `Err` items; transport and protocol failures abort.
    pub fn encode_examples(&self, exs: &[Example]) -> Result<Vec<Result<EncodedExample, ErrorDetail>>, BackendError> {
        let per_example: Vec<Vec<Unit>> = exs.iter().map(|e| self.units(e)).collect();
        let mut found: HashMap<Key, Entry> = HashMap::new();
        let mut missing: Vec<&Unit> = Vec::new();
        for u in per_example.iter().flatten() {
            if found.contains_key(&u.key) {
                continue;
            }
            match self.cache.as_ref().and_then(|c| c.get(&u.key)) {
                Some(e) => {
                    found.insert(u.key, e);
                }
                None => missing.push(u),
            }
        }
        let mut seen = std::collections::HashSet::new();
        missing.retain(|u| seen.insert(u.key));
        if !missing.is_empty() {
            debug!("encoding {} sequences ({} cached)", missing.len(), found.len());
        }
        for chunk in missing.chunks(self.batch_size.max(1)) {
            let reqs: Vec<EncodeRequest> = chunk
                .iter()
                .map(|u| EncodeRequest {
                    request_id: format!("{}-{}", u.role, hex::encode(&u.key[..8])),
                    tokens: u.tokens.clone(),
                    candidates: u.candidates.clone(),
                })
                .collect();
            let items = self.backend.encode_batch(&reqs)?;
            if items.len() != chunk.len() {
                return Err(BackendError::Protocol(format!("{} replies for {} requests", items.len(), chunk.len())));
            }
            let mut fresh = Vec::with_capacity(chunk.len());
            for ((u, item), req) in chunk.iter().zip(items).zip(&reqs) {
                let entry = match (item.response, item.error) {
                    (Some(resp), None) => {
                        if resp.request_id != req.request_id {
                            return Err(BackendError::Protocol(format!("reply {} for request {}", resp.request_id, req.request_id)));
                        }
                        self.to_entry(u, resp)?
                    }
                    (None, Some(err)) if matches!(err.kind, ErrorKind::MultiPiece | ErrorKind::TooLong) => Entry::Rejected(err),
                    (None, Some(err)) => return Err(BackendError::Rejected(err)),
                    _ => return Err(BackendError::Protocol("batch item with neither or both of response and error".into())),
                };
                fresh.push((u.key, entry));
            }
            if let Some(c) = &self.cache {
                c.put_many(fresh.clone())?;
            }
            found.extend(fresh);
        }
        Ok(exs
            .iter()
            .zip(&per_example)
            .map(|(ex, units)| {
                let mut rows = Vec::with_capacity(units.len());
                let mut ids = Vec::new();
                for u in units {
                    match &found[&u.key] {
                        Entry::Rejected(d) => return Err(d.clone()),
                        Entry::Row { candidate_ids, row } => {
                            rows.push(row.iter().map(|&x| f64::from(x)).collect::<Vec<f64>>());
                            ids = candidate_ids.clone();
                        }
                    }
                }
                Ok(match ex.setup {
                    Setup::McMlm => EncodedExample::Mlm { row: rows.pop().expect("one unit"), candidate_ids: ids },
                    Setup::McQa => EncodedExample::Qa { rows },
                })
            })
            .collect())
    }

    /// Pretrained head restricted to `candidates`, through the cache when one is attached.
    pub fn mlm_head(&self, candidates: &[String]) -> Result<MlmHead, BackendError> {
        let key = cache::key(&self.info.model_id, &self.info.vocab_hash, "head", candidates, None);
        if let Some(h) = self.cache.as_ref().and_then(|c| c.get_head(&key)) {
            return head_from_export(&h, &self.info);
        }
        let h = self.backend.mlm_head(candidates)?;
        if h.candidate_ids.len() != candidates.len() {
            return Err(BackendError::Protocol("head export row count differs from the candidate count".into()));
        }
        let head = head_from_export(&h, &self.info)?;
        if let Some(c) = &self.cache {
            c.put_head(&key, &h)?;
        }
        Ok(head)
    }
}
