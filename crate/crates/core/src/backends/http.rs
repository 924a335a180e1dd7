//! Blocking HTTP client for the wire protocol.

use std::thread::sleep;
use std::time::Duration;

use log::warn;
use reqwest::blocking::Client;
use reqwest::StatusCode;
use serde::de::DeserializeOwned;
use serde::Serialize;

use super::protocol::{
    BatchItem, BatchRequest, BatchResponse, EncodeRequest, EncodeResponse, ErrorBody, HeadRequest, HeadResponse,
    InfoResponse, TOKEN_ENV,
};
use super::{Backend, BackendError};

pub struct HttpBackend {
    base: String,
    client: Client,
    token: Option<String>,
    pub max_attempts: usize,
    pub backoff: Duration,
}

impl HttpBackend {
    /// Reads the bearer token from `PROBE_BACKEND_TOKEN` when set.
    pub fn new(endpoint: &str) -> Result<Self, BackendError> {
        let client = Client::builder()
            .timeout(Duration::from_secs(120))
            .build()
            .map_err(|e| BackendError::Transport { attempts: 0, message: e.to_string() })?;
        Ok(HttpBackend {
            base: endpoint.trim_end_matches('/').to_string(),
            client,
            token: std::env::var(TOKEN_ENV).ok().filter(|t| !t.is_empty()),
            max_attempts: 4,
            backoff: Duration::from_millis(200),
        })
    }

    pub fn with_token(mut self, token: Option<String>) -> Self {
        self.token = token;
        self
    }

    fn post<B: Serialize, R: DeserializeOwned>(&self, path: &str, body: &B) -> Result<R, BackendError> {
        let url = format!("{}{path}", self.base);
        let mut last = String::new();
        for attempt in 1..=self.max_attempts.max(1) {
            if attempt > 1 {
                sleep(self.backoff * (attempt as u32 - 1));
            }
            let mut req = self.client.post(&url).json(body);
            if let Some(t) = &self.token {
                req = req.bearer_auth(t);
            }
            let resp = match req.send() {
                Ok(r) => r,
                Err(e) => {
                    last = e.to_string();
                    warn!("{url}: attempt {attempt} failed: {last}");
                    continue;
                }
            };
            let status = resp.status();
            let bytes = resp.bytes().map_err(|e| BackendError::Transport { attempts: attempt, message: e.to_string() })?;
            if status.is_success() {
                return serde_json::from_slice(&bytes).map_err(|e| BackendError::Protocol(format!("{path}: {e}")));
            }
            if status.is_server_error() || status == StatusCode::TOO_MANY_REQUESTS {
                last = format!("HTTP {status}");
                warn!("{url}: attempt {attempt} failed: {last}");
                continue;
            }
            return Err(match serde_json::from_slice::<ErrorBody>(&bytes) {
                Ok(b) => BackendError::Rejected(b.error),
                Err(_) => BackendError::Protocol(format!("{path}: HTTP {status}: {}", String::from_utf8_lossy(&bytes))),
            });
        }
        Err(BackendError::Transport { attempts: self.max_attempts.max(1), message: format!("{url}: {last}") })
    }
}

impl Backend for HttpBackend {
    fn info(&self) -> Result<InfoResponse, BackendError> {
        self.post("/info", &serde_json::json!({}))
    }

    fn encode(&self, req: &EncodeRequest) -> Result<EncodeResponse, BackendError> {
        self.post("/encode", req)
    }

    fn encode_batch(&self, reqs: &[EncodeRequest]) -> Result<Vec<BatchItem>, BackendError> {
        let r: BatchResponse = self.post("/encode_batch", &BatchRequest { requests: reqs.to_vec() })?;
        Ok(r.responses)
    }

    fn mlm_head(&self, candidates: &[String]) -> Result<HeadResponse, BackendError> {
        self.post("/mlm_head", &HeadRequest { candidates: candidates.to_vec() })
    }
}
