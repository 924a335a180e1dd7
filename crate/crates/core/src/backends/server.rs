//! Serves any [`Backend`] over the wire protocol.

use std::net::SocketAddr;
use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::State;
use axum::http::{HeaderMap, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::de::DeserializeOwned;
use tokio::sync::oneshot;

use super::protocol::{BatchRequest, BatchResponse, EncodeRequest, ErrorBody, ErrorDetail, ErrorKind, HeadRequest};
use super::{Backend, BackendError};

#[derive(Clone)]
struct AppState {
    backend: Arc<dyn Backend>,
    token: Option<String>,
}

fn error(status: StatusCode, kind: ErrorKind, message: String) -> Response {
    (status, Json(ErrorBody { error: ErrorDetail { kind, message, trace: vec![] } })).into_response()
}

fn from_backend(e: BackendError) -> Response {
    match e {
        BackendError::Rejected(d) => (StatusCode::UNPROCESSABLE_ENTITY, Json(ErrorBody { error: d })).into_response(),
        other => error(StatusCode::INTERNAL_SERVER_ERROR, ErrorKind::BadRequest, other.to_string()),
    }
}

fn authorize(state: &AppState, headers: &HeaderMap) -> Result<(), Response> {
    let Some(expected) = &state.token else { return Ok(()) };
    let given = headers.get("authorization").and_then(|v| v.to_str().ok()).and_then(|v| v.strip_prefix("Bearer "));
    if given == Some(expected.as_str()) {
        Ok(())
    } else {
        Err(error(StatusCode::UNAUTHORIZED, ErrorKind::Unauthorized, "missing or wrong bearer token".into()))
    }
}

fn parse<T: DeserializeOwned>(body: &Bytes) -> Result<T, Response> {
    serde_json::from_slice(body)
        .map_err(|e| error(StatusCode::UNPROCESSABLE_ENTITY, ErrorKind::BadRequest, format!("malformed request: {e}")))
}

async fn run<T: Send + 'static>(
    state: AppState,
    f: impl FnOnce(&dyn Backend) -> Result<T, BackendError> + Send + 'static,
) -> Result<T, Response> {
    tokio::task::spawn_blocking(move || f(state.backend.as_ref()))
        .await
        .map_err(|e| error(StatusCode::INTERNAL_SERVER_ERROR, ErrorKind::BadRequest, e.to_string()))?
        .map_err(from_backend)
}

async fn info(State(s): State<AppState>, headers: HeaderMap) -> Response {
    if let Err(r) = authorize(&s, &headers) {
        return r;
    }
    match run(s, |b| b.info()).await {
        Ok(v) => Json(v).into_response(),
        Err(r) => r,
    }
}

async fn encode(State(s): State<AppState>, headers: HeaderMap, body: Bytes) -> Response {
    let req: EncodeRequest = match authorize(&s, &headers).and_then(|_| parse(&body)) {
        Ok(r) => r,
        Err(r) => return r,
    };
    match run(s, move |b| b.encode(&req)).await {
        Ok(v) => Json(v).into_response(),
        Err(r) => r,
    }
}

async fn encode_batch(State(s): State<AppState>, headers: HeaderMap, body: Bytes) -> Response {
    let req: BatchRequest = match authorize(&s, &headers).and_then(|_| parse(&body)) {
        Ok(r) => r,
        Err(r) => return r,
    };
    match run(s, move |b| b.encode_batch(&req.requests)).await {
        Ok(v) => Json(BatchResponse { responses: v }).into_response(),
        Err(r) => r,
    }
}

async fn mlm_head(State(s): State<AppState>, headers: HeaderMap, body: Bytes) -> Response {
    let req: HeadRequest = match authorize(&s, &headers).and_then(|_| parse(&body)) {
        Ok(r) => r,
        Err(r) => return r,
    };
    match run(s, move |b| b.mlm_head(&req.candidates)).await {
        Ok(v) => Json(v).into_response(),
        Err(r) => r,
    }
}

pub fn router(backend: Arc<dyn Backend>, token: Option<String>) -> Router {
    Router::new()
        .route("/info", post(info).get(info))
        .route("/encode", post(encode))
        .route("/encode_batch", post(encode_batch))
        .route("/mlm_head", post(mlm_head))
        .route("/health", get(|| async { "ok" }))
        .with_state(AppState { backend, token })
}

/// A server on its own thread and runtime; stops when dropped.
pub struct ServerHandle {
    pub addr: SocketAddr,
    stop: Option<oneshot::Sender<()>>,
    thread: Option<std::thread::JoinHandle<()>>,
}

impl ServerHandle {
    pub fn url(&self) -> String {
        format!("http://{}", self.addr)
    }

    pub fn wait(mut self) {
        if let Some(t) = self.thread.take() {
            let _ = t.join();
        }
    }
}

impl Drop for ServerHandle {
    fn drop(&mut self) {
        if let Some(s) = self.stop.take() {
            let _ = s.send(());
        }
        if let Some(t) = self.thread.take() {
            let _ = t.join();
        }
    }
}

pub fn spawn(backend: Arc<dyn Backend>, token: Option<String>, addr: SocketAddr) -> std::io::Result<ServerHandle> {
    let listener = std::net::TcpListener::bind(addr)?;
    listener.set_nonblocking(true)?;
    let addr = listener.local_addr()?;
    let (tx, rx) = oneshot::channel::<()>();
    let app = router(backend, token);
    let thread = std::thread::spawn(move || {
        let rt = tokio::runtime::Builder::new_multi_thread().worker_threads(2).enable_all().build().expect("tokio runtime");
        rt.block_on(async move {
            let listener = tokio::net::TcpListener::from_std(listener).expect("listener");
            let _ = axum::serve(listener, app)
                .with_graceful_shutdown(async {
                    let _ = rx.await;
                })
                .await;
        });
    });
    Ok(ServerHandle { addr, stop: Some(tx), thread: Some(thread) })
}
