use std::sync::Arc;
use std::time::Duration;

use lmprobe_core::backends::http::HttpBackend;
use lmprobe_core::backends::protocol::{EncodeRequest, ErrorKind};
use lmprobe_core::backends::server;
use lmprobe_core::backends::stub::{unit, StubBackend, STUB_DIM};
use lmprobe_core::backends::{Backend, BackendError, CountingBackend, EncodedExample, Session};
use lmprobe_core::heads::{mlm_distribution, CandidateMask};
use lmprobe_core::probes::{Example, Setup};
use ndarray::Array1;

const SEED: u64 = 11;

fn stub() -> StubBackend {
    StubBackend::new(["a", "person", "is", "older", "younger", "than", "me", "what", "usually", "red", "apple"].map(String::from), SEED)
}

fn serve(token: Option<&str>) -> (server::ServerHandle, Arc<StubBackend>) {
    let s = Arc::new(stub());
    let h = server::spawn(s.clone(), token.map(String::from), "127.0.0.1:0".parse().unwrap()).unwrap();
    (h, s)
}

fn req(id: &str, tokens: &str, cands: Option<&[&str]>) -> EncodeRequest {
    EncodeRequest {
        request_id: id.into(),
        tokens: tokens.split(' ').map(String::from).collect(),
        candidates: cands.map(|c| c.iter().map(|s| s.to_string()).collect()),
    }
}

#[test]
fn http_matches_in_process_stub() {
    let (h, s) = serve(None);
    let client = HttpBackend::new(&h.url()).unwrap();
    assert_eq!(client.info().unwrap(), s.info().unwrap());
    let r = req("r1", "[CLS] a person is [MASK] than me [SEP]", Some(&["older", "younger"]));
    assert_eq!(client.encode(&r).unwrap(), s.encode(&r).unwrap());
    let c = vec!["younger".to_string(), "older".to_string()];
    assert_eq!(client.mlm_head(&c).unwrap(), s.mlm_head(&c).unwrap());
}

#[test]
fn batch_equals_single() {
    let (h, _) = serve(None);
    let client = HttpBackend::new(&h.url()).unwrap();
    let reqs = vec![
        req("b1", "[CLS] a person [MASK] [SEP]", Some(&["older", "younger"])),
        req("b2", "[CLS] what is usually red [SEP] apple [SEP]", None),
        req("b3", "[CLS] [MASK] [SEP]", Some(&["older", "zzzq"])),
    ];
    let batch = client.encode_batch(&reqs).unwrap();
    assert_eq!(batch.len(), 3);
    assert_eq!(batch[0].response.as_ref().unwrap(), &client.encode(&reqs[0]).unwrap());
    assert_eq!(batch[1].response.as_ref().unwrap(), &client.encode(&reqs[1]).unwrap());
    assert_eq!(batch[2].error.as_ref().unwrap().kind, ErrorKind::MultiPiece);
}

#[test]
fn multi_piece_and_too_long_are_structured_422() {
    let (h, _) = serve(None);
    let client = HttpBackend::new(&h.url()).unwrap();
    match client.encode(&req("m", "[CLS] [MASK] [SEP]", Some(&["older", "appleish"]))).unwrap_err() {
        BackendError::Rejected(d) => {
            assert_eq!(d.kind, ErrorKind::MultiPiece);
            assert!(d.trace.iter().any(|t| t.token == "appleish" && t.pieces.len() > 1));
        }
        e => panic!("unexpected {e}"),
    }
    let long = std::iter::repeat("a").take(200).collect::<Vec<_>>().join(" ");
    let err = client.encode(&req("l", &format!("[CLS] {long} [SEP]"), None)).unwrap_err();
    assert_eq!(err.kind(), Some(ErrorKind::TooLong));
    let raw = reqwest::blocking::Client::new().post(format!("{}/encode", h.url())).body("{not json").send().unwrap();
    assert_eq!(raw.status().as_u16(), 422);
    let body: serde_json::Value = raw.json().unwrap();
    assert_eq!(body["error"]["kind"], "bad_request");
}

#[test]
fn bearer_token_is_enforced() {
    let (h, _) = serve(Some("sesame"));
    let anon = HttpBackend::new(&h.url()).unwrap().with_token(None);
    assert_eq!(anon.info().unwrap_err().kind(), Some(ErrorKind::Unauthorized));
    let ok = HttpBackend::new(&h.url()).unwrap().with_token(Some("sesame".into()));
    assert!(ok.info().is_ok());
}

#[test]
fn unreachable_endpoint_fails_after_bounded_retries() {
    let addr = std::net::TcpListener::bind("127.0.0.1:0").unwrap().local_addr().unwrap();
    let mut client = HttpBackend::new(&format!("http://{addr}")).unwrap();
    client.max_attempts = 3;
    client.backoff = Duration::from_millis(1);
    match client.info().unwrap_err() {
        BackendError::Transport { attempts, .. } => assert_eq!(attempts, 3),
        e => panic!("unexpected {e}"),
    }
}

fn oracle_vectors(pieces: &[&str]) -> Vec<Vec<f64>> {
    let d = STUB_DIM;
    let base: Vec<Vec<f64>> = pieces
        .iter()
        .enumerate()
        .map(|(i, p)| (0..d).map(|j| unit(SEED, &format!("tok:{p}"), j) + 0.5 * unit(SEED, &format!("pos:{i}"), j)).collect())
        .collect();
    let c: Vec<f64> = (0..d).map(|j| base.iter().map(|b| b[j].tanh()).sum::<f64>() / pieces.len() as f64).collect();
    base.iter().map(|b| (0..d).map(|j| f64::from((b[j] + c[j]) as f32)).collect()).collect()
}

fn oracle_distribution(h: &[f64], cands: &[&str]) -> Vec<f64> {
    let d = STUB_DIM;
    let f = |x: f64| f64::from(x as f32);
    let gelu = |x: f64| 0.5 * x * (1.0 + ((2.0 / std::f64::consts::PI).sqrt() * (x + 0.044715 * x.powi(3))).tanh());
    let a: Vec<f64> = (0..d)
        .map(|r| {
            let z: f64 = (0..d).map(|j| f(unit(SEED, &format!("w1:{r}"), j) / (d as f64).sqrt()) * h[j]).sum();
            gelu(z + f(0.1 * unit(SEED, "b1", r)))
        })
        .collect();
    let mu = a.iter().sum::<f64>() / d as f64;
    let var = a.iter().map(|x| (x - mu).powi(2)).sum::<f64>() / d as f64;
    let u: Vec<f64> = (0..d)
        .map(|j| f(1.0 + 0.1 * unit(SEED, "ln.gamma", j)) * (a[j] - mu) / (var + 1e-5).sqrt() + f(0.1 * unit(SEED, "ln.beta", j)))
        .collect();
    let logits: Vec<f64> = cands
        .iter()
        .map(|c| {
            (0..d).map(|j| f(unit(SEED, &format!("tok:{c}"), j)) * u[j]).sum::<f64>() + f(0.1 * unit(SEED, &format!("bias:{c}"), 0))
        })
        .collect();
    let m = logits.iter().cloned().fold(f64::MIN, f64::max);
    let z: f64 = logits.iter().map(|l| (l - m).exp()).sum();
    logits.iter().map(|l| (l - m).exp() / z).collect()
}

#[test]
fn stub_head_over_http_matches_offline_oracle() {
    let (h, _) = serve(None);
    let backend = Arc::new(CountingBackend::new(HttpBackend::new(&h.url()).unwrap()));
    let session = Session::open(backend.clone(), None).unwrap();
    let ex = Example {
        setup: Setup::McMlm,
        tokens: "a person is [MASK] than me".split(' ').map(String::from).collect(),
        candidates: vec!["older".into(), "younger".into()],
        gold: 0,
        arguments: vec![],
        template_id: "t".into(),
    };
    let enc = session.encode_examples(std::slice::from_ref(&ex)).unwrap().remove(0).unwrap();
    let EncodedExample::Mlm { row, candidate_ids } = enc else { panic!() };
    let vecs = oracle_vectors(&["[CLS]", "a", "person", "is", "[MASK]", "than", "me", "[SEP]"]);
    assert_eq!(row, vecs[4]);
    let head = session.mlm_head(&ex.candidates).unwrap();
    assert_eq!(head.w2.nrows(), 2);
    let mask = CandidateMask::new(session.info().vocab_size, candidate_ids).unwrap();
    let p = mlm_distribution(Array1::from(row.clone()).view(), &head, &mask).unwrap();
    let q = oracle_distribution(&row, &["older", "younger"]);
    for (a, b) in p.iter().zip(&q) {
        assert!((a - b).abs() < 1e-9, "{p:?} vs {q:?}");
    }
    let again = session.mlm_head(&ex.candidates).unwrap();
    assert_eq!(head, again);
}

#[test]
fn qa_examples_encode_once_per_candidate() {
    let s = Arc::new(CountingBackend::new(stub()));
    let session = Session::open(s.clone(), None).unwrap();
    let ex = Example {
        setup: Setup::McQa,
        tokens: "what is usually red ?".split(' ').map(String::from).collect(),
        candidates: vec!["apple".into(), "person".into(), "me".into()],
        gold: 0,
        arguments: vec![],
        template_id: "t".into(),
    };
    let out = session.encode_examples(&[ex]).unwrap();
    match &out[0] {
        Ok(EncodedExample::Qa { rows }) => assert_eq!(rows.len(), 3),
        other => panic!("{other:?}"),
    }
}
