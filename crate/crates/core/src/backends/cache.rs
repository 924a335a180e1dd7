//! Append-only encoding cache.
//!
//! Only the row a head consumes (mask row or `[CLS]` row) is stored, with the candidate ids the
//! backend assigned, or the rejection it returned. Record layout, little-endian:
//!
//! ```text
//! key[32] tag:u8
//!   tag 0: n_ids:u32 ids:u32*n_ids len:u32 row:f32*len
//!   tag 1: len:u32 json(ErrorDetail)
//! ```
//!
//! A truncated final record (interrupted append) is ignored on load.

use std::collections::{BTreeMap, HashMap};
use std::fs::{self, File, OpenOptions};
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::sync::{Mutex, RwLock};

use sha2::{Digest, Sha256};

use super::protocol::{ErrorDetail, HeadResponse};
use crate::util;

pub type Key = [u8; 32];

#[derive(Debug, Clone, PartialEq)]
pub enum Entry {
    Row { candidate_ids: Vec<usize>, row: Vec<f32> },
    Rejected(ErrorDetail),
}

/// `sha256(model_id \n vocab_hash \n role \n tokens joined by \x1f)`.
pub fn key(model_id: &str, vocab_hash: &str, role: &str, tokens: &[String], candidates: Option<&[String]>) -> Key {
    let mut h = Sha256::new();
    for part in [model_id, vocab_hash, role] {
        h.update(part.as_bytes());
        h.update(b"\n");
    }
    h.update(tokens.join("\x1f").as_bytes());
    if let Some(c) = candidates {
        h.update(b"\n");
        h.update(c.join("\x1f").as_bytes());
    }
    h.finalize().into()
}

pub struct EncodingCache {
    dir: PathBuf,
    map: RwLock<HashMap<Key, Entry>>,
    file: Mutex<File>,
}

impl EncodingCache {
    pub fn open(dir: &Path) -> io::Result<Self> {
        fs::create_dir_all(dir.join("heads"))?;
        let path = dir.join("encodings.bin");
        let mut map = HashMap::new();
        let mut valid = 0u64;
        if path.exists() {
            let mut bytes = Vec::new();
            File::open(&path)?.read_to_end(&mut bytes)?;
            let mut r = Reader { b: &bytes, at: 0 };
            while let Some((k, e)) = r.record() {
                map.insert(k, e);
                valid = r.at as u64;
            }
        }
        let file = OpenOptions::new().create(true).append(true).open(&path)?;
        if file.metadata()?.len() != valid {
            file.set_len(valid)?;
        }
        Ok(EncodingCache { dir: dir.to_path_buf(), map: RwLock::new(map), file: Mutex::new(file) })
    }

    pub fn get(&self, k: &Key) -> Option<Entry> {
        self.map.read().unwrap().get(k).cloned()
    }

    pub fn len(&self) -> usize {
        self.map.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn put_many(&self, entries: Vec<(Key, Entry)>) -> io::Result<()> {
        let mut file = self.file.lock().unwrap();
        let mut map = self.map.write().unwrap();
        let mut buf = Vec::new();
        let mut fresh = Vec::new();
        for (k, e) in entries {
            if map.contains_key(&k) {
                continue;
            }
            write_record(&mut buf, &k, &e);
            fresh.push((k, e));
        }
        file.write_all(&buf)?;
        file.flush()?;
        map.extend(fresh);
        Ok(())
    }

    /// Digest of the cache content independent of insertion order.
    pub fn digest(&self) -> String {
        let map = self.map.read().unwrap();
        let sorted: BTreeMap<&Key, &Entry> = map.iter().collect();
        let mut buf = Vec::new();
        for (k, e) in sorted {
            write_record(&mut buf, k, e);
        }
        util::sha256_hex(&buf)
    }

    fn head_path(&self, k: &Key) -> PathBuf {
        self.dir.join("heads").join(format!("{}.json", hex::encode(k)))
    }

    pub fn get_head(&self, k: &Key) -> Option<HeadResponse> {
        let bytes = fs::read(self.head_path(k)).ok()?;
        serde_json::from_slice(&bytes).ok()
    }

    pub fn put_head(&self, k: &Key, head: &HeadResponse) -> io::Result<()> {
        let json = serde_json::to_vec(head).map_err(io::Error::other)?;
        util::write_atomic(&self.head_path(k), &json)
    }
}

fn write_record(buf: &mut Vec<u8>, k: &Key, e: &Entry) {
    buf.extend_from_slice(k);
    match e {
        Entry::Row { candidate_ids, row } => {
            buf.push(0);
            buf.extend_from_slice(&(candidate_ids.len() as u32).to_le_bytes());
            for id in candidate_ids {
                buf.extend_from_slice(&(*id as u32).to_le_bytes());
            }
            buf.extend_from_slice(&(row.len() as u32).to_le_bytes());
            for v in row {
                buf.extend_from_slice(&v.to_le_bytes());
            }
        }
        Entry::Rejected(d) => {
            buf.push(1);
            let json = serde_json::to_vec(d).expect("error detail serializes");
            buf.extend_from_slice(&(json.len() as u32).to_le_bytes());
            buf.extend_from_slice(&json);
        }
    }
}

struct Reader<'a> {
    b: &'a [u8],
    at: usize,
}

impl Reader<'_> {
    fn take(&mut self, n: usize) -> Option<&[u8]> {
        let s = self.b.get(self.at..self.at.checked_add(n)?)?;
        self.at += n;
        Some(s)
    }

    fn u32(&mut self) -> Option<usize> {
        let s = self.take(4)?;
        Some(u32::from_le_bytes([s[0], s[1], s[2], s[3]]) as usize)
    }

    fn record(&mut self) -> Option<(Key, Entry)> {
        let k: Key = self.take(32)?.try_into().ok()?;
        let tag = self.take(1)?[0];
        let e = match tag {
            0 => {
                let n = self.u32()?;
                let ids = (0..n).map(|_| self.u32()).collect::<Option<Vec<_>>>()?;
                let len = self.u32()?;
                let raw = self.take(len.checked_mul(4)?)?;
                let row = raw.chunks_exact(4).map(|c| f32::from_le_bytes([c[0], c[1], c[2], c[3]])).collect();
                Entry::Row { candidate_ids: ids, row }
            }
            1 => {
                let len = self.u32()?;
                Entry::Rejected(serde_json::from_slice(self.take(len)?).ok()?)
            }
            _ => return None,
        };
        Some((k, e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::backends::protocol::ErrorKind;

    fn toks(s: &str) -> Vec<String> {
        s.split(' ').map(String::from).collect()
    }

    #[test]
    fn survives_reopen_and_truncated_tail() {
        let dir = tempfile::tempdir().unwrap();
        let k1 = key("m", "v", "mask", &toks("[CLS] a [MASK] [SEP]"), Some(&toks("x y")));
        let k2 = key("m", "v", "cls", &toks("[CLS] a [SEP]"), None);
        let e1 = Entry::Row { candidate_ids: vec![4, 9], row: vec![0.5, -1.25, 3.0] };
        let e2 = Entry::Rejected(ErrorDetail { kind: ErrorKind::MultiPiece, message: "m".into(), trace: vec![] });
        let digest = {
            let c = EncodingCache::open(dir.path()).unwrap();
            c.put_many(vec![(k1, e1.clone()), (k2, e2.clone())]).unwrap();
            c.digest()
        };
        let path = dir.path().join("encodings.bin");
        let mut bytes = fs::read(&path).unwrap();
        bytes.extend_from_slice(&[1, 2, 3]);
        fs::write(&path, &bytes).unwrap();
        let c = EncodingCache::open(dir.path()).unwrap();
        assert_eq!(c.get(&k1), Some(e1));
        assert_eq!(c.get(&k2), Some(e2));
        assert_eq!(c.digest(), digest);
        assert_eq!(fs::read(&path).unwrap().len(), bytes.len() - 3);
    }

    #[test]
    fn key_depends_on_vocab_and_sequence() {
        let t = toks("[CLS] a [SEP]");
        assert_ne!(key("m", "v1", "cls", &t, None), key("m", "v2", "cls", &t, None));
        assert_ne!(key("m", "v", "cls", &t, None), key("m", "v", "cls", &toks("[CLS] b [SEP]"), None));
        assert_eq!(key("m", "v", "cls", &t, None), key("m", "v", "cls", &t, None));
    }
}
