//! Thread-safe memo table with optional append-only persistence.
//!
//! The cache file holds one JSON record per line,
//! `{"key": [images…], "value": [terms…]}`. Records are read at startup but
//! only decoded when looked up; undecodable lines are counted and ignored.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::sync::{Mutex, RwLock};

use anyhow::{Context, Result};
use glweight_core::{MemoStore, Permutation, Poly};
use serde::{Deserialize, Serialize};

use crate::format::{poly_from_json, poly_to_json, TermJson};

#[derive(Serialize, Deserialize)]
struct Record {
    /// 1-based one-line notation.
    key: Vec<usize>,
    value: Vec<TermJson>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CacheStats {
    pub records: usize,
    pub malformed_lines: usize,
    pub distinct_keys: usize,
    pub max_k: usize,
}

#[derive(Default)]
pub struct SharedMemo {
    decoded: RwLock<HashMap<Permutation, Poly>>,
    pending: Mutex<HashMap<Vec<usize>, Vec<TermJson>>>,
    sink: Option<Mutex<BufWriter<File>>>,
    path: Option<PathBuf>,
    stats: CacheStats,
}

impl SharedMemo {
    pub fn in_memory() -> Self {
        Self::default()
    }

    /// Opens (creating if needed) a cache file; new values are appended.
    pub fn open(path: &Path) -> Result<Self> {
        let mut memo = Self::default();
        let mut pending = HashMap::new();
        if path.exists() {
            let file = File::open(path).with_context(|| format!("cannot read cache {}", path.display()))?;
            for line in BufReader::new(file).lines() {
                let line = line.with_context(|| format!("cannot read cache {}", path.display()))?;
                if line.trim().is_empty() {
                    continue;
                }
                match serde_json::from_str::<Record>(&line) {
                    Ok(r) => {
                        memo.stats.records += 1;
                        memo.stats.max_k = memo.stats.max_k.max(r.key.len());
                        pending.insert(r.key, r.value);
                    }
                    Err(_) => memo.stats.malformed_lines += 1,
                }
            }
        }
        memo.stats.distinct_keys = pending.len();
        let file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(path)
            .with_context(|| format!("cannot open cache {} for appending", path.display()))?;
        memo.pending = Mutex::new(pending);
        memo.sink = Some(Mutex::new(BufWriter::new(file)));
        memo.path = Some(path.to_path_buf());
        Ok(memo)
    }

    /// Counts as of opening.
    pub fn stats(&self) -> CacheStats {
        self.stats
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn len(&self) -> usize {
        self.decoded.read().expect("memo lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn flush(&self) -> Result<()> {
        if let Some(sink) = &self.sink {
            sink.lock()
                .expect("cache sink lock")
                .flush()
                .context("cannot flush cache")?;
        }
        Ok(())
    }

    fn decode_pending(&self, key: &Permutation) -> Option<Poly> {
        let terms = self
            .pending
            .lock()
            .expect("pending lock")
            .remove(&key.images_one_based())?;
        poly_from_json(&terms).ok().filter(Poly::is_integral)
    }
}

impl MemoStore for SharedMemo {
    fn lookup(&self, key: &Permutation) -> Option<Poly> {
        if let Some(v) = self.decoded.read().expect("memo lock").get(key) {
            return Some(v.clone());
        }
        let v = self.decode_pending(key)?;
        self.decoded.write().expect("memo lock").insert(key.clone(), v.clone());
        Some(v)
    }

    fn store(&self, key: Permutation, value: Poly) {
        let line = self.sink.as_ref().and_then(|_| {
            let record = Record {
                key: key.images_one_based(),
                value: poly_to_json(&value).ok()?,
            };
            serde_json::to_string(&record).ok()
        });
        // Concurrent writers compute equal values, so the last write wins harmlessly.
        let fresh = self.decoded.write().expect("memo lock").insert(key, value).is_none();
        if let (true, Some(line), Some(sink)) = (fresh, line, &self.sink) {
            // A failed append only loses persistence, never correctness.
            let _ = writeln!(sink.lock().expect("cache sink lock"), "{line}");
        }
    }
}

impl Drop for SharedMemo {
    fn drop(&mut self) {
        let _ = self.flush();
    }
}
