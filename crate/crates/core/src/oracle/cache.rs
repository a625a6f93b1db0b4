//! Append-only JSONL store of oracle records.

use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use super::{OracleError, RexRecord};
use crate::canon::CanonicalForm;

pub const CACHE_ENV: &str = "REXLAB_CACHE";

/// `$REXLAB_CACHE`, or `rexlab-cache.jsonl` in the working directory.
pub fn default_cache_path() -> PathBuf {
    std::env::var_os(CACHE_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("rexlab-cache.jsonl"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheStatus {
    Hit,
    /// Computed and appended.
    Stored,
    /// Computed without consulting the cache; `true` if a stored row exists
    /// and matched.
    Recomputed(Option<bool>),
}

pub struct RexCache {
    path: PathBuf,
    writer: Mutex<()>,
}

impl RexCache {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        RexCache {
            path: path.into(),
            writer: Mutex::new(()),
        }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// Every parseable row, in file order. A missing file is empty.
    pub fn records(&self) -> Result<Vec<RexRecord>, OracleError> {
        let file = match File::open(&self.path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(OracleError::Cache(e.to_string())),
        };
        let mut out = Vec::new();
        for (i, line) in BufReader::new(file).lines().enumerate() {
            let line = line.map_err(|e| OracleError::Cache(e.to_string()))?;
            if line.trim().is_empty() {
                continue;
            }
            let rec: RexRecord = serde_json::from_str(&line)
                .map_err(|e| OracleError::Cache(format!("line {}: {e}", i + 1)))?;
            out.push(rec);
        }
        Ok(out)
    }

    /// Latest exhaustive row for the key.
    pub fn lookup(
        &self,
        n: usize,
        pattern: &CanonicalForm,
        forbidden: &CanonicalForm,
        r_filter: Option<usize>,
    ) -> Result<Option<RexRecord>, OracleError> {
        Ok(self.records()?.into_iter().rev().find(|r| {
            r.n == n
                && &r.pattern == pattern
                && &r.forbidden == forbidden
                && r.r_filter == r_filter
                && r.exhaustive
        }))
    }

    pub fn append(&self, rec: &RexRecord) -> Result<(), OracleError> {
        let _guard = self.writer.lock().unwrap_or_else(|e| e.into_inner());
        let line = serde_json::to_string(rec).map_err(|e| OracleError::Cache(e.to_string()))?;
        let mut f = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .map_err(|e| OracleError::Cache(format!("{}: {e}", self.path.display())))?;
        writeln!(f, "{line}").map_err(|e| OracleError::Cache(e.to_string()))
    }

    pub fn clear(&self) -> Result<(), OracleError> {
        let _guard = self.writer.lock().unwrap_or_else(|e| e.into_inner());
        match std::fs::remove_file(&self.path) {
            Ok(()) => Ok(()),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(()),
            Err(e) => Err(OracleError::Cache(e.to_string())),
        }
    }

    /// Serves the record from the cache when possible. With `no_cache` the
    /// record is recomputed and compared against any stored row; a
    /// difference is an error. Only exhaustive records are stored.
    pub fn rex(
        &self,
        n: usize,
        h: &crate::graph::Graph,
        f: &crate::graph::Graph,
        r_filter: Option<usize>,
        opts: &super::OracleOptions,
        no_cache: bool,
    ) -> Result<(RexRecord, CacheStatus), OracleError> {
        let pattern = crate::canon::canonical_form(h)?;
        let forbidden = crate::canon::canonical_form(f)?;
        let stored = self.lookup(n, &pattern, &forbidden, r_filter)?;
        if !no_cache {
            if let Some(rec) = stored {
                return Ok((rec, CacheStatus::Hit));
            }
        }
        let rec = super::rex_brute(n, h, f, r_filter, opts)?;
        if no_cache {
            let matched = stored.map(|s| s == rec);
            if matched == Some(false) && rec.exhaustive {
                return Err(OracleError::CacheMismatch);
            }
            return Ok((rec, CacheStatus::Recomputed(matched)));
        }
        if rec.exhaustive {
            self.append(&rec)?;
        }
        Ok((rec, CacheStatus::Stored))
    }
}
