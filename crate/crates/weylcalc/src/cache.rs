//! Versioned, checksummed on-disk cache for expensive build artifacts.
//!
//! Entries are JSON documents wrapped in an envelope carrying the format
//! version and a SHA-256 checksum of the payload. Corrupt or out-of-date
//! entries are ignored (the caller rebuilds) rather than erroring.

use crate::{Error, Result};
use serde_json::Value;
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};

pub const FORMAT_VERSION: u64 = 1;

/// Environment variable overriding the cache directory (flags win over it).
pub const CACHE_DIR_ENV: &str = "WEYLCALC_CACHE_DIR";

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

fn checksum(payload: &str) -> String {
    let mut h = Sha256::new();
    h.update(payload.as_bytes());
    format!("{:x}", h.finalize())
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Cache {
        Cache { dir: dir.into() }
    }

    pub fn path_for(&self, kind: &str, key: &str) -> PathBuf {
        self.dir.join(format!("{kind}-{key}.json"))
    }

    /// Store a payload under `(kind, key)`.
    pub fn put(&self, kind: &str, key: &str, payload: &Value) -> Result<()> {
        std::fs::create_dir_all(&self.dir).map_err(|e| Error::Io {
            path: self.dir.display().to_string(),
            source: e,
        })?;
        let payload_text = serde_json::to_string(payload).expect("serializable payload");
        let doc = serde_json::json!({
            "format_version": FORMAT_VERSION,
            "kind": kind,
            "key": key,
            "checksum": checksum(&payload_text),
            "payload": payload,
        });
        let path = self.path_for(kind, key);
        std::fs::write(&path, serde_json::to_string(&doc).unwrap())
            .map_err(|e| Error::Io { path: path.display().to_string(), source: e })
    }

    /// Fetch a payload; `None` when absent, stale, or corrupt (with a
    /// warning to stderr in the latter cases, so the caller rebuilds).
    pub fn get(&self, kind: &str, key: &str) -> Option<Value> {
        let path = self.path_for(kind, key);
        let text = std::fs::read_to_string(&path).ok()?;
        match self.validate(&path, &text, kind, key) {
            Ok(payload) => Some(payload),
            Err(e) => {
                eprintln!("warning: rebuilding {kind}/{key}: {e}");
                None
            }
        }
    }

    fn validate(&self, path: &Path, text: &str, kind: &str, key: &str) -> Result<Value> {
        let reject = |reason: &str| Error::Cache {
            path: path.display().to_string(),
            reason: reason.to_string(),
        };
        let doc: Value = serde_json::from_str(text).map_err(|e| reject(&e.to_string()))?;
        if doc["format_version"].as_u64() != Some(FORMAT_VERSION) {
            return Err(reject("format_version mismatch"));
        }
        if doc["kind"].as_str() != Some(kind) || doc["key"].as_str() != Some(key) {
            return Err(reject("kind/key mismatch"));
        }
        let payload = doc["payload"].clone();
        let payload_text = serde_json::to_string(&payload).unwrap();
        if doc["checksum"].as_str() != Some(checksum(&payload_text).as_str()) {
            return Err(reject("checksum mismatch"));
        }
        Ok(payload)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn round_trip_and_rejection() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let payload = json!({"a": [1, 2, 3]});
        cache.put("demo", "K1", &payload).unwrap();
        assert_eq!(cache.get("demo", "K1"), Some(payload.clone()));
        assert_eq!(cache.get("demo", "K2"), None);

        // Corrupt the checksum: entry is ignored.
        let path = cache.path_for("demo", "K1");
        let mut doc: Value =
            serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        doc["payload"]["a"][0] = json!(99);
        std::fs::write(&path, serde_json::to_string(&doc).unwrap()).unwrap();
        assert_eq!(cache.get("demo", "K1"), None);

        // Version bump: entry is ignored.
        cache.put("demo", "K1", &payload).unwrap();
        let mut doc: Value =
            serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        doc["format_version"] = json!(0);
        std::fs::write(&path, serde_json::to_string(&doc).unwrap()).unwrap();
        assert_eq!(cache.get("demo", "K1"), None);
    }
}
