//! On-disk result cache keyed by toolkit version and canonical arguments.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::Result;

/// Environment variable naming the cache directory; caching is off when unset.
pub const CACHE_ENV: &str = "LIECHECK_CACHE_DIR";

/// Hex SHA-256 of a byte string.
pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Cache key for a canonical argument record.
pub fn cache_key(version: &str, canonical_args: &str) -> String {
    sha256_hex(format!("{version}\n{canonical_args}").as_bytes())
}

/// Stored result payload.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Payload {
    pub result: serde_json::Value,
    pub passed: bool,
    pub candidates: Option<u64>,
    pub csv: Option<String>,
}

impl Payload {
    /// Digest over the canonical JSON encoding (object keys sorted).
    pub fn digest(&self) -> String {
        sha256_hex(&serde_json::to_vec(self).expect("payload serializes"))
    }
}

#[derive(Serialize, Deserialize)]
struct Entry {
    version: String,
    key: String,
    digest: String,
    payload: Payload,
}

/// A directory of cached payloads.
#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
    version: String,
}

impl Cache {
    pub fn new(dir: &Path, version: &str) -> Self {
        Cache {
            dir: dir.to_path_buf(),
            version: version.to_string(),
        }
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    pub fn key(&self, canonical_args: &str) -> String {
        cache_key(&self.version, canonical_args)
    }

    /// Loads a verified entry; corrupt or mismatched entries are evicted.
    pub fn load(&self, key: &str) -> Option<Payload> {
        let path = self.path(key);
        let text = fs::read_to_string(&path).ok()?;
        let ok = serde_json::from_str::<Entry>(&text).ok().filter(|e| {
            e.version == self.version && e.key == key && e.payload.digest() == e.digest
        });
        if ok.is_none() {
            log::warn!("evicting corrupt cache entry {}", path.display());
            let _ = fs::remove_file(&path);
        }
        ok.map(|e| e.payload)
    }

    pub fn store(&self, key: &str, payload: &Payload) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let entry = Entry {
            version: self.version.clone(),
            key: key.to_string(),
            digest: payload.digest(),
            payload: payload.clone(),
        };
        let tmp = self.dir.join(format!("{key}.tmp"));
        fs::write(&tmp, serde_json::to_vec(&entry)?)?;
        fs::rename(&tmp, self.path(key))?;
        Ok(())
    }
}
