//! Run manifests and the digest-keyed output cache used by the CLI.
//!
//! Every output file is accompanied by a `<file>.manifest.json` recording
//! the command, its canonical parameter string, seeds, tool version, and
//! SHA-256 digests of inputs and outputs. Reruns with identical parameters
//! must produce identical digests. The cache stores outputs keyed by the
//! digest of `(command, canonical parameters, tool version)`; hits are
//! verified by re-hashing the stored bytes, never by timestamp.

use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

pub fn sha256_hex(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let digest = hasher.finalize();
    let mut out = String::with_capacity(64);
    for b in digest {
        out.push_str(&format!("{b:02x}"));
    }
    out
}

pub fn file_digest(path: &Path) -> io::Result<String> {
    Ok(sha256_hex(&fs::read(path)?))
}

#[derive(Debug, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub seed: Option<u64>,
    pub tool_version: String,
    pub input_digests: BTreeMap<String, String>,
    pub output_digests: BTreeMap<String, String>,
    pub wall_time_ms: u64,
    pub cache_hit: bool,
}

impl RunManifest {
    pub fn new(command: &str) -> RunManifest {
        RunManifest {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            seed: None,
            tool_version: TOOL_VERSION.to_string(),
            input_digests: BTreeMap::new(),
            output_digests: BTreeMap::new(),
            wall_time_ms: 0,
            cache_hit: false,
        }
    }

    pub fn parameter(mut self, key: &str, value: impl ToString) -> RunManifest {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    /// Canonical parameter string: `key=value` pairs in key order.
    pub fn canonical_parameters(&self) -> String {
        self.parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn record_input(&mut self, path: &Path) -> io::Result<()> {
        self.input_digests
            .insert(path.display().to_string(), file_digest(path)?);
        Ok(())
    }

    pub fn record_output(&mut self, path: &Path, bytes: &[u8]) {
        self.output_digests
            .insert(path.display().to_string(), sha256_hex(bytes));
    }

    /// Writes `<output>.manifest.json` next to the output file.
    pub fn write_alongside(&self, output: &Path) -> io::Result<PathBuf> {
        let mut name = output.file_name().unwrap_or_default().to_os_string();
        name.push(".manifest.json");
        let path = output.with_file_name(name);
        fs::write(
            &path,
            serde_json::to_string_pretty(self).expect("manifest serializes"),
        )?;
        Ok(path)
    }
}

/// Digest-keyed output cache. Location comes from `OMCACHE_DIR`, defaulting
/// to `./.omcache`.
pub struct OutputCache {
    dir: PathBuf,
}

impl OutputCache {
    pub fn from_env() -> OutputCache {
        let dir = std::env::var_os("OMCACHE_DIR")
            .map(PathBuf::from)
            .unwrap_or_else(|| PathBuf::from(".omcache"));
        OutputCache { dir }
    }

    pub fn at(dir: impl Into<PathBuf>) -> OutputCache {
        OutputCache { dir: dir.into() }
    }

    pub fn key(command: &str, canonical_params: &str) -> String {
        sha256_hex(format!("{command}\n{canonical_params}\n{TOOL_VERSION}").as_bytes())
    }

    fn data_path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.data"))
    }

    fn digest_path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.sha256"))
    }

    /// Returns the cached bytes when present and their recorded digest
    /// matches a fresh hash of the content.
    pub fn lookup(&self, key: &str) -> Option<Vec<u8>> {
        let bytes = fs::read(self.data_path(key)).ok()?;
        let recorded = fs::read_to_string(self.digest_path(key)).ok()?;
        if sha256_hex(&bytes) == recorded.trim() {
            Some(bytes)
        } else {
            None
        }
    }

    pub fn store(&self, key: &str, bytes: &[u8]) -> io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        fs::write(self.data_path(key), bytes)?;
        fs::write(self.digest_path(key), sha256_hex(bytes))?;
        Ok(())
    }
}
