//! On-disk cache of tower stages.
//!
//! The directory holds `manifest.json` and one payload file per entry. Each
//! manifest entry records the stage name, field mode, sample point (for
//! pointwise modes), convention version and the SHA-256 of the payload.
//! Payloads are stage bundles (see [`super::persist`]). Files are written to
//! a temporary name and renamed into place.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use log::{info, warn};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::arith::{Params, Scalar};
use crate::{Error, Result};

use super::persist::Persist;
use super::tower::{base_stage, mid_stage, top_stage, Tower};

/// Changes whenever a convention affecting stage contents changes.
pub const CONVENTION_VERSION: &str = "sl3q-2";

const MANIFEST: &str = "manifest.json";

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub name: String,
    pub stage: String,
    pub mode: String,
    pub sample: Option<String>,
    pub convention: String,
    pub file: String,
    pub sha256: String,
    pub bytes: u64,
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct Manifest {
    pub entries: Vec<ManifestEntry>,
}

/// Outcome of checking one entry.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct EntryCheck {
    pub name: String,
    pub ok: bool,
    pub detail: Option<String>,
}

/// Identifies one stage in one field mode at one sample point.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StageKey {
    pub stage: String,
    pub mode: String,
    pub sample: Option<String>,
}

impl StageKey {
    pub fn new<F: Scalar>(stage: &str, params: &Params<F>) -> Self {
        let mode = F::mode_tag();
        let sample = (mode != "symbolic").then(|| params.a().to_string());
        Self { stage: stage.to_string(), mode, sample }
    }

    /// File-system safe entry name.
    pub fn name(&self) -> String {
        match &self.sample {
            None => format!("{}-{}", self.stage, self.mode),
            Some(s) => format!("{}-{}-{}", self.stage, self.mode, &hex::encode(Sha256::digest(s.as_bytes()))[..12]),
        }
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn open(dir: impl AsRef<Path>) -> Result<Self> {
        fs::create_dir_all(dir.as_ref())?;
        Ok(Self { dir: dir.as_ref().to_path_buf() })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn manifest(&self) -> Result<Manifest> {
        let path = self.dir.join(MANIFEST);
        if !path.exists() {
            return Ok(Manifest::default());
        }
        let text = fs::read_to_string(&path)?;
        serde_json::from_str(&text)
            .map_err(|e| Error::Cache { entry: MANIFEST.into(), reason: format!("unreadable manifest: {e}") })
    }

    fn write_atomic(&self, file: &str, bytes: &[u8]) -> Result<()> {
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(bytes)?;
        tmp.as_file().sync_all()?;
        tmp.persist(self.dir.join(file)).map_err(|e| Error::Io(e.error))?;
        Ok(())
    }

    fn write_manifest(&self, m: &Manifest) -> Result<()> {
        let text = serde_json::to_string_pretty(m)?;
        self.write_atomic(MANIFEST, text.as_bytes())
    }

    /// Stores a payload under `key`, replacing any previous entry.
    pub fn store(&self, key: &StageKey, payload: &str) -> Result<ManifestEntry> {
        let name = key.name();
        let file = format!("{name}.txt");
        self.write_atomic(&file, payload.as_bytes())?;
        let entry = ManifestEntry {
            name: name.clone(),
            stage: key.stage.clone(),
            mode: key.mode.clone(),
            sample: key.sample.clone(),
            convention: CONVENTION_VERSION.into(),
            file,
            sha256: sha256_hex(payload.as_bytes()),
            bytes: payload.len() as u64,
        };
        let mut m = self.manifest()?;
        m.entries.retain(|e| e.name != name);
        m.entries.push(entry.clone());
        m.entries.sort_by(|a, b| a.name.cmp(&b.name));
        self.write_manifest(&m)?;
        Ok(entry)
    }

    fn read_checked(&self, e: &ManifestEntry) -> Result<String> {
        let bytes = fs::read(self.dir.join(&e.file))
            .map_err(|err| Error::Cache { entry: e.name.clone(), reason: format!("cannot read payload: {err}") })?;
        let sum = sha256_hex(&bytes);
        if sum != e.sha256 {
            return Err(Error::Cache {
                entry: e.name.clone(),
                reason: format!("checksum mismatch (manifest {}, payload {sum})", e.sha256),
            });
        }
        String::from_utf8(bytes).map_err(|_| Error::Cache { entry: e.name.clone(), reason: "payload is not UTF-8".into() })
    }

    /// The payload for `key`, or `None` when absent or built under another
    /// convention. A present but corrupt entry is an error.
    pub fn load(&self, key: &StageKey) -> Result<Option<String>> {
        let name = key.name();
        let m = self.manifest()?;
        let Some(e) = m.entries.iter().find(|e| e.name == name) else {
            return Ok(None);
        };
        if e.convention != CONVENTION_VERSION || e.sample != key.sample {
            warn!("cache entry {name} is stale; rebuilding");
            return Ok(None);
        }
        self.read_checked(e).map(Some)
    }

    pub fn list(&self) -> Result<Vec<ManifestEntry>> {
        Ok(self.manifest()?.entries)
    }

    /// Checks every payload against its manifest checksum.
    pub fn verify(&self) -> Result<Vec<EntryCheck>> {
        Ok(self
            .manifest()?
            .entries
            .iter()
            .map(|e| match self.read_checked(e) {
                Ok(_) => EntryCheck { name: e.name.clone(), ok: true, detail: None },
                Err(err) => EntryCheck { name: e.name.clone(), ok: false, detail: Some(err.to_string()) },
            })
            .collect())
    }

    /// Removes every entry and the manifest; returns the number of entries.
    pub fn clear(&self) -> Result<usize> {
        let m = self.manifest()?;
        for e in &m.entries {
            let p = self.dir.join(&e.file);
            if p.exists() {
                fs::remove_file(p)?;
            }
        }
        let mp = self.dir.join(MANIFEST);
        if mp.exists() {
            fs::remove_file(mp)?;
        }
        Ok(m.entries.len())
    }

    /// Loads a stage, or builds and stores it.
    pub fn stage<S: Persist>(&self, key: StageKey, build: impl FnOnce() -> Result<S>) -> Result<S> {
        if let Some(text) = self.load(&key)? {
            info!("cache hit {}", key.name());
            return S::from_text(&key.name(), &text);
        }
        let s = build()?;
        self.store(&key, &s.to_text())?;
        info!("cached {}", key.name());
        Ok(s)
    }
}

/// Builds the tower, reusing any valid cached stages.
pub fn cached_tower<F: Scalar>(cache: &Cache, params: &Params<F>) -> Result<Tower<F>> {
    let base = cache.stage(StageKey::new("base", params), || base_stage(params))?;
    let mid = cache.stage(StageKey::new("mid", params), || mid_stage(&base))?;
    let top = cache.stage(StageKey::new("top", params), || top_stage(&mid, params))?;
    Ok(Tower { base, mid, top })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::fp::{Fp, P0};

    #[test]
    fn store_load_and_detect_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(dir.path()).unwrap();
        let params = Params::new(Fp::<P0>::new(7)).unwrap();
        let key = StageKey::new("demo", &params);
        assert_eq!(cache.load(&key).unwrap(), None);
        cache.store(&key, "hello").unwrap();
        assert_eq!(cache.load(&key).unwrap().as_deref(), Some("hello"));
        assert!(cache.verify().unwrap().iter().all(|c| c.ok));

        fs::write(dir.path().join(format!("{}.txt", key.name())), "hellp").unwrap();
        let err = cache.load(&key).unwrap_err().to_string();
        assert!(err.contains(&key.name()) && err.contains("checksum"), "{err}");
        assert!(!cache.verify().unwrap()[0].ok);
        assert_eq!(cache.clear().unwrap(), 1);
        assert!(cache.list().unwrap().is_empty());
    }
}
