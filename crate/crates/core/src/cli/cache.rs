//! On-disk cache of diagram enumerations.
//!
//! One JSON file per `(schema, g, n, r)`. The file carries a SHA-256 of the
//! canonical payload JSON; anything that fails to parse or verify is treated
//! as absent and overwritten on the next store.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::diagrams::{enumerate_reduced, ChordDiagram};
use crate::error::Result;
use crate::surface::SurfaceSig;

pub const CACHE_SCHEMA: u32 = 1;
pub const CACHE_DIR_ENV: &str = "MULTICURVE_CACHE_DIR";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CachePayload {
    pub sig: SurfaceSig,
    pub r: usize,
    pub count: usize,
    pub diagrams: Vec<ChordDiagram>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheOutcome {
    Hit,
    /// No entry for this key.
    Miss,
    /// An entry existed but failed to parse or verify.
    Rejected,
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
    schema: u32,
}

fn canonical(value: &Value) -> String {
    value.to_string()
}

fn checksum(text: &str) -> String {
    Sha256::digest(text.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self::with_schema(dir, CACHE_SCHEMA)
    }

    pub fn with_schema(dir: impl Into<PathBuf>, schema: u32) -> Self {
        Self {
            dir: dir.into(),
            schema,
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, sig: SurfaceSig, r: usize) -> PathBuf {
        self.dir.join(format!(
            "v{}_g{}_n{}_r{}.json",
            self.schema,
            sig.genus(),
            sig.boundary_count(),
            r
        ))
    }

    pub fn store(&self, payload: &CachePayload) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let body = serde_json::to_value(payload)?;
        let doc = serde_json::json!({
            "schema": self.schema,
            "checksum": checksum(&canonical(&body)),
            "payload": body,
        });
        let path = self.path(payload.sig, payload.r);
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, canonical(&doc))?;
        fs::rename(tmp, path)?;
        Ok(())
    }

    pub fn load(&self, sig: SurfaceSig, r: usize) -> (Option<CachePayload>, CacheOutcome) {
        let Ok(text) = fs::read_to_string(self.path(sig, r)) else {
            return (None, CacheOutcome::Miss);
        };
        match self.verify(&text, sig, r) {
            Some(p) => (Some(p), CacheOutcome::Hit),
            None => (None, CacheOutcome::Rejected),
        }
    }

    fn verify(&self, text: &str, sig: SurfaceSig, r: usize) -> Option<CachePayload> {
        let doc: Value = serde_json::from_str(text).ok()?;
        if doc.get("schema")?.as_u64()? != u64::from(self.schema) {
            return None;
        }
        let body = doc.get("payload")?;
        if doc.get("checksum")?.as_str()? != checksum(&canonical(body)) {
            return None;
        }
        let payload: CachePayload = serde_json::from_value(body.clone()).ok()?;
        (payload.sig == sig && payload.r == r && payload.count == payload.diagrams.len())
            .then_some(payload)
    }

    /// Loads the enumeration for `(sig, r)`, recomputing and storing it when
    /// the entry is missing or invalid.
    pub fn diagrams(&self, sig: SurfaceSig, r: usize) -> Result<(Vec<ChordDiagram>, CacheOutcome)> {
        let (loaded, outcome) = self.load(sig, r);
        if let Some(p) = loaded {
            return Ok((p.diagrams, outcome));
        }
        let diagrams = enumerate_reduced(sig, r);
        self.store(&CachePayload {
            sig,
            r,
            count: diagrams.len(),
            diagrams: diagrams.clone(),
        })?;
        Ok((diagrams, outcome))
    }
}

/// Enumerates through `cache` when one is configured.
pub fn diagrams_via(cache: Option<&Cache>, sig: SurfaceSig, r: usize) -> Result<Vec<ChordDiagram>> {
    match cache {
        Some(c) => Ok(c.diagrams(sig, r)?.0),
        None => Ok(enumerate_reduced(sig, r)),
    }
}
