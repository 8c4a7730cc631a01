//! On-disk cache of count tables, keyed by point count, filter, and code
//! version. Entries written by another version are recomputed.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::enumeration::{count_by_hausdorff, CountFilter, CountsTable};

/// Environment variable naming the cache directory.
pub const CACHE_DIR_ENV: &str = "TOPO_CACHE_DIR";
pub const DEFAULT_CACHE_DIR: &str = ".topo-cache";
pub const VERSION_TAG: &str = concat!("hausdorff-core/", env!("CARGO_PKG_VERSION"));

#[derive(Serialize, Deserialize)]
struct Entry {
    version: String,
    table: CountsTable,
}

#[derive(Debug, thiserror::Error)]
pub enum CacheError {
    #[error("cache I/O on {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error(transparent)]
    Compute(#[from] crate::error::Error),
}

#[derive(Clone, Debug)]
pub struct CountsCache {
    dir: PathBuf,
}

impl CountsCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        CountsCache { dir: dir.into() }
    }

    /// Cache rooted at `$TOPO_CACHE_DIR`, or `.topo-cache` when unset.
    pub fn from_env() -> Self {
        Self::new(std::env::var_os(CACHE_DIR_ENV).unwrap_or_else(|| DEFAULT_CACHE_DIR.into()))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, n: usize, filter: CountFilter) -> PathBuf {
        self.dir.join(format!("counts-n{n}-{}.json", filter.as_str()))
    }

    /// Returns the cached table if it was written by this code version.
    pub fn load(&self, n: usize, filter: CountFilter) -> Option<CountsTable> {
        let text = fs::read_to_string(self.path(n, filter)).ok()?;
        let entry: Entry = serde_json::from_str(&text).ok()?;
        (entry.version == VERSION_TAG && entry.table.n == n && entry.table.filter == filter)
            .then_some(entry.table)
    }

    pub fn store(&self, table: &CountsTable) -> Result<(), CacheError> {
        let path = self.path(table.n, table.filter);
        let io_err = |source| CacheError::Io {
            path: path.clone(),
            source,
        };
        fs::create_dir_all(&self.dir).map_err(io_err)?;
        let entry = Entry {
            version: VERSION_TAG.to_string(),
            table: table.clone(),
        };
        let text = serde_json::to_string(&entry).expect("plain data serializes");
        fs::write(&path, text).map_err(io_err)
    }

    pub fn load_or_compute(
        &self,
        n: usize,
        filter: CountFilter,
        jobs: usize,
    ) -> Result<CountsTable, CacheError> {
        if let Some(t) = self.load(n, filter) {
            return Ok(t);
        }
        let table = count_by_hausdorff(n, filter, jobs)?;
        self.store(&table)?;
        Ok(table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stores_and_reloads() {
        let dir = tempfile::tempdir().unwrap();
        let cache = CountsCache::new(dir.path().join("nested"));
        assert!(cache.load(3, CountFilter::All).is_none());
        let t = cache.load_or_compute(3, CountFilter::All, 1).unwrap();
        assert_eq!(cache.load(3, CountFilter::All), Some(t));
        assert!(cache.load(3, CountFilter::T0).is_none());
    }

    #[test]
    fn stale_version_is_recomputed() {
        let dir = tempfile::tempdir().unwrap();
        let cache = CountsCache::new(dir.path());
        let mut t = count_by_hausdorff(2, CountFilter::All, 1).unwrap();
        t.labeled_total = 999;
        let stale = serde_json::json!({ "version": "hausdorff-core/0.0.0", "table": t });
        fs::write(cache.path(2, CountFilter::All), stale.to_string()).unwrap();
        assert!(cache.load(2, CountFilter::All).is_none());
        assert_eq!(cache.load_or_compute(2, CountFilter::All, 1).unwrap().labeled_total, 4);
    }
}
