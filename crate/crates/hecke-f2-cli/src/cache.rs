//! On-disk cache of generator expansions in F2QSER format.

use std::fs;
use std::path::PathBuf;

use anyhow::{Context, Result};
use hecke_f2::fps2::parse_f2qser;
use hecke_f2::QExpansion;

pub const ENV_VAR: &str = "HECKE_F2_CACHE";

pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn disabled() -> Self {
        Cache { dir: None }
    }

    /// `$HECKE_F2_CACHE`, else the platform cache directory.
    pub fn from_env() -> Self {
        let dir = std::env::var_os(ENV_VAR)
            .map(PathBuf::from)
            .or_else(|| dirs::cache_dir().map(|d| d.join("hecke-f2")));
        Cache { dir }
    }

    fn path(&self, name: &str, level: u32) -> Option<PathBuf> {
        self.dir
            .as_ref()
            .map(|d| d.join(format!("{name}-level{level}.f2qser")))
    }

    /// A cached expansion with at least `prec` coefficients, truncated to
    /// `prec`; unreadable or short entries count as misses.
    pub fn get(&self, name: &str, level: u32, prec: usize) -> Option<QExpansion> {
        let text = fs::read_to_string(self.path(name, level)?).ok()?;
        let (header, q) = parse_f2qser(&text).ok()?;
        (header.name == name && header.level == level && q.prec() >= prec).then(|| q.truncate(prec))
    }

    /// Store unless a longer entry is already present.
    pub fn put(&self, name: &str, level: u32, q: &QExpansion) -> Result<()> {
        let Some(path) = self.path(name, level) else {
            return Ok(());
        };
        if self.get(name, level, q.prec()).is_some() {
            return Ok(());
        }
        let dir = path.parent().expect("cache path has a parent");
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, q.to_f2qser(name, level))?;
        fs::rename(&tmp, &path)?;
        Ok(())
    }

    pub fn get_or_compute(
        &self,
        name: &str,
        level: u32,
        prec: usize,
        compute: impl FnOnce() -> hecke_f2::Result<QExpansion>,
    ) -> Result<QExpansion> {
        if let Some(q) = self.get(name, level, prec) {
            return Ok(q);
        }
        let q = compute()?;
        self.put(name, level, &q)?;
        Ok(q)
    }
}
