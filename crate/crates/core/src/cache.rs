//! Persistent per-type profiles of `ℓ_Δ` and `ℓ^sd_Δ`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::ell::{ell_delta, ell_sd_delta, Attained};
use crate::error::Result;
use crate::rootsystem::RootSystem;
use crate::SCHEMA_VERSION;

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "WEYLMIN_CACHE_DIR";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Profile {
    pub schema_version: u32,
    #[serde(rename = "type")]
    pub type_string: String,
    pub ell: Attained,
    pub ell_sd: Attained,
}

impl Profile {
    pub fn compute(rs: &RootSystem) -> Result<Profile> {
        Ok(Profile {
            schema_version: SCHEMA_VERSION,
            type_string: rs.type_string(),
            ell: ell_delta(rs)?,
            ell_sd: ell_sd_delta(rs)?,
        })
    }

    /// Witnesses still certify the stored values for `rs`.
    fn is_sound(&self, rs: &RootSystem) -> bool {
        self.schema_version == SCHEMA_VERSION
            && self.type_string == rs.type_string()
            && [&self.ell, &self.ell_sd]
                .iter()
                .all(|a| a.value == a.result.value && a.result.verify(rs).unwrap_or(false))
    }
}

/// What a cache lookup found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Lookup {
    Hit(Box<Profile>),
    Miss,
    /// Unreadable, stale, or failing its witness check; recompute.
    Invalid(String),
}

/// Where a profile came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    Cache,
    Computed,
}

#[derive(Debug, Clone)]
pub struct ProfileCache {
    dir: PathBuf,
}

impl ProfileCache {
    pub fn new(dir: impl Into<PathBuf>) -> ProfileCache {
        ProfileCache { dir: dir.into() }
    }

    /// Flag value, then `WEYLMIN_CACHE_DIR`, then the per-user data directory.
    pub fn resolve(flag: Option<&Path>) -> Option<ProfileCache> {
        if let Some(p) = flag {
            return Some(ProfileCache::new(p));
        }
        if let Some(p) = std::env::var_os(CACHE_ENV).filter(|p| !p.is_empty()) {
            return Some(ProfileCache::new(p));
        }
        if let Some(p) = std::env::var_os("XDG_DATA_HOME").filter(|p| !p.is_empty()) {
            return Some(ProfileCache::new(PathBuf::from(p).join("weylmin")));
        }
        std::env::var_os("HOME").map(|h| ProfileCache::new(PathBuf::from(h).join(".local/share/weylmin")))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, type_string: &str) -> PathBuf {
        self.dir.join(format!("{type_string}.json"))
    }

    pub fn load(&self, rs: &RootSystem) -> Lookup {
        let path = self.path_for(&rs.type_string());
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Lookup::Miss,
            Err(e) => return Lookup::Invalid(format!("{}: {e}", path.display())),
        };
        match serde_json::from_str::<Profile>(&text) {
            Ok(p) if p.is_sound(rs) => Lookup::Hit(Box::new(p)),
            Ok(p) if p.schema_version != SCHEMA_VERSION => {
                Lookup::Invalid(format!("{}: schema version {} != {SCHEMA_VERSION}", path.display(), p.schema_version))
            }
            Ok(_) => Lookup::Invalid(format!("{}: stored witnesses do not verify", path.display())),
            Err(e) => Lookup::Invalid(format!("{}: {e}", path.display())),
        }
    }

    /// Write via a temporary file and rename, so readers never see a partial file.
    pub fn store(&self, profile: &Profile) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let path = self.path_for(&profile.type_string);
        let tmp = self.dir.join(format!(".{}.{}.tmp", profile.type_string, std::process::id()));
        {
            let mut f = fs::File::create(&tmp)?;
            serde_json::to_writer_pretty(&mut f, profile)?;
            f.write_all(b"\n")?;
            f.sync_all()?;
        }
        fs::rename(&tmp, &path)
    }
}

/// Cached profile if valid, else compute and (best effort) store. Problems
/// with the cache are returned as warnings, never as errors.
pub fn profile(rs: &RootSystem, cache: Option<&ProfileCache>) -> Result<(Profile, Source, Vec<String>)> {
    let mut warnings = Vec::new();
    if let Some(c) = cache {
        match c.load(rs) {
            Lookup::Hit(p) => return Ok((*p, Source::Cache, warnings)),
            Lookup::Miss => {}
            Lookup::Invalid(why) => warnings.push(format!("ignoring cache entry ({why}); recomputing")),
        }
    }
    let p = Profile::compute(rs)?;
    if let Some(c) = cache {
        if let Err(e) = c.store(&p) {
            warnings.push(format!("could not write cache in {}: {e}", c.dir().display()));
        }
    }
    Ok((p, Source::Computed, warnings))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tmpdir(tag: &str) -> PathBuf {
        let d = std::env::temp_dir().join(format!("weylmin-cache-unit-{tag}-{}", std::process::id()));
        let _ = fs::remove_dir_all(&d);
        d
    }

    #[test]
    fn round_trip_and_corruption() {
        let dir = tmpdir("rt");
        let cache = ProfileCache::new(&dir);
        let rs = RootSystem::from_type_string("B3xG2").unwrap();
        let (p1, s1, w1) = profile(&rs, Some(&cache)).unwrap();
        assert_eq!(s1, Source::Computed);
        assert!(w1.is_empty());
        let (p2, s2, _) = profile(&rs, Some(&cache)).unwrap();
        assert_eq!(s2, Source::Cache);
        assert_eq!(p1, p2);

        fs::write(cache.path_for("B3xG2"), "{ not json").unwrap();
        let (p3, s3, w3) = profile(&rs, Some(&cache)).unwrap();
        assert_eq!(s3, Source::Computed);
        assert_eq!(w3.len(), 1);
        assert_eq!(p3, p1);
        fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn tampered_value_rejected() {
        let dir = tmpdir("tamper");
        let cache = ProfileCache::new(&dir);
        let rs = RootSystem::from_type_string("A3").unwrap();
        let mut p = Profile::compute(&rs).unwrap();
        p.ell_sd.value = 1;
        cache.store(&p).unwrap();
        assert!(matches!(cache.load(&rs), Lookup::Invalid(_)));
        p = Profile::compute(&rs).unwrap();
        p.schema_version = 0;
        cache.store(&p).unwrap();
        assert!(matches!(cache.load(&rs), Lookup::Invalid(ref s) if s.contains("schema")));
        fs::remove_dir_all(&dir).unwrap();
    }
}
