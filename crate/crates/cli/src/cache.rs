//! On-disk cache of supersingular sets, one checksummed text record per prime.
//! Missing, unreadable or corrupt records are recomputed and rewritten.

use std::fs;
use std::path::{Path, PathBuf};

use ordcert::parallel::Execution;
use ordcert::supersingular::{parse_record, serialize_record, supersingular_set_with, SupersingularSet};
use ordcert::{Error, Result};

pub const CACHE_ENV: &str = "ORDCERT_CACHE_DIR";

pub fn cache_dir(flag: Option<&Path>) -> PathBuf {
    if let Some(dir) = flag {
        return dir.to_path_buf();
    }
    match std::env::var_os(CACHE_ENV) {
        Some(dir) if !dir.is_empty() => PathBuf::from(dir),
        _ => std::env::temp_dir().join("ordcert-cache"),
    }
}

pub fn supersingular(p: u64, cap: u64, flag: Option<&Path>) -> Result<SupersingularSet> {
    if !ordcert::ffield::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let path = cache_dir(flag).join(format!("supersingular-{p}.txt"));
    if let Ok(text) = fs::read_to_string(&path) {
        if let Ok(ss) = parse_record(&text) {
            if ss.p() == p {
                return Ok(ss);
            }
        }
    }
    let ss = supersingular_set_with(p, cap, Execution::default())?;
    let written = path
        .parent()
        .map_or(Ok(()), fs::create_dir_all)
        .and_then(|_| fs::write(&path, serialize_record(&ss)));
    if let Err(e) = written {
        eprintln!("warning: could not write cache {}: {e}", path.display());
    }
    Ok(ss)
}
