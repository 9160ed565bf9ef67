//! On-disk cache of `Ĉ` values: one JSON object `{"bhat/n/k/m": "decimal"}`.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use polyb::exactmath::Integer;

pub const ENV_VAR: &str = "POLYB_CACHE_DIR";
const FILE_NAME: &str = "bhat.json";

pub type Key = (usize, usize, usize);

/// Flag, then environment variable, then the per-user cache directory.
pub fn resolve_dir(flag: Option<&Path>) -> PathBuf {
    if let Some(dir) = flag {
        return dir.to_path_buf();
    }
    if let Some(dir) = std::env::var_os(ENV_VAR).filter(|v| !v.is_empty()) {
        return PathBuf::from(dir);
    }
    dirs::cache_dir()
        .unwrap_or_else(std::env::temp_dir)
        .join("polyb")
}

pub fn file_in(dir: &Path) -> PathBuf {
    dir.join(FILE_NAME)
}

fn parse_key(key: &str) -> Option<Key> {
    let mut parts = key.split('/');
    if parts.next()? != "bhat" {
        return None;
    }
    let n = parts.next()?.parse().ok()?;
    let k = parts.next()?.parse().ok()?;
    let m = parts.next()?.parse().ok()?;
    parts.next().is_none().then_some((n, k, m))
}

/// Reads the cache. A missing file is empty; an unreadable or malformed file
/// is reported on stderr and treated as empty, as are malformed entries.
pub fn load(dir: &Path) -> Vec<(Key, Integer)> {
    let path = file_in(dir);
    let text = match fs::read_to_string(&path) {
        Ok(text) => text,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Vec::new(),
        Err(e) => {
            eprintln!("warning: ignoring cache {}: {e}", path.display());
            return Vec::new();
        }
    };
    let map: BTreeMap<String, String> = match serde_json::from_str(&text) {
        Ok(map) => map,
        Err(e) => {
            eprintln!("warning: ignoring malformed cache {}: {e}", path.display());
            return Vec::new();
        }
    };
    map.iter()
        .filter_map(|(key, value)| Some((parse_key(key)?, value.parse().ok()?)))
        .collect()
}

/// Writes all entries atomically: a temporary file in the same directory is
/// renamed over the cache file.
pub fn save(dir: &Path, entries: &[(Key, Integer)]) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    let map: BTreeMap<String, String> = entries
        .iter()
        .map(|((n, k, m), v)| (format!("bhat/{n}/{k}/{m}"), v.to_string()))
        .collect();
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    serde_json::to_writer_pretty(&mut tmp, &map)?;
    tmp.write_all(b"\n")?;
    tmp.as_file().sync_all()?;
    tmp.persist(file_in(dir)).map_err(|e| e.error)?;
    Ok(())
}

/// Removes the cache file; true if one existed.
pub fn clear(dir: &Path) -> io::Result<bool> {
    match fs::remove_file(file_in(dir)) {
        Ok(()) => Ok(true),
        Err(e) if e.kind() == io::ErrorKind::NotFound => Ok(false),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys() {
        assert_eq!(parse_key("bhat/2/3/1"), Some((2, 3, 1)));
        assert_eq!(parse_key("bhat/2/3"), None);
        assert_eq!(parse_key("bhat/2/3/1/4"), None);
        assert_eq!(parse_key("other/2/3/1"), None);
        assert_eq!(parse_key("bhat/a/3/1"), None);
    }

    #[test]
    fn round_trip_and_clear() {
        let dir = tempfile::tempdir().unwrap();
        assert!(load(dir.path()).is_empty());
        let entries = vec![
            ((2, 2, 0), Integer::from(14)),
            ((3, 1, 2), Integer::from(22)),
        ];
        save(dir.path(), &entries).unwrap();
        assert_eq!(load(dir.path()), entries);
        assert!(clear(dir.path()).unwrap());
        assert!(!clear(dir.path()).unwrap());
    }

    #[test]
    fn malformed_cache_is_ignored() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(file_in(dir.path()), "{not json").unwrap();
        assert!(load(dir.path()).is_empty());
        fs::write(
            file_in(dir.path()),
            r#"{"bhat/1/1/0":"2","bhat/x":"3","bhat/1/2/0":"z"}"#,
        )
        .unwrap();
        assert_eq!(load(dir.path()), vec![((1, 1, 0), Integer::from(2))]);
    }

    #[test]
    fn flag_wins() {
        let p = Path::new("/tmp/somewhere");
        assert_eq!(resolve_dir(Some(p)), p);
    }
}
