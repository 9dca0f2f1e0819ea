use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::report::{GroupBundle, BUNDLE_SCHEMA};

#[derive(Serialize, Deserialize)]
struct CacheFile {
    checksum: String,
    payload: serde_json::Value,
}

fn entry_path(dir: &Path, id: &str) -> PathBuf {
    dir.join(format!("{id}.json"))
}

fn checksum_of(payload: &serde_json::Value) -> String {
    let bytes = serde_json::to_vec(payload).expect("payload serializes");
    let digest = Sha256::digest(&bytes);
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// Load a cached bundle; corrupt or stale entries are discarded with a
/// warning and `None` is returned so the caller recomputes.
pub fn load(dir: &Path, id: &str) -> Option<GroupBundle> {
    let path = entry_path(dir, id);
    let content = std::fs::read_to_string(&path).ok()?;
    let parsed: CacheFile = match serde_json::from_str(&content) {
        Ok(p) => p,
        Err(_) => {
            eprintln!("warning: cache entry {} is unreadable; recomputing", path.display());
            return None;
        }
    };
    if checksum_of(&parsed.payload) != parsed.checksum {
        eprintln!("warning: cache entry {} failed its checksum; recomputing", path.display());
        return None;
    }
    let bundle: GroupBundle = match serde_json::from_value(parsed.payload) {
        Ok(b) => b,
        Err(_) => {
            eprintln!("warning: cache entry {} has an unknown layout; recomputing", path.display());
            return None;
        }
    };
    if bundle.schema != BUNDLE_SCHEMA || bundle.id != id {
        eprintln!("warning: cache entry {} is stale; recomputing", path.display());
        return None;
    }
    Some(bundle)
}

/// Atomically persist a bundle (write to a temporary file, then rename).
pub fn save(dir: &Path, bundle: &GroupBundle) -> std::io::Result<()> {
    std::fs::create_dir_all(dir)?;
    let payload = serde_json::to_value(bundle).expect("bundle serializes");
    let file = CacheFile {
        checksum: checksum_of(&payload),
        payload,
    };
    let final_path = entry_path(dir, &bundle.id);
    let tmp_path = dir.join(format!(".{}.tmp", bundle.id));
    std::fs::write(&tmp_path, serde_json::to_string(&file).expect("cache serializes"))?;
    std::fs::rename(&tmp_path, final_path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn bundle(id: &str) -> GroupBundle {
        GroupBundle {
            schema: BUNDLE_SCHEMA,
            id: id.to_string(),
            order: 24,
            degree: 4,
            solvable: true,
            supersolvable: Some(false),
            wsm: Some(false),
            lattice: None,
            lattice_skip: None,
            chief_factors: None,
            character: None,
            verdicts: BTreeMap::new(),
        }
    }

    #[test]
    fn round_trip_and_tamper_detection() {
        let dir = tempfile::tempdir().unwrap();
        let b = bundle("abc123");
        save(dir.path(), &b).unwrap();
        assert_eq!(load(dir.path(), "abc123"), Some(b.clone()));

        // Tamper with the payload: the checksum no longer matches.
        let path = dir.path().join("abc123.json");
        let content = std::fs::read_to_string(&path).unwrap().replace("24", "25");
        std::fs::write(&path, content).unwrap();
        assert_eq!(load(dir.path(), "abc123"), None);
    }
}
