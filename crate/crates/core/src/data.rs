//! Bundled curve systems, relations and rewrite scripts.
//!
//! Set `CABLEKIT_DATA` to a directory with the same layout
//! (`systems/*.json`, `relations.json`, `scripts/*.json`) to override.

use std::path::{Path, PathBuf};

use crate::error::{CableError, Result};
use crate::words::{CurveSystem, Relation, RewriteScript, Workspace};

pub const DATA_ENV: &str = "CABLEKIT_DATA";

const SYSTEMS: &[&str] = &[
    include_str!("../data/systems/cable21.json"),
    include_str!("../data/systems/cable22_closure.json"),
    include_str!("../data/systems/lantern4.json"),
    include_str!("../data/systems/lantern5.json"),
    include_str!("../data/systems/resolved21.json"),
    include_str!("../data/systems/torus.json"),
];

const RELATIONS: &str = include_str!("../data/relations.json");

const SCRIPTS: &[&str] = &[
    include_str!("../data/scripts/cable_stabilization.json"),
    include_str!("../data/scripts/garside_square.json"),
    include_str!("../data/scripts/positive_refactorization.json"),
];

fn override_dir() -> Option<PathBuf> {
    std::env::var_os(DATA_ENV).map(PathBuf::from)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| CableError::Data(format!("{}: {e}", path.display())))
}

fn json_files(dir: &Path) -> Result<Vec<String>> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| CableError::Data(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths.iter().map(|p| read(p)).collect()
}

fn parse<T: serde::de::DeserializeOwned>(what: &str, s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| CableError::Data(format!("{what}: {e}")))
}

/// Loads every curve system and registers every relation through the
/// homology gate.
pub fn workspace() -> Result<Workspace> {
    let (systems, relations) = match override_dir() {
        Some(dir) => (json_files(&dir.join("systems"))?, read(&dir.join("relations.json"))?),
        None => (SYSTEMS.iter().map(|s| s.to_string()).collect(), RELATIONS.to_string()),
    };
    let mut ws = Workspace::new();
    for s in &systems {
        ws.add_system(CurveSystem::from_json(s)?)?;
    }
    let rels: Vec<Relation> = parse("relations", &relations)?;
    for r in rels {
        ws.register_relation(&r.name, r.lhs, r.rhs, &r.system)?;
    }
    Ok(ws)
}

pub fn shipped_scripts() -> Result<Vec<RewriteScript>> {
    let texts = match override_dir() {
        Some(dir) => json_files(&dir.join("scripts"))?,
        None => SCRIPTS.iter().map(|s| s.to_string()).collect(),
    };
    texts.iter().map(|t| parse("script", t)).collect()
}

pub fn script(name: &str) -> Result<RewriteScript> {
    shipped_scripts()?
        .into_iter()
        .find(|s| s.name == name)
        .ok_or_else(|| CableError::Data(format!("no shipped script named `{name}`")))
}
