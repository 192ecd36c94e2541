//! On-disk cache written by `solve` and read by `report`.
//!
//! Layout under `<out>/cache`: `manifest.json`, `measurements.json`, and one
//! `grid_<name>.bin` per sampled grid holding exact little-endian doubles.

use std::collections::BTreeMap;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use conekahler_core::verify::FieldGrid;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::config::hex;
use crate::error::{CliError, CliResult};
use crate::measure::{Measurement, NamedGrids};
use crate::report::{REPORT_SCHEMA, REPORT_VERSION};

/// Bumped whenever the binary layout below changes.
const CACHE_FORMAT: &str = "conekahler-cache/1";
const GRID_MAGIC: &[u8; 8] = b"CKGRID01";

/// Hash of the report schema and the cache layout.
pub fn schema_hash() -> String {
    let mut h = Sha256::new();
    h.update(CACHE_FORMAT.as_bytes());
    h.update(REPORT_SCHEMA.as_bytes());
    hex(&h.finalize())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub schema_hash: String,
    pub version: String,
    pub scenario: String,
    pub config_hash: String,
    pub seed: u64,
    pub grids: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Stored {
    pub measurements: Vec<Measurement>,
    pub timings: BTreeMap<String, f64>,
}

pub fn cache_dir(out: &Path) -> PathBuf {
    out.join("cache")
}

fn io(path: &Path, e: impl std::fmt::Display) -> CliError {
    CliError::Io(format!("{}: {e}", path.display()))
}

fn write_json<T: Serialize>(path: &Path, v: &T) -> CliResult<()> {
    let text = serde_json::to_string_pretty(v).map_err(|e| io(path, e))?;
    fs::write(path, text).map_err(|e| io(path, e))
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> CliResult<T> {
    let text = fs::read_to_string(path).map_err(|e| io(path, e))?;
    serde_json::from_str(&text).map_err(|e| CliError::Cache(format!("{}: {e}", path.display())))
}

fn grid_path(dir: &Path, name: &str) -> PathBuf {
    dir.join(format!("grid_{name}.bin"))
}

pub fn encode_grid(g: &FieldGrid) -> Vec<u8> {
    let mut b = Vec::with_capacity(64 + g.metric.len() * 16 * 8);
    b.extend_from_slice(GRID_MAGIC);
    for x in g.origin {
        b.extend_from_slice(&x.to_le_bytes());
    }
    b.extend_from_slice(&g.spacing.to_le_bytes());
    for n in g.shape {
        b.extend_from_slice(&(n as u64).to_le_bytes());
    }
    b.push(u8::from(g.omega.is_some()));
    for row in &g.metric {
        row.iter().for_each(|x| b.extend_from_slice(&x.to_le_bytes()));
    }
    if let Some(w) = &g.omega {
        for row in w {
            row.iter().for_each(|x| b.extend_from_slice(&x.to_le_bytes()));
        }
    }
    b
}

pub fn decode_grid(bytes: &[u8]) -> CliResult<FieldGrid> {
    let bad = |m: &str| CliError::Cache(format!("corrupt grid file: {m}"));
    let mut r = bytes;
    let mut magic = [0u8; 8];
    r.read_exact(&mut magic).map_err(|_| bad("truncated header"))?;
    if &magic != GRID_MAGIC {
        return Err(bad("unknown format"));
    }
    let mut word = || -> CliResult<[u8; 8]> {
        let mut w = [0u8; 8];
        r.read_exact(&mut w).map_err(|_| bad("truncated"))?;
        Ok(w)
    };
    let mut f = || word().map(f64::from_le_bytes);
    let origin = [f()?, f()?, f()?];
    let spacing = f()?;
    let mut u = || word().map(|w| u64::from_le_bytes(w) as usize);
    let shape = [u()?, u()?, u()?];
    let n = shape.iter().product::<usize>();
    let head = 8 + 8 * 7;
    let has_omega = *bytes.get(head).ok_or_else(|| bad("truncated"))? == 1;
    let per = if has_omega { 16 } else { 10 };
    let body = &bytes[head + 1..];
    if body.len() != n * per * 8 {
        return Err(bad("length does not match shape"));
    }
    let val = |i: usize| f64::from_le_bytes(body[8 * i..8 * i + 8].try_into().unwrap());
    let metric = (0..n).map(|k| std::array::from_fn(|c| val(10 * k + c))).collect();
    let omega = has_omega.then(|| (0..n).map(|k| std::array::from_fn(|c| val(10 * n + 6 * k + c))).collect());
    Ok(FieldGrid {
        origin,
        spacing,
        shape,
        metric,
        omega,
    })
}

pub fn save(out: &Path, manifest: &Manifest, stored: &Stored, grids: &[(String, FieldGrid)]) -> CliResult<()> {
    let dir = cache_dir(out);
    fs::create_dir_all(&dir).map_err(|e| io(&dir, e))?;
    for (name, g) in grids {
        let p = grid_path(&dir, name);
        let mut f = fs::File::create(&p).map_err(|e| io(&p, e))?;
        f.write_all(&encode_grid(g)).map_err(|e| io(&p, e))?;
    }
    write_json(&dir.join("measurements.json"), stored)?;
    // The manifest goes last so an interrupted solve leaves no valid cache.
    write_json(&dir.join("manifest.json"), manifest)
}

/// Loads a cache, refusing it unless schema and configuration both match.
pub fn load(out: &Path, config_hash: &str, seed: Option<u64>) -> CliResult<(Manifest, Stored, NamedGrids)> {
    let dir = cache_dir(out);
    let mp = dir.join("manifest.json");
    if !mp.exists() {
        return Err(CliError::Cache(format!("no cache at {}; run `solve` first", dir.display())));
    }
    let manifest: Manifest = read_json(&mp)?;
    if manifest.schema_hash != schema_hash() {
        return Err(CliError::Cache(format!(
            "schema hash {} does not match this build ({}); re-run `solve`",
            manifest.schema_hash,
            schema_hash()
        )));
    }
    if manifest.config_hash != config_hash {
        return Err(CliError::Cache("cache was produced from a different configuration".into()));
    }
    if let Some(s) = seed {
        if s != manifest.seed {
            return Err(CliError::Cache(format!("cache was solved with seed {}, not {s}", manifest.seed)));
        }
    }
    let stored: Stored = read_json(&dir.join("measurements.json"))?;
    let grids = manifest
        .grids
        .iter()
        .map(|name| {
            let p = grid_path(&dir, name);
            let bytes = fs::read(&p).map_err(|e| io(&p, e))?;
            Ok((name.clone(), decode_grid(&bytes)?))
        })
        .collect::<CliResult<_>>()?;
    Ok((manifest, stored, grids))
}

pub fn manifest(scenario: &str, config_hash: &str, seed: u64, grids: &[(String, FieldGrid)]) -> Manifest {
    Manifest {
        schema_hash: schema_hash(),
        version: REPORT_VERSION.into(),
        scenario: scenario.into(),
        config_hash: config_hash.into(),
        seed,
        grids: grids.iter().map(|(n, _)| n.clone()).collect(),
    }
}
