//! Census files: one canonical graph6 string per line, plus a JSON sidecar
//! `<file>.meta.json` describing how the census was produced.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{EnumError, EnumReport, EnumSpec, Method};
use crate::canon::CanonicalForm;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CensusMetadata {
    pub spec: EnumSpec,
    pub count: usize,
    pub nodes_explored: u64,
    pub complete: bool,
    pub elapsed_seconds: f64,
    pub method: Method,
    pub version: String,
}

impl CensusMetadata {
    pub fn from_report(report: &EnumReport) -> Self {
        CensusMetadata {
            spec: report.spec.clone(),
            count: report.classes.len(),
            nodes_explored: report.nodes_explored,
            complete: report.complete,
            elapsed_seconds: report.elapsed_secs,
            method: report.method,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}

/// Path of the sidecar written next to `census`.
pub fn sidecar_path(census: &Path) -> PathBuf {
    let mut s = census.as_os_str().to_owned();
    s.push(".meta.json");
    PathBuf::from(s)
}

fn io_err(path: &Path, e: impl std::fmt::Display) -> EnumError {
    EnumError::Io(format!("{}: {e}", path.display()))
}

/// Writes the classes of `report` to `path` and its metadata to the sidecar.
pub fn write_census(report: &EnumReport, path: &Path) -> Result<(), EnumError> {
    let file = File::create(path).map_err(|e| io_err(path, e))?;
    let mut w = BufWriter::new(file);
    for cf in &report.classes {
        w.write_all(cf.as_bytes()).and_then(|_| w.write_all(b"\n")).map_err(|e| io_err(path, e))?;
    }
    w.flush().map_err(|e| io_err(path, e))?;

    let meta_path = sidecar_path(path);
    let json = serde_json::to_string_pretty(&CensusMetadata::from_report(report))
        .map_err(|e| io_err(&meta_path, e))?;
    std::fs::write(&meta_path, json + "\n").map_err(|e| io_err(&meta_path, e))
}

/// Reads a census back as a report. The classes are taken as written; run
/// [`certify`](super::certify) to check them.
pub fn read_census(path: &Path) -> Result<EnumReport, EnumError> {
    let meta_path = sidecar_path(path);
    let json = std::fs::read_to_string(&meta_path).map_err(|e| io_err(&meta_path, e))?;
    let meta: CensusMetadata = serde_json::from_str(&json).map_err(|e| io_err(&meta_path, e))?;
    meta.spec.validate()?;

    let file = File::open(path).map_err(|e| io_err(path, e))?;
    let mut classes = Vec::new();
    for (idx, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| io_err(path, e))?;
        let line = line.trim_end_matches('\r');
        if line.is_empty() {
            continue;
        }
        let cf = CanonicalForm::from_graph6(line.as_bytes())
            .map_err(|e| io_err(path, format!("line {}: {e}", idx + 1)))?;
        classes.push(cf);
    }
    if classes.len() != meta.count {
        return Err(io_err(
            path,
            format!("sidecar declares {} graphs, file holds {}", meta.count, classes.len()),
        ));
    }
    Ok(EnumReport {
        spec: meta.spec,
        classes,
        nodes_explored: meta.nodes_explored,
        complete: meta.complete,
        elapsed_secs: meta.elapsed_seconds,
        method: meta.method,
    })
}
