//! JSON-lines persistence of censuses: a header line followed by one record
//! per line.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::census::{enumerate_census, CensusConfig, CensusSummary, SalemRecord};
use crate::error::{Error, Result};
use crate::rational::{file_token, format_rational, parse_rational};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CacheHeader {
    pub m: usize,
    #[serde(rename = "H")]
    pub bound: String,
    pub tool_version: String,
    pub class_count: u64,
    pub irreducible_count: u64,
    pub reducible_count: u64,
}

/// `census_m{m}_H{H}.jsonl`, with `p/q` written as `p_q`.
pub fn cache_file_name(m: usize, h: &BigRational) -> String {
    format!("census_m{m}_H{}.jsonl", file_token(h))
}

pub fn write_census<W: Write>(summary: &CensusSummary, out: W) -> Result<()> {
    let mut out = BufWriter::new(out);
    let header = CacheHeader {
        m: summary.m,
        bound: format_rational(&summary.bound),
        tool_version: TOOL_VERSION.to_string(),
        class_count: summary.class_count,
        irreducible_count: summary.irreducible_count,
        reducible_count: summary.reducible_count,
    };
    serde_json::to_writer(&mut out, &header)?;
    out.write_all(b"\n")?;
    for r in &summary.records {
        serde_json::to_writer(&mut out, r)?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

pub fn read_census<R: BufRead>(input: R, origin: &str) -> Result<CensusSummary> {
    let bad = |reason: String| Error::BadCache { path: origin.to_string(), reason };
    let mut lines = input.lines();
    let header: CacheHeader = match lines.next() {
        Some(line) => serde_json::from_str(&line?).map_err(|e| bad(format!("header: {e}")))?,
        None => return Err(bad("empty file".into())),
    };
    let mut records = Vec::new();
    for (i, line) in lines.enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let r: SalemRecord = serde_json::from_str(&line).map_err(|e| bad(format!("line {}: {e}", i + 2)))?;
        if r.m != header.m {
            return Err(bad(format!("line {}: record for m={}", i + 2, r.m)));
        }
        records.push(r);
    }
    if records.len() as u64 != header.irreducible_count {
        return Err(bad(format!(
            "header announces {} records, found {}",
            header.irreducible_count,
            records.len()
        )));
    }
    Ok(CensusSummary {
        m: header.m,
        bound: parse_rational(&header.bound)?,
        class_count: header.class_count,
        irreducible_count: header.irreducible_count,
        reducible_count: header.reducible_count,
        records,
    })
}

pub fn save_census(summary: &CensusSummary, path: &Path) -> Result<()> {
    let tmp = path.with_extension("jsonl.tmp");
    write_census(summary, File::create(&tmp)?)?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}

pub fn load_census(path: &Path) -> Result<CensusSummary> {
    read_census(BufReader::new(File::open(path)?), &path.display().to_string())
}

/// Loads censuses from a cache directory, enumerating and saving the ones
/// that are missing. Without a directory every request is enumerated.
#[derive(Clone, Debug, Default)]
pub struct CensusStore {
    pub cache_dir: Option<PathBuf>,
    pub config: CensusConfig,
}

impl CensusStore {
    pub fn new(cache_dir: Option<PathBuf>, config: CensusConfig) -> Self {
        CensusStore { cache_dir, config }
    }

    pub fn get(&self, m: usize, h: &BigRational) -> Result<CensusSummary> {
        let Some(dir) = &self.cache_dir else {
            return enumerate_census(m, h, &self.config);
        };
        let path = dir.join(cache_file_name(m, h));
        if path.exists() {
            let s = load_census(&path)?;
            if s.m == m && &s.bound == h {
                return Ok(s);
            }
        }
        let s = enumerate_census(m, h, &self.config)?;
        std::fs::create_dir_all(dir)?;
        save_census(&s, &path)?;
        Ok(s)
    }
}
