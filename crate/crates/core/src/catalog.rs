//! Catalog persistence: one record per family member, as JSON lines or
//! CSV.
//!
//! Tables are serialized as strings over `{t,f,b}` in row-major order
//! with rows and columns ordered `t, f, b` (3 characters for negation, 9
//! for each binary connective); the profile is a 23-character bitstring
//! with law 1 first.

use crate::family::{decode, encode, LogicId, LogicSpec, FAMILY_SIZE};
use crate::laws::{law_profile, LawProfile};
use crate::truth::TruthValue;
use serde::{Deserialize, Serialize};
use std::io::{BufRead, Write};
use std::num::NonZeroUsize;
use thiserror::Error;

/// Environment variable hinting how many worker threads to use when
/// computing the catalog.
pub const THREADS_ENV_VAR: &str = "TRILOGIC_THREADS";

/// A persisted family member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub id: u16,
    pub neg: String,
    pub and: String,
    pub or: String,
    pub imp: String,
    pub profile: String,
}

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("record {index}: {message}")]
    Invalid { index: usize, message: String },
    #[error("record {index}: malformed input: {message}")]
    Malformed { index: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn binary_cells(get: impl Fn(TruthValue, TruthValue) -> TruthValue) -> String {
    let mut out = String::with_capacity(9);
    for x in TruthValue::ALL {
        for y in TruthValue::ALL {
            out.push(get(x, y).as_char());
        }
    }
    out
}

/// Builds the record for one family member.
pub fn record_for(id: LogicId) -> CatalogRecord {
    let spec = decode(id);
    CatalogRecord {
        id: id.value(),
        neg: TruthValue::ALL
            .iter()
            .map(|&v| spec.neg(v).as_char())
            .collect(),
        and: binary_cells(|x, y| spec.and(x, y)),
        or: binary_cells(|x, y| spec.or(x, y)),
        imp: binary_cells(|x, y| spec.imp(x, y)),
        profile: law_profile(&spec).bitstring(),
    }
}

fn parse_cells<const N: usize>(
    field: &str,
    value: &str,
    index: usize,
) -> Result<[TruthValue; N], CatalogError> {
    let chars: Vec<TruthValue> = value
        .chars()
        .map(TruthValue::from_char)
        .collect::<Option<_>>()
        .ok_or_else(|| CatalogError::Malformed {
            index,
            message: format!("field '{field}' contains a character outside t/f/b"),
        })?;
    chars.try_into().map_err(|_| CatalogError::Malformed {
        index,
        message: format!("field '{field}' must have {N} cells"),
    })
}

impl CatalogRecord {
    /// Rebuilds and validates the logic: the tables must satisfy the
    /// family constraints, encode back to `id`, and reproduce `profile`.
    pub fn to_logic(&self, index: usize) -> Result<(LogicId, LogicSpec), CatalogError> {
        let neg: [TruthValue; 3] = parse_cells("neg", &self.neg, index)?;
        let and_flat: [TruthValue; 9] = parse_cells("and", &self.and, index)?;
        let or_flat: [TruthValue; 9] = parse_cells("or", &self.or, index)?;
        let imp_flat: [TruthValue; 9] = parse_cells("imp", &self.imp, index)?;
        let unflatten = |flat: [TruthValue; 9]| {
            [
                [flat[0], flat[1], flat[2]],
                [flat[3], flat[4], flat[5]],
                [flat[6], flat[7], flat[8]],
            ]
        };
        let spec = LogicSpec::from_tables(
            neg,
            unflatten(and_flat),
            unflatten(or_flat),
            unflatten(imp_flat),
        );
        let encoded = encode(&spec).map_err(|violation| CatalogError::Invalid {
            index,
            message: violation.to_string(),
        })?;
        if encoded.value() != self.id {
            return Err(CatalogError::Invalid {
                index,
                message: format!("tables encode to id {encoded}, record says {}", self.id),
            });
        }
        let stored =
            LawProfile::from_bitstring(&self.profile).ok_or_else(|| CatalogError::Malformed {
                index,
                message: "field 'profile' must be 23 characters of 0/1".into(),
            })?;
        if stored != law_profile(&spec) {
            return Err(CatalogError::Invalid {
                index,
                message: "stored profile does not match the recomputed one".into(),
            });
        }
        Ok((encoded, spec))
    }
}

/// Worker count: the `TRILOGIC_THREADS` hint when set to a positive
/// number, otherwise the available parallelism.
pub fn worker_count() -> usize {
    if let Ok(value) = std::env::var(THREADS_ENV_VAR) {
        if let Ok(n) = value.trim().parse::<usize>() {
            if n >= 1 {
                return n;
            }
        }
    }
    std::thread::available_parallelism()
        .map(NonZeroUsize::get)
        .unwrap_or(1)
}

/// Computes all 8192 records in id order, fanning out over
/// [`worker_count`] threads.
pub fn generate_all() -> Vec<CatalogRecord> {
    let workers = worker_count().min(usize::from(FAMILY_SIZE)).max(1);
    if workers == 1 {
        return (0..FAMILY_SIZE)
            .map(|raw| record_for(LogicId::new(raw).expect("in range")))
            .collect();
    }
    let chunk = usize::from(FAMILY_SIZE).div_ceil(workers);
    let mut records = Vec::with_capacity(usize::from(FAMILY_SIZE));
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                scope.spawn(move || {
                    let start = (w * chunk) as u16;
                    let end = ((w + 1) * chunk).min(usize::from(FAMILY_SIZE)) as u16;
                    (start..end)
                        .map(|raw| record_for(LogicId::new(raw).expect("in range")))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for handle in handles {
            records.extend(handle.join().expect("catalog worker panicked"));
        }
    });
    records
}

/// Writes all records as JSON lines.
pub fn export_jsonl<W: Write>(mut writer: W) -> Result<(), CatalogError> {
    for record in generate_all() {
        serde_json::to_writer(&mut writer, &record).map_err(std::io::Error::from)?;
        writer.write_all(b"\n")?;
    }
    Ok(())
}

/// Writes all records as CSV with a header row.
pub fn export_csv<W: Write>(writer: W) -> Result<(), CatalogError> {
    let mut csv_writer = csv::Writer::from_writer(writer);
    for record in generate_all() {
        csv_writer
            .serialize(&record)
            .map_err(std::io::Error::other)?;
    }
    csv_writer.flush()?;
    Ok(())
}

/// Reads and validates records from JSON lines.
pub fn import_jsonl<R: BufRead>(reader: R) -> Result<Vec<CatalogRecord>, CatalogError> {
    let mut records = Vec::new();
    for (index, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let record: CatalogRecord =
            serde_json::from_str(&line).map_err(|e| CatalogError::Malformed {
                index,
                message: e.to_string(),
            })?;
        record.to_logic(index)?;
        records.push(record);
    }
    Ok(records)
}

/// Reads and validates records from CSV.
pub fn import_csv<R: std::io::Read>(reader: R) -> Result<Vec<CatalogRecord>, CatalogError> {
    let mut csv_reader = csv::Reader::from_reader(reader);
    let mut records = Vec::new();
    for (index, row) in csv_reader.deserialize().enumerate() {
        let record: CatalogRecord = row.map_err(|e| CatalogError::Malformed {
            index,
            message: e.to_string(),
        })?;
        record.to_logic(index)?;
        records.push(record);
    }
    Ok(records)
}
