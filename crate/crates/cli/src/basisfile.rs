//! JSON basis documents and an on-disk cache keyed by `(m, n)`.
//!
//! ```json
//! {"version": 1, "modulus": "6", "nvars": 1,
//!  "entries": [{"alpha": [3], "a": "1"}, {"alpha": [2], "a": "3"}]}
//! ```
//!
//! Loading never trusts the file: every entry is re-checked against the
//! defining conditions of `S_m`.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;
use vanideal_core::{build_basis, rec_comp, BasisEntry, ExponentVector, GroebnerBasis, Modulus, MonomialOrder};

use crate::context::RingContext;
use crate::format::format_poly;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum BasisFileError {
    #[error("malformed basis document: {0}")]
    Malformed(#[from] serde_json::Error),
    #[error("unsupported basis document version {found} (expected {FORMAT_VERSION})")]
    Version { found: u32 },
    #[error("invalid decimal integer {0:?}")]
    Number(String),
    #[error(transparent)]
    Invalid(#[from] vanideal_core::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    version: u32,
    modulus: String,
    nvars: usize,
    entries: Vec<EntryDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EntryDoc {
    alpha: Vec<u32>,
    a: String,
    /// Informational only; ignored on load.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    expanded: Option<String>,
}

fn document(g: &GroebnerBasis, expand: Option<(&RingContext, MonomialOrder)>) -> Document {
    Document {
        version: FORMAT_VERSION,
        modulus: g.modulus().to_string(),
        nvars: g.nvars(),
        entries: g
            .entries()
            .iter()
            .map(|e| EntryDoc {
                alpha: e.alpha.as_slice().to_vec(),
                a: e.a.to_string(),
                expanded: expand.map(|(ctx, order)| format_poly(&e.polynomial(g.modulus()), ctx, order)),
            })
            .collect(),
    }
}

pub fn serialize_basis(g: &GroebnerBasis) -> String {
    serde_json::to_string_pretty(&document(g, None)).expect("basis documents always serialize")
}

/// Like [`serialize_basis`], with each entry's expanded polynomial attached.
pub fn serialize_basis_expanded(g: &GroebnerBasis, ctx: &RingContext, order: MonomialOrder) -> String {
    serde_json::to_string_pretty(&document(g, Some((ctx, order)))).expect("basis documents always serialize")
}

pub fn deserialize_basis(text: &str) -> Result<GroebnerBasis, BasisFileError> {
    let doc: Document = serde_json::from_str(text)?;
    if doc.version != FORMAT_VERSION {
        return Err(BasisFileError::Version { found: doc.version });
    }
    let modulus = Modulus::from_str(&doc.modulus)?;
    let entries = doc
        .entries
        .into_iter()
        .map(|e| {
            // BigUint::from_str tolerates '_' separators; the format does not
            if e.a.is_empty() || !e.a.bytes().all(|b| b.is_ascii_digit()) {
                return Err(BasisFileError::Number(e.a));
            }
            let a = BigUint::from_str(&e.a).map_err(|_| BasisFileError::Number(e.a.clone()))?;
            Ok(BasisEntry::new(ExponentVector::new(e.alpha), a))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GroebnerBasis::from_entries(&modulus, doc.nvars, entries)?)
}

pub fn read_basis(path: &Path) -> Result<GroebnerBasis, BasisFileError> {
    let text = fs::read_to_string(path).map_err(|source| BasisFileError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    deserialize_basis(&text)
}

/// Writes via a temporary sibling and a rename so readers never observe a
/// half-written file.
pub fn write_text_atomic(path: &Path, text: &str) -> Result<(), BasisFileError> {
    let io_err = |source| BasisFileError::Io {
        path: path.to_path_buf(),
        source,
    };
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(format!(".tmp{}", std::process::id()));
    let tmp = PathBuf::from(tmp);
    fs::write(&tmp, text).map_err(io_err)?;
    fs::rename(&tmp, path).map_err(io_err)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CacheStatus {
    Hit,
    Miss,
    /// The cached file existed but failed validation; it was rebuilt.
    Rebuilt(String),
}

/// Directory of basis documents named `basis-m{m}-n{n}.json`.
#[derive(Debug, Clone)]
pub struct BasisCache {
    dir: PathBuf,
}

impl BasisCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        BasisCache { dir: dir.into() }
    }

    pub fn path_for(&self, m: &Modulus, nvars: usize) -> PathBuf {
        self.dir.join(format!("basis-m{m}-n{nvars}.json"))
    }

    /// Returns the cached basis when it re-validates and matches `(m, n)`,
    /// otherwise computes it (recursively if asked) and stores it.
    pub fn load_or_build(
        &self,
        m: &Modulus,
        nvars: usize,
        recursive: bool,
    ) -> Result<(GroebnerBasis, CacheStatus), BasisFileError> {
        let path = self.path_for(m, nvars);
        let status = match read_basis(&path) {
            Ok(g) if g.modulus() == m && g.nvars() == nvars => return Ok((g, CacheStatus::Hit)),
            Ok(g) => CacheStatus::Rebuilt(format!("file describes m={} n={}", g.modulus(), g.nvars())),
            Err(BasisFileError::Io { source, .. }) if source.kind() == io::ErrorKind::NotFound => CacheStatus::Miss,
            Err(e) => CacheStatus::Rebuilt(e.to_string()),
        };
        let g = if recursive {
            rec_comp(m, nvars)?
        } else {
            build_basis(m, nvars)?
        };
        fs::create_dir_all(&self.dir).map_err(|source| BasisFileError::Io {
            path: self.dir.clone(),
            source,
        })?;
        write_text_atomic(&path, &serialize_basis(&g))?;
        Ok((g, status))
    }
}
