//! Optional JSON configuration: custom algebras, custom character tables,
//! and bounds. Absent keys fall back to the defaults.
//!
//! ```json
//! {
//!   "degree_bound": 64,
//!   "root_order_cap": 64,
//!   "algebras": [{"name": "poly", "generators": [{"name": "a", "degree": 1}], "relations": ["a^5"]}],
//!   "tables": {"c4": {"group": "C4", "classes": [...], "irreducibles": [...]}}
//! }
//! ```

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use etakit::f2ring::json::AlgebraDocument;
use etakit::f2ring::{F2Error, PresentedF2Algebra, SteenrodData, DEFAULT_DEGREE_BOUND};
use etakit::grouprep::json::TableDocument;
use etakit::grouprep::{CharacterTable, GroupError, Inclusion, MAX_CYCLIC_ORDER};
use serde::Deserialize;
use thiserror::Error;

pub const DEFAULT_ROOT_ORDER_CAP: u32 = 64;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("ParseError at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("ParseError in {context} at position {position}: {message}")]
    ParsePosition { context: String, position: usize, message: String },
    #[error("ValidationError: {0}")]
    Validation(String),
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    degree_bound: Option<u32>,
    root_order_cap: Option<u32>,
    #[serde(default)]
    algebras: Vec<AlgebraDocument>,
    #[serde(default)]
    tables: BTreeMap<String, TableDocument>,
}

#[derive(Debug, Clone)]
pub struct CustomTable {
    pub table: Arc<CharacterTable>,
    pub inclusions: Vec<(String, Inclusion)>,
}

#[derive(Debug, Clone)]
pub struct Config {
    pub degree_bound: u32,
    pub root_order_cap: u32,
    pub algebras: BTreeMap<String, (PresentedF2Algebra, Option<SteenrodData>)>,
    pub tables: BTreeMap<String, CustomTable>,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            degree_bound: DEFAULT_DEGREE_BOUND,
            root_order_cap: DEFAULT_ROOT_ORDER_CAP,
            algebras: BTreeMap::new(),
            tables: BTreeMap::new(),
        }
    }
}

impl Config {
    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ConfigError::Io { path: path.display().to_string(), message: e.to_string() })?;
        Self::parse(&text)
    }

    /// An empty or whitespace-only document gives the defaults.
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let file: ConfigFile = if text.trim().is_empty() {
            ConfigFile::default()
        } else {
            serde_json::from_str(text).map_err(|e| ConfigError::Parse {
                line: e.line(),
                column: e.column(),
                message: e.to_string(),
            })?
        };
        let mut out = Config::default();
        if let Some(b) = file.degree_bound {
            if b == 0 {
                return Err(ConfigError::Validation("degree_bound must be positive".into()));
            }
            out.degree_bound = b;
        }
        if let Some(c) = file.root_order_cap {
            if c == 0 || c > MAX_CYCLIC_ORDER {
                return Err(ConfigError::Validation(format!("root_order_cap must lie in 1..={MAX_CYCLIC_ORDER}")));
            }
            out.root_order_cap = c;
        }
        for doc in file.algebras {
            let name = doc.spec.name.clone();
            if out.algebras.contains_key(&name) {
                return Err(ConfigError::Validation(format!("algebra {name:?} defined twice")));
            }
            let loaded = doc.load().map_err(|e| algebra_error(&name, e))?;
            out.algebras.insert(name, loaded);
        }
        for (name, doc) in file.tables {
            let loaded = doc.load().map_err(|e| table_error(&name, e))?;
            out.tables.insert(name, CustomTable { table: loaded.table, inclusions: loaded.inclusions });
        }
        Ok(out)
    }
}

fn algebra_error(name: &str, e: F2Error) -> ConfigError {
    match e {
        F2Error::Parse { position, message } => {
            ConfigError::ParsePosition { context: format!("algebra {name:?}"), position, message }
        }
        other => ConfigError::Validation(format!("algebra {name:?}: {other}")),
    }
}

fn table_error(name: &str, e: GroupError) -> ConfigError {
    match e {
        GroupError::ParseExpr { position, message } => {
            ConfigError::ParsePosition { context: format!("table {name:?}"), position, message }
        }
        other => ConfigError::Validation(format!("table {name:?}: {other}")),
    }
}
