use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::DslError;
use crate::erdos::{Coloring, ColoringError};
use crate::word::Color;

/// On-disk form: `{"k": 2, "pairs": [[0, 1, 0], [0, 2, 1], …]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableFile {
    pub k: u32,
    pub pairs: Vec<(u64, u64, u32)>,
}

/// An explicit coloring of finitely many pairs; other pairs are errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableColoring {
    k: u32,
    pairs: BTreeMap<(u64, u64), Color>,
}

impl TableColoring {
    pub fn new<I: IntoIterator<Item = (u64, u64, Color)>>(k: u32, pairs: I) -> Result<Self, DslError> {
        if k == 0 {
            return Err(DslError::NoColors);
        }
        let mut map = BTreeMap::new();
        for (x, y, c) in pairs {
            if x == y {
                return Err(DslError::InvalidTable(format!("pair ({x}, {x}) is not an edge")));
            }
            if c.0 >= k {
                return Err(DslError::InvalidTable(format!("color {c} of ({x}, {y}) is not below {k}")));
            }
            let key = (x.min(y), x.max(y));
            if let Some(old) = map.insert(key, c) {
                if old != c {
                    return Err(DslError::InvalidTable(format!("pair ({x}, {y}) colored twice")));
                }
            }
        }
        Ok(TableColoring { k, pairs: map })
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn to_file(&self) -> TableFile {
        TableFile {
            k: self.k,
            pairs: self.pairs.iter().map(|(&(x, y), c)| (x, y, c.0)).collect(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self, DslError> {
        let file: TableFile = serde_json::from_str(text)?;
        TableColoring::new(file.k, file.pairs.into_iter().map(|(x, y, c)| (x, y, Color(c))))
    }

    pub fn load(path: &Path) -> Result<Self, DslError> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }
}

impl Coloring for TableColoring {
    fn k(&self) -> u32 {
        self.k
    }

    fn color(&self, x: u64, y: u64) -> Result<Color, ColoringError> {
        if x == y {
            return Err(ColoringError::Diagonal(x));
        }
        let key = (x.min(y), x.max(y));
        self.pairs
            .get(&key)
            .copied()
            .ok_or(ColoringError::TableIncomplete(key.0, key.1))
    }
}
