//! Optional TOML file with default bounds. Flags given on the command line
//! win over values from the file.

use std::path::Path;

use genlink::ideal::Limits;
use genlink::verify::Bounds;
use serde::Deserialize;

use crate::Failure;

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub l_max: Option<u32>,
    pub r_max: Option<u32>,
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    pub max_gens: Option<usize>,
    pub max_active_vars: Option<usize>,
    pub exhaustive_cap: Option<usize>,
    pub threads: Option<usize>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self, Failure> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read config {}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| {
            let at = e
                .span()
                .map(|s| {
                    let (line, col) = line_col(&text, s.start);
                    format!(" at line {line}, column {col}")
                })
                .unwrap_or_default();
            Failure::Usage(format!("invalid config {}{at}: {}", path.display(), e.message()))
        })
    }

    pub fn apply(&self, b: &mut Bounds) {
        if let Some(v) = self.l_max {
            b.l_max = v;
        }
        if let Some(v) = self.r_max {
            b.r_max = v;
        }
        if let Some(v) = self.seed {
            b.seed = v;
        }
        if let Some(v) = self.samples {
            b.samples = v;
        }
        if let Some(v) = self.max_gens {
            b.limits = Limits::new(v);
        }
        if let Some(v) = self.max_active_vars {
            b.max_active_vars = v;
        }
        if let Some(v) = self.exhaustive_cap {
            b.exhaustive_cap = v;
        }
    }
}

/// 1-based line and column of a byte offset.
fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.rsplit('\n').next().map_or(0, |s| s.chars().count()) + 1;
    (line, col)
}
