//! Versioned JSON form of a monomial ideal.
//!
//! ```json
//! {
//!   "schema_version": 1,
//!   "universe": { "m": 2, "n": 3, "family_sizes": { "X": [2, 3], "Y": [2, 3] } },
//!   "generators": [ { "x[1,2]": 1, "Y[1,1]": 2 } ]
//! }
//! ```
//!
//! A generator is a map from variable name to a positive exponent; `{}` is
//! the unit monomial and an empty list is the zero ideal.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{IdealError, Monomial, MonomialIdeal, Universe, Variable};

pub const IDEAL_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilySizes {
    #[serde(rename = "X")]
    pub x: [u32; 2],
    #[serde(rename = "Y")]
    pub y: [u32; 2],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UniverseHeader {
    pub m: u32,
    pub n: u32,
    pub family_sizes: FamilySizes,
}

impl UniverseHeader {
    pub fn of(u: &Universe) -> Self {
        let (xr, xc) = u.x_shape();
        let (yr, yc) = u.y_shape();
        UniverseHeader {
            m: xr,
            n: xc,
            family_sizes: FamilySizes { x: [xr, xc], y: [yr, yc] },
        }
    }

    pub fn universe(&self) -> Result<Universe, IdealError> {
        let [xr, xc] = self.family_sizes.x;
        if (xr, xc) != (self.m, self.n) {
            return Err(IdealError::Parse(format!(
                "universe header says m={}, n={} but X is {xr}x{xc}",
                self.m, self.n
            )));
        }
        let [yr, yc] = self.family_sizes.y;
        Ok(Universe::new(xr, xc, yr, yc))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealFile {
    pub schema_version: u32,
    pub universe: UniverseHeader,
    pub generators: Vec<BTreeMap<String, u32>>,
}

impl IdealFile {
    pub fn from_ideal(ideal: &MonomialIdeal) -> Self {
        let u = ideal.universe();
        let generators = ideal
            .generators()
            .iter()
            .map(|g| {
                g.terms()
                    .iter()
                    .map(|&(i, e)| (u.variable(i).to_string(), e))
                    .collect()
            })
            .collect();
        IdealFile {
            schema_version: IDEAL_SCHEMA_VERSION,
            universe: UniverseHeader::of(u),
            generators,
        }
    }

    /// Parses JSON text; syntax and shape errors carry a line and column.
    pub fn parse(text: &str) -> Result<Self, IdealError> {
        let file: IdealFile = serde_json::from_str(text).map_err(|e| {
            IdealError::Parse(format!("line {}, column {}: {e}", e.line(), e.column()))
        })?;
        if file.schema_version != IDEAL_SCHEMA_VERSION {
            return Err(IdealError::Parse(format!(
                "unsupported schema_version {} (expected {IDEAL_SCHEMA_VERSION})",
                file.schema_version
            )));
        }
        Ok(file)
    }

    pub fn to_ideal(&self) -> Result<MonomialIdeal, IdealError> {
        let u = self.universe.universe()?;
        let mut gens = Vec::with_capacity(self.generators.len());
        for (k, g) in self.generators.iter().enumerate() {
            let mut terms = Vec::with_capacity(g.len());
            for (name, &e) in g {
                let v: Variable = name.parse()?;
                if e == 0 {
                    return Err(IdealError::Parse(format!("generator {k}: exponent of {name} must be positive")));
                }
                terms.push((u.require(v)?, e));
            }
            gens.push(Monomial::from_exponents(terms));
        }
        MonomialIdeal::new(u, gens)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("ideal file serializes")
    }
}

impl MonomialIdeal {
    pub fn to_json(&self) -> String {
        IdealFile::from_ideal(self).to_json()
    }

    pub fn from_json(text: &str) -> Result<Self, IdealError> {
        IdealFile::parse(text)?.to_ideal()
    }
}
