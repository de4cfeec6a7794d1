use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use serde_json::Value;

use crate::link::LinkInstance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A size guard stopped the computation before it started.
    Refused,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Refused => "refused",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InstanceHeader {
    pub m: u32,
    pub n: u32,
    pub g: u32,
    pub r: u32,
}

impl From<&LinkInstance> for InstanceHeader {
    fn from(inst: &LinkInstance) -> Self {
        InstanceHeader {
            m: inst.m(),
            n: inst.n(),
            g: inst.g(),
            r: inst.r(),
        }
    }
}

/// Outcome of one check on one instance.
///
/// Everything except `elapsed_ms` is a function of the instance, the
/// parameters and the seed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub check: String,
    pub instance: InstanceHeader,
    pub params: BTreeMap<String, Value>,
    pub status: Status,
    pub message: String,
    pub witnesses: Value,
    pub seed: Option<u64>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// One line for humans: `check (m,n): status - message`.
    pub fn summary(&self) -> String {
        format!(
            "{} ({},{}): {} - {}",
            self.check, self.instance.m, self.instance.n, self.status, self.message
        )
    }
}
