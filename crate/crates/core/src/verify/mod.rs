//! Machine checks tying the closed-form link constructions to the generic
//! monomial-ideal algorithms. Each check returns a [`Report`]; none panics
//! on a mathematical failure.

mod checks;
mod report;
mod sampling;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde_json::Value;

use crate::ideal::{IdealError, Limits};
use crate::link::{LinkError, LinkInstance};

pub use checks::{
    column_three_argument, resolve_nontrivial_square, verify_betti, verify_colon_theorem,
    verify_counts_and_degrees, verify_lead_terms, verify_symbolic_scan, verify_witness_suites,
    ColumnThreeArgument, SquareVerdict,
};
pub use report::{InstanceHeader, Report, Status};
pub use sampling::{random_chain, random_generators, random_subset, sample_rng};

/// Bounds and seed shared by all checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Largest `ℓ` in the symbolic-versus-ordinary scan.
    pub l_max: u32,
    /// Largest `r` in the square-colon scan and the witness suites.
    pub r_max: u32,
    /// Number of seeded random inputs per sampled suite.
    pub samples: usize,
    pub seed: u64,
    pub limits: Limits,
    /// Refuse ideal computations over more active variables than this.
    pub max_active_vars: usize,
    /// Enumerate witness inputs exhaustively when there are at most this many.
    pub exhaustive_cap: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            l_max: 3,
            r_max: 3,
            samples: 200,
            seed: 0,
            limits: Limits::new(200_000),
            max_active_vars: 40,
            exhaustive_cap: 5_000,
        }
    }
}

/// The named check groups exposed on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Colon,
    Symbolic,
    NontrivialSquare,
    Counts,
    Betti,
    Leads,
    Witnesses,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 8] = ["colon", "symbolic", "nontrivial", "counts", "betti", "leads", "witnesses", "all"];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Colon => "colon",
            Suite::Symbolic => "symbolic",
            Suite::NontrivialSquare => "nontrivial",
            Suite::Counts => "counts",
            Suite::Betti => "betti",
            Suite::Leads => "leads",
            Suite::Witnesses => "witnesses",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "colon" => Suite::Colon,
            "symbolic" => Suite::Symbolic,
            "nontrivial" | "cor412" => Suite::NontrivialSquare,
            "counts" => Suite::Counts,
            "betti" => Suite::Betti,
            "leads" => Suite::Leads,
            "witnesses" => Suite::Witnesses,
            "all" => Suite::All,
            other => return Err(format!("unknown suite `{other}`")),
        })
    }
}

/// Runs one suite (or all of them, in a fixed order) on an instance.
pub fn run_suite(suite: Suite, inst: &LinkInstance, bounds: &Bounds) -> Vec<Report> {
    match suite {
        Suite::Colon => vec![verify_colon_theorem(inst, bounds)],
        Suite::Symbolic => vec![verify_symbolic_scan(inst, bounds)],
        Suite::NontrivialSquare => vec![resolve_nontrivial_square(inst, bounds)],
        Suite::Counts => vec![verify_counts_and_degrees(inst)],
        Suite::Betti => vec![verify_betti(inst)],
        Suite::Leads => vec![verify_lead_terms(inst, bounds)],
        Suite::Witnesses => vec![verify_witness_suites(inst, bounds)],
        Suite::All => [
            Suite::Counts,
            Suite::Betti,
            Suite::Colon,
            Suite::Leads,
            Suite::Symbolic,
            Suite::NontrivialSquare,
            Suite::Witnesses,
        ]
        .iter()
        .flat_map(|s| run_suite(*s, inst, bounds))
        .collect(),
    }
}

/// Why a check stopped early.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Stop {
    Refused(String),
    Failed(String),
}

impl From<IdealError> for Stop {
    fn from(e: IdealError) -> Self {
        match e {
            IdealError::TooLarge { .. } | IdealError::TooManyVariables { .. } => Stop::Refused(e.to_string()),
            other => Stop::Failed(other.to_string()),
        }
    }
}

impl From<LinkError> for Stop {
    fn from(e: LinkError) -> Self {
        match e {
            LinkError::Ideal(inner) => inner.into(),
            other => Stop::Failed(other.to_string()),
        }
    }
}

/// A finished check body: status, message and witness data.
pub(crate) struct Draft {
    pub status: Status,
    pub message: String,
    pub witnesses: Value,
}

impl Draft {
    pub fn new(ok: bool, message: impl Into<String>, witnesses: Value) -> Self {
        Draft {
            status: if ok { Status::Pass } else { Status::Fail },
            message: message.into(),
            witnesses,
        }
    }
}

pub(crate) fn guard_vars(count: usize, bounds: &Bounds) -> Result<(), Stop> {
    if count > bounds.max_active_vars {
        return Err(Stop::Refused(format!(
            "{count} active variables exceed the limit of {}",
            bounds.max_active_vars
        )));
    }
    Ok(())
}

pub(crate) fn run_check<F>(
    check: &str,
    inst: &LinkInstance,
    params: BTreeMap<String, Value>,
    seed: Option<u64>,
    body: F,
) -> Report
where
    F: FnOnce() -> Result<Draft, Stop>,
{
    let start = Instant::now();
    let (status, message, witnesses) = match body() {
        Ok(d) => (d.status, d.message, d.witnesses),
        Err(Stop::Refused(msg)) => (Status::Refused, msg, Value::Null),
        Err(Stop::Failed(msg)) => (Status::Fail, msg, Value::Null),
    };
    Report {
        check: check.to_string(),
        instance: inst.into(),
        params,
        status,
        message,
        witnesses,
        seed,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}
