//! Exact arithmetic on monomial ideals over a finite variable universe.
//!
//! Everything here is a pure function of immutable values. Generator-pair
//! work (products, lcms, membership filters) runs on the rayon pool when the
//! `parallel` feature is enabled.

mod io;
mod monomial;
mod ops;
mod order;
mod primes;
mod property_p;
mod symbolic;
mod variable;

use thiserror::Error;

pub use io::{FamilySizes, IdealFile, UniverseHeader, IDEAL_SCHEMA_VERSION};
pub use monomial::{Monomial, MonomialDisplay};
pub use ops::{Limits, MonomialIdeal};
pub use order::{OrderKind, RemainingYOrder, TermOrder};
pub use primes::{height_and_unmixed, minimal_primes, VarSet, MAX_SET_VARS};
pub use property_p::property_p_witness;
pub use symbolic::{
    equals_symbolic_ordinary_upto, mnb_check, mnb_check_bounded, mnb_scan, mnb_witness,
    prime_power, symbolic_member, symbolic_power, symbolic_power_bounded, SymbolicScan,
};
pub use variable::{Family, Universe, Variable};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("ideals live over different universes ({left} vs {right})")]
    UniverseMismatch { left: Universe, right: Universe },
    #[error("variable {variable} is not in the universe ({universe})")]
    UnknownVariable { variable: String, universe: Universe },
    #[error("monomial uses variable index {index} outside a universe of {len} variables")]
    IndexOutOfRange { index: u32, len: usize },
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("ideal must be squarefree: generator {0} is not")]
    NotSquarefree(String),
    #[error("{operation} would produce about {estimate} generators (limit {limit})")]
    TooLarge {
        operation: &'static str,
        estimate: usize,
        limit: usize,
    },
    #[error("{count} active variables exceed the bitset capacity of {max}")]
    TooManyVariables { count: usize, max: usize },
    #[error("parse error: {0}")]
    Parse(String),
}
