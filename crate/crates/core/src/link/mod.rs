//! Combinatorics of the generic link of the ideal of maximal minors of an
//! `m × n` generic matrix: the staircase grid, antidiagonals, the `β_A`
//! monomials, the three initial ideals, the lattice of admissible subsets,
//! the constructive square-divisor witnesses and the closed Betti table.

mod betti;
mod instance;
mod lattice;
mod minors;
mod witness;

use thiserror::Error;

use crate::ideal::IdealError;

pub use betti::{binomial, BettiTable};
pub use instance::{AdmissibleSubset, Cell, CellRegion, LinkGenerator, LinkInstance, MAX_N};
pub use lattice::{chain_normal_form, exponent_in_chain_product, is_chain, meet_join, side_of, straighten_check, Side};
pub use minors::{lead_term, minor_columns, minor_terms};
pub use witness::{
    alpha_divisor_witness, certify_odd_product, odd_multiplicity_reduction, square_divisor_witness,
    square_equality_conditions, CrossingCell, OddReduction, ProductCertificate, SquareConditions,
    SquareWitness, WitnessCase,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinkError {
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("postcondition failed: {0}")]
    Postcondition(String),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}
