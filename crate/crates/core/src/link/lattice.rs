//! The distributive lattice of admissible subsets and the exponent formula
//! for products of `β` monomials along a chain.

use serde::Serialize;

use super::{AdmissibleSubset, Cell, LinkError, LinkInstance};
use crate::ideal::Monomial;

fn same_shape(a: &AdmissibleSubset, b: &AdmissibleSubset) -> Result<(), LinkError> {
    if a.n() != b.n() || a.elements().len() != b.elements().len() {
        return Err(LinkError::Argument(format!("subsets {a} and {b} have different shapes")));
    }
    Ok(())
}

/// Componentwise minimum and maximum.
pub fn meet_join(
    a: &AdmissibleSubset,
    b: &AdmissibleSubset,
) -> Result<(AdmissibleSubset, AdmissibleSubset), LinkError> {
    same_shape(a, b)?;
    let pairs = a.elements().iter().zip(b.elements());
    let meet = pairs.clone().map(|(x, y)| *x.min(y)).collect();
    let join = pairs.map(|(x, y)| *x.max(y)).collect();
    Ok((
        AdmissibleSubset::from_parts(a.n(), meet),
        AdmissibleSubset::from_parts(a.n(), join),
    ))
}

/// Whether `β_A·β_B = β_{A∧B}·β_{A∨B}` holds as monomials.
pub fn straighten_check(inst: &LinkInstance, a: &AdmissibleSubset, b: &AdmissibleSubset) -> Result<bool, LinkError> {
    let (meet, join) = meet_join(a, b)?;
    Ok(inst.beta(a)?.mul(&inst.beta(b)?) == inst.beta(&meet)?.mul(&inst.beta(&join)?))
}

pub fn is_chain(chain: &[AdmissibleSubset]) -> bool {
    chain.windows(2).all(|w| w[0].le(&w[1]))
}

/// Rewrites adjacent pairs by meet and join until the list is a chain.
///
/// Each pass is one bubble-sort sweep on every coordinate at once, so the
/// loop ends after at most `len` passes.
pub fn chain_normal_form(list: &[AdmissibleSubset]) -> Result<Vec<AdmissibleSubset>, LinkError> {
    if list.is_empty() {
        return Err(LinkError::Argument("cannot normalize an empty list".into()));
    }
    let mut chain = list.to_vec();
    loop {
        let mut changed = false;
        for k in 0..chain.len() - 1 {
            if !chain[k].le(&chain[k + 1]) {
                let (meet, join) = meet_join(&chain[k], &chain[k + 1])?;
                chain[k] = meet;
                chain[k + 1] = join;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    Ok(chain)
}

/// Position of a cell of `V` relative to `D_A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    Inside,
    /// `j < a_{m-i}`
    Left,
    /// `j >= a_{m-i+1}`
    Right,
}

pub fn side_of(inst: &LinkInstance, a: &AdmissibleSubset, cell: Cell) -> Result<Side, LinkError> {
    if !inst.grid_v().contains(cell) {
        return Err(LinkError::Argument(format!("cell {cell:?} is not in V")));
    }
    inst.region_d(a)?;
    let (i, j) = cell;
    let m = inst.m();
    Ok(if j < a.bound(m - i) {
        Side::Left
    } else if j >= a.bound(m - i + 1) {
        Side::Right
    } else {
        Side::Inside
    })
}

/// Exponent of `x[cell]` in `∏ β_{A_k}` for a chain, by the closed formula
/// `max{k : right of D_{A_k}} + ℓ - min{k : left of D_{A_k}} + 1`
/// (empty max is 0, empty min is `ℓ + 1`).
pub fn exponent_in_chain_product(inst: &LinkInstance, chain: &[AdmissibleSubset], cell: Cell) -> Result<u32, LinkError> {
    if !is_chain(chain) {
        return Err(LinkError::Argument("subsets do not form a chain".into()));
    }
    let len = chain.len() as u32;
    let mut last_right = 0;
    let mut first_left = len + 1;
    for (k, a) in chain.iter().enumerate() {
        let k = k as u32 + 1;
        match side_of(inst, a, cell)? {
            Side::Right => last_right = k,
            Side::Left => first_left = first_left.min(k),
            Side::Inside => {}
        }
    }
    Ok(last_right + len + 1 - first_left)
}

/// `∏ β_{A_k}` by direct multiplication.
pub(crate) fn beta_product(inst: &LinkInstance, list: &[AdmissibleSubset]) -> Result<Monomial, LinkError> {
    list.iter().try_fold(Monomial::one(), |acc, a| Ok(acc.mul(&inst.beta(a)?)))
}
