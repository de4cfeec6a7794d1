//! Symbolic powers of squarefree monomial ideals and the bracket-power
//! colon criterion for their equality with ordinary powers.

use itertools::Itertools;

#[allow(unused_imports)]
use crate::par::prelude::*;
use crate::par::par_iter;

use super::{minimal_primes, IdealError, Limits, Monomial, MonomialIdeal, Universe};

/// `p^ℓ` for the monomial prime generated by `vars`: all degree-`ℓ`
/// monomials in those variables.
pub fn prime_power(universe: Universe, vars: &[u32], ell: u32) -> MonomialIdeal {
    let gens = vars
        .iter()
        .copied()
        .combinations_with_replacement(ell as usize)
        .map(|c| Monomial::from_exponents(c.into_iter().map(|v| (v, 1))))
        .collect();
    MonomialIdeal::from_minimal_unsorted(universe, gens)
}

/// `W^(ℓ)`, the intersection of `p^ℓ` over the minimal primes of `W`.
pub fn symbolic_power(w: &MonomialIdeal, ell: u32) -> Result<MonomialIdeal, IdealError> {
    symbolic_power_bounded(w, ell, Limits::unbounded())
}

pub fn symbolic_power_bounded(w: &MonomialIdeal, ell: u32, limits: Limits) -> Result<MonomialIdeal, IdealError> {
    if ell == 0 {
        return Err(IdealError::Argument("symbolic power exponent must be positive".into()));
    }
    let primes = minimal_primes(w)?;
    let universe = *w.universe();
    let powers: Vec<MonomialIdeal> = par_iter!(&primes)
        .map(|p| prime_power(universe, p, ell))
        .collect();
    let mut acc = MonomialIdeal::unit(universe);
    for p in &powers {
        acc = acc.intersect_bounded(p, limits)?;
    }
    Ok(acc)
}

/// Membership in `W^(ℓ)` by weight: every minimal prime must carry at least
/// `ℓ` of the exponent of `u`.
pub fn symbolic_member(w: &MonomialIdeal, u: &Monomial, ell: u32) -> Result<bool, IdealError> {
    let primes = minimal_primes(w)?;
    w.try_contains(u)?;
    Ok(par_iter!(&primes).all(|p| u.weight_on(p) >= ell))
}

/// Outcome of comparing `W^(ℓ)` with `W^ℓ` for `ℓ = 1..=checked`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicScan {
    pub checked: u32,
    /// First `ℓ` with `W^(ℓ) ≠ W^ℓ`, with a generator of `W^(ℓ)` outside `W^ℓ`.
    pub first_failure: Option<(u32, Monomial)>,
}

impl SymbolicScan {
    pub fn all_pass(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Checks `W^(ℓ) ⊆ W^ℓ` for `ℓ ≤ max_ell`, stopping at the first failure.
///
/// The reverse inclusion always holds and is only debug-asserted.
pub fn equals_symbolic_ordinary_upto(
    w: &MonomialIdeal,
    max_ell: u32,
    limits: Limits,
) -> Result<SymbolicScan, IdealError> {
    for ell in 1..=max_ell {
        let sym = symbolic_power_bounded(w, ell, limits)?;
        let ord = w.power_bounded(ell, limits)?;
        debug_assert!(ord.is_subset_of(&sym));
        let outside = par_iter!(sym.generators()).find_first(|g| !ord.contains(g)).cloned();
        if let Some(g) = outside {
            return Ok(SymbolicScan {
                checked: ell,
                first_failure: Some((ell, g)),
            });
        }
    }
    Ok(SymbolicScan {
        checked: max_ell,
        first_failure: None,
    })
}

/// A generator `h` of `W^(2r+1)` with `ν·h ∉ (W^(r+1))^[2]`, if any, where `ν`
/// is the product of all variables.
pub fn mnb_witness(w: &MonomialIdeal, r: u32, limits: Limits) -> Result<Option<Monomial>, IdealError> {
    if !w.is_squarefree() || !w.is_proper() {
        return Err(IdealError::Argument("criterion needs a squarefree proper ideal".into()));
    }
    let squares = w.power_bounded(r + 1, limits)?.bracket_power(2)?;
    let odd = w.power_bounded(2 * r + 1, limits)?;
    let nu = w.all_variables_product();
    Ok(par_iter!(odd.generators())
        .find_first(|h| !squares.contains(&nu.mul(h)))
        .cloned())
}

/// `ν ∈ (W^(r+1))^[2] : W^(2r+1)` for one `r`.
pub fn mnb_check(w: &MonomialIdeal, r: u32) -> Result<bool, IdealError> {
    mnb_check_bounded(w, r, Limits::unbounded())
}

pub fn mnb_check_bounded(w: &MonomialIdeal, r: u32, limits: Limits) -> Result<bool, IdealError> {
    Ok(mnb_witness(w, r, limits)?.is_none())
}

/// Scans `r = 0..=r_max`; returns the first failing `r` with its witness.
pub fn mnb_scan(w: &MonomialIdeal, r_max: u32, limits: Limits) -> Result<Option<(u32, Monomial)>, IdealError> {
    for r in 0..=r_max {
        if let Some(h) = mnb_witness(w, r, limits)? {
            return Ok(Some((r, h)));
        }
    }
    Ok(None)
}
