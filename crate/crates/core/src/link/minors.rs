//! Monomial shadows of the maximal minors and of the linking forms.
//!
//! Minor `k` (1-based) uses consecutive columns `k..k+m-1` for `k ≤ g`; the
//! remaining column sets follow in colexicographic order. The linking form
//! of row `j` is `Σ_k Y[j,k]·Δ_k`, so its terms are `Y[j,k]·t` for the
//! permutation products `t` of minor `k`.

use itertools::Itertools;

use super::{LinkError, LinkInstance};
use crate::ideal::{Monomial, TermOrder};

/// Column sets of the `C(n, m)` minors in the fixed indexing.
pub fn minor_columns(inst: &LinkInstance) -> Vec<Vec<u32>> {
    let m = inst.m();
    let consecutive: Vec<Vec<u32>> = (1..=inst.g()).map(|k| (k..k + m).collect()).collect();
    let mut rest: Vec<Vec<u32>> = (1..=inst.n())
        .combinations(m as usize)
        .filter(|c| c.windows(2).any(|w| w[1] != w[0] + 1))
        .collect();
    rest.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    consecutive.into_iter().chain(rest).collect()
}

/// The `m!` products `∏_i x[i, cols[σ(i)]]`.
pub fn minor_terms(inst: &LinkInstance, cols: &[u32]) -> Vec<Monomial> {
    let m = inst.m() as usize;
    cols.iter()
        .copied()
        .permutations(m)
        .map(|p| Monomial::product_of(p.into_iter().enumerate().map(|(i, c)| inst.x(i as u32 + 1, c))))
        .collect()
}

/// The largest term of the linking form of row `j` under `order`.
pub fn lead_term(inst: &LinkInstance, order: &TermOrder, j: u32) -> Result<Monomial, LinkError> {
    if !(1..=inst.g()).contains(&j) {
        return Err(LinkError::Argument(format!("row {j} outside 1..={}", inst.g())));
    }
    minor_columns(inst)
        .iter()
        .enumerate()
        .flat_map(|(k, cols)| {
            let y = Monomial::var(inst.y(j, k as u32 + 1));
            minor_terms(inst, cols).into_iter().map(move |t| t.mul(&y))
        })
        .max_by(|a, b| order.compare(a, b))
        .ok_or_else(|| LinkError::Argument("no minors".into()))
}
