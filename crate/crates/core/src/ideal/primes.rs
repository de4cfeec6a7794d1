//! Minimal primes of squarefree monomial ideals.
//!
//! The minimal primes of a squarefree monomial ideal are generated by the
//! minimal vertex covers (transversals) of the clutter of generator
//! supports. Transversals are built edge by edge (Berge's method) on `u128`
//! bitsets over the active variables.

#[allow(unused_imports)]
use crate::par::prelude::*;
use crate::par::par_into_iter;

use super::{IdealError, MonomialIdeal};

/// A set of universe variable indices, sorted ascending.
pub type VarSet = Vec<u32>;

/// Largest number of active variables the bitset path supports.
pub const MAX_SET_VARS: usize = 128;

fn validate(w: &MonomialIdeal) -> Result<(), IdealError> {
    if w.is_zero() || w.is_unit() {
        return Err(IdealError::Argument(
            "minimal primes need a proper nonzero ideal".into(),
        ));
    }
    if let Some(g) = w.generators().iter().find(|g| !g.is_squarefree()) {
        return Err(IdealError::NotSquarefree(g.display(w.universe()).to_string()));
    }
    Ok(())
}

/// Drops duplicates and supersets, returning sets ordered by size.
fn minimal_sets(mut sets: Vec<u128>) -> Vec<u128> {
    sets.sort_unstable_by_key(|s| (s.count_ones(), *s));
    sets.dedup();
    let mut kept: Vec<u128> = Vec::with_capacity(sets.len());
    let mut start = 0;
    while start < sets.len() {
        let size = sets[start].count_ones();
        let end = start + sets[start..].iter().take_while(|s| s.count_ones() == size).count();
        let layer = sets[start..end].to_vec();
        let survivors: Vec<u128> = par_into_iter!(layer)
            .filter(|s| !kept.iter().any(|k| k & !s == 0))
            .collect();
        kept.extend(survivors);
        start = end;
    }
    kept
}

/// Minimal transversals of a clutter given as bitsets.
pub(crate) fn minimal_transversals(edges: &[u128]) -> Vec<u128> {
    let mut edges = edges.to_vec();
    edges.sort_unstable_by_key(|e| e.count_ones());
    let mut trans: Vec<u128> = vec![0];
    for &e in &edges {
        let mut next = Vec::with_capacity(trans.len() * 2);
        for &t in &trans {
            if t & e != 0 {
                next.push(t);
            } else {
                let mut rest = e;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    next.push(t | bit);
                    rest ^= bit;
                }
            }
        }
        trans = minimal_sets(next);
    }
    trans
}

/// Minimal primes of a squarefree proper nonzero ideal, as variable sets.
///
/// Each returned set is a minimal vertex cover of the generator supports;
/// the list is ordered by size, then lexicographically.
pub fn minimal_primes(w: &MonomialIdeal) -> Result<Vec<VarSet>, IdealError> {
    validate(w)?;
    let support = w.support();
    if support.len() > MAX_SET_VARS {
        return Err(IdealError::TooManyVariables {
            count: support.len(),
            max: MAX_SET_VARS,
        });
    }
    let compact = |v: u32| support.binary_search(&v).expect("variable in support");
    let edges: Vec<u128> = w
        .generators()
        .iter()
        .map(|g| g.support().fold(0u128, |acc, v| acc | 1 << compact(v)))
        .collect();
    let mut primes: Vec<VarSet> = minimal_transversals(&edges)
        .into_iter()
        .map(|t| {
            (0..support.len())
                .filter(|&b| t >> b & 1 == 1)
                .map(|b| support[b])
                .collect()
        })
        .collect();
    primes.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(primes)
}

/// `(height, unmixed)`: the smallest cover size, and whether every minimal
/// prime has that size.
pub fn height_and_unmixed(w: &MonomialIdeal) -> Result<(usize, bool), IdealError> {
    let primes = minimal_primes(w)?;
    let h = primes.iter().map(Vec::len).min().expect("proper ideal has a prime");
    Ok((h, primes.iter().all(|p| p.len() == h)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{Monomial, Universe};

    fn ideal(gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(
            Universe::x_grid(1, 6),
            gens.iter().map(|g| Monomial::product_of(g.iter().copied())),
        )
        .unwrap()
    }

    #[test]
    fn single_edge() {
        assert_eq!(minimal_primes(&ideal(&[&[0, 1]])).unwrap(), vec![vec![0], vec![1]]);
    }

    #[test]
    fn triangle_covers() {
        let t = ideal(&[&[0, 1], &[0, 2], &[1, 2]]);
        assert_eq!(
            minimal_primes(&t).unwrap(),
            vec![vec![0, 1], vec![0, 2], vec![1, 2]]
        );
        assert_eq!(height_and_unmixed(&t).unwrap(), (2, true));
    }

    #[test]
    fn x_plus_yz_is_unmixed() {
        let w = ideal(&[&[0], &[1, 2]]);
        assert_eq!(minimal_primes(&w).unwrap(), vec![vec![0, 1], vec![0, 2]]);
        assert_eq!(height_and_unmixed(&w).unwrap(), (2, true));
    }

    #[test]
    fn mixed_heights() {
        let w = ideal(&[&[0, 1], &[0, 2]]);
        assert_eq!(minimal_primes(&w).unwrap(), vec![vec![0], vec![1, 2]]);
        assert_eq!(height_and_unmixed(&w).unwrap(), (1, false));
    }

    #[test]
    fn rejects_bad_input() {
        let u = Universe::x_grid(1, 6);
        let sq = MonomialIdeal::new(u, [Monomial::from_exponents([(0, 2)])]).unwrap();
        assert!(matches!(minimal_primes(&sq), Err(IdealError::NotSquarefree(_))));
        assert!(minimal_primes(&MonomialIdeal::unit(u)).is_err());
        assert!(minimal_primes(&MonomialIdeal::zero(u)).is_err());
    }
}
