//! Constructive divisibility witnesses.
//!
//! * [`alpha_divisor_witness`] picks, for an antidiagonal of `ini_I` and a
//!   subset `A`, an `α_j` dividing their product with `β_A`; this is why
//!   `μ·N` lies in the colon `ini_a : ini_I`.
//! * [`square_divisor_witness`] takes `2r+1` distinct generators of `ini_J`
//!   with product `ξ` and builds `δ`, a product of at least `r+1`
//!   generators, with `δ² | ν·ξ`.
//! * [`odd_multiplicity_reduction`] and [`certify_odd_product`] extend this
//!   to arbitrary products of `2r+1` generators by splitting off a square.
//!
//! Every function checks its own postconditions by direct monomial
//! arithmetic and reports a violation as [`LinkError::Postcondition`].

use std::collections::BTreeMap;

use serde::Serialize;

use super::lattice::{beta_product, chain_normal_form, is_chain};
use super::{AdmissibleSubset, Cell, LinkError, LinkGenerator, LinkInstance};
use crate::ideal::Monomial;

/// The `j` with `α_j | (∏_i x[m-i+1, k_i])·β_A`.
///
/// `ε` is the first position with `k_ε + 1 < a_ε` (always true at `ε = m`)
/// and `j = k_ε - ε + 1`.
pub fn alpha_divisor_witness(inst: &LinkInstance, ks: &[u32], a: &AdmissibleSubset) -> Result<u32, LinkError> {
    let anti = inst.antidiagonal(ks)?;
    let beta = inst.beta(a)?;
    let m = inst.m();
    let eps = (1..=m)
        .find(|&i| i == m || ks[i as usize - 1] + 1 < a.bound(i))
        .expect("the last position always qualifies");
    let j = ks[eps as usize - 1] as i64 - eps as i64 + 1;
    if j < 1 || j > inst.g() as i64 {
        return Err(LinkError::Postcondition(format!(
            "index {j} from {ks:?} and {a} is outside 1..={}",
            inst.g()
        )));
    }
    let j = j as u32;
    if !inst.alpha(j)?.divides(&anti.mul(&beta)) {
        return Err(LinkError::Postcondition(format!(
            "alpha[{j}] does not divide the product for {ks:?} and {a}"
        )));
    }
    Ok(j)
}

/// Which branch of the construction produced a square witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessCase {
    /// At least two diagonal generators.
    SeveralDiagonal,
    /// Exactly one diagonal generator.
    OneDiagonal,
    /// No diagonal generator; every middle region stays inside the outer two.
    NoDiagonalNested,
    /// No diagonal generator; some middle region leaves the outer two.
    NoDiagonalCrossing,
}

/// Data of the crossing branch: a cell of `V` lying in a middle `D_{A_k}`
/// but outside `D_{A_1} ∪ D_{A_b}`, and the subset `C` built from it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossingCell {
    pub cell: Cell,
    /// 1-based position in the chain of the subset containing `cell`.
    pub position: u32,
    /// First `t` with `m - t + b_t > i + j`, `b` the top of the chain.
    pub first_above: u32,
    /// Last `t` with `m - t + a_t < i + j`, `a` the bottom of the chain.
    pub last_below: u32,
    pub subset: AdmissibleSubset,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SquareWitness {
    pub r: u32,
    pub case: WitnessCase,
    /// Generators whose product is `δ`.
    pub factors: Vec<LinkGenerator>,
    #[serde(skip)]
    pub delta: Monomial,
    /// `ν` times the product of the inputs.
    #[serde(skip)]
    pub gamma: Monomial,
    pub crossing: Option<CrossingCell>,
}

fn product_of_generators(inst: &LinkInstance, gens: &[LinkGenerator]) -> Result<Monomial, LinkError> {
    gens.iter().try_fold(Monomial::one(), |acc, g| Ok(acc.mul(&inst.generator(g)?)))
}

fn check_chain(inst: &LinkInstance, chain: &[AdmissibleSubset]) -> Result<(), LinkError> {
    for a in chain {
        inst.region_d(a)?;
    }
    if !is_chain(chain) {
        return Err(LinkError::Argument("subsets do not form a chain".into()));
    }
    Ok(())
}

/// `δ` for the product of the diagonal generators `diag` (strictly
/// increasing) and `μ·β_A` over the chain, `|diag| + |chain| = 2r + 1`.
pub fn square_divisor_witness(
    inst: &LinkInstance,
    diag: &[u32],
    chain: &[AdmissibleSubset],
) -> Result<SquareWitness, LinkError> {
    let (a, b) = (diag.len(), chain.len());
    if (a + b) % 2 == 0 {
        return Err(LinkError::Argument(format!("need an odd number of generators, got {}", a + b)));
    }
    if diag.windows(2).any(|w| w[0] >= w[1]) || diag.iter().any(|&j| !(1..=inst.g()).contains(&j)) {
        return Err(LinkError::Argument(format!(
            "diagonal indices {diag:?} must increase within 1..={}",
            inst.g()
        )));
    }
    check_chain(inst, chain)?;
    let r = ((a + b - 1) / 2) as u32;
    let inputs: Vec<LinkGenerator> = diag
        .iter()
        .map(|&j| LinkGenerator::Diagonal(j))
        .chain(chain.iter().cloned().map(LinkGenerator::Nontrivial))
        .collect();
    let gamma = inst.nu().mul(&product_of_generators(inst, &inputs)?);
    let nontrivial = |a: &AdmissibleSubset| LinkGenerator::Nontrivial(a.clone());

    let (case, factors, crossing) = if a >= 2 {
        let half = b.saturating_sub(1) / 2;
        let mut f: Vec<LinkGenerator> = diag.iter().map(|&j| LinkGenerator::Diagonal(j)).collect();
        f.extend((1..=half).map(|k| nontrivial(&chain[2 * k - 1])));
        (WitnessCase::SeveralDiagonal, f, None)
    } else if a == 1 {
        let i1 = diag[0];
        let shifted: Vec<u32> = (i1 + 1..i1 + inst.m()).collect();
        let mut extended = chain.to_vec();
        extended.push(inst.subset(&shifted)?);
        let normal = chain_normal_form(&extended)?;
        let mut f = vec![LinkGenerator::Diagonal(i1)];
        f.extend((1..=r as usize).map(|k| nontrivial(&normal[2 * k - 1])));
        (WitnessCase::OneDiagonal, f, None)
    } else {
        match find_crossing(inst, chain)? {
            None => {
                let f = (0..=r as usize).map(|k| nontrivial(&chain[2 * k])).collect();
                (WitnessCase::NoDiagonalNested, f, None)
            }
            Some(cross) => {
                let t = cross.cell.0 + cross.cell.1 - inst.m();
                let mut f = vec![nontrivial(&cross.subset), LinkGenerator::Diagonal(t)];
                f.extend((1..r as usize).map(|h| nontrivial(&chain[2 * h])));
                (WitnessCase::NoDiagonalCrossing, f, Some(cross))
            }
        }
    };

    let delta = product_of_generators(inst, &factors)?;
    let witness = SquareWitness {
        r,
        case,
        factors,
        delta,
        gamma,
        crossing,
    };
    check_square(&witness)?;
    Ok(witness)
}

fn check_square(w: &SquareWitness) -> Result<(), LinkError> {
    if w.factors.len() < w.r as usize + 1 {
        return Err(LinkError::Postcondition(format!(
            "{:?} witness has {} factors, needs {}",
            w.case,
            w.factors.len(),
            w.r + 1
        )));
    }
    if !w.delta.pow(2).divides(&w.gamma) {
        return Err(LinkError::Postcondition(format!("{:?} witness: delta^2 does not divide gamma", w.case)));
    }
    Ok(())
}

/// The first cell of `V` (row-major) lying in some middle region and in
/// neither end region, with the subset `C` it determines.
fn find_crossing(inst: &LinkInstance, chain: &[AdmissibleSubset]) -> Result<Option<CrossingCell>, LinkError> {
    let b = chain.len();
    if b < 3 {
        return Ok(None);
    }
    let regions = chain.iter().map(|a| inst.region_d(a)).collect::<Result<Vec<_>, _>>()?;
    let (first, last) = (&regions[0], &regions[b - 1]);
    let hit = inst.grid_v().iter().find_map(|cell| {
        if first.contains(cell) || last.contains(cell) {
            return None;
        }
        (1..b - 1).find(|&k| regions[k].contains(cell)).map(|k| (cell, k as u32 + 1))
    });
    let Some((cell, position)) = hit else {
        return Ok(None);
    };
    let m = inst.m();
    let s = cell.0 + cell.1;
    let (bottom, top) = (&chain[0], &chain[b - 1]);
    let fail = |what: &str| LinkError::Postcondition(format!("crossing at {cell:?}: {what}"));
    let first_above = (1..m)
        .find(|&t| m - t + top.bound(t) > s)
        .ok_or_else(|| fail("no index above the antidiagonal"))?;
    let last_below = (1..m)
        .rev()
        .find(|&t| m - t + bottom.bound(t) < s)
        .ok_or_else(|| fail("no index below the antidiagonal"))?;
    let c: Vec<u32> = (1..m)
        .map(|t| {
            if t < first_above {
                top.bound(t)
            } else if t <= last_below {
                s + t - m
            } else {
                bottom.bound(t)
            }
        })
        .collect();
    let subset = inst.subset(&c).map_err(|_| fail(&format!("{c:?} is not admissible")))?;
    if s <= m || s - m > inst.g() {
        return Err(fail("antidiagonal index out of range"));
    }
    Ok(Some(CrossingCell {
        cell,
        position,
        first_above,
        last_below,
        subset,
    }))
}

/// A product of `2r+1` generators split as `ξ = ξ'·ρ²`, where `ξ'` uses each
/// odd-multiplicity generator once and `ρ` is a product of `r - s`
/// generators, `2s + 1` being the number of factors of `ξ'`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OddReduction {
    pub r: u32,
    pub s: u32,
    /// Diagonal indices of odd multiplicity.
    pub diagonal: Vec<u32>,
    /// Subsets of odd multiplicity, as a chain.
    pub chain: Vec<AdmissibleSubset>,
    pub residual_factors: Vec<LinkGenerator>,
    #[serde(skip)]
    pub product: Monomial,
    #[serde(skip)]
    pub reduced: Monomial,
    #[serde(skip)]
    pub residual: Monomial,
}

/// Splits a product of an odd number of generators into its odd part and a
/// square. Nontrivial factors are first straightened into a chain, which
/// keeps the product unchanged.
pub fn odd_multiplicity_reduction(inst: &LinkInstance, gens: &[LinkGenerator]) -> Result<OddReduction, LinkError> {
    if gens.len().is_multiple_of(2) {
        return Err(LinkError::Argument(format!("need an odd number of generators, got {}", gens.len())));
    }
    let product = product_of_generators(inst, gens)?;
    let mut diag_counts: BTreeMap<u32, u32> = BTreeMap::new();
    let mut subsets = Vec::new();
    for g in gens {
        match g {
            LinkGenerator::Diagonal(j) => *diag_counts.entry(*j).or_insert(0) += 1,
            LinkGenerator::Nontrivial(a) => subsets.push(a.clone()),
        }
    }
    let mut chain_counts: Vec<(AdmissibleSubset, u32)> = Vec::new();
    if !subsets.is_empty() {
        for a in chain_normal_form(&subsets)? {
            match chain_counts.last_mut() {
                Some((last, c)) if *last == a => *c += 1,
                _ => chain_counts.push((a, 1)),
            }
        }
    }
    let diagonal: Vec<u32> = diag_counts.iter().filter(|(_, &c)| c % 2 == 1).map(|(&j, _)| j).collect();
    let chain: Vec<AdmissibleSubset> = chain_counts
        .iter()
        .filter(|(_, c)| c % 2 == 1)
        .map(|(a, _)| a.clone())
        .collect();
    let residual_factors: Vec<LinkGenerator> = diag_counts
        .iter()
        .flat_map(|(&j, &c)| std::iter::repeat_n(LinkGenerator::Diagonal(j), (c / 2) as usize))
        .chain(
            chain_counts
                .iter()
                .flat_map(|(a, c)| std::iter::repeat_n(LinkGenerator::Nontrivial(a.clone()), (c / 2) as usize)),
        )
        .collect();
    let r = ((gens.len() - 1) / 2) as u32;
    let s = ((diagonal.len() + chain.len() - 1) / 2) as u32;
    let mu = inst.mu();
    let reduced = diagonal
        .iter()
        .try_fold(Monomial::one(), |acc, &j| Ok::<_, LinkError>(acc.mul(&inst.diagonal_generator(j)?)))?
        .mul(&beta_product(inst, &chain)?)
        .mul(&mu.pow(chain.len() as u32));
    let residual = product_of_generators(inst, &residual_factors)?;
    if residual_factors.len() != (r - s) as usize || reduced.mul(&residual.pow(2)) != product {
        return Err(LinkError::Postcondition("odd part times residual square is not the product".into()));
    }
    Ok(OddReduction {
        r,
        s,
        diagonal,
        chain,
        residual_factors,
        product,
        reduced,
        residual,
    })
}

/// `δ = δ'·ρ` with `δ² | ν·ξ` and `δ` a product of at least `r + 1` generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductCertificate {
    pub reduction: OddReduction,
    pub odd_part: SquareWitness,
    pub factors: Vec<LinkGenerator>,
    #[serde(skip)]
    pub delta: Monomial,
}

pub fn certify_odd_product(inst: &LinkInstance, gens: &[LinkGenerator]) -> Result<ProductCertificate, LinkError> {
    let reduction = odd_multiplicity_reduction(inst, gens)?;
    let odd_part = square_divisor_witness(inst, &reduction.diagonal, &reduction.chain)?;
    let delta = odd_part.delta.mul(&reduction.residual);
    let mut factors = odd_part.factors.clone();
    factors.extend(reduction.residual_factors.iter().cloned());
    if factors.len() < reduction.r as usize + 1 {
        return Err(LinkError::Postcondition(format!(
            "certificate has {} factors, needs {}",
            factors.len(),
            reduction.r + 1
        )));
    }
    if !delta.pow(2).divides(&inst.nu().mul(&reduction.product)) {
        return Err(LinkError::Postcondition("delta^2 does not divide nu times the product".into()));
    }
    Ok(ProductCertificate {
        reduction,
        odd_part,
        factors,
        delta,
    })
}

/// Three candidate conditions for `N^(2) = N^2`, evaluated for an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SquareConditions {
    #[serde(rename = "m<=2 or m<=n-1")]
    pub m_le_n_minus_1: bool,
    #[serde(rename = "m<=2 or m<=n+1")]
    pub m_le_n_plus_1: bool,
    #[serde(rename = "m<=2 or n<=m+1")]
    pub n_le_m_plus_1: bool,
}

pub fn square_equality_conditions(inst: &LinkInstance) -> SquareConditions {
    let (m, n) = (inst.m(), inst.n());
    SquareConditions {
        m_le_n_minus_1: m <= 2 || m < n,
        m_le_n_plus_1: m <= 2 || m <= n + 1,
        n_le_m_plus_1: m <= 2 || n <= m + 1,
    }
}
