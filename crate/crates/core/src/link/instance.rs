use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use super::{binomial, LinkError};
use crate::ideal::{Monomial, MonomialIdeal, Universe};

/// Largest column count accepted; keeps `C(n, m)` and the `Y` grid small.
pub const MAX_N: u32 = 20;

/// A grid cell `(row, col)`, 1-based.
pub type Cell = (u32, u32);

/// The generic link of the maximal minors of an `m × n` matrix.
///
/// The ambient ring has the `x` grid `m × n` and the `Y` grid `g × r` with
/// `g = n - m + 1` and `r = C(n, m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinkInstance {
    m: u32,
    n: u32,
}

impl LinkInstance {
    pub fn new(m: u32, n: u32) -> Result<Self, LinkError> {
        if m == 0 || m > n {
            return Err(LinkError::Argument(format!("need 1 <= m <= n, got m={m}, n={n}")));
        }
        if n > MAX_N {
            return Err(LinkError::Argument(format!("n={n} exceeds the supported maximum {MAX_N}")));
        }
        Ok(LinkInstance { m, n })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Height of the ideal of maximal minors, `n - m + 1`.
    pub fn g(&self) -> u32 {
        self.n - self.m + 1
    }

    /// Number of maximal minors, `C(n, m)`.
    pub fn r(&self) -> u32 {
        binomial(self.n as u64, self.m as u64) as u32
    }

    pub fn universe(&self) -> Universe {
        Universe::new(self.m, self.n, self.g(), self.r())
    }

    pub fn x(&self, i: u32, j: u32) -> u32 {
        debug_assert!((1..=self.m).contains(&i) && (1..=self.n).contains(&j));
        (i - 1) * self.n + (j - 1)
    }

    pub fn y(&self, i: u32, j: u32) -> u32 {
        debug_assert!((1..=self.g()).contains(&i) && (1..=self.r()).contains(&j));
        self.m * self.n + (i - 1) * self.r() + (j - 1)
    }

    /// `Y[j,j]·α_j`.
    pub fn diagonal_generator(&self, j: u32) -> Result<Monomial, LinkError> {
        Ok(self.alpha(j)?.mul(&Monomial::var(self.y(j, j))))
    }

    /// `μ`, the product of the diagonal `Y[j,j]`, `j ≤ g`.
    pub fn mu(&self) -> Monomial {
        Monomial::product_of((1..=self.g()).map(|j| self.y(j, j)))
    }

    /// `ν`, the product of every variable of the ambient ring.
    pub fn nu(&self) -> Monomial {
        Monomial::product_of(0..self.universe().len() as u32)
    }

    /// The staircase `V = {(i,j) : m-i < j <= n-i+1}`.
    pub fn grid_v(&self) -> CellRegion {
        CellRegion::from_cells(
            (1..=self.m).flat_map(|i| ((self.m - i + 1)..=(self.n - i + 1)).map(move |j| (i, j))),
        )
    }

    /// The part of `V` selected by `A`: `a_{m-i} <= j < a_{m-i+1}`.
    pub fn region_d(&self, a: &AdmissibleSubset) -> Result<CellRegion, LinkError> {
        self.check_subset(a)?;
        Ok(CellRegion::from_cells(
            self.grid_v()
                .iter()
                .filter(|&(i, j)| a.bound(self.m - i) <= j && j < a.bound(self.m - i + 1)),
        ))
    }

    /// The antidiagonal `∏_i x[m-i+1, j+i-1]`, the lead term of the minor on
    /// columns `j..j+m-1`.
    pub fn alpha(&self, j: u32) -> Result<Monomial, LinkError> {
        if !(1..=self.g()).contains(&j) {
            return Err(LinkError::Argument(format!("antidiagonal index {j} outside 1..={}", self.g())));
        }
        Ok(Monomial::product_of((1..=self.m).map(|i| self.x(self.m - i + 1, j + i - 1))))
    }

    /// `β_A`, the product of the cells of `V` outside `D_A`.
    pub fn beta(&self, a: &AdmissibleSubset) -> Result<Monomial, LinkError> {
        let d = self.region_d(a)?;
        Ok(Monomial::product_of(
            self.grid_v().iter().filter(|c| !d.contains(*c)).map(|(i, j)| self.x(i, j)),
        ))
    }

    /// The antidiagonal monomial `∏_i x[m-i+1, k_i]` of a column tuple.
    pub fn antidiagonal(&self, ks: &[u32]) -> Result<Monomial, LinkError> {
        if ks.len() != self.m as usize
            || ks.windows(2).any(|w| w[0] >= w[1])
            || ks.first().is_some_and(|&k| k < 1)
            || ks.last().is_some_and(|&k| k > self.n)
        {
            return Err(LinkError::Argument(format!(
                "column tuple {ks:?} is not strictly increasing of length {} in 1..={}",
                self.m, self.n
            )));
        }
        Ok(Monomial::product_of(
            ks.iter().enumerate().map(|(i, &k)| self.x(self.m - i as u32, k)),
        ))
    }

    /// All admissible subsets, in lexicographic order.
    pub fn admissible_subsets(&self) -> Vec<AdmissibleSubset> {
        (2..=self.n)
            .combinations((self.m - 1) as usize)
            .map(|c| AdmissibleSubset {
                n: self.n,
                elems: c.into_iter().collect(),
            })
            .collect()
    }

    pub fn subset(&self, elems: &[u32]) -> Result<AdmissibleSubset, LinkError> {
        AdmissibleSubset::new(self.m, self.n, elems)
    }

    fn check_subset(&self, a: &AdmissibleSubset) -> Result<(), LinkError> {
        if a.n != self.n || a.elems.len() + 1 != self.m as usize {
            return Err(LinkError::Argument(format!(
                "subset {a} does not belong to the instance ({}, {})",
                self.m, self.n
            )));
        }
        Ok(())
    }

    /// The initial ideal of the maximal minors: all antidiagonal products.
    pub fn ini_i(&self) -> MonomialIdeal {
        let gens = (1..=self.n)
            .combinations(self.m as usize)
            .map(|ks| self.antidiagonal(&ks).expect("combination is a valid tuple"));
        self.ideal(gens)
    }

    /// The complete intersection `(Y[j,j]·α_j : j ≤ g)`.
    pub fn ini_a(&self) -> MonomialIdeal {
        self.ideal((1..=self.g()).map(|j| self.diagonal_generator(j).expect("index in range")))
    }

    /// `N = (β_A : A admissible)`.
    pub fn n_ideal(&self) -> MonomialIdeal {
        self.ideal(self.admissible_subsets().iter().map(|a| self.beta(a).expect("own subset")))
    }

    /// `ini_a + μ·N`, minimalized.
    pub fn ini_j(&self) -> MonomialIdeal {
        self.ideal(self.ini_j_generators().into_iter().map(|(_, g)| g))
    }

    /// The closed-form generator list of `ini_J` with its labels, before any
    /// minimalization: the `g` diagonal generators, then `μ·β_A` for every
    /// admissible `A` in lexicographic order.
    pub fn ini_j_generators(&self) -> Vec<(LinkGenerator, Monomial)> {
        let mut out: Vec<(LinkGenerator, Monomial)> = (1..=self.g())
            .map(|j| (LinkGenerator::Diagonal(j), self.diagonal_generator(j).expect("index in range")))
            .collect();
        let mu = self.mu();
        out.extend(self.admissible_subsets().into_iter().map(|a| {
            let g = mu.mul(&self.beta(&a).expect("own subset"));
            (LinkGenerator::Nontrivial(a), g)
        }));
        out
    }

    pub fn generator(&self, label: &LinkGenerator) -> Result<Monomial, LinkError> {
        match label {
            LinkGenerator::Diagonal(j) => self.diagonal_generator(*j),
            LinkGenerator::Nontrivial(a) => Ok(self.mu().mul(&self.beta(a)?)),
        }
    }

    fn ideal<I: IntoIterator<Item = Monomial>>(&self, gens: I) -> MonomialIdeal {
        MonomialIdeal::new(self.universe(), gens).expect("instance monomials live in the instance universe")
    }
}

impl fmt::Display for LinkInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.m, self.n)
    }
}

/// A subset `a_1 < … < a_{m-1}` of `{2, …, n}`, with the implicit bounds
/// `a_0 = 1` and `a_m = n + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdmissibleSubset {
    n: u32,
    elems: SmallVec<[u32; 8]>,
}

impl AdmissibleSubset {
    pub fn new(m: u32, n: u32, elems: &[u32]) -> Result<Self, LinkError> {
        let ok = m >= 1
            && elems.len() + 1 == m as usize
            && elems.windows(2).all(|w| w[0] < w[1])
            && elems.iter().all(|&a| (2..=n).contains(&a));
        if !ok {
            return Err(LinkError::Argument(format!(
                "{elems:?} is not an increasing {}-subset of 2..={n}",
                m.saturating_sub(1)
            )));
        }
        Ok(AdmissibleSubset {
            n,
            elems: elems.iter().copied().collect(),
        })
    }

    pub fn elements(&self) -> &[u32] {
        &self.elems
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `a_k` for `0 <= k <= m`, including the two implicit bounds.
    pub fn bound(&self, k: u32) -> u32 {
        let k = k as usize;
        if k == 0 {
            1
        } else if k > self.elems.len() {
            self.n + 1
        } else {
            self.elems[k - 1]
        }
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &AdmissibleSubset) -> bool {
        self.elems.len() == other.elems.len() && self.elems.iter().zip(&other.elems).all(|(a, b)| a <= b)
    }

    pub(crate) fn from_parts(n: u32, elems: SmallVec<[u32; 8]>) -> Self {
        AdmissibleSubset { n, elems }
    }
}

impl fmt::Display for AdmissibleSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.elems.iter().join(","))
    }
}

impl Serialize for AdmissibleSubset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.elems.iter())
    }
}

/// A labelled generator of `ini_J`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum LinkGenerator {
    /// `Y[j,j]·α_j`
    Diagonal(u32),
    /// `μ·β_A`
    Nontrivial(AdmissibleSubset),
}

impl fmt::Display for LinkGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinkGenerator::Diagonal(j) => write!(f, "Y[{j},{j}]*alpha[{j}]"),
            LinkGenerator::Nontrivial(a) => write!(f, "mu*beta{a}"),
        }
    }
}

/// A set of grid cells.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CellRegion {
    cells: BTreeSet<Cell>,
}

impl CellRegion {
    pub fn from_cells<I: IntoIterator<Item = Cell>>(cells: I) -> Self {
        CellRegion {
            cells: cells.into_iter().collect(),
        }
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains(&cell)
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Cells in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    pub fn is_subset(&self, other: &CellRegion) -> bool {
        self.cells.is_subset(&other.cells)
    }
}
