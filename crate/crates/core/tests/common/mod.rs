//! Independent reference constructions used as oracles by the integration
//! tests. Nothing here calls the link layer; monomials are built straight
//! from index formulas and checked with brute force.

#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::BTreeSet;

use genlink::ideal::{Monomial, Universe};
use itertools::Itertools;

/// The `m × n` link setup rebuilt from its definitions.
pub struct RefLink {
    pub m: u32,
    pub n: u32,
    pub g: u32,
    pub r: u32,
}

pub fn choose(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

impl RefLink {
    pub fn new(m: u32, n: u32) -> Self {
        RefLink {
            m,
            n,
            g: n - m + 1,
            r: choose(n as u64, m as u64) as u32,
        }
    }

    pub fn universe(&self) -> Universe {
        Universe::new(self.m, self.n, self.g, self.r)
    }

    pub fn x(&self, i: u32, j: u32) -> u32 {
        (i - 1) * self.n + (j - 1)
    }

    pub fn y(&self, i: u32, j: u32) -> u32 {
        self.m * self.n + (i - 1) * self.r + (j - 1)
    }

    pub fn num_vars(&self) -> u32 {
        self.m * self.n + self.g * self.r
    }

    /// Cells `(i, j)` with `m - i < j <= n - i + 1`.
    pub fn v_cells(&self) -> Vec<(u32, u32)> {
        let (m, n) = (self.m, self.n);
        (1..=m)
            .flat_map(|i| (1..=n).map(move |j| (i, j)))
            .filter(|&(i, j)| m - i < j && j + i <= n + 1)
            .collect()
    }

    /// `(m-1)`-subsets of `{2, …, n}`, lexicographic.
    pub fn subsets(&self) -> Vec<Vec<u32>> {
        (2..=self.n).combinations((self.m - 1) as usize).collect()
    }

    fn bounds(&self, a: &[u32]) -> Vec<u32> {
        let mut b = vec![1];
        b.extend_from_slice(a);
        b.push(self.n + 1);
        b
    }

    pub fn in_d(&self, a: &[u32], (i, j): (u32, u32)) -> bool {
        let b = self.bounds(a);
        let k = (self.m - i) as usize;
        b[k] <= j && j < b[k + 1]
    }

    pub fn left_of(&self, a: &[u32], (i, j): (u32, u32)) -> bool {
        j < self.bounds(a)[(self.m - i) as usize]
    }

    pub fn right_of(&self, a: &[u32], (i, j): (u32, u32)) -> bool {
        j >= self.bounds(a)[(self.m - i + 1) as usize]
    }

    pub fn beta(&self, a: &[u32]) -> Monomial {
        squarefree(
            self.v_cells()
                .into_iter()
                .filter(|&c| !self.in_d(a, c))
                .map(|(i, j)| self.x(i, j)),
        )
    }

    pub fn alpha(&self, j: u32) -> Monomial {
        squarefree((1..=self.m).map(|i| self.x(self.m - i + 1, j + i - 1)))
    }

    /// `∏ x[m-i+1, k_i]` for increasing columns `k`.
    pub fn antidiagonal(&self, ks: &[u32]) -> Monomial {
        squarefree(ks.iter().enumerate().map(|(p, &k)| self.x(self.m - p as u32, k)))
    }

    pub fn mu(&self) -> Monomial {
        squarefree((1..=self.g).map(|j| self.y(j, j)))
    }

    pub fn nu(&self) -> Monomial {
        squarefree(0..self.num_vars())
    }

    pub fn diagonal(&self, j: u32) -> Monomial {
        Monomial::var(self.y(j, j)).mul(&self.alpha(j))
    }

    pub fn nontrivial(&self, a: &[u32]) -> Monomial {
        self.mu().mul(&self.beta(a))
    }

    pub fn ini_i(&self) -> Vec<Monomial> {
        (1..=self.n)
            .combinations(self.m as usize)
            .map(|ks| self.antidiagonal(&ks))
            .collect()
    }

    pub fn ini_a(&self) -> Vec<Monomial> {
        (1..=self.g).map(|j| self.diagonal(j)).collect()
    }

    /// The closed-form generator list: diagonal ones first.
    pub fn closed_form(&self) -> Vec<Monomial> {
        let mut out = self.ini_a();
        out.extend(self.subsets().iter().map(|a| self.nontrivial(a)));
        out
    }
}

pub fn squarefree<I: IntoIterator<Item = u32>>(vars: I) -> Monomial {
    Monomial::from_exponents(vars.into_iter().map(|v| (v, 1)))
}

/// Columnwise sort: the chain with the same multiset of coordinates.
pub fn sort_columns(list: &[Vec<u32>]) -> Vec<Vec<u32>> {
    if list.is_empty() {
        return Vec::new();
    }
    let width = list[0].len();
    let mut cols: Vec<Vec<u32>> = (0..width).map(|c| list.iter().map(|a| a[c]).collect()).collect();
    for c in &mut cols {
        c.sort_unstable();
    }
    (0..list.len()).map(|k| cols.iter().map(|c| c[k]).collect()).collect()
}

pub fn support_of(gens: &[Monomial]) -> Vec<u32> {
    let set: BTreeSet<u32> = gens.iter().flat_map(|g| g.terms().iter().map(|&(v, _)| v)).collect();
    set.into_iter().collect()
}

/// Minimal vertex covers of the generator supports, by enumerating every
/// subset of the support (at most about 20 variables).
pub fn brute_minimal_primes(gens: &[Monomial]) -> Vec<Vec<u32>> {
    let support = support_of(gens);
    assert!(support.len() <= 20, "too many variables for enumeration");
    let pos = |v: u32| support.iter().position(|&s| s == v).unwrap();
    let edges: Vec<u32> = gens
        .iter()
        .map(|g| g.terms().iter().fold(0u32, |acc, &(v, _)| acc | 1 << pos(v)))
        .collect();
    if edges.contains(&0) {
        // the unit ideal has no primes
        return Vec::new();
    }
    let mut masks: Vec<u32> = (0..1u32 << support.len()).collect();
    masks.sort_by_key(|m| m.count_ones());
    let mut covers: Vec<u32> = Vec::new();
    for mask in masks {
        if edges.iter().all(|&e| e & mask != 0) && !covers.iter().any(|&c| c & !mask == 0) {
            covers.push(mask);
        }
    }
    let mut out: Vec<Vec<u32>> = covers
        .into_iter()
        .map(|c| (0..support.len()).filter(|&k| c >> k & 1 == 1).map(|k| support[k]).collect())
        .collect();
    out.sort();
    out
}

pub fn weight(u: &Monomial, vars: &[u32]) -> u32 {
    vars.iter().map(|&v| u.exponent(v)).sum()
}

pub fn in_symbolic(primes: &[Vec<u32>], u: &Monomial, ell: u32) -> bool {
    primes.iter().all(|p| weight(u, p) >= ell)
}

/// Whether some product of `ell` generators divides `u`.
pub fn in_power(gens: &[Monomial], ell: u32, u: &Monomial) -> bool {
    fn go(gens: &[Monomial], from: usize, ell: u32, u: &Monomial) -> bool {
        if ell == 0 {
            return true;
        }
        (from..gens.len()).any(|k| gens[k].divides(u) && go(gens, k, ell - 1, &u.div(&gens[k]).unwrap()))
    }
    go(gens, 0, ell, u)
}

/// Minimal generators of `W^(ℓ)` for squarefree `W`, by scanning every
/// exponent vector in `[0, ℓ]` over the support.
pub fn brute_symbolic_generators(gens: &[Monomial], ell: u32) -> Vec<Monomial> {
    let primes = brute_minimal_primes(gens);
    let support = support_of(gens);
    let members: BTreeSet<Vec<u32>> = (0..support.len())
        .map(|_| 0..=ell)
        .multi_cartesian_product()
        .filter(|e| in_symbolic(&primes, &dense_to_mono(&support, e), ell))
        .collect();
    members
        .iter()
        .filter(|e| {
            (0..e.len()).all(|k| {
                if e[k] == 0 {
                    return true;
                }
                let mut d = (*e).clone();
                d[k] -= 1;
                !members.contains(&d)
            })
        })
        .map(|e| dense_to_mono(&support, e))
        .collect()
}

pub fn dense_to_mono(support: &[u32], e: &[u32]) -> Monomial {
    Monomial::from_exponents(support.iter().zip(e).filter(|(_, &x)| x > 0).map(|(&v, &x)| (v, x)))
}

/// All monomials over `vars` of total degree at most `max_deg`.
pub fn monomials_up_to(vars: &[u32], max_deg: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for d in 0..=max_deg {
        for c in vars.iter().copied().combinations_with_replacement(d as usize) {
            let mut terms: Vec<(u32, u32)> = Vec::new();
            for v in c {
                match terms.last_mut() {
                    Some((w, e)) if *w == v => *e += 1,
                    _ => terms.push((v, 1)),
                }
            }
            out.push(Monomial::from_exponents(terms));
        }
    }
    out
}

/// Degree, then at the lowest-ranked variable where the exponents differ,
/// the smaller exponent wins. `rank` lists variables from smallest up.
pub fn ref_grevlex(rank: &[u32], u: &Monomial, v: &Monomial) -> Ordering {
    u.degree().cmp(&v.degree()).then_with(|| {
        for &x in rank {
            let (a, b) = (u.exponent(x), v.exponent(x));
            if a != b {
                return b.cmp(&a);
            }
        }
        Ordering::Equal
    })
}

/// Pure lexicographic order; `rank` lists variables from largest down.
pub fn ref_lex(rank: &[u32], u: &Monomial, v: &Monomial) -> Ordering {
    for &x in rank {
        let (a, b) = (u.exponent(x), v.exponent(x));
        if a != b {
            return a.cmp(&b);
        }
    }
    Ordering::Equal
}

/// Splits a monomial into the part on `vars` and the rest.
pub fn restrict(u: &Monomial, vars: &[u32]) -> Monomial {
    Monomial::from_exponents(u.terms().iter().copied().filter(|(v, _)| vars.contains(v)))
}
