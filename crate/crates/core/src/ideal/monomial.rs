use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use super::{IdealError, Universe, Variable};

type Terms = SmallVec<[(u32, u32); 8]>;

/// A monomial as a sorted list of `(variable index, exponent)` pairs.
///
/// Exponents are always positive; the empty list is the unit monomial.
/// Indices refer to a [`Universe`] held by the surrounding ideal.
///
/// The derived ordering (degree, then the term list) is only a canonical
/// storage order; term orders live in [`super::TermOrder`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    terms: Terms,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(idx: u32) -> Self {
        Monomial { terms: smallvec::smallvec![(idx, 1)] }
    }

    /// Builds a monomial from arbitrary `(index, exponent)` pairs.
    ///
    /// Repeated indices are merged and zero exponents dropped.
    pub fn from_exponents<I: IntoIterator<Item = (u32, u32)>>(iter: I) -> Self {
        let mut terms: Terms = iter.into_iter().filter(|&(_, e)| e > 0).collect();
        terms.sort_unstable_by_key(|&(v, _)| v);
        let mut out: Terms = SmallVec::with_capacity(terms.len());
        for (v, e) in terms {
            match out.last_mut() {
                Some((lv, le)) if *lv == v => *le += e,
                _ => out.push((v, e)),
            }
        }
        Monomial { terms: out }
    }

    /// The squarefree product of the given variables.
    pub fn product_of<I: IntoIterator<Item = u32>>(vars: I) -> Self {
        Self::from_exponents(vars.into_iter().map(|v| (v, 1)))
    }

    pub fn from_variables<I>(universe: &Universe, vars: I) -> Result<Self, IdealError>
    where
        I: IntoIterator<Item = Variable>,
    {
        let idx = vars
            .into_iter()
            .map(|v| universe.require(v).map(|i| (i, 1)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_exponents(idx))
    }

    pub fn terms(&self) -> &[(u32, u32)] {
        &self.terms
    }

    pub fn exponent(&self, idx: u32) -> u32 {
        self.terms
            .binary_search_by_key(&idx, |&(v, _)| v)
            .map(|p| self.terms[p].1)
            .unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.terms.iter().all(|&(_, e)| e == 1)
    }

    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.terms.iter().map(|&(v, _)| v)
    }

    pub fn max_index(&self) -> Option<u32> {
        self.terms.last().map(|&(v, _)| v)
    }

    /// A 64-bit fingerprint of the support; `a | b` implies
    /// `a.support_mask() & !b.support_mask() == 0`.
    pub(crate) fn support_mask(&self) -> u64 {
        self.terms.iter().fold(0u64, |m, &(v, _)| m | 1 << (v % 64))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        if self.terms.len() > other.terms.len() {
            return false;
        }
        let mut it = other.terms.iter();
        'outer: for &(v, e) in &self.terms {
            for &(w, f) in it.by_ref() {
                match w.cmp(&v) {
                    Ordering::Less => continue,
                    Ordering::Equal if f >= e => continue 'outer,
                    _ => return false,
                }
            }
            return false;
        }
        true
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.terms[i].0.cmp(&other.terms[j].0) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return false,
            }
        }
        true
    }

    /// Merges the two term lists, combining shared exponents with `both`.
    fn merge(&self, other: &Monomial, both: impl Fn(u32, u32) -> u32, keep_left: bool, keep_right: bool) -> Monomial {
        let (a, b) = (&self.terms, &other.terms);
        let mut out: Terms = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    if keep_left {
                        out.push(a[i]);
                    }
                    i += 1;
                }
                Ordering::Greater => {
                    if keep_right {
                        out.push(b[j]);
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let e = both(a[i].1, b[j].1);
                    if e > 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        if keep_left {
            out.extend_from_slice(&a[i..]);
        }
        if keep_right {
            out.extend_from_slice(&b[j..]);
        }
        Monomial { terms: out }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.merge(other, |x, y| x + y, true, true)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.merge(other, u32::max, true, true)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.merge(other, u32::min, false, false)
    }

    /// `self / gcd(self, other)`: the generator of `(self) : (other)`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        self.merge(other, |x, y| x.saturating_sub(y), true, false)
    }

    /// Exact quotient, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| self.colon(other))
    }

    pub fn pow(&self, q: u32) -> Monomial {
        if q == 0 {
            return Monomial::one();
        }
        Monomial {
            terms: self.terms.iter().map(|&(v, e)| (v, e * q)).collect(),
        }
    }

    /// Sum of the exponents over the variables in `vars` (sorted, deduplicated).
    pub fn weight_on(&self, vars: &[u32]) -> u32 {
        let (mut i, mut j, mut s) = (0, 0, 0);
        while i < self.terms.len() && j < vars.len() {
            match self.terms[i].0.cmp(&vars[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => {
                    s += self.terms[i].1;
                    i += 1;
                    j += 1;
                }
            }
        }
        s
    }

    /// Canonical text form over `universe`, e.g. `x[1,2]^2*Y[1,1]`.
    pub fn display<'a>(&'a self, universe: &'a Universe) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, universe }
    }

    /// Parses the canonical text form; `1` is the unit monomial.
    pub fn parse(universe: &Universe, s: &str) -> Result<Monomial, IdealError> {
        let s = s.trim();
        if s == "1" {
            return Ok(Monomial::one());
        }
        let mut pairs = Vec::new();
        for factor in s.split('*') {
            let (base, exp) = match factor.split_once('^') {
                Some((b, e)) => {
                    let e: u32 = e
                        .trim()
                        .parse()
                        .map_err(|_| IdealError::Parse(format!("bad exponent in `{factor}`")))?;
                    (b, e)
                }
                None => (factor, 1),
            };
            let v: Variable = base.parse()?;
            pairs.push((universe.require(v)?, exp));
        }
        Ok(Monomial::from_exponents(pairs))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.terms.cmp(&other.terms))
    }
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    universe: &'a Universe,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return f.write_str("1");
        }
        for (k, &(v, e)) in self.mono.terms.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "{}", self.universe.variable(v))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
