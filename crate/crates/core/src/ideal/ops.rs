use std::fmt;

#[allow(unused_imports)]
use crate::par::prelude::*;
use crate::par::{par_into_iter, par_iter};

use super::{IdealError, Monomial, Universe};

/// Caps on intermediate generator counts for the expensive operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_generators: usize,
}

impl Limits {
    pub const fn unbounded() -> Self {
        Limits { max_generators: usize::MAX }
    }

    pub const fn new(max_generators: usize) -> Self {
        Limits { max_generators }
    }

    pub(crate) fn check(&self, operation: &'static str, estimate: usize) -> Result<(), IdealError> {
        if estimate > self.max_generators {
            Err(IdealError::TooLarge {
                operation,
                estimate,
                limit: self.max_generators,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits::unbounded()
    }
}

/// A monomial ideal given by its minimal generators.
///
/// The generator list is a divisibility antichain kept in canonical order
/// (degree, then term list). The zero ideal has no generators; the unit
/// ideal is generated by `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    universe: Universe,
    gens: Vec<Monomial>,
}

/// Reduces `gens` to the divisibility antichain generating the same ideal.
///
/// Candidates are processed in degree layers; a candidate can only be
/// divided by a strictly smaller-degree survivor once duplicates are gone.
pub(crate) fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_unstable();
    gens.dedup();
    if gens.first().is_some_and(Monomial::is_one) {
        return vec![Monomial::one()];
    }
    let mut kept: Vec<(u64, Monomial)> = Vec::with_capacity(gens.len());
    let mut start = 0;
    while start < gens.len() {
        let deg = gens[start].degree();
        let end = start + gens[start..].iter().take_while(|g| g.degree() == deg).count();
        let layer: Vec<Monomial> = gens[start..end].to_vec();
        let survivors: Vec<(u64, Monomial)> = par_into_iter!(layer)
            .filter_map(|c| {
                let cm = c.support_mask();
                let divided = kept.iter().any(|(km, k)| km & !cm == 0 && k.divides(&c));
                (!divided).then_some((cm, c))
            })
            .collect();
        kept.extend(survivors);
        start = end;
    }
    kept.into_iter().map(|(_, g)| g).collect()
}

impl MonomialIdeal {
    /// `reduce_minimal`: the ideal generated by `gens`, minimalized.
    pub fn new<I>(universe: Universe, gens: I) -> Result<Self, IdealError>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        let len = universe.len();
        for g in &gens {
            if let Some(index) = g.max_index().filter(|&i| i as usize >= len) {
                return Err(IdealError::IndexOutOfRange { index, len });
            }
        }
        Ok(MonomialIdeal {
            universe,
            gens: minimalize(gens),
        })
    }

    pub(crate) fn from_minimal(universe: Universe, gens: Vec<Monomial>) -> Self {
        debug_assert_eq!(minimalize(gens.clone()), gens);
        MonomialIdeal { universe, gens }
    }

    pub(crate) fn from_minimal_unsorted(universe: Universe, mut gens: Vec<Monomial>) -> Self {
        gens.sort_unstable();
        MonomialIdeal::from_minimal(universe, gens)
    }

    pub fn zero(universe: Universe) -> Self {
        MonomialIdeal { universe, gens: Vec::new() }
    }

    pub fn unit(universe: Universe) -> Self {
        MonomialIdeal {
            universe,
            gens: vec![Monomial::one()],
        }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(Monomial::is_one)
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Sorted indices of the variables occurring in some generator.
    pub fn support(&self) -> Vec<u32> {
        let mut s: Vec<u32> = self.gens.iter().flat_map(|g| g.support()).collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    /// The product of every variable of the universe.
    pub fn all_variables_product(&self) -> Monomial {
        Monomial::product_of(0..self.universe.len() as u32)
    }

    fn same_universe(&self, other: &MonomialIdeal) -> Result<(), IdealError> {
        if self.universe == other.universe {
            Ok(())
        } else {
            Err(IdealError::UniverseMismatch {
                left: self.universe,
                right: other.universe,
            })
        }
    }

    fn check_monomial(&self, u: &Monomial) -> Result<(), IdealError> {
        match u.max_index() {
            Some(index) if index as usize >= self.universe.len() => Err(IdealError::IndexOutOfRange {
                index,
                len: self.universe.len(),
            }),
            _ => Ok(()),
        }
    }

    /// True iff some generator divides `u`.
    pub fn contains(&self, u: &Monomial) -> bool {
        let um = u.support_mask();
        self.gens
            .iter()
            .any(|g| g.support_mask() & !um == 0 && g.divides(u))
    }

    /// `contains`, rejecting monomials from outside the universe.
    pub fn try_contains(&self, u: &Monomial) -> Result<bool, IdealError> {
        self.check_monomial(u)?;
        Ok(self.contains(u))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, IdealError> {
        self.same_universe(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(MonomialIdeal {
            universe: self.universe,
            gens: minimalize(gens),
        })
    }

    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, IdealError> {
        self.multiply_bounded(other, Limits::unbounded())
    }

    pub fn multiply_bounded(&self, other: &MonomialIdeal, limits: Limits) -> Result<MonomialIdeal, IdealError> {
        self.same_universe(other)?;
        limits.check("product", self.gens.len().saturating_mul(other.gens.len()))?;
        let gens: Vec<Monomial> = par_iter!(&self.gens)
            .flat_map_iter(|a| other.gens.iter().map(move |b| a.mul(b)))
            .collect();
        Ok(MonomialIdeal {
            universe: self.universe,
            gens: minimalize(gens),
        })
    }

    /// `self^s` by iterated multiplication; `self^0` is the unit ideal.
    pub fn power(&self, s: u32) -> MonomialIdeal {
        self.power_bounded(s, Limits::unbounded())
            .expect("unbounded power cannot fail")
    }

    pub fn power_bounded(&self, s: u32, limits: Limits) -> Result<MonomialIdeal, IdealError> {
        let mut acc = MonomialIdeal::unit(self.universe);
        for _ in 0..s {
            acc = acc.multiply_bounded(self, limits)?;
        }
        Ok(acc)
    }

    /// `W^[q]`, generated by the `q`-th powers of the minimal generators.
    pub fn bracket_power(&self, q: u32) -> Result<MonomialIdeal, IdealError> {
        if q == 0 {
            return Err(IdealError::Argument("bracket power exponent must be positive".into()));
        }
        // q-th powers of an antichain stay an antichain
        let gens = self.gens.iter().map(|g| g.pow(q)).collect();
        Ok(MonomialIdeal::from_minimal(self.universe, gens))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, IdealError> {
        self.intersect_bounded(other, Limits::unbounded())
    }

    pub fn intersect_bounded(&self, other: &MonomialIdeal, limits: Limits) -> Result<MonomialIdeal, IdealError> {
        self.same_universe(other)?;
        limits.check("intersection", self.gens.len().saturating_mul(other.gens.len()))?;
        let gens: Vec<Monomial> = par_iter!(&self.gens)
            .flat_map_iter(|a| other.gens.iter().map(move |b| a.lcm(b)))
            .collect();
        Ok(MonomialIdeal {
            universe: self.universe,
            gens: minimalize(gens),
        })
    }

    /// `W : (v)`, generated by `w / gcd(w, v)`.
    pub fn colon_monomial(&self, v: &Monomial) -> Result<MonomialIdeal, IdealError> {
        self.check_monomial(v)?;
        let gens = self.gens.iter().map(|w| w.colon(v)).collect();
        Ok(MonomialIdeal {
            universe: self.universe,
            gens: minimalize(gens),
        })
    }

    /// `W : V`, the intersection of `W : v` over the generators of `V`.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, IdealError> {
        self.colon_bounded(other, Limits::unbounded())
    }

    pub fn colon_bounded(&self, other: &MonomialIdeal, limits: Limits) -> Result<MonomialIdeal, IdealError> {
        self.same_universe(other)?;
        if other.is_zero() {
            return Err(IdealError::Argument("colon by the zero ideal is undefined here".into()));
        }
        let mut acc: Option<MonomialIdeal> = None;
        for v in &other.gens {
            let part = self.colon_monomial(v)?;
            acc = Some(match acc {
                None => part,
                Some(a) => a.intersect_bounded(&part, limits)?,
            });
        }
        Ok(acc.expect("nonzero ideal has a generator"))
    }

    /// Membership `u ∈ self : other` without building the colon ideal.
    pub fn colon_contains(&self, other: &MonomialIdeal, u: &Monomial) -> Result<bool, IdealError> {
        self.same_universe(other)?;
        self.check_monomial(u)?;
        if other.is_zero() {
            return Err(IdealError::Argument("colon by the zero ideal is undefined here".into()));
        }
        Ok(par_iter!(&other.gens).all(|v| self.contains(&u.mul(v))))
    }

    /// Inclusion `self ⊆ other`, generator by generator.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.universe == other.universe && par_iter!(&self.gens).all(|g| other.contains(g))
    }

    pub fn display(&self) -> IdealDisplay<'_> {
        IdealDisplay(self)
    }
}

pub struct IdealDisplay<'a>(&'a MonomialIdeal);

impl fmt::Display for IdealDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ideal = self.0;
        if ideal.is_zero() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (k, g) in ideal.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", g.display(&ideal.universe))?;
        }
        f.write_str(")")
    }
}
