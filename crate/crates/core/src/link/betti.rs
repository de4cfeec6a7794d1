//! Closed-form graded Betti numbers of the generic link of an ideal with a
//! `d`-linear resolution, height `g`, linked by forms of degree `d + 1`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use super::{LinkError, LinkInstance};

/// `C(n, k)`, exact; panics on overflow.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial overflows u64")
}

/// `β_{i,j}` of the quotient by the link, indexed by homological degree
/// `i` and internal degree `j`. Absent entries are zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    d: u32,
    g: u32,
    entries: BTreeMap<(u32, u32), u64>,
}

impl BettiTable {
    pub fn for_instance(inst: &LinkInstance) -> Result<Self, LinkError> {
        Self::from_parameters(inst.m(), inst.g())
    }

    pub fn from_parameters(d: u32, g: u32) -> Result<Self, LinkError> {
        if d == 0 || g == 0 {
            return Err(LinkError::Argument("degree and height must be positive".into()));
        }
        let mut entries = BTreeMap::new();
        entries.insert((0, 0), 1);
        let mut add = |i: u32, j: u32, v: u64| {
            if v > 0 {
                *entries.entry((i, j)).or_insert(0) += v;
            }
        };
        for i in 1..=g {
            let tail = d * g - d + i;
            if i + 1 == g {
                add(i, tail, Self::quotient_betti(d, g, 2)? + g as u64);
            } else {
                add(i, tail, Self::quotient_betti(d, g, g - i + 1)?);
            }
            if i + 1 < g {
                add(i, d * i + i, binomial(g as u64, i as u64));
            }
        }
        Ok(BettiTable { d, g, entries })
    }

    /// `b_s = ∏_{t ≠ s} (d + t - 1) / |t - s|`, the Betti numbers of the
    /// ideal being linked; the division is checked to be exact.
    pub fn quotient_betti(d: u32, g: u32, s: u32) -> Result<u64, LinkError> {
        if !(1..=g).contains(&s) {
            return Err(LinkError::Argument(format!("index {s} outside 1..={g}")));
        }
        let overflow = || LinkError::Argument(format!("b_{s} overflows for d={d}, g={g}"));
        let mut num: u128 = 1;
        let mut den: u128 = 1;
        for t in (1..=g).filter(|&t| t != s) {
            num = num.checked_mul((d + t - 1) as u128).ok_or_else(overflow)?;
            den = den.checked_mul(t.abs_diff(s) as u128).ok_or_else(overflow)?;
        }
        if !num.is_multiple_of(den) {
            return Err(LinkError::Postcondition(format!("b_{s} = {num}/{den} is not an integer")));
        }
        u64::try_from(num / den).map_err(|_| overflow())
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn g(&self) -> u32 {
        self.g
    }

    pub fn get(&self, i: u32, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries in `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = ((u32, u32), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// Sum of `β_{i,j}` over `j`.
    pub fn total(&self, i: u32) -> u64 {
        self.entries.iter().filter(|((h, _), _)| *h == i).map(|(_, v)| v).sum()
    }

    /// `i,j,value` rows for the nonzero entries with `i >= 1`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,j,value\n");
        for ((i, j), v) in self.entries().filter(|((i, _), _)| *i > 0) {
            let _ = writeln!(out, "{i},{j},{v}");
        }
        out
    }

    /// Table with columns `i` and rows `j - i`, zeros shown as `.`.
    pub fn pretty(&self) -> String {
        let max_i = self.entries.keys().map(|k| k.0).max().unwrap_or(0);
        let max_row = self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0);
        let cell = |v: u64| if v == 0 { ".".to_string() } else { v.to_string() };
        let width = self
            .entries
            .values()
            .map(|v| v.to_string().len())
            .chain((0..=max_i).map(|i| self.total(i).to_string().len()))
            .max()
            .unwrap_or(1);
        let label_w = "total:".len().max(max_row.to_string().len() + 1);
        let mut out = String::new();
        let _ = write!(out, "{:>label_w$}", "");
        for i in 0..=max_i {
            let _ = write!(out, " {i:>width$}");
        }
        out.push('\n');
        let _ = write!(out, "{:>label_w$}", "total:");
        for i in 0..=max_i {
            let _ = write!(out, " {:>width$}", self.total(i));
        }
        out.push('\n');
        for row in 0..=max_row {
            let _ = write!(out, "{:>label_w$}", format!("{row}:"));
            for i in 0..=max_i {
                let _ = write!(out, " {:>width$}", cell(self.get(i, i + row)));
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(4, 0), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(20, 10), 184_756);
    }

    #[test]
    fn two_four() {
        let t = BettiTable::for_instance(&LinkInstance::new(2, 4).unwrap()).unwrap();
        let nonzero: Vec<_> = t.entries().filter(|((i, _), _)| *i > 0).collect();
        assert_eq!(nonzero, vec![((1, 3), 3), ((1, 5), 3), ((2, 6), 11), ((3, 7), 6)]);
        assert_eq!(t.to_csv(), "i,j,value\n1,3,3\n1,5,3\n2,6,11\n3,7,6\n");
        let pretty = t.pretty();
        assert!(pretty.contains("total:  1  6 11  6"), "{pretty}");
    }

    #[test]
    fn one_two() {
        let t = BettiTable::for_instance(&LinkInstance::new(1, 2).unwrap()).unwrap();
        assert_eq!(t.get(1, 2), 3);
        assert_eq!(t.get(2, 3), 2);
        assert_eq!(t.total(1), 3);
    }

    #[test]
    fn top_quotient_betti_is_binomial() {
        for m in 1..=5u32 {
            for n in m..=9 {
                let g = n - m + 1;
                assert_eq!(
                    BettiTable::quotient_betti(m, g, g).unwrap(),
                    binomial((n - 1) as u64, (m - 1) as u64)
                );
            }
        }
    }
}
