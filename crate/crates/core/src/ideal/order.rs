//! Term orders on `K[X, Y]`.
//!
//! * `RevLexX` is degree reverse lexicographic with the variable ranking
//!   `x[m,n] > x[m,n-1] > … > x[m,1] > x[m-1,n] > … > x[1,1]`, every `Y`
//!   ranked above every `x` (`Y` row-major ascending). On `x`-monomials this
//!   is the order under which the antidiagonal products are the lead terms
//!   of the maximal minors.
//! * `Order1` compares the `Y`-parts lexicographically under
//!   `Y[1,1] > Y[2,2] > … > Y[g,g] > remaining Y`, and breaks ties with
//!   `RevLexX` on the `x`-parts.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use super::{Monomial, Universe};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderKind {
    RevLexX,
    Order1,
}

/// Ranking of the off-diagonal `Y` variables inside `Order1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum RemainingYOrder {
    /// `Y[1,2] > Y[1,3] > … > Y[2,1] > Y[2,3] > …`
    #[default]
    RowMajor,
    /// `Y[2,1] > Y[3,1] > … > Y[1,2] > Y[3,2] > …`
    ColumnMajor,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermOrder {
    kind: OrderKind,
    universe: Universe,
    remaining: RemainingYOrder,
    x_len: u32,
    /// Lex rank of each `Y` variable (by `Y` offset); larger is bigger.
    y_rank: Vec<u32>,
}

impl TermOrder {
    pub fn new(kind: OrderKind, universe: Universe) -> Self {
        Self::with_remaining(kind, universe, RemainingYOrder::default())
    }

    pub fn rev_lex_x(universe: Universe) -> Self {
        Self::new(OrderKind::RevLexX, universe)
    }

    pub fn order1(universe: Universe) -> Self {
        Self::new(OrderKind::Order1, universe)
    }

    pub fn with_remaining(kind: OrderKind, universe: Universe, remaining: RemainingYOrder) -> Self {
        let (xr, xc) = universe.x_shape();
        let (yr, yc) = universe.y_shape();
        let x_len = xr * xc;
        let total = yr * yc;
        let diag = yr.min(yc);
        let mut y_rank = vec![0u32; total as usize];
        for j in 0..diag {
            y_rank[(j * yc + j) as usize] = total - 1 - j;
        }
        let off_diag: Vec<(u32, u32)> = match remaining {
            RemainingYOrder::RowMajor => (0..yr).flat_map(|i| (0..yc).map(move |j| (i, j))).collect(),
            RemainingYOrder::ColumnMajor => (0..yc).flat_map(|j| (0..yr).map(move |i| (i, j))).collect(),
        };
        let mut next = total - diag;
        for (i, j) in off_diag.into_iter().filter(|(i, j)| i != j) {
            next -= 1;
            y_rank[(i * yc + j) as usize] = next;
        }
        TermOrder {
            kind,
            universe,
            remaining,
            x_len,
            y_rank,
        }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn remaining(&self) -> RemainingYOrder {
        self.remaining
    }

    /// Whether universe variable `a` ranks above variable `b`.
    pub fn variable_greater(&self, a: u32, b: u32) -> bool {
        self.compare(&Monomial::var(a), &Monomial::var(b)) == Ordering::Greater
    }

    pub fn compare(&self, u: &Monomial, v: &Monomial) -> Ordering {
        match self.kind {
            OrderKind::RevLexX => graded_rev_lex(u.terms(), v.terms()),
            OrderKind::Order1 => {
                let split = |m: &Monomial| m.terms().partition_point(|&(i, _)| i < self.x_len);
                let (su, sv) = (split(u), split(v));
                self.y_lex(&u.terms()[su..], &v.terms()[sv..])
                    .then_with(|| graded_rev_lex(&u.terms()[..su], &v.terms()[..sv]))
            }
        }
    }

    fn y_lex(&self, a: &[(u32, u32)], b: &[(u32, u32)]) -> Ordering {
        let ranked = |t: &[(u32, u32)]| -> SmallVec<[(u32, u32); 8]> {
            let mut r: SmallVec<[(u32, u32); 8]> = t
                .iter()
                .map(|&(i, e)| (self.y_rank[(i - self.x_len) as usize], e))
                .collect();
            r.sort_unstable_by_key(|p| std::cmp::Reverse(p.0));
            r
        };
        let (ra, rb) = (ranked(a), ranked(b));
        for (p, q) in ra.iter().zip(rb.iter()) {
            if p.0 != q.0 {
                return p.0.cmp(&q.0);
            }
            if p.1 != q.1 {
                return p.1.cmp(&q.1);
            }
        }
        ra.len().cmp(&rb.len())
    }

    /// Sorts monomials from largest to smallest.
    pub fn sort_descending(&self, monos: &mut [Monomial]) {
        monos.sort_by(|a, b| self.compare(b, a));
    }

    pub fn max<'a, I: IntoIterator<Item = &'a Monomial>>(&self, monos: I) -> Option<&'a Monomial> {
        monos.into_iter().max_by(|a, b| self.compare(a, b))
    }
}

/// Degree first, then reverse lexicographic with rank equal to the index:
/// at the lowest-ranked variable where the exponents differ, the larger
/// exponent makes the monomial smaller.
fn graded_rev_lex(a: &[(u32, u32)], b: &[(u32, u32)]) -> Ordering {
    let deg = |t: &[(u32, u32)]| t.iter().map(|&(_, e)| e).sum::<u32>();
    deg(a).cmp(&deg(b)).then_with(|| {
        for (p, q) in a.iter().zip(b.iter()) {
            if p.0 != q.0 {
                // the one holding the lower variable has the larger exponent there
                return if p.0 < q.0 { Ordering::Less } else { Ordering::Greater };
            }
            if p.1 != q.1 {
                return q.1.cmp(&p.1);
            }
        }
        // equal degree and one list is a prefix: impossible unless equal
        a.len().cmp(&b.len()).reverse()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::Variable;

    fn var(u: &Universe, v: Variable) -> Monomial {
        Monomial::var(u.index_of(v).unwrap())
    }

    #[test]
    fn diagonal_y_leads_order1() {
        let u = Universe::new(2, 3, 2, 3);
        let o = TermOrder::order1(u);
        assert_eq!(o.compare(&var(&u, Variable::y(1, 1)), &var(&u, Variable::y(2, 2))), Ordering::Greater);
        assert_eq!(o.compare(&var(&u, Variable::y(2, 2)), &var(&u, Variable::y(1, 2))), Ordering::Greater);
        assert_eq!(o.compare(&var(&u, Variable::y(1, 2)), &var(&u, Variable::y(1, 3))), Ordering::Greater);
        assert_eq!(o.compare(&var(&u, Variable::y(1, 3)), &var(&u, Variable::y(2, 1))), Ordering::Greater);
        assert_eq!(o.compare(&var(&u, Variable::y(2, 3)), &var(&u, Variable::x(2, 3))), Ordering::Greater);
    }

    #[test]
    fn column_major_remaining() {
        let u = Universe::new(2, 3, 2, 3);
        let o = TermOrder::with_remaining(OrderKind::Order1, u, RemainingYOrder::ColumnMajor);
        assert_eq!(o.compare(&var(&u, Variable::y(2, 1)), &var(&u, Variable::y(1, 2))), Ordering::Greater);
    }

    #[test]
    fn rev_lex_ranking() {
        let u = Universe::new(2, 3, 0, 0);
        let o = TermOrder::rev_lex_x(u);
        assert_eq!(o.compare(&var(&u, Variable::x(2, 3)), &var(&u, Variable::x(1, 1))), Ordering::Greater);
        // lead term of the minor x11*x22 - x12*x21 is the antidiagonal
        let diag = var(&u, Variable::x(1, 1)).mul(&var(&u, Variable::x(2, 2)));
        let anti = var(&u, Variable::x(1, 2)).mul(&var(&u, Variable::x(2, 1)));
        assert_eq!(o.compare(&anti, &diag), Ordering::Greater);
    }

    #[test]
    fn unit_is_minimal() {
        let u = Universe::new(2, 3, 2, 3);
        for kind in [OrderKind::RevLexX, OrderKind::Order1] {
            let o = TermOrder::new(kind, u);
            for i in 0..u.len() as u32 {
                assert_eq!(o.compare(&Monomial::one(), &Monomial::var(i)), Ordering::Less);
            }
        }
    }
}
