use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::IdealError;

/// Which matrix of indeterminates a variable belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    X,
    Y,
}

/// A grid-indexed indeterminate `x[i,j]` or `Y[i,j]`, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Variable {
    pub family: Family,
    pub row: u32,
    pub col: u32,
}

impl Variable {
    pub const fn x(row: u32, col: u32) -> Self {
        Variable { family: Family::X, row, col }
    }

    pub const fn y(row: u32, col: u32) -> Self {
        Variable { family: Family::Y, row, col }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.family {
            Family::X => 'x',
            Family::Y => 'Y',
        };
        write!(f, "{letter}[{},{}]", self.row, self.col)
    }
}

impl FromStr for Variable {
    type Err = IdealError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || IdealError::Parse(format!("not a variable: `{s}`"));
        let s = s.trim();
        let family = match s.chars().next() {
            Some('x') => Family::X,
            Some('Y') => Family::Y,
            _ => return Err(bad()),
        };
        let inner = s[1..]
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(bad)?;
        let (r, c) = inner.split_once(',').ok_or_else(bad)?;
        let row: u32 = r.trim().parse().map_err(|_| bad())?;
        let col: u32 = c.trim().parse().map_err(|_| bad())?;
        if row == 0 || col == 0 {
            return Err(bad());
        }
        Ok(Variable { family, row, col })
    }
}

/// The ordered variable set of a polynomial ring `K[X, Y]`.
///
/// Variables are laid out as the `x_rows × x_cols` grid of `x[i,j]` in
/// row-major order, followed by the `y_rows × y_cols` grid of `Y[i,j]`.
/// Monomials refer to variables by their position in this list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Universe {
    x_rows: u32,
    x_cols: u32,
    y_rows: u32,
    y_cols: u32,
}

impl Universe {
    pub fn new(x_rows: u32, x_cols: u32, y_rows: u32, y_cols: u32) -> Self {
        Universe { x_rows, x_cols, y_rows, y_cols }
    }

    /// A universe of `x` variables only.
    pub fn x_grid(rows: u32, cols: u32) -> Self {
        Self::new(rows, cols, 0, 0)
    }

    pub fn x_shape(&self) -> (u32, u32) {
        (self.x_rows, self.x_cols)
    }

    pub fn y_shape(&self) -> (u32, u32) {
        (self.y_rows, self.y_cols)
    }

    fn x_len(&self) -> usize {
        self.x_rows as usize * self.x_cols as usize
    }

    /// Total number of variables.
    pub fn len(&self) -> usize {
        self.x_len() + self.y_rows as usize * self.y_cols as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn index_of(&self, v: Variable) -> Option<u32> {
        match v.family {
            Family::X => (v.row >= 1 && v.row <= self.x_rows && v.col >= 1 && v.col <= self.x_cols)
                .then(|| (v.row - 1) * self.x_cols + (v.col - 1)),
            Family::Y => (v.row >= 1 && v.row <= self.y_rows && v.col >= 1 && v.col <= self.y_cols)
                .then(|| self.x_len() as u32 + (v.row - 1) * self.y_cols + (v.col - 1)),
        }
    }

    /// Index of `v`, or an error naming the variable and this universe.
    pub fn require(&self, v: Variable) -> Result<u32, IdealError> {
        self.index_of(v).ok_or_else(|| IdealError::UnknownVariable {
            variable: v.to_string(),
            universe: *self,
        })
    }

    pub fn variable(&self, idx: u32) -> Variable {
        let idx = idx as usize;
        assert!(idx < self.len(), "variable index {idx} out of range");
        let xl = self.x_len();
        if idx < xl {
            let c = self.x_cols as usize;
            Variable::x((idx / c) as u32 + 1, (idx % c) as u32 + 1)
        } else {
            let k = idx - xl;
            let c = self.y_cols as usize;
            Variable::y((k / c) as u32 + 1, (k % c) as u32 + 1)
        }
    }

    pub fn variables(&self) -> impl Iterator<Item = Variable> + '_ {
        (0..self.len() as u32).map(|i| self.variable(i))
    }
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "X {}x{}, Y {}x{}",
            self.x_rows, self.x_cols, self.y_rows, self.y_cols
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_form_round_trips() {
        for v in [Variable::x(1, 2), Variable::y(3, 10)] {
            assert_eq!(v.to_string().parse::<Variable>().unwrap(), v);
        }
        assert_eq!(Variable::x(1, 2).to_string(), "x[1,2]");
        assert!("z[1,1]".parse::<Variable>().is_err());
        assert!("x[0,1]".parse::<Variable>().is_err());
        assert!("x[1 1]".parse::<Variable>().is_err());
    }

    #[test]
    fn indices_are_dense_and_x_first() {
        let u = Universe::new(2, 3, 2, 3);
        assert_eq!(u.len(), 12);
        let all: Vec<_> = u.variables().collect();
        assert_eq!(all[0], Variable::x(1, 1));
        assert_eq!(all[5], Variable::x(2, 3));
        assert_eq!(all[6], Variable::y(1, 1));
        for (i, v) in all.iter().enumerate() {
            assert_eq!(u.index_of(*v), Some(i as u32));
        }
        assert_eq!(u.index_of(Variable::x(3, 1)), None);
        assert_eq!(u.index_of(Variable::y(1, 4)), None);
    }
}
