//! Finite biquandles on `{1..n}`.
//!
//! A biquandle is stored as two operation tables, `β` and `α`, laid out
//! column-as-action: column `b` of the `β` block lists `β_b(1), …, β_b(n)`.
//! The text form is the `n × 2n` block matrix `[β_1 … β_n | α_1 … α_n]`.

mod group;
mod matrix;
mod validate;

use std::fmt;

pub use group::GroupTable;
pub use matrix::parse_tables;
pub use validate::{validate, ExchangeLaw, ValidationReport, Violation};

use crate::algebra::{mod_inverse, Permutation};

/// Which of the two action families to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Beta,
    Alpha,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Beta => "beta",
            Family::Alpha => "alpha",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Family {
    type Err = BiquandleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "beta" | "β" | "b" => Ok(Family::Beta),
            "alpha" | "α" | "a" => Ok(Family::Alpha),
            other => Err(BiquandleError::UnknownFamily(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BiquandleError {
    #[error("biquandle must have at least one element")]
    Empty,
    #[error("line {line}: expected {expected} entries, found {found}")]
    Ragged {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: a row needs 2n entries, found {found}")]
    OddRow { line: usize, found: usize },
    #[error("line {line}: {token:?} is not a positive integer")]
    NotInteger { line: usize, token: String },
    #[error("line {line}: misplaced '|' separator (must sit between the β and α blocks)")]
    Separator { line: usize },
    #[error("expected {expected} rows, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error("{family} table entry at row {row}, column {column} is {value}, outside 1..={n}")]
    OutOfRange {
        family: Family,
        row: usize,
        column: usize,
        value: usize,
        n: usize,
    },
    #[error("table shape does not match order {n}")]
    Shape { n: usize },
    #[error("not a biquandle:\n{0}")]
    Axioms(ValidationReport),
    #[error("{value} is not a unit mod {modulus}")]
    NotAUnit { value: i64, modulus: usize },
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("index {index} is outside 1..={n}")]
    Index { index: usize, n: usize },
    #[error("unknown action family {0:?} (expected beta or alpha)")]
    UnknownFamily(String),
}

/// Raw operation tables, not yet checked against the axioms.
///
/// `beta[b - 1][x - 1] = β_b(x)` and likewise for `alpha`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperationTables {
    pub beta: Vec<Vec<usize>>,
    pub alpha: Vec<Vec<usize>>,
}

impl OperationTables {
    pub fn order(&self) -> usize {
        self.beta.len()
    }

    pub(crate) fn check_shape(&self) -> Result<usize, BiquandleError> {
        let n = self.beta.len();
        if n == 0 {
            return Err(BiquandleError::Empty);
        }
        if self.alpha.len() != n
            || self.beta.iter().chain(&self.alpha).any(|c| c.len() != n)
        {
            return Err(BiquandleError::Shape { n });
        }
        for (family, table) in [(Family::Beta, &self.beta), (Family::Alpha, &self.alpha)] {
            for (col, column) in table.iter().enumerate() {
                for (row, &value) in column.iter().enumerate() {
                    if value == 0 || value > n {
                        return Err(BiquandleError::OutOfRange {
                            family,
                            row: row + 1,
                            column: col + 1,
                            value,
                            n,
                        });
                    }
                }
            }
        }
        Ok(n)
    }
}

/// A validated finite biquandle.
#[derive(Clone, PartialEq, Eq)]
pub struct Biquandle {
    n: usize,
    // zero-based, index b * n + x
    beta: Vec<usize>,
    alpha: Vec<usize>,
    beta_inv: Vec<usize>,
    alpha_inv: Vec<usize>,
}

fn flatten(table: &[Vec<usize>]) -> Vec<usize> {
    table.iter().flat_map(|c| c.iter().map(|&v| v - 1)).collect()
}

fn invert_columns(flat: &[usize], n: usize) -> Vec<usize> {
    let mut inv = vec![0; flat.len()];
    for b in 0..n {
        for x in 0..n {
            inv[b * n + flat[b * n + x]] = x;
        }
    }
    inv
}

impl Biquandle {
    /// Checks the axioms and builds the biquandle.
    pub fn new(tables: OperationTables) -> Result<Self, BiquandleError> {
        let report = validate(&tables)?;
        if !report.is_valid() {
            return Err(BiquandleError::Axioms(report));
        }
        Ok(Self::from_valid_tables(&tables))
    }

    fn from_valid_tables(tables: &OperationTables) -> Self {
        let n = tables.order();
        let beta = flatten(&tables.beta);
        let alpha = flatten(&tables.alpha);
        Biquandle {
            n,
            beta_inv: invert_columns(&beta, n),
            alpha_inv: invert_columns(&alpha, n),
            beta,
            alpha,
        }
    }

    /// Parses the block-matrix text form and validates it.
    pub fn parse_matrix(text: &str) -> Result<Self, BiquandleError> {
        Self::new(parse_tables(text)?)
    }

    /// Block-matrix text form, one row per line with `|` between the blocks.
    pub fn serialize_matrix(&self) -> String {
        matrix::serialize(&self.tables())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn tables(&self) -> OperationTables {
        let n = self.n;
        let unflatten = |flat: &[usize]| -> Vec<Vec<usize>> {
            flat.chunks(n).map(|c| c.iter().map(|&v| v + 1).collect()).collect()
        };
        OperationTables {
            beta: unflatten(&self.beta),
            alpha: unflatten(&self.alpha),
        }
    }

    fn check_index(&self, index: usize) -> Result<(), BiquandleError> {
        if index == 0 || index > self.n {
            Err(BiquandleError::Index { index, n: self.n })
        } else {
            Ok(())
        }
    }

    /// `β_b(x)` or `α_b(x)`.
    pub fn action(&self, family: Family, b: usize, x: usize) -> Result<usize, BiquandleError> {
        self.check_index(b)?;
        self.check_index(x)?;
        Ok(self.act0(family, b - 1, x - 1) + 1)
    }

    /// The unique `y` with `action(family, b, y) = x`.
    pub fn inverse_action(&self, family: Family, b: usize, x: usize) -> Result<usize, BiquandleError> {
        self.check_index(b)?;
        self.check_index(x)?;
        Ok(self.act_inv0(family, b - 1, x - 1) + 1)
    }

    /// The bijection `β_b` or `α_b` as a permutation.
    pub fn column(&self, family: Family, b: usize) -> Result<Permutation, BiquandleError> {
        self.check_index(b)?;
        Ok(self.column0(family, b - 1))
    }

    pub(crate) fn column0(&self, family: Family, b: usize) -> Permutation {
        let table = match family {
            Family::Beta => &self.beta,
            Family::Alpha => &self.alpha,
        };
        Permutation::from_zero_based(table[b * self.n..(b + 1) * self.n].to_vec())
    }

    #[inline]
    pub(crate) fn act0(&self, family: Family, b: usize, x: usize) -> usize {
        match family {
            Family::Beta => self.beta[b * self.n + x],
            Family::Alpha => self.alpha[b * self.n + x],
        }
    }

    #[inline]
    pub(crate) fn act_inv0(&self, family: Family, b: usize, x: usize) -> usize {
        match family {
            Family::Beta => self.beta_inv[b * self.n + x],
            Family::Alpha => self.alpha_inv[b * self.n + x],
        }
    }

    /// True when every `α_b` is the identity.
    pub fn is_quandle(&self) -> bool {
        (0..self.n).all(|b| (0..self.n).all(|x| self.alpha[b * self.n + x] == x))
    }

    /// Alexander biquandle on `Z_n`: `α_b(a) = s·a`, `β_b(a) = t·a + (s − t)·b`.
    /// The residue 0 is written as `n`.
    pub fn alexander(n: usize, t: i64, s: i64) -> Result<Self, BiquandleError> {
        if n == 0 {
            return Err(BiquandleError::Empty);
        }
        let m = n as i64;
        for value in [t, s] {
            if mod_inverse(value.rem_euclid(m) as u64, n as u64).is_none() {
                return Err(BiquandleError::NotAUnit { value, modulus: n });
            }
        }
        let t = t.rem_euclid(m);
        let s = s.rem_euclid(m);
        let to_element = |r: i64| -> usize {
            let r = r.rem_euclid(m) as usize;
            if r == 0 {
                n
            } else {
                r
            }
        };
        let mut beta = vec![vec![0; n]; n];
        let mut alpha = vec![vec![0; n]; n];
        for b in 1..=n {
            for a in 1..=n {
                let (ai, bi) = (a as i64, b as i64);
                beta[b - 1][a - 1] = to_element(t * ai + (s - t) * bi);
                alpha[b - 1][a - 1] = to_element(s * ai);
            }
        }
        Ok(Self::from_valid_tables(&OperationTables { beta, alpha }))
    }

    /// `α_b = β_b = σ` for every `b`.
    pub fn constant_action(sigma: &Permutation) -> Result<Self, BiquandleError> {
        let n = sigma.degree();
        if n == 0 {
            return Err(BiquandleError::Empty);
        }
        let column = sigma.images();
        let table = vec![column; n];
        Ok(Self::from_valid_tables(&OperationTables {
            beta: table.clone(),
            alpha: table,
        }))
    }

    /// `m`-fold conjugation quandle of a group: `β_b(a) = b^{-m} a b^m`.
    pub fn conjugation_quandle(group: &GroupTable, m: i64) -> Self {
        Self::quandle_from(group, |a, b| {
            let bm = group.pow(b, m);
            group.mul(group.mul(group.inverse(bm), a), bm)
        })
    }

    /// Core quandle of a group: `β_b(a) = b a^{-1} b`.
    pub fn core_quandle(group: &GroupTable) -> Self {
        Self::quandle_from(group, |a, b| group.mul(group.mul(b, group.inverse(a)), b))
    }

    fn quandle_from(group: &GroupTable, op: impl Fn(usize, usize) -> usize) -> Self {
        let n = group.order();
        let beta = (1..=n)
            .map(|b| (1..=n).map(|a| op(a, b)).collect())
            .collect();
        let alpha = vec![(1..=n).collect(); n];
        Self::from_valid_tables(&OperationTables { beta, alpha })
    }
}

impl fmt::Debug for Biquandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Biquandle(order {})\n{}", self.n, self.serialize_matrix())
    }
}
