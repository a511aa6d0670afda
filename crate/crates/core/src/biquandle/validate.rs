use std::fmt;

use super::{BiquandleError, Family, OperationTables};

/// The three exchange laws, evaluated pointwise on every `x`:
///
/// * `(iii.i)`   `α_{α_a(b)} α_a = α_{β_b(a)} α_b`
/// * `(iii.ii)`  `β_{α_a(b)} α_a = α_{β_b(a)} β_b`
/// * `(iii.iii)` `β_{β_a(b)} β_a = β_{α_b(a)} β_b`
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExchangeLaw {
    AlphaAlpha,
    BetaAlpha,
    BetaBeta,
}

impl ExchangeLaw {
    pub fn label(self) -> &'static str {
        match self {
            ExchangeLaw::AlphaAlpha => "(iii.i)",
            ExchangeLaw::BetaAlpha => "(iii.ii)",
            ExchangeLaw::BetaBeta => "(iii.iii)",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// A column of a table is not a permutation.
    NotBijective { family: Family, column: usize },
    /// Axiom (i): `α_a(a) ≠ β_a(a)`.
    Fixedness { a: usize },
    /// Axiom (ii): `S(a, b) = (α_a(b), β_b(a))` takes the same value on two pairs.
    NotInvertible {
        first: (usize, usize),
        second: (usize, usize),
    },
    /// Axiom (iii): an exchange law fails at `(a, b)`, witnessed by `x`.
    Exchange {
        law: ExchangeLaw,
        a: usize,
        b: usize,
        x: usize,
    },
}

impl Violation {
    pub fn axiom(&self) -> &'static str {
        match self {
            Violation::NotBijective { .. } => "bijectivity",
            Violation::Fixedness { .. } => "(i)",
            Violation::NotInvertible { .. } => "(ii)",
            Violation::Exchange { law, .. } => law.label(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotBijective { family, column } => {
                let symbol = match family {
                    Family::Beta => 'β',
                    Family::Alpha => 'α',
                };
                write!(f, "bijectivity: {symbol}_{column} is not a bijection (column {column} of the {family} block)")
            }
            Violation::Fixedness { a } => write!(f, "axiom (i): α_{a}({a}) ≠ β_{a}({a})"),
            Violation::NotInvertible { first, second } => write!(
                f,
                "axiom (ii): S{first:?} = S{second:?}, so S is not invertible"
            ),
            Violation::Exchange { law, a, b, x } => write!(
                f,
                "axiom {}: fails for a={a}, b={b} (at x={x})",
                law.label()
            ),
        }
    }
}

/// Outcome of [`validate`]: every axiom violation found, in a fixed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub order: usize,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violated_axioms(&self) -> Vec<&'static str> {
        let mut axioms: Vec<_> = self.violations.iter().map(Violation::axiom).collect();
        axioms.dedup();
        axioms
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "ok: biquandle of order {}", self.order);
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks column bijectivity and axioms (i) to (iii), reporting every violation.
///
/// Tables with entries outside `{1..n}` or the wrong shape are rejected
/// with an error before any axiom is evaluated.
pub fn validate(tables: &OperationTables) -> Result<ValidationReport, BiquandleError> {
    let n = tables.check_shape()?;
    let beta = |b: usize, x: usize| tables.beta[b - 1][x - 1];
    let alpha = |b: usize, x: usize| tables.alpha[b - 1][x - 1];
    let mut violations = Vec::new();

    for (family, table) in [(Family::Beta, &tables.beta), (Family::Alpha, &tables.alpha)] {
        for (j, column) in table.iter().enumerate() {
            let mut seen = vec![false; n];
            if column.iter().any(|&v| std::mem::replace(&mut seen[v - 1], true)) {
                violations.push(Violation::NotBijective {
                    family,
                    column: j + 1,
                });
            }
        }
    }

    for a in 1..=n {
        if alpha(a, a) != beta(a, a) {
            violations.push(Violation::Fixedness { a });
        }
    }

    let mut preimage: Vec<Option<(usize, usize)>> = vec![None; n * n];
    for a in 1..=n {
        for b in 1..=n {
            let image = (alpha(a, b) - 1) * n + (beta(b, a) - 1);
            match preimage[image] {
                None => preimage[image] = Some((a, b)),
                Some(first) => violations.push(Violation::NotInvertible {
                    first,
                    second: (a, b),
                }),
            }
        }
    }

    for law in [ExchangeLaw::AlphaAlpha, ExchangeLaw::BetaAlpha, ExchangeLaw::BetaBeta] {
        for a in 1..=n {
            for b in 1..=n {
                let failing = (1..=n).find(|&x| match law {
                    ExchangeLaw::AlphaAlpha => {
                        alpha(alpha(a, b), alpha(a, x)) != alpha(beta(b, a), alpha(b, x))
                    }
                    ExchangeLaw::BetaAlpha => {
                        beta(alpha(a, b), alpha(a, x)) != alpha(beta(b, a), beta(b, x))
                    }
                    ExchangeLaw::BetaBeta => {
                        beta(beta(a, b), beta(a, x)) != beta(alpha(b, a), beta(b, x))
                    }
                });
                if let Some(x) = failing {
                    violations.push(Violation::Exchange { law, a, b, x });
                }
            }
        }
    }

    Ok(ValidationReport {
        order: n,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn identity_tables(n: usize) -> OperationTables {
        let id: Vec<usize> = (1..=n).collect();
        OperationTables {
            beta: vec![id.clone(); n],
            alpha: vec![id; n],
        }
    }

    #[test]
    fn trivial_tables_pass() {
        let report = validate(&identity_tables(3)).unwrap();
        assert!(report.is_valid());
        assert_eq!(report.to_string(), "ok: biquandle of order 3");
    }

    #[test]
    fn transposed_beta_column_is_named() {
        // β_2 = (12), everything else the identity on {1, 2}
        let mut tables = identity_tables(2);
        tables.beta[1] = vec![2, 1];
        let report = validate(&tables).unwrap();
        let axioms = report.violated_axioms();
        assert!(
            axioms.contains(&"(i)") || axioms.iter().any(|a| a.starts_with("(iii")),
            "{report}"
        );
        // β_2(2) = 1 but α_2(2) = 2
        assert!(report.violations.contains(&Violation::Fixedness { a: 2 }));
    }

    #[test]
    fn reports_all_violations() {
        let mut tables = identity_tables(3);
        tables.beta[0] = vec![1, 1, 3];
        tables.alpha[2] = vec![2, 1, 3];
        let report = validate(&tables).unwrap();
        let bij: Vec<_> = report
            .violations
            .iter()
            .filter(|v| matches!(v, Violation::NotBijective { .. }))
            .collect();
        assert_eq!(bij.len(), 1);
        assert!(report.violations.len() > 2);
    }

    #[test]
    fn malformed_tables_error_before_checks() {
        let mut tables = identity_tables(2);
        tables.alpha[0][1] = 5;
        assert!(matches!(validate(&tables), Err(BiquandleError::OutOfRange { .. })));
        tables.alpha[0] = vec![1];
        assert!(matches!(validate(&tables), Err(BiquandleError::Shape { .. })));
    }
}
