use super::{BiquandleError, OperationTables};

/// Parses the `n × 2n` block matrix without checking the axioms.
///
/// One row per line, entries separated by whitespace, an optional `|`
/// between column `n` and `n + 1`. `#` starts a comment; blank lines are
/// ignored.
pub fn parse_tables(text: &str) -> Result<OperationTables, BiquandleError> {
    let mut rows: Vec<(usize, Vec<usize>)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut entries = Vec::new();
        let mut separator_at = None;
        for token in line.replace('|', " | ").split_whitespace() {
            if token == "|" {
                if separator_at.is_some() {
                    return Err(BiquandleError::Separator { line: line_no });
                }
                separator_at = Some(entries.len());
                continue;
            }
            let value: usize = token.parse().map_err(|_| BiquandleError::NotInteger {
                line: line_no,
                token: token.to_string(),
            })?;
            entries.push(value);
        }
        if entries.len() % 2 != 0 && rows.is_empty() {
            return Err(BiquandleError::OddRow {
                line: line_no,
                found: entries.len(),
            });
        }
        if let Some((_, first)) = rows.first() {
            if entries.len() != first.len() {
                return Err(BiquandleError::Ragged {
                    line: line_no,
                    expected: first.len(),
                    found: entries.len(),
                });
            }
        }
        if let Some(at) = separator_at {
            if at * 2 != entries.len() {
                return Err(BiquandleError::Separator { line: line_no });
            }
        }
        rows.push((line_no, entries));
    }
    let Some((_, first)) = rows.first() else {
        return Err(BiquandleError::Empty);
    };
    let n = first.len() / 2;
    if rows.len() != n {
        return Err(BiquandleError::RowCount {
            expected: n,
            found: rows.len(),
        });
    }
    let mut beta = vec![vec![0; n]; n];
    let mut alpha = vec![vec![0; n]; n];
    for (i, (_, row)) in rows.iter().enumerate() {
        for j in 0..n {
            beta[j][i] = row[j];
            alpha[j][i] = row[n + j];
        }
    }
    let tables = OperationTables { beta, alpha };
    tables.check_shape()?;
    Ok(tables)
}

pub(super) fn serialize(tables: &OperationTables) -> String {
    let n = tables.order();
    let width = n.to_string().len();
    let mut out = String::new();
    for i in 0..n {
        let cell = |col: &Vec<usize>| format!("{:>width$}", col[i]);
        let beta: Vec<String> = tables.beta.iter().map(cell).collect();
        let alpha: Vec<String> = tables.alpha.iter().map(cell).collect();
        out.push_str(&beta.join(" "));
        out.push_str(" | ");
        out.push_str(&alpha.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::{validate, Biquandle, Family};
    use super::*;

    const ORDER3: &str = "\
# three-element biquandle
2 1 3 | 2 2 2
1 3 2 | 3 3 3
3 2 1 | 1 1 1
";

    #[test]
    fn reads_columns_as_actions() {
        let b = Biquandle::parse_matrix(ORDER3).unwrap();
        let col = |f, j| b.column(f, j).unwrap().to_string();
        assert_eq!(col(Family::Beta, 1), "(12)");
        assert_eq!(col(Family::Beta, 2), "(23)");
        assert_eq!(col(Family::Beta, 3), "(13)");
        for j in 1..=3 {
            assert_eq!(col(Family::Alpha, j), "(123)");
        }
    }

    #[test]
    fn separator_is_optional() {
        let plain = ORDER3.replace('|', " ");
        assert_eq!(parse_tables(&plain).unwrap(), parse_tables(ORDER3).unwrap());
    }

    #[test]
    fn serialize_normalizes_whitespace() {
        let messy = "2   1 3|2 2 2\n\n1 3 2 | 3 3 3   # row two\n3 2 1 | 1 1 1";
        let b = Biquandle::parse_matrix(messy).unwrap();
        assert_eq!(b.serialize_matrix(), ORDER3.lines().skip(1).collect::<Vec<_>>().join("\n") + "\n");
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(
            parse_tables("1 2 | 1 1\n2 1 | 2"),
            Err(BiquandleError::Ragged { line: 2, .. })
        ));
        assert!(matches!(
            parse_tables("1 x | 1 1\n2 1 | 2 2"),
            Err(BiquandleError::NotInteger { line: 1, .. })
        ));
        assert!(matches!(
            parse_tables("1 2 1 | 1\n2 1 2 | 2"),
            Err(BiquandleError::Separator { .. })
        ));
        assert!(matches!(
            parse_tables("1 3 | 1 1\n2 1 | 2 2"),
            Err(BiquandleError::OutOfRange { value: 3, .. })
        ));
        assert!(matches!(parse_tables("1 2 1"), Err(BiquandleError::OddRow { found: 3, .. })));
        assert!(matches!(
            parse_tables("1 2 | 1 1"),
            Err(BiquandleError::RowCount { expected: 2, found: 1 })
        ));
        assert!(matches!(parse_tables("# nothing\n"), Err(BiquandleError::Empty)));
    }

    #[test]
    fn repeated_entry_fails_bijectivity() {
        let text = "2 1 3 | 2 2 2\n2 3 2 | 3 3 3\n3 2 1 | 1 1 1";
        let tables = parse_tables(text).unwrap();
        let report = validate(&tables).unwrap();
        assert!(!report.is_valid());
        assert!(report.to_string().contains("β_1 is not a bijection"));
        assert!(matches!(
            Biquandle::parse_matrix(text),
            Err(BiquandleError::Axioms(_))
        ));
    }
}
