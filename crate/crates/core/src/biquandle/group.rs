use crate::algebra::Permutation;

use super::BiquandleError;

/// A finite group given by its multiplication table on `{1..n}`, with
/// `1` as the identity. `rows[a - 1][b - 1] = a·b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    n: usize,
    // zero-based products, index a * n + b
    product: Vec<usize>,
    inverse: Vec<usize>,
}

impl GroupTable {
    /// Checks closure, identity `1`, inverses and associativity.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, BiquandleError> {
        let n = rows.len();
        if n == 0 {
            return Err(BiquandleError::Empty);
        }
        let mut product = Vec::with_capacity(n * n);
        for (a, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(BiquandleError::NotAGroup(format!(
                    "row {} has {} entries, expected {n}",
                    a + 1,
                    row.len()
                )));
            }
            for &v in row {
                if v == 0 || v > n {
                    return Err(BiquandleError::NotAGroup(format!(
                        "entry {v} is outside 1..={n}"
                    )));
                }
                product.push(v - 1);
            }
        }
        let mul = |a: usize, b: usize| product[a * n + b];
        for a in 0..n {
            if mul(0, a) != a || mul(a, 0) != a {
                return Err(BiquandleError::NotAGroup(
                    "element 1 is not a two-sided identity".into(),
                ));
            }
        }
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| mul(a, b) == 0 && mul(b, a) == 0)
                .ok_or_else(|| BiquandleError::NotAGroup(format!("element {} has no inverse", a + 1)))?;
            inverse.push(inv);
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        return Err(BiquandleError::NotAGroup(format!(
                            "({0}·{1})·{2} ≠ {0}·({1}·{2})",
                            a + 1,
                            b + 1,
                            c + 1
                        )));
                    }
                }
            }
        }
        Ok(GroupTable {
            n,
            product,
            inverse,
        })
    }

    /// `Z_n` with element `k` standing for the residue `k − 1`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group needs a positive order");
        let rows = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n + 1).collect())
            .collect();
        Self::new(rows).expect("Z_n is a group")
    }

    /// The symmetric group `S_k`, elements numbered in lexicographic order of
    /// their image tables (so the identity is `1`).
    pub fn symmetric(k: usize) -> Self {
        let elements = Permutation::all(k);
        let index = |p: &Permutation| elements.iter().position(|q| q == p).unwrap() + 1;
        let rows = elements
            .iter()
            .map(|a| {
                elements
                    .iter()
                    .map(|b| index(&a.compose(b).unwrap()))
                    .collect()
            })
            .collect();
        Self::new(rows).expect("S_k is a group")
    }

    /// Direct product; the pair `(g, h)` is numbered `(g − 1)·|H| + h`.
    pub fn product(g: &GroupTable, h: &GroupTable) -> Self {
        let m = h.n;
        let rows = (0..g.n * m)
            .map(|x| {
                (0..g.n * m)
                    .map(|y| {
                        let a = g.product[(x / m) * g.n + y / m];
                        let b = h.product[(x % m) * m + y % m];
                        a * m + b + 1
                    })
                    .collect()
            })
            .collect();
        Self::new(rows).expect("direct product of groups is a group")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.product[(a - 1) * self.n + (b - 1)] + 1
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a - 1] + 1
    }

    pub fn pow(&self, a: usize, m: i64) -> usize {
        let base = if m < 0 { self.inverse(a) } else { a };
        (0..m.unsigned_abs()).fold(1, |acc, _| self.mul(acc, base))
    }
}
