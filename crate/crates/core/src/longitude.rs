//! Biquandle longitude weights and the invariants built from them.
//!
//! Walking a colored diagram from tail to head, each pass contributes the
//! bijection `β_L^{j·k}` (or `α_L^{j·k}`), where `j` is the crossing sign,
//! `k` is `+1` going under and `−1` going over, and `L` is the color seen on
//! the right. The weight of the coloring is the composite `P_1 ∘ P_2 ∘ … ∘ P_2c`
//! of the pass bijections, with the first pass as the outermost factor.

use std::fmt;

use rayon::prelude::*;

use crate::algebra::{AffineMap, CountPolynomial, Permutation};
use crate::biquandle::{Biquandle, Family};
use crate::coloring::{alexander_colorings, enumerate_colorings, Coloring, ColoringError, CountingMatrix};
use crate::knotoid::{KnotoidDiagram, Role, Sign};

/// A longitude weight together with the family it was computed from.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LongitudeWeight {
    pub family: Family,
    pub permutation: Permutation,
}

impl LongitudeWeight {
    /// The order of the permutation.
    pub fn exponent(&self) -> u64 {
        self.permutation.order()
    }
}

impl fmt::Display for LongitudeWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.permutation.fmt(f)
    }
}

fn check_pass(diagram: &KnotoidDiagram, pass: usize) -> Result<(), ColoringError> {
    if pass >= diagram.passes().len() {
        return Err(ColoringError::PassIndex {
            index: pass,
            passes: diagram.passes().len(),
        });
    }
    Ok(())
}

/// Semiarc whose color is seen on the right at `pass` (zero-based).
///
/// Going under, this is the over strand's source semiarc; going over, the
/// under strand's source semiarc.
fn seen_semiarc(diagram: &KnotoidDiagram, pass: usize) -> usize {
    let p = diagram.passes()[pass];
    let crossing = diagram.crossing(p.crossing);
    match (p.role, p.sign) {
        (Role::Under, Sign::Positive) => crossing.over,
        (Role::Under, Sign::Negative) => crossing.over + 1,
        (Role::Over, Sign::Positive) => crossing.under + 1,
        (Role::Over, Sign::Negative) => crossing.under,
    }
}

/// Color seen on the right at `pass` (zero-based) under the coloring `f`.
pub fn seen_color(diagram: &KnotoidDiagram, pass: usize, f: &Coloring) -> Result<usize, ColoringError> {
    check_pass(diagram, pass)?;
    Ok(f.colors()[seen_semiarc(diagram, pass)])
}

/// `j·k` for a pass: `+1` under a positive or over a negative crossing.
fn pass_exponent(diagram: &KnotoidDiagram, pass: usize) -> i64 {
    let p = diagram.passes()[pass];
    let k = match p.role {
        Role::Under => 1,
        Role::Over => -1,
    };
    p.sign.value() * k
}

/// The bijection contributed by one pass.
pub fn pass_weight(
    diagram: &KnotoidDiagram,
    pass: usize,
    f: &Coloring,
    biquandle: &Biquandle,
    family: Family,
) -> Result<Permutation, ColoringError> {
    let label = seen_color(diagram, pass, f)?;
    Ok(biquandle.column(family, label)?.pow(pass_exponent(diagram, pass)))
}

fn weight_unchecked(diagram: &KnotoidDiagram, f: &Coloring, biquandle: &Biquandle, family: Family) -> Permutation {
    let mut acc = Permutation::identity(biquandle.order());
    for pass in 0..diagram.passes().len() {
        let label = f.colors()[seen_semiarc(diagram, pass)];
        let step = biquandle.column0(family, label - 1).pow(pass_exponent(diagram, pass));
        acc = acc.compose_unchecked(&step);
    }
    acc
}

/// Longitude weight of a colored diagram.
pub fn blw(
    diagram: &KnotoidDiagram,
    f: &Coloring,
    biquandle: &Biquandle,
    family: Family,
) -> Result<Permutation, ColoringError> {
    if !f.is_valid(diagram, biquandle)? {
        return Err(ColoringError::NotAColoring);
    }
    Ok(weight_unchecked(diagram, f, biquandle, family))
}

/// Per-coloring `(coloring, β weight, α weight)`, in coloring order.
fn weighted_colorings(diagram: &KnotoidDiagram, biquandle: &Biquandle) -> Vec<(Coloring, Permutation, Permutation)> {
    enumerate_colorings(diagram, biquandle)
        .into_par_iter()
        .map(|f| {
            let beta = weight_unchecked(diagram, &f, biquandle, Family::Beta);
            let alpha = weight_unchecked(diagram, &f, biquandle, Family::Alpha);
            (f, beta, alpha)
        })
        .collect()
}

fn family_weights(diagram: &KnotoidDiagram, biquandle: &Biquandle, family: Family) -> Vec<(Coloring, Permutation)> {
    enumerate_colorings(diagram, biquandle)
        .into_par_iter()
        .map(|f| {
            let w = weight_unchecked(diagram, &f, biquandle, family);
            (f, w)
        })
        .collect()
}

/// One weight per coloring, sorted.
pub fn longitude_multiset(diagram: &KnotoidDiagram, biquandle: &Biquandle, family: Family) -> Vec<LongitudeWeight> {
    let mut out: Vec<LongitudeWeight> = family_weights(diagram, biquandle, family)
        .into_iter()
        .map(|(_, permutation)| LongitudeWeight { family, permutation })
        .collect();
    out.sort();
    out
}

/// `Σ u^{exp}` over colorings, `exp` the order of the weight.
pub fn ble_polynomial(diagram: &KnotoidDiagram, biquandle: &Biquandle, family: Family) -> CountPolynomial {
    let exponents = family_weights(diagram, biquandle, family)
        .into_iter()
        .map(|(_, w)| [w.order()]);
    CountPolynomial::from_multiset(1, exponents).expect("one exponent per term")
}

/// `Σ u^{exp β} v^{exp α}` over colorings.
pub fn ble2_polynomial(diagram: &KnotoidDiagram, biquandle: &Biquandle) -> CountPolynomial {
    let exponents = weighted_colorings(diagram, biquandle)
        .into_iter()
        .map(|(_, b, a)| [b.order(), a.order()]);
    CountPolynomial::from_multiset(2, exponents).expect("two exponents per term")
}

/// `(β weight, α weight)` per coloring, sorted.
pub fn longitude_pair_multiset(diagram: &KnotoidDiagram, biquandle: &Biquandle) -> Vec<(Permutation, Permutation)> {
    let mut out: Vec<_> = weighted_colorings(diagram, biquandle)
        .into_iter()
        .map(|(_, b, a)| (b, a))
        .collect();
    out.sort();
    out
}

/// Longitude weight of a coloring by `alexander(n, t, s)`, composed as an
/// affine map of `Z_n`.
pub fn alexander_longitude(
    diagram: &KnotoidDiagram,
    f: &Coloring,
    n: u64,
    t: i64,
    s: i64,
    family: Family,
) -> Result<AffineMap, ColoringError> {
    let biquandle = Biquandle::alexander(n as usize, t, s)?;
    if !f.is_valid(diagram, &biquandle)? {
        return Err(ColoringError::NotAColoring);
    }
    Ok(alexander_weight(diagram, f, n, t, s, family))
}

fn alexander_weight(diagram: &KnotoidDiagram, f: &Coloring, n: u64, t: i64, s: i64, family: Family) -> AffineMap {
    let m = n as i64;
    let mut acc = AffineMap::identity(n);
    for pass in 0..diagram.passes().len() {
        let label = (f.colors()[seen_semiarc(diagram, pass)] as i64) % m;
        let map = match family {
            Family::Beta => AffineMap::new(n, t, (s - t) * label),
            Family::Alpha => AffineMap::new(n, s, 0),
        }
        .expect("parameters are units");
        acc = acc
            .compose(&map.pow(pass_exponent(diagram, pass)))
            .expect("same modulus");
    }
    acc
}

/// Alexander longitude of every coloring, sorted.
pub fn alexander_longitude_multiset(
    diagram: &KnotoidDiagram,
    n: u64,
    t: i64,
    s: i64,
    family: Family,
) -> Result<Vec<AffineMap>, ColoringError> {
    let mut out: Vec<AffineMap> = alexander_colorings(diagram, n, t, s)?
        .par_iter()
        .map(|f| alexander_weight(diagram, f, n, t, s, family))
        .collect();
    out.sort();
    Ok(out)
}

/// An `n × n` grid of polynomials indexed by (initial color, terminal color).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolynomialMatrix {
    pub entries: Vec<Vec<CountPolynomial>>,
}

impl PolynomialMatrix {
    fn zero(n: usize, variables: usize) -> Self {
        PolynomialMatrix {
            entries: vec![vec![CountPolynomial::zero(variables); n]; n],
        }
    }

    pub fn order(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, row: usize, column: usize) -> &CountPolynomial {
        &self.entries[row - 1][column - 1]
    }

    /// Every entry evaluated with all variables set to 1.
    pub fn at_ones(&self) -> CountingMatrix {
        let entries = self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|p| u64::try_from(p.total()).expect("count fits in u64"))
                    .collect()
            })
            .collect();
        CountingMatrix { entries }
    }

    /// Sum of all entries.
    pub fn sum(&self) -> CountPolynomial {
        let variables = self.entries.first().and_then(|r| r.first()).map_or(1, |p| p.variables());
        self.entries
            .iter()
            .flatten()
            .fold(CountPolynomial::zero(variables), |acc, p| acc.add(p).expect("same variables"))
    }
}

impl fmt::Display for PolynomialMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|p| p.to_string()).collect())
            .collect();
        let columns = cells.first().map_or(0, Vec::len);
        let widths: Vec<usize> = (0..columns)
            .map(|c| cells.iter().map(|row| row[c].chars().count()).max().unwrap_or(0))
            .collect();
        for row in &cells {
            let padded: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(cell, &w)| format!("{cell:<w$}"))
                .collect();
            writeln!(f, "{}", padded.join("  ").trim_end())?;
        }
        Ok(())
    }
}

/// Entry `(j, k)` is `Σ u^{exp}` over colorings from color `j` to color `k`.
pub fn ble_matrix(diagram: &KnotoidDiagram, biquandle: &Biquandle, family: Family) -> PolynomialMatrix {
    let mut m = PolynomialMatrix::zero(biquandle.order(), 1);
    for (f, w) in family_weights(diagram, biquandle, family) {
        m.entries[f.initial() - 1][f.terminal() - 1]
            .add_monomial(&[w.order()], 1u32.into())
            .expect("one exponent");
    }
    m
}

/// Entry `(j, k)` is `Σ u^{exp β} v^{exp α}` over colorings from `j` to `k`.
pub fn ble2_matrix(diagram: &KnotoidDiagram, biquandle: &Biquandle) -> PolynomialMatrix {
    let mut m = PolynomialMatrix::zero(biquandle.order(), 2);
    for (f, b, a) in weighted_colorings(diagram, biquandle) {
        m.entries[f.initial() - 1][f.terminal() - 1]
            .add_monomial(&[b.order(), a.order()], 1u32.into())
            .expect("two exponents");
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::biquandle::GroupTable;
    use crate::knotoid::{KinkOrder, R2Variant};

    const ORDER4_EXPONENT: &str = "\
1 2 1 4 | 1 1 1 1
2 4 4 1 | 4 4 4 4
3 3 3 3 | 3 3 3 3
4 1 2 2 | 2 2 2 2
";
    const ORDER4_PAIR: &str = "\
2 2 2 2 | 2 3 1 4
1 1 1 1 | 4 1 3 2
4 4 4 4 | 3 2 4 1
3 3 3 3 | 1 4 2 3
";
    const ORDER4_MATRIX: &str = "\
3 1 2 4 | 3 3 3 3
4 2 1 3 | 2 2 2 2
1 3 4 2 | 4 4 4 4
2 4 3 1 | 1 1 1 1
";

    fn d(code: &str) -> KnotoidDiagram {
        code.parse().unwrap()
    }

    fn two_one() -> KnotoidDiagram {
        d("O1+ U2+ U1+ O2+")
    }

    #[test]
    fn seen_colors_along_traversal() {
        let k = d("U1- O2- O1- U2-");
        let f = Coloring::new(vec![1, 1, 2, 4, 5]);
        let seen: Vec<usize> = (0..4).map(|p| seen_color(&k, p, &f).unwrap()).collect();
        assert_eq!(seen, [4, 4, 1, 2]);
        assert!(seen_color(&k, 4, &f).is_err());
        let b = Biquandle::alexander(5, 2, 3).unwrap();
        let first = pass_weight(&k, 0, &f, &b, Family::Beta).unwrap();
        assert_eq!(first, b.column(Family::Beta, 4).unwrap().inverse());
    }

    #[test]
    fn z5_weights_and_affine_form() {
        let k = d("U1- O2- O1- U2-");
        let b = Biquandle::alexander(5, 2, 3).unwrap();
        let f = Coloring::new(vec![1, 1, 2, 4, 5]);
        let w = blw(&k, &f, &b, Family::Beta).unwrap();
        let affine = alexander_longitude(&k, &f, 5, 2, 3, Family::Beta).unwrap();
        assert_eq!(affine.to_string(), "x+4");
        assert_eq!(affine.to_permutation(), w);
        let multiset: Vec<String> = longitude_multiset(&k, &b, Family::Beta).iter().map(|w| w.to_string()).collect();
        let mut expected = vec!["(12345)", "(13524)", "(14253)", "(15432)", "()"];
        expected.sort();
        let mut got = multiset.clone();
        got.sort();
        assert_eq!(got, expected);
        assert_eq!(ble_polynomial(&k, &b, Family::Beta).to_string(), "u + 4u^5");
        assert!(blw(&k, &Coloring::new(vec![1, 2, 3, 4, 5]), &b, Family::Beta).is_err());
    }

    #[test]
    fn two_one_golden_values() {
        let b = Biquandle::parse_matrix(ORDER4_EXPONENT).unwrap();
        assert_eq!(ble_polynomial(&two_one(), &b, Family::Beta).to_string(), "2u + 2u^3");
        let b = Biquandle::parse_matrix(ORDER4_PAIR).unwrap();
        assert_eq!(ble2_polynomial(&two_one(), &b).to_string(), "4uv^2");
        let b = Biquandle::parse_matrix(ORDER4_MATRIX).unwrap();
        let m = ble2_matrix(&two_one(), &b);
        let diagonal = ["u^2v", "uv", "u^2v", "u^2v"];
        for j in 1..=4 {
            for k in 1..=4 {
                let expected = if j == k { diagonal[j - 1] } else { "0" };
                assert_eq!(m.get(j, k).to_string(), expected);
            }
        }
    }

    #[test]
    fn alexander_z3_separates_two_one_from_trivial() {
        let show = |v: Vec<AffineMap>| v.iter().map(|m| m.to_string()).collect::<Vec<_>>();
        let got = alexander_longitude_multiset(&two_one(), 3, 1, 2, Family::Beta).unwrap();
        assert_eq!(show(got), ["x", "x+1", "x+2"]);
        let trivial = alexander_longitude_multiset(&KnotoidDiagram::trivial(), 3, 1, 2, Family::Beta).unwrap();
        assert_eq!(show(trivial), ["x", "x", "x"]);
    }

    #[test]
    fn trivial_knotoid() {
        let b = Biquandle::parse_matrix(ORDER4_PAIR).unwrap();
        let t = KnotoidDiagram::trivial();
        assert_eq!(ble_polynomial(&t, &b, Family::Alpha).to_string(), "4u");
        let pairs = longitude_pair_multiset(&t, &b);
        assert_eq!(pairs.len(), 4);
        assert!(pairs.iter().all(|(x, y)| x.is_identity() && y.is_identity()));
        let m = ble2_matrix(&t, &b);
        for j in 1..=4 {
            assert_eq!(m.get(j, j).to_string(), "uv");
        }
        assert_eq!(m.at_ones().total(), 4);
    }

    #[test]
    fn quandle_alpha_weights_are_trivial() {
        let q = Biquandle::conjugation_quandle(&GroupTable::symmetric(3), 1);
        let k = d("O1+ U2- U1+ O3- U3- O2-");
        assert!(longitude_multiset(&k, &q, Family::Alpha).iter().all(|w| w.permutation.is_identity()));
        assert!(ble2_polynomial(&k, &q).terms().all(|(e, _)| e[1] == 1));
    }

    #[test]
    fn matrices_are_consistent() {
        let b = Biquandle::parse_matrix(ORDER4_MATRIX).unwrap();
        for code in ["U1- O2- O1- U2-", "O1+ U2+ U1+ O2+", "O1+ U2- U1+ O3- U3- O2-"] {
            let k = d(code);
            let m = ble2_matrix(&k, &b);
            assert_eq!(m.at_ones(), crate::coloring::counting_matrix(&k, &b));
            assert_eq!(m.sum(), ble2_polynomial(&k, &b));
            assert_eq!(ble_matrix(&k, &b, Family::Beta).sum(), ble_polynomial(&k, &b, Family::Beta));
            assert_eq!(ble2_polynomial(&k, &b).specialize_last(), ble_polynomial(&k, &b, Family::Beta));
        }
    }

    #[test]
    fn weights_survive_moves() {
        let b = Biquandle::parse_matrix(ORDER4_PAIR).unwrap();
        let k = two_one();
        let base = longitude_pair_multiset(&k, &b);
        for pos in 0..=4 {
            for sign in [Sign::Positive, Sign::Negative] {
                for order in [KinkOrder::OverUnder, KinkOrder::UnderOver] {
                    let moved = k.r1_insert(pos, sign, order).unwrap();
                    assert_eq!(longitude_pair_multiset(&moved, &b), base, "{moved}");
                }
                for pb in pos..=4 {
                    for v in R2Variant::ALL {
                        let moved = k.r2_insert(pos, pb, v, sign).unwrap();
                        assert_eq!(longitude_pair_multiset(&moved, &b), base, "{moved}");
                    }
                }
            }
        }
    }
}
