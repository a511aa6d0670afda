//! A uniform interface over all invariants, with canonical text forms and
//! partitioning of a corpus by invariant value.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::algebra::{AffineMap, CountPolynomial, Permutation};
use crate::biquandle::{Biquandle, Family};
use crate::coloring::{counting_invariant, counting_matrix, ColoringError, CountingMatrix};
use crate::corpus::CorpusEntry;
use crate::knotoid::KnotoidDiagram;
use crate::longitude::{
    alexander_longitude_multiset, ble2_matrix, ble2_polynomial, ble_matrix, ble_polynomial, longitude_multiset,
    longitude_pair_multiset, PolynomialMatrix,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InvariantKind {
    Count,
    CountMatrix,
    Longitude,
    Ble,
    Ble2,
    LongitudePairs,
    AlexanderLongitude,
    BleMatrix,
    Ble2Matrix,
}

impl InvariantKind {
    pub const ALL: [InvariantKind; 9] = [
        InvariantKind::Count,
        InvariantKind::CountMatrix,
        InvariantKind::Longitude,
        InvariantKind::Ble,
        InvariantKind::Ble2,
        InvariantKind::LongitudePairs,
        InvariantKind::AlexanderLongitude,
        InvariantKind::BleMatrix,
        InvariantKind::Ble2Matrix,
    ];

    pub fn name(self) -> &'static str {
        match self {
            InvariantKind::Count => "count",
            InvariantKind::CountMatrix => "count-matrix",
            InvariantKind::Longitude => "longitude",
            InvariantKind::Ble => "ble",
            InvariantKind::Ble2 => "ble2",
            InvariantKind::LongitudePairs => "longitude-pairs",
            InvariantKind::AlexanderLongitude => "alexander-longitude",
            InvariantKind::BleMatrix => "ble-matrix",
            InvariantKind::Ble2Matrix => "ble2-matrix",
        }
    }

    /// Whether the `family` argument changes the result.
    pub fn uses_family(self) -> bool {
        matches!(
            self,
            InvariantKind::Longitude | InvariantKind::Ble | InvariantKind::AlexanderLongitude | InvariantKind::BleMatrix
        )
    }
}

impl fmt::Display for InvariantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InvariantKind {
    type Err = InvariantError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        InvariantKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| InvariantError::UnknownInvariant(s.to_string()))
    }
}

/// Parameters `(n, t, s)` of an Alexander biquandle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AlexanderParams {
    pub n: u64,
    pub t: i64,
    pub s: i64,
}

impl AlexanderParams {
    pub fn biquandle(&self) -> Result<Biquandle, ColoringError> {
        Ok(Biquandle::alexander(self.n as usize, self.t, self.s)?)
    }
}

impl FromStr for AlexanderParams {
    type Err = InvariantError;

    /// `n,t,s`
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let bad = || InvariantError::AlexanderSyntax(text.to_string());
        let parts: Vec<&str> = text.split(',').map(str::trim).collect();
        let [n, t, s] = parts.as_slice() else {
            return Err(bad());
        };
        Ok(AlexanderParams {
            n: n.parse().map_err(|_| bad())?,
            t: t.parse().map_err(|_| bad())?,
            s: s.parse().map_err(|_| bad())?,
        })
    }
}

impl fmt::Display for AlexanderParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.n, self.t, self.s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    #[error("unknown invariant {0:?}")]
    UnknownInvariant(String),
    #[error("{0} needs Alexander parameters n,t,s")]
    MissingAlexander(InvariantKind),
    #[error("expected Alexander parameters as n,t,s, got {0:?}")]
    AlexanderSyntax(String),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

/// Everything an invariant is computed against.
#[derive(Clone, Debug)]
pub struct InvariantContext {
    pub biquandle: Biquandle,
    pub alexander: Option<AlexanderParams>,
    pub family: Family,
}

impl InvariantContext {
    pub fn new(biquandle: Biquandle, family: Family) -> Self {
        InvariantContext {
            biquandle,
            alexander: None,
            family,
        }
    }

    pub fn alexander(params: AlexanderParams, family: Family) -> Result<Self, InvariantError> {
        Ok(InvariantContext {
            biquandle: params.biquandle()?,
            alexander: Some(params),
            family,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvariantValue {
    Count(u64),
    Matrix(CountingMatrix),
    Polynomial(CountPolynomial),
    Permutations(Vec<Permutation>),
    Pairs(Vec<(Permutation, Permutation)>),
    Affine(Vec<AffineMap>),
    PolynomialMatrix(PolynomialMatrix),
}

impl InvariantValue {
    pub fn compute(
        kind: InvariantKind,
        diagram: &KnotoidDiagram,
        context: &InvariantContext,
    ) -> Result<InvariantValue, InvariantError> {
        let b = &context.biquandle;
        let family = context.family;
        Ok(match kind {
            InvariantKind::Count => InvariantValue::Count(counting_invariant(diagram, b) as u64),
            InvariantKind::CountMatrix => InvariantValue::Matrix(counting_matrix(diagram, b)),
            InvariantKind::Longitude => InvariantValue::Permutations(
                longitude_multiset(diagram, b, family)
                    .into_iter()
                    .map(|w| w.permutation)
                    .collect(),
            ),
            InvariantKind::Ble => InvariantValue::Polynomial(ble_polynomial(diagram, b, family)),
            InvariantKind::Ble2 => InvariantValue::Polynomial(ble2_polynomial(diagram, b)),
            InvariantKind::LongitudePairs => InvariantValue::Pairs(longitude_pair_multiset(diagram, b)),
            InvariantKind::AlexanderLongitude => {
                let p = context.alexander.ok_or(InvariantError::MissingAlexander(kind))?;
                InvariantValue::Affine(alexander_longitude_multiset(diagram, p.n, p.t, p.s, family)?)
            }
            InvariantKind::BleMatrix => InvariantValue::PolynomialMatrix(ble_matrix(diagram, b, family)),
            InvariantKind::Ble2Matrix => InvariantValue::PolynomialMatrix(ble2_matrix(diagram, b)),
        })
    }

    /// Single-line text form; two values are equal iff their canonical
    /// forms are.
    pub fn canonical(&self) -> String {
        fn list<T: fmt::Display>(items: &[T]) -> String {
            items.iter().map(T::to_string).collect::<Vec<_>>().join(", ")
        }
        fn grid<T: fmt::Display>(rows: &[Vec<T>]) -> String {
            let rows: Vec<String> = rows.iter().map(|r| format!("[{}]", list(r))).collect();
            format!("[{}]", rows.join(", "))
        }
        match self {
            InvariantValue::Count(c) => c.to_string(),
            InvariantValue::Matrix(m) => grid(&m.entries),
            InvariantValue::Polynomial(p) => p.to_string(),
            InvariantValue::Permutations(ps) => format!("{{{}}}", list(ps)),
            InvariantValue::Pairs(ps) => {
                let items: Vec<String> = ps.iter().map(|(a, b)| format!("({a}, {b})")).collect();
                format!("{{{}}}", items.join(", "))
            }
            InvariantValue::Affine(ms) => format!("{{{}}}", list(ms)),
            InvariantValue::PolynomialMatrix(m) => grid(&m.entries),
        }
    }
}

impl fmt::Display for InvariantValue {
    /// Multi-line values (matrices) print as aligned grids.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantValue::Matrix(m) => write!(f, "{}", m.to_string().trim_end()),
            InvariantValue::PolynomialMatrix(m) => write!(f, "{}", m.to_string().trim_end()),
            other => f.write_str(&other.canonical()),
        }
    }
}

/// Orders counts numerically and everything else by canonical form.
fn compare_values(a: &InvariantValue, b: &InvariantValue) -> Ordering {
    match (a, b) {
        (InvariantValue::Count(x), InvariantValue::Count(y)) => x.cmp(y),
        _ => a.canonical().cmp(&b.canonical()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionGroup {
    pub value: InvariantValue,
    pub names: Vec<String>,
}

/// Corpus entries grouped by invariant value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionReport {
    pub invariant: InvariantKind,
    pub groups: Vec<PartitionGroup>,
}

impl fmt::Display for PartitionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let values: Vec<String> = self.groups.iter().map(|g| g.value.canonical()).collect();
        let width = values.iter().map(|v| v.chars().count()).max().unwrap_or(0);
        for (group, value) in self.groups.iter().zip(&values) {
            writeln!(f, "{value:<width$} | {}", group.names.join(", "))?;
        }
        Ok(())
    }
}

/// Computes `kind` for every entry and groups equal values. Names keep
/// corpus order inside a group.
pub fn partition(
    entries: &[CorpusEntry],
    kind: InvariantKind,
    context: &InvariantContext,
) -> Result<PartitionReport, InvariantError> {
    let values = entries
        .par_iter()
        .map(|e| InvariantValue::compute(kind, &e.diagram, context))
        .collect::<Result<Vec<_>, _>>()?;
    let mut groups: Vec<PartitionGroup> = Vec::new();
    for (entry, value) in entries.iter().zip(values) {
        match groups.iter_mut().find(|g| g.value.canonical() == value.canonical()) {
            Some(g) => g.names.push(entry.name.clone()),
            None => groups.push(PartitionGroup {
                value,
                names: vec![entry.name.clone()],
            }),
        }
    }
    groups.sort_by(|a, b| compare_values(&a.value, &b.value));
    Ok(PartitionReport { invariant: kind, groups })
}
