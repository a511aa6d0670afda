//! Biquandle coloring invariants of knotoids: counting invariants,
//! biquandle longitude multisets and their polynomial enhancements.

pub mod algebra;
pub mod biquandle;
pub mod coloring;
pub mod corpus;
pub mod invariant;
pub mod knotoid;
pub mod longitude;

pub use algebra::{AffineMap, AlgebraError, CountPolynomial, Permutation};
pub use biquandle::{Biquandle, BiquandleError, Family, GroupTable, ValidationReport};
pub use coloring::{
    alexander_colorings, counting_invariant, counting_matrix, crossing_relation, enumerate_colorings, Coloring,
    ColoringError, CountingMatrix,
};
pub use corpus::{parse_corpus, serialize_corpus, CorpusEntry, CorpusError};
pub use invariant::{
    partition, AlexanderParams, InvariantContext, InvariantError, InvariantKind, InvariantValue, PartitionGroup,
    PartitionReport,
};
pub use knotoid::{GaussError, KinkOrder, KnotoidDiagram, Pass, R2Variant, Role, Sign, StrandOrientation};
pub use longitude::{
    alexander_longitude, alexander_longitude_multiset, ble2_matrix, ble2_polynomial, ble_matrix, ble_polynomial, blw,
    longitude_multiset, longitude_pair_multiset, pass_weight, seen_color, LongitudeWeight, PolynomialMatrix,
};
