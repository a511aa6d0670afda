//! Value types shared by every invariant: permutations of `{1..n}`,
//! affine maps over `Z_n`, and count polynomials.

mod affine;
mod permutation;
mod polynomial;

pub use affine::AffineMap;
pub(crate) use affine::mod_inverse;
pub use permutation::Permutation;
pub use polynomial::CountPolynomial;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("element {element} is outside 1..={n}")]
    OutOfRange { element: usize, n: usize },
    #[error("element {repeated} appears twice; not a bijection")]
    NotBijective { repeated: usize },
    #[error("cannot compose permutations of degree {left} and {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("cannot compose affine maps mod {left} and mod {right}")]
    ModulusMismatch { left: u64, right: u64 },
    #[error("{value} is not a unit mod {modulus}")]
    NotAUnit { value: u64, modulus: u64 },
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("expected {expected} variable(s), found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("malformed cycle notation: {0:?}")]
    Syntax(String),
}
