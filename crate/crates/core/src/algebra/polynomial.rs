use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::AlgebraError;

const VARIABLE_NAMES: [char; 2] = ['u', 'v'];

/// A polynomial with nonnegative integer coefficients in one or two
/// variables (`u`, or `u` and `v`), used to record multisets of exponents.
///
/// Terms are kept sorted lexicographically by exponent tuple and zero
/// coefficients are never stored, so structural equality is canonical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CountPolynomial {
    variables: usize,
    terms: BTreeMap<Vec<u64>, BigUint>,
}

impl CountPolynomial {
    pub fn zero(variables: usize) -> Self {
        assert!(
            (1..=VARIABLE_NAMES.len()).contains(&variables),
            "CountPolynomial supports one or two variables"
        );
        CountPolynomial {
            variables,
            terms: BTreeMap::new(),
        }
    }

    /// One monomial per multiset element; each element is an exponent tuple.
    pub fn from_multiset<I>(variables: usize, exponents: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator,
        I::Item: AsRef<[u64]>,
    {
        let mut poly = Self::zero(variables);
        for e in exponents {
            poly.add_monomial(e.as_ref(), BigUint::one())?;
        }
        Ok(poly)
    }

    pub fn variables(&self) -> usize {
        self.variables
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u64], &BigUint)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coefficient(&self, exponents: &[u64]) -> BigUint {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    pub fn add_monomial(&mut self, exponents: &[u64], coefficient: BigUint) -> Result<(), AlgebraError> {
        if exponents.len() != self.variables {
            return Err(AlgebraError::ArityMismatch {
                expected: self.variables,
                found: exponents.len(),
            });
        }
        if coefficient.is_zero() {
            return Ok(());
        }
        *self.terms.entry(exponents.to_vec()).or_default() += coefficient;
        Ok(())
    }

    pub fn add(&self, other: &CountPolynomial) -> Result<CountPolynomial, AlgebraError> {
        if self.variables != other.variables {
            return Err(AlgebraError::ArityMismatch {
                expected: self.variables,
                found: other.variables,
            });
        }
        let mut sum = self.clone();
        for (e, c) in &other.terms {
            *sum.terms.entry(e.clone()).or_default() += c;
        }
        Ok(sum)
    }

    /// Substitutes integer values for the variables and sums.
    pub fn evaluate(&self, point: &[i64]) -> Result<BigInt, AlgebraError> {
        if point.len() != self.variables {
            return Err(AlgebraError::ArityMismatch {
                expected: self.variables,
                found: point.len(),
            });
        }
        let mut total = BigInt::zero();
        for (exps, coeff) in &self.terms {
            let mut term = BigInt::from(coeff.clone());
            for (&x, &k) in point.iter().zip(exps) {
                term *= num_traits::pow(BigInt::from(x), k as usize);
            }
            total += term;
        }
        Ok(total)
    }

    /// Sum of the coefficients, i.e. the value at all-ones.
    pub fn total(&self) -> BigUint {
        self.terms.values().sum()
    }

    /// Drops the second variable (`v = 1`).
    pub fn specialize_last(&self) -> CountPolynomial {
        let mut out = Self::zero(self.variables - 1);
        for (e, c) in &self.terms {
            *out.terms.entry(e[..e.len() - 1].to_vec()).or_default() += c;
        }
        out
    }
}

/// Canonical text: ascending terms joined by ` + `, e.g. `u + 4u^5` or
/// `4uv^2`; the zero polynomial prints as `0`.
impl fmt::Display for CountPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (exps, coeff)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let constant = exps.iter().all(|&k| k == 0);
            if !coeff.is_one() || constant {
                write!(f, "{coeff}")?;
            }
            for (name, &k) in VARIABLE_NAMES.iter().zip(exps) {
                match k {
                    0 => {}
                    1 => write!(f, "{name}")?,
                    _ => write!(f, "{name}^{k}")?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn exponent_multiset_to_polynomial() {
        let p = CountPolynomial::from_multiset(1, [[1u64], [5], [5], [5], [5]]).unwrap();
        assert_eq!(p.to_string(), "u + 4u^5");
        assert_eq!(p.evaluate(&[1]).unwrap(), BigInt::from(5));
        assert_eq!(p.evaluate(&[2]).unwrap(), BigInt::from(2 + 4 * 32));
    }

    #[test]
    fn two_variable_text() {
        let p = CountPolynomial::from_multiset(2, [[1u64, 2], [1, 1], [1, 2], [1, 2], [2, 1]]).unwrap();
        assert_eq!(p.to_string(), "uv + 3uv^2 + u^2v");
        assert_eq!(p.specialize_last().to_string(), "4u + u^2");
        let constant = CountPolynomial::from_multiset(2, [[0u64, 0]]).unwrap();
        assert_eq!(constant.to_string(), "1");
    }

    #[test]
    fn empty_polynomial() {
        let p = CountPolynomial::zero(2);
        assert_eq!(p.to_string(), "0");
        assert_eq!(p.evaluate(&[7, -3]).unwrap(), BigInt::zero());
    }

    #[test]
    fn arity_errors() {
        let p = CountPolynomial::zero(1);
        assert!(p.evaluate(&[1, 1]).is_err());
        assert!(CountPolynomial::from_multiset(2, [[1u64]]).is_err());
        assert!(p.add(&CountPolynomial::zero(2)).is_err());
    }

    #[test]
    fn addition_merges_terms() {
        let a = CountPolynomial::from_multiset(1, [[1u64], [3]]).unwrap();
        let b = CountPolynomial::from_multiset(1, [[3u64]]).unwrap();
        assert_eq!(a.add(&b).unwrap().to_string(), "u + 2u^3");
    }

    proptest! {
        #[test]
        fn all_ones_counts_the_multiset(exps in proptest::collection::vec((0u64..6, 0u64..6), 0..40)) {
            let tuples: Vec<[u64; 2]> = exps.iter().map(|&(a, b)| [a, b]).collect();
            let p = CountPolynomial::from_multiset(2, &tuples).unwrap();
            prop_assert_eq!(p.evaluate(&[1, 1]).unwrap(), BigInt::from(tuples.len()));
            prop_assert_eq!(p.total(), BigUint::from(tuples.len()));
        }
    }
}
