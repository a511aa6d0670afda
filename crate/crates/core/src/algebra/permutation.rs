use std::fmt;
use std::str::FromStr;

use super::AlgebraError;

/// A bijection on `{1..n}`.
///
/// Stored as an image table; `images[i]` is the image of `i + 1`, kept
/// zero-based internally. Every public method speaks in one-based elements.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from one-based images: entry `i` is the image of `i + 1`.
    pub fn from_images(images: &[usize]) -> Result<Self, AlgebraError> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut table = Vec::with_capacity(n);
        for &img in images {
            if img == 0 || img > n {
                return Err(AlgebraError::OutOfRange { element: img, n });
            }
            if seen[img - 1] {
                return Err(AlgebraError::NotBijective { repeated: img });
            }
            seen[img - 1] = true;
            table.push(img - 1);
        }
        Ok(Permutation { images: table })
    }

    pub(crate) fn from_zero_based(images: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i == v)
        });
        Permutation { images }
    }

    /// Builds a permutation on `{1..n}` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, AlgebraError> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut moved = vec![false; n];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x == 0 || x > n {
                    return Err(AlgebraError::OutOfRange { element: x, n });
                }
                if moved[x - 1] {
                    return Err(AlgebraError::NotBijective { repeated: x });
                }
                moved[x - 1] = true;
                let next = cycle[(i + 1) % cycle.len()];
                if next == 0 || next > n {
                    return Err(AlgebraError::OutOfRange { element: next, n });
                }
                images[x - 1] = next - 1;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation such as `(1452)(36)` or `()`.
    ///
    /// Elements are single digits unless separated by spaces or commas,
    /// e.g. `(1 10 3)` or `(1,10,3)`.
    pub fn parse_cycles(n: usize, text: &str) -> Result<Self, AlgebraError> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| AlgebraError::Syntax(text.to_string()))?;
            let close = open
                .find(')')
                .ok_or_else(|| AlgebraError::Syntax(text.to_string()))?;
            let body = &open[..close];
            let cycle: Vec<usize> = if body.contains([' ', ',']) {
                body.split([' ', ','])
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse().map_err(|_| AlgebraError::Syntax(text.to_string())))
                    .collect::<Result<_, _>>()?
            } else {
                body.chars()
                    .map(|c| {
                        c.to_digit(10)
                            .map(|d| d as usize)
                            .ok_or_else(|| AlgebraError::Syntax(text.to_string()))
                    })
                    .collect::<Result<_, _>>()?
            };
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = open[close + 1..].trim_start();
        }
        Self::from_cycles(n, &cycles)
    }

    /// Every permutation of `{1..n}`, in lexicographic order of image tables.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation::from_zero_based(current.clone()));
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
            current.swap(i - 1, j);
            current[i..].reverse();
        }
        out
    }

    /// Size of the ground set.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] + 1
    }

    /// One-based image table.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, AlgebraError> {
        if self.degree() != other.degree() {
            return Err(AlgebraError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }

    /// `self` raised to an integer power; negative powers invert.
    pub fn pow(&self, exponent: i64) -> Permutation {
        let base = if exponent < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        let mut result = Permutation::identity(self.degree());
        let mut square = base;
        let mut e = exponent.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                result = square.compose_unchecked(&result);
            }
            square = square.compose_unchecked(&square);
            e >>= 1;
        }
        result
    }

    /// Disjoint cycles of length at least two, each starting at its least
    /// element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start + 1];
            seen[start] = true;
            let mut j = self.images[start];
            while j != start {
                seen[j] = true;
                cycle.push(j + 1);
                j = self.images[j];
            }
            out.push(cycle);
        }
        out
    }

    /// Least `k ≥ 1` with `self^k = id`: the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| {
            let len = c.len() as u64;
            (acc / num_integer::gcd(acc, len))
                .checked_mul(len)
                .expect("permutation order overflows u64")
        })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        let spaced = self.degree() >= 10;
        for cycle in cycles {
            f.write_str("(")?;
            for (i, x) in cycle.iter().enumerate() {
                if spaced && i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by degree, then by the cycle-notation string.
impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.to_string().cmp(&other.to_string()))
    }
}

/// Parses `n:<cycles>`, e.g. `5:(12345)`.
impl FromStr for Permutation {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (n, cycles) = s
            .split_once(':')
            .ok_or_else(|| AlgebraError::Syntax(s.to_string()))?;
        let n = n
            .trim()
            .parse()
            .map_err(|_| AlgebraError::Syntax(s.to_string()))?;
        Permutation::parse_cycles(n, cycles)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(n, s).unwrap()
    }

    #[test]
    fn composes_right_to_left() {
        let product = p(5, "(1452)").compose(&p(5, "(1523)")).unwrap();
        assert_eq!(product, p(5, "(12345)"));
        assert_eq!(product.to_string(), "(12345)");
    }

    #[test]
    fn identity_is_neutral() {
        let q = p(5, "(14)(253)");
        let id = Permutation::identity(5);
        assert_eq!(id.compose(&q).unwrap(), q);
        assert_eq!(q.compose(&id).unwrap(), q);
        assert!(q.compose(&q.inverse()).unwrap().is_identity());
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let err = p(4, "(12)").compose(&p(5, "(12)")).unwrap_err();
        assert!(matches!(err, AlgebraError::DegreeMismatch { left: 4, right: 5 }));
    }

    #[test]
    fn inverses() {
        assert_eq!(p(5, "(1325)").inverse(), p(5, "(1523)"));
        assert!(Permutation::identity(3).inverse().is_identity());
        assert_eq!(p(5, "(12)").inverse(), p(5, "(12)"));
    }

    #[test]
    fn orders() {
        assert_eq!(p(5, "(12345)").order(), 5);
        assert_eq!(Permutation::identity(5).order(), 1);
        assert_eq!(Permutation::identity(0).order(), 1);
        // brute force: compose until the identity comes back
        let q = p(5, "(12)(345)");
        let mut acc = q.clone();
        let mut k = 1;
        while !acc.is_identity() {
            acc = q.compose(&acc).unwrap();
            k += 1;
        }
        assert_eq!(k, 6);
        assert_eq!(q.order(), 6);
    }

    #[test]
    fn cycle_notation() {
        assert_eq!(Permutation::identity(4).to_string(), "()");
        assert_eq!(p(5, "(1325)").to_string(), "(1325)");
        assert_eq!(p(5, "(3251)").to_string(), "(1325)");
        assert_eq!(p(4, "(24)(13)").to_string(), "(13)(24)");
        assert_eq!(p(11, "(1 10 11)").to_string(), "(1 10 11)");
        assert_eq!("5:(12345)".parse::<Permutation>().unwrap(), p(5, "(12345)"));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Permutation::from_images(&[1, 1, 2]).is_err());
        assert!(Permutation::from_images(&[1, 4, 2]).is_err());
        assert!(Permutation::parse_cycles(3, "(12").is_err());
        assert!(Permutation::parse_cycles(3, "(14)").is_err());
        assert!(Permutation::parse_cycles(3, "(12)(23)").is_err());
    }

    #[test]
    fn negative_powers() {
        let q = p(5, "(1325)");
        assert_eq!(q.pow(-1), q.inverse());
        assert!(q.pow(4).is_identity());
        assert_eq!(q.pow(-3), q);
    }

    fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(Permutation::from_zero_based)
    }

    fn triple() -> impl Strategy<Value = (Permutation, Permutation, Permutation)> {
        (1usize..9).prop_flat_map(|n| (perm_strategy(n), perm_strategy(n), perm_strategy(n)))
    }

    proptest! {
        #[test]
        fn composition_is_associative((a, b, c) in triple()) {
            let left = a.compose(&b).unwrap().compose(&c).unwrap();
            let right = a.compose(&b.compose(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn order_is_minimal((a, _, _) in triple()) {
            let k = a.order();
            prop_assert!(a.pow(k as i64).is_identity());
            for j in 1..k {
                prop_assert!(!a.pow(j as i64).is_identity());
            }
            let factorial: u64 = (1..=a.degree() as u64).product();
            prop_assert_eq!(factorial % k, 0);
        }

        #[test]
        fn cycle_notation_round_trips((a, _, _) in triple()) {
            let text = a.to_string();
            prop_assert_eq!(Permutation::parse_cycles(a.degree(), &text).unwrap(), a);
        }
    }
}
