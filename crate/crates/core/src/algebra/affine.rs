use std::fmt;

use super::{permutation::Permutation, AlgebraError};

/// `x ↦ scale·x + shift (mod modulus)`, with `scale` a unit.
///
/// Residues are kept in `0..modulus`. When acting on the ground set
/// `{1..n}`, the element `n` stands for the residue class of 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineMap {
    modulus: u64,
    scale: u64,
    shift: u64,
}

pub(crate) fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(0);
    }
    let (mut r0, mut r1) = (n as i128, (a % n) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0 == 1).then(|| t0.rem_euclid(n as i128) as u64)
}

fn mulmod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

impl AffineMap {
    pub fn new(modulus: u64, scale: i64, shift: i64) -> Result<Self, AlgebraError> {
        if modulus == 0 {
            return Err(AlgebraError::ZeroModulus);
        }
        let m = modulus as i128;
        let scale = (scale as i128).rem_euclid(m) as u64;
        let shift = (shift as i128).rem_euclid(m) as u64;
        if mod_inverse(scale, modulus).is_none() {
            return Err(AlgebraError::NotAUnit {
                value: scale,
                modulus,
            });
        }
        Ok(AffineMap {
            modulus,
            scale,
            shift,
        })
    }

    pub fn identity(modulus: u64) -> Self {
        AffineMap {
            modulus,
            scale: 1 % modulus,
            shift: 0,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn scale(&self) -> u64 {
        self.scale
    }

    pub fn shift(&self) -> u64 {
        self.shift
    }

    /// Acts on a residue (any integer, reduced mod the modulus).
    pub fn apply_residue(&self, x: u64) -> u64 {
        (mulmod(self.scale, x % self.modulus, self.modulus) + self.shift) % self.modulus
    }

    /// Acts on the ground set `{1..n}`.
    pub fn apply(&self, x: usize) -> usize {
        let r = self.apply_residue(x as u64);
        if r == 0 {
            self.modulus as usize
        } else {
            r as usize
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AffineMap) -> Result<AffineMap, AlgebraError> {
        if self.modulus != other.modulus {
            return Err(AlgebraError::ModulusMismatch {
                left: self.modulus,
                right: other.modulus,
            });
        }
        let n = self.modulus;
        Ok(AffineMap {
            modulus: n,
            scale: mulmod(self.scale, other.scale, n),
            shift: (mulmod(self.scale, other.shift, n) + self.shift) % n,
        })
    }

    pub fn inverse(&self) -> AffineMap {
        let n = self.modulus;
        let inv = mod_inverse(self.scale, n).expect("scale is a unit");
        AffineMap {
            modulus: n,
            scale: inv,
            shift: (n - mulmod(inv, self.shift, n)) % n,
        }
    }

    pub fn pow(&self, exponent: i64) -> AffineMap {
        let base = if exponent < 0 { self.inverse() } else { *self };
        let mut result = AffineMap::identity(self.modulus);
        for _ in 0..exponent.unsigned_abs() {
            result = base.compose(&result).expect("same modulus");
        }
        result
    }

    pub fn to_permutation(&self) -> Permutation {
        let n = self.modulus as usize;
        Permutation::from_zero_based((1..=n).map(|x| self.apply(x) - 1).collect())
    }
}

/// Renders as `2*x+1`, `x+4`, `3*x`, or `x`.
impl fmt::Display for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.scale == 1 || self.modulus == 1 {
            f.write_str("x")?;
        } else {
            write!(f, "{}*x", self.scale)?;
        }
        if self.shift != 0 {
            write!(f, "+{}", self.shift)?;
        }
        if f.alternate() {
            write!(f, " mod {}", self.modulus)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_beta_composition_over_z5() {
        // β_b⁻¹(x) = 3x + 2b over Z5
        let beta1_inv = AffineMap::new(5, 3, 2).unwrap();
        let beta2_inv = AffineMap::new(5, 3, 4).unwrap();
        let composed = beta2_inv.compose(&beta1_inv).unwrap();
        assert_eq!(composed, AffineMap::new(5, 4, 0).unwrap());
        let swapped = AffineMap::new(5, 2, 1)
            .unwrap()
            .compose(&AffineMap::new(5, 3, 4).unwrap())
            .unwrap();
        assert_eq!(swapped.to_string(), "x+4");
    }

    #[test]
    fn composition_matches_pointwise() {
        for n in 1..=12u64 {
            let units: Vec<u64> = (0..n).filter(|&a| mod_inverse(a, n).is_some()).collect();
            for &a in &units {
                for b in 0..n {
                    let f = AffineMap::new(n, a as i64, b as i64).unwrap();
                    for &c in &units {
                        for d in 0..n {
                            let g = AffineMap::new(n, c as i64, d as i64).unwrap();
                            let fg = f.compose(&g).unwrap();
                            for x in 0..n {
                                assert_eq!(fg.apply_residue(x), f.apply_residue(g.apply_residue(x)));
                            }
                        }
                    }
                    assert_eq!(f.compose(&f.inverse()).unwrap(), AffineMap::identity(n));
                }
            }
        }
    }

    #[test]
    fn identity_is_neutral() {
        let f = AffineMap::new(7, 3, 5).unwrap();
        assert_eq!(AffineMap::identity(7).compose(&f).unwrap(), f);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            AffineMap::new(6, 2, 0),
            Err(AlgebraError::NotAUnit { value: 2, modulus: 6 })
        ));
        let f = AffineMap::identity(5);
        let g = AffineMap::identity(7);
        assert!(f.compose(&g).is_err());
    }

    #[test]
    fn ground_set_action_uses_n_for_zero() {
        let f = AffineMap::new(5, 1, 4).unwrap();
        assert_eq!(f.apply(1), 5);
        assert_eq!(f.to_permutation().to_string(), "(15432)");
        assert_eq!(format!("{f:#}"), "x+4 mod 5");
        assert_eq!(AffineMap::new(5, 2, 0).unwrap().to_string(), "2*x");
    }
}
