//! Knotoid diagrams as open oriented Gauss codes.
//!
//! A diagram with `c` crossings is the sequence of its `2c` crossing passes
//! from tail to head. Semiarc `i` runs from pass `i` to pass `i + 1`
//! (passes counted from 1), so semiarc `0` leaves the tail and semiarc `2c`
//! reaches the head.
//!
//! Text form: whitespace-separated tokens `O<k><s>` / `U<k><s>` with `k` the
//! crossing number and `s` its sign, e.g. `U1- O2- O1- U2-`. The empty
//! string is the trivial knotoid.

use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    Over,
    Under,
}

impl Role {
    pub fn flipped(self) -> Role {
        match self {
            Role::Over => Role::Under,
            Role::Under => Role::Over,
        }
    }

    fn letter(self) -> char {
        match self {
            Role::Over => 'O',
            Role::Under => 'U',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn negated(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Pass {
    pub crossing: usize,
    pub role: Role,
    pub sign: Sign,
}

impl fmt::Display for Pass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.role.letter(), self.crossing, self.sign.symbol())
    }
}

/// Pass positions (zero-based indices into the pass list) of one crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub sign: Sign,
    pub under: usize,
    pub over: usize,
}

impl Crossing {
    /// The pass index on the other strand of this crossing.
    pub fn partner(&self, pass: usize) -> usize {
        if pass == self.under {
            self.over
        } else {
            self.under
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GaussError {
    #[error("malformed token {0:?} (expected O<k><sign> or U<k><sign>)")]
    Token(String),
    #[error("crossing {0} appears only once")]
    Incomplete(usize),
    #[error("crossing {crossing} has two {role:?} passes")]
    SameRole { crossing: usize, role: Role },
    #[error("crossing {0} appears more than twice")]
    TooManyPasses(usize),
    #[error("the two passes of crossing {0} disagree on the sign")]
    SignMismatch(usize),
    #[error("crossing numbers must be exactly 1..={count}; {missing} is missing")]
    Numbering { count: usize, missing: usize },
    #[error("semiarc position {position} is outside 0..={max}")]
    Position { position: usize, max: usize },
}

/// A validated open Gauss code.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KnotoidDiagram {
    passes: Vec<Pass>,
    // indexed by crossing number - 1
    crossings: Vec<Crossing>,
}

impl KnotoidDiagram {
    pub fn trivial() -> Self {
        KnotoidDiagram {
            passes: Vec::new(),
            crossings: Vec::new(),
        }
    }

    pub fn from_passes(passes: Vec<Pass>) -> Result<Self, GaussError> {
        let count = passes.len() / 2;
        let max_id = passes.iter().map(|p| p.crossing).max().unwrap_or(0);
        let mut slots: Vec<(Option<usize>, Option<usize>, Option<Sign>)> = vec![(None, None, None); max_id.max(count)];
        for (i, pass) in passes.iter().enumerate() {
            if pass.crossing == 0 {
                return Err(GaussError::Token(pass.to_string()));
            }
            let slot = &mut slots[pass.crossing - 1];
            let role_slot = match pass.role {
                Role::Under => &mut slot.0,
                Role::Over => &mut slot.1,
            };
            if role_slot.is_some() {
                let other = match pass.role {
                    Role::Under => slot.1,
                    Role::Over => slot.0,
                };
                return Err(if other.is_some() {
                    GaussError::TooManyPasses(pass.crossing)
                } else {
                    GaussError::SameRole {
                        crossing: pass.crossing,
                        role: pass.role,
                    }
                });
            }
            *role_slot = Some(i);
            match slot.2 {
                None => slot.2 = Some(pass.sign),
                Some(s) if s != pass.sign => return Err(GaussError::SignMismatch(pass.crossing)),
                _ => {}
            }
        }
        let mut crossings = Vec::with_capacity(slots.len());
        for (k, slot) in slots.iter().enumerate() {
            match slot {
                (Some(under), Some(over), Some(sign)) => crossings.push(Crossing {
                    sign: *sign,
                    under: *under,
                    over: *over,
                }),
                (None, None, _) => {
                    return Err(GaussError::Numbering {
                        count,
                        missing: k + 1,
                    })
                }
                _ => return Err(GaussError::Incomplete(k + 1)),
            }
        }
        Ok(KnotoidDiagram { passes, crossings })
    }

    pub fn parse_gauss(text: &str) -> Result<Self, GaussError> {
        let passes = text
            .split_whitespace()
            .map(parse_token)
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_passes(passes)
    }

    pub fn passes(&self) -> &[Pass] {
        &self.passes
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Crossing by number (`1..=c`).
    pub fn crossing(&self, number: usize) -> &Crossing {
        &self.crossings[number - 1]
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn semiarc_count(&self) -> usize {
        self.passes.len() + 1
    }

    /// Index of the semiarc reaching the head.
    pub fn head_semiarc(&self) -> usize {
        self.passes.len()
    }

    /// Switches every crossing over/under, which also negates every sign.
    pub fn mirror(&self) -> Self {
        let passes = self
            .passes
            .iter()
            .map(|p| Pass {
                crossing: p.crossing,
                role: p.role.flipped(),
                sign: p.sign.negated(),
            })
            .collect();
        Self::from_passes(passes).expect("mirror of a valid diagram is valid")
    }

    fn check_position(&self, position: usize) -> Result<(), GaussError> {
        if position > self.passes.len() {
            Err(GaussError::Position {
                position,
                max: self.passes.len(),
            })
        } else {
            Ok(())
        }
    }

    /// Adds a kink on semiarc `position`: a new crossing whose two passes
    /// are consecutive, in the order given by `order`.
    pub fn r1_insert(&self, position: usize, sign: Sign, order: KinkOrder) -> Result<Self, GaussError> {
        self.check_position(position)?;
        let k = self.crossing_count() + 1;
        let (first, second) = match order {
            KinkOrder::OverUnder => (Role::Over, Role::Under),
            KinkOrder::UnderOver => (Role::Under, Role::Over),
        };
        let mut passes = self.passes.clone();
        passes.splice(
            position..position,
            [
                Pass { crossing: k, role: first, sign },
                Pass { crossing: k, role: second, sign },
            ],
        );
        Self::from_passes(passes)
    }

    /// Pushes semiarc `position_a` across semiarc `position_b`, creating two
    /// crossings of opposite signs. The first new crossing met along the
    /// strand at `position_a` gets `sign`.
    ///
    /// When both positions name the same semiarc, the strand at `position_a`
    /// is the earlier stretch of that semiarc.
    pub fn r2_insert(
        &self,
        position_a: usize,
        position_b: usize,
        variant: R2Variant,
        sign: Sign,
    ) -> Result<Self, GaussError> {
        self.check_position(position_a)?;
        self.check_position(position_b)?;
        if position_a > position_b {
            return Err(GaussError::Position {
                position: position_a,
                max: position_b,
            });
        }
        let (k1, k2) = (self.crossing_count() + 1, self.crossing_count() + 2);
        let top = variant.role_at_a;
        let bottom = top.flipped();
        let first = [
            Pass { crossing: k1, role: top, sign },
            Pass { crossing: k2, role: top, sign: sign.negated() },
        ];
        let mut second = [
            Pass { crossing: k1, role: bottom, sign },
            Pass { crossing: k2, role: bottom, sign: sign.negated() },
        ];
        if variant.orientation == StrandOrientation::Antiparallel {
            second.reverse();
        }
        let mut passes = self.passes.clone();
        passes.splice(position_b..position_b, second);
        passes.splice(position_a..position_a, first);
        Self::from_passes(passes)
    }
}

fn parse_token(token: &str) -> Result<Pass, GaussError> {
    let bad = || GaussError::Token(token.to_string());
    let mut chars = token.chars();
    let role = match chars.next() {
        Some('O' | 'o') => Role::Over,
        Some('U' | 'u') => Role::Under,
        _ => return Err(bad()),
    };
    let rest = chars.as_str();
    let sign_char = rest.chars().last().ok_or_else(bad)?;
    let sign = match sign_char {
        '+' => Sign::Positive,
        '-' | '−' => Sign::Negative,
        _ => return Err(bad()),
    };
    let digits = &rest[..rest.len() - sign_char.len_utf8()];
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let crossing: usize = digits.parse().map_err(|_| bad())?;
    if crossing == 0 {
        return Err(bad());
    }
    Ok(Pass { crossing, role, sign })
}

impl fmt::Display for KnotoidDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.passes.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for KnotoidDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KnotoidDiagram({:?})", self.to_string())
    }
}

impl FromStr for KnotoidDiagram {
    type Err = GaussError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse_gauss(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KinkOrder {
    OverUnder,
    UnderOver,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StrandOrientation {
    /// Both strands of the bigon run the same way: `k1 k2 … k1 k2`.
    Parallel,
    /// The strands run opposite ways: `k1 k2 … k2 k1`.
    Antiparallel,
}

/// One of the four oriented Reidemeister II moves, as a Gauss-code template.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct R2Variant {
    /// Role of the passes inserted at the first position.
    pub role_at_a: Role,
    pub orientation: StrandOrientation,
}

impl R2Variant {
    pub const ALL: [R2Variant; 4] = [
        R2Variant { role_at_a: Role::Over, orientation: StrandOrientation::Parallel },
        R2Variant { role_at_a: Role::Over, orientation: StrandOrientation::Antiparallel },
        R2Variant { role_at_a: Role::Under, orientation: StrandOrientation::Parallel },
        R2Variant { role_at_a: Role::Under, orientation: StrandOrientation::Antiparallel },
    ];
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn d(s: &str) -> KnotoidDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn trivial_knotoid() {
        let t = d("");
        assert_eq!(t.semiarc_count(), 1);
        assert_eq!(t.crossing_count(), 0);
        assert_eq!(t, KnotoidDiagram::trivial());
        assert_eq!(t.mirror(), t);
    }

    #[test]
    fn two_crossing_code() {
        let k = d("U1- O2- O1- U2-");
        assert_eq!(k.semiarc_count(), 5);
        let roles: Vec<Role> = k.passes().iter().map(|p| p.role).collect();
        assert_eq!(roles, [Role::Under, Role::Over, Role::Over, Role::Under]);
        assert!(k.passes().iter().all(|p| p.sign == Sign::Negative));
        assert_eq!(*k.crossing(1), Crossing { sign: Sign::Negative, under: 0, over: 2 });
        assert_eq!(k.to_string(), "U1- O2- O1- U2-");
        assert_eq!(d("U1− O2− O1− U2−"), k);
    }

    #[test]
    fn invalid_codes() {
        let err = |s: &str| KnotoidDiagram::parse_gauss(s).unwrap_err();
        assert_eq!(err("U1+ U1+"), GaussError::SameRole { crossing: 1, role: Role::Under });
        assert_eq!(err("U1+"), GaussError::Incomplete(1));
        assert_eq!(err("U1+ O1-"), GaussError::SignMismatch(1));
        assert_eq!(err("U1+ O1+ O1+"), GaussError::TooManyPasses(1));
        assert_eq!(err("U1+ O1+ U3+ O3+"), GaussError::Numbering { count: 2, missing: 2 });
        for bad in ["X1+", "U+", "U1", "U0+", "Ua+", "U1*"] {
            assert!(matches!(err(bad), GaussError::Token(_)), "{bad}");
        }
    }

    #[test]
    fn mirror_switches_roles_and_signs() {
        let k = d("O1+ U2+ U1+ O2+");
        assert_eq!(k.mirror().to_string(), "U1- O2- O1- U2-");
        assert_eq!(k.mirror().mirror(), k);
    }

    #[test]
    fn kink_insertion() {
        let t = KnotoidDiagram::trivial();
        assert_eq!(t.r1_insert(0, Sign::Positive, KinkOrder::OverUnder).unwrap().to_string(), "O1+ U1+");
        let k = d("U1- O1-");
        let r = k.r1_insert(1, Sign::Positive, KinkOrder::UnderOver).unwrap();
        assert_eq!(r.to_string(), "U1- U2+ O2+ O1-");
        assert!(k.r1_insert(3, Sign::Positive, KinkOrder::OverUnder).is_err());
    }

    #[test]
    fn bigon_insertion() {
        let t = KnotoidDiagram::trivial();
        let par = R2Variant { role_at_a: Role::Over, orientation: StrandOrientation::Parallel };
        let anti = R2Variant { role_at_a: Role::Over, orientation: StrandOrientation::Antiparallel };
        assert_eq!(t.r2_insert(0, 0, par, Sign::Positive).unwrap().to_string(), "O1+ O2- U1+ U2-");
        assert_eq!(t.r2_insert(0, 0, anti, Sign::Negative).unwrap().to_string(), "O1- O2+ U2+ U1-");
        let k = d("U1- O1-");
        let r = k.r2_insert(0, 2, par, Sign::Positive).unwrap();
        assert_eq!(r.to_string(), "O2+ O3- U1- O1- U2+ U3-");
        assert!(k.r2_insert(2, 0, par, Sign::Positive).is_err());
        assert!(k.r2_insert(0, 3, par, Sign::Positive).is_err());
    }

    fn arb_diagram() -> impl Strategy<Value = KnotoidDiagram> {
        (0usize..5)
            .prop_flat_map(|c| {
                (
                    Just(c),
                    Just((0..2 * c).collect::<Vec<usize>>()).prop_shuffle(),
                    proptest::collection::vec(any::<bool>(), c),
                )
            })
            .prop_map(|(c, order, signs)| {
                // slot 2k is the under pass of crossing k+1, slot 2k+1 its over pass
                let passes = order
                    .iter()
                    .map(|&slot| Pass {
                        crossing: slot / 2 + 1,
                        role: if slot % 2 == 0 { Role::Under } else { Role::Over },
                        sign: if signs[slot / 2] { Sign::Positive } else { Sign::Negative },
                    })
                    .collect();
                let _ = c;
                KnotoidDiagram::from_passes(passes).unwrap()
            })
    }

    proptest! {
        #[test]
        fn gauss_code_round_trips(k in arb_diagram()) {
            prop_assert_eq!(k.to_string().parse::<KnotoidDiagram>().unwrap(), k.clone());
            prop_assert_eq!(k.mirror().mirror(), k);
        }

        #[test]
        fn moves_add_crossings(k in arb_diagram(), pos in 0usize..9, v in 0usize..4, pos2 in 0usize..9) {
            let max = k.passes().len();
            let (a, b) = (pos.min(pos2).min(max), pos.max(pos2).min(max));
            let r1 = k.r1_insert(a, Sign::Negative, KinkOrder::OverUnder).unwrap();
            prop_assert_eq!(r1.crossing_count(), k.crossing_count() + 1);
            let r2 = k.r2_insert(a, b, R2Variant::ALL[v], Sign::Positive).unwrap();
            prop_assert_eq!(r2.crossing_count(), k.crossing_count() + 2);
            prop_assert_eq!(r2.semiarc_count(), k.semiarc_count() + 4);
        }
    }
}
