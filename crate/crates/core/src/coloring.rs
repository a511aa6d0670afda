//! Biquandle colorings of knotoid diagrams.
//!
//! Each crossing has two source semiarcs and two target semiarcs. With
//! `us`/`os` the under/over source colors, a coloring must satisfy
//!
//! ```text
//! under target = β_os(us)      over target = α_us(os)
//! ```
//!
//! At a positive crossing the sources are the outgoing under semiarc and the
//! incoming over semiarc; at a negative crossing they are the incoming under
//! semiarc and the outgoing over semiarc.

use std::fmt;

use rayon::prelude::*;

use crate::algebra::mod_inverse;
use crate::biquandle::{Biquandle, BiquandleError, Family};
use crate::knotoid::{KnotoidDiagram, Role, Sign};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ColoringError {
    #[error("color {color} is outside 1..={n}")]
    ColorOutOfRange { color: usize, n: usize },
    #[error("coloring has {found} semiarc colors, the diagram has {expected} semiarcs")]
    Length { expected: usize, found: usize },
    #[error("pass index {index} is outside 0..{passes}")]
    PassIndex { index: usize, passes: usize },
    #[error("the colors do not satisfy the crossing relations")]
    NotAColoring,
    #[error(transparent)]
    Biquandle(#[from] BiquandleError),
}

/// Colors of semiarcs `0..=2c`, each in `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring {
    colors: Vec<usize>,
}

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Self {
        Coloring { colors }
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn initial(&self) -> usize {
        self.colors[0]
    }

    pub fn terminal(&self) -> usize {
        *self.colors.last().expect("a coloring has at least one semiarc")
    }

    /// Checks that this is a coloring of `diagram` by `biquandle`.
    pub fn is_valid(&self, diagram: &KnotoidDiagram, biquandle: &Biquandle) -> Result<bool, ColoringError> {
        if self.colors.len() != diagram.semiarc_count() {
            return Err(ColoringError::Length {
                expected: diagram.semiarc_count(),
                found: self.colors.len(),
            });
        }
        for crossing in diagram.crossings() {
            let c = |i: usize| self.colors[i];
            let ok = crossing_relation(
                biquandle,
                crossing.sign,
                c(crossing.under),
                c(crossing.over),
                c(crossing.under + 1),
                c(crossing.over + 1),
            )?;
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.colors.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Whether four semiarc colors around a crossing are compatible.
pub fn crossing_relation(
    biquandle: &Biquandle,
    sign: Sign,
    under_in: usize,
    over_in: usize,
    under_out: usize,
    over_out: usize,
) -> Result<bool, ColoringError> {
    let n = biquandle.order();
    for color in [under_in, over_in, under_out, over_out] {
        if color == 0 || color > n {
            return Err(ColoringError::ColorOutOfRange { color, n });
        }
    }
    let (us, os, ut, ot) = match sign {
        Sign::Positive => (under_out, over_in, under_in, over_out),
        Sign::Negative => (under_in, over_out, under_out, over_in),
    };
    Ok(biquandle.action(Family::Beta, os, us)? == ut && biquandle.action(Family::Alpha, us, os)? == ot)
}

/// Given the incoming colors `x` (this strand) and `y` (the other strand)
/// at a crossing, the outgoing colors `(this strand, other strand)`.
/// Zero-based colors.
fn resolve(b: &Biquandle, sign: Sign, role: Role, x: usize, y: usize) -> (usize, usize) {
    match (sign, role) {
        (Sign::Positive, Role::Under) => {
            let under_out = b.act_inv0(Family::Beta, y, x);
            (under_out, b.act0(Family::Alpha, under_out, y))
        }
        (Sign::Positive, Role::Over) => {
            let under_out = b.act_inv0(Family::Beta, x, y);
            (b.act0(Family::Alpha, under_out, x), under_out)
        }
        (Sign::Negative, Role::Under) => {
            let over_out = b.act_inv0(Family::Alpha, x, y);
            (b.act0(Family::Beta, over_out, x), over_out)
        }
        (Sign::Negative, Role::Over) => {
            let over_out = b.act_inv0(Family::Alpha, y, x);
            (over_out, b.act0(Family::Beta, over_out, y))
        }
    }
}

struct Search<'a> {
    diagram: &'a KnotoidDiagram,
    biquandle: &'a Biquandle,
    found: Vec<Coloring>,
}

const UNSET: usize = usize::MAX;

impl Search<'_> {
    fn assign(colors: &mut [usize], semiarc: usize, color: usize) -> bool {
        match colors[semiarc] {
            UNSET => {
                colors[semiarc] = color;
                true
            }
            existing => existing == color,
        }
    }

    // colors[pass] is known on entry
    fn walk(&mut self, colors: &[usize], pass: usize) {
        let passes = self.diagram.passes();
        if pass == passes.len() {
            self.found.push(Coloring::new(colors.iter().map(|&c| c + 1).collect()));
            return;
        }
        let p = passes[pass];
        let crossing = self.diagram.crossing(p.crossing);
        let partner = crossing.partner(pass);
        let x = colors[pass];
        if partner < pass {
            let (ours, _) = resolve(self.biquandle, p.sign, p.role, x, colors[partner]);
            let mut next = colors.to_vec();
            if Self::assign(&mut next, pass + 1, ours) {
                self.walk(&next, pass + 1);
            }
            return;
        }
        // first visit: the partner's incoming color is free unless already pinned
        let candidates: Vec<usize> = match colors[partner] {
            UNSET => (0..self.biquandle.order()).collect(),
            known => vec![known],
        };
        for y in candidates {
            let (ours, theirs) = resolve(self.biquandle, p.sign, p.role, x, y);
            let mut next = colors.to_vec();
            if Self::assign(&mut next, pass + 1, ours)
                && Self::assign(&mut next, partner, y)
                && Self::assign(&mut next, partner + 1, theirs)
            {
                self.walk(&next, pass + 1);
            }
        }
    }
}

/// All colorings of `diagram` by `biquandle`, sorted lexicographically.
pub fn enumerate_colorings(diagram: &KnotoidDiagram, biquandle: &Biquandle) -> Vec<Coloring> {
    let n = biquandle.order();
    let semiarcs = diagram.semiarc_count();
    let mut all: Vec<Coloring> = (0..n)
        .into_par_iter()
        .flat_map_iter(|start| {
            let mut search = Search {
                diagram,
                biquandle,
                found: Vec::new(),
            };
            let mut colors = vec![UNSET; semiarcs];
            colors[0] = start;
            search.walk(&colors, 0);
            search.found
        })
        .collect();
    all.sort();
    all
}

/// Number of colorings.
pub fn counting_invariant(diagram: &KnotoidDiagram, biquandle: &Biquandle) -> usize {
    enumerate_colorings(diagram, biquandle).len()
}

/// `entries[j][k]` counts colorings with initial color `j + 1` and terminal
/// color `k + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CountingMatrix {
    pub entries: Vec<Vec<u64>>,
}

impl CountingMatrix {
    pub fn from_colorings(n: usize, colorings: &[Coloring]) -> Self {
        let mut entries = vec![vec![0; n]; n];
        for f in colorings {
            entries[f.initial() - 1][f.terminal() - 1] += 1;
        }
        CountingMatrix { entries }
    }

    pub fn order(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, row: usize, column: usize) -> u64 {
        self.entries[row - 1][column - 1]
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().flatten().sum()
    }
}

impl fmt::Display for CountingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .entries
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

pub fn counting_matrix(diagram: &KnotoidDiagram, biquandle: &Biquandle) -> CountingMatrix {
    CountingMatrix::from_colorings(biquandle.order(), &enumerate_colorings(diagram, biquandle))
}

/// The homogeneous linear system over `Z_n` whose solutions are the
/// colorings by `alexander(n, t, s)`, one column per semiarc.
pub fn alexander_system(diagram: &KnotoidDiagram, n: u64, t: i64, s: i64) -> Result<Vec<Vec<u64>>, ColoringError> {
    let (t, s) = alexander_units(n, t, s)?;
    let width = diagram.semiarc_count();
    let mut rows = Vec::with_capacity(2 * diagram.crossing_count());
    for crossing in diagram.crossings() {
        let (ui, uo, oi, oo) = (crossing.under, crossing.under + 1, crossing.over, crossing.over + 1);
        let (us, os, ut, ot) = match crossing.sign {
            Sign::Positive => (uo, oi, ui, oo),
            Sign::Negative => (ui, oo, uo, oi),
        };
        // t·us + (s − t)·os − ut = 0
        let mut row = vec![0u64; width];
        add_mod(&mut row[us], t, n);
        add_mod(&mut row[os], (s + n - t) % n, n);
        add_mod(&mut row[ut], n - 1, n);
        rows.push(row);
        // s·os − ot = 0
        let mut row = vec![0u64; width];
        add_mod(&mut row[os], s, n);
        add_mod(&mut row[ot], n - 1, n);
        rows.push(row);
    }
    Ok(rows)
}

fn add_mod(slot: &mut u64, value: u64, n: u64) {
    *slot = (*slot + value % n) % n;
}

fn alexander_units(n: u64, t: i64, s: i64) -> Result<(u64, u64), ColoringError> {
    if n == 0 {
        return Err(BiquandleError::Empty.into());
    }
    let reduce = |v: i64| -> Result<u64, ColoringError> {
        let r = v.rem_euclid(n as i64) as u64;
        mod_inverse(r, n).map(|_| r).ok_or(ColoringError::Biquandle(BiquandleError::NotAUnit {
            value: v,
            modulus: n as usize,
        }))
    };
    Ok((reduce(t)?, reduce(s)?))
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// A basis of the solution space of [`alexander_system`] for prime `n`,
/// as residue vectors. `None` for composite `n`.
pub fn alexander_kernel(diagram: &KnotoidDiagram, n: u64, t: i64, s: i64) -> Result<Option<Vec<Vec<u64>>>, ColoringError> {
    let mut rows = alexander_system(diagram, n, t, s)?;
    if !is_prime(n) {
        return Ok(None);
    }
    let width = diagram.semiarc_count();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..width {
        let Some(r) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, r);
        let inv = mod_inverse(rows[rank][col], n).expect("nonzero is a unit mod a prime");
        for v in rows[rank].iter_mut() {
            *v = *v * inv % n;
        }
        let pivot_row = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[col] != 0 {
                let factor = row[col];
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v = (*v + (n - factor) * p) % n;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    let free: Vec<usize> = (0..width).filter(|c| !pivots.contains(c)).collect();
    let basis = free
        .iter()
        .map(|&f| {
            let mut v = vec![0u64; width];
            v[f] = 1;
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = (n - rows[r][f]) % n;
            }
            v
        })
        .collect();
    Ok(Some(basis))
}

/// Colorings by `alexander(n, t, s)` from the linear system: row reduction
/// for prime `n`, the generic enumerator otherwise.
pub fn alexander_colorings(diagram: &KnotoidDiagram, n: u64, t: i64, s: i64) -> Result<Vec<Coloring>, ColoringError> {
    let Some(basis) = alexander_kernel(diagram, n, t, s)? else {
        let b = Biquandle::alexander(n as usize, t, s)?;
        return Ok(enumerate_colorings(diagram, &b));
    };
    let width = diagram.semiarc_count();
    let mut out = Vec::new();
    let mut coefficients = vec![0u64; basis.len()];
    loop {
        let mut v = vec![0u64; width];
        for (c, b) in coefficients.iter().zip(&basis) {
            for (x, y) in v.iter_mut().zip(b) {
                *x = (*x + c * y) % n;
            }
        }
        out.push(Coloring::new(
            v.into_iter().map(|r| if r == 0 { n as usize } else { r as usize }).collect(),
        ));
        // odometer over the coefficient vector
        let Some(i) = coefficients.iter().position(|&c| c + 1 < n) else {
            break;
        };
        for c in coefficients.iter_mut().take(i) {
            *c = 0;
        }
        coefficients[i] += 1;
    }
    out.sort();
    Ok(out)
}
