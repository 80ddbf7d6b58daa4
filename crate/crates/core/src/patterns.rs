//! Neighbourhood patterns of border and perimeter cells.
//!
//! A cell's edge ring is read as a bit ring (bit `i` set when the `i`-th ring
//! neighbour is occupied) and reduced to its bracelet: the smallest value over
//! all rotations and reflections.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::animal::Animal;
use crate::error::{Error, Precondition, Result};
use crate::lattice::{AdjacencyMode, Cell, LatticeKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Border,
    Perimeter,
}

/// Bracelet class of a neighbourhood ring together with the role of the cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PatternClass {
    role: Role,
    ring_size: u8,
    occupancy: u8,
}

fn rotate(bits: u8, n: u8) -> u8 {
    let mask = ((1u16 << n) - 1) as u8;
    ((bits << 1) | (bits >> (n - 1))) & mask
}

fn reflect(bits: u8, n: u8) -> u8 {
    (0..n).fold(0, |acc, i| acc | (((bits >> i) & 1) << (n - 1 - i)))
}

/// Smallest representative over rotations and reflections.
pub fn bracelet(bits: u8, n: u8) -> u8 {
    let mut best = u8::MAX;
    for start in [bits, reflect(bits, n)] {
        let mut b = start;
        for _ in 0..n {
            best = best.min(b);
            b = rotate(b, n);
        }
    }
    best
}

/// Maximal runs of set bits around a ring; a full ring is one run.
fn runs(bits: u8, n: u8) -> usize {
    let full = ((1u16 << n) - 1) as u8;
    if bits == full {
        return 1;
    }
    (0..n)
        .filter(|&i| bits >> i & 1 == 1 && bits >> ((i + n - 1) % n) & 1 == 0)
        .count()
}

impl PatternClass {
    pub fn new(role: Role, ring_size: u8, occupancy: u8) -> Self {
        assert!(ring_size == 4 || ring_size == 6, "rings of size 4 or 6 only");
        PatternClass {
            role,
            ring_size,
            occupancy: bracelet(occupancy, ring_size),
        }
    }

    /// Every class realizable for `role` on a ring of this size.
    pub fn all(role: Role, ring_size: u8) -> Vec<PatternClass> {
        let full = ((1u16 << ring_size) - 1) as u8;
        let mut v: Vec<PatternClass> = (0..=full)
            .filter(|&b| match role {
                Role::Border => b != full,
                Role::Perimeter => b != 0,
            })
            .map(|b| PatternClass::new(role, ring_size, b))
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn role(self) -> Role {
        self.role
    }

    pub fn ring_size(self) -> usize {
        self.ring_size as usize
    }

    pub fn occupancy(self) -> u8 {
        self.occupancy
    }

    fn relevant_bits(self) -> u8 {
        match self.role {
            Role::Perimeter => self.occupancy,
            Role::Border => !self.occupancy & (((1u16 << self.ring_size) - 1) as u8),
        }
    }

    /// Occupied neighbours of a perimeter cell, empty neighbours of a border cell.
    pub fn relevant_count(self) -> usize {
        self.relevant_bits().count_ones() as usize
    }

    pub fn excess(self) -> usize {
        self.relevant_count().saturating_sub(1)
    }

    pub fn run_count(self) -> usize {
        runs(self.relevant_bits(), self.ring_size)
    }

    pub fn is_singleton_or_hole(self) -> bool {
        self.relevant_count() == self.ring_size()
    }

    pub fn is_bridge_pattern(self) -> bool {
        self.run_count() >= 2
    }

    pub fn is_bridge_adjacent(self) -> bool {
        self.relevant_count() + 1 == self.ring_size()
    }

    /// Letter name of the class, if it has one.
    ///
    /// Square border cells are lettered by their empty neighbours (a, b, c, d)
    /// and perimeter cells by their occupied ones (w, x, y, z). Hexagonal
    /// border cells run from (a) to (l) by occupied count and arrangement;
    /// a perimeter cell takes the letter of the complementary border ring,
    /// shifted from a..l to o..z.
    pub fn letter(self) -> Option<char> {
        match self.ring_size {
            4 => {
                let k = self.relevant_count();
                let opposite = self.run_count() == 2;
                let base = match (k, opposite) {
                    (2, false) => 0,
                    (3, _) => 1,
                    (4, _) => 2,
                    (2, true) => 3,
                    _ => return None,
                };
                let first = if self.role == Role::Border { b'a' } else { b'w' };
                Some((first + base) as char)
            }
            _ => {
                // the complement of a perimeter ring is read as a border ring
                let ring = match self.role {
                    Role::Border => self.occupancy,
                    Role::Perimeter => !self.occupancy & 0x3f,
                };
                let k = ring.count_ones();
                let r = runs(ring, 6);
                let i = match (k, r) {
                    (0, _) => 0,
                    (1, _) => 1,
                    (2, 1) => 2,
                    (2, _) if bracelet(ring, 6) == 0b000101 => 3,
                    (2, _) => 4,
                    (3, 1) => 5,
                    (3, 2) => 6,
                    (3, _) => 7,
                    (4, 1) => 8,
                    (4, _) if bracelet(ring, 6) == 0b010111 => 9,
                    (4, _) => 10,
                    (5, _) => 11,
                    _ => return None,
                };
                let first = if self.role == Role::Border { b'a' } else { b'o' };
                Some((first + i) as char)
            }
        }
    }

    /// Letter if lettered, otherwise `B<count>` / `P<count>` by relevant count.
    pub fn name(self) -> String {
        match self.letter() {
            Some(l) => l.to_string(),
            None => {
                let r = if self.role == Role::Border { 'B' } else { 'P' };
                format!("{r}{}", self.relevant_count())
            }
        }
    }
}

impl fmt::Display for PatternClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl Serialize for PatternClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.name())
    }
}

fn check_supported(a: &Animal) -> Result<u8> {
    if a.lattice().mode() != AdjacencyMode::Edge || a.kind() == LatticeKind::Triangular {
        return Err(Error::Unsupported(format!(
            "patterns are defined on square and hexagonal edge lattices, not {}",
            a.lattice()
        )));
    }
    Ok(a.kind().ring_size() as u8)
}

fn ring_bits(a: &Animal, c: Cell) -> u8 {
    a.kind()
        .neighbors(c)
        .enumerate()
        .fold(0, |acc, (i, d)| acc | (u8::from(a.contains(d)) << i))
}

/// Pattern class of a border or perimeter cell.
pub fn classify_cell(a: &Animal, c: Cell) -> Result<PatternClass> {
    let n = check_supported(a)?;
    let bits = ring_bits(a, c);
    let full = ((1u16 << n) - 1) as u8;
    let role = match (a.contains(c), bits) {
        (true, b) if b != full => Role::Border,
        (false, b) if b != 0 => Role::Perimeter,
        _ => return Err(Error::NotBoundaryCell(c)),
    };
    Ok(PatternClass::new(role, n, bits))
}

/// Counts of every pattern class on an animal's border and perimeter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternCensus {
    pub counts: BTreeMap<PatternClass, usize>,
    pub perimeter: usize,
    pub border: usize,
    pub e_p: usize,
    pub e_b: usize,
}

impl PatternCensus {
    pub fn count(&self, letter: char) -> usize {
        self.counts
            .iter()
            .filter(|(k, _)| k.letter() == Some(letter))
            .map(|(_, &v)| v)
            .sum()
    }

    /// Positive-excess classes present, by letter.
    pub fn letters(&self) -> impl Iterator<Item = char> + '_ {
        self.counts
            .iter()
            .filter(|(k, &v)| v > 0 && k.excess() > 0)
            .filter_map(|(k, _)| k.letter())
    }
}

impl Serialize for PatternCensus {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(None)?;
        for (k, v) in &self.counts {
            let key = match k.role {
                Role::Border => format!("border:{k}"),
                Role::Perimeter => format!("perimeter:{k}"),
            };
            m.serialize_entry(&key, v)?;
        }
        m.serialize_entry("P", &self.perimeter)?;
        m.serialize_entry("B", &self.border)?;
        m.serialize_entry("eP", &self.e_p)?;
        m.serialize_entry("eB", &self.e_b)?;
        m.end()
    }
}

pub fn census(a: &Animal) -> Result<PatternCensus> {
    check_supported(a)?;
    let mut counts = BTreeMap::new();
    let border = a.border();
    let perimeter = a.perimeter();
    for &c in border.iter().chain(&perimeter) {
        *counts.entry(classify_cell(a, c)?).or_insert(0) += 1;
    }
    let excess = |role: Role| -> usize {
        counts
            .iter()
            .filter(|(k, _)| k.role == role)
            .map(|(k, v)| k.excess() * v)
            .sum()
    };
    Ok(PatternCensus {
        e_p: excess(Role::Perimeter),
        e_b: excess(Role::Border),
        counts,
        perimeter: perimeter.len(),
        border: border.len(),
    })
}

/// Border cells and perimeter cells whose neighbourhood is a bridge
/// pattern. On the square lattice these are the (d) and (z) cells.
pub fn bridge_pattern_cells(a: &Animal) -> Result<(Vec<Cell>, Vec<Cell>)> {
    let flagged = |cells: Vec<Cell>| -> Result<Vec<Cell>> {
        let mut out = Vec::new();
        for c in cells {
            if classify_cell(a, c)?.is_bridge_pattern() {
                out.push(c);
            }
        }
        Ok(out)
    };
    Ok((flagged(a.border())?, flagged(a.perimeter())?))
}

/// `#a + 2#b - #w - 2#x` on a hole-free polyomino of two or more cells.
pub fn turn_identity(a: &Animal) -> Result<i64> {
    if a.kind() != LatticeKind::Square {
        return Err(Error::Unsupported("the turn identity is for polyominoes".into()));
    }
    let holes = a.hole_count();
    if holes > 0 {
        return Err(Error::Precondition(Precondition::Holes(holes)));
    }
    if a.size() == 1 {
        return Err(Error::Precondition(Precondition::Singleton));
    }
    let c = census(a)?;
    let n = |l| c.count(l) as i64;
    Ok(n('a') + 2 * n('b') - n('w') - 2 * n('x'))
}

fn hex_preconditions(a: &Animal) -> Result<PatternCensus> {
    if a.kind() != LatticeKind::Hexagonal {
        return Err(Error::Unsupported("the angle identity is for polyhexes".into()));
    }
    let holes = a.hole_count();
    if holes > 0 {
        return Err(Error::Precondition(Precondition::Holes(holes)));
    }
    if let Some(&c) = a.bridge_cells().first() {
        return Err(Error::Precondition(Precondition::Bridge(c)));
    }
    if let Some(&c) = a.perimeter_bridge_cells().first() {
        return Err(Error::Precondition(Precondition::PerimeterBridge(c)));
    }
    if a.size() == 1 {
        return Err(Error::Precondition(Precondition::Singleton));
    }
    census(a)
}

/// `(3#c + 2#f + #i, 3#q + 2#t + #w + 6)` on a polyhex whose positive-excess
/// patterns are all among c, f, i, q, t, w.
pub fn hex_angle_identity(a: &Animal) -> Result<(i64, i64)> {
    let c = hex_preconditions(a)?;
    if let Some(l) = c.letters().find(|l| !"cfiqtw".contains(*l)) {
        return Err(Error::Precondition(Precondition::Pattern(l)));
    }
    let n = |l| c.count(l) as i64;
    Ok((
        3 * n('c') + 2 * n('f') + n('i'),
        3 * n('q') + 2 * n('t') + n('w') + 6,
    ))
}

/// The same balance with the leaf pattern (b) and the notch pattern (p)
/// included, each with weight 4. Needs only a hole-free, bridge-free
/// polyhex of two or more cells.
pub fn hex_angle_balance(a: &Animal) -> Result<(i64, i64)> {
    let c = hex_preconditions(a)?;
    let n = |l| c.count(l) as i64;
    Ok((
        4 * n('b') + 3 * n('c') + 2 * n('f') + n('i'),
        4 * n('p') + 3 * n('q') + 2 * n('t') + n('w') + 6,
    ))
}

/// `|P| - |B|`.
pub fn stepping_gap(a: &Animal) -> i64 {
    a.perimeter_size() as i64 - a.border().len() as i64
}
