//! Square, hexagonal and triangular lattices.
//!
//! Every lattice addresses its cells with a pair of integers:
//!
//! - square: `(x, y)`;
//! - hexagonal: axial `(q, r)`, stored in `Cell::x` / `Cell::y`;
//! - triangular: `(x, y)` where `y` is the row and the orientation is the
//!   parity of `x + y` (even points up, odd points down).
//!
//! Edge neighbours are always returned in cyclic ring order, which the
//! pattern classifier relies on.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LatticeKind {
    Square,
    #[serde(rename = "hex")]
    Hexagonal,
    #[serde(rename = "tri")]
    Triangular,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AdjacencyMode {
    Edge,
    Vertex,
}

/// One lattice cell. The meaning of the two coordinates depends on the lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Cell {
    pub x: i32,
    pub y: i32,
}

impl Cell {
    pub const fn new(x: i32, y: i32) -> Self {
        Cell { x, y }
    }

    pub fn offset(self, dx: i32, dy: i32) -> Self {
        Cell::new(self.x + dx, self.y + dy)
    }

    /// Triangular orientation: true when the triangle points up.
    pub fn is_up(self) -> bool {
        (self.x + self.y).rem_euclid(2) == 0
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl From<(i32, i32)> for Cell {
    fn from((x, y): (i32, i32)) -> Self {
        Cell::new(x, y)
    }
}

const SQUARE_RING: [(i32, i32); 4] = [(1, 0), (0, 1), (-1, 0), (0, -1)];
const HEX_RING: [(i32, i32); 6] = [(1, 0), (1, -1), (0, -1), (-1, 0), (-1, 1), (0, 1)];
const TRI_UP_RING: [(i32, i32); 3] = [(1, 0), (0, -1), (-1, 0)];
const TRI_DOWN_RING: [(i32, i32); 3] = [(1, 0), (-1, 0), (0, 1)];

// Cells sharing at least one vertex with a triangle, derived from the
// vertex incidence in `triangle_vertices` (see the unit tests).
const TRI_UP_VERTEX: [(i32, i32); 12] = [
    (-2, -1),
    (-2, 0),
    (-1, -1),
    (-1, 0),
    (-1, 1),
    (0, -1),
    (0, 1),
    (1, -1),
    (1, 0),
    (1, 1),
    (2, -1),
    (2, 0),
];
const TRI_DOWN_VERTEX: [(i32, i32); 12] = [
    (-2, 0),
    (-2, 1),
    (-1, -1),
    (-1, 0),
    (-1, 1),
    (0, -1),
    (0, 1),
    (1, -1),
    (1, 0),
    (1, 1),
    (2, 0),
    (2, 1),
];

impl LatticeKind {
    pub const ALL: [LatticeKind; 3] = [
        LatticeKind::Square,
        LatticeKind::Hexagonal,
        LatticeKind::Triangular,
    ];

    /// Number of edge neighbours of every cell.
    pub fn ring_size(self) -> usize {
        match self {
            LatticeKind::Square => 4,
            LatticeKind::Hexagonal => 6,
            LatticeKind::Triangular => 3,
        }
    }

    pub(crate) fn edge_offsets(self, c: Cell) -> &'static [(i32, i32)] {
        match self {
            LatticeKind::Square => &SQUARE_RING,
            LatticeKind::Hexagonal => &HEX_RING,
            LatticeKind::Triangular if c.is_up() => &TRI_UP_RING,
            LatticeKind::Triangular => &TRI_DOWN_RING,
        }
    }

    /// Edge neighbours of `c` in cyclic ring order.
    pub fn neighbors(self, c: Cell) -> Neighbors {
        Neighbors::new(c, self.edge_offsets(c))
    }

    /// Whether shifting by `(dx, dy)` is a symmetry of the lattice.
    pub fn is_translation(self, dx: i32, dy: i32) -> bool {
        match self {
            LatticeKind::Triangular => (dx + dy).rem_euclid(2) == 0,
            _ => true,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LatticeKind::Square => "square",
            LatticeKind::Hexagonal => "hex",
            LatticeKind::Triangular => "tri",
        }
    }
}

impl fmt::Display for LatticeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LatticeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "square" | "sq" => Ok(LatticeKind::Square),
            "hex" | "hexagonal" => Ok(LatticeKind::Hexagonal),
            "tri" | "triangular" => Ok(LatticeKind::Triangular),
            other => Err(Error::UnknownLattice(other.to_string())),
        }
    }
}

impl fmt::Display for AdjacencyMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AdjacencyMode::Edge => "edge",
            AdjacencyMode::Vertex => "vertex",
        })
    }
}

impl FromStr for AdjacencyMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge" => Ok(AdjacencyMode::Edge),
            "vertex" => Ok(AdjacencyMode::Vertex),
            other => Err(Error::UnknownAdjacency(other.to_string())),
        }
    }
}

/// Iterator over the cells at a fixed list of offsets from a base cell.
#[derive(Clone, Debug)]
pub struct Neighbors {
    base: Cell,
    offsets: &'static [(i32, i32)],
    next: usize,
}

impl Neighbors {
    fn new(base: Cell, offsets: &'static [(i32, i32)]) -> Self {
        Neighbors {
            base,
            offsets,
            next: 0,
        }
    }
}

impl Iterator for Neighbors {
    type Item = Cell;

    fn next(&mut self) -> Option<Cell> {
        let &(dx, dy) = self.offsets.get(self.next)?;
        self.next += 1;
        Some(self.base.offset(dx, dy))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = self.offsets.len() - self.next;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Neighbors {}

/// A lattice together with the adjacency used for perimeter and border.
///
/// Connectivity of animals is always edge-based; the mode only changes which
/// empty cells count as perimeter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Lattice {
    kind: LatticeKind,
    mode: AdjacencyMode,
}

impl Lattice {
    pub const SQUARE: Lattice = Lattice {
        kind: LatticeKind::Square,
        mode: AdjacencyMode::Edge,
    };
    pub const HEXAGONAL: Lattice = Lattice {
        kind: LatticeKind::Hexagonal,
        mode: AdjacencyMode::Edge,
    };
    pub const TRIANGULAR: Lattice = Lattice {
        kind: LatticeKind::Triangular,
        mode: AdjacencyMode::Edge,
    };
    pub const TRIANGULAR_VERTEX: Lattice = Lattice {
        kind: LatticeKind::Triangular,
        mode: AdjacencyMode::Vertex,
    };

    pub fn new(kind: LatticeKind, mode: AdjacencyMode) -> Result<Self> {
        if mode == AdjacencyMode::Vertex && kind != LatticeKind::Triangular {
            return Err(Error::VertexModeUnsupported(kind));
        }
        Ok(Lattice { kind, mode })
    }

    pub fn kind(self) -> LatticeKind {
        self.kind
    }

    pub fn mode(self) -> AdjacencyMode {
        self.mode
    }

    pub fn edge_neighbors(self, c: Cell) -> Neighbors {
        self.kind.neighbors(c)
    }

    /// Neighbours under the perimeter adjacency of this lattice.
    pub fn adjacent(self, c: Cell) -> Neighbors {
        Neighbors::new(c, self.adjacent_offsets(c))
    }

    pub(crate) fn adjacent_offsets(self, c: Cell) -> &'static [(i32, i32)] {
        match self.mode {
            AdjacencyMode::Edge => self.kind.edge_offsets(c),
            AdjacencyMode::Vertex if c.is_up() => &TRI_UP_VERTEX,
            AdjacencyMode::Vertex => &TRI_DOWN_VERTEX,
        }
    }

    pub fn adjacency_degree(self) -> usize {
        match self.mode {
            AdjacencyMode::Edge => self.kind.ring_size(),
            AdjacencyMode::Vertex => 12,
        }
    }
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.mode {
            AdjacencyMode::Edge => write!(f, "{}", self.kind),
            AdjacencyMode::Vertex => write!(f, "{}/vertex", self.kind),
        }
    }
}

impl FromStr for Lattice {
    type Err = Error;

    /// Accepts `square`, `hex`, `tri` and `tri/vertex` (also `tri-vertex`).
    fn from_str(s: &str) -> Result<Self> {
        let (kind, mode) = match s.split_once(['/', '-', ':']) {
            Some((k, m)) => (k.parse()?, m.parse()?),
            None => (s.parse()?, AdjacencyMode::Edge),
        };
        Lattice::new(kind, mode)
    }
}

/// The 12 triangles sharing at least one vertex with `c`.
pub fn vertex_neighbors(kind: LatticeKind, c: Cell) -> Result<Neighbors> {
    if kind != LatticeKind::Triangular {
        return Err(Error::VertexModeUnsupported(kind));
    }
    Ok(Lattice::TRIANGULAR_VERTEX.adjacent(c))
}

/// Translate `cells` so that the lexicographically smallest cell sits at the
/// origin, and sort them. Returns the cells and the applied shift.
///
/// On the triangular lattice only parity-preserving shifts are translations,
/// so a downward minimum lands on `(1, 0)` instead of `(0, 0)`.
pub fn canonical_translate(
    kind: LatticeKind,
    cells: impl IntoIterator<Item = Cell>,
) -> Result<(Vec<Cell>, (i32, i32))> {
    let mut cells: Vec<Cell> = cells.into_iter().collect();
    let min = *cells.iter().min().ok_or(Error::Empty)?;
    let (mut dx, dy) = (-min.x, -min.y);
    if !kind.is_translation(dx, dy) {
        dx += 1;
    }
    for c in &mut cells {
        *c = c.offset(dx, dy);
    }
    cells.sort_unstable();
    Ok((cells, (dx, dy)))
}

/// Exact polygon vertices on an integer grid.
///
/// - square: unit coordinates;
/// - hexagonal: `(X, Y)` in units of `(sqrt(3)/2, 1/2)`;
/// - triangular: `(X, Y)` in units of `(1/2, sqrt(3)/2)`.
///
/// Vertices are listed counter-clockwise.
pub fn cell_vertices_exact(kind: LatticeKind, c: Cell) -> Vec<(i64, i64)> {
    let (x, y) = (i64::from(c.x), i64::from(c.y));
    match kind {
        LatticeKind::Square => vec![(x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1)],
        LatticeKind::Hexagonal => {
            let (cx, cy) = (2 * x + y, 3 * y);
            [(1, 1), (0, 2), (-1, 1), (-1, -1), (0, -2), (1, -1)]
                .iter()
                .map(|&(dx, dy)| (cx + dx, cy + dy))
                .collect()
        }
        LatticeKind::Triangular => {
            let [a, b, c] = triangle_vertices(c);
            [a, b, c].iter().map(|&(u, j)| (2 * u + j, j)).collect()
        }
    }
}

/// Triangle corners in lattice-vertex coordinates `(u, j)`, where vertex
/// `(u, j)` sits at `(u + j/2, j * sqrt(3)/2)`.
pub(crate) fn triangle_vertices(c: Cell) -> [(i64, i64); 3] {
    let (x, y) = (i64::from(c.x), i64::from(c.y));
    if c.is_up() {
        let u = (x - y).div_euclid(2);
        [(u, y), (u + 1, y), (u, y + 1)]
    } else {
        let u = (x - y - 1).div_euclid(2);
        [(u + 1, y), (u + 1, y + 1), (u, y + 1)]
    }
}

/// Planar polygon of a cell, for rendering.
pub fn cell_geometry(kind: LatticeKind, c: Cell) -> Vec<(f64, f64)> {
    let h = 3f64.sqrt() / 2.0;
    cell_vertices_exact(kind, c)
        .into_iter()
        .map(|(x, y)| {
            let (x, y) = (x as f64, y as f64);
            match kind {
                LatticeKind::Square => (x, y),
                LatticeKind::Hexagonal => (x * h, y * 0.5),
                LatticeKind::Triangular => (x * 0.5, y * h),
            }
        })
        .collect()
}
