//! The animal value type and the perimeter, border, inflation and deflation
//! operators, plus holes, bridges and excess.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph;
use crate::lattice::{canonical_translate, Cell, Lattice, LatticeKind};

/// A finite, possibly empty or disconnected, set of cells.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct CellSet {
    cells: Vec<Cell>,
}

impl CellSet {
    pub fn new(cells: impl IntoIterator<Item = Cell>) -> Self {
        let mut cells: Vec<Cell> = cells.into_iter().collect();
        cells.sort_unstable();
        cells.dedup();
        CellSet { cells }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.binary_search(&c).is_ok()
    }

    /// Edge-connected and nonempty.
    pub fn is_connected(&self, kind: LatticeKind) -> bool {
        !self.cells.is_empty() && components(kind, &self.cells) == 1
    }

    pub fn components(&self, kind: LatticeKind) -> usize {
        components(kind, &self.cells)
    }

    pub fn into_animal(self, lattice: Lattice) -> Result<Animal> {
        Animal::new(lattice, self.cells)
    }
}

impl FromIterator<Cell> for CellSet {
    fn from_iter<T: IntoIterator<Item = Cell>>(iter: T) -> Self {
        CellSet::new(iter)
    }
}

fn components(kind: LatticeKind, cells: &[Cell]) -> usize {
    graph::component_count(&edge_graph(kind, cells))
}

fn edge_graph(kind: LatticeKind, cells: &[Cell]) -> Vec<Vec<usize>> {
    cells
        .iter()
        .map(|&c| {
            kind.neighbors(c)
                .filter_map(|d| cells.binary_search(&d).ok())
                .collect()
        })
        .collect()
}

type CellMap = fn(Cell) -> Cell;

/// A nonempty, edge-connected set of cells in canonical position.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Animal {
    lattice: Lattice,
    cells: Vec<Cell>,
}

impl Animal {
    /// Validate and canonicalize a cell list.
    pub fn new(lattice: Lattice, cells: impl IntoIterator<Item = Cell>) -> Result<Self> {
        let mut cells: Vec<Cell> = cells.into_iter().collect();
        cells.sort_unstable();
        if let Some(w) = cells.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateCell(w[0]));
        }
        if cells.is_empty() {
            return Err(Error::Empty);
        }
        if components(lattice.kind(), &cells) != 1 {
            return Err(Error::Disconnected);
        }
        let (cells, _) = canonical_translate(lattice.kind(), cells)?;
        Ok(Animal { lattice, cells })
    }

    /// Trusts the caller: `cells` must be sorted, connected and canonical.
    pub(crate) fn from_canonical(lattice: Lattice, cells: Vec<Cell>) -> Self {
        debug_assert!(cells.windows(2).all(|w| w[0] < w[1]));
        Animal { lattice, cells }
    }

    pub fn singleton(lattice: Lattice) -> Self {
        Animal::from_canonical(lattice, vec![Cell::new(0, 0)])
    }

    pub fn lattice(&self) -> Lattice {
        self.lattice
    }

    pub fn kind(&self) -> LatticeKind {
        self.lattice.kind()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.binary_search(&c).is_ok()
    }

    fn occupied_around(&self, c: Cell) -> usize {
        self.lattice.adjacent(c).filter(|&d| self.contains(d)).count()
    }

    /// Empty cells adjacent to the animal, sorted.
    pub fn perimeter(&self) -> Vec<Cell> {
        let mut p: Vec<Cell> = self
            .cells
            .iter()
            .flat_map(|&c| self.lattice.adjacent(c))
            .filter(|&d| !self.contains(d))
            .collect();
        p.sort_unstable();
        p.dedup();
        p
    }

    pub fn perimeter_size(&self) -> usize {
        self.perimeter().len()
    }

    /// Cells of the animal with at least one empty neighbour, sorted.
    pub fn border(&self) -> Vec<Cell> {
        self.cells
            .iter()
            .copied()
            .filter(|&c| self.lattice.adjacent(c).any(|d| !self.contains(d)))
            .collect()
    }

    /// The animal together with its perimeter, in the animal's own frame.
    pub fn inflate_cells(&self) -> CellSet {
        CellSet::new(self.cells.iter().copied().chain(self.perimeter()))
    }

    pub fn inflate(&self) -> Animal {
        self.recanonical(self.inflate_cells().cells)
    }

    /// The animal with its border removed, in the animal's own frame.
    pub fn deflate(&self) -> CellSet {
        let border = self.border();
        CellSet {
            cells: self
                .cells
                .iter()
                .copied()
                .filter(|c| border.binary_search(c).is_err())
                .collect(),
        }
    }

    /// All cells within lattice distance `k`, computed by breadth-first search.
    pub fn inflate_k(&self, k: usize) -> Animal {
        let mut seen: HashSet<Cell> = self.cells.iter().copied().collect();
        let mut frontier = self.cells.clone();
        for _ in 0..k {
            let mut next = Vec::new();
            for c in frontier {
                for d in self.lattice.adjacent(c) {
                    if seen.insert(d) {
                        next.push(d);
                    }
                }
            }
            frontier = next;
        }
        self.recanonical(seen.into_iter().collect())
    }

    fn recanonical(&self, cells: Vec<Cell>) -> Animal {
        let (cells, _) = canonical_translate(self.kind(), cells).expect("nonempty");
        Animal::from_canonical(self.lattice, cells)
    }

    /// Complement of the animal inside its bounding box padded by `PAD`,
    /// labelled by component: `Some(0)` is the outside, `Some(h)` for `h >= 1`
    /// are holes and `None` marks occupied cells.
    fn complement_labels(&self) -> (Frame, Vec<Option<u32>>, usize) {
        let frame = Frame::around(&self.cells);
        let kind = self.kind();
        let mut label: Vec<Option<u32>> = vec![None; frame.len()];
        let mut empty = vec![true; frame.len()];
        for &c in &self.cells {
            empty[frame.index(c).expect("inside frame")] = false;
        }
        let mut next = 1u32;
        let mut stack = Vec::new();
        // flood the outside first so it gets label 0
        let order = (0..frame.len())
            .filter(|&i| frame.on_edge(i))
            .chain((0..frame.len()).filter(|&i| !frame.on_edge(i)));
        for s in order {
            if !empty[s] || label[s].is_some() {
                continue;
            }
            let id = if frame.on_edge(s) { 0 } else { next };
            if id == next {
                next += 1;
            }
            label[s] = Some(id);
            stack.push(s);
            while let Some(i) = stack.pop() {
                for d in kind.neighbors(frame.cell(i)) {
                    if let Some(j) = frame.index(d) {
                        if empty[j] && label[j].is_none() {
                            label[j] = Some(id);
                            stack.push(j);
                        }
                    }
                }
            }
        }
        (frame, label, next as usize - 1)
    }

    /// Number of finite components of the complement.
    pub fn hole_count(&self) -> usize {
        self.complement_labels().2
    }

    /// Cells whose removal disconnects the animal or merges two holes.
    pub fn bridge_cells(&self) -> Vec<Cell> {
        let kind = self.kind();
        let cut = graph::articulation_points(&edge_graph(kind, &self.cells));
        let (frame, label, holes) = self.complement_labels();
        self.cells
            .iter()
            .zip(cut)
            .filter(|&(&c, cut)| {
                cut || (holes >= 2 && {
                    let mut touched: Vec<u32> = kind
                        .neighbors(c)
                        .filter_map(|d| label[frame.index(d)?])
                        .filter(|&h| h > 0)
                        .collect();
                    touched.sort_unstable();
                    touched.dedup();
                    touched.len() >= 2
                })
            })
            .map(|(&c, _)| c)
            .collect()
    }

    /// Perimeter cells whose addition creates a hole.
    ///
    /// These are exactly the cut vertices of the complement graph once every
    /// cell on the frame edge is tied to one extra node standing for the
    /// unbounded outside.
    pub fn perimeter_bridge_cells(&self) -> Vec<Cell> {
        let kind = self.kind();
        let frame = Frame::around(&self.cells);
        let outside = frame.len();
        let mut adj = vec![Vec::new(); frame.len() + 1];
        for i in 0..frame.len() {
            let c = frame.cell(i);
            if self.contains(c) {
                continue;
            }
            for d in kind.neighbors(c) {
                if let Some(j) = frame.index(d) {
                    if !self.contains(d) {
                        adj[i].push(j);
                    }
                }
            }
            if frame.on_edge(i) {
                adj[i].push(outside);
                adj[outside].push(i);
            }
        }
        let cut = graph::articulation_points(&adj);
        self.perimeter()
            .into_iter()
            .filter(|&c| frame.index(c).is_some_and(|i| cut[i]))
            .collect()
    }

    /// Largest extent along the lattice's main axes.
    pub fn diameter(&self) -> usize {
        let extent = |f: &dyn Fn(Cell) -> i32| {
            let (lo, hi) = self
                .cells
                .iter()
                .map(|&c| f(c))
                .fold((i32::MAX, i32::MIN), |(lo, hi), v| (lo.min(v), hi.max(v)));
            (hi - lo) as usize
        };
        let xy = extent(&|c| c.x).max(extent(&|c| c.y));
        match self.kind() {
            LatticeKind::Hexagonal => xy.max(extent(&|c| c.x + c.y)),
            _ => xy,
        }
    }

    /// Smallest image under the point symmetries of the lattice, identifying
    /// animals that differ by a rotation or reflection.
    pub fn free_form(&self) -> Result<Animal> {
        let (rotate, reflect): (CellMap, CellMap) = match self.kind() {
            LatticeKind::Square => (|c| Cell::new(-c.y, c.x), |c| Cell::new(c.y, c.x)),
            LatticeKind::Hexagonal => (|c| Cell::new(-c.y, c.x + c.y), |c| Cell::new(c.y, c.x)),
            LatticeKind::Triangular => {
                return Err(Error::Unsupported(
                    "free forms are implemented for square and hexagonal cells".into(),
                ))
            }
        };
        let turns = self.kind().ring_size();
        let mut best: Option<Animal> = None;
        for mirrored in [false, true] {
            let mut cells: Vec<Cell> = self.cells.clone();
            if mirrored {
                cells.iter_mut().for_each(|c| *c = reflect(*c));
            }
            for _ in 0..turns {
                cells.iter_mut().for_each(|c| *c = rotate(*c));
                let a = self.recanonical(cells.clone());
                if best.as_ref().is_none_or(|b| a < *b) {
                    best = Some(a);
                }
            }
        }
        Ok(best.expect("at least one symmetry"))
    }

    /// `(e_P, e_B)`: summed over-adjacency of perimeter and border cells.
    pub fn excess(&self) -> (usize, usize) {
        let ep = self
            .perimeter()
            .into_iter()
            .map(|c| self.occupied_around(c) - 1)
            .sum();
        let deg = self.lattice.adjacency_degree();
        let eb = self
            .border()
            .into_iter()
            .map(|c| deg - self.occupied_around(c) - 1)
            .sum();
        (ep, eb)
    }
}

impl fmt::Display for Animal {
    /// Comma-separated `x y` pairs, the per-line form of set files.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.cells.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{} {}", c.x, c.y)?;
        }
        Ok(())
    }
}

/// Padded bounding box with dense indexing.
struct Frame {
    x0: i32,
    y0: i32,
    w: usize,
    h: usize,
}

// Wide enough that every perimeter cell, including the vertex-mode ones two
// columns out, is off the frame edge, and the edge band itself is connected.
const PAD: i32 = 3;

impl Frame {
    fn around(cells: &[Cell]) -> Frame {
        let (mut x0, mut x1, mut y0, mut y1) = (i32::MAX, i32::MIN, i32::MAX, i32::MIN);
        for c in cells {
            x0 = x0.min(c.x);
            x1 = x1.max(c.x);
            y0 = y0.min(c.y);
            y1 = y1.max(c.y);
        }
        Frame {
            x0: x0 - PAD,
            y0: y0 - PAD,
            w: (x1 - x0 + 1 + 2 * PAD) as usize,
            h: (y1 - y0 + 1 + 2 * PAD) as usize,
        }
    }

    fn len(&self) -> usize {
        self.w * self.h
    }

    fn index(&self, c: Cell) -> Option<usize> {
        let dx = usize::try_from(c.x - self.x0).ok()?;
        let dy = usize::try_from(c.y - self.y0).ok()?;
        (dx < self.w && dy < self.h).then_some(dy * self.w + dx)
    }

    fn cell(&self, i: usize) -> Cell {
        Cell::new(self.x0 + (i % self.w) as i32, self.y0 + (i / self.w) as i32)
    }

    fn on_edge(&self, i: usize) -> bool {
        let (x, y) = (i % self.w, i / self.w);
        x == 0 || y == 0 || x + 1 == self.w || y + 1 == self.h
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sq(cells: &[(i32, i32)]) -> Animal {
        Animal::new(Lattice::SQUARE, cells.iter().map(|&c| c.into())).unwrap()
    }

    fn hex(cells: &[(i32, i32)]) -> Animal {
        Animal::new(Lattice::HEXAGONAL, cells.iter().map(|&c| c.into())).unwrap()
    }

    fn cs(cells: &[(i32, i32)]) -> Vec<Cell> {
        cells.iter().map(|&c| c.into()).collect()
    }

    const DOMINO: &[(i32, i32)] = &[(0, 0), (1, 0)];
    const L3: &[(i32, i32)] = &[(0, 0), (1, 0), (0, 1)];
    const I3: &[(i32, i32)] = &[(0, 0), (1, 0), (2, 0)];
    const PLUS: &[(i32, i32)] = &[(0, 0), (1, -1), (1, 0), (1, 1), (2, 0)];
    const FLOWER: &[(i32, i32)] = &[(0, 0), (1, 0), (1, -1), (0, -1), (-1, 0), (-1, 1), (0, 1)];

    #[test]
    fn construction_errors() {
        assert!(matches!(
            Animal::new(Lattice::SQUARE, cs(&[(0, 0), (2, 0)])),
            Err(Error::Disconnected)
        ));
        assert!(matches!(
            Animal::new(Lattice::SQUARE, cs(&[(0, 0), (0, 0)])),
            Err(Error::DuplicateCell(_))
        ));
        assert!(matches!(Animal::new(Lattice::SQUARE, vec![]), Err(Error::Empty)));
    }

    #[test]
    fn vertex_mode_keeps_edge_connectivity() {
        // (0,0) and (2,0) share a vertex but no edge
        let r = Animal::new(Lattice::TRIANGULAR_VERTEX, cs(&[(0, 0), (2, 0)]));
        assert!(matches!(r, Err(Error::Disconnected)));
    }

    #[test]
    fn perimeter_examples() {
        assert_eq!(sq(DOMINO).perimeter_size(), 6);
        assert_eq!(sq(L3).perimeter_size(), 7);
        assert_eq!(hex(&[(0, 0), (1, 0)]).perimeter_size(), 8);
        assert_eq!(Animal::singleton(Lattice::TRIANGULAR_VERTEX).perimeter_size(), 12);
    }

    #[test]
    fn border_examples() {
        let plus = sq(PLUS);
        assert_eq!(plus.border().len(), 4);
        assert!(!plus.border().contains(&Cell::new(1, 0)));
        assert_eq!(sq(&[(0, 0)]).border(), cs(&[(0, 0)]));
        assert_eq!(sq(DOMINO).border().len(), 2);
    }

    #[test]
    fn inflate_examples() {
        let single = Animal::singleton(Lattice::SQUARE);
        assert_eq!(single.inflate(), sq(PLUS));
        let naph = hex(&[(0, 0), (1, 0)]).inflate();
        assert_eq!(naph.size(), 10);
        let d = sq(DOMINO).inflate();
        assert_eq!((d.size(), d.perimeter_size()), (8, 10));
    }

    #[test]
    fn inflate_keeps_the_frame() {
        let a = sq(L3);
        let big = a.inflate_cells();
        assert!(a.cells().iter().all(|&c| big.contains(c)));
        assert_eq!(big.len(), a.size() + a.perimeter_size());
    }

    #[test]
    fn deflate_examples() {
        assert_eq!(sq(PLUS).deflate().cells(), cs(&[(1, 0)]).as_slice());
        let two_plus = sq(&[
            (0, -1),
            (-1, 0),
            (0, 0),
            (1, 0),
            (0, 1),
            (1, 1),
            (2, 1),
            (1, 2),
        ]);
        assert_eq!(two_plus.size(), 8);
        let d = two_plus.deflate();
        assert_eq!(d.len(), 2);
        assert!(!d.is_connected(LatticeKind::Square));
        assert_eq!(hex(FLOWER).deflate().len(), 1);
        assert!(sq(DOMINO).deflate().is_empty());
    }

    #[test]
    fn inflate_k_examples() {
        let d = sq(DOMINO);
        assert_eq!(d.inflate_k(0), d);
        let d2 = d.inflate_k(2);
        assert_eq!((d2.size(), d2.perimeter_size()), (18, 14));
        assert_eq!(d2, d.inflate().inflate());
        let v = Animal::singleton(Lattice::TRIANGULAR_VERTEX);
        assert_eq!(v.inflate_k(2), v.inflate().inflate());
    }

    #[test]
    fn holes() {
        let ring = sq(&[
            (0, 0),
            (1, 0),
            (2, 0),
            (0, 1),
            (2, 1),
            (0, 2),
            (1, 2),
            (2, 2),
        ]);
        assert_eq!(ring.hole_count(), 1);
        assert_eq!(sq(L3).hole_count(), 0);
        assert_eq!(hex(FLOWER).hole_count(), 0);
        let hex_ring = hex(&FLOWER[1..]);
        assert_eq!(hex_ring.hole_count(), 1);
    }

    #[test]
    fn triangular_hole() {
        // a ring of triangles around a compact patch encloses it
        let hexagon: Vec<Cell> = cs(&[(0, 0), (1, 0), (2, 0), (1, 1), (0, 1), (-1, 1)]);
        let a = Animal::new(Lattice::TRIANGULAR, hexagon.clone()).unwrap();
        assert_eq!(a.hole_count(), 0);
        let v = Animal::new(Lattice::TRIANGULAR_VERTEX, hexagon).unwrap();
        let shell: Vec<Cell> = v
            .inflate_cells()
            .cells()
            .iter()
            .copied()
            .filter(|&c| !v.contains(c))
            .collect();
        assert_eq!(Animal::new(Lattice::TRIANGULAR, shell).unwrap().hole_count(), 1);
    }

    #[test]
    fn bridges() {
        assert_eq!(sq(I3).bridge_cells(), cs(&[(1, 0)]));
        assert_eq!(sq(PLUS).bridge_cells(), cs(&[(1, 0)]));
        assert!(sq(DOMINO).bridge_cells().is_empty());
        // a wall between two single-cell holes
        let two_holes = sq(&[
            (0, 0),
            (1, 0),
            (2, 0),
            (3, 0),
            (4, 0),
            (0, 1),
            (2, 1),
            (4, 1),
            (0, 2),
            (1, 2),
            (2, 2),
            (3, 2),
            (4, 2),
        ]);
        assert_eq!(two_holes.hole_count(), 2);
        assert_eq!(two_holes.bridge_cells(), cs(&[(2, 1)]));
    }

    #[test]
    fn perimeter_bridges() {
        assert!(sq(DOMINO).perimeter_bridge_cells().is_empty());
        let u = sq(&[(0, 0), (1, 0), (2, 0), (0, 1), (2, 1)]);
        // (1,1) has three occupied neighbours and filling it leaves a 2x3 block
        assert!(u.perimeter_bridge_cells().is_empty());
        let c5 = hex(&[(1, 0), (1, -1), (0, -1), (-1, 0), (-1, 1)]);
        // canonical position shifts the gap from (0,1) to (1,1)
        assert_eq!(c5.perimeter_bridge_cells(), cs(&[(1, 1)]));
        // a square cup with a one-wide mouth
        let cup = sq(&[(0, 0), (1, 0), (2, 0), (0, 1), (2, 1), (0, 2), (2, 2)]);
        assert_eq!(cup.perimeter_bridge_cells(), cs(&[(1, 2)]));
    }

    #[test]
    fn perimeter_bridges_match_hole_delta() {
        let a = sq(&[(0, 0), (1, 0), (2, 0), (0, 1), (2, 1), (0, 2), (0, 3), (1, 3), (2, 2)]);
        let h = a.hole_count();
        let by_delta: Vec<Cell> = a
            .perimeter()
            .into_iter()
            .filter(|&c| {
                let mut cells = a.cells().to_vec();
                cells.push(c);
                Animal::new(Lattice::SQUARE, cells).unwrap().hole_count() > h
            })
            .collect();
        assert_eq!(a.perimeter_bridge_cells(), by_delta);
    }

    #[test]
    fn diameters() {
        assert_eq!(sq(&[(0, 0)]).diameter(), 0);
        assert_eq!(sq(I3).diameter(), 2);
        assert_eq!(hex(&[(0, 0), (1, 0)]).diameter(), 1);
        // (1,-1) is a neighbour: extents 1 in q, 1 in r, 0 in q+r
        assert_eq!(hex(&[(0, 0), (1, -1)]).diameter(), 1);
        assert_eq!(hex(FLOWER).diameter(), 2);
    }

    #[test]
    fn excess_examples() {
        assert_eq!(sq(L3).excess(), (1, 5));
        assert_eq!(sq(DOMINO).excess(), (0, 4));
        assert_eq!(sq(&[(0, 0)]).excess(), (0, 3));
    }

    #[test]
    fn free_forms() {
        let l = sq(L3);
        let rotated = sq(&[(0, 0), (1, 0), (1, 1)]);
        assert_eq!(l.free_form().unwrap(), rotated.free_form().unwrap());
        assert_ne!(l.free_form().unwrap(), sq(I3).free_form().unwrap());
        let a = hex(&[(0, 0), (1, 0), (2, -1)]);
        let b = hex(&[(0, 0), (1, 0), (1, 1)]);
        assert_eq!(a.free_form().unwrap(), b.free_form().unwrap());
    }

    #[test]
    fn display_lists_pairs() {
        assert_eq!(sq(DOMINO).to_string(), "0 0,1 0");
    }
}
