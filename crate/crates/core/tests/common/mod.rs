//! Naive reference enumerator, written without the library's lattice code.
//!
//! Animals of size n are grown from those of size n - 1 by adding every
//! neighbouring cell, then normalised by translation and deduplicated.

#![allow(dead_code)]

use std::collections::BTreeSet;

pub type Shape = BTreeSet<(i32, i32)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grid {
    Square,
    Hex,
    Tri,
    TriVertex,
}

/// Triangle `(x, y)` as three lattice points `(X, j)` with `X + j` even:
/// an up triangle (even `x + y`) has base `(x, y)..(x + 2, y)` and apex
/// `(x + 1, y + 1)`; a down triangle has top `(x, y + 1)..(x + 2, y + 1)` and
/// apex `(x + 1, y)`.
pub fn corners(x: i32, y: i32) -> [(i32, i32); 3] {
    if (x + y).rem_euclid(2) == 0 {
        [(x, y), (x + 2, y), (x + 1, y + 1)]
    } else {
        [(x, y + 1), (x + 2, y + 1), (x + 1, y)]
    }
}

fn shared_corners(a: (i32, i32), b: (i32, i32)) -> usize {
    let ca = corners(a.0, a.1);
    let cb = corners(b.0, b.1);
    ca.iter().filter(|p| cb.contains(p)).count()
}

pub fn neighbours(g: Grid, (x, y): (i32, i32)) -> Vec<(i32, i32)> {
    match g {
        Grid::Square => vec![(x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)],
        Grid::Hex => vec![
            (x + 1, y),
            (x - 1, y),
            (x, y + 1),
            (x, y - 1),
            (x + 1, y - 1),
            (x - 1, y + 1),
        ],
        Grid::Tri | Grid::TriVertex => {
            let need = if g == Grid::Tri { 2 } else { 1 };
            let mut out = Vec::new();
            for dy in -1..=1 {
                for dx in -3..=3 {
                    let c = (x + dx, y + dy);
                    if c != (x, y) && shared_corners((x, y), c) >= need {
                        out.push(c);
                    }
                }
            }
            out
        }
    }
}

/// Cells joined by an edge; growth always uses these.
pub fn edge_neighbours(g: Grid, c: (i32, i32)) -> Vec<(i32, i32)> {
    match g {
        Grid::TriVertex => neighbours(Grid::Tri, c),
        other => neighbours(other, c),
    }
}

pub fn normalise(g: Grid, s: &Shape) -> Shape {
    let &(mx, my) = s.iter().next().expect("nonempty");
    let mut dx = -mx;
    if matches!(g, Grid::Tri | Grid::TriVertex) && (mx + my).rem_euclid(2) == 1 {
        dx += 1;
    }
    s.iter().map(|&(x, y)| (x + dx, y - my)).collect()
}

pub fn animals(g: Grid, n: usize) -> BTreeSet<Shape> {
    let mut level: BTreeSet<Shape> = BTreeSet::new();
    level.insert([(0, 0)].into());
    if matches!(g, Grid::Tri | Grid::TriVertex) {
        level.insert([(1, 0)].into());
    }
    for _ in 1..n {
        let mut next = BTreeSet::new();
        for s in &level {
            for &c in s {
                for d in edge_neighbours(g, c) {
                    if !s.contains(&d) {
                        let mut t = s.clone();
                        t.insert(d);
                        next.insert(normalise(g, &t));
                    }
                }
            }
        }
        level = next;
    }
    level
}

pub fn perimeter(g: Grid, s: &Shape) -> usize {
    s.iter()
        .flat_map(|&c| neighbours(g, c))
        .filter(|d| !s.contains(d))
        .collect::<BTreeSet<_>>()
        .len()
}

pub fn minimal(g: Grid, n: usize) -> (usize, BTreeSet<Shape>) {
    let all = animals(g, n);
    let p = all.iter().map(|s| perimeter(g, s)).min().expect("nonempty");
    (p, all.into_iter().filter(|s| perimeter(g, s) == p).collect())
}

pub fn to_lattice(g: Grid) -> latanim::Lattice {
    match g {
        Grid::Square => latanim::Lattice::SQUARE,
        Grid::Hex => latanim::Lattice::HEXAGONAL,
        Grid::Tri => latanim::Lattice::TRIANGULAR,
        Grid::TriVertex => latanim::Lattice::TRIANGULAR_VERTEX,
    }
}

pub fn shape_of(a: &latanim::Animal) -> Shape {
    a.cells().iter().map(|c| (c.x, c.y)).collect()
}
