//! Polyhexes read as benzenoid hydrocarbons.
//!
//! Every hexagon corner is a carbon atom; the carbon skeleton is the union of
//! hexagon edges. A carbon bonded to only two other carbons carries one
//! hydrogen.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::animal::Animal;
use crate::enumerate::{self, EnumConfig, MinimalSet};
use crate::error::{Error, Result};
use crate::lattice::{cell_vertices_exact, Lattice, LatticeKind};
use crate::theory;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MolecularFormula {
    pub carbons: usize,
    pub hydrogens: usize,
}

impl fmt::Display for MolecularFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}H{}", self.carbons, self.hydrogens)
    }
}

fn require_hex(a: &Animal) -> Result<()> {
    if a.lattice() != Lattice::HEXAGONAL {
        return Err(Error::Unsupported(format!(
            "molecular formulas need a polyhex, got a {} animal",
            a.lattice()
        )));
    }
    Ok(())
}

pub fn molecular_formula(a: &Animal) -> Result<MolecularFormula> {
    require_hex(a)?;
    let mut bonds: BTreeSet<((i64, i64), (i64, i64))> = BTreeSet::new();
    for &c in a.cells() {
        let v = cell_vertices_exact(LatticeKind::Hexagonal, c);
        for i in 0..v.len() {
            let (p, q) = (v[i], v[(i + 1) % v.len()]);
            bonds.insert((p.min(q), p.max(q)));
        }
    }
    let mut degree: BTreeMap<(i64, i64), usize> = BTreeMap::new();
    for &(p, q) in &bonds {
        *degree.entry(p).or_default() += 1;
        *degree.entry(q).or_default() += 1;
    }
    Ok(MolecularFormula {
        carbons: degree.len(),
        hydrogens: degree.values().filter(|&&d| d < 3).count(),
    })
}

/// Formula together with whether the polyhex has minimum perimeter, in which
/// case the hydrogen count must equal the perimeter size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Molecule {
    pub formula: MolecularFormula,
    pub perimeter: usize,
    pub minimal: bool,
}

impl Molecule {
    /// `None` for polyhexes without minimum perimeter, where the hydrogen
    /// count is not tied to the perimeter.
    pub fn hydrogens_match_perimeter(&self) -> Option<bool> {
        self.minimal
            .then_some(self.formula.hydrogens == self.perimeter)
    }
}

pub fn molecule(a: &Animal) -> Result<Molecule> {
    let formula = molecular_formula(a)?;
    let perimeter = a.perimeter_size();
    Ok(Molecule {
        formula,
        perimeter,
        minimal: perimeter == theory::epsilon_formula(LatticeKind::Hexagonal, a.size())?,
    })
}

/// One inflation chain of minimal polyhex sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesRow {
    pub p: usize,
    pub root: usize,
    pub sizes: Vec<usize>,
    /// Fixed isomers per term; empty when the root set was out of budget.
    pub isomers: Vec<usize>,
    /// Isomers up to rotation and reflection, per term.
    pub free_isomers: Vec<usize>,
    /// Distinct formulas per term, joined by `/` when members disagree.
    pub formulas: Vec<String>,
    pub computed: bool,
}

fn formulas_of(set: &MinimalSet) -> Result<String> {
    let f: BTreeSet<MolecularFormula> = set
        .animals
        .iter()
        .map(molecular_formula)
        .collect::<Result<_>>()?;
    Ok(f.iter().map(|f| f.to_string()).collect::<Vec<_>>().join("/"))
}

/// Constant-isomer series for every chain root with perimeter up to `p_max`,
/// each followed for `terms` sizes.
pub fn isomer_series(p_max: usize, terms: usize, cfg: &EnumConfig) -> Result<Vec<SeriesRow>> {
    let kind = LatticeKind::Hexagonal;
    let mut rows = Vec::new();
    for p in theory::min_attained(kind)?..=p_max {
        let root = match theory::epsilon_inverse(kind, p) {
            Ok(n) => n,
            Err(Error::NotAttained(_)) => continue,
            Err(e) => return Err(e),
        };
        let mut sizes = vec![root];
        while sizes.len() < terms {
            let n = *sizes.last().expect("nonempty");
            sizes.push(n + theory::epsilon_formula(kind, n)?);
        }
        let mut row = SeriesRow {
            p,
            root,
            sizes,
            isomers: Vec::new(),
            free_isomers: Vec::new(),
            formulas: Vec::new(),
            computed: false,
        };
        let mut set = match enumerate::minimal_set(Lattice::HEXAGONAL, root, cfg) {
            Ok(s) => s,
            Err(Error::BudgetExceeded { .. }) => {
                rows.push(row);
                continue;
            }
            Err(e) => return Err(e),
        };
        for (i, &n) in row.sizes.iter().enumerate() {
            if i > 0 {
                let mut animals: Vec<Animal> = set.animals.iter().map(Animal::inflate).collect();
                animals.sort_unstable();
                animals.dedup();
                let p = theory::epsilon_formula(kind, n)?;
                if animals.iter().any(|a| a.perimeter_size() != p) {
                    return Err(Error::Unsupported(format!(
                        "an inflated member of size {n} is not minimal"
                    )));
                }
                set = MinimalSet {
                    lattice: Lattice::HEXAGONAL,
                    n,
                    p,
                    animals,
                };
            }
            row.isomers.push(set.len());
            row.free_isomers.push(set.free_count()?);
            row.formulas.push(formulas_of(&set)?);
        }
        row.computed = true;
        rows.push(row);
    }
    Ok(rows)
}

/// The series table as CSV.
pub fn series_csv(rows: &[SeriesRow]) -> Result<String> {
    let join = |v: &[usize]| {
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let rows = rows.iter().map(|r| {
        let (iso, free, formulas) = if r.computed {
            (join(&r.isomers), join(&r.free_isomers), r.formulas.join(" "))
        } else {
            ("uncomputed".into(), "uncomputed".into(), "uncomputed".into())
        };
        [r.p.to_string(), r.root.to_string(), join(&r.sizes), iso, free, formulas]
    });
    crate::io::csv_table(
        &["p", "root", "sizes", "isomers", "free_isomers", "formulas"],
        rows,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Cell;

    fn hex(cells: &[(i32, i32)]) -> Animal {
        Animal::new(Lattice::HEXAGONAL, cells.iter().map(|&c| Cell::from(c))).unwrap()
    }

    #[test]
    fn benzene_naphthalene_circumnaphthalene() {
        let benzene = Animal::singleton(Lattice::HEXAGONAL);
        assert_eq!(molecular_formula(&benzene).unwrap().to_string(), "C6H6");
        let naph = hex(&[(0, 0), (1, 0)]);
        assert_eq!(molecular_formula(&naph).unwrap().to_string(), "C10H8");
        assert_eq!(molecular_formula(&naph.inflate()).unwrap().to_string(), "C32H14");
    }

    #[test]
    fn coronene() {
        let flower = Animal::singleton(Lattice::HEXAGONAL).inflate();
        assert_eq!(molecular_formula(&flower).unwrap().to_string(), "C24H12");
    }

    #[test]
    fn non_hex_rejected() {
        assert!(molecular_formula(&Animal::singleton(Lattice::SQUARE)).is_err());
    }

    #[test]
    fn non_minimal_is_flagged() {
        let chain = hex(&[(0, 0), (1, 0), (2, 0)]);
        let m = molecule(&chain).unwrap();
        assert!(!m.minimal);
        assert_eq!(m.hydrogens_match_perimeter(), None);
        let naph = molecule(&hex(&[(0, 0), (1, 0)])).unwrap();
        assert_eq!(naph.hydrogens_match_perimeter(), Some(true));
    }

    #[test]
    fn series_table() {
        let cfg = EnumConfig::with_threads(1);
        let rows = isomer_series(8, 4, &cfg).unwrap();
        assert_eq!(rows[0].sizes, vec![1, 7, 19, 37]);
        assert_eq!(rows[0].isomers, vec![1, 1, 1, 1]);
        assert_eq!(rows[1].sizes, vec![2, 10, 24, 44]);
        assert_eq!(rows[1].formulas[..2], ["C10H8".to_string(), "C32H14".to_string()]);
        assert_eq!(rows[1].free_isomers, vec![1, 1, 1, 1]);
        let csv = series_csv(&rows).unwrap();
        assert!(csv.starts_with("p,root,sizes,isomers,free_isomers,formulas\n6,1,1 7 19 37,"));
    }
}
