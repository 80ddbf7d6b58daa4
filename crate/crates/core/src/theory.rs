//! Closed forms for the minimum perimeter and everything derived from it:
//! its inverse, step intervals, chain roots, the distance-to-minimality
//! potential and k-step inflation predictions.
//!
//! Square and hexagonal values come from exact integer formulas. Triangular
//! values have no closed form and are measured by exhaustive search, memoized
//! per process.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

use crate::animal::Animal;
use crate::enumerate::{self, EnumConfig};
use crate::error::{Error, Result};
use crate::lattice::{AdjacencyMode, Lattice, LatticeKind};

/// `ceil(sqrt(m))` without floating point.
pub fn ceil_sqrt(m: u64) -> u64 {
    let r = m.isqrt();
    if r * r == m {
        r
    } else {
        r + 1
    }
}

fn unsupported(kind: LatticeKind) -> Error {
    Error::Unsupported(format!("no closed form on the {kind} lattice"))
}

/// Minimum perimeter of an `n`-cell animal, from the closed formula.
pub fn epsilon_formula(kind: LatticeKind, n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::Empty);
    }
    let n = n as u64;
    Ok(match kind {
        LatticeKind::Square => ceil_sqrt(8 * n - 4) + 2,
        LatticeKind::Hexagonal => ceil_sqrt(12 * n - 3) + 3,
        LatticeKind::Triangular => return Err(unsupported(kind)),
    } as usize)
}

/// Whether `lattice` has a closed-form minimum perimeter.
pub fn has_formula(lattice: Lattice) -> bool {
    lattice.mode() == AdjacencyMode::Edge && lattice.kind() != LatticeKind::Triangular
}

fn memo() -> &'static Mutex<HashMap<(Lattice, usize), usize>> {
    static MEMO: OnceLock<Mutex<HashMap<(Lattice, usize), usize>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Minimum perimeter by exhaustive search, memoized.
pub fn epsilon_empirical(lattice: Lattice, n: usize, cfg: &EnumConfig) -> Result<usize> {
    if let Some(&p) = memo().lock().expect("memo").get(&(lattice, n)) {
        return Ok(p);
    }
    let p = enumerate::min_perimeter_brute(lattice, n, cfg)?;
    memo().lock().expect("memo").insert((lattice, n), p);
    Ok(p)
}

/// Minimum perimeter: the formula where one exists, otherwise measured.
pub fn epsilon(lattice: Lattice, n: usize, cfg: &EnumConfig) -> Result<usize> {
    if has_formula(lattice) {
        epsilon_formula(lattice.kind(), n)
    } else {
        epsilon_empirical(lattice, n, cfg)
    }
}

/// Smallest `n` with `eps(n) >= p`.
fn first_reaching(kind: LatticeKind, p: usize) -> Result<usize> {
    epsilon_formula(kind, 1)?;
    let (mut lo, mut hi) = (1usize, 1usize);
    while epsilon_formula(kind, hi)? < p {
        lo = hi + 1;
        hi *= 2;
    }
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if epsilon_formula(kind, mid)? >= p {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(lo)
}

/// Least `n` whose minimum perimeter is exactly `p`.
pub fn epsilon_inverse(kind: LatticeKind, p: usize) -> Result<usize> {
    let n = first_reaching(kind, p)?;
    if epsilon_formula(kind, n)? == p {
        Ok(n)
    } else {
        Err(Error::NotAttained(p))
    }
}

/// `epsilon_inverse`, extended to unattained `p` as the least `n` with
/// `eps(n) >= p`. The flag is set when the extension was used.
pub fn epsilon_inverse_extended(kind: LatticeKind, p: usize) -> Result<(usize, bool)> {
    let n = first_reaching(kind, p)?;
    Ok((n, epsilon_formula(kind, n)? != p))
}

pub fn is_attained(kind: LatticeKind, p: usize) -> Result<bool> {
    Ok(!epsilon_inverse_extended(kind, p)?.1)
}

/// Gap `|P| - |B|` shared by every minimal-perimeter animal of two or more
/// cells.
pub fn c_star(lattice: Lattice) -> Result<usize> {
    match (lattice.kind(), lattice.mode()) {
        (LatticeKind::Square, AdjacencyMode::Edge) => Ok(4),
        (LatticeKind::Hexagonal, AdjacencyMode::Edge) => Ok(6),
        _ => Err(Error::Unsupported(format!(
            "{lattice} has no constant perimeter-border gap"
        ))),
    }
}

/// Smallest minimum perimeter on the lattice, that of a single cell.
pub fn min_attained(kind: LatticeKind) -> Result<usize> {
    epsilon_formula(kind, 1)
}

/// Roots of the inflation chains: `eps^-1(p)` for every attained `p <= p_max`.
pub fn chain_roots(kind: LatticeKind, p_max: usize) -> Result<Vec<usize>> {
    let mut roots = Vec::new();
    for p in min_attained(kind)?..=p_max {
        match epsilon_inverse(kind, p) {
            Ok(n) => roots.push(n),
            Err(Error::NotAttained(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(roots)
}

/// `floor((p - 4)^2 / 12 + 5/4)`.
pub fn hex_root_formula(p: usize) -> usize {
    let d = p.abs_diff(4);
    (d * d + 15) / 12
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Phi {
    pub value: i64,
    /// The perimeter is not a minimum perimeter of any size, so the inverse
    /// was taken as the least size reaching it.
    pub extended: bool,
}

/// Cells missing before the animal's perimeter becomes minimal:
/// `eps^-1(|P|) - |Q|`.
pub fn phi(a: &Animal) -> Result<Phi> {
    if !has_formula(a.lattice()) {
        return Err(unsupported(a.kind()));
    }
    let (n, extended) = epsilon_inverse_extended(a.kind(), a.perimeter_size())?;
    Ok(Phi {
        value: n as i64 - a.size() as i64,
        extended,
    })
}

/// Size and perimeter after `k` inflations of a minimal-perimeter animal of
/// size `n > 1`.
pub fn predict_inflation(kind: LatticeKind, n: usize, k: usize) -> Result<(usize, usize)> {
    let c = c_star(Lattice::new(kind, AdjacencyMode::Edge)?)?;
    if n <= 1 {
        return Err(Error::Unsupported(
            "the single cell does not follow the inflation law".into(),
        ));
    }
    let e = epsilon_formula(kind, n)?;
    Ok((n + k * e + c * k * (k.saturating_sub(1)) / 2, e + c * k))
}

/// Maximal run of sizes sharing one minimum perimeter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StepInterval {
    pub p: usize,
    pub n_begin: usize,
    pub n_end: usize,
}

pub fn step_interval(kind: LatticeKind, p: usize) -> Result<StepInterval> {
    let n_begin = epsilon_inverse(kind, p)?;
    let n_end = first_reaching(kind, p + 1)? - 1;
    Ok(StepInterval { p, n_begin, n_end })
}
