//! Exhaustive checks of the minimal-perimeter theory over small sizes.
//!
//! Each check returns a [`VerificationReport`] naming the range it covered.
//! Failures carry the offending animal in the `x y,x y` notation of
//! [`Animal`]'s `Display`.

use std::collections::BTreeSet;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::animal::Animal;
use crate::chem;
use crate::enumerate::{self, EnumConfig};
use crate::error::{Error, Result};
use crate::lattice::{Cell, Lattice, LatticeKind};
use crate::patterns;
use crate::theory;

pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    ExceptionDocumented,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ExceptionDocumented => "exception-documented",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub animal: Option<String>,
    pub reason: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Range {
    pub from: usize,
    pub to: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Metadata {
    pub elapsed_ms: u128,
    pub threads: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub check: String,
    pub lattice: String,
    pub range: Range,
    pub status: Status,
    pub counterexamples: Vec<Counterexample>,
    /// Failures on the known-exception list; they do not fail the check.
    pub documented: Vec<Counterexample>,
    pub notes: Vec<String>,
    pub details: Vec<Value>,
    pub metadata: Metadata,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    /// The report as JSON without the timing block, which is the part that
    /// must not change between runs.
    pub fn content(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v.as_object_mut()
            .expect("report is an object")
            .remove("metadata");
        v
    }
}

/// Only known exception: on the square lattice the size-8 minimal animal
/// made of two overlapping plus shapes deflates to two separate cells, so
/// it is not the inflation of any domino.
fn is_documented(lattice: Lattice, n: usize, deflation_disconnected: bool) -> bool {
    lattice == Lattice::SQUARE && n == 2 && deflation_disconnected
}

struct Check {
    check: &'static str,
    lattice: Lattice,
    range: Range,
    counterexamples: Vec<Counterexample>,
    documented: Vec<Counterexample>,
    notes: Vec<String>,
    details: Vec<Value>,
    start: Instant,
    threads: usize,
}

impl Check {
    fn new(check: &'static str, lattice: Lattice, from: usize, to: usize, cfg: &EnumConfig) -> Self {
        Check {
            check,
            lattice,
            range: Range { from, to },
            counterexamples: Vec::new(),
            documented: Vec::new(),
            notes: Vec::new(),
            details: Vec::new(),
            start: Instant::now(),
            threads: cfg.thread_count(),
        }
    }

    fn fail(&mut self, n: usize, animal: Option<&Animal>, reason: impl Into<String>) {
        self.counterexamples.push(Counterexample {
            n,
            animal: animal.map(|a| a.to_string()),
            reason: reason.into(),
        });
    }

    fn finish(self) -> VerificationReport {
        let status = if !self.counterexamples.is_empty() {
            Status::Fail
        } else if !self.documented.is_empty() {
            Status::ExceptionDocumented
        } else {
            Status::Pass
        };
        VerificationReport {
            schema: SCHEMA,
            check: self.check.to_string(),
            lattice: self.lattice.to_string(),
            range: self.range,
            status,
            counterexamples: self.counterexamples,
            documented: self.documented,
            notes: self.notes,
            details: self.details,
            metadata: Metadata {
                elapsed_ms: self.start.elapsed().as_millis(),
                threads: self.threads,
            },
        }
    }
}

fn require_formula(lattice: Lattice) -> Result<()> {
    if theory::has_formula(lattice) {
        Ok(())
    } else {
        Err(Error::Unsupported(format!(
            "{lattice} has no closed minimum-perimeter formula"
        )))
    }
}

/// Brute-force minimum perimeters for `1..=n_max` are weakly increasing and,
/// where a formula exists, equal to it.
pub fn verify_monotonicity(lattice: Lattice, n_max: usize, cfg: &EnumConfig) -> Result<VerificationReport> {
    let mut ck = Check::new("monotonicity", lattice, 1, n_max, cfg);
    let mut prev = 0;
    let mut matches = 0;
    for n in 1..=n_max {
        let brute = enumerate::min_perimeter_brute(lattice, n, cfg)?;
        let formula = if theory::has_formula(lattice) {
            Some(theory::epsilon_formula(lattice.kind(), n)?)
        } else {
            None
        };
        if brute < prev {
            ck.fail(n, None, format!("minimum perimeter drops from {prev} to {brute}"));
        }
        match formula {
            Some(f) if f == brute => matches += 1,
            Some(f) => ck.fail(n, None, format!("brute force {brute}, formula {f}")),
            None => {}
        }
        prev = brute;
        ck.details.push(json!({ "n": n, "brute": brute, "formula": formula }));
    }
    if theory::has_formula(lattice) {
        ck.notes.push(format!("formula match {matches}/{n_max}"));
    } else {
        ck.notes.push("no closed formula on this lattice; table only".into());
    }
    Ok(ck.finish())
}

/// Bridge cells and perimeter bridge cells as the theory counts them. On
/// the square lattice these are the (d) and (z) pattern cells: the corner
/// of an L-tromino disconnects it, yet the L-tromino is minimal. On the
/// hexagonal lattice the graph definition and the patterns agree.
fn bridges(a: &Animal) -> Result<(Vec<Cell>, Vec<Cell>)> {
    match a.kind() {
        LatticeKind::Square => patterns::bridge_pattern_cells(a),
        _ => Ok((a.bridge_cells(), a.perimeter_bridge_cells())),
    }
}

/// Every minimal animal of size `2..=n_max` is free of holes, bridges and
/// perimeter bridges and has `|P| - |B| = c*`; one inflation adds at most
/// `c*` perimeter cells.
pub fn verify_stepping(lattice: Lattice, n_max: usize, cfg: &EnumConfig) -> Result<VerificationReport> {
    require_formula(lattice)?;
    let c = theory::c_star(lattice)?;
    let hex = lattice.kind() == LatticeKind::Hexagonal;
    let mut ck = Check::new("stepping", lattice, 2, n_max, cfg);
    ck.notes.push("n = 1 skipped: the single cell is the stated exception".into());
    for n in 2..=n_max {
        let set = enumerate::minimal_set(lattice, n, cfg)?;
        let mut empty_deflation = 0;
        for q in &set.animals {
            let holes = q.hole_count();
            if holes > 0 {
                ck.fail(n, Some(q), format!("{holes} hole(s)"));
            }
            let (b, pb) = bridges(q)?;
            if let Some(b) = b.first() {
                ck.fail(n, Some(q), format!("bridge at {b}"));
            }
            if let Some(b) = pb.first() {
                ck.fail(n, Some(q), format!("perimeter bridge at {b}"));
            }
            let gap = patterns::stepping_gap(q);
            if gap != c as i64 {
                ck.fail(n, Some(q), format!("|P| - |B| = {gap}"));
            }
            let (e_p, e_b) = q.excess();
            if e_b as i64 - e_p as i64 != c as i64 {
                ck.fail(n, Some(q), format!("excess gap eB - eP = {}", e_b as i64 - e_p as i64));
            }
            let inflated = q.inflate();
            if inflated.perimeter_size() > q.perimeter_size() + c {
                ck.fail(
                    n,
                    Some(q),
                    format!("inflation grows the perimeter to {}", inflated.perimeter_size()),
                );
            }
            if hex && !inflated.bridge_cells().is_empty() {
                ck.fail(n, Some(q), "inflation has a bridge");
            }
            if q.deflate().is_empty() {
                empty_deflation += 1;
            }
        }
        ck.details.push(json!({
            "n": n,
            "p": set.p,
            "members": set.len(),
            "empty_deflation": empty_deflation,
        }));
    }
    Ok(ck.finish())
}

/// Inflation maps `M_n` one-to-one onto `M_{n + eps(n)}` for each source
/// size in `from..=to`.
///
/// Images are certified minimal by comparing their perimeter with the
/// minimum perimeter of their size. With `full_set` the target set is also
/// enumerated and compared, and every target member must deflate back.
pub fn verify_bijection(
    lattice: Lattice,
    from: usize,
    to: usize,
    full_set: bool,
    cfg: &EnumConfig,
) -> Result<VerificationReport> {
    if from == 0 {
        return Err(Error::Unsupported("sizes start at 1".into()));
    }
    let mut ck = Check::new("bijection", lattice, from, to, cfg);
    let c = theory::c_star(lattice).ok();
    for n in from..=to {
        let e = theory::epsilon(lattice, n, cfg)?;
        let t = n + e;
        let target_p = theory::epsilon(lattice, t, cfg)?;
        let source = enumerate::minimal_set(lattice, n, cfg)?;
        let mut images = Vec::with_capacity(source.len());
        for q in &source.animals {
            let r = q.inflate();
            if r.size() != t {
                ck.fail(n, Some(q), format!("inflation has size {}, expected {t}", r.size()));
            }
            if r.perimeter_size() != target_p {
                ck.fail(
                    n,
                    Some(q),
                    format!("inflation has perimeter {}, minimum is {target_p}", r.perimeter_size()),
                );
            }
            if let Some(c) = c {
                if r.perimeter_size() != e + c {
                    ck.fail(n, Some(q), format!("inflation perimeter is not {}", e + c));
                }
            }
            images.push(r);
        }
        images.sort_unstable();
        let distinct = {
            let mut d = images.clone();
            d.dedup();
            d
        };
        if distinct.len() != images.len() {
            ck.fail(n, None, format!("{} sources give {} images", images.len(), distinct.len()));
        }
        let mut row = json!({
            "n": n,
            "target": t,
            "p": source.p,
            "target_p": target_p,
            "members": source.len(),
            "free_members": source.free_count().ok(),
            "images": distinct.len(),
        });
        let targets = if full_set {
            let set = enumerate::minimal_set(lattice, t, cfg)?;
            row["target_members"] = json!(set.len());
            for img in &distinct {
                if set.animals.binary_search(img).is_err() {
                    ck.fail(n, Some(img), "image missing from the enumerated target set");
                }
            }
            set.animals
        } else {
            distinct.clone()
        };
        let mut documented = Vec::new();
        for r in &targets {
            let mut reasons = Vec::new();
            if distinct.binary_search(r).is_err() {
                reasons.push("not an inflation image".to_string());
            }
            let d = r.deflate();
            let disconnected = !d.is_empty() && !d.is_connected(lattice.kind());
            if d.len() != n {
                reasons.push(format!("deflation has {} cells", d.len()));
            }
            if disconnected {
                reasons.push("deflation is disconnected".into());
            } else if !d.is_empty() {
                let back = d.into_animal(lattice)?.inflate();
                if &back != r {
                    reasons.push("inflating the deflation does not restore it".into());
                }
            }
            if reasons.is_empty() {
                continue;
            }
            let ce = Counterexample {
                n,
                animal: Some(r.to_string()),
                reason: reasons.join("; "),
            };
            if is_documented(lattice, n, disconnected) {
                documented.push(r.clone());
                ck.documented.push(ce);
            } else {
                ck.counterexamples.push(ce);
            }
        }
        if !documented.is_empty() {
            let free: BTreeSet<Animal> = documented
                .iter()
                .map(Animal::free_form)
                .collect::<Result<_>>()?;
            ck.notes.push(format!(
                "n = {n}: {} documented member(s) of M_{t}, {} shape(s) up to symmetry",
                documented.len(),
                free.len()
            ));
        }
        ck.details.push(row);
    }
    Ok(ck.finish())
}

/// Sizes up to `n_max` that are not `n + eps(n)` are exactly the chain
/// roots `eps^-1(p)`; on the hexagonal lattice they also follow the closed
/// root formula. Also checks that `eps^-1` jumps by `p - 1` between `p` and
/// `p + c*`, and, for sets small enough to enumerate, that inflating the
/// largest animals of perimeter `p` gives the largest of perimeter `p + c*`.
pub fn verify_roots(lattice: Lattice, n_max: usize, cfg: &EnumConfig) -> Result<VerificationReport> {
    require_formula(lattice)?;
    let kind = lattice.kind();
    let c = theory::c_star(lattice)?;
    let mut ck = Check::new("roots", lattice, 1, n_max, cfg);
    let mut image = BTreeSet::new();
    for n in 1..=n_max {
        image.insert(n + theory::epsilon_formula(kind, n)?);
    }
    let complement: Vec<usize> = (1..=n_max).filter(|n| !image.contains(n)).collect();
    let p_max = theory::epsilon_formula(kind, n_max)?;
    let roots: Vec<usize> = theory::chain_roots(kind, p_max)?
        .into_iter()
        .filter(|&r| r <= n_max)
        .collect();
    if complement != roots {
        ck.fail(0, None, format!("image complement {complement:?} differs from roots {roots:?}"));
    }
    for &m in &complement {
        let begin = theory::epsilon_inverse_extended(kind, theory::epsilon_formula(kind, m)?)?.0;
        let next = theory::epsilon_inverse_extended(kind, theory::epsilon_formula(kind, m + 1)?)?.0;
        if m != begin && m + 1 != next {
            ck.fail(m, None, "neither eps^-1(p) nor eps^-1(p) - 1");
        }
    }
    let mut formula_checked = 0;
    let mut jumps_checked = 0;
    let mut spot_checked = 0;
    for p in theory::min_attained(kind)?..=p_max {
        let Ok(n_b) = theory::epsilon_inverse(kind, p) else {
            continue;
        };
        if kind == LatticeKind::Hexagonal {
            formula_checked += 1;
            if theory::hex_root_formula(p) != n_b {
                ck.fail(n_b, None, format!("root formula gives {} for p = {p}", theory::hex_root_formula(p)));
            }
        }
        if let Ok(next) = theory::epsilon_inverse(kind, p + c) {
            jumps_checked += 1;
            if next - n_b != p - 1 {
                ck.fail(n_b, None, format!("eps^-1 jumps by {} from p = {p}", next - n_b));
            }
        }
        let n_e = theory::step_interval(kind, p)?.n_end;
        if n_e <= n_max && p > theory::min_attained(kind)? {
            let want = theory::step_interval(kind, p + c)?.n_end;
            match enumerate::minimal_set(lattice, n_e, cfg) {
                Ok(set) => {
                    spot_checked += 1;
                    for q in &set.animals {
                        if q.inflate().size() != want {
                            ck.fail(n_e, Some(q), format!("inflation does not reach size {want}"));
                        }
                    }
                }
                Err(Error::BudgetExceeded { .. }) => {
                    ck.notes.push(format!("largest-size check skipped at n = {n_e}: over budget"));
                }
                Err(e) => return Err(e),
            }
        }
    }
    ck.details.push(json!({ "roots": roots, "image_complement": complement }));
    if kind == LatticeKind::Hexagonal {
        ck.notes.push(format!("root formula checked for {formula_checked} perimeters"));
    }
    ck.notes.push(format!("jump p - 1 checked for {jumps_checked} perimeters"));
    ck.notes.push(format!("largest-size inflation checked for {spot_checked} perimeters"));
    Ok(ck.finish())
}

/// One step of an inflation trajectory.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub k: usize,
    pub size: usize,
    pub perimeter: usize,
    pub phi: i64,
    pub phi_extended: bool,
    pub holes: usize,
    pub bridges: usize,
    pub perimeter_bridges: usize,
    pub minimal: bool,
}

/// Repeated inflation of one animal until it has minimum perimeter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Trajectory {
    pub animal: String,
    pub lattice: String,
    /// Diameter of the starting animal.
    pub r: usize,
    /// `r + max(phi(Q^r), 0)`; minimality is due by this step.
    pub bound: usize,
    pub reached: Option<usize>,
    pub steps: Vec<Step>,
    pub failures: Vec<String>,
}

impl Trajectory {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Slack steps past the bound before giving up.
const SLACK: usize = 2;

/// Inflate `a` repeatedly and check that from step `R` on the animals are
/// clean and grow by `c*`, that `phi` then drops by one per step, and that
/// minimality arrives by the bound and stays.
pub fn convergence(a: &Animal, max_steps: usize) -> Result<Trajectory> {
    require_formula(a.lattice())?;
    let c = theory::c_star(a.lattice())?;
    let r = a.diameter();
    let mut steps = Vec::new();
    let mut failures = Vec::new();
    let mut q = a.clone();
    let mut bound = None;
    let mut k = 0;
    loop {
        let phi = theory::phi(&q)?;
        let minimal = q.perimeter_size() == theory::epsilon_formula(q.kind(), q.size())?;
        let (b, pb) = bridges(&q)?;
        steps.push(Step {
            k,
            size: q.size(),
            perimeter: q.perimeter_size(),
            phi: phi.value,
            phi_extended: phi.extended,
            holes: q.hole_count(),
            bridges: b.len(),
            perimeter_bridges: pb.len(),
            minimal,
        });
        if k == r {
            bound = Some(r + phi.value.max(0) as usize);
        }
        // one step past the horizon, so growth at the horizon is checked
        if bound.is_some_and(|b| k > b + SLACK) {
            break;
        }
        if k == max_steps {
            if bound.is_none_or(|b| k < b) {
                failures.push(format!("stopped after {max_steps} steps, before the bound"));
            }
            break;
        }
        q = q.inflate();
        k += 1;
    }
    let bound = bound.unwrap_or(usize::MAX);
    for w in steps.windows(2) {
        let (s, t) = (&w[0], &w[1]);
        if s.k < r {
            continue;
        }
        if s.holes + s.bridges + s.perimeter_bridges > 0 {
            failures.push(format!(
                "step {}: {} hole(s), {} bridge(s), {} perimeter bridge(s)",
                s.k, s.holes, s.bridges, s.perimeter_bridges
            ));
        }
        if t.perimeter != s.perimeter + c {
            failures.push(format!("step {}: perimeter grows by {}", s.k, t.perimeter as i64 - s.perimeter as i64));
        }
    }
    // phi drops by one on every step after which the growth stays at c*
    let settled = steps
        .windows(2)
        .rposition(|w| w[1].perimeter != w[0].perimeter + c)
        .map_or(0, |i| i + 1);
    for w in steps[settled..].windows(2) {
        if w[1].phi != w[0].phi - 1 {
            failures.push(format!("step {}: phi goes from {} to {}", w[0].k, w[0].phi, w[1].phi));
        }
    }
    let reached = steps.iter().position(|s| s.minimal);
    match reached {
        None => failures.push("never reached minimum perimeter".into()),
        Some(k0) => {
            if k0 > bound {
                failures.push(format!("minimal only at step {k0}, bound {bound}"));
            }
            if let Some(s) = steps[k0..].iter().find(|s| !s.minimal) {
                failures.push(format!("minimality lost at step {}", s.k));
            }
        }
    }
    Ok(Trajectory {
        animal: a.to_string(),
        lattice: a.lattice().to_string(),
        r,
        bound,
        reached,
        steps,
        failures,
    })
}

pub const DEFAULT_MAX_STEPS: usize = 64;

/// [`convergence`] for every animal of size `1..=n_max`.
pub fn verify_convergence(lattice: Lattice, n_max: usize, cfg: &EnumConfig) -> Result<VerificationReport> {
    require_formula(lattice)?;
    let mut ck = Check::new("convergence", lattice, 1, n_max, cfg);
    for n in 1..=n_max {
        let all = enumerate::animals(lattice, n, cfg)?;
        let mut worst_bound = 0;
        let mut worst_reached = 0;
        for a in &all {
            let t = convergence(a, DEFAULT_MAX_STEPS)?;
            worst_bound = worst_bound.max(t.bound);
            worst_reached = worst_reached.max(t.reached.unwrap_or(usize::MAX));
            for f in &t.failures {
                ck.fail(n, Some(a), f.clone());
            }
        }
        ck.details.push(json!({
            "n": n,
            "animals": all.len(),
            "latest_minimal_step": worst_reached,
            "largest_bound": worst_bound,
        }));
    }
    Ok(ck.finish())
}

/// `|P| + eP = |B| + eB` for every animal of size `1..=n_max`.
pub fn verify_excess_balance(lattice: Lattice, n_max: usize, cfg: &EnumConfig) -> Result<VerificationReport> {
    let mut ck = Check::new("excess-balance", lattice, 1, n_max, cfg);
    for n in 1..=n_max {
        let all = enumerate::animals(lattice, n, cfg)?;
        for a in &all {
            let c = patterns::census(a)?;
            if c.perimeter + c.e_p != c.border + c.e_b {
                ck.fail(
                    n,
                    Some(a),
                    format!("{} + {} != {} + {}", c.perimeter, c.e_p, c.border, c.e_b),
                );
            }
        }
        ck.details.push(json!({ "n": n, "animals": all.len() }));
    }
    Ok(ck.finish())
}

/// The turn count of every hole-free polyomino of size `2..=n_max` is 4.
pub fn verify_turns(n_max: usize, cfg: &EnumConfig) -> Result<VerificationReport> {
    let lattice = Lattice::SQUARE;
    let mut ck = Check::new("turns", lattice, 2, n_max, cfg);
    ck.notes.push("n = 1 skipped: the single cell has no turns to count".into());
    for n in 2..=n_max {
        let all = enumerate::animals(lattice, n, cfg)?;
        let mut checked = 0;
        for a in all.iter().filter(|a| a.hole_count() == 0) {
            checked += 1;
            let t = patterns::turn_identity(a)?;
            if t != 4 {
                ck.fail(n, Some(a), format!("turns sum to {t}"));
            }
        }
        ck.details.push(json!({ "n": n, "animals": all.len(), "hole_free": checked }));
    }
    Ok(ck.finish())
}

/// The corner-angle identity on every polyhex of size `2..=n_max` without
/// holes, bridges or perimeter bridges.
///
/// Polyhexes whose excess comes only from the six corner patterns must
/// satisfy it exactly. The others contain the leaf pattern (b) or the notch
/// pattern (p); for those the balance with weight 4 on (b) and (p) is
/// checked instead.
pub fn verify_hex_angles(n_max: usize, cfg: &EnumConfig) -> Result<VerificationReport> {
    let lattice = Lattice::HEXAGONAL;
    let mut ck = Check::new("hex-angles", lattice, 2, n_max, cfg);
    for n in 2..=n_max {
        let all = enumerate::animals(lattice, n, cfg)?;
        let (mut exact, mut weighted, mut skipped) = (0, 0, 0);
        for a in &all {
            match patterns::hex_angle_identity(a) {
                Ok((l, r)) => {
                    exact += 1;
                    if l != r {
                        ck.fail(n, Some(a), format!("{l} != {r}"));
                    }
                }
                Err(Error::Precondition(crate::error::Precondition::Pattern(_))) => {
                    weighted += 1;
                    let (l, r) = patterns::hex_angle_balance(a)?;
                    if l != r {
                        ck.fail(n, Some(a), format!("weighted {l} != {r}"));
                    }
                }
                Err(Error::Precondition(_)) => skipped += 1,
                Err(e) => return Err(e),
            }
        }
        ck.details.push(json!({
            "n": n,
            "animals": all.len(),
            "six_patterns": exact,
            "with_b_or_p": weighted,
            "holes_or_bridges": skipped,
        }));
    }
    Ok(ck.finish())
}

/// Bridge patterns against graph bridges on every hole-free animal of size
/// `1..=n_max`.
///
/// On the hexagonal lattice a cell is a bridge exactly when its
/// neighbourhood is a bridge pattern, for border and perimeter cells alike.
/// On the square lattice only one direction holds: a bridge pattern marks a
/// bridge, but corner cells such as the middle of an L-tromino are bridges
/// with a plain pattern.
pub fn verify_bridge_patterns(lattice: Lattice, n_max: usize, cfg: &EnumConfig) -> Result<VerificationReport> {
    let two_way = lattice.kind() == LatticeKind::Hexagonal;
    let mut ck = Check::new("bridge-patterns", lattice, 1, n_max, cfg);
    if !two_way {
        ck.notes.push("square lattice: bridge pattern implies bridge, not conversely".into());
    }
    for n in 1..=n_max {
        let all = enumerate::animals(lattice, n, cfg)?;
        let mut one_way_only = 0;
        for a in all.iter().filter(|a| a.hole_count() == 0) {
            let semantic: BTreeSet<_> = a
                .bridge_cells()
                .into_iter()
                .chain(a.perimeter_bridge_cells())
                .collect();
            let cells = a.border().into_iter().chain(a.perimeter());
            for c in cells {
                let flagged = patterns::classify_cell(a, c)?.is_bridge_pattern();
                let is = semantic.contains(&c);
                if flagged && !is {
                    ck.fail(n, Some(a), format!("{c} has a bridge pattern but is not a bridge"));
                } else if is && !flagged {
                    if two_way {
                        ck.fail(n, Some(a), format!("{c} is a bridge without a bridge pattern"));
                    } else {
                        one_way_only += 1;
                    }
                }
            }
        }
        ck.details.push(json!({ "n": n, "animals": all.len(), "unflagged_bridges": one_way_only }));
    }
    Ok(ck.finish())
}

/// Hydrogen count equals perimeter size on every minimal polyhex of size
/// `1..=n_max`.
pub fn verify_hydrogens(n_max: usize, cfg: &EnumConfig) -> Result<VerificationReport> {
    let lattice = Lattice::HEXAGONAL;
    let mut ck = Check::new("hydrogens", lattice, 1, n_max, cfg);
    for n in 1..=n_max {
        let set = enumerate::minimal_set(lattice, n, cfg)?;
        for a in &set.animals {
            let f = chem::molecular_formula(a)?;
            if f.hydrogens != a.perimeter_size() {
                ck.fail(n, Some(a), format!("{f} but perimeter {}", a.perimeter_size()));
            }
        }
        ck.details.push(json!({ "n": n, "members": set.len(), "p": set.p }));
    }
    Ok(ck.finish())
}

/// Searches edge-adjacent polyiamonds of size `1..=n_max` for a minimal
/// animal whose inflation is not minimal. Passes when one is found; the
/// search stops at the first size that has one.
pub fn verify_polyiamond_edge(n_max: usize, cfg: &EnumConfig) -> Result<VerificationReport> {
    let lattice = Lattice::TRIANGULAR;
    let mut ck = Check::new("polyiamond-edge", lattice, 1, n_max, cfg);
    let mut witness = None;
    for n in 1..=n_max {
        let set = enumerate::minimal_set(lattice, n, cfg)?;
        let mut bad = 0;
        for q in &set.animals {
            let r = q.inflate();
            let min = theory::epsilon(lattice, r.size(), cfg)?;
            if r.perimeter_size() != min {
                bad += 1;
                witness.get_or_insert_with(|| {
                    json!({
                        "n": n,
                        "animal": q.to_string(),
                        "inflated_size": r.size(),
                        "inflated_perimeter": r.perimeter_size(),
                        "minimum_perimeter": min,
                    })
                });
            }
        }
        ck.details.push(json!({ "n": n, "members": set.len(), "non_minimal_inflations": bad }));
        if witness.is_some() {
            ck.range.to = n;
            break;
        }
    }
    match witness {
        Some(w) => {
            ck.notes.push(format!(
                "inflation leaves the minimal set at n = {}",
                w["n"]
            ));
            ck.details.push(json!({ "witness": w }));
        }
        None => ck.fail(n_max, None, "every inflation stayed minimal"),
    }
    Ok(ck.finish())
}

/// `|M_n| = |M_{n + eps(n)}|` with inflation one-to-one and onto, for
/// vertex-adjacent polyiamonds of size `1..=n_max`, all by brute force.
pub fn verify_polyiamond_vertex(n_max: usize, cfg: &EnumConfig) -> Result<VerificationReport> {
    let lattice = Lattice::TRIANGULAR_VERTEX;
    let mut ck = Check::new("polyiamond-vertex", lattice, 1, n_max, cfg);
    for n in 1..=n_max {
        let e = theory::epsilon(lattice, n, cfg)?;
        let t = n + e;
        let source = enumerate::minimal_set(lattice, n, cfg)?;
        let target = enumerate::minimal_set(lattice, t, cfg)?;
        let mut images: Vec<Animal> = source.animals.iter().map(Animal::inflate).collect();
        images.sort_unstable();
        images.dedup();
        if source.len() != target.len() {
            ck.fail(n, None, format!("|M_{n}| = {} but |M_{t}| = {}", source.len(), target.len()));
        }
        if images.len() != source.len() {
            ck.fail(n, None, format!("{} sources give {} images", source.len(), images.len()));
        }
        if images != target.animals {
            ck.fail(n, None, format!("images differ from M_{t}"));
        }
        ck.details.push(json!({
            "n": n,
            "eps": e,
            "target": t,
            "members": source.len(),
            "images": images.len(),
            "target_members": target.len(),
        }));
    }
    Ok(ck.finish())
}
