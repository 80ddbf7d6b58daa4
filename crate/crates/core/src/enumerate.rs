//! Exhaustive generation of fixed animals and of minimal-perimeter sets.
//!
//! Generation follows Redelmeier: every animal is grown from its lowest,
//! leftmost cell, and the untried cells live in one flat queue that is
//! truncated on backtrack. Perimeter size is kept incrementally with a touch
//! counter per window cell, which also drives the branch-and-bound used for
//! minimal sets: `|Q| + |P(Q)|` never decreases when cells are added, so a
//! partial animal of `d` cells and perimeter `p` cannot lead to a final
//! perimeter below `d + p - n`.

use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::animal::Animal;
use crate::error::{Error, Result};
use crate::lattice::{canonical_translate, AdjacencyMode, Cell, Lattice, LatticeKind};
use crate::theory;

/// Default ceiling on the estimated number of animals a call may visit.
pub const DEFAULT_BUDGET: f64 = 1e8;

/// Depth at which the generation tree is cut into parallel tasks.
const SPLIT_DEPTH: usize = 7;

#[derive(Clone, Debug)]
pub struct EnumConfig {
    /// Worker threads; `None` uses `LATANIM_THREADS` or every core.
    pub threads: Option<usize>,
    /// Refuse sizes whose estimated animal count exceeds this.
    pub budget: f64,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig {
            threads: None,
            budget: DEFAULT_BUDGET,
        }
    }
}

impl EnumConfig {
    pub fn with_threads(threads: usize) -> Self {
        EnumConfig {
            threads: Some(threads),
            ..Self::default()
        }
    }

    pub fn unbounded() -> Self {
        EnumConfig {
            budget: f64::INFINITY,
            ..Self::default()
        }
    }

    pub fn thread_count(&self) -> usize {
        self.threads
            .or_else(|| std::env::var("LATANIM_THREADS").ok()?.parse().ok())
            .filter(|&t| t > 0)
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
    }

    fn pool(&self) -> rayon::ThreadPool {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.thread_count())
            .build()
            .expect("thread pool")
    }

    fn check(&self, kind: LatticeKind, n: usize) -> Result<()> {
        let estimate = estimate(kind, n);
        if estimate > self.budget {
            return Err(Error::BudgetExceeded {
                lattice: kind.to_string(),
                n,
                estimate,
                limit: self.budget,
            });
        }
        Ok(())
    }
}

// Fixed animal counts produced by this enumerator; larger sizes are
// extrapolated with the growth constant of the lattice.
const SQUARE_COUNTS: [f64; 15] = [
    1.0, 2.0, 6.0, 19.0, 63.0, 216.0, 760.0, 2725.0, 9910.0, 36446.0, 135268.0, 505861.0,
    1903890.0, 7204874.0, 27394666.0,
];
const HEX_COUNTS: [f64; 11] = [
    1.0, 3.0, 11.0, 44.0, 186.0, 814.0, 3652.0, 16689.0, 77359.0, 362671.0, 1716033.0,
];
const TRI_COUNTS: [f64; 16] = [
    2.0, 3.0, 6.0, 14.0, 36.0, 94.0, 250.0, 675.0, 1838.0, 5053.0, 14016.0, 39169.0, 110194.0,
    311751.0, 886160.0, 2529260.0,
];

/// Estimated number of fixed animals of size `n`.
pub fn estimate(kind: LatticeKind, n: usize) -> f64 {
    let (table, growth): (&[f64], f64) = match kind {
        LatticeKind::Square => (&SQUARE_COUNTS, 4.06),
        LatticeKind::Hexagonal => (&HEX_COUNTS, 5.18),
        LatticeKind::Triangular => (&TRI_COUNTS, 2.84),
    };
    if n == 0 {
        return 0.0;
    }
    match table.get(n - 1) {
        Some(&v) => v,
        None => table[table.len() - 1] * growth.powi((n - table.len()) as i32),
    }
}

/// Dense grid around the seeds with precomputed neighbour indices.
struct Window {
    lattice: Lattice,
    x0: i32,
    y0: i32,
    w: usize,
    edge: Vec<u32>,
    edge_len: Vec<u8>,
    adj: Vec<u32>,
    adj_len: Vec<u8>,
}

const PAD: i32 = 3;

impl Window {
    fn new(lattice: Lattice, n: usize) -> Window {
        let n = n as i32;
        let (x0, x1, y0, y1) = (-n - PAD, n + PAD, -PAD, n + PAD);
        let w = (x1 - x0 + 1) as usize;
        let h = (y1 - y0 + 1) as usize;
        let mut win = Window {
            lattice,
            x0,
            y0,
            w,
            edge: vec![0; w * h * 6],
            edge_len: vec![0; w * h],
            adj: vec![0; w * h * 12],
            adj_len: vec![0; w * h],
        };
        for i in 0..w * h {
            let c = win.cell(i as u32);
            let (x, y) = (i % w, i / w);
            if x < 2 || y < 2 || x + 2 >= w || y + 2 >= h {
                continue;
            }
            for (k, d) in lattice.edge_neighbors(c).enumerate() {
                win.edge[i * 6 + k] = win.index(d);
                win.edge_len[i] += 1;
            }
            for (k, d) in lattice.adjacent(c).enumerate() {
                win.adj[i * 12 + k] = win.index(d);
                win.adj_len[i] += 1;
            }
        }
        win
    }

    fn len(&self) -> usize {
        self.edge_len.len()
    }

    fn index(&self, c: Cell) -> u32 {
        ((c.y - self.y0) as usize * self.w + (c.x - self.x0) as usize) as u32
    }

    fn cell(&self, i: u32) -> Cell {
        let i = i as usize;
        Cell::new(self.x0 + (i % self.w) as i32, self.y0 + (i / self.w) as i32)
    }

    fn edge(&self, i: u32) -> &[u32] {
        let i = i as usize;
        &self.edge[i * 6..i * 6 + self.edge_len[i] as usize]
    }

    fn adj(&self, i: u32) -> &[u32] {
        let i = i as usize;
        &self.adj[i * 12..i * 12 + self.adj_len[i] as usize]
    }

    /// One seed per cell orientation; an animal is grown from its lowest row,
    /// leftmost cell, translated onto the matching seed.
    fn seeds(&self) -> Vec<u32> {
        match self.lattice.kind() {
            LatticeKind::Triangular => vec![
                self.index(Cell::new(0, 0)),
                self.index(Cell::new(1, 0)),
            ],
            _ => vec![self.index(Cell::new(0, 0))],
        }
    }

    fn animal(&self, cells: &[u32]) -> Animal {
        let (cells, _) =
            canonical_translate(self.lattice.kind(), cells.iter().map(|&i| self.cell(i)))
                .expect("nonempty");
        Animal::from_canonical(self.lattice, cells)
    }
}

/// What happens at the leaves of the search.
trait Sink {
    /// Largest final perimeter still of interest.
    fn bound(&self) -> usize {
        usize::MAX
    }
    fn leaf(&mut self, win: &Window, cells: &[u32], perimeter: usize);
}

/// A subtree of the generation tree: the search state just before
/// `grow(from)` would run.
#[derive(Clone)]
struct Task {
    seed: u32,
    cells: Vec<u32>,
    queue: Vec<u32>,
    from: usize,
}

struct Search<'w, S> {
    win: &'w Window,
    n: usize,
    seed: u32,
    reached: Vec<bool>,
    placed: Vec<bool>,
    touch: Vec<u8>,
    perimeter: usize,
    queue: Vec<u32>,
    cells: Vec<u32>,
    split_at: usize,
    tasks: Vec<Task>,
    sink: S,
}

impl<'w, S: Sink> Search<'w, S> {
    fn new(win: &'w Window, n: usize, seed: u32, sink: S) -> Self {
        Search {
            win,
            n,
            seed,
            reached: vec![false; win.len()],
            placed: vec![false; win.len()],
            touch: vec![0; win.len()],
            perimeter: 0,
            queue: Vec::with_capacity(4 * n + 8),
            cells: Vec::with_capacity(n),
            split_at: usize::MAX,
            tasks: Vec::new(),
            sink,
        }
    }

    fn resume(win: &'w Window, n: usize, task: &Task, sink: S) -> Self {
        let mut s = Search::new(win, n, task.seed, sink);
        for &c in &task.queue {
            s.reached[c as usize] = true;
        }
        s.queue.extend_from_slice(&task.queue);
        for &c in &task.cells {
            s.place(c);
        }
        s
    }

    fn place(&mut self, c: u32) {
        let ci = c as usize;
        self.cells.push(c);
        self.placed[ci] = true;
        if self.touch[ci] > 0 {
            self.perimeter -= 1;
        }
        for &d in self.win.adj(c) {
            let d = d as usize;
            self.touch[d] += 1;
            if self.touch[d] == 1 && !self.placed[d] {
                self.perimeter += 1;
            }
        }
    }

    fn unplace(&mut self, c: u32) {
        let ci = c as usize;
        for &d in self.win.adj(c) {
            let d = d as usize;
            if self.touch[d] == 1 && !self.placed[d] {
                self.perimeter -= 1;
            }
            self.touch[d] -= 1;
        }
        self.placed[ci] = false;
        if self.touch[ci] > 0 {
            self.perimeter += 1;
        }
        self.cells.pop();
    }

    fn start(&mut self) {
        self.reached[self.seed as usize] = true;
        self.queue.push(self.seed);
        self.grow(0);
    }

    fn grow(&mut self, from: usize) {
        let depth = self.cells.len() + 1;
        let mut i = from;
        while i < self.queue.len() {
            let c = self.queue[i];
            self.place(c);
            if depth == self.n {
                self.sink.leaf(self.win, &self.cells, self.perimeter);
            } else if depth + self.perimeter <= self.n.saturating_add(self.sink.bound()) {
                let old = self.queue.len();
                let win = self.win;
                for &e in win.edge(c) {
                    if e >= self.seed && !self.reached[e as usize] {
                        self.reached[e as usize] = true;
                        self.queue.push(e);
                    }
                }
                if depth == self.split_at {
                    self.tasks.push(Task {
                        seed: self.seed,
                        cells: self.cells.clone(),
                        queue: self.queue.clone(),
                        from: i + 1,
                    });
                } else {
                    self.grow(i + 1);
                }
                for &e in &self.queue[old..] {
                    self.reached[e as usize] = false;
                }
                self.queue.truncate(old);
            }
            self.unplace(c);
            i += 1;
        }
    }
}

/// Run the search for every seed, splitting into parallel tasks, and return
/// one sink per task in a fixed order.
fn run<S, F>(win: &Window, n: usize, cfg: &EnumConfig, make: F) -> Vec<S>
where
    S: Sink + Send,
    F: Fn() -> S + Sync,
{
    let split = SPLIT_DEPTH.min(n.saturating_sub(1));
    let mut sinks = Vec::new();
    let mut tasks = Vec::new();
    for seed in win.seeds() {
        let mut s = Search::new(win, n, seed, make());
        if split == 0 {
            // nothing to split: single-cell animals or no parallel work
            s.start();
        } else {
            s.split_at = split;
            s.start();
            tasks.append(&mut s.tasks);
        }
        sinks.push(s.sink);
    }
    if tasks.is_empty() {
        return sinks;
    }
    let done: Vec<S> = cfg.pool().install(|| {
        tasks
            .par_iter()
            .map(|t| {
                let mut s = Search::resume(win, n, t, make());
                s.grow(t.from);
                s.sink
            })
            .collect()
    });
    sinks.extend(done);
    sinks
}

struct Counter(u64);

impl Sink for Counter {
    fn leaf(&mut self, _: &Window, _: &[u32], _: usize) {
        self.0 += 1;
    }
}

/// Number of fixed animals of size `n`.
pub fn count(kind: LatticeKind, n: usize, cfg: &EnumConfig) -> Result<u64> {
    if n == 0 {
        return Ok(0);
    }
    cfg.check(kind, n)?;
    let lattice = Lattice::new(kind, AdjacencyMode::Edge)?;
    let win = Window::new(lattice, n);
    Ok(run(&win, n, cfg, || Counter(0)).iter().map(|c| c.0).sum())
}

struct Visit<'f, F>(&'f F, u64);

impl<F: Fn(&Animal) + Sync> Sink for Visit<'_, F> {
    fn leaf(&mut self, win: &Window, cells: &[u32], _: usize) {
        (self.0)(&win.animal(cells));
        self.1 += 1;
    }
}

/// Call `visitor` once for every fixed animal of size `n`, possibly from
/// several threads at once, and return how many there were.
pub fn for_each_animal<F>(lattice: Lattice, n: usize, cfg: &EnumConfig, visitor: F) -> Result<u64>
where
    F: Fn(&Animal) + Sync,
{
    if n == 0 {
        return Ok(0);
    }
    cfg.check(lattice.kind(), n)?;
    let win = Window::new(lattice, n);
    Ok(run(&win, n, cfg, || Visit(&visitor, 0)).iter().map(|v| v.1).sum())
}

struct Collect(Vec<Animal>);

impl Sink for Collect {
    fn leaf(&mut self, win: &Window, cells: &[u32], _: usize) {
        self.0.push(win.animal(cells));
    }
}

/// Every fixed animal of size `n`, sorted.
pub fn animals(lattice: Lattice, n: usize, cfg: &EnumConfig) -> Result<Vec<Animal>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    cfg.check(lattice.kind(), n)?;
    let win = Window::new(lattice, n);
    let mut all: Vec<Animal> = run(&win, n, cfg, || Collect(Vec::new()))
        .into_iter()
        .flat_map(|c| c.0)
        .collect();
    all.sort_unstable();
    Ok(all)
}

struct Minimal<'a> {
    shared: &'a AtomicUsize,
    best: usize,
    keep: bool,
    found: Vec<Animal>,
}

impl Sink for Minimal<'_> {
    fn bound(&self) -> usize {
        self.best.min(self.shared.load(Ordering::Relaxed))
    }

    fn leaf(&mut self, win: &Window, cells: &[u32], perimeter: usize) {
        if perimeter > self.bound() {
            return;
        }
        if perimeter < self.best {
            self.best = perimeter;
            self.found.clear();
            self.shared.fetch_min(perimeter, Ordering::Relaxed);
        }
        if self.keep {
            self.found.push(win.animal(cells));
        }
    }
}

/// Perimeter of a compact animal grown greedily, an upper bound for the
/// minimum perimeter that seeds the branch-and-bound.
pub fn greedy_perimeter(lattice: Lattice, n: usize) -> usize {
    let mut cells = vec![Cell::new(0, 0)];
    while cells.len() < n {
        let a = Animal::from_canonical(lattice, {
            let mut v = cells.clone();
            v.sort_unstable();
            v
        });
        let next = a
            .perimeter()
            .into_iter()
            .filter(|&c| lattice.edge_neighbors(c).any(|d| a.contains(d)))
            .min_by_key(|&c| {
                let mut v = cells.clone();
                v.push(c);
                v.sort_unstable();
                (Animal::from_canonical(lattice, v).perimeter_size(), c)
            })
            .expect("perimeter is never empty");
        cells.push(next);
    }
    cells.sort_unstable();
    Animal::from_canonical(lattice, cells).perimeter_size()
}

fn minimal_search(
    lattice: Lattice,
    n: usize,
    cfg: &EnumConfig,
    keep: bool,
) -> Result<(usize, Vec<Animal>)> {
    if n == 0 {
        return Err(Error::Empty);
    }
    cfg.check(lattice.kind(), n)?;
    let win = Window::new(lattice, n);
    let hint = greedy_perimeter(lattice, n);
    let shared = AtomicUsize::new(hint);
    let sinks = run(&win, n, cfg, || Minimal {
        shared: &shared,
        best: hint,
        keep,
        found: Vec::new(),
    });
    let p = sinks.iter().map(|s| s.best).min().expect("at least one seed");
    let mut found: Vec<Animal> = sinks
        .into_iter()
        .filter(|s| s.best == p)
        .flat_map(|s| s.found)
        .collect();
    found.sort_unstable();
    Ok((p, found))
}

/// Least perimeter over all animals of size `n`, by exhaustive search.
pub fn min_perimeter_brute(lattice: Lattice, n: usize, cfg: &EnumConfig) -> Result<usize> {
    minimal_search(lattice, n, cfg, false).map(|(p, _)| p)
}

/// All animals of one size that attain the least perimeter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalSet {
    pub lattice: Lattice,
    pub n: usize,
    pub p: usize,
    pub animals: Vec<Animal>,
}

impl MinimalSet {
    pub fn len(&self) -> usize {
        self.animals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.animals.is_empty()
    }

    /// Number of distinct shapes once rotations and reflections are allowed.
    pub fn free_count(&self) -> Result<usize> {
        let mut forms = self
            .animals
            .iter()
            .map(Animal::free_form)
            .collect::<Result<Vec<_>>>()?;
        forms.sort_unstable();
        forms.dedup();
        Ok(forms.len())
    }
}

/// `M_n` by exhaustive search.
pub fn minimal_set(lattice: Lattice, n: usize, cfg: &EnumConfig) -> Result<MinimalSet> {
    let (p, animals) = minimal_search(lattice, n, cfg, true)?;
    Ok(MinimalSet {
        lattice,
        n,
        p,
        animals,
    })
}

/// The size `m` with `m + eps(m) = n`, if any.
pub fn chain_predecessor(lattice: Lattice, n: usize, cfg: &EnumConfig) -> Result<Option<usize>> {
    let mut found = None;
    for m in 1..n {
        let e = theory::epsilon(lattice, m, cfg)?;
        if m + e == n {
            if found.is_some() {
                return Err(Error::Unsupported(format!(
                    "size {n} on {lattice} has more than one chain predecessor"
                )));
            }
            found = Some(m);
            if theory::has_formula(lattice) {
                break;
            }
        }
        if theory::has_formula(lattice) && m + e > n {
            break;
        }
    }
    Ok(found)
}

/// `M_n` as the inflation image of its chain predecessor's set. The
/// predecessor set is enumerated when affordable and otherwise reached by
/// the same route.
pub fn minimal_set_via_chain(lattice: Lattice, n: usize, cfg: &EnumConfig) -> Result<MinimalSet> {
    if lattice == Lattice::TRIANGULAR {
        return Err(Error::Unsupported(
            "inflation does not preserve minimality on edge-adjacent triangles".into(),
        ));
    }
    let m = chain_predecessor(lattice, n, cfg)?.ok_or(Error::ChainRoot(n))?;
    let source = match minimal_set(lattice, m, cfg) {
        Err(Error::BudgetExceeded { .. }) => minimal_set_via_chain(lattice, m, cfg)?,
        other => other?,
    };
    let mut animals: Vec<Animal> = source.animals.iter().map(Animal::inflate).collect();
    animals.sort_unstable();
    animals.dedup();
    let p = animals[0].perimeter_size();
    if animals.iter().any(|a| a.perimeter_size() != p || a.size() != n) {
        return Err(Error::Unsupported(format!(
            "inflated members of M_{m} disagree in size or perimeter"
        )));
    }
    Ok(MinimalSet {
        lattice,
        n,
        p,
        animals,
    })
}

/// On-disk store of minimal sets, one file per lattice, adjacency and size.
#[derive(Clone, Debug)]
pub struct MinimalSetCache {
    dir: PathBuf,
}

impl MinimalSetCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        MinimalSetCache { dir: dir.into() }
    }

    /// `LATANIM_CACHE_DIR`, else the platform cache directory.
    pub fn from_env() -> Option<Self> {
        std::env::var_os("LATANIM_CACHE_DIR")
            .map(PathBuf::from)
            .or_else(|| dirs::cache_dir().map(|d| d.join("latanim")))
            .map(MinimalSetCache::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, lattice: Lattice, n: usize) -> PathBuf {
        self.dir
            .join(format!("{}-{}-{n}.set", lattice.kind(), lattice.mode()))
    }

    /// A cached set, revalidated against its own header.
    pub fn load(&self, lattice: Lattice, n: usize) -> Result<Option<MinimalSet>> {
        let path = self.path(lattice, n);
        let text = match std::fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let bad = |msg: String| Error::BadCache {
            path: path.clone(),
            msg,
        };
        let set = crate::io::parse_set(&text).map_err(|e| bad(e.to_string()))?;
        if set.lattice != lattice || set.n != n {
            return Err(bad("header names another set".into()));
        }
        for a in &set.animals {
            if a.size() != n || a.perimeter_size() != set.p {
                return Err(bad(format!("member {a} has the wrong size or perimeter")));
            }
        }
        if set.animals.windows(2).any(|w| w[0] >= w[1]) {
            return Err(bad("members are not sorted and distinct".into()));
        }
        if theory::has_formula(lattice) && theory::epsilon_formula(lattice.kind(), n)? != set.p {
            return Err(bad("perimeter is not the minimum".into()));
        }
        Ok(Some(set))
    }

    pub fn store(&self, set: &MinimalSet) -> Result<()> {
        std::fs::create_dir_all(&self.dir)?;
        let path = self.path(set.lattice, set.n);
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        std::fs::write(&tmp, crate::io::format_set(set))?;
        std::fs::rename(&tmp, &path)?;
        Ok(())
    }

    /// Cached set, or compute (directly, falling back to the chain) and store.
    pub fn get_or_compute(
        &self,
        lattice: Lattice,
        n: usize,
        cfg: &EnumConfig,
        via_chain: bool,
    ) -> Result<MinimalSet> {
        if let Some(set) = self.load(lattice, n)? {
            return Ok(set);
        }
        let set = if via_chain {
            minimal_set_via_chain(lattice, n, cfg)?
        } else {
            minimal_set(lattice, n, cfg)?
        };
        self.store(&set)?;
        Ok(set)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one() -> EnumConfig {
        EnumConfig::with_threads(1)
    }

    #[test]
    fn small_counts() {
        assert_eq!(count(LatticeKind::Square, 1, &one()).unwrap(), 1);
        assert_eq!(count(LatticeKind::Square, 4, &one()).unwrap(), 19);
        assert_eq!(count(LatticeKind::Hexagonal, 3, &one()).unwrap(), 11);
        assert_eq!(count(LatticeKind::Triangular, 1, &one()).unwrap(), 2);
    }

    #[test]
    fn counts_match_table() {
        for kind in LatticeKind::ALL {
            for n in 1..=9 {
                let c = count(kind, n, &one()).unwrap();
                assert_eq!(c as f64, estimate(kind, n), "{kind} {n}");
            }
        }
    }

    #[test]
    fn animals_are_distinct_and_canonical() {
        for lattice in [Lattice::SQUARE, Lattice::HEXAGONAL, Lattice::TRIANGULAR] {
            let all = animals(lattice, 5, &one()).unwrap();
            assert!(all.windows(2).all(|w| w[0] < w[1]));
            for a in &all {
                assert_eq!(&Animal::new(lattice, a.cells().to_vec()).unwrap(), a);
            }
        }
    }

    #[test]
    fn visitor_sees_every_animal() {
        let seen = std::sync::Mutex::new(Vec::new());
        let n = for_each_animal(Lattice::SQUARE, 5, &EnumConfig::with_threads(2), |a| {
            seen.lock().unwrap().push(a.clone())
        })
        .unwrap();
        assert_eq!(n, 63);
        let mut seen = seen.into_inner().unwrap();
        seen.sort();
        assert_eq!(seen, animals(Lattice::SQUARE, 5, &one()).unwrap());
    }

    #[test]
    fn min_perimeter_examples() {
        assert_eq!(min_perimeter_brute(Lattice::SQUARE, 5, &one()).unwrap(), 8);
        assert_eq!(min_perimeter_brute(Lattice::SQUARE, 1, &one()).unwrap(), 4);
        assert_eq!(min_perimeter_brute(Lattice::HEXAGONAL, 2, &one()).unwrap(), 8);
    }

    #[test]
    fn minimal_set_matches_filter() {
        for lattice in [
            Lattice::SQUARE,
            Lattice::HEXAGONAL,
            Lattice::TRIANGULAR,
            Lattice::TRIANGULAR_VERTEX,
        ] {
            for n in 1..=7 {
                let all = animals(lattice, n, &one()).unwrap();
                let p = all.iter().map(Animal::perimeter_size).min().unwrap();
                let want: Vec<Animal> =
                    all.into_iter().filter(|a| a.perimeter_size() == p).collect();
                let got = minimal_set(lattice, n, &one()).unwrap();
                assert_eq!((got.p, &got.animals), (p, &want), "{lattice} {n}");
            }
        }
    }

    #[test]
    fn minimal_set_examples() {
        assert_eq!(minimal_set(Lattice::SQUARE, 3, &one()).unwrap().len(), 4);
        assert_eq!(minimal_set(Lattice::SQUARE, 1, &one()).unwrap().len(), 1);
        let m9 = minimal_set(Lattice::HEXAGONAL, 9, &one()).unwrap();
        assert_eq!((m9.len(), m9.p), (27, 14));
        assert_eq!(m9.free_count().unwrap(), 4);
    }

    #[test]
    fn chain_examples() {
        let m10 = minimal_set_via_chain(Lattice::SQUARE, 10, &one()).unwrap();
        assert_eq!(m10, minimal_set(Lattice::SQUARE, 10, &one()).unwrap());
        assert_eq!(m10.len(), 4);
        assert_eq!(chain_predecessor(Lattice::SQUARE, 24, &one()).unwrap(), Some(12));
        assert_eq!(chain_predecessor(Lattice::SQUARE, 12, &one()).unwrap(), Some(4));
        let m24 = minimal_set_via_chain(Lattice::SQUARE, 24, &one()).unwrap();
        assert_eq!(m24.len(), minimal_set(Lattice::SQUARE, 4, &one()).unwrap().len());
        assert!(matches!(
            minimal_set_via_chain(Lattice::SQUARE, 4, &one()),
            Err(Error::ChainRoot(4))
        ));
        let m23 = minimal_set_via_chain(Lattice::HEXAGONAL, 23, &one()).unwrap();
        assert_eq!((m23.len(), m23.p), (27, 20));
        assert_eq!(m23.free_count().unwrap(), 4);
    }

    #[test]
    fn budget_is_enforced() {
        let cfg = EnumConfig {
            threads: Some(1),
            budget: 1000.0,
        };
        assert!(matches!(
            count(LatticeKind::Square, 9, &cfg),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(count(LatticeKind::Square, 7, &cfg).is_ok());
        assert!(estimate(LatticeKind::Square, 20) > estimate(LatticeKind::Square, 15));
    }

    #[test]
    fn greedy_bound_is_an_upper_bound() {
        for n in 1..=10 {
            let g = greedy_perimeter(Lattice::SQUARE, n);
            assert!(g >= min_perimeter_brute(Lattice::SQUARE, n, &one()).unwrap());
        }
    }
}
