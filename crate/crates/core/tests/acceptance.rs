//! Acceptance gate: one line per criterion.
//!
//! Runs without the libtest harness so the lines always print. Exits
//! non-zero when a criterion fails that is not on `KNOWN_RED`, or when a
//! known-red criterion unexpectedly passes.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use latanim::chem;
use latanim::enumerate::{self, EnumConfig};
use latanim::theory;
use latanim::verify::{self, Status, VerificationReport};
use latanim::{Animal, Cell, Lattice, LatticeKind};

/// Wall-clock ceilings, generous for a single slow core.
const FORMULA_TIME: Duration = Duration::from_secs(120);
const FULL_SET_TIME: Duration = Duration::from_secs(300);

/// Criteria that fail on exhaustive evidence. The vertex-adjacent
/// polyiamond bijection breaks at n = 5, where the minimum perimeter is not
/// monotone and sizes 5 and 6 share one inflation target.
const KNOWN_RED: &[u32] = &[10];

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn passed(r: &VerificationReport) -> Result<(), String> {
    ensure(
        r.status == Status::Pass,
        format!("{} on {} {}: {:?}", r.check, r.lattice, r.status, r.counterexamples),
    )
}

fn cfg() -> EnumConfig {
    EnumConfig::default()
}

fn formula_agreement() -> Outcome {
    let start = Instant::now();
    let sq = verify::verify_monotonicity(Lattice::SQUARE, 12, &cfg()).map_err(|e| e.to_string())?;
    let hx = verify::verify_monotonicity(Lattice::HEXAGONAL, 10, &cfg()).map_err(|e| e.to_string())?;
    passed(&sq)?;
    passed(&hx)?;
    let t = start.elapsed();
    ensure(t <= FORMULA_TIME, format!("took {t:?}"))?;
    Ok(format!("square {}, hex {}, {:.1}s", sq.notes[0], hx.notes[0], t.as_secs_f64()))
}

fn hex_m9_reproduction() -> Outcome {
    let c = cfg();
    let set = enumerate::minimal_set(Lattice::HEXAGONAL, 9, &c).map_err(|e| e.to_string())?;
    let free = set.free_count().map_err(|e| e.to_string())?;
    ensure(set.p == 14, format!("p = {}", set.p))?;
    ensure(free == 4, format!("{free} free shapes"))?;
    let images: BTreeSet<Animal> = set.animals.iter().map(Animal::inflate).collect();
    ensure(images.len() == set.len(), "inflation not injective")?;
    for (q, r) in set.animals.iter().zip(set.animals.iter().map(Animal::inflate)) {
        ensure(r.size() == 23 && r.perimeter_size() == 20, format!("{q} inflates to {} / {}", r.size(), r.perimeter_size()))?;
        let back = r.deflate().into_animal(Lattice::HEXAGONAL).map_err(|e| e.to_string())?;
        ensure(&back == q, format!("{q} does not deflate back"))?;
    }
    let free_images: BTreeSet<Animal> = images
        .iter()
        .map(|a| a.free_form().expect("hex"))
        .collect();
    ensure(free_images.len() == 4, "images are not 4 shapes")?;
    let r = verify::verify_bijection(Lattice::HEXAGONAL, 9, 9, false, &c).map_err(|e| e.to_string())?;
    passed(&r)?;
    Ok(format!(
        "M_9: {free} shapes ({} placements), p 14 -> 23 cells, p 20, deflation round-trips",
        set.len()
    ))
}

fn full_set_bijection() -> Outcome {
    let start = Instant::now();
    let c = cfg();
    let sq = verify::verify_bijection(Lattice::SQUARE, 3, 6, true, &c).map_err(|e| e.to_string())?;
    let hx = verify::verify_bijection(Lattice::HEXAGONAL, 2, 3, true, &c).map_err(|e| e.to_string())?;
    passed(&sq)?;
    passed(&hx)?;
    let targets = |r: &VerificationReport| -> Vec<u64> {
        r.details.iter().map(|d| d["target"].as_u64().unwrap()).collect()
    };
    ensure(targets(&sq) == [10, 12, 13, 15], format!("square targets {:?}", targets(&sq)))?;
    ensure(targets(&hx) == [10, 12], format!("hex targets {:?}", targets(&hx)))?;
    let t = start.elapsed();
    ensure(t <= FULL_SET_TIME, format!("took {t:?}"))?;
    Ok(format!("square -> {:?}, hex -> {:?}, {:.1}s", targets(&sq), targets(&hx), t.as_secs_f64()))
}

fn documented_exception() -> Outcome {
    let r = verify::verify_bijection(Lattice::SQUARE, 2, 6, true, &cfg()).map_err(|e| e.to_string())?;
    ensure(r.status == Status::ExceptionDocumented, format!("status {}", r.status))?;
    ensure(r.counterexamples.is_empty(), format!("{:?}", r.counterexamples))?;
    ensure(r.documented.iter().all(|d| d.n == 2), "exception outside n = 2")?;
    let shapes: BTreeSet<Animal> = r
        .documented
        .iter()
        .map(|d| {
            let cells = d.animal.as_deref().unwrap().split(',').map(|p| {
                let mut it = p.split(' ').map(|v| v.parse::<i32>().unwrap());
                Cell::new(it.next().unwrap(), it.next().unwrap())
            });
            Animal::new(Lattice::SQUARE, cells).unwrap().free_form().unwrap()
        })
        .collect();
    ensure(shapes.len() == 1, format!("{} exceptional shapes", shapes.len()))?;
    let shape = shapes.into_iter().next().unwrap();
    ensure(shape.size() == 8, "exception is not of size 8")?;
    ensure(!shape.deflate().is_connected(LatticeKind::Square), "deflation is connected")?;
    Ok(format!(
        "one shape ({} placements) in M_8 with disconnected deflation; none for 3..6",
        r.documented.len()
    ))
}

fn stepping() -> Outcome {
    let c = cfg();
    let sq = verify::verify_stepping(Lattice::SQUARE, 10, &c).map_err(|e| e.to_string())?;
    let hx = verify::verify_stepping(Lattice::HEXAGONAL, 8, &c).map_err(|e| e.to_string())?;
    passed(&sq)?;
    passed(&hx)?;
    let members = |r: &VerificationReport| -> u64 {
        r.details.iter().map(|d| d["members"].as_u64().unwrap()).sum()
    };
    Ok(format!("{} square and {} hex minimal animals", members(&sq), members(&hx)))
}

fn identities() -> Outcome {
    let c = cfg();
    let reports = [
        verify::verify_excess_balance(Lattice::SQUARE, 8, &c),
        verify::verify_excess_balance(Lattice::HEXAGONAL, 6, &c),
        verify::verify_turns(8, &c),
        verify::verify_hex_angles(7, &c),
    ];
    let mut exact = 0;
    let mut weighted = 0;
    for r in reports {
        let r = r.map_err(|e| e.to_string())?;
        passed(&r)?;
        if r.check == "hex-angles" {
            for d in &r.details {
                exact += d["six_patterns"].as_u64().unwrap();
                weighted += d["with_b_or_p"].as_u64().unwrap();
            }
        }
    }
    Ok(format!(
        "excess balance and turns exhaustive; angle identity exact on {exact} polyhexes, weighted form on {weighted} more"
    ))
}

fn roots() -> Outcome {
    let c = cfg();
    let sq = verify::verify_roots(Lattice::SQUARE, 14, &c).map_err(|e| e.to_string())?;
    passed(&sq)?;
    let got: Vec<u64> = sq.details[0]["roots"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect();
    ensure(got == [1, 2, 3, 4, 6, 7, 9, 11, 14], format!("square roots {got:?}"))?;
    let n_max = theory::hex_root_formula(40) + 1;
    let hx = verify::verify_roots(Lattice::HEXAGONAL, n_max, &c).map_err(|e| e.to_string())?;
    passed(&hx)?;
    let h = LatticeKind::Hexagonal;
    let mut attained = 0;
    for p in theory::min_attained(h).unwrap()..=40 {
        if let Ok(n) = theory::epsilon_inverse(h, p) {
            attained += 1;
            ensure(theory::hex_root_formula(p) == n, format!("p = {p}"))?;
        }
    }
    let spot = hx.notes.iter().find(|n| n.starts_with("largest-size inflation")).unwrap();
    Ok(format!("square {got:?}; hex formula on {attained} attained p <= 40; {spot}"))
}

fn convergence() -> Outcome {
    let c = cfg();
    let sq = verify::verify_convergence(Lattice::SQUARE, 7, &c).map_err(|e| e.to_string())?;
    let hx = verify::verify_convergence(Lattice::HEXAGONAL, 5, &c).map_err(|e| e.to_string())?;
    passed(&sq)?;
    passed(&hx)?;
    let count = |r: &VerificationReport| -> u64 {
        r.details.iter().map(|d| d["animals"].as_u64().unwrap()).sum()
    };
    Ok(format!("{} square and {} hex animals within bound", count(&sq), count(&hx)))
}

fn chemistry() -> Outcome {
    let naph = Animal::new(Lattice::HEXAGONAL, [Cell::new(0, 0), Cell::new(1, 0)]).unwrap();
    let f0 = chem::molecular_formula(&naph).map_err(|e| e.to_string())?;
    let f1 = chem::molecular_formula(&naph.inflate()).map_err(|e| e.to_string())?;
    ensure(f0.to_string() == "C10H8", f0.to_string())?;
    ensure(f1.to_string() == "C32H14", f1.to_string())?;
    let r = verify::verify_hydrogens(8, &cfg()).map_err(|e| e.to_string())?;
    passed(&r)?;
    Ok(format!("{f0} -> {f1}; H = |P| on all minimal polyhexes n <= 8"))
}

fn polyiamonds() -> Outcome {
    // branch and bound visits a tiny fraction of the animals the budget
    // estimate counts, so the guard is lifted here
    let c = EnumConfig::unbounded();
    let edge = verify::verify_polyiamond_edge(8, &c).map_err(|e| e.to_string())?;
    passed(&edge)?;
    let witness = &edge.details.last().unwrap()["witness"];
    let vertex = verify::verify_polyiamond_vertex(6, &c).map_err(|e| e.to_string())?;
    let summary = format!(
        "edge counterexample at n = {} ({} cells, perimeter {} > {})",
        witness["n"], witness["inflated_size"], witness["inflated_perimeter"], witness["minimum_perimeter"]
    );
    passed(&vertex).map_err(|_| {
        let bad: Vec<String> = vertex
            .counterexamples
            .iter()
            .map(|c| format!("n = {}: {}", c.n, c.reason))
            .collect();
        format!("{summary}; vertex bijection fails: {}", bad.join("; "))
    })?;
    Ok(format!("{summary}; vertex bijection holds for n <= 6"))
}

fn determinism() -> Outcome {
    let max = std::thread::available_parallelism().map_or(1, |n| n.get());
    let threads: BTreeSet<usize> = [1, 2, max].into();
    let cases = [
        (Lattice::SQUARE, 9),
        (Lattice::HEXAGONAL, 7),
        (Lattice::TRIANGULAR, 10),
        (Lattice::TRIANGULAR_VERTEX, 8),
    ];
    let mut reference = None;
    for &t in &threads {
        let c = EnumConfig::with_threads(t);
        let mut out = Vec::new();
        for &(lattice, n) in &cases {
            out.push(format!("{:?}", enumerate::count(lattice.kind(), n, &c).map_err(|e| e.to_string())?));
            out.push(format!("{:?}", enumerate::minimal_set(lattice, n, &c).map_err(|e| e.to_string())?));
            out.push(format!("{:?}", enumerate::animals(lattice, n.min(7), &c).map_err(|e| e.to_string())?));
        }
        let r = verify::verify_stepping(Lattice::HEXAGONAL, 6, &c).map_err(|e| e.to_string())?;
        out.push(r.content().to_string());
        match &reference {
            None => reference = Some(out),
            Some(r) => ensure(r == &out, format!("{t} threads disagree"))?,
        }
    }
    Ok(format!("counts, sets and reports equal for threads {threads:?}"))
}

type Criterion = fn() -> Outcome;

fn main() -> ExitCode {
    let criteria: [(u32, &str, Criterion); 11] = [
        (1, "formula agreement", formula_agreement),
        (2, "hex M_9 reproduction", hex_m9_reproduction),
        (3, "full-set bijection", full_set_bijection),
        (4, "documented exception", documented_exception),
        (5, "stepping suite", stepping),
        (6, "universal identities", identities),
        (7, "roots", roots),
        (8, "convergence", convergence),
        (9, "chemistry", chemistry),
        (10, "polyiamond duality", polyiamonds),
        (11, "determinism", determinism),
    ];
    let mut unexpected = 0;
    for (id, name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        let known = KNOWN_RED.contains(&id);
        let (tag, text) = match (&outcome, known) {
            (Ok(s), false) => ("PASS", s.clone()),
            (Err(s), true) => ("FAIL (known)", s.clone()),
            (Ok(s), true) => {
                unexpected += 1;
                ("PASS (expected to fail)", s.clone())
            }
            (Err(s), false) => {
                unexpected += 1;
                ("FAIL", s.clone())
            }
        };
        println!("criterion {id:>2} {tag}: {name}: {text} [{secs:.1}s]");
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
