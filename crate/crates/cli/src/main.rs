//! `latanim`: minimal-perimeter lattice animals from the command line.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 bad usage or input,
//! 3 the enumeration budget was exceeded. Errors go to stderr as
//! `error[<code>]: <message>`.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use latanim::enumerate::{self, EnumConfig, MinimalSetCache, DEFAULT_BUDGET};
use latanim::verify::{self, Trajectory, VerificationReport};
use latanim::{chem, io, theory, Animal, Error, Lattice};

mod table;

use table::Table;

#[derive(Parser)]
#[command(name = "latanim", version, about = "Minimal-perimeter lattice animals")]
struct Cli {
    /// Worker threads for enumeration
    #[arg(long, global = true, env = "LATANIM_THREADS")]
    threads: Option<usize>,
    /// Refuse sizes whose estimated number of animals exceeds this
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

#[derive(Args)]
struct Output {
    /// Print CSV instead of a table
    #[arg(long, conflicts_with = "json")]
    csv: bool,
    /// Print JSON instead of a table
    #[arg(long)]
    json: bool,
}

impl Output {
    fn format(&self) -> Format {
        match (self.csv, self.json) {
            (true, _) => Format::Csv,
            (_, true) => Format::Json,
            _ => Format::Table,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Minimum perimeter by size, from the formula and optionally by search
    Eps {
        #[arg(long)]
        lattice: Lattice,
        #[arg(long)]
        n_max: usize,
        /// Also compute each value by exhaustive search
        #[arg(long)]
        brute_force: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Number of fixed animals of one size
    Count {
        #[arg(long)]
        lattice: Lattice,
        #[arg(long)]
        size: usize,
    },
    /// Animals of one size with the least perimeter
    Minimal {
        #[arg(long)]
        lattice: Lattice,
        #[arg(long)]
        size: usize,
        /// Build the set by inflating the set of the chain predecessor
        #[arg(long)]
        via_chain: bool,
        /// Write the set to this file
        #[arg(long)]
        out: Option<PathBuf>,
        /// Do not read or write the set cache
        #[arg(long)]
        no_cache: bool,
    },
    /// Add the perimeter to an animal, `steps` times
    Inflate {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        steps: usize,
    },
    /// Remove the border from an animal, `steps` times
    Deflate {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        steps: usize,
    },
    /// Check a part of the theory exhaustively
    Verify(VerifyArgs),
    /// Inflation-chain roots up to a perimeter
    Roots {
        #[arg(long)]
        lattice: Lattice,
        #[arg(long)]
        p_max: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Inflate an animal until its perimeter is minimal
    Converge {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = verify::DEFAULT_MAX_STEPS)]
        max_steps: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Polyhexes as benzenoid hydrocarbons
    #[command(subcommand)]
    Chem(ChemCommand),
    /// Draw an animal or a set file as SVG
    Render {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum ChemCommand {
    /// Molecular formula of a polyhex
    Formula {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Constant-isomer series rooted at every perimeter up to `p-max`
    Series {
        #[arg(long)]
        p_max: usize,
        /// Sizes per series
        #[arg(long, default_value_t = 4)]
        terms: usize,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckName {
    Bijection,
    Roots,
    Stepping,
    Monotonic,
    Convergence,
    Polyiamond,
    Identities,
    Hydrogens,
}

#[derive(Args)]
struct VerifyArgs {
    check: CheckName,
    #[arg(long, default_value = "square")]
    lattice: Lattice,
    /// First source size (bijection)
    #[arg(long, default_value_t = 2)]
    from: usize,
    /// Last source size (bijection)
    #[arg(long)]
    to: Option<usize>,
    /// Largest size checked (all other checks)
    #[arg(long, default_value_t = 8)]
    n_max: usize,
    /// Also enumerate the target sets and compare them with the images
    #[arg(long)]
    full_set: bool,
    /// Write the reports to this file as JSON
    #[arg(long)]
    json: Option<PathBuf>,
}

struct Failed;

enum Fail {
    Lib(Error),
    Verify,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

impl From<Failed> for Fail {
    fn from(_: Failed) -> Self {
        Fail::Verify
    }
}

type Run = Result<(), Fail>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = EnumConfig {
        threads: cli.threads,
        budget: cli.budget,
    };
    match run(cli.command, &cfg) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Verify) => ExitCode::from(1),
        Err(Fail::Lib(e)) => {
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::from(match e {
                Error::BudgetExceeded { .. } => 3,
                _ => 2,
            })
        }
    }
}

fn run(command: Command, cfg: &EnumConfig) -> Run {
    match command {
        Command::Eps {
            lattice,
            n_max,
            brute_force,
            out,
        } => eps(lattice, n_max, brute_force, out.format(), cfg),
        Command::Count { lattice, size } => {
            println!("{}", enumerate::count(lattice.kind(), size, cfg)?);
            Ok(())
        }
        Command::Minimal {
            lattice,
            size,
            via_chain,
            out,
            no_cache,
        } => minimal(lattice, size, via_chain, out.as_deref(), no_cache, cfg),
        Command::Inflate { input, steps } => {
            let a = io::read_animal(&input)?;
            print!("{}", io::serialize_animal(&a.inflate_k(steps)));
            Ok(())
        }
        Command::Deflate { input, steps } => {
            let mut a = io::read_animal(&input)?;
            for _ in 0..steps {
                a = a.deflate().into_animal(a.lattice())?;
            }
            print!("{}", io::serialize_animal(&a));
            Ok(())
        }
        Command::Verify(args) => verify_cmd(args, cfg),
        Command::Roots {
            lattice,
            p_max,
            out,
        } => roots(lattice, p_max, out.format()),
        Command::Converge {
            input,
            max_steps,
            out,
        } => converge(&io::read_animal(&input)?, max_steps, out.format()),
        Command::Chem(ChemCommand::Formula { input }) => {
            let m = chem::molecule(&io::read_animal(&input)?)?;
            println!("{}", m.formula);
            if !m.minimal {
                println!("note: perimeter {} is not minimal; hydrogens counted by carbon degree", m.perimeter);
            }
            Ok(())
        }
        Command::Chem(ChemCommand::Series { p_max, terms, out }) => {
            let rows = chem::isomer_series(p_max, terms, cfg)?;
            match out.format() {
                Format::Csv => print!("{}", chem::series_csv(&rows)?),
                Format::Json => print!("{}", io::to_json(&rows)?),
                Format::Table => {
                    let mut t = Table::new(["p", "root", "sizes", "isomers", "free", "formulas"]);
                    for r in &rows {
                        let join = |v: &[usize]| {
                            v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
                        };
                        if r.computed {
                            t.row([
                                r.p.to_string(),
                                r.root.to_string(),
                                join(&r.sizes),
                                join(&r.isomers),
                                join(&r.free_isomers),
                                r.formulas.join(" "),
                            ]);
                        } else {
                            t.row([r.p.to_string(), r.root.to_string(), join(&r.sizes), "-".into(), "-".into(), "uncomputed".into()]);
                        }
                    }
                    print!("{t}");
                }
            }
            Ok(())
        }
        Command::Render { input, out } => {
            let text = std::fs::read_to_string(&input).map_err(Error::from)?;
            let animals = if text.starts_with("latanim-set") {
                io::parse_set(&text)?.animals
            } else {
                vec![io::parse_animal(&text)?]
            };
            io::write_svg(&out, &animals)?;
            Ok(())
        }
    }
}

fn eps(lattice: Lattice, n_max: usize, brute: bool, format: Format, cfg: &EnumConfig) -> Run {
    let formula_of = |n| -> Result<Option<usize>, Error> {
        if theory::has_formula(lattice) {
            theory::epsilon_formula(lattice.kind(), n).map(Some)
        } else {
            Ok(None)
        }
    };
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let formula = formula_of(n)?;
        let oracle = if brute {
            Some(enumerate::min_perimeter_brute(lattice, n, cfg)?)
        } else {
            None
        };
        rows.push((n, formula, oracle));
    }
    let show = |v: Option<usize>, blank: &str| v.map_or(blank.to_string(), |v| v.to_string());
    match format {
        Format::Csv => print!(
            "{}",
            io::csv_table(
                &["n", "formula", "oracle"],
                rows.iter()
                    .map(|&(n, f, o)| [n.to_string(), show(f, ""), show(o, "")])
            )?
        ),
        Format::Json => {
            let v: Vec<_> = rows
                .iter()
                .map(|&(n, f, o)| serde_json::json!({ "n": n, "formula": f, "oracle": o }))
                .collect();
            print!("{}", io::to_json(&v)?);
        }
        Format::Table => {
            let mut t = Table::new(["n", "formula", "oracle"]);
            for &(n, f, o) in &rows {
                t.row([n.to_string(), show(f, "-"), show(o, "-")]);
            }
            print!("{t}");
        }
    }
    if rows.iter().any(|&(_, f, o)| matches!((f, o), (Some(f), Some(o)) if f != o)) {
        return Err(Failed.into());
    }
    Ok(())
}

fn minimal(
    lattice: Lattice,
    size: usize,
    via_chain: bool,
    out: Option<&Path>,
    no_cache: bool,
    cfg: &EnumConfig,
) -> Run {
    let cache = if no_cache { None } else { MinimalSetCache::from_env() };
    let set = match cache {
        Some(c) => c.get_or_compute(lattice, size, cfg, via_chain)?,
        None if via_chain => enumerate::minimal_set_via_chain(lattice, size, cfg)?,
        None => enumerate::minimal_set(lattice, size, cfg)?,
    };
    let free = match set.free_count() {
        Ok(f) => format!(", {f} free shapes"),
        Err(_) => String::new(),
    };
    println!("{} animals{free}, perimeter {}", set.len(), set.p);
    if let Some(path) = out {
        io::write_set(path, &set)?;
    }
    Ok(())
}

fn verify_cmd(args: VerifyArgs, cfg: &EnumConfig) -> Run {
    let l = args.lattice;
    let n = args.n_max;
    let reports: Vec<VerificationReport> = match args.check {
        CheckName::Bijection => {
            let to = args.to.unwrap_or(args.from);
            vec![verify::verify_bijection(l, args.from, to, args.full_set, cfg)?]
        }
        CheckName::Roots => vec![verify::verify_roots(l, n, cfg)?],
        CheckName::Stepping => vec![verify::verify_stepping(l, n, cfg)?],
        CheckName::Monotonic => vec![verify::verify_monotonicity(l, n, cfg)?],
        CheckName::Convergence => vec![verify::verify_convergence(l, n, cfg)?],
        CheckName::Polyiamond => vec![
            verify::verify_polyiamond_edge(n, cfg)?,
            verify::verify_polyiamond_vertex(n, cfg)?,
        ],
        CheckName::Identities => {
            let mut v = vec![
                verify::verify_excess_balance(l, n, cfg)?,
                verify::verify_bridge_patterns(l, n, cfg)?,
            ];
            match l.kind() {
                latanim::LatticeKind::Square => v.push(verify::verify_turns(n, cfg)?),
                latanim::LatticeKind::Hexagonal => v.push(verify::verify_hex_angles(n, cfg)?),
                latanim::LatticeKind::Triangular => {}
            }
            v
        }
        CheckName::Hydrogens => vec![verify::verify_hydrogens(n, cfg)?],
    };
    for r in &reports {
        print_report(r);
    }
    if let Some(path) = args.json {
        io::write_report(&path, &reports)?;
    }
    if reports.iter().all(VerificationReport::passed) {
        Ok(())
    } else {
        Err(Failed.into())
    }
}

fn print_report(r: &VerificationReport) {
    println!(
        "{} on {}, n = {}..{}: {}",
        r.check, r.lattice, r.range.from, r.range.to, r.status
    );
    for c in r.counterexamples.iter().chain(&r.documented) {
        match &c.animal {
            Some(a) => println!("  n = {}: {} [{a}]", c.n, c.reason),
            None => println!("  n = {}: {}", c.n, c.reason),
        }
    }
    for note in &r.notes {
        println!("  {note}");
    }
}

fn roots(lattice: Lattice, p_max: usize, format: Format) -> Run {
    let kind = lattice.kind();
    let mut rows = Vec::new();
    for p in theory::min_attained(kind)?..=p_max {
        match theory::epsilon_inverse(kind, p) {
            Ok(n) => rows.push((p, n)),
            Err(Error::NotAttained(_)) => {}
            Err(e) => return Err(e.into()),
        }
    }
    match format {
        Format::Csv => print!(
            "{}",
            io::csv_table(&["p", "root"], rows.iter().map(|(p, n)| [p.to_string(), n.to_string()]))?
        ),
        Format::Json => {
            let v: Vec<_> = rows
                .iter()
                .map(|&(p, n)| serde_json::json!({ "p": p, "root": n }))
                .collect();
            print!("{}", io::to_json(&v)?);
        }
        Format::Table => {
            let mut t = Table::new(["p", "root"]);
            for (p, n) in rows {
                t.row([p.to_string(), n.to_string()]);
            }
            print!("{t}");
        }
    }
    Ok(())
}

fn converge(a: &Animal, max_steps: usize, format: Format) -> Run {
    let t: Trajectory = verify::convergence(a, max_steps)?;
    match format {
        Format::Json => print!("{}", io::to_json(&t)?),
        Format::Csv => print!(
            "{}",
            io::csv_table(
                &["k", "size", "perimeter", "phi", "holes", "bridges", "perimeter_bridges", "minimal"],
                t.steps.iter().map(|s| {
                    [
                        s.k.to_string(),
                        s.size.to_string(),
                        s.perimeter.to_string(),
                        s.phi.to_string(),
                        s.holes.to_string(),
                        s.bridges.to_string(),
                        s.perimeter_bridges.to_string(),
                        s.minimal.to_string(),
                    ]
                })
            )?
        ),
        Format::Table => {
            let mut tab = Table::new(["k", "size", "perimeter", "phi", "holes", "bridges", "pbridges", "minimal"]);
            for s in &t.steps {
                let phi = if s.phi_extended { format!("{}*", s.phi) } else { s.phi.to_string() };
                tab.row([
                    s.k.to_string(),
                    s.size.to_string(),
                    s.perimeter.to_string(),
                    phi,
                    s.holes.to_string(),
                    s.bridges.to_string(),
                    s.perimeter_bridges.to_string(),
                    if s.minimal { "yes".into() } else { "no".into() },
                ]);
            }
            print!("{tab}");
            match t.reached {
                Some(k) => println!("minimal at step {k}, bound {}", t.bound),
                None => println!("not minimal within {max_steps} steps"),
            }
            for f in &t.failures {
                println!("  {f}");
            }
        }
    }
    if t.passed() {
        Ok(())
    } else {
        Err(Failed.into())
    }
}
