//! `bramsey`: command-line front end.
//!
//! Exit codes: 0 = avoids / not found / valid, 1 = found / invalid
//! certificate, 2 = error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};

use bramsey_core::bigraph::{read_coloring, write_coloring, Color, Coloring};
use bramsey_core::constructions::Construction;
use bramsey_core::fixtures::{deficient_coloring, random_pattern_seeded, random_stability};
use bramsey_core::paths::{two_colour_path_formula, two_colour_path_ramsey};
use bramsey_core::reducer::{reduce_and_find, verify_certificate, Mode, ReductionCertificate};
use bramsey_core::report::{verify_cm, verify_cycle, verify_path, OutcomeRow, SearchReport};
use bramsey_core::search::{compare_with_theorem8, ramsey_value, Budget, SearchConfig, Thresholds, MAX_SIDE};
use bramsey_core::Error;

#[derive(Parser)]
#[command(name = "bramsey", version, about = "Connected matchings, paths and cycles in 3-coloured complete bipartite graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct BudgetArgs {
    /// Node limit; defaults to BRAMSEY_BUDGET_NODES or 100000000.
    #[arg(long)]
    max_nodes: Option<u64>,
    /// Wall-clock limit in seconds.
    #[arg(long)]
    max_seconds: Option<f64>,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        let mut b = Budget::from_env();
        if let Some(n) = self.max_nodes {
            b.max_nodes = n;
        }
        if let Some(s) = self.max_seconds {
            b.max_time = Duration::from_secs_f64(s.max(0.0));
        }
        b
    }
}

#[derive(Args)]
struct Output {
    /// Write the JSON result here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write one of the extremal colorings as JSON.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Check a coloring for connected matchings, paths or cycles.
    Verify {
        input: PathBuf,
        /// Thresholds k,l,m for red, green, blue.
        #[arg(long, value_parser = parse_thresholds, group = "check")]
        cm: Option<Thresholds>,
        /// Path order (vertices).
        #[arg(long, group = "check")]
        path: Option<usize>,
        /// Cycle length (vertices, even).
        #[arg(long, group = "check")]
        cycle: Option<usize>,
        #[arg(long)]
        color: Option<Color>,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        output: Output,
    },
    /// Exhaustive search for r(k,l,m), or a comparison against the closed form.
    Search {
        #[arg(long, required_unless_present = "compare_theorem8")]
        k: Option<usize>,
        #[arg(long, required_unless_present = "compare_theorem8")]
        l: Option<usize>,
        #[arg(long, required_unless_present = "compare_theorem8")]
        m: Option<usize>,
        /// Largest side to try (at most 16).
        #[arg(long)]
        n_max: Option<usize>,
        /// Compare searched r(k,l,l) with the closed form over a grid.
        #[arg(long)]
        compare_theorem8: bool,
        /// Grid KxL for --compare-theorem8: 1 <= k <= K, 1 <= l <= L.
        #[arg(long, default_value = "3x3", value_parser = parse_grid)]
        grid: (usize, usize),
        /// Print JSON instead of a table.
        #[arg(long)]
        json: bool,
        /// Directory for witness colorings.
        #[arg(long)]
        witness_dir: Option<PathBuf>,
        #[arg(long)]
        threads: Option<usize>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Longest monochromatic path, or the 2-colour path Ramsey number.
    Paths {
        input: Option<PathBuf>,
        #[arg(long, required_unless_present = "ramsey")]
        color: Option<Color>,
        /// Compute the least N forcing a monochromatic path on this many
        /// vertices in red/blue colourings of K_{N,N}.
        #[arg(long, conflicts_with = "input")]
        ramsey: Option<usize>,
        #[arg(long, default_value_t = MAX_SIDE)]
        n_max: usize,
        #[arg(long)]
        threads: Option<usize>,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        output: Output,
    },
    /// Look for a monochromatic cycle of the given length.
    Cycles {
        input: PathBuf,
        #[arg(long)]
        color: Color,
        #[arg(long)]
        length: usize,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        output: Output,
    },
    /// Reduce an almost complete coloring and certify a connected matching.
    Reduce {
        input: PathBuf,
        #[arg(long)]
        n: usize,
        /// Allowed degree deficiency: every vertex has degree >= N - eps-n.
        #[arg(long, default_value_t = 0.0)]
        eps_n: f64,
        #[arg(long, default_value = "relaxed")]
        mode: Mode,
        #[arg(long)]
        threads: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Check a reduction certificate against its input coloring.
    VerifyCertificate { input: PathBuf, certificate: PathBuf },
}

#[derive(Subcommand)]
enum ConstructKind {
    /// Three diagonal blocks of sizes a1, a2, a3.
    Example1 {
        #[arg(long, value_parser = parse_triple)]
        a: [usize; 3],
        #[command(flatten)]
        output: Output,
    },
    /// The five-by-three block coloring avoiding (k+1, l+1, l+1).
    Lemma6 {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[command(flatten)]
        output: Output,
    },
    /// A coloring of K_{3k-3,3k-3} with no monochromatic k-connected
    /// matching; missing --b or --pattern are drawn from --seed.
    Stability {
        #[arg(long)]
        k: usize,
        #[arg(long, value_parser = parse_triple)]
        b: Option<[usize; 3]>,
        /// Row-major R/B string filling A_3 x B_3.
        #[arg(long)]
        pattern: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Random 3-coloured K_{N,N}, N = 3n + 40d, with at most d absent
    /// cells per vertex.
    Deficient {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
}

fn parse_list(s: &str) -> Result<Vec<usize>, String> {
    s.split(',').map(|x| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}"))).collect()
}

fn parse_triple(s: &str) -> Result<[usize; 3], String> {
    parse_list(s)?.try_into().map_err(|v: Vec<usize>| format!("expected 3 comma-separated values, got {}", v.len()))
}

fn parse_thresholds(s: &str) -> Result<Thresholds, String> {
    let [k, l, m] = parse_triple(s)?;
    Ok(Thresholds::new(k, l, m))
}

fn parse_grid(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(['x', 'X']).ok_or_else(|| format!("expected KxL, got {s:?}"))?;
    let k = a.trim().parse().map_err(|e| format!("{a:?}: {e}"))?;
    let l = b.trim().parse().map_err(|e| format!("{b:?}: {e}"))?;
    Ok((k, l))
}

fn parse_pattern(s: &str) -> Result<Vec<Color>, Error> {
    s.chars()
        .filter(|c| !c.is_whitespace() && *c != ',')
        .map(|c| Color::from_code(c.to_ascii_uppercase()).ok_or_else(|| Error::UnknownColor(c.to_string())))
        .collect()
}

fn threads(t: Option<usize>) -> usize {
    t.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get())).max(1)
}

fn load(path: &Path) -> Result<Coloring, Error> {
    read_coloring(&fs::read(path)?)
}

fn emit(bytes: &[u8], output: &Output) -> Result<(), Error> {
    match &output.out {
        Some(p) => fs::write(p, bytes)?,
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            out.write_all(bytes)?;
            out.write_all(b"\n")?;
        }
    }
    Ok(())
}

fn emit_json<T: serde::Serialize>(value: &T, output: &Output) -> Result<(), Error> {
    let s = serde_json::to_string_pretty(value).map_err(|e| Error::Internal(e.to_string()))?;
    emit(s.as_bytes(), output)
}

fn construct(kind: ConstructKind) -> Result<u8, Error> {
    let (construction, output) = match kind {
        ConstructKind::Example1 { a, output } => (Construction::Example1 { a }, output),
        ConstructKind::Lemma6 { k, l, output } => (Construction::Lemma6 { k, l }, output),
        ConstructKind::Stability { k, b, pattern, seed, output } => {
            let (b, pattern) = match (b, pattern) {
                (Some(b), Some(p)) => (b, parse_pattern(&p)?),
                (Some(b), None) => (b, random_pattern_seeded(k.saturating_sub(1) * b[2], seed)),
                (None, Some(_)) => return Err(Error::InvalidParams("--pattern needs --b".into())),
                (None, None) => random_stability(k, seed)?,
            };
            (Construction::Stability { k, b, pattern }, output)
        }
        ConstructKind::Deficient { n, d, seed, output } => {
            let c = deficient_coloring(n, d, seed)?;
            emit(&write_coloring(&c), &output)?;
            eprintln!("{0}x{0} coloring, at most {d} absent cells per vertex", c.n_left());
            return Ok(0);
        }
    };
    let th = construction.claimed_avoidance()?;
    let c = construction.build()?;
    emit(&write_coloring(&c), &output)?;
    eprintln!("{} {}x{}: avoids {th}", construction.name(), c.n_left(), c.n_right());
    Ok(0)
}

fn search(
    th: Option<Thresholds>,
    n_max: Option<usize>,
    compare: Option<(usize, usize)>,
    json: bool,
    witness_dir: Option<PathBuf>,
    cfg: SearchConfig,
) -> Result<u8, Error> {
    if let Some((gk, gl)) = compare {
        let grid: Vec<(usize, usize)> = (1..=gk).flat_map(|k| (1..=gl).map(move |l| (k, l))).collect();
        let rows = compare_with_theorem8(&grid, n_max.unwrap_or(MAX_SIDE), &cfg)?;
        if json {
            emit_json(&rows, &Output { out: None })?;
        } else {
            println!("{:>3} {:>3} {:>12} {:>8} {:>13} {:>12}", "k", "l", "searched", "formula", "flag", "nodes");
            for r in &rows {
                println!(
                    "{:>3} {:>3} {:>12} {:>8} {:>13} {:>12}",
                    r.k,
                    r.l,
                    r.searched.to_string(),
                    r.formula,
                    format!("{:?}", r.flag),
                    r.nodes_explored
                );
            }
        }
        return Ok(0);
    }
    let th = th.expect("clap requires thresholds");
    th.validate()?;
    let n_max = n_max.unwrap_or((th.k + th.l + th.m).min(MAX_SIDE));
    let start = Instant::now();
    let report = ramsey_value(th, n_max, &cfg)?;
    if let Some(dir) = &witness_dir {
        fs::create_dir_all(dir)?;
    }
    let mut outcomes = Vec::new();
    for o in &report.outcomes {
        let witness_file = match (&witness_dir, &o.witness) {
            (Some(dir), Some(w)) => {
                let p = dir.join(format!("witness_n{}.json", o.n));
                fs::write(&p, write_coloring(w))?;
                Some(p.display().to_string())
            }
            _ => None,
        };
        outcomes.push(OutcomeRow {
            n: o.n,
            status: o.status,
            nodes_explored: o.nodes_explored,
            elapsed_secs: o.elapsed.as_secs_f64(),
            witness_file,
        });
    }
    let out = SearchReport { thresholds: th, value: report.value, outcomes, total_secs: start.elapsed().as_secs_f64() };
    if json {
        emit_json(&out, &Output { out: None })?;
        eprintln!("r{} = {}", th, out.value);
    } else {
        for o in &out.outcomes {
            println!("n = {:>2}  {:<16} {:>12} nodes  {:.3}s", o.n, format!("{:?}", o.status), o.nodes_explored, o.elapsed_secs);
        }
        println!("r{} = {}", th, out.value);
    }
    Ok(0)
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.cmd {
        Cmd::Construct { kind } => construct(kind),
        Cmd::Verify { input, cm, path, cycle, color, budget, output } => {
            let c = load(&input)?;
            let need_color = || color.ok_or_else(|| Error::InvalidParams("--color is required with --path/--cycle".into()));
            let report = match (cm, path, cycle) {
                (Some(th), _, _) => verify_cm(&c, th)?,
                (_, Some(len), _) => verify_path(&c, need_color()?, len, &budget.budget())?,
                (_, _, Some(len)) => verify_cycle(&c, need_color()?, len, &budget.budget())?,
                _ => return Err(Error::InvalidParams("one of --cm, --path, --cycle is required".into())),
            };
            emit_json(&report, &output)?;
            eprintln!("{}", report.summary());
            Ok(u8::from(report.found()))
        }
        Cmd::Search { k, l, m, n_max, compare_theorem8, grid, json, witness_dir, threads: t, budget } => {
            let th = match (k, l, m) {
                (Some(k), Some(l), Some(m)) => Some(Thresholds::new(k, l, m)),
                _ => None,
            };
            let cfg = SearchConfig { budget: budget.budget(), threads: threads(t) };
            search(th, n_max, compare_theorem8.then_some(grid), json, witness_dir, cfg)
        }
        Cmd::Paths { input, color, ramsey, n_max, threads: t, budget, output } => {
            if let Some(len) = ramsey {
                let cfg = SearchConfig { budget: budget.budget(), threads: threads(t) };
                let report = two_colour_path_ramsey(len, n_max, &cfg)?;
                emit_json(&report.value, &output)?;
                eprintln!("searched {}, formula {}", report.value, two_colour_path_formula(len));
                return Ok(0);
            }
            let input = input.ok_or_else(|| Error::InvalidParams("an input coloring is required".into()))?;
            let color = color.expect("clap requires --color");
            let c = load(&input)?;
            let w = bramsey_core::paths::longest_monochromatic_path(&c, color, &budget.budget())?;
            emit_json(&w, &output)?;
            eprintln!("longest {color} path has {} vertices", w.vertices);
            Ok(0)
        }
        Cmd::Cycles { input, color, length, budget, output } => {
            let c = load(&input)?;
            let w = bramsey_core::paths::has_even_cycle(&c, color, length, &budget.budget())?;
            emit_json(&w, &output)?;
            eprintln!("{} {color} cycle on {length} vertices", if w.is_some() { "found a" } else { "no" });
            Ok(u8::from(w.is_some()))
        }
        Cmd::Reduce { input, n, eps_n, mode, threads: _, output } => {
            let c = load(&input)?;
            let cert = reduce_and_find(&c, n, eps_n, mode)?;
            emit_json(&cert, &output)?;
            let size = cert.final_matching.as_ref().map_or(0, |m| m.len());
            eprintln!("{:?}: |U| = {}, G2 sides {:?}, matching of size {size}", cert.status, cert.removed.len(), cert.g2_sides);
            for note in &cert.notes {
                eprintln!("note: {note}");
            }
            Ok(0)
        }
        Cmd::VerifyCertificate { input, certificate } => {
            let c = load(&input)?;
            let cert: ReductionCertificate = serde_json::from_slice(&fs::read(&certificate)?)
                .map_err(|e| Error::Malformed(format!("certificate: {e}")))?;
            let problems = verify_certificate(&c, &cert);
            for p in &problems {
                eprintln!("invalid: {p}");
            }
            if problems.is_empty() {
                eprintln!("certificate valid");
            }
            Ok(u8::from(!problems.is_empty()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
