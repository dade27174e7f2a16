//! Command-line front end. [`run`] takes the arguments and output streams so
//! the binary stays a one-liner and tests can drive it in-process.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::forest::{min_deficiency_forest, solve_forest};
use crate::generate::{gnp, random_forest, random_tree, vc_bounded};
use crate::graph::{k_core, Graph};
use crate::instance::{verify_certificate, Answer, Certificate, Instance, Verdict};
use crate::io::{parse_certificate, parse_decomposition, parse_graph, parse_sequences, write_certificate, write_graph};
use crate::oracle::{brute_force_solve, SearchBudget};
use crate::rng::SplitMix64;
use crate::sequences::{erdos_gallai, range_graphic, RangeSequence};
use crate::treewidth::{heuristic_decomposition, solve_treewidth_with, NiceDecomposition};
use crate::vc::{min_vertex_cover, solve_vc_with};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// Width and cover limits used by `--algo auto`.
const AUTO_MAX_WIDTH: usize = 8;
const AUTO_MAX_COVER: usize = 8;

#[derive(Parser, Debug)]
#[command(name = "corebuilder", version, about = "Add at most b edges so that the k-core has at least p vertices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Auto,
    Forest,
    Treewidth,
    Vc,
    Oracle,
}

impl Algo {
    fn name(self) -> &'static str {
        match self {
            Algo::Auto => "auto",
            Algo::Forest => "forest",
            Algo::Treewidth => "treewidth",
            Algo::Vc => "vc",
            Algo::Oracle => "oracle",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Model {
    Tree,
    Gnp,
    VcBounded,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide an instance and optionally write the certificate.
    Solve {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        p: usize,
        #[arg(long, value_enum, default_value = "auto")]
        algo: Algo,
        /// PACE tree decomposition for the treewidth solver.
        #[arg(long)]
        td: Option<PathBuf>,
        /// Largest vertex cover the vc solver accepts.
        #[arg(long, default_value_t = 8)]
        max_vc: usize,
        /// Certificate destination; `-` writes to standard output.
        #[arg(long)]
        out: Option<String>,
    },
    /// Recheck a certificate against an instance.
    Verify {
        graph: PathBuf,
        certificate: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        p: usize,
        /// Budget; defaults to the number of edges in the certificate.
        #[arg(long)]
        b: Option<usize>,
    },
    /// Test each line of a file for being a graphic sequence.
    Seqcheck {
        file: PathBuf,
        /// With `--a`, also run the range check for values in `[k-a, k]`.
        #[arg(long, requires = "a")]
        k: Option<usize>,
        #[arg(long, requires = "k")]
        a: Option<usize>,
    },
    /// Generate a random graph.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        model: Model,
        #[arg(long, default_value_t = 0.5)]
        q: f64,
        #[arg(long, default_value_t = 2)]
        c: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare every applicable solver with the oracle on random instances.
    Crosscheck {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        b: usize,
        /// Fixed target; drawn per trial when omitted.
        #[arg(long)]
        p: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Time the forest dynamic program on random trees.
    Bench {
        #[arg(long, default_value_t = 5)]
        k: usize,
        #[arg(long, value_delimiter = ',', default_values_t = [1000usize, 2000, 4000])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Parses `args` (including the program name), runs the subcommand and
/// returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Solve { graph, k, b, p, algo, td, max_vc, out: dest } => {
            solve_cmd(&graph, k, b, p, algo, td.as_deref(), max_vc, dest.as_deref(), out)
        }
        Command::Verify { graph, certificate, k, p, b } => verify_cmd(&graph, &certificate, k, p, b, out),
        Command::Seqcheck { file, k, a } => seqcheck_cmd(&file, k.zip(a), out),
        Command::Gen { n, model, q, c, seed, out: dest } => gen_cmd(n, model, q, c, seed, dest.as_deref(), out),
        Command::Crosscheck { n, k, b, p, seed, trials } => crosscheck_cmd(n, k, b, p, seed, trials, out),
        Command::Bench { k, sizes, reps, seed } => bench_cmd(k, &sizes, reps, seed, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Internal(_) => EXIT_FAILURE,
                _ => EXIT_INPUT,
            }
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))
}

fn write_to(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display())))
}

fn io_err(e: std::io::Error) -> Error {
    Error::InvalidInput(format!("cannot write output: {e}"))
}

/// The solver `--algo auto` would run, or why none applies.
pub fn pick_algo(g: &Graph, b: usize) -> Result<Algo> {
    if g.is_forest() {
        return Ok(Algo::Forest);
    }
    if heuristic_decomposition(g).width() <= AUTO_MAX_WIDTH {
        return Ok(Algo::Treewidth);
    }
    if min_vertex_cover(g).len() <= AUTO_MAX_COVER {
        return Ok(Algo::Vc);
    }
    let cap = SearchBudget::default();
    if g.n() <= cap.max_vertices || b <= cap.max_budget {
        return Ok(Algo::Oracle);
    }
    Err(Error::Unsupported("no solver applies: width, cover and size all exceed their limits".into()))
}

/// Runs one named solver. `td` is only used by the treewidth solver.
pub fn run_solver(inst: &Instance, algo: Algo, td: Option<&NiceDecomposition>, max_vc: usize) -> Result<(Algo, Answer)> {
    let algo = if algo == Algo::Auto { pick_algo(&inst.graph, inst.b)? } else { algo };
    let answer = match algo {
        Algo::Forest => solve_forest(inst)?,
        Algo::Treewidth => match td {
            Some(dec) => solve_treewidth_with(inst, dec)?,
            None => solve_treewidth_with(inst, &heuristic_decomposition(&inst.graph))?,
        },
        Algo::Vc => {
            let cover = min_vertex_cover(&inst.graph);
            if cover.len() > max_vc {
                return Err(Error::Unsupported(format!("vertex cover {} exceeds --max-vc {max_vc}", cover.len())));
            }
            solve_vc_with(inst, &cover)?
        }
        Algo::Oracle => brute_force_solve(inst, SearchBudget::default())?,
        Algo::Auto => unreachable!("resolved above"),
    };
    Ok((algo, answer))
}

#[allow(clippy::too_many_arguments)]
fn solve_cmd(
    path: &Path,
    k: usize,
    b: usize,
    p: usize,
    algo: Algo,
    td: Option<&Path>,
    max_vc: usize,
    dest: Option<&str>,
    out: &mut dyn Write,
) -> Result<i32> {
    let g = parse_graph(&read(path)?)?;
    let dec = match td {
        Some(td) => Some(NiceDecomposition::from_raw(&g, &parse_decomposition(&read(td)?)?)?),
        None => None,
    };
    let inst = Instance::new(g, k, b, p);
    let (used, answer) = run_solver(&inst, algo, dec.as_ref(), max_vc)?;
    let core = match &answer.certificate {
        Some(cert) => match verify_certificate(&inst, cert) {
            Verdict::Accepted { core_size } => core_size,
            Verdict::Rejected(why) => return Err(Error::Internal(format!("certificate failed verification: {why}"))),
        },
        None => k_core(&inst.graph, k).len(),
    };
    let text = write_certificate(answer.certificate.as_ref().map(|c| c.added_edges.as_slice()));
    match dest {
        Some("-") => out.write_all(text.as_bytes()).map_err(io_err)?,
        Some(file) => write_to(Path::new(file), &text)?,
        None => {}
    }
    let verdict = if answer.feasible { "yes" } else { "no" };
    writeln!(out, "RESULT {verdict} algo={} added={} core={core}", used.name(), answer.added()).map_err(io_err)?;
    Ok(EXIT_OK)
}

fn verify_cmd(graph: &Path, cert: &Path, k: usize, p: usize, b: Option<usize>, out: &mut dyn Write) -> Result<i32> {
    let g = parse_graph(&read(graph)?)?;
    let Some(edges) = parse_certificate(&read(cert)?, g.n())? else {
        writeln!(out, "NO certificate; nothing to check").map_err(io_err)?;
        return Ok(EXIT_OK);
    };
    let b = b.unwrap_or(edges.len());
    let inst = Instance::new(g, k, b, p);
    let cert = Certificate::from_additions(&inst.graph, k, edges);
    match verify_certificate(&inst, &cert) {
        Verdict::Accepted { core_size } => {
            writeln!(out, "VALID core={core_size}").map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Verdict::Rejected(why) => {
            writeln!(out, "INVALID {why}").map_err(io_err)?;
            Ok(EXIT_FAILURE)
        }
    }
}

fn seqcheck_cmd(file: &Path, range: Option<(usize, usize)>, out: &mut dyn Write) -> Result<i32> {
    let mut code = EXIT_OK;
    for mut seq in parse_sequences(&read(file)?)? {
        seq.sort_unstable_by(|a, b| b.cmp(a));
        let graphic = erdos_gallai(&seq)?;
        let shown: Vec<String> = seq.iter().map(usize::to_string).collect();
        let mut line = format!("{}: {}", shown.join(" "), if graphic { "graphic" } else { "not graphic" });
        if let Some((k, a)) = range {
            let fits = a <= k && seq.len() > k && seq.iter().all(|&d| d + a >= k && d <= k);
            if fits {
                let by_range = range_graphic(&RangeSequence::from_degrees(k, a, &seq)?)?;
                if by_range != graphic {
                    line.push_str(" (range check disagrees)");
                    code = EXIT_FAILURE;
                }
            } else {
                line.push_str(" (outside the range check)");
            }
        }
        writeln!(out, "{line}").map_err(io_err)?;
    }
    Ok(code)
}

fn generate(n: usize, model: Model, q: f64, c: usize, rng: &mut SplitMix64) -> Result<Graph> {
    match model {
        Model::Tree => random_tree(n, rng),
        Model::Gnp => gnp(n, q, rng),
        Model::VcBounded => vc_bounded(n, c, q, rng),
    }
}

fn gen_cmd(n: usize, model: Model, q: f64, c: usize, seed: u64, dest: Option<&Path>, out: &mut dyn Write) -> Result<i32> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    let g = generate(n, model, q, c, &mut SplitMix64::new(seed))?;
    let text = write_graph(&g);
    match dest {
        Some(path) => write_to(path, &text)?,
        None => out.write_all(text.as_bytes()).map_err(io_err)?,
    }
    Ok(EXIT_OK)
}

/// Thread pool honouring `COREBUILDER_THREADS`.
pub fn thread_pool() -> Result<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("COREBUILDER_THREADS") {
        let threads: usize = v
            .parse()
            .ok()
            .filter(|&t| t > 0)
            .ok_or_else(|| Error::InvalidInput(format!("COREBUILDER_THREADS must be a positive integer, got `{v}`")))?;
        builder = builder.num_threads(threads);
    }
    builder.build().map_err(|e| Error::Internal(format!("cannot start thread pool: {e}")))
}

/// One random crosscheck instance. Trial `i` draws from its own generator
/// seeded with the `i`-th output of `SplitMix64::new(seed)`.
pub fn crosscheck_instance(n: usize, k: usize, b: usize, p: Option<usize>, seed: u64, trial: usize) -> Result<Instance> {
    let mut seeds = SplitMix64::new(seed);
    let mut trial_seed = 0;
    for _ in 0..=trial {
        trial_seed = seeds.next_u64();
    }
    let mut rng = SplitMix64::new(trial_seed);
    let g = match trial % 3 {
        0 => random_forest(n, rng.unit(), &mut rng)?,
        1 => gnp(n, rng.unit(), &mut rng)?,
        _ => vc_bounded(n, rng.range(0, n.min(4)), rng.unit(), &mut rng)?,
    };
    let p = p.unwrap_or_else(|| rng.range(0, n));
    Ok(Instance::new(g, k, b, p))
}

/// Solvers that apply to `inst`, with their answers. Solvers that decline
/// the instance are left out.
pub fn applicable_answers(inst: &Instance) -> Result<Vec<(Algo, Answer)>> {
    let mut answers = Vec::new();
    for algo in [Algo::Forest, Algo::Treewidth, Algo::Vc] {
        if algo == Algo::Forest && !inst.graph.is_forest() {
            continue;
        }
        match run_solver(inst, algo, None, AUTO_MAX_COVER) {
            Ok(pair) => answers.push(pair),
            Err(Error::Unsupported(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(answers)
}

fn check_trial(inst: &Instance) -> Result<Option<String>> {
    let truth = brute_force_solve(inst, SearchBudget { max_vertices: 12, max_budget: 3, time_limit: None })?;
    for (algo, ans) in std::iter::once((Algo::Oracle, truth.clone())).chain(applicable_answers(inst)?) {
        if ans.feasible != truth.feasible {
            return Ok(Some(format!("{} says {} but the oracle says {}", algo.name(), ans.feasible, truth.feasible)));
        }
        if let Some(cert) = &ans.certificate {
            if let Verdict::Rejected(why) = verify_certificate(inst, cert) {
                return Ok(Some(format!("{} certificate rejected: {why}", algo.name())));
            }
        }
    }
    Ok(None)
}

fn crosscheck_cmd(
    n: usize,
    k: usize,
    b: usize,
    p: Option<usize>,
    seed: u64,
    trials: usize,
    out: &mut dyn Write,
) -> Result<i32> {
    if n == 0 || n > 12 {
        return Err(Error::InvalidInput(format!("crosscheck needs 1 <= n <= 12, got {n}")));
    }
    let pool = thread_pool()?;
    let results: Vec<Result<Option<String>>> = pool.install(|| {
        (0..trials).into_par_iter().map(|t| crosscheck_instance(n, k, b, p, seed, t).and_then(|i| check_trial(&i))).collect()
    });
    let mut agree = 0;
    let mut first = None;
    for (t, r) in results.into_iter().enumerate() {
        match r? {
            None => agree += 1,
            Some(msg) => {
                first.get_or_insert((t, msg));
            }
        }
    }
    match first {
        None => {
            writeln!(out, "OK {agree}/{trials} agree").map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Some((t, msg)) => {
            writeln!(out, "DISAGREE trial={t} seed={seed}: {msg}").map_err(io_err)?;
            writeln!(out, "FAIL {agree}/{trials} agree").map_err(io_err)?;
            Ok(EXIT_FAILURE)
        }
    }
}

/// Median wall time in seconds of the forest dynamic program on a random
/// tree with `n` vertices, over `reps` runs.
pub fn time_forest_dp(n: usize, k: usize, reps: usize, seed: u64) -> Result<f64> {
    let tree = random_tree(n, &mut SplitMix64::new(seed))?;
    let mut times = Vec::with_capacity(reps.max(1));
    for _ in 0..reps.max(1) {
        let start = Instant::now();
        std::hint::black_box(min_deficiency_forest(&tree, k, n)?);
        times.push(start.elapsed().as_secs_f64());
    }
    times.sort_by(f64::total_cmp);
    Ok(times[times.len() / 2])
}

fn bench_cmd(k: usize, sizes: &[usize], reps: usize, seed: u64, out: &mut dyn Write) -> Result<i32> {
    writeln!(out, "{:>8} {:>12} {:>8}", "n", "seconds", "ratio").map_err(io_err)?;
    let mut prev: Option<f64> = None;
    for &n in sizes {
        let t = time_forest_dp(n, k, reps, seed)?;
        let ratio = prev.map_or("-".to_string(), |p| format!("{:.2}", t / p.max(1e-9)));
        writeln!(out, "{n:>8} {t:>12.4} {ratio:>8}").map_err(io_err)?;
        prev = Some(t);
    }
    Ok(EXIT_OK)
}
