//! `ramsey-books` command-line tool.
//!
//! Exit codes: 0 success or witness, 1 usage or schema error, 2 no witness or
//! not-arrows (or a failed acceptance row), 3 budget exhausted, 4 invariant
//! violation.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ramsey_books::arrowing::{
    arrows, decode_model, export_cnf, parse_model, ramsey_number, Answer, ArrowInstance, RamseyValue,
};
use ramsey_books::bounds::{evaluate, BoundParams, TheoremId};
use ramsey_books::coloring::{burr_coloring, burr_with_apex, perturb, random_coloring, verify_avoids};
use ramsey_books::error::DEFAULT_BUDGET;
use ramsey_books::extract::{sparse_or_books, sparse_parameters, star_or_books, verify_witness, ExtractionOutcome};
use ramsey_books::formats::{write_edge_list, write_graph6};
use ramsey_books::generate::{random_sparse_connected, random_tree, rng};
use ramsey_books::structure::{
    degree1_bound_check, longest_suspended_path, max_end_edge_matching, trichotomy, TrichotomyParams,
};
use ramsey_books::suite::{run_criterion, Tier, CRITERIA};
use ramsey_books::{Budget, EdgeColoring, Error, Graph, PatternSpec};

const BUDGET_ENV: &str = "RAMSEY_BOOKS_BUDGET";

#[derive(Parser)]
#[command(name = "ramsey-books", version, about = "Ramsey numbers of sparse graphs versus disjoint books")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Seed for every random choice; echoed in the output.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Node budget for searches [default: $RAMSEY_BOOKS_BUDGET or 10000000].
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the primary artifact here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    /// Line-oriented `key=value`.
    Kv,
}

#[derive(Subcommand)]
enum Command {
    /// Extremal colouring with red cliques of sizes n-1, n-1, t-1.
    GenBurr {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        t: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Add one vertex joined in red to everything.
        #[arg(long)]
        apex: bool,
        #[arg(long)]
        json: bool,
    },
    /// A pattern graph, a random tree or a random sparse connected graph.
    GenGraph {
        /// Pattern such as `book:2,3` or `copies:2,(book:2,1)`.
        #[arg(long, conflicts_with_all = ["tree", "sparse"])]
        pattern: Option<String>,
        /// Random labelled tree on this many vertices.
        #[arg(long, conflicts_with = "sparse")]
        tree: Option<usize>,
        /// Random connected graph on this many vertices with `--excess` edges beyond n.
        #[arg(long)]
        sparse: Option<usize>,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        excess: i64,
        /// Edge list instead of graph6.
        #[arg(long)]
        edges: bool,
    },
    /// Random colouring, or a perturbation of a colouring file.
    GenColoring {
        #[arg(long, required_unless_present = "perturb")]
        n: Option<usize>,
        #[arg(long, default_value_t = 0.5)]
        red_probability: f64,
        /// Colouring file to perturb.
        #[arg(long)]
        perturb: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        flips: usize,
        #[arg(long)]
        json: bool,
    },
    /// Trichotomy, suspended paths, end-edges and the degree-1 count of a graph.
    Analyze {
        #[arg(long)]
        graph: String,
        /// Suspended-path threshold; defaults to the extraction value for (k, t).
        #[arg(long)]
        q: Option<usize>,
        /// End-edge threshold; defaults to the extraction value for (k, t).
        #[arg(long)]
        s: Option<usize>,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        t: usize,
    },
    /// Evaluates a closed-form bound (`all` for every one).
    Bounds {
        #[arg(long, default_value = "all")]
        theorem: String,
        /// Parameters as `key=value` (n, m, k, t, chi, s, c, r_gh, h_order, eps).
        params: Vec<String>,
    },
    /// Finds a red copy or blue disjoint books in a colouring.
    Extract {
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Order of the red graph (star mode); taken from --graph in sparse mode.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        graph: Option<String>,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        t: usize,
    },
    /// Decides whether every colouring of K_N has a red `red` or a blue `blue`.
    Arrow {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        no_symmetry: bool,
    },
    /// Smallest N that arrows the pair.
    Ramsey {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// DIMACS CNF satisfiable iff K_N does not arrow the pair.
    ExportCnf {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        no_symmetry: bool,
    },
    /// Turns a solver model into a colouring file.
    DecodeModel {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        model: PathBuf,
        /// Check the decoded colouring avoids this red pattern (needs --blue).
        #[arg(long, requires = "blue")]
        red: Option<String>,
        #[arg(long, requires = "red")]
        blue: Option<String>,
    },
    /// Runs the acceptance table.
    VerifySuite {
        #[arg(long, value_enum, default_value_t = TierArg::Fast)]
        tier: TierArg,
        /// Run a single criterion.
        #[arg(long)]
        only: Option<u8>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
}

#[derive(Args)]
struct Pair {
    #[arg(long)]
    red: String,
    #[arg(long)]
    blue: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Star,
    Sparse,
}

#[derive(Clone, Copy, ValueEnum)]
enum TierArg {
    Fast,
    Full,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

/// What a command produced: report text for stdout, an optional artifact for
/// `--output`, and the exit code.
struct Outcome {
    report: String,
    artifact: Option<String>,
    code: u8,
}

impl Outcome {
    fn ok(report: String) -> Self {
        Outcome { report, artifact: None, code: 0 }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            if let Err(e) = emit(&cli.common, &out) {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            ExitCode::from(out.code)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::BudgetExceeded { .. } => 3,
                _ => 1,
            })
        }
    }
}

/// The artifact goes to `--output` when given, else to stdout after the report.
fn emit(common: &Common, out: &Outcome) -> std::io::Result<()> {
    print!("{}", out.report);
    if let Some(artifact) = &out.artifact {
        match &common.output {
            Some(path) => {
                std::fs::write(path, artifact)?;
                println!("output={}", path.display());
            }
            None => print!("{artifact}"),
        }
    }
    Ok(())
}

fn budget(common: &Common) -> CliResult<u64> {
    if let Some(b) = common.budget {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{BUDGET_ENV} must be a non-negative integer, got `{v}`"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn pattern(text: &str) -> CliResult<Graph> {
    Ok(PatternSpec::parse(text)?.build()?)
}

fn read_coloring(path: &PathBuf) -> CliResult<EdgeColoring> {
    Ok(EdgeColoring::read_any(&std::fs::read_to_string(path)?)?)
}

fn coloring_artifact(c: &EdgeColoring, json: bool) -> String {
    if json {
        let mut s = c.to_json();
        if !s.ends_with('\n') {
            s.push('\n');
        }
        s
    } else {
        c.to_text()
    }
}

/// Artifact commands write a pure file format; the seed echo goes to stderr
/// when that file is streamed to stdout.
fn artifact(common: &Common, randomized: bool, body: String) -> Outcome {
    let mut report = String::new();
    if randomized {
        if common.output.is_some() {
            report = format!("seed={}\n", common.seed);
        } else {
            eprintln!("seed={}", common.seed);
        }
    }
    Outcome {
        report,
        artifact: Some(body),
        code: 0,
    }
}

fn run(cli: &Cli) -> CliResult<Outcome> {
    let common = &cli.common;
    let seed_line = format!("seed={}\n", common.seed);
    match &cli.command {
        Command::GenBurr { n, t, k, apex, json } => {
            let c = if *apex { burr_with_apex(*n, *t, *k)? } else { burr_coloring(*n, *t, *k)?.0 };
            Ok(artifact(common, false, coloring_artifact(&c, *json)))
        }
        Command::GenGraph {
            pattern: spec,
            tree,
            sparse,
            excess,
            edges,
        } => {
            let (g, randomized) = match (spec, tree, sparse) {
                (Some(s), None, None) => (pattern(s)?, false),
                (None, Some(n), None) => (random_tree(*n, &mut rng(common.seed)), true),
                (None, None, Some(n)) => (random_sparse_connected(*n, *excess, common.seed)?, true),
                _ => return Err(Failure::Usage("give exactly one of --pattern, --tree, --sparse".into())),
            };
            let body = if *edges { write_edge_list(&g) } else { format!("{}\n", write_graph6(&g)) };
            Ok(artifact(common, randomized, body))
        }
        Command::GenColoring {
            n,
            red_probability,
            perturb: base,
            flips,
            json,
        } => {
            let c = match base {
                Some(path) => perturb(&read_coloring(path)?, *flips, common.seed)?,
                None => random_coloring(n.expect("required by clap"), *red_probability, common.seed)?,
            };
            Ok(artifact(common, true, coloring_artifact(&c, *json)))
        }
        Command::Analyze { graph, q, s, k, t } => analyze(common, &pattern(graph)?, *q, *s, *k, *t),
        Command::Bounds { theorem, params } => {
            let params = BoundParams::parse_pairs(params.iter().map(String::as_str))?;
            let ids: Vec<TheoremId> = if theorem == "all" {
                TheoremId::ALL.to_vec()
            } else {
                vec![theorem.parse()?]
            };
            let mut out = seed_line;
            for id in ids {
                match evaluate(id, &params) {
                    Ok(report) => match common.format {
                        Format::Kv => out.push_str(&report.to_key_values()),
                        Format::Text => {
                            out.push_str(&report.to_text());
                            out.push('\n');
                        }
                    },
                    Err(Error::MissingParameter(p)) if theorem == "all" => {
                        let _ = writeln!(out, "bound.theorem={id}\nbound.skipped=missing {p}");
                        if common.format == Format::Text {
                            out.push('\n');
                        }
                    }
                    Err(e) => return Err(e.into()),
                }
            }
            Ok(Outcome::ok(out))
        }
        Command::Extract {
            coloring,
            mode,
            n,
            graph,
            k,
            t,
        } => {
            let c = read_coloring(coloring)?;
            let mut b = Budget::new(budget(common)?);
            let outcome = match mode {
                Mode::Star => {
                    let n = n.ok_or_else(|| Failure::Usage("star mode needs --n".into()))?;
                    star_or_books(&c, n, *k, *t, &mut b)?
                }
                Mode::Sparse => {
                    let g = pattern(graph.as_deref().ok_or_else(|| Failure::Usage("sparse mode needs --graph".into()))?)?;
                    sparse_or_books(&c, &g, *k, *t, &mut b)?
                }
            };
            let mut out = seed_line;
            let _ = writeln!(out, "order={}", c.order());
            out.push_str(&outcome.to_text());
            let code = match &outcome {
                ExtractionOutcome::Witness { witness, .. } => {
                    let ok = verify_witness(&c, witness);
                    let _ = writeln!(out, "verified={ok}");
                    if ok {
                        0
                    } else {
                        4
                    }
                }
                ExtractionOutcome::NoWitness { .. } => 2,
                ExtractionOutcome::InvariantViolation { .. } => {
                    eprintln!("INVARIANT VIOLATION: a guaranteed step failed with every hypothesis satisfied");
                    4
                }
            };
            Ok(Outcome {
                report: out,
                artifact: None,
                code,
            })
        }
        Command::Arrow {
            pair,
            n,
            workers,
            no_symmetry,
        } => {
            let mut inst = ArrowInstance::new(*n, pattern(&pair.red)?, pattern(&pair.blue)?);
            inst.budget = budget(common)?;
            inst.workers = *workers;
            inst.symmetry = !no_symmetry;
            let res = arrows(&inst)?;
            let mut out = seed_line;
            let _ = writeln!(out, "n={n}\nred={}\nblue={}", pair.red, pair.blue);
            let _ = writeln!(out, "answer={}", res.answer.as_str());
            let _ = writeln!(
                out,
                "nodes={}\nprunes={}\nred_copies={}\nblue_copies={}",
                res.stats.nodes, res.stats.prunes, res.stats.red_copies, res.stats.blue_copies
            );
            let code = match res.answer {
                Answer::Arrows => 0,
                Answer::NotArrows => 2,
                Answer::UndecidedBudget => 3,
            };
            Ok(Outcome {
                report: out,
                artifact: res.coloring.map(|c| c.to_text()),
                code,
            })
        }
        Command::Ramsey { pair, max_n, workers } => {
            let value = ramsey_number(&pattern(&pair.red)?, &pattern(&pair.blue)?, *max_n, budget(common)?, *workers)?;
            let mut out = seed_line;
            let (code, extremal) = match value {
                RamseyValue::Exact { value, extremal } => {
                    match common.format {
                        Format::Text => {
                            let _ = writeln!(out, "{value}");
                        }
                        Format::Kv => {
                            let _ = writeln!(out, "red={}\nblue={}\nvalue={value}", pair.red, pair.blue);
                        }
                    }
                    (0, extremal)
                }
                RamseyValue::LowerBound { at_least, witness } => {
                    let _ = writeln!(out, "red={}\nblue={}\nvalue_at_least={at_least}", pair.red, pair.blue);
                    (2, witness)
                }
            };
            Ok(Outcome {
                report: out,
                artifact: if common.output.is_some() { extremal.map(|c| c.to_text()) } else { None },
                code,
            })
        }
        Command::ExportCnf { pair, n, no_symmetry } => {
            let mut inst = ArrowInstance::new(*n, pattern(&pair.red)?, pattern(&pair.blue)?);
            inst.budget = budget(common)?;
            inst.symmetry = !no_symmetry;
            Ok(artifact(common, false, export_cnf(&inst)?.to_dimacs()))
        }
        Command::DecodeModel { n, model, red, blue } => {
            let literals = parse_model(&std::fs::read_to_string(model)?)?;
            let c = decode_model(*n, &literals)?;
            let mut out = Outcome {
                report: String::new(),
                artifact: Some(c.to_text()),
                code: 0,
            };
            if let (Some(r), Some(b)) = (red, blue) {
                let check = verify_avoids(&c, &pattern(r)?, &pattern(b)?, &mut Budget::new(budget(common)?))?;
                let avoids = check.is_extremal();
                out.report = format!("avoids={avoids}\n");
                if !avoids {
                    out.code = 4;
                }
            }
            Ok(out)
        }
        Command::VerifySuite { tier, only, workers } => {
            let tier = match tier {
                TierArg::Fast => Tier::Fast,
                TierArg::Full => Tier::Full,
            };
            if let Some(id) = only {
                if !CRITERIA.iter().any(|c| c.0 == *id) {
                    return Err(Failure::Usage(format!("no criterion {id}")));
                }
            }
            print!("{seed_line}");
            let mut out = String::new();
            let mut failed = 0;
            for &(id, ..) in CRITERIA.iter().filter(|c| only.is_none_or(|o| o == c.0)) {
                let report = run_criterion(id, tier, *workers);
                let line = match common.format {
                    Format::Text => report.line(),
                    Format::Kv => format!(
                        "criterion.{id}.name={}\ncriterion.{id}.pass={}\ncriterion.{id}.seconds={:.3}\ncriterion.{id}.limit={}\ncriterion.{id}.detail={}",
                        report.name, report.pass, report.seconds, report.limit_seconds, report.detail
                    ),
                };
                println!("{line}");
                if !report.pass {
                    failed += 1;
                }
            }
            let _ = writeln!(out, "failed={failed}");
            Ok(Outcome {
                report: out,
                artifact: None,
                code: if failed == 0 { 0 } else { 2 },
            })
        }
    }
}

fn analyze(common: &Common, g: &Graph, q: Option<usize>, s: Option<usize>, k: usize, t: usize) -> CliResult<Outcome> {
    let defaults = sparse_parameters(k, t)?;
    let params = TrichotomyParams::new(q.unwrap_or(defaults.q), s.unwrap_or(defaults.s))?;
    let list = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
    let mut out = format!("seed={}\n", common.seed);
    let _ = writeln!(out, "graph.order={}\ngraph.size={}\ngraph.excess={}", g.order(), g.size(), g.excess());
    let _ = writeln!(out, "graph.connected={}", g.is_connected());
    let _ = writeln!(out, "graph.g6={}", write_graph6(g));
    let path = longest_suspended_path(g);
    let _ = writeln!(out, "suspended.longest.order={}\nsuspended.longest.path={}", path.len(), list(&path));
    let ends = max_end_edge_matching(g);
    let pairs: Vec<String> = ends.iter().map(|(l, s)| format!("{l}-{s}")).collect();
    let _ = writeln!(out, "end_edges.count={}\nend_edges.matching={}", ends.len(), pairs.join(","));
    match degree1_bound_check(g, params.q) {
        Ok(d) => {
            let _ = writeln!(
                out,
                "degree1.q={}\ndegree1.leaves={}\ndegree1.bound={}\ndegree1.pass={}",
                params.q, d.leaves, d.bound, d.pass
            );
        }
        Err(e) => {
            let _ = writeln!(out, "degree1.q={}\ndegree1.skipped={e}", params.q);
        }
    }
    if g.is_connected() && g.order() > 0 {
        out.push_str(&trichotomy(g, params)?.to_key_values());
    } else {
        let _ = writeln!(out, "trichotomy.skipped=graph is not connected");
    }
    Ok(Outcome::ok(out))
}
