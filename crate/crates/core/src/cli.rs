//! Command-line front end. [`run`] executes one parsed [`RunConfig`] and
//! returns the process exit code; results go to `out`, diagnostics to `err`.

use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::generators::{generate, GenKind, GenSpec};
use crate::graph::Multigraph;
use crate::io;
use crate::oracle::{self, OracleError};
use crate::solver::{solve_instrumented, SolveError, SolveOutcome};
use crate::two_factor::{factor_guaranteed, two_factor, TwoFactorError};
use crate::verify::{is_two_factor, is_weak_two_factor, is_weakly_even_tree};
use crate::weak_two_factor::{weak_two_factor, WeakFactorError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_NO_SOLUTION: i32 = 2;
pub const EXIT_INVALID_INPUT: i32 = 3;
pub const EXIT_CONTRACT: i32 = 4;

#[derive(Debug, Clone, Parser)]
#[command(
    name = "evenspan",
    version,
    about = "Spanning weakly even trees in multigraphs"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Log to standard error; repeat for more detail.
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    pub verbose: u8,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Build a spanning weakly even (w, lambda)-tree, or certify that none exists.
    Solve {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        anchor: AnchorArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// 2-factor of a regular multigraph.
    TwoFactor {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Weak 2-factor of a 2-edge-connected multigraph.
    WeakTwoFactor {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check a tree JSON file against a graph.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// Tree JSON file.
        #[arg(long)]
        tree: PathBuf,
    },
    /// Brute-force existence check by spanning-tree enumeration.
    Oracle {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        anchor: AnchorArgs,
        /// Refuse graphs with more spanning trees than this.
        #[arg(long, default_value_t = oracle::DEFAULT_CAP)]
        cap: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Emit a graph (generated, or converted from --input).
    Gen {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Time solve and verify over a generator sweep.
    Bench {
        #[arg(long, default_value = "random_two_edge_connected")]
        gen: GenKind,
        /// Vertex counts to sweep.
        #[arg(long, value_delimiter = ',', default_value = "100,1000,10000")]
        sizes: Vec<usize>,
        /// Edge count per instance; defaults to 3n for the random kinds.
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        multiplicity: Option<usize>,
        #[arg(long)]
        blocks: Option<usize>,
        /// Instances per size; instance i uses seed + i.
        #[arg(long, default_value_t = 3)]
        reps: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads; 0 uses all cores.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = BenchFormat::Table)]
        format: BenchFormat,
    },
}

/// Exactly one of `--input` and `--gen`.
#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    /// Graph file (edge list or graph JSON); `-` reads standard input.
    #[arg(long, conflicts_with = "gen", required_unless_present = "gen")]
    pub input: Option<PathBuf>,
    /// Generate the graph instead of reading it.
    #[arg(long)]
    pub gen: Option<GenKind>,
    #[arg(long, requires = "gen")]
    pub n: Option<usize>,
    #[arg(long, requires = "gen")]
    pub m: Option<usize>,
    #[arg(long, requires = "gen")]
    pub r: Option<usize>,
    #[arg(long, requires = "gen")]
    pub multiplicity: Option<usize>,
    #[arg(long, requires = "gen")]
    pub blocks: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct AnchorArgs {
    /// Anchor vertex.
    #[arg(long)]
    pub w: usize,
    /// Type required at the anchor.
    #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
    pub lambda: u8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Edgelist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BenchFormat {
    Table,
    Json,
}

/// A failed command: exit code plus message for standard error.
struct Failure(i32, String);

impl Failure {
    fn invalid(msg: impl ToString) -> Self {
        Failure(EXIT_INVALID_INPUT, msg.to_string())
    }

    fn contract(msg: impl ToString) -> Self {
        Failure(EXIT_CONTRACT, msg.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::invalid(e)
    }
}

impl From<io::IoError> for Failure {
    fn from(e: io::IoError) -> Self {
        Failure::invalid(e)
    }
}

pub fn run(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(config, out) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn dispatch(config: &RunConfig, out: &mut dyn Write) -> Result<i32, Failure> {
    match &config.command {
        Command::Solve {
            input,
            anchor,
            format,
        } => cmd_solve(&load(input)?, *anchor, *format, out),
        Command::TwoFactor { input, format } => cmd_two_factor(&load(input)?, *format, out),
        Command::WeakTwoFactor { input, format } => {
            cmd_weak_two_factor(&load(input)?, *format, out)
        }
        Command::Verify { input, tree } => cmd_verify(&load(input)?, tree, out),
        Command::Oracle {
            input,
            anchor,
            cap,
            format,
        } => cmd_oracle(&load(input)?, *anchor, *cap, *format, out),
        Command::Gen { input, format } => {
            let g = load(input)?;
            let text = match format {
                Format::Json => io::graph_to_json(&g) + "\n",
                Format::Dot => io::graph_to_dot(&g),
                Format::Edgelist => io::write_edge_list(&g),
            };
            out.write_all(text.as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Bench {
            gen,
            sizes,
            m,
            r,
            multiplicity,
            blocks,
            reps,
            seed,
            jobs,
            format,
        } => {
            let base = BenchBase {
                kind: *gen,
                m: *m,
                r: *r,
                multiplicity: *multiplicity,
                blocks: *blocks,
            };
            cmd_bench(&base, sizes, *reps, *seed, *jobs, *format, out)
        }
    }
}

fn read_source(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))
    }
}

fn load(input: &InputArgs) -> Result<Multigraph, Failure> {
    let g = match (&input.input, input.gen) {
        (Some(path), _) => io::parse_graph(&read_source(path)?)?,
        (None, Some(kind)) => {
            let n = input
                .n
                .ok_or_else(|| Failure::invalid("--gen requires --n"))?;
            let spec = GenSpec {
                kind,
                n,
                m: input.m,
                r: input.r,
                multiplicity: input.multiplicity,
                blocks: input.blocks,
                seed: input.seed,
            };
            generate(&spec).map_err(Failure::invalid)?
        }
        (None, None) => return Err(Failure::invalid("one of --input or --gen is required")),
    };
    log::info!(
        "graph: {} vertices, {} edges",
        g.vertex_count(),
        g.edge_count()
    );
    Ok(g)
}

fn cmd_solve(
    g: &Multigraph,
    anchor: AnchorArgs,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let (outcome, stats) = solve_instrumented(g, anchor.w, anchor.lambda).map_err(|e| match e {
        SolveError::Graph(_)
        | SolveError::InvalidLambda(_)
        | SolveError::NotTwoEdgeConnected(_) => Failure::invalid(e),
        _ => Failure::contract(e),
    })?;
    for s in &stats {
        log::debug!(
            "block stats: {}",
            serde_json::to_string(s).expect("serializable")
        );
    }
    match outcome {
        SolveOutcome::Tree(t) => {
            let text = match format {
                Format::Json => io::tree_to_json(g, &t).map_err(Failure::contract)? + "\n",
                Format::Dot => io::tree_to_dot(g, &t),
                Format::Edgelist => io::edges_to_edge_list(g, &t.edges),
            };
            out.write_all(text.as_bytes())?;
            Ok(EXIT_OK)
        }
        SolveOutcome::NoSolution { r, coloring } => {
            writeln!(out, "{}", io::no_solution_to_json(r, &coloring))?;
            Ok(EXIT_NO_SOLUTION)
        }
    }
}

#[derive(Serialize)]
struct NoTwoFactorJson {
    status: &'static str,
    matched: usize,
    gadget_nodes: usize,
}

fn cmd_two_factor(g: &Multigraph, format: Format, out: &mut dyn Write) -> Result<i32, Failure> {
    let f = match two_factor(g) {
        Ok(f) => f,
        Err(TwoFactorError::NoTwoFactor { deficiency }) => {
            if factor_guaranteed(g) {
                return Err(Failure::contract(
                    "no 2-factor found in a graph that must have one",
                ));
            }
            let cert = NoTwoFactorJson {
                status: "no_two_factor",
                matched: 2 * deficiency.size(),
                gadget_nodes: deficiency.mates().len(),
            };
            writeln!(
                out,
                "{}",
                serde_json::to_string(&cert).expect("serializable")
            )?;
            return Ok(EXIT_NO_SOLUTION);
        }
        Err(e) => return Err(Failure::invalid(e)),
    };
    let report = is_two_factor(g, &f);
    if !report.passed {
        return Err(Failure::contract(format!(
            "2-factor failed verification: {:?}",
            report.first_violation
        )));
    }
    let edges = f.edges();
    let text = match format {
        Format::Json => io::two_factor_to_json(&f) + "\n",
        Format::Dot => io::factor_to_dot(g, &edges),
        Format::Edgelist => io::edges_to_edge_list(g, &edges),
    };
    out.write_all(text.as_bytes())?;
    Ok(EXIT_OK)
}

fn cmd_weak_two_factor(
    g: &Multigraph,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let f = weak_two_factor(g).map_err(|e| match e {
        WeakFactorError::Factor(_) => Failure::contract(e),
        _ => Failure::invalid(e),
    })?;
    let report = is_weak_two_factor(g, &f);
    if !report.passed {
        return Err(Failure::contract(format!(
            "weak 2-factor failed verification: {:?}",
            report.first_violation
        )));
    }
    let edges = f.edges();
    let text = match format {
        Format::Json => io::weak_two_factor_to_json(&f) + "\n",
        Format::Dot => io::factor_to_dot(g, &edges),
        Format::Edgelist => io::edges_to_edge_list(g, &edges),
    };
    out.write_all(text.as_bytes())?;
    Ok(EXIT_OK)
}

fn cmd_verify(g: &Multigraph, tree: &PathBuf, out: &mut dyn Write) -> Result<i32, Failure> {
    let t = io::parse_tree_json(g, &read_source(tree)?)?;
    let report = is_weakly_even_tree(g, &t);
    writeln!(
        out,
        "{}",
        serde_json::to_string(&report).expect("serializable")
    )?;
    Ok(if report.passed {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    })
}

fn cmd_oracle(
    g: &Multigraph,
    anchor: AnchorArgs,
    cap: u64,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let verdict =
        oracle::exists_weakly_even(g, anchor.w, anchor.lambda, cap).map_err(|e| match e {
            OracleError::CapExceeded { .. }
            | OracleError::Graph(_)
            | OracleError::InvalidLambda(_) => Failure::invalid(e),
        })?;
    let text = match (&verdict.witness, format) {
        (Some(t), Format::Dot) => io::tree_to_dot(g, t),
        (Some(t), Format::Edgelist) => io::edges_to_edge_list(g, &t.edges),
        (witness, _) => {
            let witness: Option<serde_json::Value> = witness
                .as_ref()
                .map(|t| {
                    io::tree_to_json(g, t).map(|s| serde_json::from_str(&s).expect("valid JSON"))
                })
                .transpose()
                .map_err(Failure::contract)?;
            let doc = serde_json::json!({
                "exists": verdict.exists,
                "trees_examined": verdict.trees_examined,
                "witness": witness,
            });
            format!("{doc}\n")
        }
    };
    out.write_all(text.as_bytes())?;
    Ok(if verdict.exists {
        EXIT_OK
    } else {
        EXIT_NO_SOLUTION
    })
}

struct BenchBase {
    kind: GenKind,
    m: Option<usize>,
    r: Option<usize>,
    multiplicity: Option<usize>,
    blocks: Option<usize>,
}

#[derive(Debug, Serialize)]
struct BenchRow {
    n: usize,
    m: usize,
    seed: u64,
    status: String,
    solve_ms: f64,
    verify_ms: f64,
}

fn bench_one(base: &BenchBase, n: usize, seed: u64) -> BenchRow {
    let random = matches!(
        base.kind,
        GenKind::RandomConnected | GenKind::RandomTwoEdgeConnected
    );
    let spec = GenSpec {
        kind: base.kind,
        n,
        m: base.m.or(random.then_some(3 * n)),
        r: base.r,
        multiplicity: base.multiplicity,
        blocks: base.blocks,
        seed,
    };
    let row = |m, status: String, solve_ms, verify_ms| BenchRow {
        n,
        m,
        seed,
        status,
        solve_ms,
        verify_ms,
    };
    let g = match generate(&spec) {
        Ok(g) => g,
        Err(e) => return row(0, format!("gen_error: {e}"), 0.0, 0.0),
    };
    let start = Instant::now();
    let outcome = solve_instrumented(&g, 0, 0);
    let solve_ms = start.elapsed().as_secs_f64() * 1e3;
    match outcome {
        Ok((SolveOutcome::Tree(t), _)) => {
            let start = Instant::now();
            let report = is_weakly_even_tree(&g, &t);
            let verify_ms = start.elapsed().as_secs_f64() * 1e3;
            let status = if report.passed { "ok" } else { "verify_failed" };
            row(g.edge_count(), status.into(), solve_ms, verify_ms)
        }
        Ok((SolveOutcome::NoSolution { .. }, _)) => {
            row(g.edge_count(), "no_solution".into(), solve_ms, 0.0)
        }
        Err(e) => row(g.edge_count(), format!("error: {e}"), solve_ms, 0.0),
    }
}

fn cmd_bench(
    base: &BenchBase,
    sizes: &[usize],
    reps: u64,
    seed: u64,
    jobs: usize,
    format: BenchFormat,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(Failure::invalid)?;
    let tasks: Vec<(usize, u64)> = sizes
        .iter()
        .flat_map(|&n| (0..reps).map(move |i| (n, seed + i)))
        .collect();
    let rows: Vec<BenchRow> = pool.install(|| {
        tasks
            .par_iter()
            .map(|&(n, s)| bench_one(base, n, s))
            .collect()
    });
    match format {
        BenchFormat::Json => writeln!(
            out,
            "{}",
            serde_json::to_string(&rows).expect("serializable")
        )?,
        BenchFormat::Table => {
            writeln!(
                out,
                "{:<26} {:>8} {:>9} {:>6} {:>11} {:>11}  status",
                "kind", "n", "m", "seed", "solve_ms", "verify_ms"
            )?;
            for r in &rows {
                writeln!(
                    out,
                    "{:<26} {:>8} {:>9} {:>6} {:>11.3} {:>11.3}  {}",
                    base.kind.name(),
                    r.n,
                    r.m,
                    r.seed,
                    r.solve_ms,
                    r.verify_ms,
                    r.status
                )?;
            }
        }
    }
    let all_ok = rows
        .iter()
        .all(|r| r.status == "ok" || r.status == "no_solution");
    Ok(if all_ok { EXIT_OK } else { EXIT_CONTRACT })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exec(args: &[&str]) -> (i32, String, String) {
        let config =
            RunConfig::try_parse_from(std::iter::once("evenspan").chain(args.iter().copied()))
                .unwrap();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(&config, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    thread_local! {
        static DIR: tempfile::TempDir = tempfile::tempdir().unwrap();
    }

    fn write_temp(name: &str, text: &str) -> PathBuf {
        let path = DIR.with(|d| d.path().join(name));
        std::fs::write(&path, text).unwrap();
        path
    }

    #[test]
    fn solve_c4_reports_no_solution() {
        let path = write_temp("c4.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n");
        let (code, out, _) = exec(&[
            "solve",
            "--input",
            path.to_str().unwrap(),
            "--w",
            "0",
            "--lambda",
            "0",
        ]);
        assert_eq!(code, EXIT_NO_SOLUTION);
        assert_eq!(out, "{\"status\":\"no_solution\",\"reason\":\"regular_bipartite\",\"r\":2,\"coloring\":[0,1,0,1]}\n");
    }

    #[test]
    fn solve_then_verify_k4() {
        let graph = write_temp(
            "k4.json",
            r#"{"n":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]}"#,
        );
        let g = graph.to_str().unwrap();
        let (code, out, _) = exec(&["solve", "--input", g, "--w", "2", "--lambda", "1"]);
        assert_eq!(code, EXIT_OK);
        let tree = write_temp("k4-tree.json", &out);
        let (code, out, _) = exec(&["verify", "--input", g, "--tree", tree.to_str().unwrap()]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "{\"passed\":true,\"first_violation\":null}\n");
    }

    #[test]
    fn verify_rejects_bad_tree() {
        let graph = write_temp(
            "k4-bad.txt",
            &io::write_edge_list(&crate::generators::families::complete(4)),
        );
        let tree = write_temp(
            "k4-bad.json",
            r#"{"edges":[[0,1],[1,2],[2,3]],"types":[0,1,0,1],"w":0,"lambda":0}"#,
        );
        let (code, out, _) = exec(&[
            "verify",
            "--input",
            graph.to_str().unwrap(),
            "--tree",
            tree.to_str().unwrap(),
        ]);
        assert_eq!(code, EXIT_VERIFY_FAILED);
        assert!(out.contains("\"passed\":false"));
    }

    #[test]
    fn invalid_inputs() {
        let (code, _, err) = exec(&[
            "solve",
            "--input",
            "/nonexistent/graph",
            "--w",
            "0",
            "--lambda",
            "0",
        ]);
        assert_eq!(code, EXIT_INVALID_INPUT);
        assert!(err.starts_with("error: "));
        let bad = write_temp("bad.txt", "3 1\n0 7\n");
        assert_eq!(
            exec(&[
                "solve",
                "--input",
                bad.to_str().unwrap(),
                "--w",
                "0",
                "--lambda",
                "0"
            ])
            .0,
            EXIT_INVALID_INPUT
        );
        let disconnected = write_temp("disc.txt", "4 2\n0 1\n2 3\n");
        let d = disconnected.to_str().unwrap();
        assert_eq!(
            exec(&["solve", "--input", d, "--w", "0", "--lambda", "0"]).0,
            EXIT_INVALID_INPUT
        );
        assert_eq!(
            exec(&["solve", "--gen", "theta", "--n", "6", "--w", "9", "--lambda", "0"]).0,
            EXIT_INVALID_INPUT
        );
        assert_eq!(
            exec(&["weak-two-factor", "--input", d]).0,
            EXIT_INVALID_INPUT
        );
        assert_eq!(
            exec(&["two-factor", "--gen", "theta", "--n", "6"]).0,
            EXIT_INVALID_INPUT
        );
        assert!(RunConfig::try_parse_from([
            "evenspan", "solve", "--gen", "theta", "--n", "6", "--w", "0", "--lambda", "2"
        ])
        .is_err());
        assert!(
            RunConfig::try_parse_from(["evenspan", "solve", "--w", "0", "--lambda", "0"]).is_err()
        );
        assert!(RunConfig::try_parse_from([
            "evenspan", "gen", "--input", "x", "--gen", "theta", "--n", "4"
        ])
        .is_err());
    }

    #[test]
    fn gen_is_deterministic_and_round_trips() {
        let args = [
            "gen",
            "--gen",
            "random_connected",
            "--n",
            "12",
            "--m",
            "20",
            "--seed",
            "7",
            "--format",
            "edgelist",
        ];
        let (code, first, _) = exec(&args);
        assert_eq!(code, EXIT_OK);
        assert_eq!(first, exec(&args).1);
        let expected = generate(&GenSpec::new(GenKind::RandomConnected, 12, 7).with_m(20)).unwrap();
        assert_eq!(io::parse_graph(&first).unwrap(), expected);
    }

    #[test]
    fn factor_commands() {
        let (code, out, _) = exec(&[
            "two-factor",
            "--gen",
            "random_regular",
            "--n",
            "10",
            "--r",
            "3",
            "--seed",
            "1",
        ]);
        assert_eq!(code, EXIT_OK);
        assert!(out.starts_with("{\"cycles\":["));
        let (code, out, _) = exec(&[
            "weak-two-factor",
            "--gen",
            "theta",
            "--n",
            "7",
            "--format",
            "edgelist",
        ]);
        assert_eq!(code, EXIT_OK);
        assert!(out.starts_with("7 "));
        let bridged = write_temp(
            "cubic-bridges.txt",
            &io::write_edge_list(&cubic_with_bridge()),
        );
        let (code, out, _) = exec(&["two-factor", "--input", bridged.to_str().unwrap()]);
        assert_eq!(code, EXIT_NO_SOLUTION);
        assert!(out.starts_with("{\"status\":\"no_two_factor\""));
    }

    /// A centre joined by bridges to three copies of K4 minus an edge plus a
    /// vertex: cubic, and deleting the centre leaves three odd components,
    /// so there is no perfect matching and hence no 2-factor.
    fn cubic_with_bridge() -> Multigraph {
        let mut g = Multigraph::new(1);
        for _ in 0..3 {
            let v: Vec<usize> = (0..5).map(|_| g.add_vertex()).collect();
            for (a, b) in [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 0), (4, 1)] {
                g.add_edge(v[a], v[b]).unwrap();
            }
            g.add_edge(0, v[4]).unwrap();
        }
        g
    }

    #[test]
    fn oracle_command() {
        let (code, out, _) = exec(&[
            "oracle", "--gen", "theta", "--n", "6", "--w", "0", "--lambda", "0",
        ]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("\"exists\":true"));
        let c4 = write_temp("c4o.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n");
        let (code, out, _) = exec(&[
            "oracle",
            "--input",
            c4.to_str().unwrap(),
            "--w",
            "1",
            "--lambda",
            "1",
        ]);
        assert_eq!(code, EXIT_NO_SOLUTION);
        assert_eq!(
            out,
            "{\"exists\":false,\"trees_examined\":4,\"witness\":null}\n"
        );
        let k6 = write_temp(
            "k6.txt",
            &io::write_edge_list(&crate::generators::families::complete(6)),
        );
        let (code, _, err) = exec(&[
            "oracle",
            "--input",
            k6.to_str().unwrap(),
            "--w",
            "0",
            "--lambda",
            "0",
            "--cap",
            "100",
        ]);
        assert_eq!(code, EXIT_INVALID_INPUT);
        assert!(err.contains("above the cap"));
    }

    #[test]
    fn bench_runs_in_parallel() {
        let (code, out, _) = exec(&[
            "bench", "--sizes", "20,40", "--reps", "2", "--jobs", "2", "--format", "json",
        ]);
        assert_eq!(code, EXIT_OK);
        let rows: Vec<serde_json::Value> = serde_json::from_str(&out).unwrap();
        assert_eq!(rows.len(), 4);
        assert!(rows.iter().all(|r| r["status"] == "ok"));
        assert_eq!(rows[2]["n"], 40);
    }
}
