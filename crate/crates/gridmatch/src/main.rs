//! Command-line front end: generators, solvers, the group explorer, and the
//! decomposition exporter, with reproducible seeded behavior.

use clap::{Parser, Subcommand, ValueEnum};
use gridmatch::decomp::{
    cutwidth_of, linearize, path_decomposition, term_representation, verify_decomposition,
    TERM_GRAMMAR_VERSION,
};
use gridmatch::engine::{brute_force_pm, evaluate_pm};
use gridmatch::format::{
    parse_certificate, parse_graph, serialize_certificate, serialize_graph,
    serialize_graph_with_comments,
};
use gridmatch::gen::{random_graph, random_pool, seeded_rng, GenConfig};
use gridmatch::grid::{validate, Edge, GridGraph, Vertex};
use gridmatch::monoid::{discover_certificate, equalize_lengths, verify_certificate};
use gridmatch::reductions::{modp_membership, modp_to_graph, parity_to_graph};
use std::collections::BTreeSet;
use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "gridmatch", version, about = "Perfect-matching workbench for grid layered planar graphs")]
struct Cli {
    /// Seed for all randomized behavior (overridden by GRIDMATCH_SEED).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    Monoid,
    Brute,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the parity-reduction graph G_x for a bitstring.
    GenParity {
        x: String,
        /// Output path ('-' for stdout).
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Emit the Mod_p-reduction graph G_z for a bitstring and certificate.
    GenModp {
        z: String,
        #[arg(long)]
        cert: String,
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Decide perfect matching for a graph file ('-' for stdin).
    Solve {
        input: String,
        #[arg(long, value_enum, default_value_t = Engine::Monoid)]
        engine: Engine,
        /// Mirror the answer in the exit code (0 = yes, 1 = no).
        #[arg(long)]
        exit_code: bool,
    },
    /// Search products of a random pool for an odd-prime-order group.
    Explore {
        #[arg(long)]
        width: u32,
        /// Closure budget (distinct elements).
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
        #[arg(long, default_value_t = 10_000)]
        power_cap: u64,
        #[arg(long, default_value_t = 64)]
        pool_size: usize,
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Rewrite a generator/identity graph pair to equal lengths.
    Equalize {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Linearize a gadget-block graph and export its path decomposition.
    Treedecomp {
        input: String,
        #[arg(long)]
        term_out: Option<String>,
    },
    /// Exhaustively check the parity reduction against both engines.
    VerifyParity {
        #[arg(long, default_value_t = 12)]
        max_n: u32,
    },
    /// Exhaustively check the Mod_p reduction for a certificate.
    VerifyModp {
        #[arg(long)]
        cert: String,
        #[arg(long, default_value_t = 8)]
        max_n: u32,
    },
    /// Time the streaming evaluator on a random graph.
    Bench {
        #[arg(long, default_value_t = 6)]
        width: u32,
        #[arg(long, default_value_t = 100_000)]
        length: u32,
    },
}

#[derive(Debug)]
enum CliError {
    /// User-facing problem: bad input, unreadable file. Exit 2.
    Usage(String),
    /// Internal invariant failure (engine disagreement, broken certificate).
    /// Exit 3.
    Invariant(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Invariant(m) => write!(f, "{m}"),
        }
    }
}

fn usage<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| usage(format!("reading stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| usage(format!("reading {path}: {e}")))
    }
}

fn write_output(path: &str, text: &str) -> Result<(), CliError> {
    if path == "-" {
        print!("{text}");
        Ok(())
    } else {
        std::fs::write(path, text).map_err(|e| usage(format!("writing {path}: {e}")))
    }
}

fn load_graph(path: &str) -> Result<GridGraph, CliError> {
    parse_graph(&read_input(path)?).map_err(usage)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let seed = std::env::var("GRIDMATCH_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(cli.seed);
    match run(cli.command, seed) {
        Ok(code) => code,
        Err(CliError::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(CliError::Invariant(m)) => {
            eprintln!("invariant failure: {m}");
            ExitCode::from(3)
        }
    }
}

fn run(cmd: Command, seed: u64) -> Result<ExitCode, CliError> {
    match cmd {
        Command::GenParity { x, out } => {
            let g = parity_to_graph(&x).map_err(usage)?;
            let text =
                serialize_graph_with_comments(&g, &[format!("parity reduction of x={x:?}")]);
            write_output(&out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::GenModp { z, cert, out } => {
            let cert = parse_certificate(&read_input(&cert)?).map_err(usage)?;
            verify_certificate(&cert)
                .map_err(|e| CliError::Invariant(format!("certificate rejected: {e}")))?;
            let g = modp_to_graph(&z, &cert).map_err(usage)?;
            let text = serialize_graph_with_comments(
                &g,
                &[format!("mod-p reduction of z={z:?} with p={}", cert.p)],
            );
            write_output(&out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Solve {
            input,
            engine,
            exit_code,
        } => {
            let g = load_graph(&input)?;
            let answer = solve(&g, engine)?;
            println!("PM: {}", if answer { "yes" } else { "no" });
            Ok(if exit_code && !answer {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Explore {
            width,
            budget,
            power_cap,
            pool_size,
            out,
        } => {
            let mut rng = seeded_rng(seed);
            let pool = random_pool(&mut rng, width, pool_size);
            let (cert, stats) =
                discover_certificate(&pool, budget, power_cap).map_err(usage)?;
            eprintln!(
                "stats: pool={} elements={} products={} candidates={} groups={} \
                 even_order_groups={} orders={:?} truncated={}",
                pool.len(),
                stats.distinct_elements,
                stats.products_computed,
                stats.self_composable,
                stats.groups_found,
                stats.even_period_groups,
                stats.group_orders,
                stats.truncated
            );
            match cert {
                Some(c) => {
                    verify_certificate(&c)
                        .map_err(|e| CliError::Invariant(format!("discovered certificate: {e}")))?;
                    write_output(&out, &serialize_certificate(&c))?;
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    write_output(&out, "none\n")?;
                    Ok(ExitCode::SUCCESS)
                }
            }
        }
        Command::Equalize { a, b } => {
            let ga = load_graph(&a)?;
            let gb = load_graph(&b)?;
            let (ga, gb) = equalize_lengths(&ga, &gb).map_err(usage)?;
            print!("A\n{}B\n{}", serialize_graph(&ga), serialize_graph(&gb));
            Ok(ExitCode::SUCCESS)
        }
        Command::Treedecomp { input, term_out } => {
            let g = load_graph(&input)?;
            let arr = linearize(&g).map_err(usage)?;
            let cw = cutwidth_of(&g, &arr).map_err(usage)?;
            let pd = path_decomposition(&g, &arr);
            if !verify_decomposition(&g, &pd) {
                return Err(CliError::Invariant(
                    "constructed decomposition failed verification".into(),
                ));
            }
            println!("cutwidth: {cw}");
            println!("width: {}", pd.width());
            let term = term_representation(&pd);
            match term_out {
                Some(path) => write_output(
                    &path,
                    &format!("; pd-term {TERM_GRAMMAR_VERSION}\n{term}\n"),
                )?,
                None => println!("{term}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyParity { max_n } => {
            let mut cases = 0u64;
            for n in 0..=max_n {
                for bits in 0u64..1 << n {
                    let x: String = (0..n)
                        .map(|i| if bits >> i & 1 == 1 { '1' } else { '0' })
                        .collect();
                    let even = x.chars().filter(|c| *c == '1').count() % 2 == 0;
                    let g = parity_to_graph(&x).map_err(usage)?;
                    let fast = evaluate_pm(&g).map_err(usage)?;
                    if fast != even {
                        return Err(CliError::Invariant(format!(
                            "evaluate_pm(G_x) = {fast} but parity of {x:?} is {}",
                            if even { "even" } else { "odd" }
                        )));
                    }
                    if n <= 6 {
                        let slow = brute_force_pm(&g).map_err(usage)?;
                        if slow != even {
                            return Err(CliError::Invariant(format!(
                                "brute_force_pm(G_x) = {slow} on x={x:?}"
                            )));
                        }
                    }
                    cases += 1;
                }
            }
            println!("OK {cases} cases");
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyModp { cert, max_n } => {
            let cert = parse_certificate(&read_input(&cert)?).map_err(usage)?;
            verify_certificate(&cert)
                .map_err(|e| CliError::Invariant(format!("certificate rejected: {e}")))?;
            let mut cases = 0u64;
            for n in 0..=max_n {
                for bits in 0u64..1 << n {
                    let z: String = (0..n)
                        .map(|i| if bits >> i & 1 == 1 { '1' } else { '0' })
                        .collect();
                    let g = modp_to_graph(&z, &cert).map_err(usage)?;
                    let pm = evaluate_pm(&g).map_err(usage)?;
                    let member = modp_membership(&z, cert.p);
                    if pm != !member {
                        return Err(CliError::Invariant(format!(
                            "PM(G_z) = {pm} but z={z:?} {} Mod_{}",
                            if member { "in" } else { "not in" },
                            cert.p
                        )));
                    }
                    cases += 1;
                }
            }
            println!("OK {cases} cases");
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench { width, length } => {
            let mut rng = seeded_rng(seed);
            let g = random_graph(&mut rng, &GenConfig::new(width, length));
            let t0 = Instant::now();
            let answer = evaluate_pm(&g).map_err(usage)?;
            let dt = t0.elapsed();
            println!(
                "width={width} length={length} PM: {} in {:.3} ms",
                if answer { "yes" } else { "no" },
                dt.as_secs_f64() * 1e3
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn solve(g: &GridGraph, engine: Engine) -> Result<bool, CliError> {
    match engine {
        Engine::Monoid => evaluate_pm(g).map_err(usage),
        Engine::Brute => brute_force_pm(g).map_err(usage),
        Engine::Both => {
            let fast = evaluate_pm(g).map_err(usage)?;
            let slow = brute_force_pm(g).map_err(usage)?;
            if fast == slow {
                return Ok(fast);
            }
            let small = shrink_disagreement(g.clone());
            Err(CliError::Invariant(format!(
                "engines disagree (monoid={fast}, brute={slow}); minimized counterexample:\n{}",
                serialize_graph(&small)
            )))
        }
    }
}

/// True when the two engines still disagree on g.
fn disagrees(g: &GridGraph) -> bool {
    match (evaluate_pm(g), brute_force_pm(g)) {
        (Ok(a), Ok(b)) => a != b,
        _ => false,
    }
}

/// Greedy minimization: repeatedly drop any single edge, or any vertex with
/// its incident edges, while the disagreement persists.
fn shrink_disagreement(mut g: GridGraph) -> GridGraph {
    loop {
        let mut shrunk = false;
        for e in g.edges().clone() {
            let edges: BTreeSet<Edge> = g.edges().iter().filter(|x| **x != e).cloned().collect();
            if let Ok(h) = GridGraph::new(g.width(), g.length(), g.vertices().clone(), edges) {
                if disagrees(&h) {
                    g = h;
                    shrunk = true;
                    break;
                }
            }
        }
        if shrunk {
            continue;
        }
        for v in g.vertices().clone() {
            let vertices: BTreeSet<Vertex> =
                g.vertices().iter().filter(|x| **x != v).cloned().collect();
            let edges: BTreeSet<Edge> = g
                .edges()
                .iter()
                .filter(|e| {
                    let (a, b) = e.endpoints();
                    a != v && b != v
                })
                .cloned()
                .collect();
            if let Ok(h) = GridGraph::new(g.width(), g.length(), vertices, edges) {
                if disagrees(&h) {
                    g = h;
                    shrunk = true;
                    break;
                }
            }
        }
        if !shrunk {
            // A disagreement implies non-clean structure somewhere; surface it.
            debug_assert!(!validate(&g).violations.is_empty() || disagrees(&g));
            return g;
        }
    }
}
