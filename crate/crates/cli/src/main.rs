//! `epg`: build, check, bound and draw grid-path representations.
//!
//! Exit status is 0 on success, 1 when a check fails and 2 on bad usage or
//! unreadable input.

mod render;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use epg::bipartite::{blowup_pretzel, construct_comb, construct_kmm3_with_n, construct_m4, m4_n};
use epg::bounds::{kmn_bend_bounds, reference_interval_track};
use epg::construct::{
    construct_degeneracy, construct_edge_coloring, construct_from_global_cover, construct_from_local_cover,
    construct_treewidth,
};
use epg::exact::{exact_bend_number, BendNumber, SearchBudget};
use epg::graph::{
    clique_cover_global, clique_cover_local, degeneracy_order, gen_complete_bipartite, ktree_sequence, BuildSequence,
    CliqueCover,
};
use epg::grid::{crossing_points, make_pretzel};
use epg::reduce3sat::{
    brute_force_one_in_three, build_reduction_graph, parse_assignment, parse_formula, representation_from_assignment,
};
use epg::rep::{from_json, to_json};
use epg::verify::verify_representation;
use epg::{format_graph, parse_graph, Graph, Rep};

use render::{render_svg, RenderOptions};

#[derive(Parser)]
#[command(name = "epg", version, about = "Edge-intersection graphs of paths on the grid")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a representation realizes a graph within a bend budget.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        rep: PathBuf,
        /// Bend budget; without it only the intersection graph is compared.
        #[arg(long)]
        max_bends: Option<usize>,
    },
    /// Build a representation of a graph.
    Construct {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        strategy: Strategy,
        /// Clique cover file for the cover strategies (one family per line,
        /// cliques separated by `|`).
        #[arg(long, conflicts_with = "seq")]
        cover: Option<PathBuf>,
        /// Build sequence file for the treewidth strategy.
        #[arg(long)]
        seq: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build a representation of K_{m,n}.
    Kmn {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        strategy: KmnStrategy,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Also write K_{m,n} as an edge list.
        #[arg(long)]
        graph_out: Option<PathBuf>,
    },
    /// Print lower and upper bounds on the bend-number of K_{m,n}.
    Bounds {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// List every bound that was considered.
        #[arg(long)]
        verbose: bool,
    },
    /// Build the pair of (2j-1)-bend paths crossing j(j+1) times, or its
    /// blow-up to m paths.
    Pretzel {
        #[arg(long)]
        j: usize,
        #[arg(long)]
        blowup: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Count the points where two paths cross.
    Crossings {
        #[arg(long)]
        rep: PathBuf,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// Exhaustive bend-number search for a small graph.
    Exact {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        max_k: usize,
        /// Seconds before giving up.
        #[arg(long)]
        time_limit: Option<f64>,
        #[arg(long)]
        node_limit: Option<u64>,
        /// Write the representation found.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Turn a one-in-three formula into a graph and, given an assignment,
    /// into a single-bend representation of that graph.
    Reduce {
        #[arg(long)]
        formula: PathBuf,
        /// `auto` searches for an assignment; otherwise a file of
        /// `name true|false` lines.
        #[arg(long)]
        assign: Option<String>,
        /// Write the graph as an edge list.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Write the representation.
        #[arg(long)]
        rep: Option<PathBuf>,
    },
    /// Draw a representation as SVG.
    Render {
        #[arg(long)]
        rep: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, default_value_t = RenderOptions::default().cell_size)]
        cell_size: u32,
        #[arg(long, default_value_t = RenderOptions::default().path_offset)]
        path_offset: f64,
        #[arg(long)]
        no_labels: bool,
        #[arg(long)]
        crossings: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Strategy {
    GlobalCover,
    LocalCover,
    Degeneracy,
    Treewidth,
    EdgeColoring,
}

#[derive(Clone, Copy, ValueEnum)]
enum KmnStrategy {
    Comb,
    Kmm3,
    M4,
}

/// Result of a command that ran to completion.
enum Outcome {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

fn read_graph(path: &Path) -> Result<Graph> {
    parse_graph(&read(path)?).with_context(|| format!("bad graph file {}", path.display()))
}

fn read_rep(path: &Path) -> Result<Rep> {
    from_json(&read(path)?).with_context(|| format!("bad representation file {}", path.display()))
}

/// Writes to the file if given, else to standard output.
fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Verify { graph, rep, max_bends } => {
            let g = read_graph(&graph)?;
            let r = read_rep(&rep)?;
            let budget = max_bends.unwrap_or_else(|| r.max_bends());
            let report = verify_representation(&r, &g, budget)?;
            println!("{}", report.summary());
            Ok(if report.ok { Outcome::Pass } else { Outcome::Fail })
        }
        Command::Construct { graph, strategy, cover, seq, output } => {
            let g = read_graph(&graph)?;
            let cover = match cover {
                Some(p) => Some(CliqueCover::parse(&read(&p)?)?),
                None => None,
            };
            let rep = match strategy {
                Strategy::GlobalCover => {
                    construct_from_global_cover(&g, &cover.unwrap_or_else(|| clique_cover_global(&g, None)))?
                }
                Strategy::LocalCover => {
                    construct_from_local_cover(&g, &cover.unwrap_or_else(|| clique_cover_local(&g)))?
                }
                Strategy::Degeneracy => construct_degeneracy(&g, &degeneracy_order(&g))?,
                Strategy::EdgeColoring => construct_edge_coloring(&g)?,
                Strategy::Treewidth => {
                    let seq = match seq {
                        Some(p) => BuildSequence::parse(&read(&p)?)?,
                        None => smallest_sequence(&g)?,
                    };
                    construct_treewidth(&g, &seq)?
                }
            };
            eprintln!("{} paths, max bends {}", rep.len(), rep.max_bends());
            emit(output.as_deref(), &to_json(&rep))?;
            Ok(Outcome::Pass)
        }
        Command::Kmn { m, n, strategy, output, graph_out } => {
            let rep = match strategy {
                KmnStrategy::Comb => construct_comb(m, n),
                KmnStrategy::Kmm3 => construct_kmm3_with_n(m, n)?,
                KmnStrategy::M4 => {
                    let top = m4_n(m);
                    if n > top {
                        bail!("the m4 construction reaches n = {top} for m = {m}");
                    }
                    let full = construct_m4(m)?;
                    let keep: Vec<String> =
                        (1..=m).map(|i| format!("a{i}")).chain((1..=n).map(|j| format!("b{j}"))).collect();
                    full.restrict(keep.iter().map(String::as_str))
                }
            };
            eprintln!("K_{{{m},{n}}}: max bends {}", rep.max_bends());
            if let Some(p) = graph_out {
                write(&p, &format_graph(&gen_complete_bipartite(m, n)))?;
            }
            emit(output.as_deref(), &to_json(&rep))?;
            Ok(Outcome::Pass)
        }
        Command::Bounds { m, n, verbose } => {
            if m == 0 || n == 0 {
                bail!("m and n must be positive");
            }
            let b = kmn_bend_bounds(m, n);
            println!("lower {} upper {}", b.lower, b.upper);
            if verbose {
                for w in &b.witnesses {
                    println!("  {w}");
                }
                let (i, t) = reference_interval_track(m, n);
                println!("  interval number {i}, track number {t}");
            }
            Ok(Outcome::Pass)
        }
        Command::Pretzel { j, blowup, output } => {
            if j == 0 {
                bail!("j must be at least 1");
            }
            let rep = match blowup {
                None => {
                    let (p, q) = make_pretzel(j);
                    println!("crossings {}", crossing_points(&p, &q).len());
                    [("P1".to_string(), p), ("P2".to_string(), q)].into_iter().collect()
                }
                Some(m) => {
                    let bp = blowup_pretzel(m, j)?;
                    println!("paths {}, crossings {}", bp.paths.len(), bp.total_crossings());
                    bp.paths
                }
            };
            if let Some(p) = output {
                write(&p, &to_json(&rep))?;
            }
            Ok(Outcome::Pass)
        }
        Command::Crossings { rep, u, v } => {
            let r = read_rep(&rep)?;
            let get = |x: &str| r.get(x).with_context(|| format!("no path for vertex {x}"));
            let points = crossing_points(get(&u)?, get(&v)?);
            println!("{}", points.len());
            for p in points {
                println!("  ({}, {})", p.x, p.y);
            }
            Ok(Outcome::Pass)
        }
        Command::Exact { graph, max_k, time_limit, node_limit, output } => {
            let g = read_graph(&graph)?;
            let mut budget = SearchBudget::new(max_k);
            budget.time_limit = time_limit.map(Duration::from_secs_f64);
            if node_limit.is_some() {
                budget.node_limit = node_limit;
            }
            match exact_bend_number(&g, &budget)? {
                BendNumber::Exact { k, rep } => {
                    println!("bend number {k}");
                    if let Some(p) = output {
                        write(&p, &to_json(&rep))?;
                    }
                    Ok(Outcome::Pass)
                }
                BendNumber::LowerBoundOnly(k) => {
                    println!("bend number at least {k}");
                    Ok(Outcome::Pass)
                }
                BendNumber::Exhausted { lower } => {
                    println!("search limit reached; bend number at least {lower}");
                    Ok(Outcome::Fail)
                }
            }
        }
        Command::Reduce { formula, assign, output, rep } => {
            let f = parse_formula(&read(&formula)?)?;
            let rg = build_reduction_graph(&f);
            println!(
                "{} clauses, {} variables, {} vertices, {} edges",
                f.clauses.len(),
                f.variables.len(),
                rg.graph.vertex_count(),
                rg.graph.edge_count()
            );
            if let Some(p) = output {
                write(&p, &format_graph(&rg.graph))?;
            }
            let assignment = match assign.as_deref() {
                None => return Ok(Outcome::Pass),
                Some("auto") => match brute_force_one_in_three(&f)? {
                    Some(a) => a,
                    None => {
                        println!("no one-in-three assignment exists");
                        return Ok(Outcome::Fail);
                    }
                },
                Some(path) => parse_assignment(&read(Path::new(path))?)?,
            };
            let trues: Vec<&str> = assignment.true_variables().into_iter().collect();
            println!("true: {}", trues.join(" "));
            let r = representation_from_assignment(&f, &assignment)?;
            let report = verify_representation(&r, &rg.graph, 1)?;
            println!("{}", report.summary());
            if let Some(p) = rep {
                write(&p, &to_json(&r))?;
            }
            Ok(if report.ok { Outcome::Pass } else { Outcome::Fail })
        }
        Command::Render { rep, output, cell_size, path_offset, no_labels, crossings } => {
            let r = read_rep(&rep)?;
            let opts = RenderOptions { cell_size, path_offset, labels: !no_labels, crossings };
            if let Err(e) = opts.validate() {
                bail!(e);
            }
            write(&output, &render_svg(&r, &opts))?;
            Ok(Outcome::Pass)
        }
    }
}

/// A build sequence of the smallest width the elimination heuristics find.
fn smallest_sequence(g: &Graph) -> Result<BuildSequence> {
    for k in 1..g.vertex_count().max(2) {
        if let Ok(seq) = ktree_sequence(g, k, None) {
            return Ok(seq);
        }
    }
    bail!("no build sequence found")
}
