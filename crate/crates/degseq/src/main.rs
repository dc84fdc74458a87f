//! Thin command-line front end over the library: one subcommand per major
//! capability, text output by default, machine formats behind flags.
//!
//! Exit codes partition outcomes: 0 success/affirmative, 1 negative verdict
//! (e.g. a sequence that is not connected-realizable, an invalid trace),
//! 2 input error (unparseable arguments or files, I/O), 3 size limits.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use degseq::{
    all_realizations, canonical_trace, cell_census, connectivity_edge_threshold,
    distinct_realizations, enumeration, find_sufficiency_gaps, find_threshold_gaps,
    parse_sequence, realize_connected, verdict, CellCensus, CensusOptions, ConstructionTrace,
    Error, SimpleGraph,
};

#[derive(Parser)]
#[command(
    name = "degseq",
    version,
    about = "Degree sequences and the connected graphs that realize them"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report every verdict for a degree sequence
    Check {
        /// Comma- or space-separated positive integers, e.g. "3,3,2,2"
        sequence: String,
        /// Emit the report as JSON instead of key=value lines
        #[arg(long)]
        json: bool,
    },
    /// Build a connected graph with the given degrees
    Realize {
        /// Comma- or space-separated positive integers
        sequence: String,
        /// Output format for the graph
        #[arg(long, value_enum, default_value_t = GraphFormat::Edges)]
        format: GraphFormat,
        /// Also write the two-phase construction trace to a file
        #[arg(long, value_name = "FILE")]
        trace_out: Option<PathBuf>,
    },
    /// Derive a construction trace from a graph, or replay one
    Trace {
        /// Edge-list file to derive a two-phase trace from
        #[arg(value_name = "GRAPH_FILE", conflicts_with = "replay")]
        graph: Option<PathBuf>,
        /// Replay and validate a trace file instead
        #[arg(long, value_name = "FILE")]
        replay: Option<PathBuf>,
        /// With --replay, also print the resulting graph as an edge list
        #[arg(long, requires = "replay")]
        emit_graph: bool,
    },
    /// List the realizations of a degree sequence
    Enumerate {
        /// Comma- or space-separated positive integers
        sequence: String,
        /// One representative per isomorphism class instead of all labelings
        #[arg(long)]
        distinct: bool,
        /// Keep only connected realizations
        #[arg(long)]
        connected_only: bool,
        /// Print how many instead of the graphs themselves
        #[arg(long)]
        count: bool,
        /// Output format for the graphs
        #[arg(long, value_enum, default_value_t = GraphFormat::Edges)]
        format: GraphFormat,
        /// Worker threads for the exhaustive scan
        #[arg(long, default_value_t = default_jobs())]
        jobs: usize,
    },
    /// Count connected graphs per (edge, vertex) cell
    Matrix {
        /// Largest vertex count to include (at most 8)
        #[arg(long, value_name = "N")]
        max_vertices: usize,
        /// Output format for the census
        #[arg(long, value_enum, default_value_t = MatrixFormat::Text)]
        format: MatrixFormat,
        /// Also list each cell's classes as canonical bit strings
        #[arg(long)]
        representatives: bool,
        /// Worker threads for the exhaustive scan
        #[arg(long, default_value_t = default_jobs())]
        jobs: usize,
        /// Reuse and populate a census cache in this directory
        #[arg(long, value_name = "DIR")]
        cache_dir: Option<PathBuf>,
        /// Write to a file instead of standard output
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// List where the arithmetic shortcuts diverge from ground truth
    Gaps {
        /// Largest sequence length to audit
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Which audit to run
        #[arg(long, value_enum, default_value_t = GapKind::Both)]
        which: GapKind,
        /// Worker threads for the exhaustive scans
        #[arg(long, default_value_t = default_jobs())]
        jobs: usize,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// The edge count that forces a graph on N vertices to be connected
    Threshold {
        /// Vertex count (at least 2)
        vertices: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    /// Edge-list text (header line, one edge per line)
    Edges,
    /// Graphviz DOT
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixFormat {
    /// Fixed-width grid
    Text,
    /// One object per non-empty cell
    Json,
    /// `i,j,count` rows
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GapKind {
    /// Both audits
    Both,
    /// Sequences passing the arithmetic check with no connected realization
    Sufficiency,
    /// Forcibly connected sequences below the edge-count threshold
    Threshold,
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map(usize::from).unwrap_or(1)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(match err {
                Error::Parse { .. }
                | Error::Io(_)
                | Error::EmptySequence
                | Error::NonPositiveTerm { .. } => 2,
                Error::LimitExceeded { .. } | Error::DomainTooSmall { .. } => 3,
                _ => 1,
            })
        }
    }
}

fn run(command: Command) -> degseq::Result<ExitCode> {
    match command {
        Command::Check { sequence, json } => cmd_check(&sequence, json),
        Command::Realize { sequence, format, trace_out } => {
            cmd_realize(&sequence, format, trace_out.as_deref())
        }
        Command::Trace { graph, replay, emit_graph } => {
            cmd_trace(graph.as_deref(), replay.as_deref(), emit_graph)
        }
        Command::Enumerate { sequence, distinct, connected_only, count, format, jobs } => {
            cmd_enumerate(&sequence, distinct, connected_only, count, format, jobs)
        }
        Command::Matrix { max_vertices, format, representatives, jobs, cache_dir, out } => {
            cmd_matrix(max_vertices, format, representatives, jobs, cache_dir.as_deref(), out.as_deref())
        }
        Command::Gaps { max_n, which, jobs, json } => cmd_gaps(max_n, which, jobs, json),
        Command::Threshold { vertices } => {
            let t = connectivity_edge_threshold(vertices)?;
            println!("{t} (assumes minimum degree \u{2265} 1)");
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn cmd_check(literal: &str, json: bool) -> degseq::Result<ExitCode> {
    let (s, reordered) = parse_sequence(literal)?;
    let report = verdict(&s);
    let failed: Vec<&str> = report.failure_reasons.iter().map(|c| c.as_str()).collect();
    if json {
        let value = serde_json::json!({
            "sequence": s.terms(),
            "reordered": reordered,
            "graphic": report.graphic,
            "arithmetic_connected": report.arithmetic_connected,
            "exact_connected": report.exact_connected,
            "threshold_forced_connected": report.threshold_forced_connected,
            "failed_conditions": failed,
        });
        println!("{}", serde_json::to_string_pretty(&value).expect("report serializes"));
    } else {
        println!("sequence={s}");
        println!("reordered={reordered}");
        println!("graphic={}", report.graphic);
        println!("arithmetic_connected={}", report.arithmetic_connected);
        println!("exact_connected={}", report.exact_connected);
        println!("threshold_forced_connected={}", report.threshold_forced_connected);
        println!("failed_conditions={}", failed.join(","));
    }
    Ok(verdict_exit(report.exact_connected))
}

fn cmd_realize(
    literal: &str,
    format: GraphFormat,
    trace_out: Option<&std::path::Path>,
) -> degseq::Result<ExitCode> {
    let (s, _) = parse_sequence(literal)?;
    let result = realize_connected(&s)?;
    match format {
        GraphFormat::Edges => {
            println!("# merge swaps: {}", result.swaps_used);
            print!("{}", result.graph.to_edge_list());
        }
        GraphFormat::Dot => {
            println!("// merge swaps: {}", result.swaps_used);
            print!("{}", result.graph.to_dot());
        }
    }
    if let Some(path) = trace_out {
        std::fs::write(path, result.trace.to_text())?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_trace(
    graph: Option<&std::path::Path>,
    replay: Option<&std::path::Path>,
    emit_graph: bool,
) -> degseq::Result<ExitCode> {
    if let Some(path) = replay {
        let text = std::fs::read_to_string(path)?;
        let trace = ConstructionTrace::parse(&text)?;
        let g = trace.replay()?;
        println!(
            "valid, {} vertices, {} edges, connected at every step",
            g.vertex_count(),
            g.edge_count()
        );
        if emit_graph {
            print!("{}", g.to_edge_list());
        }
        return Ok(ExitCode::SUCCESS);
    }
    let Some(path) = graph else {
        return Err(Error::Parse {
            location: "arguments".into(),
            message: "expected a graph file or --replay FILE".into(),
        });
    };
    let text = std::fs::read_to_string(path)?;
    let g = SimpleGraph::parse_edge_list(&text)?;
    let trace = canonical_trace(&g)?;
    print!("{trace}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_enumerate(
    literal: &str,
    distinct: bool,
    connected_only: bool,
    count: bool,
    format: GraphFormat,
    jobs: usize,
) -> degseq::Result<ExitCode> {
    let (s, _) = parse_sequence(literal)?;
    let mut graphs =
        if distinct { distinct_realizations(&s, jobs)? } else { all_realizations(&s, jobs)? };
    if connected_only {
        graphs.retain(SimpleGraph::is_connected);
    }
    if count {
        println!("{}", graphs.len());
        return Ok(ExitCode::SUCCESS);
    }
    let mut first = true;
    for g in &graphs {
        if !first {
            println!();
        }
        first = false;
        match format {
            GraphFormat::Edges => print!("{}", g.to_edge_list()),
            GraphFormat::Dot => print!("{}", g.to_dot()),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_matrix(
    max_vertices: usize,
    format: MatrixFormat,
    representatives: bool,
    jobs: usize,
    cache_dir: Option<&std::path::Path>,
    out: Option<&std::path::Path>,
) -> degseq::Result<ExitCode> {
    let census = load_or_build_census(max_vertices, representatives, jobs, cache_dir)?;
    let rendered = match format {
        MatrixFormat::Text => enumeration::census_to_text(&census),
        MatrixFormat::Json => enumeration::census_to_json(&census),
        MatrixFormat::Csv => enumeration::census_to_csv(&census),
    };
    match out {
        Some(path) => std::fs::write(path, rendered)?,
        None => print!("{rendered}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn load_or_build_census(
    max_vertices: usize,
    representatives: bool,
    jobs: usize,
    cache_dir: Option<&std::path::Path>,
) -> degseq::Result<CellCensus> {
    if let Some(dir) = cache_dir {
        if let Some(census) = enumeration::load_census_cache(dir, max_vertices, representatives) {
            return Ok(census);
        }
    }
    let census =
        cell_census(max_vertices, CensusOptions { jobs, with_representatives: representatives })?;
    if let Some(dir) = cache_dir {
        enumeration::write_census_cache(dir, &census)?;
    }
    Ok(census)
}

fn cmd_gaps(max_n: usize, which: GapKind, jobs: usize, json: bool) -> degseq::Result<ExitCode> {
    let sufficiency = (which != GapKind::Threshold)
        .then(|| find_sufficiency_gaps(max_n))
        .transpose()?;
    let threshold = (which != GapKind::Sufficiency)
        .then(|| find_threshold_gaps(max_n, jobs))
        .transpose()?;
    if json {
        let as_terms = |gaps: &[degseq::DegreeSequence]| -> Vec<Vec<usize>> {
            gaps.iter().map(|s| s.terms().to_vec()).collect()
        };
        let mut value = serde_json::json!({ "max_n": max_n });
        if let Some(gaps) = &sufficiency {
            value["sufficiency"] = serde_json::json!(as_terms(gaps));
        }
        if let Some(gaps) = &threshold {
            value["threshold"] = serde_json::json!(as_terms(gaps));
        }
        println!("{}", serde_json::to_string_pretty(&value).expect("gaps serialize"));
        return Ok(ExitCode::SUCCESS);
    }
    if let Some(gaps) = &sufficiency {
        println!("sequences passing the arithmetic check with no connected realization (n <= {max_n}):");
        print_gap_list(gaps);
    }
    if let Some(gaps) = &threshold {
        if sufficiency.is_some() {
            println!();
        }
        println!("forcibly connected sequences below the edge-count threshold (n <= {max_n}):");
        print_gap_list(gaps);
    }
    Ok(ExitCode::SUCCESS)
}

fn print_gap_list(gaps: &[degseq::DegreeSequence]) {
    if gaps.is_empty() {
        println!("  (none)");
    }
    for s in gaps {
        println!("  {s}");
    }
}

fn verdict_exit(affirmative: bool) -> ExitCode {
    if affirmative {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
