//! Command-line surface: family generation, embedding runs, certificate
//! verification, gonal filters, and the chordal-ring sweep.

use std::fs::OpenOptions;
use std::io::Write as _;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::certify;
use crate::embed::{self, EmbedOptions, Embedding, SearchOutcome, Status};
use crate::families::{self, FamilySpec, PlatonicSolid};
use crate::gonal;
use crate::graph::{all_pairs_distances, is_bipartite};
use crate::json;

#[derive(Parser)]
#[command(
    name = "halfcube",
    about = "Isometric half-cube and hypercube embeddings of network topologies",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family graph as a graph JSON file.
    Gen(GenArgs),
    /// Search for a (truncated) embedding of a graph.
    Embed(EmbedArgs),
    /// Verify an explicit addressing against a graph.
    Verify(VerifyArgs),
    /// Run the hypermetric (2k+1)-gonal filters.
    Gonal(GonalArgs),
    /// Sweep generalized chordal rings for embeddable instances.
    SweepGcr(SweepArgs),
    /// Print structural facts about a graph file.
    Info(InfoArgs),
}

#[derive(Args)]
struct GenArgs {
    #[command(subcommand)]
    family: FamilyCmd,
    /// Output path for the graph JSON (stdout when omitted).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum FamilyCmd {
    /// Hypercube H_m.
    Hypercube { #[arg(long)] m: usize },
    /// Half-cube (even-weight words, Hamming distance 2).
    Halfcube { #[arg(long)] m: usize },
    /// Johnson graph J(m,k).
    Johnson { #[arg(long)] m: usize, #[arg(long)] k: usize },
    /// Cycle C_n.
    Cycle { #[arg(long)] n: usize },
    /// Path on n vertices.
    Path { #[arg(long)] n: usize },
    /// Complete graph K_n.
    Complete { #[arg(long)] n: usize },
    /// Complete multipartite graph; part sizes comma-separated.
    CompleteMultipartite { #[arg(long, value_delimiter = ',')] parts: Vec<usize> },
    /// Cocktail-party graph K_{n x 2}.
    CocktailParty { #[arg(long)] n: usize },
    /// Generalized Petersen graph GP(n,k).
    Gp { #[arg(long)] n: usize, #[arg(long)] k: usize },
    /// Moebius ladder on n vertices.
    MoebiusLadder { #[arg(long)] n: usize },
    /// Odd graph O_n.
    Odd { #[arg(long)] n: usize },
    /// Double odd graph DO_{2n-1} (bipartite double of O_n).
    DoubleOdd { #[arg(long)] n: usize },
    /// Undirected de Bruijn graph Br(m,n).
    Debruijn { #[arg(long)] m: usize, #[arg(long)] n: usize },
    /// Undirected Kautz graph Ka(m,n).
    Kautz { #[arg(long)] m: usize, #[arg(long)] n: usize },
    /// Cube-connected cycles CCC_n.
    Ccc { #[arg(long)] n: usize },
    /// Butterfly graph But(n).
    Butterfly { #[arg(long)] n: usize },
    /// Fibonacci cube Fi(n).
    Fibonacci { #[arg(long)] n: usize },
    /// Lucas cube Lu(n).
    Lucas { #[arg(long)] n: usize },
    /// Indel graph on binary words of lengths i..=n.
    Indel { #[arg(long)] i: usize, #[arg(long)] n: usize },
    /// Levenshtein graph on binary words of lengths i..=n.
    Levenshtein { #[arg(long)] i: usize, #[arg(long)] n: usize },
    /// Ulam (permutation move) graph Ul(n).
    Ulam { #[arg(long)] n: usize },
    /// Star graph SG(n).
    Star { #[arg(long)] n: usize },
    /// Bubble sort graph BSG(n).
    Bubble { #[arg(long)] n: usize },
    /// Pancake graph Pc(n).
    Pancake { #[arg(long)] n: usize },
    /// Swap-or-shift graph SOS(n,n).
    SosFull { #[arg(long)] n: usize },
    /// Swap-or-shift graph SOS(n-1,n).
    SosPartial { #[arg(long)] n: usize },
    /// Generalized chordal ring GCR(n, chords); chords comma-separated.
    Gcr { #[arg(long)] n: usize, #[arg(long, value_delimiter = ',')] chords: Vec<usize> },
    /// Hoffman-Singleton graph.
    HoffmanSingleton,
    /// Shrikhande graph.
    Shrikhande,
    /// Dyck graph.
    Dyck,
    /// Cubic Klein graph.
    Klein,
    /// Complete tripartite graph K_{4,4,4}.
    K444,
    /// Platonic solid skeleton.
    Platonic { #[arg(long)] solid: PlatonicSolid },
}

impl FamilyCmd {
    fn spec(&self) -> FamilySpec {
        match self {
            FamilyCmd::Hypercube { m } => FamilySpec::Hypercube { m: *m },
            FamilyCmd::Halfcube { m } => FamilySpec::Halfcube { m: *m },
            FamilyCmd::Johnson { m, k } => FamilySpec::Johnson { m: *m, k: *k },
            FamilyCmd::Cycle { n } => FamilySpec::Cycle { n: *n },
            FamilyCmd::Path { n } => FamilySpec::Path { n: *n },
            FamilyCmd::Complete { n } => FamilySpec::Complete { n: *n },
            FamilyCmd::CompleteMultipartite { parts } => {
                FamilySpec::CompleteMultipartite { parts: parts.clone() }
            }
            FamilyCmd::CocktailParty { n } => FamilySpec::CocktailParty { n: *n },
            FamilyCmd::Gp { n, k } => FamilySpec::Gp { n: *n, k: *k },
            FamilyCmd::MoebiusLadder { n } => FamilySpec::MoebiusLadder { n: *n },
            FamilyCmd::Odd { n } => FamilySpec::Odd { n: *n },
            FamilyCmd::DoubleOdd { n } => FamilySpec::DoubleOdd { n: *n },
            FamilyCmd::Debruijn { m, n } => FamilySpec::DeBruijn { m: *m, n: *n },
            FamilyCmd::Kautz { m, n } => FamilySpec::Kautz { m: *m, n: *n },
            FamilyCmd::Ccc { n } => FamilySpec::Ccc { n: *n },
            FamilyCmd::Butterfly { n } => FamilySpec::Butterfly { n: *n },
            FamilyCmd::Fibonacci { n } => FamilySpec::Fibonacci { n: *n },
            FamilyCmd::Lucas { n } => FamilySpec::Lucas { n: *n },
            FamilyCmd::Indel { i, n } => FamilySpec::Indel { i: *i, n: *n },
            FamilyCmd::Levenshtein { i, n } => FamilySpec::Levenshtein { i: *i, n: *n },
            FamilyCmd::Ulam { n } => FamilySpec::Ulam { n: *n },
            FamilyCmd::Star { n } => FamilySpec::CayleyStar { n: *n },
            FamilyCmd::Bubble { n } => FamilySpec::CayleyBubble { n: *n },
            FamilyCmd::Pancake { n } => FamilySpec::CayleyPancake { n: *n },
            FamilyCmd::SosFull { n } => FamilySpec::CayleySosFull { n: *n },
            FamilyCmd::SosPartial { n } => FamilySpec::CayleySosPartial { n: *n },
            FamilyCmd::Gcr { n, chords } => FamilySpec::Gcr { n: *n, chords: chords.clone() },
            FamilyCmd::HoffmanSingleton => FamilySpec::HoffmanSingleton,
            FamilyCmd::Shrikhande => FamilySpec::Shrikhande,
            FamilyCmd::Dyck => FamilySpec::Dyck,
            FamilyCmd::Klein => FamilySpec::KleinCubic,
            FamilyCmd::K444 => FamilySpec::K444,
            FamilyCmd::Platonic { solid } => FamilySpec::Platonic { solid: *solid },
        }
    }
}

#[derive(Args)]
struct EmbedArgs {
    /// Graph JSON file.
    graph: PathBuf,
    /// Truncation level (default: the diameter, i.e. a full embedding).
    #[arg(long)]
    s: Option<usize>,
    /// Enumerate and count all inequivalent embeddings.
    #[arg(long)]
    all: bool,
    /// Collapse to a scale-1 (hypercube) addressing when possible.
    #[arg(long)]
    scale1: bool,
    /// Write the addressing CSV here on success.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Append a result record to this JSONL file.
    #[arg(long)]
    results: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Wall-clock budget in seconds.
    #[arg(long, default_value_t = 60)]
    budget_seconds: u64,
    /// Search-node budget per subtree.
    #[arg(long, default_value_t = 100_000_000)]
    node_budget: u64,
}

#[derive(Args)]
struct VerifyArgs {
    graph: PathBuf,
    addressing: PathBuf,
    #[arg(long, default_value_t = 1)]
    scale: u8,
    /// Truncation level (default: the diameter).
    #[arg(long)]
    s: Option<usize>,
}

#[derive(Args)]
struct GonalArgs {
    graph: PathBuf,
    /// Largest inequality order to test: checks 1..=k. k = 3 scans all
    /// 7-point configurations and is costly.
    #[arg(long, default_value_t = 2)]
    k: usize,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    n_min: usize,
    #[arg(long)]
    n_max: usize,
    /// Chord pattern: every odd tuple up to k-max, adjacent odd pairs
    /// (a, a+2), or the two conjectured pairs around n/2.
    #[arg(long, default_value = "conjecture")]
    mode: SweepMode,
    #[arg(long, default_value_t = 2)]
    k_max: usize,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long)]
    results: Option<PathBuf>,
    #[arg(long, default_value_t = 60)]
    budget_seconds: u64,
    #[arg(long, default_value_t = 100_000_000)]
    node_budget: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum SweepMode {
    All,
    Adjacent,
    Conjecture,
}

#[derive(Args)]
struct InfoArgs {
    graph: PathBuf,
}

/// One completed embedding task, as appended to results JSONL files.
#[derive(Debug, Serialize)]
pub struct ResultRecord {
    pub graph: String,
    pub s: usize,
    pub scale: u8,
    pub status: String,
    pub m: Option<usize>,
    pub count: usize,
    pub elapsed_ms: u64,
    pub nodes: u64,
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Embed(args) => cmd_embed(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Gonal(args) => cmd_gonal(args),
        Command::SweepGcr(args) => cmd_sweep_gcr(args),
        Command::Info(args) => cmd_info(args),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

type CmdResult = Result<i32, Box<dyn std::error::Error>>;

fn cmd_gen(args: GenArgs) -> CmdResult {
    let g = families::make(&args.family.spec())?;
    let text = json::to_json(&g);
    match &args.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    eprintln!("{}: {} vertices, {} edges", g.name, g.n, g.edge_count());
    Ok(0)
}

/// Pick the embedding to report: the smallest host dimension, collapsed
/// to scale 1 when requested and possible.
fn select_embedding(out: &SearchOutcome, scale1: bool) -> Option<(Embedding, u8)> {
    let mut best: Option<(Embedding, u8)> = None;
    for sol in &out.solutions {
        let cand = if scale1 {
            match embed::collapse_to_scale1(&sol.embedding, &sol.root) {
                Ok(c) => (c, 1),
                Err(_) => (sol.embedding.clone(), 2),
            }
        } else {
            (sol.embedding.clone(), 2)
        };
        let better = match &best {
            None => true,
            // prefer requested scale, then smaller dimension
            Some((b, bs)) => match (scale1, cand.1, *bs) {
                (true, 1, 2) => true,
                (true, 2, 1) => false,
                _ => cand.0.m < b.m,
            },
        };
        if better {
            best = Some(cand);
        }
    }
    best
}

fn append_record(path: &Option<PathBuf>, record: &ResultRecord) -> std::io::Result<()> {
    if let Some(path) = path {
        let mut f = OpenOptions::new().create(true).append(true).open(path)?;
        writeln!(f, "{}", serde_json::to_string(record).expect("record serializes"))?;
    }
    Ok(())
}

fn embed_opts(all: bool, jobs: usize, budget_seconds: u64, node_budget: u64) -> EmbedOptions {
    EmbedOptions {
        first_only: !all,
        node_budget,
        time_budget: (budget_seconds > 0).then(|| Duration::from_secs(budget_seconds)),
        jobs,
    }
}

fn cmd_embed(args: EmbedArgs) -> CmdResult {
    let g = json::read_graph(&args.graph)?;
    let opts = embed_opts(args.all, args.jobs, args.budget_seconds, args.node_budget);
    let run = |first_only: bool| -> Result<SearchOutcome, crate::graph::GraphError> {
        if first_only {
            embed::embed(&g, args.s, &opts)
        } else {
            embed::enumerate(&g, args.s, &opts)
        }
    };
    let mut out = run(!args.all)?;
    // a collapsible solution may not be the first one found
    if args.scale1
        && out.status.is_positive()
        && !args.all
        && select_embedding(&out, true).is_none_or(|(_, sc)| sc != 1)
    {
        out = run(false)?;
    }
    let selected = select_embedding(&out, args.scale1);
    let (m, scale) = selected
        .as_ref()
        .map(|(e, sc)| (Some(e.m), *sc))
        .unwrap_or((None, 2));

    if let Some((emb, _)) = &selected {
        // every reported embedding re-verifies through the certificate
        // path before anything is written
        let addressing = certify::emit_addressing(emb, &g);
        let report = certify::verify_certificate(&g, &addressing, emb.scale, emb.s)?;
        if !report.pass {
            return Err(format!(
                "internal error: search emitted an addressing the certifier rejects ({:?})",
                report.violations.first()
            )
            .into());
        }
        if let Some(path) = &args.out {
            std::fs::write(path, addressing.to_csv())?;
        }
    }
    let record = ResultRecord {
        graph: g.name.clone(),
        s: out.s,
        scale,
        status: out.status.to_string(),
        m,
        count: out.count,
        elapsed_ms: out.stats.elapsed.as_millis() as u64,
        nodes: out.stats.nodes,
    };
    append_record(&args.results, &record)?;
    println!("{}", serde_json::to_string(&record).expect("record serializes"));
    Ok(match out.status {
        Status::Embeddable | Status::TrEmbeddable(_) => 0,
        Status::NotEmbeddable | Status::NotTrEmbeddable(_) => 1,
        Status::Unknown => 2,
    })
}

fn cmd_verify(args: VerifyArgs) -> CmdResult {
    let g = json::read_graph(&args.graph)?;
    let addressing = certify::load_addressing(&args.addressing)?;
    let dm = all_pairs_distances(&g)?;
    let s = args.s.unwrap_or(dm.diameter);
    let report = certify::verify_certificate(&g, &addressing, args.scale, s)?;
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    Ok(if report.pass { 0 } else { 1 })
}

fn cmd_gonal(args: GonalArgs) -> CmdResult {
    let g = json::read_graph(&args.graph)?;
    let dm = all_pairs_distances(&g)?;
    let mut violated = false;
    for k in 1..=args.k {
        match gonal::gonal_check(&dm, k)? {
            Some(witness) => {
                violated = true;
                let (pos, neg) = witness.labeled(&g);
                let doc = serde_json::json!({
                    "k": witness.k,
                    "positive": pos,
                    "negative": neg,
                    "lhs": witness.lhs,
                    "rhs": witness.rhs,
                });
                println!("{doc}");
            }
            None => {
                eprintln!("{}-gonal: pass", 2 * k + 1);
            }
        }
    }
    let verdict = gonal::avis_partial_cube_test(&g, &dm);
    eprintln!(
        "partial cube: {} ({})",
        verdict.is_partial_cube, verdict.reason
    );
    Ok(if violated { 1 } else { 0 })
}

/// Chord tuples for one ring size, per sweep mode.
fn sweep_chords(n: usize, mode: SweepMode, k_max: usize) -> Vec<Vec<usize>> {
    let odds: Vec<usize> = (3..n).step_by(2).collect();
    match mode {
        SweepMode::Adjacent => odds
            .iter()
            .filter(|&&a| a + 2 <= n - 1)
            .map(|&a| vec![a, a + 2])
            .collect(),
        SweepMode::Conjecture => {
            let h = n / 2;
            let mut out = Vec::new();
            if h >= 6 {
                out.push(vec![h - 3, h - 1]);
            }
            if h + 3 <= n - 1 {
                out.push(vec![h + 1, h + 3]);
            }
            out.retain(|c| c.iter().all(|a| a % 2 == 1));
            out
        }
        SweepMode::All => {
            let mut out: Vec<Vec<usize>> = Vec::new();
            let mut stack: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), 0)];
            while let Some((prefix, from)) = stack.pop() {
                for (i, &a) in odds.iter().enumerate().skip(from) {
                    let mut next = prefix.clone();
                    next.push(a);
                    if next.len() < k_max {
                        stack.push((next.clone(), i + 1));
                    }
                    out.push(next);
                }
            }
            out.sort();
            out
        }
    }
}

fn cmd_sweep_gcr(args: SweepArgs) -> CmdResult {
    if args.n_min % 2 != 0 || args.n_max % 2 != 0 || args.n_min > args.n_max {
        return Err("sweep requires an even range n-min..=n-max".into());
    }
    let mut instances = Vec::new();
    for n in (args.n_min..=args.n_max).step_by(2) {
        for chords in sweep_chords(n, args.mode, args.k_max) {
            instances.push((n, chords));
        }
    }
    instances.sort();
    instances.dedup();

    let opts = embed_opts(false, 1, args.budget_seconds, args.node_budget);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs.max(1))
        .build()?;
    let tasks: Vec<Option<(ResultRecord, bool)>> = pool.install(|| {
        use rayon::prelude::*;
        instances
            .par_iter()
            .map(|(n, chords)| sweep_instance(*n, chords, &opts))
            .collect()
    });

    let mut embeddable = Vec::new();
    for ((n, chords), task) in instances.iter().zip(tasks) {
        match task {
            None => {
                eprintln!(
                    "excluded GCR({n};{}): disconnected or collapsing chords",
                    chords.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(",")
                );
            }
            Some((record, collapsed)) => {
                append_record(&args.results, &record)?;
                println!("{}", serde_json::to_string(&record).expect("record serializes"));
                if record.status.contains("not-") || record.status == "unknown" {
                    continue;
                }
                embeddable.push((record.graph.clone(), record.m, collapsed));
            }
        }
    }
    eprintln!("--- embeddable instances ---");
    for (name, m, collapsed) in &embeddable {
        let host = match (m, collapsed) {
            (Some(m), true) => format!("H_{m}"),
            (Some(m), false) => format!("1/2 H_{m}"),
            (None, _) => "?".into(),
        };
        eprintln!("{name} -> {host}");
    }
    Ok(0)
}

/// Run one sweep instance at full truncation, preferring the scale-1
/// collapse; `None` marks an excluded chord set.
fn sweep_instance(
    n: usize,
    chords: &[usize],
    opts: &EmbedOptions,
) -> Option<(ResultRecord, bool)> {
    let g = families::gcr(n, chords).ok()?;
    // a chord set is degenerate when the collapsed simple graph loses
    // chord edges or connectivity
    if g.edge_count() != n + chords.len() * n / 2 || !g.is_connected() {
        return None;
    }
    let out = embed::embed(&g, None, opts).ok()?;
    let mut m = None;
    let mut scale = 2;
    let mut collapsed = false;
    if let Some((emb, sc)) = select_embedding(&out, true) {
        m = Some(emb.m);
        scale = sc;
        collapsed = sc == 1;
    }
    let record = ResultRecord {
        graph: g.name.clone(),
        s: out.s,
        scale,
        status: out.status.to_string(),
        m,
        count: out.count,
        elapsed_ms: out.stats.elapsed.as_millis() as u64,
        nodes: out.stats.nodes,
    };
    Some((record, collapsed))
}

fn cmd_info(args: InfoArgs) -> CmdResult {
    let g = json::read_graph(&args.graph)?;
    let degrees: Vec<usize> = (0..g.n).map(|v| g.degree(v)).collect();
    let bip = is_bipartite(&g).is_bipartite();
    let doc = serde_json::json!({
        "name": g.name,
        "n": g.n,
        "edges": g.edge_count(),
        "min_degree": degrees.iter().min(),
        "max_degree": degrees.iter().max(),
        "bipartite": bip,
        "girth": g.girth(),
        "connected": g.is_connected(),
        "diameter": all_pairs_distances(&g).ok().map(|dm| dm.diameter),
    });
    println!("{}", serde_json::to_string_pretty(&doc).expect("doc serializes"));
    Ok(0)
}
