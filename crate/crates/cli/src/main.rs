//! `distdom`: exact distance domination numbers, family constructions and
//! recognisers, enumeration, and the verification suite.
//!
//! Exit status: 0 success, 1 domain or input error, 2 a verified statement
//! was violated, 3 the conjecture scan found a counterexample, 64 usage
//! error.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use distdom::constructions::{
    self, bipartite_coronas, corona, counterexample_gnkd, d_subdivision, domination_deficit_family,
    joined_subdivided_stars, leaf_deficit_family, spider, tree_coronas, zeta1_members,
    FamilyMember,
};
use distdom::enumeration::{EnumerationSpace, SpaceKind};
use distdom::graph::{detect_format, parse_graphs, serialize_graph, GraphFormat};
use distdom::harness::{self, check_bipartite_conjecture, Report, ScanOptions, SuiteConfig};
use distdom::recognizers::{
    in_domination_deficit_family, in_leaf_deficit_family, in_zeta1, is_bipartite_corona, is_corona,
    is_tree_corona,
};
use distdom::solver::{gamma, level_partition, verify_partition, DominationQuery};
use distdom::{Error, Graph};

const EXIT_DOMAIN: u8 = 1;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "distdom", version, about = "Distance domination toolkit", long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact d-distance p-packing domination number with a least witness.
    Gamma(GammaArgs),
    /// Split a connected bipartite graph into d+1 independent d-distance dominating sets.
    Partition(PartitionArgs),
    /// Build a named graph or family.
    Construct(ConstructArgs),
    /// Decide family membership for each input graph, one JSON line per graph.
    Recognize(RecognizeArgs),
    /// Stream every tree or connected bipartite graph of one order.
    Enumerate(EnumerateArgs),
    /// Run the verification suite and print a TSV summary.
    Verify(VerifyArgs),
    /// Scan connected bipartite graphs for the conjectured equality characterisation.
    Conjecture(ConjectureArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edgelist,
    Graph6,
}

impl From<Format> for GraphFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Edgelist => GraphFormat::EdgeList,
            Format::Graph6 => GraphFormat::Graph6,
        }
    }
}

#[derive(Args)]
struct InputArgs {
    /// Graph file; standard input when omitted or `-`.
    input: Option<PathBuf>,
    /// Input format; detected from the extension or content when omitted.
    #[arg(long)]
    format: Option<Format>,
}

#[derive(Args)]
struct GammaArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, default_value_t = 1)]
    d: usize,
    #[arg(long, default_value_t = 1)]
    p: usize,
}

#[derive(Args)]
struct PartitionArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, default_value_t = 1)]
    d: usize,
}

#[derive(Args)]
struct ConstructArgs {
    #[command(subcommand)]
    what: Construct,
    /// Output format; edge list for single graphs and graph6 for families by default.
    #[arg(long, global = true)]
    output_format: Option<Format>,
}

#[derive(Subcommand)]
enum Construct {
    Path {
        #[arg(long)]
        n: usize,
    },
    Cycle {
        #[arg(long)]
        n: usize,
    },
    Star {
        #[arg(long)]
        t: usize,
    },
    Complete {
        #[arg(long)]
        n: usize,
    },
    CompleteBipartite {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
    },
    DoubleStar {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
    },
    /// Attach a path on d vertices to every vertex of the base graph.
    Corona {
        /// Base graph as `kind:args`, e.g. `path:3`, `cycle:6`, `star:3`,
        /// `complete:4`, `complete-bipartite:2,3`, `double-star:1,2`.
        #[arg(long)]
        h: String,
        #[arg(long)]
        d: usize,
    },
    /// Replace every edge of the base graph by a path with d inner vertices.
    Subdivision {
        #[arg(long)]
        h: String,
        #[arg(long)]
        d: usize,
    },
    /// Complete graph K_n with k pendant paths on d vertices at every vertex.
    Gnkd {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
    },
    /// Two subdivided stars with joined centres.
    JoinedStars {
        #[arg(long)]
        t1: usize,
        #[arg(long)]
        t2: usize,
        #[arg(long)]
        d: usize,
    },
    /// Paths of the given orders attached to one centre.
    Spider {
        #[arg(long, value_delimiter = ',')]
        legs: Vec<usize>,
    },
    /// All members of the recursive leaf-augmented tree family up to an order.
    Zeta1 {
        #[arg(long)]
        max_order: usize,
    },
    /// All members of a corona or leaf-core family up to an order.
    Family {
        #[arg(long)]
        family: FamilyName,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        max_order: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    #[value(name = "T")]
    T,
    #[value(name = "B")]
    B,
    #[value(name = "F")]
    F,
    #[value(name = "Fprime")]
    Fprime,
}

#[derive(Clone, Copy, ValueEnum)]
enum RecognizeFamily {
    #[value(name = "corona")]
    Corona,
    #[value(name = "zeta1")]
    Zeta1,
    #[value(name = "T")]
    T,
    #[value(name = "B")]
    B,
    #[value(name = "F")]
    F,
    #[value(name = "Fprime")]
    Fprime,
}

#[derive(Args)]
struct RecognizeArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long)]
    family: RecognizeFamily,
    #[arg(long, default_value_t = 1)]
    d: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Trees,
    ConnectedBipartite,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    kind: Kind,
    #[arg(long)]
    n: usize,
    /// Keep only graphs with exactly this many leaves.
    #[arg(long)]
    leaves: Option<usize>,
    /// Keep only graphs with diameter in `MIN:MAX`.
    #[arg(long)]
    diameter: Option<String>,
    /// Emit only shard `I` of `K`, written `I/K`.
    #[arg(long)]
    shard: Option<String>,
    #[arg(long, default_value = "graph6")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Config file, or `default`.
    #[arg(long, default_value = "default")]
    config: String,
    /// Directory for one JSON report per check and radius.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print every report as one JSON array instead of the TSV summary.
    #[arg(long)]
    json: bool,
    /// Override the configured shard count.
    #[arg(long)]
    shards: Option<usize>,
    /// Record wall time per report.
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct ConjectureArgs {
    #[arg(long, default_value_t = 2)]
    d: usize,
    #[arg(long, default_value_t = 8)]
    n_max: usize,
    #[arg(long, default_value_t = 1)]
    shards: usize,
    /// Print the full JSON report instead of the TSV summary.
    #[arg(long)]
    json: bool,
}

/// A failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::Config(_)) {
            EXIT_USAGE
        } else {
            EXIT_DOMAIN
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        // A closed downstream pipe is a normal way to stop a stream.
        let code = if e.kind() == io::ErrorKind::BrokenPipe {
            0
        } else {
            EXIT_DOMAIN
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let mut out = io::stdout().lock();
    let result = match cli.command {
        Command::Gamma(a) => cmd_gamma(a, &mut out),
        Command::Partition(a) => cmd_partition(a, &mut out),
        Command::Construct(a) => cmd_construct(a, &mut out),
        Command::Recognize(a) => cmd_recognize(a, &mut out),
        Command::Enumerate(a) => cmd_enumerate(a, &mut out),
        Command::Verify(a) => cmd_verify(a, &mut out),
        Command::Conjecture(a) => cmd_conjecture(a, &mut out),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            let _ = out.flush();
            if f.code == 0 {
                return ExitCode::SUCCESS;
            }
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read_graphs(args: &InputArgs) -> Result<Vec<Graph>, Failure> {
    let (text, ext) = match &args.input {
        Some(p) if p != Path::new("-") => {
            let text = fs::read_to_string(p).map_err(|e| Failure {
                code: EXIT_DOMAIN,
                message: format!("cannot read {}: {e}", p.display()),
            })?;
            (
                text,
                p.extension().and_then(|e| e.to_str()).map(str::to_owned),
            )
        }
        _ => {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text)?;
            (text, None)
        }
    };
    let format = match (args.format, ext.as_deref()) {
        (Some(f), _) => f.into(),
        (None, Some("g6")) => GraphFormat::Graph6,
        (None, Some("edges")) => GraphFormat::EdgeList,
        _ => detect_format(&text),
    };
    let graphs = parse_graphs(&text, format)?;
    if graphs.is_empty() {
        return Err(Failure {
            code: EXIT_DOMAIN,
            message: "no graph in input".into(),
        });
    }
    Ok(graphs)
}

fn cmd_gamma(a: GammaArgs, out: &mut impl Write) -> Outcome {
    let q = DominationQuery::new(a.d, a.p)?;
    for g in read_graphs(&a.input)? {
        let w = gamma(&g, q)?;
        match w.value.finite() {
            Some(_) => writeln!(out, "{} {:?}", w.value, w.witness)?,
            None => writeln!(out, "inf")?,
        }
    }
    Ok(0)
}

fn cmd_partition(a: PartitionArgs, out: &mut impl Write) -> Outcome {
    for g in read_graphs(&a.input)? {
        let p = level_partition(&g, a.d)?;
        for part in &p.parts {
            writeln!(out, "{part:?}")?;
        }
        writeln!(out, "verified: {}", verify_partition(&g, &p, a.d))?;
    }
    Ok(0)
}

/// Parses a base-graph spec such as `path:3` or `complete-bipartite:2,3`.
fn base_graph(spec: &str) -> Result<Graph, Failure> {
    let (kind, args) = spec.split_once(':').unwrap_or((spec, ""));
    let nums: Vec<usize> = args
        .split(',')
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| usage(format!("bad number {s:?} in {spec:?}")))
        })
        .collect::<Result<_, _>>()?;
    let arity = |k: usize| {
        if nums.len() == k {
            Ok(())
        } else {
            Err(usage(format!("{kind} takes {k} argument(s), got {spec:?}")))
        }
    };
    let g = match kind {
        "path" => arity(1).and_then(|_| Ok(constructions::path(nums[0])?)),
        "cycle" => arity(1).and_then(|_| Ok(constructions::cycle(nums[0])?)),
        "star" => arity(1).and_then(|_| Ok(constructions::star(nums[0])?)),
        "complete" => arity(1).and_then(|_| Ok(constructions::complete(nums[0])?)),
        "complete-bipartite" => {
            arity(2).and_then(|_| Ok(constructions::complete_bipartite(nums[0], nums[1])?))
        }
        "double-star" => arity(2).and_then(|_| Ok(constructions::double_star(nums[0], nums[1])?)),
        other => Err(usage(format!("unknown base graph kind {other:?}"))),
    }?;
    Ok(g)
}

fn write_graphs(out: &mut impl Write, graphs: &[Graph], format: GraphFormat) -> io::Result<()> {
    for g in graphs {
        out.write_all(serialize_graph(g, format).as_bytes())?;
    }
    Ok(())
}

fn cmd_construct(a: ConstructArgs, out: &mut impl Write) -> Outcome {
    let single = |g: Graph| Ok::<_, Failure>(vec![g]);
    let members = |m: Vec<FamilyMember>| Ok::<_, Failure>(m.into_iter().map(|m| m.graph).collect());
    let (graphs, is_family) = match a.what {
        Construct::Path { n } => (single(constructions::path(n)?)?, false),
        Construct::Cycle { n } => (single(constructions::cycle(n)?)?, false),
        Construct::Star { t } => (single(constructions::star(t)?)?, false),
        Construct::Complete { n } => (single(constructions::complete(n)?)?, false),
        Construct::CompleteBipartite { r, s } => {
            (single(constructions::complete_bipartite(r, s)?)?, false)
        }
        Construct::DoubleStar { r, s } => (single(constructions::double_star(r, s)?)?, false),
        Construct::Corona { h, d } => (single(corona(&base_graph(&h)?, d)?.0)?, false),
        Construct::Subdivision { h, d } => (single(d_subdivision(&base_graph(&h)?, d))?, false),
        Construct::Gnkd { n, k, d } => (single(counterexample_gnkd(n, k, d)?)?, false),
        Construct::JoinedStars { t1, t2, d } => {
            (single(joined_subdivided_stars(t1, t2, d)?)?, false)
        }
        Construct::Spider { legs } => (single(spider(&legs)?)?, false),
        Construct::Zeta1 { max_order } => (members(zeta1_members(max_order)?)?, true),
        Construct::Family {
            family,
            d,
            max_order,
        } => {
            let list = match family {
                FamilyName::T => tree_coronas(max_order, d)?,
                FamilyName::B => bipartite_coronas(max_order, d)?,
                FamilyName::F => leaf_deficit_family(max_order, d)?,
                FamilyName::Fprime => domination_deficit_family(max_order, d)?,
            };
            (members(list)?, true)
        }
    };
    let format = a
        .output_format
        .map(GraphFormat::from)
        .unwrap_or(if is_family {
            GraphFormat::Graph6
        } else {
            GraphFormat::EdgeList
        });
    write_graphs(out, &graphs, format)?;
    Ok(0)
}

fn cmd_recognize(a: RecognizeArgs, out: &mut impl Write) -> Outcome {
    for g in read_graphs(&a.input)? {
        let line = match a.family {
            RecognizeFamily::Corona => match is_corona(&g, a.d)? {
                Some(c) => json!({ "member": true, "certificate": c }),
                None => json!({ "member": false }),
            },
            RecognizeFamily::T | RecognizeFamily::B => {
                let member = match a.family {
                    RecognizeFamily::T => is_tree_corona(&g, a.d)?,
                    _ => is_bipartite_corona(&g, a.d)?,
                };
                match is_corona(&g, a.d)?.filter(|_| member) {
                    Some(c) => json!({ "member": true, "certificate": c }),
                    None => json!({ "member": false }),
                }
            }
            RecognizeFamily::Zeta1 => json!({ "member": in_zeta1(&g)? }),
            RecognizeFamily::F => json!({ "member": in_leaf_deficit_family(&g, a.d)? }),
            RecognizeFamily::Fprime => json!({ "member": in_domination_deficit_family(&g, a.d)? }),
        };
        writeln!(out, "{line}")?;
    }
    Ok(0)
}

fn parse_pair(text: &str, sep: char, what: &str) -> Result<(usize, usize), Failure> {
    let bad = || usage(format!("{what} expects A{sep}B, got {text:?}"));
    let (a, b) = text.split_once(sep).ok_or_else(bad)?;
    Ok((
        a.trim().parse().map_err(|_| bad())?,
        b.trim().parse().map_err(|_| bad())?,
    ))
}

fn cmd_enumerate(a: EnumerateArgs, out: &mut impl Write) -> Outcome {
    let kind = match a.kind {
        Kind::Trees => SpaceKind::Trees,
        Kind::ConnectedBipartite => SpaceKind::ConnectedBipartite,
    };
    let mut space = EnumerationSpace::new(kind, a.n)?;
    if let Some(l) = a.leaves {
        space = space.with_leaves(l);
    }
    if let Some(range) = &a.diameter {
        let (lo, hi) = parse_pair(range, ':', "--diameter")?;
        space = space.with_diameter(lo, hi);
    }
    let items = match &a.shard {
        None => space.enumerate()?,
        Some(spec) => {
            let (i, k) = parse_pair(spec, '/', "--shard")?;
            if k == 0 || i >= k {
                return Err(usage(format!("--shard needs 0 <= I < K, got {spec:?}")));
            }
            space.shard(k)?.swap_remove(i)
        }
    };
    let format = GraphFormat::from(a.format);
    for item in items {
        match format {
            GraphFormat::Graph6 => writeln!(out, "{}", item.code)?,
            GraphFormat::EdgeList => {
                out.write_all(serialize_graph(&item.graph, format).as_bytes())?
            }
        }
    }
    Ok(0)
}

fn write_reports(dir: &Path, reports: &[Report]) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    for r in reports {
        fs::write(
            dir.join(format!("{}.json", r.file_stem())),
            r.to_json() + "\n",
        )?;
    }
    Ok(())
}

fn cmd_verify(a: VerifyArgs, out: &mut impl Write) -> Outcome {
    let mut config = if a.config == "default" {
        SuiteConfig::default()
    } else {
        let text = fs::read_to_string(&a.config).map_err(|e| Failure {
            code: EXIT_DOMAIN,
            message: format!("cannot read {}: {e}", a.config),
        })?;
        SuiteConfig::parse(&text)?
    };
    if let Some(s) = a.shards {
        if s == 0 {
            return Err(usage("--shards must be at least 1"));
        }
        config.shards = s;
    }
    config.timings |= a.timings;
    let reports = harness::run_suite(&config)?;
    if let Some(dir) = &a.out {
        write_reports(dir, &reports)?;
    }
    if a.json {
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&reports).expect("reports serialise")
        )?;
    } else {
        out.write_all(harness::summary_tsv(&reports).as_bytes())?;
    }
    Ok(harness::exit_status(&reports) as u8)
}

fn cmd_conjecture(a: ConjectureArgs, out: &mut impl Write) -> Outcome {
    if a.shards == 0 {
        return Err(usage("--shards must be at least 1"));
    }
    let opts = ScanOptions {
        shards: a.shards,
        timings: false,
    };
    let report = check_bipartite_conjecture(a.d, a.n_max, opts)?;
    let reports = [report];
    if a.json {
        writeln!(out, "{}", reports[0].to_json())?;
    } else {
        out.write_all(harness::summary_tsv(&reports).as_bytes())?;
    }
    Ok(harness::exit_status(&reports) as u8)
}
