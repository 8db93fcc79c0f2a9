use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use badedge::closed_forms::{
    corona_formula, defect_poly_complete, defect_poly_cycle, join_bound, union_bound,
};
use badedge::random::random_connected;
use badedge::solver::{
    enumerate_oracle_with_cap, heuristic_solve, solve_bk, ClaimedValue, SolveReport,
};
use badedge::verify::{self, bad_edge_histogram, Suite, VerifyConfig};
use badedge::{
    chromatic_number_with_cap, io, BoundOp, BoundOptions, Error, FamilyExpr, Graph, RuleMode,
    SolverConfig,
};

#[derive(Parser)]
#[command(name = "badedge", version, about = "Near proper colourings: minimum bad edges with k colours")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimum number of bad edges and a lexicographically smallest witness.
    Solve(SolveArgs),
    /// Like `solve`, and also count the optimal colourings.
    Count(SolveArgs),
    /// Closed-form family value next to the exact value.
    Family(FamilyArgs),
    /// Defect polynomial value: colourings with exactly `--bad` bad edges.
    Poly(PolyArgs),
    /// Union, join or corona bound report for `union(a,b)`, `join(a,b)` or `corona(a,b)`.
    Bounds(BoundsArgs),
    /// Check closed forms and the solver against exhaustive enumeration.
    Verify(VerifyArgs),
    /// Write a family graph or a seeded random graph as an edge list.
    Gen(GenArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Edge-list or DIMACS file.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Family expression, e.g. `cycle:5` or `join(complete:3,complete:3)`.
    #[arg(long)]
    family: Option<String>,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long)]
    k: usize,
    #[arg(long, value_enum, default_value_t = Rule::OneClass)]
    rule: Rule,
    /// Allow colourings that leave some of the k colours unused.
    #[arg(long)]
    allow_unused: bool,
    /// Node budget for branch and bound, or `k^n` cap with `--oracle`.
    #[arg(long)]
    cap: Option<u64>,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Reject disconnected input graphs.
    #[arg(long)]
    require_connected: bool,
    /// Greedy plus local search only; the result is not guaranteed optimal.
    #[arg(long, conflicts_with = "oracle")]
    heuristic: bool,
    /// Exhaustive enumeration instead of branch and bound.
    #[arg(long)]
    oracle: bool,
    /// Write the witness colouring as Graphviz DOT.
    #[arg(long)]
    dot: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long)]
    family: String,
    #[arg(long)]
    k: usize,
    #[arg(long, value_enum, default_value_t = Rule::OneClass)]
    rule: Rule,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct PolyArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long)]
    lambda: usize,
    /// Number of bad edges.
    #[arg(long, required_unless_present = "k")]
    bad: Option<usize>,
    /// Complete graphs: count colourings with the optimal `k`-colour structure.
    #[arg(long, conflicts_with = "bad")]
    k: Option<usize>,
    /// Cap on `λ^n` for exhaustive counting of graphs without a closed form.
    #[arg(long, default_value_t = 100_000_000)]
    cap: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    family: String,
    #[arg(long)]
    k: usize,
    /// Defaults to unrestricted for joins and one-class otherwise.
    #[arg(long, value_enum)]
    rule: Option<Rule>,
    /// Colour the first operand from the full k-set.
    #[arg(long)]
    relaxed: bool,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    suite: SuiteArg,
    #[arg(long, default_value_t = VerifyConfig::default().seed)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Same as `--format json`.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, conflicts_with_all = ["n", "density"])]
    family: Option<String>,
    /// Vertex count of a random graph.
    #[arg(long, required_unless_present = "family")]
    n: Option<usize>,
    #[arg(long, default_value_t = 0.3)]
    density: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random graphs: build on a random spanning tree.
    #[arg(long)]
    require_connected: bool,
    #[arg(long, value_enum, default_value_t = GraphFormat::EdgeList)]
    format: GraphFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum Rule {
    OneClass,
    Unrestricted,
}

impl From<Rule> for RuleMode {
    fn from(r: Rule) -> Self {
        match r {
            Rule::OneClass => RuleMode::OneClass,
            Rule::Unrestricted => RuleMode::Unrestricted,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Families,
    Poly,
    Bounds,
    Random,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Families => Suite::Families,
            SuiteArg::Poly => Suite::Poly,
            SuiteArg::Bounds => Suite::Bounds,
            SuiteArg::Random => Suite::Random,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    EdgeList,
    Dimacs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            let size_limit = e
                .chain()
                .any(|c| matches!(c.downcast_ref::<Error>(), Some(Error::SizeLimit(_))));
            ExitCode::from(if size_limit { 3 } else { 2 })
        }
    }
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    match command {
        Command::Solve(args) => solve(args, false),
        Command::Count(args) => solve(args, true),
        Command::Family(args) => family(args),
        Command::Poly(args) => poly(args),
        Command::Bounds(args) => bounds(args),
        Command::Verify(args) => verify_cmd(args),
        Command::Gen(args) => gen(args),
    }
}

fn parse_family(text: &str) -> anyhow::Result<FamilyExpr> {
    text.parse()
        .with_context(|| format!("invalid family expression `{text}`"))
}

fn load(source: &Source) -> anyhow::Result<(Graph, Option<FamilyExpr>)> {
    match (&source.input, &source.family) {
        (Some(path), None) => Ok((read_graph(path)?, None)),
        (None, Some(text)) => {
            let expr = parse_family(text)?;
            Ok((expr.graph()?, Some(expr)))
        }
        _ => bail!("give exactly one of --input and --family"),
    }
}

fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    io::parse_graph(&text).with_context(|| format!("in {}", path.display()))
}

fn warn_if_colourable(g: &Graph, k: usize) {
    if let Ok(chi) = chromatic_number_with_cap(g, badedge::DEFAULT_CHROMATIC_CAP) {
        if k >= chi {
            eprintln!("warning: k = {k} is at least the chromatic number {chi}; the minimum is 0");
        }
    }
}

fn solve(args: SolveArgs, count: bool) -> anyhow::Result<ExitCode> {
    let (g, expr) = load(&args.source)?;
    if args.require_connected && !g.is_connected() {
        bail!("input graph is disconnected ({} components)", g.component_count());
    }
    let rule = RuleMode::from(args.rule);
    let surjective = !args.allow_unused;
    warn_if_colourable(&g, args.k);

    let start = Instant::now();
    let result = if args.heuristic {
        heuristic_solve(&g, args.k, rule, surjective)?
    } else if args.oracle {
        let cap = args.cap.unwrap_or(badedge::solver::DEFAULT_ENUMERATION_CAP);
        enumerate_oracle_with_cap(&g, args.k, rule, surjective, cap)?
    } else {
        let mut cfg = SolverConfig {
            count,
            ..SolverConfig::default()
        }
        .with_workers(args.workers);
        if let Some(cap) = args.cap {
            cfg.node_limit = cap;
        }
        solve_bk(&g, args.k, rule, surjective, &cfg)?
    };
    let mut report = SolveReport::new(&g, &result, start.elapsed());
    if !count && !args.oracle {
        report.optimal_count = None;
    }
    if rule == RuleMode::OneClass && surjective {
        report.claim = expr.and_then(|e| e.closed_form(args.k)).map(|f| ClaimedValue {
            min_bad: f.min_bad,
            colouring_count: f.colouring_count.value(),
            count_disputed: f.colouring_count.is_disputed(),
        });
    }

    if let Some(path) = &args.dot {
        fs::write(path, io::to_dot(&g, Some(&result.witness)))
            .with_context(|| format!("cannot write {}", path.display()))?;
    }

    if args.json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        println!("n = {}, m = {}, k = {}, rule = {}{}", report.n, report.m, report.k, rule,
            if surjective { "" } else { ", unused colours allowed" });
        println!("min_bad = {}{}", report.min_bad, if report.exact { "" } else { " (heuristic)" });
        if let Some(c) = report.optimal_count {
            println!("optimal colourings = {c}");
        }
        println!("witness = {}", result.witness.to_line());
        if let Some(claim) = &report.claim {
            match claim.colouring_count {
                Some(c) => println!("closed form: min_bad = {}, count = {c}{}", claim.min_bad,
                    if claim.count_disputed { " (disputed)" } else { "" }),
                None => println!("closed form: min_bad = {}", claim.min_bad),
            }
        }
        println!("elapsed = {} ms", report.elapsed_ms);
    }
    Ok(ExitCode::SUCCESS)
}

fn family(args: FamilyArgs) -> anyhow::Result<ExitCode> {
    let expr = parse_family(&args.family)?;
    let g = expr.graph()?;
    let closed = expr
        .closed_form(args.k)
        .ok_or_else(|| anyhow!("no closed form for {expr} with k = {}", args.k))?;
    let cfg = SolverConfig::counting().with_workers(args.workers);
    let exact = solve_bk(&g, args.k, args.rule.into(), true, &cfg)?;
    let count = exact.optimal_count.expect("counting requested");
    let matches = closed.min_bad == exact.min_bad
        && closed.colouring_count.value().is_none_or(|c| c == count);
    if args.json {
        let v = serde_json::json!({
            "family": expr.to_string(),
            "k": args.k,
            "rule": RuleMode::from(args.rule),
            "paper_claim": closed,
            "min_bad": exact.min_bad,
            "optimal_count": count,
            "witness": exact.witness.assignment(),
            "match": matches,
        });
        println!("{}", serde_json::to_string_pretty(&v)?);
    } else {
        println!("{expr}, k = {}, rule = {}", args.k, RuleMode::from(args.rule));
        match closed.colouring_count.value() {
            Some(c) => println!("closed form: min_bad = {}, count = {c}{}", closed.min_bad,
                if closed.colouring_count.is_disputed() { " (disputed)" } else { "" }),
            None => println!("closed form: min_bad = {}", closed.min_bad),
        }
        println!("exact:       min_bad = {}, count = {count}", exact.min_bad);
        println!("witness = {}", exact.witness.to_line());
        println!("{}", if matches { "match" } else { "mismatch" });
    }
    Ok(ExitCode::SUCCESS)
}

fn poly(args: PolyArgs) -> anyhow::Result<ExitCode> {
    let (g, expr) = load(&args.source)?;
    let value = match (expr, args.bad, args.k) {
        (Some(FamilyExpr::Cycle(n)), Some(j), _) => defect_poly_cycle(n, j, args.lambda)?,
        (Some(FamilyExpr::Complete(n)), _, Some(k)) => defect_poly_complete(n, k, args.lambda)?,
        (_, Some(j), _) => {
            let space = (args.lambda as f64).powi(g.n() as i32);
            if space > args.cap as f64 {
                return Err(Error::SizeLimit(format!(
                    "{}^{} assignments exceed the cap {}",
                    args.lambda,
                    g.n(),
                    args.cap
                ))
                .into());
            }
            bad_edge_histogram(&g, args.lambda).get(j).copied().unwrap_or(0)
        }
        _ => bail!("--k is only supported for complete graphs"),
    };
    if args.json {
        println!("{}", serde_json::json!({ "lambda": args.lambda, "bad": args.bad, "k": args.k, "value": value }));
    } else {
        println!("{value}");
    }
    Ok(ExitCode::SUCCESS)
}

fn bounds(args: BoundsArgs) -> anyhow::Result<ExitCode> {
    let expr = parse_family(&args.family)?;
    let (op, (a, b)) = match &expr {
        FamilyExpr::Union(..) => (BoundOp::Union, expr.operands().unwrap()),
        FamilyExpr::Join(..) => (BoundOp::Join, expr.operands().unwrap()),
        FamilyExpr::Corona(..) => (BoundOp::Corona, expr.operands().unwrap()),
        _ => bail!("bounds needs union(a,b), join(a,b) or corona(a,b)"),
    };
    let (g, h) = (a.graph()?, b.graph()?);
    let mut opts = BoundOptions::for_op(op);
    if let Some(rule) = args.rule {
        opts.rule = rule.into();
    }
    opts.relaxed = args.relaxed;
    opts.solver = opts.solver.with_workers(args.workers);
    let report = match op {
        BoundOp::Union => union_bound(&g, &h, args.k, &opts)?,
        BoundOp::Join => join_bound(&g, &h, args.k, &opts)?,
        BoundOp::Corona => corona_formula(&g, &h, args.k, &opts)?,
    };
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        println!("{expr}, k = {}, t = {}, rule = {}{}", report.k, report.t, report.rule,
            if report.relaxed { ", relaxed" } else { "" });
        if report.swapped {
            println!("operands swapped so the first has the smaller chromatic number");
        }
        println!("left:  n = {}, m = {}, chi = {}, b = {}", report.left.n, report.left.m,
            report.left.chromatic, report.left_bad);
        println!("right: n = {}, m = {}, chi = {}, b = {}", report.right.n, report.right.m,
            report.right.chromatic, report.right_bad);
        println!("cross = {}", report.cross);
        if let Some(theta) = report.theta_star {
            println!("theta* = {theta}");
        }
        match report.bound {
            Some(b) => println!("formula = {b}"),
            None => println!("formula = none"),
        }
        println!("exact = {}", report.exact);
        if let Some(s) = report.slack {
            println!("difference = {s}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verify_cmd(args: VerifyArgs) -> anyhow::Result<ExitCode> {
    let cfg = VerifyConfig {
        seed: args.seed,
        workers: args.workers,
        ..VerifyConfig::default()
    };
    let report = verify::run(args.suite.into(), &cfg)?;
    if args.json || args.format == Format::Json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        print!("{}", report.to_table());
    }
    Ok(if report.unflagged_mismatches() > 0 { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn gen(args: GenArgs) -> anyhow::Result<ExitCode> {
    let g = match (&args.family, args.n) {
        (Some(text), _) => parse_family(text)?.graph()?,
        (None, Some(n)) => {
            if !(0.0..=1.0).contains(&args.density) {
                bail!("--density must lie in [0, 1]");
            }
            eprintln!("seed: {}", args.seed);
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            if args.require_connected {
                random_connected(&mut rng, n, args.density)
            } else {
                let edges: Vec<(usize, usize)> = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .filter(|_| rng.gen_bool(args.density))
                    .collect();
                Graph::new(n, edges)?
            }
        }
        (None, None) => bail!("give --family or --n"),
    };
    match args.format {
        GraphFormat::EdgeList => print!("{}", io::write_edge_list(&g)),
        GraphFormat::Dimacs => print!("{}", io::write_dimacs(&g)),
    }
    Ok(ExitCode::SUCCESS)
}
