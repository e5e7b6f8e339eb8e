use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use zdg_core::cycles::{
    check_bondy_edge_count, check_diameter_condition, check_fan_condition, check_line_pancyclic_condition,
    cycle_spectrum, find_cut_certificate, girth, is_bipancyclic, is_hamiltonian, is_pancyclic, is_r_graph,
    CertificateStrategy, CycleVerdict, Girth, HamiltonVerdict, DEFAULT_BUDGET,
};
use zdg_core::graph::{from_json, recognize, stats, to_dot, to_json, zero_divisor_graph, Graph, Transform};
use zdg_core::ring::{make_ring, RingKind, RingSpec};
use zdg_core::suite::{
    grid, render_table, run_all, run_check, run_point, CheckId, Conclusion, Fault, Options, ParamValue, Params,
    Profile, SuiteReport, VerificationReport,
};
use zdg_core::Error;

/// Rings with more elements than this are rejected before any graph is built.
const MAX_RING_ORDER: u64 = 40_000;

#[derive(Parser)]
#[command(name = "zdg", version, about = "Zero-divisor graphs of Z_n and Z_n[i] and their cycle structure")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ring facts.
    Ring {
        #[command(subcommand)]
        action: RingAction,
    },
    /// Build or export a graph.
    Graph {
        #[command(subcommand)]
        action: GraphAction,
    },
    /// Run analyses on one graph.
    Analyze(AnalyzeArgs),
    /// Run one check at given parameters, or over its profile grid.
    Verify(VerifyArgs),
    /// Run every check over the profile grid.
    VerifyAll(VerifyAllArgs),
}

#[derive(Subcommand)]
enum RingAction {
    /// Factorization, prime classes and element counts.
    Info(RingArgs),
}

#[derive(Subcommand)]
enum GraphAction {
    /// Build a graph and print it (text by default).
    Build(GraphArgs),
    /// Build a graph and print it as JSON by default.
    Export(GraphArgs),
}

#[derive(Args)]
struct RingArgs {
    #[arg(long)]
    n: u64,
    #[arg(long, value_enum, default_value_t = KindArg::Zn)]
    kind: KindArg,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct Source {
    /// Modulus of the ring.
    #[arg(long, required_unless_present = "input")]
    n: Option<u64>,
    #[arg(long, value_enum, default_value_t = KindArg::Zn)]
    kind: KindArg,
    /// Transform applied after construction, left to right (at most 2).
    #[arg(long = "transform", value_enum)]
    transforms: Vec<TransformArg>,
    /// Read a JSON graph instead of building one.
    #[arg(long, conflicts_with = "n")]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct GraphArgs {
    #[command(flatten)]
    source: Source,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    source: Source,
    /// Analysis to run; repeatable.
    #[arg(long = "check", value_enum, default_values_t = [Analysis::Stats])]
    checks: Vec<Analysis>,
    /// Search budget in node expansions.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check id, for example T2.2.
    #[arg(long)]
    check: String,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    m: Option<u64>,
    #[arg(long)]
    t: Option<u64>,
    #[arg(long)]
    q1: Option<u64>,
    #[arg(long)]
    q2: Option<u64>,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    max_order: Option<u64>,
    /// Left ring of a product, for example F4, Z4 or Z2xZ2.
    #[arg(long)]
    left: Option<String>,
    #[arg(long)]
    right: Option<String>,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args)]
struct VerifyAllArgs {
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args)]
struct RunArgs {
    /// Search budget in node expansions.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Parameter grid used when no parameters are given.
    #[arg(long, value_enum, default_value_t = ProfileArg::Standard)]
    profile: ProfileArg,
    /// Report 0 ms so identical runs give identical output.
    #[arg(long)]
    no_timing: bool,
    /// Flip one adjacency bit of Γ(Z_9[i]) before the checks run.
    #[arg(long)]
    inject_fault: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct Output {
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Zn,
    Zni,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TransformArg {
    Line,
    Complement,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProfileArg {
    Smoke,
    Standard,
    Extended,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Analysis {
    Stats,
    Spectrum,
    Hamiltonian,
    Pancyclic,
    Bipancyclic,
    Girth,
    Certificate,
    RGraph,
    LineCondition,
    DiameterCondition,
    FanCondition,
    Bondy,
}

impl Analysis {
    fn name(&self) -> &'static str {
        match self {
            Analysis::Stats => "stats",
            Analysis::Spectrum => "spectrum",
            Analysis::Hamiltonian => "hamiltonian",
            Analysis::Pancyclic => "pancyclic",
            Analysis::Bipancyclic => "bipancyclic",
            Analysis::Girth => "girth",
            Analysis::Certificate => "certificate",
            Analysis::RGraph => "r-graph",
            Analysis::LineCondition => "line-condition",
            Analysis::DiameterCondition => "diameter-condition",
            Analysis::FanCondition => "fan-condition",
            Analysis::Bondy => "bondy",
        }
    }
}

/// Failure of a command, mapped to exit status 2.
#[derive(Debug)]
enum CliError {
    Core(Error),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Usage(s) => f.write_str(s),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

const EXIT_REFUTED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_UNDECIDED: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_USAGE);
    }
    match dispatch(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn configure_threads() -> CliResult<()> {
    let Ok(value) = std::env::var("ZDG_THREADS") else { return Ok(()) };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| CliError::Usage(format!("ZDG_THREADS must be a positive integer, got `{value}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Usage(format!("cannot configure {threads} threads: {e}")))
}

fn dispatch(command: Command) -> CliResult<u8> {
    match command {
        Command::Ring { action: RingAction::Info(args) } => ring_info(args),
        Command::Graph { action: GraphAction::Build(args) } => graph_out(args, Format::Text),
        Command::Graph { action: GraphAction::Export(args) } => graph_out(args, Format::Json),
        Command::Analyze(args) => analyze(args),
        Command::Verify(args) => verify(args),
        Command::VerifyAll(args) => verify_all(args),
    }
}

fn kind(k: KindArg) -> RingKind {
    match k {
        KindArg::Zn => RingKind::Zn,
        KindArg::Zni => RingKind::ZnGaussian,
    }
}

fn ring(n: u64, k: KindArg) -> CliResult<RingSpec> {
    let ring = make_ring(n, kind(k))?;
    if ring.order() > MAX_RING_ORDER {
        return Err(CliError::Usage(format!("ring of order {} exceeds the limit of {MAX_RING_ORDER}", ring.order())));
    }
    Ok(ring)
}

fn load(source: &Source) -> CliResult<Graph> {
    if source.transforms.len() > 2 {
        return Err(CliError::Usage("at most 2 transforms may be given".into()));
    }
    let mut g = match (&source.input, source.n) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            from_json(&text)?
        }
        (None, Some(n)) => zero_divisor_graph(&ring(n, source.kind)?),
        (None, None) => return Err(CliError::Usage("either --n or --input is required".into())),
    };
    for t in &source.transforms {
        g = match t {
            TransformArg::Line => Transform::Line,
            TransformArg::Complement => Transform::Complement,
        }
        .apply(&g);
    }
    Ok(g)
}

fn emit(output: &Output, text: &str) -> CliResult<()> {
    match &output.out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty(value: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serializes");
    s.push('\n');
    s
}

fn no_dot(output: &Output) -> CliResult<Format> {
    match output.format.unwrap_or(Format::Json) {
        Format::Dot => Err(CliError::Usage("--format dot applies to graphs only".into())),
        f => Ok(f),
    }
}

fn ring_info(args: RingArgs) -> CliResult<u8> {
    let format = no_dot(&args.output)?;
    let r = ring(args.n, args.kind)?;
    let zero_divisors = r.zero_divisor_set().len() as u64;
    let factors: Vec<Value> = r
        .factors()
        .iter()
        .zip(r.classes())
        .map(|(f, c)| json!({ "prime": f.prime, "exponent": f.exponent, "class": c }))
        .collect();
    let info = json!({
        "n": r.n(),
        "kind": r.kind(),
        "order": r.order(),
        "factors": factors,
        "zero_divisors": zero_divisors,
        "units": r.order() - zero_divisors - 1,
    });
    emit(&args.output, &render_value(&info, format))?;
    Ok(0)
}

/// JSON, or one `key: value` line per top-level entry.
fn render_value(value: &Value, format: Format) -> String {
    match (format, value) {
        (Format::Text, Value::Object(map)) => {
            map.iter().map(|(k, v)| format!("{k}: {v}\n")).collect()
        }
        _ => pretty(value),
    }
}

fn graph_text(g: &Graph) -> String {
    let s = stats(g);
    let mut out = format!("order {} size {} class {:?}\n", s.order, s.size, recognize(g));
    for v in 0..g.order() {
        let nbrs: Vec<String> = g.neighbors(v).iter().map(|&w| g.label(w).to_string()).collect();
        out.push_str(&format!("{}: {}\n", g.label(v), nbrs.join(" ")));
    }
    out
}

fn graph_out(args: GraphArgs, default: Format) -> CliResult<u8> {
    let g = load(&args.source)?;
    let text = match args.output.format.unwrap_or(default) {
        Format::Json => {
            let mut s = to_json(&g);
            s.push('\n');
            s
        }
        Format::Dot => to_dot(&g),
        Format::Text => graph_text(&g),
    };
    emit(&args.output, &text)?;
    Ok(0)
}

fn labelled(g: &Graph, cycle: &[usize]) -> Vec<String> {
    cycle.iter().map(|&v| g.label(v).to_string()).collect()
}

fn analyze(args: AnalyzeArgs) -> CliResult<u8> {
    let format = no_dot(&args.output)?;
    let g = load(&args.source)?;
    let budget = args.budget;
    let mut out = serde_json::Map::new();
    let mut undecided = false;
    let mut checks = args.checks.clone();
    checks.dedup();
    for check in checks {
        let value = match check {
            Analysis::Stats => json!({ "stats": stats(&g), "class": recognize(&g) }),
            Analysis::Spectrum => {
                let s = cycle_spectrum(&g, budget);
                undecided |= !s.undecided.is_empty();
                let missing: Vec<usize> =
                    (3..=g.order()).filter(|k| !s.present.contains(k) && !s.undecided.contains(k)).collect();
                let witnesses: BTreeMap<usize, Vec<String>> =
                    s.witnesses.iter().map(|(&k, c)| (k, labelled(&g, c))).collect();
                json!({
                    "order": s.order,
                    "present": s.present,
                    "missing": missing,
                    "undecided": s.undecided,
                    "exhaustive": s.exhaustive,
                    "refutations": s.refuted,
                    "witnesses": witnesses,
                })
            }
            Analysis::Hamiltonian => {
                let v = is_hamiltonian(&g, budget);
                undecided |= matches!(v, HamiltonVerdict::Undecided { .. });
                match v {
                    HamiltonVerdict::Yes { cycle } => json!({ "verdict": "yes", "cycle": labelled(&g, &cycle) }),
                    other => serde_json::to_value(other).expect("verdicts serialize"),
                }
            }
            Analysis::Pancyclic | Analysis::Bipancyclic => {
                let v = if check == Analysis::Pancyclic { is_pancyclic(&g, budget) } else { is_bipancyclic(&g, budget) };
                undecided |= matches!(v, CycleVerdict::Undecided { .. });
                match v {
                    CycleVerdict::Yes { spectrum } => json!({ "verdict": "yes", "present": spectrum.present }),
                    CycleVerdict::No { missing } => json!({ "verdict": "no", "missing": missing }),
                    CycleVerdict::Undecided { lengths, .. } => json!({ "verdict": "undecided", "lengths": lengths }),
                }
            }
            Analysis::Girth => match girth(&g) {
                Girth::Cycle(c) => json!({ "girth": c.len(), "cycle": labelled(&g, &c) }),
                Girth::Acyclic => json!({ "girth": null, "acyclic": true }),
            },
            Analysis::Certificate => match find_cut_certificate(&g, &CertificateStrategy::defaults()) {
                Some(c) => json!({ "found": true, "cut_set": labelled(&g, &c.cut_set), "components_after": c.components_after, "strategy": c.strategy }),
                None => json!({ "found": false }),
            },
            Analysis::RGraph => match is_r_graph(&g) {
                Ok(Some(w)) => json!({ "r_graph": true, "witness": labelled(&g, &[w.r, w.s, w.t, w.u]) }),
                Ok(None) => json!({ "r_graph": false }),
                Err(e) => json!({ "error": e.to_string() }),
            },
            Analysis::LineCondition => match check_line_pancyclic_condition(&g) {
                Ok(c) => serde_json::to_value(c).expect("conditions serialize"),
                Err(e) => json!({ "holds": false, "error": e.to_string() }),
            },
            Analysis::DiameterCondition => json!({ "holds": check_diameter_condition(&g) }),
            Analysis::FanCondition => match check_fan_condition(&g) {
                Ok(c) => serde_json::to_value(c).expect("conditions serialize"),
                Err(e) => json!({ "holds": false, "error": e.to_string() }),
            },
            Analysis::Bondy => json!({ "holds": check_bondy_edge_count(&g), "size": g.size(), "order": g.order() }),
        };
        out.insert(check.name().to_string(), value);
    }
    emit(&args.output, &render_value(&Value::Object(out), format))?;
    Ok(if undecided { EXIT_UNDECIDED } else { 0 })
}

fn options(run: &RunArgs) -> Options {
    Options {
        budget: run.budget,
        timing: !run.no_timing,
        fault: run.inject_fault.then(Fault::default_injection),
        profile: match run.profile {
            ProfileArg::Smoke => Profile::Smoke,
            ProfileArg::Standard => Profile::Standard,
            ProfileArg::Extended => Profile::Extended,
        },
    }
}

fn exit_code<'a>(reports: impl IntoIterator<Item = &'a VerificationReport>) -> u8 {
    let conclusions: Vec<Conclusion> = reports.into_iter().map(|r| r.conclusion).collect();
    if conclusions.contains(&Conclusion::Refuted) {
        EXIT_REFUTED
    } else if conclusions.contains(&Conclusion::Undecided) {
        EXIT_UNDECIDED
    } else {
        0
    }
}

fn verify(args: VerifyArgs) -> CliResult<u8> {
    let format = no_dot(&args.run.output)?;
    let id: CheckId = args.check.parse()?;
    let opts = options(&args.run);
    let mut params = Params::new();
    let ints = [
        ("q", args.q),
        ("p", args.p),
        ("m", args.m),
        ("t", args.t),
        ("q1", args.q1),
        ("q2", args.q2),
        ("n", args.n),
        ("max_order", args.max_order),
    ];
    for (key, value) in ints {
        if let Some(v) = value {
            params.insert(key.to_string(), ParamValue::Int(v));
        }
    }
    for (key, value) in [("left", &args.left), ("right", &args.right)] {
        if let Some(v) = value {
            params.insert(key.to_string(), ParamValue::Text(v.clone()));
        }
    }
    let explicit = !params.is_empty() || id == CheckId::ProductExample;
    let reports = if explicit {
        vec![run_point(id, &params, &opts)?]
    } else {
        run_check(id, &grid(id, opts.profile), &opts)?
    };
    let text = match (format, explicit) {
        (Format::Text, _) => {
            let suite = SuiteReport::from_reports(opts.profile, opts.budget, reports.clone());
            render_table(&suite)
        }
        (_, true) => pretty(&reports[0]),
        (_, false) => pretty(&reports),
    };
    emit(&args.run.output, &text)?;
    Ok(exit_code(&reports))
}

fn verify_all(args: VerifyAllArgs) -> CliResult<u8> {
    let format = no_dot(&args.run.output)?;
    let opts = options(&args.run);
    let suite = run_all(&opts);
    let text = match format {
        Format::Text => render_table(&suite),
        _ => pretty(&suite),
    };
    emit(&args.run.output, &text)?;
    Ok(exit_code(&suite.reports))
}
