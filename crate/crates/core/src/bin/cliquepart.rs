//! Command-line toolkit for clique partitioning: generate instance
//! corpora, count and export formulation constraints, solve with the
//! built-in exact engines, and cross-verify the reductions.
//!
//! Every subcommand echoes its fully resolved configuration to stderr as
//! a re-runnable command line; re-running it reproduces the outputs byte
//! for byte (timing fields excepted). Exit codes: 0 success or all checks
//! passed, 1 verification failure, 2 usage or input error.

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cliquepart::export::{kind_label, write_lp_string, write_report, BenchRow, ReportFormat};
use cliquepart::fileio::{read_instance_file, write_instance_file};
use cliquepart::formulation::{
    build_constraints, count_constraints, expected_count, inclusion_violations, FormulationKind,
};
use cliquepart::generator::{GeneratorConfig, Probability};
use cliquepart::solver::{
    solve_bnb, solve_oracle, solve_vectors, verify_component_conditions, verify_reduction_pipeline,
    verify_optimal_set_equality, SolveLimits, SolveMode, SolveReport, SolveStatus,
};
use cliquepart::{Family, WeightedInstance};

#[derive(Parser)]
#[command(name = "cliquepart", version, about = "Clique partitioning toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate seeded instance files for one family
    Gen(GenArgs),
    /// Count formulation constraints per instance and kind
    Count(CountArgs),
    /// Solve one instance with a chosen engine
    Solve(SolveArgs),
    /// Cross-verify the reductions against the brute-force oracles
    Verify(VerifyArgs),
    /// Export formulations as LP model files
    Export(ExportArgs),
    /// Run instances x kinds with one engine and tabulate results
    Bench(BenchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Random,
    Sparse,
    Structured,
    Modularity,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Random => Family::Random,
            FamilyArg::Sparse => Family::Sparse,
            FamilyArg::Structured => Family::Structured,
            FamilyArg::Modularity => Family::Modularity,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineArg {
    Oracle,
    Vectors,
    Bnb,
}

impl EngineArg {
    fn as_str(self) -> &'static str {
        match self {
            EngineArg::Oracle => "oracle",
            EngineArg::Vectors => "vectors",
            EngineArg::Bnb => "bnb",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Markdown,
    Json,
}

impl FormatArg {
    fn as_str(self) -> &'static str {
        match self {
            FormatArg::Csv => "csv",
            FormatArg::Markdown => "markdown",
            FormatArg::Json => "json",
        }
    }
}

#[derive(Args)]
struct GenArgs {
    /// Instance family
    #[arg(value_enum)]
    family: FamilyArg,
    /// Vertex count
    n: usize,
    /// Base seed; instance i uses seed + i
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of instances to generate
    #[arg(long, default_value_t = 1)]
    count: u64,
    /// Cluster count (structured family)
    #[arg(long, default_value_t = 5)]
    clusters: usize,
    /// Within-cluster +1 probability as an exact rational (structured)
    #[arg(long, default_value = "3/4")]
    p_in: Probability,
    /// Attachment parameter (modularity family)
    #[arg(long, default_value_t = 2)]
    ba_attach: usize,
    /// Output directory
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

#[derive(Args)]
struct CountArgs {
    /// Instance files
    #[arg(required = true)]
    files: Vec<PathBuf>,
    /// Comma-separated kinds, or `all`
    #[arg(long, default_value = "all", value_delimiter = ',')]
    kinds: Vec<String>,
    /// Append analytic expected counts (random and sparse families)
    #[arg(long)]
    expected: bool,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
}

#[derive(Args)]
struct SolveArgs {
    file: PathBuf,
    /// Formulation to solve (vectors engine) or to report (oracle, bnb)
    #[arg(long, default_value = "P")]
    kind: String,
    #[arg(long, value_enum)]
    engine: EngineArg,
    /// Report the complete optimal set (oracle and vectors engines)
    #[arg(long)]
    all: bool,
    #[arg(long)]
    node_limit: Option<u64>,
    #[arg(long)]
    time_limit_ms: Option<u64>,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
}

#[derive(Args)]
struct VerifyArgs {
    /// Instance files to verify (n <= 7)
    files: Vec<PathBuf>,
    /// Fuzz mode: <family> <n> <count> <seed>
    #[arg(long, num_args = 4, value_names = ["FAMILY", "N", "COUNT", "SEED"])]
    fuzz: Option<Vec<String>>,
    /// Also exercise the conjectural kind; its failures are logged as
    /// conjecture counterexamples, not verification failures
    #[arg(long)]
    experimental: bool,
    /// Worker threads (default: CLIQUEPART_JOBS or 1)
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args)]
struct ExportArgs {
    file: PathBuf,
    /// Comma-separated kinds, or `all`
    #[arg(long, default_value = "all", value_delimiter = ',')]
    kinds: Vec<String>,
    /// Output directory
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

#[derive(Args)]
struct BenchArgs {
    /// Manifest file: one instance path per line (relative to the
    /// manifest), `#` comments allowed
    manifest: PathBuf,
    /// Comma-separated kinds, or `all`
    #[arg(long, default_value = "all", value_delimiter = ',')]
    kinds: Vec<String>,
    #[arg(long, value_enum)]
    engine: EngineArg,
    #[arg(long)]
    node_limit: Option<u64>,
    #[arg(long)]
    time_limit_ms: Option<u64>,
    /// Worker threads (default: CLIQUEPART_JOBS or 1)
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Gen(args) => cmd_gen(&args),
        Command::Count(args) => cmd_count(&args),
        Command::Solve(args) => cmd_solve(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Export(args) => cmd_export(&args),
        Command::Bench(args) => cmd_bench(&args),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

type CmdResult = Result<ExitCode, Box<dyn std::error::Error>>;

fn echo_config(line: &str) {
    eprintln!("config: {line}");
}

fn parse_kinds(tokens: &[String]) -> Result<Vec<FormulationKind>, String> {
    if tokens.len() == 1 && tokens[0].eq_ignore_ascii_case("all") {
        return Ok(FormulationKind::ALL.to_vec());
    }
    tokens
        .iter()
        .map(|t| FormulationKind::parse(t).ok_or_else(|| format!("unknown kind `{t}`")))
        .collect()
}

fn kinds_echo(kinds: &[FormulationKind]) -> String {
    kinds.iter().map(|k| k.as_str().to_string()).collect::<Vec<_>>().join(",")
}

fn jobs_or_default(flag: Option<usize>) -> usize {
    flag.or_else(|| std::env::var("CLIQUEPART_JOBS").ok().and_then(|v| v.parse().ok()))
        .unwrap_or(1)
        .max(1)
}

/// Runs `f` over the tasks on `jobs` threads; results come back in task
/// order regardless of completion order.
fn run_parallel<T, R, F>(jobs: usize, tasks: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    if jobs <= 1 || tasks.len() <= 1 {
        return tasks.iter().map(&f).collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<R>>> = Mutex::new((0..tasks.len()).map(|_| None).collect());
    std::thread::scope(|scope| {
        for _ in 0..jobs.min(tasks.len()) {
            scope.spawn(|| loop {
                let idx = next.fetch_add(1, Ordering::Relaxed);
                if idx >= tasks.len() {
                    break;
                }
                let result = f(&tasks[idx]);
                slots.lock().unwrap()[idx] = Some(result);
            });
        }
    });
    slots.into_inner().unwrap().into_iter().map(|r| r.unwrap()).collect()
}

fn cmd_gen(args: &GenArgs) -> CmdResult {
    let family: Family = args.family.into();
    echo_config(&format!(
        "gen {} {} --seed {} --count {} --clusters {} --p-in {} --ba-attach {} --out {}",
        family,
        args.n,
        args.seed,
        args.count,
        args.clusters,
        args.p_in,
        args.ba_attach,
        args.out.display()
    ));
    std::fs::create_dir_all(&args.out)?;
    for i in 0..args.count {
        let seed = args.seed + i;
        let mut config = GeneratorConfig::new(family, args.n, seed);
        config.k_clusters = args.clusters;
        config.p_in = args.p_in;
        config.ba_attach = args.ba_attach;
        let inst = config.generate()?;
        let name = format!("{}_n{}_s{}.cpp", family, args.n, seed);
        let path = args.out.join(&name);
        let bytes = write_instance_file(&inst, &path)?;
        println!("wrote {} ({} vertices, {} bytes)", path.display(), args.n, bytes);
    }
    Ok(ExitCode::SUCCESS)
}

/// Renders an exact rational as its integer value or `num/den`.
fn rational_str(r: num_rational::Ratio<i64>) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn instance_meta(path: &Path, inst: &WeightedInstance) -> (String, String, String) {
    let name = path.file_name().map_or_else(String::new, |s| s.to_string_lossy().into_owned());
    let family = inst.family().unwrap_or(Family::Custom).to_string();
    let seed = inst.seed().map_or_else(|| "-".into(), |s| s.to_string());
    (name, family, seed)
}

fn cmd_count(args: &CountArgs) -> CmdResult {
    let kinds = parse_kinds(&args.kinds)?;
    echo_config(&format!(
        "count {} --kinds {}{} --format {}",
        args.files.iter().map(|f| f.display().to_string()).collect::<Vec<_>>().join(" "),
        kinds_echo(&kinds),
        if args.expected { " --expected" } else { "" },
        args.format.as_str()
    ));
    for kind in kinds.iter().filter(|k| k.is_experimental()) {
        eprintln!("note: {}", kind_label(*kind));
    }

    let mut header: Vec<String> =
        ["instance", "family", "n", "seed"].iter().map(|s| s.to_string()).collect();
    for kind in &kinds {
        header.push(kind.as_str().to_string());
    }
    if args.expected {
        for kind in &kinds {
            header.push(format!("expected_{}", kind.as_str()));
        }
    }

    let mut table: Vec<Vec<String>> = Vec::new();
    for path in &args.files {
        let inst = read_instance_file(path)?;
        let (name, family, seed) = instance_meta(path, &inst);
        let mut row = vec![name, family, inst.n().to_string(), seed];
        for &kind in &kinds {
            row.push(count_constraints(&inst, kind).to_string());
        }
        if args.expected {
            for &kind in &kinds {
                let cell = inst
                    .family()
                    .and_then(|f| expected_count(kind, f, inst.n()).ok())
                    .map_or_else(|| "-".into(), rational_str);
                row.push(cell);
            }
        }
        table.push(row);
    }
    print_table(&header, &table, args.format)
}

fn print_table(header: &[String], rows: &[Vec<String>], format: FormatArg) -> CmdResult {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match format {
        FormatArg::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record(header)?;
            for row in rows {
                w.write_record(row)?;
            }
            w.flush()?;
        }
        FormatArg::Markdown => {
            writeln!(out, "| {} |", header.join(" | "))?;
            writeln!(out, "|{}|", header.iter().map(|_| " --- ").collect::<Vec<_>>().join("|"))?;
            for row in rows {
                writeln!(out, "| {} |", row.join(" | "))?;
            }
        }
        FormatArg::Json => {
            let objects: Vec<serde_json::Value> = rows
                .iter()
                .map(|row| {
                    let map: serde_json::Map<String, serde_json::Value> = header
                        .iter()
                        .zip(row)
                        .map(|(k, v)| (k.clone(), serde_json::Value::String(v.clone())))
                        .collect();
                    serde_json::Value::Object(map)
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&objects)?)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn solve_limits(node_limit: Option<u64>, time_limit_ms: Option<u64>) -> SolveLimits {
    SolveLimits { node_limit, time_limit: time_limit_ms.map(Duration::from_millis) }
}

fn run_engine(
    inst: &WeightedInstance,
    kind: FormulationKind,
    engine: EngineArg,
    mode: SolveMode,
    limits: SolveLimits,
) -> cliquepart::Result<SolveReport> {
    match engine {
        EngineArg::Oracle => solve_oracle(inst, mode),
        EngineArg::Vectors => solve_vectors(&build_constraints(inst, kind), mode),
        EngineArg::Bnb => Ok(solve_bnb(inst, limits)),
    }
}

fn cmd_solve(args: &SolveArgs) -> CmdResult {
    let kind = FormulationKind::parse(&args.kind)
        .ok_or_else(|| format!("unknown kind `{}`", args.kind))?;
    echo_config(&format!(
        "solve {} --kind {} --engine {}{}{}{} --format {}",
        args.file.display(),
        kind,
        args.engine.as_str(),
        if args.all { " --all" } else { "" },
        args.node_limit.map_or_else(String::new, |v| format!(" --node-limit {v}")),
        args.time_limit_ms.map_or_else(String::new, |v| format!(" --time-limit-ms {v}")),
        args.format.as_str()
    ));
    let inst = read_instance_file(&args.file)?;
    let mode = if args.all { SolveMode::All } else { SolveMode::One };
    let limits = solve_limits(args.node_limit, args.time_limit_ms);
    let report = run_engine(&inst, kind, args.engine, mode, limits)?;

    let raw = report.solution().clone();
    let repaired = raw.repair_to_clique_partitioning();
    let raw_value = inst.objective_value(&raw)?;
    let repaired_value = inst.objective_value(&repaired)?;

    if args.format == FormatArg::Json {
        let value = serde_json::json!({
            "instance": args.file.display().to_string(),
            "kind": kind_label(kind),
            "engine": report.engine.as_str(),
            "status": report.status.as_str(),
            "value": repaired_value,
            "raw_value": raw_value,
            "objective": report.objective,
            "scaled": kind.uses_scaled_weights(),
            "optima": report.solutions.len(),
            "partition": repaired.to_partition().blocks(),
            "explored": report.explored,
            "elapsed_secs": report.elapsed.as_secs_f64(),
        });
        println!("{}", serde_json::to_string_pretty(&value)?);
    } else {
        println!("instance: {}", args.file.display());
        println!("kind: {}", kind_label(kind));
        println!("engine: {}", report.engine.as_str());
        println!("status: {}", report.status);
        println!("value: {repaired_value}");
        if raw_value != repaired_value || !raw.is_clique_partitioning() {
            println!("raw value (before repair): {raw_value}");
        }
        if kind.uses_scaled_weights() && args.engine == EngineArg::Vectors {
            println!("scaled objective: {}", report.objective);
        }
        if args.all {
            println!("optima: {}", report.solutions.len());
        }
        println!("partition: {:?}", repaired.to_partition().blocks());
        println!("explored: {}", report.explored);
        println!("elapsed: {:.3}s", report.elapsed.as_secs_f64());
    }
    if report.status != SolveStatus::Optimal {
        eprintln!("note: limits exhausted, best incumbent reported");
    }
    Ok(ExitCode::SUCCESS)
}

struct InstanceVerdict {
    name: String,
    failures: Vec<String>,
    conjecture_notes: Vec<String>,
}

fn verify_instance(name: String, inst: &WeightedInstance, experimental: bool) -> InstanceVerdict {
    let mut failures = Vec::new();
    let mut conjecture_notes = Vec::new();

    match verify_optimal_set_equality(inst) {
        Ok(rep) if rep.holds => {}
        Ok(rep) => failures.push(format!(
            "optimal-set equality (full vs pair-sum reduction) failed; witness {:?}",
            rep.witness.map(|w| w.selected_pairs())
        )),
        Err(e) => failures.push(format!("optimal-set equality: {e}")),
    }

    for kind in [FormulationKind::Mrp, FormulationKind::Pcp, FormulationKind::Pfrp] {
        match verify_reduction_pipeline(inst, kind) {
            Ok(rep) if rep.ok => {}
            Ok(rep) => {
                for f in &rep.failures {
                    failures.push(format!(
                        "{kind} optimum {:?} repairs to {} (oracle {})",
                        f.vector.selected_pairs(),
                        f.repaired_value,
                        rep.oracle_value
                    ));
                }
            }
            Err(e) => failures.push(format!("{kind} pipeline: {e}")),
        }
    }

    match solve_vectors(&build_constraints(inst, FormulationKind::Frp), SolveMode::All) {
        Ok(rep) => {
            for x in &rep.solutions {
                match verify_component_conditions(inst, x) {
                    Ok(obs) if obs.all_pass() => {}
                    Ok(_) => failures.push(format!(
                        "component diagnostics failed for optimum {:?}",
                        x.selected_pairs()
                    )),
                    Err(e) => failures.push(format!("component diagnostics: {e}")),
                }
            }
        }
        Err(e) => failures.push(format!("reduced solve: {e}")),
    }

    for (small, large) in inclusion_violations(inst) {
        failures.push(format!("inclusion violated: {small} not within {large}"));
    }

    if experimental {
        let p = solve_vectors(&build_constraints(inst, FormulationKind::P), SolveMode::All);
        let x = solve_vectors(&build_constraints(inst, FormulationKind::Xfrp), SolveMode::All);
        match (p, x) {
            (Ok(p), Ok(x)) if p.solutions == x.solutions => {}
            (Ok(_), Ok(_)) => conjecture_notes.push(
                "conjecture counterexample: optimal set differs under the inner-product rule"
                    .to_string(),
            ),
            (Err(e), _) | (_, Err(e)) => conjecture_notes.push(format!("conjecture check: {e}")),
        }
    }

    InstanceVerdict { name, failures, conjecture_notes }
}

fn cmd_verify(args: &VerifyArgs) -> CmdResult {
    let jobs = jobs_or_default(args.jobs);
    let mut tasks: Vec<(String, WeightedInstance)> = Vec::new();
    let fuzz_echo;
    if let Some(fuzz) = &args.fuzz {
        let family = Family::parse(&fuzz[0]).ok_or(format!("unknown family `{}`", fuzz[0]))?;
        let n: usize = fuzz[1].parse()?;
        let count: u64 = fuzz[2].parse()?;
        let seed: u64 = fuzz[3].parse()?;
        fuzz_echo = format!(" --fuzz {family} {n} {count} {seed}");
        for i in 0..count {
            let config = GeneratorConfig::new(family, n, seed + i);
            tasks.push((format!("{family}_n{n}_s{}", seed + i), config.generate()?));
        }
    } else {
        fuzz_echo = String::new();
        for path in &args.files {
            let inst = read_instance_file(path)?;
            if inst.n() > 7 {
                return Err(format!(
                    "{}: verification enumerates all vectors and supports n <= 7, \
                     instance has n = {}",
                    path.display(),
                    inst.n()
                )
                .into());
            }
            tasks.push((path.display().to_string(), inst));
        }
    }
    echo_config(&format!(
        "verify{}{}{} --jobs {}",
        args.files
            .iter()
            .map(|f| format!(" {}", f.display()))
            .collect::<String>(),
        fuzz_echo,
        if args.experimental { " --experimental" } else { "" },
        jobs
    ));
    if tasks.is_empty() {
        return Err("nothing to verify: pass instance files or --fuzz".into());
    }

    let experimental = args.experimental;
    let verdicts = run_parallel(jobs, &tasks, |(name, inst)| {
        verify_instance(name.clone(), inst, experimental)
    });

    let mut passed = 0usize;
    for v in &verdicts {
        if v.failures.is_empty() {
            passed += 1;
        } else {
            println!("{}: FAIL", v.name);
            for f in &v.failures {
                println!("  {f}");
            }
        }
        for note in &v.conjecture_notes {
            println!("{}: {note}", v.name);
        }
    }
    println!("{passed}/{} pass", verdicts.len());
    if passed == verdicts.len() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn cmd_export(args: &ExportArgs) -> CmdResult {
    let kinds = parse_kinds(&args.kinds)?;
    echo_config(&format!(
        "export {} --kinds {} --out {}",
        args.file.display(),
        kinds_echo(&kinds),
        args.out.display()
    ));
    let inst = read_instance_file(&args.file)?;
    std::fs::create_dir_all(&args.out)?;
    let stem = args
        .file
        .file_stem()
        .map_or_else(|| "instance".to_string(), |s| s.to_string_lossy().into_owned());
    for &kind in &kinds {
        let cs = build_constraints(&inst, kind);
        let text = write_lp_string(&cs);
        let path = args.out.join(format!("{stem}__{}.lp", kind.as_str().to_lowercase()));
        std::fs::write(&path, &text)?;
        println!("wrote {} ({} constraints, {} bytes)", path.display(), cs.len(), text.len());
    }
    Ok(ExitCode::SUCCESS)
}

fn read_manifest(path: &Path) -> Result<Vec<PathBuf>, Box<dyn std::error::Error>> {
    let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
    let text = std::fs::read_to_string(path)?;
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let p = PathBuf::from(l);
            if p.is_absolute() {
                p
            } else {
                base.join(p)
            }
        })
        .collect())
}

fn cmd_bench(args: &BenchArgs) -> CmdResult {
    let kinds = parse_kinds(&args.kinds)?;
    let jobs = jobs_or_default(args.jobs);
    echo_config(&format!(
        "bench {} --kinds {} --engine {}{}{} --jobs {} --format {}",
        args.manifest.display(),
        kinds_echo(&kinds),
        args.engine.as_str(),
        args.node_limit.map_or_else(String::new, |v| format!(" --node-limit {v}")),
        args.time_limit_ms.map_or_else(String::new, |v| format!(" --time-limit-ms {v}")),
        jobs,
        args.format.as_str()
    ));
    let paths = read_manifest(&args.manifest)?;
    let limits = solve_limits(args.node_limit, args.time_limit_ms);

    let mut tasks: Vec<(PathBuf, WeightedInstance, FormulationKind)> = Vec::new();
    for path in &paths {
        let inst = read_instance_file(path)?;
        for &kind in &kinds {
            tasks.push((path.clone(), inst.clone(), kind));
        }
    }

    let engine = args.engine;
    let rows: Vec<Result<BenchRow, String>> = run_parallel(jobs, &tasks, |(path, inst, kind)| {
        let report = run_engine(inst, *kind, engine, SolveMode::One, limits)
            .map_err(|e| format!("{}: {e}", path.display()))?;
        let repaired = report.solution().repair_to_clique_partitioning();
        let value = inst.objective_value(&repaired).map_err(|e| e.to_string())?;
        let (name, family, _) = instance_meta(path, inst);
        Ok(BenchRow {
            instance: name,
            family,
            n: inst.n(),
            seed: inst.seed(),
            kind: kind_label(*kind),
            constraints: count_constraints(inst, *kind),
            solver: engine.as_str().to_string(),
            status: report.status.to_string(),
            value,
            elapsed_secs: report.elapsed.as_secs_f64(),
        })
    });
    let rows: Vec<BenchRow> = rows.into_iter().collect::<Result<_, _>>()?;

    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match args.format {
        FormatArg::Csv => write_report(&rows, ReportFormat::Csv, &mut out)?,
        FormatArg::Markdown => write_report(&rows, ReportFormat::Markdown, &mut out)?,
        FormatArg::Json => {
            let objects: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "instance": r.instance,
                        "family": r.family,
                        "n": r.n,
                        "seed": r.seed,
                        "kind": r.kind,
                        "constraints": r.constraints,
                        "solver": r.solver,
                        "status": r.status,
                        "value": r.value,
                        "elapsed": format!("{:.3}", r.elapsed_secs),
                    })
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&objects)?)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}
