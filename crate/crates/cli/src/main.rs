use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};
use serde::Serialize;

use togliatti::classify::{
    check_command, enumerate_minimal_smooth, verify_theorem, CheckReport, Checkpoint, ClassificationResult,
    SearchConfig, TheoremReport, VerifyStatus, SCHEMA_VERSION,
};
use togliatti::family::{bound_table, equality_partitions, family_system, mu_bound, BoundRow};
use togliatti::graphs::typed_vertex_graph;
use togliatti::monomial::{infer_n, ListedSet};
use togliatti::partition::PartitionSpec;
use togliatti::polytope::hull_structure;
use togliatti::{parse_system, Error};

mod render;

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser)]
#[command(name = "togliatti", version, about = "Decide and classify monomial Togliatti systems of cubics")]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every check on a system read from a file (`-` for stdin).
    Check {
        file: PathBuf,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 3)]
        d: u32,
        /// Also print hull and graph dumps.
        #[arg(long)]
        verbose: bool,
        /// Exit with status 1 unless the system is a minimal smooth Togliatti system.
        #[arg(long)]
        strict: bool,
    },
    /// Search for minimal smooth systems in n+1 variables.
    Enumerate {
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Print the family system of a partition.
    Family {
        /// Comma-separated parts, e.g. 2,1,1.
        #[arg(long, value_delimiter = ',', required = true)]
        partition: Vec<usize>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Tabulate mu, beta and the bound for every partition up to n-max.
    Bound {
        #[arg(long)]
        n_max: usize,
    },
    /// Compare the search result with the partition family.
    Verify {
        #[command(flatten)]
        search: SearchArgs,
    },
}

#[derive(clap::Args)]
struct SearchArgs {
    #[arg(long)]
    n: usize,
    /// Upper bound on |S|.
    #[arg(long = "max-s")]
    max_s: Option<usize>,
    /// Time budget in seconds.
    #[arg(long)]
    budget: Option<f64>,
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Required for n = 4, whose search may not finish.
    #[arg(long)]
    best_effort: bool,
    #[arg(long)]
    no_orbit_pruning: bool,
    #[arg(long)]
    no_superset_pruning: bool,
    /// Write progress here if the budget runs out.
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    /// Continue from a checkpoint file.
    #[arg(long)]
    resume: Option<PathBuf>,
    /// Include wall time in the report.
    #[arg(long)]
    timings: bool,
}

impl SearchArgs {
    fn config(&self) -> Result<SearchConfig, String> {
        let mut c = SearchConfig::new(self.n);
        c.max_generators = self.max_s;
        c.prune_orbits = !self.no_orbit_pruning;
        c.prune_togliatti_supersets = !self.no_superset_pruning;
        c.jobs = self.jobs;
        c.best_effort = self.best_effort;
        if let Some(b) = self.budget {
            if !(b >= 0.0 && b.is_finite()) {
                return Err(format!("budget must be a non-negative number of seconds, got {b}"));
            }
            c.budget = Some(Duration::from_secs_f64(b));
        }
        if let Some(path) = &self.resume {
            let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            let cp: Checkpoint = serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
            c.resume = Some(cp);
        }
        Ok(c)
    }

    fn save_checkpoint(&self, cp: Option<&Checkpoint>) -> Result<(), String> {
        if let (Some(path), Some(cp)) = (&self.checkpoint, cp) {
            let text = serde_json::to_string_pretty(cp).map_err(|e| e.to_string())?;
            fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))?;
        }
        Ok(())
    }
}

enum Failure {
    Usage(String),
    Property(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(_) | Error::Parse { .. } | Error::Precondition(_) => Failure::Usage(e.to_string()),
            _ => Failure::Property(e.to_string()),
        }
    }
}

fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) {
    if json {
        println!("{}", serde_json::to_string_pretty(value).expect("reports serialize"));
    } else {
        print!("{}", text());
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Property(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_FAILURE)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    match &cli.command {
        Command::Check { file, n, d, verbose, strict } => check(cli.json, file, *n, *d, *verbose, *strict),
        Command::Enumerate { search } => enumerate(cli.json, search),
        Command::Family { partition, n } => family(cli.json, partition, *n),
        Command::Bound { n_max } => bound(cli.json, *n_max),
        Command::Verify { search } => verify(cli.json, search),
    }
}

fn read_input(file: &PathBuf) -> Result<String, Failure> {
    if file.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| Failure::Usage(format!("stdin: {e}")))
    } else {
        fs::read_to_string(file).map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))
    }
}

fn check(json: bool, file: &PathBuf, n: Option<usize>, d: u32, verbose: bool, strict: bool) -> Result<u8, Failure> {
    let text = read_input(file)?;
    let n = match n {
        Some(n) => n,
        None => infer_n(&text)?,
    };
    let sys = parse_system(&text, n, d)?;
    let report: CheckReport = check_command(&sys)?;
    emit(json, &report, || {
        let mut out = render::check(&report);
        if verbose && d == 3 && !sys.apolar().is_empty() {
            if let Ok(model) = hull_structure(sys.apolar()) {
                out.push_str("\nhull in lattice coordinates:\n");
                out.push_str(&model.dump());
            }
            if let Some(g) = &report.gp {
                out.push_str(&format!("\nG_P:\n{g}"));
            }
            if let Some(g) = &report.gp_complement {
                out.push_str(&format!("\nG_P':\n{g}"));
            }
            if let Ok(t) = typed_vertex_graph(sys.apolar(), 0) {
                out.push_str(&format!("\ntyped graph at x0^3:\n{}", t.dump()));
            }
        }
        out
    });
    let classified = report.togliatti && report.minimal && report.smoothness.as_ref().is_some_and(|s| s.smooth);
    Ok(if strict && !classified { EXIT_FAILURE } else { 0 })
}

fn enumerate(json: bool, args: &SearchArgs) -> Result<u8, Failure> {
    let config = args.config().map_err(Failure::Usage)?;
    let result: ClassificationResult = enumerate_minimal_smooth(&config)?;
    args.save_checkpoint(result.checkpoint.as_ref()).map_err(Failure::Usage)?;
    if json && args.timings {
        let v = with_wall_time(&result, result.stats.wall_time);
        println!("{}", serde_json::to_string_pretty(&v).expect("reports serialize"));
    } else {
        emit(json, &result, || render::enumeration(&result, args.timings));
    }
    Ok(if result.complete { 0 } else { EXIT_INCONCLUSIVE })
}

fn with_wall_time<T: Serialize>(value: &T, t: Duration) -> serde_json::Value {
    let mut v = serde_json::to_value(value).expect("reports serialize");
    if let Some(stats) = v.get_mut("stats").and_then(|s| s.as_object_mut()) {
        stats.insert("wall_time_ms".into(), serde_json::Value::from(t.as_millis() as u64));
    }
    v
}

#[derive(Serialize)]
struct FamilyReport {
    schema: &'static str,
    partition: PartitionSpec,
    n: usize,
    mu: usize,
    beta: usize,
    bound: usize,
    witness_quadric: String,
    system: togliatti::MonomialSystem,
}

fn family(json: bool, parts: &[usize], n: Option<usize>) -> Result<u8, Failure> {
    let spec = match n {
        Some(n) => PartitionSpec::with_n(parts.to_vec(), n)?,
        None => PartitionSpec::new(parts.to_vec())?,
    };
    let f = family_system(&spec)?;
    let report = FamilyReport {
        schema: SCHEMA_VERSION,
        n: spec.n(),
        mu: f.mu,
        beta: f.beta,
        bound: mu_bound(spec.n()),
        witness_quadric: f.witness_quadric.to_string(),
        system: f.system.clone(),
        partition: spec,
    };
    emit(json, &report, || {
        format!(
            "# partition {} mu={} beta={} bound={}\n# Q = {}\n{}",
            report.partition,
            report.mu,
            report.beta,
            report.bound,
            report.witness_quadric,
            f.system.serialize_as(ListedSet::Generators)
        )
    });
    Ok(0)
}

#[derive(Serialize)]
struct BoundCheck {
    n: usize,
    bound: usize,
    max_mu: usize,
    argmax: Vec<PartitionSpec>,
    equality_partitions: Vec<PartitionSpec>,
    holds: bool,
}

#[derive(Serialize)]
struct BoundReport {
    schema: &'static str,
    rows: Vec<BoundRow>,
    checks: Vec<BoundCheck>,
}

fn bound(json: bool, n_max: usize) -> Result<u8, Failure> {
    if n_max < 2 {
        return Err(Failure::Usage("--n-max must be at least 2".into()));
    }
    let rows = bound_table(n_max);
    let checks: Vec<BoundCheck> = (2..=n_max)
        .map(|n| {
            let of_n: Vec<&BoundRow> = rows.iter().filter(|r| r.partition.n() == n).collect();
            let max_mu = of_n.iter().map(|r| r.mu).max().unwrap_or(0);
            let argmax: Vec<PartitionSpec> =
                of_n.iter().filter(|r| r.mu == max_mu).map(|r| r.partition.clone()).collect();
            let eq = equality_partitions(n);
            BoundCheck { n, bound: mu_bound(n), max_mu, holds: max_mu == mu_bound(n) && argmax == eq, argmax, equality_partitions: eq }
        })
        .collect();
    let ok = checks.iter().all(|c| c.holds);
    let report = BoundReport { schema: SCHEMA_VERSION, rows, checks };
    emit(json, &report, || render::bound(&report.rows, report.checks.iter().map(|c| (c.n, c.max_mu, c.bound, c.holds))));
    Ok(if ok { 0 } else { EXIT_FAILURE })
}

fn verify(json: bool, args: &SearchArgs) -> Result<u8, Failure> {
    let config = args.config().map_err(Failure::Usage)?;
    let report: TheoremReport = verify_theorem(&config)?;
    args.save_checkpoint(report.checkpoint.as_ref()).map_err(Failure::Usage)?;
    if json && args.timings {
        let v = with_wall_time(&report, report.stats.wall_time);
        println!("{}", serde_json::to_string_pretty(&v).expect("reports serialize"));
    } else {
        emit(json, &report, || render::verify(&report, args.timings));
    }
    Ok(match report.status {
        VerifyStatus::Pass => 0,
        VerifyStatus::Fail => EXIT_FAILURE,
        VerifyStatus::Inconclusive => EXIT_INCONCLUSIVE,
    })
}
