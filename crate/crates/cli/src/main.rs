//! `fusionkit` command line.
//!
//! Exit codes: 0 ok, 1 verification failure, 2 input error, 3 unsupported
//! shape.

use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use fusionkit::coefficient::{
    fusion_oracle, fusion_paths, fusion_remark13, fusion_row, fusion_theorem12, lr_lattice,
    lr_paths,
};
use fusionkit::exec::{with_jobs, Strategy};
use fusionkit::verify::{self, CheckReport};
use fusionkit::word::PathWord;
use fusionkit::{Error, FusionContext, LatticePath, Partition};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "fusionkit",
    version,
    about = "LR and level-k fusion coefficients for sl(n)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Littlewood-Richardson coefficient.
    Lr {
        lambda: String,
        mu: String,
        nu: String,
        #[arg(long, value_enum, default_value_t = LrMethod::Paths)]
        method: LrMethod,
    },
    /// Level-k fusion coefficient.
    Fusion {
        lambda: String,
        mu: String,
        nu: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = FusionMethod::Rule)]
        method: FusionMethod,
        /// List the counted paths with their bracket words.
        #[arg(long)]
        explain: bool,
    },
    /// All nonzero coefficients `N(λ, μ, ν)` for a fixed `μ`.
    Table {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        mu: String,
        /// Largest `|λ|`.
        #[arg(long, default_value_t = 6)]
        max_size: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Worker threads, 0 for all cores.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Exhaustive sweeps; prints a JSON report.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        #[arg(long, default_value_t = 3)]
        k_max: usize,
        #[arg(long, default_value_t = 8)]
        size_max: usize,
        /// Worker threads, 0 for all cores.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum LrMethod {
    Paths,
    Lattice,
}

#[derive(Clone, Copy, ValueEnum)]
enum FusionMethod {
    Rule,
    Oracle,
    Remark13,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Lr,
    Psi,
    Involution,
    Fillings,
    ClassicalBound,
    Monotone,
    Duality,
    Theorem18,
    Positivity,
    GepnerWitten,
    All,
}

impl Suite {
    const EACH: [Suite; 10] = [
        Suite::Lr,
        Suite::Psi,
        Suite::Involution,
        Suite::Fillings,
        Suite::ClassicalBound,
        Suite::Monotone,
        Suite::Duality,
        Suite::Theorem18,
        Suite::Positivity,
        Suite::GepnerWitten,
    ];

    fn name(self) -> String {
        self.to_possible_value()
            .expect("no skipped variants")
            .get_name()
            .to_string()
    }
}

/// Failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidInput(_) | Error::Domain(_) => 2,
            Error::Unsupported(_) => 3,
            Error::UndefinedOperator(_) | Error::Internal(_) => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: 1,
            message: e.to_string(),
        }
    }
}

fn input_error(message: String) -> Failure {
    Failure { code: 2, message }
}

type Outcome = std::result::Result<(), Failure>;

fn parse(what: &str, s: &str) -> std::result::Result<Partition, Failure> {
    s.parse()
        .map_err(|e: Error| input_error(format!("{what}: {e}")))
}

fn context(n: usize, k: usize) -> std::result::Result<FusionContext, Failure> {
    Ok(FusionContext::new(n, k)?)
}

fn require_restricted(what: &str, p: &Partition, ctx: &FusionContext) -> Outcome {
    if ctx.is_restricted(p) {
        Ok(())
    } else {
        Err(input_error(format!(
            "{what} = {p} is not restricted for n = {}, k = {}",
            ctx.n(),
            ctx.k()
        )))
    }
}

fn cmd_lr(out: &mut impl Write, lambda: &str, mu: &str, nu: &str, method: LrMethod) -> Outcome {
    let (l, m, n) = (parse("lambda", lambda)?, parse("mu", mu)?, parse("nu", nu)?);
    let v = match method {
        LrMethod::Paths => lr_paths(&l, &m, &n),
        LrMethod::Lattice => lr_lattice(&l, &m, &n),
    };
    writeln!(out, "{v}")?;
    Ok(())
}

fn describe(p: &LatticePath) -> String {
    let blocks: Vec<String> = (0..p.num_blocks())
        .map(|i| {
            let cells: Vec<String> = p
                .block(i)
                .iter()
                .map(|c| format!("({},{})", c.row, c.col))
                .collect();
            format!("[{}]", cells.join(" "))
        })
        .collect();
    let words: Vec<String> = (0..p.num_blocks().saturating_sub(1))
        .map(|r| PathWord::of_pair(p, r).word.brackets())
        .collect();
    if words.is_empty() {
        blocks.join(" ")
    } else {
        format!("{}  {}", blocks.join(" "), words.join(" "))
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_fusion(
    out: &mut impl Write,
    lambda: &str,
    mu: &str,
    nu: &str,
    n: usize,
    k: usize,
    method: FusionMethod,
    explain: bool,
) -> Outcome {
    let (l, m, v) = (parse("lambda", lambda)?, parse("mu", mu)?, parse("nu", nu)?);
    let ctx = context(n, k)?;
    for (what, p) in [("lambda", &l), ("mu", &m), ("nu", &v)] {
        require_restricted(what, p, &ctx)?;
    }
    let value = match method {
        FusionMethod::Rule => fusion_theorem12(&l, &m, &v, &ctx)? as i64,
        FusionMethod::Oracle => fusion_oracle(&l, &m, &v, &ctx)?,
        FusionMethod::Remark13 => fusion_remark13(&l, &m, &v, &ctx)? as i64,
    };
    writeln!(out, "{value}")?;
    if explain {
        for p in fusion_paths(&l, &m, &v, &ctx)? {
            writeln!(out, "{}", describe(&p))?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct TableRow {
    lambda: String,
    mu: String,
    nu: String,
    n: usize,
    k: usize,
    #[serde(rename = "N")]
    value: i64,
}

#[derive(Serialize)]
struct Table<'a> {
    schema: &'static str,
    n: usize,
    k: usize,
    mu: String,
    max_size: usize,
    rows: &'a [TableRow],
}

fn cmd_table(
    out: &mut impl Write,
    n: usize,
    k: usize,
    mu: &str,
    max_size: usize,
    format: Format,
    jobs: usize,
) -> Outcome {
    let m = parse("mu", mu)?;
    let ctx = context(n, k)?;
    require_restricted("mu", &m, &ctx)?;
    let lambdas = verify::restricted_shapes(&ctx, max_size);
    let per_lambda = with_jobs(jobs, || {
        Strategy::Parallel.map(&lambdas, |l| fusion_row(l, &m, &ctx))
    });
    let mut rows = Vec::new();
    for (l, row) in lambdas.iter().zip(per_lambda) {
        for (nu, value) in row? {
            if value != 0 {
                rows.push((l.clone(), nu, value));
            }
        }
    }
    rows.sort();
    let rows: Vec<TableRow> = rows
        .into_iter()
        .map(|(l, nu, value)| TableRow {
            lambda: l.to_string(),
            mu: m.to_string(),
            nu: nu.to_string(),
            n,
            k,
            value,
        })
        .collect();
    match format {
        Format::Json => {
            let table = Table {
                schema: "fusionkit.table/1",
                n,
                k,
                mu: m.to_string(),
                max_size,
                rows: &rows,
            };
            serde_json::to_writer_pretty(&mut *out, &table).map_err(io::Error::from)?;
            writeln!(out)?;
        }
        Format::Csv => {
            // header written by hand so an empty table still has one
            let mut w = csv::WriterBuilder::new()
                .has_headers(false)
                .from_writer(&mut *out);
            w.write_record(["lambda", "mu", "nu", "n", "k", "N"])
                .map_err(io::Error::from)?;
            for r in &rows {
                w.serialize(r).map_err(io::Error::from)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct SuiteCheck {
    suite: String,
    #[serde(flatten)]
    check: CheckReport,
}

#[derive(Serialize)]
struct Parameters {
    suite: String,
    n_max: usize,
    k_max: usize,
    size_max: usize,
    jobs: usize,
}

#[derive(Serialize)]
struct Report {
    schema: &'static str,
    command: String,
    parameters: Parameters,
    passed: bool,
    checks: Vec<SuiteCheck>,
    wall_time_ms: u128,
}

fn run_suite(suite: Suite, n_max: usize, k_max: usize, size_max: usize) -> Vec<CheckReport> {
    let s = Strategy::Parallel;
    match suite {
        Suite::Lr => verify::suite_lr(size_max, s),
        Suite::Psi => verify::suite_psi(size_max, s),
        Suite::Involution => verify::suite_involution(n_max, k_max, size_max, s),
        Suite::Fillings => verify::suite_fillings(n_max, k_max, size_max, s),
        Suite::ClassicalBound => verify::suite_classical_bound(n_max, k_max, size_max, s),
        Suite::Monotone => verify::suite_monotone(n_max, k_max, size_max, s),
        Suite::Duality => verify::suite_duality(n_max, k_max, size_max, s),
        Suite::Theorem18 => verify::suite_theorem18(n_max, k_max, size_max, size_max, s),
        Suite::Positivity => verify::suite_positivity(n_max, k_max, size_max, s),
        Suite::GepnerWitten => verify::suite_gepner_witten(k_max, size_max, s),
        Suite::All => unreachable!("expanded by the caller"),
    }
}

fn cmd_verify(
    out: &mut impl Write,
    suite: Suite,
    n_max: usize,
    k_max: usize,
    size_max: usize,
    jobs: usize,
) -> Outcome {
    if n_max < 2 || k_max < 1 {
        return Err(input_error(format!(
            "need --n-max >= 2 and --k-max >= 1, got {n_max} and {k_max}"
        )));
    }
    let start = Instant::now();
    let suites: Vec<Suite> = if suite == Suite::All {
        Suite::EACH.to_vec()
    } else {
        vec![suite]
    };
    let checks: Vec<SuiteCheck> = with_jobs(jobs, || {
        suites
            .iter()
            .flat_map(|&s| {
                run_suite(s, n_max, k_max, size_max)
                    .into_iter()
                    .map(move |check| SuiteCheck {
                        suite: s.name(),
                        check,
                    })
            })
            .collect()
    });
    let passed = checks.iter().all(|c| !c.check.hard || c.check.ok());
    let report = Report {
        schema: verify::SCHEMA,
        command: std::env::args().skip(1).collect::<Vec<_>>().join(" "),
        parameters: Parameters {
            suite: suite.name(),
            n_max,
            k_max,
            size_max,
            jobs,
        },
        passed,
        checks,
        wall_time_ms: start.elapsed().as_millis(),
    };
    serde_json::to_writer_pretty(&mut *out, &report).map_err(io::Error::from)?;
    writeln!(out)?;
    if passed {
        Ok(())
    } else {
        Err(Failure {
            code: 1,
            message: "verification failed".into(),
        })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = io::stdout().lock();
    let result = match cli.command {
        Command::Lr {
            lambda,
            mu,
            nu,
            method,
        } => cmd_lr(&mut out, &lambda, &mu, &nu, method),
        Command::Fusion {
            lambda,
            mu,
            nu,
            n,
            k,
            method,
            explain,
        } => cmd_fusion(&mut out, &lambda, &mu, &nu, n, k, method, explain),
        Command::Table {
            n,
            k,
            mu,
            max_size,
            format,
            jobs,
        } => cmd_table(&mut out, n, k, &mu, max_size, format, jobs),
        Command::Verify {
            suite,
            n_max,
            k_max,
            size_max,
            jobs,
        } => cmd_verify(&mut out, suite, n_max, k_max, size_max, jobs),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("fusionkit: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
