//! `z4codes` — construct, analyze, and verify linear codes over `Z4`
//! under the Lee metric.
//!
//! Exit codes: `0` success; `2` usage or parse error; `3` I/O failure;
//! `4` internal-consistency failure (a computed result contradicting a
//! structural identity — treated as build-breaking).

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use z4codes_core::analysis::{enumerate_family_parameters, FamilyParams};
use z4codes_core::constructions::{
    augment, build_family, one_weight, predict_augment, two_weight_base,
    two_weight_nonoptimal_example, AugmentMode,
};
use z4codes_core::graph::{family_srg_claim, syndrome_graph, verify_srg};
use z4codes_core::identities::{identity_suite, IdentityBudget};
use z4codes_core::{Error, GeneratorMatrix, StandardForm};

use z4codes::config::{workers_from_env, RunConfig};
use z4codes::format::{read_z4m, write_z4m};
use z4codes::parallel::analyze_parallel;
use z4codes::report::{
    identity_report_human, report_human, report_json, srg_verdict_human, srg_verdict_json,
};

#[derive(Parser)]
#[command(
    name = "z4codes",
    version,
    about = "Linear codes over Z4 under the Lee metric: construction, analysis, verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a named code and write it in .z4m format.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Analyze a .z4m file: distribution, bounds, projectivity, family membership.
    Analyze {
        /// Input matrix (.z4m).
        input: PathBuf,
        /// Also write the report as JSON to this path.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Also decide whether the Gray image is linear (enumerates pairs).
        #[arg(long)]
        gray_linearity: bool,
        /// Override the dual enumeration cap for projectivity checking.
        #[arg(long, value_name = "N")]
        dual_limit: Option<u128>,
    },
    /// Tabulate the Plotkin-optimal two-weight family for a code type.
    Enumerate {
        #[arg(long)]
        k1: usize,
        #[arg(long)]
        k2: usize,
        /// Construct and fully verify each tabulated code.
        #[arg(long)]
        realize: bool,
    },
    /// Check the exact weight-sum identities on a .z4m matrix.
    Verify {
        /// Input matrix (.z4m).
        input: PathBuf,
    },
    /// Build the syndrome graph of a .z4m code.
    Graph {
        /// Input matrix (.z4m).
        input: PathBuf,
        /// Verify strong regularity, spectrum, and multipartite shape.
        #[arg(long)]
        check_srg: bool,
        /// Write the edge list ("u v" per line, 0-indexed) to this path.
        #[arg(long, value_name = "PATH")]
        export: Option<PathBuf>,
        /// Write the verification verdict as JSON (implies --check-srg).
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ConstructKind {
    /// The base two-weight code with parameter k (type 4^k, length 2^(k-1)(2^k-1)).
    Yk {
        #[arg(long)]
        k: usize,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// The one-weight code of a given type (all nonzero syndrome columns).
    Oneweight {
        #[arg(long)]
        k1: usize,
        #[arg(long)]
        k2: usize,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// The Plotkin-optimal two-weight family member (k1, k2, t).
    Family {
        #[arg(long)]
        k1: usize,
        #[arg(long)]
        k2: usize,
        #[arg(long)]
        t: usize,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Length-quadrupling or length-doubling augmentation of an existing code.
    Augment {
        /// Input matrix (.z4m).
        #[arg(long)]
        input: PathBuf,
        /// full-row appends (G G G G) with a 0/1/2/3 row; half-row appends (G G) with a 0/2 row.
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// The fixed length-14 two-weight projective code that is not Plotkin-optimal.
    Su2Example {
        #[arg(short, long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    FullRow,
    HalfRow,
}

impl From<ModeArg> for AugmentMode {
    fn from(mode: ModeArg) -> AugmentMode {
        match mode {
            ModeArg::FullRow => AugmentMode::FullRow,
            ModeArg::HalfRow => AugmentMode::HalfRow,
        }
    }
}

struct CliError {
    code: u8,
    message: String,
}

type CliResult<T = ()> = Result<T, CliError>;

fn usage(message: impl Into<String>) -> CliError {
    CliError {
        code: 2,
        message: message.into(),
    }
}

fn core_error(error: Error) -> CliError {
    let code = match error {
        Error::TheoremViolation { .. } => 4,
        _ => 2,
    };
    CliError {
        code,
        message: error.to_string(),
    }
}

fn violation(message: impl Into<String>) -> CliError {
    CliError {
        code: 4,
        message: message.into(),
    }
}

fn read_file(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError {
        code: 3,
        message: format!("{}: {e}", path.display()),
    })
}

fn write_file(path: &Path, contents: &str) -> CliResult {
    std::fs::write(path, contents).map_err(|e| CliError {
        code: 3,
        message: format!("{}: {e}", path.display()),
    })
}

fn load_matrix(path: &Path) -> CliResult<GeneratorMatrix> {
    let text = read_file(path)?;
    read_z4m(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn standardize(matrix: &GeneratorMatrix) -> CliResult<StandardForm> {
    matrix.standardize().map_err(core_error)
}

fn run_config() -> CliResult<RunConfig> {
    let mut config = RunConfig::default();
    if let Some(workers) = workers_from_env().map_err(usage)? {
        config.worker_count = workers;
    }
    config.validate().map_err(usage)?;
    Ok(config)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: Cli) -> CliResult {
    let config = run_config()?;
    match cli.command {
        Command::Construct { kind } => cmd_construct(kind, &config),
        Command::Analyze {
            input,
            json,
            gray_linearity,
            dual_limit,
        } => cmd_analyze(&input, json.as_deref(), gray_linearity, dual_limit, &config),
        Command::Enumerate { k1, k2, realize } => cmd_enumerate(k1, k2, realize, &config),
        Command::Verify { input } => cmd_verify(&input, &config),
        Command::Graph {
            input,
            check_srg,
            export,
            json,
        } => cmd_graph(&input, check_srg, export.as_deref(), json.as_deref(), &config),
    }
}

/// Describes a family member's forced parameters on one line.
fn family_line(params: &FamilyParams) -> String {
    format!(
        "n = {}, dL = w1 = {}, w2 = {}, A_w1 = {}, A_w2 = {}; Plotkin-optimal, projective",
        params.n, params.w1, params.w2, params.count_w1, params.count_w2
    )
}

fn cmd_construct(kind: ConstructKind, config: &RunConfig) -> CliResult {
    let cap = config.enumeration_cap;
    match kind {
        ConstructKind::Yk { k, out } => {
            let matrix = two_weight_base(k, cap).map_err(core_error)?;
            write_file(&out, &write_z4m(&matrix, &[]))?;
            let params = FamilyParams::for_type(k, 0, k).map_err(core_error)?;
            println!(
                "wrote {} ({} x {})",
                out.display(),
                matrix.k(),
                matrix.n()
            );
            println!("predicted: type 4^{k}, {}", family_line(&params));
        }
        ConstructKind::Oneweight { k1, k2, out } => {
            let matrix = one_weight(k1, k2, cap).map_err(core_error)?;
            write_file(&out, &write_z4m(&matrix, &[]))?;
            let e = 2 * k1 + k2;
            println!(
                "wrote {} ({} x {})",
                out.display(),
                matrix.k(),
                matrix.n()
            );
            println!(
                "predicted: type 4^{k1} 2^{k2}, n = 2^{e} - 1 = {}, constant Lee weight 2^{e} = {}",
                matrix.n(),
                1u128 << e
            );
        }
        ConstructKind::Family { k1, k2, t, out } => {
            let matrix = build_family(k1, k2, t, cap).map_err(core_error)?;
            let comment = format!("family k1={k1} k2={k2} t={t}");
            write_file(&out, &write_z4m(&matrix, &[comment]))?;
            let params = FamilyParams::for_type(k1, k2, t).map_err(core_error)?;
            println!(
                "wrote {} ({} x {})",
                out.display(),
                matrix.k(),
                matrix.n()
            );
            println!("predicted: type 4^{k1} 2^{k2}, {}", family_line(&params));
        }
        ConstructKind::Augment { input, mode, out } => {
            let base = load_matrix(&input)?;
            let mode: AugmentMode = mode.into();
            let augmented = augment(&base, mode).map_err(core_error)?;
            write_file(&out, &write_z4m(&augmented, &[]))?;
            println!(
                "wrote {} ({} x {})",
                out.display(),
                augmented.k(),
                augmented.n()
            );
            let factor = mode.length_factor();
            println!(
                "predicted: every weight w of the input moves to {factor}w; \
                 the remaining words land at {factor} * n_in = {}",
                factor * base.n()
            );
            let form = standardize(&base)?;
            if form.size() <= config.enumeration_cap {
                let distribution = form
                    .weight_distribution(config.enumeration_cap)
                    .map_err(core_error)?;
                let predicted = predict_augment(&distribution, base.n(), mode);
                let parts: Vec<String> = predicted
                    .iter()
                    .map(|(w, c)| format!("{w}:{c}"))
                    .collect();
                println!("predicted distribution: {}", parts.join("  "));
            }
        }
        ConstructKind::Su2Example { out } => {
            let matrix = two_weight_nonoptimal_example();
            write_file(&out, &write_z4m(&matrix, &[]))?;
            println!(
                "wrote {} ({} x {})",
                out.display(),
                matrix.k(),
                matrix.n()
            );
            println!(
                "predicted: type 4^3, n = 14, dL = 12, weights {{12, 16}}, \
                 A_12 = 28, A_16 = 35; projective, two-weight, below the \
                 Plotkin-type bound 14"
            );
        }
    }
    Ok(())
}

fn cmd_analyze(
    input: &Path,
    json: Option<&Path>,
    gray_linearity: bool,
    dual_limit: Option<u128>,
    config: &RunConfig,
) -> CliResult {
    let matrix = load_matrix(input)?;
    let form = standardize(&matrix)?;
    let report = analyze_parallel(&form, config, gray_linearity, dual_limit).map_err(core_error)?;
    print!("{}", report_human(&report, config));
    if let Some(path) = json {
        write_file(path, &report_json(&report))?;
        println!("json report written to {}", path.display());
    }
    Ok(())
}

fn cmd_enumerate(k1: usize, k2: usize, realize: bool, config: &RunConfig) -> CliResult {
    if 2 * k1 + k2 < 2 {
        return Err(usage(format!(
            "type exponent 2*k1 + k2 = {} is below 2; no code of this type has a dual-\
             distinguishable structure to tabulate",
            2 * k1 + k2
        )));
    }
    let rows = enumerate_family_parameters(k1, k2).map_err(core_error)?;
    if rows.is_empty() {
        println!(
            "no family members for type 4^{k1} 2^{k2}: the family parameter t \
             ranges over 1..=k1 and k1 = {k1}"
        );
        return Ok(());
    }
    println!("Plotkin-optimal two-weight projective codes of type 4^{k1} 2^{k2}:");
    println!("{:>3} {:>12} {:>12} {:>12} {:>16} {:>12}", "t", "n", "w1", "w2", "A_w1", "A_w2");
    for params in &rows {
        println!(
            "{:>3} {:>12} {:>12} {:>12} {:>16} {:>12}",
            params.t, params.n, params.w1, params.w2, params.count_w1, params.count_w2
        );
    }
    if realize {
        for params in &rows {
            let matrix = build_family(k1, k2, params.t, config.enumeration_cap)
                .map_err(core_error)?;
            let form = standardize(&matrix)?;
            let report = analyze_parallel(&form, config, false, None).map_err(core_error)?;
            if report.family.as_ref() != Some(params) {
                return Err(violation(format!(
                    "realized code for t={} does not match its tabulated parameters: \
                     got {:?}",
                    params.t, report.family
                )));
            }
            println!(
                "t={}: realized and verified (n = {}, dL = {}, distribution checked)",
                params.t, report.n, report.min_distance
            );
        }
    }
    Ok(())
}

fn cmd_verify(input: &Path, config: &RunConfig) -> CliResult {
    let matrix = load_matrix(input)?;
    let budget = IdentityBudget {
        dual_cap: config.dual_cap,
        ..IdentityBudget::default()
    };
    let report = identity_suite(&matrix, &budget).map_err(core_error)?;
    print!("{}", identity_report_human(&report));
    if report.passed() {
        Ok(())
    } else {
        Err(violation(
            "one or more weight-sum identities failed on this matrix",
        ))
    }
}

fn cmd_graph(
    input: &Path,
    check_srg: bool,
    export: Option<&Path>,
    json: Option<&Path>,
    config: &RunConfig,
) -> CliResult {
    let matrix = load_matrix(input)?;
    let form = standardize(&matrix)?;
    let graph = syndrome_graph(&form, config.vertex_cap).map_err(core_error)?;
    println!(
        "syndrome graph: {} vertices, degree {}, {} edges",
        graph.vertices(),
        graph.degree_of(0),
        graph.edge_count()
    );
    if let Some(path) = export {
        let mut out = String::new();
        graph.for_each_edge(|u, v| {
            out.push_str(&format!("{u} {v}\n"));
        });
        write_file(path, &out)?;
        println!("edge list written to {}", path.display());
    }
    if check_srg || json.is_some() {
        let verdict = verify_srg(&graph);
        print!("{}", srg_verdict_human(&verdict));
        if let Some(path) = json {
            write_file(path, &srg_verdict_json(&verdict))?;
            println!("json verdict written to {}", path.display());
        }
        // A Plotkin-optimal family member must satisfy its claimed graph
        // parameters exactly; a mismatch is a build-breaking inconsistency.
        if form.size() <= config.enumeration_cap {
            let report = analyze_parallel(&form, config, false, None).map_err(core_error)?;
            if let Some(family) = &report.family {
                let claim = family_srg_claim(form.k1(), form.k2(), family.t)
                    .map_err(core_error)?;
                match claim.check(&verdict) {
                    Ok(()) => println!(
                        "family claim (t = {}): graph matches K_{{{} x {}}} exactly",
                        family.t, claim.multipartite.0, claim.multipartite.1
                    ),
                    Err(why) => {
                        return Err(violation(format!(
                            "family claim failed for t = {}: {why}",
                            family.t
                        )))
                    }
                }
            }
        } else {
            println!("family claim not checked: code size exceeds the enumeration cap");
        }
    }
    Ok(())
}
