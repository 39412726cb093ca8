//! `cyclic`: classify, extend and certify simplex families on the moment
//! curve, and explore higher Stasheff–Tamari posets.

mod io;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use cyclic_core::counterexamples::{
    gale_dual_check, lift_d, lift_n, rambau_example, random_complex, random_maximal_family,
    verify_nonextendable, Verdict, DEFAULT_CERTIFY_BUDGET,
};
use cyclic_core::extension::{constructive_extend_with_budget, greedy_extend, Complex};
use cyclic_core::moment::classify_pair;
use cyclic_core::triangulation::{validate, HstPoset, DEFAULT_ENUMERATION_BUDGET};
use cyclic_core::Error;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use io::{emit, read_instance, to_json, InstanceFile};
use report::RunReport;

pub const EXIT_OK: u8 = 0;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_INDETERMINATE: u8 = 3;
pub const EXIT_NON_EXTENDABLE: u8 = 4;

/// Environment variable capping the number of worker threads.
pub const WORKERS_ENV: &str = "CYCLIC_WORKERS";

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
    /// Extra machine-readable context for the report.
    pub detail: Option<serde_json::Value>,
}

impl CliError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INVALID,
            message: msg.into(),
            detail: None,
        }
    }

    pub fn io(msg: impl Into<String>) -> Self {
        CliError {
            code: 1,
            message: msg.into(),
            detail: None,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExhausted { .. } => EXIT_INDETERMINATE,
            Error::InternalConsistency(_) => 1,
            _ => EXIT_INVALID,
        };
        let detail = match &e {
            Error::GreedyStuck(state) => Some(serde_json::to_value(state).expect("serializable")),
            _ => None,
        };
        CliError {
            code,
            message: e.to_string(),
            detail,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "cyclic",
    version,
    about = "Triangulations of cyclic polytopes and simplex families on the moment curve"
)]
struct Cli {
    /// Write a JSON run report to this path.
    #[arg(long, global = true)]
    report: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the pair classification (A, B, C, D) of all simplices in a file.
    Classify {
        file: PathBuf,
        /// Dimension to classify in; defaults to the file's `d`.
        #[arg(long)]
        d: Option<usize>,
    },
    /// Extend a non-overlapping family to a triangulation of C(n, d).
    Extend {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = StrategyArg::Greedy)]
        strategy: StrategyArg,
        /// Search-node limit for the constructive strategy's poset enumeration.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
        budget: u64,
        /// Triangulation output path; standard output by default.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide whether a family of full-dimensional simplices extends.
    Certify {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Search)]
        method: MethodArg,
        #[arg(long, default_value_t = DEFAULT_CERTIFY_BUDGET)]
        budget: u64,
        /// Certificate output path; standard output by default.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Enumerate S(n, d) as a poset and check a structural property.
    Poset {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum)]
        check: Option<CheckArg>,
        /// Write the covering relation as a DOT digraph.
        #[arg(long)]
        export: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
        budget: u64,
    },
    /// Write an instance file from a named family.
    Generate {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Vertex count for random families.
        #[arg(long)]
        n: Option<u32>,
        /// Dimension for random families.
        #[arg(long)]
        d: Option<usize>,
        /// Base family for lifts; the canonical (8, 5) family by default.
        #[arg(long)]
        from: Option<PathBuf>,
        /// Number of times a lift is applied.
        #[arg(long, default_value_t = 1)]
        times: usize,
        /// Random candidate simplices drawn for `random`.
        #[arg(long, default_value_t = 64)]
        attempts: usize,
        /// Draw a maximal family of full-dimensional simplices instead.
        #[arg(long)]
        maximal: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Greedy,
    Constructive,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Search,
    Gale,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckArg {
    Lattice,
    MeetIntersection,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Rambau,
    LiftN,
    LiftD,
    Random,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_workers() {
        eprintln!("error: {}", e.message);
        return ExitCode::from(e.code);
    }
    let started = Instant::now();
    let mut rep = RunReport::new(std::env::args().skip(1).collect());
    let result = run(cli.command, &mut rep);
    let code = match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            rep.fail(&e);
            e.code
        }
    };
    rep.finish(started.elapsed(), code);
    if let Some(path) = cli.report.as_deref() {
        if let Err(e) = emit(Some(path), &to_json(&rep)) {
            eprintln!("error: {}", e.message);
            return ExitCode::from(e.code);
        }
    }
    ExitCode::from(code)
}

fn configure_workers() -> Result<(), CliError> {
    let Ok(raw) = std::env::var(WORKERS_ENV) else {
        return Ok(());
    };
    let n: usize = raw.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        CliError::invalid(format!("{WORKERS_ENV}={raw:?} is not a positive integer"))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::io(e.to_string()))
}

fn run(cmd: Command, rep: &mut RunReport) -> Result<u8, CliError> {
    match cmd {
        Command::Classify { file, d } => classify(&file, d, rep),
        Command::Extend {
            file,
            strategy,
            budget,
            output,
        } => extend(&file, strategy, budget, output.as_deref(), rep),
        Command::Certify {
            file,
            method,
            budget,
            output,
        } => certify(&file, method, budget, output.as_deref(), rep),
        Command::Poset {
            n,
            d,
            check,
            export,
            budget,
        } => poset(n, d, check, export.as_deref(), budget, rep),
        Command::Generate {
            family,
            seed,
            n,
            d,
            from,
            times,
            attempts,
            maximal,
            output,
        } => {
            rep.command = "generate".into();
            let c = generate(
                family,
                seed,
                n,
                d,
                from.as_deref(),
                times,
                attempts,
                maximal,
                rep,
            )?;
            rep.outputs = json!({ "n": c.n(), "d": c.d(), "simplices": c.len() });
            rep.verdict = "generated".into();
            emit(output.as_deref(), &to_json(&InstanceFile::from_complex(&c)))?;
            Ok(EXIT_OK)
        }
    }
}

fn load(file: &Path, rep: &mut RunReport) -> Result<InstanceFile, CliError> {
    let (inst, text) = read_instance(file)?;
    rep.add_input(file, &text);
    Ok(inst)
}

fn classify(file: &Path, d: Option<usize>, rep: &mut RunReport) -> Result<u8, CliError> {
    rep.command = "classify".into();
    let inst = load(file, rep)?;
    let simplices = inst.simplices()?;
    let d = d.unwrap_or(inst.d);
    let mut rows = Vec::with_capacity(simplices.len());
    for &s in &simplices {
        let row: String = simplices
            .iter()
            .map(|&t| classify_pair(s, t, d).map(|c| c.letter()))
            .collect::<Result<_, _>>()?;
        rows.push(row);
    }
    let width = simplices
        .iter()
        .map(|s| s.to_string().len())
        .max()
        .unwrap_or(0);
    for (s, row) in simplices.iter().zip(&rows) {
        let cells: Vec<String> = row.chars().map(String::from).collect();
        println!("{:>width$}  {}", s.to_string(), cells.join(" "));
    }
    rep.verdict = "classified".into();
    rep.outputs = json!({ "d": d, "simplices": simplices, "matrix": rows });
    Ok(EXIT_OK)
}

fn extend(
    file: &Path,
    strategy: StrategyArg,
    budget: u64,
    output: Option<&Path>,
    rep: &mut RunReport,
) -> Result<u8, CliError> {
    rep.command = "extend".into();
    let complex = load(file, rep)?.to_complex()?;
    let result = match strategy {
        StrategyArg::Greedy => greedy_extend(&complex),
        StrategyArg::Constructive => constructive_extend_with_budget(&complex, budget),
    };
    let result = match result {
        Ok(r) => r,
        Err(Error::GreedyStuck(state)) => {
            rep.steps = state.steps.clone();
            eprintln!("{}", to_json(&state));
            return Err(Error::GreedyStuck(state).into());
        }
        Err(e) => return Err(e.into()),
    };
    let t = &result.triangulation;
    let check = validate(t);
    if !check.ok || !complex.is_extended_by(t) {
        return Err(CliError::invalid(format!(
            "extension {t} failed validation: {:?}",
            check.failures
        )));
    }
    rep.verdict = "extended".into();
    rep.stats = json!({ "ops": result.ops, "facets": t.facets().len() });
    rep.outputs = json!({ "strategy": result.strategy });
    rep.steps = result.steps;
    emit(output, &to_json(t))?;
    Ok(EXIT_OK)
}

fn certify(
    file: &Path,
    method: MethodArg,
    budget: u64,
    output: Option<&Path>,
    rep: &mut RunReport,
) -> Result<u8, CliError> {
    rep.command = "certify".into();
    let complex = load(file, rep)?.to_complex()?;
    let cert = match method {
        MethodArg::Search => verify_nonextendable(&complex, budget),
        MethodArg::Gale => gale_dual_check(&complex),
    };
    let cert = match cert {
        Ok(c) => c,
        Err(Error::BudgetExhausted { budget }) => {
            rep.verdict = "indeterminate".into();
            rep.stats = json!({ "budget": budget });
            eprintln!("indeterminate: budget of {budget} search nodes exhausted");
            return Ok(EXIT_INDETERMINATE);
        }
        Err(e) => return Err(e.into()),
    };
    rep.verdict = match cert.verdict {
        Verdict::Extendable => "extendable",
        Verdict::NonExtendable => "non-extendable",
    }
    .into();
    if let Some(stats) = &cert.search {
        rep.stats = serde_json::to_value(stats).expect("serializable");
    }
    if let Some(g) = &cert.gale {
        rep.outputs = json!({ "dual_cones": g.dual_cones });
    }
    emit(output, &to_json(&cert))?;
    eprintln!("{}", rep.verdict);
    Ok(match cert.verdict {
        Verdict::Extendable => EXIT_OK,
        Verdict::NonExtendable => EXIT_NON_EXTENDABLE,
    })
}

fn poset(
    n: u32,
    d: usize,
    check: Option<CheckArg>,
    export: Option<&Path>,
    budget: u64,
    rep: &mut RunReport,
) -> Result<u8, CliError> {
    rep.command = "poset".into();
    let p = HstPoset::build_with_budget(n, d, budget)?;
    println!("|S({n},{d})| = {}", p.len());
    println!("covering relations: {}", p.covers().len());
    rep.stats = json!({ "elements": p.len(), "covers": p.covers().len() });
    rep.verdict = "enumerated".into();
    let pair_json = |(i, j): (usize, usize)| json!([p.element(i), p.element(j)]);
    match check {
        None => {}
        Some(CheckArg::Lattice) => {
            let v = p.lattice_violation();
            println!("lattice: {}", if v.is_none() { "yes" } else { "no" });
            if let Some((i, j)) = v {
                println!("witness: {} and {}", p.element(i), p.element(j));
            }
            rep.verdict = if v.is_none() {
                "lattice"
            } else {
                "not-lattice"
            }
            .into();
            rep.outputs = json!({ "witness": v.map(pair_json) });
        }
        Some(CheckArg::MeetIntersection) => {
            let v = p.meet_intersection_violation();
            println!(
                "meet-intersection: {}",
                if v.is_none() { "holds" } else { "fails" }
            );
            if let Some((i, j)) = v {
                println!("witness: {} and {}", p.element(i), p.element(j));
            }
            rep.verdict = if v.is_none() { "holds" } else { "fails" }.into();
            rep.outputs = json!({ "witness": v.map(pair_json) });
        }
    }
    if let Some(path) = export {
        emit(Some(path), &p.to_dot())?;
    }
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn generate(
    family: FamilyArg,
    seed: u64,
    n: Option<u32>,
    d: Option<usize>,
    from: Option<&Path>,
    times: usize,
    attempts: usize,
    maximal: bool,
    rep: &mut RunReport,
) -> Result<Complex, CliError> {
    rep.outputs = json!({ "seed": seed });
    match family {
        FamilyArg::Rambau => Ok(rambau_example()),
        FamilyArg::LiftN | FamilyArg::LiftD => {
            let mut c = match from {
                Some(path) => load(path, rep)?.to_complex()?,
                None => rambau_example(),
            };
            for _ in 0..times {
                c = match family {
                    FamilyArg::LiftN => lift_n(&c)?,
                    _ => lift_d(&c)?,
                };
            }
            Ok(c)
        }
        FamilyArg::Random => {
            let (Some(n), Some(d)) = (n, d) else {
                return Err(CliError::invalid("random families need --n and --d"));
            };
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            if maximal {
                if (n as usize) < d + 1 {
                    return Err(CliError::invalid(format!("n={n} is too small for d={d}")));
                }
                Ok(random_maximal_family(n, d, &mut rng)?)
            } else {
                Ok(random_complex(n, d, attempts, &mut rng)?)
            }
        }
    }
}
