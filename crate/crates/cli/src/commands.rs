use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use partition_forge::asm::{enumerate_asm, enumerate_tilings, MonotoneTriangle};
use partition_forge::cylindric::{enumerate_cpp, CylProfile};
use partition_forge::emit::{emit, Format};
use partition_forge::partitions::{partitions_of, Partition};
use partition_forge::verify::{
    asm_check, aztec_check, bijection_check, borodin_check, correspondences_check, lambda_check, macmahon_check,
    qt_borodin_check, refined_check, refined_multiset_records, stanley_check, weight_check, Check, CorrespondenceBounds,
    LambdaBounds,
};
use partition_forge::ForgeError;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::estimate;

pub enum Failure {
    Usage(String),
    Aborted(String),
}

impl From<ForgeError> for Failure {
    fn from(e: ForgeError) -> Self {
        Failure::Aborted(e.to_string())
    }
}

#[derive(Parser)]
#[command(name = "partition-forge", version, about = "Exact verification of partition, cylindric and ASM identities")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the report (or enumeration) to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Add 1 to the first left-hand value, to confirm that mismatches are detected.
    #[arg(long, global = true)]
    perturb: bool,
    /// Refuse runs whose predicted instance count exceeds this.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    max_instances: u64,
}

#[derive(Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Command {
    /// Borodin's product formula against enumerated cylindric plane partitions.
    VerifyBorodin(BorodinArgs),
    /// The (q,t) form with Macdonald weights, its q = t collapse and the weight simplification.
    VerifyQtBorodin(QtArgs),
    /// Stanley's hook product for reverse plane partitions.
    VerifyStanley(StanleyArgs),
    /// MacMahon's product for plane partitions.
    VerifyMacmahon(MacmahonArgs),
    /// The growth-diagram bijection between cylindric plane partitions and labelled diagrams.
    VerifyBijection(BijectionArgs),
    /// Robinson, RSK, Burge and the tableau counts.
    VerifyCorrespondences(CorrespondenceArgs),
    /// Alternating sign matrix counts, corner sums and interlacing families.
    VerifyAsm(AsmArgs),
    /// The λ-determinant recurrence, closed form and specializations.
    VerifyLambdaDet(LambdaArgs),
    /// The Aztec diamond tiling bijection and flips.
    VerifyAztec(AztecArgs),
    /// Write every object of a kind as JSON or CSV.
    Enumerate(EnumerateArgs),
}

#[derive(Args, Serialize)]
struct BorodinArgs {
    /// A single profile such as 10110; all profiles up to --max-period when omitted.
    #[arg(long)]
    profile: Option<String>,
    #[arg(long, default_value_t = 5)]
    max_period: usize,
    #[arg(long, default_value_t = 12)]
    max_weight: u32,
}

#[derive(Args, Serialize)]
struct QtArgs {
    #[arg(long)]
    profile: Option<String>,
    #[arg(long, default_value_t = 4)]
    max_period: usize,
    #[arg(long, default_value_t = 8)]
    max_weight: u32,
    /// Bound on the total degree in q and t.
    #[arg(long, default_value_t = 8)]
    max_degree: u32,
}

#[derive(Args, Serialize)]
struct StanleyArgs {
    /// A single shape such as 3,2,1; all shapes up to --max-boxes when omitted.
    #[arg(long)]
    shape: Option<String>,
    #[arg(long, default_value_t = 8)]
    max_boxes: u32,
    #[arg(long, default_value_t = 12)]
    max_weight: u32,
}

#[derive(Args, Serialize)]
struct MacmahonArgs {
    #[arg(long, default_value_t = 8)]
    max_weight: u32,
}

#[derive(Args, Serialize)]
struct BijectionArgs {
    #[arg(long)]
    profile: Option<String>,
    #[arg(long, default_value_t = 4)]
    max_period: usize,
    /// Bound on T|γ| + |d|.
    #[arg(long, default_value_t = 10)]
    max_weight: u32,
    /// Profiles up to this period also get the refined identity.
    #[arg(long, default_value_t = 3)]
    refined_period: usize,
    #[arg(long, default_value_t = 6)]
    refined_weight: u32,
}

#[derive(Args, Serialize)]
struct CorrespondenceArgs {
    #[arg(long, default_value_t = 5)]
    permutation_size: usize,
    #[arg(long, default_value_t = 8)]
    strip_size: u32,
    #[arg(long, default_value_t = 6)]
    factorial_size: u32,
    #[arg(long, default_value_t = 4)]
    margin_total: u32,
}

#[derive(Args, Serialize)]
struct AsmArgs {
    /// Largest matrix size.
    #[arg(long, default_value_t = 5)]
    n: usize,
}

#[derive(Args, Serialize)]
struct LambdaArgs {
    /// Largest size; every size up to it is checked.
    #[arg(long, default_value_t = 4)]
    n: usize,
    /// Random points per (n, k), and random matrices per n for condensation.
    #[arg(long, default_value_t = 20)]
    points: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest size for the symbolic comparisons.
    #[arg(long, default_value_t = 3)]
    symbolic_n: usize,
}

#[derive(Args, Serialize)]
struct AztecArgs {
    /// Largest diamond order.
    #[arg(long, default_value_t = 5)]
    n: usize,
    /// Largest order for direct enumeration and flips.
    #[arg(long, default_value_t = 3)]
    flip_n: usize,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Object {
    Partitions,
    Cpp,
    Asm,
    Triangles,
    Tilings,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Args, Serialize)]
struct EnumerateArgs {
    #[arg(long, value_enum)]
    object: Object,
    /// Size: partitions of n, n×n matrices or triangles, tilings of order n.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    profile: Option<String>,
    #[arg(long)]
    max_weight: Option<u32>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Serialize)]
struct Report {
    command: String,
    config: Value,
    checks: Vec<Check>,
    ok: bool,
}

type Task = (String, Box<dyn Fn() -> partition_forge::Result<Vec<Check>> + Send + Sync>);

fn parse_profile(text: &str) -> Result<CylProfile, Failure> {
    text.parse().map_err(|e: ForgeError| Failure::Usage(format!("malformed profile {text:?}: {e}")))
}

fn parse_shape(text: &str) -> Result<Partition, Failure> {
    let bad = |why: String| Failure::Usage(format!("malformed shape {text:?}: {why}"));
    let inner = text.trim().trim_start_matches('[').trim_end_matches(']');
    let parts: Vec<u32> = inner
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.trim().parse::<u32>().map_err(|e| bad(e.to_string())))
        .collect::<Result<_, _>>()?;
    Partition::new(parts).map_err(|e| bad(e.to_string()))
}

fn profiles(single: &Option<String>, max_period: usize) -> Result<Vec<CylProfile>, Failure> {
    match single {
        Some(p) => Ok(vec![parse_profile(p)?]),
        None => Ok((1..=max_period).flat_map(CylProfile::all_of_period).collect()),
    }
}

fn within_cap(predicted: u64, cap: u64) -> Result<(), Failure> {
    if predicted > cap {
        return Err(Failure::Usage(format!(
            "these bounds give about {predicted} instances, above the cap of {cap}; raise --max-instances to run anyway"
        )));
    }
    Ok(())
}

/// Runs the tasks in parallel, reports wall-clock time per task on stderr, and orders the
/// resulting checks by name.
fn run_tasks(tasks: Vec<Task>) -> Result<Vec<Check>, Failure> {
    let results: Vec<(String, f64, partition_forge::Result<Vec<Check>>)> = tasks
        .into_par_iter()
        .map(|(label, task)| {
            let start = Instant::now();
            let out = task();
            (label, start.elapsed().as_secs_f64(), out)
        })
        .collect();
    let mut checks = Vec::new();
    for (label, seconds, out) in results {
        eprintln!("{label}: {seconds:.3}s");
        checks.extend(out?);
    }
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(checks)
}

fn write_output(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn verification_tasks(command: &Command, cap: u64) -> Result<Vec<Task>, Failure> {
    let mut tasks: Vec<Task> = Vec::new();
    match command {
        Command::VerifyBorodin(a) => {
            let list = profiles(&a.profile, a.max_period)?;
            within_cap(estimate::cylindric(&list, a.max_weight), cap)?;
            for p in list {
                let w = a.max_weight;
                tasks.push((format!("borodin {p}"), Box::new(move || Ok(vec![borodin_check(&p, w)]))));
            }
        }
        Command::VerifyQtBorodin(a) => {
            let list = profiles(&a.profile, a.max_period)?;
            within_cap(estimate::cylindric(&list, a.max_weight), cap)?;
            for p in list {
                let (w, d) = (a.max_weight, a.max_degree);
                tasks.push((format!("qt-borodin {p}"), Box::new(move || Ok(vec![qt_borodin_check(&p, w, d), weight_check(&p, w)]))));
            }
        }
        Command::VerifyStanley(a) => {
            let shapes = match &a.shape {
                Some(s) => vec![parse_shape(s)?],
                None => (1..=a.max_boxes).flat_map(partitions_of).collect(),
            };
            within_cap(estimate::stanley(&shapes, a.max_weight), cap)?;
            for s in shapes {
                let w = a.max_weight;
                tasks.push((format!("stanley {s}"), Box::new(move || Ok(vec![stanley_check(&s, w)]))));
            }
        }
        Command::VerifyMacmahon(a) => {
            within_cap(estimate::plane_partitions(a.max_weight), cap)?;
            let w = a.max_weight;
            tasks.push(("macmahon".into(), Box::new(move || Ok(vec![macmahon_check(w)]))));
        }
        Command::VerifyBijection(a) => {
            let list = profiles(&a.profile, a.max_period)?;
            within_cap(estimate::cylindric(&list, a.max_weight).saturating_mul(2), cap)?;
            for p in list {
                let (w, refined) = (a.max_weight, (p.period() <= a.refined_period).then_some(a.refined_weight));
                tasks.push((
                    format!("bijection {p}"),
                    Box::new(move || {
                        let mut out = vec![bijection_check(&p, w)?];
                        if let Some(rw) = refined {
                            out.push(refined_check(&p, rw));
                            out.push(Check::new(format!("refined multisets {p}"), refined_multiset_records(&p, rw)?));
                        }
                        Ok(out)
                    }),
                ));
            }
        }
        Command::VerifyCorrespondences(a) => {
            within_cap(estimate::correspondences(a.permutation_size, a.strip_size), cap)?;
            let bounds = CorrespondenceBounds {
                permutation_size: a.permutation_size,
                strip_rule_size: a.strip_size,
                factorial_size: a.factorial_size,
                margin_total: a.margin_total,
            };
            tasks.push(("correspondences".into(), Box::new(move || Ok(vec![correspondences_check(&bounds)?]))));
        }
        Command::VerifyAsm(a) => {
            within_cap(estimate::matrices(a.n), cap)?;
            let n = a.n;
            tasks.push(("asm".into(), Box::new(move || Ok(vec![asm_check(n)?]))));
        }
        Command::VerifyLambdaDet(a) => {
            if a.n == 0 {
                return Err(Failure::Usage("--n must be at least 1".into()));
            }
            within_cap(estimate::matrices(a.n).saturating_mul((a.points as u64 + 1) * a.n as u64), cap)?;
            let bounds = LambdaBounds { max_size: a.n, points: a.points, seed: a.seed, symbolic_size: a.symbolic_n };
            tasks.push(("lambda-determinant".into(), Box::new(move || Ok(vec![lambda_check(&bounds)?]))));
        }
        Command::VerifyAztec(a) => {
            within_cap(estimate::tilings(a.n), cap)?;
            let (n, flip_n) = (a.n, a.flip_n);
            tasks.push(("aztec".into(), Box::new(move || Ok(vec![aztec_check(n, flip_n)?]))));
        }
        Command::Enumerate(_) => unreachable!("enumerate does not verify"),
    }
    Ok(tasks)
}

fn enumerate(a: &EnumerateArgs, cap: u64) -> Result<String, Failure> {
    let need_n = || a.n.ok_or_else(|| Failure::Usage("this object needs --n".into()));
    let format = match a.format {
        OutputFormat::Json => Format::Json,
        OutputFormat::Csv => Format::Csv,
    };
    let text = match a.object {
        Object::Partitions => {
            let n = need_n()? as u32;
            within_cap(estimate::plane_partitions(n), cap)?;
            emit(&partitions_of(n), format)?
        }
        Object::Cpp => {
            let profile = parse_profile(a.profile.as_deref().ok_or_else(|| Failure::Usage("cpp needs --profile".into()))?)?;
            let w = a.max_weight.ok_or_else(|| Failure::Usage("cpp needs --max-weight".into()))?;
            within_cap(estimate::cylindric(std::slice::from_ref(&profile), w), cap)?;
            emit(&enumerate_cpp(&profile, w), format)?
        }
        Object::Asm | Object::Triangles => {
            let n = need_n()?;
            within_cap(estimate::matrices(n), cap)?;
            let all = enumerate_asm(n)?;
            match a.object {
                Object::Asm => emit(&all, format)?,
                _ => emit(&all.iter().map(MonotoneTriangle::of).collect::<Vec<_>>(), format)?,
            }
        }
        Object::Tilings => {
            let n = need_n()?;
            within_cap(estimate::tilings(n), cap)?;
            emit(&enumerate_tilings(n)?, format)?
        }
    };
    Ok(text)
}

fn command_name(command: &Command) -> String {
    match serde_json::to_value(command) {
        Ok(Value::Object(map)) => map.keys().next().cloned().unwrap_or_default(),
        _ => String::new(),
    }
}

/// Runs one command; `Ok(true)` when every check matches.
pub fn run(cli: Cli) -> Result<bool, Failure> {
    if let Command::Enumerate(a) = &cli.command {
        let text = enumerate(a, cli.max_instances)?;
        write_output(&cli.out, &text)?;
        return Ok(true);
    }
    let tasks = verification_tasks(&cli.command, cli.max_instances)?;
    let mut checks = run_tasks(tasks)?;
    if cli.perturb {
        if let Some(first) = checks.first_mut() {
            first.perturb();
        }
    }
    let name = command_name(&cli.command);
    let args = match serde_json::to_value(&cli.command) {
        Ok(Value::Object(mut map)) => map.remove(&name).unwrap_or(Value::Null),
        _ => Value::Null,
    };
    let ok = checks.iter().all(|c| c.ok);
    let report = Report {
        command: name,
        config: json!({ "args": args, "perturb": cli.perturb, "max_instances": cli.max_instances }),
        checks,
        ok,
    };
    let mut text = serde_json::to_string_pretty(&report).map_err(|e| Failure::Aborted(e.to_string()))?;
    text.push('\n');
    write_output(&cli.out, &text)?;
    let mismatches: usize = report.checks.iter().map(Check::mismatches).sum();
    eprintln!("{}: {} checks, {mismatches} mismatched records", report.command, report.checks.len());
    Ok(ok)
}
