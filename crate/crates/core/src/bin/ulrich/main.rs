//! `ulrich`: command-line front end for the ulrich-core library.
//!
//! Exit codes: 0 success or the property holds, 1 negative verdict, 2 usage
//! or input error, 3 budget exhausted before a complete answer.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ulrich_core::analysis::{
    greedy_word, middle_gap, rectangle_check, sumset_decompose, trapezoid_witnesses,
    PreUlrichTriple, SumsetOutcome,
};
use ulrich_core::diagram::{Diagram, DiagramSpec, Renderer};
use ulrich_core::families::{FamilyId, FAMILY_NAMES, SPORADIC_NAMES};
use ulrich_core::geometry::{
    bundle_rank, bwb_cohomology, flag_degree, flag_dimension, is_ulrich_via_bwb,
    ulrich_identity_check, CohomologyAnswer, PolarizationWeights, SchurWeight,
};
use ulrich_core::search::{
    enumerate_ulrich, git_describe, verify_conjecture_sweep, verify_no_multistep, write_records,
    Checkpoint, Limits, Manifest, SearchMode, SearchSpec, SuiteReport, SCHEMA_VERSION,
};
use ulrich_core::{is_ulrich, BlockedPartition, Error, FlagType, Witness};

/// Largest conjecture-sweep bound allowed without `--long-run`.
const SHORT_SWEEP_MAX_SUM: usize = 10;

#[derive(Parser, Debug)]
#[command(name = "ulrich", version, about = "Ulrich partitions and Ulrich Schur bundles on flag varieties")]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,

    /// Wall-clock cap for searches; a capped search exits with code 3.
    #[arg(long, global = true, value_name = "SECONDS")]
    budget_seconds: Option<f64>,

    /// Worker threads for searches (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Test whether a partition is Ulrich and print its collision schedule.
    Check {
        #[arg(allow_hyphen_values = true)]
        partition: String,
    },
    /// Draw the time-evolution diagram of a partition.
    Diagram(DiagramArgs),
    /// Enumerate all Ulrich partitions of a type, up to translation.
    Enumerate(EnumerateArgs),
    /// Build a member of a known family.
    Family(FamilyArgs),
    /// Structural analysis of a three-block partition.
    Analyze {
        #[arg(allow_hyphen_values = true)]
        partition: String,
    },
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Flag-variety and Schur-bundle invariants.
    Geometry(GeometryArgs),
}

#[derive(Args, Debug)]
struct DiagramArgs {
    #[arg(allow_hyphen_values = true)]
    partition: String,
    /// Render SVG instead of ASCII.
    #[arg(long)]
    svg: bool,
    /// Display velocity per block, e.g. `2,1,0`. Consecutive values must
    /// differ by 1.
    #[arg(long, allow_hyphen_values = true, value_name = "V1,V2,...")]
    velocities: Option<String>,
    /// Write to a file instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    /// Block lengths, e.g. `1,3,1`.
    #[arg(long = "type", value_name = "L1,L2,...")]
    ftype: String,
    #[arg(long, default_value = "time-branching")]
    mode: String,
    /// Node cap for the search.
    #[arg(long)]
    max_nodes: Option<u64>,
    /// Also write the classes as JSON lines to this file.
    #[arg(long)]
    records: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    /// Family name; see `--list`.
    #[arg(long, required_unless_present = "list")]
    name: Option<String>,
    /// Comma-separated parameters.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    params: String,
    /// Apply the symmetry `P ↦ -reverse(P)`, which reverses the type.
    #[arg(long)]
    mirror: bool,
    /// List the family names.
    #[arg(long)]
    list: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    /// Types with four or more blocks.
    Multistep,
    /// Three-block types with the last two lengths at least 3.
    Conjecture,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    /// Total-length bound for the multistep suite.
    #[arg(long, default_value_t = 7)]
    max_length: usize,
    /// Block-sum bound for the conjecture suite.
    #[arg(long, default_value_t = 10)]
    max_sum: usize,
    /// Permit conjecture bounds above 10.
    #[arg(long)]
    long_run: bool,
    /// Resume from and append to this JSONL checkpoint.
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    /// Write a run manifest to this file.
    #[arg(long)]
    manifest: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GeometryOp {
    Degree,
    Dimension,
    Rank,
    H0,
    Cohomology,
    UlrichCheck,
}

#[derive(Args, Debug)]
struct GeometryArgs {
    #[arg(value_enum)]
    op: GeometryOp,
    /// Flag variety `F(k1,...,kr; n)` written `k1,...,kr:n`.
    #[arg(long, value_name = "K1,K2:N")]
    flag: Option<String>,
    /// Polarization weights `a1,...,ar` (default all 1).
    #[arg(long)]
    weights: Option<String>,
    /// Schur weight in partition notation, e.g. `6|5,2,2,1|1`.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Twist `t` in `E_λ(-t)`.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    twist: i64,
}

enum Outcome {
    Holds,
    Negative,
    Budget,
}

impl Outcome {
    fn code(&self) -> ExitCode {
        match self {
            Outcome::Holds => ExitCode::SUCCESS,
            Outcome::Negative => ExitCode::from(1),
            Outcome::Budget => ExitCode::from(3),
        }
    }
}

fn main() -> ExitCode {
    reset_sigpipe();
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: cannot start {n} threads: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(o) => o.code(),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Dies quietly when the reader of stdout goes away (`ulrich ... | head`)
/// instead of panicking inside `println!`.
#[cfg(unix)]
fn reset_sigpipe() {
    // SAFETY: restoring a default signal disposition before any threads start.
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    match &cli.command {
        Command::Check { partition } => cmd_check(cli, partition),
        Command::Diagram(a) => cmd_diagram(cli, a),
        Command::Enumerate(a) => cmd_enumerate(cli, a),
        Command::Family(a) => cmd_family(cli, a),
        Command::Analyze { partition } => cmd_analyze(cli, partition),
        Command::Verify(a) => cmd_verify(cli, a),
        Command::Geometry(a) => cmd_geometry(cli, a),
    }
}

fn limits(cli: &Cli) -> Limits {
    match cli.budget_seconds {
        Some(s) => Limits::seconds(s),
        None => Limits::unlimited(),
    }
}

fn print_json(mut v: Value) {
    if let Value::Object(m) = &mut v {
        m.insert("schema".into(), json!(SCHEMA_VERSION));
    }
    println!("{v}");
}

fn parse_usizes(s: &str, what: &str) -> Result<Vec<usize>, Error> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| {
            x.parse()
                .map_err(|_| Error::InvalidType(format!("{what}: {x:?} is not a nonnegative integer")))
        })
        .collect()
}

fn parse_type(s: &str) -> Result<FlagType, Error> {
    FlagType::new(parse_usizes(s.trim_matches(|c| c == '(' || c == ')'), "type")?)
}

fn cmd_check(cli: &Cli, s: &str) -> Result<Outcome, Error> {
    let p: BlockedPartition = s.parse()?;
    let v = is_ulrich(&p);
    let n = p.dimension();
    if cli.json {
        let events: Vec<Value> = v
            .schedule
            .events()
            .iter()
            .map(|e| {
                json!({
                    "time": e.time.to_string(),
                    "left": [e.left.block, e.left.index],
                    "right": [e.right.block, e.right.index],
                })
            })
            .collect();
        print_json(json!({
            "partition": p.to_string(),
            "type": p.flag_type(),
            "n_dim": n,
            "ulrich": v.is_ulrich,
            "witness": v.witness.map(|w| w.to_string()),
            "schedule": events,
        }));
    } else {
        let verdict = if v.is_ulrich { "ULRICH" } else { "NOT-ULRICH" };
        println!("{verdict} {p}  type {}  N={n}", p.flag_type());
        if let Some(w) = &v.witness {
            println!("reason: {w}");
        }
        for e in v.schedule.events() {
            let mark = match &v.witness {
                Some(Witness::NonIntegral(bad)) if bad == e => "  <- non-integral",
                Some(Witness::Duplicate { first, second }) if first == e || second == e => {
                    "  <- repeated time"
                }
                _ => "",
            };
            println!("  {e}{mark}");
        }
    }
    Ok(if v.is_ulrich { Outcome::Holds } else { Outcome::Negative })
}

fn cmd_diagram(cli: &Cli, a: &DiagramArgs) -> Result<Outcome, Error> {
    let p: BlockedPartition = a.partition.parse()?;
    let renderer = if a.svg { Renderer::Svg } else { Renderer::Ascii };
    let mut spec = DiagramSpec::new(p, renderer);
    if let Some(v) = &a.velocities {
        let vel = v
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Diagram(format!("{x:?} is not an integer velocity")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        spec = spec.with_velocities(vel)?;
    }
    let d = Diagram::build(&spec)?;
    let text = if cli.json {
        let mut v = serde_json::to_value(&d)?;
        if let Value::Object(m) = &mut v {
            m.insert("schema".into(), json!(SCHEMA_VERSION));
            m.insert("partition".into(), json!(spec.partition.to_string()));
        }
        format!("{v}\n")
    } else {
        d.render(renderer)
    };
    match &a.output {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(Outcome::Holds)
}

fn cmd_enumerate(cli: &Cli, a: &EnumerateArgs) -> Result<Outcome, Error> {
    let ftype = parse_type(&a.ftype)?;
    let mode: SearchMode = a.mode.parse()?;
    let mut lim = limits(cli);
    lim.max_nodes = a.max_nodes;
    let r = enumerate_ulrich(&SearchSpec::new(ftype, mode).with_limits(lim))?;
    if let Some(path) = &a.records {
        write_records(BufWriter::new(File::create(path)?), &r.classes)?;
    }
    if cli.json {
        let stdout = std::io::stdout();
        write_records(stdout.lock(), &r.classes)?;
    } else {
        println!(
            "type {}  N={}  classes={}  nodes={}  elapsed={:.3}s  {}",
            r.ftype,
            r.ftype.dimension(),
            r.count,
            r.nodes,
            r.elapsed.as_secs_f64(),
            if r.exhausted { "complete" } else { "INCOMPLETE (budget exhausted)" }
        );
        for p in &r.classes {
            println!("  {p}");
        }
        for (i, j) in r.symmetric_pairs() {
            if i == j {
                println!("  self-symmetric: {}", r.classes[i]);
            } else {
                println!("  symmetric pair: {} <-> {}", r.classes[i], r.classes[j]);
            }
        }
    }
    if !r.exhausted {
        eprintln!("warning: search budget exhausted; the list may be incomplete");
        return Ok(Outcome::Budget);
    }
    Ok(Outcome::Holds)
}

fn cmd_family(cli: &Cli, a: &FamilyArgs) -> Result<Outcome, Error> {
    if a.list {
        if cli.json {
            print_json(json!({ "families": FAMILY_NAMES, "sporadic": SPORADIC_NAMES }));
        } else {
            for name in FAMILY_NAMES {
                println!("{name}");
            }
            println!("(sporadic parameters: {})", SPORADIC_NAMES.join(", "));
        }
        return Ok(Outcome::Holds);
    }
    let name = a.name.as_deref().expect("clap requires --name without --list");
    let id = FamilyId::parse(name, &a.params)?;
    let mut p = id.build()?;
    if a.mirror {
        p = p.symmetric();
    }
    let ok = is_ulrich(&p).is_ulrich;
    if cli.json {
        print_json(json!({
            "family": id,
            "mirror": a.mirror,
            "partition": p.to_string(),
            "type": p.flag_type(),
            "n_dim": p.dimension(),
            "ulrich": ok,
        }));
    } else {
        println!("{p}");
    }
    Ok(if ok { Outcome::Holds } else { Outcome::Negative })
}

fn cmd_analyze(cli: &Cli, s: &str) -> Result<Outcome, Error> {
    let p: BlockedPartition = s.parse()?;
    let triple = PreUlrichTriple::from_partition(&p)?;
    let diagnosis = triple.diagnose();
    let ulrich = is_ulrich(&p).is_ulrich;
    if !ulrich {
        if cli.json {
            print_json(json!({
                "partition": p.to_string(),
                "ulrich": false,
                "diagnosis": diagnosis,
            }));
        } else {
            println!("NOT-ULRICH {p}  diagnosis: {diagnosis:?}");
        }
        return Ok(Outcome::Negative);
    }
    let word = greedy_word(&p)?;
    let sumset = if p.block(1).len() == 1 {
        Some(sumset_decompose(&p)?)
    } else {
        None
    };
    let rectangle = rectangle_check(&p)?;
    let trapezoids = trapezoid_witnesses(&p)?;
    let gap = middle_gap(&p);
    let all_hold = trapezoids.iter().all(|w| w.holds);
    if cli.json {
        print_json(json!({
            "partition": p.to_string(),
            "type": p.flag_type(),
            "n_dim": p.dimension(),
            "ulrich": true,
            "greedy_word": word,
            "sumset": sumset,
            "rectangle": rectangle,
            "trapezoids": trapezoids,
            "middle_gap": gap,
        }));
    } else {
        println!("ULRICH {p}  type {}  N={}", p.flag_type(), p.dimension());
        println!("greedy word  {word}");
        match &sumset {
            Some(SumsetOutcome::Decomposed(d)) => println!(
                "sumset       A'={:?} C'={:?} N'={}",
                d.a_prime, d.c_prime, d.n_prime
            ),
            Some(SumsetOutcome::Failed { reason }) => println!("sumset       fails: {reason}"),
            None => println!("sumset       n/a (middle block has {} entries)", p.block(1).len()),
        }
        println!("rectangle    {}", if rectangle { "holds" } else { "FAILS" });
        println!(
            "trapezoids   {} witnesses, {}",
            trapezoids.len(),
            if all_hold { "all hold" } else { "SOME FAIL" }
        );
        for w in trapezoids.iter().filter(|w| !w.holds) {
            println!("  fails: a={} a*={} c={} c*={}", w.a, w.a_star, w.c, w.c_star);
        }
        if let Some(g) = gap {
            println!("middle gap   {g}");
        }
    }
    Ok(if rectangle && all_hold {
        Outcome::Holds
    } else {
        Outcome::Negative
    })
}

fn cmd_verify(cli: &Cli, a: &VerifyArgs) -> Result<Outcome, Error> {
    let lim = limits(cli);
    let checkpoint = a.checkpoint.as_ref().map(Checkpoint::open).transpose()?;
    let (report, bounds) = match a.suite {
        Suite::Multistep => (
            verify_no_multistep(a.max_length, lim, checkpoint.as_ref())?,
            json!({ "max_length": a.max_length }),
        ),
        Suite::Conjecture => {
            if a.max_sum > SHORT_SWEEP_MAX_SUM && !a.long_run {
                return Err(Error::Search(format!(
                    "--max-sum {} exceeds {SHORT_SWEEP_MAX_SUM}; pass --long-run (and ideally --checkpoint)",
                    a.max_sum
                )));
            }
            (
                verify_conjecture_sweep(a.max_sum, lim, checkpoint.as_ref())?,
                json!({ "max_sum": a.max_sum }),
            )
        }
    };
    if let Some(path) = &a.manifest {
        let m = Manifest {
            schema: SCHEMA_VERSION,
            suite: report.suite.clone(),
            types: report.reports.iter().map(|r| r.ftype.lengths().to_vec()).collect(),
            bounds: bounds.clone(),
            git_describe: git_describe().to_string(),
            elapsed_seconds: report.elapsed.as_secs_f64(),
        };
        let mut f = BufWriter::new(File::create(path)?);
        serde_json::to_writer_pretty(&mut f, &m)?;
        f.write_all(b"\n")?;
        f.flush()?;
    }
    let found: usize = report.reports.iter().map(|r| r.count).sum();
    let outcome = if report.counterexamples().next().is_some() {
        Outcome::Negative
    } else if report.incomplete().next().is_some() {
        Outcome::Budget
    } else {
        Outcome::Holds
    };
    if cli.json {
        print_json(json!({
            "suite": report.suite,
            "bounds": bounds,
            "passed": report.passed(),
            "found": found,
            "report": &report,
        }));
    } else {
        print_suite(&report);
        let verdict = match outcome {
            Outcome::Holds => "PASS",
            Outcome::Negative => "FAIL",
            Outcome::Budget => "INCOMPLETE",
        };
        println!(
            "{verdict} ({found} found, {} of {} types complete, {:.2}s)",
            report.completed().count(),
            report.reports.len(),
            report.elapsed.as_secs_f64()
        );
    }
    Ok(outcome)
}

fn print_suite(report: &SuiteReport) {
    for r in &report.reports {
        let state = if report.resumed.contains(&r.ftype) {
            "resumed"
        } else if r.exhausted {
            "complete"
        } else {
            "INCOMPLETE"
        };
        println!(
            "  {:<16} N={:<4} classes={:<3} nodes={:<12} {state}",
            r.ftype.to_string(),
            r.ftype.dimension(),
            r.count,
            r.nodes
        );
        for p in &r.classes {
            println!("    {p}");
        }
    }
}

fn parse_flag(s: &str) -> Result<FlagType, Error> {
    let (ks, n) = s
        .split_once(':')
        .ok_or_else(|| Error::InvalidType(format!("flag {s:?} must look like k1,k2:n")))?;
    let n = n
        .trim()
        .parse::<usize>()
        .map_err(|_| Error::InvalidType(format!("{n:?} is not a valid n")))?;
    FlagType::from_flag(&parse_usizes(ks, "flag")?, n)
}

fn cmd_geometry(cli: &Cli, a: &GeometryArgs) -> Result<Outcome, Error> {
    let lambda = a.lambda.as_deref().map(SchurWeight::parse).transpose()?;
    let ftype = match (&a.flag, &lambda) {
        (Some(f), Some(w)) => {
            let t = parse_flag(f)?;
            if &t != w.flag_type() {
                return Err(Error::Weight(format!(
                    "lambda has type {} but the flag is {t}",
                    w.flag_type()
                )));
            }
            t
        }
        (Some(f), None) => parse_flag(f)?,
        (None, Some(w)) => w.flag_type().clone(),
        (None, None) => return Err(Error::InvalidType("pass --flag or --lambda".into())),
    };
    let need_lambda = || {
        lambda
            .clone()
            .ok_or_else(|| Error::Weight(format!("{:?} needs --lambda", a.op)))
    };
    let (value, outcome): (Value, Outcome) = match a.op {
        GeometryOp::Dimension => (json!({ "dimension": flag_dimension(&ftype) }), Outcome::Holds),
        GeometryOp::Degree => {
            let w = match &a.weights {
                Some(s) => PolarizationWeights::new(
                    parse_usizes(s, "weights")?.into_iter().map(|x| x as u64).collect(),
                )?,
                None => PolarizationWeights::ones(ftype.steps()),
            };
            let d = flag_degree(&ftype, &w)?;
            (json!({ "degree": d.to_string(), "weights": w.a() }), Outcome::Holds)
        }
        GeometryOp::Rank => (json!({ "rank": bundle_rank(&need_lambda()?).to_string() }), Outcome::Holds),
        GeometryOp::H0 => {
            let h0 = match bwb_cohomology(&need_lambda()?, 0) {
                CohomologyAnswer::Nonzero { q: 0, dim, .. } => dim.to_string(),
                _ => "0".to_string(),
            };
            (json!({ "h0": h0 }), Outcome::Holds)
        }
        GeometryOp::Cohomology => {
            let c = bwb_cohomology(&need_lambda()?, a.twist);
            (json!({ "twist": a.twist, "cohomology": c }), Outcome::Holds)
        }
        GeometryOp::UlrichCheck => {
            let w = need_lambda()?;
            let ulrich = is_ulrich_via_bwb(&w);
            let identity = ulrich_identity_check(&w).ok().map(|id| {
                json!({
                    "h0": id.h0.to_string(),
                    "rank": id.rank.to_string(),
                    "degree": id.degree.to_string(),
                    "ok": id.ok,
                })
            });
            let o = if ulrich { Outcome::Holds } else { Outcome::Negative };
            (json!({ "ulrich": ulrich, "identity": identity }), o)
        }
    };
    if cli.json {
        let mut v = value;
        if let Value::Object(m) = &mut v {
            m.insert("flag_type".into(), json!(ftype));
            if let Some(w) = &lambda {
                m.insert("lambda".into(), json!(w.to_string()));
            }
        }
        print_json(v);
    } else {
        print_geometry(&value);
    }
    Ok(outcome)
}

fn print_geometry(v: &Value) {
    let Value::Object(m) = v else { return };
    for (k, val) in m {
        match val {
            Value::String(s) => println!("{k} = {s}"),
            Value::Object(inner) if k == "cohomology" => match inner.get("kind").and_then(Value::as_str) {
                Some("vanishes") => println!("cohomology: all groups vanish"),
                _ => println!(
                    "cohomology: H^{} has dimension {} (mu = {})",
                    inner["q"], inner["dim"].as_str().unwrap_or("?"), inner["mu"]
                ),
            },
            Value::Object(inner) => {
                for (k2, v2) in inner {
                    match v2 {
                        Value::String(s) => println!("{k2} = {s}"),
                        other => println!("{k2} = {other}"),
                    }
                }
            }
            Value::Null => {}
            other => println!("{k} = {other}"),
        }
    }
}
