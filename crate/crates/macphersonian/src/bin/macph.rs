//! Command-line front end: enumeration, poset and homology pipelines, the
//! verification suites, and the Grassmannian oracle. All logic lives in the
//! library; this binary parses flags, moves bytes, and maps failures to the
//! stable exit-code contract:
//!
//! 0 ok, 1 I/O failure, 2 usage, 3 malformed input, 4 resource/budget,
//! 5 verification failure.
//!
//! Human-readable progress goes to stderr; data goes to stdout or files.
//! Outputs written to files are cached under `OMCACHE_DIR` (default
//! `./.omcache`) keyed by command and canonical parameters, verified by
//! digest on every hit, and accompanied by a `.manifest.json`.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use macphersonian::chirotope::{Chirotope, OrientedMatroid};
use macphersonian::covector::CovectorSphere;
use macphersonian::homology::{
    betti_gf2, betti_integer, euler_characteristic, grassmann_betti_mod2, order_complex,
    BettiVector, DEFAULT_INTEGER_BUDGET,
};
use macphersonian::macph::{
    build_poset, count_chirotopes_with, enumerate_chirotopes_with, MacphError, Poset, PosetFile,
};
use macphersonian::manifest::{OutputCache, RunManifest};
use macphersonian::verify::{
    run_all, run_axioms, run_maxcov, run_realizable, run_sphere, SuiteOptions, SuiteReport,
};

const EXIT_IO: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_INPUT: i32 = 3;
const EXIT_RESOURCE: i32 = 4;
const EXIT_VERIFY: i32 = 5;

/// Poset construction above this many nodes is refused as a resource error.
const MAX_POSET_NODES: usize = 20_000;

const DEFAULT_GF2_BUDGET: usize = 20_000_000;

#[derive(Parser)]
#[command(name = "macph", version, about = "Rank-3 oriented matroid toolkit")]
struct Cli {
    /// Bound the rayon worker count (default: available cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Machine-readable JSON summaries on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Bypass the output cache.
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate chirotopes or oriented matroids on [n] as JSONL.
    Enumerate(EnumerateArgs),
    /// Build the weak-order poset of an enumerated JSONL file.
    Poset(PosetArgs),
    /// Homology of a poset file's order complex.
    Homology(HomologyArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Mod-2 Betti numbers of the real Grassmannian G(k,n).
    Grassmann(GrassmannArgs),
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    /// Emit chirotopes instead of canonical oriented matroids.
    #[arg(long)]
    oriented: bool,
    /// Keep only uniform (all-nonzero) sign maps.
    #[arg(long)]
    uniform_only: bool,
    /// Drop oriented matroids that have loops.
    #[arg(long)]
    no_loops: bool,
    /// Write full JSONL output even at n = 6 (otherwise counts only).
    #[arg(long)]
    force: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PosetArgs {
    #[arg(long, value_name = "FILE")]
    r#in: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Treat input lines as chirotopes (the oriented MacPhersonian).
    #[arg(long)]
    oriented: bool,
}

#[derive(Args)]
struct HomologyArgs {
    #[arg(long, value_name = "FILE")]
    r#in: PathBuf,
    #[arg(long, value_enum, default_value_t = Field::Gf2)]
    field: Field,
    /// Simplex budget; defaults to 20000000 for gf2 and 200000 for z.
    #[arg(long)]
    budget: Option<usize>,
    /// Compare GF(2) Betti numbers against G(k,n), as "k,n"; mismatch
    /// exits 5.
    #[arg(long, value_name = "K,N")]
    expect: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Field {
    Gf2,
    Z,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Seeded configurations for the realizable suite.
    #[arg(long, default_value_t = 1000)]
    count: usize,
    /// Sample size for enumerative suites at n = 5.
    #[arg(long, default_value_t = 100)]
    sample: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Axioms,
    Sphere,
    Maxcov,
    Realizable,
    All,
}

#[derive(Args)]
struct GrassmannArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl ToString) -> Failure {
        Failure {
            code,
            message: message.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::new(EXIT_IO, format!("I/O error: {e}"))
    }
}

impl From<MacphError> for Failure {
    fn from(e: MacphError) -> Failure {
        let code = match e {
            MacphError::NOutOfRange(_) => EXIT_USAGE,
            _ => EXIT_INPUT,
        };
        Failure::new(code, e)
    }
}

fn main() {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .ok();
    }
    let result = match &cli.command {
        Command::Enumerate(args) => cmd_enumerate(&cli, args),
        Command::Poset(args) => cmd_poset(&cli, args),
        Command::Homology(args) => cmd_homology(&cli, args),
        Command::Verify(args) => cmd_verify(&cli, args),
        Command::Grassmann(args) => cmd_grassmann(&cli, args),
    };
    if let Err(f) = result {
        eprintln!("macph: {}", f.message);
        std::process::exit(f.code);
    }
}

/// One JSONL line of an enumeration.
#[derive(Serialize, Deserialize)]
struct OmRecord {
    n: usize,
    chi: String,
    loops: Vec<usize>,
    topes: usize,
}

fn cache(cli: &Cli) -> Option<OutputCache> {
    if cli.no_cache {
        None
    } else {
        Some(OutputCache::from_env())
    }
}

/// Writes `bytes` to `out` (or stdout), with manifest and cache bookkeeping.
fn deliver_output(
    out: Option<&Path>,
    bytes: &[u8],
    mut manifest: RunManifest,
    started: Instant,
    cache: Option<&OutputCache>,
    cache_key: &str,
) -> Result<(), Failure> {
    if let Some(c) = cache {
        c.store(cache_key, bytes)?;
    }
    match out {
        Some(path) => {
            fs::write(path, bytes)?;
            manifest.record_output(path, bytes);
            manifest.wall_time_ms = started.elapsed().as_millis() as u64;
            manifest.write_alongside(path)?;
        }
        None => {
            use std::io::Write;
            std::io::stdout().write_all(bytes)?;
        }
    }
    Ok(())
}

fn cmd_enumerate(cli: &Cli, args: &EnumerateArgs) -> Result<(), Failure> {
    let started = Instant::now();
    let manifest = RunManifest::new("enumerate")
        .parameter("n", args.n)
        .parameter("oriented", args.oriented)
        .parameter("uniform_only", args.uniform_only)
        .parameter("no_loops", args.no_loops);
    let params = manifest.canonical_parameters();
    let key = OutputCache::key("enumerate", &params);

    if args.n == 6 && !args.force {
        // The n = 6 census is large; report counts only unless forced.
        let chirotopes = count_chirotopes_with(6, args.uniform_only)?;
        eprintln!("n=6: counts only; pass --force to write records");
        summarize_count(cli, args, chirotopes, chirotopes / 2);
        return Ok(());
    }

    let cache = cache(cli);
    let cached = cache.as_ref().and_then(|c| c.lookup(&key));
    let was_hit = cached.is_some();
    let bytes = match cached {
        Some(bytes) => {
            eprintln!("cache hit for enumerate ({params})");
            bytes
        }
        None => {
            let chis = enumerate_chirotopes_with(args.n, args.uniform_only)?;
            let mut lines = String::new();
            if args.oriented {
                for chi in &chis {
                    if args.no_loops && !chi.loops().is_empty() {
                        continue;
                    }
                    push_record(&mut lines, args.n, chi);
                }
            } else {
                let mut oms: Vec<OrientedMatroid> = chis
                    .into_iter()
                    .map(OrientedMatroid::from_chirotope)
                    .collect();
                oms.sort_by_key(|m| m.chirotope().encode_bytes());
                oms.dedup();
                for om in &oms {
                    if args.no_loops && !om.loops().is_empty() {
                        continue;
                    }
                    push_record(&mut lines, args.n, om.chirotope());
                }
            }
            lines.into_bytes()
        }
    };

    let count = bytes.iter().filter(|&&b| b == b'\n').count() as u64;
    let mut manifest = manifest;
    manifest.cache_hit = was_hit;
    deliver_output(
        args.out.as_deref(),
        &bytes,
        manifest,
        started,
        cache.as_ref(),
        &key,
    )?;
    if args.out.is_some() {
        summarize_count(cli, args, count, count);
    } else {
        eprintln!("{count} records");
    }
    Ok(())
}

fn push_record(lines: &mut String, n: usize, chi: &Chirotope) {
    let om = OrientedMatroid::from_chirotope(chi.clone());
    let topes = CovectorSphere::build(&om)
        .map(|s| s.topes().len())
        .unwrap_or(0);
    let record = OmRecord {
        n,
        chi: chi.chi_string(),
        loops: chi.loops(),
        topes,
    };
    lines.push_str(&serde_json::to_string(&record).expect("record serializes"));
    lines.push('\n');
}

fn summarize_count(cli: &Cli, args: &EnumerateArgs, chirotopes: u64, oms: u64) {
    let count = if args.oriented { chirotopes } else { oms };
    if cli.json {
        println!(
            "{}",
            serde_json::json!({ "n": args.n, "oriented": args.oriented, "count": count })
        );
    } else {
        println!("{count}");
    }
}

fn read_records(path: &Path) -> Result<Vec<OmRecord>, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_INPUT, format!("cannot read {}: {e}", path.display())))?;
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let rec: OmRecord = serde_json::from_str(line).map_err(|e| {
            Failure::new(
                EXIT_INPUT,
                format!("{}:{}: {e}", path.display(), lineno + 1),
            )
        })?;
        out.push(rec);
    }
    Ok(out)
}

fn cmd_poset(cli: &Cli, args: &PosetArgs) -> Result<(), Failure> {
    let started = Instant::now();
    let records = read_records(&args.r#in)?;
    let mut chis = Vec::with_capacity(records.len());
    for rec in &records {
        let text = format!("n={};chi={}", rec.n, rec.chi);
        let chi = Chirotope::parse_text(&text)
            .map_err(|e| Failure::new(EXIT_INPUT, format!("invalid chirotope {text:?}: {e}")))?;
        chis.push(chi);
    }
    if chis.len() > MAX_POSET_NODES {
        return Err(Failure::new(
            EXIT_RESOURCE,
            format!(
                "{} nodes exceed the poset limit of {MAX_POSET_NODES}",
                chis.len()
            ),
        ));
    }

    let poset = if args.oriented {
        build_poset(&chis, |c| c.text_form(), |a, b| a.weak_leq(b))?
    } else {
        let oms: Vec<OrientedMatroid> = chis
            .into_iter()
            .map(OrientedMatroid::from_chirotope)
            .collect();
        build_poset(&oms, |m| m.text_form(), |a, b| a.weak_leq(b))?
    };

    let mut manifest = RunManifest::new("poset").parameter("oriented", args.oriented);
    manifest.record_input(&args.r#in)?;
    let input_digest = manifest
        .input_digests
        .values()
        .next()
        .cloned()
        .unwrap_or_default();
    let manifest = manifest.parameter("input_digest", input_digest);
    let key = OutputCache::key("poset", &manifest.canonical_parameters());

    let file = poset.to_file();
    let mut bytes = serde_json::to_string(&file)
        .expect("poset serializes")
        .into_bytes();
    bytes.push(b'\n');
    let to_stdout = args.out.is_none();
    deliver_output(
        args.out.as_deref(),
        &bytes,
        manifest,
        started,
        cache(cli).as_ref(),
        &key,
    )?;

    let summary = if cli.json {
        serde_json::json!({ "nodes": poset.len(), "hasse_edges": poset.hasse().len() }).to_string()
    } else {
        format!("{} nodes, {} hasse edges", poset.len(), poset.hasse().len())
    };
    if to_stdout {
        eprintln!("{summary}");
    } else {
        println!("{summary}");
    }
    Ok(())
}

#[derive(Serialize)]
struct HomologyReport {
    complex: ComplexSummary,
    gf2_betti: Vec<usize>,
    integral: Option<IntegralSummary>,
    euler: i64,
}

#[derive(Serialize)]
struct ComplexSummary {
    f_vector: Vec<usize>,
}

#[derive(Serialize)]
struct IntegralSummary {
    betti: Vec<usize>,
    torsion: Vec<(usize, Vec<u64>)>,
}

fn cmd_homology(cli: &Cli, args: &HomologyArgs) -> Result<(), Failure> {
    let started = Instant::now();
    let text = fs::read_to_string(&args.r#in).map_err(|e| {
        Failure::new(
            EXIT_INPUT,
            format!("cannot read {}: {e}", args.r#in.display()),
        )
    })?;
    let file: PosetFile = serde_json::from_str(&text)
        .map_err(|e| Failure::new(EXIT_INPUT, format!("{}: {e}", args.r#in.display())))?;
    let poset = Poset::from_file(file)?;

    let budget = args.budget.unwrap_or(match args.field {
        Field::Gf2 => DEFAULT_GF2_BUDGET,
        Field::Z => DEFAULT_INTEGER_BUDGET,
    });
    // Budget gate on the chain census before any complex is materialized.
    let chain_f = poset.chain_f_vector();
    let total: u64 = chain_f.iter().sum();
    if total > budget as u64 {
        return Err(Failure::new(
            EXIT_RESOURCE,
            format!("order complex has {total} simplices, over the budget of {budget}"),
        ));
    }

    eprintln!("order complex f-vector {chain_f:?}");
    let complex = order_complex(&poset);
    let gf2 = betti_gf2(&complex);
    let integral = match args.field {
        Field::Gf2 => None,
        Field::Z => Some(
            betti_integer(&complex, budget)
                .map_err(|e| Failure::new(EXIT_RESOURCE, e.to_string()))?,
        ),
    };
    let report = HomologyReport {
        complex: ComplexSummary {
            f_vector: complex.f_vector(),
        },
        gf2_betti: gf2.betti.clone(),
        integral: integral.as_ref().map(|bv: &BettiVector| IntegralSummary {
            betti: bv.betti.clone(),
            torsion: bv.torsion.clone(),
        }),
        euler: euler_characteristic(&complex),
    };

    let mut manifest = RunManifest::new("homology")
        .parameter(
            "field",
            match args.field {
                Field::Gf2 => "gf2",
                Field::Z => "z",
            },
        )
        .parameter("budget", budget);
    manifest.record_input(&args.r#in)?;
    let input_digest = manifest
        .input_digests
        .values()
        .next()
        .cloned()
        .unwrap_or_default();
    let manifest = manifest.parameter("input_digest", input_digest);
    let key = OutputCache::key("homology", &manifest.canonical_parameters());

    let mut bytes = serde_json::to_string_pretty(&report)
        .expect("report serializes")
        .into_bytes();
    bytes.push(b'\n');
    let to_stdout = args.out.is_none();
    deliver_output(
        args.out.as_deref(),
        &bytes,
        manifest,
        started,
        cache(cli).as_ref(),
        &key,
    )?;
    if !to_stdout && !cli.json {
        println!("betti {:?} euler {}", report.gf2_betti, report.euler);
    }

    if let Some(expect) = &args.expect {
        let (k, n) = parse_expect(expect)?;
        let expected = grassmann_betti_mod2(k, n);
        if report.gf2_betti != expected.betti {
            return Err(Failure::new(
                EXIT_VERIFY,
                format!(
                    "GF(2) Betti {:?} does not match G({k},{n}) = {:?}",
                    report.gf2_betti, expected.betti
                ),
            ));
        }
        eprintln!("matches G({k},{n})");
    }
    Ok(())
}

fn parse_expect(s: &str) -> Result<(usize, usize), Failure> {
    let parts: Vec<&str> = s.split(',').collect();
    let bad = || Failure::new(EXIT_USAGE, format!("--expect wants \"k,n\", got {s:?}"));
    if parts.len() != 2 {
        return Err(bad());
    }
    let k = parts[0].trim().parse().map_err(|_| bad())?;
    let n = parts[1].trim().parse().map_err(|_| bad())?;
    if k > n {
        return Err(bad());
    }
    Ok((k, n))
}

fn cmd_verify(cli: &Cli, args: &VerifyArgs) -> Result<(), Failure> {
    let opts = SuiteOptions {
        seed: args.seed,
        sample: args.sample,
        count: args.count,
    };
    let reports: Vec<SuiteReport> = match args.suite {
        Suite::Axioms => vec![run_axioms(args.n, &opts)?],
        Suite::Sphere => vec![run_sphere(args.n, &opts)?],
        Suite::Maxcov => vec![run_maxcov(args.n, &opts)?],
        Suite::Realizable => vec![run_realizable(args.n, &opts)?],
        Suite::All => run_all(args.n, &opts)?,
    };
    if cli.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&reports).expect("reports serialize")
        );
    } else {
        for report in &reports {
            for check in &report.checks {
                println!(
                    "[{}] {} {}: {}",
                    if check.passed { "pass" } else { "FAIL" },
                    report.suite,
                    check.name,
                    check.detail
                );
            }
        }
    }
    if reports.iter().all(|r| r.passed()) {
        Ok(())
    } else {
        Err(Failure::new(EXIT_VERIFY, "verification failed"))
    }
}

fn cmd_grassmann(cli: &Cli, args: &GrassmannArgs) -> Result<(), Failure> {
    if args.k > args.n {
        return Err(Failure::new(
            EXIT_USAGE,
            format!("need k <= n, got k={} n={}", args.k, args.n),
        ));
    }
    let bv = grassmann_betti_mod2(args.k, args.n);
    let total: usize = bv.betti.iter().sum();
    if cli.json {
        println!(
            "{}",
            serde_json::json!({ "k": args.k, "n": args.n, "betti": bv.betti, "total": total })
        );
    } else {
        let mut line = String::new();
        for b in &bv.betti {
            let _ = write!(line, "{b} ");
        }
        println!("{}", line.trim_end());
        println!("total {total} = C({},{})", args.n, args.k);
    }
    Ok(())
}
