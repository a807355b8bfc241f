use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use partgenus::enumerate::DEFAULT_BUDGET;
use partgenus::gf::{CumulantSpec, GfSeries};
use partgenus::reduce::confluence_check;
use partgenus::verify::{fixture_check, oracle_check, spot_check, spot_check_types, OracleReport};
use partgenus::{census_genus2, classify, parse_partition, reduce, ClassFilter, Enumerator, OrbitRecord, PartitionType};

#[derive(Parser)]
#[command(name = "partgenus", version)]
#[command(about = "Count set partitions by genus, reduce them to primitive diagrams, and expand their generating functions")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Refuse enumerations visiting more candidates than this
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,

    /// Worker threads (defaults to the number of CPUs)
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    threads: Option<u64>,

    /// Seed for randomized checks
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Genus, faces and type of one partition, e.g. "1,3|2,4"
    Genus { partition: String },
    /// Enumerate partitions of [n] and count them by genus
    Enumerate(EnumerateArgs),
    /// Reduce a partition to its primitive or semi-primitive core
    Reduce {
        partition: String,
        /// Print every step
        #[arg(long)]
        trace: bool,
        /// Also check that this many random move orders give the same result
        #[arg(long, default_value_t = 0)]
        confluence: usize,
    },
    /// Expand a generating function Z^(g)
    Gf {
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u32).range(0..=2))]
        genus: u32,
        /// Truncation order (default 20 numeric, 12 symbolic)
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        order: Option<u64>,
        /// symbolic, symbolic=2,3, ones, y, doublets, triplets, sf-ones, sf-y, custom=k1,k2,...
        #[arg(long, default_value = "symbolic")]
        kappa: CumulantSpec,
    },
    /// Compare generating function coefficients with direct enumeration
    Verify(VerifyArgs),
    /// Primitive and semi-primitive diagram counts by size
    Census {
        #[arg(long, default_value_t = 2)]
        genus: u32,
    },
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    /// Restrict to one type, e.g. "2^4" or "1^2 3 5"
    #[arg(long = "type")]
    ty: Option<PartitionType>,
    #[arg(long)]
    genus: Option<u32>,
    #[arg(long)]
    singleton_free: bool,
    #[arg(long, value_enum, default_value_t = Class::All)]
    class: Class,
    /// Print the number of matching partitions
    #[arg(long, group = "mode")]
    count: bool,
    /// Print every matching partition
    #[arg(long, group = "mode")]
    list: bool,
    /// Print rotation orbits of the matching partitions (needs --type and --genus)
    #[arg(long, group = "mode")]
    orbits: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Class {
    All,
    Primitive,
    Semiprimitive,
}

impl From<Class> for ClassFilter {
    fn from(c: Class) -> Self {
        match c {
            Class::All => ClassFilter::All,
            Class::Primitive => ClassFilter::Primitive,
            Class::Semiprimitive => ClassFilter::Semiprimitive,
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 10)]
    n_max: usize,
    /// Genus to check; all of 0, 1, 2 when omitted
    #[arg(long, value_parser = clap::value_parser!(u32).range(0..=2))]
    genus: Option<u32>,
    /// Only `symbolic` is meaningful here
    #[arg(long, default_value = "symbolic")]
    kappa: CumulantSpec,
    /// Add single-type checks at n = 13, 14, 15
    #[arg(long)]
    spot: bool,
    /// Also compare against the shipped published expansions and closed forms
    #[arg(long)]
    fixtures: bool,
}

type CmdResult = Result<bool, Box<dyn std::error::Error>>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t as usize).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        // A closed pipe (`| head`) is not a failure.
        Err(e) if e.downcast_ref::<io::Error>().is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> CmdResult {
    let enumerator = Enumerator::with_budget(cli.budget);
    match &cli.command {
        Command::Genus { partition } => genus(cli, partition),
        Command::Enumerate(args) => enumerate(cli, &enumerator, args),
        Command::Reduce { partition, trace, confluence } => reduce_cmd(cli, partition, *trace, *confluence),
        Command::Gf { genus, order, kappa } => gf(cli, *genus, *order, kappa),
        Command::Verify(args) => verify(cli, &enumerator, args),
        Command::Census { genus } => census(cli, *genus),
    }
}

fn emit(cli: &Cli, value: &impl Serialize, text: impl FnOnce() -> String) -> Result<(), Box<dyn std::error::Error>> {
    let body = match cli.format {
        Format::Json => serde_json::to_string_pretty(value)?,
        Format::Text => text(),
    };
    line(&body)
}

fn line(s: &str) -> Result<(), Box<dyn std::error::Error>> {
    writeln!(std::io::stdout().lock(), "{s}")?;
    Ok(())
}

fn cycles_text(cycles: &[Vec<u32>]) -> String {
    cycles
        .iter()
        .map(|c| format!("({})", c.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")))
        .collect()
}

fn genus(cli: &Cli, text: &str) -> CmdResult {
    let p = parse_partition(text)?;
    let tau = p.tau().cycles();
    let faces = p.face_permutation().cycles();
    let g = p.genus()?;
    let value = json!({
        "partition": p,
        "n": p.n(),
        "type": p.part_type().to_string(),
        "tau": tau,
        "faces": faces,
        "face_count": faces.len(),
        "genus": g,
        "genus_max": p.genus_max(),
        "class": classify(&p),
    });
    emit(cli, &value, || {
        format!(
            "partition  {p}\nn          {}\ntype       {}\ntau        {}\nfaces      {}\nf          {}\ngenus      {g}\ngenus max  {}",
            p.n(),
            p.part_type(),
            cycles_text(&tau),
            cycles_text(&faces),
            faces.len(),
            p.genus_max()
        )
    })?;
    Ok(true)
}

fn enumerate(cli: &Cli, e: &Enumerator, args: &EnumerateArgs) -> CmdResult {
    let class = ClassFilter::from(args.class);
    if args.orbits {
        let (Some(ty), Some(g)) = (&args.ty, args.genus) else {
            return Err("--orbits needs --type and --genus".into());
        };
        let orbits = e.orbit_census(args.n, ty, g, class)?;
        let total: usize = orbits.iter().map(|o| o.orbit_length).sum();
        let value = json!({ "orbits": orbits, "partitions": total });
        emit(cli, &value, || orbits_text(&orbits, total))?;
        return Ok(true);
    }
    if args.list {
        let mut out = Vec::new();
        for p in e.enumerate(args.n, args.ty.as_ref(), args.singleton_free)? {
            if args.genus.is_some_and(|g| p.genus().ok() != Some(g)) || !class.accepts(classify(&p)) {
                continue;
            }
            match cli.format {
                Format::Text => line(&p.to_string())?,
                Format::Json => out.push(p),
            }
        }
        if cli.format == Format::Json {
            line(&serde_json::to_string_pretty(&out)?)?;
        }
        return Ok(true);
    }
    match args.genus {
        Some(g) => {
            let types = e.types(args.n, args.ty.as_ref(), args.singleton_free)?;
            e.check_budget(&types)?;
            let mut count = 0;
            for ty in &types {
                count += e.count_with_class(ty, g, class)?;
            }
            let value = json!({ "n": args.n, "genus": g, "count": count });
            emit(cli, &value, || count.to_string())?;
        }
        None if class != ClassFilter::All => return Err("--class needs --genus".into()),
        None => {
            let types = e.types(args.n, args.ty.as_ref(), args.singleton_free)?;
            let table = e.count_types_by_genus(args.n, &types)?;
            if args.count {
                let value = json!({ "n": args.n, "count": table.total() });
                emit(cli, &value, || table.total().to_string())?;
            } else {
                emit(cli, &table, || table.to_string())?;
            }
        }
    }
    Ok(true)
}

fn orbits_text(orbits: &[OrbitRecord], total: usize) -> String {
    let mut s = String::new();
    for o in orbits {
        s.push_str(&format!(
            "{}  stabilizer {}  weight {}\n",
            o.representative, o.stabilizer_order, o.orbit_length
        ));
    }
    s.push_str(&format!("{} orbits, {} partitions", orbits.len(), total));
    s
}

fn reduce_cmd(cli: &Cli, text: &str, trace: bool, trials: usize) -> CmdResult {
    let p = parse_partition(text)?;
    let t = reduce(&p);
    let confluent = (trials > 0).then(|| confluence_check(&p, trials, cli.seed));
    let value = json!({ "trace": t, "confluent": confluent });
    emit(cli, &value, || {
        let mut s = if trace {
            t.to_string()
        } else {
            format!("{} -> {} ({})", t.input, t.result, t.classification)
        };
        if let Some(ok) = confluent {
            s.push_str(&format!("\nconfluence over {trials} random orders: {}", if ok { "pass" } else { "FAIL" }));
        }
        s
    })?;
    Ok(confluent.unwrap_or(true))
}

fn gf(cli: &Cli, genus: u32, order: Option<u64>, kappa: &CumulantSpec) -> CmdResult {
    let order = order.map_or(kappa.default_order(), |o| o as usize);
    let z = GfSeries::compute(kappa, genus, order)?;
    let value = json!({
        "kappa": kappa.to_string(),
        "genus": genus,
        "order": order,
        "coefficients": z,
    });
    emit(cli, &value, || z.to_string())?;
    Ok(true)
}

fn verify(cli: &Cli, e: &Enumerator, args: &VerifyArgs) -> CmdResult {
    if args.kappa != CumulantSpec::Symbolic {
        return Err(format!("verify compares fully symbolic series; `{}` is not supported", args.kappa).into());
    }
    let genera = args.genus.map_or(vec![0, 1, 2], |g| vec![g]);
    let mut reports: Vec<OracleReport> = Vec::new();
    for &g in &genera {
        let r = oracle_check(e, args.n_max, g)?;
        let stop = !r.passed();
        reports.push(r);
        if stop {
            break;
        }
    }
    if args.spot && reports.iter().all(OracleReport::passed) {
        'spot: for n in 13..=15 {
            for ty in spot_check_types(n) {
                for &g in &genera {
                    let r = spot_check(e, &ty, g)?;
                    let stop = !r.passed();
                    reports.push(r);
                    if stop {
                        break 'spot;
                    }
                }
            }
        }
    }
    let fixtures = if args.fixtures { fixture_check(30, 12)? } else { Vec::new() };
    let passed = reports.iter().all(OracleReport::passed) && fixtures.iter().all(|f| f.passed());
    let value = json!({ "passed": passed, "oracle": reports, "fixtures": fixtures });
    emit(cli, &value, || {
        let mut lines: Vec<String> = reports.iter().map(|r| r.to_string()).collect();
        lines.extend(fixtures.iter().map(|f| f.to_string()));
        lines.push(if passed { "pass".into() } else { "FAIL".into() });
        lines.join("\n")
    })?;
    Ok(passed)
}

fn census(cli: &Cli, genus: u32) -> CmdResult {
    if genus != 2 {
        return Err(format!("the census is only available for genus 2, not {genus}").into());
    }
    let table = census_genus2();
    emit(cli, &table, || table.to_string())?;
    Ok(true)
}
