use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use salem_core::asymptotics::{mc_volume, omega_leading, selberg_closed, selberg_exact, McSpec, QuadratureSpec};
use salem_core::harness::{angle_histogram, census_table, tuple_table, write_csv, write_json, TableRow};
use salem_core::kernel::rho_density;
use salem_core::rational::{format_rational, parse_rational, to_f64};
use salem_core::salem::{write_census, AngleInterval, CensusConfig, CensusStore, IntervalSpec, SalemRecord};

/// Salem number census and angle statistics.
#[derive(Parser)]
#[command(name = "salem", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate Salem numbers of degree 2(m+1) with house at most the bound.
    Census(CensusArgs),
    /// Evaluate the angle density on a midpoint grid.
    Density(DensityArgs),
    /// Census counts against the leading term, one row per bound.
    CompareCounts(CompareCountsArgs),
    /// Histogram of conjugate angles against the one-point density.
    CompareAngles(CompareAnglesArgs),
    /// Angle tuple counts against the integrated density, one row per bound.
    CompareTuples(CompareTuplesArgs),
    /// Monte-Carlo estimate of the coefficient-space volume.
    Volume(VolumeArgs),
    /// Selberg's integral in closed form.
    Selberg(SelbergArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum CensusFormat {
    Csv,
    Jsonl,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

fn rational(s: &str) -> Result<BigRational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn intervals(s: &str) -> Result<IntervalSpec, String> {
    IntervalSpec::parse(s).map_err(|e| e.to_string())
}

/// Per-coordinate ranges; unlike [`IntervalSpec`] they may overlap.
#[derive(Clone)]
struct Ranges(Vec<AngleInterval>);

fn ranges(s: &str) -> Result<Ranges, String> {
    s.split(',').map(AngleInterval::parse).collect::<Result<_, _>>().map(Ranges).map_err(|e| e.to_string())
}

#[derive(Args)]
struct Output {
    /// Output file (standard output when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Output {
    fn open(&self) -> io::Result<Box<dyn Write>> {
        Ok(match &self.out {
            Some(p) => Box::new(BufWriter::new(File::create(p)?)),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        })
    }
}

#[derive(Args)]
struct CensusArgs {
    /// Number of conjugate pairs on the unit circle; the degree is 2(m+1).
    #[arg(long)]
    m: usize,
    /// Upper bound H on the Salem number, as p/q or a decimal.
    #[arg(long, value_parser = rational)]
    bound: BigRational,
    /// Worker threads for the enumeration (default: available parallelism).
    #[arg(long)]
    jobs: Option<usize>,
    /// Directory of cached censuses, read and written.
    #[arg(long)]
    cache: Option<PathBuf>,
    /// csv: one row per record; jsonl: a header line, then one record per line.
    #[arg(long, value_enum, default_value = "csv")]
    format: CensusFormat,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct DensityArgs {
    /// Kernel size.
    #[arg(long)]
    m: usize,
    /// Number of angles per point (1 <= k <= m).
    #[arg(long)]
    k: usize,
    /// k comma-separated ranges a:b restricting each angle (default [0, π]).
    #[arg(long, value_parser = ranges)]
    intervals: Option<Ranges>,
    /// Midpoints per angle; k >= 2 gives the tensor grid.
    #[arg(long)]
    grid: usize,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct CompareCountsArgs {
    #[arg(long)]
    m: usize,
    /// Comma-separated ascending bounds.
    #[arg(long, value_parser = rational, value_delimiter = ',', required = true)]
    bounds: Vec<BigRational>,
    /// Directory of cached censuses, read and written.
    #[arg(long)]
    cache: Option<PathBuf>,
    /// Table format.
    #[arg(long, value_enum, default_value = "csv")]
    format: TableFormat,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct CompareAnglesArgs {
    #[arg(long)]
    m: usize,
    /// Upper bound H, as p/q or a decimal.
    #[arg(long, value_parser = rational)]
    bound: BigRational,
    /// Number of equal bins of [0, π].
    #[arg(long)]
    bins: usize,
    /// Directory of cached censuses, read and written.
    #[arg(long)]
    cache: Option<PathBuf>,
    /// Table format.
    #[arg(long, value_enum, default_value = "csv")]
    format: TableFormat,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct CompareTuplesArgs {
    #[arg(long)]
    m: usize,
    /// Number of intervals.
    #[arg(long)]
    k: usize,
    /// k disjoint comma-separated ranges a:b, e.g. "0:pi/2,pi/2:pi".
    #[arg(long, value_parser = intervals)]
    intervals: IntervalSpec,
    /// Comma-separated ascending bounds.
    #[arg(long, value_parser = rational, value_delimiter = ',', required = true)]
    bounds: Vec<BigRational>,
    /// Directory of cached censuses, read and written.
    #[arg(long)]
    cache: Option<PathBuf>,
    /// Table format.
    #[arg(long, value_enum, default_value = "csv")]
    format: TableFormat,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct VolumeArgs {
    #[arg(long)]
    m: usize,
    /// Upper bound H, as p/q or a decimal.
    #[arg(long, value_parser = rational)]
    bound: BigRational,
    /// Number of samples.
    #[arg(long)]
    samples: u64,
    /// Random seed.
    #[arg(long)]
    seed: u64,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct SelbergArgs {
    /// Dimension.
    #[arg(long)]
    n: usize,
    #[arg(long, allow_hyphen_values = true)]
    alpha: String,
    #[arg(long, allow_hyphen_values = true)]
    beta: String,
    #[arg(long, allow_hyphen_values = true)]
    gamma: String,
}

type Res<T> = Result<T, Box<dyn std::error::Error>>;

fn write_table<T: TableRow>(rows: &[T], format: TableFormat, output: &Output) -> Res<()> {
    let mut out = output.open()?;
    match format {
        TableFormat::Csv => write_csv(rows, &mut out)?,
        TableFormat::Json => write_json(rows, &mut out)?,
    }
    out.flush()?;
    Ok(())
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn write_records_csv(records: &[SalemRecord], out: &mut dyn Write) -> Res<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["m", "coeffs", "trace_coeffs", "alpha_lo", "alpha_hi", "angles"])?;
    for r in records {
        w.write_record([
            r.m.to_string(),
            join(&r.coeffs),
            join(&r.trace_coeffs),
            r.alpha_lo.to_string(),
            r.alpha_hi.to_string(),
            join(&r.angles),
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn midpoints(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (1..=n).map(|i| lo + (hi - lo) * (2 * i - 1) as f64 / (2 * n) as f64).collect()
}

fn density(a: &DensityArgs) -> Res<()> {
    if a.grid == 0 {
        return Err("--grid must be at least 1".into());
    }
    let ranges: Vec<AngleInterval> = match &a.intervals {
        Some(r) if r.0.len() != a.k => return Err(format!("--intervals has {} ranges, --k is {}", r.0.len(), a.k).into()),
        Some(r) => r.0.clone(),
        None => vec![AngleInterval::full(); a.k],
    };
    let axes: Vec<Vec<f64>> = ranges.iter().map(|r| midpoints(r.lo, r.hi, a.grid)).collect();
    let mut out = a.output.open()?;
    let mut header: Vec<String> = if a.k == 1 { vec!["theta".into()] } else { (1..=a.k).map(|i| format!("theta{i}")).collect() };
    header.push("rho".into());
    writeln!(out, "{}", header.join(","))?;
    let mut idx = vec![0usize; a.k];
    let mut point = vec![0.0; a.k];
    loop {
        for (d, &i) in idx.iter().enumerate() {
            point[d] = axes[d][i];
        }
        let coincident = (0..a.k).any(|i| (i + 1..a.k).any(|j| point[i] == point[j]));
        let rho = if coincident { 0.0 } else { rho_density(a.m, a.k, &point)? };
        let cells: Vec<String> = point.iter().chain([&rho]).map(f64::to_string).collect();
        writeln!(out, "{}", cells.join(","))?;
        let mut d = a.k;
        loop {
            if d == 0 {
                out.flush()?;
                return Ok(());
            }
            d -= 1;
            idx[d] += 1;
            if idx[d] < a.grid {
                break;
            }
            idx[d] = 0;
        }
    }
}

fn selberg(a: &SelbergArgs) -> Res<()> {
    let exact = match (parse_rational(&a.alpha), parse_rational(&a.beta), parse_rational(&a.gamma)) {
        (Ok(al), Ok(be), Ok(ga)) => selberg_exact(a.n, &al, &be, &ga).ok(),
        _ => None,
    };
    let value = match exact {
        Some(v) => match v.as_rational() {
            Some(r) => to_f64(r),
            None => v.to_f64(),
        },
        None => {
            let real = |s: &str| s.parse::<f64>().map_err(|_| format!("cannot parse {s:?} as a number"));
            selberg_closed(a.n, real(&a.alpha)?, real(&a.beta)?, real(&a.gamma)?)?
        }
    };
    println!("{value}");
    Ok(())
}

fn run(cli: Cli) -> Res<()> {
    match cli.command {
        Command::Census(a) => {
            let store = CensusStore::new(a.cache.clone(), CensusConfig { jobs: a.jobs, ..Default::default() });
            let summary = store.get(a.m, &a.bound)?;
            let mut out = a.output.open()?;
            match a.format {
                CensusFormat::Jsonl => write_census(&summary, &mut out)?,
                CensusFormat::Csv => write_records_csv(&summary.records, &mut out)?,
            }
            out.flush()?;
        }
        Command::Density(a) => density(&a)?,
        Command::CompareCounts(a) => {
            let rows = census_table(a.m, &a.bounds, &CensusStore::new(a.cache, CensusConfig::default()))?;
            write_table(&rows, a.format, &a.output)?;
        }
        Command::CompareAngles(a) => {
            let store = CensusStore::new(a.cache, CensusConfig::default());
            let rows = angle_histogram(a.m, &a.bound, a.bins, &store)?;
            write_table(&rows, a.format, &a.output)?;
        }
        Command::CompareTuples(a) => {
            let store = CensusStore::new(a.cache, CensusConfig::default());
            let rows = tuple_table(a.m, a.k, &a.intervals, &a.bounds, &QuadratureSpec::default(), &store)?;
            write_table(&rows, a.format, &a.output)?;
        }
        Command::Volume(a) => {
            let h = to_f64(&a.bound);
            let e = mc_volume(a.m, h, &McSpec { samples: a.samples, seed: a.seed })?;
            let leading = to_f64(&omega_leading(a.m)) * h.powi(a.m as i32 + 1);
            let mut out = a.output.open()?;
            writeln!(out, "m,H,samples,seed,estimate,stderr,leading,ratio")?;
            writeln!(
                out,
                "{},{},{},{},{},{},{},{}",
                a.m,
                format_rational(&a.bound),
                a.samples,
                a.seed,
                e.estimate,
                e.stderr,
                leading,
                e.estimate / leading
            )?;
            out.flush()?;
        }
        Command::Selberg(a) => selberg(&a)?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
