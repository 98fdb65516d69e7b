//! Command-line front end.
//!
//! Exit status is 0 on success, 1 when a verification fails (a bi-freeness
//! mismatch, an indefinite Gram matrix, a Fock/Gaussian disagreement, a CLT
//! decay violation) and 2 on any input error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::models::{parse_covariance, parse_vectors};
use crate::ncalg::format::format_scalar;
use crate::{
    bifree_product, bifree_sum, boxtimes2, check_bifree, clt_report, cumulants_from_moments,
    emit_cumulants, emit_distribution, fock_distribution, gaussian_dist, gram_psd_check,
    group_example_dist, moments_from_cumulants, parse_cumulants, parse_distribution, scaled_sum_dist,
    CumulantTable, Distribution, PsdVerdict, Scalar,
};

#[derive(Debug, Parser)]
#[command(name = "bifree", version, about = "Exact bi-free probability on moment tables")]
pub struct Cli {
    /// Worker threads for word evaluation (defaults to all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Write the result here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Single {
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Degree bound; defaults to the degree of the input table.
    #[arg(long, value_parser = positive)]
    pub degree: Option<usize>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct Several {
    /// Input tables, one per operand.
    #[arg(long = "in", required = true, num_args = 1..)]
    pub inputs: Vec<PathBuf>,
    /// Degree bound; defaults to the smallest input degree.
    #[arg(long, value_parser = positive)]
    pub degree: Option<usize>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Dist,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bi-free product of tables with disjoint families.
    Product(Several),
    /// Check that a joint table is the bi-free product of its family restrictions.
    CheckBifree(Single),
    /// Additive bi-free convolution of tables on the same signature.
    ConvolveAdd(Several),
    /// Multiplicative bi-free convolution of two tables on the same signature.
    ConvolveMul(Several),
    /// Moments to cumulants.
    Cumulants(Single),
    /// Cumulants to moments.
    Moments(Single),
    /// Bi-free Gaussian law from a covariance file.
    Gaussian {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_parser = at_least_two)]
        degree: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Tabulate the Fock-space model from a vector file.
    Fock {
        #[arg(long)]
        vectors: PathBuf,
        #[arg(long, value_parser = at_least_two)]
        degree: usize,
        /// Compare with the Gaussian law of the induced covariance.
        #[arg(long)]
        compare: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Left/right regular representations of a free product of cyclic groups.
    GroupExample {
        /// Cyclic orders, e.g. `2,3`.
        #[arg(long, value_delimiter = ',', required = true)]
        orders: Vec<u32>,
        #[arg(long, value_parser = positive)]
        degree: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Check positivity of the Gram matrix `μ(u*w)` over words of degree <= d/2.
    PsdCheck(Single),
    /// Central limit report for a centered table.
    Clt {
        #[command(flatten)]
        single: Single,
        /// Perfect-square sample sizes.
        #[arg(required = true)]
        ns: Vec<u64>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
}

fn degree_at_least(text: &str, min: usize) -> std::result::Result<usize, String> {
    let d: usize = text.parse().map_err(|_| format!("{text:?} is not a degree"))?;
    if d < min {
        return Err(format!("degree must be at least {min}"));
    }
    Ok(d)
}

fn positive(text: &str) -> std::result::Result<usize, String> {
    degree_at_least(text, 1)
}

fn at_least_two(text: &str) -> std::result::Result<usize, String> {
    degree_at_least(text, 2)
}

/// Outcome of a subcommand that ran to completion.
struct Report {
    text: String,
    ok: bool,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, ok: true }
    }
}

struct Failure {
    context: Option<PathBuf>,
    error: Error,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure { context: None, error }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn at<T>(path: &Path, r: Result<T>) -> CliResult<T> {
    r.map_err(|error| Failure { context: Some(path.to_path_buf()), error })
}

fn read_with<T>(path: &Path, parse: impl FnOnce(&str) -> Result<T>) -> CliResult<T> {
    let text = at(path, fs::read_to_string(path).map_err(Error::from))?;
    at(path, parse(&text))
}

fn read_dist(path: &Path) -> CliResult<Distribution> {
    read_with(path, parse_distribution)
}

fn read_all(paths: &[PathBuf]) -> CliResult<Vec<Distribution>> {
    paths.iter().map(|p| read_dist(p)).collect()
}

fn min_degree(tables: &[Distribution], requested: Option<usize>) -> usize {
    requested.unwrap_or_else(|| tables.iter().map(|t| t.degree()).min().unwrap_or(0))
}

fn product(args: &Several) -> CliResult<Report> {
    let tables = read_all(&args.inputs)?;
    let refs: Vec<&Distribution> = tables.iter().collect();
    let joint = bifree_product(&refs, min_degree(&tables, args.degree))?;
    Ok(Report::ok(emit_distribution(&joint)))
}

fn check(args: &Single) -> CliResult<Report> {
    let mu = read_dist(&args.input)?;
    let d = args.degree.unwrap_or(mu.degree());
    let rep = check_bifree(&mu, d)?;
    let mut text = format!("# bi-free to degree {d}: {}\n", if rep.is_bifree() { "yes" } else { "no" });
    for m in &rep.mismatches {
        writeln!(
            text,
            "{} : expected {}, found {}",
            m.word.label(mu.signature()),
            format_scalar(&m.expected),
            format_scalar(&m.found)
        )
        .unwrap();
    }
    Ok(Report { text, ok: rep.is_bifree() })
}

fn convolve(args: &Several, multiplicative: bool) -> CliResult<Report> {
    let tables = read_all(&args.inputs)?;
    let d = min_degree(&tables, args.degree);
    let out = if multiplicative {
        let [mu, nu] = tables.as_slice() else {
            return Err(Error::Domain(format!("convolve-mul takes exactly two inputs, got {}", tables.len())).into());
        };
        boxtimes2(mu, nu, d)?
    } else {
        let refs: Vec<&Distribution> = tables.iter().collect();
        bifree_sum(&refs, d)?
    };
    Ok(Report::ok(emit_distribution(&out)))
}

fn cumulants(args: &Single) -> CliResult<Report> {
    let mu = read_dist(&args.input)?;
    let r = cumulants_from_moments(&mu, args.degree.unwrap_or(mu.degree()))?;
    Ok(Report::ok(emit_cumulants(&r)))
}

fn moments(args: &Single) -> CliResult<Report> {
    let r: CumulantTable = read_with(&args.input, parse_cumulants)?;
    let mu = moments_from_cumulants(&r, args.degree.unwrap_or(r.degree()))?;
    Ok(Report::ok(emit_distribution(&mu)))
}

fn psd(args: &Single) -> CliResult<Report> {
    let mu = read_dist(&args.input)?;
    let d = args.degree.unwrap_or(mu.degree());
    let sig = mu.signature();
    let (text, ok) = match gram_psd_check(&mu, d)? {
        PsdVerdict::Positive => (format!("# gram matrix to degree {d}: positive semidefinite\n"), true),
        PsdVerdict::Indefinite { witness, value } => {
            let mut t = format!("# gram matrix to degree {d}: indefinite\n# value: {}\n", format_scalar(&value));
            for (w, c) in witness {
                writeln!(t, "{} : {}", w.label(sig), format_scalar(&c)).unwrap();
            }
            (t, false)
        }
        PsdVerdict::NonHermitian { row, col } => (
            format!("# gram matrix to degree {d}: not hermitian at ({}; {})\n", row.label(sig), col.label(sig)),
            false,
        ),
    };
    Ok(Report { text, ok })
}

fn clt(single: &Single, ns: &[u64], format: Format) -> CliResult<Report> {
    let mu = read_dist(&single.input)?;
    let d = single.degree.unwrap_or(mu.degree());
    match format {
        Format::Csv => {
            let rep = clt_report(&mu, ns, d)?;
            Ok(Report { text: rep.to_csv(), ok: rep.decay_violations().is_empty() })
        }
        Format::Dist => {
            let [n] = ns else {
                return Err(Error::Domain("--format dist takes exactly one N".into()).into());
            };
            Ok(Report::ok(emit_distribution(&scaled_sum_dist(&mu, *n, d)?)))
        }
    }
}

fn out(o: &Output) -> Option<&Path> {
    o.out.as_deref()
}

fn execute(cmd: &Command) -> CliResult<(Report, Option<&Path>)> {
    Ok(match cmd {
        Command::Product(a) => (product(a)?, out(&a.output)),
        Command::CheckBifree(a) => (check(a)?, out(&a.output)),
        Command::ConvolveAdd(a) => (convolve(a, false)?, out(&a.output)),
        Command::ConvolveMul(a) => (convolve(a, true)?, out(&a.output)),
        Command::Cumulants(a) => (cumulants(a)?, out(&a.output)),
        Command::Moments(a) => (moments(a)?, out(&a.output)),
        Command::Gaussian { input, degree, output } => {
            let c = read_with(input, parse_covariance::<Scalar>)?;
            (Report::ok(emit_distribution(&gaussian_dist(&c, *degree)?)), out(output))
        }
        Command::Fock { vectors, degree, compare, output } => {
            let spec = read_with(vectors, parse_vectors::<Scalar>)?;
            let fock = fock_distribution(&spec, *degree)?;
            let mut ok = true;
            if *compare {
                let gauss = gaussian_dist(&spec.covariance()?, *degree)?;
                let diff = gauss.differences(&fock);
                ok = diff.is_empty();
                eprintln!("gaussian comparison: {} of {} words differ", diff.len(), fock.values().len());
            }
            (Report { text: emit_distribution(&fock), ok }, out(output))
        }
        Command::GroupExample { orders, degree, output } => {
            (Report::ok(emit_distribution(&group_example_dist(orders, *degree)?)), out(output))
        }
        Command::PsdCheck(a) => (psd(a)?, out(&a.output)),
        Command::Clt { single, ns, format } => (clt(single, ns, *format)?, out(&single.output)),
    })
}

/// Runs the command line and returns the process exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    if let Some(n) = cli.jobs {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    let (report, out) = match execute(&cli.command) {
        Ok(r) => r,
        Err(f) => {
            match f.context {
                Some(p) => eprintln!("error: {}: {}", p.display(), f.error),
                None => eprintln!("error: {}", f.error),
            }
            return 2;
        }
    };
    match out {
        Some(path) => {
            if let Err(e) = fs::write(path, &report.text) {
                eprintln!("error: {}: {e}", path.display());
                return 2;
            }
        }
        None => print!("{}", report.text),
    }
    if report.ok {
        0
    } else {
        1
    }
}
