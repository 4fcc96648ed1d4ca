//! Command-line front end: `mul`, `check` and `report-diff`.
//!
//! Exit codes: 0 pass, 1 failure, 2 input error, 3 inconclusive or overflow.

mod suites;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub use suites::{run_suite, ConfigEcho, Expect, InputDigest, Suite, SuiteCheck, SuiteConfig, SuiteReport};

use crate::algebra::BraidedAlgebra;
use crate::braiding::Braiding;
use crate::error::{Error, Result};
use crate::gallery;
use crate::io::InputJson;
use crate::products::{
    Bilinear, ClassicalMixable, Concat, QuantumMixable, QuantumQuasiShuffle, QuantumShuffle, QuasiShuffle, Shuffle,
};
use crate::scalar::Scalar;
use crate::tensor::{Element, TensorSpace};

#[derive(Debug, Parser)]
#[command(
    name = "braidalg",
    version,
    about = "Exact braided tensor algebras and their axiom checks"
)]
struct Cli {
    /// Worker threads for parallel checks.
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Multiply two elements with a named product.
    Mul(MulArgs),
    /// Run a verification suite and write its report.
    Check(CheckArgs),
    /// Compare two suite reports.
    ReportDiff { a: PathBuf, b: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum ProductName {
    Concat,
    Shuffle,
    Qshuffle,
    QuasiShuffle,
    QquasiShuffle,
    Mixable,
    Qmixable,
}

impl ProductName {
    fn needs_algebra(self) -> bool {
        matches!(
            self,
            Self::QuasiShuffle | Self::QquasiShuffle | Self::Mixable | Self::Qmixable
        )
    }

    fn mixable(self) -> bool {
        matches!(self, Self::Mixable | Self::Qmixable)
    }
}

#[derive(Debug, clap::Args)]
struct MulArgs {
    #[arg(long, value_enum)]
    product: ProductName,
    /// Left factor, e.g. `e1|e2 + 2*e1`.
    #[arg(long)]
    lhs: String,
    /// Right factor.
    #[arg(long)]
    rhs: String,
    /// Braiding or algebra JSON.
    #[arg(long, conflicts_with = "gallery")]
    input: Option<PathBuf>,
    /// A named gallery braiding or algebra instead of a file.
    #[arg(long)]
    gallery: Option<String>,
    /// Dimension for gallery braidings; inferred from the words by default.
    #[arg(long)]
    dim: Option<usize>,
    /// Weight λ for quasi-shuffle and mixable products [default: 1].
    #[arg(long)]
    weight: Option<String>,
    /// Truncation degree; defaults to the sum of the factors' grades.
    #[arg(long)]
    max_degree: Option<usize>,
}

#[derive(Debug, clap::Args)]
struct CheckArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    /// Braiding, algebra or dendriform JSON replacing the built-in gallery.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Largest total grade checked; each suite has its own default.
    #[arg(long)]
    max_degree: Option<usize>,
    /// Run a single weight λ instead of 0, 1 and -1.
    #[arg(long)]
    weight: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Check a seeded sample of this many tuples per scope.
    #[arg(long)]
    sample: Option<usize>,
    /// Report path; the report goes to stdout when absent.
    #[arg(long)]
    report: Option<PathBuf>,
}

fn input_code(e: &Error) -> u8 {
    if e.is_overflow() {
        3
    } else {
        2
    }
}

/// Parses `args` (program name first) and runs the command, writing to the
/// given streams. Returns the process exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    if let Some(n) = cli.workers {
        // a pool already built by an earlier call in this process stays in use
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    match cli.command {
        Command::Mul(m) => match mul(&m) {
            Ok(e) => {
                let _ = writeln!(out, "{e}");
                0
            }
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                input_code(&e)
            }
        },
        Command::Check(c) => check(c, out, err),
        Command::ReportDiff { a, b } => report_diff(&a, &b, out, err),
    }
}

/// [`run_with`] on the process arguments and standard streams.
pub fn run() -> u8 {
    run_with(std::env::args_os(), &mut std::io::stdout(), &mut std::io::stderr())
}

fn load_algebra(m: &MulArgs) -> Result<BraidedAlgebra> {
    let alg = match (&m.input, m.gallery.as_deref()) {
        (Some(p), _) => InputJson::load(p)?.algebra()?,
        (None, Some("dual-numbers")) => gallery::dual_numbers(Scalar::one()),
        (None, Some("dual-numbers-q")) => gallery::dual_numbers(Scalar::q()),
        (None, Some("dual-numbers-neg")) => gallery::dual_numbers(Scalar::int(-1)),
        (None, Some(other)) => return Err(Error::InvalidInput(format!("unknown gallery algebra `{other}`"))),
        (None, None) => return Err(Error::InvalidInput("this product needs --input or --gallery".into())),
    };
    if m.product.mixable() && alg.unit().is_none() {
        return Err(Error::NoUnit);
    }
    Ok(alg)
}

fn load_braiding(m: &MulArgs, inferred: usize) -> Result<Braiding> {
    let d = m.dim.unwrap_or(inferred);
    match (&m.input, m.gallery.as_deref()) {
        (Some(p), _) => InputJson::load(p)?.braiding(),
        (None, Some(name)) => {
            gallery::braiding(name, d).ok_or_else(|| Error::InvalidInput(format!("unknown gallery braiding `{name}`")))
        }
        (None, None) => Ok(Braiding::flip(d)),
    }
}

fn mul(m: &MulArgs) -> Result<Element> {
    let loose = TensorSpace::new(255, 255);
    let (x, y) = (Element::parse(loose, &m.lhs)?, Element::parse(loose, &m.rhs)?);
    let letters = x
        .terms()
        .keys()
        .chain(y.terms().keys())
        .filter_map(|w| w.max_letter())
        .max();
    let inferred = letters.map_or(1, |l| l as usize + 1);
    let grades = x.max_grade().unwrap_or(0) + y.max_grade().unwrap_or(0);
    let cap = m.max_degree.unwrap_or(grades.max(1));
    let lambda = Scalar::parse(m.weight.as_deref().unwrap_or("1"))?;
    let product: Box<dyn Bilinear> = if m.product.needs_algebra() {
        let alg = load_algebra(m)?;
        let space = TensorSpace::new(alg.dim(), cap);
        match m.product {
            ProductName::QuasiShuffle => Box::new(QuasiShuffle::new(alg, lambda, space)?),
            ProductName::QquasiShuffle => Box::new(QuantumQuasiShuffle::new(alg, lambda, space)?),
            ProductName::Mixable => Box::new(ClassicalMixable::new(alg, lambda, space)?),
            _ => Box::new(QuantumMixable::new(alg, lambda, space)?),
        }
    } else {
        let sigma = load_braiding(m, inferred)?;
        let space = TensorSpace::new(sigma.dim(), cap);
        match m.product {
            ProductName::Concat => Box::new(Concat { space }),
            ProductName::Shuffle => Box::new(Shuffle::new(space)),
            _ => Box::new(QuantumShuffle::new(sigma, space)?),
        }
    };
    let space = product.space();
    let x = Element::from_terms(space, x.into_terms())?;
    let y = Element::from_terms(space, y.into_terms())?;
    product.apply(&x, &y)
}

fn check(c: CheckArgs, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let cfg = SuiteConfig {
        suite: c.suite,
        input: c.input,
        max_degree: c.max_degree,
        weight: c.weight,
        seed: c.seed,
        sample: c.sample,
    };
    let report = match run_suite(&cfg) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let json = report.to_json();
    match &c.report {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &json) {
                let _ = writeln!(err, "error: {}: {e}", path.display());
                return 2;
            }
            let _ = writeln!(
                out,
                "{}: {:?} ({} passed, {} failed, {} inconclusive)",
                c.suite.name(),
                report.status,
                report.counts.passed,
                report.counts.failed,
                report.counts.inconclusive
            );
            for f in report
                .checks
                .iter()
                .filter(|k| k.verdict != crate::structures::Status::Pass)
            {
                let _ = writeln!(out, "  {:?} {}", f.verdict, f.key());
            }
        }
        None => {
            let _ = out.write_all(json.as_bytes());
        }
    }
    report.exit_code()
}

/// Outcome of comparing two reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReportDiff {
    /// Different suites or configurations; nothing comparable.
    ScopeMismatch(String),
    /// One line per differing check; empty when identical.
    Lines(Vec<String>),
}

/// Structural diff of verdicts and witnesses, keyed by `instance/check`.
pub fn diff_reports(a: &SuiteReport, b: &SuiteReport) -> ReportDiff {
    if a.suite != b.suite {
        return ReportDiff::ScopeMismatch(format!("suite {} vs {}", a.suite.name(), b.suite.name()));
    }
    let (ca, cb) = (&a.config, &b.config);
    if ca.max_degree != cb.max_degree || ca.sample != cb.sample || (ca.sample.is_some() && ca.seed != cb.seed) {
        return ReportDiff::ScopeMismatch(format!(
            "max degree {:?} vs {:?}, sample {:?} vs {:?}",
            ca.max_degree, cb.max_degree, ca.sample, cb.sample
        ));
    }
    let mut lines = Vec::new();
    for x in &a.checks {
        let key = x.key();
        match b.check(&key) {
            None => lines.push(format!("{key}: only in A")),
            Some(y) if x.report.scope != y.report.scope => {
                return ReportDiff::ScopeMismatch(format!("{key}: scopes differ"));
            }
            Some(y) if x.verdict != y.verdict => {
                lines.push(format!("{key}: {:?} -> {:?}", x.verdict, y.verdict).to_lowercase())
            }
            Some(y) if x.report.witnesses != y.report.witnesses => lines.push(format!("{key}: witnesses differ")),
            Some(_) => {}
        }
    }
    for y in &b.checks {
        if a.check(&y.key()).is_none() {
            lines.push(format!("{}: only in B", y.key()));
        }
    }
    ReportDiff::Lines(lines)
}

fn load_report(path: &PathBuf) -> Result<SuiteReport> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse {
        pos: e.column(),
        msg: e.to_string(),
    })
}

fn report_diff(a: &PathBuf, b: &PathBuf, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let (ra, rb) = match (load_report(a), load_report(b)) {
        (Ok(x), Ok(y)) => (x, y),
        (Err(e), _) | (_, Err(e)) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    match diff_reports(&ra, &rb) {
        ReportDiff::ScopeMismatch(why) => {
            let _ = writeln!(err, "scope mismatch: {why}");
            2
        }
        ReportDiff::Lines(lines) if lines.is_empty() => 0,
        ReportDiff::Lines(lines) => {
            for l in lines {
                let _ = writeln!(out, "{l}");
            }
            1
        }
    }
}
