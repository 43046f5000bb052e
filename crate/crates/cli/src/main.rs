//! `superbol`: check, construct and twist graded (Hom-)algebras stored as JSON.
//!
//! Exit codes: 0 when everything checked passes, 1 for a mathematical
//! failure (a failing axiom or a violated construction hypothesis), 2 for
//! usage, I/O and format errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use superbol::constructions::{
    beta_n_twist, bol_from_right_alternative_with, lie_sts_from_jordan_with, nth_derived, yau_twist_binary,
    yau_twist_bts, yau_twist_bts_unchecked,
};
use superbol::dsl::{self, NamedIdentity};
use superbol::fixtures::{Fixture, FixtureId};
use superbol::identities::Suite;
use superbol::io;
use superbol::regression::{run_all, RegressionConfig};
use superbol::scalar::parse_scalar;
use superbol::{CheckReport, Error, JordanSign, ScaleConvention, SuperAlgebraData};

#[derive(Parser)]
#[command(name = "superbol", version, about = "Exact checks and constructions for graded Bol-type algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check an algebra file against an axiom suite or identity file.
    Check(CheckArgs),
    /// Build a new algebra from the one in --file.
    Construct(ConstructArgs),
    /// Twist an algebra along an even morphism.
    Twist(TwistArgs),
    /// The nth derived Hom-algebra.
    Derive(DeriveArgs),
    /// List or export the built-in example algebras.
    Fixture {
        #[command(subcommand)]
        action: FixtureAction,
    },
    /// Run every regression criterion and print a summary.
    VerifyPaper(VerifyArgs),
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long)]
    file: PathBuf,
    /// One of right-alt, left-alt, alt, bol, hom-bol, lsts, hlsts,
    /// multiplicative, grading, supercomm.
    #[arg(long, conflicts_with = "dsl", required_unless_present = "dsl")]
    suite: Option<String>,
    /// A built-in identity file name, a path to an identity file, or a
    /// single identity written inline.
    #[arg(long)]
    dsl: Option<String>,
    /// Print the machine-readable report instead of the text one.
    #[arg(long)]
    json: bool,
    /// Rescale the products (binary by λ, ternary by λ²) before checking.
    #[arg(long, allow_hyphen_values = true)]
    scale: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructKind {
    /// Bol structure on a right (Hom-)alternative algebra.
    Bol,
    /// Lie supertriple system on a (Hom-)Jordan superalgebra.
    Lsts,
}

#[derive(Args)]
struct ConstructArgs {
    kind: ConstructKind,
    #[arg(long)]
    file: PathBuf,
    #[arg(long, allow_hyphen_values = true)]
    scale: Option<String>,
    /// minus or plus
    #[arg(long, default_value = "minus")]
    jordan_sign: String,
    /// Output path; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TwistKind {
    Yau,
    Power,
}

#[derive(Args)]
struct TwistArgs {
    kind: TwistKind,
    #[arg(long)]
    file: PathBuf,
    #[arg(long)]
    morphism: PathBuf,
    /// Power of the morphism (power twists only).
    #[arg(short = 'n', default_value_t = 1)]
    n: u32,
    /// Apply the Yau formulas without checking that the morphism preserves
    /// the products.
    #[arg(long)]
    unchecked: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DeriveArgs {
    #[arg(short = 'n')]
    n: u32,
    #[arg(long)]
    file: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum FixtureAction {
    List,
    Emit {
        name: String,
        /// key=value, repeatable
        #[arg(long = "param")]
        params: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value = "minus")]
    jordan_sign: String,
    #[arg(long, allow_hyphen_values = true)]
    scale: Option<String>,
}

/// Error carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotMorphism(_)
            | Error::NotHomBol(_)
            | Error::NotCommuting(_)
            | Error::NotRightAlternative(_)
            | Error::NotMultiplicative(_)
            | Error::NotSupercommutative(_)
            | Error::InconsistentForms(_)
            | Error::UnexpectedTwist
            | Error::NonzeroBinary => 1,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match cli.command {
        Command::Check(args) => check(args),
        Command::Construct(args) => construct(args),
        Command::Twist(args) => twist(args),
        Command::Derive(args) => derive(args),
        Command::Fixture { action } => fixture(action),
        Command::VerifyPaper(args) => verify(args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("superbol: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn scale(text: Option<&str>) -> Result<ScaleConvention, Failure> {
    match text {
        None => Ok(ScaleConvention::unit()),
        Some(t) => {
            let lambda = parse_scalar(t).map_err(|_| Failure::usage(format!("--scale {t:?} is not a rational")))?;
            Ok(ScaleConvention::new(lambda)?)
        }
    }
}

fn jordan_sign(text: &str) -> Result<JordanSign, Failure> {
    Ok(text.parse::<JordanSign>()?)
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn identities_for(source: &str) -> Result<(String, Vec<NamedIdentity>), Failure> {
    if let Some(ids) = dsl::builtin(source) {
        return Ok((source.to_string(), ids));
    }
    let path = Path::new(source);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{source}: {e}")))?;
        let ids = dsl::parse_idl(&text).map_err(|e| Failure::usage(format!("{source}:{e}")))?;
        let name = path.file_stem().map_or_else(|| source.to_string(), |s| s.to_string_lossy().into_owned());
        return Ok((name, ids));
    }
    if source.contains("==") {
        let identity = dsl::parse_identity(source).map_err(|e| Failure::usage(format!("{e}")))?;
        return Ok(("dsl".into(), vec![NamedIdentity { label: "DSL".into(), identity }]));
    }
    Err(Failure::usage(format!("--dsl {source:?} is neither a built-in identity file, a file, nor an identity")))
}

fn check(args: CheckArgs) -> Outcome {
    let (name, mut a) = io::load_algebra(&args.file)?;
    if args.scale.is_some() {
        a = a.rescaled(scale(args.scale.as_deref())?.lambda());
    }
    let report: CheckReport = match (&args.suite, &args.dsl) {
        (Some(suite), _) => suite.parse::<Suite>()?.run(&a)?,
        (None, Some(source)) => {
            let (suite, ids) = identities_for(source)?;
            dsl::check_idl(&a, &suite, &ids)?
        }
        (None, None) => return Err(Failure::usage("one of --suite or --dsl is required")),
    };
    if args.json {
        print!("{}", io::report_to_string(&name, &report, a.grading()));
    } else {
        println!("algebra {name}");
        print!("{}", report.render(a.grading()));
    }
    Ok(if report.passed() { 0 } else { 1 })
}

fn construct(args: ConstructArgs) -> Outcome {
    let (name, a) = io::load_algebra(&args.file)?;
    let sign = jordan_sign(&args.jordan_sign)?;
    let (result, label) = match args.kind {
        ConstructKind::Bol => {
            let c = scale(args.scale.as_deref())?;
            (bol_from_right_alternative_with(&a, &c, sign)?, format!("bol({name})"))
        }
        ConstructKind::Lsts => {
            if args.scale.is_some() {
                return Err(Failure::usage("--scale applies to bol constructions only"));
            }
            (lie_sts_from_jordan_with(&a, sign)?, format!("lsts({name})"))
        }
    };
    write_output(args.out.as_deref(), &io::algebra_to_string(&label, &result))?;
    Ok(0)
}

fn twist(args: TwistArgs) -> Outcome {
    let (name, a) = io::load_algebra(&args.file)?;
    let (beta_name, beta) = io::load_morphism(&args.morphism)?;
    let result: SuperAlgebraData = match args.kind {
        TwistKind::Yau if a.ternary().is_some() => {
            if args.unchecked {
                yau_twist_bts_unchecked(&a, &beta)?
            } else {
                yau_twist_bts(&a, &beta)?
            }
        }
        TwistKind::Yau => yau_twist_binary(&a, &beta)?,
        TwistKind::Power => beta_n_twist(&a, &beta, args.n)?,
    };
    let label = match args.kind {
        TwistKind::Yau => format!("yau({name}, {beta_name})"),
        TwistKind::Power => format!("power({name}, {beta_name}, {})", args.n),
    };
    write_output(args.out.as_deref(), &io::algebra_to_string(&label, &result))?;
    Ok(0)
}

fn derive(args: DeriveArgs) -> Outcome {
    let (name, a) = io::load_algebra(&args.file)?;
    let result = nth_derived(&a, args.n)?;
    let label = if args.n == 0 { name } else { format!("derived({name}, {})", args.n) };
    write_output(args.out.as_deref(), &io::algebra_to_string(&label, &result))?;
    Ok(0)
}

fn fixture(action: FixtureAction) -> Outcome {
    match action {
        FixtureAction::List => {
            for (name, about) in FixtureId::CATALOGUE {
                println!("{name:<22} {about}");
            }
            Ok(0)
        }
        FixtureAction::Emit { name, params, out } => {
            let params = params
                .iter()
                .map(|p| {
                    p.split_once('=')
                        .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
                        .ok_or_else(|| Failure::usage(format!("--param {p:?} is not key=value")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let id = FixtureId::parse(&name, &params)?;
            let text = match id.build()? {
                Fixture::Algebra(a) => io::algebra_to_string(&id.to_string(), &a),
                Fixture::Map(m) => io::morphism_to_string(&id.to_string(), &m),
            };
            write_output(out.as_deref(), &text)?;
            Ok(0)
        }
    }
}

fn verify(args: VerifyArgs) -> Outcome {
    let cfg = RegressionConfig {
        jordan_sign: jordan_sign(&args.jordan_sign)?,
        scale: scale(args.scale.as_deref())?,
        ..RegressionConfig::default()
    };
    let criteria = run_all(&cfg);
    for c in &criteria {
        print!("{c}");
    }
    let checks: usize = criteria.iter().map(|c| c.checks.len()).sum();
    let failing: Vec<String> = criteria.iter().filter(|c| !c.passed()).map(|c| c.number.to_string()).collect();
    if failing.is_empty() {
        println!("all {} criteria pass ({checks} checks)", criteria.len());
        Ok(0)
    } else {
        println!("failing criteria: {}", failing.join(", "));
        Ok(1)
    }
}
