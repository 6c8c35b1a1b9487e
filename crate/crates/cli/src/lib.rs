//! Command-line front end for `liaison-core`.
//!
//! Exit status: 0 on success or a true check, 1 when a check is false or a
//! counterexample is found, 2 on invalid input.

mod input;

use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use liaison_core::domination::{domination_failure, enumerate_dominating, eta_of, theta_of};
use liaison_core::hilbert::{
    degree_genus, gamma_from_free_resolution, gamma_of_resolution, hilbert_function,
    hilbert_polynomial,
};
use liaison_core::linkage::{
    double_link, integral_chain, integral_necessary, invariants, link_dual, lr_decompose, t1_bound,
    IntegralVariant,
};
use liaison_core::oracle::check_claim;
use liaison_core::poset::Poset;
use liaison_core::{
    classify, AdmissibleCharacter, Claim, Error, IntFn, LinkKind, LinkageClass, NatFn,
    ResolutionData, SearchWindow, SubschemeModel, TwistMultiset,
};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use input::{load_class, load_model, read_json};

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed arguments or files, or a violated precondition.
    #[error("{0}")]
    Invalid(String),
    /// A check evaluated to false.
    #[error("{0}")]
    False(String),
    #[error("output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::False(_) => 1,
            CliError::Invalid(_) | CliError::Io(_) => 2,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NotDominating { .. } | Error::NotDominatingModel => {
                CliError::False(e.to_string())
            }
            other => CliError::Invalid(other.to_string()),
        }
    }
}

/// What a successful command reports besides its output.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Success,
    False,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Success => 0,
            Verdict::False => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "liaison",
    version,
    about = "Exact combinatorics of even linkage classes"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Character utilities.
    #[command(subcommand)]
    Char(CharCommand),
    /// Checks whether sigma dominates gamma at the given height.
    Dominate(PairArgs),
    /// The η invariant of a domination.
    Eta(PairArgs),
    /// The θ invariant of a domination.
    Theta(PairArgs),
    /// Model utilities.
    #[command(subcommand)]
    Model(ModelCommand),
    /// Applies a double link of type (s, h) to a model.
    DoubleLink {
        #[arg(long)]
        class: Option<String>,
        #[arg(long)]
        model: PathBuf,
        /// The type `S,H`.
        #[arg(long = "type", value_parser = parse_pair)]
        link_type: (i64, i64),
        #[arg(long, value_enum, default_value_t = KindArg::Basic)]
        kind: KindArg,
    },
    /// Links a model by a complete intersection of type (s, t).
    Link {
        #[arg(long)]
        class: Option<String>,
        #[arg(long)]
        model: PathBuf,
        /// The degrees `S,T`.
        #[arg(long, value_parser = parse_pair)]
        degrees: (i64, i64),
    },
    /// Lower bound for t1 of a model.
    T1Bound(ModelArgs),
    /// Numeric necessary conditions for an integral representative.
    IntegralCheck {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, value_enum)]
        variant: VariantArg,
    },
    /// Chains of double links from one model to a dominating one.
    Decompose {
        #[arg(value_enum)]
        mode: DecomposeMode,
        #[arg(long)]
        class: Option<String>,
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        to: PathBuf,
    },
    /// Lists the characters dominating the class's minimal character at a height.
    Enumerate {
        #[arg(long)]
        class: String,
        #[arg(long)]
        height: i64,
        /// Degree window `A,B` for η.
        #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
        window: (i64, i64),
        #[arg(long)]
        count_only: bool,
    },
    /// Exports the domination order on a window of models.
    Poset {
        #[arg(long)]
        class: String,
        #[arg(long)]
        max_height: i64,
        /// Degree window `A,B` for θ.
        #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
        window: (i64, i64),
        #[arg(long, value_enum, default_value_t = PosetFormat::Dot)]
        format: PosetFormat,
    },
    /// Hilbert function data of a character.
    Hilbert {
        #[arg(long)]
        gamma: PathBuf,
        /// Dimension of the ambient projective space.
        #[arg(long, default_value_t = 3)]
        n: i64,
        #[command(flatten)]
        query: HilbertQuery,
    },
    /// Exhaustively checks a claim over a window.
    Verify {
        #[arg(long, value_parser = parse_claim)]
        claim: Claim,
        /// Degree window `A,B`.
        #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
        window: (i64, i64),
        #[arg(long, default_value_t = 3)]
        max_abs: i64,
        #[arg(long, default_value_t = 3)]
        max_height: i64,
    },
}

#[derive(Debug, Subcommand)]
enum CharCommand {
    /// Classifies an integer function.
    Classify {
        /// File holding `{"entries": [[l, v], ...]}`.
        file: PathBuf,
    },
    /// γ from resolution data.
    Gamma(GammaSource),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct GammaSource {
    /// `{"stages": [[...], ...]}`: twists of a free resolution of the ideal.
    #[arg(long)]
    free_resolution: Option<PathBuf>,
    /// A short resolution file.
    #[arg(long)]
    n_data: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum ModelCommand {
    /// Derived invariants of the model (class, h, θ).
    Invariants {
        #[arg(long)]
        class: String,
        #[arg(long)]
        height: i64,
        /// θ file; defaults to zero.
        #[arg(long)]
        theta: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct PairArgs {
    #[arg(long)]
    gamma: PathBuf,
    #[arg(long)]
    sigma: PathBuf,
    #[arg(long)]
    height: i64,
}

#[derive(Debug, Args)]
struct ModelArgs {
    #[arg(long)]
    class: Option<String>,
    #[arg(long)]
    model: PathBuf,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct HilbertQuery {
    /// h⁰ of the ideal sheaf in degree L.
    #[arg(long, allow_hyphen_values = true)]
    at: Option<i64>,
    /// Hilbert polynomial coefficients in the binomial basis.
    #[arg(long)]
    polynomial: bool,
    #[arg(long)]
    degree_genus: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Basic,
    Elementary,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VariantArg {
    StrictS0,
    CombinedS1,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DecomposeMode {
    Lr,
    Integral,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PosetFormat {
    Dot,
}

fn parse_pair(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected `A,B`, got '{s}'"))?;
    let int = |v: &str| v.trim().parse::<i64>().map_err(|e| format!("'{v}': {e}"));
    Ok((int(a)?, int(b)?))
}

fn parse_claim(s: &str) -> Result<Claim, String> {
    s.parse::<Claim>().map_err(|_| {
        let names: Vec<_> = Claim::ALL.iter().map(|c| c.name()).collect();
        format!("unknown claim '{s}'; expected one of {}", names.join(", "))
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FreeResolution {
    stages: Vec<TwistMultiset>,
}

/// Writes a value as one line of JSON with sorted keys.
fn emit<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    let value: Value = serde_json::to_value(value).map_err(|e| CliError::Invalid(e.to_string()))?;
    writeln!(out, "{value}")?;
    Ok(())
}

fn optional_class(spec: Option<&str>) -> Result<Option<Arc<LinkageClass>>, CliError> {
    spec.map(|s| load_class(s, None)).transpose()
}

fn model_from(args: &ModelArgs) -> Result<SubschemeModel, CliError> {
    let class = optional_class(args.class.as_deref())?;
    load_model(&args.model, class.as_ref())
}

/// Runs one parsed invocation, writing its output to `out`.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<Verdict, CliError> {
    match cli.command {
        Command::Char(CharCommand::Classify { file }) => {
            let f: IntFn = read_json(&file)?;
            emit(out, &classify(&f))?;
        }
        Command::Char(CharCommand::Gamma(source)) => {
            let gamma = match (source.free_resolution, source.n_data) {
                (Some(path), _) => {
                    gamma_from_free_resolution(&read_json::<FreeResolution>(&path)?.stages)?
                }
                (_, Some(path)) => gamma_of_resolution(&read_json::<ResolutionData>(&path)?)?,
                (None, None) => unreachable!("clap requires one source"),
            };
            emit(out, &gamma)?;
        }
        Command::Dominate(args) => {
            let (gamma, sigma) = read_pair(&args)?;
            if args.height < 0 {
                return Err(Error::NegativeHeight(args.height).into());
            }
            let failure = domination_failure(&gamma, &sigma, args.height);
            emit(
                out,
                &json!({
                    "dominates": failure.is_none(),
                    "height": args.height,
                    "failure": failure.as_ref().map(|f| f.to_string()),
                }),
            )?;
            if failure.is_some() {
                return Ok(Verdict::False);
            }
        }
        Command::Eta(args) => {
            let (gamma, sigma) = read_pair(&args)?;
            emit(out, &eta_of(&gamma, &sigma, args.height)?)?;
        }
        Command::Theta(args) => {
            let (gamma, sigma) = read_pair(&args)?;
            emit(out, &theta_of(&gamma, &sigma, args.height)?)?;
        }
        Command::Model(ModelCommand::Invariants {
            class,
            height,
            theta,
        }) => {
            let class = load_class(&class, None)?;
            let theta = match theta {
                Some(path) => read_json::<NatFn>(&path)?,
                None => NatFn::zero(),
            };
            let model = SubschemeModel::new(class, height, theta)?;
            emit(out, &invariants(&model)?)?;
        }
        Command::DoubleLink {
            class,
            model,
            link_type: (s, h),
            kind,
        } => {
            let x = model_from(&ModelArgs { class, model })?;
            let kind = match kind {
                KindArg::Basic => LinkKind::Basic,
                KindArg::Elementary => LinkKind::Elementary,
            };
            emit(out, &double_link(&x, s, h, kind)?)?;
        }
        Command::Link {
            class,
            model,
            degrees: (s, t),
        } => {
            let x = model_from(&ModelArgs { class, model })?;
            emit(out, &link_dual(&x, s, t)?)?;
        }
        Command::T1Bound(args) => {
            let x = model_from(&args)?;
            writeln!(out, "{}", t1_bound(&x))?;
        }
        Command::IntegralCheck { model, variant } => {
            let x = model_from(&model)?;
            let variant = match variant {
                VariantArg::StrictS0 => IntegralVariant::StrictS0,
                VariantArg::CombinedS1 => IntegralVariant::CombinedS1,
            };
            let verdict = integral_necessary(&x, variant);
            emit(out, &verdict)?;
            if !verdict.pass {
                return Ok(Verdict::False);
            }
        }
        Command::Decompose {
            mode,
            class,
            from,
            to,
        } => {
            let class = optional_class(class.as_deref())?;
            let x = load_model(&from, class.as_ref())?;
            let y = load_model(&to, class.as_ref())?;
            match mode {
                DecomposeMode::Lr => emit(out, &lr_decompose(&x, &y)?)?,
                DecomposeMode::Integral => emit(out, &integral_chain(&x, &y)?)?,
            }
        }
        Command::Enumerate {
            class,
            height,
            window: (lo, hi),
            count_only,
        } => {
            let class = load_class(&class, None)?;
            let found = enumerate_dominating(class.gamma0(), height, lo, hi)?;
            if count_only {
                writeln!(out, "{}", found.len())?;
            } else {
                for witness in &found {
                    emit(out, witness)?;
                }
            }
        }
        Command::Poset {
            class,
            max_height,
            window: (lo, hi),
            format: PosetFormat::Dot,
        } => {
            let class = load_class(&class, None)?;
            write!(
                out,
                "{}",
                Poset::build(&class, max_height, lo, hi)?.to_dot()
            )?;
        }
        Command::Hilbert { gamma, n, query } => {
            let gamma: AdmissibleCharacter = read_json(&gamma)?;
            if n < 2 {
                return Err(CliError::Invalid(format!(
                    "ambient dimension must be at least 2, got {n}"
                )));
            }
            if let Some(l) = query.at {
                writeln!(out, "{}", hilbert_function(&gamma, n, l))?;
            } else if query.polynomial {
                emit(out, &hilbert_polynomial(&gamma, n))?;
            } else {
                emit(out, &degree_genus(&gamma, n))?;
            }
        }
        Command::Verify {
            claim,
            window: (lo, hi),
            max_abs,
            max_height,
        } => {
            let window = SearchWindow::new(lo, hi, max_abs, max_height)?;
            let report = check_claim(claim, &window);
            emit(out, &report)?;
            if !report.holds() {
                return Ok(Verdict::False);
            }
        }
    }
    Ok(Verdict::Success)
}

fn read_pair(args: &PairArgs) -> Result<(AdmissibleCharacter, AdmissibleCharacter), CliError> {
    Ok((read_json(&args.gamma)?, read_json(&args.sigma)?))
}
