//! `rectjack`: construct Jack polynomials and verify the rectangular singular
//! family from the command line.
//!
//! Exit codes: 0 when every check passes, 1 when a mathematical check fails
//! (the evidence is still emitted), 2 on usage errors.

mod text;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rectjack::combinatorics::bricks::{lambda, t0};
use rectjack::combinatorics::{rsyt_from_contents, Tableau};
use rectjack::field::{format_rational, parse_rational};
use rectjack::jack::construct_jack;
use rectjack::json::{parse_composition, parse_contents, poly_from_json_infer, poly_to_json, ratpoly_to_json, PolyJson, RatFuncJson};
use rectjack::operators::{OperatorKind, OperatorTag};
use rectjack::singular::{
    alpha_variants, brick_map, example_n5, fundamental_equation_holds, mu_verify, norms_and_gamma, singular_family,
    uniqueness_oracle, Verdict,
};
use rectjack::Error;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "rectjack", version, about = "Nonsymmetric Jack polynomials and singular polynomials for rectangular shapes")]
struct Cli {
    /// Write the document here instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Jack polynomial construction.
    #[command(subcommand)]
    Jack(JackCommand),
    /// Apply one operator to a JSON polynomial with rational coefficients.
    ApplyOperator(ApplyArgs),
    /// Singular family verification.
    #[command(subcommand)]
    Singular(SingularCommand),
    /// The brick map S -> (beta{S}, T{S}).
    Brickmap(BrickmapArgs),
    /// Spectral-vector uniqueness oracle.
    #[command(subcommand)]
    Uniq(UniqCommand),
    /// Norms and rescaling factors over Y(sigma).
    Norms(ShapeArgs),
    /// The module map mu.
    #[command(subcommand)]
    Mu(MuCommand),
    /// Worked examples.
    #[command(subcommand)]
    Example(ExampleCommand),
}

#[derive(Subcommand, Debug)]
enum JackCommand {
    /// Build J_{alpha,T} over Q(kappa), optionally specialized.
    Construct {
        /// Composition, e.g. 2,0,1.
        #[arg(long)]
        alpha: String,
        /// Content vector c(1,T),...,c(N,T) of the reverse standard tableau T.
        #[arg(long, allow_hyphen_values = true)]
        tableau_contents: String,
        /// Specialize at this kappa ("p/q").
        #[arg(long, allow_hyphen_values = true)]
        kappa: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OpName {
    Dunkl,
    Cherednik,
    CherednikPrime,
    JucysMurphy,
}

#[derive(Args, Debug)]
struct ApplyArgs {
    #[arg(long, value_enum)]
    op: OpName,
    /// Variable index i, 1-based.
    #[arg(long)]
    index: usize,
    #[arg(long, allow_hyphen_values = true)]
    kappa: String,
    /// JSON polynomial; "-" reads stdin.
    #[arg(long, value_name = "FILE")]
    input: PathBuf,
}

#[derive(Args, Debug)]
struct ShapeArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    k: usize,
}

#[derive(Subcommand, Debug)]
enum SingularCommand {
    /// Build J_{n beta{S},T{S}} for every S and check D_i J = 0 and omega_i J = c(i,S) J at kappa = n/(m+2).
    Verify {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
}

#[derive(Args, Debug)]
struct BrickmapArgs {
    /// JSON array of the two rows of S.
    #[arg(long, value_name = "FILE")]
    tableau_json: PathBuf,
    /// Brick width; S must have shape (mk, mk).
    #[arg(long)]
    m: usize,
}

#[derive(Subcommand, Debug)]
enum UniqCommand {
    /// Check (lambda, T0), or (alpha^(u), T0) with --s and --variant.
    Check {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, requires = "variant")]
        s: Option<usize>,
        #[arg(long, requires = "s", value_parser = clap::value_parser!(u8).range(1..=2))]
        variant: Option<u8>,
    },
}

#[derive(Subcommand, Debug)]
enum MuCommand {
    /// Check that mu commutes with x_i, s_i and D_i on seeded random inputs.
    Verify {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, default_value_t = 2)]
        degree: u32,
        #[arg(long, default_value_t = 20)]
        trials: usize,
    },
}

#[derive(Subcommand, Debug)]
enum ExampleCommand {
    /// The invariant singular combination for tau = (3,1,1) at kappa = 1/2.
    N5,
}

/// A finished run: the document in both renderings and the verdict.
struct Outcome {
    json: Value,
    text: String,
    passed: bool,
}

enum Failure {
    Usage(String),
    Failed(Outcome),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::BadParams(_)
            | Error::BadShapeParams { .. }
            | Error::ShapeMismatch(_)
            | Error::InvalidTableau(_)
            | Error::NoSuchTableau(_)
            | Error::NotAnRsyt(..) => Failure::Usage(e.to_string()),
            other => {
                let msg = other.to_string();
                Failure::Failed(Outcome { json: json!({ "passed": false, "error": msg }), text: format!("FAILED: {msg}\n"), passed: false })
            }
        }
    }
}

fn outcome<T: Serialize>(doc: &T, text: String, passed: bool) -> Result<Outcome, Failure> {
    let json = serde_json::to_value(doc).map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(Outcome { json, text, passed })
}

fn read_input(path: &Path) -> Result<String, Failure> {
    let mut s = String::new();
    if path == Path::new("-") {
        io::stdin().read_to_string(&mut s).map_err(|e| Failure::Usage(format!("--input: {e}")))?;
    } else {
        s = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }
    Ok(s)
}

fn kappa_arg(flag: &str, s: &str) -> Result<rectjack::field::BigRational, Failure> {
    parse_rational(s).map_err(|e| Failure::Usage(format!("{flag}: {e}")))
}

fn jack_construct(alpha: &str, contents: &str, kappa: Option<&str>) -> Result<Outcome, Failure> {
    let alpha = parse_composition(alpha).map_err(|e| Failure::Usage(format!("--alpha: {e}")))?;
    let contents = parse_contents(contents).map_err(|e| Failure::Usage(format!("--tableau-contents: {e}")))?;
    let t = rsyt_from_contents(&contents).map_err(|e| Failure::Usage(format!("--tableau-contents: {e}")))?;
    let kappa = kappa.map(|k| kappa_arg("--kappa", k)).transpose()?;
    let j = construct_jack(&alpha, &t)?;
    let mut doc = json!({
        "alpha": alpha,
        "tableau": t,
        "num_terms": j.poly.num_terms(),
        "num_monomials": j.poly.num_monomials(),
    });
    let text;
    match &kappa {
        None => {
            let spectral: Vec<RatFuncJson> = j.spectral.to_ratfuncs().iter().map(RatFuncJson::from).collect();
            doc["spectral"] = json!(spectral);
            doc["polynomial"] = json!(ratpoly_to_json(&j.poly));
            text = text::jack(&alpha, &t, &j.spectral.to_string(), None, &text::ratpoly(&j.poly));
        }
        Some(k) => {
            let spectral: Vec<String> = j.spectral.evaluate(k)?.iter().map(format_rational).collect();
            let value = j.specialize(k)?;
            doc["kappa"] = json!(format_rational(k));
            doc["spectral"] = json!(spectral);
            doc["polynomial"] = json!(poly_to_json(&value));
            text = text::jack(&alpha, &t, &format!("({})", spectral.join(", ")), Some(k), &text::poly(&value));
        }
    }
    Ok(Outcome { json: doc, text, passed: true })
}

fn apply_operator(args: &ApplyArgs) -> Result<Outcome, Failure> {
    let kappa = kappa_arg("--kappa", &args.kappa)?;
    let raw = read_input(&args.input)?;
    let terms: PolyJson = serde_json::from_str(&raw).map_err(|e| Failure::Usage(format!("--input: {e}")))?;
    let p = poly_from_json_infer(&terms).map_err(|e| Failure::Usage(format!("--input: {e}")))?;
    let kind = match args.op {
        OpName::Dunkl => OperatorKind::Dunkl,
        OpName::Cherednik => OperatorKind::Cherednik,
        OpName::CherednikPrime => OperatorKind::CherednikPrime,
        OpName::JucysMurphy => OperatorKind::JucysMurphy,
    };
    let tag = OperatorTag { kind, index: args.index };
    let out = tag.apply(&p, &kappa).map_err(|e| Failure::Usage(format!("--index: {e}")))?;
    let text = format!("{tag} at kappa = {}:\n{}", format_rational(&kappa), text::poly(&out));
    outcome(&poly_to_json(&out), text, true)
}

fn singular_verify(shape: &ShapeArgs, n: usize) -> Result<Outcome, Failure> {
    let cert = singular_family(shape.m, shape.k, n)?;
    let passed = cert.passed && cert.check().is_ok();
    outcome(&cert, text::certificate(&cert), passed)
}

fn brickmap(args: &BrickmapArgs) -> Result<Outcome, Failure> {
    let raw = read_input(&args.tableau_json)?;
    let s: Tableau = serde_json::from_str(&raw).map_err(|e| Failure::Usage(format!("--tableau-json: {e}")))?;
    let pair = brick_map(&s, args.m)?;
    let holds = fundamental_equation_holds(&pair, &s, args.m);
    let doc = json!({ "source": s, "beta": pair.beta, "tableau": pair.tableau, "fundamental_equation": holds });
    let text = format!(
        "S =\n{}\n\nbeta{{S}} = {}\n\nT{{S}} =\n{}\n\nfundamental equation: {}\n",
        text::indent(&s),
        pair.beta,
        text::indent(&pair.tableau),
        if holds { "holds" } else { "FAILS" }
    );
    Ok(Outcome { json: doc, text, passed: holds })
}

fn uniq_check(shape: &ShapeArgs, s: Option<usize>, variant: Option<u8>) -> Result<Outcome, Failure> {
    let (m, k) = (shape.m, shape.k);
    let kappa = rectjack::singular::singular_kappa(m, 1)?;
    let t = t0(m, k)?;
    let beta = match (s, variant) {
        (Some(s), Some(u)) => alpha_variants(m, k, s)?.alpha(u as usize).clone(),
        _ => lambda(m, k)?,
    };
    let report = uniqueness_oracle(&beta, &t, &kappa)?;
    let passed = report.verdict == Verdict::Unique;
    outcome(&report, text::uniqueness(&report), passed)
}

fn norms(shape: &ShapeArgs) -> Result<Outcome, Failure> {
    let report = norms_and_gamma(shape.m, shape.k)?;
    let passed = report.path_independent && report.all_match;
    outcome(&report, text::norms(&report), passed)
}

fn mu(shape: &ShapeArgs, degree: u32, trials: usize, seed: u64) -> Result<Outcome, Failure> {
    let report = mu_verify(shape.m, shape.k, degree, trials, seed)?;
    outcome(&report, text::mu(&report), report.passed)
}

fn n5() -> Result<Outcome, Failure> {
    let report = example_n5()?;
    outcome(&report, text::n5(&report), report.passed)
}

fn dispatch(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Jack(JackCommand::Construct { alpha, tableau_contents, kappa }) => {
            jack_construct(alpha, tableau_contents, kappa.as_deref())
        }
        Command::ApplyOperator(args) => apply_operator(args),
        Command::Singular(SingularCommand::Verify { shape, n }) => singular_verify(shape, *n),
        Command::Brickmap(args) => brickmap(args),
        Command::Uniq(UniqCommand::Check { shape, s, variant }) => uniq_check(shape, *s, *variant),
        Command::Norms(shape) => norms(shape),
        Command::Mu(MuCommand::Verify { shape, degree, trials }) => mu(shape, *degree, *trials, cli.seed),
        Command::Example(ExampleCommand::N5) => n5(),
    }
}

fn emit(cli: &Cli, out: &Outcome) -> io::Result<()> {
    let body = match cli.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&out.json).map_err(io::Error::other)?;
            s.push('\n');
            s
        }
        Format::Text => out.text.clone(),
    };
    match &cli.output {
        Some(path) => fs::write(path, body),
        None => io::stdout().lock().write_all(body.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = dispatch(&cli);
    let out = match result {
        Ok(o) | Err(Failure::Failed(o)) => o,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = emit(&cli, &out) {
        eprintln!("error: --output: {e}");
        return ExitCode::from(2);
    }
    if out.passed {
        ExitCode::SUCCESS
    } else {
        eprintln!("verification failed");
        ExitCode::from(1)
    }
}
