//! Command-line front end.
//!
//! Exit codes: `0` success (proven, member, certificate found, oracle match),
//! `1` a verified negative result, `2` a usage or parse error.
//!
//! With `--format json-lines` every record is one JSON object per line with a
//! fixed field order; big integers are written as full decimal JSON numbers.

use std::io::{self, Write};

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::value::RawValue;
use thiserror::Error;

use crate::pell::{
    certificate, classify, family_solutions, fundamental_check, pell_brute, telescope_check,
    Classification, PellEquation, PellError, SeedPair,
};
use crate::sequences::{cross_relations_check, family_term, term_fast, Family, RecurrenceSpec};
use crate::symbolic::{
    corpus, find_identity, numeric_sweep, parse_identity, prove, Identity, ProofOutcome,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl From<PellError> for CliError {
    fn from(e: PellError) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// Process exit status of a subcommand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Success,
    Negative,
}

impl Verdict {
    pub fn code(self) -> i32 {
        match self {
            Verdict::Success => 0,
            Verdict::Negative => 1,
        }
    }

    fn from_ok(ok: bool) -> Self {
        if ok {
            Verdict::Success
        } else {
            Verdict::Negative
        }
    }
}

pub const USAGE_EXIT: i32 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    JsonLines,
}

#[derive(Debug, Parser)]
#[command(name = "pell-recurrence", version, about = "Sequences, identities and Pell certificates for A(n) = 6A(n-1) - A(n-2)")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print terms of a named family or of an arbitrary seed (r, s).
    #[command(allow_negative_numbers = true)]
    Gen(GenArgs),
    /// Prove identities symbolically, optionally with a numeric sweep.
    #[command(allow_negative_numbers = true)]
    Prove(ProveArgs),
    /// Reduce a seed to a multiple of T, B, C or L.
    #[command(allow_negative_numbers = true)]
    Classify(SeedArgs),
    /// Search for a cascade certificate 32A(n)^2 + c = h L(2n+m+2).
    #[command(allow_negative_numbers = true)]
    Certificate(CertificateArgs),
    /// Brute-force solutions of x^2 - D y^2 = N.
    #[command(allow_negative_numbers = true)]
    Pell(PellArgs),
    /// Check the exact relations between the families over a range.
    #[command(allow_negative_numbers = true)]
    Relations(RangeArgs),
    /// Check the square equation (and optionally its telescoped form) for a seed.
    #[command(allow_negative_numbers = true)]
    Fundamental(FundamentalArgs),
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse::<Family>().map_err(|e| e.to_string())
}

fn parse_bigint(s: &str) -> Result<BigInt, String> {
    s.parse::<BigInt>().map_err(|e| format!("`{s}` is not an integer: {e}"))
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// Family name: T, L, B, C, E, NSW or R.
    #[arg(long, value_parser = parse_family, conflicts_with_all = ["r", "s"])]
    pub family: Option<Family>,
    /// A(0) for an arbitrary seed.
    #[arg(long, value_parser = parse_bigint, requires = "s")]
    pub r: Option<BigInt>,
    /// A(1) for an arbitrary seed.
    #[arg(long, value_parser = parse_bigint, requires = "r")]
    pub s: Option<BigInt>,
    #[arg(long, default_value_t = 0)]
    pub from: i64,
    #[arg(long, default_value_t = 9)]
    pub to: i64,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("target").required(true).args(["identity", "all", "expr"])))]
pub struct ProveArgs {
    /// Name of a corpus identity (sq1, p2, i9, rel3, ...).
    #[arg(long)]
    pub identity: Option<String>,
    /// Prove the whole corpus.
    #[arg(long)]
    pub all: bool,
    /// An identity in the expression language, e.g. "E(n) == 4*B(n)".
    #[arg(long)]
    pub expr: Option<String>,
    /// Also evaluate every side numerically for n in [LO, HI].
    #[arg(long, num_args = 2, value_names = ["LO", "HI"])]
    pub sweep: Option<Vec<i64>>,
}

#[derive(Debug, Args)]
pub struct SeedArgs {
    #[arg(long, value_parser = parse_bigint)]
    pub r: BigInt,
    #[arg(long, value_parser = parse_bigint)]
    pub s: BigInt,
}

#[derive(Debug, Args)]
pub struct CertificateArgs {
    #[command(flatten)]
    pub seed: SeedArgs,
    /// Search m in [-window, window].
    #[arg(long, default_value_t = 10)]
    pub window: i64,
    /// Verify the certificate for n in [1, n-check].
    #[arg(long, default_value_t = 10)]
    pub n_check: i64,
}

#[derive(Debug, Args)]
pub struct PellArgs {
    #[arg(long)]
    pub d: i64,
    #[arg(long)]
    pub n_const: i64,
    #[arg(long)]
    pub y_max: u64,
    /// Compare against the family parameterization (supported for
    /// (D,N) = (8,1), (2,-1), (2,8), (32,4)).
    #[arg(long)]
    pub compare_families: bool,
}

#[derive(Debug, Args)]
pub struct RangeArgs {
    #[arg(long, default_value_t = -10)]
    pub from: i64,
    #[arg(long, default_value_t = 30)]
    pub to: i64,
}

#[derive(Debug, Args)]
pub struct FundamentalArgs {
    #[command(flatten)]
    pub seed: SeedArgs,
    #[arg(long, default_value_t = 1)]
    pub from: i64,
    #[arg(long, default_value_t = 10)]
    pub to: i64,
    /// Check the telescoped form with this shift instead.
    #[arg(long)]
    pub m: Option<i64>,
}

fn num(v: &BigInt) -> Box<RawValue> {
    RawValue::from_string(v.to_string()).expect("decimal integers are valid JSON")
}

#[derive(Serialize)]
struct TermRecord {
    kind: &'static str,
    n: i64,
    value: Box<RawValue>,
}

#[derive(Serialize)]
struct ProofRecord<'a> {
    kind: &'static str,
    name: &'a str,
    outcome: &'static str,
    witness_n: Option<i64>,
    sweep: Option<&'static str>,
}

#[derive(Serialize)]
struct ClassificationRecord {
    kind: &'static str,
    family: Option<&'static str>,
    shift: Option<i64>,
    mu_num: Option<Box<RawValue>>,
    mu_den: Option<Box<RawValue>>,
}

#[derive(Serialize)]
struct CertificateRecord {
    kind: &'static str,
    m: Option<i64>,
    h: Option<Box<RawValue>>,
    c: Option<Box<RawValue>>,
}

#[derive(Serialize)]
struct SolutionRecord {
    kind: &'static str,
    x: Box<RawValue>,
    y: Box<RawValue>,
}

#[derive(Serialize)]
struct ComparisonRecord {
    kind: &'static str,
    verdict: &'static str,
    brute: usize,
    family: usize,
}

#[derive(Serialize)]
struct RelationsRecord {
    kind: &'static str,
    from: i64,
    to: i64,
    ok: bool,
    checked: usize,
    failure: Option<String>,
}

#[derive(Serialize)]
struct FundamentalRecord {
    kind: &'static str,
    n: i64,
    m: Option<i64>,
    lhs: Box<RawValue>,
    rhs: Box<RawValue>,
    holds: bool,
}

struct Emitter<'w> {
    format: Format,
    out: &'w mut dyn Write,
}

impl Emitter<'_> {
    fn emit<R: Serialize>(&mut self, record: &R, table: impl FnOnce() -> String) -> io::Result<()> {
        match self.format {
            Format::JsonLines => {
                serde_json::to_writer(&mut *self.out, record)?;
                writeln!(self.out)
            }
            Format::Table => writeln!(self.out, "{}", table()),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code; usage errors go to `err`.
pub fn run_from_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli, out, err),
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            if e.use_stderr() {
                USAGE_EXIT
            } else {
                0
            }
        }
    }
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut emitter = Emitter { format: cli.format, out };
    match dispatch(cli.command, &mut emitter) {
        Ok(verdict) => verdict.code(),
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            USAGE_EXIT
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            USAGE_EXIT
        }
    }
}

fn dispatch(command: Command, em: &mut Emitter<'_>) -> Result<Verdict, CliError> {
    match command {
        Command::Gen(args) => cmd_gen(args, em),
        Command::Prove(args) => cmd_prove(args, em),
        Command::Classify(args) => cmd_classify(args, em),
        Command::Certificate(args) => cmd_certificate(args, em),
        Command::Pell(args) => cmd_pell(args, em),
        Command::Relations(args) => cmd_relations(args, em),
        Command::Fundamental(args) => cmd_fundamental(args, em),
    }
}

fn cmd_gen(args: GenArgs, em: &mut Emitter<'_>) -> Result<Verdict, CliError> {
    if args.from > args.to {
        return Err(CliError::Usage(format!("--from {} exceeds --to {}", args.from, args.to)));
    }
    let term: Box<dyn Fn(i64) -> BigInt> = match (args.family, args.r, args.s) {
        (Some(f), _, _) => Box::new(move |n| family_term(f, n)),
        (None, Some(r), Some(s)) => {
            let spec = RecurrenceSpec::six(r, s);
            Box::new(move |n| term_fast(&spec, n))
        }
        _ => return Err(CliError::Usage("give --family, or both --r and --s".into())),
    };
    for n in args.from..=args.to {
        let value = term(n);
        em.emit(&TermRecord { kind: "term", n, value: num(&value) }, || format!("{n}\t{value}"))?;
    }
    Ok(Verdict::Success)
}

fn cmd_prove(args: ProveArgs, em: &mut Emitter<'_>) -> Result<Verdict, CliError> {
    let targets: Vec<(String, Identity)> = if args.all {
        corpus().iter().map(|e| (e.name.to_string(), e.identity())).collect()
    } else if let Some(name) = &args.identity {
        let entry = find_identity(name).ok_or_else(|| {
            let known: Vec<_> = corpus().iter().map(|e| e.name).collect();
            CliError::Usage(format!("unknown identity `{name}` (known: {})", known.join(", ")))
        })?;
        vec![(entry.name.to_string(), entry.identity())]
    } else {
        let text = args.expr.as_deref().expect("clap enforces one target");
        let id = parse_identity(text)
            .map_err(|e| CliError::Usage(format!("cannot parse `{text}`: {e}")))?;
        vec![("expr".to_string(), id)]
    };
    let sweep = args.sweep.map(|v| v[0]..=v[1]);

    let mut all_ok = true;
    for (name, identity) in &targets {
        let outcome = prove(identity).map_err(|e| CliError::Usage(e.to_string()))?;
        let sweep_ok = match &sweep {
            Some(range) => Some(
                numeric_sweep(identity, range.clone())
                    .map_err(|e| CliError::Usage(e.to_string()))?
                    .is_ok(),
            ),
            None => None,
        };
        all_ok &= outcome.is_proven() && sweep_ok.unwrap_or(true);
        let record = ProofRecord {
            kind: "proof",
            name,
            outcome: if outcome.is_proven() { "proven" } else { "counterexample" },
            witness_n: outcome.witness(),
            sweep: sweep_ok.map(|ok| if ok { "agree" } else { "disagree" }),
        };
        em.emit(&record, || {
            let mut line = match &outcome {
                ProofOutcome::Proven => format!("{name:<6} proven"),
                ProofOutcome::Counterexample { n, lhs_side, rhs_side, lhs_value, rhs_value } => {
                    format!(
                        "{name:<6} counterexample at n = {n}: side {lhs_side} = {lhs_value}, side {rhs_side} = {rhs_value}"
                    )
                }
            };
            if let Some(ok) = sweep_ok {
                line.push_str(if ok { " (sweep agrees)" } else { " (sweep DISAGREES)" });
            }
            line
        })?;
    }
    Ok(Verdict::from_ok(all_ok))
}

fn seed_from(args: SeedArgs) -> Result<SeedPair, CliError> {
    SeedPair::new(args.r, args.s).map_err(|e| CliError::Usage(e.to_string()))
}

fn cmd_classify(args: SeedArgs, em: &mut Emitter<'_>) -> Result<Verdict, CliError> {
    let seed = seed_from(args)?;
    let outcome = classify(&seed);
    let record = match &outcome {
        Classification::Member { family, shift, scale } => ClassificationRecord {
            kind: "classification",
            family: Some(family.name()),
            shift: Some(*shift),
            mu_num: Some(num(scale.numer())),
            mu_den: Some(num(scale.denom())),
        },
        Classification::NotInFourFamilies => ClassificationRecord {
            kind: "classification",
            family: None,
            shift: None,
            mu_num: None,
            mu_den: None,
        },
    };
    em.emit(&record, || format!("seed {seed}: {outcome}"))?;
    Ok(Verdict::from_ok(outcome.is_member()))
}

fn cmd_certificate(args: CertificateArgs, em: &mut Emitter<'_>) -> Result<Verdict, CliError> {
    let seed = seed_from(args.seed)?;
    let found = certificate(&seed, args.window, args.n_check)?;
    let record = CertificateRecord {
        kind: "certificate",
        m: found.as_ref().map(|c| c.m),
        h: found.as_ref().map(|c| num(&c.h)),
        c: found.as_ref().map(|c| num(&c.c)),
    };
    em.emit(&record, || match &found {
        Some(cert) => format!("seed {seed}: m = {}, h = {}, c = {}: {cert}", cert.m, cert.h, cert.c),
        None => format!("seed {seed}: no integer-h certificate for m in [-{0}, {0}]", args.window),
    })?;
    Ok(Verdict::from_ok(found.is_some()))
}

fn cmd_pell(args: PellArgs, em: &mut Emitter<'_>) -> Result<Verdict, CliError> {
    let eq = PellEquation::new(args.d, args.n_const)?;
    let brute = pell_brute(&eq, args.y_max)?;
    for sol in &brute {
        let record = SolutionRecord { kind: "solution", x: num(&sol.x), y: num(&sol.y) };
        em.emit(&record, || format!("({}, {})", sol.x, sol.y))?;
    }
    if !args.compare_families {
        return Ok(Verdict::Success);
    }
    let predicted = family_solutions(&eq, args.y_max)?;
    let matches = predicted == brute;
    let record = ComparisonRecord {
        kind: "comparison",
        verdict: if matches { "match" } else { "mismatch" },
        brute: brute.len(),
        family: predicted.len(),
    };
    em.emit(&record, || {
        format!(
            "{eq}: {} ({} brute-force, {} from families)",
            record.verdict,
            brute.len(),
            predicted.len()
        )
    })?;
    Ok(Verdict::from_ok(matches))
}

fn cmd_relations(args: RangeArgs, em: &mut Emitter<'_>) -> Result<Verdict, CliError> {
    if args.from > args.to {
        return Err(CliError::Usage(format!("--from {} exceeds --to {}", args.from, args.to)));
    }
    let result = cross_relations_check(args.from..=args.to);
    let record = RelationsRecord {
        kind: "relations",
        from: args.from,
        to: args.to,
        ok: result.is_ok(),
        checked: *result.as_ref().unwrap_or(&0),
        failure: result.as_ref().err().map(|f| f.to_string()),
    };
    em.emit(&record, || match &result {
        Ok(count) => format!("all relations hold on [{}, {}] ({count} checks)", args.from, args.to),
        Err(failure) => failure.to_string(),
    })?;
    Ok(Verdict::from_ok(result.is_ok()))
}

fn cmd_fundamental(args: FundamentalArgs, em: &mut Emitter<'_>) -> Result<Verdict, CliError> {
    if args.from > args.to {
        return Err(CliError::Usage(format!("--from {} exceeds --to {}", args.from, args.to)));
    }
    let seed = seed_from(args.seed)?;
    let mut all_hold = true;
    for n in args.from..=args.to {
        let report = match args.m {
            Some(m) => telescope_check(&seed, m, n),
            None => fundamental_check(&seed, n),
        };
        all_hold &= report.holds();
        let record = FundamentalRecord {
            kind: "fundamental",
            n,
            m: args.m,
            lhs: num(&report.lhs),
            rhs: num(&report.rhs),
            holds: report.holds(),
        };
        em.emit(&record, || {
            let mark = if report.holds() { "=" } else { "≠" };
            format!("n = {n}: {} {mark} {}", report.lhs, report.rhs)
        })?;
    }
    Ok(Verdict::from_ok(all_hold))
}
