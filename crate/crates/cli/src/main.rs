use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use powerag::config::{format_vector, parse_vector};
use powerag::power_decoder::{radius_closed_form, radius_exact, suggest_parameters};
use powerag::simulator::{run_trials, write_csv, write_markdown};
use powerag::{CodeConfig, CodeSpec, DecodeOutcome, DecoderParams, Mode, PowerDecoder, TrialPlan};

/// Power decoding of one-point AG codes (Reed–Solomon and Hermitian).
#[derive(Parser)]
#[command(name = "powerag", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print code parameters and the field modulus.
    Info {
        #[arg(long)]
        config: PathBuf,
        /// Also suggest a multiplicity for this power.
        #[arg(long)]
        ell: Option<u32>,
    },
    /// Encode a message given as comma-separated element encodings.
    Encode {
        #[arg(long)]
        config: PathBuf,
        /// File holding the k message symbols.
        #[arg(long)]
        message: PathBuf,
    },
    /// Decoding radius for the given parameters.
    Radius {
        #[command(flatten)]
        code: CodeArgs,
        /// Only the exact dimension count.
        #[arg(long, conflicts_with = "closed")]
        exact: bool,
        /// Only the closed-form estimate.
        #[arg(long)]
        closed: bool,
    },
    /// Decode a received word.
    Decode {
        #[command(flatten)]
        code: CodeArgs,
        /// File holding the n received symbols.
        #[arg(long)]
        received: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Fixed)]
        mode: ModeArg,
        /// Override the degree bound used in fixed mode.
        #[arg(long)]
        lambda: Option<u32>,
    },
    /// Estimate the failure rate by simulation.
    Simulate {
        #[command(flatten)]
        code: CodeArgs,
        /// Error weight; repeat or separate with commas for several rows.
        #[arg(long, required = true, value_delimiter = ',')]
        tau: Vec<usize>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Report file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long, value_enum, default_value_t = ModeArg::Fixed)]
        mode: ModeArg,
    },
}

#[derive(Args)]
struct CodeArgs {
    /// Code description (TOML, or JSON with a .json extension).
    #[arg(long)]
    config: PathBuf,
    /// Highest power of the message function.
    #[arg(long)]
    ell: u32,
    /// Multiplicity of the error locator.
    #[arg(long)]
    s: u32,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Iterative,
    Fixed,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Markdown,
}

fn load(path: &Path) -> Result<CodeSpec> {
    let cfg = CodeConfig::from_path(path)?;
    cfg.build().with_context(|| format!("building code from {}", path.display()))
}

fn describe(code: &CodeSpec) -> String {
    let b = code.backend();
    let f = b.field();
    format!(
        "{} over {} (modulus {}), n={} k={} gamma={} d*={} genus={}",
        b.name(),
        f.name(),
        f.modulus_string(),
        code.n(),
        code.k(),
        code.gamma(),
        code.dstar(),
        code.genus()
    )
}

fn params(args: &CodeArgs, mode: ModeArg, lambda: Option<u32>) -> Result<DecoderParams> {
    let mode = match mode {
        ModeArg::Iterative => Mode::Iterative,
        ModeArg::Fixed => Mode::FixedLambda(lambda),
    };
    Ok(DecoderParams::new(args.ell, args.s)?.with_mode(mode))
}

fn read_vector(code: &CodeSpec, path: &Path, expected: usize) -> Result<Vec<powerag::FieldElement>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let v = parse_vector(code.backend().field(), &text)?;
    if v.len() != expected {
        bail!("{} holds {} symbols, expected {}", path.display(), v.len(), expected);
    }
    Ok(v)
}

fn run(cli: Cli) -> Result<ExitCode> {
    let mut out = io::stdout().lock();
    match cli.command {
        Command::Info { config, ell } => {
            let code = load(&config)?;
            writeln!(out, "{}", describe(&code))?;
            if let Some(ell) = ell {
                let s = suggest_parameters(code.n() as u64, code.gamma() as u64, ell as u64);
                writeln!(out, "suggested s for ell={ell}: {s}")?;
            }
        }
        Command::Encode { config, message } => {
            let code = load(&config)?;
            let msg = read_vector(&code, &message, code.k())?;
            writeln!(out, "{}", format_vector(&code.encode(&msg)?))?;
        }
        Command::Radius { code: args, exact, closed } => {
            let code = load(&args.config)?;
            DecoderParams::new(args.ell, args.s)?;
            writeln!(out, "code: {}", describe(&code))?;
            if !closed {
                match radius_exact(&code, args.ell, args.s) {
                    Some(t) => writeln!(out, "radius_exact: {t}")?,
                    None => writeln!(out, "radius_exact: none")?,
                }
            }
            if !exact {
                let c = radius_closed_form(code.n() as u64, code.gamma() as u64, args.ell as u64, args.s as u64);
                writeln!(out, "radius_closed: {c}")?;
            }
        }
        Command::Decode { code: args, received, mode, lambda } => {
            let code = load(&args.config)?;
            let r = read_vector(&code, &received, code.n())?;
            let dec = PowerDecoder::new(&code, params(&args, mode, lambda)?)?;
            match dec.decode(&r)? {
                DecodeOutcome::Success(d) => {
                    writeln!(out, "{}", format_vector(&d.coords))?;
                    eprintln!("corrected {} errors (lambda {})", d.error_weight, d.lambda);
                }
                DecodeOutcome::Failure(reason) => {
                    writeln!(out, "decoding failure: {reason}")?;
                    return Ok(ExitCode::from(2));
                }
            }
        }
        Command::Simulate { code: args, tau, trials, seed, out: path, format, mode } => {
            let code = load(&args.config)?;
            let params = params(&args, mode, None)?;
            let mut reports = Vec::new();
            for t in tau {
                let rep = run_trials(&code, &TrialPlan { params, tau: t, trials, seed })?;
                eprintln!(
                    "tau={t}: {} ok, {} failed, {} miscorrected ({:.1?})",
                    rep.successes, rep.failures, rep.miscorrections, rep.wall_time
                );
                reports.push(rep);
            }
            let sink: Box<dyn Write> = match &path {
                Some(p) => Box::new(File::create(p).with_context(|| format!("creating {}", p.display()))?),
                None => Box::new(&mut out),
            };
            let sink = BufWriter::new(sink);
            match format {
                Format::Csv => write_csv(&reports, sink)?,
                Format::Markdown => write_markdown(&reports, sink)?,
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
