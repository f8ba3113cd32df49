//! `optd3`: build, verify and bound optimal distance-3 stabilizer codes.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use optd3::bounds::{
    classify_length, lp_certificate, lp_identities, weight_distribution_with_cap,
    CertificateReport, LpFamily, DEFAULT_WEIGHT_CAP,
};
use optd3::format::{parse_code_text, render_code, OutputFormat};
use optd3::verify::{verify_generators, VerifyOptions};
use optd3::{build, table};

#[derive(Parser)]
#[command(name = "optd3", version, about = "Optimal distance-3 binary stabilizer codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    /// One generator per line over I, X, Y, Z.
    Pauli,
    /// One generator per line as x-bits|z-bits.
    Check,
    /// key=value parameter lines followed by generator rows.
    Records,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Pauli => OutputFormat::Pauli,
            Format::Check => OutputFormat::Check,
            Format::Records => OutputFormat::Records,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build the best code of length n and write its generators.
    Gen {
        n: usize,
        #[arg(long, value_enum, default_value = "pauli")]
        format: Format,
        /// Output file; standard output when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a generator file; exits 0 only when the code is valid and uses
    /// the best known number of generators.
    Verify {
        path: PathBuf,
        /// Accept small errors that lie in the stabilizer.
        #[arg(long)]
        degenerate_ok: bool,
        /// Also search for a weight-3 logical operator.
        #[arg(long)]
        exact_distance: bool,
        /// Enumerate every small error instead of comparing syndromes.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Hamming bound, LP bound and classification of length n.
    Bound { n: usize },
    /// The LP certificate for length n, one line per inequality.
    Certificate { n: usize },
    /// One line per length: n, s built, s_H, tag.
    Table { lo: usize, hi: usize },
    /// Weight distribution of a generator file and the LP identities.
    Weights {
        path: PathBuf,
        /// Largest generator count to enumerate.
        #[arg(long, default_value_t = DEFAULT_WEIGHT_CAP)]
        cap: usize,
    },
}

type CliResult = Result<ExitCode, String>;

fn read(path: &PathBuf) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn emit(text: &str) -> CliResult {
    io::stdout()
        .write_all(text.as_bytes())
        .map_err(|e| e.to_string())?;
    Ok(ExitCode::SUCCESS)
}

fn gen(n: usize, format: Format, output: Option<PathBuf>) -> CliResult {
    let code = build(n).map_err(|e| e.to_string())?;
    let text = render_code(&code, format.into());
    match output {
        Some(path) => {
            fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?;
            Ok(ExitCode::SUCCESS)
        }
        None => emit(&text),
    }
}

fn verify(path: PathBuf, degenerate_ok: bool, options: VerifyOptions) -> CliResult {
    let parsed = parse_code_text(&read(&path)?).map_err(|e| format!("{}: {e}", path.display()))?;
    let pure = !degenerate_ok && parsed.pure != Some(false);
    let provenance = parsed
        .provenance
        .unwrap_or_else(|| path.display().to_string());
    let report = verify_generators(parsed.block.gens(), pure, &provenance, options);
    emit(&report.to_text())?;
    if report.is_green() {
        return Ok(ExitCode::SUCCESS);
    }
    if let Some((i, j)) = report.noncommuting.first() {
        eprintln!("error: generators {i} and {j} anticommute");
    } else if let Some(e) = &report.detection.counterexample {
        eprintln!("error: undetected error {e}");
    } else if !report.independent() {
        eprintln!("error: generators are dependent");
    } else {
        eprintln!("error: s = {} is not the best known generator count", report.s);
    }
    Ok(ExitCode::FAILURE)
}

fn certificate_lines(cert: &CertificateReport) -> String {
    let mut out = format!(
        "s_H={} lp_family={} bound={}\n",
        cert.hamming_s, cert.family, cert.strengthened_bound
    );
    if let Some(m) = cert.m {
        out.push_str(&format!("m={m}\n"));
    }
    for c in &cert.checks {
        out.push_str(&format!("  {c}\n"));
    }
    out
}

fn bound(n: usize) -> CliResult {
    let class = classify_length(n).map_err(|e| e.to_string())?;
    let cert = lp_certificate(n);
    let mut out = certificate_lines(&cert);
    out.push_str(&format!(
        "class={} form={} tag={}\n",
        class.family,
        class.form,
        class.tag()
    ));
    out.push_str(&format!(
        "s_best={} optimal_proven={}\n",
        class.s_best, class.optimal_proven
    ));
    emit(&out)?;
    Ok(if cert.all_hold() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn certificate(n: usize) -> CliResult {
    if n < 5 {
        return Err(format!("code length n = {n} is below the minimum 5"));
    }
    let cert = lp_certificate(n);
    let mut out = certificate_lines(&cert);
    let verdict = match (cert.family, cert.all_hold()) {
        (LpFamily::None, _) => "no certificate at this length",
        (_, true) => "certificate holds",
        (_, false) => "certificate FAILED",
    };
    out.push_str(verdict);
    out.push('\n');
    emit(&out)?;
    Ok(if cert.all_hold() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn print_table(lo: usize, hi: usize) -> CliResult {
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    let rows = table(lo, hi).map_err(|e| e.to_string())?;
    let text: String = rows.iter().map(|r| format!("{r}\n")).collect();
    emit(&text)
}

fn weights(path: PathBuf, cap: usize) -> CliResult {
    let parsed = parse_code_text(&read(&path)?).map_err(|e| format!("{}: {e}", path.display()))?;
    let gens = parsed.block.gens();
    let w = weight_distribution_with_cap(gens, cap).map_err(|e| e.to_string())?;
    let report = lp_identities(gens.len(), &w);
    let mut out = format!("{w}\n");
    for c in &report.checks {
        out.push_str(&format!("{c}\n"));
    }
    emit(&out)?;
    Ok(if report.all_hold() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Gen { n, format, output } => gen(n, format, output),
        Command::Verify {
            path,
            degenerate_ok,
            exact_distance,
            exhaustive,
        } => verify(
            path,
            degenerate_ok,
            VerifyOptions {
                exact_distance,
                exhaustive,
            },
        ),
        Command::Bound { n } => bound(n),
        Command::Certificate { n } => certificate(n),
        Command::Table { lo, hi } => print_table(lo, hi),
        Command::Weights { path, cap } => weights(path, cap),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
